#include "permutex/io.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <utility>

#include "file_util.hpp"
#include "permutex/errors.hpp"

namespace permutex {

namespace {

void put_u32(std::string& out, std::uint32_t v) {
    out.push_back(static_cast<char>(v & 0xFF));
    out.push_back(static_cast<char>((v >> 8) & 0xFF));
    out.push_back(static_cast<char>((v >> 16) & 0xFF));
    out.push_back(static_cast<char>((v >> 24) & 0xFF));
}

std::uint32_t get_u32(const std::vector<unsigned char>& bytes, std::size_t& pos) {
    if (pos + 4 > bytes.size()) {
        throw FormatError("file truncated while reading a 32-bit field", pos);
    }
    const std::uint32_t v = static_cast<std::uint32_t>(bytes[pos]) |
                            (static_cast<std::uint32_t>(bytes[pos + 1]) << 8) |
                            (static_cast<std::uint32_t>(bytes[pos + 2]) << 16) |
                            (static_cast<std::uint32_t>(bytes[pos + 3]) << 24);
    pos += 4;
    return v;
}

void check_magic(const std::vector<unsigned char>& bytes, const char* magic,
                 const std::string& what) {
    if (bytes.size() < 4 || bytes[0] != static_cast<unsigned char>(magic[0]) ||
        bytes[1] != static_cast<unsigned char>(magic[1]) ||
        bytes[2] != static_cast<unsigned char>(magic[2]) ||
        bytes[3] != static_cast<unsigned char>(magic[3])) {
        throw FormatError("not a " + what + " file (expected magic " + magic + ")", 0);
    }
}

} // namespace

std::string format_real(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

GrayImage map_to_gray(const FeatureMap& map) {
    const FeatureMap* source = &map;
    FeatureMap normalized;
    if (map.kind == FeatureKind::ContrastRaw) {
        normalized = min_max_normalize(map);
        source = &normalized;
    }
    std::vector<std::uint8_t> pixels(source->values.size());
    for (std::size_t i = 0; i < pixels.size(); ++i) {
        const double scaled = std::floor(source->values[i] * 255.0 + 0.5);
        pixels[i] = static_cast<std::uint8_t>(scaled < 0.0 ? 0.0
                                              : scaled > 255.0 ? 255.0
                                                               : scaled);
    }
    return GrayImage(source->width, source->height, std::move(pixels));
}

void write_feature_map_csv(const FeatureMap& map, const std::string& path) {
    std::ostringstream out;
    out << "# kind: " << to_string(map.kind) << "\n";
    out << "# width: " << map.width << "\n";
    out << "# height: " << map.height << "\n";
    for (int y = 0; y < map.height; ++y) {
        for (int x = 0; x < map.width; ++x) {
            if (x > 0) out << ',';
            out << format_real(map.values[static_cast<std::size_t>(y) * map.width + x]);
        }
        out << '\n';
    }
    detail::write_file_bytes(path, out.str());
}

void write_ranking_csv(const ImportanceRanking& ranking, const std::string& path) {
    std::ostringstream out;
    out << "rank,flat_index\n";
    for (std::size_t i = 0; i < ranking.order.size(); ++i) {
        out << i << ',' << ranking.order[i] << '\n';
    }
    detail::write_file_bytes(path, out.str());
}

void write_scatter_csv(const ScatterPairs& pairs, const std::string& path) {
    std::ostringstream out;
    out << "# direction: " << to_string(pairs.direction) << "\n";
    out << "value,neighbor\n";
    for (const auto& [a, b] : pairs.pairs) {
        out << static_cast<int>(a) << ',' << static_cast<int>(b) << '\n';
    }
    detail::write_file_bytes(path, out.str());
}

void save_key(const PermutationKey& key, const std::string& path) {
    std::string out = "PXKY";
    put_u32(out, static_cast<std::uint32_t>(key.key.size()));
    for (std::uint32_t v : key.key) {
        put_u32(out, v);
    }
    detail::write_file_bytes(path, out);
}

PermutationKey load_key(const std::string& path) {
    const std::vector<unsigned char> bytes = detail::read_file_bytes(path);
    check_magic(bytes, "PXKY", "key");
    std::size_t pos = 4;
    const std::uint32_t n = get_u32(bytes, pos);
    PermutationKey key;
    key.key.reserve(n);
    for (std::uint32_t i = 0; i < n; ++i) {
        key.key.push_back(get_u32(bytes, pos));
    }
    if (pos != bytes.size()) {
        throw FormatError("unexpected trailing bytes in key file", pos);
    }
    std::vector<bool> seen(n, false);
    for (std::uint32_t i = 0; i < n; ++i) {
        const std::uint32_t v = key.key[i];
        if (v >= n || seen[v]) {
            throw FormatError("key entries do not form a permutation",
                              8 + static_cast<std::size_t>(i) * 4);
        }
        seen[v] = true;
    }
    return key;
}

void write_key_csv(const PermutationKey& key, const std::string& path) {
    std::ostringstream out;
    out << "position,key_index\n";
    for (std::size_t i = 0; i < key.key.size(); ++i) {
        out << i << ',' << key.key[i] << '\n';
    }
    detail::write_file_bytes(path, out.str());
}

void save_permutation(const PixelPermutation& p, const std::string& path) {
    std::string out = "PXPM";
    put_u32(out, static_cast<std::uint32_t>(p.size()));
    for (std::uint32_t v : p.mapping()) {
        put_u32(out, v);
    }
    nlohmann::json j = provenance_to_json(p.provenance());
    j["version"] = 1;
    const std::string json_text = j.dump();
    put_u32(out, static_cast<std::uint32_t>(json_text.size()));
    out += json_text;
    detail::write_file_bytes(path, out);
}

PixelPermutation load_permutation(const std::string& path) {
    const std::vector<unsigned char> bytes = detail::read_file_bytes(path);
    check_magic(bytes, "PXPM", "permutation");
    std::size_t pos = 4;
    const std::uint32_t n = get_u32(bytes, pos);
    std::vector<std::uint32_t> mapping;
    mapping.reserve(n);
    for (std::uint32_t i = 0; i < n; ++i) {
        mapping.push_back(get_u32(bytes, pos));
    }
    const std::uint32_t json_len = get_u32(bytes, pos);
    if (pos + json_len != bytes.size()) {
        throw FormatError("permutation file length does not match its JSON length field", pos);
    }
    const std::size_t json_start = pos;
    const std::string json_text(bytes.begin() + static_cast<std::ptrdiff_t>(pos), bytes.end());
    nlohmann::json j = nlohmann::json::parse(json_text, nullptr, false);
    if (j.is_discarded()) {
        throw FormatError("permutation provenance is not valid JSON", json_start);
    }
    return PixelPermutation(std::move(mapping), provenance_from_json(j));
}

nlohmann::json provenance_to_json(const Provenance& p) {
    nlohmann::json j;
    j["scheme"] = p.scheme;
    if (p.r) j["r"] = *p.r;
    if (p.x0) j["x0"] = *p.x0;
    if (p.scale) j["scale"] = *p.scale;
    if (p.window) j["window"] = *p.window;
    if (p.seed) j["seed"] = *p.seed;
    if (p.ranking_hash) j["ranking_hash"] = *p.ranking_hash;
    return j;
}

Provenance provenance_from_json(const nlohmann::json& j) {
    Provenance p;
    p.scheme = j.value("scheme", std::string());
    if (j.contains("r")) p.r = j["r"].get<double>();
    if (j.contains("x0")) p.x0 = j["x0"].get<double>();
    if (j.contains("scale")) p.scale = j["scale"].get<std::uint32_t>();
    if (j.contains("window")) p.window = j["window"].get<int>();
    if (j.contains("seed")) p.seed = j["seed"].get<std::uint64_t>();
    if (j.contains("ranking_hash")) p.ranking_hash = j["ranking_hash"].get<std::uint64_t>();
    return p;
}

nlohmann::json report_to_json(const MetricsReport& report) {
    nlohmann::json j;
    j["scheme"] = report.scheme;
    j["horizontal"] = report.horizontal;
    j["vertical"] = report.vertical;
    j["diagonal"] = report.diagonal;
    j["glcm_correlation"] = report.glcm_correlation;
    j["corr2_with_original"] = report.corr2_with_original;
    j["degenerate"] = report.degenerate;
    j["glcm"] = {{"levels", report.glcm.levels}, {"dy", report.glcm.dy}, {"dx", report.glcm.dx}};
    j["provenance"] = provenance_to_json(report.provenance);
    return j;
}

void write_reports_csv(const std::vector<MetricsReport>& reports, const std::string& path,
                       const std::vector<std::string>& preamble) {
    std::ostringstream out;
    for (const std::string& line : preamble) {
        out << line << '\n';
    }
    out << "Image,Horizontal Coeff,Vertical Coeff,Diagonal Coeff,GLCM Correlation,"
        << "\"Correlation (Orig, Permuted) - Corr2\"\n";
    for (const MetricsReport& r : reports) {
        out << r.scheme << ',' << format_real(r.horizontal) << ',' << format_real(r.vertical)
            << ',' << format_real(r.diagonal) << ',' << format_real(r.glcm_correlation) << ','
            << format_real(r.corr2_with_original) << '\n';
    }
    detail::write_file_bytes(path, out.str());
}

} // namespace permutex
