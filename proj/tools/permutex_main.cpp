#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "permutex/baselines.hpp"
#include "permutex/errors.hpp"
#include "permutex/io.hpp"
#include "permutex/metrics.hpp"
#include "permutex/permutation.hpp"
#include "permutex/pgm_io.hpp"

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct Options {
    std::string input;
    std::string permutation_file;
    std::string original;
    std::string permuted;
    std::string out_dir = ".";
    std::string scheme = "permutex";
    std::string format = "csv";
    double r = 3.99;
    double x0 = 0.41;
    std::uint32_t scale = 1000;
    int window = 3;
    std::uint64_t seed = 1;
    std::uint32_t key_length = 0;
    int glcm_levels = 8;
    int glcm_dy = 0;
    int glcm_dx = 1;
    std::optional<std::uint64_t> scatter;
};

std::string stem_of(const std::string& path) {
    return fs::path(path).stem().string();
}

fs::path out_file(const Options& opt, const std::string& name) {
    return fs::path(opt.out_dir) / name;
}

void ensure_out_dir(const Options& opt) {
    std::error_code ec;
    fs::create_directories(opt.out_dir, ec);
    if (ec) {
        throw permutex::IoError("cannot create output directory " + opt.out_dir + ": " +
                                ec.message());
    }
}

void write_json_file(const json& j, const fs::path& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw permutex::IoError("cannot open " + path.string() + " for writing");
    }
    out << j.dump(2) << "\n";
    if (!out) {
        throw permutex::IoError("failed to write " + path.string());
    }
}

permutex::ChaosParams chaos_of(const Options& opt) {
    permutex::ChaosParams chaos;
    chaos.r = opt.r;
    chaos.x0 = opt.x0;
    chaos.scale = opt.scale;
    return chaos;
}

permutex::GlcmParams glcm_of(const Options& opt) {
    return permutex::GlcmParams{opt.glcm_levels, opt.glcm_dy, opt.glcm_dx};
}

json chaos_echo(const Options& opt) {
    return json{{"r", opt.r}, {"x0", opt.x0}, {"scale", opt.scale}};
}

json glcm_echo(const Options& opt) {
    return json{{"levels", opt.glcm_levels}, {"dy", opt.glcm_dy}, {"dx", opt.glcm_dx}};
}

void note_output(const fs::path& path) {
    std::cout << "wrote " << path.string() << "\n";
}

void cmd_permute(const Options& opt) {
    const permutex::GrayImage img = permutex::load_pgm(opt.input);
    const permutex::Scheme scheme = permutex::parse_scheme(opt.scheme);
    const permutex::ScrambleResult result =
        permutex::run_scheme(scheme, img, chaos_of(opt), opt.window, opt.seed);

    json config{{"command", "permute"},
                {"input", opt.input},
                {"out_dir", opt.out_dir},
                {"scheme", opt.scheme},
                {"window", opt.window},
                {"seed", opt.seed},
                {"chaos", chaos_echo(opt)}};

    ensure_out_dir(opt);
    const std::string stem = stem_of(opt.input);
    const fs::path pgm = out_file(opt, stem + ".permuted.pgm");
    const fs::path pxpm = out_file(opt, stem + ".pxpm");
    const fs::path meta = out_file(opt, stem + ".permute.json");

    permutex::save_pgm(result.image, pgm.string());
    permutex::save_permutation(result.permutation, pxpm.string());

    json j{{"config", config},
           {"provenance", permutex::provenance_to_json(result.permutation.provenance())},
           {"outputs", json::array({pgm.string(), pxpm.string()})}};
    write_json_file(j, meta);
    note_output(pgm);
    note_output(pxpm);
    note_output(meta);
}

void cmd_unpermute(const Options& opt) {
    const permutex::GrayImage img = permutex::load_pgm(opt.input);
    const permutex::PixelPermutation perm = permutex::load_permutation(opt.permutation_file);
    const permutex::GrayImage recovered = permutex::unpermutex(img, perm);

    json config{{"command", "unpermute"},
                {"input", opt.input},
                {"permutation", opt.permutation_file},
                {"out_dir", opt.out_dir}};

    ensure_out_dir(opt);
    const std::string stem = stem_of(opt.input);
    const fs::path pgm = out_file(opt, stem + ".recovered.pgm");
    const fs::path meta = out_file(opt, stem + ".unpermute.json");

    permutex::save_pgm(recovered, pgm.string());
    json j{{"config", config},
           {"provenance", permutex::provenance_to_json(perm.provenance())},
           {"outputs", json::array({pgm.string()})}};
    write_json_file(j, meta);
    note_output(pgm);
    note_output(meta);
}

void write_scatter_files(const Options& opt, const permutex::GrayImage& img,
                         const std::string& stem) {
    if (!opt.scatter) {
        return;
    }
    const permutex::Direction dirs[] = {permutex::Direction::Horizontal,
                                        permutex::Direction::Vertical,
                                        permutex::Direction::Diagonal};
    for (permutex::Direction dir : dirs) {
        const permutex::ScatterPairs pairs =
            permutex::correlation_scatter(img, dir, *opt.scatter, opt.seed);
        const fs::path path =
            out_file(opt, stem + ".scatter." + permutex::to_string(dir) + ".csv");
        permutex::write_scatter_csv(pairs, path.string());
        note_output(path);
    }
}

void cmd_analyze(const Options& opt) {
    const permutex::GrayImage original = permutex::load_pgm(opt.original);
    const permutex::GrayImage permuted = permutex::load_pgm(opt.permuted);

    const std::string label = fs::path(opt.permuted).filename().string();
    permutex::MetricsReport report =
        permutex::analysis_report(original, permuted, label, glcm_of(opt));

    json config{{"command", "analyze"},
                {"original", opt.original},
                {"permuted", opt.permuted},
                {"out_dir", opt.out_dir},
                {"format", opt.format},
                {"seed", opt.seed},
                {"glcm", glcm_echo(opt)}};
    if (opt.scatter) {
        config["scatter"] = *opt.scatter;
    }

    ensure_out_dir(opt);
    const std::string stem = stem_of(opt.permuted);
    if (opt.format == "json") {
        const fs::path path = out_file(opt, stem + ".metrics.json");
        write_json_file(json{{"config", config}, {"report", permutex::report_to_json(report)}},
                        path);
        note_output(path);
    } else {
        const fs::path path = out_file(opt, stem + ".metrics.csv");
        permutex::write_reports_csv({report}, path.string(), {"# config: " + config.dump()});
        note_output(path);
    }
    write_scatter_files(opt, permuted, stem);
}

void cmd_compare(const Options& opt) {
    const permutex::GrayImage img = permutex::load_pgm(opt.input);
    const permutex::GlcmParams glcm = glcm_of(opt);

    json config{{"command", "compare"},
                {"input", opt.input},
                {"out_dir", opt.out_dir},
                {"format", opt.format},
                {"window", opt.window},
                {"seed", opt.seed},
                {"chaos", chaos_echo(opt)},
                {"glcm", glcm_echo(opt)}};

    std::vector<permutex::MetricsReport> reports;
    permutex::MetricsReport original_report = permutex::analysis_report(img, img, "original", glcm);
    original_report.provenance.scheme = "original";
    reports.push_back(std::move(original_report));

    ensure_out_dir(opt);
    const std::string stem = stem_of(opt.input);
    const permutex::Scheme schemes[] = {permutex::Scheme::RandomRc, permutex::Scheme::ChaoticRc,
                                        permutex::Scheme::KeyOnly, permutex::Scheme::Permutex};
    for (permutex::Scheme scheme : schemes) {
        const permutex::ScrambleResult result =
            permutex::run_scheme(scheme, img, chaos_of(opt), opt.window, opt.seed);
        permutex::MetricsReport report =
            permutex::analysis_report(img, result.image, permutex::to_string(scheme), glcm);
        report.provenance = result.permutation.provenance();
        reports.push_back(std::move(report));

        const fs::path pgm = out_file(opt, stem + "." + permutex::to_string(scheme) + ".pgm");
        const fs::path pxpm = out_file(opt, stem + "." + permutex::to_string(scheme) + ".pxpm");
        permutex::save_pgm(result.image, pgm.string());
        permutex::save_permutation(result.permutation, pxpm.string());
        note_output(pgm);
        note_output(pxpm);
    }

    const double permutex_glcm = std::abs(reports.back().glcm_correlation);
    bool smallest = true;
    for (std::size_t i = 1; i + 1 < reports.size(); ++i) {
        if (permutex_glcm >= std::abs(reports[i].glcm_correlation)) {
            smallest = false;
        }
    }

    if (opt.format == "json") {
        json rows = json::array();
        for (const permutex::MetricsReport& r : reports) {
            rows.push_back(permutex::report_to_json(r));
        }
        const fs::path path = out_file(opt, stem + ".compare.json");
        write_json_file(json{{"config", config},
                             {"permutex_glcm_smallest", smallest},
                             {"reports", rows}},
                        path);
        note_output(path);
    } else {
        const fs::path path = out_file(opt, stem + ".compare.csv");
        permutex::write_reports_csv(
            reports, path.string(),
            {"# config: " + config.dump(),
             std::string("# permutex_glcm_smallest: ") + (smallest ? "true" : "false")});
        note_output(path);
    }
    if (!smallest) {
        std::cout << "note: permutex |GLCM| is not strictly the smallest for this seed\n";
    }
}

void cmd_features(const Options& opt) {
    const permutex::GrayImage img = permutex::load_pgm(opt.input);
    const permutex::FeatureMap freq =
        permutex::magnitude_log_norm(permutex::fft_shift(permutex::dft2(img)));
    const permutex::FeatureMap contrast = permutex::local_contrast(img, opt.window);
    const permutex::FeatureMap importance = permutex::importance_map(freq, contrast);
    const permutex::ImportanceRanking ranking = permutex::rank_pixels(importance);

    json config{{"command", "features"},
                {"input", opt.input},
                {"out_dir", opt.out_dir},
                {"window", opt.window}};

    ensure_out_dir(opt);
    const std::string stem = stem_of(opt.input);
    json outputs = json::array();

    const struct {
        const permutex::FeatureMap& map;
        const char* name;
    } dumps[] = {{freq, "fnorm"}, {contrast, "contrast"}, {importance, "importance"}};
    for (const auto& dump : dumps) {
        const fs::path pgm = out_file(opt, stem + "." + dump.name + ".pgm");
        const fs::path csv = out_file(opt, stem + "." + dump.name + ".csv");
        permutex::save_pgm(permutex::map_to_gray(dump.map), pgm.string());
        permutex::write_feature_map_csv(dump.map, csv.string());
        outputs.push_back(pgm.string());
        outputs.push_back(csv.string());
        note_output(pgm);
        note_output(csv);
    }

    const fs::path ranking_csv = out_file(opt, stem + ".ranking.csv");
    permutex::write_ranking_csv(ranking, ranking_csv.string());
    outputs.push_back(ranking_csv.string());
    note_output(ranking_csv);

    const fs::path meta = out_file(opt, stem + ".features.json");
    write_json_file(json{{"config", config}, {"outputs", outputs}}, meta);
    note_output(meta);
}

void cmd_keygen(const Options& opt) {
    permutex::ChaosParams chaos = chaos_of(opt);
    chaos.n = opt.key_length;
    chaos.validate();

    const permutex::ChaoticSequence seq = permutex::generate_sequence(chaos);
    const permutex::PermutationKey key = permutex::derive_permutation_key(seq, chaos.scale);
    const std::size_t collisions = permutex::quantization_collisions(seq, chaos.scale);

    json config{{"command", "keygen"},
                {"n", opt.key_length},
                {"out_dir", opt.out_dir},
                {"chaos", chaos_echo(opt)}};

    ensure_out_dir(opt);
    const fs::path pxky = out_file(opt, "key.pxky");
    const fs::path csv = out_file(opt, "key.csv");
    const fs::path meta = out_file(opt, "key.keygen.json");

    permutex::save_key(key, pxky.string());
    permutex::write_key_csv(key, csv.string());
    write_json_file(json{{"config", config},
                         {"quantization_collisions", collisions},
                         {"distinct_quantized_values", key.key.size() - collisions},
                         {"outputs", json::array({pxky.string(), csv.string()})}},
                    meta);
    note_output(pxky);
    note_output(csv);
    note_output(meta);
}

void add_out_dir(CLI::App* cmd, Options& opt) {
    cmd->add_option("--out-dir", opt.out_dir, "directory for output files")
        ->capture_default_str();
}

void add_chaos(CLI::App* cmd, Options& opt) {
    cmd->add_option("--r", opt.r, "chaotic control parameter, in (0,4]")->capture_default_str();
    cmd->add_option("--x0", opt.x0, "chaotic initial state, in (0,1)")->capture_default_str();
    cmd->add_option("--scale", opt.scale, "key quantization scale, >= 1")->capture_default_str();
}

void add_glcm(CLI::App* cmd, Options& opt) {
    cmd->add_option("--glcm-levels", opt.glcm_levels, "GLCM quantization levels")
        ->capture_default_str();
    cmd->add_option("--glcm-dy", opt.glcm_dy, "GLCM offset rows")->capture_default_str();
    cmd->add_option("--glcm-dx", opt.glcm_dx, "GLCM offset columns")->capture_default_str();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"PermutEx: feature-driven grayscale image permutation toolkit"};
    app.require_subcommand(1);
    Options opt;

    CLI::App* permute = app.add_subcommand("permute", "scramble an image");
    permute->add_option("input", opt.input, "input PGM image")->required();
    add_out_dir(permute, opt);
    add_chaos(permute, opt);
    permute->add_option("--window", opt.window, "local contrast window (odd)")
        ->capture_default_str();
    permute->add_option("--scheme", opt.scheme, "random_rc|chaotic_rc|key_only|permutex")
        ->capture_default_str();
    permute->add_option("--seed", opt.seed, "seed for random_rc")->capture_default_str();

    CLI::App* unpermute = app.add_subcommand("unpermute", "undo a recorded permutation");
    unpermute->add_option("input", opt.input, "scrambled PGM image")->required();
    unpermute->add_option("permutation", opt.permutation_file, "permutation (.pxpm) file")
        ->required();
    add_out_dir(unpermute, opt);

    CLI::App* analyze = app.add_subcommand("analyze", "correlation metrics for an image pair");
    analyze->add_option("original", opt.original, "original PGM image")->required();
    analyze->add_option("permuted", opt.permuted, "permuted PGM image")->required();
    add_out_dir(analyze, opt);
    add_glcm(analyze, opt);
    analyze->add_option("--format", opt.format, "report format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    analyze->add_option("--scatter", opt.scatter,
                        "also write adjacent-pair scatter CSVs, sampling this many pairs "
                        "per direction (0 = all pairs)");
    analyze->add_option("--seed", opt.seed, "seed for scatter sampling")->capture_default_str();

    CLI::App* compare = app.add_subcommand("compare", "run every scheme and tabulate metrics");
    compare->add_option("input", opt.input, "input PGM image")->required();
    add_out_dir(compare, opt);
    add_chaos(compare, opt);
    add_glcm(compare, opt);
    compare->add_option("--window", opt.window, "local contrast window (odd)")
        ->capture_default_str();
    compare->add_option("--seed", opt.seed, "seed for random_rc")->capture_default_str();
    compare->add_option("--format", opt.format, "report format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();

    CLI::App* features = app.add_subcommand("features", "dump feature maps and the ranking");
    features->add_option("input", opt.input, "input PGM image")->required();
    add_out_dir(features, opt);
    features->add_option("--window", opt.window, "local contrast window (odd)")
        ->capture_default_str();

    CLI::App* keygen = app.add_subcommand("keygen", "derive a standalone permutation key");
    keygen->add_option("--n", opt.key_length, "key length (pixel count)")->required();
    add_out_dir(keygen, opt);
    add_chaos(keygen, opt);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (permute->parsed()) cmd_permute(opt);
        if (unpermute->parsed()) cmd_unpermute(opt);
        if (analyze->parsed()) cmd_analyze(opt);
        if (compare->parsed()) cmd_compare(opt);
        if (features->parsed()) cmd_features(opt);
        if (keygen->parsed()) cmd_keygen(opt);
    } catch (const permutex::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const permutex::IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 4;
    }
    return 0;
}
