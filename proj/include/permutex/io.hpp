#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "permutex/chaotic_keygen.hpp"
#include "permutex/feature_extraction.hpp"
#include "permutex/image.hpp"
#include "permutex/metrics.hpp"
#include "permutex/permutation.hpp"

namespace permutex {

/// Shortest lossless decimal form of a double (17 significant digits).
std::string format_real(double v);

/// Renders a feature map as an 8-bit image: values scale [0,1] -> [0,255]
/// with round-half-up. A contrast_raw map is min-max normalized first so
/// the raw standard deviations become displayable.
GrayImage map_to_gray(const FeatureMap& map);

/// One CSV row per image row, raw reals at 17 significant digits, preceded
/// by "# kind/width/height" comment lines.
void write_feature_map_csv(const FeatureMap& map, const std::string& path);

/// Columns rank,flat_index: pixels from most to least important.
void write_ranking_csv(const ImportanceRanking& ranking, const std::string& path);

/// Columns value,neighbor: one adjacent intensity pair per row.
void write_scatter_csv(const ScatterPairs& pairs, const std::string& path);

/// Binary key file: magic "PXKY", u32 LE length, then the key as u32 LE
/// entries. load_key validates the magic, length, and bijectivity.
void save_key(const PermutationKey& key, const std::string& path);
PermutationKey load_key(const std::string& path);

/// Columns position,key_index.
void write_key_csv(const PermutationKey& key, const std::string& path);

/// Binary permutation file: magic "PXPM", u32 LE N, N u32 LE mapping
/// entries, u32 LE JSON byte length, then the provenance JSON in UTF-8.
void save_permutation(const PixelPermutation& p, const std::string& path);
PixelPermutation load_permutation(const std::string& path);

nlohmann::json provenance_to_json(const Provenance& p);
Provenance provenance_from_json(const nlohmann::json& j);

nlohmann::json report_to_json(const MetricsReport& report);

/// Comparison-table CSV: optional "# ..." preamble lines, the fixed header
/// row, then one row per report with reals at 17 significant digits.
void write_reports_csv(const std::vector<MetricsReport>& reports, const std::string& path,
                       const std::vector<std::string>& preamble = {});

} // namespace permutex
