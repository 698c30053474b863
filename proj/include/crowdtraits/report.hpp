#pragma once

#include <string>

#include "crowdtraits/analysis.hpp"
#include "crowdtraits/pipeline.hpp"

namespace crowdtraits {

inline constexpr int kSchemaVersion = 1;

/// Report serializers. All output is deterministic byte-for-byte for a given
/// analysis (fixed key order, round-trip float formatting).
std::string features_csv(const VideoAnalysis& analysis);
std::string groups_json(const VideoAnalysis& analysis, const AnalysisConfig& config);
std::string ocean_json(const VideoAnalysis& analysis, const AnalysisConfig& config);
std::string emotions_json(const VideoAnalysis& analysis, const AnalysisConfig& config);
std::string summary_json(const VideoAnalysis& analysis, const AnalysisConfig& config);

std::string long_csv(std::span<const LongRow> rows);
std::string density_csv(std::span<const DensityRow> rows);
std::string preferred_distance_json(const PreferredDistance& preferred, const std::string& label);

/// Round-trips a summary.json produced by summary_json().
/// Throws SchemaError on missing or mistyped fields.
VideoSummary read_summary_json(const std::string& json_text);

struct CorrelationReport {
    // Pearson over the five OCEAN means and the four emotion means of two
    // summaries; absent when the correlation is undefined (zero variance).
    std::optional<double> ocean_r;
    std::optional<double> emotion_r;
    std::string label_a;
    std::string label_b;
};

CorrelationReport correlate_summaries(const VideoSummary& a, const VideoSummary& b);
std::string correlation_json(const CorrelationReport& report);

/// Writes text to path, throwing IoError with path context.
void write_file(const std::string& path, const std::string& text);
std::string read_file(const std::string& path);

}  // namespace crowdtraits
