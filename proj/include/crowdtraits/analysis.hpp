#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "crowdtraits/emotion.hpp"
#include "crowdtraits/ocean.hpp"
#include "crowdtraits/types.hpp"

namespace crowdtraits {

/// Per-video rollup consumed by the country-level and correlation analyses.
struct VideoSummary {
    std::string label;
    int person_count = 0;
    int frame_count = 0;
    PersonalityVector ocean;   // mean over persons (video-level vectors)
    EmotionVector emotion;     // mean over persons (normalized video-level vectors)
};

/// Axis-aligned measurement rectangle in world meters, boundary inclusive.
struct Roi {
    double x = 0.0;  // origin
    double y = 0.0;
    double width = 0.0;
    double height = 0.0;

    bool contains(const Point2& p) const {
        return p.x >= x && p.x <= x + width && p.y >= y && p.y <= y + height;
    }
};

/// Unweighted mean of the summaries' dimensions and emotions.
/// Throws Error when the list is empty.
VideoSummary country_mean(std::span<const VideoSummary> summaries, const std::string& label);

/// Sample Pearson correlation coefficient. Requires equal lengths >= 2 and
/// nonzero variance in both series (else UndefinedCorrelationError).
double pearson(std::span<const double> x, std::span<const double> y);

/// Keeps only the samples whose position lies inside the rectangle;
/// trajectories left without samples are dropped.
SceneDataset roi_filter(const SceneDataset& dataset, const Roi& roi);

struct PreferredDistance {
    std::vector<std::pair<int, double>> per_person;  // (person_id, mean meters)
    std::optional<double> video_mean;                // absent if nobody measured
};

/// Mean distance to the nearest neighbor inside a +-cone around the walking
/// direction, per person-frame, averaged over frames then persons. Persons
/// that never have a frontal neighbor are excluded from the video mean.
PreferredDistance preferred_distance(const SceneDataset& dataset,
                                     double cone_half_angle_deg = 30.0);

struct DensityRow {
    int n = 0;  // population size
    PersonalityVector ocean;
    EmotionVector emotion;
};

/// One row per summary, ordered by ascending population size.
std::vector<DensityRow> density_series(std::span<const VideoSummary> summaries);

/// Plot-ready long-format row: `series,label,x,y`.
struct LongRow {
    std::string series;
    std::string label;
    double x = 0.0;
    double y = 0.0;
};

std::vector<LongRow> long_rows(const VideoSummary& summary);
std::vector<LongRow> long_rows(std::span<const DensityRow> rows, const std::string& label);

}  // namespace crowdtraits
