#include "crowdtraits/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>

#include "crowdtraits/errors.hpp"
#include "crowdtraits/kinematics.hpp"

namespace crowdtraits {

VideoSummary country_mean(std::span<const VideoSummary> summaries, const std::string& label) {
    if (summaries.empty()) throw Error("country_mean over an empty set of videos");
    VideoSummary mean;
    mean.label = label;
    for (const auto& s : summaries) {
        mean.person_count += s.person_count;
        mean.frame_count += s.frame_count;
        mean.ocean.openness += s.ocean.openness;
        mean.ocean.conscientiousness += s.ocean.conscientiousness;
        mean.ocean.extraversion += s.ocean.extraversion;
        mean.ocean.agreeableness += s.ocean.agreeableness;
        mean.ocean.neuroticism += s.ocean.neuroticism;
        mean.emotion.fear += s.emotion.fear;
        mean.emotion.happiness += s.emotion.happiness;
        mean.emotion.sadness += s.emotion.sadness;
        mean.emotion.anger += s.emotion.anger;
    }
    const double n = static_cast<double>(summaries.size());
    mean.ocean = {mean.ocean.openness / n, mean.ocean.conscientiousness / n,
                  mean.ocean.extraversion / n, mean.ocean.agreeableness / n,
                  mean.ocean.neuroticism / n};
    mean.emotion = {mean.emotion.fear / n, mean.emotion.happiness / n, mean.emotion.sadness / n,
                    mean.emotion.anger / n};
    return mean;
}

double pearson(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size()) {
        throw UndefinedCorrelationError("series lengths differ: " + std::to_string(x.size()) +
                                        " vs " + std::to_string(y.size()));
    }
    if (x.size() < 2) {
        throw UndefinedCorrelationError("need at least 2 points, got " + std::to_string(x.size()));
    }
    const double n = static_cast<double>(x.size());
    double mean_x = 0.0, mean_y = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        mean_x += x[i];
        mean_y += y[i];
    }
    mean_x /= n;
    mean_y /= n;

    double sxy = 0.0, sxx = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double dx = x[i] - mean_x;
        const double dy = y[i] - mean_y;
        sxy += dx * dy;
        sxx += dx * dx;
        syy += dy * dy;
    }
    if (sxx == 0.0 || syy == 0.0) {
        throw UndefinedCorrelationError("zero variance in at least one series");
    }
    return sxy / std::sqrt(sxx * syy);
}

SceneDataset roi_filter(const SceneDataset& dataset, const Roi& roi) {
    SceneDataset out;
    out.frame_rate = dataset.frame_rate;
    out.units = dataset.units;
    out.label = dataset.label;
    for (const auto& traj : dataset.trajectories) {
        Trajectory kept;
        kept.person_id = traj.person_id;
        for (const auto& s : traj.samples) {
            if (roi.contains(s.position)) kept.samples.push_back(s);
        }
        if (!kept.samples.empty()) out.trajectories.push_back(std::move(kept));
    }
    return out;
}

PreferredDistance preferred_distance(const SceneDataset& dataset, double cone_half_angle_deg) {
    const double cos_limit = std::cos(cone_half_angle_deg * std::numbers::pi / 180.0);

    // Kinematics per person; single-sample tracks cannot define a heading and
    // are skipped rather than rejected.
    std::vector<PersonKinematics> kinematics;
    for (const auto& traj : dataset.trajectories) {
        if (traj.samples.size() >= 2) {
            kinematics.push_back(derive_kinematics(traj, dataset.frame_rate));
        }
    }
    const auto frames = build_frame_states(kinematics);

    struct Accum {
        double sum = 0.0;
        int count = 0;
    };
    std::map<int, Accum> per_person;

    for (const auto& frame : frames) {
        for (std::size_t i = 0; i < frame.persons.size(); ++i) {
            const PersonState& me = frame.persons[i];
            if (me.speed < kStillSpeed) continue;  // heading undefined
            double best = std::numeric_limits<double>::infinity();
            for (std::size_t j = 0; j < frame.persons.size(); ++j) {
                if (j == i) continue;
                const PersonState& other = frame.persons[j];
                const double ux = other.position.x - me.position.x;
                const double uy = other.position.y - me.position.y;
                const double d = std::sqrt(ux * ux + uy * uy);
                if (d <= 0.0) continue;
                const double cosine =
                    (ux * me.velocity.x + uy * me.velocity.y) / (d * me.speed);
                if (cosine >= cos_limit && d < best) best = d;
            }
            if (std::isfinite(best)) {
                auto& acc = per_person[me.person_id];
                acc.sum += best;
                ++acc.count;
            }
        }
    }

    PreferredDistance result;
    double video_sum = 0.0;
    int measured = 0;
    for (const auto& [id, acc] : per_person) {
        const double mean = acc.sum / acc.count;
        result.per_person.push_back({id, mean});
        video_sum += mean;
        ++measured;
    }
    if (measured > 0) result.video_mean = video_sum / measured;
    return result;
}

std::vector<DensityRow> density_series(std::span<const VideoSummary> summaries) {
    std::vector<DensityRow> rows;
    rows.reserve(summaries.size());
    for (const auto& s : summaries) {
        rows.push_back({s.person_count, s.ocean, s.emotion});
    }
    std::sort(rows.begin(), rows.end(),
              [](const DensityRow& a, const DensityRow& b) { return a.n < b.n; });
    return rows;
}

std::vector<LongRow> long_rows(const VideoSummary& summary) {
    std::vector<LongRow> rows;
    const char* dims[] = {"O", "C", "E", "A", "N"};
    const auto ocean = summary.ocean.as_array();
    for (int d = 0; d < 5; ++d) {
        rows.push_back({std::string("ocean.") + dims[d], summary.label,
                        static_cast<double>(d), ocean[d]});
    }
    const char* emotions[] = {"fear", "happiness", "sadness", "anger"};
    const auto emo = summary.emotion.as_array();
    for (int e = 0; e < 4; ++e) {
        rows.push_back({std::string("emotion.") + emotions[e], summary.label,
                        static_cast<double>(e), emo[e]});
    }
    return rows;
}

std::vector<LongRow> long_rows(std::span<const DensityRow> density, const std::string& label) {
    std::vector<LongRow> rows;
    const char* dims[] = {"O", "C", "E", "A", "N"};
    const char* emotions[] = {"fear", "happiness", "sadness", "anger"};
    for (const auto& r : density) {
        const auto ocean = r.ocean.as_array();
        for (int d = 0; d < 5; ++d) {
            rows.push_back({std::string("density.ocean.") + dims[d], label,
                            static_cast<double>(r.n), ocean[d]});
        }
        const auto emo = r.emotion.as_array();
        for (int e = 0; e < 4; ++e) {
            rows.push_back({std::string("density.emotion.") + emotions[e], label,
                            static_cast<double>(r.n), emo[e]});
        }
    }
    return rows;
}

}  // namespace crowdtraits
