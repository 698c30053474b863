#include "crowdtraits/features.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <unordered_map>

#include "crowdtraits/errors.hpp"
#include "crowdtraits/kinematics.hpp"

namespace crowdtraits {

namespace {

// Uniform grid over person positions with cell size d_hall, so a social-space
// query only scans the 3x3 cell neighborhood.
class NeighborGrid {
public:
    NeighborGrid(const FrameState& frame, double cell)
        : frame_(frame), cell_(cell) {
        for (std::size_t i = 0; i < frame.persons.size(); ++i) {
            cells_[key(frame.persons[i].position)].push_back(i);
        }
    }

    // Indices with distance(i, j) <= radius, j != i, ascending.
    std::vector<std::size_t> query(std::size_t i, double radius) const {
        const Point2& p = frame_.persons[i].position;
        const long cx = coord(p.x), cy = coord(p.y);
        std::vector<std::size_t> result;
        for (long dx = -1; dx <= 1; ++dx) {
            for (long dy = -1; dy <= 1; ++dy) {
                const auto it = cells_.find(pack(cx + dx, cy + dy));
                if (it == cells_.end()) continue;
                for (std::size_t j : it->second) {
                    if (j == i) continue;
                    if (distance(p, frame_.persons[j].position) <= radius) {
                        result.push_back(j);
                    }
                }
            }
        }
        std::sort(result.begin(), result.end());
        return result;
    }

private:
    long coord(double v) const { return static_cast<long>(std::floor(v / cell_)); }
    std::uint64_t key(const Point2& p) const { return pack(coord(p.x), coord(p.y)); }
    static std::uint64_t pack(long x, long y) {
        return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(x)) << 32) |
               static_cast<std::uint32_t>(y);
    }

    const FrameState& frame_;
    double cell_;
    std::unordered_map<std::uint64_t, std::vector<std::size_t>> cells_;
};

double population_std(const std::vector<double>& values) {
    if (values.empty()) return 0.0;
    double mean = 0.0;
    for (double v : values) mean += v;
    mean /= static_cast<double>(values.size());
    double ss = 0.0;
    for (double v : values) ss += (v - mean) * (v - mean);
    return std::sqrt(ss / static_cast<double>(values.size()));
}

}  // namespace

std::vector<std::size_t> social_neighbors(const FrameState& frame, std::size_t i,
                                          double d_hall) {
    std::vector<std::size_t> result;
    for (std::size_t j = 0; j < frame.persons.size(); ++j) {
        if (j == i) continue;
        if (distance(frame.persons[i].position, frame.persons[j].position) <= d_hall) {
            result.push_back(j);
        }
    }
    return result;
}

double isolation(const FrameState& frame, std::size_t i,
                 const std::vector<std::size_t>& neighbors, double d_hall) {
    if (neighbors.empty()) return 1.0;
    double sum = 0.0;
    for (std::size_t j : neighbors) {
        sum += distance(frame.persons[i].position, frame.persons[j].position);
    }
    return sum / static_cast<double>(neighbors.size()) / d_hall;
}

double socialization(std::size_t n_social, std::size_t rho) {
    if (rho == 0) throw EmptyFrameError("socialization undefined for an empty frame");
    if (n_social == 0) return 0.0;
    return static_cast<double>(n_social) / static_cast<double>(rho);
}

double speed_difference(double speed_i, double speed_j) {
    return std::abs(speed_i - speed_j);
}

double orientation_difference_rad(double alpha_i_deg, double alpha_j_deg) {
    double diff = std::abs(alpha_i_deg - alpha_j_deg) * std::numbers::pi / 180.0;
    // Wrap to [0, pi]; a no-op for headings stored in [0, 180].
    diff = std::fmod(diff, 2.0 * std::numbers::pi);
    if (diff > std::numbers::pi) diff = 2.0 * std::numbers::pi - diff;
    return diff;
}

double collectivity(const FrameState& frame, std::size_t i,
                    const std::vector<std::size_t>& neighbors,
                    const ProxemicsConfig& config) {
    const PersonState& a = frame.persons[i];
    double sum = 0.0;
    for (std::size_t j : neighbors) {
        const PersonState& b = frame.persons[j];
        const double w = speed_difference(a.speed, b.speed) * config.w1 +
                         orientation_difference_rad(a.alpha_deg, b.alpha_deg) * config.w2;
        sum += config.gamma * std::exp(-config.beta * w * w);
    }
    return sum;
}

std::vector<FrameFeatures> frame_features(const FrameState& frame,
                                          const ProxemicsConfig& config) {
    const std::size_t rho = frame.persons.size();
    std::vector<FrameFeatures> out;
    out.reserve(rho);
    NeighborGrid grid(frame, config.d_hall);
    for (std::size_t i = 0; i < rho; ++i) {
        const auto neighbors = grid.query(i, config.d_hall);
        FrameFeatures f;
        f.person_id = frame.persons[i].person_id;
        f.frame = frame.frame;
        f.speed = frame.persons[i].speed;
        f.alpha_deg = frame.persons[i].alpha_deg;
        f.isolation = isolation(frame, i, neighbors, config.d_hall);
        f.socialization = socialization(neighbors.size(), rho);
        f.collectivity = collectivity(frame, i, neighbors, config);
        f.collectivity_mean =
            neighbors.empty() ? 0.0 : f.collectivity / static_cast<double>(neighbors.size());
        out.push_back(f);
    }
    return out;
}

FeatureTable feature_vector(const std::vector<FrameState>& frames,
                            const std::vector<PersonKinematics>& kinematics,
                            const ProxemicsConfig& config) {
    FeatureTable table;
    for (const FrameState& frame : frames) {
        auto rows = frame_features(frame, config);
        table.rows.insert(table.rows.end(), rows.begin(), rows.end());
    }

    // Per-person averages over the frames the person appears in.
    for (const auto& person : kinematics) {
        AveragedFeatures avg;
        avg.person_id = person.person_id;
        std::vector<double> heading_changes;
        for (std::size_t i = 1; i < person.samples.size(); ++i) {
            heading_changes.push_back(person.samples[i].heading_change_deg);
        }
        avg.std_alpha_change_deg = population_std(heading_changes);

        for (const FrameFeatures& row : table.rows) {
            if (row.person_id != person.person_id) continue;
            avg.speed += row.speed;
            avg.alpha_deg += row.alpha_deg;
            avg.isolation += row.isolation;
            avg.socialization += row.socialization;
            avg.collectivity += row.collectivity;
            avg.collectivity_mean += row.collectivity_mean;
            ++avg.frame_count;
        }
        if (avg.frame_count > 0) {
            const double n = avg.frame_count;
            avg.speed /= n;
            avg.alpha_deg /= n;
            avg.isolation /= n;
            avg.socialization /= n;
            avg.collectivity /= n;
            avg.collectivity_mean /= n;
        }
        table.averages.push_back(avg);
    }
    std::sort(table.averages.begin(), table.averages.end(),
              [](const AveragedFeatures& a, const AveragedFeatures& b) {
                  return a.person_id < b.person_id;
              });
    return table;
}

}  // namespace crowdtraits
