#include "crowdtraits/groups.hpp"

#include <algorithm>
#include <map>
#include <numbers>
#include <numeric>
#include <set>

#include "crowdtraits/features.hpp"

namespace crowdtraits {

namespace {

class UnionFind {
public:
    explicit UnionFind(std::size_t n) : parent_(n) {
        std::iota(parent_.begin(), parent_.end(), std::size_t{0});
    }
    std::size_t find(std::size_t x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }
    void unite(std::size_t a, std::size_t b) { parent_[find(a)] = find(b); }

private:
    std::vector<std::size_t> parent_;
};

std::vector<std::vector<int>> components_to_groups(
    const std::vector<std::vector<int>>& components) {
    std::vector<std::vector<int>> groups;
    for (const auto& c : components) {
        if (c.size() >= 2) groups.push_back(c);
    }
    std::sort(groups.begin(), groups.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return groups;
}

}  // namespace

bool pair_test(const PersonState& a, const PersonState& b, const GroupRuleConfig& config) {
    if (distance(a.position, b.position) > config.max_distance) return false;
    const double diff_deg =
        orientation_difference_rad(a.alpha_deg, b.alpha_deg) * 180.0 / std::numbers::pi;
    if (diff_deg > config.max_orientation_diff_deg) return false;
    const double hi = std::max(a.speed, b.speed);
    if (hi == 0.0) return true;  // two standing agents move identically
    return speed_difference(a.speed, b.speed) < config.speed_fraction * hi;
}

std::vector<std::vector<int>> detect_groups(const FrameState& frame,
                                            const GroupRuleConfig& config) {
    const std::size_t n = frame.persons.size();
    UnionFind uf(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (pair_test(frame.persons[i], frame.persons[j], config)) {
                uf.unite(i, j);
            }
        }
    }
    std::map<std::size_t, std::vector<int>> by_root;
    for (std::size_t i = 0; i < n; ++i) {
        by_root[uf.find(i)].push_back(frame.persons[i].person_id);
    }
    std::vector<std::vector<int>> components;
    for (auto& [root, ids] : by_root) {
        std::sort(ids.begin(), ids.end());
        components.push_back(std::move(ids));
    }
    return components_to_groups(components);
}

std::vector<std::vector<std::vector<int>>> detect_groups_per_frame(
    const std::vector<FrameState>& frames, const GroupRuleConfig& config) {
    std::vector<std::vector<std::vector<int>>> out;
    out.reserve(frames.size());
    for (const auto& frame : frames) {
        out.push_back(detect_groups(frame, config));
    }
    return out;
}

std::vector<VideoGroup> detect_video_groups(
    const std::vector<FrameState>& frames,
    const std::vector<std::vector<std::vector<int>>>& per_frame_groups,
    double min_fraction) {
    // Count, per pair, the frames spent in one group and the frames co-present.
    std::map<std::pair<int, int>, int> grouped;
    std::map<std::pair<int, int>, int> copresent;
    std::set<int> all_ids;

    for (std::size_t f = 0; f < frames.size(); ++f) {
        const auto& persons = frames[f].persons;
        for (std::size_t i = 0; i < persons.size(); ++i) {
            all_ids.insert(persons[i].person_id);
            for (std::size_t j = i + 1; j < persons.size(); ++j) {
                ++copresent[{persons[i].person_id, persons[j].person_id}];
            }
        }
        for (const auto& group : per_frame_groups[f]) {
            for (std::size_t i = 0; i < group.size(); ++i) {
                for (std::size_t j = i + 1; j < group.size(); ++j) {
                    ++grouped[{group[i], group[j]}];
                }
            }
        }
    }

    // Connected components of the "stably co-grouped" pair relation.
    std::vector<int> ids(all_ids.begin(), all_ids.end());
    std::map<int, std::size_t> index;
    for (std::size_t i = 0; i < ids.size(); ++i) index[ids[i]] = i;
    UnionFind uf(ids.size());
    for (const auto& [pair, count] : grouped) {
        const int total = copresent.at(pair);
        if (total > 0 && static_cast<double>(count) >= min_fraction * total) {
            uf.unite(index.at(pair.first), index.at(pair.second));
        }
    }
    std::map<std::size_t, std::vector<int>> by_root;
    for (std::size_t i = 0; i < ids.size(); ++i) by_root[uf.find(i)].push_back(ids[i]);
    std::vector<std::vector<int>> components;
    for (auto& [root, members] : by_root) {
        std::sort(members.begin(), members.end());
        components.push_back(std::move(members));
    }

    std::vector<VideoGroup> result;
    int next_id = 1;
    for (const auto& members : components_to_groups(components)) {
        VideoGroup vg;
        vg.group = group_stats(members, next_id++, frames);
        for (std::size_t f = 0; f < frames.size(); ++f) {
            const auto& persons = frames[f].persons;
            const bool all_present = std::all_of(members.begin(), members.end(), [&](int id) {
                return std::any_of(persons.begin(), persons.end(),
                                   [&](const PersonState& p) { return p.person_id == id; });
            });
            if (!all_present) continue;
            ++vg.frames_copresent;
            // Grouped here iff some detected group contains every member.
            for (const auto& group : per_frame_groups[f]) {
                const bool contains_all =
                    std::all_of(members.begin(), members.end(), [&](int id) {
                        return std::binary_search(group.begin(), group.end(), id);
                    });
                if (contains_all) {
                    ++vg.frames_grouped;
                    break;
                }
            }
        }
        result.push_back(std::move(vg));
    }
    return result;
}

Group group_stats(const std::vector<int>& members, int group_id,
                  const std::vector<FrameState>& frames) {
    Group g;
    g.group_id = group_id;
    g.members = members;
    std::sort(g.members.begin(), g.members.end());

    double speed_sum = 0.0, alpha_sum = 0.0, dist_sum = 0.0;
    int person_frames = 0, dist_frames = 0;
    for (const auto& frame : frames) {
        std::vector<const PersonState*> present;
        for (int id : g.members) {
            for (const auto& p : frame.persons) {
                if (p.person_id == id) {
                    present.push_back(&p);
                    break;
                }
            }
        }
        if (present.size() != g.members.size()) continue;  // need everyone

        for (const PersonState* p : present) {
            speed_sum += p->speed;
            alpha_sum += p->alpha_deg;
            ++person_frames;
        }
        double pair_sum = 0.0;
        int pair_count = 0;
        for (std::size_t i = 0; i < present.size(); ++i) {
            for (std::size_t j = i + 1; j < present.size(); ++j) {
                pair_sum += distance(present[i]->position, present[j]->position);
                ++pair_count;
            }
        }
        if (pair_count > 0) {
            dist_sum += pair_sum / pair_count;
            ++dist_frames;
        }
    }
    if (person_frames > 0) {
        g.mean_speed = speed_sum / person_frames;
        g.mean_alpha_deg = alpha_sum / person_frames;
    }
    if (dist_frames > 0) {
        g.mean_distance = dist_sum / dist_frames;
    }
    return g;
}

}  // namespace crowdtraits
