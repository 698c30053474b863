#include "crowdtraits/ocean.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <string>

#include "crowdtraits/errors.hpp"
#include "minmax.hpp"

namespace crowdtraits {

namespace {

// Dimension item sets (1-based item numbers).
constexpr int kOpennessItems[] = {2};
constexpr int kConscientiousnessItems[] = {1};
constexpr int kExtraversionItems[] = {3, 12, 14, 16, 17, 18, 19, 20, 21, 22, 23,
                                      4, 5, 6, 7, 8, 11, 15};
constexpr int kAgreeablenessItems[] = {9, 10};
constexpr int kNeuroticismItems[] = {13, 24, 25};

template <std::size_t N>
double item_sum(const ItemArray& a, const int (&items)[N]) {
    double sum = 0.0;
    for (int k : items) sum += a[k - 1];
    return sum;
}

double safe_reciprocal(double x, double epsilon) { return 1.0 / (x + epsilon); }

}  // namespace

bool item_is_inverted(int item) {
    switch (item) {
        case 2:
        case 4:
        case 5:
        case 6:
        case 7:
        case 8:
        case 11:
        case 15:
        case 24:
        case 25:
            return true;
        default:
            return false;
    }
}

ItemArray answer_items(const FrameFeatures& f, double cum_std_alpha_deg, double epsilon) {
    const double s = f.speed;
    const double alpha = f.alpha_deg;
    const double iso = f.isolation;
    const double soc = f.socialization;
    const double col = f.collectivity;

    ItemArray q{};
    q[0] = s + safe_reciprocal(alpha, epsilon);              // Q1
    q[1] = alpha;                                            // Q2
    for (int k = 3; k <= 8; ++k) q[k - 1] = iso;             // Q3-Q8
    q[8] = col;                                              // Q9
    q[9] = col;                                              // Q10
    q[10] = iso + cum_std_alpha_deg;                         // Q11
    q[11] = s + alpha;                                       // Q12
    q[12] = iso + safe_reciprocal(col, epsilon);             // Q13
    q[13] = col + soc + safe_reciprocal(alpha, epsilon);     // Q14
    q[14] = safe_reciprocal(q[13], epsilon);                 // Q15
    for (int k = 16; k <= 21; ++k) q[k - 1] = soc;           // Q16-Q21
    for (int k = 22; k <= 25; ++k) q[k - 1] = soc + col;     // Q22-Q25
    return q;
}

void normalize_items(std::vector<ItemAnswers>& answers) {
    if (answers.empty()) return;
    ItemArray lo, hi;
    lo.fill(std::numeric_limits<double>::infinity());
    hi.fill(-std::numeric_limits<double>::infinity());
    for (const auto& a : answers) {
        for (int k = 0; k < kItemCount; ++k) {
            lo[k] = std::min(lo[k], a.raw[k]);
            hi[k] = std::max(hi[k], a.raw[k]);
        }
    }
    for (auto& a : answers) {
        for (int k = 0; k < kItemCount; ++k) {
            a.normalized[k] = detail::minmax_scale(a.raw[k], lo[k], hi[k], 4.0);
        }
    }
}

ItemArray invert_items(const ItemArray& normalized) {
    ItemArray adjusted = normalized;
    for (int item = 1; item <= kItemCount; ++item) {
        if (item_is_inverted(item)) adjusted[item - 1] = 4.0 - normalized[item - 1];
    }
    return adjusted;
}

PersonalityVector aggregate_dimensions(const ItemArray& adjusted) {
    PersonalityVector p;
    p.openness = item_sum(adjusted, kOpennessItems) / (std::size(kOpennessItems) * 4.0);
    p.conscientiousness =
        item_sum(adjusted, kConscientiousnessItems) / (std::size(kConscientiousnessItems) * 4.0);
    p.extraversion =
        item_sum(adjusted, kExtraversionItems) / (std::size(kExtraversionItems) * 4.0);
    p.agreeableness =
        item_sum(adjusted, kAgreeablenessItems) / (std::size(kAgreeablenessItems) * 4.0);
    p.neuroticism = item_sum(adjusted, kNeuroticismItems) / (std::size(kNeuroticismItems) * 4.0);
    return p;
}

PersonalityVector aggregate_dimensions_literal(const ItemArray& adjusted) {
    PersonalityVector p;
    p.openness = item_sum(adjusted, kOpennessItems) / 0.04;
    p.conscientiousness = item_sum(adjusted, kConscientiousnessItems) / 0.04;
    p.extraversion = item_sum(adjusted, kExtraversionItems) / 0.72;
    p.agreeableness = item_sum(adjusted, kAgreeablenessItems) / 0.08;
    p.neuroticism = item_sum(adjusted, kNeuroticismItems) / 0.12;
    return p;
}

OceanResult person_ocean(const FeatureTable& features, OceanMode mode) {
    OceanResult result;
    result.mode = mode;

    // Raw answers per person-frame; Q11 needs the running std of each
    // person's heading changes, so walk rows grouped by person in frame order.
    std::map<int, std::vector<const FrameFeatures*>> rows_by_person;
    for (const auto& row : features.rows) rows_by_person[row.person_id].push_back(&row);

    for (auto& [person_id, rows] : rows_by_person) {
        std::sort(rows.begin(), rows.end(),
                  [](const FrameFeatures* a, const FrameFeatures* b) { return a->frame < b->frame; });
        // Welford accumulation over the heading-change series (first frame
        // contributes no change).
        double mean = 0.0, m2 = 0.0;
        long count = 0;
        double prev_alpha = 0.0;
        bool has_prev = false;
        for (const FrameFeatures* row : rows) {
            if (has_prev) {
                const double delta = row->alpha_deg - prev_alpha;
                ++count;
                const double d1 = delta - mean;
                mean += d1 / static_cast<double>(count);
                m2 += d1 * (delta - mean);
            }
            prev_alpha = row->alpha_deg;
            has_prev = true;
            const double cum_std = count > 0 ? std::sqrt(m2 / static_cast<double>(count)) : 0.0;

            ItemAnswers a;
            a.person_id = row->person_id;
            a.frame = row->frame;
            a.raw = answer_items(*row, cum_std);
            result.answers.push_back(a);
        }
    }
    std::sort(result.answers.begin(), result.answers.end(),
              [](const ItemAnswers& a, const ItemAnswers& b) {
                  return a.frame != b.frame ? a.frame < b.frame : a.person_id < b.person_id;
              });

    normalize_items(result.answers);

    // Per-frame dimensions.
    std::map<int, PersonOcean> persons;
    std::vector<PersonalityVector> literal_pool;
    for (const auto& a : result.answers) {
        const ItemArray adjusted = invert_items(a.normalized);
        const PersonalityVector v = mode == OceanMode::normalized
                                        ? aggregate_dimensions(adjusted)
                                        : aggregate_dimensions_literal(adjusted);
        PersonOcean& po = persons[a.person_id];
        po.person_id = a.person_id;
        po.frames.push_back(a.frame);
        po.per_frame.push_back(v);
        if (mode == OceanMode::literal) literal_pool.push_back(v);
    }

    // Literal mode rescales each dimension to [0, 1] by the min-max achieved
    // across all person-frames of the video (constant series map to 0.5).
    if (mode == OceanMode::literal && !literal_pool.empty()) {
        std::array<double, 5> lo, hi;
        lo.fill(std::numeric_limits<double>::infinity());
        hi.fill(-std::numeric_limits<double>::infinity());
        for (const auto& v : literal_pool) {
            const auto arr = v.as_array();
            for (int d = 0; d < 5; ++d) {
                lo[d] = std::min(lo[d], arr[d]);
                hi[d] = std::max(hi[d], arr[d]);
            }
        }
        const auto rescale = [&](PersonalityVector& v) {
            auto arr = v.as_array();
            for (int d = 0; d < 5; ++d) {
                arr[d] = detail::minmax_scale(arr[d], lo[d], hi[d], 1.0);
            }
            v = {arr[0], arr[1], arr[2], arr[3], arr[4]};
        };
        for (auto& [id, po] : persons) {
            for (auto& v : po.per_frame) rescale(v);
        }
    }

    for (auto& [id, po] : persons) {
        PersonalityVector mean;
        for (const auto& v : po.per_frame) {
            mean.openness += v.openness;
            mean.conscientiousness += v.conscientiousness;
            mean.extraversion += v.extraversion;
            mean.agreeableness += v.agreeableness;
            mean.neuroticism += v.neuroticism;
        }
        const double n = static_cast<double>(po.per_frame.size());
        po.video = {mean.openness / n, mean.conscientiousness / n, mean.extraversion / n,
                    mean.agreeableness / n, mean.neuroticism / n};
        result.persons.push_back(std::move(po));
    }
    return result;
}

const PersonOcean& find_person(const OceanResult& result, int person_id) {
    for (const auto& p : result.persons) {
        if (p.person_id == person_id) return p;
    }
    throw MissingPersonError("person " + std::to_string(person_id) + " absent from all frames");
}

PersonalityVector group_ocean(std::span<const PersonalityVector> members) {
    PersonalityVector mean;
    for (const auto& v : members) {
        mean.openness += v.openness;
        mean.conscientiousness += v.conscientiousness;
        mean.extraversion += v.extraversion;
        mean.agreeableness += v.agreeableness;
        mean.neuroticism += v.neuroticism;
    }
    const double n = members.empty() ? 1.0 : static_cast<double>(members.size());
    return {mean.openness / n, mean.conscientiousness / n, mean.extraversion / n,
            mean.agreeableness / n, mean.neuroticism / n};
}

}  // namespace crowdtraits
