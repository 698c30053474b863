#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include "crowdtraits/features.hpp"

namespace crowdtraits {

inline constexpr int kItemCount = 25;
using ItemArray = std::array<double, kItemCount>;  // index 0 holds item 1

/// Items whose score is reversed (Q* = 4 - Q'): 2, 4-8, 11, 15, 24, 25.
bool item_is_inverted(int item);  // 1-based

/// The 25 inventory item answers of one person at one frame.
struct ItemAnswers {
    int person_id = 0;
    int frame = 0;
    ItemArray raw{};         // unbounded equation values
    ItemArray normalized{};  // per-item min-max over the video, in [0, 4]
};

struct PersonalityVector {
    double openness = 0.0;
    double conscientiousness = 0.0;
    double extraversion = 0.0;
    double agreeableness = 0.0;
    double neuroticism = 0.0;

    std::array<double, 5> as_array() const {
        return {openness, conscientiousness, extraversion, agreeableness, neuroticism};
    }
};

enum class OceanMode {
    normalized,  // each dimension = mean adjusted item score / 4
    literal,     // divide by the item percentage, then min-max over the video
};

/// Guard for the reciprocal terms 1/alpha, 1/collectivity and 1/Q14.
inline constexpr double kReciprocalEpsilon = 1e-3;

/// Raw item answers for one person-frame. cum_std_alpha_deg is the standard
/// deviation of the person's heading-change series up to this frame.
ItemArray answer_items(const FrameFeatures& f, double cum_std_alpha_deg,
                       double epsilon = kReciprocalEpsilon);

/// Per-item min-max normalization to [0, 4] across all person-frames of a
/// video; items with a constant raw series map to 2 (the scale midpoint).
void normalize_items(std::vector<ItemAnswers>& answers);

/// Applies Q* = 4 - Q' to the reverse-scored items, leaving others unchanged.
ItemArray invert_items(const ItemArray& normalized);

/// The five dimension scores from the 25 adjusted answers, each rescaled to
/// [0, 1] by dividing the dimension's item sum by (item count * 4).
PersonalityVector aggregate_dimensions(const ItemArray& adjusted);

/// Literal aggregation: dimension sum divided by the dimension's percentage
/// of the inventory (4/4/72/8/12%). Values are not bounded to [0, 1]; callers
/// min-max normalize per video (see person_ocean).
PersonalityVector aggregate_dimensions_literal(const ItemArray& adjusted);

struct PersonOcean {
    int person_id = 0;
    std::vector<int> frames;
    std::vector<PersonalityVector> per_frame;  // aligned with frames
    PersonalityVector video;                   // across-frame mean
};

struct OceanResult {
    std::vector<ItemAnswers> answers;   // ordered by (frame, person)
    std::vector<PersonOcean> persons;   // ordered by person_id
    OceanMode mode = OceanMode::normalized;
};

/// Full item -> dimension pipeline over a video's feature table.
OceanResult person_ocean(const FeatureTable& features, OceanMode mode = OceanMode::normalized);

/// Personality of a single person (across-frame mean).
/// Throws MissingPersonError if the id is absent.
const PersonOcean& find_person(const OceanResult& result, int person_id);

/// Arithmetic mean of the member vectors, per dimension.
PersonalityVector group_ocean(std::span<const PersonalityVector> members);

}  // namespace crowdtraits
