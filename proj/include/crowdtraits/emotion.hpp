#pragma once

#include <array>
#include <span>
#include <vector>

#include "crowdtraits/ocean.hpp"

namespace crowdtraits {

enum class FactorSign { plus, minus };

/// plus iff value >= 0.5.
FactorSign factor_sign(double value);

/// Fear, Happiness, Sadness, Anger. Raw values are integer sums of the
/// {-1, 0, +1} contributions of the five factor signs (real-valued in the
/// magnitude-weighted variant); normalized values live in [0, 1].
struct EmotionVector {
    double fear = 0.0;
    double happiness = 0.0;
    double sadness = 0.0;
    double anger = 0.0;

    std::array<double, 4> as_array() const { return {fear, happiness, sadness, anger}; }
};

/// Contribution of factor (O,C,E,A,N = 0..4) with the given sign to emotion
/// (F,H,S,An = 0..3). Exactly the 40 published table entries.
int emotion_contribution(int factor, FactorSign sign, int emotion);

enum class EmotionMode {
    discrete,  // contributions summed as-is (the normative mode)
    weighted,  // each contribution scaled by 2*|factor - 0.5|
};

/// Raw emotion sums for one personality vector.
EmotionVector map_emotions(const PersonalityVector& p,
                           EmotionMode mode = EmotionMode::discrete);

/// Per-emotion min-max normalization to [0, 1] over the given raw vectors
/// (the lowest and highest values achieved in the video); a constant series
/// maps to 0.5. `pool` supplies the min/max; `values` are rescaled with it.
std::vector<EmotionVector> normalize_emotions(std::span<const EmotionVector> values,
                                              std::span<const EmotionVector> pool);
std::vector<EmotionVector> normalize_emotions(std::span<const EmotionVector> values);

/// Arithmetic mean of the member vectors, per emotion.
EmotionVector group_emotion(std::span<const EmotionVector> members);

}  // namespace crowdtraits
