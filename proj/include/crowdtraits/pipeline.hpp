#pragma once

#include <optional>
#include <vector>

#include "crowdtraits/analysis.hpp"
#include "crowdtraits/emotion.hpp"
#include "crowdtraits/features.hpp"
#include "crowdtraits/groups.hpp"
#include "crowdtraits/ocean.hpp"
#include "crowdtraits/types.hpp"

namespace crowdtraits {

struct AnalysisConfig {
    ProxemicsConfig proxemics;
    GroupRuleConfig group_rules;
    OceanMode ocean_mode = OceanMode::normalized;
    EmotionMode emotion_mode = EmotionMode::discrete;
    double cone_half_angle_deg = 30.0;  // preferred-distance measurement cone
    double group_stability = 0.5;       // video-group co-grouping fraction
    std::optional<Roi> roi;             // restrict analysis to a region
};

/// Emotions attached to one person over the video.
struct PersonEmotion {
    int person_id = 0;
    std::vector<int> frames;
    std::vector<EmotionVector> per_frame_raw;
    std::vector<EmotionVector> per_frame_normalized;
    EmotionVector video_raw;         // mean of the per-frame raw values
    EmotionVector video_normalized;
};

struct GroupReport {
    VideoGroup video_group;
    PersonalityVector ocean;         // mean of member video vectors
    EmotionVector emotion_raw;       // mean of member video raw vectors
    EmotionVector emotion_normalized;
};

/// Everything computed for one video.
struct VideoAnalysis {
    SceneDataset dataset;  // world coordinates, after any ROI filtering
    std::vector<FrameState> frames;
    FeatureTable features;
    std::vector<std::vector<std::vector<int>>> per_frame_groups;  // aligned with frames
    OceanResult ocean;
    std::vector<PersonEmotion> emotions;   // ordered by person_id
    std::vector<GroupReport> groups;       // video-level groups
    PreferredDistance preferred;
    VideoSummary summary;
};

/// Runs the full feature -> personality -> emotion pipeline on a world-meter
/// dataset. Throws on unit mismatch or malformed trajectories.
VideoAnalysis analyze_video(const SceneDataset& dataset, const AnalysisConfig& config = {});

}  // namespace crowdtraits
