#include "crowdtraits/pipeline.hpp"

#include <algorithm>
#include <map>

#include "crowdtraits/errors.hpp"
#include "crowdtraits/kinematics.hpp"

namespace crowdtraits {

VideoAnalysis analyze_video(const SceneDataset& dataset, const AnalysisConfig& config) {
    if (dataset.units != Units::world_meters) {
        throw Error("analysis requires world-meter coordinates; rectify the dataset first");
    }

    VideoAnalysis va;
    va.dataset = config.roi ? roi_filter(dataset, *config.roi) : dataset;

    const auto kinematics = derive_all_kinematics(va.dataset);
    va.frames = build_frame_states(kinematics);
    va.features = feature_vector(va.frames, kinematics, config.proxemics);
    va.per_frame_groups = detect_groups_per_frame(va.frames, config.group_rules);
    va.ocean = person_ocean(va.features, config.ocean_mode);

    // Per-frame raw emotions from per-frame personality; per-person video raw
    // is the across-frame mean. Every raw value achieved in the video forms
    // the normalization pool.
    std::vector<EmotionVector> pool;
    for (const auto& person : va.ocean.persons) {
        PersonEmotion pe;
        pe.person_id = person.person_id;
        pe.frames = person.frames;
        EmotionVector mean;
        for (const auto& p : person.per_frame) {
            const EmotionVector raw = map_emotions(p, config.emotion_mode);
            pe.per_frame_raw.push_back(raw);
            pool.push_back(raw);
            mean.fear += raw.fear;
            mean.happiness += raw.happiness;
            mean.sadness += raw.sadness;
            mean.anger += raw.anger;
        }
        const double n = static_cast<double>(pe.per_frame_raw.size());
        pe.video_raw = {mean.fear / n, mean.happiness / n, mean.sadness / n, mean.anger / n};
        va.emotions.push_back(std::move(pe));
    }

    // Video-level groups with personality and emotion.
    const auto video_groups =
        detect_video_groups(va.frames, va.per_frame_groups, config.group_stability);
    for (const auto& vg : video_groups) {
        GroupReport report;
        report.video_group = vg;
        std::vector<PersonalityVector> member_ocean;
        std::vector<EmotionVector> member_emotion;
        for (int id : vg.group.members) {
            member_ocean.push_back(find_person(va.ocean, id).video);
            for (const auto& pe : va.emotions) {
                if (pe.person_id == id) {
                    member_emotion.push_back(pe.video_raw);
                    break;
                }
            }
        }
        report.ocean = group_ocean(member_ocean);
        report.emotion_raw = group_emotion(member_emotion);
        va.groups.push_back(std::move(report));
    }

    // Normalize: person per-frame, person video, and group values share the
    // video's min-max scale.
    if (!pool.empty()) {
        for (auto& pe : va.emotions) {
            pe.per_frame_normalized = normalize_emotions(pe.per_frame_raw, pool);
            pe.video_normalized = normalize_emotions({&pe.video_raw, 1}, pool).front();
        }
        for (auto& gr : va.groups) {
            gr.emotion_normalized = normalize_emotions({&gr.emotion_raw, 1}, pool).front();
        }
    }

    va.preferred = preferred_distance(va.dataset, config.cone_half_angle_deg);

    // Summary rollup.
    va.summary.label = va.dataset.label;
    va.summary.person_count = static_cast<int>(va.dataset.trajectories.size());
    va.summary.frame_count = static_cast<int>(va.frames.size());
    if (!va.ocean.persons.empty()) {
        std::vector<PersonalityVector> person_vectors;
        for (const auto& p : va.ocean.persons) person_vectors.push_back(p.video);
        va.summary.ocean = group_ocean(person_vectors);
        std::vector<EmotionVector> person_emotions;
        for (const auto& pe : va.emotions) person_emotions.push_back(pe.video_normalized);
        va.summary.emotion = group_emotion(person_emotions);
    }
    return va;
}

}  // namespace crowdtraits
