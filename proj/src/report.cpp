#include "crowdtraits/report.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "crowdtraits/errors.hpp"

namespace crowdtraits {

namespace {

using Json = nlohmann::ordered_json;

std::string csv_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

Json ocean_to_json(const PersonalityVector& p) {
    Json j;
    j["O"] = p.openness;
    j["C"] = p.conscientiousness;
    j["E"] = p.extraversion;
    j["A"] = p.agreeableness;
    j["N"] = p.neuroticism;
    return j;
}

PersonalityVector ocean_from_json(const Json& j) {
    return {j.at("O").get<double>(), j.at("C").get<double>(), j.at("E").get<double>(),
            j.at("A").get<double>(), j.at("N").get<double>()};
}

Json emotion_to_json(const EmotionVector& e) {
    Json j;
    j["fear"] = e.fear;
    j["happiness"] = e.happiness;
    j["sadness"] = e.sadness;
    j["anger"] = e.anger;
    return j;
}

EmotionVector emotion_from_json(const Json& j) {
    return {j.at("fear").get<double>(), j.at("happiness").get<double>(),
            j.at("sadness").get<double>(), j.at("anger").get<double>()};
}

Json config_to_json(const AnalysisConfig& c) {
    Json j;
    j["proxemics"] = {{"d_hall", c.proxemics.d_hall},
                      {"gamma", c.proxemics.gamma},
                      {"beta", c.proxemics.beta},
                      {"w1", c.proxemics.w1},
                      {"w2", c.proxemics.w2}};
    j["group_rules"] = {{"max_distance", c.group_rules.max_distance},
                        {"max_orientation_diff_deg", c.group_rules.max_orientation_diff_deg},
                        {"speed_fraction", c.group_rules.speed_fraction}};
    j["ocean_mode"] = c.ocean_mode == OceanMode::normalized ? "normalized" : "literal";
    j["emotion_mode"] = c.emotion_mode == EmotionMode::discrete ? "discrete" : "weighted";
    j["cone_half_angle_deg"] = c.cone_half_angle_deg;
    j["group_stability"] = c.group_stability;
    if (c.roi) {
        j["roi"] = {{"x", c.roi->x}, {"y", c.roi->y}, {"width", c.roi->width},
                    {"height", c.roi->height}};
    } else {
        j["roi"] = nullptr;
    }
    return j;
}

Json base_report(const VideoAnalysis& analysis, const AnalysisConfig& config) {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["label"] = analysis.dataset.label;
    j["config"] = config_to_json(config);
    return j;
}

}  // namespace

std::string features_csv(const VideoAnalysis& analysis) {
    std::string out =
        "person_id,frame,speed,alpha_deg,isolation,socialization,collectivity,collectivity_mean\n";
    for (const auto& r : analysis.features.rows) {
        out += std::to_string(r.person_id) + ',' + std::to_string(r.frame) + ',' +
               csv_double(r.speed) + ',' + csv_double(r.alpha_deg) + ',' +
               csv_double(r.isolation) + ',' + csv_double(r.socialization) + ',' +
               csv_double(r.collectivity) + ',' + csv_double(r.collectivity_mean) + '\n';
    }
    return out;
}

std::string groups_json(const VideoAnalysis& analysis, const AnalysisConfig& config) {
    Json j = base_report(analysis, config);
    Json groups = Json::array();
    for (const auto& gr : analysis.groups) {
        const auto& vg = gr.video_group;
        Json g;
        g["group_id"] = vg.group.group_id;
        g["members"] = vg.group.members;
        g["n"] = vg.group.members.size();
        g["frames_grouped"] = vg.frames_grouped;
        g["frames_copresent"] = vg.frames_copresent;
        g["stability"] = vg.frames_copresent > 0
                             ? static_cast<double>(vg.frames_grouped) / vg.frames_copresent
                             : 0.0;
        g["mean_speed"] = vg.group.mean_speed;
        g["mean_alpha_deg"] = vg.group.mean_alpha_deg;
        g["mean_distance"] = vg.group.mean_distance;
        groups.push_back(g);
    }
    j["video_groups"] = groups;

    Json per_frame = Json::array();
    for (std::size_t f = 0; f < analysis.frames.size(); ++f) {
        Json entry;
        entry["frame"] = analysis.frames[f].frame;
        entry["groups"] = analysis.per_frame_groups[f];
        per_frame.push_back(entry);
    }
    j["per_frame"] = per_frame;
    return j.dump(2) + "\n";
}

std::string ocean_json(const VideoAnalysis& analysis, const AnalysisConfig& config) {
    Json j = base_report(analysis, config);
    Json persons = Json::array();
    for (const auto& p : analysis.ocean.persons) {
        Json entry;
        entry["person_id"] = p.person_id;
        entry["video"] = ocean_to_json(p.video);
        Json frames = Json::array();
        for (std::size_t i = 0; i < p.frames.size(); ++i) {
            Json fv = ocean_to_json(p.per_frame[i]);
            fv["frame"] = p.frames[i];
            frames.push_back(fv);
        }
        entry["per_frame"] = frames;
        persons.push_back(entry);
    }
    j["persons"] = persons;

    Json groups = Json::array();
    for (const auto& gr : analysis.groups) {
        Json g;
        g["group_id"] = gr.video_group.group.group_id;
        g["members"] = gr.video_group.group.members;
        g["video"] = ocean_to_json(gr.ocean);
        groups.push_back(g);
    }
    j["groups"] = groups;
    return j.dump(2) + "\n";
}

std::string emotions_json(const VideoAnalysis& analysis, const AnalysisConfig& config) {
    Json j = base_report(analysis, config);
    Json persons = Json::array();
    for (const auto& pe : analysis.emotions) {
        Json entry;
        entry["person_id"] = pe.person_id;
        entry["video_raw"] = emotion_to_json(pe.video_raw);
        entry["video_normalized"] = emotion_to_json(pe.video_normalized);
        Json frames = Json::array();
        for (std::size_t i = 0; i < pe.frames.size(); ++i) {
            Json fv;
            fv["frame"] = pe.frames[i];
            fv["raw"] = emotion_to_json(pe.per_frame_raw[i]);
            fv["normalized"] = emotion_to_json(pe.per_frame_normalized[i]);
            frames.push_back(fv);
        }
        entry["per_frame"] = frames;
        persons.push_back(entry);
    }
    j["persons"] = persons;

    Json groups = Json::array();
    for (const auto& gr : analysis.groups) {
        Json g;
        g["group_id"] = gr.video_group.group.group_id;
        g["members"] = gr.video_group.group.members;
        g["video_raw"] = emotion_to_json(gr.emotion_raw);
        g["video_normalized"] = emotion_to_json(gr.emotion_normalized);
        groups.push_back(g);
    }
    j["groups"] = groups;
    return j.dump(2) + "\n";
}

std::string summary_json(const VideoAnalysis& analysis, const AnalysisConfig& config) {
    Json j = base_report(analysis, config);
    j["person_count"] = analysis.summary.person_count;
    j["frame_count"] = analysis.summary.frame_count;
    j["group_count"] = analysis.groups.size();
    if (analysis.summary.person_count > 0) {
        j["ocean"] = ocean_to_json(analysis.summary.ocean);
        j["emotion"] = emotion_to_json(analysis.summary.emotion);
    } else {
        j["ocean"] = nullptr;
        j["emotion"] = nullptr;
    }
    if (analysis.preferred.video_mean) {
        j["preferred_distance"] = *analysis.preferred.video_mean;
    } else {
        j["preferred_distance"] = nullptr;
    }
    return j.dump(2) + "\n";
}

std::string long_csv(std::span<const LongRow> rows) {
    std::string out = "series,label,x,y\n";
    for (const auto& r : rows) {
        out += r.series + ',' + r.label + ',' + csv_double(r.x) + ',' + csv_double(r.y) + '\n';
    }
    return out;
}

std::string density_csv(std::span<const DensityRow> rows) {
    std::string out = "n,O,C,E,A,N,fear,happiness,sadness,anger\n";
    for (const auto& r : rows) {
        out += std::to_string(r.n);
        for (double v : r.ocean.as_array()) out += ',' + csv_double(v);
        for (double v : r.emotion.as_array()) out += ',' + csv_double(v);
        out += '\n';
    }
    return out;
}

std::string preferred_distance_json(const PreferredDistance& preferred,
                                    const std::string& label) {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["label"] = label;
    if (preferred.video_mean) {
        j["video_mean"] = *preferred.video_mean;
    } else {
        j["video_mean"] = nullptr;
    }
    Json persons = Json::array();
    for (const auto& [id, mean] : preferred.per_person) {
        Json p;
        p["person_id"] = id;
        p["mean_distance"] = mean;
        persons.push_back(p);
    }
    j["persons"] = persons;
    return j.dump(2) + "\n";
}

VideoSummary read_summary_json(const std::string& json_text) {
    Json j;
    try {
        j = Json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        throw SchemaError(std::string("summary JSON: ") + e.what());
    }
    try {
        VideoSummary s;
        s.label = j.at("label").get<std::string>();
        s.person_count = j.at("person_count").get<int>();
        s.frame_count = j.at("frame_count").get<int>();
        if (j.at("ocean").is_null() || j.at("emotion").is_null()) {
            throw SchemaError("summary JSON: empty video has no ocean/emotion means");
        }
        s.ocean = ocean_from_json(j.at("ocean"));
        s.emotion = emotion_from_json(j.at("emotion"));
        return s;
    } catch (const nlohmann::json::exception& e) {
        throw SchemaError(std::string("summary JSON: ") + e.what());
    }
}

CorrelationReport correlate_summaries(const VideoSummary& a, const VideoSummary& b) {
    CorrelationReport report;
    report.label_a = a.label;
    report.label_b = b.label;
    const auto oa = a.ocean.as_array();
    const auto ob = b.ocean.as_array();
    try {
        report.ocean_r = pearson({oa.data(), oa.size()}, {ob.data(), ob.size()});
    } catch (const UndefinedCorrelationError&) {
        report.ocean_r.reset();
    }
    const auto ea = a.emotion.as_array();
    const auto eb = b.emotion.as_array();
    try {
        report.emotion_r = pearson({ea.data(), ea.size()}, {eb.data(), eb.size()});
    } catch (const UndefinedCorrelationError&) {
        report.emotion_r.reset();
    }
    return report;
}

std::string correlation_json(const CorrelationReport& report) {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["label_a"] = report.label_a;
    j["label_b"] = report.label_b;
    if (report.ocean_r) {
        j["ocean_pearson"] = *report.ocean_r;
        j["ocean_undefined"] = false;
    } else {
        j["ocean_pearson"] = nullptr;
        j["ocean_undefined"] = true;
    }
    if (report.emotion_r) {
        j["emotion_pearson"] = *report.emotion_r;
        j["emotion_undefined"] = false;
    } else {
        j["emotion_pearson"] = nullptr;
        j["emotion_undefined"] = true;
    }
    return j.dump(2) + "\n";
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open for writing: " + path);
    out << text;
    if (!out) throw IoError("write failed: " + path);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace crowdtraits
