#include "crowdtraits/trajectory_io.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <utility>

#include <nlohmann/json.hpp>

#include "crowdtraits/errors.hpp"

namespace crowdtraits {

namespace {

std::string format_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    for (char c : line) {
        if (c == ',') {
            fields.push_back(std::move(field));
            field.clear();
        } else {
            field.push_back(c);
        }
    }
    fields.push_back(std::move(field));
    return fields;
}

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

double parse_real(const std::string& field, int line_no, const char* what) {
    const std::string t = trim(field);
    double value = 0;
    const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
    if (ec != std::errc() || ptr != t.data() + t.size()) {
        throw ParseError("line " + std::to_string(line_no) + ": bad " + what + " value '" + t + "'");
    }
    return value;
}

long parse_int(const std::string& field, int line_no, const char* what) {
    const std::string t = trim(field);
    long value = 0;
    const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
    if (ec != std::errc() || ptr != t.data() + t.size()) {
        throw ParseError("line " + std::to_string(line_no) + ": bad " + what + " value '" + t + "'");
    }
    return value;
}

void expect_header(const std::string& got, const std::string& want) {
    if (trim(got) != want) {
        throw ParseError("line 1: expected header '" + want + "', got '" + trim(got) + "'");
    }
}

}  // namespace

SceneDataset parse_trajectories(std::istream& source) {
    std::string line;
    if (!std::getline(source, line)) {
        // No header at all: treat as an empty dataset.
        return {};
    }
    expect_header(line, "person_id,frame,x,y");

    std::map<int, Trajectory> by_id;
    int line_no = 1;
    while (std::getline(source, line)) {
        ++line_no;
        if (trim(line).empty()) continue;
        const auto fields = split_fields(line);
        if (fields.size() != 4) {
            throw ParseError("line " + std::to_string(line_no) + ": expected 4 fields, got " +
                             std::to_string(fields.size()));
        }
        const int id = static_cast<int>(parse_int(fields[0], line_no, "person_id"));
        const int frame = static_cast<int>(parse_int(fields[1], line_no, "frame"));
        const double x = parse_real(fields[2], line_no, "x");
        const double y = parse_real(fields[3], line_no, "y");
        if (!std::isfinite(x) || !std::isfinite(y)) {
            throw ParseError("line " + std::to_string(line_no) + ": non-finite coordinate");
        }
        auto& traj = by_id[id];
        traj.person_id = id;
        traj.samples.push_back({frame, {x, y}});
    }

    SceneDataset dataset;
    dataset.trajectories.reserve(by_id.size());
    for (auto& [id, traj] : by_id) {
        std::sort(traj.samples.begin(), traj.samples.end(),
                  [](const TrajectorySample& a, const TrajectorySample& b) {
                      return a.frame < b.frame;
                  });
        for (std::size_t i = 1; i < traj.samples.size(); ++i) {
            if (traj.samples[i].frame == traj.samples[i - 1].frame) {
                throw DuplicateSampleError("duplicate sample for person " + std::to_string(id) +
                                           " at frame " + std::to_string(traj.samples[i].frame));
            }
        }
        dataset.trajectories.push_back(std::move(traj));
    }
    return dataset;
}

SceneDataset parse_trajectories(const std::string& csv_text) {
    std::istringstream in(csv_text);
    return parse_trajectories(in);
}

std::string serialize_trajectories(const SceneDataset& dataset) {
    std::string out = "person_id,frame,x,y\n";
    for (const auto& traj : dataset.trajectories) {
        for (const auto& s : traj.samples) {
            out += std::to_string(traj.person_id);
            out += ',';
            out += std::to_string(s.frame);
            out += ',';
            out += format_double(s.position.x);
            out += ',';
            out += format_double(s.position.y);
            out += '\n';
        }
    }
    return out;
}

std::vector<Correspondence> parse_correspondences(std::istream& source) {
    std::string line;
    if (!std::getline(source, line)) return {};
    expect_header(line, "img_x,img_y,world_x,world_y");

    std::vector<Correspondence> out;
    int line_no = 1;
    while (std::getline(source, line)) {
        ++line_no;
        if (trim(line).empty()) continue;
        const auto fields = split_fields(line);
        if (fields.size() != 4) {
            throw ParseError("line " + std::to_string(line_no) + ": expected 4 fields, got " +
                             std::to_string(fields.size()));
        }
        Correspondence c;
        c.image.x = parse_real(fields[0], line_no, "img_x");
        c.image.y = parse_real(fields[1], line_no, "img_y");
        c.world.x = parse_real(fields[2], line_no, "world_x");
        c.world.y = parse_real(fields[3], line_no, "world_y");
        out.push_back(c);
    }
    return out;
}

std::vector<Correspondence> parse_correspondences(const std::string& csv_text) {
    std::istringstream in(csv_text);
    return parse_correspondences(in);
}

void apply_metadata_json(SceneDataset& dataset, const std::string& json_text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("metadata JSON: ") + e.what());
    }
    if (j.contains("frame_rate")) {
        const double fr = j.at("frame_rate").get<double>();
        if (!(fr > 0)) throw ParseError("metadata JSON: frame_rate must be > 0");
        dataset.frame_rate = fr;
    }
    if (j.contains("units")) {
        const std::string u = j.at("units").get<std::string>();
        if (u == "image_pixels") {
            dataset.units = Units::image_pixels;
        } else if (u == "world_meters") {
            dataset.units = Units::world_meters;
        } else {
            throw ParseError("metadata JSON: unknown units '" + u + "'");
        }
    }
    if (j.contains("label")) {
        dataset.label = j.at("label").get<std::string>();
    }
}

std::string metadata_json(const SceneDataset& dataset) {
    nlohmann::ordered_json j;
    j["frame_rate"] = dataset.frame_rate;
    j["units"] = dataset.units == Units::image_pixels ? "image_pixels" : "world_meters";
    j["label"] = dataset.label;
    return j.dump(2) + "\n";
}

SceneDataset rectify(const SceneDataset& dataset, const Homography& h) {
    SceneDataset out = dataset;
    for (auto& traj : out.trajectories) {
        for (auto& s : traj.samples) {
            s.position = apply_homography(h, s.position);
        }
    }
    out.units = Units::world_meters;
    return out;
}

SceneDataset load_dataset(const std::string& csv_path, const std::string& meta_path) {
    std::ifstream in(csv_path);
    if (!in) throw IoError("cannot open trajectory file: " + csv_path);
    SceneDataset dataset = parse_trajectories(in);
    if (dataset.label.empty()) {
        const auto slash = csv_path.find_last_of('/');
        std::string stem = slash == std::string::npos ? csv_path : csv_path.substr(slash + 1);
        const auto dot = stem.find_last_of('.');
        if (dot != std::string::npos) stem = stem.substr(0, dot);
        dataset.label = stem;
    }
    if (!meta_path.empty()) {
        std::ifstream meta(meta_path);
        if (!meta) throw IoError("cannot open metadata file: " + meta_path);
        std::stringstream buf;
        buf << meta.rdbuf();
        apply_metadata_json(dataset, buf.str());
    }
    return dataset;
}

void save_dataset(const SceneDataset& dataset, const std::string& csv_path,
                  const std::string& meta_path) {
    std::ofstream out(csv_path);
    if (!out) throw IoError("cannot write trajectory file: " + csv_path);
    out << serialize_trajectories(dataset);
    if (!out) throw IoError("write failed: " + csv_path);
    if (!meta_path.empty()) {
        std::ofstream meta(meta_path);
        if (!meta) throw IoError("cannot write metadata file: " + meta_path);
        meta << metadata_json(dataset);
        if (!meta) throw IoError("write failed: " + meta_path);
    }
}

}  // namespace crowdtraits
