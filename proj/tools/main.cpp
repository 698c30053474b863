// crowdtraits command-line interface: trajectory datasets in, personality and
// emotion reports out.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "crowdtraits/errors.hpp"
#include "crowdtraits/pipeline.hpp"
#include "crowdtraits/report.hpp"
#include "crowdtraits/synth.hpp"
#include "crowdtraits/trajectory_io.hpp"

namespace fs = std::filesystem;
using namespace crowdtraits;

namespace {

struct InputOptions {
    std::string input;
    std::string meta;
    std::string homography;
    std::string roi_spec;
    AnalysisConfig config;
};

void add_input_options(CLI::App* cmd, InputOptions& opt) {
    cmd->add_option("-i,--input", opt.input, "Trajectory CSV (person_id,frame,x,y)")
        ->required();
    cmd->add_option("--meta", opt.meta, "Metadata sidecar JSON");
    cmd->add_option("--homography", opt.homography,
                    "Correspondence CSV (img_x,img_y,world_x,world_y); required for pixel inputs");
    cmd->add_option("--roi", opt.roi_spec, "Region of interest 'x,y,width,height' in meters");
    cmd->add_option("--d-hall", opt.config.proxemics.d_hall, "Social space radius (m)")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--gamma", opt.config.proxemics.gamma, "Collectivity peak value")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--beta", opt.config.proxemics.beta, "Collectivity decay constant")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--w1", opt.config.proxemics.w1, "Speed difference weight")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--w2", opt.config.proxemics.w2, "Orientation difference weight")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--group-max-distance", opt.config.group_rules.max_distance,
                    "Group rule: max pair distance (m)")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--group-max-orientation", opt.config.group_rules.max_orientation_diff_deg,
                    "Group rule: max heading difference (deg)")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--group-speed-fraction", opt.config.group_rules.speed_fraction,
                    "Group rule: speed difference bound as fraction of the higher speed")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--group-stability", opt.config.group_stability,
                    "Video-group co-grouping fraction")
        ->check(CLI::Range(0.0, 1.0));
    cmd->add_option("--cone-half-angle", opt.config.cone_half_angle_deg,
                    "Preferred-distance cone half angle (deg)")
        ->check(CLI::PositiveNumber);
    cmd->add_option_function<std::string>(
           "--ocean-mode",
           [&opt](const std::string& v) {
               opt.config.ocean_mode = v == "literal" ? OceanMode::literal : OceanMode::normalized;
           },
           "Dimension scaling: normalized|literal")
        ->check(CLI::IsMember({"normalized", "literal"}));
    cmd->add_option_function<std::string>(
           "--emotion-mode",
           [&opt](const std::string& v) {
               opt.config.emotion_mode =
                   v == "weighted" ? EmotionMode::weighted : EmotionMode::discrete;
           },
           "Contribution mode: discrete|weighted")
        ->check(CLI::IsMember({"discrete", "weighted"}));
}

Roi parse_roi(const std::string& spec) {
    Roi roi;
    if (std::sscanf(spec.c_str(), "%lf,%lf,%lf,%lf", &roi.x, &roi.y, &roi.width, &roi.height) !=
        4) {
        throw Error("bad --roi, expected 'x,y,width,height': " + spec);
    }
    if (roi.width <= 0 || roi.height <= 0) throw Error("--roi extents must be positive");
    return roi;
}

SceneDataset load_input(InputOptions& opt) {
    SceneDataset dataset = load_dataset(opt.input, opt.meta);
    if (!opt.homography.empty()) {
        std::ifstream in(opt.homography);
        if (!in) throw IoError("cannot open correspondence file: " + opt.homography);
        const auto correspondences = parse_correspondences(in);
        dataset = rectify(dataset, estimate_homography(correspondences));
    }
    if (dataset.units == Units::image_pixels) {
        throw Error("dataset is in image pixels; provide --homography to rectify it");
    }
    if (!opt.roi_spec.empty()) opt.config.roi = parse_roi(opt.roi_spec);
    return dataset;
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
    } else {
        write_file(out_path, text);
    }
}

int run_analyze(InputOptions& opt, const std::string& out_dir, bool emit_plots) {
    const SceneDataset dataset = load_input(opt);
    const VideoAnalysis analysis = analyze_video(dataset, opt.config);

    fs::create_directories(out_dir);
    std::vector<std::string> written;
    const auto write_artifact = [&](const char* name, const std::string& text) {
        const std::string path = (fs::path(out_dir) / name).string();
        write_file(path, text);
        written.push_back(path);
    };
    try {
        write_artifact("features.csv", features_csv(analysis));
        write_artifact("groups.json", groups_json(analysis, opt.config));
        write_artifact("ocean.json", ocean_json(analysis, opt.config));
        write_artifact("emotions.json", emotions_json(analysis, opt.config));
        write_artifact("summary.json", summary_json(analysis, opt.config));
        if (emit_plots) {
            write_artifact("plots.csv", long_csv(long_rows(analysis.summary)));
        }
    } catch (...) {
        for (const auto& path : written) {
            std::error_code ec;
            fs::remove(path, ec);  // no partial report directories
        }
        throw;
    }
    std::cerr << "wrote " << written.size() << " report files to " << out_dir << "\n";
    return 0;
}

int run_single_report(InputOptions& opt, const std::string& what, const std::string& out_path) {
    const SceneDataset dataset = load_input(opt);
    const VideoAnalysis analysis = analyze_video(dataset, opt.config);
    if (what == "groups") {
        emit(groups_json(analysis, opt.config), out_path);
    } else if (what == "ocean") {
        emit(ocean_json(analysis, opt.config), out_path);
    } else if (what == "emotion") {
        emit(emotions_json(analysis, opt.config), out_path);
    } else if (what == "distance") {
        emit(preferred_distance_json(analysis.preferred, analysis.dataset.label), out_path);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"crowdtraits: personality and emotion estimates from pedestrian trajectories"};
    app.require_subcommand(1);

    // analyze
    InputOptions analyze_opt;
    std::string analyze_out = "crowdtraits_out";
    bool emit_plots = false;
    auto* analyze_cmd =
        app.add_subcommand("analyze", "Run the full pipeline and write all report files");
    add_input_options(analyze_cmd, analyze_opt);
    analyze_cmd->add_option("-o,--out", analyze_out, "Output directory");
    analyze_cmd->add_flag("--emit-plots", emit_plots, "Also write plot-ready long-format CSV");

    // groups / ocean / emotion / distance: single-artifact reports
    InputOptions groups_opt, ocean_opt, emotion_opt, distance_opt;
    std::string groups_out, ocean_out, emotion_out, distance_out;
    auto* groups_cmd = app.add_subcommand("groups", "Detect social groups and report them");
    add_input_options(groups_cmd, groups_opt);
    groups_cmd->add_option("-o,--out", groups_out, "Output file (default stdout)");
    auto* ocean_cmd = app.add_subcommand("ocean", "Report personality vectors");
    add_input_options(ocean_cmd, ocean_opt);
    ocean_cmd->add_option("-o,--out", ocean_out, "Output file (default stdout)");
    auto* emotion_cmd = app.add_subcommand("emotion", "Report emotion vectors");
    add_input_options(emotion_cmd, emotion_opt);
    emotion_cmd->add_option("-o,--out", emotion_out, "Output file (default stdout)");
    auto* distance_cmd =
        app.add_subcommand("distance", "Report preferred front-neighbor distances");
    add_input_options(distance_cmd, distance_opt);
    distance_cmd->add_option("-o,--out", distance_out, "Output file (default stdout)");

    // correlate
    std::string corr_a, corr_b, corr_out;
    auto* corr_cmd = app.add_subcommand("correlate", "Pearson correlation of two summaries");
    corr_cmd->add_option("-a", corr_a, "First summary.json")->required();
    corr_cmd->add_option("-b", corr_b, "Second summary.json")->required();
    corr_cmd->add_option("-o,--out", corr_out, "Output file (default stdout)");

    // synth
    synth::ScenarioSpec spec;
    std::string synth_kind = "lone_walker";
    std::string synth_out = "scenario";
    double synth_frame_rate = 25.0;
    auto* synth_cmd = app.add_subcommand("synth", "Generate a synthetic trajectory dataset");
    synth_cmd->add_option("--kind", synth_kind, "lone_walker|lockstep_pair|cluster|corridor_loop")
        ->check(CLI::IsMember({"lone_walker", "lockstep_pair", "cluster", "corridor_loop"}));
    synth_cmd->add_option("-n,--n", spec.n, "Number of walkers");
    synth_cmd->add_option("--spacing", spec.spacing, "Spacing (m)");
    synth_cmd->add_option("--speed", spec.speed, "Speed (m/frame)");
    synth_cmd->add_option("--frames", spec.frames, "Frame count");
    synth_cmd->add_option("--seed", spec.seed, "Random seed");
    synth_cmd->add_option("--frame-rate", synth_frame_rate, "Frames per second for the sidecar");
    synth_cmd->add_option("-o,--out", synth_out, "Output prefix (writes PREFIX.csv, PREFIX.meta.json)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (analyze_cmd->parsed()) {
            return run_analyze(analyze_opt, analyze_out, emit_plots);
        }
        if (groups_cmd->parsed()) return run_single_report(groups_opt, "groups", groups_out);
        if (ocean_cmd->parsed()) return run_single_report(ocean_opt, "ocean", ocean_out);
        if (emotion_cmd->parsed()) return run_single_report(emotion_opt, "emotion", emotion_out);
        if (distance_cmd->parsed()) {
            return run_single_report(distance_opt, "distance", distance_out);
        }
        if (corr_cmd->parsed()) {
            const VideoSummary a = read_summary_json(read_file(corr_a));
            const VideoSummary b = read_summary_json(read_file(corr_b));
            emit(correlation_json(correlate_summaries(a, b)), corr_out);
            return 0;
        }
        if (synth_cmd->parsed()) {
            if (synth_kind == "lone_walker") spec.kind = synth::ScenarioKind::lone_walker;
            if (synth_kind == "lockstep_pair") spec.kind = synth::ScenarioKind::lockstep_pair;
            if (synth_kind == "cluster") spec.kind = synth::ScenarioKind::cluster;
            if (synth_kind == "corridor_loop") spec.kind = synth::ScenarioKind::corridor_loop;
            SceneDataset dataset = synth::generate(spec);
            dataset.frame_rate = synth_frame_rate;
            save_dataset(dataset, synth_out + ".csv", synth_out + ".meta.json");
            std::cerr << "wrote " << synth_out << ".csv and " << synth_out << ".meta.json\n";
            return 0;
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
