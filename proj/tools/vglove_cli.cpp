#include <cstdio>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "vglove/codec.hpp"
#include "vglove/pipeline.hpp"

namespace {

using namespace vglove;

struct GlobalOpts {
    int threshold_mm = kDefaultThresholdMm;
    int smooth_window = 5;
    int input_size = kDefaultNetInputSize;
    std::uint64_t seed = 42;
    std::string config_path;
    std::string metric = "city-block";
    SynthParams synth;
};

Connectivity parse_metric(const std::string& name) {
    if (name == "city-block") return Connectivity::CityBlock;
    if (name == "chessboard") return Connectivity::Chessboard;
    throw DataError("unknown metric: " + name + " (expected city-block or chessboard)");
}

Color parse_color(const nlohmann::json& j) {
    return Color{j.at(0).get<std::uint8_t>(), j.at(1).get<std::uint8_t>(),
                 j.at(2).get<std::uint8_t>()};
}

// The config file overrides defaults; explicit command-line flags win over
// both (CLI11 parses after this runs only for flags the user did not set,
// so the config is applied as new defaults before parsing).
void apply_config(GlobalOpts& g, GloveStyle& style, const std::string& path) {
    auto bytes = read_file(path);
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(bytes.begin(), bytes.end());
    } catch (const nlohmann::json::exception& e) {
        throw DataError(std::string("config parse error: ") + e.what());
    }
    g.threshold_mm = j.value("threshold_mm", g.threshold_mm);
    g.smooth_window = j.value("smooth_window", g.smooth_window);
    g.input_size = j.value("input_size", g.input_size);
    g.seed = j.value("seed", g.seed);
    g.metric = j.value("metric", g.metric);
    if (j.contains("synth")) g.synth = SynthParams::from_json(j["synth"].dump());
    if (j.contains("style")) {
        const auto& s = j["style"];
        if (s.contains("palm")) style.palm = parse_color(s["palm"]);
        if (s.contains("thumb")) style.thumb = parse_color(s["thumb"]);
        if (s.contains("index")) style.index = parse_color(s["index"]);
        if (s.contains("middle")) style.middle = parse_color(s["middle"]);
        if (s.contains("ring")) style.ring = parse_color(s["ring"]);
        if (s.contains("pinky")) style.pinky = parse_color(s["pinky"]);
        style.line_thickness = s.value("line_thickness", style.line_thickness);
        style.circle_thickness = s.value("circle_thickness", style.circle_thickness);
        style.validate();
    }
}

PipelineConfig make_pipeline_config(const GlobalOpts& g, const GloveStyle& style) {
    PipelineConfig cfg;
    cfg.threshold_mm = g.threshold_mm;
    cfg.smooth_window = g.smooth_window;
    cfg.input_size = g.input_size;
    cfg.metric = parse_metric(g.metric);
    cfg.style = style;
    return cfg;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Real-time gesture recognition pipeline with virtual glove markers"};
    app.require_subcommand(1);

    GlobalOpts g;
    GloveStyle style;
    app.add_option("--threshold-mm", g.threshold_mm, "Depth segmentation threshold (mm)");
    app.add_option("--smooth-window", g.smooth_window, "Palm moving-average window (frames)");
    app.add_option("--input-size", g.input_size, "Classifier input resolution");
    app.add_option("--seed", g.seed, "Base RNG seed");
    auto* config_opt =
        app.add_option("--config", g.config_path, "JSON config overriding defaults");

    // synth
    auto* synth_cmd = app.add_subcommand("synth", "Generate a synthetic RGB-D gesture dataset");
    std::string synth_out = "dataset";
    int synth_count = 300;
    double train_frac = 0.8, val_frac = 0.1;
    synth_cmd->add_option("--out", synth_out, "Output directory");
    synth_cmd->add_option("--count", synth_count, "Frames per gesture class");
    synth_cmd->add_option("--train-frac", train_frac, "Training split fraction");
    synth_cmd->add_option("--val-frac", val_frac, "Validation split fraction");

    // segment
    auto* seg_cmd = app.add_subcommand("segment", "Depth-threshold one frame pair (debug dump)");
    std::string seg_color, seg_depth, seg_out_color, seg_out_mask;
    seg_cmd->add_option("--color", seg_color, "Input PPM")->required();
    seg_cmd->add_option("--depth", seg_depth, "Input 16-bit PGM")->required();
    seg_cmd->add_option("--out-color", seg_out_color, "Segmented color PPM");
    seg_cmd->add_option("--out-mask", seg_out_mask, "Binary mask PGM");

    // dt
    auto* dt_cmd = app.add_subcommand("dt", "Distance transform of a mask (debug dump)");
    std::string dt_mask, dt_out;
    dt_cmd->add_option("--mask", dt_mask, "Input mask PGM (0/255)")->required();
    dt_cmd->add_option("--out", dt_out, "Output PGM, values clamped to 255")->required();

    // glove
    auto* glove_cmd = app.add_subcommand("glove", "Render the virtual glove for one frame");
    std::string gl_color, gl_depth, gl_kps, gl_out;
    glove_cmd->add_option("--color", gl_color, "Input PPM")->required();
    glove_cmd->add_option("--depth", gl_depth, "Input 16-bit PGM")->required();
    glove_cmd->add_option("--keypoints", gl_kps, "Keypoint JSON")->required();
    glove_cmd->add_option("--out", gl_out, "Output PPM")->required();

    // train
    auto* train_cmd = app.add_subcommand("train", "Train the gesture classifier");
    std::string train_manifest, train_out = "model.glvc";
    TrainConfig tcfg;
    train_cmd->add_option("--manifest", train_manifest, "Dataset manifest")->required();
    train_cmd->add_option("--out", train_out, "Checkpoint path");
    train_cmd->add_option("--epochs", tcfg.epochs, "Training epochs");
    train_cmd->add_option("--lr", tcfg.learning_rate, "Learning rate");
    train_cmd->add_option("--batch", tcfg.batch_size, "Mini-batch size");

    // eval
    auto* eval_cmd = app.add_subcommand("eval", "Evaluate a model on a manifest split");
    std::string eval_manifest, eval_model, eval_split = "test";
    eval_cmd->add_option("--manifest", eval_manifest, "Dataset manifest")->required();
    eval_cmd->add_option("--model", eval_model, "Checkpoint path")->required();
    eval_cmd->add_option("--split", eval_split, "train|validation|test");

    // bench
    auto* bench_cmd = app.add_subcommand("bench", "Per-stage latency benchmark");
    std::string bench_model;
    int bench_frames = 100;
    bench_cmd->add_option("--model", bench_model, "Checkpoint path")->required();
    bench_cmd->add_option("--frames", bench_frames, "Frames to measure (>= 30)");

    // run
    auto* run_cmd = app.add_subcommand("run", "Stream a manifest through the pipeline");
    std::string run_manifest, run_model;
    run_cmd->add_option("--manifest", run_manifest, "Dataset manifest")->required();
    run_cmd->add_option("--model", run_model, "Checkpoint path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (*config_opt) apply_config(g, style, g.config_path);
        g.synth.seed = g.seed;
        PipelineConfig pcfg = make_pipeline_config(g, style);

        if (*synth_cmd) {
            g.synth.validate(g.threshold_mm);
            std::array<int, kGestureCount> counts;
            counts.fill(synth_count);
            auto manifest = synth_dataset(counts, g.synth, synth_out, train_frac, val_frac);
            std::cout << manifest.string() << "\n";
        } else if (*seg_cmd) {
            RgbdFrame frame = load_frame_pair(seg_color, seg_depth, 0);
            SegmentedFrame seg = depth_threshold(frame, g.threshold_mm);
            if (!seg_out_color.empty()) write_file(seg_out_color, encode_rgb(seg.color));
            if (!seg_out_mask.empty()) write_file(seg_out_mask, encode_mask(seg.mask));
            std::cout << "foreground pixels: " << seg.mask.count_ones() << "\n";
        } else if (*dt_cmd) {
            BinaryMask mask = decode_mask(read_file(dt_mask));
            DistanceMap dmap = distance_transform(mask, pcfg.metric);
            write_file(dt_out, encode_distance_pgm(dmap));
            PalmEstimate palm = estimate_palm(dmap);
            std::cout << "metric: " << to_string(dmap.metric) << "\n";
            if (palm.valid)
                std::cout << "palm center (" << palm.center_row << "," << palm.center_col
                          << ") radius " << palm.radius << "\n";
            else
                std::cout << "no foreground\n";
        } else if (*glove_cmd) {
            RgbdFrame frame = load_frame_pair(gl_color, gl_depth, 0);
            HandKeypoints kps = load_keypoints(gl_kps);
            SegmentedFrame seg = depth_threshold(frame, g.threshold_mm);
            DistanceMap dmap = distance_transform(to_binary(seg), pcfg.metric);
            PalmEstimate palm = estimate_palm(dmap);
            GloveRender render = render_glove(depth_to_gray(seg), kps, palm, style);
            write_file(gl_out, encode_rgb(render.image));
            std::cout << (render.glove_drawn ? "glove rendered" : "no hand, base written") << "\n";
        } else if (*train_cmd) {
            tcfg.seed = g.seed;
            Manifest manifest = load_manifest(train_manifest);
            auto samples = prepare_samples(manifest, Split::Train, pcfg);
            Architecture arch;
            arch.input_size = g.input_size;
            GestureModel model = train(samples, arch, tcfg);
            save_model(model, train_out);
            std::cout << "trained on " << samples.size() << " samples, final loss "
                      << (model.loss_curve.empty() ? 0.f : model.loss_curve.back()) << "\n";
            EvalReport val = evaluate(model, manifest, Split::Validation, pcfg);
            std::printf("validation accuracy: %.2f%%\n", val.table.overall_pct());
            std::cout << "checkpoint written to " << train_out << "\n";
        } else if (*eval_cmd) {
            Manifest manifest = load_manifest(eval_manifest);
            GestureModel model = load_model(eval_model);
            EvalReport report = evaluate(model, manifest, split_from_name(eval_split), pcfg);
            std::cout << report.render();
        } else if (*bench_cmd) {
            GestureModel model = load_model(bench_model);
            g.synth.validate(g.threshold_mm);
            BenchReport report = bench(model, g.synth, bench_frames, pcfg);
            std::cout << report.render();
        } else if (*run_cmd) {
            Manifest manifest = load_manifest(run_manifest);
            GestureModel model = load_model(run_model);
            run_pipeline(model, manifest, pcfg, [](const FrameResult& res) {
                nlohmann::json j{{"frame_id", res.frame_id},
                                 {"no_hand", res.no_hand},
                                 {"total_ms", res.timings.total_ms()}};
                if (!res.no_hand) {
                    j["label"] = label_name(res.result.label);
                    j["probabilities"] = res.result.probabilities;
                }
                std::cout << j.dump() << "\n";
            });
        }
    } catch (const DataError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
