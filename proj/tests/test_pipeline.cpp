#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <filesystem>

#include "vglove/pipeline.hpp"

using namespace vglove;

namespace {

SynthParams small_params() {
    SynthParams p;
    p.width = 160;
    p.height = 120;
    p.palm_radius_min = 14;
    p.palm_radius_max = 20;
    p.finger_len_min = 22;
    p.finger_len_max = 32;
    p.finger_width_min = 5;
    p.finger_width_max = 8;
    p.translation_px_min = -10;
    p.translation_px_max = 10;
    return p;
}

PipelineConfig small_cfg() {
    PipelineConfig cfg;
    cfg.input_size = 16;
    return cfg;
}

GestureModel untrained_model(int input_size) {
    Architecture arch;
    arch.input_size = input_size;
    return init_model(arch, 1);
}

}  // namespace

TEST_CASE("a synthetic frame flows through every stage") {
    SynthParams p = small_params();
    auto rng = frame_rng(p, 0);
    SynthSample s = synth_frame(GestureLabel::TwoFingers, p, rng);
    GestureModel model = untrained_model(16);
    Pipeline pipe(model, small_cfg());
    FrameResult res = pipe.process(s.frame, s.keypoints);
    CHECK_FALSE(res.no_hand);
    float sum = 0;
    for (float v : res.result.probabilities) sum += v;
    CHECK(sum == doctest::Approx(1.0));
    double mx = *std::max_element(res.timings.ms.begin(), res.timings.ms.end());
    CHECK(res.timings.total_ms() >= mx);
}

TEST_CASE("all depths beyond the threshold produce a no-hand result") {
    RgbFrame color(32, 32);
    DepthFrame depth(32, 32);
    for (auto& d : depth.depths) d = 900;
    RgbdFrame frame(std::move(color), std::move(depth), 5);
    HandKeypoints kps;
    GestureModel model = untrained_model(16);
    Pipeline pipe(model, small_cfg());
    FrameResult res = pipe.process(frame, kps);
    CHECK(res.no_hand);
    CHECK(res.frame_id == 5);
    CHECK(res.timings[Stage::Inference] == 0.0);  // later stages skipped
    CHECK(res.timings.total_ms() >= 0.0);
}

TEST_CASE("glove debug frame is produced only on request") {
    SynthParams p = small_params();
    auto rng = frame_rng(p, 1);
    SynthSample s = synth_frame(GestureLabel::Ok, p, rng);
    GestureModel model = untrained_model(16);

    PipelineConfig cfg = small_cfg();
    Pipeline without(model, cfg);
    CHECK_FALSE(without.process(s.frame, s.keypoints).glove.has_value());

    cfg.keep_glove_frame = true;
    Pipeline with(model, cfg);
    auto res = with.process(s.frame, s.keypoints);
    REQUIRE(res.glove.has_value());
    CHECK(res.glove->width == p.width);
}

TEST_CASE("accuracy table reproduces the counts-based arithmetic") {
    AccuracyTable t;
    t.correct = {290, 271, 270, 296, 298};
    t.attempted = {300, 300, 300, 300, 300};
    CHECK(t.accuracy_pct(0) == doctest::Approx(96.67).epsilon(1e-3));
    CHECK(t.accuracy_pct(1) == doctest::Approx(90.33).epsilon(1e-3));
    CHECK(t.accuracy_pct(2) == doctest::Approx(90.00).epsilon(1e-3));
    CHECK(t.accuracy_pct(3) == doctest::Approx(98.67).epsilon(1e-3));
    CHECK(t.accuracy_pct(4) == doctest::Approx(99.33).epsilon(1e-3));
    CHECK(t.total_correct() == 1425);
    CHECK(t.total_attempted() == 1500);
    CHECK(t.overall_pct() == doctest::Approx(95.00));

    std::string table = t.render();
    CHECK(table.find("Correct") != std::string::npos);
    CHECK(table.find("Attempted") != std::string::npos);
    CHECK(table.find("Accuracy") != std::string::npos);
    CHECK(table.find("96.67%") != std::string::npos);
    CHECK(table.find("98.67%") != std::string::npos);
    CHECK(table.find("95.00%") != std::string::npos);
    CHECK(table.find("One Finger") != std::string::npos);
    CHECK(table.find("Total") != std::string::npos);
}

TEST_CASE("a perfect classifier scores 100% everywhere") {
    AccuracyTable t;
    t.correct = {10, 10, 10, 10, 10};
    t.attempted = {10, 10, 10, 10, 10};
    for (int c = 0; c < kGestureCount; ++c) CHECK(t.accuracy_pct(c) == doctest::Approx(100.0));
    CHECK(t.overall_pct() == doctest::Approx(100.0));
    CHECK(t.total_correct() == 50);
}

TEST_CASE("evaluation counts attempted frames and keeps confusion rows consistent") {
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / "vglove_pipe_eval";
    fs::remove_all(dir);
    SynthParams p = small_params();
    std::array<int, kGestureCount> counts;
    counts.fill(5);
    Manifest manifest = load_manifest(synth_dataset(counts, p, dir, 0.0, 0.0));  // all test

    GestureModel model = untrained_model(16);
    EvalReport report = evaluate(model, manifest, Split::Test, small_cfg());
    for (int c = 0; c < kGestureCount; ++c) {
        CHECK(report.table.attempted[c] == 5);
        int row_sum = 0;
        for (int pr = 0; pr < kGestureCount; ++pr) row_sum += report.confusion[c][pr];
        CHECK(row_sum == report.table.attempted[c]);
        CHECK(report.table.correct[c] == report.confusion[c][c]);
    }
    // determinism: same model and split give identical tables
    EvalReport again = evaluate(model, manifest, Split::Test, small_cfg());
    CHECK(again.table.correct == report.table.correct);
    CHECK(again.confusion == report.confusion);
    fs::remove_all(dir);
}

TEST_CASE("with window 1 the per-frame outputs are order independent") {
    SynthParams p = small_params();
    std::vector<SynthSample> frames;
    for (int i = 0; i < 4; ++i) {
        auto rng = frame_rng(p, 50 + i);
        frames.push_back(synth_frame(static_cast<GestureLabel>(i), p, rng));
        frames.back().frame.frame_id = i;
    }
    GestureModel model = untrained_model(16);
    PipelineConfig cfg = small_cfg();
    cfg.smooth_window = 1;

    Pipeline fwd(model, cfg);
    std::vector<ClassificationResult> a;
    for (const auto& f : frames) a.push_back(fwd.process(f.frame, f.keypoints).result);

    Pipeline rev(model, cfg);
    std::vector<ClassificationResult> b(frames.size());
    for (int i = static_cast<int>(frames.size()) - 1; i >= 0; --i)
        b[i] = rev.process(frames[i].frame, frames[i].keypoints).result;

    for (std::size_t i = 0; i < frames.size(); ++i) {
        CHECK(a[i].label == b[i].label);
        CHECK(a[i].probabilities == b[i].probabilities);
    }
}

TEST_CASE("bench reports per-stage stats and the budget flags") {
    SynthParams p = small_params();
    GestureModel model = untrained_model(16);
    BenchReport report = bench(model, p, 30, small_cfg());
    CHECK(report.frames == 30);
    CHECK(report.total.median >= report.stages[static_cast<int>(Stage::Distance)].median);
    CHECK(report.total.p95 >= report.total.median);
    std::string text = report.render();
    CHECK(text.find("threshold") != std::string::npos);
    CHECK(text.find("135 ms") != std::string::npos);
    CHECK(text.find("180 ms") != std::string::npos);

    CHECK_THROWS_AS(bench(model, p, 10, small_cfg()), DataError);  // needs >= 30
}

TEST_CASE("run_pipeline streams a manifest in frame order") {
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / "vglove_pipe_run";
    fs::remove_all(dir);
    SynthParams p = small_params();
    std::array<int, kGestureCount> counts{2, 0, 0, 0, 0};
    Manifest manifest = load_manifest(synth_dataset(counts, p, dir));

    GestureModel model = untrained_model(16);
    std::vector<std::int64_t> seen;
    run_pipeline(model, manifest, small_cfg(),
                 [&](const FrameResult& res) { seen.push_back(res.frame_id); });
    CHECK(seen == std::vector<std::int64_t>{0, 1});
    fs::remove_all(dir);
}
