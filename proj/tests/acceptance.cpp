// Acceptance suite: one pass/fail line per criterion. Exit code is the
// number of failed criteria.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <random>
#include <vector>

#include "vglove/codec.hpp"
#include "vglove/pipeline.hpp"

using namespace vglove;
namespace fs = std::filesystem;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Criterion {
    int id;
    const char* text;
    bool passed;
    std::string detail;
};

std::vector<Criterion> results;

void record(int id, const char* text, bool ok, std::string detail = "") {
    std::printf("[%s] criterion %d: %s%s%s\n", ok ? "PASS" : "FAIL", id, text,
                detail.empty() ? "" : " -- ", detail.c_str());
    results.push_back({id, text, ok, std::move(detail)});
    std::fflush(stdout);
}

// ---- 1: distance-transform oracle equivalence -----------------------------

void criterion_1() {
    auto t0 = Clock::now();
    std::mt19937 rng(2024);
    bool ok = true;
    for (int i = 0; i < 1000 && ok; ++i) {
        int w = 1 + rng() % 16, h = 1 + rng() % 16;
        BinaryMask m(w, h);
        for (auto& b : m.bits) b = rng() % 2;
        if (distance_transform(m) != dt_oracle(m)) ok = false;
    }
    double secs = seconds_since(t0);
    char buf[64];
    std::snprintf(buf, sizeof buf, "1000 masks in %.2f s", secs);
    record(1, "two-pass distance transform equals the brute-force oracle", ok && secs < 10.0, buf);
}

// ---- 2: segmentation law ---------------------------------------------------

void criterion_2() {
    std::mt19937 rng(7);
    bool ok = true;
    for (int i = 0; i < 100 && ok; ++i) {
        int w = 1 + rng() % 64, h = 1 + rng() % 64;
        RgbFrame color(w, h);
        DepthFrame depth(w, h);
        for (auto& d : depth.depths) d = static_cast<std::uint16_t>(rng() % 1200);
        RgbdFrame frame(std::move(color), std::move(depth), i);
        SegmentedFrame seg = depth_threshold(frame, 500);
        for (std::size_t p = 0; p < frame.depth.depths.size(); ++p) {
            std::uint16_t d = frame.depth.depths[p];
            if (seg.mask.bits[p] != ((d > 0 && d <= 500) ? 1 : 0)) ok = false;
        }
    }
    SynthParams params;
    params.depth_noise_sigma_mm = 0;
    for (int i = 0; i < 10 && ok; ++i) {
        auto frng = frame_rng(params, i);
        SynthSample s = synth_frame(static_cast<GestureLabel>(i % kGestureCount), params, frng);
        if (depth_threshold(s.frame, 500).mask != s.truth_mask) ok = false;
    }
    record(2, "mask(p)=1 iff 0 < depth <= 500 mm; noiseless synthetic masks recovered exactly",
           ok);
}

// ---- 3: palm geometry ------------------------------------------------------

void criterion_3() {
    std::mt19937 rng(99);
    bool ok = true;
    for (int i = 0; i < 500 && ok; ++i) {
        int w = 1 + rng() % 24, h = 1 + rng() % 24;
        BinaryMask m(w, h);
        for (auto& b : m.bits) b = rng() % 3 > 0;
        DistanceMap d = distance_transform(m);
        PalmEstimate est = estimate_palm(d);
        std::int32_t mx = 0;
        for (auto v : d.values) mx = std::max(mx, v);
        if (!est.valid) {
            if (mx != 0) ok = false;
            continue;
        }
        if (d.at(est.center_row, est.center_col) != mx) ok = false;
        for (int r = 0; r < h && ok; ++r)
            for (int c = 0; c < w; ++c)
                if (std::abs(r - est.center_row) + std::abs(c - est.center_col) <=
                        est.radius - 1 &&
                    !m.at(r, c))
                    ok = false;
    }
    record(3, "palm argmax correctness and inscribed-ball property on 500 random masks", ok);
}

// ---- 4: smoother -----------------------------------------------------------

void criterion_4() {
    std::mt19937 rng(13);
    bool ok = true;
    for (int seq = 0; seq < 1000 && ok; ++seq) {
        PalmSmoother s(5);
        std::vector<PalmEstimate> window;
        int len = 1 + rng() % 30;
        for (int t = 0; t < len; ++t) {
            PalmEstimate e;
            e.valid = rng() % 10 != 0;
            e.center_row = static_cast<int>(rng() % 480);
            e.center_col = static_cast<int>(rng() % 640);
            e.radius = 1 + static_cast<int>(rng() % 100);
            PalmEstimate out = s.push(e);
            if (!e.valid) {
                window.clear();
                if (out.valid) ok = false;
                continue;
            }
            window.push_back(e);
            if (window.size() > 5) window.erase(window.begin());
            long sr = 0, sc = 0, srad = 0;
            for (const auto& x : window) {
                sr += x.center_row;
                sc += x.center_col;
                srad += x.radius;
            }
            long n = static_cast<long>(window.size());
            if (out.center_row != (2 * sr + n) / (2 * n) ||
                out.center_col != (2 * sc + n) / (2 * n) ||
                out.radius != (2 * srad + n) / (2 * n))
                ok = false;
        }
    }
    record(4, "streamed smoothing equals the trailing-window-of-5 mean on 1000 sequences", ok);
}

// ---- 5: gradient check -----------------------------------------------------

void criterion_5() {
    std::mt19937 rng(55);
    double worst = 0;
    for (int pair = 0; pair < 10; ++pair) {
        GestureModel m = init_model(Architecture{}, 500 + pair);
        TrainingSample s;
        s.input = NetInput(m.arch.input_size);
        for (auto& v : s.input.data) v = static_cast<float>(rng() % 1000) / 999.0f;
        s.label = pair % kGestureCount;
        worst = std::max(worst, grad_check(m, s, pair, 1000));
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "max relative error %.3g", worst);
    record(5, "analytic gradients within 1e-4 of central differences on 10 pairs",
           worst <= 1e-4, buf);
}

// ---- 6: determinism --------------------------------------------------------

void criterion_6(const fs::path& work) {
    SynthParams params;
    params.seed = 4242;
    std::array<int, kGestureCount> counts;
    counts.fill(10);
    fs::path d1 = work / "det_a", d2 = work / "det_b";
    synth_dataset(counts, params, d1);
    synth_dataset(counts, params, d2);
    bool synth_ok = true;
    int compared = 0;
    for (const auto& entry : fs::directory_iterator(d1)) {
        ++compared;
        if (read_file(entry.path()) != read_file(d2 / entry.path().filename())) synth_ok = false;
    }
    synth_ok = synth_ok && compared == 5 * 10 * 3 + 1;

    Manifest manifest = load_manifest(d1 / "manifest.json");
    PipelineConfig cfg;
    cfg.input_size = 32;
    auto samples = prepare_samples(manifest, Split::Train, cfg);
    Architecture arch;
    arch.input_size = 32;
    TrainConfig tcfg;
    tcfg.epochs = 2;
    bool train_ok =
        serialize_model(train(samples, arch, tcfg)) == serialize_model(train(samples, arch, tcfg));
    record(6, "fixed-seed synth datasets and train checkpoints are byte-identical",
           synth_ok && train_ok);
}

// ---- 7: desk-scale Table-1 analogue ---------------------------------------

GestureModel criterion_7(const fs::path& work) {
    auto t0 = Clock::now();
    SynthParams params;  // defaults: 640x480, seed 42
    std::array<int, kGestureCount> counts;
    counts.fill(300);
    fs::path dir = work / "dataset_1500";
    Manifest manifest = load_manifest(synth_dataset(counts, params, dir));

    PipelineConfig cfg;  // defaults: threshold 500, input 64
    auto samples = prepare_samples(manifest, Split::Train, cfg);
    GestureModel model = train(samples, Architecture{}, TrainConfig{});

    EvalReport report = evaluate(model, manifest, Split::Test, cfg);
    std::printf("%s", report.render().c_str());

    double secs = seconds_since(t0);
    bool overall_ok = report.table.overall_pct() >= 90.0;
    bool classes_ok = true;
    for (int c = 0; c < kGestureCount; ++c)
        if (report.table.accuracy_pct(c) < 80.0) classes_ok = false;
    bool attempted_ok = report.table.total_attempted() == 150;  // 10% of 1500
    char buf[128];
    std::snprintf(buf, sizeof buf, "overall %.2f%% on %d test frames in %.0f s",
                  report.table.overall_pct(), report.table.total_attempted(), secs);
    record(7, "1500-frame synthetic run: overall >= 90%, each class >= 80%, within 15 min",
           overall_ok && classes_ok && attempted_ok && secs <= 900.0, buf);
    return model;
}

// ---- 8: latency budget ------------------------------------------------------

void criterion_8(const GestureModel& model) {
    SynthParams params;  // 640x480 defaults
    PipelineConfig cfg;
    BenchReport report = bench(model, params, 100, cfg);
    std::printf("%s", report.render().c_str());
    char buf[64];
    std::snprintf(buf, sizeof buf, "median %.2f ms", report.total.median);
    record(8, "median end-to-end latency <= 135 ms over 100 synthetic 640x480 frames",
           report.within_135ms && report.within_180ms, buf);
}

// ---- 9: round-trips ---------------------------------------------------------

void criterion_9() {
    std::mt19937 rng(77);
    bool ok = true;
    for (int i = 0; i < 100 && ok; ++i) {
        int w = 1 + rng() % 32, h = 1 + rng() % 32;
        RgbFrame f(w, h);
        for (auto& p : f.pixels) p = static_cast<std::uint8_t>(rng());
        auto bytes = encode_rgb(f);
        if (decode_rgb(bytes) != f || encode_rgb(decode_rgb(bytes)) != bytes) ok = false;

        DepthFrame d(w, h);
        for (auto& v : d.depths) v = static_cast<std::uint16_t>(rng());
        auto dbytes = encode_depth(d);
        if (decode_depth(dbytes) != d || encode_depth(decode_depth(dbytes)) != dbytes) ok = false;
    }
    GestureModel m = init_model(Architecture{}, 123);
    m.epochs_trained = 4;
    m.loss_curve = {1.2f, 0.8f};
    auto bytes = serialize_model(m);
    if (deserialize_model(bytes) != m || serialize_model(deserialize_model(bytes)) != bytes)
        ok = false;
    record(9, "codec and checkpoint round-trips are bit-exact", ok);
}

}  // namespace

int main() {
    fs::path work = fs::temp_directory_path() / "vglove_acceptance";
    fs::remove_all(work);
    fs::create_directories(work);

    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6(work);
    GestureModel model = criterion_7(work);
    criterion_8(model);
    criterion_9();

    fs::remove_all(work);

    int failed = 0;
    for (const auto& c : results)
        if (!c.passed) ++failed;
    std::printf("%d/%zu criteria passed\n", static_cast<int>(results.size()) - failed,
                results.size());
    return failed;
}
