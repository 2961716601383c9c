#include "vglove/pipeline.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <sstream>

#include "vglove/codec.hpp"

namespace vglove {

const char* stage_name(Stage s) {
    constexpr const char* names[kStageCount] = {"decode",   "threshold", "distance", "palm",
                                                "keypoint", "render",    "compose",  "inference"};
    return names[static_cast<int>(s)];
}

double StageTimings::total_ms() const {
    double t = 0;
    for (double v : ms) t += v;
    return t;
}

namespace {

using Clock = std::chrono::steady_clock;

struct StageTimer {
    StageTimings& t;
    Stage stage;
    Clock::time_point start = Clock::now();
    ~StageTimer() {
        t[stage] = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    }
};

FrameResult process_frame(const GestureModel& model, const PipelineConfig& cfg,
                          PalmSmoother& smoother, const RgbdFrame& frame,
                          const HandKeypoints& kps) {
    FrameResult out;
    out.frame_id = frame.frame_id;

    SegmentedFrame seg;
    {
        StageTimer t{out.timings, Stage::Threshold};
        seg = depth_threshold(frame, cfg.threshold_mm);
    }
    BinaryMask mask;
    DistanceMap dmap;
    {
        StageTimer t{out.timings, Stage::Distance};
        mask = to_binary(seg);
        dmap = distance_transform(mask, cfg.metric);
    }
    PalmEstimate palm;
    {
        StageTimer t{out.timings, Stage::Palm};
        palm = smoother.push(estimate_palm(dmap));
    }
    if (!palm.valid) {
        out.no_hand = true;
        return out;
    }

    RgbFrame glove_for_net;
    {
        StageTimer t{out.timings, Stage::Render};
        // The net consumes the glove over black; the depth-gray composite is
        // only produced when a debug frame was requested.
        RgbFrame black(seg.mask.width, seg.mask.height);
        glove_for_net = render_glove(black, kps, palm, cfg.style).image;
        if (cfg.keep_glove_frame)
            out.glove = render_glove(depth_to_gray(seg), kps, palm, cfg.style).image;
    }
    NetInput input;
    {
        StageTimer t{out.timings, Stage::Compose};
        input = compose_net_input(glove_for_net, seg, cfg.threshold_mm, cfg.input_size);
    }
    {
        StageTimer t{out.timings, Stage::Inference};
        out.result = predict(model, input);
    }
    return out;
}

}  // namespace

Pipeline::Pipeline(const GestureModel& model, PipelineConfig cfg)
    : model_(model), cfg_(cfg), smoother_(cfg.smooth_window) {}

FrameResult Pipeline::process(const RgbdFrame& frame, const HandKeypoints& kps) {
    return process_frame(model_, cfg_, smoother_, frame, kps);
}

std::optional<NetInput> preprocess_record(const RgbdFrame& frame, const HandKeypoints& kps,
                                          const PipelineConfig& cfg) {
    SegmentedFrame seg = depth_threshold(frame, cfg.threshold_mm);
    DistanceMap dmap = distance_transform(to_binary(seg), cfg.metric);
    PalmEstimate palm = estimate_palm(dmap);
    if (!palm.valid) return std::nullopt;
    RgbFrame black(seg.mask.width, seg.mask.height);
    RgbFrame glove = render_glove(black, kps, palm, cfg.style).image;
    return compose_net_input(glove, seg, cfg.threshold_mm, cfg.input_size);
}

std::vector<TrainingSample> prepare_samples(const Manifest& manifest, Split split,
                                            const PipelineConfig& cfg) {
    std::vector<TrainingSample> samples;
    for (const ManifestRecord* rec : manifest.select(split)) {
        RgbdFrame frame = load_frame_pair(manifest.resolve(rec->color_path),
                                          manifest.resolve(rec->depth_path), rec->frame_id);
        HandKeypoints kps = load_keypoints(manifest.resolve(rec->keypoints_path));
        auto input = preprocess_record(frame, kps, cfg);
        if (!input) continue;  // no hand; nothing to learn from
        samples.push_back({std::move(*input), static_cast<int>(rec->label)});
    }
    return samples;
}

int AccuracyTable::total_correct() const {
    int n = 0;
    for (int c : correct) n += c;
    return n;
}

int AccuracyTable::total_attempted() const {
    int n = 0;
    for (int a : attempted) n += a;
    return n;
}

double AccuracyTable::accuracy_pct(int cls) const {
    return attempted[cls] ? 100.0 * correct[cls] / attempted[cls] : 0.0;
}

double AccuracyTable::overall_pct() const {
    int att = total_attempted();
    return att ? 100.0 * total_correct() / att : 0.0;
}

namespace {

std::string fmt_pct(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f%%", v);
    return buf;
}

void row(std::ostringstream& os, const std::string& head,
         const std::array<std::string, kGestureCount + 1>& cells) {
    os << "| " << head;
    for (std::size_t i = head.size(); i < 10; ++i) os << ' ';
    for (const auto& c : cells) {
        os << "| " << c;
        for (std::size_t i = c.size(); i < 11; ++i) os << ' ';
    }
    os << "|\n";
}

}  // namespace

std::string AccuracyTable::render() const {
    std::ostringstream os;
    std::array<std::string, kGestureCount + 1> cells;
    for (int c = 0; c < kGestureCount; ++c)
        cells[c] = label_display_name(static_cast<GestureLabel>(c));
    cells[kGestureCount] = "Total";
    row(os, "-", cells);
    for (int c = 0; c < kGestureCount; ++c) cells[c] = std::to_string(correct[c]);
    cells[kGestureCount] = std::to_string(total_correct());
    row(os, "Correct", cells);
    for (int c = 0; c < kGestureCount; ++c) cells[c] = std::to_string(attempted[c]);
    cells[kGestureCount] = std::to_string(total_attempted());
    row(os, "Attempted", cells);
    for (int c = 0; c < kGestureCount; ++c) cells[c] = fmt_pct(accuracy_pct(c));
    cells[kGestureCount] = fmt_pct(overall_pct());
    row(os, "Accuracy", cells);
    return os.str();
}

std::string EvalReport::render() const {
    std::ostringstream os;
    os << table.render() << "\nConfusion matrix (rows = true, cols = predicted):\n";
    os << "            ";
    for (int c = 0; c < kGestureCount; ++c) {
        char buf[16];
        std::snprintf(buf, sizeof buf, "%11s", label_display_name(static_cast<GestureLabel>(c)));
        os << buf;
    }
    os << "\n";
    for (int r = 0; r < kGestureCount; ++r) {
        char buf[16];
        std::snprintf(buf, sizeof buf, "%-12s", label_display_name(static_cast<GestureLabel>(r)));
        os << buf;
        for (int c = 0; c < kGestureCount; ++c) {
            std::snprintf(buf, sizeof buf, "%11d", confusion[r][c]);
            os << buf;
        }
        os << "\n";
    }
    return os.str();
}

EvalReport evaluate(const GestureModel& model, const Manifest& manifest, Split split,
                    const PipelineConfig& cfg) {
    EvalReport report;
    PipelineConfig eval_cfg = cfg;
    eval_cfg.smooth_window = 1;  // records are independent poses
    PalmSmoother smoother(1);
    for (const ManifestRecord* rec : manifest.select(split)) {
        RgbdFrame frame = load_frame_pair(manifest.resolve(rec->color_path),
                                          manifest.resolve(rec->depth_path), rec->frame_id);
        HandKeypoints kps = load_keypoints(manifest.resolve(rec->keypoints_path));
        FrameResult res = process_frame(model, eval_cfg, smoother, frame, kps);
        int truth = static_cast<int>(rec->label);
        report.table.attempted[truth] += 1;
        if (!res.no_hand) {
            int pred = static_cast<int>(res.result.label);
            report.confusion[truth][pred] += 1;
            if (pred == truth) report.table.correct[truth] += 1;
        }
        // no-hand frames count as incorrect and appear in no confusion cell
    }
    return report;
}

namespace {

StageStats stats_of(std::vector<double> v) {
    StageStats s;
    if (v.empty()) return s;
    std::sort(v.begin(), v.end());
    double sum = 0;
    for (double x : v) sum += x;
    s.mean = sum / v.size();
    s.median = v[v.size() / 2];
    s.p95 = v[std::min(v.size() - 1, static_cast<std::size_t>(v.size() * 0.95))];
    return s;
}

}  // namespace

std::string BenchReport::render() const {
    std::ostringstream os;
    os << "latency over " << frames << " frames (ms)\n";
    char buf[128];
    std::snprintf(buf, sizeof buf, "%-12s %10s %10s %10s\n", "stage", "mean", "median", "p95");
    os << buf;
    for (int i = 0; i < kStageCount; ++i) {
        std::snprintf(buf, sizeof buf, "%-12s %10.3f %10.3f %10.3f\n",
                      stage_name(static_cast<Stage>(i)), stages[i].mean, stages[i].median,
                      stages[i].p95);
        os << buf;
    }
    std::snprintf(buf, sizeof buf, "%-12s %10.3f %10.3f %10.3f\n", "total", total.mean,
                  total.median, total.p95);
    os << buf;
    os << "median <= 135 ms budget: " << (within_135ms ? "yes" : "NO") << "\n";
    os << "median <= 180 ms human-reaction bound: " << (within_180ms ? "yes" : "NO") << "\n";
    return os.str();
}

BenchReport bench(const GestureModel& model, const SynthParams& params, int n_frames,
                  const PipelineConfig& cfg) {
    if (n_frames < 30) throw DataError("bench: need at least 30 frames");
    constexpr int kWarmup = 5;

    // Frame generation is not part of the measured pipeline.
    std::vector<SynthSample> frames;
    frames.reserve(n_frames + kWarmup);
    for (int i = 0; i < n_frames + kWarmup; ++i) {
        auto rng = frame_rng(params, i);
        auto label = static_cast<GestureLabel>(i % kGestureCount);
        SynthSample s = synth_frame(label, params, rng);
        s.frame.frame_id = i;
        s.keypoints.frame_id = i;
        frames.push_back(std::move(s));
    }

    Pipeline pipeline(model, cfg);
    std::array<std::vector<double>, kStageCount> per_stage;
    std::vector<double> totals;
    for (int i = 0; i < n_frames + kWarmup; ++i) {
        FrameResult res = pipeline.process(frames[i].frame, frames[i].keypoints);
        if (i < kWarmup) continue;
        for (int s = 0; s < kStageCount; ++s) per_stage[s].push_back(res.timings.ms[s]);
        totals.push_back(res.timings.total_ms());
    }

    BenchReport report;
    report.frames = n_frames;
    for (int s = 0; s < kStageCount; ++s) report.stages[s] = stats_of(per_stage[s]);
    report.total = stats_of(totals);
    report.within_135ms = report.total.median <= 135.0;
    report.within_180ms = report.total.median <= 180.0;
    return report;
}

void run_pipeline(const GestureModel& model, const Manifest& manifest, const PipelineConfig& cfg,
                  const std::function<void(const FrameResult&)>& sink) {
    Pipeline pipeline(model, cfg);
    for (const auto& rec : manifest.records) {
        RgbdFrame frame;
        StageTimings decode_timing;
        {
            StageTimer t{decode_timing, Stage::Decode};
            frame = load_frame_pair(manifest.resolve(rec.color_path),
                                    manifest.resolve(rec.depth_path), rec.frame_id);
        }
        HandKeypoints kps;
        {
            StageTimer t{decode_timing, Stage::Keypoint};
            kps = load_keypoints(manifest.resolve(rec.keypoints_path));
        }
        FrameResult res = pipeline.process(frame, kps);
        res.timings[Stage::Decode] = decode_timing[Stage::Decode];
        res.timings[Stage::Keypoint] = decode_timing[Stage::Keypoint];
        sink(res);
    }
}

}  // namespace vglove
