#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "vglove/hand.hpp"
#include "vglove/manifest.hpp"
#include "vglove/net.hpp"
#include "vglove/render.hpp"
#include "vglove/segment.hpp"
#include "vglove/synth.hpp"

namespace vglove {

enum class Stage : int {
    Decode = 0, Threshold, Distance, Palm, Keypoint, Render, Compose, Inference
};
inline constexpr int kStageCount = 8;
const char* stage_name(Stage s);

/// Per-frame stage durations in milliseconds, monotonic clock. The total is
/// the sum of all recorded stages, so total >= max(stage) by construction.
struct StageTimings {
    std::array<double, kStageCount> ms{};
    double& operator[](Stage s) { return ms[static_cast<int>(s)]; }
    double operator[](Stage s) const { return ms[static_cast<int>(s)]; }
    double total_ms() const;
};

struct PipelineConfig {
    int threshold_mm = kDefaultThresholdMm;
    int smooth_window = 5;
    int input_size = kDefaultNetInputSize;
    Connectivity metric = Connectivity::CityBlock;
    GloveStyle style{};
    bool keep_glove_frame = false;  // also render the glove-over-depth debug image
};

struct FrameResult {
    std::int64_t frame_id = 0;
    bool no_hand = false;  // empty mask: later stages skipped
    ClassificationResult result{};
    StageTimings timings{};
    std::optional<RgbFrame> glove;  // present when keep_glove_frame is set
};

/// Streaming orchestrator: threshold -> binary -> distance transform ->
/// palm estimate -> smooth -> glove render -> compose -> predict.
/// Holds the one palm smoother for its stream; feed frames in order.
class Pipeline {
public:
    Pipeline(const GestureModel& model, PipelineConfig cfg);

    FrameResult process(const RgbdFrame& frame, const HandKeypoints& kps);
    void reset() { smoother_.reset(); }

private:
    const GestureModel& model_;
    PipelineConfig cfg_;
    PalmSmoother smoother_;
};

// Net-input tensor for one stored record, stages applied in pipeline order
// with a per-frame smoother (window 1): manifest records are independent
// poses, not a temporal stream. Returns nullopt when the frame has no hand.
std::optional<NetInput> preprocess_record(const RgbdFrame& frame, const HandKeypoints& kps,
                                          const PipelineConfig& cfg);

std::vector<TrainingSample> prepare_samples(const Manifest& manifest, Split split,
                                            const PipelineConfig& cfg);

/// Table-1 style accounting. Accuracy is always recomputed from the counts.
struct AccuracyTable {
    std::array<int, kGestureCount> correct{};
    std::array<int, kGestureCount> attempted{};

    int total_correct() const;
    int total_attempted() const;
    double accuracy_pct(int cls) const;
    double overall_pct() const;
    std::string render() const;
};

struct EvalReport {
    AccuracyTable table;
    // confusion[true][predicted]; row sums equal attempted counts
    std::array<std::array<int, kGestureCount>, kGestureCount> confusion{};
    std::string render() const;
};

// Runs the pipeline over a manifest split and tallies per-class results.
// "No hand" frames count as incorrect.
EvalReport evaluate(const GestureModel& model, const Manifest& manifest, Split split,
                    const PipelineConfig& cfg);

struct StageStats {
    double mean = 0, median = 0, p95 = 0;
};

struct BenchReport {
    int frames = 0;
    std::array<StageStats, kStageCount> stages{};
    StageStats total{};
    bool within_135ms = false;  // median end-to-end against the latency budget
    bool within_180ms = false;  // human visual-reaction bound
    std::string render() const;
};

// Latency over n in-memory synthetic frames after 5 warm-up frames.
BenchReport bench(const GestureModel& model, const SynthParams& params, int n_frames,
                  const PipelineConfig& cfg);

// Streams a manifest through one Pipeline in frame order.
void run_pipeline(const GestureModel& model, const Manifest& manifest, const PipelineConfig& cfg,
                  const std::function<void(const FrameResult&)>& sink);

}  // namespace vglove
