#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "vglove/manifest.hpp"
#include "vglove/render.hpp"

namespace vglove {

/// Fixed topology: conv 3x3 (pad 1) -> relu -> maxpool 2x2, twice, then
/// dense -> relu -> dense -> softmax. Only the input size varies.
struct Architecture {
    int input_size = kDefaultNetInputSize;  // must be divisible by 4
    int in_channels = 4;
    int conv1_channels = 8;
    int conv2_channels = 16;
    int dense_units = 32;
    int classes = kGestureCount;

    void validate() const;
    std::size_t weight_count() const;
    std::string to_json() const;
    static Architecture from_json(const std::string& text);
    friend bool operator==(const Architecture&, const Architecture&) = default;
};

struct TrainConfig {
    float learning_rate = 0.01f;
    int batch_size = 32;
    int epochs = 30;
    std::uint64_t seed = 42;
    double train_frac = 0.8;
    double val_frac = 0.1;

    void validate() const;
};

/// Weights + architecture + training provenance.
struct GestureModel {
    Architecture arch;
    std::vector<float> weights;
    std::uint64_t seed = 0;
    int epochs_trained = 0;
    std::vector<float> loss_curve;  // mean training cross-entropy per epoch

    friend bool operator==(const GestureModel&, const GestureModel&) = default;
};

struct ClassificationResult {
    std::array<float, kGestureCount> probabilities{};
    GestureLabel label = GestureLabel::OneFinger;
};

struct TrainingSample {
    NetInput input;
    int label = 0;
};

// He fan-in initialization from the seeded generator; biases zero.
GestureModel init_model(const Architecture& arch, std::uint64_t seed);

std::array<float, kGestureCount> forward(const GestureModel& model, const NetInput& x);

// Argmax of forward; ties go to the lowest class code.
ClassificationResult predict(const GestureModel& model, const NetInput& x);

// Mini-batch SGD over the given samples (already preprocessed tensors).
// Deterministic for a fixed config seed.
GestureModel train(const std::vector<TrainingSample>& samples, const Architecture& arch,
                   const TrainConfig& cfg);

// Analytic-vs-central-finite-difference gradient comparison in double
// precision over a random subsample of at least `min_weights` weights.
// Returns the max relative error.
double grad_check(const GestureModel& model, const TrainingSample& sample,
                  std::uint64_t seed = 0, std::size_t min_weights = 1000, double h = 1e-4);

// Double-precision loss/gradient path (used by grad_check and its tests).
double loss_and_gradient_f64(const Architecture& arch, const std::vector<double>& weights,
                             const NetInput& x, int label, std::vector<double>& grad);
double loss_f64(const Architecture& arch, const std::vector<double>& weights, const NetInput& x,
                int label);

// Checkpoint: little-endian, magic "GLVC", version, JSON descriptor, raw
// float32 weights, trailing CRC32. Round-trips bit-exactly.
void save_model(const GestureModel& model, const std::filesystem::path& path);
GestureModel load_model(const std::filesystem::path& path);
std::vector<std::uint8_t> serialize_model(const GestureModel& model);
GestureModel deserialize_model(const std::vector<std::uint8_t>& bytes);

std::uint32_t crc32(const std::uint8_t* data, std::size_t len);

}  // namespace vglove
