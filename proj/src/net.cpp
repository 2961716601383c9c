#include "vglove/net.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <limits>
#include <random>

#include "json.hpp"
#include "vglove/codec.hpp"
#include "vglove/rng.hpp"

namespace vglove {

void Architecture::validate() const {
    if (input_size <= 0 || input_size % 4 != 0)
        throw DataError("architecture: input size must be a positive multiple of 4");
    if (in_channels <= 0 || conv1_channels <= 0 || conv2_channels <= 0 || dense_units <= 0 ||
        classes <= 0)
        throw DataError("architecture: all layer sizes must be positive");
}

std::size_t Architecture::weight_count() const {
    const std::size_t s4 = input_size / 4;
    std::size_t n = 0;
    n += static_cast<std::size_t>(conv1_channels) * in_channels * 9 + conv1_channels;
    n += static_cast<std::size_t>(conv2_channels) * conv1_channels * 9 + conv2_channels;
    n += static_cast<std::size_t>(dense_units) * conv2_channels * s4 * s4 + dense_units;
    n += static_cast<std::size_t>(classes) * dense_units + classes;
    return n;
}

std::string Architecture::to_json() const {
    nlohmann::json j{{"input_size", input_size},     {"in_channels", in_channels},
                     {"conv1_channels", conv1_channels}, {"conv2_channels", conv2_channels},
                     {"dense_units", dense_units},   {"classes", classes}};
    return j.dump();
}

Architecture Architecture::from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    Architecture a;
    a.input_size = j.at("input_size").get<int>();
    a.in_channels = j.at("in_channels").get<int>();
    a.conv1_channels = j.at("conv1_channels").get<int>();
    a.conv2_channels = j.at("conv2_channels").get<int>();
    a.dense_units = j.at("dense_units").get<int>();
    a.classes = j.at("classes").get<int>();
    a.validate();
    return a;
}

void TrainConfig::validate() const {
    if (learning_rate <= 0) throw DataError("train config: learning rate must be positive");
    if (batch_size < 1) throw DataError("train config: batch size must be >= 1");
    if (epochs < 1) throw DataError("train config: epochs must be >= 1");
    if (train_frac < 0 || val_frac < 0 || train_frac + val_frac > 1.0)
        throw DataError("train config: split fractions must be non-negative and sum to <= 1");
}

namespace {

struct Layout {
    int s, s2, s4, cin, c1, c2, d, k;
    std::size_t conv1_w, conv1_b, conv2_w, conv2_b, fc1_w, fc1_b, fc2_w, fc2_b, total;
    std::size_t flat;  // flattened conv output length

    explicit Layout(const Architecture& a)
        : s(a.input_size), s2(a.input_size / 2), s4(a.input_size / 4), cin(a.in_channels),
          c1(a.conv1_channels), c2(a.conv2_channels), d(a.dense_units), k(a.classes) {
        flat = static_cast<std::size_t>(c2) * s4 * s4;
        conv1_w = 0;
        conv1_b = conv1_w + static_cast<std::size_t>(c1) * cin * 9;
        conv2_w = conv1_b + c1;
        conv2_b = conv2_w + static_cast<std::size_t>(c2) * c1 * 9;
        fc1_w = conv2_b + c2;
        fc1_b = fc1_w + static_cast<std::size_t>(d) * flat;
        fc2_w = fc1_b + d;
        fc2_b = fc2_w + static_cast<std::size_t>(k) * d;
        total = fc2_b + k;
    }
};

// Forward/backward engine with reusable buffers. T = float for the model
// path, double for the gradient-check shadow path.
template <typename T>
struct Runner {
    Architecture arch;
    Layout L;

    std::vector<T> a0;           // cin x s x s
    std::vector<T> z1;           // c1 x s x s (pre-activation)
    std::vector<T> p1;           // c1 x s2 x s2 (pooled relu)
    std::vector<int> idx1;       // source index per pooled cell
    std::vector<T> z2, p2;
    std::vector<int> idx2;
    std::vector<T> z3, a3, logits, probs;
    std::vector<T> dz1, dp1, dz2, dp2, dz3, dlogits;

    explicit Runner(const Architecture& a) : arch(a), L(a) {
        arch.validate();
        a0.resize(static_cast<std::size_t>(L.cin) * L.s * L.s);
        z1.resize(static_cast<std::size_t>(L.c1) * L.s * L.s);
        p1.resize(static_cast<std::size_t>(L.c1) * L.s2 * L.s2);
        idx1.resize(p1.size());
        z2.resize(static_cast<std::size_t>(L.c2) * L.s2 * L.s2);
        p2.resize(L.flat);
        idx2.resize(p2.size());
        z3.resize(L.d);
        a3.resize(L.d);
        logits.resize(L.k);
        probs.resize(L.k);
        dz1.resize(z1.size());
        dp1.resize(p1.size());
        dz2.resize(z2.size());
        dp2.resize(p2.size());
        dz3.resize(L.d);
        dlogits.resize(L.k);
    }

    void load_input(const NetInput& x) {
        if (x.size != L.s || static_cast<int>(x.data.size()) != L.cin * L.s * L.s)
            throw DataError("net input shape mismatch: expected " + std::to_string(L.cin) + "x" +
                            std::to_string(L.s) + "x" + std::to_string(L.s));
        for (std::size_t i = 0; i < a0.size(); ++i) a0[i] = static_cast<T>(x.data[i]);
    }

    static void conv3x3(const T* in, int cin, int n, const T* w, const T* b, T* out, int cout) {
        // zero-padded 3x3, stride 1, square n x n planes
        for (int oc = 0; oc < cout; ++oc) {
            T* op = out + static_cast<std::size_t>(oc) * n * n;
            std::fill(op, op + static_cast<std::size_t>(n) * n, b[oc]);
            for (int ic = 0; ic < cin; ++ic) {
                const T* ip = in + static_cast<std::size_t>(ic) * n * n;
                const T* kw = w + (static_cast<std::size_t>(oc) * cin + ic) * 9;
                for (int ky = -1; ky <= 1; ++ky) {
                    for (int kx = -1; kx <= 1; ++kx) {
                        T wv = kw[(ky + 1) * 3 + (kx + 1)];
                        int y0 = std::max(0, -ky), y1 = std::min(n, n - ky);
                        int x0 = std::max(0, -kx), x1 = std::min(n, n - kx);
                        for (int y = y0; y < y1; ++y) {
                            T* orow = op + static_cast<std::size_t>(y) * n;
                            const T* irow = ip + static_cast<std::size_t>(y + ky) * n + kx;
                            for (int x = x0; x < x1; ++x) orow[x] += wv * irow[x];
                        }
                    }
                }
            }
        }
    }

    // max over relu(z) in each 2x2 cell; ties keep the first (row-major) index
    static void relu_pool(const T* z, int ch, int n, T* out, int* idx) {
        int half = n / 2;
        for (int c = 0; c < ch; ++c) {
            const T* zp = z + static_cast<std::size_t>(c) * n * n;
            T* op = out + static_cast<std::size_t>(c) * half * half;
            int* xp = idx + static_cast<std::size_t>(c) * half * half;
            for (int y = 0; y < half; ++y) {
                for (int x = 0; x < half; ++x) {
                    int base = (2 * y) * n + 2 * x;
                    int cand[4] = {base, base + 1, base + n, base + n + 1};
                    int best = cand[0];
                    T bv = std::max(zp[best], T(0));
                    for (int t = 1; t < 4; ++t) {
                        T v = std::max(zp[cand[t]], T(0));
                        if (v > bv) {
                            bv = v;
                            best = cand[t];
                        }
                    }
                    op[y * half + x] = bv;
                    xp[y * half + x] = static_cast<int>(c * static_cast<std::size_t>(n) * n) + best;
                }
            }
        }
    }

    void forward(const T* w) {
        conv3x3(a0.data(), L.cin, L.s, w + L.conv1_w, w + L.conv1_b, z1.data(), L.c1);
        relu_pool(z1.data(), L.c1, L.s, p1.data(), idx1.data());
        conv3x3(p1.data(), L.c1, L.s2, w + L.conv2_w, w + L.conv2_b, z2.data(), L.c2);
        relu_pool(z2.data(), L.c2, L.s2, p2.data(), idx2.data());

        const T* w1 = w + L.fc1_w;
        const T* b1 = w + L.fc1_b;
        for (int u = 0; u < L.d; ++u) {
            T acc = b1[u];
            const T* row = w1 + static_cast<std::size_t>(u) * L.flat;
            for (std::size_t i = 0; i < L.flat; ++i) acc += row[i] * p2[i];
            z3[u] = acc;
            a3[u] = acc > T(0) ? acc : T(0);
        }
        const T* w2 = w + L.fc2_w;
        const T* b2 = w + L.fc2_b;
        for (int c = 0; c < L.k; ++c) {
            T acc = b2[c];
            const T* row = w2 + static_cast<std::size_t>(c) * L.d;
            for (int u = 0; u < L.d; ++u) acc += row[u] * a3[u];
            logits[c] = acc;
        }
        T mx = *std::max_element(logits.begin(), logits.end());
        T sum = 0;
        for (int c = 0; c < L.k; ++c) {
            probs[c] = std::exp(logits[c] - mx);
            sum += probs[c];
        }
        for (int c = 0; c < L.k; ++c) probs[c] /= sum;
    }

    T loss(int label) const { return -std::log(std::max(probs[label], std::numeric_limits<T>::min())); }

    // Accumulates dL/dw into g (same layout as w). Call after forward().
    void backward(const T* w, int label, T* g) {
        for (int c = 0; c < L.k; ++c) dlogits[c] = probs[c] - (c == label ? T(1) : T(0));

        T* gw2 = g + L.fc2_w;
        T* gb2 = g + L.fc2_b;
        const T* w2 = w + L.fc2_w;
        std::fill(dz3.begin(), dz3.end(), T(0));
        for (int c = 0; c < L.k; ++c) {
            gb2[c] += dlogits[c];
            T* grow = gw2 + static_cast<std::size_t>(c) * L.d;
            const T* wrow = w2 + static_cast<std::size_t>(c) * L.d;
            for (int u = 0; u < L.d; ++u) {
                grow[u] += dlogits[c] * a3[u];
                dz3[u] += wrow[u] * dlogits[c];
            }
        }
        for (int u = 0; u < L.d; ++u)
            if (z3[u] <= T(0)) dz3[u] = T(0);

        T* gw1 = g + L.fc1_w;
        T* gb1 = g + L.fc1_b;
        const T* w1 = w + L.fc1_w;
        std::fill(dp2.begin(), dp2.end(), T(0));
        for (int u = 0; u < L.d; ++u) {
            if (dz3[u] == T(0)) continue;
            gb1[u] += dz3[u];
            T* grow = gw1 + static_cast<std::size_t>(u) * L.flat;
            const T* wrow = w1 + static_cast<std::size_t>(u) * L.flat;
            T dv = dz3[u];
            for (std::size_t i = 0; i < L.flat; ++i) {
                grow[i] += dv * p2[i];
                dp2[i] += wrow[i] * dv;
            }
        }

        // unpool + relu gate back into conv2 pre-activations
        std::fill(dz2.begin(), dz2.end(), T(0));
        for (std::size_t i = 0; i < dp2.size(); ++i) {
            int src = idx2[i];
            if (z2[src] > T(0)) dz2[src] += dp2[i];
        }
        conv_backward(p1.data(), L.c1, L.s2, w + L.conv2_w, dz2.data(), L.c2, g + L.conv2_w,
                      g + L.conv2_b, dp1.data());

        std::fill(dz1.begin(), dz1.end(), T(0));
        for (std::size_t i = 0; i < dp1.size(); ++i) {
            int src = idx1[i];
            if (z1[src] > T(0)) dz1[src] += dp1[i];
        }
        conv_backward(a0.data(), L.cin, L.s, w + L.conv1_w, dz1.data(), L.c1, g + L.conv1_w,
                      g + L.conv1_b, nullptr);
    }

    // Gradients of a 3x3 zero-padded conv: weight/bias grads plus optional
    // gradient w.r.t. the input planes.
    static void conv_backward(const T* in, int cin, int n, const T* w, const T* dout, int cout,
                              T* gw, T* gb, T* din) {
        if (din) std::fill(din, din + static_cast<std::size_t>(cin) * n * n, T(0));
        for (int oc = 0; oc < cout; ++oc) {
            const T* dop = dout + static_cast<std::size_t>(oc) * n * n;
            T bacc = 0;
            for (std::size_t i = 0; i < static_cast<std::size_t>(n) * n; ++i) bacc += dop[i];
            gb[oc] += bacc;
            for (int ic = 0; ic < cin; ++ic) {
                const T* ip = in + static_cast<std::size_t>(ic) * n * n;
                T* dip = din ? din + static_cast<std::size_t>(ic) * n * n : nullptr;
                const T* kw = w + (static_cast<std::size_t>(oc) * cin + ic) * 9;
                T* gkw = gw + (static_cast<std::size_t>(oc) * cin + ic) * 9;
                for (int ky = -1; ky <= 1; ++ky) {
                    for (int kx = -1; kx <= 1; ++kx) {
                        int y0 = std::max(0, -ky), y1 = std::min(n, n - ky);
                        int x0 = std::max(0, -kx), x1 = std::min(n, n - kx);
                        T wacc = 0;
                        T wv = kw[(ky + 1) * 3 + (kx + 1)];
                        for (int y = y0; y < y1; ++y) {
                            const T* drow = dop + static_cast<std::size_t>(y) * n;
                            const T* irow = ip + static_cast<std::size_t>(y + ky) * n + kx;
                            T* dirow = dip ? dip + static_cast<std::size_t>(y + ky) * n + kx : nullptr;
                            for (int x = x0; x < x1; ++x) {
                                wacc += drow[x] * irow[x];
                                if (dirow) dirow[x] += wv * drow[x];
                            }
                        }
                        gkw[(ky + 1) * 3 + (kx + 1)] += wacc;
                    }
                }
            }
        }
    }
};

void check_model(const GestureModel& model) {
    model.arch.validate();
    if (model.weights.size() != model.arch.weight_count())
        throw DataError("model weight count " + std::to_string(model.weights.size()) +
                        " does not match architecture (" +
                        std::to_string(model.arch.weight_count()) + ")");
}

}  // namespace

GestureModel init_model(const Architecture& arch, std::uint64_t seed) {
    arch.validate();
    Layout L(arch);
    GestureModel m;
    m.arch = arch;
    m.seed = seed;
    m.weights.assign(L.total, 0.f);
    std::mt19937_64 rng(mix_seed(seed, 0x1417ULL));
    auto fill = [&](std::size_t off, std::size_t count, double fan_in) {
        double std_dev = std::sqrt(2.0 / fan_in);
        for (std::size_t i = 0; i < count; ++i)
            m.weights[off + i] = static_cast<float>(std_dev * gaussian(rng));
    };
    fill(L.conv1_w, L.conv1_b - L.conv1_w, L.cin * 9.0);
    fill(L.conv2_w, L.conv2_b - L.conv2_w, L.c1 * 9.0);
    fill(L.fc1_w, L.fc1_b - L.fc1_w, static_cast<double>(L.flat));
    fill(L.fc2_w, L.fc2_b - L.fc2_w, static_cast<double>(L.d));
    return m;
}

std::array<float, kGestureCount> forward(const GestureModel& model, const NetInput& x) {
    check_model(model);
    Runner<float> run(model.arch);
    run.load_input(x);
    run.forward(model.weights.data());
    std::array<float, kGestureCount> out{};
    std::copy(run.probs.begin(), run.probs.end(), out.begin());
    return out;
}

ClassificationResult predict(const GestureModel& model, const NetInput& x) {
    ClassificationResult res;
    res.probabilities = forward(model, x);
    int best = 0;
    for (int c = 1; c < kGestureCount; ++c)
        if (res.probabilities[c] > res.probabilities[best]) best = c;
    res.label = static_cast<GestureLabel>(best);
    return res;
}

GestureModel train(const std::vector<TrainingSample>& samples, const Architecture& arch,
                   const TrainConfig& cfg) {
    cfg.validate();
    arch.validate();
    if (samples.empty()) throw DataError("train: no training samples");
    for (const auto& s : samples)
        if (s.label < 0 || s.label >= arch.classes)
            throw DataError("train: label out of range: " + std::to_string(s.label));

    GestureModel model = init_model(arch, cfg.seed);
    Layout L(arch);
    Runner<float> run(arch);
    std::vector<float> grad(L.total);

    std::vector<std::size_t> order(samples.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;

    for (int epoch = 0; epoch < cfg.epochs; ++epoch) {
        std::mt19937_64 rng(mix_seed(cfg.seed, 0xE70C0000ULL + epoch));
        for (std::size_t i = order.size(); i > 1; --i)
            std::swap(order[i - 1], order[uniform_int(rng, 0, static_cast<int>(i) - 1)]);

        double epoch_loss = 0;
        for (std::size_t start = 0; start < order.size(); start += cfg.batch_size) {
            std::size_t end = std::min(order.size(), start + cfg.batch_size);
            std::fill(grad.begin(), grad.end(), 0.f);
            float batch_loss = 0;
            for (std::size_t i = start; i < end; ++i) {
                const TrainingSample& s = samples[order[i]];
                run.load_input(s.input);
                run.forward(model.weights.data());
                batch_loss += run.loss(s.label);
                run.backward(model.weights.data(), s.label, grad.data());
            }
            float inv_n = 1.0f / static_cast<float>(end - start);
            if (!std::isfinite(batch_loss))
                throw DataError("train: non-finite loss at epoch " + std::to_string(epoch) +
                                ", batch starting " + std::to_string(start));
            float step = cfg.learning_rate * inv_n;
            for (std::size_t k = 0; k < L.total; ++k) model.weights[k] -= step * grad[k];
            epoch_loss += batch_loss;
        }
        model.loss_curve.push_back(static_cast<float>(epoch_loss / samples.size()));
    }
    model.epochs_trained = cfg.epochs;
    return model;
}

double loss_and_gradient_f64(const Architecture& arch, const std::vector<double>& weights,
                             const NetInput& x, int label, std::vector<double>& grad) {
    Layout L(arch);
    if (weights.size() != L.total) throw DataError("loss_and_gradient_f64: weight count mismatch");
    Runner<double> run(arch);
    run.load_input(x);
    run.forward(weights.data());
    grad.assign(L.total, 0.0);
    run.backward(weights.data(), label, grad.data());
    return run.loss(label);
}

double loss_f64(const Architecture& arch, const std::vector<double>& weights, const NetInput& x,
                int label) {
    Runner<double> run(arch);
    run.load_input(x);
    run.forward(weights.data());
    return run.loss(label);
}

double grad_check(const GestureModel& model, const TrainingSample& sample, std::uint64_t seed,
                  std::size_t min_weights, double h) {
    check_model(model);
    std::vector<double> w(model.weights.begin(), model.weights.end());
    std::vector<double> analytic;
    loss_and_gradient_f64(model.arch, w, sample.input, sample.label, analytic);

    std::vector<std::size_t> indices;
    if (w.size() <= min_weights) {
        indices.resize(w.size());
        for (std::size_t i = 0; i < w.size(); ++i) indices[i] = i;
    } else {
        std::mt19937_64 rng(mix_seed(seed, 0x6AD0ULL));
        indices.resize(min_weights);
        for (auto& ix : indices)
            ix = static_cast<std::size_t>(uniform01(rng) * static_cast<double>(w.size()));
    }

    Runner<double> run(model.arch);
    run.load_input(sample.input);
    auto rel_err_at = [&](std::size_t ix, double step) {
        double saved = w[ix];
        w[ix] = saved + step;
        run.forward(w.data());
        double lp = run.loss(sample.label);
        w[ix] = saved - step;
        run.forward(w.data());
        double lm = run.loss(sample.label);
        w[ix] = saved;
        double numeric = (lp - lm) / (2 * step);
        double a = analytic[ix];
        double denom = std::max(std::abs(a), std::abs(numeric));
        if (denom < 1e-10) return 0.0;  // both effectively zero
        return std::abs(a - numeric) / denom;
    };
    double max_rel = 0;
    for (std::size_t ix : indices) {
        double err = rel_err_at(ix, h);
        // ReLU and max-pool make the loss piecewise smooth; if the +-h
        // interval straddles a kink the central difference is meaningless.
        // Shrinking the step moves the interval off the kink, while genuine
        // gradient bugs keep a large error at every step size.
        for (double step = h / 10; err > 1e-5 && step >= h / 1000; step /= 10)
            err = std::min(err, rel_err_at(ix, step));
        max_rel = std::max(max_rel, err);
    }
    return max_rel;
}

std::uint32_t crc32(const std::uint8_t* data, std::size_t len) {
    static const auto table = [] {
        std::array<std::uint32_t, 256> t{};
        for (std::uint32_t i = 0; i < 256; ++i) {
            std::uint32_t c = i;
            for (int k = 0; k < 8; ++k) c = (c & 1) ? 0xEDB88320u ^ (c >> 1) : c >> 1;
            t[i] = c;
        }
        return t;
    }();
    std::uint32_t crc = 0xFFFFFFFFu;
    for (std::size_t i = 0; i < len; ++i) crc = table[(crc ^ data[i]) & 0xFF] ^ (crc >> 8);
    return crc ^ 0xFFFFFFFFu;
}

namespace {

constexpr std::uint32_t kCheckpointVersion = 1;

void put_u32(std::vector<std::uint8_t>& out, std::uint32_t v) {
    for (int i = 0; i < 4; ++i) out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}
void put_u64(std::vector<std::uint8_t>& out, std::uint64_t v) {
    for (int i = 0; i < 8; ++i) out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}
std::uint32_t get_u32(const std::uint8_t* p) {
    return std::uint32_t(p[0]) | std::uint32_t(p[1]) << 8 | std::uint32_t(p[2]) << 16 |
           std::uint32_t(p[3]) << 24;
}
std::uint64_t get_u64(const std::uint8_t* p) {
    return std::uint64_t(get_u32(p)) | std::uint64_t(get_u32(p + 4)) << 32;
}

}  // namespace

std::vector<std::uint8_t> serialize_model(const GestureModel& model) {
    check_model(model);
    nlohmann::json desc{{"arch", nlohmann::json::parse(model.arch.to_json())},
                        {"seed", model.seed},
                        {"epochs_trained", model.epochs_trained},
                        {"loss_curve", model.loss_curve}};
    std::string desc_text = desc.dump();

    std::vector<std::uint8_t> out;
    out.reserve(desc_text.size() + 4 * model.weights.size() + 64);
    for (char c : {'G', 'L', 'V', 'C'}) out.push_back(static_cast<std::uint8_t>(c));
    put_u32(out, kCheckpointVersion);
    put_u32(out, static_cast<std::uint32_t>(desc_text.size()));
    out.insert(out.end(), desc_text.begin(), desc_text.end());
    put_u64(out, model.weights.size());
    for (float f : model.weights) {
        std::uint32_t bits;
        std::memcpy(&bits, &f, 4);
        put_u32(out, bits);
    }
    put_u32(out, crc32(out.data(), out.size()));
    return out;
}

GestureModel deserialize_model(const std::vector<std::uint8_t>& bytes) {
    if (bytes.size() < 20) throw DataError("checkpoint: file too short");
    if (std::memcmp(bytes.data(), "GLVC", 4) != 0) throw DataError("checkpoint: bad magic");
    std::uint32_t stored_crc = get_u32(bytes.data() + bytes.size() - 4);
    if (crc32(bytes.data(), bytes.size() - 4) != stored_crc)
        throw DataError("checkpoint: CRC mismatch");
    std::uint32_t version = get_u32(bytes.data() + 4);
    if (version != kCheckpointVersion)
        throw DataError("checkpoint: unsupported version " + std::to_string(version));
    std::uint32_t desc_len = get_u32(bytes.data() + 8);
    std::size_t pos = 12;
    if (bytes.size() < pos + desc_len + 8 + 4) throw DataError("checkpoint: truncated descriptor");
    std::string desc_text(bytes.begin() + pos, bytes.begin() + pos + desc_len);
    pos += desc_len;

    GestureModel m;
    try {
        nlohmann::json desc = nlohmann::json::parse(desc_text);
        m.arch = Architecture::from_json(desc.at("arch").dump());
        m.seed = desc.value("seed", std::uint64_t{0});
        m.epochs_trained = desc.value("epochs_trained", 0);
        if (desc.contains("loss_curve")) m.loss_curve = desc["loss_curve"].get<std::vector<float>>();
    } catch (const nlohmann::json::exception& e) {
        throw DataError(std::string("checkpoint: bad descriptor: ") + e.what());
    }

    std::uint64_t count = get_u64(bytes.data() + pos);
    pos += 8;
    if (count != m.arch.weight_count())
        throw DataError("checkpoint: weight count " + std::to_string(count) +
                        " does not match architecture");
    if (bytes.size() != pos + 4 * count + 4) throw DataError("checkpoint: truncated weights");
    m.weights.resize(count);
    for (std::uint64_t i = 0; i < count; ++i) {
        std::uint32_t bits = get_u32(bytes.data() + pos + 4 * i);
        float f;
        std::memcpy(&f, &bits, 4);
        if (!std::isfinite(f))
            throw DataError("checkpoint: non-finite weight at index " + std::to_string(i));
        m.weights[i] = f;
    }
    return m;
}

void save_model(const GestureModel& model, const std::filesystem::path& path) {
    write_file(path, serialize_model(model));
}

GestureModel load_model(const std::filesystem::path& path) {
    return deserialize_model(read_file(path));
}

}  // namespace vglove
