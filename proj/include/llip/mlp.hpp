#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "llip/block.hpp"
#include "llip/interpf.hpp"

namespace llip {

// Two-layer fully connected network replacing the integer filter's output
// blend: per pixel it maps (neighbors, prediction[, coordinates]) straight
// to the filtered value. Forward evaluation is plain single-precision
// multiply-add on the CPU, no external runtime.

enum class Scheme : std::uint8_t {
    kScheme1 = 1,  // inputs (R1, R2, R3, R4, P)
    kScheme2 = 2,  // inputs (R1, R2, R3, R4, P, x, y)
};

constexpr int kMaxInputDim = 7;

constexpr int input_dim(Scheme s) {
    return s == Scheme::kScheme1 ? 5 : 7;
}

// Stored parameter values for a scheme: dense d->d plus dense d->1.
constexpr std::size_t parameter_count(Scheme s) {
    const std::size_t d = static_cast<std::size_t>(input_dim(s));
    return d * d + d + d + 1;
}

enum class Component : std::uint8_t { kY = 0, kU = 1, kV = 2, kShared = 255 };
enum class ResolutionGroup : std::uint8_t { kHighRes = 0, kLowRes = 1, kShared = 255 };

// Divisors applied before the network sees a value: samples by pixel_scale,
// block-local coordinates by coord_scale. Stored with the model so the
// convention travels with the weights.
struct Normalization {
    float pixel_scale = 1023.0f;
    float coord_scale = 64.0f;

    friend bool operator==(const Normalization&, const Normalization&) = default;
};

inline Normalization default_normalization(int bit_depth) {
    return Normalization{static_cast<float>(sample_max(bit_depth)), 64.0f};
}

struct DenseLayer {
    int in_dim = 0;
    int out_dim = 0;
    std::vector<float> weights;  // row-major: weights[j * in_dim + i]
    std::vector<float> biases;
};

struct MlpModel {
    Scheme scheme = Scheme::kScheme2;
    DenseLayer layer1;  // d -> d
    DenseLayer layer2;  // d -> 1
    Normalization normalization;
    int bit_depth = 10;
    Component component = Component::kShared;
    ResolutionGroup resolution = ResolutionGroup::kShared;

    std::size_t stored_parameters() const {
        return layer1.weights.size() + layer1.biases.size() +
               layer2.weights.size() + layer2.biases.size();
    }
};

// Enforces the shape invariants (layer dims match the scheme, 36/64 stored
// values) and rejects non-finite parameters. Throws InputError.
void validate_model(const MlpModel& model);

// Multiply-accumulates per forward pass: d*d for layer 1 plus d for layer 2.
constexpr int mac_count(Scheme s) {
    const int d = input_dim(s);
    return d * d + d;
}

inline int mac_count(const MlpModel& model) { return mac_count(model.scheme); }

// Fixed-capacity input vector; len is 5 or 7 depending on the scheme.
struct InputVector {
    std::array<float, kMaxInputDim> values{};
    int len = 0;

    std::span<const float> span() const { return {values.data(), static_cast<std::size_t>(len)}; }
};

// Assembles the normalized network input for one pixel. Order: the four
// border neighbors, the prediction value, then (scheme 2 only) x and y.
InputVector build_input(Scheme scheme, const Neighbors& n, Sample p, int x, int y,
                        const Normalization& norm);

// output[j] = bias[j] + sum_i weights[j][i] * input[i], single precision.
void dense_forward(const DenseLayer& layer, std::span<const float> input,
                   std::span<float> output);

void relu_inplace(std::span<float> v);

// layer1 -> ReLU -> layer2; the input length must match the scheme exactly
// (a 7-vector into a scheme-1 model is an InputError, never truncated).
float mlp_forward(const MlpModel& model, std::span<const float> input);

// Same result as mlp_forward, counting every multiply-accumulate. Test hook.
float mlp_forward_instrumented(const MlpModel& model, std::span<const float> input,
                               std::uint64_t& macs);

// Maps the network output back to a sample: scale by pixel_scale, round to
// nearest (ties to even), clamp to the bit-depth range.
Sample denormalize_output(float raw, const Normalization& norm, int bit_depth);

// Learned counterpart of filter_block: identical traversal and neighbor
// gathering, the network replaces the arithmetic. Serial reference.
void learned_filter_block(const MlpModel& model, const BlockContext& ctx,
                          std::span<Sample> out);
std::vector<Sample> learned_filter_block(const MlpModel& model, const BlockContext& ctx);

// OpenMP batch kernel over independent blocks; order preserved.
std::vector<std::vector<Sample>> learned_filter_blocks(const MlpModel& model,
                                                       std::span<const BlockContext> blocks,
                                                       int threads = 1);

}  // namespace llip
