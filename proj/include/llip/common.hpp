#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

namespace llip {

// One pixel sample. Range depends on the bit depth carried by the
// surrounding block/frame: [0, 2^bit_depth - 1].
using Sample = std::uint16_t;

constexpr int kMinBlockSize = 4;
constexpr int kMaxBlockSize = 128;

constexpr bool valid_bit_depth(int bit_depth) {
    return bit_depth == 8 || bit_depth == 10 || bit_depth == 12;
}

constexpr Sample sample_max(int bit_depth) {
    return static_cast<Sample>((1u << bit_depth) - 1u);
}

constexpr bool is_power_of_two(int v) {
    return v > 0 && (v & (v - 1)) == 0;
}

// Errors map onto the CLI exit codes: format/geometry/input/config -> 2,
// numeric -> 3. Usage errors never leave the CLI layer.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Illegal block dimensions or out-of-range coordinates.
class GeometryError : public Error {
public:
    using Error::Error;
};

// Arity/scheme mismatches and other bad in-memory arguments.
class InputError : public Error {
public:
    using Error::Error;
};

// Malformed file contents (bad magic, truncation, unparsable line, ...).
class FormatError : public Error {
public:
    using Error::Error;
};

// Filesystem-level failure.
class IoError : public Error {
public:
    using Error::Error;
};

// Non-finite values where finite ones are required.
class NumericError : public Error {
public:
    using Error::Error;
};

// Incomplete model sets and similar wiring problems.
class ConfigError : public Error {
public:
    using Error::Error;
};

// Derives an independent seed for a numbered stream (per frame, per epoch, ...)
// so parallel producers stay deterministic. Splitmix64 finalizer.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ull * (stream + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

// Deterministic random source. The distribution helpers are hand-rolled so
// streams are identical across standard library implementations.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next_u64() { return gen_(); }

    // Uniform in [0, 1).
    double uniform() {
        return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) {
        return lo + (hi - lo) * uniform();
    }

    // Uniform integer in [lo, hi], inclusive.
    std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
        auto span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<std::int64_t>(gen_() % span);
    }

    // Standard normal via Box-Muller; one draw cached.
    double normal() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        double u1 = static_cast<double>((gen_() >> 11) + 1) * 0x1.0p-53;  // (0, 1]
        double u2 = uniform();
        double r = std::sqrt(-2.0 * std::log(u1));
        double a = 6.283185307179586476925286766559 * u2;
        spare_ = r * std::sin(a);
        has_spare_ = true;
        return r * std::cos(a);
    }

    double normal(double mean, double sigma) { return mean + sigma * normal(); }

private:
    std::mt19937_64 gen_;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace llip
