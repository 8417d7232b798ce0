#include "engine/rng.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

namespace meetsim::engine {

namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;

std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
}

}  // namespace

std::uint64_t mix64(std::uint64_t x) {
    x += kGolden;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t id) {
    return mix64(seed ^ mix64(id + kGolden));
}

long poisson_quantile(double mean, double u) {
    if (!(mean >= 0.0) || !std::isfinite(mean)) {
        throw std::invalid_argument("poisson mean must be finite and >= 0, got " +
                                    std::to_string(mean));
    }
    if (mean > 700.0) {
        throw std::invalid_argument(
            "poisson mean " + std::to_string(mean) +
            " exceeds 700, the limit of the inversion sampler");
    }
    if (mean == 0.0) {
        return 0;
    }
    double p = std::exp(-mean);
    double cum = p;
    long k = 0;
    const long k_max = static_cast<long>(mean + 12.0 * std::sqrt(mean) + 30.0);
    while (u >= cum && k < k_max) {
        ++k;
        p *= mean / static_cast<double>(k);
        cum += p;
    }
    return k;
}

RngStream::RngStream(std::uint64_t seed, std::uint64_t stream_id)
    : seed_(seed), stream_id_(stream_id) {
    std::uint64_t sm = derive_seed(seed, stream_id);
    for (auto& word : s_) {
        sm += kGolden;
        word = mix64(sm);
    }
    // xoshiro must not start from the all-zero state.
    if ((s_[0] | s_[1] | s_[2] | s_[3]) == 0) {
        s_[0] = kGolden;
    }
}

std::uint64_t RngStream::next_u64() {
    const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
}

double RngStream::u01() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double RngStream::uniform(double lo, double hi) {
    if (!(lo <= hi)) {
        throw std::invalid_argument("uniform bounds must satisfy lo <= hi");
    }
    return lo + (hi - lo) * u01();
}

double RngStream::exponential(double rate) {
    if (!(rate > 0.0)) {
        throw std::invalid_argument("exponential rate must be > 0");
    }
    // -log(1-u) with u in [0,1) keeps the argument in (0,1].
    return -std::log1p(-u01()) / rate;
}

double RngStream::shifted_exponential(double rate, double shift) {
    if (!(shift >= 0.0)) {
        throw std::invalid_argument("shifted exponential shift must be >= 0");
    }
    return shift + exponential(rate);
}

double RngStream::normal(double mean, double stddev) {
    if (!(stddev >= 0.0)) {
        throw std::invalid_argument("normal stddev must be >= 0");
    }
    // Box-Muller; consumes two uniforms per draw, no cached spare.
    const double u1 = 1.0 - u01();
    const double u2 = u01();
    const double r = std::sqrt(-2.0 * std::log(u1));
    return mean + stddev * r * std::cos(2.0 * std::numbers::pi * u2);
}

long RngStream::poisson(double mean) {
    return poisson_quantile(mean, u01());
}

std::uint64_t RngStream::uniform_index(std::uint64_t n) {
    if (n == 0) {
        throw std::invalid_argument("uniform_index requires n > 0");
    }
    const std::uint64_t idx = static_cast<std::uint64_t>(u01() * static_cast<double>(n));
    return idx < n ? idx : n - 1;
}

Distribution Distribution::constant(double value) {
    return Distribution{Family::Constant, value, 0.0};
}
Distribution Distribution::exponential(double rate) {
    return Distribution{Family::Exponential, rate, 0.0};
}
Distribution Distribution::shifted_exponential(double rate, double shift) {
    return Distribution{Family::ShiftedExponential, rate, shift};
}
Distribution Distribution::uniform(double lo, double hi) {
    return Distribution{Family::Uniform, lo, hi};
}
Distribution Distribution::normal(double mean, double stddev) {
    return Distribution{Family::Normal, mean, stddev};
}
Distribution Distribution::poisson(double mean) {
    return Distribution{Family::Poisson, mean, 0.0};
}

void Distribution::validate() const {
    switch (family) {
        case Family::Constant:
            if (!std::isfinite(a)) throw std::invalid_argument("constant value must be finite");
            return;
        case Family::Exponential:
            if (!(a > 0.0)) throw std::invalid_argument("exponential rate must be > 0");
            return;
        case Family::ShiftedExponential:
            if (!(a > 0.0)) throw std::invalid_argument("shifted exponential rate must be > 0");
            if (!(b >= 0.0)) throw std::invalid_argument("shifted exponential shift must be >= 0");
            return;
        case Family::Uniform:
            if (!(a <= b)) throw std::invalid_argument("uniform bounds must satisfy lo <= hi");
            return;
        case Family::Normal:
            if (!(b >= 0.0)) throw std::invalid_argument("normal stddev must be >= 0");
            return;
        case Family::Poisson:
            if (!(a >= 0.0) || a > 700.0) {
                throw std::invalid_argument("poisson mean must be in [0, 700]");
            }
            return;
    }
    throw std::invalid_argument("unknown distribution family");
}

double Distribution::mean() const {
    switch (family) {
        case Family::Constant: return a;
        case Family::Exponential: return 1.0 / a;
        case Family::ShiftedExponential: return b + 1.0 / a;
        case Family::Uniform: return 0.5 * (a + b);
        case Family::Normal: return a;
        case Family::Poisson: return a;
    }
    return 0.0;
}

double Distribution::sample(RngStream& stream) const {
    switch (family) {
        case Family::Constant: return a;
        case Family::Exponential: return stream.exponential(a);
        case Family::ShiftedExponential: return stream.shifted_exponential(a, b);
        case Family::Uniform: return stream.uniform(a, b);
        case Family::Normal: return stream.normal(a, b);
        case Family::Poisson: return static_cast<double>(stream.poisson(a));
    }
    throw std::invalid_argument("unknown distribution family");
}

}  // namespace meetsim::engine
