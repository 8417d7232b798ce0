#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>

namespace meetsim::engine {

// SplitMix64 finalizer. Stateless bit mixer used for seed derivation and
// counter-based uniforms.
std::uint64_t mix64(std::uint64_t x);

// Derives a child seed from a parent seed and an index. Pure function; the
// same (seed, ids...) always yields the same child on every platform.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t id);

template <typename... Ids>
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t id, Ids... rest) {
    return derive_seed(derive_seed(seed, id), static_cast<std::uint64_t>(rest)...);
}

// Counter-based uniform in [0,1): hash of (seed, ids...) mapped to a double.
// Used where common random numbers across paired scenarios are required.
template <typename... Ids>
double hash_u01(std::uint64_t seed, Ids... ids) {
    const std::uint64_t h = derive_seed(seed, static_cast<std::uint64_t>(ids)...);
    return static_cast<double>(h >> 11) * 0x1.0p-53;
}

// Inverse-CDF Poisson draw. Monotone in `mean` for fixed u, which is what
// makes coupled (common-random-number) comparisons across scenarios exact.
// Valid for mean <= 700 (exp(-mean) underflows beyond that).
long poisson_quantile(double mean, double u);

// Seedable random stream: xoshiro256++ core seeded through SplitMix64.
// Identical (seed, stream_id) reproduces the identical draw sequence; all
// distribution transforms are implemented here (inverse CDF, Box-Muller,
// Poisson inversion) so sequences do not depend on the standard library.
class RngStream {
public:
    RngStream() : RngStream(0, 0) {}
    explicit RngStream(std::uint64_t seed, std::uint64_t stream_id = 0);

    std::uint64_t next_u64();
    // Uniform in [0,1), 53-bit resolution.
    double u01();

    double uniform(double lo, double hi);
    double exponential(double rate);
    double shifted_exponential(double rate, double shift);
    double normal(double mean, double stddev);
    long poisson(double mean);

    // Uniform integer in [0, n). n must be positive.
    std::uint64_t uniform_index(std::uint64_t n);

    std::uint64_t seed() const { return seed_; }
    std::uint64_t stream_id() const { return stream_id_; }

private:
    std::array<std::uint64_t, 4> s_{};
    std::uint64_t seed_ = 0;
    std::uint64_t stream_id_ = 0;
};

// Distribution specification usable from configuration files.
struct Distribution {
    enum class Family {
        Constant,
        Exponential,
        ShiftedExponential,
        Uniform,
        Normal,
        Poisson,
    };

    Family family = Family::Constant;
    double a = 0.0;  // value | rate | lo | mean
    double b = 0.0;  // shift | hi | stddev

    static Distribution constant(double value);
    static Distribution exponential(double rate);
    static Distribution shifted_exponential(double rate, double shift);
    static Distribution uniform(double lo, double hi);
    static Distribution normal(double mean, double stddev);
    static Distribution poisson(double mean);

    // Throws std::invalid_argument on bad parameters.
    void validate() const;
    double mean() const;
    double sample(RngStream& stream) const;
};

}  // namespace meetsim::engine
