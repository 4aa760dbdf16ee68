#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace occ {

/// Raised when a computation produces non-finite values. Carries the index
/// of the offending item (image, row, ...) when one can be named, else -1.
class NumericError : public std::runtime_error {
public:
    explicit NumericError(const std::string& msg, std::ptrdiff_t index = -1)
        : std::runtime_error(msg), index_(index) {}

    std::ptrdiff_t index() const noexcept { return index_; }

private:
    std::ptrdiff_t index_;
};

// ---------------------------------------------------------------------------
// FNV-1a digests. Used wherever the toolkit needs a cheap stable fingerprint
// (frozen encoder parameters, config contents). Not cryptographic.
// ---------------------------------------------------------------------------

inline constexpr std::uint64_t kFnvBasis = 0xcbf29ce484222325ULL;
inline constexpr std::uint64_t kFnvPrime = 0x100000001b3ULL;

inline std::uint64_t fnv1a(const void* data, std::size_t n,
                           std::uint64_t h = kFnvBasis) {
    const auto* p = static_cast<const unsigned char*>(data);
    for (std::size_t i = 0; i < n; ++i) {
        h ^= p[i];
        h *= kFnvPrime;
    }
    return h;
}

inline std::uint64_t fnv1a(std::string_view s, std::uint64_t h = kFnvBasis) {
    return fnv1a(s.data(), s.size(), h);
}

/// Running FNV-1a digest over heterogeneous inputs.
class Digest {
public:
    Digest& add(const void* data, std::size_t n) {
        h_ = fnv1a(data, n, h_);
        return *this;
    }
    Digest& add(std::string_view s) { return add(s.data(), s.size()); }
    Digest& add(double v) { return add(&v, sizeof v); }
    Digest& add(std::uint64_t v) { return add(&v, sizeof v); }
    Digest& add(std::int64_t v) { return add(&v, sizeof v); }
    Digest& add(const std::vector<double>& v) {
        return add(v.data(), v.size() * sizeof(double));
    }

    std::uint64_t value() const noexcept { return h_; }

private:
    std::uint64_t h_ = kFnvBasis;
};

std::string digest_hex(std::uint64_t h);

// ---------------------------------------------------------------------------
// Deterministic RNG.
//
// mt19937_64 is fully specified by the standard; the distribution transforms
// below are spelled out here instead of using <random> distributions, whose
// algorithms are implementation-defined. Same seed, same stream, on any
// platform.
// ---------------------------------------------------------------------------

class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next_u64() { return gen_(); }

    /// Unbiased integer in [0, bound) via rejection sampling. bound > 0.
    std::uint64_t below(std::uint64_t bound) {
        if (bound == 0) throw std::invalid_argument("Rng::below: bound must be > 0");
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        std::uint64_t x;
        do {
            x = gen_();
        } while (x >= limit);
        return x % bound;
    }

    /// Uniform double in [0, 1) with 53 bits of precision.
    double unit() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    /// Normal(mean, std^2) via Box-Muller. One spare value is cached.
    double normal(double mean = 0.0, double std = 1.0) {
        if (has_spare_) {
            has_spare_ = false;
            return mean + std * spare_;
        }
        // u1 in (0, 1] so the log is finite.
        const double u1 = (static_cast<double>(gen_() >> 11) + 1.0) * 0x1.0p-53;
        const double u2 = unit();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double theta = 2.0 * 3.14159265358979323846 * u2;
        spare_ = r * std::sin(theta);
        has_spare_ = true;
        return mean + std * r * std::cos(theta);
    }

    /// Fisher-Yates shuffle.
    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::swap(v[i - 1], v[below(i)]);
        }
    }

    /// k distinct indices drawn from [0, n) without replacement
    /// (partial Fisher-Yates; order is the draw order).
    std::vector<std::size_t> sample_indices(std::size_t n, std::size_t k);

private:
    std::mt19937_64 gen_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

}  // namespace occ
