#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "adjmat/element.hpp"
#include "adjmat/ints.hpp"
#include "adjmat/matrix.hpp"
#include "adjmat/polynomial.hpp"

namespace adjmat {

/// Deterministic random source. Draws raw mt19937_64 words and maps them
/// to ranges by modulo, so the same seed yields the same sequence on every
/// platform and standard library (std::uniform_int_distribution would
/// not).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }

    /// Uniform-ish value in [0, n); n must be positive.
    std::uint64_t below(std::uint64_t n) { return eng_() % n; }

    long long in_range(long long lo, long long hi) {
        return lo + static_cast<long long>(below(static_cast<std::uint64_t>(hi - lo) + 1));
    }

    /// Nonzero value with |v| <= bound, bound >= 1.
    long long nonzero(long long bound) {
        const long long mag = 1 + static_cast<long long>(below(static_cast<std::uint64_t>(bound)));
        return below(2) == 0 ? mag : -mag;
    }

private:
    std::mt19937_64 eng_;
};

/// Stable seed derivation (splitmix64 finalizer over seed and stream id).
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

inline Int random_int(Rng& rng, long long bound) {
    return Int(rng.in_range(-bound, bound));
}

inline Polynomial random_poly(Rng& rng, long long coeff_bound, std::size_t max_degree) {
    std::vector<Int> coeffs(max_degree + 1, Int(0));
    for (auto& c : coeffs) c = Int(rng.in_range(-coeff_bound, coeff_bound));
    return Polynomial::from_coeffs(std::move(coeffs));
}

inline Matrix<Int> random_int_matrix(Rng& rng, std::size_t n, long long bound) {
    std::vector<Int> e;
    e.reserve(n * n);
    for (std::size_t k = 0; k < n * n; ++k) e.push_back(random_int(rng, bound));
    return Matrix<Int>(n, n, std::move(e));
}

inline Matrix<Polynomial> random_poly_matrix(Rng& rng, std::size_t n,
                                             long long coeff_bound,
                                             std::size_t max_degree) {
    std::vector<Polynomial> e;
    e.reserve(n * n);
    for (std::size_t k = 0; k < n * n; ++k)
        e.push_back(random_poly(rng, coeff_bound, max_degree));
    return Matrix<Polynomial>(n, n, std::move(e));
}

} // namespace adjmat
