#pragma once

#include <concepts>
#include <string>

namespace adjmat {

/// A commutative domain: exact ring arithmetic, decidable zero test, and
/// partial exact division. Division is total on divisible pairs and throws
/// NotDivisible otherwise, never truncating. zero_like/one_like/
/// from_int_like take a witness value so dynamically tagged element types
/// can produce constants in the right domain.
template <class R>
concept Domain = std::semiregular<R> && requires(const R& a, const R& b, long long v) {
    { a + b } -> std::convertible_to<R>;
    { a - b } -> std::convertible_to<R>;
    { a * b } -> std::convertible_to<R>;
    { -a } -> std::convertible_to<R>;
    { a == b } -> std::convertible_to<bool>;
    { is_zero(a) } -> std::convertible_to<bool>;
    { exact_div(a, b) } -> std::convertible_to<R>;
    { divides(a, b) } -> std::convertible_to<bool>;
    { zero_like(a) } -> std::convertible_to<R>;
    { one_like(a) } -> std::convertible_to<R>;
    { from_int_like(v, a) } -> std::convertible_to<R>;
    { same_domain(a, b) } -> std::convertible_to<bool>;
    { to_text(a) } -> std::convertible_to<std::string>;
};

/// base^e by repeated squaring; e = 0 yields one_like(base).
template <Domain R>
R pow_nonneg(const R& base, unsigned long long e) {
    R result = one_like(base);
    R sq = base;
    while (e > 0) {
        if (e & 1ULL) result = result * sq;
        e >>= 1ULL;
        if (e > 0) sq = sq * sq;
    }
    return result;
}

} // namespace adjmat
