#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>

#include "adjmat/errors.hpp"

namespace adjmat {

/// Arbitrary-precision integer. Thin value wrapper around
/// boost::multiprecision::cpp_int exposing only exact operations:
/// there is deliberately no operator/; use exact_div, which verifies
/// the remainder and throws NotDivisible instead of truncating.
class Int {
public:
    using rep = boost::multiprecision::cpp_int;

    Int() = default;
    Int(long long v) : v_(v) {}        // NOLINT: implicit by design for literals
    explicit Int(rep v) : v_(std::move(v)) {}

    const rep& value() const { return v_; }

    friend Int operator+(const Int& a, const Int& b) { return Int(a.v_ + b.v_); }
    friend Int operator-(const Int& a, const Int& b) { return Int(a.v_ - b.v_); }
    friend Int operator*(const Int& a, const Int& b) { return Int(a.v_ * b.v_); }
    friend Int operator-(const Int& a) { return Int(-a.v_); }

    Int& operator+=(const Int& o) { v_ += o.v_; return *this; }
    Int& operator-=(const Int& o) { v_ -= o.v_; return *this; }
    Int& operator*=(const Int& o) { v_ *= o.v_; return *this; }

    friend bool operator==(const Int& a, const Int& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Int& a, const Int& b) { return a.v_ != b.v_; }
    friend bool operator<(const Int& a, const Int& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Int& a, const Int& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Int& a, const Int& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Int& a, const Int& b) { return a.v_ >= b.v_; }

    /// Grammar: optional sign followed by decimal digits.
    static Int parse(std::string_view text);

    std::string str() const { return v_.str(); }

private:
    rep v_;
};

inline bool is_zero(const Int& a) { return a.value().is_zero(); }

inline bool divides(const Int& divisor, const Int& value) {
    if (is_zero(divisor)) return is_zero(value);
    const Int::rep r = value.value() % divisor.value();
    return r.is_zero();
}

inline Int exact_div(const Int& a, const Int& b) {
    if (is_zero(b)) throw DivisionByZero("exact_div: division by zero");
    Int::rep q, r;
    boost::multiprecision::divide_qr(a.value(), b.value(), q, r);
    if (!r.is_zero())
        throw NotDivisible("exact_div: " + a.str() + " is not divisible by " + b.str());
    return Int(std::move(q));
}

inline Int zero_like(const Int&) { return Int(0); }
inline Int one_like(const Int&) { return Int(1); }
inline Int from_int_like(long long v, const Int&) { return Int(v); }
inline bool same_domain(const Int&, const Int&) { return true; }

inline std::string to_text(const Int& a) { return a.str(); }

inline Int Int::parse(std::string_view text) {
    std::size_t i = 0;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) ++i;
    if (i == text.size())
        throw ParseError("integer literal: expected digits", i);
    for (std::size_t k = i; k < text.size(); ++k)
        if (text[k] < '0' || text[k] > '9')
            throw ParseError("integer literal: unexpected character '" +
                                 std::string(1, text[k]) + "'",
                             k);
    // cpp_int's parser rejects an explicit plus sign and reads a leading
    // zero as an octal prefix, so normalize to plain decimal digits.
    std::size_t d = i;
    while (d + 1 < text.size() && text[d] == '0') ++d;
    std::string body(text.substr(d));
    if (text.front() == '-') body.insert(body.begin(), '-');
    return Int(rep(body));
}

} // namespace adjmat
