#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "adjmat/errors.hpp"
#include "adjmat/ints.hpp"

namespace adjmat {

/// Univariate polynomial with arbitrary-precision integer coefficients.
/// Dense representation: coeffs_[k] is the coefficient of var^k.
/// Canonical form invariant: the leading coefficient is nonzero, i.e. the
/// zero polynomial has an empty coefficient vector.
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(long long c) { // NOLINT: implicit, constants embed naturally
        if (c != 0) coeffs_.push_back(Int(c));
    }
    explicit Polynomial(Int c) {
        if (!is_zero(c)) coeffs_.push_back(std::move(c));
    }

    static Polynomial from_coeffs(std::vector<Int> coeffs, std::string var = "x") {
        Polynomial p;
        p.coeffs_ = std::move(coeffs);
        p.var_ = std::move(var);
        p.trim();
        return p;
    }

    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    /// Coefficient of var^k; zero beyond the stored degree.
    Int coeff(std::size_t k) const {
        return k < coeffs_.size() ? coeffs_[k] : Int(0);
    }

    const std::vector<Int>& coeffs() const { return coeffs_; }
    const std::string& var() const { return var_; }
    bool is_constant() const { return coeffs_.size() <= 1; }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        const std::string& v = result_var(a, b);
        std::vector<Int> c(std::max(a.coeffs_.size(), b.coeffs_.size()), Int(0));
        for (std::size_t k = 0; k < a.coeffs_.size(); ++k) c[k] += a.coeffs_[k];
        for (std::size_t k = 0; k < b.coeffs_.size(); ++k) c[k] += b.coeffs_[k];
        return from_coeffs(std::move(c), v);
    }

    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
        const std::string& v = result_var(a, b);
        std::vector<Int> c(std::max(a.coeffs_.size(), b.coeffs_.size()), Int(0));
        for (std::size_t k = 0; k < a.coeffs_.size(); ++k) c[k] += a.coeffs_[k];
        for (std::size_t k = 0; k < b.coeffs_.size(); ++k) c[k] -= b.coeffs_[k];
        return from_coeffs(std::move(c), v);
    }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        const std::string& v = result_var(a, b);
        if (a.coeffs_.empty() || b.coeffs_.empty()) {
            Polynomial z;
            z.var_ = v;
            return z;
        }
        std::vector<Int> c(a.coeffs_.size() + b.coeffs_.size() - 1, Int(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
                c[i + j] += a.coeffs_[i] * b.coeffs_[j];
        return from_coeffs(std::move(c), v);
    }

    friend Polynomial operator-(const Polynomial& a) {
        std::vector<Int> c;
        c.reserve(a.coeffs_.size());
        for (const Int& x : a.coeffs_) c.push_back(-x);
        return from_coeffs(std::move(c), a.var_);
    }

    Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
    Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    /// Equality is on values: variable names only matter when both sides
    /// are non-constant.
    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        if (!a.is_constant() && !b.is_constant() && a.var_ != b.var_) return false;
        return a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) {
        return !(a == b);
    }

    static Polynomial parse(std::string_view text, std::string var = "x");
    std::string str() const;

private:
    void trim() {
        while (!coeffs_.empty() && is_zero(coeffs_.back())) coeffs_.pop_back();
    }

    static const std::string& result_var(const Polynomial& a, const Polynomial& b) {
        if (!a.is_constant() && !b.is_constant() && a.var_ != b.var_)
            throw DomainMismatch("polynomials in different variables: '" + a.var_ +
                                 "' vs '" + b.var_ + "'");
        return a.is_constant() ? b.var_ : a.var_;
    }

    std::vector<Int> coeffs_;
    std::string var_ = "x";
};

inline bool is_zero(const Polynomial& p) { return p.coeffs().empty(); }

inline Polynomial zero_like(const Polynomial& p) {
    return Polynomial::from_coeffs({}, p.var());
}

inline Polynomial one_like(const Polynomial& p) {
    return Polynomial::from_coeffs({Int(1)}, p.var());
}

inline Polynomial from_int_like(long long v, const Polynomial& p) {
    return Polynomial::from_coeffs({Int(v)}, p.var());
}

inline bool same_domain(const Polynomial& a, const Polynomial& b) {
    return a.is_constant() || b.is_constant() || a.var() == b.var();
}

/// Exact division in Z[x] by long division. Every leading-coefficient
/// division must be exact and the final remainder must vanish; otherwise
/// the quotient does not exist in Z[x] and NotDivisible is thrown.
inline Polynomial exact_div(const Polynomial& a, const Polynomial& b) {
    if (is_zero(b)) throw DivisionByZero("exact_div: division by zero polynomial");
    if (is_zero(a)) return zero_like(a);
    if (!same_domain(a, b))
        throw DomainMismatch("exact_div: polynomials in different variables");
    if (a.degree() < b.degree())
        throw NotDivisible("exact_div: " + a.str() + " is not divisible by " + b.str());

    std::vector<Int> rem(a.coeffs());
    const std::vector<Int>& div = b.coeffs();
    const Int& lead = div.back();
    std::vector<Int> quot(rem.size() - div.size() + 1, Int(0));

    for (std::size_t k = quot.size(); k-- > 0;) {
        const Int& top = rem[k + div.size() - 1];
        if (is_zero(top)) continue;
        if (!divides(lead, top))
            throw NotDivisible("exact_div: " + a.str() + " is not divisible by " +
                               b.str());
        Int q = exact_div(top, lead);
        for (std::size_t j = 0; j < div.size(); ++j) rem[k + j] -= q * div[j];
        quot[k] = std::move(q);
    }
    for (const Int& r : rem)
        if (!is_zero(r))
            throw NotDivisible("exact_div: " + a.str() + " is not divisible by " +
                               b.str());
    return Polynomial::from_coeffs(std::move(quot),
                                   a.is_constant() ? b.var() : a.var());
}

inline bool divides(const Polynomial& divisor, const Polynomial& value) {
    if (is_zero(divisor)) return is_zero(value);
    if (is_zero(value)) return true;
    if (value.degree() < divisor.degree()) return false;
    try {
        (void)exact_div(value, divisor);
        return true;
    } catch (const NotDivisible&) {
        return false;
    }
}

inline std::string to_text(const Polynomial& p) { return p.str(); }

// --- text form: terms in decreasing degree, no spaces, e.g. "3*x^2-1" ---

inline std::string Polynomial::str() const {
    if (coeffs_.empty()) return "0";
    std::string out;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
        const Int& c = coeffs_[k];
        if (is_zero(c)) continue;
        const bool negative = c < Int(0);
        const Int mag = negative ? -c : c;
        if (out.empty()) {
            if (negative) out += '-';
        } else {
            out += negative ? '-' : '+';
        }
        if (k == 0) {
            out += mag.str();
        } else {
            if (mag != Int(1)) {
                out += mag.str();
                out += '*';
            }
            out += var_;
            if (k > 1) {
                out += '^';
                out += std::to_string(k);
            }
        }
    }
    return out;
}

inline Polynomial Polynomial::parse(std::string_view text, std::string var) {
    constexpr std::size_t max_exponent = 100000;
    std::vector<Int> coeffs;
    std::size_t i = 0;
    const auto skip_spaces = [&] {
        while (i < text.size() && text[i] == ' ') ++i;
    };
    const auto at_var = [&]() {
        return text.compare(i, var.size(), var) == 0;
    };

    skip_spaces();
    if (i == text.size()) throw ParseError("empty polynomial literal", i);

    bool first = true;
    while (true) {
        skip_spaces();
        if (i == text.size()) {
            if (first) throw ParseError("expected a term", i);
            break;
        }
        int sign = 1;
        if (text[i] == '+' || text[i] == '-') {
            sign = text[i] == '-' ? -1 : 1;
            ++i;
            skip_spaces();
        } else if (!first) {
            throw ParseError("expected '+' or '-' between terms", i);
        }
        first = false;

        bool have_coeff = false;
        Int coeff(1);
        if (i < text.size() && text[i] >= '0' && text[i] <= '9') {
            std::size_t start = i;
            while (i < text.size() && text[i] >= '0' && text[i] <= '9') ++i;
            coeff = Int::parse(text.substr(start, i - start));
            have_coeff = true;
            skip_spaces();
            if (i < text.size() && text[i] == '*') {
                ++i;
                skip_spaces();
                if (i >= text.size() || !at_var())
                    throw ParseError("expected variable after '*'", i);
            } else if (i < text.size() && at_var()) {
                throw ParseError("missing '*' between coefficient and variable", i);
            }
        }

        std::size_t exponent = 0;
        if (i < text.size() && at_var()) {
            i += var.size();
            exponent = 1;
            skip_spaces();
            if (i < text.size() && text[i] == '^') {
                ++i;
                skip_spaces();
                std::size_t start = i;
                while (i < text.size() && text[i] >= '0' && text[i] <= '9') ++i;
                if (start == i) throw ParseError("expected exponent digits after '^'", i);
                std::string digits(text.substr(start, i - start));
                if (digits.size() > 6 ||
                    (exponent = std::stoul(digits)) > max_exponent)
                    throw ParseError("exponent too large", start);
            }
        } else if (!have_coeff) {
            throw ParseError("expected a coefficient or variable", i);
        }

        if (coeffs.size() < exponent + 1) coeffs.resize(exponent + 1, Int(0));
        coeffs[exponent] += sign < 0 ? -coeff : coeff;
    }
    return from_coeffs(std::move(coeffs), std::move(var));
}

} // namespace adjmat
