#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <variant>

#include "adjmat/errors.hpp"
#include "adjmat/ints.hpp"
#include "adjmat/polynomial.hpp"

namespace adjmat {

enum class DomainTag { integer, polynomial };

inline std::string_view domain_name(DomainTag t) {
    return t == DomainTag::integer ? "int" : "poly";
}

/// Dynamically tagged exact value: a big integer or an integer-coefficient
/// univariate polynomial. Arithmetic between mismatched tags throws
/// DomainMismatch. Statically typed code should prefer Int or Polynomial
/// directly; this type exists for boundaries where the domain is only
/// known at runtime (element parsing, matrix files).
class DomainElement {
public:
    DomainElement() : v_(Int(0)) {}
    DomainElement(long long v) : v_(Int(v)) {} // NOLINT: implicit for literals
    DomainElement(Int v) : v_(std::move(v)) {} // NOLINT
    DomainElement(Polynomial v) : v_(std::move(v)) {} // NOLINT

    DomainTag tag() const {
        return std::holds_alternative<Int>(v_) ? DomainTag::integer
                                               : DomainTag::polynomial;
    }

    const Int& as_int() const {
        if (tag() != DomainTag::integer)
            throw DomainMismatch("element is not an integer");
        return std::get<Int>(v_);
    }

    const Polynomial& as_poly() const {
        if (tag() != DomainTag::polynomial)
            throw DomainMismatch("element is not a polynomial");
        return std::get<Polynomial>(v_);
    }

    friend DomainElement operator+(const DomainElement& a, const DomainElement& b) {
        return combine(a, b, "+",
                       [](const auto& x, const auto& y) { return x + y; });
    }
    friend DomainElement operator-(const DomainElement& a, const DomainElement& b) {
        return combine(a, b, "-",
                       [](const auto& x, const auto& y) { return x - y; });
    }
    friend DomainElement operator*(const DomainElement& a, const DomainElement& b) {
        return combine(a, b, "*",
                       [](const auto& x, const auto& y) { return x * y; });
    }
    friend DomainElement operator-(const DomainElement& a) {
        return std::visit([](const auto& x) { return DomainElement(-x); }, a.v_);
    }

    DomainElement& operator+=(const DomainElement& o) { return *this = *this + o; }
    DomainElement& operator-=(const DomainElement& o) { return *this = *this - o; }
    DomainElement& operator*=(const DomainElement& o) { return *this = *this * o; }

    friend bool operator==(const DomainElement& a, const DomainElement& b) {
        if (a.tag() != b.tag()) return false;
        return a.tag() == DomainTag::integer ? a.as_int() == b.as_int()
                                             : a.as_poly() == b.as_poly();
    }
    friend bool operator!=(const DomainElement& a, const DomainElement& b) {
        return !(a == b);
    }

    friend bool is_zero(const DomainElement& a) {
        return std::visit([](const auto& x) { return is_zero(x); }, a.v_);
    }

    friend DomainElement exact_div(const DomainElement& a, const DomainElement& b) {
        return combine(a, b, "exact_div",
                       [](const auto& x, const auto& y) { return exact_div(x, y); });
    }

    friend bool divides(const DomainElement& divisor, const DomainElement& value) {
        if (divisor.tag() != value.tag())
            throw DomainMismatch(mismatch_message(value, divisor, "divides"));
        return value.tag() == DomainTag::integer
                   ? divides(divisor.as_int(), value.as_int())
                   : divides(divisor.as_poly(), value.as_poly());
    }

    friend DomainElement zero_like(const DomainElement& a) {
        return std::visit([](const auto& x) { return DomainElement(zero_like(x)); },
                          a.v_);
    }
    friend DomainElement one_like(const DomainElement& a) {
        return std::visit([](const auto& x) { return DomainElement(one_like(x)); },
                          a.v_);
    }
    friend DomainElement from_int_like(long long v, const DomainElement& a) {
        return std::visit(
            [v](const auto& x) { return DomainElement(from_int_like(v, x)); }, a.v_);
    }

    friend bool same_domain(const DomainElement& a, const DomainElement& b) {
        if (a.tag() != b.tag()) return false;
        return a.tag() == DomainTag::integer ||
               same_domain(a.as_poly(), b.as_poly());
    }

    friend std::string to_text(const DomainElement& a) {
        return std::visit([](const auto& x) { return to_text(x); }, a.v_);
    }

private:
    template <class Op>
    static DomainElement combine(const DomainElement& a, const DomainElement& b,
                                 const char* op, Op f) {
        if (a.tag() != b.tag())
            throw DomainMismatch(mismatch_message(a, b, op));
        if (a.tag() == DomainTag::integer)
            return DomainElement(f(a.as_int(), b.as_int()));
        return DomainElement(f(a.as_poly(), b.as_poly()));
    }

    static std::string mismatch_message(const DomainElement& a,
                                        const DomainElement& b, const char* op) {
        return std::string("domain mismatch in '") + op + "': " +
               std::string(domain_name(a.tag())) + " vs " +
               std::string(domain_name(b.tag()));
    }

    std::variant<Int, Polynomial> v_;
};

/// Parses an element, inferring the domain: any occurrence of the variable
/// makes it a polynomial, otherwise it is an integer.
inline DomainElement parse_element(std::string_view text,
                                   std::string_view var = "x") {
    if (text.find(var) != std::string_view::npos)
        return DomainElement(Polynomial::parse(text, std::string(var)));
    return DomainElement(Int::parse(text));
}

/// Parses an element as a member of the given domain. With the polynomial
/// tag, plain integers are accepted as constant polynomials; with the
/// integer tag, any variable occurrence is a parse error.
inline DomainElement parse_element(std::string_view text, DomainTag tag,
                                   std::string_view var = "x") {
    if (tag == DomainTag::polynomial)
        return DomainElement(Polynomial::parse(text, std::string(var)));
    if (text.find(var) != std::string_view::npos)
        throw ParseError("variable in integer-domain element", text.find(var));
    return DomainElement(Int::parse(text));
}

inline std::string format_element(const DomainElement& e) { return to_text(e); }

} // namespace adjmat
