#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>

#include "tangles/errors.hpp"

namespace tangles {

using Int = boost::multiprecision::cpp_int;

/* An element of the ring of integer Laurent polynomials in one variable t.
   Stored as exponent -> coefficient with no zero coefficients kept. */
class Laurent {
  public:
    Laurent() = default;
    Laurent(long long n) { if (n != 0) c_[0] = n; }
    Laurent(const Int& n) { if (n != 0) c_[0] = n; }

    static Laurent t(std::int64_t k = 1) { return term(1, k); }
    static Laurent term(const Int& coeff, std::int64_t exp);

    bool is_zero() const { return c_.empty(); }
    bool is_one() const;
    /* Units of the ring are exactly +-t^k. */
    bool is_unit() const;

    const std::map<std::int64_t, Int>& coeffs() const { return c_; }
    Int coeff(std::int64_t k) const;
    int terms() const { return static_cast<int>(c_.size()); }
    std::int64_t lowest_exp() const;  /* requires nonzero */
    std::int64_t highest_exp() const; /* requires nonzero */

    Laurent operator-() const;
    Laurent& operator+=(const Laurent& o);
    Laurent& operator-=(const Laurent& o);
    friend Laurent operator+(Laurent a, const Laurent& b) { a += b; return a; }
    friend Laurent operator-(Laurent a, const Laurent& b) { a -= b; return a; }
    friend Laurent operator*(const Laurent& a, const Laurent& b);
    Laurent& operator*=(const Laurent& o) { *this = *this * o; return *this; }

    bool operator==(const Laurent&) const = default;

    /* The ring involution t -> t^-1. */
    Laurent involute() const;
    /* Multiplication by t^k. */
    Laurent shifted(std::int64_t k) const;
    /* Evaluation at t = 1. */
    Int eval_at_one() const;

  private:
    std::map<std::int64_t, Int> c_;
};

inline Laurent involute(const Laurent& p) { return p.involute(); }

/* Representative of the class of p up to multiplication by units:
   lowest exponent 0 and positive constant coefficient; zero maps to zero. */
Laurent canonical_form(const Laurent& p);

/* The unit u with p * u == canonical_form(p). Requires p nonzero. */
Laurent canonical_unit(const Laurent& p);

/* Equality up to multiplication by a unit. */
bool unit_equal(const Laurent& a, const Laurent& b);

/* (content, primitive part): content is the positive gcd of the
   coefficients and p == content * primitive. Errors on zero. */
std::pair<Int, Laurent> content_primitive(const Laurent& p);

/* Greatest common divisor, in canonical form. gcd(0, 0) == 0. */
Laurent gcd(const Laurent& a, const Laurent& b);
Laurent lcm(const Laurent& a, const Laurent& b);

/* Exact quotient a / b. Throws DivisionError unless b divides a. */
Laurent exact_div(const Laurent& a, const Laurent& b);

/* Textual form with descending exponents, e.g. "2t^2 - 3t + 2",
   "-t + 1", "t - 1 + t^-1", "0". */
std::string to_string(const Laurent& p);
/* Parses the textual form (whitespace tolerant). Throws ParseError. */
Laurent parse_laurent(std::string_view text);

std::string to_string(const Int& n);

/* A fraction of Laurent polynomials, kept reduced: gcd(num, den) is a
   unit and den is in canonical form, so equality is structural. */
class RatFunc {
  public:
    RatFunc() : den_(1) {}
    RatFunc(const Laurent& p) : num_(p), den_(1) {}
    RatFunc(Laurent num, Laurent den);

    const Laurent& num() const { return num_; }
    const Laurent& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_laurent() const { return den_.is_one(); }
    /* Requires is_laurent(). */
    const Laurent& as_laurent() const;

    RatFunc operator-() const;
    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
    RatFunc& operator+=(const RatFunc& o) { *this = *this + o; return *this; }
    RatFunc& operator-=(const RatFunc& o) { *this = *this - o; return *this; }
    RatFunc& operator*=(const RatFunc& o) { *this = *this * o; return *this; }
    RatFunc& operator/=(const RatFunc& o) { *this = *this / o; return *this; }

    bool operator==(const RatFunc&) const = default;

    /* Term count of num plus den; used by pivot selection. */
    int terms() const { return num_.terms() + den_.terms(); }

  private:
    void reduce();
    Laurent num_, den_;
};

std::string to_string(const RatFunc& f);

} // namespace tangles
