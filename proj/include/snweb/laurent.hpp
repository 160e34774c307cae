#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "snweb/errors.hpp"

namespace snweb {

using Int = boost::multiprecision::cpp_int;

/// Laurent polynomial in one formal variable with exact integer coefficients.
///
/// The variable is anonymous: which power of which symbol an exponent means
/// (t, q = t^n, A, q^{1/4}, ...) is a convention of the caller. Stored terms
/// are canonical: no zero coefficient is ever kept.
class LaurentPoly {
public:
    LaurentPoly() = default;

    static LaurentPoly zero() { return {}; }
    static LaurentPoly one() { return monomial(0); }
    static LaurentPoly constant(Int c);
    static LaurentPoly monomial(long exp, Int coeff = 1);

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    const std::map<long, Int>& terms() const { return terms_; }
    Int coeff(long exp) const;
    long min_exp() const;  // requires !is_zero()
    long max_exp() const;

    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

    /// Multiply by coeff * x^exp in place.
    LaurentPoly& mul_term(long exp, const Int& coeff);

    /// Exact division; throws NotDivisible / DivisionByZero.
    LaurentPoly divide_exact(const LaurentPoly& b) const;
    std::optional<LaurentPoly> try_divide(const LaurentPoly& b) const;

    /// x -> x^a for integer a != 0 (a < 0 reverses exponents).
    LaurentPoly substitute_power(long a) const;
    /// x -> -x.
    LaurentPoly substitute_neg() const;
    /// Exponent rescaling e -> e*num/den; every e*num must be divisible by den.
    LaurentPoly rescale_exponents(long num, long den) const;

    /// All exponents divisible by m?
    bool exponents_divisible(long m) const;
    /// gcd of all exponents (0 for constants).
    long exponent_gcd() const;

    bool congruent_mod2(const LaurentPoly& o) const;
    bool nonnegative() const;

    /// Canonical rendering, ascending exponents: "-t^-2 + 3 + 2*t^4".
    std::string str(std::string_view var = "t") const;

    bool operator==(const LaurentPoly&) const = default;

private:
    std::map<long, Int> terms_;
};

/// Quotient num/den of Laurent polynomials, den != 0. Used transiently while
/// resolving crossings; every externally visible value must reduce back to a
/// LaurentPoly via reduce().
class RationalFunc {
public:
    RationalFunc() : den_(LaurentPoly::one()) {}
    RationalFunc(LaurentPoly num) : num_(std::move(num)), den_(LaurentPoly::one()) {}
    RationalFunc(LaurentPoly num, LaurentPoly den);

    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    friend RationalFunc operator+(const RationalFunc& a, const RationalFunc& b);
    friend RationalFunc operator*(const RationalFunc& a, const RationalFunc& b);
    RationalFunc operator-() const;

    /// Exact reduction to a Laurent polynomial; throws NonIntegralResult when
    /// num is not a multiple of den.
    LaurentPoly reduce() const;

private:
    LaurentPoly num_, den_;
};

}  // namespace snweb
