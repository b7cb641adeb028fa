#pragma once

#include "jackd/rational.hpp"

#include <string>
#include <utility>
#include <vector>

namespace jackd {

/// Univariate polynomial in the deformation parameter with exact rational
/// coefficients. Coefficient k holds the a^k term; no trailing zeros are
/// stored, so the zero polynomial has an empty coefficient vector.
class AlphaPoly {
public:
    AlphaPoly() = default;
    AlphaPoly(int constant) { *this = AlphaPoly(Rat(constant)); }
    AlphaPoly(const Int& constant) { *this = AlphaPoly(Rat(constant)); }
    AlphaPoly(Rat constant);
    explicit AlphaPoly(std::vector<Rat> coeffs);

    static AlphaPoly variable();                       // a
    static AlphaPoly linear(Rat slope, Rat constant);  // slope*a + constant

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    Rat coeff(int k) const {
        return (k >= 0 && k < static_cast<int>(c_.size())) ? c_[k] : Rat(0);
    }
    const std::vector<Rat>& coeffs() const { return c_; }

    Rat eval(const Rat& a) const;

    AlphaPoly operator-() const;
    AlphaPoly& operator+=(const AlphaPoly& o);
    AlphaPoly& operator-=(const AlphaPoly& o);
    AlphaPoly operator+(const AlphaPoly& o) const;
    AlphaPoly operator-(const AlphaPoly& o) const;
    AlphaPoly operator*(const AlphaPoly& o) const;
    AlphaPoly& operator*=(const AlphaPoly& o);
    AlphaPoly operator*(const Rat& s) const;
    bool operator==(const AlphaPoly& o) const { return c_ == o.c_; }
    bool operator!=(const AlphaPoly& o) const { return c_ != o.c_; }

    /// Exact division by a^k. Throws std::domain_error if any of the low k
    /// coefficients is nonzero.
    AlphaPoly div_exact_alpha_power(int k) const;

    /// Rendering used by the CLI: ascending powers, "c*a^k" terms joined by
    /// " + " / " - ", the constant term as a bare rational. Zero is "0".
    std::string to_string() const;

    /// JSON form {"coeffs": ["num/den", ...]} ascending in degree.
    std::string to_json() const;
    static AlphaPoly from_json(const std::string& text);

private:
    void trim();
    std::vector<Rat> c_;
};

/// Polynomial in an auxiliary integer variable x whose coefficients are
/// AlphaPoly values; used for shift polynomials and finite differences.
class XPoly {
public:
    XPoly() = default;
    explicit XPoly(std::vector<AlphaPoly> coeffs);
    static XPoly constant(AlphaPoly c);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    AlphaPoly coeff(int k) const {
        return (k >= 0 && k < static_cast<int>(c_.size())) ? c_[k] : AlphaPoly();
    }

    AlphaPoly eval(const Rat& x) const;

    XPoly operator+(const XPoly& o) const;
    XPoly operator*(const XPoly& o) const;
    bool operator==(const XPoly& o) const { return c_ == o.c_; }

    /// Multiplies by (c1*x + c0).
    XPoly times_linear(const AlphaPoly& c1, const AlphaPoly& c0) const;

    /// Substitutes x -> x + 1.
    XPoly shift_by_one() const;

private:
    void trim();
    std::vector<AlphaPoly> c_;
};

/// k-th forward difference at the origin: sum_i (-1)^(k-i) C(k,i) p(i).
/// Zero whenever k exceeds deg(p).
AlphaPoly forward_difference(const XPoly& p, int k);

/// Unique polynomial of degree < #points through the given points, by exact
/// divided differences. Returns monomial coefficients, ascending. Throws
/// std::domain_error on duplicate abscissae.
std::vector<Rat> newton_interpolate(const std::vector<std::pair<Rat, Rat>>& points);

/// Exact determinant by fraction-free (Bareiss) elimination with row pivoting.
Rat det_exact(std::vector<std::vector<Rat>> m);

/// Coefficients c_k with p = sum_k c_k * a^k * x(x-1)...(x-k+1), computed by
/// synthetic division at integer nodes. Throws std::domain_error when a
/// division by the deformation parameter is inexact (the input is then not
/// expressible in this basis over polynomials).
std::vector<AlphaPoly> falling_factorial_expand(const XPoly& p);

/// Inverse of the expansion; used for round-trip checks.
XPoly falling_factorial_assemble(const std::vector<AlphaPoly>& coeffs);

}  // namespace jackd
