#pragma once

#include <string>
#include <vector>

#include "horochow/rational.hpp"

namespace horochow {

/// Dense univariate polynomial over the rationals.
class UniPoly {
public:
    UniPoly() = default;
    /// coeffs[i] is the coefficient of x^i; trailing zeros are stripped.
    explicit UniPoly(std::vector<Rat> coeffs);

    static UniPoly x_power(int k);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const std::vector<Rat>& coeffs() const { return coeffs_; }
    Rat coeff(int i) const;
    Rat leading() const;

    UniPoly& operator+=(const UniPoly& o);
    UniPoly& operator-=(const UniPoly& o);
    UniPoly operator*(const UniPoly& o) const;
    UniPoly operator*(const Rat& c) const;
    friend bool operator==(const UniPoly&, const UniPoly&) = default;

    UniPoly derivative() const;
    /// Scale so the leading coefficient is one.
    UniPoly monic() const;
    /// Polynomial remainder of *this by `divisor`.
    UniPoly rem(const UniPoly& divisor) const;

    /// Rendered with the given variable name, e.g. "x^3 - 2*x + 1".
    std::string str(const std::string& var = "x") const;

private:
    std::vector<Rat> coeffs_;
};

/// Monic greatest common divisor by the Euclidean algorithm.
UniPoly gcd(UniPoly a, UniPoly b);

/// True when the polynomial has no repeated roots (gcd with its derivative
/// is constant).
bool is_squarefree(const UniPoly& p);

}  // namespace horochow
