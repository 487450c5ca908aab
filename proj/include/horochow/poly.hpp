#pragma once

#include <map>
#include <string>
#include <vector>

#include "horochow/partition.hpp"
#include "horochow/rational.hpp"

namespace horochow {

/// Sparse multivariate polynomial over the rationals in a fixed number of
/// variables.  Terms are kept in a map from exponent vector to nonzero
/// coefficient, so iteration order and equality are canonical.
class SymPoly {
public:
    using Expo = std::vector<int>;
    using TermMap = std::map<Expo, Rat>;

    explicit SymPoly(int nvars = 0) : nvars_(nvars) {}

    static SymPoly constant(int nvars, Rat c);
    /// The variable x_i (0-based).
    static SymPoly variable(int nvars, int i);
    /// Single monomial with the given exponents.
    static SymPoly monomial(Expo e, Rat c);

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }
    Rat coeff(const Expo& e) const;

    /// Add `c * x^e`, erasing the term if the sum cancels.
    void add_term(const Expo& e, const Rat& c);

    SymPoly& operator+=(const SymPoly& o);
    SymPoly& operator-=(const SymPoly& o);
    SymPoly& operator*=(const Rat& c);
    SymPoly operator-() const;
    SymPoly operator*(const SymPoly& o) const;
    SymPoly pow(int k) const;

    friend SymPoly operator+(SymPoly a, const SymPoly& b) { return a += b; }
    friend SymPoly operator-(SymPoly a, const SymPoly& b) { return a -= b; }
    friend SymPoly operator*(const Rat& c, SymPoly p) { return p *= c; }
    friend bool operator==(const SymPoly&, const SymPoly&) = default;

    /// Total degree with unit weights; -1 for the zero polynomial.
    int degree() const;
    /// Total degree with one weight per variable; -1 for zero.
    int weighted_degree(const std::vector<int>& weights) const;
    bool is_homogeneous(const std::vector<int>& weights, int* degree_out = nullptr) const;

    /// Invariance under all adjacent-variable transpositions.
    bool is_symmetric() const;

    /// Substitute polynomials for the variables; `images[i]` replaces x_i and
    /// all images must share a variable count.
    SymPoly substitute(const std::vector<SymPoly>& images) const;

    /// Keep only terms whose exponent of variable `var` equals `value`, then
    /// delete that variable from the exponent vectors.
    SymPoly select_and_drop(int var, int value) const;

    /// Render with the given variable names, e.g. "1/2*h^3 - h*s".
    std::string str(const std::vector<std::string>& names) const;

private:
    int nvars_;
    TermMap terms_;
};

/// Leading exponent in plain lexicographic order; precondition: nonzero.
const SymPoly::Expo& lex_leading(const SymPoly& p);

}  // namespace horochow
