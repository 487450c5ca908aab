#pragma once

#include <map>

#include "horochow/poly.hpp"
#include "horochow/schubert.hpp"

namespace horochow::chern {

/// A vector bundle on a Grassmannian, described by its Chern classes
/// written as symmetric polynomials in the k dual tautological roots.
struct BundleChern {
    schubert::GrassContext ctx;
    int rank = 0;
    /// chern[i-1] is c_i, each a symmetric polynomial in ctx.k variables.
    std::vector<SymPoly> chern;

    /// c_i with c_0 = 1 and c_i = 0 above the rank.
    SymPoly c(int i) const;
};

/// Tautological quotient bundle of G(k, n): rank n-k, with c_i the complete
/// homogeneous symmetric polynomial h_i of the k dual subbundle roots.
BundleChern quotient_bundle(schubert::GrassContext ctx);

/// Class supported where a twisted cotwist of E drops rank: the top Chern
/// class of E-dual twisted by the line bundle with first Chern class c_1(E),
///     sum_{i=0..r} (-1)^i c_i(E) * c_1(E)^(r-i),
/// expanded into Schubert classes on the ambient Grassmannian.
schubert::SchubertCycle twisted_dual_top_chern(const BundleChern& e);

/// Same class, kept as a symmetric polynomial in the roots.
SymPoly twisted_dual_top_chern_poly(const BundleChern& e);

/// Class with separate symmetry in two groups of variables, stored by a
/// pair of shapes (external-factor side first, base side second).
struct BigradedClass {
    std::map<std::pair<Partition, Partition>, Rat> terms;

    friend bool operator==(const BigradedClass&, const BigradedClass&) = default;
};

/// Top Chern class of the external tensor product of E-dual with the dual
/// tautological line on a product of s projective lines:
///     prod_{i=1..s} (y_i^r + y_i^(r-1) c_1 + ... + c_r).
/// Fully expanded into pairs of Schur shapes.
BigradedClass external_tensor_top_chern(const BundleChern& e, int s);

/// One bidegree slice of the same product before Schur conversion: the
/// coefficient polynomials of the monomial basis in the y-variables, keyed
/// by shape, for the slice of base degree d.
std::map<Partition, SymPoly> external_tensor_m_slice(const BundleChern& e, int s, int d);

/// Report of the fundamental-class computation for the quintic cycle cut
/// out on G(2,7) by a generic twisted form.
struct FundamentalClassReport {
    SymPoly y_class;                       ///< the class as a polynomial in two roots
    std::map<Partition, Rat> y_expansion;  ///< its monomial-basis coefficients
    std::map<Partition, Rat> evaluations;  ///< integrals against products of special classes
    schubert::SchubertCycle cycle;         ///< the Schubert expansion on G(2,7)

    FundamentalClassReport() : cycle(schubert::GrassContext{2, 7}) {}
};

/// Compute the fundamental class of the five-dimensional cycle in G(2,7)
/// given by the vanishing of a generic section of Q-dual(1), by two routes:
/// monomial coefficients of the root polynomial, and intersection numbers
/// with products of special Schubert classes.  Both land in the report.
FundamentalClassReport g2_fundamental_class();

}  // namespace horochow::chern
