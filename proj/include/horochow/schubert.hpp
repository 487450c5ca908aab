#pragma once

#include <map>

#include "horochow/partition.hpp"
#include "horochow/rational.hpp"
#include "horochow/symfunc.hpp"

namespace horochow::schubert {

/// The Grassmannian G(k, n) of k-planes in n-space.
struct GrassContext {
    int k = 0;
    int n = 0;

    int dim() const { return k * (n - k); }
    /// Shape of the fundamental-point class: the full k x (n-k) box.
    Partition box() const;

    friend bool operator==(const GrassContext&, const GrassContext&) = default;
};

/// Rational combination of Schubert classes on a fixed Grassmannian.
class SchubertCycle {
public:
    explicit SchubertCycle(GrassContext ctx) : ctx_(ctx) {}
    /// Single class sigma_lam; throws Error when lam does not fit the box.
    SchubertCycle(GrassContext ctx, const Partition& lam, Rat coeff = Rat(1));

    const GrassContext& context() const { return ctx_; }
    const std::map<Partition, Rat>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Rat coeff(const Partition& lam) const;

    /// Adds c * sigma_lam, silently dropping shapes outside the box.
    void add(const Partition& lam, const Rat& c);

    /// Common codimension of all terms; -1 for zero.  `mixed` is set when
    /// several codimensions occur.
    int degree(bool* mixed = nullptr) const;

    SchubertCycle& operator+=(const SchubertCycle& o);
    SchubertCycle& operator*=(const Rat& c);
    friend bool operator==(const SchubertCycle&, const SchubertCycle&) = default;

private:
    GrassContext ctx_;
    std::map<Partition, Rat> terms_;
};

/// Product in the Chow ring of the Grassmannian: Littlewood-Richardson
/// expansion with shapes outside the box discarded.
/// Throws ContextMismatch when the factors live on different Grassmannians.
SchubertCycle grass_mult(const SchubertCycle& a, const SchubertCycle& b);

/// Integral over the Grassmannian: the coefficient of the point class.
/// Throws Inhomogeneous on classes of mixed codimension; a homogeneous
/// class below the top codimension integrates to zero.
Rat grass_integrate(const SchubertCycle& c);

/// Intersection number of two homogeneous classes of complementary
/// codimension.  Throws ContextMismatch, Inhomogeneous, or DegreeMismatch
/// when the codimensions do not sum to the dimension.
Rat evaluate_against(const SchubertCycle& fund, const SchubertCycle& alpha);

/// Reinterpret a cycle on a smaller Grassmannian by discarding shapes that
/// no longer fit (restriction along the standard embedding).
SchubertCycle restrict_to(const SchubertCycle& c, GrassContext target);

/// Rational combination of Schubert classes on the ten-dimensional spinor
/// variety; shapes are strict partitions inside (4,3,2,1).
class SpinorCycle {
public:
    SpinorCycle() = default;
    explicit SpinorCycle(const StrictPartition& lam, Rat coeff = Rat(1));

    const std::map<StrictPartition, Rat>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Rat coeff(const StrictPartition& lam) const;

    /// Adds c * gamma_lam, dropping shapes with a part above four.
    void add(const StrictPartition& lam, const Rat& c);

    int degree(bool* mixed = nullptr) const;

    SpinorCycle& operator+=(const SpinorCycle& o);
    SpinorCycle& operator*=(const Rat& c);
    friend bool operator==(const SpinorCycle&, const SpinorCycle&) = default;

private:
    std::map<StrictPartition, Rat> terms_;
};

/// Product on the spinor variety: Schur P-function structure constants with
/// shapes outside (4,3,2,1) discarded.  Pairs of total weight above ten
/// contribute nothing and are skipped outright.
SpinorCycle spinor_mult(const SpinorCycle& a, const SpinorCycle& b);

/// Coefficient of the point class gamma_(4,3,2,1); same error contract as
/// grass_integrate.
Rat spinor_integrate(const SpinorCycle& c);

}  // namespace horochow::schubert
