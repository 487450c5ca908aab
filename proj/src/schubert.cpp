#include "horochow/schubert.hpp"

#include <algorithm>

namespace horochow::schubert {

Partition GrassContext::box() const {
    std::vector<int> parts(k, n - k);
    return Partition(std::move(parts));
}

SchubertCycle::SchubertCycle(GrassContext ctx, const Partition& lam, Rat coeff)
    : ctx_(ctx) {
    if (!lam.fits_in_box(ctx.k, ctx.n - ctx.k))
        throw Error("shape " + lam.str() + " does not fit in G(" +
                    std::to_string(ctx.k) + "," + std::to_string(ctx.n) + ")");
    add(lam, coeff);
}

Rat SchubertCycle::coeff(const Partition& lam) const {
    auto it = terms_.find(lam);
    return it == terms_.end() ? Rat(0) : it->second;
}

void SchubertCycle::add(const Partition& lam, const Rat& c) {
    if (c.is_zero() || !lam.fits_in_box(ctx_.k, ctx_.n - ctx_.k)) return;
    auto [it, inserted] = terms_.emplace(lam, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

int SchubertCycle::degree(bool* mixed) const {
    if (mixed) *mixed = false;
    int deg = -1;
    for (const auto& [lam, c] : terms_) {
        if (deg == -1) {
            deg = lam.weight();
        } else if (lam.weight() != deg) {
            if (mixed) *mixed = true;
        }
    }
    return deg;
}

SchubertCycle& SchubertCycle::operator+=(const SchubertCycle& o) {
    if (!(o.ctx_ == ctx_)) throw ContextMismatch("cycles on different Grassmannians");
    for (const auto& [lam, c] : o.terms_) add(lam, c);
    return *this;
}

SchubertCycle& SchubertCycle::operator*=(const Rat& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [lam, v] : terms_) v *= c;
    return *this;
}

SchubertCycle grass_mult(const SchubertCycle& a, const SchubertCycle& b) {
    if (!(a.context() == b.context()))
        throw ContextMismatch("cycles on different Grassmannians");
    SchubertCycle out(a.context());
    for (const auto& [lam, ca] : a.terms()) {
        for (const auto& [mu, cb] : b.terms()) {
            const Rat c = ca * cb;
            for (const auto& [nu, lr] : symfunc::lr_product(lam, mu))
                out.add(nu, c * lr);
        }
    }
    return out;
}

Rat grass_integrate(const SchubertCycle& c) {
    bool mixed = false;
    c.degree(&mixed);
    if (mixed) throw Inhomogeneous("cannot integrate a class of mixed codimension");
    return c.coeff(c.context().box());
}

Rat evaluate_against(const SchubertCycle& fund, const SchubertCycle& alpha) {
    if (!(fund.context() == alpha.context()))
        throw ContextMismatch("cycles on different Grassmannians");
    bool mixed_f = false, mixed_a = false;
    const int df = fund.degree(&mixed_f);
    const int da = alpha.degree(&mixed_a);
    if (mixed_f || mixed_a)
        throw Inhomogeneous("pairing requires homogeneous classes");
    if (df < 0 || da < 0) return Rat(0);
    if (df + da != fund.context().dim())
        throw DegreeMismatch("codimensions " + std::to_string(df) + " + " +
                             std::to_string(da) + " do not sum to " +
                             std::to_string(fund.context().dim()));
    return grass_integrate(grass_mult(fund, alpha));
}

SchubertCycle restrict_to(const SchubertCycle& c, GrassContext target) {
    SchubertCycle out(target);
    for (const auto& [lam, v] : c.terms()) out.add(lam, v);
    return out;
}

namespace {

constexpr int kSpinorDim = 10;
const StrictPartition& spinor_point() {
    static const StrictPartition point{4, 3, 2, 1};
    return point;
}

bool fits_spinor(const StrictPartition& lam) { return lam.part(1) <= 4; }

}  // namespace

SpinorCycle::SpinorCycle(const StrictPartition& lam, Rat coeff) {
    if (!fits_spinor(lam))
        throw Error("shape " + lam.str() + " does not fit in (4,3,2,1)");
    add(lam, coeff);
}

Rat SpinorCycle::coeff(const StrictPartition& lam) const {
    auto it = terms_.find(lam);
    return it == terms_.end() ? Rat(0) : it->second;
}

void SpinorCycle::add(const StrictPartition& lam, const Rat& c) {
    if (c.is_zero() || !fits_spinor(lam)) return;
    auto [it, inserted] = terms_.emplace(lam, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

int SpinorCycle::degree(bool* mixed) const {
    if (mixed) *mixed = false;
    int deg = -1;
    for (const auto& [lam, c] : terms_) {
        if (deg == -1) {
            deg = lam.weight();
        } else if (lam.weight() != deg) {
            if (mixed) *mixed = true;
        }
    }
    return deg;
}

SpinorCycle& SpinorCycle::operator+=(const SpinorCycle& o) {
    for (const auto& [lam, c] : o.terms_) add(lam, c);
    return *this;
}

SpinorCycle& SpinorCycle::operator*=(const Rat& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [lam, v] : terms_) v *= c;
    return *this;
}

SpinorCycle spinor_mult(const SpinorCycle& a, const SpinorCycle& b) {
    SpinorCycle out;
    for (const auto& [lam, ca] : a.terms()) {
        for (const auto& [mu, cb] : b.terms()) {
            // Everything above the dimension of the variety dies, so skip
            // the symmetric-function work outright.
            if (lam.weight() + mu.weight() > kSpinorDim) continue;
            const Rat c = ca * cb;
            const auto prod = symfunc::pq_product(lam, mu, symfunc::PQFamily::P);
            for (const auto& [nu, coeff] : prod.terms) out.add(nu, c * coeff);
        }
    }
    return out;
}

Rat spinor_integrate(const SpinorCycle& c) {
    bool mixed = false;
    c.degree(&mixed);
    if (mixed) throw Inhomogeneous("cannot integrate a class of mixed codimension");
    return c.coeff(spinor_point());
}

}  // namespace horochow::schubert
