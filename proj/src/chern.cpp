#include "horochow/chern.hpp"

#include <algorithm>
#include <numeric>

#include "horochow/symfunc.hpp"

namespace horochow::chern {

SymPoly BundleChern::c(int i) const {
    if (i == 0) return SymPoly::constant(ctx.k, Rat(1));
    if (i < 0 || i > rank) return SymPoly(ctx.k);
    if (i > static_cast<int>(chern.size()))
        throw Error("Chern class c_" + std::to_string(i) + " not provided");
    return chern[i - 1];
}

BundleChern quotient_bundle(schubert::GrassContext ctx) {
    BundleChern e;
    e.ctx = ctx;
    e.rank = ctx.n - ctx.k;
    for (int i = 1; i <= e.rank; ++i)
        e.chern.push_back(symfunc::schur_polynomial(Partition{i}, ctx.k));
    return e;
}

SymPoly twisted_dual_top_chern_poly(const BundleChern& e) {
    const SymPoly t = e.c(1);
    SymPoly out(e.ctx.k);
    for (int i = 0; i <= e.rank; ++i) {
        SymPoly term = e.c(i) * t.pow(e.rank - i);
        if (i % 2 == 1) term = -term;
        out += term;
    }
    return out;
}

schubert::SchubertCycle twisted_dual_top_chern(const BundleChern& e) {
    schubert::SchubertCycle out(e.ctx);
    for (const auto& [lam, c] : symfunc::schur_expand(twisted_dual_top_chern_poly(e)))
        out.add(lam, c);
    return out;
}

namespace {

/// The product prod_i (y_i^r + y_i^(r-1) c_1 + ... + c_r) as a polynomial
/// in s external variables y and the k base roots, y-block first.
SymPoly external_product(const BundleChern& e, int s) {
    const int k = e.ctx.k;
    const int nvars = s + k;
    auto lift = [&](const SymPoly& base, int ydeg, int yvar) {
        SymPoly out(nvars);
        for (const auto& [expo, c] : base.terms()) {
            SymPoly::Expo full(nvars, 0);
            full[yvar] = ydeg;
            std::copy(expo.begin(), expo.end(), full.begin() + s);
            out.add_term(full, c);
        }
        return out;
    };
    SymPoly prod = SymPoly::constant(nvars, Rat(1));
    for (int i = 0; i < s; ++i) {
        SymPoly factor(nvars);
        for (int j = 0; j <= e.rank; ++j) factor += lift(e.c(j), e.rank - j, i);
        prod = prod * factor;
    }
    return prod;
}

Partition shape_of(std::vector<int> expo) {
    std::sort(expo.begin(), expo.end(), std::greater<int>());
    return Partition(std::move(expo));
}

}  // namespace

std::map<Partition, SymPoly> external_tensor_m_slice(const BundleChern& e, int s, int d) {
    const int k = e.ctx.k;
    const SymPoly prod = external_product(e, s);
    std::map<Partition, SymPoly> out;
    for (const auto& [expo, c] : prod.terms()) {
        std::vector<int> yexpo(expo.begin(), expo.begin() + s);
        const int base_deg =
            std::accumulate(expo.begin() + s, expo.end(), 0, std::plus<int>());
        if (base_deg != d) continue;
        // Record each orbit of y-exponents once, under its sorted shape.
        if (!std::is_sorted(yexpo.begin(), yexpo.end(), std::greater<int>())) continue;
        SymPoly::Expo base(expo.begin() + s, expo.end());
        auto [it, inserted] = out.emplace(shape_of(yexpo), SymPoly(k));
        it->second.add_term(base, c);
    }
    return out;
}

BigradedClass external_tensor_top_chern(const BundleChern& e, int s) {
    const int k = e.ctx.k;
    SymPoly rest = external_product(e, s);
    BigradedClass out;
    // Peel off the lexicographically largest y-shape, Schur-expand its
    // coefficient polynomial, and keep going until nothing remains.
    while (!rest.is_zero()) {
        const SymPoly::Expo lead = lex_leading(rest);
        std::vector<int> yexpo(lead.begin(), lead.begin() + s);
        const Partition mu = shape_of(yexpo);

        // Coefficient of the exact monomial y^mu as a polynomial in the roots.
        SymPoly coeff_poly(k);
        for (const auto& [expo, c] : rest.terms()) {
            bool match = true;
            for (int i = 0; i < s && match; ++i) match = (expo[i] == mu.part(i + 1));
            if (!match) continue;
            coeff_poly.add_term(SymPoly::Expo(expo.begin() + s, expo.end()), c);
        }

        // Subtract s_mu(y) * coeff_poly(x) from the remainder.
        SymPoly smu = symfunc::schur_polynomial(mu, s);
        SymPoly lifted(s + k);
        for (const auto& [ye, yc] : smu.terms()) {
            for (const auto& [xe, xc] : coeff_poly.terms()) {
                SymPoly::Expo full(ye);
                full.insert(full.end(), xe.begin(), xe.end());
                lifted.add_term(full, yc * xc);
            }
        }
        rest -= lifted;

        for (const auto& [lam, c] : symfunc::schur_expand(coeff_poly)) {
            auto key = std::make_pair(mu, lam);
            auto [it, inserted] = out.terms.emplace(key, c);
            if (!inserted) {
                it->second += c;
                if (it->second.is_zero()) out.terms.erase(it);
            }
        }
    }
    return out;
}

FundamentalClassReport g2_fundamental_class() {
    const schubert::GrassContext ctx{2, 7};
    const BundleChern q = quotient_bundle(ctx);

    FundamentalClassReport report;
    report.y_class = twisted_dual_top_chern_poly(q);

    // Route one: read off monomial-basis coefficients of the root polynomial
    // (one representative monomial per orbit, the weakly decreasing one).
    for (const auto& [expo, c] : report.y_class.terms()) {
        if (!std::is_sorted(expo.begin(), expo.end(), std::greater<int>())) continue;
        report.y_expansion[Partition(expo)] = c;
    }

    // The Schubert expansion of the class.
    report.cycle = twisted_dual_top_chern(q);

    // Route two: intersection numbers with products of special classes
    // sigma_{mu_1} * sigma_{mu_2} * ..., one for every shape that can carry
    // a monomial coefficient in two roots.
    const int codim = q.rank;
    for (const Partition& mu : partitions_of(codim, ctx.k, codim)) {
        schubert::SchubertCycle prod = report.cycle;
        for (int p : mu.parts())
            prod = schubert::grass_mult(prod, schubert::SchubertCycle(ctx, Partition{p}));
        report.evaluations[mu] = schubert::grass_integrate(prod);
    }
    // Shapes absent from the polynomial still get an explicit zero so both
    // routes are compared on the same index set.
    for (const auto& [mu, c] : report.evaluations)
        if (!report.y_expansion.count(mu)) report.y_expansion[mu] = Rat(0);
    return report;
}

}  // namespace horochow::chern
