#include "horochow/symfunc.hpp"

#include <algorithm>
#include <functional>

namespace horochow::symfunc {

SymPoly monomial_symmetric(const Partition& lam, int nvars) {
    if (lam.length() > nvars)
        throw TooManyParts("partition " + lam.str() + " has more than " +
                           std::to_string(nvars) + " parts");
    SymPoly out(nvars);
    std::vector<int> expo(lam.parts());
    expo.resize(nvars, 0);
    std::sort(expo.begin(), expo.end());
    do {
        out.add_term(expo, Rat(1));
    } while (std::next_permutation(expo.begin(), expo.end()));
    return out;
}

SymPoly schur_polynomial(const Partition& lam, int nvars) {
    SymPoly out(nvars);
    const int rows = lam.length();
    if (rows == 0) return SymPoly::constant(nvars, Rat(1));
    if (rows > nvars) return out;  // no column-strict filling exists

    // Semistandard fillings, cell by cell in row-major order.  `tab[r][c]`
    // holds values 1..nvars; rows weakly increase, columns strictly increase.
    std::vector<std::vector<int>> tab(rows);
    for (int r = 0; r < rows; ++r) tab[r].assign(lam.part(r + 1), 0);
    std::vector<int> content(nvars, 0);

    std::function<void(int, int)> fill = [&](int r, int c) {
        if (r == rows) {
            out.add_term(content, Rat(1));
            return;
        }
        const int next_r = (c + 1 < lam.part(r + 1)) ? r : r + 1;
        const int next_c = (c + 1 < lam.part(r + 1)) ? c + 1 : 0;
        int lo = 1;
        if (c > 0) lo = std::max(lo, tab[r][c - 1]);
        if (r > 0 && c < lam.part(r)) lo = std::max(lo, tab[r - 1][c] + 1);
        for (int v = lo; v <= nvars; ++v) {
            tab[r][c] = v;
            ++content[v - 1];
            fill(next_r, next_c);
            --content[v - 1];
        }
    };
    fill(0, 0);
    return out;
}

SchurExpansion schur_expand(const SymPoly& p) {
    if (!p.is_symmetric()) throw NotSymmetric("polynomial is not symmetric");
    SchurExpansion out;
    SymPoly rest = p;
    while (!rest.is_zero()) {
        // The lexicographically largest exponent of a symmetric polynomial is
        // weakly decreasing, and subtracting the matching Schur polynomial
        // strictly lowers it, so this greedy elimination terminates.
        SymPoly::Expo e = lex_leading(rest);
        const Rat c = rest.coeff(e);
        while (!e.empty() && e.back() == 0) e.pop_back();
        Partition lam(e);
        rest -= c * schur_polynomial(lam, p.nvars());
        out[lam] += c;
        if (out[lam].is_zero()) out.erase(lam);
    }
    return out;
}

namespace {

/// Skew cells of nu/lam in reading order: rows top to bottom, and within a
/// row from right to left, so the reading word is produced in order.
std::vector<std::pair<int, int>> skew_reading_cells(const Partition& nu,
                                                    const Partition& lam) {
    std::vector<std::pair<int, int>> cells;
    for (int r = 1; r <= nu.length(); ++r)
        for (int c = nu.part(r); c > lam.part(r); --c) cells.emplace_back(r, c);
    return cells;
}

bool contains(const Partition& outer, const Partition& inner) {
    for (int r = 1; r <= inner.length(); ++r)
        if (inner.part(r) > outer.part(r)) return false;
    return true;
}

}  // namespace

long lr_coefficient(const Partition& nu, const Partition& lam, const Partition& mu) {
    if (nu.weight() != lam.weight() + mu.weight()) return 0;
    if (!contains(nu, lam)) return 0;

    const auto cells = skew_reading_cells(nu, lam);
    const int letters = mu.length();
    // value placed at each skew cell, indexed by (row, col); 0 = empty
    std::map<std::pair<int, int>, int> tab;
    std::vector<int> used(letters + 1, 0);
    long count = 0;

    std::function<void(std::size_t)> fill = [&](std::size_t k) {
        if (k == cells.size()) {
            ++count;
            return;
        }
        const auto [r, c] = cells[k];
        for (int v = 1; v <= letters; ++v) {
            if (used[v] == mu.part(v)) continue;
            // lattice condition on the reverse reading word
            if (v > 1 && used[v] >= used[v - 1]) continue;
            // weakly increasing along the row (right neighbour already set)
            if (auto it = tab.find({r, c + 1}); it != tab.end() && v > it->second)
                continue;
            // strictly increasing down the column (cell above already set)
            if (auto it = tab.find({r - 1, c}); it != tab.end() && v <= it->second)
                continue;
            // the cell above must not be an unfilled skew cell
            if (r > 1 && c > lam.part(r - 1) && c <= nu.part(r - 1) &&
                tab.find({r - 1, c}) == tab.end())
                continue;  // unreachable in reading order, kept as a guard
            tab[{r, c}] = v;
            ++used[v];
            fill(k + 1);
            --used[v];
            tab.erase({r, c});
        }
    };
    fill(0);
    return count;
}

SchurExpansion lr_product(const Partition& lam, const Partition& mu) {
    SchurExpansion out;
    const int w = lam.weight() + mu.weight();
    const int max_parts = lam.length() + mu.length();
    const int max_part = lam.part(1) + mu.part(1);
    for (const Partition& nu : partitions_of(w, std::max(max_parts, 1),
                                             std::max(max_part, 1))) {
        const long c = lr_coefficient(nu, lam, mu);
        if (c != 0) out[nu] = Rat(static_cast<int>(c));
    }
    return out;
}

namespace {

/// Marked shifted tableaux enumerator.  Letters are encoded as
/// 2k-1 = k' (primed) and 2k = k (unprimed), so numeric order matches the
/// alphabet 1' < 1 < 2' < 2 < ...  Rules: rows and columns weakly increase;
/// a primed letter repeats in no row; an unprimed letter repeats in no
/// column; for the P-family the main diagonal carries no primed letters.
SymPoly shifted_tableaux_sum(const StrictPartition& lam, int nvars, bool allow_primed_diag) {
    const int rows = lam.length();
    if (rows == 0) return SymPoly::constant(nvars, Rat(1));
    SymPoly out(nvars);

    // Row r (0-based) occupies columns r .. r + lam_r - 1 of the shifted diagram.
    std::vector<std::vector<int>> tab(rows);
    for (int r = 0; r < rows; ++r) tab[r].assign(lam.part(r + 1), 0);
    std::vector<int> content(nvars, 0);

    // tab[r][j] holds the cell in diagram column r + j.
    auto cell_above = [&](int r, int j) -> int {
        if (r == 0) return 0;
        const int col = r + j;
        const int j_up = col - (r - 1);
        if (j_up < 0 || j_up >= lam.part(r)) return 0;
        return tab[r - 1][j_up];
    };

    std::function<void(int, int)> fill = [&](int r, int j) {
        if (r == rows) {
            out.add_term(content, Rat(1));
            return;
        }
        const int next_r = (j + 1 < lam.part(r + 1)) ? r : r + 1;
        const int next_j = (j + 1 < lam.part(r + 1)) ? j + 1 : 0;
        const int left = (j > 0) ? tab[r][j - 1] : 0;
        const int above = cell_above(r, j);
        const bool on_diag = (j == 0);
        for (int v = std::max(left, above); v <= 2 * nvars; ++v) {
            if (v < 1) continue;
            const bool primed = (v % 2 == 1);
            if (primed && v == left) continue;       // primed repeat in a row
            if (!primed && v == above) continue;     // unprimed repeat in a column
            if (primed && on_diag && !allow_primed_diag) continue;
            tab[r][j] = v;
            ++content[(v + 1) / 2 - 1];
            fill(next_r, next_j);
            --content[(v + 1) / 2 - 1];
        }
        tab[r][j] = 0;
    };
    fill(0, 0);
    return out;
}

Rat leading_unit(const StrictPartition& nu, PQFamily family) {
    // P_nu is monic in x^nu; Q_nu leads with 2^(number of parts).
    if (family == PQFamily::P) return Rat(1);
    Rat c(1);
    for (int i = 0; i < nu.length(); ++i) c *= Rat(2);
    return c;
}

}  // namespace

SymPoly pq_polynomial(const StrictPartition& lam, int nvars, PQFamily family) {
    if (nvars < lam.weight())
        throw Error("need at least " + std::to_string(lam.weight()) +
                    " variables for " + lam.str());
    return shifted_tableaux_sum(lam, nvars, family == PQFamily::Q);
}

PQExpansion pq_product(const StrictPartition& lam, const StrictPartition& mu,
                       PQFamily family) {
    PQExpansion out;
    out.family = family;
    const int w = lam.weight() + mu.weight();
    const int nvars = std::max(w, 1);
    SymPoly rest = pq_polynomial(lam, nvars, family) * pq_polynomial(mu, nvars, family);
    while (!rest.is_zero()) {
        SymPoly::Expo e = lex_leading(rest);
        const Rat lead_coeff = rest.coeff(e);
        while (!e.empty() && e.back() == 0) e.pop_back();
        Partition shape(e);
        if (!shape.is_strict())
            throw Error("expansion left the span of the P/Q basis");
        StrictPartition nu(shape);
        const Rat c = lead_coeff / leading_unit(nu, family);
        rest -= c * pq_polynomial(nu, nvars, family);
        out.terms[nu] += c;
        if (out.terms[nu].is_zero()) out.terms.erase(nu);
    }
    return out;
}

PQExpansion convert(const PQExpansion& e, PQFamily target) {
    if (e.family == target) return e;
    PQExpansion out;
    out.family = target;
    for (const auto& [nu, c] : e.terms) {
        Rat scale(1);
        for (int i = 0; i < nu.length(); ++i)
            scale *= (target == PQFamily::P) ? Rat(2) : Rat(1, 2);
        out.terms[nu] = c * scale;
    }
    return out;
}

}  // namespace horochow::symfunc
