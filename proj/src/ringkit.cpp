#include "horochow/ringkit.hpp"

#include <algorithm>
#include <functional>

#include "horochow/errors.hpp"

namespace horochow::ringkit {

namespace {

/// Column order of the reduction: quantum exponent ascending, then
/// lexicographically descending exponents, so quantum-free monomials come
/// first and the elimination prefers them as basis representatives.
struct MonoOrder {
    int q_index;
    bool operator()(const SymPoly::Expo& a, const SymPoly::Expo& b) const {
        if (q_index >= 0 && a[q_index] != b[q_index]) return a[q_index] < b[q_index];
        return a > b;
    }
};

void enumerate_monos(const std::vector<int>& weights, int d, std::size_t i,
                     SymPoly::Expo& acc, std::vector<SymPoly::Expo>& out) {
    if (i == weights.size()) {
        if (d == 0) out.push_back(acc);
        return;
    }
    for (int e = 0; e * weights[i] <= d; ++e) {
        acc[i] = e;
        enumerate_monos(weights, d - e * weights[i], i + 1, acc, out);
    }
    acc[i] = 0;
}

}  // namespace

int RingElt::degree(bool* mixed) const {
    if (mixed) *mixed = false;
    if (!ring_ || nf_.is_zero()) return -1;
    int deg = -1;
    for (const auto& [e, c] : nf_.terms()) {
        int d = 0;
        for (int i = 0; i < nf_.nvars(); ++i) d += e[i] * ring_->weights()[i];
        if (deg == -1) {
            deg = d;
        } else if (d != deg && mixed) {
            *mixed = true;
        }
    }
    return deg;
}

RingElt& RingElt::operator+=(const RingElt& o) {
    if (ring_ != o.ring_) throw RingMismatch("elements of different rings");
    nf_ += o.nf_;
    return *this;
}

RingElt& RingElt::operator-=(const RingElt& o) {
    if (ring_ != o.ring_) throw RingMismatch("elements of different rings");
    nf_ -= o.nf_;
    return *this;
}

RingElt& RingElt::operator*=(const Rat& c) {
    nf_ *= c;
    return *this;
}

RingPtr GradedRing::build(Presentation pres, std::optional<std::vector<int>> expected_hilbert) {
    auto ring = std::shared_ptr<GradedRing>(new GradedRing());
    ring->pres_ = std::move(pres);
    const auto& p = ring->pres_;
    if (p.generators.empty()) throw Error("ring needs at least one generator");
    for (const auto& g : p.generators) {
        if (g.degree <= 0) throw Error("generator degrees must be positive");
        if (g.name.empty()) throw Error("generator names must be nonempty");
    }
    for (const auto& g : p.generators) ring->weights_.push_back(g.degree);

    if (!p.quantum.empty()) {
        ring->q_index_ = ring->generator_index(p.quantum);
        if (ring->q_index_ < 0)
            throw Error("quantum parameter " + p.quantum + " is not a generator");
    }

    const int top = p.top_degree;
    const int qdeg = ring->q_index_ >= 0 ? ring->weights_[ring->q_index_] : 0;
    ring->maxdeg_ = std::max(2 * top, ring->q_index_ >= 0 ? top + 2 * qdeg : 0);

    for (const auto& rel : p.relations) {
        if (rel.nvars() != ring->nvars())
            throw Error("relation arity does not match the generators");
        int deg = -1;
        if (!rel.is_homogeneous(ring->weights_, &deg) || rel.is_zero())
            throw InhomogeneousRelation("relation is not homogeneous for the grading");
    }

    for (int d = 0; d <= ring->maxdeg_; ++d) ring->build_slice(d);

    if (ring->q_index_ >= 0) ring->check_quantum_slices();

    if (expected_hilbert) {
        if (static_cast<int>(expected_hilbert->size()) != top + 1)
            throw HilbertMismatch("expected Hilbert data of length " +
                                      std::to_string(top + 1) + ", got " +
                                      std::to_string(expected_hilbert->size()),
                                  static_cast<int>(expected_hilbert->size()));
        for (int d = 0; d <= top; ++d) {
            const int want = (*expected_hilbert)[d];
            if (ring->classical_dimension(d) != want)
                throw HilbertMismatch(
                    "dimension " + std::to_string(ring->classical_dimension(d)) +
                        " at degree " + std::to_string(d) + ", expected " +
                        std::to_string(want),
                    d);
        }
    }

    ring->setup_integration();
    return ring;
}

void GradedRing::build_slice(int d) {
    Slice s;
    SymPoly::Expo acc(nvars(), 0);
    enumerate_monos(weights_, d, 0, acc, s.monos);
    std::sort(s.monos.begin(), s.monos.end(), MonoOrder{q_index_});
    for (int i = 0; i < static_cast<int>(s.monos.size()); ++i) s.index[s.monos[i]] = i;

    // Rows: every relation times every monomial of the complementary degree.
    std::vector<VecQ> rows;
    for (const auto& rel : pres_.relations) {
        int rd = 0;
        rel.is_homogeneous(weights_, &rd);
        if (rd > d) continue;
        std::vector<SymPoly::Expo> cof;
        SymPoly::Expo acc2(nvars(), 0);
        enumerate_monos(weights_, d - rd, 0, acc2, cof);
        for (const auto& m : cof) {
            VecQ row(static_cast<int>(s.monos.size()));
            row.setConstant(Rat(0));
            for (const auto& [e, c] : rel.terms()) {
                SymPoly::Expo prod(e);
                for (int i = 0; i < nvars(); ++i) prod[i] += m[i];
                row(s.index.at(prod)) += c;
            }
            rows.push_back(std::move(row));
        }
    }

    std::vector<bool> is_pivot(s.monos.size(), false);
    if (!rows.empty()) {
        MatQ mat(static_cast<int>(rows.size()), static_cast<int>(s.monos.size()));
        for (int i = 0; i < static_cast<int>(rows.size()); ++i) mat.row(i) = rows[i].transpose();
        Rref e = rref(std::move(mat));
        for (int pcol : e.pivots) is_pivot[pcol] = true;

        std::vector<int> basis_pos(s.monos.size(), -1);
        for (int j = 0; j < static_cast<int>(s.monos.size()); ++j) {
            if (is_pivot[j]) continue;
            basis_pos[j] = static_cast<int>(s.basis.size());
            s.basis.push_back(j);
        }
        s.coords.resize(s.monos.size());
        for (int j = 0; j < static_cast<int>(s.monos.size()); ++j) {
            VecQ v(static_cast<int>(s.basis.size()));
            v.setConstant(Rat(0));
            if (!is_pivot[j]) v(basis_pos[j]) = Rat(1);
            s.coords[j] = std::move(v);
        }
        for (int row = 0; row < e.rank; ++row) {
            const int pcol = e.pivots[row];
            VecQ v(static_cast<int>(s.basis.size()));
            v.setConstant(Rat(0));
            for (int b = 0; b < static_cast<int>(s.basis.size()); ++b)
                v(b) = -e.mat(row, s.basis[b]);
            s.coords[pcol] = std::move(v);
        }
    } else {
        for (int j = 0; j < static_cast<int>(s.monos.size()); ++j) s.basis.push_back(j);
        s.coords.resize(s.monos.size());
        for (int j = 0; j < static_cast<int>(s.monos.size()); ++j) {
            VecQ v(static_cast<int>(s.basis.size()));
            v.setConstant(Rat(0));
            v(j) = Rat(1);
            s.coords[j] = std::move(v);
        }
    }
    slices_.push_back(std::move(s));
}

void GradedRing::check_quantum_slices() const {
    const int qdeg = weights_[q_index_];
    for (int d = 0; d <= maxdeg_; ++d) {
        const Slice& s = slices_[d];
        // Group the basis monomials by quantum exponent.
        std::map<int, std::vector<SymPoly::Expo>> by_q;
        for (int b : s.basis) {
            SymPoly::Expo stripped = s.monos[b];
            const int k = stripped[q_index_];
            stripped[q_index_] = 0;
            by_q[k].push_back(std::move(stripped));
        }
        const int kmax = d / qdeg;
        for (int k = 1; k <= kmax; ++k) {
            std::vector<SymPoly::Expo> expect;
            for (int b : slices_[d - k * qdeg].basis) {
                const SymPoly::Expo& m = slices_[d - k * qdeg].monos[b];
                if (m[q_index_] == 0) expect.push_back(m);
            }
            std::vector<SymPoly::Expo> got = by_q.count(k) ? by_q[k]
                                                           : std::vector<SymPoly::Expo>{};
            std::sort(expect.begin(), expect.end());
            std::sort(got.begin(), got.end());
            if (expect != got)
                throw InvariantViolation(
                    "quantum basis slice mismatch at degree " + std::to_string(d) +
                    ", parameter exponent " + std::to_string(k));
        }
    }
}

void GradedRing::setup_integration() {
    if (!pres_.normalization) return;
    const auto& nz = *pres_.normalization;
    const int gi = generator_index(nz.generator);
    if (gi < 0) throw Error("normalization generator " + nz.generator + " unknown");
    if (nz.exponent * weights_[gi] != pres_.top_degree)
        throw Error("normalization monomial does not have top degree");

    const auto classical_top = classical_basis_monomials(pres_.top_degree);
    if (classical_top.size() != 1)
        throw Error("top degree is not one-dimensional; cannot normalize integration");
    top_mono_ = classical_top[0];

    SymPoly::Expo e(nvars(), 0);
    e[gi] = nz.exponent;
    const RingElt nf = normal_form(SymPoly::monomial(e, Rat(1)));
    const Rat c = nf.poly().coeff(top_mono_);
    if (c.is_zero()) throw Error("normalization monomial reduces to zero");
    integral_scale_ = nz.value / c;
    has_integral_ = true;
}

int GradedRing::generator_index(const std::string& name) const {
    for (int i = 0; i < nvars(); ++i)
        if (pres_.generators[i].name == name) return i;
    return -1;
}

int GradedRing::dimension(int d) const {
    if (d < 0 || d > maxdeg_) throw DegreeOutOfRange("degree " + std::to_string(d));
    return static_cast<int>(slices_[d].basis.size());
}

int GradedRing::classical_dimension(int d) const {
    if (d < 0 || d > maxdeg_) throw DegreeOutOfRange("degree " + std::to_string(d));
    if (q_index_ < 0) return dimension(d);
    int count = 0;
    for (int b : slices_[d].basis)
        if (slices_[d].monos[b][q_index_] == 0) ++count;
    return count;
}

std::vector<int> GradedRing::hilbert_function() const {
    std::vector<int> h;
    for (int d = 0; d <= pres_.top_degree; ++d) h.push_back(classical_dimension(d));
    return h;
}

std::vector<SymPoly::Expo> GradedRing::basis_monomials(int d) const {
    if (d < 0 || d > maxdeg_) throw DegreeOutOfRange("degree " + std::to_string(d));
    std::vector<SymPoly::Expo> out;
    for (int b : slices_[d].basis) out.push_back(slices_[d].monos[b]);
    return out;
}

std::vector<SymPoly::Expo> GradedRing::classical_basis_monomials(int d) const {
    std::vector<SymPoly::Expo> out;
    for (const auto& m : basis_monomials(d))
        if (q_index_ < 0 || m[q_index_] == 0) out.push_back(m);
    return out;
}

RingElt GradedRing::normal_form(const SymPoly& p) const {
    if (p.nvars() != nvars()) throw Error("polynomial arity does not match the ring");
    SymPoly nf(nvars());
    for (const auto& [e, c] : p.terms()) {
        int d = 0;
        for (int i = 0; i < nvars(); ++i) d += e[i] * weights_[i];
        if (d > maxdeg_)
            throw DegreeOutOfRange("degree " + std::to_string(d) + " exceeds " +
                                   std::to_string(maxdeg_));
        const Slice& s = slices_[d];
        const VecQ& coords = s.coords[s.index.at(e)];
        for (int b = 0; b < static_cast<int>(s.basis.size()); ++b)
            if (!coords(b).is_zero()) nf.add_term(s.monos[s.basis[b]], c * coords(b));
    }
    return RingElt(shared_from_this(), std::move(nf));
}

RingElt GradedRing::element_of(const std::string& generator_name) const {
    const int gi = generator_index(generator_name);
    if (gi < 0) throw Error("unknown generator " + generator_name);
    return normal_form(SymPoly::variable(nvars(), gi));
}

RingElt GradedRing::unit() const {
    return normal_form(SymPoly::constant(nvars(), Rat(1)));
}

RingElt mult(const RingElt& a, const RingElt& b) {
    if (!a.ring() || a.ring() != b.ring())
        throw RingMismatch("elements of different rings");
    return a.ring()->normal_form(a.poly() * b.poly());
}

Rat integrate(const RingElt& e) {
    const GradedRing& ring = *e.ring();
    if (!ring.has_integral_)
        throw Error("ring has no normalized integration functional");
    bool mixed = false;
    const int d = e.degree(&mixed);
    if (mixed) throw Inhomogeneous("cannot integrate a mixed-degree element");
    if (d != ring.top_degree()) return Rat(0);
    return e.poly().coeff(ring.top_mono_) * ring.integral_scale_;
}

MatQ pairing_matrix(const std::vector<RingElt>& rows, const std::vector<RingElt>& cols) {
    MatQ m(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
    for (int i = 0; i < static_cast<int>(rows.size()); ++i)
        for (int j = 0; j < static_cast<int>(cols.size()); ++j)
            m(i, j) = integrate(mult(rows[i], cols[j]));
    return m;
}

namespace {

std::vector<RingElt> monomial_elements(const RingPtr& ring, int d) {
    std::vector<RingElt> out;
    for (const auto& m : ring->classical_basis_monomials(d))
        out.emplace_back(ring, SymPoly::monomial(m, Rat(1)));
    return out;
}

}  // namespace

MatQ pairing_matrix(const RingPtr& ring, int d) {
    if (d < 0 || d > ring->top_degree())
        throw DegreeOutOfRange("degree " + std::to_string(d));
    return pairing_matrix(monomial_elements(ring, d),
                          monomial_elements(ring, ring->top_degree() - d));
}

std::vector<RingElt> dual_basis(const RingPtr& ring, const std::vector<RingElt>& basis,
                                int d) {
    if (d < 0 || d > ring->top_degree())
        throw DegreeOutOfRange("degree " + std::to_string(d));
    const int dim = ring->classical_dimension(d);
    if (static_cast<int>(basis.size()) != dim)
        throw NotABasis("expected " + std::to_string(dim) + " elements, got " +
                        std::to_string(basis.size()));
    for (const auto& b : basis) {
        if (b.ring() != ring) throw RingMismatch("basis element from a different ring");
        bool mixed = false;
        const int bd = b.degree(&mixed);
        if (mixed || (bd != d && bd != -1))
            throw NotABasis("basis element is not homogeneous of degree " +
                            std::to_string(d));
        if (bd == -1) throw NotABasis("zero element in proposed basis");
    }
    // Independence in the degree-d piece.
    const auto monos = ring->classical_basis_monomials(d);
    std::map<SymPoly::Expo, int> mono_pos;
    for (int i = 0; i < static_cast<int>(monos.size()); ++i) mono_pos[monos[i]] = i;
    MatQ coords(dim, dim);
    coords.setConstant(Rat(0));
    for (int i = 0; i < dim; ++i)
        for (const auto& [e, c] : basis[i].poly().terms()) {
            auto it = mono_pos.find(e);
            if (it != mono_pos.end()) coords(i, it->second) = c;
        }
    if (rank(coords) != dim) throw NotABasis("proposed family is linearly dependent");

    const auto comonos = monomial_elements(ring, ring->top_degree() - d);
    const MatQ pairing = pairing_matrix(basis, comonos);
    const auto inv = inverse(pairing);
    if (!inv) throw DegeneratePairing("pairing between degrees " + std::to_string(d) +
                                      " and " +
                                      std::to_string(ring->top_degree() - d) +
                                      " is singular");
    // dual_j = sum_i inv(i, j) * comono_i  satisfies  <basis_k, dual_j> = delta.
    std::vector<RingElt> duals;
    for (int j = 0; j < dim; ++j) {
        RingElt dj = ring->zero();
        for (int i = 0; i < dim; ++i) dj += (*inv)(i, j) * comonos[i];
        duals.push_back(std::move(dj));
    }
    return duals;
}

VecQ FiniteAlgebra::mult(const VecQ& a, const VecQ& b) const {
    VecQ out(dim());
    out.setConstant(Rat(0));
    for (int i = 0; i < dim(); ++i) {
        if (a(i).is_zero()) continue;
        for (int j = 0; j < dim(); ++j) {
            if (b(j).is_zero()) continue;
            out += a(i) * b(j) * table[i][j];
        }
    }
    return out;
}

MatQ FiniteAlgebra::mult_operator(const VecQ& a) const {
    MatQ m(dim(), dim());
    for (int j = 0; j < dim(); ++j) m.col(j) = mult(a, basis_vector(j));
    return m;
}

VecQ FiniteAlgebra::basis_vector(int i) const {
    VecQ v(dim());
    v.setConstant(Rat(0));
    v(i) = Rat(1);
    return v;
}

FiniteAlgebra specialize_q(const RingPtr& ring, const Rat& value) {
    if (!ring->has_quantum())
        throw NoQuantumParameter("ring has no quantum parameter to specialize");
    const int qi = ring->quantum_index();

    FiniteAlgebra alg;
    std::vector<SymPoly::Expo> basis;
    std::map<SymPoly::Expo, int> pos;
    const auto& names = ring->presentation().generators;
    for (int d = 0; d <= ring->top_degree(); ++d) {
        for (const auto& m : ring->classical_basis_monomials(d)) {
            pos[m] = static_cast<int>(basis.size());
            basis.push_back(m);
            std::string label;
            for (int i = 0; i < ring->nvars(); ++i) {
                if (m[i] == 0) continue;
                if (!label.empty()) label += "*";
                label += names[i].name;
                if (m[i] > 1) label += "^" + std::to_string(m[i]);
            }
            alg.labels.push_back(label.empty() ? "1" : label);
        }
    }
    const int n = static_cast<int>(basis.size());

    auto fold = [&](const RingElt& e) {
        VecQ v(n);
        v.setConstant(Rat(0));
        for (const auto& [expo, c] : e.poly().terms()) {
            SymPoly::Expo stripped = expo;
            const int k = stripped[qi];
            stripped[qi] = 0;
            auto it = pos.find(stripped);
            if (it == pos.end())
                throw Error("quantum reduction left the expected basis");
            v(it->second) += c * pow(value, k);
        }
        return v;
    };

    alg.table.assign(n, std::vector<VecQ>(n));
    for (int i = 0; i < n; ++i) {
        const RingElt ei(ring, SymPoly::monomial(basis[i], Rat(1)));
        for (int j = 0; j < n; ++j) {
            const RingElt ej(ring, SymPoly::monomial(basis[j], Rat(1)));
            alg.table[i][j] = fold(mult(ei, ej));
        }
    }
    alg.unit = fold(ring->unit());
    return alg;
}

SemisimpleCertificate semisimple_certificate(const FiniteAlgebra& alg, const VecQ& element) {
    const int n = alg.dim();
    std::vector<VecQ> krylov;
    krylov.push_back(alg.unit);
    SemisimpleCertificate cert;
    for (int m = 1; m <= n; ++m) {
        VecQ next = alg.mult(element, krylov.back());
        MatQ prev(n, m);
        for (int i = 0; i < m; ++i) prev.col(i) = krylov[i];
        const LinearSolution sol = solve(prev, next);
        if (sol.consistent) {
            // x^m - sum a_k x^k annihilates the element; because the algebra
            // is commutative and unital this is the full minimal polynomial
            // of the multiplication operator.
            std::vector<Rat> coeffs(m + 1, Rat(0));
            coeffs[m] = Rat(1);
            for (int k = 0; k < m; ++k) coeffs[k] = -sol.particular(k);
            cert.minpoly = UniPoly(std::move(coeffs));
            break;
        }
        krylov.push_back(std::move(next));
    }
    if (cert.minpoly.is_zero())
        throw Error("minimal polynomial search failed");  // unreachable

    // Re-verify: the polynomial annihilates the element (Horner evaluation),
    // has squarefree content, and its degree matches the algebra dimension.
    VecQ acc(n);
    acc.setConstant(Rat(0));
    for (int i = cert.minpoly.degree(); i >= 0; --i) {
        acc = alg.mult(acc, element);
        acc += cert.minpoly.coeff(i) * alg.unit;
    }
    for (int i = 0; i < n; ++i)
        if (!acc(i).is_zero()) throw Error("computed minimal polynomial does not vanish");

    cert.squarefree = is_squarefree(cert.minpoly);
    cert.generates = cert.minpoly.degree() == n;
    return cert;
}

}  // namespace horochow::ringkit
