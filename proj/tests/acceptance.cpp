// Acceptance gate: the published values and structural properties the engine
// must reproduce, checked end to end with exact rational arithmetic.  Each
// numbered criterion prints exactly one PASS/FAIL line; the process exits
// non-zero when any criterion fails.  Everything is recomputed here from the
// library primitives rather than through the bundled verification suite, so
// this binary is an independent route to the same answers.

#include <exception>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "horochow/catalog.hpp"
#include "horochow/chern.hpp"
#include "horochow/hasse.hpp"
#include "horochow/linalg.hpp"
#include "horochow/partition.hpp"
#include "horochow/poly.hpp"
#include "horochow/rational.hpp"
#include "horochow/render.hpp"
#include "horochow/ringkit.hpp"
#include "horochow/schubert.hpp"
#include "horochow/symfunc.hpp"
#include "horochow/unipoly.hpp"

namespace {

using namespace horochow;
using catalog::VarietySpec;
using ringkit::RingElt;
using ringkit::RingPtr;

void require(bool ok, const std::string& what) {
    if (!ok) throw std::runtime_error(what);
}

// --- small helpers -----------------------------------------------------------

RingElt elt_pow(const RingPtr& ring, const RingElt& e, int k) {
    RingElt acc = ring->unit();
    for (int i = 0; i < k; ++i) acc = ringkit::mult(acc, e);
    return acc;
}

/// Realize a formal combination of basis classes (with q powers) as a ring
/// element, given polynomial representatives for the classes.
RingElt combo_elt(const std::vector<ComboTerm>& terms,
                  const std::map<std::string, RingElt>& classes, const RingPtr& ring) {
    RingElt acc = ring->zero();
    for (const auto& t : terms) {
        RingElt e = classes.at(t.vertex);
        if (t.q_power > 0)
            e = ringkit::mult(e, elt_pow(ring, ring->element_of("q"), t.q_power));
        acc += t.coeff * e;
    }
    return acc;
}

VertexCombo trimmed(VertexCombo c) {
    for (auto it = c.begin(); it != c.end();)
        it = it->second.is_zero() ? c.erase(it) : std::next(it);
    return c;
}

bool terms_eq(const std::vector<ComboTerm>& a, const std::vector<ComboTerm>& b) {
    return trimmed(to_combo(a)) == trimmed(to_combo(b));
}

std::map<std::string, RingElt> parse_seeds(const VarietySpec& spec, const RingPtr& ring) {
    std::vector<std::string> names;
    for (const auto& g : ring->presentation().generators) names.push_back(g.name);
    std::map<std::string, RingElt> seeds;
    for (const auto& [v, text] : spec.seeds)
        seeds[v] = ring->normal_form(catalog::parse_to_poly(text, names));
    return seeds;
}

std::string second_seed_vertex(const VarietySpec& spec) {
    for (const auto& [v, text] : spec.seeds) {
        (void)text;
        if (spec.diagram->degree_of(v) > 0) return v;
    }
    throw std::runtime_error("no non-unit seed vertex");
}

void require_all_pass(const CheckReport& rep, const std::string& what) {
    for (const auto& c : rep.checks)
        if (!c.passed())
            throw std::runtime_error(what + ": check '" + c.id + "' failed (" + c.lhs +
                                     " vs " + c.rhs + ")");
}

/// Shared state: each ring and solved basis is built once and reused.
struct Fixture {
    VarietySpec g2 = catalog::builtin("g2");
    VarietySpec spin7 = catalog::builtin("spin7");

    RingPtr g2c, g2q, s7c, s7q;
    GiambelliMap g2giam, g2qgiam, s7giam, s7qgiam;
    std::map<std::string, RingElt> g2dual;

    const RingPtr& g2_classical() {
        if (!g2c) g2c = catalog::build_classical_ring(g2);
        return g2c;
    }
    const RingPtr& g2_quantum() {
        if (!g2q) g2q = catalog::build_quantum_ring(g2);
        return g2q;
    }
    const RingPtr& spin7_classical() {
        if (!s7c) s7c = catalog::build_classical_ring(spin7);
        return s7c;
    }
    const RingPtr& spin7_quantum() {
        if (!s7q) s7q = catalog::build_quantum_ring(spin7);
        return s7q;
    }
    const GiambelliMap& g2_giambelli() {
        if (g2giam.empty())
            g2giam = giambelli_solve(g2.hasse(), g2_classical(), parse_seeds(g2, g2_classical()));
        return g2giam;
    }
    const GiambelliMap& g2_quantum_giambelli() {
        if (g2qgiam.empty())
            g2qgiam = giambelli_solve(g2.hasse(), g2_quantum(), parse_seeds(g2, g2_quantum()));
        return g2qgiam;
    }
    const GiambelliMap& spin7_giambelli() {
        if (s7giam.empty())
            s7giam = giambelli_solve(spin7.hasse(), spin7_classical(),
                                     parse_seeds(spin7, spin7_classical()));
        return s7giam;
    }
    const GiambelliMap& spin7_quantum_giambelli() {
        if (s7qgiam.empty())
            s7qgiam = giambelli_solve(spin7.hasse(), spin7_quantum(),
                                      parse_seeds(spin7, spin7_quantum()));
        return s7qgiam;
    }
    const std::map<std::string, RingElt>& g2_dual_classes() {
        if (g2dual.empty()) {
            CheckReport rep = dual_diagram_check(g2.golden.dual_diagram, g2.hasse(),
                                                 g2_classical(), g2_giambelli(), "dual", &g2dual);
            require_all_pass(rep, "dual diagram check");
        }
        return g2dual;
    }
};

Fixture fx;
int failures = 0;

void criterion(int n, const std::string& label, const std::function<std::string()>& body) {
    std::string note;
    bool ok = true;
    try {
        note = body();
    } catch (const std::exception& e) {
        ok = false;
        note = e.what();
    }
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << n << ": " << label;
    if (!note.empty()) std::cout << " — " << note;
    std::cout << std::endl;
    if (!ok) ++failures;
}

// --- criterion bodies ----------------------------------------------------------

std::string c1_fundamental_class() {
    const chern::FundamentalClassReport rep = chern::g2_fundamental_class();

    schubert::SchubertCycle expected(schubert::GrassContext{2, 7});
    expected.add(Partition{4, 1}, Rat(2));
    expected.add(Partition{3, 2}, Rat(2));
    require(rep.cycle == expected, "final class is not 2σ[4,1] + 2σ[3,2]");
    require(render::schubert(rep.cycle) == "2σ[4,1] + 2σ[3,2]", "rendered class differs");

    const std::map<Partition, Rat> numbers{
        {Partition{5}, Rat(0)}, {Partition{4, 1}, Rat(2)}, {Partition{3, 2}, Rat(4)}};
    require(rep.evaluations == numbers, "intersection-number evaluations differ from (0, 2, 4)");
    require(rep.y_expansion == numbers, "monomial-coefficient route differs from (0, 2, 4)");

    // The two routes are cross-checked a third way: each evaluation is the
    // integral of the final class against the matching special classes.
    for (const auto& [lam, value] : rep.evaluations) {
        schubert::SchubertCycle prod = rep.cycle;
        for (int i = 1; i <= lam.length(); ++i)
            prod = schubert::grass_mult(
                prod, schubert::SchubertCycle({2, 7}, Partition{lam.part(i)}));
        require(schubert::grass_integrate(prod) == value, "integral cross-check failed");
    }
    return "2σ[4,1] + 2σ[3,2] with evaluations (0, 2, 4)";
}

std::string c2_g2_ring() {
    const RingPtr& ring = fx.g2_classical();
    const HasseDiagram& diag = fx.g2.hasse();
    const std::vector<int> expected_hilbert{1, 1, 2, 2, 2, 2, 1, 1};
    require(ring->hilbert_function() == expected_hilbert, "Hilbert function differs");
    int total = 0;
    for (int d = 0; d <= diag.top_degree(); ++d) {
        const int n = static_cast<int>(diag.vertices_at(d).size());
        require(n == expected_hilbert.at(d), "diagram vertex count differs in degree " +
                                                 std::to_string(d));
        total += n;
    }
    require(total == 12, "total dimension is not 12");

    const std::map<std::string, Rat> expected{
        {"t'0", Rat(56)}, {"t'1", Rat(56)}, {"t'2", Rat(38)}, {"t'3", Rat(10)},
        {"t'4", Rat(4)},  {"t'5", Rat(1)},  {"s2", Rat(18)},  {"s3", Rat(18)},
        {"s4", Rat(6)},   {"s5", Rat(3)},   {"s6", Rat(1)},   {"s7", Rat(1)}};

    // Route one: integrals of h-power complements in the ring.
    const GiambelliMap& giam = fx.g2_giambelli();
    const RingElt h = ring->element_of("h");
    for (const auto& [v, deg] : expected) {
        const RingElt hp = elt_pow(ring, h, diag.top_degree() - diag.degree_of(v));
        require(ringkit::integrate(ringkit::mult(hp, giam.at(v))) == deg,
                "integration degree of " + v + " differs");
    }
    // Route two: weighted monotone path counts on the diagram.
    require(degrees_from_hasse(diag) == expected, "path-count degrees differ");
    return "Hilbert (1,1,2,2,2,2,1,1), degrees (56,56,38,10,4,1; 18,18,6,3,1,1) by both routes";
}

std::string c3_g2_tables() {
    const RingPtr& ring = fx.g2_classical();
    const GiambelliMap& giam = fx.g2_giambelli();

    require(fx.g2.golden.table.size() == 22, "first table does not have 22 rows");
    require_all_pass(verify_table(ring, giam, fx.g2.golden.table, "table",
                                  fx.g2.hasse().unit_vertex()),
                     "first multiplication table");

    // Spot identity held in the table data itself: (τ'3)^2 = 2σ6, written with
    // the single degree-6 class standing for both families.
    bool found = false;
    for (const auto& row : fx.g2.golden.table)
        if (row.a == "t'3" && row.b == "t'3") {
            found = true;
            require(terms_eq(row.expected, {ComboTerm{Rat(2), "s6", 0}}),
                    "(τ'3)^2 is not 2σ6");
        }
    require(found, "(τ'3)^2 row missing");

    const std::map<std::string, RingElt>& dual = fx.g2_dual_classes();
    require(fx.g2.golden.dual_table.size() == 22, "dual table does not have 22 rows");
    std::string dual_unit;
    for (const auto& v : fx.g2.golden.dual_diagram.vertices)
        if (v.degree == 0) dual_unit = v.id;
    require_all_pass(verify_table(ring, dual, fx.g2.golden.dual_table, "dualtable", dual_unit),
                     "dual multiplication table");

    // Signed spot identity: σ'3·τ3 = -τ6.
    found = false;
    for (const auto& row : fx.g2.golden.dual_table)
        if (row.a == "s'3" && row.b == "t3") {
            found = true;
            require(terms_eq(row.expected, {ComboTerm{Rat(-1), "t6", 0}}), "σ'3·τ3 is not -τ6");
        }
    require(found, "σ'3·τ3 row missing");
    return "22 + 22 products reproduced, including (τ'3)^2 = 2σ6 and σ'3·τ3 = -τ6";
}

std::string c4_g2_dual_basis() {
    const RingPtr& ring = fx.g2_classical();
    const HasseDiagram& diag = fx.g2.hasse();
    const GiambelliMap& giam = fx.g2_giambelli();
    const auto& golden = fx.g2.golden.dual_basis;
    const auto& dual_of = fx.g2.golden.dual_diagram.dual_of;

    // The expected formula for τ4 is pinned here as well as in the data.
    require(terms_eq(golden.at("t4"),
                     {ComboTerm{Rat(2), "t'4", 0}, ComboTerm{Rat(-1), "s4", 0}}),
            "recorded τ4 formula is not 2τ'4 - σ4");

    int checked = 0;
    for (int d = 0; d <= diag.top_degree(); ++d) {
        const std::vector<std::string> prim = diag.vertices_at(d);
        std::vector<RingElt> basis;
        for (const auto& v : prim) basis.push_back(giam.at(v));
        const std::vector<RingElt> duals = ringkit::dual_basis(ring, basis, d);
        for (std::size_t i = 0; i < prim.size(); ++i) {
            // Find the dual vertex paired with prim[i].
            std::string dv;
            for (const auto& [dual_id, primal_id] : dual_of)
                if (primal_id == prim[i]) dv = dual_id;
            require(!dv.empty(), "no dual vertex recorded for " + prim[i]);
            require(duals[i] == combo_elt(golden.at(dv), giam, ring),
                    "dual basis element for " + prim[i] + " differs from the " + dv +
                        " formula");
            ++checked;
        }
    }
    require(checked == 12, "expected 12 dual classes");
    return "all 12 dual classes match, including τ4 = 2τ'4 - σ4";
}

std::string c5_g2_quantum() {
    const RingPtr& ring = fx.g2_quantum();
    const HasseDiagram& diag = fx.g2.hasse();
    const GiambelliMap& giam = fx.g2_quantum_giambelli();
    const RingElt h = ring->element_of("h");

    // Quantum Chevalley: eleven recorded lines, each confirmed through the
    // ring product and through the diagram's quantum edges.
    require(fx.g2.golden.quantum_chevalley.size() == 11, "expected 11 Chevalley lines");
    for (const auto& [v, terms] : fx.g2.golden.quantum_chevalley) {
        require(ringkit::mult(h, giam.at(v)) == combo_elt(terms, giam, ring),
                "ring route differs for " + v + "·h");
        const VertexCombo by_diag = chevalley_apply(diag, VertexCombo{{{v, 0}, Rat(1)}}, true);
        require(trimmed(by_diag) == trimmed(to_combo(terms)),
                "diagram route differs for " + v + "·h");
    }
    require(terms_eq(fx.g2.golden.quantum_chevalley.at("s7"),
                     {ComboTerm{Rat(1), "t'4", 1}, ComboTerm{Rat(2), "t'0", 2}}),
            "σ7·h is not qτ'4 + 2q²");

    // Quantum Giambelli: every class matches its polynomial, with the
    // q-corrected formulas overriding the classical ones.
    std::map<std::string, std::string> merged = fx.g2.golden.giambelli;
    for (const auto& [v, text] : fx.g2.golden.quantum_giambelli) merged[v] = text;
    std::vector<std::string> names = fx.g2.generator_names();
    names.push_back("q");
    for (const auto& v : diag.vertices())
        require(giam.at(v.id) == ring->normal_form(catalog::parse_to_poly(merged.at(v.id), names)),
                "quantum Giambelli differs for " + v.id);
    require(fx.g2.golden.quantum_giambelli.size() == 6, "expected 6 q-corrected formulas");

    // The h^6 power identity, with its companion for σ2·h^4, via the ring.
    const std::vector<ComboTerm> h6{ComboTerm{Rat(56), "s6", 0}, ComboTerm{Rat(16), "s2", 1},
                                    ComboTerm{Rat(32), "t'2", 1}};
    require(elt_pow(ring, h, 6) == combo_elt(h6, giam, ring),
            "h^6 is not 56σ6 + 16qσ2 + 32qτ'2");
    require(terms_eq(fx.g2.golden.identities.at("h6").rhs, h6), "recorded h^6 identity differs");
    for (const auto& [name, ident] : fx.g2.golden.identities) {
        const RingElt lhs = ringkit::mult(combo_elt(ident.lhs, giam, ring),
                                          elt_pow(ring, h, ident.h_power));
        require(lhs == combo_elt(ident.rhs, giam, ring), "identity " + name + " fails");
    }

    // Ten-row quantum multiplication table against the second generator.
    require(fx.g2.golden.quantum_table.size() == 10, "expected 10 quantum table rows");
    require_all_pass(verify_table(ring, giam, fx.g2.golden.quantum_table, "qtable",
                                  diag.unit_vertex()),
                     "quantum table");
    return "11 Chevalley lines, 12 Giambelli formulas, h^6 identity, 10 table rows";
}

std::string c6_g2_semisimple() {
    const ringkit::FiniteAlgebra alg = ringkit::specialize_q(fx.g2_quantum(), Rat(1));
    require(alg.dim() == 12, "specialized algebra is not 12-dimensional");

    int ih = -1;
    for (int i = 0; i < alg.dim(); ++i)
        if (alg.labels[i] == "h") ih = i;
    require(ih >= 0, "basis label h not found");
    const VecQ hv = alg.basis_vector(ih);

    const ringkit::SemisimpleCertificate cert = ringkit::semisimple_certificate(alg, hv);
    require(cert.minpoly.degree() == 12, "minimal polynomial degree is not 12");
    require(cert.squarefree, "minimal polynomial is not squarefree");
    require(cert.generates, "h does not generate the specialized algebra");
    require(cert.minpoly.str("x") == "x^12 - 40*x^8 - 192*x^4 - 64",
            "minimal polynomial differs from the frozen value");

    // Independent re-verification of both certificate claims.
    const UniPoly g = gcd(cert.minpoly, cert.minpoly.derivative());
    require(g.degree() == 0, "gcd with the derivative is not constant");

    const MatQ M = alg.mult_operator(hv);
    const int n = alg.dim();
    MatQ value = MatQ::Zero(n, n);
    MatQ power = MatQ::Identity(n, n);
    for (int i = 0; i <= cert.minpoly.degree(); ++i) {
        value += power * cert.minpoly.coeff(i);
        if (i < cert.minpoly.degree()) power = M * power;
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            require(value(i, j).is_zero(), "minimal polynomial does not annihilate the operator");

    MatQ krylov(n, n);
    VecQ v = alg.unit;
    for (int j = 0; j < n; ++j) {
        krylov.col(j) = v;
        v = M * v;
    }
    require(rank(krylov) == n, "Krylov space of h does not span the algebra");
    return "q=1 minimal polynomial of h is squarefree of degree 12 (re-verified)";
}

std::string c7_spin7_classical() {
    const RingPtr& ring = fx.spin7_classical();
    const HasseDiagram& diag = fx.spin7.hasse();
    const std::vector<int> expected_hilbert{1, 1, 1, 2, 2, 2, 2, 1, 1, 1};
    require(ring->hilbert_function() == expected_hilbert, "Hilbert function differs");
    int euler = 0;
    for (int d = 0; d <= diag.top_degree(); ++d) {
        const int n = static_cast<int>(diag.vertices_at(d).size());
        require(n == expected_hilbert.at(d), "diagram vertex count differs in degree " +
                                                 std::to_string(d));
        euler += n;
    }
    require(euler == 14, "Euler characteristic is not 14");

    const GiambelliMap& giam = fx.spin7_giambelli();
    const std::vector<std::string> names = fx.spin7.generator_names();
    for (const auto& v : diag.vertices())
        require(giam.at(v.id) == ring->normal_form(catalog::parse_to_poly(
                                     fx.spin7.golden.giambelli.at(v.id), names)),
                "Giambelli differs for " + v.id);

    const RingElt h = ring->element_of("h");
    const RingElt t = ring->element_of("t");
    require(ringkit::mult(h, ringkit::mult(t, t)).is_zero(), "hτ² does not vanish");

    require(fx.spin7.golden.table.size() == 24, "expected 24 recorded products");
    require_all_pass(verify_table(ring, giam, fx.spin7.golden.table, "table",
                                  diag.unit_vertex()),
                     "multiplication tables");
    return "Hilbert (1,1,1,2,2,2,2,1,1,1), Euler 14, 14 Giambelli formulas, hτ² = 0, 24 products";
}

std::string c8_spinor_calculus() {
    using schubert::SpinorCycle;
    const SpinorCycle g3(StrictPartition::parse("3"));
    const SpinorCycle g21(StrictPartition::parse("2,1"));
    const SpinorCycle sq3 = schubert::spinor_mult(g3, g3);
    SpinorCycle sq21 = schubert::spinor_mult(g21, g21);
    sq21 *= Rat(2);
    require(sq3 == SpinorCycle(StrictPartition::parse("4,2"), Rat(2)), "γ3² is not 2γ[4,2]");
    require(sq3 == sq21, "γ3² is not 2γ[2,1]²");

    SpinorCycle acc(StrictPartition::parse("1"));
    const SpinorCycle g1 = acc;
    for (int i = 1; i < 10; ++i) acc = schubert::spinor_mult(acc, g1);
    require(acc == SpinorCycle(StrictPartition::parse("4,3,2,1"), Rat(12)),
            "γ1^10 is not 12γ[4,3,2,1]");
    require(schubert::spinor_integrate(acc) == Rat(12), "spinor degree is not 12");

    // Cross-check against the ring: the degree is ∫h^9, and the point class
    // is τ9 = h^9/12.
    const RingPtr& ring = fx.spin7_classical();
    const RingElt h = ring->element_of("h");
    require(ringkit::integrate(elt_pow(ring, h, 9)) == Rat(12), "∫h^9 is not 12");
    const std::vector<std::string> names = fx.spin7.generator_names();
    require(fx.spin7_giambelli().at("t9") ==
                ring->normal_form(catalog::parse_to_poly("1/12*h^9", names)),
            "τ9 is not h^9/12");

    // The two quadric halves e = (h³+τ)/2 and f = (h³-τ)/2 recover the
    // degree-6 relation: e² - 2f² equals -R6/4 identically, hence vanishes.
    const SymPoly h3 = catalog::parse_to_poly("h^3", names);
    const SymPoly tau = catalog::parse_to_poly("t", names);
    SymPoly e = h3 + tau;
    e *= Rat(1, 2);
    SymPoly f = h3 - tau;
    f *= Rat(1, 2);
    const SymPoly lhs = e * e - (f * f) - (f * f);
    SymPoly expected = -catalog::parse_to_poly("t^2 - 6*h^3*t + h^6", names);
    expected *= Rat(1, 4);
    require(lhs == expected, "e² - 2f² is not -R6/4 as a polynomial");
    require(ring->normal_form(lhs).is_zero(), "e² - 2f² does not vanish in the ring");
    return "γ3² = 2γ[2,1]², deg = 12 both ways, quadric halves recover the relation";
}

std::string c9_spin7_quantum() {
    const RingPtr& ring = fx.spin7_quantum();
    const HasseDiagram& diag = fx.spin7.hasse();
    const GiambelliMap& giam = fx.spin7_quantum_giambelli();
    const RingElt h = ring->element_of("h");

    // Exactly four hyperplane lines carry quantum corrections, counted from
    // the diagram itself.
    int corrected = 0;
    for (const auto& v : diag.vertices()) {
        const VertexCombo image =
            chevalley_apply(diag, VertexCombo{{{v.id, 0}, Rat(1)}}, true);
        for (const auto& [key, coeff] : image)
            if (key.second > 0 && !coeff.is_zero()) {
                ++corrected;
                break;
            }
    }
    require(corrected == 4, "expected exactly 4 q-corrected lines, found " +
                                std::to_string(corrected));

    // All fourteen recorded Chevalley lines hold through both routes.
    require(fx.spin7.golden.quantum_chevalley.size() == 14, "expected 14 Chevalley lines");
    for (const auto& [v, terms] : fx.spin7.golden.quantum_chevalley) {
        require(ringkit::mult(h, giam.at(v)) == combo_elt(terms, giam, ring),
                "ring route differs for " + v + "·h");
        const VertexCombo by_diag = chevalley_apply(diag, VertexCombo{{{v, 0}, Rat(1)}}, true);
        require(trimmed(by_diag) == trimmed(to_combo(terms)),
                "diagram route differs for " + v + "·h");
    }

    // Corrected Giambelli formulas, pinned literally.
    std::vector<std::string> names = fx.spin7.generator_names();
    names.push_back("q");
    const std::map<std::string, std::string> corrected_giambelli{
        {"t7", "1/12*h^7 - 5/12*q"},
        {"t8", "1/12*h^8 - 17/12*q*h"},
        {"t9", "1/12*h^9 - 29/12*q*h^2"}};
    for (const auto& [v, text] : corrected_giambelli)
        require(giam.at(v) == ring->normal_form(catalog::parse_to_poly(text, names)),
                "quantum Giambelli differs for " + v);
    std::map<std::string, std::string> merged = fx.spin7.golden.giambelli;
    for (const auto& [v, text] : fx.spin7.golden.quantum_giambelli) merged[v] = text;
    for (const auto& v : diag.vertices())
        require(giam.at(v.id) == ring->normal_form(catalog::parse_to_poly(merged.at(v.id), names)),
                "quantum Giambelli differs for " + v.id);

    require(fx.spin7.golden.quantum_table.size() == 9, "expected 9 quantum table rows");
    require_all_pass(verify_table(ring, giam, fx.spin7.golden.quantum_table, "qtable",
                                  diag.unit_vertex()),
                     "quantum table");
    return "4 corrected lines, τ7 = h^7/12 - 5q/12 (τ8, τ9 likewise), 9 table rows";
}

std::string c10_property_suites() {
    using symfunc::lr_product;
    using symfunc::SchurExpansion;

    // Littlewood-Richardson products: commutativity for every pair up to
    // total weight 8 and associativity for every triple in the same range.
    std::vector<std::vector<Partition>> by_weight(8);
    for (int w = 1; w <= 7; ++w) by_weight[w] = partitions_of(w, w, w);
    for (int a = 1; a <= 7; ++a)
        for (int b = a; a + b <= 8; ++b)
            for (const auto& lam : by_weight[a])
                for (const auto& mu : by_weight[b])
                    require(lr_product(lam, mu) == lr_product(mu, lam),
                            "LR product is not symmetric");

    const auto expand_mult = [](const SchurExpansion& e, const Partition& nu) {
        SchurExpansion out;
        for (const auto& [kappa, c] : e)
            for (const auto& [rho, c2] : lr_product(kappa, nu)) out[rho] += c * c2;
        return out;
    };
    for (int a = 1; a <= 6; ++a)
        for (int b = a; a + b <= 7; ++b)
            for (int c = b; a + b + c <= 8; ++c)
                for (const auto& lam : by_weight[a])
                    for (const auto& mu : by_weight[b])
                        for (const auto& nu : by_weight[c])
                            require(expand_mult(lr_product(lam, mu), nu) ==
                                        expand_mult(lr_product(mu, nu), lam),
                                    "LR product is not associative");

    // Schur P products against the marked-shifted-tableaux oracle, every
    // pair of strict shapes up to total weight 8.
    std::vector<std::vector<StrictPartition>> strict(8);
    for (int w = 1; w <= 7; ++w) strict[w] = strict_partitions_of(w);
    for (int a = 1; a <= 7; ++a)
        for (int b = a; a + b <= 8; ++b)
            for (const auto& lam : strict[a])
                for (const auto& mu : strict[b]) {
                    const int n = a + b;
                    const symfunc::PQExpansion prod =
                        symfunc::pq_product(lam, mu, symfunc::PQFamily::P);
                    const SymPoly direct =
                        symfunc::pq_polynomial(lam, n, symfunc::PQFamily::P) *
                        symfunc::pq_polynomial(mu, n, symfunc::PQFamily::P);
                    SymPoly recombined(n);
                    for (const auto& [nu, c] : prod.terms)
                        recombined += c * symfunc::pq_polynomial(nu, n, symfunc::PQFamily::P);
                    require(direct == recombined, "P-product disagrees with the oracle");
                }

    // Normal-form idempotence and pairing nondegeneracy on all four rings.
    const std::vector<RingPtr> rings{fx.g2_classical(), fx.g2_quantum(), fx.spin7_classical(),
                                     fx.spin7_quantum()};
    for (const RingPtr& ring : rings) {
        std::vector<SymPoly::Expo> monos;
        std::vector<int> degs;
        for (int d = 0; d <= ring->top_degree(); ++d)
            for (const auto& m : ring->classical_basis_monomials(d)) {
                monos.push_back(m);
                degs.push_back(d);
            }
        for (std::size_t i = 0; i < monos.size(); ++i)
            for (std::size_t j = i; j < monos.size(); ++j) {
                if (degs[i] + degs[j] > ring->max_degree()) continue;
                const SymPoly p = SymPoly::monomial(monos[i], Rat(1)) *
                                  SymPoly::monomial(monos[j], Rat(1));
                const RingElt e = ring->normal_form(p);
                require(ring->normal_form(e.poly()) == e, "normal form is not idempotent");
            }
        const RingElt h = ring->element_of(ring->presentation().generators.front().name);
        const RingElt mixed = ring->normal_form(h.poly() * h.poly()) + h;
        require(ring->normal_form(mixed.poly()) == mixed,
                "normal form is not idempotent on mixed degrees");
        for (int d = 0; d <= ring->top_degree(); ++d)
            require(rank(pairing_matrix(ring, d)) == ring->classical_dimension(d),
                    "pairing is degenerate in degree " + std::to_string(d));
    }

    // Setting q to zero degenerates the quantum structure constants to the
    // classical ones, in every pair of classical degrees.
    const std::vector<std::pair<RingPtr, RingPtr>> pairs{
        {fx.g2_quantum(), fx.g2_classical()}, {fx.spin7_quantum(), fx.spin7_classical()}};
    for (const auto& [qring, cring] : pairs) {
        const int qi = qring->quantum_index();
        std::vector<SymPoly::Expo> monos;
        std::vector<int> degs;
        for (int d = 0; d <= qring->top_degree(); ++d)
            for (const auto& m : qring->classical_basis_monomials(d)) {
                monos.push_back(m);
                degs.push_back(d);
            }
        for (std::size_t i = 0; i < monos.size(); ++i)
            for (std::size_t j = i; j < monos.size(); ++j) {
                const SymPoly qp = SymPoly::monomial(monos[i], Rat(1)) *
                                   SymPoly::monomial(monos[j], Rat(1));
                const SymPoly limit = qring->normal_form(qp).poly().select_and_drop(qi, 0);
                if (degs[i] + degs[j] > cring->top_degree()) {
                    require(limit.is_zero(), "q^0 part survives beyond the top degree");
                    continue;
                }
                const SymPoly cp = SymPoly::monomial(monos[i], Rat(1)).select_and_drop(qi, 0) *
                                   SymPoly::monomial(monos[j], Rat(1)).select_and_drop(qi, 0);
                require(cring->normal_form(limit) == cring->normal_form(cp),
                        "structure constants do not degenerate to the classical ones");
            }
    }

    // The two orbit families annihilate each other: every first-family class
    // times every second-family dual class is zero.
    const GiambelliMap& giam = fx.g2_giambelli();
    const std::map<std::string, RingElt>& dual = fx.g2_dual_classes();
    require(!fx.g2.golden.orth_a1.empty(), "no first-family classes recorded");
    require(!fx.g2.golden.orth_a2.empty(), "no second-family classes recorded");
    int zeros = 0;
    for (const auto& a : fx.g2.golden.orth_a1)
        for (const auto& b : fx.g2.golden.orth_a2) {
            require(ringkit::mult(giam.at(a), dual.at(b)).is_zero(),
                    "product " + a + "·" + b + " is not zero");
            ++zeros;
        }
    return "LR and P-function suites to weight 8, ring properties on 4 rings, " +
           std::to_string(zeros) + " orthogonality products";
}

std::string c11_reconstruction() {
    const HasseDiagram& diag = fx.g2.hasse();
    const RingPtr& ring = fx.g2_classical();
    const GiambelliMap& giam = fx.g2_giambelli();
    const std::string sigma = second_seed_vertex(fx.g2);
    const int gdeg = diag.degree_of(sigma);

    std::map<std::pair<std::string, std::string>, Rat> pairing;
    for (const auto& v : diag.vertices())
        for (const auto& w : diag.vertices())
            if (v.degree + w.degree == diag.top_degree())
                pairing[{v.id, w.id}] =
                    ringkit::integrate(ringkit::mult(giam.at(v.id), giam.at(w.id)));

    std::map<std::string, VertexCombo> true_mult;
    for (const auto& v : diag.vertices()) {
        if (v.degree + gdeg > diag.top_degree()) continue;
        const RingElt image = ringkit::mult(giam.at(sigma), giam.at(v.id));
        const std::optional<VertexCombo> combo = express_over(giam, ring, image);
        require(combo.has_value(), "product left the span of the basis classes");
        true_mult[v.id] = *combo;
    }

    const Reconstruction rec = reconstruct_second_generator(diag, pairing, sigma, true_mult);
    require(rec.contains_true, "the actual multiplication violates the constraints");

    // The report must be reproducible bit for bit.
    const Reconstruction again = reconstruct_second_generator(diag, pairing, sigma, true_mult);
    require(again.dimension == rec.dimension && again.contains_true == rec.contains_true &&
                again.sample_generates == rec.sample_generates &&
                again.sample_associative == rec.sample_associative && again.sample == rec.sample,
            "reconstruction is not deterministic");

    std::string note = "contains_true = yes, solution-space dimension " +
                       std::to_string(rec.dimension) + ", sample " +
                       (rec.sample_associative ? "passes the associativity stress test"
                                               : "flagged as non-associative") +
                       (rec.sample_generates ? "" : " (and does not generate)");
    return note;
}

}  // namespace

int main() {
    criterion(1, "zero-locus fundamental class on G(2,7)", c1_fundamental_class);
    criterion(2, "G2 ring: Hilbert function and degree diagram by two routes", c2_g2_ring);
    criterion(3, "G2 classical multiplication tables", c3_g2_tables);
    criterion(4, "G2 Poincare-dual basis formulas", c4_g2_dual_basis);
    criterion(5, "G2 quantum ring: Chevalley, Giambelli, h^6 identity, sigma table",
              c5_g2_quantum);
    criterion(6, "G2 semisimplicity certificate at q=1", c6_g2_semisimple);
    criterion(7, "Spin7 classical ring: Hilbert, Euler, Giambelli, tables", c7_spin7_classical);
    criterion(8, "spinor calculus and the quadric-halves derivation", c8_spinor_calculus);
    criterion(9, "Spin7 quantum ring: corrections, Giambelli, tau table", c9_spin7_quantum);
    criterion(10, "property suites: products, normal forms, pairings, degeneration",
              c10_property_suites);
    criterion(11, "second-generator reconstruction on the G2 diagram", c11_reconstruction);

    if (failures != 0) {
        std::cout << failures << " criteria failed" << std::endl;
        return 1;
    }
    std::cout << "all 11 criteria passed" << std::endl;
    return 0;
}
