#include "horochow/catalog.hpp"

#include "horochow/chern.hpp"
#include "horochow/errors.hpp"
#include "horochow/render.hpp"
#include "horochow/schubert.hpp"

#include <sstream>
#include <utility>

namespace horochow::catalog {

namespace {

using ringkit::GradedRing;
using ringkit::RingElt;
using ringkit::RingPtr;

CheckResult make_check(const std::string& id, bool ok, std::string summary,
                       std::string lhs = "", std::string rhs = "", std::string detail = "") {
    CheckResult r;
    r.id = id;
    r.status = ok ? CheckResult::Status::Pass : CheckResult::Status::Fail;
    r.summary = std::move(summary);
    r.lhs = std::move(lhs);
    r.rhs = std::move(rhs);
    r.detail = std::move(detail);
    return r;
}

/// Run one check group; exceptions become an Error entry so the suite
/// always reports every group instead of aborting.
template <typename F>
void guarded(CheckReport& rep, const std::string& id, const std::string& summary, F&& body) {
    try {
        body();
    } catch (const std::exception& e) {
        CheckResult r;
        r.id = id;
        r.status = CheckResult::Status::Error;
        r.summary = summary;
        r.detail = e.what();
        rep.checks.push_back(std::move(r));
    }
}

std::string int_vector_str(const std::vector<int>& v) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << ", ";
        os << v[i];
    }
    os << ")";
    return os.str();
}

/// Display names for the ring generators (s -> sigma, t -> tau).
std::vector<std::string> display_names(const RingPtr& ring) {
    std::vector<std::string> out;
    for (const auto& g : ring->presentation().generators) out.push_back(render::vertex(g.name));
    return out;
}

std::string poly_str(const RingElt& e) {
    return render::poly(e.poly(), display_names(e.ring()), true);
}

/// The unique degree-one generator that is not the quantum parameter.
RingElt hyperplane(const RingPtr& ring) {
    std::string found;
    for (const auto& g : ring->presentation().generators) {
        if (g.degree != 1 || g.name == ring->presentation().quantum) continue;
        if (!found.empty()) throw Error("several degree-one generators");
        found = g.name;
    }
    if (found.empty()) throw Error("no degree-one generator");
    return ring->element_of(found);
}

RingElt elt_pow(const RingPtr& ring, const RingElt& base, int k) {
    RingElt acc = ring->unit();
    for (int i = 0; i < k; ++i) acc = ringkit::mult(acc, base);
    return acc;
}

/// Evaluate a combination of basis classes (with optional q powers).
RingElt combo_elt(const std::vector<ComboTerm>& terms, const GiambelliMap& classes,
                  const RingPtr& ring) {
    RingElt acc = ring->zero();
    for (const auto& t : terms) {
        auto it = classes.find(t.vertex);
        if (it == classes.end())
            throw UnknownSymbol("no class for vertex '" + t.vertex + "'");
        RingElt c = it->second;
        if (t.q_power > 0) {
            if (!ring->has_quantum())
                throw NoQuantumParameter("combination has a quantum term");
            const RingElt q = ring->element_of(ring->presentation().quantum);
            for (int i = 0; i < t.q_power; ++i) c = ringkit::mult(q, c);
        }
        acc += t.coeff * c;
    }
    return acc;
}

bool combo_eq(const VertexCombo& a, const VertexCombo& b) {
    auto get = [](const VertexCombo& m, const VertexTerm& k) {
        auto it = m.find(k);
        return it == m.end() ? Rat(0) : it->second;
    };
    for (const auto& [k, v] : a)
        if (!(v == get(b, k))) return false;
    for (const auto& [k, v] : b)
        if (!(v == get(a, k))) return false;
    return true;
}

/// Shared state threaded through the phases.
struct SuiteState {
    RingPtr classical;
    GiambelliMap giambelli;
    std::map<std::string, RingElt> dual_classes;
    RingPtr quantum;
    GiambelliMap qgiambelli;
};

std::map<std::string, RingElt> parse_seeds(const VarietySpec& spec, const RingPtr& ring) {
    std::vector<std::string> names;
    for (const auto& g : ring->presentation().generators) names.push_back(g.name);
    std::map<std::string, RingElt> seeds;
    for (const auto& [v, text] : spec.seeds)
        seeds[v] = ring->normal_form(parse_to_poly(text, names));
    return seeds;
}

std::string dual_unit_id(const DualDiagram& dual) {
    for (const auto& v : dual.vertices)
        if (v.degree == 0) return v.id;
    return "";
}

/// Vertex id of the non-unit seed: the basis class seeded with the second
/// ring generator.
std::string second_seed_vertex(const VarietySpec& spec) {
    for (const auto& [v, text] : spec.seeds) {
        (void)text;
        if (spec.diagram->degree_of(v) > 0) return v;
    }
    throw Error("no non-unit seed vertex");
}

// ---------------------------------------------------------------------------
// Classical phase
// ---------------------------------------------------------------------------

void check_hilbert(const VarietySpec& spec, SuiteState& st, CheckReport& rep) {
    const std::string id = spec.name + ".ring.hilbert";
    guarded(rep, id, "Hilbert function", [&] {
        st.classical = build_classical_ring(spec);
        const std::vector<int> hf = st.classical->hilbert_function();
        std::vector<int> counts;
        int euler = 0;
        for (int d = 0; d <= spec.diagram->top_degree(); ++d) {
            const int n = static_cast<int>(spec.diagram->vertices_at(d).size());
            counts.push_back(n);
            euler += n;
        }
        const bool ok = hf == spec.golden.hilbert && hf == counts;
        rep.checks.push_back(make_check(
            id, ok,
            "Hilbert function " + int_vector_str(hf) + ", Euler characteristic " +
                std::to_string(euler),
            int_vector_str(hf), int_vector_str(counts),
            ok ? "ring dimensions match the expected values and the diagram vertex counts"
               : "ring dimensions, expected values, and vertex counts disagree"));
    });
}

void check_giambelli(const VarietySpec& spec, SuiteState& st, CheckReport& rep) {
    const HasseDiagram& diag = *spec.diagram;
    guarded(rep, spec.name + ".giambelli", "polynomial representatives", [&] {
        st.giambelli = giambelli_solve(diag, st.classical, parse_seeds(spec, st.classical));
        const std::vector<std::string> names = spec.generator_names();
        for (const auto& v : diag.vertices()) {
            const std::string id = spec.name + ".giambelli." + v.id;
            auto it = spec.golden.giambelli.find(v.id);
            if (it == spec.golden.giambelli.end()) {
                rep.checks.push_back(make_check(id, false, render::vertex(v.id),
                                                poly_str(st.giambelli.at(v.id)), "",
                                                "no expected formula recorded"));
                continue;
            }
            const RingElt expected = st.classical->normal_form(parse_to_poly(it->second, names));
            const RingElt& got = st.giambelli.at(v.id);
            rep.checks.push_back(make_check(
                id, got == expected,
                render::vertex(v.id) + " = " + poly_str(expected), poly_str(got),
                poly_str(expected),
                got == expected ? "" : "diagram-solved representative disagrees"));
        }
    });
}

void check_degrees(const VarietySpec& spec, SuiteState& st, CheckReport& rep) {
    const HasseDiagram& diag = *spec.diagram;
    guarded(rep, spec.name + ".degree", "degrees of the basis classes", [&] {
        const RingElt h = hyperplane(st.classical);
        const std::map<std::string, Rat> from_paths = degrees_from_hasse(diag);
        for (const auto& v : diag.vertices()) {
            auto it = spec.golden.degrees.find(v.id);
            if (it == spec.golden.degrees.end()) continue;
            const Rat& expected = it->second;
            const RingElt hp = elt_pow(st.classical, h, diag.top_degree() - v.degree);
            const Rat by_ring = ringkit::integrate(ringkit::mult(hp, st.giambelli.at(v.id)));
            rep.checks.push_back(make_check(
                spec.name + ".degree." + v.id + ".ring", by_ring == expected,
                "deg " + render::vertex(v.id) + " = " + expected.str() + " (integration)",
                by_ring.str(), expected.str()));
            const Rat by_paths = from_paths.at(v.id);
            rep.checks.push_back(make_check(
                spec.name + ".degree." + v.id + ".hasse", by_paths == expected,
                "deg " + render::vertex(v.id) + " = " + expected.str() + " (path count)",
                by_paths.str(), expected.str()));
        }
    });
}

void check_spin7_classical(const VarietySpec& spec, SuiteState& st, CheckReport& rep) {
    guarded(rep, spec.name + ".relation.htau2", "hτ²=0", [&] {
        const RingElt h = st.classical->element_of("h");
        const RingElt t = st.classical->element_of("t");
        const RingElt p = ringkit::mult(h, ringkit::mult(t, t));
        rep.checks.push_back(make_check(spec.name + ".relation.htau2", p.is_zero(), "hτ²=0",
                                        poly_str(p), "0"));
    });

    // The quadric halves e = (h^3 + tau)/2 and f = (h^3 - tau)/2 satisfy
    // e^2 - 2 f^2 = -(tau^2 - 6 h^3 tau + h^6)/4, recovering the defining
    // degree-six relation from the self-intersections of the two families.
    guarded(rep, spec.name + ".relation.r6_derivation", "quadric halves recover the relation", [&] {
        const std::vector<std::string> names = spec.generator_names();
        const SymPoly h3 = parse_to_poly("h^3", names);
        const SymPoly tau = parse_to_poly("t", names);
        const Rat half(1, 2);
        SymPoly e = h3 + tau;
        e *= half;
        SymPoly f = h3 - tau;
        f *= half;
        const SymPoly lhs = e * e - (f * f) - (f * f);
        const SymPoly r6 = parse_to_poly(spec.classical_relations.at(0), names);
        SymPoly expected = -r6;
        expected *= Rat(1, 4);
        const bool identity = lhs == expected;
        const bool vanishes = st.classical->normal_form(lhs).is_zero();
        rep.checks.push_back(make_check(
            spec.name + ".relation.r6_derivation", identity && vanishes,
            "((h³+τ)/2)² - 2((h³-τ)/2)² = -R₆/4",
            render::poly(lhs, display_names(st.classical), true),
            render::poly(expected, display_names(st.classical), true),
            identity && vanishes ? "identity holds and the class vanishes in the ring" : ""));
    });

    guarded(rep, spec.name + ".spinor.gamma3sq", "γ3² on the spinor variety", [&] {
        const schubert::SpinorCycle g3(StrictPartition::parse("3"));
        const schubert::SpinorCycle g21(StrictPartition::parse("2,1"));
        const schubert::SpinorCycle sq3 = schubert::spinor_mult(g3, g3);
        schubert::SpinorCycle sq21 = schubert::spinor_mult(g21, g21);
        schubert::SpinorCycle expected(StrictPartition::parse("4,2"), Rat(2));
        sq21 *= Rat(2);
        const bool ok = sq3 == expected && sq3 == sq21;
        rep.checks.push_back(make_check(spec.name + ".spinor.gamma3sq", ok,
                                        "γ[3]² = 2γ[4,2] = 2γ[2,1]²", render::spinor(sq3),
                                        render::spinor(expected)));
    });

    guarded(rep, spec.name + ".spinor.degree", "degree of the spinor variety", [&] {
        schubert::SpinorCycle acc(StrictPartition::parse("1"));
        const schubert::SpinorCycle g1 = acc;
        for (int i = 1; i < 10; ++i) acc = schubert::spinor_mult(acc, g1);
        const Rat by_spinor = schubert::spinor_integrate(acc);
        const RingElt h = hyperplane(st.classical);
        const Rat by_ring =
            ringkit::integrate(elt_pow(st.classical, h, st.classical->top_degree()));
        const bool ok = by_spinor == Rat(12) && by_ring == Rat(12);
        rep.checks.push_back(make_check(spec.name + ".spinor.degree", ok,
                                        "∫γ[1]¹⁰ = 12 = ∫h⁹", by_spinor.str(), by_ring.str()));
    });
}

void check_dual(const VarietySpec& spec, SuiteState& st, CheckReport& rep) {
    const Golden& g = spec.golden;
    guarded(rep, spec.name + ".dualdiagram", "Poincare-dual basis", [&] {
        rep.append(dual_diagram_check(g.dual_diagram, *spec.diagram, st.classical, st.giambelli,
                                      spec.name + ".dualdiagram", &st.dual_classes));
        for (const auto& [d, combo] : g.dual_basis) {
            const std::string id = spec.name + ".dualbasis." + d;
            const RingElt expected = combo_elt(combo, st.giambelli, st.classical);
            auto it = st.dual_classes.find(d);
            if (it == st.dual_classes.end()) {
                rep.checks.push_back(make_check(id, false, render::vertex(d), "",
                                                poly_str(expected), "dual class not computed"));
                continue;
            }
            rep.checks.push_back(make_check(
                id, it->second == expected,
                render::vertex(d) + " = " +
                    render::terms(combo, spec.diagram->unit_vertex()),
                poly_str(it->second), poly_str(expected)));
        }
    });
}

void check_orthogonality(const VarietySpec& spec, SuiteState& st, CheckReport& rep) {
    const std::string id = spec.name + ".orth.a1a2";
    guarded(rep, id, "the two families multiply to zero", [&] {
        std::string failures;
        int count = 0;
        for (const auto& a : spec.golden.orth_a1) {
            for (const auto& b : spec.golden.orth_a2) {
                const RingElt p = ringkit::mult(st.giambelli.at(a), st.dual_classes.at(b));
                ++count;
                if (!p.is_zero())
                    failures += (failures.empty() ? "" : ", ") + render::vertex(a) + "·" +
                                render::vertex(b);
            }
        }
        rep.checks.push_back(make_check(
            id, failures.empty(),
            "every product of a first-family class with a second-family dual class is zero (" +
                std::to_string(count) + " products)",
            failures.empty() ? "0" : failures, "0"));
    });
}

// ---------------------------------------------------------------------------
// Quantum phase
// ---------------------------------------------------------------------------

void check_quantum_ring(const VarietySpec& spec, SuiteState& st, CheckReport& rep) {
    const std::string id = spec.name + ".qring.build";
    guarded(rep, id, "quantum ring", [&] {
        st.quantum = build_quantum_ring(spec);
        rep.checks.push_back(make_check(
            id, true,
            "quantum deformation on q of degree " + std::to_string(spec.index) +
                " (bases computed through degree " + std::to_string(st.quantum->max_degree()) +
                ")",
            "", "", "quantum-free basis slices agree across degrees"));
    });
}

void check_quantum_giambelli(const VarietySpec& spec, SuiteState& st, CheckReport& rep) {
    const HasseDiagram& diag = *spec.diagram;
    guarded(rep, spec.name + ".qgiambelli", "quantum polynomial representatives", [&] {
        st.qgiambelli = giambelli_solve(diag, st.quantum, parse_seeds(spec, st.quantum));
        std::map<std::string, std::string> merged = spec.golden.giambelli;
        for (const auto& [v, text] : spec.golden.quantum_giambelli) merged[v] = text;
        std::vector<std::string> names = spec.generator_names();
        names.push_back("q");
        for (const auto& v : diag.vertices()) {
            const std::string id = spec.name + ".qgiambelli." + v.id;
            auto it = merged.find(v.id);
            if (it == merged.end()) {
                rep.checks.push_back(make_check(id, false, render::vertex(v.id),
                                                poly_str(st.qgiambelli.at(v.id)), "",
                                                "no expected formula recorded"));
                continue;
            }
            const RingElt expected = st.quantum->normal_form(parse_to_poly(it->second, names));
            const RingElt& got = st.qgiambelli.at(v.id);
            rep.checks.push_back(make_check(
                id, got == expected,
                render::vertex(v.id) + " = " + poly_str(expected), poly_str(got),
                poly_str(expected),
                got == expected ? "" : "diagram-solved representative disagrees"));
        }
    });
}

void check_quantum_chevalley(const VarietySpec& spec, SuiteState& st, CheckReport& rep) {
    const HasseDiagram& diag = *spec.diagram;
    const std::string& unit = diag.unit_vertex();
    guarded(rep, spec.name + ".qchev", "quantum hyperplane multiplication", [&] {
        const RingElt h = hyperplane(st.quantum);
        for (const auto& [v, terms] : spec.golden.quantum_chevalley) {
            const std::string id = spec.name + ".qchev." + v;
            const RingElt by_ring = ringkit::mult(h, st.qgiambelli.at(v));
            const RingElt expected = combo_elt(terms, st.qgiambelli, st.quantum);
            const VertexCombo by_diag =
                chevalley_apply(diag, VertexCombo{{{v, 0}, Rat(1)}}, true);
            const bool ring_ok = by_ring == expected;
            const bool diag_ok = combo_eq(by_diag, to_combo(terms));
            rep.checks.push_back(make_check(
                id, ring_ok && diag_ok,
                render::vertex(v) + "·h = " + render::terms(terms, unit),
                render::combo(by_diag, unit), render::terms(terms, unit),
                ring_ok && diag_ok
                    ? "ring product and diagram edges agree"
                    : (ring_ok ? "diagram route disagrees" : "ring route disagrees")));
        }
    });
}

void check_quantum_correction_count(const VarietySpec& spec, CheckReport& rep, int expected) {
    const HasseDiagram& diag = *spec.diagram;
    const std::string id = spec.name + ".qchev.count";
    guarded(rep, id, "quantum correction count", [&] {
        int corrected = 0;
        std::string which;
        for (const auto& v : diag.vertices()) {
            const VertexCombo image =
                chevalley_apply(diag, VertexCombo{{{v.id, 0}, Rat(1)}}, true);
            bool has_q = false;
            for (const auto& [key, coeff] : image)
                if (key.second > 0 && !coeff.is_zero()) has_q = true;
            if (has_q) {
                ++corrected;
                which += (which.empty() ? "" : ", ") + render::vertex(v.id);
            }
        }
        rep.checks.push_back(make_check(
            id, corrected == expected,
            "exactly " + std::to_string(expected) +
                " hyperplane lines carry quantum corrections (" + which + ")",
            std::to_string(corrected), std::to_string(expected)));
    });
}

std::string quantum_b_display(const VarietySpec& spec, const std::string& b_vertex) {
    auto it = spec.seeds.find(b_vertex);
    if (it == spec.seeds.end()) return "";
    for (const auto& g : spec.generators)
        if (g.name == it->second) return render::vertex(g.name);
    return "";
}

void check_quantum_table(const VarietySpec& spec, SuiteState& st, CheckReport& rep) {
    guarded(rep, spec.name + ".qtable", "quantum multiplication table", [&] {
        std::vector<ProductRow> rows = spec.golden.quantum_table;
        for (auto& row : rows) row.b_display = quantum_b_display(spec, row.b);
        rep.append(verify_table(st.quantum, st.qgiambelli, rows, spec.name + ".qtable",
                                spec.diagram->unit_vertex()));
    });
}

std::string identity_lhs_display(const std::vector<ComboTerm>& lhs, int power,
                                 const std::string& unit) {
    const std::string hp = power == 1 ? "h" : "h" + render::sup(power);
    if (lhs.size() == 1 && lhs[0].coeff == Rat(1) && lhs[0].q_power == 0) {
        if (lhs[0].vertex == unit) return hp;
        return render::vertex(lhs[0].vertex) + "·" + hp;
    }
    return "(" + render::terms(lhs, unit) + ")·" + hp;
}

void check_identities(const VarietySpec& spec, SuiteState& st, CheckReport& rep) {
    const HasseDiagram& diag = *spec.diagram;
    const std::string& unit = diag.unit_vertex();
    for (const auto& [name, ident] : spec.golden.identities) {
        const std::string id = spec.name + ".identity." + name;
        guarded(rep, id, "power identity " + name, [&, &name = name, &ident = ident] {
            const RingElt h = hyperplane(st.quantum);
            const RingElt lhs_elt = combo_elt(ident.lhs, st.qgiambelli, st.quantum);
            const RingElt by_ring =
                ringkit::mult(elt_pow(st.quantum, h, ident.h_power), lhs_elt);
            const RingElt expected = combo_elt(ident.rhs, st.qgiambelli, st.quantum);
            VertexCombo combo = to_combo(ident.lhs);
            for (int i = 0; i < ident.h_power; ++i) combo = chevalley_apply(diag, combo, true);
            const bool ring_ok = by_ring == expected;
            const bool diag_ok = combo_eq(combo, to_combo(ident.rhs));
            rep.checks.push_back(make_check(
                id, ring_ok && diag_ok,
                identity_lhs_display(ident.lhs, ident.h_power, unit) + " = " +
                    render::terms(ident.rhs, unit),
                render::combo(combo, unit), render::terms(ident.rhs, unit),
                ring_ok && diag_ok
                    ? "ring product and repeated diagram application agree"
                    : (ring_ok ? "diagram route disagrees" : "ring route disagrees")));
        });
    }
}

void check_spin7_quantum(const VarietySpec& spec, SuiteState& st, CheckReport& rep) {
    const std::string id = spec.name + ".relation.htau2q";
    guarded(rep, id, "hτ²=q", [&] {
        const RingElt h = st.quantum->element_of("h");
        const RingElt t = st.quantum->element_of("t");
        const RingElt q = st.quantum->element_of("q");
        const RingElt p = ringkit::mult(h, ringkit::mult(t, t));
        rep.checks.push_back(
            make_check(id, p == q, "hτ²=q", poly_str(p), poly_str(q)));
    });
}

void check_degeneration(const VarietySpec& spec, SuiteState& st, CheckReport& rep) {
    const HasseDiagram& diag = *spec.diagram;
    const std::string id = spec.name + ".q0.degeneration";
    guarded(rep, id, "classical limit of the quantum products", [&] {
        const auto& verts = diag.vertices();
        int count = 0;
        std::string failures;
        for (std::size_t i = 0; i < verts.size(); ++i) {
            if (verts[i].degree == 0) continue;
            for (std::size_t j = i; j < verts.size(); ++j) {
                if (verts[j].degree == 0) continue;
                if (verts[i].degree + verts[j].degree > diag.top_degree()) continue;
                const std::string &a = verts[i].id, &b = verts[j].id;
                const RingElt cp = ringkit::mult(st.giambelli.at(a), st.giambelli.at(b));
                const RingElt qp = ringkit::mult(st.qgiambelli.at(a), st.qgiambelli.at(b));
                auto c_cl = express_over(st.giambelli, st.classical, cp);
                auto c_q = express_over(st.qgiambelli, st.quantum, qp);
                ++count;
                if (!c_cl || !c_q) {
                    failures += (failures.empty() ? "" : ", ") + render::vertex(a) + "·" +
                                render::vertex(b) + " (no expansion)";
                    continue;
                }
                VertexCombo limit;
                for (const auto& [key, coeff] : *c_q)
                    if (key.second == 0) limit[key] = coeff;
                if (!combo_eq(limit, *c_cl))
                    failures += (failures.empty() ? "" : ", ") + render::vertex(a) + "·" +
                                render::vertex(b);
            }
        }
        rep.checks.push_back(make_check(
            id, failures.empty(),
            "classical structure constants are the q⁰ parts of the quantum ones (" +
                std::to_string(count) + " products)",
            failures.empty() ? "agree" : failures, "agree"));
    });
}

// ---------------------------------------------------------------------------
// Fundamental class, reconstruction, semisimplicity
// ---------------------------------------------------------------------------

std::map<Partition, Rat> parse_partition_map(const std::map<std::string, Rat>& m) {
    std::map<Partition, Rat> out;
    for (const auto& [text, value] : m) out[Partition::parse(text)] = value;
    return out;
}

std::string partition_map_str(const std::map<Partition, Rat>& m) {
    std::string out;
    for (auto it = m.rbegin(); it != m.rend(); ++it) {
        if (!out.empty()) out += ", ";
        out += "[" + it->first.str() + "]: " + it->second.str();
    }
    return out.empty() ? "0" : out;
}

void check_fundamental_class(const VarietySpec& spec, CheckReport& rep) {
    const FundamentalClassGolden& golden = *spec.golden.fundamental_class;
    guarded(rep, spec.name + ".fc", "zero-locus fundamental class", [&] {
        const chern::FundamentalClassReport fc = chern::g2_fundamental_class();
        const auto expected_evals = parse_partition_map(golden.evaluations);
        rep.checks.push_back(make_check(
            spec.name + ".fc.evaluations", fc.evaluations == expected_evals,
            "intersection numbers against products of special classes",
            partition_map_str(fc.evaluations), partition_map_str(expected_evals)));

        const auto expected_y = parse_partition_map(golden.y_expansion);
        const bool routes_agree = fc.y_expansion == fc.evaluations;
        rep.checks.push_back(make_check(
            spec.name + ".fc.dualroute",
            routes_agree && fc.y_expansion == expected_y,
            "monomial coefficients of the root polynomial match the intersection numbers",
            partition_map_str(fc.y_expansion), partition_map_str(expected_y),
            routes_agree ? "both evaluation routes agree" : "the two routes disagree"));

        const auto expected_class = parse_partition_map(golden.final_class);
        std::map<Partition, Rat> got_class;
        for (const auto& [p, c] : fc.cycle.terms())
            if (!c.is_zero()) got_class[p] = c;
        rep.checks.push_back(make_check(
            spec.name + ".fc.class", got_class == expected_class,
            "fundamental class " + render::schubert(fc.cycle), render::schubert(fc.cycle),
            partition_map_str(expected_class)));
    });
}

void check_reconstruction(const VarietySpec& spec, SuiteState& st, CheckReport& rep) {
    const HasseDiagram& diag = *spec.diagram;
    guarded(rep, spec.name + ".reconstruct", "second-generator reconstruction", [&] {
        const std::string sigma = second_seed_vertex(spec);
        const int gdeg = diag.degree_of(sigma);

        std::map<std::pair<std::string, std::string>, Rat> pairing;
        for (const auto& v : diag.vertices())
            for (const auto& w : diag.vertices())
                if (v.degree + w.degree == diag.top_degree())
                    pairing[{v.id, w.id}] = ringkit::integrate(
                        ringkit::mult(st.giambelli.at(v.id), st.giambelli.at(w.id)));

        std::map<std::string, VertexCombo> true_mult;
        for (const auto& v : diag.vertices()) {
            if (v.degree + gdeg > diag.top_degree()) continue;
            const RingElt image = ringkit::mult(st.giambelli.at(sigma), st.giambelli.at(v.id));
            auto combo = express_over(st.giambelli, st.classical, image);
            if (!combo)
                throw Error("product with the generator class left the basis span");
            true_mult[v.id] = *combo;
        }

        const Reconstruction rec =
            reconstruct_second_generator(diag, pairing, sigma, true_mult);
        rep.checks.push_back(make_check(
            spec.name + ".reconstruct.contains_true", rec.contains_true,
            "the actual multiplication by " + render::vertex(sigma) +
                " satisfies the reconstruction constraints (solution space dimension " +
                std::to_string(rec.dimension) + ")",
            rec.contains_true ? "satisfied" : "violated", "satisfied"));
        rep.checks.push_back(make_check(
            spec.name + ".reconstruct.sample",
            rec.sample_generates && rec.sample_associative,
            "a sample solution generates the ring and passes the associativity stress test",
            std::string(rec.sample_generates ? "generates" : "does not generate") + ", " +
                (rec.sample_associative ? "associative" : "not associative"),
            "generates, associative"));
    });
}

void check_semisimple(const VarietySpec& spec, SuiteState& st, CheckReport& rep) {
    const std::string id = spec.name + ".semisimple.q1";
    guarded(rep, id, "semisimplicity at q=1", [&] {
        const ringkit::FiniteAlgebra alg = ringkit::specialize_q(st.quantum, Rat(1));
        auto label_index = [&](const std::string& label) {
            for (int i = 0; i < alg.dim(); ++i)
                if (alg.labels[i] == label) return i;
            throw Error("basis label '" + label + "' not found");
        };
        std::string hname, gname;
        for (const auto& g : spec.generators) {
            if (g.degree == 1) hname = g.name;
            else gname = g.name;
        }
        const VecQ hv = alg.basis_vector(label_index(hname));

        struct Candidate {
            std::string description;
            VecQ vec;
        };
        std::vector<Candidate> candidates;
        candidates.push_back({render::vertex(hname), hv});
        if (!gname.empty()) {
            const VecQ gv = alg.basis_vector(label_index(gname));
            for (const Rat& c : {Rat(1), Rat(2), Rat(3), Rat(-1), Rat(1, 2)}) {
                VecQ v = hv;
                for (int i = 0; i < alg.dim(); ++i) v(i) += c * gv(i);
                candidates.push_back(
                    {render::vertex(hname) + " + " + c.str() + "·" + render::vertex(gname), v});
            }
        }

        ringkit::SemisimpleCertificate cert;
        std::string used;
        bool found = false;
        for (const auto& cand : candidates) {
            cert = ringkit::semisimple_certificate(alg, cand.vec);
            if (cert.squarefree && cert.generates) {
                used = cand.description;
                found = true;
                break;
            }
        }
        if (!found) {
            used = candidates.front().description;
            cert = ringkit::semisimple_certificate(alg, candidates.front().vec);
        }
        rep.checks.push_back(make_check(
            id, found,
            "multiplication by " + used + " at q=1 has a squarefree minimal polynomial of degree " +
                std::to_string(cert.minpoly.degree()) + " = dim " + std::to_string(alg.dim()),
            cert.minpoly.str("x"),
            "squarefree, degree " + std::to_string(alg.dim()),
            found ? "the specialized algebra is semisimple and the element generates it"
                  : "no tried element certified semisimplicity"));
    });
}

}  // namespace

// ---------------------------------------------------------------------------
// Suite driver
// ---------------------------------------------------------------------------

CheckReport run_suite(const VarietySpec& spec, const SuiteOptions& options) {
    CheckReport rep;
    if (!spec.diagram) {
        CheckResult r;
        r.id = spec.name + ".suite";
        r.status = CheckResult::Status::Error;
        r.summary = "verification suite";
        r.detail = "the variety description carries no diagram";
        rep.checks.push_back(std::move(r));
        return rep;
    }
    SuiteState st;
    const bool spin_shape = spec.name == "spin7";

    if (options.classical || options.quantum || options.reconstruct || options.semisimple) {
        check_hilbert(spec, st, rep);
        if (!st.classical) return rep;
        check_giambelli(spec, st, rep);
        if (st.giambelli.empty()) return rep;
    }

    if (options.classical) {
        check_degrees(spec, st, rep);
        if (spin_shape) check_spin7_classical(spec, st, rep);
        guarded(rep, spec.name + ".table1", "multiplication table", [&] {
            rep.append(verify_table(st.classical, st.giambelli, spec.golden.table,
                                    spec.name + ".table1", spec.diagram->unit_vertex()));
        });
        if (!spec.golden.dual_diagram.vertices.empty()) check_dual(spec, st, rep);
        if (!spec.golden.dual_table.empty()) {
            guarded(rep, spec.name + ".table2", "dual multiplication table", [&] {
                rep.append(verify_table(st.classical, st.dual_classes, spec.golden.dual_table,
                                        spec.name + ".table2",
                                        dual_unit_id(spec.golden.dual_diagram)));
            });
        }
        if (!spec.golden.orth_a1.empty() && !spec.golden.orth_a2.empty())
            check_orthogonality(spec, st, rep);
    }

    if (options.quantum || options.semisimple) {
        check_quantum_ring(spec, st, rep);
        if (!st.quantum) return rep;
        check_quantum_giambelli(spec, st, rep);
    }

    if (options.quantum) {
        check_quantum_chevalley(spec, st, rep);
        if (spin_shape) check_quantum_correction_count(spec, rep, 4);
        check_quantum_table(spec, st, rep);
        check_identities(spec, st, rep);
        if (spin_shape) check_spin7_quantum(spec, st, rep);
        check_degeneration(spec, st, rep);
    }

    if (options.fundamental_class && spec.golden.fundamental_class)
        check_fundamental_class(spec, rep);

    if (options.reconstruct) check_reconstruction(spec, st, rep);

    if (options.semisimple) check_semisimple(spec, st, rep);

    return rep;
}

nlohmann::json report_to_json(const CheckReport& report) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& c : report.checks) {
        const char* status = "error";
        if (c.status == CheckResult::Status::Pass) status = "pass";
        if (c.status == CheckResult::Status::Fail) status = "fail";
        out.push_back(nlohmann::json{{"id", c.id},
                                     {"status", status},
                                     {"summary", c.summary},
                                     {"lhs", c.lhs},
                                     {"rhs", c.rhs},
                                     {"detail", c.detail}});
    }
    return out;
}

}  // namespace horochow::catalog
