#include <map>
#include <string>
#include <vector>

#include "doctest.h"

#include "horochow/errors.hpp"
#include "horochow/hasse.hpp"
#include "horochow/poly.hpp"
#include "horochow/ringkit.hpp"

using namespace horochow;
using namespace horochow::ringkit;

namespace {

/// Q[h]/(h^(n+1)) with the point normalized to 1: projective n-space.
RingPtr pn_ring(int n) {
    Presentation p;
    p.generators = {{"h", 1}};
    p.relations = {SymPoly::monomial({n + 1}, Rat(1))};
    p.top_degree = n;
    p.normalization = Normalization{"h", n, Rat(1)};
    return GradedRing::build(p);
}

/// The multiplication-by-h chain for projective 3-space.
HasseDiagram chain4() {
    return HasseDiagram({{"v0", 0}, {"v1", 1}, {"v2", 2}, {"v3", 3}},
                        {{"v0", "v1", Rat(1)}, {"v1", "v2", Rat(1)}, {"v2", "v3", Rat(1)}},
                        {}, 4);
}

/// Branching toy: one unit covering two middle classes over one point.
HasseDiagram diamond() {
    return HasseDiagram({{"u", 0}, {"a", 1, Family::Y}, {"b", 1, Family::Z}, {"p", 2}},
                        {{"u", "a", Rat(1)},
                         {"u", "b", Rat(1)},
                         {"a", "p", Rat(1)},
                         {"b", "p", Rat(1)}},
                        {}, 3);
}

}  // namespace

TEST_CASE("diagram accessors and construction invariants") {
    HasseDiagram d = chain4();
    CHECK(d.top_degree() == 3);
    CHECK(d.unit_vertex() == "v0");
    CHECK(d.point_vertex() == "v3");
    CHECK(d.degree_of("v2") == 2);
    CHECK(d.has_vertex("v1"));
    CHECK_FALSE(d.has_vertex("w"));
    CHECK(d.vertices_at(1) == std::vector<std::string>{"v1"});
    CHECK(d.edges_from("v1").size() == 1);
    CHECK_THROWS_AS(d.degree_of("w"), UnknownVertex);

    HasseDiagram dm = diamond();
    CHECK(dm.family_of("a") == Family::Y);
    CHECK(dm.family_of("b") == Family::Z);
    CHECK(dm.family_of("u") == Family::Shared);
    CHECK(dm.vertices_at(1) == std::vector<std::string>{"a", "b"});

    // Exactly one unit and one point are required.
    CHECK_THROWS_AS(HasseDiagram({{"x", 0}, {"y", 0}}, {}, {}, 1), InvariantViolation);
    CHECK_THROWS_AS(HasseDiagram({{"x", 0}, {"y", 1}, {"z", 1}}, {}, {}, 1),
                    InvariantViolation);
    CHECK_THROWS_AS(HasseDiagram({{"x", 0}, {"x", 1}}, {}, {}, 1), InvariantViolation);
    CHECK_THROWS_AS(HasseDiagram({}, {}, {}, 1), InvariantViolation);

    // Classical edges must raise degree by exactly one.
    CHECK_THROWS_AS(HasseDiagram({{"x", 0}, {"y", 2}}, {{"x", "y", Rat(1)}}, {}, 1),
                    InvariantViolation);
    // Edge endpoints must exist.
    CHECK_THROWS_AS(HasseDiagram({{"x", 0}, {"y", 1}}, {{"x", "z", Rat(1)}}, {}, 1),
                    UnknownVertex);
}

TEST_CASE("quantum edge degree law") {
    // Index 2, so a quantum edge must drop the degree by index*power - 1.
    std::vector<HasseVertex> vs{{"v0", 0}, {"v1", 1}};
    std::vector<HasseEdge> es{{"v0", "v1", Rat(1)}};
    HasseDiagram legal(vs, es, {{"v1", "v0", Rat(1), 1}}, 2);
    CHECK(legal.q_edges_from("v1").size() == 1);

    // Landing one degree too high violates the law.
    CHECK_THROWS_AS(HasseDiagram(vs, es, {{"v1", "v1", Rat(1), 1}}, 2), InvariantViolation);
    // Zero and negative q powers are refused.
    CHECK_THROWS_AS(HasseDiagram(vs, es, {{"v1", "v0", Rat(1), 0}}, 2), InvariantViolation);
}

TEST_CASE("combo terms, degrees, and the hyperplane action") {
    HasseDiagram d = chain4();

    VertexCombo c{{{"v1", 0}, Rat(2)}, {{"v0", 1}, Rat(3)}};
    std::vector<ComboTerm> ts = to_terms(c);
    REQUIRE(ts.size() == 2);
    CHECK(ts[0].vertex == "v1");
    CHECK(ts[0].q_power == 0);
    CHECK(ts[1].vertex == "v0");
    CHECK(ts[1].q_power == 1);
    CHECK(to_combo(ts) == c);

    CHECK(combo_degree(d, VertexCombo{{{"v2", 0}, Rat(1)}}) == 2);
    CHECK(combo_degree(d, VertexCombo{}) == std::nullopt);
    // v1 (degree 1) plus q*v0 (degree 4) mix.
    CHECK_THROWS_AS(combo_degree(d, c), MixedDegrees);

    VertexCombo image = chevalley_apply(d, VertexCombo{{{"v1", 0}, Rat(1)}}, false);
    CHECK(image == VertexCombo{{{"v2", 0}, Rat(1)}});
    // The point has no classical covers.
    CHECK(chevalley_apply(d, VertexCombo{{{"v3", 0}, Rat(1)}}, false).empty());

    HasseDiagram dm = diamond();
    VertexCombo spread = chevalley_apply(dm, VertexCombo{{{"u", 0}, Rat(1)}}, false);
    CHECK(spread == VertexCombo{{{"a", 0}, Rat(1)}, {{"b", 0}, Rat(1)}});

    // Quantum toy: multiplication by h wraps the top class back to the unit.
    HasseDiagram q({{"v0", 0}, {"v1", 1}}, {{"v0", "v1", Rat(1)}},
                   {{"v1", "v0", Rat(1), 1}}, 2);
    CHECK(chevalley_apply(q, VertexCombo{{{"v1", 0}, Rat(1)}}, true) ==
          VertexCombo{{{"v0", 1}, Rat(1)}});
    CHECK(chevalley_apply(q, VertexCombo{{{"v1", 0}, Rat(1)}}, false).empty());
    CHECK(combo_degree(q, VertexCombo{{{"v0", 1}, Rat(1)}}) == 2);
}

TEST_CASE("degrees against the hyperplane class") {
    std::map<std::string, Rat> chain_degs = degrees_from_hasse(chain4());
    std::map<std::string, Rat> expected{
        {"v0", Rat(1)}, {"v1", Rat(1)}, {"v2", Rat(1)}, {"v3", Rat(1)}};
    CHECK(chain_degs == expected);

    // Two monotone paths from the unit on the diamond.
    std::map<std::string, Rat> dm = degrees_from_hasse(diamond());
    std::map<std::string, Rat> expected_dm{
        {"u", Rat(2)}, {"a", Rat(1)}, {"b", Rat(1)}, {"p", Rat(1)}};
    CHECK(dm == expected_dm);
}

TEST_CASE("solving for polynomial representatives") {
    RingPtr r3 = pn_ring(3);
    HasseDiagram d = chain4();
    GiambelliMap g = giambelli_solve(d, r3, {{"v0", r3->unit()}});
    REQUIRE(g.size() == 4);
    RingElt h = r3->element_of("h");
    CHECK(g.at("v0") == r3->unit());
    CHECK(g.at("v1") == h);
    CHECK(g.at("v2") == mult(h, h));
    CHECK(g.at("v3") == mult(h, mult(h, h)));

    // Two candidates in a one-dimensional degree piece: no unique solution.
    RingPtr r2 = pn_ring(2);
    CHECK_THROWS_AS(giambelli_solve(diamond(), r2, {{"u", r2->unit()}}), Underdetermined);
    try {
        giambelli_solve(diamond(), r2, {{"u", r2->unit()}});
    } catch (const Underdetermined& e) {
        CHECK(e.degree == 1);
    }

    // A vanishing edge multiplicity forces h * G(a) = 0, which is false.
    HasseDiagram broken({{"u", 0}, {"a", 1}, {"p", 2}},
                        {{"u", "a", Rat(1)}, {"a", "p", Rat(0)}}, {}, 3);
    CHECK_THROWS_AS(giambelli_solve(broken, r2, {{"u", r2->unit()}}), Inconsistent);
    try {
        giambelli_solve(broken, r2, {{"u", r2->unit()}});
    } catch (const Inconsistent& e) {
        CHECK(e.degree == 2);
        CHECK(e.vertex == "p");
    }
}

TEST_CASE("expressing elements over a basis") {
    RingPtr r3 = pn_ring(3);
    GiambelliMap g = giambelli_solve(chain4(), r3, {{"v0", r3->unit()}});
    RingElt h = r3->element_of("h");

    auto combo = express_over(g, r3, Rat(3) * mult(h, h));
    REQUIRE(combo.has_value());
    CHECK(*combo == VertexCombo{{{"v2", 0}, Rat(3)}});

    // Only homogeneous elements have an expression.
    CHECK_FALSE(express_over(g, r3, h + mult(h, h)).has_value());

    // Not in the span of a partial family.
    std::map<std::string, RingElt> partial{{"v2", g.at("v2")}};
    CHECK_FALSE(express_over(partial, r3, h).has_value());

    // Zero is the empty combination.
    auto zero = express_over(g, r3, r3->zero());
    REQUIRE(zero.has_value());
    CHECK(zero->empty());

    // In a quantum ring, classes may be scaled by parameter powers: here
    // q itself is expressed as q * unit.
    Presentation qp;
    qp.generators = {{"h", 1}, {"q", 2}};
    qp.relations = {SymPoly::monomial({2, 0}, Rat(1)) - SymPoly::monomial({0, 1}, Rat(1))};
    qp.top_degree = 1;
    qp.normalization = Normalization{"h", 1, Rat(1)};
    qp.quantum = "q";
    RingPtr qr = GradedRing::build(qp);
    std::map<std::string, RingElt> qclasses{{"v0", qr->unit()}, {"v1", qr->element_of("h")}};
    auto qcombo = express_over(qclasses, qr, qr->element_of("q"));
    REQUIRE(qcombo.has_value());
    CHECK(*qcombo == VertexCombo{{{"v0", 1}, Rat(1)}});
}

TEST_CASE("recomputing asserted product tables") {
    RingPtr r3 = pn_ring(3);
    GiambelliMap g = giambelli_solve(chain4(), r3, {{"v0", r3->unit()}});
    std::map<std::string, RingElt> classes(g.begin(), g.end());

    std::vector<ProductRow> rows{
        {"v1", "v1", {{Rat(1), "v2", 0}}, ""},
        {"v1", "v2", {{Rat(1), "v3", 0}}, ""},
        {"v2", "v2", {}, ""},  // lands beyond the top degree
    };
    CheckReport rep = verify_table(r3, classes, rows, "toy", "v0");
    CHECK(rep.all_pass());
    REQUIRE(rep.checks.size() == 3);
    CHECK(rep.checks[0].id == "toy.v1*v1");

    // A wrong assertion is reported as a failure, not an exception.
    std::vector<ProductRow> bad{{"v1", "v1", {{Rat(2), "v2", 0}}, ""}};
    CheckReport brep = verify_table(r3, classes, bad, "toy", "v0");
    CHECK_FALSE(brep.all_pass());
    REQUIRE(brep.checks.size() == 1);
    CHECK(brep.checks[0].status == CheckResult::Status::Fail);
    CHECK(brep.checks[0].lhs == "v2");
    CHECK(brep.checks[0].rhs == "2v2");

    // Rows naming unknown classes are misuse, hence an exception.
    std::vector<ProductRow> unknown{{"v1", "x", {}, ""}};
    CHECK_THROWS_AS(verify_table(r3, classes, unknown, "toy", "v0"), UnknownSymbol);
    // Quantum terms are refused in a classical ring.
    std::vector<ProductRow> qrow{{"v1", "v1", {{Rat(1), "v0", 1}}, ""}};
    CHECK_THROWS_AS(verify_table(r3, classes, qrow, "toy", "v0"), NoQuantumParameter);
}

TEST_CASE("checking a dual diagram") {
    RingPtr r3 = pn_ring(3);
    HasseDiagram d = chain4();
    GiambelliMap g = giambelli_solve(d, r3, {{"v0", r3->unit()}});

    // Projective space is self-dual: the dual diagram is again a chain and
    // the pairing reverses the degrees.
    DualDiagram dd;
    dd.vertices = {{"w0", 0}, {"w1", 1}, {"w2", 2}, {"w3", 3}};
    dd.edges = {{"w0", "w1", Rat(1)}, {"w1", "w2", Rat(1)}, {"w2", "w3", Rat(1)}};
    dd.dual_of = {{"w0", "v3"}, {"w1", "v2"}, {"w2", "v1"}, {"w3", "v0"}};

    std::map<std::string, RingElt> dual_classes;
    CheckReport rep = dual_diagram_check(dd, d, r3, g, "toy", &dual_classes);
    CHECK(rep.all_pass());
    REQUIRE(dual_classes.size() == 4);
    CHECK(dual_classes.at("w0") == r3->unit());
    CHECK(dual_classes.at("w3") == g.at("v3"));

    // A wrong multiplicity in the dual edges is caught.
    DualDiagram wrong = dd;
    wrong.edges[1].mult = Rat(2);
    CheckReport bad = dual_diagram_check(wrong, d, r3, g, "toy");
    CHECK_FALSE(bad.all_pass());

    // A dual_of map that fails to complement degrees is caught.
    DualDiagram swapped = dd;
    swapped.dual_of = {{"w0", "v0"}, {"w1", "v1"}, {"w2", "v2"}, {"w3", "v3"}};
    CheckReport srep = dual_diagram_check(swapped, d, r3, g, "toy");
    CHECK_FALSE(srep.all_pass());
}

TEST_CASE("reconstructing the second multiplication operator") {
    RingPtr r3 = pn_ring(3);
    HasseDiagram d = chain4();
    GiambelliMap g = giambelli_solve(d, r3, {{"v0", r3->unit()}});

    std::map<std::pair<std::string, std::string>, Rat> pairing;
    for (const auto& a : d.vertices())
        for (const auto& b : d.vertices())
            if (a.degree + b.degree == d.top_degree())
                pairing[{a.id, b.id}] = integrate(mult(g.at(a.id), g.at(b.id)));

    std::map<std::string, VertexCombo> true_mult;
    for (const auto& v : d.vertices())
        true_mult[v.id] = *express_over(g, r3, mult(g.at("v2"), g.at(v.id)));

    Reconstruction rec = reconstruct_second_generator(d, pairing, "v2", true_mult);
    // Commutation with the hyperplane operator pins the operator completely.
    CHECK(rec.dimension == 0);
    CHECK(rec.contains_true);
    CHECK(rec.sample_generates);
    CHECK(rec.sample_associative);
    CHECK(rec.sample.at("v0") == VertexCombo{{{"v2", 0}, Rat(1)}});
    CHECK(rec.sample.at("v1") == VertexCombo{{{"v3", 0}, Rat(1)}});
    CHECK(rec.sample.at("v2").empty());

    // Determinism: the same inputs give the same particular solution.
    Reconstruction again = reconstruct_second_generator(d, pairing, "v2", true_mult);
    CHECK(rec.sample == again.sample);
    CHECK(rec.dimension == again.dimension);
}
