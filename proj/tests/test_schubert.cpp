#include <utility>
#include <vector>

#include "doctest.h"

#include "horochow/errors.hpp"
#include "horochow/partition.hpp"
#include "horochow/render.hpp"
#include "horochow/schubert.hpp"

using namespace horochow;
using namespace horochow::schubert;

namespace {

/// Every partition inside the k x (n-k) box of the context.
std::vector<Partition> box_partitions(GrassContext ctx) {
    std::vector<Partition> out;
    std::vector<int> parts;
    auto rec = [&](auto&& self, int row, int max_part) -> void {
        out.emplace_back(Partition(parts));
        if (row == ctx.k) return;
        for (int p = max_part; p >= 1; --p) {
            parts.push_back(p);
            self(self, row + 1, p);
            parts.pop_back();
        }
    };
    rec(rec, 0, ctx.n - ctx.k);
    return out;
}

/// Strict partitions inside the spinor staircase (4,3,2,1).
std::vector<StrictPartition> spinor_shapes() {
    std::vector<StrictPartition> out;
    for (int a = 0; a <= 4; ++a)
        for (int b = 0; b <= (a > 0 ? a - 1 : 0); ++b)
            for (int c = 0; c <= (b > 0 ? b - 1 : 0); ++c)
                for (int d = 0; d <= (c > 0 ? c - 1 : 0); ++d) {
                    std::vector<int> parts;
                    for (int p : {a, b, c, d})
                        if (p > 0) parts.push_back(p);
                    out.emplace_back(StrictPartition(parts));
                }
    return out;
}

Partition box_complement(const Partition& lam, GrassContext ctx) {
    std::vector<int> parts;
    for (int i = ctx.k; i >= 1; --i) parts.push_back(ctx.n - ctx.k - lam.part(i));
    return Partition(parts);
}

}  // namespace

TEST_CASE("products on the smallest Grassmannian of lines") {
    const GrassContext g24{2, 4};
    const SchubertCycle s1(g24, Partition{1});
    SchubertCycle sq = grass_mult(s1, s1);
    SchubertCycle expected(g24);
    expected.add(Partition{2}, Rat(1));
    expected.add(Partition{1, 1}, Rat(1));
    CHECK(sq == expected);

    // s_2 * s_{1,1} lands entirely outside the 2x2 box.
    CHECK(grass_mult(SchubertCycle(g24, Partition{2}), SchubertCycle(g24, Partition{1, 1}))
              .is_zero());

    // Two points of intersection: lines in 3-space meeting four general lines.
    SchubertCycle power = SchubertCycle(g24, Partition());
    for (int i = 0; i < 4; ++i) power = grass_mult(power, s1);
    CHECK(grass_integrate(power) == Rat(2));
}

TEST_CASE("hyperplane powers integrate to the count of standard tableaux") {
    // On G(2,7) the top self-intersection of the hyperplane class counts the
    // 42 standard Young tableaux of the 2x5 box.
    const GrassContext ctx{2, 7};
    SchubertCycle power(ctx, Partition());
    for (int i = 0; i < ctx.dim(); ++i)
        power = grass_mult(power, SchubertCycle(ctx, Partition{1}));
    CHECK(grass_integrate(power) == Rat(42));
}

TEST_CASE("commutativity across whole boxes") {
    for (GrassContext ctx : {GrassContext{2, 4}, GrassContext{2, 5}, GrassContext{3, 6}}) {
        const auto shapes = box_partitions(ctx);
        for (const auto& lam : shapes)
            for (const auto& mu : shapes) {
                SchubertCycle ab =
                    grass_mult(SchubertCycle(ctx, lam), SchubertCycle(ctx, mu));
                SchubertCycle ba =
                    grass_mult(SchubertCycle(ctx, mu), SchubertCycle(ctx, lam));
                CHECK(ab == ba);
            }
    }
}

TEST_CASE("associativity on sampled triples") {
    const GrassContext ctx{2, 7};
    const std::vector<Partition> sample{Partition{1},    Partition{2},    Partition{1, 1},
                                        Partition{3, 1}, Partition{2, 2}, Partition{5, 2}};
    for (const auto& a : sample)
        for (const auto& b : sample)
            for (const auto& c : sample) {
                const SchubertCycle ca(ctx, a), cb(ctx, b), cc(ctx, c);
                CHECK(grass_mult(grass_mult(ca, cb), cc) ==
                      grass_mult(ca, grass_mult(cb, cc)));
            }
}

TEST_CASE("Poincare duality is exhaustive and exact on G(2,7)") {
    const GrassContext ctx{2, 7};
    for (const auto& lam : box_partitions(ctx)) {
        const Partition dual = box_complement(lam, ctx);
        for (const auto& mu : box_partitions(ctx)) {
            if (lam.weight() + mu.weight() != ctx.dim()) continue;
            Rat v = grass_integrate(
                grass_mult(SchubertCycle(ctx, lam), SchubertCycle(ctx, mu)));
            CHECK(v == (mu == dual ? Rat(1) : Rat(0)));
        }
    }
}

TEST_CASE("Pieri multiplication by the special classes") {
    const GrassContext ctx{2, 7};
    // sigma_2 * sigma_{2,1}: add two boxes, no two in one column.
    SchubertCycle prod =
        grass_mult(SchubertCycle(ctx, Partition{2}), SchubertCycle(ctx, Partition{2, 1}));
    SchubertCycle expected(ctx);
    expected.add(Partition{4, 1}, Rat(1));
    expected.add(Partition{3, 2}, Rat(1));
    expected.add(Partition{2, 2, 1}, Rat(1));  // dropped: three rows
    SchubertCycle cleaned(ctx);
    cleaned.add(Partition{4, 1}, Rat(1));
    cleaned.add(Partition{3, 2}, Rat(1));
    CHECK(expected == cleaned);  // the third shape never entered the box
    CHECK(prod == cleaned);
}

TEST_CASE("restriction to a smaller Grassmannian discards overflowing shapes") {
    const GrassContext big{2, 8}, small{2, 7};
    SchubertCycle c(big);
    c.add(Partition{6, 3}, Rat(1));
    c.add(Partition{4, 1}, Rat(5));
    SchubertCycle r = restrict_to(c, small);
    SchubertCycle expected(small);
    expected.add(Partition{4, 1}, Rat(5));
    CHECK(r == expected);
}

TEST_CASE("documented products used by the geometric pipeline") {
    // sigma_{4,1} * sigma_{2,2} vanishes on G(2,7) but not on G(2,8).
    CHECK(grass_mult(SchubertCycle({2, 7}, Partition{4, 1}),
                     SchubertCycle({2, 7}, Partition{2, 2}))
              .is_zero());
    SchubertCycle on28 = grass_mult(SchubertCycle({2, 8}, Partition{4, 1}),
                                    SchubertCycle({2, 8}, Partition{2, 2}));
    SchubertCycle expected({2, 8});
    expected.add(Partition{6, 3}, Rat(1));
    CHECK(on28 == expected);
    CHECK(render::schubert(on28) == "σ[6,3]");
}

TEST_CASE("spinor classes: squares fixed by the geometry") {
    // The degree-3 class squares to twice the square of the (2,1) class.
    SpinorCycle g3sq = spinor_mult(SpinorCycle(StrictPartition{3}), SpinorCycle(StrictPartition{3}));
    SpinorCycle g21sq =
        spinor_mult(SpinorCycle(StrictPartition{2, 1}), SpinorCycle(StrictPartition{2, 1}));
    SpinorCycle expected(StrictPartition{4, 2}, Rat(2));
    CHECK(g3sq == expected);
    SpinorCycle doubled = g21sq;
    doubled *= Rat(2);
    CHECK(g3sq == doubled);
    CHECK(render::spinor(g3sq) == "2·γ[4,2]");
}

TEST_CASE("tenth power of the spinor hyperplane class") {
    SpinorCycle power{StrictPartition()};
    for (int i = 0; i < 10; ++i) power = spinor_mult(power, SpinorCycle(StrictPartition{1}));
    CHECK(spinor_integrate(power) == Rat(12));
    SpinorCycle expected(StrictPartition{4, 3, 2, 1}, Rat(12));
    CHECK(power == expected);
}

TEST_CASE("spinor products commute and associate") {
    // The product expands P-polynomials in (total weight) variables, so cost
    // grows steeply with weight; stay exhaustive through total weight 7 and
    // spot-check the heavier strata.
    const auto shapes = spinor_shapes();
    for (const auto& a : shapes)
        for (const auto& b : shapes) {
            if (a.weight() + b.weight() > 7) continue;
            CHECK(spinor_mult(SpinorCycle(a), SpinorCycle(b)) ==
                  spinor_mult(SpinorCycle(b), SpinorCycle(a)));
        }
    for (auto [a, b] : {std::pair{StrictPartition{4, 2}, StrictPartition{2}},
                        std::pair{StrictPartition{3, 2, 1}, StrictPartition{2}}})
        CHECK(spinor_mult(SpinorCycle(a), SpinorCycle(b)) ==
              spinor_mult(SpinorCycle(b), SpinorCycle(a)));

    const std::vector<StrictPartition> sample{StrictPartition{1}, StrictPartition{2},
                                              StrictPartition{2, 1}};
    for (const auto& a : sample)
        for (const auto& b : sample)
            for (const auto& c : sample)
                CHECK(spinor_mult(spinor_mult(SpinorCycle(a), SpinorCycle(b)), SpinorCycle(c)) ==
                      spinor_mult(SpinorCycle(a), spinor_mult(SpinorCycle(b), SpinorCycle(c))));
}

TEST_CASE("spinor products beyond the dimension are dropped outright") {
    // Total weight 11 exceeds the dimension, so the product is zero without
    // any polynomial work.
    SpinorCycle z = spinor_mult(SpinorCycle(StrictPartition{4, 3, 2, 1}),
                                SpinorCycle(StrictPartition{1}));
    CHECK(z.is_zero());
    CHECK(spinor_mult(SpinorCycle(StrictPartition{4, 3, 2}),
                      SpinorCycle(StrictPartition{3, 2}))
              .is_zero());
}

TEST_CASE("error taxonomy of the Schubert layer") {
    CHECK_THROWS_AS(SchubertCycle({2, 4}, Partition{3}), Error);
    CHECK_THROWS_AS(grass_mult(SchubertCycle({2, 4}, Partition{1}),
                               SchubertCycle({2, 5}, Partition{1})),
                    ContextMismatch);

    SchubertCycle mixed({2, 4});
    mixed.add(Partition{1}, Rat(1));
    mixed.add(Partition{2}, Rat(1));
    CHECK_THROWS_AS(grass_integrate(mixed), Inhomogeneous);
    bool is_mixed = false;
    mixed.degree(&is_mixed);
    CHECK(is_mixed);

    CHECK_THROWS_AS(evaluate_against(SchubertCycle({2, 7}, Partition{4, 1}),
                                     SchubertCycle({2, 7}, Partition{2, 2})),
                    DegreeMismatch);
}
