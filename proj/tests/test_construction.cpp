#include <doctest.h>

#include "liplab/construction.hpp"
#include "support.hpp"

using namespace liplab;
using liplab::testing::Gen;
using liplab::testing::q;

namespace {
const ClosedInterval unit(q(0), q(1));
}

TEST_CASE("phi examples") {
    CHECK(phi(1, unit).eval(q(1, 2)) == q(1, 4));
    CHECK(phi(3, {q(1, 5), q(4, 5)}).eval(q(1, 5)) == 0);
    CHECK(phi(2, {q(0), q(2)}).eval(q(1, 2)) == q(1, 8));
    CHECK(lipschitz_constant(phi(3, unit)) == q(1, 8));
}

TEST_CASE("n-close examples") {
    CHECK(n_close_ratio(1) == q(8, 9));
    const auto z = generate_n_close(1, unit, 1);
    CHECK(z.points == std::vector<Rational>{q(4, 9), q(1, 2), q(5, 9)});
    CHECK(z.first_index == -1);
    CHECK(z.truncation() == 1);
    CHECK(q(1, 2) - q(4, 9) == q(1, 18));
    CHECK(is_n_close(z.points, 1, unit));

    const auto z2 = generate_n_close(2, unit, 1);
    CHECK(z2.points[1] - z2.points[0] == q(1, 66));
    CHECK(q(1, 66) < q(1, 16) * z2.points[0]);
    CHECK(z2.points[0] == q(16, 33));

    CHECK(is_n_close({q(4, 9), q(1, 2), q(5, 9)}, 1, unit));
    CHECK_FALSE(is_n_close({q(1, 4), q(3, 4)}, 1, unit));
    CHECK(is_n_close({}, 3, unit));
    CHECK_FALSE(is_n_close({q(0), q(1, 100)}, 1, unit));
    CHECK_FALSE(is_n_close({q(1, 2), q(1, 2)}, 1, unit));
}

TEST_CASE("zigzag examples") {
    const auto z = generate_n_close(1, unit, 1);
    const Rational base = q(3, 7);
    const auto f = zigzag(z, base);
    CHECK(f.eval(q(4, 9)) == base + q(2, 9));
    CHECK(f.eval(q(1, 2)) == base);
    CHECK(f.eval(q(5, 9)) == base + q(2, 9));
    CHECK(f.eval(q(0)) == base);
    CHECK(f.eval(q(1)) == base);
    CHECK(abs_of(f.eval(q(5, 9)) - f.eval(q(1, 2))) / (q(5, 9) - q(1, 2)) == 4);
}

TEST_CASE("flatten examples") {
    const auto g = flatten(q(0), q(1), unit, OpenSet::single(q(1, 4), q(1, 2)));
    CHECK(g.eval(q(1, 4)) == q(1, 3));
    CHECK(g.eval(q(1, 2)) == q(1, 3));
    CHECK(g.eval(q(3, 4)) == q(2, 3));
    CHECK(g.eval(q(1)) == 1);
    CHECK(uniform_distance(flatten(q(1), q(3), unit, OpenSet()), PiecewiseLinear::line(unit, 1, 2)) == 0);
    CHECK(lipschitz_constant(flatten(q(2), q(2), unit, OpenSet::single(q(1, 4), q(1, 2)))) == 0);
    CHECK_THROWS_AS(flatten(q(0), q(1), unit, OpenSet::single(q(-1), q(1, 2))), ContractViolation);
}

TEST_CASE("envelope examples") {
    const auto zero = PiecewiseLinear::constant(unit, 0);
    CHECK(uniform_distance(envelope_h(zero, 1, {}, unit), zero) == 0);
    const auto h = envelope_h(zero, 1, {{q(1, 4), q(1, 2)}}, unit);
    CHECK(h.eval(q(3, 8)) == q(1, 16));
    CHECK_THROWS_AS(envelope_h(zero, 1, {{q(1, 2), q(2)}}, unit), ContractViolation);
}

TEST_CASE("n-small examples") {
    const auto u = generate_n_small(1, unit, OpenSet(), 1, TailPolicy::empty);
    CHECK(u == OpenSet({{q(11, 32), q(13, 32)}, {q(19, 32), q(21, 32)}}));
    CHECK(measure(restrict(u, {q(1, 4), q(1, 2)})) == q(1, 16));

    const OpenSet cover = OpenSet::single(q(3, 8) - q(1, 64), q(3, 8) + q(1, 64));
    const auto v = generate_n_small(1, unit, cover, 1, TailPolicy::empty);
    CHECK(cover.is_subset_of(v));
    CHECK(measure(restrict(v, {q(1, 4), q(1, 2)})) == q(1, 16));

    // a cover larger than the quota is reported with its annulus
    const OpenSet fat = OpenSet::single(q(5, 16), q(7, 16));
    try {
        generate_n_small(1, unit, fat, 2);
        FAIL("expected a budget violation");
    } catch (const BudgetViolation& e) {
        CHECK(e.annulus() == 1);
        CHECK(e.left_side());
    }
    CHECK_THROWS_AS(generate_n_small(1, unit, OpenSet::single(q(1, 100), q(2, 100)), 2, TailPolicy::empty), BudgetViolation);

    for (int depth = 1; depth <= 8; ++depth) {
        const auto w = generate_n_small(2, unit, OpenSet(), depth, TailPolicy::empty);
        Rational expected = 0;
        for (int j = 1; j <= depth; ++j) expected += 2 * pow2(-(2 * 2 + j + 1));
        CHECK(measure(w) == expected);
        CHECK(measure(w) == pow2(-4) * (1 - pow2(-depth)));
        CHECK(measure(generate_n_small(2, unit, OpenSet(), depth)) == pow2(-4));
    }
}

TEST_CASE("monotone_h examples") {
    CHECK(lipschitz_constant(monotone_h(3, OpenSet(), unit)) == 0);
    const auto g = monotone_h(1, OpenSet::single(q(1, 4), q(1, 2)), unit);
    CHECK(g.eval(q(3, 8)) == q(1, 4));
    const auto full = generate_n_small(1, unit, OpenSet(), 5);
    CHECK(monotone_h(1, full, unit).eval(q(1)) == q(1, 2));
}

TEST_CASE("ramp examples") {
    const OpenSet v = OpenSet::single(q(1, 4), q(3, 4));
    CHECK(ramp_coefficient(q(2), unit, v, 1) == q(7, 2));
    const auto f = ramp(q(0), q(2), unit, v, 1);
    CHECK(f.eval(q(1)) == 2);
    CHECK(f.eval(q(0)) == 0);
    const auto lit = ramp(q(0), q(2), unit, v, 1, RampCoefficient::paper_literal);
    CHECK(lit.eval(q(1)) == q(3, 2));
    CHECK(ramp_coefficient(q(3), unit, OpenSet(), 2) == 3);
    CHECK(uniform_distance(ramp(q(1), q(3), unit, OpenSet(), 2), PiecewiseLinear::line(unit, 1, 3)) == 0);
    CHECK_THROWS_AS(ramp(q(0), q(1, 2), unit, v, 1), ContractViolation);
    CHECK_THROWS_AS(ramp(q(0), q(2), unit, OpenSet::single(q(-1), q(1, 2)), 1), ContractViolation);
}

TEST_CASE("property: generated n-close sequences") {
    Gen gen(4242);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = static_cast<int>(gen.integer(1, 6));
        const int j = static_cast<int>(gen.integer(1, 12));
        const Rational a = gen.rational(q(-2), q(1)), b = a + gen.rational(q(1, 97), q(3));
        const ClosedInterval i(a, b);
        const auto z = generate_n_close(n, i, j);
        CHECK(z.points.size() == static_cast<std::size_t>(2 * j + 1));
        CHECK(is_n_close(z.points, n, i));
        const auto f = zigzag(z, gen.rational(q(-1), q(1)));
        for (std::size_t k = 0; k + 1 < z.points.size(); ++k)
            CHECK(abs_of(f.eval(z.points[k + 1]) - f.eval(z.points[k])) >= pow2(n) * (z.points[k + 1] - z.points[k]));
    }
}

TEST_CASE("property: flatten") {
    Gen gen(99);
    for (int trial = 0; trial < 100; ++trial) {
        const auto u = gen.open_set(q(1, 50), q(49, 50), static_cast<std::size_t>(gen.integer(0, 5)));
        const Rational fa = gen.rational(q(-1), q(1)), fb = gen.rational(q(-1), q(1));
        const auto g = flatten(fa, fb, unit, u);
        CHECK(g.eval(q(0)) == fa);
        CHECK(g.eval(q(1)) == fb);
        if (fb >= fa) CHECK(is_monotone_nondecreasing(g));
        CHECK(uniform_distance(g, PiecewiseLinear({{q(0), fa}, {q(1), fb}})) <= abs_of(fb - fa));
        for (const auto& c : u.components()) CHECK(g.eval(c.lo) == g.eval(c.hi));
    }
}

TEST_CASE("property: n-small exactness and monotone_h slopes") {
    Gen gen(1717);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = static_cast<int>(gen.integer(1, 4));
        const int depth = static_cast<int>(gen.integer(1, 7));
        const Rational a = gen.rational(q(0), q(1, 2)), b = a + gen.rational(q(1, 4), q(1));
        const ClosedInterval i(a, b);
        // one small cover interval around a point of the inner half
        const Rational x = a + i.length() * gen.rational(q(3, 8), q(5, 8));
        const Rational rho = dyadic_floor(i.length() * pow2(-(2 * n + depth + 4)));
        const OpenSet cover = OpenSet::single(x - rho, x + rho);
        for (auto policy : {TailPolicy::fill, TailPolicy::empty}) {
            const auto u = generate_n_small(n, i, cover, depth, policy);
            CHECK(cover.is_subset_of(u));
            Rational processed = 0;
            for (const auto& r : annulus_regions(n, i, depth, false)) {
                CHECK(measure(restrict(u, r.region)) == i.length() * pow2(-(2 * n + r.index + 1)));
                processed += measure(restrict(u, r.region));
            }
            CHECK(processed == pow2(-2 * n) * i.length() * (1 - pow2(-depth)));
            if (policy == TailPolicy::fill) CHECK(measure(u) == pow2(-2 * n) * i.length());
            else CHECK(measure(u) == processed);
            const auto g = monotone_h(n, u, i);
            CHECK(g.eval(b) == pow2(n) * measure(u));
            for (std::size_t k = 0; k + 1 < g.size(); ++k) CHECK((g.slope(k) == 0 || g.slope(k) == pow2(n)));
        }
    }
}

TEST_CASE("property: ramp slopes and endpoints") {
    Gen gen(31337);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = static_cast<int>(gen.integer(1, 5));
        const auto v = gen.open_set(q(1, 50), q(49, 50), static_cast<std::size_t>(gen.integer(0, 4)));
        const Rational m = pow2(static_cast<int>(gen.integer(1, 4)));
        const Rational start = gen.rational(q(0), q(1));
        const auto f = ramp(start, m, unit, v, n);
        CHECK(f.eval(q(1)) - f.eval(q(0)) == m);
        CHECK(is_monotone_nondecreasing(f));
        const Rational steep = ramp_coefficient(m, unit, v, n);
        for (std::size_t k = 0; k + 1 < f.size(); ++k) CHECK((f.slope(k) == pow2(-n) || f.slope(k) == steep));
    }
}
