#include <doctest.h>

#include <algorithm>

#include "liplab/harness.hpp"
#include "liplab/presets.hpp"
#include "support.hpp"

using namespace liplab;
using liplab::testing::q;

namespace {

const TrimTrace& point_trace() {
    static const TrimTrace t = build_trim(point_target(q(1, 2), 3), TrimConfig{3, 8, 12});
    return t;
}

const MonotoneTrace& cantor_trace() {
    static const MonotoneTrace t = build_monotone(cantor_target(3), MonotoneConfig{3, 6, 12, false});
    return t;
}

}  // namespace

TEST_CASE("preset examples") {
    const auto p = point_target(q(1, 2), 3);
    CHECK(p.levels.size() == 3);
    CHECK(p.levels[0] == OpenSet::single(q(0), q(1)));
    CHECK(p.levels[1] == OpenSet::single(q(7, 16), q(9, 16)));
    CHECK(p.kind == TargetKind::measure_zero);
    CHECK_THROWS_AS(point_target(q(1, 32), 3), ContractViolation);

    const auto c = cantor_target(2);
    CHECK(c.levels.size() == 2);
    CHECK(c.levels[1].size() == 4);
    CHECK(measure(c.levels[1]) <= 4 * q(1, 9) + q(1, 2));
    CHECK(measure(cantor_target(6).finest()) == power(q(2, 3), 6));

    const auto fc = fat_cantor_target(q(1, 4), 3);
    CHECK(fc.kind == TargetKind::trim);
    std::vector<ClosedInterval> probes;
    for (const auto& d : dyadic_probes(3)) probes.push_back(d);
    CHECK(is_trim_set_probe(fc.finest(), probes));
    CHECK_THROWS_AS(fat_cantor_target(q(1, 2), 3), ContractViolation);

    CHECK(empty_target(4).finest().empty());
    CHECK(preset("points:1/4,3/4", 3).finest().size() == 2);
    CHECK(preset("fat_cantor:1/4,5", 2).levels.size() == 5);
    CHECK_THROWS_AS(preset("nope", 3), ContractViolation);
    CHECK_THROWS_AS(preset("cantor:1", 3), ContractViolation);
    CHECK_THROWS_AS(preset("cantor:3/2", 3), ContractViolation);
    CHECK_THROWS_AS(preset("point", 3), ContractViolation);
    CHECK(preset_catalog().size() == 5);

    CHECK(normalize_to_unit(OpenSet::single(q(2), q(3)), q(2), q(6)) == OpenSet::single(q(0), q(1, 4)));
}

TEST_CASE("target validation") {
    CHECK_NOTHROW(validate_target(fat_cantor_target(q(1, 4), 4), q(1, 3)));
    CHECK_NOTHROW(validate_target(cantor_target(4), q(1, 3)));
    CHECK_THROWS_AS(validate_target(cantor_target(2), q(1, 10)), ContractViolation);
    TargetGDelta bad{"bad", {OpenSet::single(q(0), q(1)), OpenSet::single(q(1, 2), q(2))}, TargetKind::measure_zero};
    CHECK_THROWS_AS(validate_target(bad, q(1)), ContractViolation);
    TargetGDelta full{"full", {OpenSet::single(q(0), q(1)), OpenSet::single(q(0), q(1))}, TargetKind::trim};
    CHECK_THROWS_AS(validate_target(full, q(1)), ContractViolation);
    TargetGDelta shifted{"shifted", {OpenSet::single(q(0), q(2))}, TargetKind::trim};
    CHECK_THROWS_AS(validate_target(shifted, q(1)), ContractViolation);
}

TEST_CASE("deep point sampling") {
    TargetGDelta t{"t", {OpenSet::single(q(0), q(1)), OpenSet::single(q(1, 2) - q(1, 64), q(1, 2) + q(1, 64))},
                   TargetKind::measure_zero};
    CHECK(sample_deep_points(t, 1) == std::vector<Rational>{q(1, 2)});
    const auto pts = sample_deep_points(t, 5);
    CHECK(pts.size() == 5);
    CHECK(std::is_sorted(pts.begin(), pts.end()));
    CHECK(std::adjacent_find(pts.begin(), pts.end()) == pts.end());
    for (const auto& x : pts) CHECK(t.finest().contains(x));
    CHECK_THROWS_AS(sample_deep_points(empty_target(3), 2), ContractViolation);
    CHECK_THROWS_AS(sample_deep_points(t, 0), ContractViolation);
}

TEST_CASE("trim pipeline on a single point") {
    const auto& t = point_trace();
    CHECK(t.stages.size() == 3);
    CHECK(std::find(t.deep_points.begin(), t.deep_points.end(), q(1, 2)) != t.deep_points.end());
    CHECK(t.z_separation > 0);
    bool found = false;
    for (const auto& c : t.certificates) {
        if (c.x == q(1, 2) && c.stage == 2 && c.kind == Certificate::Kind::big_lip_lower) {
            found = true;
            CHECK(c.measured >= 2);
        }
        if (c.kind == Certificate::Kind::big_lip_lower) CHECK(c.measured >= c.bound);
        else CHECK(c.measured <= c.bound);
    }
    CHECK(found);
    for (std::size_t n = 1; n <= t.stages.size(); ++n) {
        const auto& st = t.stages[n - 1];
        CHECK(uniform_distance(st.f, st.g) <= pow2(-static_cast<int>(n)));
        for (const auto& x : t.deep_points) CHECK(st.u.contains(x));
    }
    CHECK(t.boundary.size() == 2);
    CHECK(t.boundary[0].bound == 1);
    CHECK(t.boundary[1].bound == 1);
    CHECK(big_lip_estimate(t.f(), q(1, 2), RadiusSchedule::for_depth(3)) >= 1);
    CHECK(all_pass(check_all_trim(t)));
}

TEST_CASE("trim pipeline contracts") {
    CHECK_THROWS_AS(build_trim(point_target(q(1, 2), 3), TrimConfig{1, 8, 12}), ContractViolation);
    CHECK_THROWS_AS(build_trim(point_target(q(1, 2), 3), TrimConfig{4, 8, 12}), ContractViolation);
    CHECK_THROWS_AS(build_trim(point_target(q(1, 2), 3), TrimConfig{3, 0, 12}), ContractViolation);
    const auto e = build_trim(empty_target(3), TrimConfig{3, 4, 4});
    CHECK(e.deep_points.empty());
    CHECK(all_pass(check_all_trim(e)));
}

TEST_CASE("monotone pipeline on the Cantor preset") {
    const auto& t = cantor_trace();
    const auto& f = t.f();
    CHECK(is_monotone_nondecreasing(f));
    CHECK(f.eval(q(0)) == 0);
    CHECK(f.eval(q(1)) == q(1, 2));
    for (const auto& st : t.stages) {
        CHECK(st.u.is_subset_of(st.v));
        if (st.n < static_cast<int>(t.stages.size())) CHECK(t.stages[st.n].v.is_subset_of(st.u));
        for (const auto& r : st.ramps) {
            CHECK(r.slope == pow2(st.n));
            CHECK(r.f.eval(r.interval.hi()) == r.h_start + r.slope * r.interval.length());
        }
    }
    CHECK(small_lip_estimate(f, t.deep_points.front(), RadiusSchedule::for_depth(3)) <= lipschitz_constant(f));
    CHECK(all_pass(check_all_monotone(t)));
}

TEST_CASE("monotone pipeline contracts") {
    CHECK_THROWS_AS(build_monotone(fat_cantor_target(q(1, 4), 3), MonotoneConfig{3, 6, 12, false}), ContractViolation);
    CHECK_THROWS_AS(build_monotone(cantor_target(3), MonotoneConfig{3, 0, 12, false}), ContractViolation);
    CHECK_THROWS_AS(build_monotone(cantor_target(3), MonotoneConfig{4, 6, 12, false}), ContractViolation);
    const auto e = build_monotone(empty_target(3), MonotoneConfig{3, 4, 4, false});
    CHECK(all_pass(check_all_monotone(e)));
    CHECK(uniform_distance(e.f(), PiecewiseLinear::line({q(0), q(1)}, 0, q(1, 2))) <= q(1, 2));
}

TEST_CASE("paper-literal ramp breaks the endpoint identity by 2^-order (b-a)") {
    auto target = cantor_target(3);
    const auto t = build_monotone(target, MonotoneConfig{3, 6, 12, true});
    const auto reports = check_all_monotone(t);
    const auto failing = failing_ids(reports);
    CHECK(std::find(failing.begin(), failing.end(), "L4.4.endpoints") != failing.end());
    std::size_t gaps = 0;
    for (const auto& st : t.stages)
        for (const auto& r : st.ramps) {
            const Rational literal_end = ramp(r.h_start, r.slope, r.interval, r.v, r.order, RampCoefficient::paper_literal)
                                             .eval(r.interval.hi());
            const Rational h_end = r.h_start + r.slope * r.interval.length();
            CHECK(h_end - literal_end == pow2(-r.order) * r.interval.length());
            CHECK(r.f.eval(r.interval.hi()) == literal_end);
            ++gaps;
        }
    CHECK(gaps > 0);
    for (const auto& rep : reports)
        if (rep.check_id == "L4.4.endpoints" && !rep.pass)
            for (const auto& w : rep.witnesses) CHECK(w.rhs - w.lhs > 0);
}
