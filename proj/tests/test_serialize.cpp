#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "liplab/presets.hpp"
#include "liplab/run.hpp"
#include "support.hpp"

using namespace liplab;
using liplab::testing::Gen;
using liplab::testing::q;

namespace {

bool same_reports(const std::vector<CheckReport>& a, const std::vector<CheckReport>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t k = 0; k < a.size(); ++k) {
        const auto &x = a[k], &y = b[k];
        if (x.check_id != y.check_id || x.stage != y.stage || x.pass != y.pass || x.failures != y.failures ||
            x.witnesses.size() != y.witnesses.size())
            return false;
        for (std::size_t w = 0; w < x.witnesses.size(); ++w)
            if (x.witnesses[w].location != y.witnesses[w].location || x.witnesses[w].lhs != y.witnesses[w].lhs ||
                x.witnesses[w].rhs != y.witnesses[w].rhs)
                return false;
    }
    return true;
}

std::vector<std::string> split_line(const std::string& line) {
    std::vector<std::string> out;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) out.push_back(cell);
    return out;
}

RunConfig small(const std::string& pipeline, const std::string& preset) {
    RunConfig c;
    c.pipeline = pipeline;
    c.preset = preset;
    c.depth = 3;
    c.deep_points = 6;
    c.samples = 9;
    return c;
}

}  // namespace

TEST_CASE("value round trips") {
    Gen gen(8);
    for (int trial = 0; trial < 50; ++trial) {
        const auto r = gen.rational(q(-5), q(5), 1009);
        CHECK(rational_from_json(rational_to_json(r)) == r);
        const auto s = gen.open_set(q(0), q(1), 4);
        CHECK(open_set_from_json(to_json(s)) == s);
        const auto f = gen.pwl(q(0), q(1), 6);
        CHECK(uniform_distance(pwl_from_json(to_json(f)), f) == 0);
        CHECK(pwl_from_json(to_json(f)).size() == f.size());
    }
    CHECK(rational_to_json(q(2, 4)) == "1/2");
    CHECK_THROWS_AS(rational_from_json(Json(0.5)), Error);
    const auto t = cantor_target(3);
    const auto back = target_from_json(to_json(t));
    CHECK(back.name == t.name);
    CHECK(back.kind == t.kind);
    CHECK(back.levels == t.levels);
}

TEST_CASE("level files") {
    auto comp = [](const char* lo, const char* hi) { return Json::array({Json::array({lo, hi})}); };
    Json j = {{"name", "shifted"},
              {"kind", "measure_zero"},
              {"domain", Json::array({"2/1", "6/1"})},
              {"levels", Json::array({comp("2/1", "6/1"), comp("3/1", "4/1")})}};
    const auto t = target_from_level_file(j);
    CHECK(t.levels[0] == OpenSet::single(q(0), q(1)));
    CHECK(t.levels[1] == OpenSet::single(q(1, 4), q(1, 2)));
    j.erase("domain");
    CHECK_THROWS_AS(target_from_level_file(j), ContractViolation);
    CHECK_THROWS_AS(target_from_level_file(Json{{"kind", "odd"}, {"levels", Json::array()}}), Error);
}

TEST_CASE("trace round trip re-verifies identically") {
    for (const auto& pipeline : {"trim", "monotone"}) {
        CAPTURE(pipeline);
        const auto out = run_pipeline(small(pipeline, pipeline == std::string("trim") ? "fat_cantor:1/4,3" : "cantor:3"));
        CHECK(out.pass);
        const Json reparsed = Json::parse(dump(out.trace));
        const auto again = verify_trace(reparsed);
        CHECK(same_reports(again, reports_from_json(out.report)));
        CHECK(dump(to_json(again, pipeline)) == dump(out.report));
        CHECK(dump(pipeline == std::string("trim") ? to_json(trim_trace_from_json(reparsed))
                                                   : to_json(monotone_trace_from_json(reparsed))) == dump(out.trace));
        CHECK(trace_pipeline(reparsed) == pipeline);
    }
    Json wrong = run_pipeline(small("trim", "point:1/2")).trace;
    CHECK_THROWS_AS(monotone_trace_from_json(wrong), Error);
    wrong["header"]["format_version"] = 99;
    CHECK_THROWS_AS(trim_trace_from_json(wrong), Error);
}

TEST_CASE("runs are byte-identical") {
    const auto a = run_pipeline(small("monotone", "points:1/4,3/4"));
    const auto b = run_pipeline(small("monotone", "points:1/4,3/4"));
    CHECK(dump(a.trace) == dump(b.trace));
    CHECK(dump(a.report) == dump(b.report));
    CHECK(a.samples_csv == b.samples_csv);
    CHECK(dump(a.trace).find("time") == std::string::npos);
}

TEST_CASE("sample export") {
    const auto id = PiecewiseLinear::line({q(0), q(1)}, 0, 1);
    CHECK(sample_abscissae(id, 3) == std::vector<Rational>{q(0), q(1, 2), q(1)});
    CHECK_THROWS_AS(sample_abscissae(id, 1), ContractViolation);
    std::ostringstream out;
    write_samples_csv(out, id, 3);
    CHECK(out.str() ==
          "x_rational,x_decimal,f_rational,f_decimal\n"
          "0/1,0.000000000000,0/1,0.000000000000\n"
          "1/2,0.500000000000,1/2,0.500000000000\n"
          "1/1,1.000000000000,1/1,1.000000000000\n");

    const PiecewiseLinear f({{q(0), q(0)}, {q(1, 3), q(2, 7)}, {q(1), q(-1, 5)}});
    std::ostringstream csv;
    write_samples_csv(csv, f, 5);
    std::istringstream in(csv.str());
    std::string line;
    std::getline(in, line);
    std::size_t rows = 0;
    bool saw_breakpoint = false;
    while (std::getline(in, line)) {
        const auto cells = split_line(line);
        REQUIRE(cells.size() == 4);
        const Rational x = parse_rational(cells[0]);
        CHECK(parse_rational(cells[2]) == f.eval(x));
        saw_breakpoint = saw_breakpoint || x == q(1, 3);
        ++rows;
    }
    CHECK(saw_breakpoint);
    CHECK(rows == 6);
}

TEST_CASE("config handling") {
    RunConfig base;
    const auto c = apply_config_json(
        Json{{"pipeline", "monotone"}, {"preset", "cantor:4"}, {"depth", 3}, {"measure_zero_threshold", "1/2"}}, base);
    CHECK(c.pipeline == "monotone");
    CHECK(c.depth == 3);
    CHECK(c.measure_zero_threshold == q(1, 2));
    CHECK(c.truncation == base.truncation);
    CHECK_THROWS_AS(apply_config_json(Json{{"colour", "blue"}}, base), ConfigError);
    CHECK_THROWS_AS(apply_config_json(Json{{"depth", "four"}}, base), ConfigError);
    CHECK_THROWS_AS(apply_config_json(Json::array(), base), ConfigError);

    CHECK_THROWS_AS(resolve_target(small("monotone", "fat_cantor:1/4,4")), ConfigError);
    CHECK_THROWS_AS(resolve_target(small("sideways", "cantor:3")), ConfigError);
    auto shallow = small("trim", "cantor:3");
    shallow.depth = 1;
    CHECK_THROWS_AS(resolve_target(shallow), ConfigError);
    auto deep = small("trim", "cantor:3");
    deep.depth = 5;
    CHECK_THROWS_AS(resolve_target(deep), ConfigError);
    auto both = small("trim", "cantor:3");
    both.levels_file = "levels.json";
    CHECK_THROWS_AS(resolve_target(both), ConfigError);
    CHECK_THROWS_AS(resolve_target(small("trim", "cantor:99")), ConfigError);
    auto literal = small("trim", "cantor:3");
    literal.paper_literal_ramp = true;
    CHECK_THROWS_AS(resolve_target(literal), ConfigError);
    CHECK(resolve_target(small("trim", "cantor:3")).name == "cantor");

    const auto dir = std::filesystem::temp_directory_path() / "liplab_level_test";
    std::filesystem::create_directories(dir);
    {
        std::ofstream out(dir / "levels.json");
        auto comp = [](const char* lo, const char* hi) { return Json::array({Json::array({lo, hi})}); };
        out << dump(Json{{"kind", "measure_zero"},
                         {"levels", Json::array({comp("0/1", "1/1"), comp("1/4", "5/16"), comp("9/32", "19/64")})}});
    }
    RunConfig from_file = small("monotone", "");
    from_file.levels_file = (dir / "levels.json").string();
    CHECK(resolve_target(from_file).levels.size() == 3);
    CHECK(run_pipeline(from_file).pass);
    from_file.levels_file = (dir / "missing.json").string();
    CHECK_THROWS_AS(resolve_target(from_file), ConfigError);
}
