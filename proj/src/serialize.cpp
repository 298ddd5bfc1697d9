#include "liplab/serialize.hpp"

#include <algorithm>
#include <ostream>

#include "liplab/presets.hpp"

namespace liplab {

namespace {

Json interval_to_json(const ClosedInterval& i) { return Json::array({rational_to_json(i.lo()), rational_to_json(i.hi())}); }

ClosedInterval interval_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 2) throw Error("expected an interval [lo, hi]");
    return {rational_from_json(j[0]), rational_from_json(j[1])};
}

Json rationals_to_json(const std::vector<Rational>& xs) {
    Json out = Json::array();
    for (const auto& x : xs) out.push_back(rational_to_json(x));
    return out;
}

std::vector<Rational> rationals_from_json(const Json& j) {
    std::vector<Rational> out;
    for (const auto& x : j) out.push_back(rational_from_json(x));
    return out;
}

Json intervals_to_json(const std::vector<ClosedInterval>& is) {
    Json out = Json::array();
    for (const auto& i : is) out.push_back(interval_to_json(i));
    return out;
}

std::vector<ClosedInterval> intervals_from_json(const Json& j) {
    std::vector<ClosedInterval> out;
    for (const auto& i : j) out.push_back(interval_from_json(i));
    return out;
}

const char* kind_name(TargetKind k) { return k == TargetKind::trim ? "trim" : "measure_zero"; }

TargetKind kind_from(const std::string& s) {
    if (s == "trim") return TargetKind::trim;
    if (s == "measure_zero") return TargetKind::measure_zero;
    throw Error("unknown target kind '" + s + "'");
}

Json certificate_to_json(const Certificate& c) {
    return {{"x", rational_to_json(c.x)},
            {"stage", c.stage},
            {"kind", c.kind == Certificate::Kind::big_lip_lower ? "big_lip_lower" : "lip_upper"},
            {"radius", rational_to_json(c.radius)},
            {"bound", rational_to_json(c.bound)},
            {"measured", rational_to_json(c.measured)}};
}

Certificate certificate_from_json(const Json& j) {
    const std::string kind = j.at("kind");
    if (kind != "big_lip_lower" && kind != "lip_upper") throw Error("unknown certificate kind '" + kind + "'");
    return {rational_from_json(j.at("x")),
            j.at("stage").get<int>(),
            kind == "big_lip_lower" ? Certificate::Kind::big_lip_lower : Certificate::Kind::lip_upper,
            rational_from_json(j.at("radius")),
            rational_from_json(j.at("bound")),
            rational_from_json(j.at("measured"))};
}

Json certificates_to_json(const std::vector<Certificate>& cs) {
    Json out = Json::array();
    for (const auto& c : cs) out.push_back(certificate_to_json(c));
    return out;
}

std::vector<Certificate> certificates_from_json(const Json& j) {
    std::vector<Certificate> out;
    for (const auto& c : j) out.push_back(certificate_from_json(c));
    return out;
}

Json header(const std::string& pipeline, const std::string& content) {
    return {{"tool", "liplab"}, {"format_version", kFormatVersion}, {"pipeline", pipeline}, {"content", content}};
}

const Json& payload_of(const Json& j, const std::string& pipeline) {
    if (!j.contains("header") || !j.contains("payload")) throw Error("document lacks header/payload");
    const auto& h = j.at("header");
    if (h.at("format_version").get<int>() != kFormatVersion) throw Error("unsupported format version");
    if (h.at("pipeline").get<std::string>() != pipeline)
        throw Error("expected a " + pipeline + " trace, got " + h.at("pipeline").get<std::string>());
    return j.at("payload");
}

}  // namespace

Json rational_to_json(const Rational& r) { return to_string(r); }

Rational rational_from_json(const Json& j) {
    if (!j.is_string()) throw Error("rationals are stored as \"num/den\" strings");
    return parse_rational(j.get<std::string>());
}

Json to_json(const OpenSet& s) {
    Json out = Json::array();
    for (const auto& c : s.components()) out.push_back(Json::array({rational_to_json(c.lo), rational_to_json(c.hi)}));
    return out;
}

OpenSet open_set_from_json(const Json& j) {
    if (!j.is_array()) throw Error("expected a list of components");
    std::vector<OpenInterval> comps;
    for (const auto& c : j) {
        if (!c.is_array() || c.size() != 2) throw Error("expected a component [lo, hi]");
        comps.push_back({rational_from_json(c[0]), rational_from_json(c[1])});
    }
    return OpenSet::from_unsorted(std::move(comps));
}

Json to_json(const PiecewiseLinear& f) {
    Json out = Json::array();
    for (const auto& p : f.breakpoints()) out.push_back(Json::array({rational_to_json(p.x), rational_to_json(p.y)}));
    return out;
}

PiecewiseLinear pwl_from_json(const Json& j) {
    std::vector<Breakpoint> pts;
    for (const auto& p : j) {
        if (!p.is_array() || p.size() != 2) throw Error("expected a breakpoint [x, y]");
        pts.push_back({rational_from_json(p[0]), rational_from_json(p[1])});
    }
    return PiecewiseLinear(std::move(pts));
}

Json to_json(const TargetGDelta& t) {
    Json levels = Json::array();
    for (const auto& l : t.levels) levels.push_back(to_json(l));
    return {{"name", t.name}, {"kind", kind_name(t.kind)}, {"levels", levels}};
}

TargetGDelta target_from_json(const Json& j) {
    TargetGDelta t{j.at("name").get<std::string>(), {}, kind_from(j.at("kind").get<std::string>())};
    for (const auto& l : j.at("levels")) t.levels.push_back(open_set_from_json(l));
    return t;
}

TargetGDelta target_from_level_file(const Json& j) {
    TargetGDelta t{j.value("name", std::string("levels")), {}, kind_from(j.at("kind").get<std::string>())};
    for (const auto& l : j.at("levels")) t.levels.push_back(open_set_from_json(l));
    if (j.contains("domain")) {
        const auto d = interval_from_json(j.at("domain"));
        for (auto& l : t.levels) l = normalize_to_unit(l, d.lo(), d.hi());
    }
    if (t.levels.empty() || !(t.levels.front() == OpenSet::single(0, 1)))
        throw ContractViolation("level file: the first level must be the whole domain");
    return t;
}

Json to_json(const TrimTrace& t) {
    Json stages = Json::array();
    for (const auto& st : t.stages) {
        Json zs = Json::array();
        for (const auto& z : st.z)
            zs.push_back({{"interval", interval_to_json(z.interval)},
                          {"order", z.order},
                          {"first_index", z.first_index},
                          {"parity", "even index at base"},
                          {"points", rationals_to_json(z.points)}});
        stages.push_back({{"n", st.n},
                          {"u", to_json(st.u)},
                          {"z", zs},
                          {"family", intervals_to_json(st.family)},
                          {"f", to_json(st.f)},
                          {"g", to_json(st.g)},
                          {"h", to_json(st.h)}});
    }
    Json boundary = Json::array();
    for (const auto& b : t.boundary)
        boundary.push_back({{"x", rational_to_json(b.x)},
                            {"side", b.side == Side::plus ? "plus" : "minus"},
                            {"bound", rational_to_json(b.bound)}});
    Json payload{{"target", to_json(t.target)},
                 {"config",
                  {{"depth", t.config.depth}, {"truncation", t.config.truncation}, {"deep_points", t.config.deep_points}}},
                 {"deep_points", rationals_to_json(t.deep_points)},
                 {"stages", stages},
                 {"certificates", certificates_to_json(t.certificates)},
                 {"boundary", boundary},
                 {"z_separation", rational_to_json(t.z_separation)},
                 {"notes",
                  {"family intervals are closed and finitely many, so their union is a strict subset of U_n",
                   "the target's points are represented by deep_points sampled from its finest level"}}};
    return {{"header", header("trim", "trace")}, {"payload", payload}};
}

Json to_json(const MonotoneTrace& t) {
    Json stages = Json::array();
    for (const auto& st : t.stages) {
        Json ramps = Json::array();
        for (const auto& r : st.ramps)
            ramps.push_back({{"interval", interval_to_json(r.interval)},
                             {"h_start", rational_to_json(r.h_start)},
                             {"slope", rational_to_json(r.slope)},
                             {"order", r.order},
                             {"v", to_json(r.v)},
                             {"f", to_json(r.f)}});
        stages.push_back({{"n", st.n},
                          {"v", to_json(st.v)},
                          {"u", to_json(st.u)},
                          {"f", to_json(st.f)},
                          {"g", to_json(st.g)},
                          {"ramps", ramps}});
    }
    Json payload{{"target", to_json(t.target)},
                 {"config",
                  {{"depth", t.config.depth},
                   {"annulus_depth", t.config.annulus_depth},
                   {"deep_points", t.config.deep_points},
                   {"paper_literal_ramp", t.config.paper_literal_ramp}}},
                 {"deep_points", rationals_to_json(t.deep_points)},
                 {"stages", stages},
                 {"certificates", certificates_to_json(t.certificates)}};
    return {{"header", header("monotone", "trace")}, {"payload", payload}};
}

std::string trace_pipeline(const Json& j) {
    if (!j.contains("header")) throw Error("document lacks a header");
    return j.at("header").at("pipeline").get<std::string>();
}

TrimTrace trim_trace_from_json(const Json& j) {
    const auto& p = payload_of(j, "trim");
    const auto& c = p.at("config");
    TrimTrace t{target_from_json(p.at("target")),
                TrimConfig{c.at("depth").get<int>(), c.at("truncation").get<int>(), c.at("deep_points").get<std::size_t>()},
                rationals_from_json(p.at("deep_points")),
                {},
                certificates_from_json(p.at("certificates")),
                {},
                rational_from_json(p.at("z_separation"))};
    for (const auto& s : p.at("stages")) {
        std::vector<NCloseSequence> zs;
        for (const auto& z : s.at("z"))
            zs.push_back({interval_from_json(z.at("interval")), z.at("order").get<int>(), z.at("first_index").get<int>(),
                          rationals_from_json(z.at("points"))});
        t.stages.push_back({s.at("n").get<int>(), open_set_from_json(s.at("u")), std::move(zs),
                            intervals_from_json(s.at("family")), pwl_from_json(s.at("f")), pwl_from_json(s.at("g")),
                            pwl_from_json(s.at("h"))});
    }
    for (const auto& b : p.at("boundary"))
        t.boundary.push_back({rational_from_json(b.at("x")), b.at("side") == "plus" ? Side::plus : Side::minus,
                              rational_from_json(b.at("bound"))});
    if (t.stages.empty()) throw Error("trace has no stages");
    return t;
}

MonotoneTrace monotone_trace_from_json(const Json& j) {
    const auto& p = payload_of(j, "monotone");
    const auto& c = p.at("config");
    MonotoneTrace t{target_from_json(p.at("target")),
                    MonotoneConfig{c.at("depth").get<int>(), c.at("annulus_depth").get<int>(),
                                   c.at("deep_points").get<std::size_t>(), c.at("paper_literal_ramp").get<bool>()},
                    rationals_from_json(p.at("deep_points")),
                    {},
                    certificates_from_json(p.at("certificates"))};
    for (const auto& s : p.at("stages")) {
        std::vector<RampRecord> ramps;
        for (const auto& r : s.at("ramps"))
            ramps.push_back({interval_from_json(r.at("interval")), rational_from_json(r.at("h_start")),
                             rational_from_json(r.at("slope")), r.at("order").get<int>(), open_set_from_json(r.at("v")),
                             pwl_from_json(r.at("f"))});
        t.stages.push_back({s.at("n").get<int>(), open_set_from_json(s.at("v")), open_set_from_json(s.at("u")),
                            pwl_from_json(s.at("f")), pwl_from_json(s.at("g")), std::move(ramps)});
    }
    if (t.stages.empty()) throw Error("trace has no stages");
    return t;
}

Json to_json(const std::vector<CheckReport>& reports, const std::string& pipeline) {
    Json list = Json::array();
    for (const auto& r : reports) {
        Json ws = Json::array();
        for (const auto& w : r.witnesses)
            ws.push_back({{"location", w.location}, {"lhs", rational_to_json(w.lhs)}, {"rhs", rational_to_json(w.rhs)}});
        list.push_back(
            {{"check_id", r.check_id}, {"stage", r.stage}, {"pass", r.pass}, {"failures", r.failures}, {"witnesses", ws}});
    }
    Json failing = failing_ids(reports);
    return {{"header", header(pipeline, "report")},
            {"payload", {{"pass", all_pass(reports)}, {"failing", failing}, {"reports", list}}}};
}

std::vector<CheckReport> reports_from_json(const Json& j) {
    std::vector<CheckReport> out;
    for (const auto& r : j.at("payload").at("reports")) {
        CheckReport c{r.at("check_id").get<std::string>(), r.at("stage").get<int>(), r.at("pass").get<bool>(),
                      r.at("failures").get<std::size_t>(), {}};
        for (const auto& w : r.at("witnesses"))
            c.witnesses.push_back(
                {w.at("location").get<std::string>(), rational_from_json(w.at("lhs")), rational_from_json(w.at("rhs"))});
        out.push_back(std::move(c));
    }
    return out;
}

std::vector<Rational> sample_abscissae(const PiecewiseLinear& f, std::size_t count) {
    if (count < 2) throw ContractViolation("sample count must be >= 2");
    const auto dom = f.domain();
    std::vector<Rational> xs;
    for (const auto& p : f.breakpoints()) xs.push_back(p.x);
    for (std::size_t k = 0; k < count; ++k)
        xs.push_back(dom.lo() + dom.length() * make_rational(static_cast<long>(k), static_cast<long>(count - 1)));
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    return xs;
}

void write_samples_csv(std::ostream& out, const PiecewiseLinear& f, std::size_t count) {
    out << "x_rational,x_decimal,f_rational,f_decimal\n";
    for (const auto& x : sample_abscissae(f, count)) {
        const Rational y = f.eval(x);
        out << to_string(x) << ',' << to_decimal(x) << ',' << to_string(y) << ',' << to_decimal(y) << '\n';
    }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace liplab
