#ifndef LIPLAB_SERIALIZE_HPP
#define LIPLAB_SERIALIZE_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "liplab/harness.hpp"

namespace liplab {

using Json = nlohmann::json;

/// Bumped whenever the trace or report layout changes.
constexpr int kFormatVersion = 1;

Json rational_to_json(const Rational& r);
Rational rational_from_json(const Json& j);

Json to_json(const OpenSet& s);
OpenSet open_set_from_json(const Json& j);
Json to_json(const PiecewiseLinear& f);
PiecewiseLinear pwl_from_json(const Json& j);

Json to_json(const TargetGDelta& t);
TargetGDelta target_from_json(const Json& j);

/// Level file: {"name", "kind": "trim"|"measure_zero", "domain": [lo, hi]?,
/// "levels": [[[lo, hi], ...], ...]}. With a domain, every level is mapped
/// affinely onto [0, 1] first. The first level must come out as (0, 1).
TargetGDelta target_from_level_file(const Json& j);

/// {"header": {...}, "payload": {...}}. The header holds run metadata only;
/// both parts are deterministic functions of the trace.
Json to_json(const TrimTrace& t);
Json to_json(const MonotoneTrace& t);
/// "trim" or "monotone", read from the header.
std::string trace_pipeline(const Json& j);
TrimTrace trim_trace_from_json(const Json& j);
MonotoneTrace monotone_trace_from_json(const Json& j);

Json to_json(const std::vector<CheckReport>& reports, const std::string& pipeline);
std::vector<CheckReport> reports_from_json(const Json& j);

/// Breakpoints of f plus `count` equispaced points, sorted, no repeats.
std::vector<Rational> sample_abscissae(const PiecewiseLinear& f, std::size_t count);
/// CSV with header x_rational,x_decimal,f_rational,f_decimal. Decimal
/// columns are approximate (12 places).
void write_samples_csv(std::ostream& out, const PiecewiseLinear& f, std::size_t count);

/// Stable text form used for every file written: two-space indent, sorted
/// keys, trailing newline.
std::string dump(const Json& j);

}  // namespace liplab

#endif  // LIPLAB_SERIALIZE_HPP
