#ifndef LIPLAB_HARNESS_HPP
#define LIPLAB_HARNESS_HPP

#include <string>
#include <vector>

#include "liplab/pipelines.hpp"

namespace liplab {

struct Witness {
    std::string location;
    Rational lhs;
    Rational rhs;
};

/// Outcome of one inequality clause at one stage. A failing report always
/// carries at least one exact witness; at most kMaxWitnesses are kept.
struct CheckReport {
    static constexpr std::size_t kMaxWitnesses = 5;

    std::string check_id;
    int stage;
    bool pass = true;
    std::size_t failures = 0;
    std::vector<Witness> witnesses;
};

/// Clause ids checked for each pipeline, in report order.
const std::vector<std::string>& trim_check_ids();
const std::vector<std::string>& monotone_check_ids();

std::vector<CheckReport> check_all_trim(const TrimTrace& trace);
std::vector<CheckReport> check_all_monotone(const MonotoneTrace& trace);

bool all_pass(const std::vector<CheckReport>& reports);
std::vector<std::string> failing_ids(const std::vector<CheckReport>& reports);

/// max |f(x) - f(y)| / r over grid_count equispaced y in the clipped window.
/// Independent of m_f: only evaluates f.
Rational brute_force_mf_oracle(const PiecewiseLinear& f, const Rational& x, const Rational& r, int grid_count);

}  // namespace liplab

#endif  // LIPLAB_HARNESS_HPP
