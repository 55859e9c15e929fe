#ifndef HOCAUCHY_VERIFIER_HPP
#define HOCAUCHY_VERIFIER_HPP

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hocauchy/rational.hpp"

namespace hocauchy {

/// One executable identity check per theorem, lemma, or displayed equation.
enum class CheckId {
    T1, T2, T3, T4, T5, T6, T7, T8, T9, T10, T12, T13, L11,
    EQ6, EQ7, EQ19, EQ28, EQ52, EQ53, EQ58, EQ59_61, POLYC_ORACLE,
};

/// Every check, in the fixed order used by run_suite.
const std::vector<CheckId>& all_check_ids();
std::string_view to_string(CheckId id);
/// Throws std::invalid_argument for unknown names.
CheckId parse_check_id(std::string_view name);

/// Parameter ranges for a sweep. n runs over 0..n_max, k over 1..k_max,
/// alpha over 1..alpha_max. x_samples feed the few point-sampled checks.
struct Grid {
    int n_max = 15;
    int k_max = 4;
    int alpha_max = 3;
    std::vector<Rational> x_samples{Rational(0), Rational(1), Rational(-1), Rational(1, 2), Rational(-3, 7)};
};

enum class CheckStatus { pass, fail, pass_with_correction };
std::string_view to_string(CheckStatus s);

struct Counterexample {
    std::string relation;
    std::vector<std::pair<std::string, std::string>> params;
    std::string lhs;
    std::string rhs;
};

/// Alternative readings of misprinted statements. Only tried after the
/// printed form fails.
struct CorrectedReading {
    std::string tag;
    std::string description;
    bool preregistered;
};
const std::vector<CorrectedReading>& corrected_readings();

struct TheoremReport {
    CheckId id = CheckId::T1;
    Grid grid;
    CheckStatus status = CheckStatus::pass;
    long cases_checked = 0;
    bool vacuous = false;
    /// Failures of the printed form, smallest parameter tuple first.
    std::vector<Counterexample> counterexamples;
    std::optional<std::string> corrected_reading;
    /// Failures that remain under the corrected reading.
    std::vector<Counterexample> corrected_counterexamples;
    std::vector<std::string> notes;
};

TheoremReport verify(CheckId id, const Grid& grid);

struct SuiteConfig {
    Grid grid;
    /// Empty selects every check.
    std::vector<CheckId> checks;
    bool parallel = false;
};

/// Runs the selected checks; report order follows all_check_ids()
/// regardless of completion order.
std::vector<TheoremReport> run_suite(const SuiteConfig& config);
bool any_failed(const std::vector<TheoremReport>& reports);

std::string reports_to_json(const std::vector<TheoremReport>& reports, int indent = 2);
std::string reports_to_text(const std::vector<TheoremReport>& reports);
std::string reports_to_csv(const std::vector<TheoremReport>& reports);

}  // namespace hocauchy

#endif  // HOCAUCHY_VERIFIER_HPP
