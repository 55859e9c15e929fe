#include "doctest.h"

#include <algorithm>
#include <stdexcept>

#include "hocauchy/verifier.hpp"

using namespace hocauchy;

namespace {

Grid small(int n, int k, int alpha = 1) {
    Grid g;
    g.n_max = n;
    g.k_max = k;
    g.alpha_max = alpha;
    return g;
}

std::string param(const Counterexample& c, const std::string& key) {
    for (const auto& [k, v] : c.params)
        if (k == key) return v;
    return {};
}

}  // namespace

TEST_CASE("check ids round trip") {
    CHECK(all_check_ids().size() == 22);
    for (CheckId id : all_check_ids()) CHECK(parse_check_id(to_string(id)) == id);
    CHECK_THROWS_AS(parse_check_id("T99"), std::invalid_argument);
    CHECK_THROWS_AS(parse_check_id("t1"), std::invalid_argument);
}

TEST_CASE("T1 holds on a small grid") {
    const auto r = verify(CheckId::T1, small(10, 4));
    CHECK(r.status == CheckStatus::pass);
    CHECK(r.cases_checked == 44);
    CHECK(r.counterexamples.empty());
    CHECK_FALSE(r.corrected_reading);
}

TEST_CASE("first-kind reciprocity at n = 1, k = 1") {
    Grid g = small(1, 1);
    const auto r = verify(CheckId::T9, g);
    CHECK(r.status == CheckStatus::pass);
    CHECK(r.cases_checked == 2);
    CHECK(verify(CheckId::T10, g).status == CheckStatus::pass);
}

TEST_CASE("empty grid is vacuous") {
    const Grid empty = small(-1, 0, 0);
    for (CheckId id : all_check_ids()) {
        const auto r = verify(id, empty);
        CAPTURE(to_string(id));
        CHECK(r.status == CheckStatus::pass);
        CHECK(r.vacuous);
        CHECK(r.cases_checked == 0);
    }
}

TEST_CASE("n_max = 0 passes everywhere") {
    SuiteConfig cfg;
    cfg.grid = small(0, 1);
    for (const auto& r : run_suite(cfg)) {
        CAPTURE(to_string(r.id));
        CHECK(r.status != CheckStatus::fail);
    }
}

TEST_CASE("selection yields one report") {
    SuiteConfig cfg;
    cfg.grid = small(5, 2);
    cfg.checks = {CheckId::T1};
    const auto reports = run_suite(cfg);
    REQUIRE(reports.size() == 1);
    CHECK(reports[0].id == CheckId::T1);
    CHECK_FALSE(any_failed(reports));
}

TEST_CASE("basis index in the connection-coefficient expansion") {
    const auto r = verify(CheckId::T13, small(4, 2, 2));
    CHECK(r.status == CheckStatus::pass_with_correction);
    REQUIRE(r.corrected_reading);
    CHECK(*r.corrected_reading == "t13-basis-index-m");
    REQUIRE_FALSE(r.counterexamples.empty());
    // the B_n form agrees for n <= 1
    CHECK(param(r.counterexamples.front(), "n") == "2");
    CHECK(r.corrected_counterexamples.empty());
}

TEST_CASE("first-kind explicit expansion needs the sign fix") {
    const auto r = verify(CheckId::T12, small(3, 2));
    CHECK(r.status == CheckStatus::pass_with_correction);
    REQUIRE_FALSE(r.counterexamples.empty());
    const auto& first = r.counterexamples.front();
    CHECK(param(first, "n") == "0");
    CHECK(param(first, "k") == "1");
    CHECK(first.lhs == "1");
    CHECK(first.rhs == "-1");
    // even k agrees with the printed sign
    for (const auto& c : r.counterexamples) CHECK(param(c, "k") == "1");
}

TEST_CASE("reported counterexamples reproduce standalone") {
    const auto full = verify(CheckId::EQ59_61, small(4, 3));
    REQUIRE_FALSE(full.counterexamples.empty());
    for (const auto& c : full.counterexamples) {
        const auto again = verify(CheckId::EQ59_61, small(std::stoi(param(c, "n")), std::stoi(param(c, "k"))));
        CHECK(again.status == CheckStatus::pass_with_correction);
        const bool found = std::any_of(again.counterexamples.begin(), again.counterexamples.end(), [&](const Counterexample& d) {
            return d.relation == c.relation && d.params == c.params && d.lhs == c.lhs && d.rhs == c.rhs;
        });
        CHECK(found);
    }
}

TEST_CASE("reports are deterministic, serial or parallel") {
    SuiteConfig cfg;
    cfg.grid = small(5, 2, 2);
    const std::string a = reports_to_json(run_suite(cfg));
    const std::string b = reports_to_json(run_suite(cfg));
    cfg.parallel = true;
    const std::string c = reports_to_json(run_suite(cfg));
    CHECK(a == b);
    CHECK(a == c);
}

TEST_CASE("text and csv renderings") {
    SuiteConfig cfg;
    cfg.grid = small(2, 1);
    cfg.checks = {CheckId::T1, CheckId::T12};
    const auto reports = run_suite(cfg);
    const std::string csv = reports_to_csv(reports);
    CHECK(csv.find("T1,pass,3,false,,0\n") != std::string::npos);
    CHECK(csv.find("T12,pass_with_correction,") != std::string::npos);
    const std::string text = reports_to_text(reports);
    CHECK(text.find("printed form") != std::string::npos);
}
