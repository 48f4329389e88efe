#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "hagge4/errors.hpp"
#include "hagge4/verify.hpp"

#include "test_support.hpp"

using namespace hagge;
using testsup::rat;

namespace {

const std::vector<std::string> kExpectedIds = {
    "S1.i",      "S1.ii",     "S1.iii",     "S1.iv",      "S1.v",
    "S1.vi",     "S1.vii",    "S1.viii",    "S1.ix",      "S1.x",
    "T1",        "T1.reflO",  "T2.A",       "T2.B",       "T2.C",
    "T2.D",      "H.fund.1",  "H.fund.2",   "H.fund.3",   "H.fund.4",
    "H.prime.1", "H.prime.2", "H.prime.3",  "H.prime.4",  "H.collin.1",
    "H.collin.2", "H.collin.3", "H.collin.4", "H.eq39.quad", "H.eq39.x",
    "H.eq39.y",  "H.eq39.const", "ISO.par.1", "ISO.par.2", "ISO.par.3",
    "ISO.par.4", "E.313",     "E.316",      "E.317",      "CONC"};

} // namespace

TEST_CASE("catalogue ids are fixed") {
    const auto& ids = catalogue_ids();
    REQUIRE(ids.size() == 40);
    CHECK(ids == kExpectedIds);
}

TEST_CASE("the worked example passes the whole catalogue") {
    const VerificationReport report = run_all(testsup::example_config());

    CHECK(report.pass);
    CHECK(report.a == rat("2"));
    CHECK(report.d == rat("1/3"));
    CHECK(report.p == rat("1"));
    REQUIRE(report.checks.size() == 40);

    for (size_t i = 0; i < report.checks.size(); ++i) {
        const CheckResult& chk = report.checks[i];
        CHECK(chk.id == kExpectedIds[i]);
        CHECK(chk.passing());
        if (chk.id == "H.eq39.const")
            CHECK(chk.status == CheckStatus::DocumentedDiscrepancy);
        else
            CHECK(chk.status == CheckStatus::Pass);
    }
}

TEST_CASE("the catalogued discrepancy carries both constants") {
    const VerificationReport report = run_all(testsup::example_config());
    const auto it = std::find_if(report.checks.begin(), report.checks.end(),
                                 [](const CheckResult& c) { return c.id == "H.eq39.const"; });
    REQUIRE(it != report.checks.end());

    REQUIRE(it->witness.size() == 2);
    CHECK(it->witness[0].first == "closed_form_const");
    CHECK(std::get<Rational>(it->witness[0].second) == rat("-3"));
    CHECK(it->witness[1].first == "constructed_const");
    CHECK(std::get<Rational>(it->witness[1].second) == rat("28"));
    CHECK(it->passing());
}

TEST_CASE("status names") {
    CHECK(std::string(status_name(CheckStatus::Pass)) == "pass");
    CHECK(std::string(status_name(CheckStatus::Fail)) == "fail");
    CHECK(std::string(status_name(CheckStatus::DocumentedDiscrepancy))
          == "documented-discrepancy");
}

TEST_CASE("json report is byte-stable with a fixed shape") {
    const QuadConfig cfg = testsup::example_config();
    const std::string json1 = to_json(run_all(cfg));
    const std::string json2 = to_json(run_all(cfg));
    CHECK(json1 == json2);

    const std::string prefix =
        R"({"params":{"a":"2","b":"3","c":"1/2","d":"1/3","p":"1"},"checks":[{"id":"S1.i")";
    CHECK(json1.substr(0, prefix.size()) == prefix);

    const std::string tail = R"("pass":true})";
    CHECK(json1.substr(json1.size() - tail.size()) == tail);

    CHECK(json1.find(R"("id":"H.eq39.const","pass":true,"status":"documented-discrepancy")")
          != std::string::npos);
    CHECK(json1.find(R"("closed_form_const":"-3")") != std::string::npos);
    CHECK(json1.find(R"("constructed_const":"28")") != std::string::npos);
    CHECK(json1.find('\n') == std::string::npos);

    // Points serialize as {"x": ..., "y": ...} objects.
    CHECK(json1.find(R"("N":{"x":"0","y":"0"})") != std::string::npos);
}

TEST_CASE("text report summarizes outcome counts") {
    const std::string text = to_text(run_all(testsup::example_config()));
    CHECK(text.find("[PASS]") != std::string::npos);
    CHECK(text.find("[DISC]") != std::string::npos);
    CHECK(text.find("[FAIL]") == std::string::npos);
    CHECK(text.find("result: PASS (40 checks: 39 pass, 0 fail, 1 documented discrepancy)")
          != std::string::npos);
    // Witness values appear for the discrepancy entry.
    CHECK(text.find("closed_form_const") != std::string::npos);
}

TEST_CASE("a second configuration passes everything") {
    const QuadConfig cfg = QuadConfig::make(rat("1"), rat("-1"), rat("2"), rat("5"));
    const VerificationReport report = run_all(cfg);
    CHECK(report.pass);
    CHECK(report.d == rat("-1/2"));
    REQUIRE(report.checks.size() == 40);
    for (const CheckResult& chk : report.checks)
        CHECK(chk.passing());
}

TEST_CASE("sampled configurations are deterministic and valid") {
    const auto run1 = sample_configs(7, 20);
    const auto run2 = sample_configs(7, 20);
    REQUIRE(run1.size() == 20);
    REQUIRE(run2.size() == 20);
    for (size_t i = 0; i < run1.size(); ++i) {
        CHECK(run1[i].a().t() == run2[i].a().t());
        CHECK(run1[i].b().t() == run2[i].b().t());
        CHECK(run1[i].c().t() == run2[i].c().t());
        CHECK(run1[i].p().t() == run2[i].p().t());
    }

    bool some_difference = false;
    const auto other = sample_configs(8, 20);
    for (size_t i = 0; i < run1.size(); ++i) {
        if (run1[i].a().t() != other[i].a().t() || run1[i].p().t() != other[i].p().t())
            some_difference = true;
    }
    CHECK(some_difference);

    for (const QuadConfig& cfg : run1) {
        const Rational prod =
            cfg.a().t() * cfg.b().t() * cfg.c().t() * cfg.d().t();
        CHECK(prod == Rational(1));
        std::set<std::string> params;
        for (int k = 1; k <= 4; ++k) {
            params.insert(cfg.param(k).t().str());
            CHECK(cfg.p().t() != cfg.param(k).t());
            CHECK(cfg.p().t() != -cfg.param(k).t());
            // Drawn parameters have |num|, den <= max_mag (canonicalization
            // only shrinks them); d is derived and unbounded.
            if (k <= 3) {
                CHECK(hagge::abs(cfg.param(k).t()).num() <= 9);
                CHECK(cfg.param(k).t().den() <= 9);
            }
        }
        CHECK(params.size() == 4);
    }

    CHECK_THROWS_WITH_AS(sample_configs(1, 0), "InvalidParameter: count must be at least 1",
                         InvalidParameter);
    CHECK_THROWS_WITH_AS(sample_configs(1, 5, 1),
                         "InvalidParameter: max_mag must be at least 2", InvalidParameter);
}

TEST_CASE("every sampled configuration passes the catalogue") {
    for (const QuadConfig& cfg : sample_configs(739, 15)) {
        const VerificationReport report = run_all(cfg);
        CHECK(report.pass);
        for (const CheckResult& chk : report.checks) {
            if (chk.id == "H.eq39.const")
                continue; // pass or documented discrepancy, both fine
            CHECK(chk.status == CheckStatus::Pass);
        }
    }
}
