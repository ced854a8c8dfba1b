#include "verify.hpp"

#include <doctest.h>

#include <stdexcept>

using namespace fdirac::verify;

TEST_CASE("suite registry") {
    const auto& names = suite_names();
    REQUIRE(names.size() == 10);
    CHECK(names.front() == "iwasawa");
    CHECK(names.back() == "lagrangian");
    CHECK_THROWS_AS(run_suite("no_such_suite", Config{}), std::invalid_argument);
}

TEST_CASE("suites are deterministic for a fixed seed") {
    const Config cfg;
    const auto first = run_suite("pairing", cfg);
    const auto second = run_suite("pairing", cfg);
    REQUIRE(first.size() == second.size());
    for (std::size_t i = 0; i < first.size(); ++i) {
        CHECK(first[i].check == second[i].check);
        CHECK(first[i].residual == second[i].residual);
        CHECK(first[i].pass);
    }
}

TEST_CASE("runtime checks only with timing") {
    Config cfg;
    for (const auto& r : run_suite("iwasawa", cfg)) CHECK(r.check != "runtime_s");
    cfg.timing = true;
    bool found = false;
    for (const auto& r : run_suite("iwasawa", cfg)) found = found || r.check == "runtime_s";
    CHECK(found);
}

TEST_CASE("tolerance overrides") {
    Config cfg;
    cfg.tolerances["iwasawa.reconstruction"] = 1e-300;
    for (const auto& r : run_suite("iwasawa", cfg)) {
        if (r.check == "reconstruction") {
            CHECK(r.tolerance == 1e-300);
            CHECK_FALSE(r.pass);
        } else {
            CHECK(r.pass);
        }
    }
}

TEST_CASE("injected non-character level fails involutivity") {
    Config cfg;
    cfg.inject_noncharacter = true;
    bool failed = false;
    for (const auto& r : run_suite("involutivity", cfg)) {
        if (r.check == "invariant_pairs") failed = !r.pass;
    }
    CHECK(failed);
}
