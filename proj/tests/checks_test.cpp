#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "braids/checks.hpp"
#include "braids/words.hpp"

#include <set>

using namespace braids;

TEST_CASE("glob matching") {
    CHECK(glob_match("*", "anything"));
    CHECK(glob_match("witness.*", "witness.brunnian"));
    CHECK_FALSE(glob_match("witness.*", "center.central"));
    CHECK(glob_match("*.relators", "presentation.pn.relators"));
    CHECK(glob_match("os.r1.?embers", "os.r1.members"));
    CHECK_FALSE(glob_match("os", "os.dims"));
}

TEST_CASE("registry is well formed") {
    std::set<std::string> ids;
    for (const auto& def : check_registry()) {
        CHECK_FALSE(def.id.empty());
        CHECK_FALSE(def.citation.empty());
        CHECK(ids.insert(def.id).second);  // unique ids
        CHECK(static_cast<bool>(def.run));
    }
    CHECK(check_registry().size() >= 30);
}

TEST_CASE("unknown filters are an error") {
    CheckParams params;
    CHECK_THROWS_AS(run_checks("nonexistent", params), Error);
}

TEST_CASE("filtered runs stay in registry order and pass") {
    CheckParams params;
    params.n_max = 4;
    const auto results = run_checks("witness.*", params);
    REQUIRE(results.size() == 4);
    CHECK(results[0].id == "witness.in-kernel");
    CHECK(results[1].id == "witness.abelianization");
    CHECK(results[2].id == "witness.nontrivial");
    CHECK(results[3].id == "witness.brunnian");
    for (const auto& r : results) CHECK(r.status == CheckStatus::Pass);
}

TEST_CASE("skips below the minimum strand count") {
    CheckParams params;
    params.n_max = 3;
    const auto results = run_checks("compose.transvections", params);
    REQUIRE(results.size() == 1);
    CHECK(results[0].status == CheckStatus::Skip);
}

TEST_CASE("deterministic results for a fixed seed") {
    CheckParams params;
    params.n_max = 4;
    params.seed = 99;
    const auto a = run_checks("os.r1.members", params);
    const auto b = run_checks("os.r1.members", params);
    REQUIRE(a.size() == 1);
    CHECK(a[0].status == b[0].status);
    CHECK(a[0].detail == b[0].detail);
}
