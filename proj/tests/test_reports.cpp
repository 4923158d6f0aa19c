#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "braidlab/acceptance.hpp"

using namespace braidlab;

TEST_CASE("reports serialize with a stable schema") {
    Report rep;
    rep.command = "demo";
    rep.inputs["dim"] = "(2|0)";
    rep.set(Report::Outcome::pass);
    rep.detail("residual", "0");
    auto j = rep.to_json();
    CHECK(j.at("command") == "demo");
    CHECK(j.at("outcome") == "pass");
    CHECK(j.at("details").at(0).at("name") == "residual");
    CHECK(j.contains("timing_ms"));
    CHECK(!rep.to_json(false).contains("timing_ms"));
}

TEST_CASE("identical inputs produce byte-identical reports modulo timing") {
    declare_standard_symbols();
    Report a = check_skew_pair({2, 0});
    Report b = check_skew_pair({2, 0});
    CHECK(a.to_json(false).dump() == b.to_json(false).dump());
    Report c = check_braiding_axioms({1, 1});
    Report d = check_braiding_axioms({1, 1});
    CHECK(c.to_json(false).dump() == d.to_json(false).dump());
}

TEST_CASE("supersymmetric dimension helper agrees with small hand counts") {
    // 2x2 even: plain polynomial algebra in four variables.
    CHECK(supersymmetric_dims({2, 0}, 3) == std::vector<long>{1, 4, 10, 20});
    // 1|1: two even and two odd generators.
    CHECK(supersymmetric_dims({1, 1}, 3) == std::vector<long>{1, 4, 8, 12});
}
