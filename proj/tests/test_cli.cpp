#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "skw/suites.hpp"

using namespace skw;

TEST_CASE("instance spec parses and round-trips bit-exactly") {
    std::string text = R"({"ring":{"kind":"group_algebra","p":3,"p_precision":1,)"
                       R"("group":"cyclic:9"},"sigma":{"h":"h^4"},"delta":"sigma_minus_id",)"
                       R"("t_precision":3,"seed":1})";
    InstanceSpec spec = parse_instance_spec(text);
    CHECK(spec.built.ring->rank == 9);
    CHECK(spec.built.skew->sigma_order == 3);
    CHECK(spec.built.t_prec == 3);
    CHECK(spec.seed == 1);
    InstanceSpec again = parse_instance_spec(spec.json_text);
    CHECK(again.json_text == spec.json_text);
}

TEST_CASE("element expressions") {
    std::string text = R"({"ring":{"kind":"truncated_poly","p":3,"p_precision":1,"N":9},)"
                       R"("sigma":{"X":"2*X"},"delta":{"X":"X^3"},"t_precision":8})";
    InstanceSpec spec = parse_instance_spec(text);
    CHECK(spec.built.skew->sigma_order == 2);
    CHECK(spec.built.skew->commuting);
    // The built instance is exactly PX.
    Instance px = builtin_instance("PX");
    CHECK(spec.built.skew->sigma == px.skew->sigma);
    CHECK(spec.built.skew->delta == px.skew->delta);
}

TEST_CASE("invalid specs are rejected with validation errors") {
    CHECK_THROWS_AS(parse_instance_spec(R"({"ring":{"kind":"modular","p":4}})"), ValidationError);
    // With sigma(X) = 2X the Leibniz extension gives delta(X^9) = X^8 != 0.
    CHECK_THROWS_AS(
        parse_instance_spec(R"({"ring":{"kind":"truncated_poly","p":3,"p_precision":1,"N":9},)"
                            R"("sigma":{"X":"2*X"},"delta":{"X":"1"}})"),
        ValidationError);
    CHECK_THROWS_AS(parse_instance_spec(R"({"ring":{"kind":"group_algebra","p":3,"group":"dihedral:6"}})"),
                    ValidationError);
}

TEST_CASE("builtin overrides: PX rejects u outside F_p minus {0,1}") {
    InstanceOverrides ov;
    ov.u = 1;
    CHECK_THROWS_AS(builtin_instance("PX", ov), ValidationError);
    ov.u = 0;
    CHECK_THROWS_AS(builtin_instance("PX", ov), ValidationError);
}

TEST_CASE("iwasawa_instance conjugation exponent validation") {
    CHECK_NOTHROW(iwasawa_instance(3, 2, 1, 4));
    CHECK_NOTHROW(iwasawa_instance(3, 2, 1, 7)); // 7^3 = 343 = 1 mod 9
    CHECK_THROWS_AS(iwasawa_instance(3, 2, 1, 2), ValidationError);
    CHECK_THROWS_AS(iwasawa_instance(2, 2, 1, 3), ValidationError);
}

TEST_CASE("reports are deterministic for identical (spec, seed)") {
    Instance iwa = builtin_instance("IWA");
    Report a = run_suite("conversions", iwa, 42);
    Report b = run_suite("conversions", iwa, 42);
    CHECK(a.to_json() == b.to_json());
    Report c = run_suite("conversions", iwa, 43);
    CHECK(a.to_json() != c.to_json());
    CHECK(a.exit_code() == 0);
}

TEST_CASE("exit code classification") {
    Report rep;
    rep.checks.push_back({"x", "pass", "", 0, 0.0});
    CHECK(rep.exit_code() == 0);
    rep.checks.push_back({"y", "fail", "", 0, 0.0});
    CHECK(rep.exit_code() == 2);
    rep.checks.push_back({"z", "error", "", 0, 0.0});
    CHECK(rep.exit_code() == 1);
}

TEST_CASE("unknown suite and instance names are rejected") {
    Instance triv = builtin_instance("TRIV");
    CHECK_THROWS_AS(run_suite("bogus", triv, 1), ValidationError);
    CHECK_THROWS_AS(builtin_instance("NOPE"), ValidationError);
}
