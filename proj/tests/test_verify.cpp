#include <set>

#include "doctest.h"
#include "pqpolys/verify.hpp"

using namespace pqpolys;

TEST_CASE("registry covers every numbered claim") {
    const auto keys = registry_keys();
    CHECK(keys.size() == 34);
    CHECK(std::is_sorted(keys.begin(), keys.end()));
    const std::set<std::string> expected = {"bezout-chain", "bezout-oracle", "cheb-product",
                                            "cn-identity", "cor32", "defining", "deriv-chain",
                                            "disc-closed", "disc-pq-equal", "eisenstein",
                                            "factor-3n", "gf-q", "gf-v", "gould", "hankel-bridge",
                                            "lattice-paths", "ode", "pde-bridge", "pell-n1",
                                            "recurrence-0", "recurrence-k",
                                            "resultant-consecutive", "resultant-delta",
                                            "resultant-pq", "special-values", "square-classify",
                                            "symmetry", "thue-family", "v-closed", "v-unimodal",
                                            "v-values", "w-coeffs", "yz-closed-vs-pell",
                                            "yz-recurrence"};
    CHECK(std::set<std::string>(keys.begin(), keys.end()) == expected);
}

TEST_CASE("single checkers run and pass") {
    CHECK(verify("defining", 10).passed);
    CHECK(verify("ode", 50).passed);
    CHECK(verify("hankel-bridge", 7).passed);
    CHECK_THROWS_AS(verify("nosuch"), UnknownIdentityError);
}

TEST_CASE("resultant-pq discrepancy protocol") {
    const VerificationReport rep = verify("resultant-pq", 6);
    CHECK(rep.passed);
    CHECK(rep.note.find("fails at n=1") != std::string::npos);
    CHECK(rep.note.find("8") != std::string::npos);
    CHECK(rep.note.find("4") != std::string::npos);
    CHECK(rep.note.find("2n+1") != std::string::npos);
}

TEST_CASE("pde-bridge discrepancy protocol") {
    const VerificationReport rep = verify("pde-bridge", 8);
    CHECK(rep.passed);
    CHECK(rep.note.find("t^1") != std::string::npos);
}

TEST_CASE("verify_all at a minimal range") {
    const auto reports = verify_all(2, 0);
    CHECK(reports.size() == 34);
    for (const auto& r : reports) {
        CAPTURE(r.id);
        CHECK(r.passed);
    }
    CHECK(all_passed(reports));
    CHECK_THROWS_AS(verify_all(1, 0), std::domain_error);
}

TEST_CASE("reports are deterministic and order-stable across jobs") {
    const auto a = verify_all(3, 1, 1);
    const auto b = verify_all(3, 1, 4);
    REQUIRE(a.size() == b.size());
    for (size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].id == b[i].id);
        CHECK(a[i].passed == b[i].passed);
        CHECK(a[i].note == b[i].note);
        CHECK(a[i].range.nmax == b[i].range.nmax);
        CHECK(a[i].counterexample.has_value() == b[i].counterexample.has_value());
    }
}

TEST_CASE("report JSON schema") {
    const nlohmann::json j = report_to_json(verify("defining", 4));
    CHECK(j.at("id") == "defining");
    CHECK(j.at("range").at("nmax") == 4);
    CHECK(j.at("range").at("kmax").is_null());
    CHECK(j.at("passed") == true);
    CHECK(j.at("counterexample").is_null());
    CHECK(j.at("elapsed_ms").is_number_integer());

    const nlohmann::json k = report_to_json(verify("recurrence-k", 4, 2));
    CHECK(k.at("range").at("kmax") == 2);
}
