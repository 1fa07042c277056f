#pragma once

#include <chrono>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

namespace pqpolys {

struct UnknownIdentityError : std::domain_error {
    explicit UnknownIdentityError(const std::string& id)
        : std::domain_error("unknown identity: " + id) {}
};

struct VerifyRange {
    int nmax = 0;
    std::optional<int> kmax;
};

/// First failing parameter point with both sides rendered; polynomials use
/// the coefficient-list serialization, scalars their exact decimal form.
struct Counterexample {
    std::string params;
    std::string lhs;
    std::string rhs;
};

/// Outcome of one identity check over a parameter range. passed is true
/// exactly when counterexample is absent. note carries protocol annotations
/// (the printed-form evidence of the discrepancy checkers).
struct VerificationReport {
    std::string id;
    VerifyRange range;
    bool passed = true;
    std::optional<Counterexample> counterexample;
    std::string note;
    std::chrono::milliseconds elapsed{0};
};

/// Registry keys in deterministic (lexicographic) order.
std::vector<std::string> registry_keys();

/// Runs one registry checker. Absent nmax/kmax fall back to the entry's
/// default range (the desk-scale range each identity is normally checked
/// at). Checks short-circuit at the first counterexample.
VerificationReport verify(const std::string& id, std::optional<int> nmax = std::nullopt,
                          std::optional<int> kmax = std::nullopt);

/// Runs every registry entry, reports ordered by key. Explicit ranges are
/// applied uniformly and require nmax >= 2; absent ranges use per-entry
/// defaults. jobs > 1 fans checkers out across threads; ordering stays
/// deterministic.
std::vector<VerificationReport> verify_all(std::optional<int> nmax = std::nullopt,
                                           std::optional<int> kmax = std::nullopt,
                                           unsigned jobs = 1);

bool all_passed(const std::vector<VerificationReport>& reports);

/// {id, range:{nmax,kmax}, passed, counterexample:{params,lhs,rhs}|null,
///  elapsed_ms} plus "note" when the checker recorded one.
nlohmann::json report_to_json(const VerificationReport& rep);

}  // namespace pqpolys
