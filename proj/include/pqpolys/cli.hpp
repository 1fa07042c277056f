#pragma once

#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace pqpolys {

struct UsageError : std::runtime_error {
    explicit UsageError(const std::string& what) : std::runtime_error(what) {}
};

enum class OutputFormat { text, json, csv };
OutputFormat parse_format(const std::string& name);

/// Renders one of the four reference tables: 1 = P_n/Q_n, 2 = Y_n/Z_n,
/// 3 = factored Hankel expressions, 4 = W_n. Text rows are byte-stable;
/// json is a single object, csv carries a header row.
std::string render_table(int which, int nmax, OutputFormat format);

struct ComputeParams {
    std::optional<long> n;
    std::optional<long> k;
    std::optional<long> j;
    std::optional<std::string> family;
    std::optional<std::string> f;  // comma-separated coefficients, low to high
    std::optional<std::string> g;
};

/// One exact computation: what is one of q, p, qderiv, v, w, y, z, disc,
/// resultant, classify, nj. Polynomials print as the coefficient-list
/// serialization; integers as exact decimal strings.
std::string cmd_compute(const std::string& what, const ComputeParams& params,
                        OutputFormat format);

/// Runs the selected identity checkers ("all" or empty = whole registry)
/// and writes reports to out. Returns the process exit code: 0 when all
/// selected checks pass, 1 when any counterexample was found.
int cmd_verify(const std::vector<std::string>& ids, std::optional<int> nmax,
               std::optional<int> kmax, OutputFormat format, unsigned jobs, std::ostream& out);

}  // namespace pqpolys
