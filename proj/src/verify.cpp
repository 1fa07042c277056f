#include "pqpolys/verify.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <functional>
#include <sstream>
#include <thread>

#include "pqpolys/families.hpp"
#include "pqpolys/numthy.hpp"
#include "pqpolys/polycore.hpp"
#include "pqpolys/series.hpp"

namespace pqpolys {

namespace {

std::string to_text(const Polynomial& f) { return nlohmann::json(f.coeff_strings()).dump(); }
std::string to_text(const Rational& r) { return r.str(); }
std::string to_text(const BigInt& z) { return z.get_str(); }
std::string to_text(bool b) { return b ? "true" : "false"; }
std::string to_text(const std::pair<Polynomial, Polynomial>& p) {
    return to_text(p.first) + " , " + to_text(p.second);
}

template <class... A>
std::string param_str(A&&... a) {
    std::ostringstream os;
    (os << ... << a);
    return os.str();
}

struct Args {
    int nmax;
    std::optional<int> kmax;
    VerificationReport& rep;

    bool ok() const { return rep.passed; }

    bool fail(std::string params, std::string lhs, std::string rhs) {
        if (rep.passed) {
            rep.passed = false;
            rep.counterexample = Counterexample{std::move(params), std::move(lhs), std::move(rhs)};
        }
        return false;
    }

    template <class T>
    bool eq(const T& lhs, const T& rhs, const std::string& params) {
        if (lhs == rhs) return true;
        return fail(params, to_text(lhs), to_text(rhs));
    }

    bool require(bool cond, const std::string& params, const std::string& claim) {
        if (cond) return true;
        return fail(params, claim, "violated");
    }

    /// Effective k cap: the entry default when the caller gave none.
    int k_cap(int fallback) const { return kmax.value_or(fallback); }
};

const Polynomial kOne(1);
const Polynomial kX = Polynomial::x();
const Polynomial kXPlus1 = Polynomial::x() + Polynomial(1);

// ---------------------------------------------------------------------------
// Defining equation, symmetry, special values, derivative identities.

void chk_defining(Args a) {
    for (int n = 0; n <= a.nmax; ++n) {
        const Polynomial lhs = p_poly(n) * pow(kX, n + 1) + q_poly(n) * pow(kXPlus1, n + 1);
        if (!a.eq(lhs, kOne, param_str("n=", n))) return;
    }
}

void chk_bezout_oracle(Args a) {
    for (int n = 0; n <= a.nmax; ++n) {
        const BezoutPair b = bezout_min_degree(pow(kX, n + 1), pow(kXPlus1, n + 1));
        if (!a.eq(std::pair(b.p, b.q), std::pair(p_poly(n), q_poly(n)), param_str("n=", n)))
            return;
    }
}

void chk_symmetry(Args a) {
    for (int n = 0; n <= a.nmax; ++n) {
        const Rational s = alternating_sign(n + 1);
        if (!a.eq(p_poly(n), s * q_poly(n).affine_sub(-1, -1), param_str("n=", n, " (P from Q)")))
            return;
        if (!a.eq(q_poly(n), s * p_poly(n).affine_sub(-1, -1), param_str("n=", n, " (Q from P)")))
            return;
    }
}

void chk_special_values(Args a) {
    const Rational half(1, 2);
    for (int n = 0; n <= a.nmax; ++n) {
        const Polynomial p = p_poly(n), q = q_poly(n);
        const Rational sign = alternating_sign(n + 1);
        const Rational two_n = Rational(2).pow(n);
        if (!a.eq(q(0), Rational(1), param_str("n=", n, " Q(0)"))) return;
        if (!a.eq(q(-half), two_n, param_str("n=", n, " Q(-1/2)"))) return;
        if (!a.eq(p(-1), sign, param_str("n=", n, " P(-1)"))) return;
        if (!a.eq(p(-half), sign * two_n, param_str("n=", n, " P(-1/2)"))) return;
        if (!a.eq(p(0), sign * Rational(binomial(2 * n + 1, n + 1)), param_str("n=", n, " P(0)")))
            return;
        if (!a.eq(p(1) + Rational(2).pow(n + 1) * q(1), Rational(1),
                  param_str("n=", n, " P(1)+2^{n+1}Q(1)")))
            return;
        const int kcap = std::min(n, a.k_cap(n));
        for (int k = 0; k <= kcap; ++k) {
            const Rational expected = alternating_sign(k) *
                                      Rational(factorial(2 * n + 1),
                                               BigInt(n + k + 1) * factorial(n) * factorial(n - k));
            if (!a.eq(q_deriv_poly(n, k)(-1), expected, param_str("n=", n, " k=", k, " Q^(k)(-1)")))
                return;
        }
    }
}

void chk_cn_identity(Args a) {
    for (int n = 0; n <= a.nmax; ++n) {
        const Polynomial q = q_poly(n);
        const Polynomial lhs = kXPlus1 * q.derivative() + Rational(n + 1) * q;
        const Rational cn = alternating_sign(n) * Rational(BigInt(2 * n + 1) * binomial(2 * n, n));
        if (!a.eq(lhs, Polynomial::monomial(cn, n), param_str("n=", n))) return;
    }
}

void chk_deriv_chain(Args a) {
    for (int n = 0; n <= a.nmax; ++n) {
        const int kcap = std::min(n + 1, a.k_cap(n + 1));
        for (int k = 1; k <= kcap; ++k) {
            const Polynomial lhs = kXPlus1 * q_poly(n).derivative(k) +
                                   Rational(n + k) * q_poly(n).derivative(k - 1);
            const Rational c = alternating_sign(n) *
                               Rational(factorial(2 * n + 1), factorial(n) * factorial(n - k + 1));
            if (!a.eq(lhs, Polynomial::monomial(c, n - k + 1), param_str("n=", n, " k=", k)))
                return;
        }
    }
}

void chk_ode(Args a) {
    for (int n = 0; n <= a.nmax; ++n) {
        const Polynomial q = q_poly(n);
        const Polynomial lhs = kX * kXPlus1 * q.derivative(2) +
                               (Polynomial::monomial(2, 1) - Polynomial(n)) * q.derivative() -
                               Rational(BigInt(n) * (n + 1)) * q;
        if (!a.eq(lhs, Polynomial(), param_str("n=", n))) return;
    }
}

void chk_recurrence_k(Args a) {
    for (int k = 0; k <= a.k_cap(4); ++k) {
        // Initial members of the shifted sequence.
        const Rational c0 = alternating_sign(k) * Rational(factorial(2 * k), factorial(k));
        if (!a.eq(q_deriv_poly(k, k), Polynomial(c0), param_str("k=", k, " initial Q_k^(k)")))
            return;
        const Rational c1 = alternating_sign(k) * Rational(factorial(2 * k + 1), factorial(k + 1));
        const Polynomial expected1 =
            c1 * (kOne - Polynomial::monomial(2 * (static_cast<long>(k) + 1), 1));
        if (!a.eq(q_deriv_poly(k + 1, k), expected1, param_str("k=", k, " initial Q_{k+1}^(k)")))
            return;
        for (int n = 2; n <= a.nmax; ++n) {
            const RecurrenceCoeffs rc = recurrence_coeffs(k, n);
            const Polynomial lhs = rc.u * q_deriv_poly(k + n, k);
            const Polynomial rhs =
                rc.v * q_deriv_poly(k + n - 1, k) + rc.w * q_deriv_poly(k + n - 2, k);
            if (!a.eq(lhs, rhs, param_str("k=", k, " n=", n))) return;
        }
    }
}

void chk_recurrence_0(Args a) {
    for (int n = 2; n <= a.nmax; ++n) {
        const Polynomial lhs = Rational(n) * (kXPlus1 * q_poly(n));
        const Polynomial mid(std::vector<Rational>{Rational(n), -2 * (2 * Rational(n) - 1),
                                                   -2 * (2 * Rational(n) - 1)});
        const Polynomial rhs = mid * q_poly(n - 1) +
                               Polynomial::monomial(2 * (2 * static_cast<long>(n) - 1), 1) *
                                   q_poly(n - 2);
        if (!a.eq(lhs, rhs, param_str("n=", n))) return;
    }
}

void chk_gould(Args a) {
    const Polynomial twox1 = Polynomial::monomial(2, 1) + kOne;
    for (int n = 0; n + 1 <= a.nmax; ++n) {
        const Polynomial lhs = kXPlus1 * q_poly(n + 1);
        const Polynomial rhs =
            q_poly(n) + Rational(binomial(2 * n + 1, n + 1)) *
                            (twox1 * Polynomial::monomial(alternating_sign(n + 1), n + 1));
        if (!a.eq(lhs, rhs, param_str("n=", n))) return;
    }
}

// ---------------------------------------------------------------------------
// Generating functions and the series bridge.

TruncatedBiSeries one_plus_4xt_series(unsigned order, int sign) {
    TruncatedBiSeries s = TruncatedBiSeries::constant(order, kOne);
    if (order >= 1) s.set_coeff(1, Polynomial::monomial(4 * sign, 1));
    return s;
}

void chk_gf_q(Args a) {
    const unsigned N = static_cast<unsigned>(a.nmax);
    TruncatedBiSeries family(N);
    for (unsigned n = 0; n <= N; ++n) family.set_coeff(n, q_poly(n));
    TruncatedBiSeries lin = TruncatedBiSeries::constant(N, kXPlus1);
    if (N >= 1) lin.set_coeff(1, Polynomial(-1));
    const TruncatedBiSeries lhs = (Rational(2) * (lin * one_plus_4xt_series(N, +1))) * family;
    const Polynomial one_2x = kOne + Polynomial::monomial(2, 1);
    const TruncatedBiSeries rhs =
        one_plus_4xt_series(N, +1) +
        one_2x * sqrt_one_plus(one_plus_4xt_series(N, +1) - TruncatedBiSeries::constant(N, kOne));
    const int m = first_mismatch(lhs, rhs);
    if (m >= 0)
        a.fail(param_str("t^", m), to_text(lhs.coeff(m)), to_text(rhs.coeff(m)));
}

void chk_gf_v(Args a) {
    const unsigned N = static_cast<unsigned>(a.nmax);
    TruncatedBiSeries family(N);
    for (unsigned n = 1; n <= N; ++n) family.set_coeff(n, v_poly(n));
    TruncatedBiSeries lin = TruncatedBiSeries::constant(N, kX - kOne);
    if (N >= 1) lin.set_coeff(1, kOne);
    const TruncatedBiSeries lhs = (Rational(2) * (lin * lin)) * family;
    TruncatedBiSeries rhs = TruncatedBiSeries::constant(N, Polynomial::monomial(2, 1) - kOne);
    if (N >= 1) rhs.set_coeff(1, Polynomial(4) - Polynomial::monomial(6, 1));
    if (N >= 2) rhs.set_coeff(2, Polynomial(-2));
    const Polynomial one_m2x = kOne - Polynomial::monomial(2, 1);
    rhs = rhs + one_m2x * sqrt_one_plus(one_plus_4xt_series(N, -1) -
                                        TruncatedBiSeries::constant(N, kOne));
    const int m = first_mismatch(lhs, rhs);
    if (m >= 0)
        a.fail(param_str("t^", m), to_text(lhs.coeff(m)), to_text(rhs.coeff(m)));
}

void chk_pde_bridge(Args a) {
    const unsigned N = std::max(2, a.nmax);
    TruncatedBiSeries vseries(N);
    for (unsigned n = 1; n <= N; ++n) vseries.set_coeff(n, v_poly(n));
    TruncatedBiSeries r(N);  // R(x,t) = Q(-x,t)
    for (unsigned n = 0; n <= N; ++n) r.set_coeff(n, q_poly(n).affine_sub(-1, 0));

    const unsigned M = N - 2;
    const Polynomial x2 = kX * kX;
    const TruncatedBiSeries rx = r.partial_x();
    const TruncatedBiSeries rt = r.partial_t();
    const TruncatedBiSeries rxx = rx.partial_x();
    const TruncatedBiSeries rtx = rt.partial_x();
    const TruncatedBiSeries rtt = rt.partial_t();

    const TruncatedBiSeries lhs = vseries.partial_t().truncated(M);
    const TruncatedBiSeries common = (x2 * rxx).truncated(M) + rtt.shifted_t(2).truncated(M) +
                                     (Rational(4) * rt.shifted_t(1)).truncated(M) +
                                     (Rational(2) * r).truncated(M);
    // As printed: + 2t R_tx + 2x R_x.
    const TruncatedBiSeries printed = common + (Rational(2) * rtx.shifted_t(1)).truncated(M) +
                                      (Rational(2) * (kX * rx)).truncated(M);
    // Corrected mixed/first-order terms: - 2xt R_tx - 2x R_x.
    const TruncatedBiSeries corrected = common -
                                        (Rational(2) * (kX * rtx).shifted_t(1)).truncated(M) -
                                        (Rational(2) * (kX * rx)).truncated(M);

    const int printed_mismatch = first_mismatch(lhs, printed);
    if (printed_mismatch < 0) {
        a.rep.note = "printed operator form matched as stated";
    } else {
        a.rep.note = param_str(
            "printed operator (+2t d2R/dtdx, +2x dR/dx) first fails at t^", printed_mismatch,
            "; corrected operator (-2xt d2R/dtdx, -2x dR/dx) verified to order ", M);
    }
    const int m = first_mismatch(lhs, corrected);
    if (m >= 0)
        a.fail(param_str("t^", m), to_text(lhs.coeff(m)), to_text(corrected.coeff(m)));
}

// ---------------------------------------------------------------------------
// Pell-type equation, Y/Z family, Chebyshev factorizations.

void chk_pell_n1(Args a) {
    const Polynomial twox3 = Polynomial::monomial(2, 1) + Polynomial(3);
    const Polynomial one_m2x = kOne - Polynomial::monomial(2, 1);
    for (int n = 0; n <= a.nmax; ++n) {
        const auto [y, z] = yz_pair_closed(n);
        if (!a.eq(twox3 * y * y + one_m2x * z * z, kOne, param_str("n=", n))) return;
    }
}

void chk_yz_recurrence(Args a) {
    const Rational half(1, 2);
    auto yz_prev2 = yz_pair_closed(0);
    if (!a.eq(yz_prev2, std::pair(kX, kXPlus1), "n=0 initial")) return;
    auto yz_prev = yz_pair_closed(1);
    if (!a.eq(yz_prev,
              std::pair(Polynomial(std::vector<Rational>{-half, 1, 2}),
                        Polynomial(std::vector<Rational>{half, 3, 2})),
              "n=1 initial"))
        return;
    const Polynomial twox1 = Polynomial::monomial(2, 1) + kOne;
    for (int n = 1; n + 1 <= a.nmax; ++n) {
        const auto yz_next = yz_pair_closed(n + 1);
        if (!a.eq(yz_next.first, twox1 * yz_prev.first - yz_prev2.first, param_str("n=", n, " Y")))
            return;
        if (!a.eq(yz_next.second, twox1 * yz_prev.second - yz_prev2.second,
                  param_str("n=", n, " Z")))
            return;
        yz_prev2 = std::exchange(yz_prev, yz_next);
    }
}

void chk_yz_closed_vs_pell(Args a) {
    for (int n = 0; n <= a.nmax; ++n)
        if (!a.eq(yz_pair_closed(n), yz_pair_pell(n), param_str("n=", n))) return;
}

void chk_cor32(Args a) {
    const Rational half(1, 2);
    for (int n = 0; n <= a.nmax; ++n) {
        const auto [y, z] = yz_pair_closed(n);
        const bool integral = n % 3 == 0;
        if (!a.eq(y.is_integer() && z.is_integer(), integral,
                  param_str("n=", n, " integrality")))
            return;
        if (!integral) {
            if (!a.require((y + Polynomial(half)).is_integer() &&
                               (z + Polynomial(half)).is_integer(),
                           param_str("n=", n), "Y+1/2 and Z+1/2 integral"))
                return;
        }
        const Rational y0_expected = n % 3 == 0          ? Rational(0)
                                     : (n % 6 == 1 || n % 6 == 2) ? -half
                                                                  : half;
        const Rational z0_expected = n % 3 == 0 ? alternating_sign(n / 3)
                                     : (n % 6 == 2 || n % 6 == 4) ? -half
                                                                  : half;
        if (!a.eq(y.coeff(0), y0_expected, param_str("n=", n, " Y(0)"))) return;
        if (!a.eq(z.coeff(0), z0_expected, param_str("n=", n, " Z(0)"))) return;
    }
}

void chk_factor_3n(Args a) {
    const Rational half(1, 2);
    const auto ushift = [](int m) {
        return chebyshev(ChebKind::U, m).affine_sub(1, Rational(1, 2));
    };
    for (int m = 1; m <= a.nmax; ++m) {
        const auto [y, z] = yz_pair_closed(3 * m);
        const Polynomial um = ushift(m), um1 = ushift(m - 1);
        const Polynomial mid = ushift(2 * m + 1) - ushift(2 * m - 1);
        if (!a.eq(y, half * ((um - um1) * (mid - kOne)), param_str("m=", m, " Y_{3m}"))) return;
        if (!a.eq(z, half * ((um + um1) * (mid + kOne)), param_str("m=", m, " Z_{3m}"))) return;
    }
}

void chk_cheb_product(Args a) {
    for (int j = 2; j <= a.nmax; ++j) {
        for (int k = 0; k <= std::min(j - 2, a.k_cap(a.nmax)); ++k) {
            const Polynomial lhs =
                Rational(2) * (chebyshev(ChebKind::T, j) * chebyshev(ChebKind::U, k));
            const Polynomial rhs =
                chebyshev(ChebKind::U, j + k) - chebyshev(ChebKind::U, j - k - 2);
            if (!a.eq(lhs, rhs, param_str("j=", j, " k=", k))) return;
        }
    }
}

// ---------------------------------------------------------------------------
// Iterated Bezout construction and the Thue-style family.

void chk_bezout_chain(Args a) {
    const Polynomial p0(-1), q0(1);
    if (!a.eq(bezout_chain(1, p0, q0, kX, kXPlus1),
              std::pair(Polynomial(std::vector<Rational>{3, 2}),
                        Polynomial(std::vector<Rational>{1, -2})),
              "n=1 vs Table 1"))
        return;
    if (!a.eq(bezout_chain(2, p0, q0, kX, kXPlus1).first,
              Polynomial(std::vector<Rational>{-6, 5, 30, 28, 8}), "n=2 explicit p_2"))
        return;
    // deg p_n = 2^(n+1)-n-2, so the cost is exponential in n; larger chains
    // are reachable through the library but not through a range override.
    const int cap = std::min(a.nmax, 10);
    if (cap < a.nmax)
        a.rep.note = param_str("chain degree grows as 2^(n+1)-n-2; checker capped at n=", cap);
    for (int n = 1; n <= cap; ++n) {
        const auto [p, q] = bezout_chain(n, p0, q0, kX, kXPlus1);
        if (!a.eq(p * pow(kX, n + 1) + q * pow(kXPlus1, n + 1), kOne,
                  param_str("n=", n, " identity")))
            return;
        const long expected_deg = (2L << n) - n - 2;
        if (!a.eq(BigInt(p.degree()), BigInt(expected_deg), param_str("n=", n, " deg p_n")))
            return;
        if (!a.eq(BigInt(q.degree()), BigInt(expected_deg), param_str("n=", n, " deg q_n")))
            return;
    }
}

void chk_thue_family(Args a) {
    for (unsigned m = 2; m <= static_cast<unsigned>(std::max(2, a.nmax)); ++m) {
        for (unsigned r = 1; r <= static_cast<unsigned>(a.k_cap(3)); ++r) {
            const ThueWitness w = thue_family(m, r);
            const Polynomial lhs =
                p_poly(w.n) * pow(w.y, m) + q_poly(w.n) * pow(w.z, m);
            if (!a.eq(lhs, kOne, param_str("m=", m, " r=", r, " n=", w.n))) return;
        }
    }
}

// ---------------------------------------------------------------------------
// Discriminants and resultants.

void chk_disc_closed(Args a) {
    for (int n = 1; n <= a.nmax; ++n) {
        const int kcap = std::min(n - 1, a.k_cap(n - 1));
        for (int k = 0; k <= kcap; ++k) {
            const Rational lhs = discriminant(q_deriv_poly(n, k));
            if (!a.eq(lhs, disc_qk_closed(n, k), param_str("n=", n, " k=", k))) return;
            if (k == 0 && !a.eq(lhs, disc_q_closed(n), param_str("n=", n, " k=0 specialized")))
                return;
        }
    }
}

void chk_disc_pq_equal(Args a) {
    for (int n = 1; n <= a.nmax; ++n) {
        const int kcap = std::min(n - 1, a.k_cap(n - 1));
        for (int k = 0; k <= kcap; ++k) {
            if (!a.eq(discriminant(p_poly(n).derivative(k)), discriminant(q_deriv_poly(n, k)),
                      param_str("n=", n, " k=", k)))
                return;
        }
    }
}

void chk_square_classify(Args a) {
    for (int n = 1; n <= a.nmax; ++n) {
        for (int k = 0; k < n; ++k) {
            const SquareClassification c = classify_disc_square(k, n);
            const bool direct = is_perfect_square(disc_qk_integer(n, k)).has_value();
            if (!a.eq(c.verdict == SquareVerdict::square, direct, param_str("n=", n, " k=", k)))
                return;
        }
    }
}

void chk_resultant_consecutive(Args a) {
    for (int n = 1; n <= a.nmax; ++n) {
        const Rational lhs = sylvester_resultant(q_poly(n), q_poly(n - 1));
        if (!a.eq(lhs, resultant_qq_closed(n), param_str("n=", n))) return;
    }
}

void chk_resultant_delta(Args a) {
    for (int k = 0; k <= a.k_cap(4); ++k) {
        for (int n = 1; n <= a.nmax; ++n) {
            const Rational delta =
                sylvester_resultant(q_deriv_poly(n + k, k), q_deriv_poly(n + k - 1, k));
            if (!a.eq(delta, resultant_delta_closed(k, n), param_str("k=", k, " n=", n))) return;
            if (!a.require(alternating_sign(k) * delta > Rational(0), param_str("k=", k, " n=", n),
                           "(-1)^k Delta > 0"))
                return;
        }
    }
}

void chk_resultant_pq(Args a) {
    std::optional<int> printed_fail_at;
    std::string printed_evidence;
    for (int n = 0; n <= a.nmax; ++n) {
        const Rational syl = sylvester_resultant(p_poly(n), q_poly(n));
        const Rational printed = Rational(binomial(2 * n, n)).pow(n + 1);
        const Rational proof = Rational(binomial(2 * n, n)).pow(2 * n + 1);
        if (!printed_fail_at && syl != printed) {
            printed_fail_at = n;
            printed_evidence = param_str("Sylvester ", syl.str(), " vs printed ", printed.str());
        }
        if (!a.eq(syl, proof, param_str("n=", n, " proof-form exponent 2n+1"))) return;
    }
    if (printed_fail_at) {
        a.rep.note = param_str("printed exponent n+1 fails at n=", *printed_fail_at, " (",
                               printed_evidence, "); proof-form exponent 2n+1 matches for all n<=",
                               a.nmax);
    } else {
        a.rep.note = "printed exponent n+1 matched over the tested range";
    }
}

// ---------------------------------------------------------------------------
// Hankel expression, V_n and W_n.

void chk_hankel_bridge(Args a) {
    const Polynomial one_m2x = kOne - Polynomial::monomial(2, 1);
    for (int n = 1; n <= a.nmax; ++n) {
        const Polynomial lhs = Rational(2 * (static_cast<long>(n) + 1)) * w_poly(n);
        const Polynomial rhs = Rational(binomial(2 * n, n)) *
                               (Polynomial::monomial(1, n) * one_m2x * v_poly(n));
        if (!a.eq(lhs, rhs, param_str("n=", n, " bridge"))) return;
    }
    for (int n = 3; n <= a.nmax; ++n) {
        const Polynomial xm1 = kX - kOne;
        const Polynomial lhs = Rational(n) * (xm1 * v_poly(n));
        const Polynomial rhs =
            (Rational(2 * (2 * static_cast<long>(n) - 3)) * (kX * xm1) - Polynomial(n + 1)) *
                v_poly(n - 1) +
            Polynomial::monomial(2 * (2 * static_cast<long>(n) - 1), 1) * v_poly(n - 2);
        if (!a.eq(lhs, rhs, param_str("n=", n, " recurrence"))) return;
    }
}

void chk_v_closed(Args a) {
    for (int n = 1; n <= a.nmax; ++n)
        if (!a.eq(v_poly(n), v_poly_via_recurrence(n), param_str("n=", n))) return;
}

void chk_v_values(Args a) {
    for (int n = 1; n <= a.nmax; ++n) {
        const Polynomial v = v_poly(n);
        if (!a.eq(v(0), Rational(n + 1), param_str("n=", n, " V(0)"))) return;
        if (!a.eq(v(Rational(1, 2)), Rational(2).pow(n), param_str("n=", n, " V(1/2)"))) return;
        if (!a.eq(v(1), Rational(catalan(n + 1)), param_str("n=", n, " V(1)"))) return;
    }
}

void chk_v_unimodal(Args a) {
    for (int n = 2; n <= a.nmax; ++n) {
        const Polynomial v = v_poly(n);
        for (int i = 1; i <= n - 2; ++i) {
            if (!a.require(v.coeff(i - 1) < v.coeff(i), param_str("n=", n, " i=", i),
                           "a_{i-1} < a_i"))
                return;
        }
        if (!a.require(v.coeff(n - 2) > v.coeff(n - 1), param_str("n=", n),
                       "a_{n-2} > a_{n-1}"))
            return;
        // Divisibility refinement: a_{k,n}/(n+1-k) is an integer.
        for (int i = 0; i <= n - 1; ++i) {
            if (!a.require((v.coeff(i) / Rational(n + 1 - i)).is_integer(),
                           param_str("n=", n, " i=", i), "a_{i,n}/(n+1-i) integral"))
                return;
        }
    }
}

void chk_w_coeffs(Args a) {
    const Rational half(1, 2);
    for (int n = 1; n <= a.nmax; ++n) {
        const Polynomial w = w_poly(n);
        for (int j = 0; j < n; ++j)
            if (!a.eq(w.coeff(j), Rational(0), param_str("n=", n, " j=", j, " low coeff"))) return;
        if (!a.eq(w.coeff(n), half * Rational(binomial(2 * n, n)), param_str("n=", n, " w_{n,n}")))
            return;
        const Rational corner = -2 * Rational(catalan(n - 1) * catalan(n));
        if (!a.eq(w.coeff(2 * n), corner, param_str("n=", n, " w_{2n,n}"))) return;
        if (n >= 2 && !a.eq(w.coeff(2 * n - 1), corner, param_str("n=", n, " w_{2n-1,n}")))
            return;
        for (int i = 0; i <= n - 1; ++i) {
            Rational sum = 0;
            for (int j = i + 1; j <= n; ++j)
                sum += w.coeff(n + j) * Rational(2).pow(static_cast<long>(i) - j);
            const Rational rhs = -Rational(BigInt(n - i) * BigInt(n - i + 1) *
                                               binomial(2 * n, n) * binomial(n - 1 + i, i),
                                           2 * BigInt(n) * BigInt(n + 1));
            if (!a.eq(sum, rhs, param_str("n=", n, " i=", i, " tail sum"))) return;
        }
    }
}

// ---------------------------------------------------------------------------
// Eisenstein irreducibility and the lattice-path oracle.

void chk_eisenstein(Args a) {
    // Family 1: Q_{p-k-1}^{(k)} is Eisenstein at p in the reversed
    // orientation (constant term prime to p), so test the reversal.
    for (std::uint32_t p : primes_up_to(static_cast<std::uint32_t>(a.nmax) + 1)) {
        for (int k = 0; 2 * k + 2 <= static_cast<int>(p); ++k) {
            const int n = static_cast<int>(p) - k - 1;
            if (k > n - 1) break;
            if (!a.eq(eisenstein_check(q_deriv_poly(n, k).reversed(), BigInt(p)), true,
                      param_str("p=", p, " k=", k, " reversed Q_{p-k-1}^(k)")))
                return;
        }
    }
    // Family 2: for p = 2n+1 prime, Q_n^{(k)}(-x-1) and V_n(x+1) are
    // p-Eisenstein in the classical orientation.
    for (int n = 1; n <= a.nmax; ++n) {
        const BigInt p = 2 * BigInt(n) + 1;
        if (!is_prime(p)) continue;
        Polynomial shifted = q_poly(n).affine_sub(-1, -1);
        for (int k = 0; k <= n - 1; ++k) {
            if (k > 0) shifted = shifted.derivative();
            if (!a.eq(eisenstein_check(shifted, p), true,
                      param_str("2n+1=", p.get_str(), " k=", k, " Q_n^(k)(-x-1)")))
                return;
        }
        if (n >= 2 && !a.eq(eisenstein_check(v_poly(n).affine_sub(1, 1), p), true,
                            param_str("2n+1=", p.get_str(), " V_n(x+1)")))
            return;
    }
}

std::uint64_t count_lattice_paths(unsigned x, unsigned y, unsigned n, unsigned i) {
    if (x == n && y == i) return 1;
    std::uint64_t c = 0;
    if (x < n) c += count_lattice_paths(x + 1, y, n, i);
    if (y < i) c += count_lattice_paths(x, y + 1, n, i);
    return c;
}

void chk_lattice_paths(Args a) {
    for (unsigned n = 0; n <= static_cast<unsigned>(a.nmax); ++n) {
        const Polynomial qneg = q_poly(n).affine_sub(-1, 0);
        for (unsigned i = 0; i <= n; ++i) {
            const BigInt paths(static_cast<unsigned long>(count_lattice_paths(0, 0, n, i)));
            if (!a.eq(Rational(paths), qneg.coeff(i), param_str("n=", n, " i=", i))) return;
        }
    }
}

// ---------------------------------------------------------------------------

struct RegistryEntry {
    const char* key;
    int default_nmax;
    std::optional<int> default_kmax;
    void (*run)(Args);
};

const RegistryEntry kRegistry[] = {
    {"bezout-chain", 5, std::nullopt, chk_bezout_chain},
    {"bezout-oracle", 12, std::nullopt, chk_bezout_oracle},
    {"cheb-product", 12, std::nullopt, chk_cheb_product},
    {"cn-identity", 12, std::nullopt, chk_cn_identity},
    {"cor32", 12, std::nullopt, chk_cor32},
    {"defining", 12, std::nullopt, chk_defining},
    {"deriv-chain", 12, std::nullopt, chk_deriv_chain},
    {"disc-closed", 12, std::nullopt, chk_disc_closed},
    {"disc-pq-equal", 12, std::nullopt, chk_disc_pq_equal},
    {"eisenstein", 99, std::nullopt, chk_eisenstein},
    {"factor-3n", 10, std::nullopt, chk_factor_3n},
    {"gf-q", 20, std::nullopt, chk_gf_q},
    {"gf-v", 20, std::nullopt, chk_gf_v},
    {"gould", 12, std::nullopt, chk_gould},
    {"hankel-bridge", 12, std::nullopt, chk_hankel_bridge},
    {"lattice-paths", 8, std::nullopt, chk_lattice_paths},
    {"ode", 12, std::nullopt, chk_ode},
    {"pde-bridge", 20, std::nullopt, chk_pde_bridge},
    {"pell-n1", 12, std::nullopt, chk_pell_n1},
    {"recurrence-0", 12, std::nullopt, chk_recurrence_0},
    {"recurrence-k", 12, 4, chk_recurrence_k},
    {"resultant-consecutive", 12, std::nullopt, chk_resultant_consecutive},
    {"resultant-delta", 10, 4, chk_resultant_delta},
    {"resultant-pq", 8, std::nullopt, chk_resultant_pq},
    {"special-values", 12, std::nullopt, chk_special_values},
    {"square-classify", 40, std::nullopt, chk_square_classify},
    {"symmetry", 12, std::nullopt, chk_symmetry},
    {"thue-family", 4, 3, chk_thue_family},
    {"v-closed", 12, std::nullopt, chk_v_closed},
    {"v-unimodal", 200, std::nullopt, chk_v_unimodal},
    {"v-values", 12, std::nullopt, chk_v_values},
    {"w-coeffs", 20, std::nullopt, chk_w_coeffs},
    {"yz-closed-vs-pell", 12, std::nullopt, chk_yz_closed_vs_pell},
    {"yz-recurrence", 12, std::nullopt, chk_yz_recurrence},
};

const RegistryEntry* find_entry(const std::string& id) {
    for (const RegistryEntry& e : kRegistry)
        if (id == e.key) return &e;
    return nullptr;
}

VerificationReport run_entry(const RegistryEntry& entry, std::optional<int> nmax,
                             std::optional<int> kmax) {
    VerificationReport rep;
    rep.id = entry.key;
    rep.range.nmax = nmax.value_or(entry.default_nmax);
    rep.range.kmax = kmax ? kmax : entry.default_kmax;
    const auto start = std::chrono::steady_clock::now();
    entry.run(Args{rep.range.nmax, rep.range.kmax, rep});
    rep.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - start);
    return rep;
}

}  // namespace

std::vector<std::string> registry_keys() {
    std::vector<std::string> keys;
    for (const RegistryEntry& e : kRegistry) keys.emplace_back(e.key);
    return keys;  // kRegistry is kept sorted
}

VerificationReport verify(const std::string& id, std::optional<int> nmax,
                          std::optional<int> kmax) {
    const RegistryEntry* entry = find_entry(id);
    if (!entry) throw UnknownIdentityError(id);
    return run_entry(*entry, nmax, kmax);
}

std::vector<VerificationReport> verify_all(std::optional<int> nmax, std::optional<int> kmax,
                                           unsigned jobs) {
    if (nmax && *nmax < 2) throw std::domain_error("verify_all requires nmax >= 2");
    const size_t count = std::size(kRegistry);
    std::vector<VerificationReport> reports(count);
    if (jobs <= 1) {
        for (size_t i = 0; i < count; ++i) reports[i] = run_entry(kRegistry[i], nmax, kmax);
        return reports;
    }
    std::atomic<size_t> next{0};
    std::vector<std::thread> workers;
    const unsigned nworkers = std::min<unsigned>(jobs, static_cast<unsigned>(count));
    workers.reserve(nworkers);
    for (unsigned t = 0; t < nworkers; ++t) {
        workers.emplace_back([&] {
            for (size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1))
                reports[i] = run_entry(kRegistry[i], nmax, kmax);
        });
    }
    for (std::thread& w : workers) w.join();
    return reports;
}

bool all_passed(const std::vector<VerificationReport>& reports) {
    return std::all_of(reports.begin(), reports.end(),
                       [](const VerificationReport& r) { return r.passed; });
}

nlohmann::json report_to_json(const VerificationReport& rep) {
    nlohmann::json j;
    j["id"] = rep.id;
    j["range"]["nmax"] = rep.range.nmax;
    j["range"]["kmax"] = rep.range.kmax ? nlohmann::json(*rep.range.kmax) : nlohmann::json();
    j["passed"] = rep.passed;
    if (rep.counterexample) {
        j["counterexample"] = {{"params", rep.counterexample->params},
                               {"lhs", rep.counterexample->lhs},
                               {"rhs", rep.counterexample->rhs}};
    } else {
        j["counterexample"] = nlohmann::json();
    }
    j["elapsed_ms"] = rep.elapsed.count();
    if (!rep.note.empty()) j["note"] = rep.note;
    return j;
}

}  // namespace pqpolys
