#include "pqpolys/numthy.hpp"

#include <array>
#include <utility>

#include "pqpolys/families.hpp"

namespace pqpolys {

std::optional<BigInt> is_perfect_square(const BigInt& v) {
    if (sgn(v) < 0) return std::nullopt;
    if (mpz_perfect_square_p(v.get_mpz_t()) == 0) return std::nullopt;
    BigInt r;
    mpz_sqrt(r.get_mpz_t(), v.get_mpz_t());
    return r;
}

std::optional<Rational> is_rational_square(const Rational& v) {
    auto n = is_perfect_square(v.numerator());
    if (!n) return std::nullopt;
    auto d = is_perfect_square(v.denominator());
    if (!d) return std::nullopt;
    return Rational(*n, *d);
}

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<__uint128_t>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    std::uint64_t d = n - 1;
    unsigned s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // Deterministic witness set for all n < 2^64 (Sinclair / Jaeschke bounds).
    for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL,
                            31ULL, 37ULL}) {
        if (a % n == 0) continue;
        std::uint64_t x = powmod(a % n, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (unsigned i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

}  // namespace

bool is_prime(const BigInt& v) {
    if (sgn(v) < 0) return false;
    if (mpz_sizeinbase(v.get_mpz_t(), 2) > 64) throw UnsupportedMagnitudeError();
    return is_prime_u64(mpz_get_ui(v.get_mpz_t()));
}

std::vector<std::uint32_t> primes_up_to(std::uint32_t n) {
    std::vector<bool> sieve(static_cast<size_t>(n) + 1, true);
    std::vector<std::uint32_t> primes;
    for (std::uint32_t i = 2; i <= n; ++i) {
        if (!sieve[i]) continue;
        primes.push_back(i);
        for (std::uint64_t j = static_cast<std::uint64_t>(i) * i; j <= n; j += i)
            sieve[static_cast<size_t>(j)] = false;
    }
    return primes;
}

PellState PellState::first(unsigned k) {
    const BigInt scale = 2 * static_cast<long>(k) + 1;
    return {k, 1, 3 * scale, scale};
}

void PellState::advance() {
    x_prev = std::exchange(x, BigInt(6 * x - x_prev));
    ++j;
}

BigInt pell_x(unsigned k, unsigned j) {
    if (j < 1) throw std::domain_error("pell_x requires j >= 1");
    PellState s = PellState::first(k);
    while (s.j < j) s.advance();
    return s.x;
}

BigInt pell_n(unsigned j) {
    if (j < 1) throw std::domain_error("pell_n requires j >= 1");
    return (pell_x(0, 2 * j + 1) - 3) / 4;
}

SquareClassification classify_disc_square(unsigned k, unsigned n) {
    if (n <= k) throw std::domain_error("classify_disc_square requires n > k");
    SquareClassification c;
    c.value_class = static_cast<int>((n - k) % 4);

    if (c.value_class == 2 || c.value_class == 3) {
        // epsilon = (n-k)(n-k-1)/2 odd, so D < 0.
        c.verdict = SquareVerdict::not_square;
        c.reason = SquareReason::negative_sign;
        return c;
    }

    if (c.value_class == 1) {
        for (unsigned long w = static_cast<unsigned long>(n) + k + 2; w + 1 <= 2 * static_cast<unsigned long>(n); ++w) {
            if (is_prime(BigInt(static_cast<long>(w)))) {
                c.verdict = SquareVerdict::not_square;
                c.reason = SquareReason::prime_witness;
                c.witness_prime = BigInt(static_cast<long>(w));
                return c;
            }
        }
        c.reason = SquareReason::direct_integer_check;
        c.decisive_value = Rational(binomial(2 * n, n + k), BigInt(n + k + 1));
        c.sqrt_witness = is_rational_square(c.decisive_value);
        c.verdict = c.sqrt_witness ? SquareVerdict::square : SquareVerdict::not_square;
        return c;
    }

    // value_class == 0: D is a square iff (n+k+1)(2n+1) is.
    c.decisive_value = Rational(BigInt(BigInt(n + k + 1) * BigInt(2 * n + 1)));
    c.sqrt_witness = is_rational_square(c.decisive_value);
    c.reason = SquareReason::direct_integer_check;
    if (!c.sqrt_witness) {
        c.verdict = SquareVerdict::not_square;
        return c;
    }
    c.verdict = SquareVerdict::square;
    const BigInt target = 4 * BigInt(n) + 2 * static_cast<long>(k) + 3;  // X_{2j+1}
    for (PellState s = PellState::first(k); s.x <= target; s.advance()) {
        if (s.j % 2 == 1 && s.x == target) {
            c.reason = SquareReason::pell_member;
            c.pell_index = (s.j - 1) / 2;
            break;
        }
    }
    return c;
}

BigInt disc_qk_integer(unsigned n, unsigned k) {
    const Rational d = disc_qk_closed(n, k);
    if (!d.is_integer()) throw std::logic_error("disc closed form not integral");
    return d.numerator();
}

bool eisenstein_check(const Polynomial& f, const BigInt& p) {
    if (!is_prime(p)) throw NotPrimeError();
    if (!f.is_integer()) throw NotIntegerPolyError();
    if (f.is_zero() || f.degree() == 0) return false;
    const auto divisible = [](const BigInt& a, const BigInt& b) {
        return mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t()) != 0;
    };
    if (divisible(f.leading_coeff().numerator(), p)) return false;
    for (int i = 0; i < f.degree(); ++i)
        if (!divisible(f.coeff(static_cast<unsigned>(i)).numerator(), p)) return false;
    return !divisible(f.coeff(0).numerator(), p * p);
}

}  // namespace pqpolys
