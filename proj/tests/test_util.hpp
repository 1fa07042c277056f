#pragma once

#include <initializer_list>
#include <random>
#include <vector>

#include "pqpolys/polynomial.hpp"

namespace pqpolys::testutil {

/// Coefficients low to high.
inline Polynomial ipoly(std::initializer_list<long> cs) {
    std::vector<Rational> v;
    for (long c : cs) v.emplace_back(c);
    return Polynomial(std::move(v));
}

inline Polynomial rpoly(std::initializer_list<Rational> cs) {
    return Polynomial(std::vector<Rational>(cs));
}

/// Random integer polynomial, possibly zero, degree <= max_deg.
inline Polynomial random_ipoly(std::mt19937& rng, int max_deg, long lo = -9, long hi = 9) {
    std::uniform_int_distribution<int> deg(0, max_deg);
    std::uniform_int_distribution<long> coeff(lo, hi);
    std::vector<Rational> cs(deg(rng) + 1);
    for (auto& c : cs) c = coeff(rng);
    return Polynomial(std::move(cs));
}

inline Polynomial random_nonzero_ipoly(std::mt19937& rng, int max_deg, long lo = -9,
                                       long hi = 9) {
    for (;;) {
        Polynomial f = random_ipoly(rng, max_deg, lo, hi);
        if (!f.is_zero()) return f;
    }
}

}  // namespace pqpolys::testutil
