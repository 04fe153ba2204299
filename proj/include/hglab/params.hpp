#pragma once

#include <optional>
#include <stdexcept>

#include "hglab/rational.hpp"

namespace hglab {

// Scalar symbols of the main argument and their defining formulas. Derived
// quantities are exact rationals, floored only where an integer is consumed
// (t, load caps). Logs are base 2 throughout.
//
//   ell         = 10 r log n / (eps lambda)
//   t           = floor(lambda d / (4 r^2 ell))
//   u           = r ell t
//   d_threshold = 4000 r^5 (log n)^2 / (eps^3 lambda^3)
//
// Defaults follow the main proof: lambda = 1/(2 log n), eps = 1/20.
struct ParameterSet {
    int r = 0;
    long long n = 0;
    long long d = 0;
    Rational lambda = 0;
    Rational epsilon = 0;
    Rational log2_n = 0;

    Rational ell = 0;
    long long t = 0;
    Rational u = 0;
    Rational d_threshold = 0;

    bool lambda_overridden = false;
    bool epsilon_overridden = false;
    bool ell_overridden = false;
    bool t_overridden = false;

    long long ell_floor() const { return floor_to_ll(ell); }
    long long u_floor() const { return floor_to_ll(u); }

    // t >= 1 is required by the robust-reach iteration; at desk scale the
    // formula value is 0 (the paper's regime is unreachable here).
    bool t_positive() const { return t >= 1; }

    // Theorem hypothesis d >= d_threshold, reported, never enforced.
    bool theorem_hypothesis_ok() const { return Rational(d) >= d_threshold; }

    // Robust lemma side conditions.
    bool robust_hypothesis_ok() const {
        return Rational(4000) * pow4(r) * log2_n < epsilon * epsilon * lambda * lambda * Rational(d) &&
               lambda <= Rational(4) * Rational(r) * epsilon;
    }

    static Rational pow4(int r) {
        Rational x(r);
        return x * x * x * x;
    }
};

struct ParameterOverrides {
    std::optional<Rational> lambda;
    std::optional<Rational> epsilon;
    std::optional<Rational> ell;  // overrides the formula entirely
    std::optional<long long> t;
};

inline ParameterSet parameter_set(int r, long long n, long long d,
                                  const ParameterOverrides& overrides = {}) {
    if (r < 2) throw std::invalid_argument("r must be >= 2");
    if (n < 2) throw std::invalid_argument("n must be >= 2");
    ParameterSet p;
    p.r = r;
    p.n = n;
    p.d = d;
    p.log2_n = log2_dyadic(static_cast<unsigned long long>(n));
    if (overrides.lambda) {
        if (*overrides.lambda <= 0 || *overrides.lambda > 1)
            throw std::invalid_argument("lambda must be in (0,1]");
        p.lambda = *overrides.lambda;
        p.lambda_overridden = true;
    } else {
        p.lambda = Rational(1) / (2 * p.log2_n);
    }
    if (overrides.epsilon) {
        if (*overrides.epsilon <= 0 || *overrides.epsilon >= 1)
            throw std::invalid_argument("epsilon must be in (0,1)");
        p.epsilon = *overrides.epsilon;
        p.epsilon_overridden = true;
    } else {
        p.epsilon = make_rational(1, 20);
    }

    if (overrides.ell) {
        if (*overrides.ell < 1) throw std::invalid_argument("ell must be >= 1");
        p.ell = *overrides.ell;
        p.ell_overridden = true;
    } else {
        p.ell = Rational(10) * r * p.log2_n / (p.epsilon * p.lambda);
    }

    if (overrides.t) {
        if (*overrides.t < 0) throw std::invalid_argument("t must be >= 0");
        p.t = *overrides.t;
        p.t_overridden = true;
    } else {
        const Rational tf = p.lambda * Rational(d) / (Rational(4) * r * r * p.ell);
        p.t = floor_to_ll(tf < 0 ? Rational(0) : tf);
    }

    p.u = Rational(r) * p.ell * Rational(p.t);
    const Rational r5 = Rational(r) * r * r * r * r;
    const Rational e3 = p.epsilon * p.epsilon * p.epsilon;
    const Rational l3 = p.lambda * p.lambda * p.lambda;
    p.d_threshold = Rational(4000) * r5 * p.log2_n * p.log2_n / (e3 * l3);
    return p;
}

}  // namespace hglab
