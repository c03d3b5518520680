#pragma once

#include "kac/nqc.hpp"

namespace kac {

using Theta = std::vector<int>;      // theta_s <= s entrywise when in Theta_r
using ThetaPrime = std::vector<int>; // entries 0/1

enum class Direction { Raise, Lower };

/// Record of one composite lowering L'_theta: the raw intermediate weights
/// (positions fixed, no sorting) and the effective step at each stage.
struct LoweringTrace {
    Theta theta;
    std::vector<Weight> intermediates; // size r+1, intermediates[0] = lambda
    std::vector<Entry> kk;             // kk[s-1] = step subtracted at stage s
    Weight result;                     // dominant conjugate of the last one
};

/// Single lowering step (3.14): subtract the first gap below the s-th
/// atypical value at both paired positions.
Weight lower_once(const Weight& w, int s);

/// nu-fold lowering (3.15), as one subtraction of the nu-th gap.
Weight lower_power(const Weight& w, int s, int nu);

/// Single raising step (3.14): add k_s at both paired positions.  Result is
/// raw (possibly non-dominant).
Weight raise_once(const Weight& w, int s);

/// Composite raising (3.18): all k_s computed on mu itself, the selected
/// steps added simultaneously, then the dominant conjugate is taken.
Weight raise_theta(const Weight& mu, const ThetaPrime& theta_prime);

/// Composite lowering (3.21): stages s = 1..r applied to raw intermediates
/// with positions fixed from lambda; each stage's step is recomputed on the
/// previous intermediate; one conjugation at the end.
LoweringTrace lower_theta(const Weight& lambda, const Theta& theta);

} // namespace kac
