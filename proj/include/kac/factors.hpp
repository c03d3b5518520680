#pragma once

#include <optional>

#include "kac/operators.hpp"
#include "kac/theta.hpp"

namespace kac {

struct Factor {
    Theta theta;
    Weight mu; // dominant highest weight of the factor; multiplicity always 1
};

struct FactorSet {
    Weight lambda;
    std::vector<Factor> factors; // sorted by the atypical value tuple of mu
};

struct RaisingWitness {
    ThetaPrime theta_prime;
    bool check = false; // raise_theta(mu, theta_prime) == lambda
};

/// All composition factor highest weights of the Kac module with highest
/// weight lambda, one per admissible theta.
FactorSet composition_factors(const Weight& lambda);

/// Searches theta' in {0,1}^r with raise_theta(mu, theta') = lambda.  The
/// presence of a witness is exactly multiplicity a_{lambda,mu} = 1.
std::optional<RaisingWitness> brundan_witness(const Weight& lambda, const Weight& mu);

/// Brute-force primitive weight search: every dominant candidate with the
/// same non-atypical entries and atypical values within the margin below
/// lambda's entry range, kept iff a raising witness exists.  Desk scale.
std::vector<Weight> primitive_set_oracle(const Weight& lambda, Entry search_margin);
Entry default_oracle_margin(const Weight& lambda); // r * (m + n)

/// The 0/1 tuple recovering lambda from the theta-lowered weight:
/// raise_theta(lower_theta(lambda, theta).result, result) == lambda.
ThetaPrime theta_prime_for(const Weight& lambda, const Theta& theta);

} // namespace kac
