#pragma once

#include <map>
#include <stdexcept>

#include "plethysm/partition.hpp"

namespace plethysm {

// finitely supported exact expansion in the power sum basis
using PowerSumVector = std::map<Partition, Rat>;

struct PlethysmExpansion {
    Partition nu;
    Partition mu;
    std::map<Partition, Int> multiplicities; // zero entries omitted
};

// thrown when a computation exceeds the configured size cap
class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// symmetric group character value chi^lambda(rho), Murnaghan-Nakayama with a
// synchronized global memo
Int character(const Partition& lambda, const Partition& rho);

// z_rho = prod i^{m_i} m_i!
Int centralizer_order(const Partition& rho);

// f^lambda, the number of standard Young tableaux, hook length formula
Int syt_count(const Partition& lambda);

// s_lambda = sum_rho chi^lambda(rho)/z_rho p_rho
PowerSumVector schur_to_powersum(const Partition& lambda);

// exact p-expansion of s_nu applied to s_mu, via p_r(s_mu) scaling every
// p-index of s_mu by r
PowerSumVector plethysm_powersum(const Partition& nu, const Partition& mu);

// <s_nu(s_mu), s_lambda>; single-coefficient route that never expands the
// Schur basis, usable to mn <= 48 (warning on stderr past the decomposition
// budget)
Int plethysm_coefficient(const Partition& nu, const Partition& mu, const Partition& lambda);

// all Schur multiplicities of s_nu(s_mu); requires mn within
// decomposition_budget(); the dimension identity is checked on every call
PlethysmExpansion full_decomposition(const Partition& nu, const Partition& mu);

// mn cap for full_decomposition: env PLETHYSM_ORACLE_BUDGET, default 16
unsigned decomposition_budget();

// worker count for coefficient extraction; 0 picks hardware_concurrency
void set_oracle_threads(unsigned n);
unsigned oracle_threads();

} // namespace plethysm
