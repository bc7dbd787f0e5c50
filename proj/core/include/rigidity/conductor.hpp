#pragma once

#include "rigidity/rational.hpp"

#include <vector>

namespace rigidity::conductor {

/// Slope data of a local parameter: dimension, dimension of inertia
/// invariants, and the slope multiset. Swan integrality is enforced at
/// construction.
class SlopeProfile {
public:
    SlopeProfile(int dim, int inv_dim, std::vector<std::pair<Rat, int>> slopes);

    int dim() const { return dim_; }
    int inv_dim() const { return inv_dim_; }
    const std::vector<std::pair<Rat, int>>& slopes() const { return slopes_; }

    long long swan() const;
    long long artin() const { return (dim_ - inv_dim_) + swan(); }
    Rat max_slope() const;

    bool unramified() const;

    /// Direct sum: concatenated slopes, added dimensions and invariants.
    SlopeProfile direct_sum(const SlopeProfile& o) const;

private:
    int dim_;
    int inv_dim_;
    std::vector<std::pair<Rat, int>> slopes_; // sorted, merged multiplicities
};

struct CohRigidityInstance {
    int genus = 0;
    int dim_dual = 0; // dim G^
    int h0 = 0;       // dim H^0(U, Ad E)
    std::vector<SlopeProfile> profiles;

    CohRigidityInstance(int g, int dual, int h, std::vector<SlopeProfile> p);
};

struct RigidityVerdict {
    bool rigid = false;
    Rat deficit; // (1/2) sum a_x - ((1-g) dim G^ - h0); half-integers reported
};

/// Numerical criterion: (1/2) sum_x a_x(Ad) = (1-g) dim G^ - h0.
RigidityVerdict coh_rigidity_check(const CohRigidityInstance& inst);

struct MatchReport {
    long long artin = 0;
    long long reldim = 0;
    bool equals_reldim = false;
    bool equals_twice_reldim = false;
};

/// Reports both candidate identities a = reldim and a = 2 reldim without
/// taking a side; summing the dimension condition over P^1 against the
/// rigidity criterion shows the two differ by a global factor of two.
MatchReport datum_parameter_match(long long reldim, const SlopeProfile& adjoint);

/// Max slope: the Moy-Prasad depth a matching level group should reach.
Rat slopes_bound_level(const SlopeProfile& profile);

/// Standard Kloosterman profiles. At 0 the monodromy is tame with a single
/// Jordan block; at infinity totally wild with Swan 1 (n slopes 1/n).
SlopeProfile kl_standard_profile_at_zero(int n);
SlopeProfile kl_standard_profile_at_infinity(int n);

/// Adjoint profile at 0: tame, invariants = centralizer of a regular
/// unipotent in sl_n (dimension n-1).
SlopeProfile kl_adjoint_profile_at_zero(int n);

/// Adjoint profile at infinity, derived rather than hardcoded: the unique
/// profile with slopes in {0, 1/n}, no invariants, integral Swan, satisfying
/// the rigidity identity (1/2)(a_0 + a_inf) = n^2 - 1. The solver scans the
/// slope-1/n multiplicity and asserts uniqueness.
SlopeProfile kl_adjoint_profile_at_infinity(int n);

} // namespace rigidity::conductor
