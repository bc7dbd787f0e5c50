#include "rigidity/conductor.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace rigidity::conductor {

SlopeProfile::SlopeProfile(int dim, int inv_dim, std::vector<std::pair<Rat, int>> slopes)
    : dim_(dim), inv_dim_(inv_dim) {
    if (dim <= 0) throw std::invalid_argument("profile dimension must be positive");
    if (inv_dim < 0 || inv_dim > dim) throw std::invalid_argument("invariant dimension out of range");

    std::map<Rat, int> merged;
    for (const auto& [s, m] : slopes) {
        if (s < Rat(0)) throw std::invalid_argument("slopes must be nonnegative");
        if (m < 0) throw std::invalid_argument("slope multiplicities must be nonnegative");
        if (m > 0) merged[s] += m;
    }
    int total = 0;
    Rat swan(0);
    for (const auto& [s, m] : merged) {
        total += m;
        swan += s * m;
    }
    if (total != dim) throw std::invalid_argument("slope multiplicities must sum to dim");
    if (swan.denominator() != 1) throw std::invalid_argument("Swan conductor must be an integer");
    int tame = merged.count(Rat(0)) ? merged[Rat(0)] : 0;
    if (inv_dim > tame) throw std::invalid_argument("inertia invariants must be tame (slope 0)");
    slopes_.assign(merged.begin(), merged.end());
}

long long SlopeProfile::swan() const {
    Rat acc(0);
    for (const auto& [s, m] : slopes_) acc += s * m;
    return acc.numerator(); // integral by construction
}

Rat SlopeProfile::max_slope() const {
    Rat mx(0);
    for (const auto& [s, m] : slopes_) mx = std::max(mx, s);
    return mx;
}

bool SlopeProfile::unramified() const { return inv_dim_ == dim_ && swan() == 0; }

SlopeProfile SlopeProfile::direct_sum(const SlopeProfile& o) const {
    std::vector<std::pair<Rat, int>> s = slopes_;
    s.insert(s.end(), o.slopes_.begin(), o.slopes_.end());
    return SlopeProfile(dim_ + o.dim_, inv_dim_ + o.inv_dim_, std::move(s));
}

CohRigidityInstance::CohRigidityInstance(int g, int dual, int h, std::vector<SlopeProfile> p)
    : genus(g), dim_dual(dual), h0(h), profiles(std::move(p)) {
    if (genus < 0) throw std::invalid_argument("genus must be nonnegative");
    if (dim_dual <= 0) throw std::invalid_argument("dual group dimension must be positive");
    if (h0 < 0) throw std::invalid_argument("h0 must be nonnegative");
    for (const auto& pr : profiles)
        if (pr.dim() != dim_dual)
            throw std::invalid_argument("profile dimension must equal dim of the dual group");
}

RigidityVerdict coh_rigidity_check(const CohRigidityInstance& inst) {
    long long sum = 0;
    for (const auto& p : inst.profiles) sum += p.artin();
    Rat lhs(sum, 2);
    Rat rhs = Rat(1 - inst.genus) * inst.dim_dual - inst.h0;
    RigidityVerdict v;
    v.deficit = lhs - rhs;
    v.rigid = v.deficit == Rat(0);
    return v;
}

MatchReport datum_parameter_match(long long reldim, const SlopeProfile& adjoint) {
    MatchReport r;
    r.artin = adjoint.artin();
    r.reldim = reldim;
    r.equals_reldim = r.artin == reldim;
    r.equals_twice_reldim = r.artin == 2 * reldim;
    return r;
}

Rat slopes_bound_level(const SlopeProfile& profile) { return profile.max_slope(); }

SlopeProfile kl_standard_profile_at_zero(int n) {
    if (n < 1) throw std::invalid_argument("Kl_n needs n >= 1");
    // Unipotent with a single Jordan block fixes a line.
    return SlopeProfile(n, 1, {{Rat(0), n}});
}

SlopeProfile kl_standard_profile_at_infinity(int n) {
    if (n < 1) throw std::invalid_argument("Kl_n needs n >= 1");
    return SlopeProfile(n, 0, {{Rat(1, n), n}});
}

SlopeProfile kl_adjoint_profile_at_zero(int n) {
    if (n < 2) throw std::invalid_argument("adjoint profile needs n >= 2");
    return SlopeProfile(n * n - 1, n - 1, {{Rat(0), n * n - 1}});
}

SlopeProfile kl_adjoint_profile_at_infinity(int n) {
    if (n < 2) throw std::invalid_argument("adjoint profile needs n >= 2");
    int dim = n * n - 1;
    long long a0 = kl_adjoint_profile_at_zero(n).artin();
    int found = -1;
    for (int k = 0; k <= dim; ++k) {
        if (k % n != 0) continue; // Swan = k/n must be integral
        long long a_inf = dim + k / n;
        if (a0 + a_inf == 2LL * (n * n - 1)) {
            if (found >= 0) throw std::logic_error("adjoint slope multiplicity not unique");
            found = k;
        }
    }
    if (found < 0) throw std::logic_error("no adjoint slope multiplicity satisfies the identity");
    return SlopeProfile(dim, 0, {{Rat(1, n), found}, {Rat(0), dim - found}});
}

} // namespace rigidity::conductor
