#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace rigidity::rootsys {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

/// Cartan family plus rank, e.g. {Family::E, 8}.
struct RootSystemType {
    Family family;
    int rank;

    std::string name() const { return std::string(1, static_cast<char>(family)) + std::to_string(rank); }
};

/// Parses "A2", "G2", "E8", ... Throws std::invalid_argument on junk or an
/// inadmissible rank (A: >=1, B: >=2, C: >=2, D: >=3, E: 6-8, F: 4, G: 2).
RootSystemType parse_type(const std::string& name);
bool rank_admissible(Family family, int rank);

/// A root in simple-root coordinates (integer vector of length rank).
/// Members of a root system are either all-nonnegative or all-nonpositive.
struct Root {
    std::vector<int> coords;

    bool operator==(const Root& o) const { return coords == o.coords; }
    bool operator<(const Root& o) const { return coords < o.coords; }
    bool is_positive() const;
    Root negated() const;
};

/// A cocharacter in fundamental-coweight coordinates: entry i is the pairing
/// with the i-th simple root. Dominance is a sign check.
struct Coweight {
    std::vector<long long> pairings;

    bool operator==(const Coweight& o) const { return pairings == o.pairings; }
    bool is_dominant() const;
};

/// Finite root system generated from the Bourbaki Cartan matrix by closing
/// the simple roots under simple reflections. Immutable after construction;
/// all enumeration orders are deterministic (roots sorted lexicographically).
///
/// Cartan convention: cartan[i][j] = <alpha_j, alpha_i^vee>.
class RootSystem {
public:
    explicit RootSystem(RootSystemType rtype);

    const RootSystemType& type() const { return rtype_; }
    int rank() const { return rtype_.rank; }
    const std::vector<std::vector<int>>& cartan() const { return cartan_; }
    const std::vector<Root>& roots() const { return roots_; }
    const std::vector<Root>& positive_roots() const { return positive_roots_; }
    const Root& highest_root() const { return highest_root_; }
    long long weyl_order() const { return weyl_order_; }
    int dimension() const { return static_cast<int>(roots_.size()) + rtype_.rank; }

    Root simple_root(int i) const;

    /// Index of r in the sorted root list; throws if r is not a root.
    int root_index(const Root& r) const;
    bool is_root(const Root& r) const;

    /// s_i(r) = r - <r, alpha_i^vee> alpha_i. Throws if r is not a root.
    Root reflect(int i, const Root& r) const;

    /// Reflection by an arbitrary root beta (used for s_theta).
    Root reflect_by(const Root& beta, const Root& r) const;

    /// <r, beta^vee> for roots r, beta.
    int pair_with_coroot(const Root& r, const Root& beta) const;

    /// Half squared length d_i = (alpha_i, alpha_i)/2 in the normalization
    /// where short roots of the component have d = 1.
    const std::vector<int>& half_norms() const { return half_norms_; }
    int half_norm(const Root& r) const;

    /// Coordinates of r^vee in the simple-coroot basis (always integral).
    std::vector<int> coroot_coords(const Root& r) const;

    /// <lambda, r> = sum_i coords(r)_i * pairings(lambda)_i.
    long long pair(const Coweight& lambda, const Root& r) const;

    /// <2rho, lambda> = sum over positive roots of <lambda, alpha>.
    /// Requires lambda dominant.
    long long dim_gr(const Coweight& lambda) const;

    /// s_i acting on a coweight: (s_i lambda)_j = lambda_j - lambda_i * cartan[i][j].
    Coweight reflect_coweight(int i, const Coweight& lambda) const;

    /// The unique dominant coweight in the W-orbit of lambda.
    Coweight dominant_representative(Coweight lambda) const;

    /// Converts coroot-lattice coordinates (lambda = sum c_i alpha_i^vee)
    /// to fundamental-coweight coordinates.
    Coweight coweight_from_coroot_coords(const std::vector<long long>& c) const;

private:
    RootSystemType rtype_;
    std::vector<std::vector<int>> cartan_;
    std::vector<int> half_norms_;
    std::vector<Root> roots_;
    std::vector<Root> positive_roots_;
    Root highest_root_;
    long long weyl_order_ = 0;

    long long inner_product2(const Root& a, const Root& b) const; // (a,b) in the d-scaling
};

} // namespace rigidity::rootsys
