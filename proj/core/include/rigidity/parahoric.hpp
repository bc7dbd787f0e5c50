#pragma once

#include "rigidity/rational.hpp"
#include "rigidity/rootsys.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace rigidity::parahoric {

/// Extended Dynkin diagram: node 0 is the affine node for -theta + 1; node i
/// (1 <= i <= r) is the i-th simple root. Bonds are stored as the off-diagonal
/// entries of the affine Cartan matrix a[i][j] = <alpha_j, alpha_i^vee>.
class ExtendedDynkin {
public:
    explicit ExtendedDynkin(std::shared_ptr<const rootsys::RootSystem> base);

    const rootsys::RootSystem& base() const { return *base_; }
    std::shared_ptr<const rootsys::RootSystem> base_ptr() const { return base_; }
    int node_count() const { return base_->rank() + 1; }

    /// Marks n_0..n_r: n_0 = 1, theta = sum n_i alpha_i.
    const std::vector<int>& marks() const { return marks_; }

    /// Affine Cartan entries; a(i,i) = 2, a(i,j) in {0,-1,-2,-3} off-diagonal
    /// except the A1 tilde double link where a(0,1) = a(1,0) = -2.
    int cartan_entry(int i, int j) const { return acartan_[i][j]; }

    /// Bond multiplicity a(i,j) * a(j,i) between distinct nodes (0..4).
    int bond_multiplicity(int i, int j) const;

    /// Half squared length of the root at a node (node 0 carries -theta).
    int half_norm(int i) const { return dvals_[i]; }

    bool adjacent(int i, int j) const { return i != j && acartan_[i][j] != 0; }
    std::vector<int> neighbors(int i) const;

    /// All node permutations preserving the affine Cartan matrix.
    std::vector<std::vector<int>> automorphisms() const;

private:
    std::shared_ptr<const rootsys::RootSystem> base_;
    std::vector<int> marks_;
    std::vector<std::vector<int>> acartan_;
    std::vector<int> dvals_;
};

/// A parahoric type: the subset J of extended-diagram nodes that survive into
/// the Levi. J = {1..r} is hyperspecial G(O); J = {} is the Iwahori.
struct ParahoricType {
    std::shared_ptr<const ExtendedDynkin> diagram;
    std::set<int> kept; // J, a proper subset of {0..r}

    ParahoricType(std::shared_ptr<const ExtendedDynkin> d, std::set<int> J);
};

/// One graded piece V_{i/m}: its dimension and the affine roots it carries.
/// A zero gradient entry stands for the full torus slice t^n Lie(T).
struct MPStep {
    int dim = 0;
    std::vector<std::pair<std::vector<int>, int>> affine_roots; // (gradient coords, level n)
};

/// Moy-Prasad filtration data at the barycenter of the facet of J.
struct MPGrading {
    int m = 0;                    // period: sum of marks over removed nodes
    int m_kept_sum = 0;           // sum of marks over kept nodes (the other convention)
    std::vector<Rat> barycenter;  // <alpha_i, x_P>, length r
    Rat affine_node_value;        // 1 - <theta, x_P>; 0 if 0 in J else 1/m
    std::vector<MPStep> steps;    // steps 0..m-1, one full period

    int total_dimension() const;
};

struct DiagramComponent {
    rootsys::Family family;
    int rank;

    bool operator==(const DiagramComponent& o) const { return family == o.family && rank == o.rank; }
    bool operator<(const DiagramComponent& o) const {
        if (family != o.family) return family < o.family;
        return rank < o.rank;
    }
    std::string name() const { return std::string(1, static_cast<char>(family)) + std::to_string(rank); }
};

std::shared_ptr<const ExtendedDynkin> extended_diagram(std::shared_ptr<const rootsys::RootSystem> rs);

/// Root gradients at Moy-Prasad value 0: {alpha : <alpha, x_P> integral}.
/// Equals the subsystem generated by the kept simple nodes and -theta.
std::vector<rootsys::Root> levi_roots(const ParahoricType& pt);

/// [g(O) : Lie P] = (|Phi| - |Phi(Levi)|) / 2.
int relative_dimension(const ParahoricType& pt);

MPGrading mp_grading(const ParahoricType& pt);

/// dim V_{1/m}; for the hyperspecial type this is the first congruence
/// quotient g (x) t of dimension dim G.
int epipelagic_dim(const ParahoricType& pt);

/// Connected components of the induced subdiagram on `nodes`, identified
/// against the A-G templates. Throws if a component matches no template.
std::vector<DiagramComponent> classify_subdiagram(const ExtendedDynkin& d, const std::set<int>& nodes);

/// n with |Phi| = n * dim L_P, if the ratio is integral.
std::optional<long long> platonic_check(const ParahoricType& pt);

struct LeviInfo {
    std::vector<DiagramComponent> factors; // sorted
    int torus_rank = 0;                    // r - rank of the semisimple part
    std::string name() const;
};

LeviInfo levi_info(const ParahoricType& pt);

struct RigidityTuple {
    std::vector<ParahoricType> place_types;
    std::vector<int> reldims; // aligned with place_types, nondecreasing
    std::vector<LeviInfo> levis;
    int total = 0;
};

struct RigiditySearchOptions {
    int max_places = 4;
    bool dedup_by_automorphism = true;
    unsigned long long work_cap = 200000000ULL; // bound on tuple enumeration steps
    int jobs = 1;
};

/// All multisets of proper node subsets (one per place, up to extended-diagram
/// automorphism unless disabled) whose relative dimensions sum to dim G.
/// Deterministically sorted output.
std::vector<RigidityTuple> rigidity_search(std::shared_ptr<const rootsys::RootSystem> rs,
                                           int num_places,
                                           const RigiditySearchOptions& opts = {});

} // namespace rigidity::parahoric
