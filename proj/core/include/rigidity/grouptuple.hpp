#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

namespace rigidity::grouptuple {

using Perm = std::vector<int>;

Perm perm_identity(int degree);
Perm perm_compose(const Perm& p, const Perm& q); // (p*q)(x) = p(q(x))
Perm perm_inverse(const Perm& p);
int perm_order(const Perm& p);
bool is_permutation(const Perm& p, int degree);

/// Finite permutation group from generators; the element list is closed by
/// breadth-first multiplication and capped (default 200000 elements).
class PermGroup {
public:
    PermGroup(int degree, std::vector<Perm> generators, size_t element_cap = 200000);

    int degree() const { return degree_; }
    const std::vector<Perm>& generators() const { return generators_; }
    const std::vector<Perm>& elements() const { return elements_; } // sorted
    size_t order() const { return elements_.size(); }

    int element_id(const Perm& p) const; // -1 if absent
    bool contains(const Perm& p) const { return element_id(p) >= 0; }

    bool has_trivial_center() const;

private:
    int degree_;
    std::vector<Perm> generators_;
    std::vector<Perm> elements_;
    std::unordered_map<std::string, int> index_;

    static std::string key(const Perm& p);
};

struct ConjClass {
    Perm representative;      // lexicographically minimal member
    std::vector<int> members; // sorted element ids
    int order = 0;            // common element order
    std::string label;        // "2A" style
    std::string canonical;    // "o2-s15-0" style
};

/// Classes sorted by (element order, class size, minimal representative);
/// labels are assigned in that order.
std::vector<ConjClass> conjugacy_classes(const PermGroup& g);

/// Accepts "2A" or "o2-s15-0" labels against a class list.
int find_class(const std::vector<ConjClass>& classes, const std::string& label);

struct TupleOptions {
    unsigned long long work_cap = 10000000ULL;  // product of class sizes scanned
    size_t solution_cap = 2000000;              // solutions materialized for orbits
};

/// Number of tuples (g_1..g_n) in C_1 x ... x C_n with product 1.
long long count_solutions(const PermGroup& g, const std::vector<ConjClass>& classes,
                          const std::vector<int>& tuple, const TupleOptions& opts = {});

/// Orbits of simultaneous conjugation on the solution set.
long long orbit_count(const PermGroup& g, const std::vector<ConjClass>& classes,
                      const std::vector<int>& tuple, const TupleOptions& opts = {});

/// Closure of the tuple equals the whole group.
bool generates(const PermGroup& g, const std::vector<Perm>& tuple);

struct TupleReport {
    long long solution_count = 0;
    long long orbit_count = 0;
    bool all_generate = false;
    bool rigid = false; // one orbit of generating solutions
    bool center_trivial = false;
    std::vector<bool> rational; // per tuple entry
};

TupleReport is_rigid_tuple(const PermGroup& g, const std::vector<ConjClass>& classes,
                           const std::vector<int>& tuple, const TupleOptions& opts = {});

/// Power-map rationality: g^k stays in the class for every k coprime to the
/// element order (equivalent to rationality of all character values).
bool is_rational_class(const PermGroup& g, const ConjClass& c);

/// Identity-coefficient of the iterated class-sum product in the center of
/// the group algebra; an independent route to count_solutions.
long long class_algebra_count(const PermGroup& g, const std::vector<ConjClass>& classes,
                              const std::vector<int>& tuple);

} // namespace rigidity::grouptuple
