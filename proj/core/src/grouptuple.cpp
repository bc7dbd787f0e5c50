#include "rigidity/grouptuple.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace rigidity::grouptuple {

Perm perm_identity(int degree) {
    Perm p(degree);
    std::iota(p.begin(), p.end(), 0);
    return p;
}

Perm perm_compose(const Perm& p, const Perm& q) {
    Perm r(p.size());
    for (size_t i = 0; i < p.size(); ++i) r[i] = p[q[i]];
    return r;
}

Perm perm_inverse(const Perm& p) {
    Perm r(p.size());
    for (size_t i = 0; i < p.size(); ++i) r[p[i]] = static_cast<int>(i);
    return r;
}

int perm_order(const Perm& p) {
    Perm cur = p;
    Perm id = perm_identity(static_cast<int>(p.size()));
    int k = 1;
    while (cur != id) {
        cur = perm_compose(cur, p);
        ++k;
        if (k > 1000000) throw std::logic_error("runaway permutation order");
    }
    return k;
}

bool is_permutation(const Perm& p, int degree) {
    if (static_cast<int>(p.size()) != degree) return false;
    std::vector<bool> seen(degree, false);
    for (int v : p) {
        if (v < 0 || v >= degree || seen[v]) return false;
        seen[v] = true;
    }
    return true;
}

std::string PermGroup::key(const Perm& p) {
    std::string s;
    s.reserve(p.size() * 2);
    for (int v : p) {
        s.push_back(static_cast<char>(v & 0xff));
        s.push_back(static_cast<char>((v >> 8) & 0xff));
    }
    return s;
}

PermGroup::PermGroup(int degree, std::vector<Perm> generators, size_t element_cap)
    : degree_(degree), generators_(std::move(generators)) {
    if (degree <= 0) throw std::invalid_argument("degree must be positive");
    for (const Perm& g : generators_)
        if (!is_permutation(g, degree)) throw std::invalid_argument("generator is not a permutation");

    std::set<Perm> seen;
    std::vector<Perm> frontier{perm_identity(degree)};
    seen.insert(frontier[0]);
    while (!frontier.empty()) {
        std::vector<Perm> next;
        for (const Perm& e : frontier)
            for (const Perm& g : generators_) {
                Perm prod = perm_compose(e, g);
                if (seen.insert(prod).second) {
                    if (seen.size() > element_cap)
                        throw std::runtime_error("group order exceeds element cap of " +
                                                 std::to_string(element_cap));
                    next.push_back(std::move(prod));
                }
            }
        frontier = std::move(next);
    }
    elements_.assign(seen.begin(), seen.end());
    for (size_t i = 0; i < elements_.size(); ++i) index_[key(elements_[i])] = static_cast<int>(i);
}

int PermGroup::element_id(const Perm& p) const {
    auto it = index_.find(key(p));
    return it == index_.end() ? -1 : it->second;
}

bool PermGroup::has_trivial_center() const {
    for (const Perm& e : elements_) {
        bool central = true;
        for (const Perm& g : generators_)
            if (perm_compose(e, g) != perm_compose(g, e)) {
                central = false;
                break;
            }
        if (central && e != perm_identity(degree_)) return false;
    }
    return true;
}

std::vector<ConjClass> conjugacy_classes(const PermGroup& g) {
    size_t n = g.order();
    std::vector<int> cls(n, -1);
    std::vector<ConjClass> out;
    for (size_t start = 0; start < n; ++start) {
        if (cls[start] >= 0) continue;
        int id = static_cast<int>(out.size());
        std::vector<int> members{static_cast<int>(start)};
        cls[start] = id;
        for (size_t q = 0; q < members.size(); ++q) {
            const Perm& e = g.elements()[members[q]];
            for (const Perm& h : g.generators()) {
                Perm conj = perm_compose(perm_compose(h, e), perm_inverse(h));
                int cid = g.element_id(conj);
                if (cls[cid] < 0) {
                    cls[cid] = id;
                    members.push_back(cid);
                }
            }
        }
        std::sort(members.begin(), members.end());
        ConjClass c;
        c.members = std::move(members);
        c.representative = g.elements()[c.members.front()];
        c.order = perm_order(c.representative);
        out.push_back(std::move(c));
    }
    std::sort(out.begin(), out.end(), [&](const ConjClass& a, const ConjClass& b) {
        if (a.order != b.order) return a.order < b.order;
        if (a.members.size() != b.members.size()) return a.members.size() < b.members.size();
        return a.representative < b.representative;
    });
    std::map<int, int> per_order;
    std::map<std::pair<int, size_t>, int> per_order_size;
    for (auto& c : out) {
        int k = per_order[c.order]++;
        c.label = std::to_string(c.order) + static_cast<char>('A' + k);
        int j = per_order_size[{c.order, c.members.size()}]++;
        c.canonical = "o" + std::to_string(c.order) + "-s" + std::to_string(c.members.size()) + "-" +
                      std::to_string(j);
    }
    return out;
}

int find_class(const std::vector<ConjClass>& classes, const std::string& label) {
    for (size_t i = 0; i < classes.size(); ++i)
        if (classes[i].label == label || classes[i].canonical == label) return static_cast<int>(i);
    throw std::invalid_argument("no conjugacy class labelled " + label);
}

namespace {

void check_work(const std::vector<ConjClass>& classes, const std::vector<int>& tuple,
                const TupleOptions& opts) {
    unsigned long long work = 1;
    for (size_t i = 0; i + 1 < tuple.size(); ++i) {
        work *= classes[tuple[i]].members.size();
        if (work > opts.work_cap)
            throw std::runtime_error("tuple work cap of " + std::to_string(opts.work_cap) +
                                     " exceeded");
    }
}

// Enumerates solutions of g_1 ... g_n = 1 as id-tuples.
std::vector<std::vector<int>> enumerate_solutions(const PermGroup& g,
                                                  const std::vector<ConjClass>& classes,
                                                  const std::vector<int>& tuple,
                                                  const TupleOptions& opts) {
    if (tuple.empty()) throw std::invalid_argument("tuple must be nonempty");
    for (int t : tuple)
        if (t < 0 || t >= static_cast<int>(classes.size()))
            throw std::invalid_argument("class index out of range");
    check_work(classes, tuple, opts);

    size_t n = tuple.size();
    const ConjClass& last = classes[tuple[n - 1]];
    std::vector<bool> in_last(g.order(), false);
    for (int id : last.members) in_last[id] = true;

    std::vector<std::vector<int>> sols;
    std::vector<size_t> idx(n - 1, 0);
    std::vector<Perm> prefix(n); // prefix[k] = product of first k entries
    prefix[0] = perm_identity(g.degree());

    if (n == 1) {
        int id = g.element_id(perm_identity(g.degree()));
        if (in_last[id]) sols.push_back({id});
        return sols;
    }

    size_t k = 0;
    for (;;) {
        while (k < n - 1) {
            const ConjClass& c = classes[tuple[k]];
            prefix[k + 1] = perm_compose(prefix[k], g.elements()[c.members[idx[k]]]);
            ++k;
        }
        Perm g_last = perm_inverse(prefix[n - 1]);
        int id = g.element_id(g_last);
        if (in_last[id]) {
            std::vector<int> sol(n);
            for (size_t i = 0; i < n - 1; ++i) sol[i] = classes[tuple[i]].members[idx[i]];
            sol[n - 1] = id;
            if (sols.size() >= opts.solution_cap)
                throw std::runtime_error("solution cap of " + std::to_string(opts.solution_cap) +
                                         " exceeded");
            sols.push_back(std::move(sol));
        }
        // Advance; positions above the incremented one were reset on the way
        // down and get re-extended by the loop head.
        for (;;) {
            if (k == 0) return sols;
            --k;
            if (++idx[k] < classes[tuple[k]].members.size()) break;
            idx[k] = 0;
        }
    }
}

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

} // namespace

long long count_solutions(const PermGroup& g, const std::vector<ConjClass>& classes,
                          const std::vector<int>& tuple, const TupleOptions& opts) {
    return static_cast<long long>(enumerate_solutions(g, classes, tuple, opts).size());
}

long long orbit_count(const PermGroup& g, const std::vector<ConjClass>& classes,
                      const std::vector<int>& tuple, const TupleOptions& opts) {
    auto sols = enumerate_solutions(g, classes, tuple, opts);
    if (sols.empty()) return 0;

    std::map<std::vector<int>, int> index;
    for (size_t i = 0; i < sols.size(); ++i) index[sols[i]] = static_cast<int>(i);
    UnionFind uf(sols.size());
    size_t n = tuple.size();
    for (size_t i = 0; i < sols.size(); ++i) {
        for (const Perm& h : g.generators()) {
            Perm hinv = perm_inverse(h);
            std::vector<int> img(n);
            for (size_t q = 0; q < n; ++q) {
                Perm c = perm_compose(perm_compose(h, g.elements()[sols[i][q]]), hinv);
                img[q] = g.element_id(c);
            }
            auto it = index.find(img);
            if (it == index.end()) throw std::logic_error("conjugate left the solution set");
            uf.unite(static_cast<int>(i), it->second);
        }
    }
    std::set<int> roots;
    for (size_t i = 0; i < sols.size(); ++i) roots.insert(uf.find(static_cast<int>(i)));
    return static_cast<long long>(roots.size());
}

bool generates(const PermGroup& g, const std::vector<Perm>& tuple) {
    for (const Perm& p : tuple)
        if (!g.contains(p)) throw std::invalid_argument("tuple element not in group");
    std::set<Perm> seen{perm_identity(g.degree())};
    std::vector<Perm> frontier(seen.begin(), seen.end());
    while (!frontier.empty()) {
        std::vector<Perm> next;
        for (const Perm& e : frontier)
            for (const Perm& t : tuple) {
                Perm prod = perm_compose(e, t);
                if (seen.insert(prod).second) next.push_back(std::move(prod));
            }
        frontier = std::move(next);
    }
    return seen.size() == g.order();
}

bool is_rational_class(const PermGroup& g, const ConjClass& c) {
    std::set<int> member_set(c.members.begin(), c.members.end());
    int ord = c.order;
    Perm power = c.representative;
    for (int k = 2; k <= ord; ++k) {
        power = perm_compose(power, c.representative); // representative^k
        if (std::gcd(k, ord) != 1) continue;
        if (!member_set.count(g.element_id(power))) return false;
    }
    return true;
}

TupleReport is_rigid_tuple(const PermGroup& g, const std::vector<ConjClass>& classes,
                           const std::vector<int>& tuple, const TupleOptions& opts) {
    TupleReport rep;
    rep.center_trivial = g.has_trivial_center();
    auto sols = enumerate_solutions(g, classes, tuple, opts);
    rep.solution_count = static_cast<long long>(sols.size());
    rep.orbit_count = sols.empty() ? 0 : orbit_count(g, classes, tuple, opts);

    rep.all_generate = !sols.empty();
    for (const auto& sol : sols) {
        std::vector<Perm> t;
        t.reserve(sol.size());
        for (int id : sol) t.push_back(g.elements()[id]);
        if (!generates(g, t)) {
            rep.all_generate = false;
            break;
        }
    }
    rep.rigid = rep.orbit_count == 1 && rep.all_generate;
    for (int ci : tuple) rep.rational.push_back(is_rational_class(g, classes[ci]));
    return rep;
}

long long class_algebra_count(const PermGroup& g, const std::vector<ConjClass>& classes,
                              const std::vector<int>& tuple) {
    if (tuple.empty()) throw std::invalid_argument("tuple must be nonempty");
    size_t nc = classes.size();
    std::vector<int> class_of(g.order(), -1);
    for (size_t c = 0; c < nc; ++c)
        for (int id : classes[c].members) class_of[id] = static_cast<int>(c);

    // cur[d] = number of ways to write a fixed representative of class d as a
    // product over the processed prefix; constant across representatives.
    std::vector<long long> cur(nc, 0);
    cur[tuple[0]] = 1;
    for (size_t step = 1; step < tuple.size(); ++step) {
        const ConjClass& k = classes[tuple[step]];
        std::vector<bool> in_k(g.order(), false);
        for (int id : k.members) in_k[id] = true;
        std::vector<long long> next(nc, 0);
        for (size_t d = 0; d < nc; ++d) {
            const Perm& rep = classes[d].representative;
            long long acc = 0;
            for (size_t c = 0; c < nc; ++c) {
                if (cur[c] == 0) continue;
                long long ways = 0; // #{x in C_c : x^{-1} rep in C_k}
                for (int xid : classes[c].members) {
                    Perm y = perm_compose(perm_inverse(g.elements()[xid]), rep);
                    if (in_k[g.element_id(y)]) ++ways;
                }
                acc += cur[c] * ways;
            }
            next[d] = acc;
        }
        cur = std::move(next);
    }
    int identity_class = class_of[g.element_id(perm_identity(g.degree()))];
    return cur[identity_class];
}

} // namespace rigidity::grouptuple
