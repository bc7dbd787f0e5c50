#include "rigidity/rootsys.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace rigidity::rootsys {

bool rank_admissible(Family family, int rank) {
    switch (family) {
        case Family::A: return rank >= 1;
        case Family::B: return rank >= 2;
        case Family::C: return rank >= 2;
        case Family::D: return rank >= 3;
        case Family::E: return rank >= 6 && rank <= 8;
        case Family::F: return rank == 4;
        case Family::G: return rank == 2;
    }
    return false;
}

RootSystemType parse_type(const std::string& name) {
    if (name.size() < 2) throw std::invalid_argument("bad root system name: " + name);
    char f = name[0];
    if (f < 'A' || f > 'G') throw std::invalid_argument("bad family letter in: " + name);
    int rank = 0;
    for (size_t k = 1; k < name.size(); ++k) {
        if (name[k] < '0' || name[k] > '9') throw std::invalid_argument("bad rank in: " + name);
        rank = rank * 10 + (name[k] - '0');
    }
    RootSystemType t{static_cast<Family>(f), rank};
    if (!rank_admissible(t.family, t.rank))
        throw std::invalid_argument("rank " + std::to_string(rank) + " not admissible for family " +
                                    std::string(1, f));
    return t;
}

bool Root::is_positive() const {
    bool nonzero = false;
    for (int c : coords) {
        if (c < 0) return false;
        if (c > 0) nonzero = true;
    }
    return nonzero;
}

Root Root::negated() const {
    Root r = *this;
    for (int& c : r.coords) c = -c;
    return r;
}

bool Coweight::is_dominant() const {
    for (long long p : pairings)
        if (p < 0) return false;
    return true;
}

namespace {

// Bourbaki Cartan matrices, cartan[i][j] = <alpha_j, alpha_i^vee> (0-based nodes).
std::vector<std::vector<int>> bourbaki_cartan(RootSystemType t) {
    int n = t.rank;
    std::vector<std::vector<int>> c(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i) c[i][i] = 2;
    auto chain = [&](int i, int j) { c[i][j] = c[j][i] = -1; };
    switch (t.family) {
        case Family::A:
            for (int i = 0; i + 1 < n; ++i) chain(i, i + 1);
            break;
        case Family::B:
            for (int i = 0; i + 1 < n; ++i) chain(i, i + 1);
            c[n - 2][n - 1] = -1;
            c[n - 1][n - 2] = -2; // alpha_n short
            break;
        case Family::C:
            for (int i = 0; i + 1 < n; ++i) chain(i, i + 1);
            c[n - 2][n - 1] = -2; // alpha_n long
            c[n - 1][n - 2] = -1;
            break;
        case Family::D:
            for (int i = 0; i + 2 < n; ++i) chain(i, i + 1);
            chain(n - 3, n - 1);
            break;
        case Family::E:
            // Bourbaki numbering: branch node alpha_4 carries alpha_2.
            chain(0, 2);
            chain(2, 3);
            chain(1, 3);
            chain(3, 4);
            chain(4, 5);
            if (n >= 7) chain(5, 6);
            if (n >= 8) chain(6, 7);
            break;
        case Family::F:
            chain(0, 1);
            chain(2, 3);
            c[1][2] = -1;
            c[2][1] = -2; // alpha_1, alpha_2 long; alpha_3, alpha_4 short
            break;
        case Family::G:
            c[0][1] = -3; // alpha_1 short, alpha_2 long
            c[1][0] = -1;
            break;
    }
    return c;
}

std::vector<int> bourbaki_half_norms(RootSystemType t) {
    int n = t.rank;
    std::vector<int> d(n, 1);
    switch (t.family) {
        case Family::B:
            for (int i = 0; i + 1 < n; ++i) d[i] = 2;
            break;
        case Family::C:
            d[n - 1] = 2;
            break;
        case Family::F:
            d[0] = d[1] = 2;
            break;
        case Family::G:
            d[1] = 3;
            break;
        default:
            break;
    }
    return d;
}

long long classical_weyl_order(RootSystemType t) {
    auto fact = [](int m) {
        long long r = 1;
        for (int i = 2; i <= m; ++i) r *= i;
        return r;
    };
    int n = t.rank;
    switch (t.family) {
        case Family::A: return fact(n + 1);
        case Family::B:
        case Family::C: return fact(n) << n;
        case Family::D: return fact(n) << (n - 1);
        case Family::E: return n == 6 ? 51840LL : (n == 7 ? 2903040LL : 696729600LL);
        case Family::F: return 1152;
        case Family::G: return 12;
    }
    return 0;
}

} // namespace

RootSystem::RootSystem(RootSystemType rtype) : rtype_(rtype) {
    if (!rank_admissible(rtype.family, rtype.rank))
        throw std::invalid_argument("rank " + std::to_string(rtype.rank) +
                                    " not admissible for family " +
                                    std::string(1, static_cast<char>(rtype.family)));
    cartan_ = bourbaki_cartan(rtype);
    half_norms_ = bourbaki_half_norms(rtype);
    int n = rtype.rank;

    // Symmetrizability sanity: cartan[i][j] * d_i == cartan[j][i] * d_j.
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (static_cast<long long>(cartan_[i][j]) * half_norms_[i] !=
                static_cast<long long>(cartan_[j][i]) * half_norms_[j])
                throw std::logic_error("Cartan data not symmetrizable");

    // Close the simple roots under simple reflections.
    std::set<std::vector<int>> seen;
    std::vector<Root> frontier;
    for (int i = 0; i < n; ++i) {
        std::vector<int> e(n, 0);
        e[i] = 1;
        seen.insert(e);
        frontier.push_back(Root{e});
    }
    while (!frontier.empty()) {
        std::vector<Root> next;
        for (const Root& r : frontier) {
            for (int i = 0; i < n; ++i) {
                long long p = 0;
                for (int j = 0; j < n; ++j) p += static_cast<long long>(cartan_[i][j]) * r.coords[j];
                Root s = r;
                s.coords[i] -= static_cast<int>(p);
                if (seen.insert(s.coords).second) next.push_back(s);
            }
        }
        frontier = std::move(next);
    }
    roots_.reserve(seen.size());
    for (const auto& v : seen) roots_.push_back(Root{v});
    std::sort(roots_.begin(), roots_.end());

    for (const Root& r : roots_) {
        bool pos = true, neg = true;
        for (int c : r.coords) {
            if (c > 0) neg = false;
            if (c < 0) pos = false;
        }
        if (!pos && !neg) throw std::logic_error("mixed-sign root generated");
        if (pos) positive_roots_.push_back(r);
    }
    if (roots_.size() != 2 * positive_roots_.size())
        throw std::logic_error("root count not twice positive count");

    // Highest root: the unique positive root coefficientwise above all others.
    const Root* best = nullptr;
    for (const Root& r : positive_roots_) {
        bool dominates = true;
        for (const Root& s : positive_roots_) {
            for (int j = 0; j < n; ++j)
                if (s.coords[j] > r.coords[j]) {
                    dominates = false;
                    break;
                }
            if (!dominates) break;
        }
        if (dominates) {
            if (best) throw std::logic_error("highest root not unique");
            best = &r;
        }
    }
    if (!best) throw std::logic_error("no highest root found");
    highest_root_ = *best;

    weyl_order_ = classical_weyl_order(rtype);
}

Root RootSystem::simple_root(int i) const {
    if (i < 0 || i >= rank()) throw std::invalid_argument("simple root index out of range");
    std::vector<int> e(rank(), 0);
    e[i] = 1;
    return Root{e};
}

int RootSystem::root_index(const Root& r) const {
    auto it = std::lower_bound(roots_.begin(), roots_.end(), r);
    if (it == roots_.end() || !(*it == r)) throw std::invalid_argument("not a root of " + rtype_.name());
    return static_cast<int>(it - roots_.begin());
}

bool RootSystem::is_root(const Root& r) const {
    auto it = std::lower_bound(roots_.begin(), roots_.end(), r);
    return it != roots_.end() && *it == r;
}

Root RootSystem::reflect(int i, const Root& r) const {
    if (i < 0 || i >= rank()) throw std::invalid_argument("simple reflection index out of range");
    root_index(r); // membership check
    long long p = 0;
    for (int j = 0; j < rank(); ++j) p += static_cast<long long>(cartan_[i][j]) * r.coords[j];
    Root s = r;
    s.coords[i] -= static_cast<int>(p);
    return s;
}

long long RootSystem::inner_product2(const Root& a, const Root& b) const {
    // (a, b) with (alpha_i, alpha_j) = cartan[i][j] * d_i.
    long long acc = 0;
    for (int i = 0; i < rank(); ++i) {
        if (a.coords[i] == 0) continue;
        for (int j = 0; j < rank(); ++j)
            acc += static_cast<long long>(a.coords[i]) * b.coords[j] * cartan_[i][j] * half_norms_[i];
    }
    return acc;
}

int RootSystem::half_norm(const Root& r) const {
    long long n2 = inner_product2(r, r);
    if (n2 <= 0 || n2 % 2 != 0) throw std::invalid_argument("not a root (bad norm)");
    return static_cast<int>(n2 / 2);
}

int RootSystem::pair_with_coroot(const Root& r, const Root& beta) const {
    long long num = inner_product2(r, beta);
    long long db = half_norm(beta);
    if (num % db != 0) throw std::logic_error("non-integral root/coroot pairing");
    return static_cast<int>(num / db);
}

Root RootSystem::reflect_by(const Root& beta, const Root& r) const {
    int p = pair_with_coroot(r, beta);
    Root s = r;
    for (int j = 0; j < rank(); ++j) s.coords[j] -= p * beta.coords[j];
    return s;
}

std::vector<int> RootSystem::coroot_coords(const Root& r) const {
    int dr = half_norm(r);
    std::vector<int> c(rank());
    for (int j = 0; j < rank(); ++j) {
        long long num = static_cast<long long>(r.coords[j]) * half_norms_[j];
        if (num % dr != 0) throw std::logic_error("non-integral coroot coordinates");
        c[j] = static_cast<int>(num / dr);
    }
    return c;
}

long long RootSystem::pair(const Coweight& lambda, const Root& r) const {
    if (static_cast<int>(lambda.pairings.size()) != rank() ||
        static_cast<int>(r.coords.size()) != rank())
        throw std::invalid_argument("dimension mismatch in pairing");
    long long acc = 0;
    for (int i = 0; i < rank(); ++i) acc += lambda.pairings[i] * r.coords[i];
    return acc;
}

long long RootSystem::dim_gr(const Coweight& lambda) const {
    if (!lambda.is_dominant()) throw std::invalid_argument("coweight not dominant");
    long long acc = 0;
    for (const Root& a : positive_roots_) acc += pair(lambda, a);
    return acc;
}

Coweight RootSystem::reflect_coweight(int i, const Coweight& lambda) const {
    if (i < 0 || i >= rank()) throw std::invalid_argument("simple reflection index out of range");
    Coweight m = lambda;
    long long li = lambda.pairings[i];
    for (int j = 0; j < rank(); ++j) m.pairings[j] -= li * cartan_[i][j];
    return m;
}

Coweight RootSystem::dominant_representative(Coweight lambda) const {
    if (static_cast<int>(lambda.pairings.size()) != rank())
        throw std::invalid_argument("coweight rank mismatch");
    for (;;) {
        int neg = -1;
        for (int i = 0; i < rank(); ++i)
            if (lambda.pairings[i] < 0) {
                neg = i;
                break;
            }
        if (neg < 0) return lambda;
        lambda = reflect_coweight(neg, lambda);
    }
}

Coweight RootSystem::coweight_from_coroot_coords(const std::vector<long long>& c) const {
    if (static_cast<int>(c.size()) != rank()) throw std::invalid_argument("coroot coords rank mismatch");
    Coweight l;
    l.pairings.assign(rank(), 0);
    for (int j = 0; j < rank(); ++j)
        for (int i = 0; i < rank(); ++i) l.pairings[j] += c[i] * cartan_[i][j];
    return l;
}

} // namespace rigidity::rootsys
