#include "rigidity/parahoric.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <thread>

namespace rigidity::parahoric {

using rootsys::Family;
using rootsys::Root;
using rootsys::RootSystem;

ExtendedDynkin::ExtendedDynkin(std::shared_ptr<const RootSystem> base) : base_(std::move(base)) {
    const RootSystem& rs = *base_;
    int r = rs.rank();
    const Root& theta = rs.highest_root();

    marks_.assign(r + 1, 0);
    marks_[0] = 1;
    for (int i = 0; i < r; ++i) marks_[i + 1] = theta.coords[i];

    dvals_.assign(r + 1, 0);
    dvals_[0] = rs.half_norm(theta);
    for (int i = 0; i < r; ++i) dvals_[i + 1] = rs.half_norms()[i];

    acartan_.assign(r + 1, std::vector<int>(r + 1, 0));
    for (int i = 0; i <= r; ++i) acartan_[i][i] = 2;
    for (int i = 1; i <= r; ++i)
        for (int j = 1; j <= r; ++j)
            if (i != j) acartan_[i][j] = rs.cartan()[i - 1][j - 1];
    Root mtheta = theta.negated();
    for (int j = 1; j <= r; ++j) {
        acartan_[0][j] = rs.pair_with_coroot(rs.simple_root(j - 1), mtheta);
        acartan_[j][0] = rs.pair_with_coroot(mtheta, rs.simple_root(j - 1));
    }

    // theta = sum n_i alpha_i with n_0 = 1, and all marks positive.
    for (int i = 0; i <= r; ++i)
        if (marks_[i] <= 0) throw std::logic_error("nonpositive extended mark");
}

int ExtendedDynkin::bond_multiplicity(int i, int j) const {
    if (i == j) return 0;
    return acartan_[i][j] * acartan_[j][i];
}

std::vector<int> ExtendedDynkin::neighbors(int i) const {
    std::vector<int> out;
    for (int j = 0; j < node_count(); ++j)
        if (adjacent(i, j)) out.push_back(j);
    return out;
}

std::vector<std::vector<int>> ExtendedDynkin::automorphisms() const {
    int n = node_count();
    std::vector<std::vector<int>> autos;
    std::vector<int> perm(n, -1);
    std::vector<bool> used(n, false);

    std::function<void(int)> rec = [&](int i) {
        if (i == n) {
            autos.push_back(perm);
            return;
        }
        for (int img = 0; img < n; ++img) {
            if (used[img]) continue;
            if (marks_[img] != marks_[i] || dvals_[img] != dvals_[i]) continue;
            bool ok = true;
            for (int j = 0; j < i && ok; ++j) {
                if (acartan_[i][j] != acartan_[img][perm[j]]) ok = false;
                if (acartan_[j][i] != acartan_[perm[j]][img]) ok = false;
            }
            if (!ok) continue;
            perm[i] = img;
            used[img] = true;
            rec(i + 1);
            used[img] = false;
            perm[i] = -1;
        }
    };
    rec(0);
    return autos;
}

ParahoricType::ParahoricType(std::shared_ptr<const ExtendedDynkin> d, std::set<int> J)
    : diagram(std::move(d)), kept(std::move(J)) {
    int n = diagram->node_count();
    for (int i : kept)
        if (i < 0 || i >= n) throw std::invalid_argument("parahoric node out of range");
    if (static_cast<int>(kept.size()) == n)
        throw std::invalid_argument("parahoric subset must be proper");
}

std::shared_ptr<const ExtendedDynkin> extended_diagram(std::shared_ptr<const RootSystem> rs) {
    return std::make_shared<const ExtendedDynkin>(std::move(rs));
}

namespace {

int mp_period(const ParahoricType& pt) {
    // Sum of marks over the REMOVED nodes. The kept-node sum would make the
    // Iwahori period 0 and break the barycenter condition; see the module docs.
    int m = 0;
    for (int i = 0; i < pt.diagram->node_count(); ++i)
        if (!pt.kept.count(i)) m += pt.diagram->marks()[i];
    return m;
}

// Residue of m * <alpha, x_P> for a root alpha: sum of coords over removed
// finite nodes.
long long barycenter_numerator(const ParahoricType& pt, const Root& a) {
    long long v = 0;
    int r = pt.diagram->base().rank();
    for (int j = 1; j <= r; ++j)
        if (!pt.kept.count(j)) v += a.coords[j - 1];
    return v;
}

} // namespace

std::vector<Root> levi_roots(const ParahoricType& pt) {
    const RootSystem& rs = pt.diagram->base();
    int m = mp_period(pt);
    std::vector<Root> out;
    for (const Root& a : rs.roots())
        if (barycenter_numerator(pt, a) % m == 0) out.push_back(a);
    return out;
}

int relative_dimension(const ParahoricType& pt) {
    const RootSystem& rs = pt.diagram->base();
    int total = static_cast<int>(rs.roots().size());
    int levi = static_cast<int>(levi_roots(pt).size());
    if ((total - levi) % 2 != 0) throw std::logic_error("odd root-count difference");
    return (total - levi) / 2;
}

MPGrading mp_grading(const ParahoricType& pt) {
    const RootSystem& rs = pt.diagram->base();
    int r = rs.rank();
    MPGrading g;
    g.m = mp_period(pt);
    g.m_kept_sum = 0;
    for (int i : pt.kept) g.m_kept_sum += pt.diagram->marks()[i];

    g.barycenter.resize(r);
    for (int j = 1; j <= r; ++j)
        g.barycenter[j - 1] = pt.kept.count(j) ? Rat(0) : Rat(1, g.m);

    Rat theta_pairing(0);
    const Root& theta = rs.highest_root();
    for (int j = 0; j < r; ++j) theta_pairing += Rat(theta.coords[j]) * g.barycenter[j];
    g.affine_node_value = Rat(1) - theta_pairing;
    Rat expected = pt.kept.count(0) ? Rat(0) : Rat(1, g.m);
    if (g.affine_node_value != expected)
        throw std::logic_error("affine-node barycenter inconsistency");

    g.steps.assign(g.m, MPStep{});
    g.steps[0].dim += r; // t^0 Lie(T)
    g.steps[0].affine_roots.push_back({std::vector<int>(r, 0), 0});
    for (const Root& a : rs.roots()) {
        long long v = barycenter_numerator(pt, a);
        long long i = ((v % g.m) + g.m) % g.m;
        long long n = (i - v) / g.m;
        g.steps[i].dim += 1;
        g.steps[i].affine_roots.push_back({a.coords, static_cast<int>(n)});
    }
    for (auto& st : g.steps)
        std::sort(st.affine_roots.begin(), st.affine_roots.end());

    if (g.total_dimension() != rs.dimension())
        throw std::logic_error("Moy-Prasad period does not exhaust dim G");
    return g;
}

int MPGrading::total_dimension() const {
    int t = 0;
    for (const auto& s : steps) t += s.dim;
    return t;
}

int epipelagic_dim(const ParahoricType& pt) {
    MPGrading g = mp_grading(pt);
    if (g.m == 1) return pt.diagram->base().dimension(); // V_1 = g (x) t
    return g.steps[1].dim;
}

namespace {

struct ComponentView {
    std::vector<int> nodes; // node ids in the parent diagram
    const ExtendedDynkin* d;

    int size() const { return static_cast<int>(nodes.size()); }
    int degree(int local) const {
        int deg = 0;
        for (int other : nodes)
            if (d->adjacent(nodes[local], other)) ++deg;
        return deg;
    }
    int mult(int a, int b) const { return d->bond_multiplicity(nodes[a], nodes[b]); }
    int dval(int local) const { return d->half_norm(nodes[local]); }
};

DiagramComponent classify_component(const ComponentView& c) {
    const int k = c.size();
    if (k == 1) return {Family::A, 1};

    int multi_edges = 0, triple = 0, quad = 0;
    int me_a = -1, me_b = -1;
    std::vector<int> degree(k, 0);
    for (int a = 0; a < k; ++a)
        for (int b = a + 1; b < k; ++b) {
            int m = c.mult(a, b);
            if (m == 0) continue;
            ++degree[a];
            ++degree[b];
            if (m > 1) {
                ++multi_edges;
                me_a = a;
                me_b = b;
                if (m == 3) ++triple;
                if (m >= 4) ++quad;
            }
        }
    auto fail = []() -> DiagramComponent {
        throw std::logic_error("subdiagram component matches no finite template");
    };
    if (quad > 0 || multi_edges > 1) return fail();

    int branch = -1, leaves = 0;
    for (int a = 0; a < k; ++a) {
        if (degree[a] > 3) return fail();
        if (degree[a] == 3) {
            if (branch >= 0) return fail();
            branch = a;
        }
        if (degree[a] == 1) ++leaves;
    }

    if (triple == 1) {
        if (k != 2) return fail();
        return {Family::G, 2};
    }

    if (multi_edges == 1) {
        if (branch >= 0) return fail();
        // Path with one double bond: B (short extremity), C (long extremity),
        // or F4 (interior double bond).
        bool a_end = degree[me_a] == 1, b_end = degree[me_b] == 1;
        if (!a_end && !b_end) {
            if (k == 4) return {Family::F, 4};
            return fail();
        }
        if (k == 2) return {Family::B, 2}; // B2 = C2, canonical name B2
        int ext = a_end ? me_a : me_b;
        int inner = a_end ? me_b : me_a;
        if (a_end && b_end) return fail(); // k >= 3 has one interior endpoint
        bool ext_short = c.dval(ext) < c.dval(inner);
        return {ext_short ? Family::B : Family::C, k};
    }

    // Simply-laced tree: path or one degree-3 fork.
    if (branch < 0) {
        if (leaves != 2) return fail();
        return {Family::A, k};
    }
    // Leg lengths from the fork.
    std::vector<int> legs;
    for (int nb = 0; nb < k; ++nb) {
        if (c.mult(branch, nb) == 0) continue;
        int len = 0, prev = branch, cur = nb;
        for (;;) {
            ++len;
            int next = -1;
            for (int x = 0; x < k; ++x)
                if (x != prev && c.mult(cur, x) != 0) next = x;
            if (next < 0) break;
            prev = cur;
            cur = next;
        }
        legs.push_back(len);
    }
    std::sort(legs.begin(), legs.end());
    if (legs.size() != 3 || legs[0] != 1) return fail();
    if (legs[1] == 1) return {Family::D, k}; // D_3 reported as A_3 below
    if (legs[1] == 2 && legs[2] == 2) return {Family::E, 6};
    if (legs[1] == 2 && legs[2] == 3) return {Family::E, 7};
    if (legs[1] == 2 && legs[2] == 4) return {Family::E, 8};
    return fail();
}

} // namespace

std::vector<DiagramComponent> classify_subdiagram(const ExtendedDynkin& d, const std::set<int>& nodes) {
    for (int i : nodes)
        if (i < 0 || i >= d.node_count()) throw std::invalid_argument("node out of range");

    std::vector<DiagramComponent> out;
    std::set<int> todo = nodes;
    while (!todo.empty()) {
        std::vector<int> comp;
        std::vector<int> stack{*todo.begin()};
        todo.erase(todo.begin());
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (auto it = todo.begin(); it != todo.end();) {
                if (d.adjacent(v, *it)) {
                    stack.push_back(*it);
                    it = todo.erase(it);
                } else {
                    ++it;
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        DiagramComponent dc = classify_component(ComponentView{comp, &d});
        if (dc.family == Family::D && dc.rank == 3) dc = {Family::A, 3};
        out.push_back(dc);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::optional<long long> platonic_check(const ParahoricType& pt) {
    const RootSystem& rs = pt.diagram->base();
    long long phi = static_cast<long long>(rs.roots().size());
    long long dim_levi = static_cast<long long>(levi_roots(pt).size()) + rs.rank();
    if (phi % dim_levi != 0) return std::nullopt;
    return phi / dim_levi;
}

std::string LeviInfo::name() const {
    std::string s;
    for (const auto& f : factors) {
        if (!s.empty()) s += "x";
        s += f.name();
    }
    if (factors.empty()) s = "T";
    if (torus_rank > 0 && !factors.empty()) s += "+T" + std::to_string(torus_rank);
    return s;
}

LeviInfo levi_info(const ParahoricType& pt) {
    LeviInfo info;
    info.factors = classify_subdiagram(*pt.diagram, pt.kept);
    int ss_rank = 0;
    for (const auto& f : info.factors) ss_rank += f.rank;
    info.torus_rank = pt.diagram->base().rank() - ss_rank;
    return info;
}

namespace {

struct SubsetClass {
    std::set<int> kept; // canonical representative under automorphisms
    int reldim = 0;
    LeviInfo levi;
};

std::set<int> canonical_subset(const std::set<int>& J, const std::vector<std::vector<int>>& autos) {
    std::set<int> best = J;
    for (const auto& p : autos) {
        std::set<int> img;
        for (int i : J) img.insert(p[i]);
        if (img < best) best = img;
    }
    return best;
}

} // namespace

std::vector<RigidityTuple> rigidity_search(std::shared_ptr<const RootSystem> rs, int num_places,
                                           const RigiditySearchOptions& opts) {
    if (num_places < 1 || num_places > opts.max_places)
        throw std::invalid_argument("number of places must be in 1.." + std::to_string(opts.max_places));
    auto diag = extended_diagram(rs);
    int n = diag->node_count();
    int dim_g = rs->dimension();

    std::vector<std::vector<int>> autos;
    if (opts.dedup_by_automorphism) autos = diag->automorphisms();

    // Enumerate proper subsets, dedup to canonical representatives.
    std::set<std::set<int>> canon;
    for (unsigned mask = 0; mask + 1 < (1u << n); ++mask) {
        std::set<int> J;
        for (int i = 0; i < n; ++i)
            if (mask & (1u << i)) J.insert(i);
        canon.insert(opts.dedup_by_automorphism ? canonical_subset(J, autos) : J);
    }

    std::vector<SubsetClass> classes(canon.size());
    {
        std::vector<std::set<int>> list(canon.begin(), canon.end());
        int jobs = std::max(1, opts.jobs);
        auto work = [&](size_t begin, size_t end) {
            for (size_t k = begin; k < end; ++k) {
                ParahoricType pt(diag, list[k]);
                classes[k] = SubsetClass{list[k], relative_dimension(pt), levi_info(pt)};
            }
        };
        if (jobs == 1 || list.size() < 64) {
            work(0, list.size());
        } else {
            std::vector<std::thread> pool;
            size_t chunk = (list.size() + jobs - 1) / jobs;
            for (int t = 0; t < jobs; ++t) {
                size_t b = std::min(list.size(), t * chunk);
                size_t e = std::min(list.size(), (t + 1) * chunk);
                if (b < e) pool.emplace_back(work, b, e);
            }
            for (auto& th : pool) th.join();
        }
    }

    // Canonical class order: by reldim, then Levi name, then subset.
    std::sort(classes.begin(), classes.end(), [](const SubsetClass& a, const SubsetClass& b) {
        if (a.reldim != b.reldim) return a.reldim < b.reldim;
        if (a.levi.factors != b.levi.factors) return a.levi.factors < b.levi.factors;
        return a.kept < b.kept;
    });

    unsigned long long worst = 1;
    for (int i = 0; i < num_places; ++i) {
        worst *= classes.size() + 1;
        if (worst > opts.work_cap)
            throw std::runtime_error("rigidity search space exceeds work cap of " +
                                     std::to_string(opts.work_cap) + " enumeration steps");
    }

    std::vector<RigidityTuple> results;
    std::vector<int> pick(num_places, 0);
    std::function<void(int, int, int)> rec = [&](int place, int from, int acc) {
        if (acc > dim_g) return;
        int remaining = num_places - place;
        if (remaining == 0) {
            if (acc != dim_g) return;
            RigidityTuple t;
            t.total = acc;
            for (int q = 0; q < num_places; ++q) {
                const SubsetClass& sc = classes[pick[q]];
                t.place_types.emplace_back(diag, sc.kept);
                t.reldims.push_back(sc.reldim);
                t.levis.push_back(sc.levi);
            }
            results.push_back(std::move(t));
            return;
        }
        // Largest achievable remainder bound for pruning.
        int max_rd = classes.back().reldim;
        if (acc + remaining * max_rd < dim_g) return;
        for (size_t k = from; k < classes.size(); ++k) {
            pick[place] = static_cast<int>(k);
            rec(place + 1, static_cast<int>(k), acc + classes[k].reldim);
        }
    };
    rec(0, 0, 0);

    // Post-hoc re-verification of the defining condition.
    for (const auto& t : results) {
        int s = 0;
        for (const auto& pt : t.place_types) s += relative_dimension(pt);
        if (s != dim_g) throw std::logic_error("rigidity tuple failed re-verification");
    }
    return results;
}

} // namespace rigidity::parahoric
