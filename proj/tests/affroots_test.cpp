#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rigidity/affroots.hpp"

#include <map>
#include <random>

using namespace rigidity::affroots;
using rigidity::rootsys::Coweight;
using rigidity::rootsys::Root;
using rigidity::rootsys::RootSystem;
using rigidity::rootsys::parse_type;

namespace {

struct EltKey {
    std::vector<long long> t;
    std::vector<int> p;
    bool operator<(const EltKey& o) const { return std::tie(t, p) < std::tie(o.t, o.p); }
};

EltKey key(const AffineWeylElt& e) { return {e.translation_part(), e.root_permutation()}; }

// Oracle: minimal word length in affine simple reflections by BFS over the
// Cayley graph, independent of inversion counting.
std::map<EltKey, int> bfs_lengths(const RootSystem& rs, int max_len) {
    std::vector<AffineWeylElt> gens;
    for (int i = 0; i <= rs.rank(); ++i) gens.push_back(AffineWeylElt::simple_reflection(rs, i));
    std::map<EltKey, int> dist;
    AffineWeylElt id(rs);
    dist[key(id)] = 0;
    std::vector<AffineWeylElt> frontier{id};
    for (int len = 1; len <= max_len; ++len) {
        std::vector<AffineWeylElt> next;
        for (const auto& e : frontier)
            for (const auto& s : gens) {
                AffineWeylElt prod = e * s;
                if (dist.emplace(key(prod), len).second) next.push_back(prod);
            }
        frontier = std::move(next);
    }
    return dist;
}

std::vector<AffineRoot> small_affine_roots(const RootSystem& rs, int max_level) {
    std::vector<AffineRoot> out;
    for (const Root& r : rs.roots())
        for (int n = -max_level; n <= max_level; ++n) out.push_back({r.coords, n});
    for (int n = -max_level; n <= max_level; ++n)
        if (n != 0) out.push_back({std::vector<int>(rs.rank(), 0), n});
    return out;
}

} // namespace

TEST_CASE("affine root positivity") {
    RootSystem a2(parse_type("A2"));
    CHECK(is_positive(affine_simple_root(a2, 1)));
    CHECK(is_positive(affine_simple_root(a2, 0))); // -theta + 1
    CHECK_FALSE(is_positive(AffineRoot{a2.simple_root(0).negated().coords, 0}));
    CHECK(affine_simple_root(a2, 0).gradient == a2.highest_root().negated().coords);
    CHECK(affine_simple_root(a2, 0).level == 1);
}

TEST_CASE("A1 action examples") {
    RootSystem a1(parse_type("A1"));
    AffineRoot alpha{{1}, 0};

    AffineWeylElt id(a1);
    for (const auto& a : small_affine_roots(a1, 3)) CHECK(act(id, a) == a);

    AffineWeylElt t = AffineWeylElt::translation(a1, {1}); // by alpha^vee
    CHECK(act(t, alpha) == AffineRoot{{1}, 2});            // <alpha^vee, alpha> = 2

    AffineWeylElt s1 = AffineWeylElt::simple_reflection(a1, 1);
    CHECK(act(s1, alpha) == AffineRoot{{-1}, 0});
}

TEST_CASE("action respects the group law on a generating ball") {
    for (const char* name : {"A1", "A2", "C2", "G2"}) {
        RootSystem rs(parse_type(name));
        std::vector<AffineWeylElt> ball{AffineWeylElt(rs)};
        std::vector<AffineWeylElt> gens;
        for (int i = 0; i <= rs.rank(); ++i) gens.push_back(AffineWeylElt::simple_reflection(rs, i));
        // radius-3 ball (with repetition; includes group-law products)
        std::vector<AffineWeylElt> frontier = ball;
        for (int rad = 0; rad < 3; ++rad) {
            std::vector<AffineWeylElt> next;
            for (const auto& e : frontier)
                for (const auto& s : gens) next.push_back(e * s);
            ball.insert(ball.end(), next.begin(), next.end());
            frontier = std::move(next);
        }
        auto probes = small_affine_roots(rs, 3);
        std::mt19937 rng(5);
        for (int trial = 0; trial < 200; ++trial) {
            const auto& u = ball[rng() % ball.size()];
            const auto& v = ball[rng() % ball.size()];
            const auto& a = probes[rng() % probes.size()];
            CHECK(act(u * v, a) == act(u, act(v, a)));
        }
        // gradients stay in Phi union {0}
        for (const auto& u : ball)
            for (const auto& a : probes) {
                AffineRoot img = act(u, a);
                if (!img.gradient_is_zero()) CHECK(rs.is_root(Root{img.gradient}));
            }
    }
}

TEST_CASE("inversion sets in A1") {
    RootSystem a1(parse_type("A1"));

    CHECK(inversion_set(AffineWeylElt(a1)).empty());

    AffineWeylElt s1 = AffineWeylElt::simple_reflection(a1, 1);
    auto inv = inversion_set(s1);
    REQUIRE(inv.size() == 1);
    CHECK(inv[0] == AffineRoot{{1}, 0});

    AffineWeylElt t = AffineWeylElt::translation(a1, {1});
    auto invt = inversion_set(t);
    REQUIRE(invt.size() == 2);
    CHECK(invt[0] == AffineRoot{{1}, 0});
    CHECK(invt[1] == AffineRoot{{1}, 1});
    CHECK(length(t) == 2);
}

TEST_CASE("each affine simple reflection has exactly one inversion") {
    for (const char* name : {"A1", "A2", "C2", "G2"}) {
        RootSystem rs(parse_type(name));
        for (int i = 0; i <= rs.rank(); ++i) {
            AffineWeylElt s = AffineWeylElt::simple_reflection(rs, i);
            auto inv = inversion_set(s);
            REQUIRE(inv.size() == 1);
            CHECK(inv[0] == affine_simple_root(rs, i));
        }
    }
}

TEST_CASE("inversion-count length equals BFS length up to 6") {
    for (const char* name : {"A1", "A2", "C2", "G2"}) {
        RootSystem rs(parse_type(name));
        auto dist = bfs_lengths(rs, 6);
        std::vector<AffineWeylElt> gens;
        for (int i = 0; i <= rs.rank(); ++i) gens.push_back(AffineWeylElt::simple_reflection(rs, i));
        std::map<EltKey, int> seen;
        AffineWeylElt id(rs);
        seen[key(id)] = 0;
        CHECK(length(id) == 0);
        std::vector<AffineWeylElt> frontier{id};
        for (int len = 1; len <= 6; ++len) {
            std::vector<AffineWeylElt> next;
            for (const auto& e : frontier)
                for (const auto& s : gens) {
                    AffineWeylElt prod = e * s;
                    if (seen.emplace(key(prod), len).second) {
                        CHECK(length(prod) == len);
                        CHECK(static_cast<long long>(inversion_set(prod).size()) == len);
                        next.push_back(prod);
                    }
                }
            frontier = std::move(next);
        }
        CHECK(seen.size() == dist.size());
    }
}

TEST_CASE("inversion set empty iff identity; descents exist") {
    for (const char* name : {"A1", "A2"}) {
        RootSystem rs(parse_type(name));
        std::vector<AffineWeylElt> gens;
        for (int i = 0; i <= rs.rank(); ++i) gens.push_back(AffineWeylElt::simple_reflection(rs, i));
        std::map<EltKey, int> seen;
        AffineWeylElt id(rs);
        seen[key(id)] = 0;
        std::vector<AffineWeylElt> frontier{id};
        for (int len = 1; len <= 5; ++len) {
            std::vector<AffineWeylElt> next;
            for (const auto& e : frontier)
                for (const auto& s : gens) {
                    AffineWeylElt prod = e * s;
                    if (seen.emplace(key(prod), len).second) next.push_back(prod);
                }
            for (const auto& e : next) {
                CHECK_FALSE(e.is_identity());
                CHECK_FALSE(inversion_set(e).empty());
                CHECK(simple_descent(e).has_value());
            }
            frontier = std::move(next);
        }
        CHECK(simple_descent(id) == std::nullopt);
    }
}

TEST_CASE("simple descent picks the smallest index") {
    RootSystem a2(parse_type("A2"));
    AffineWeylElt s1 = AffineWeylElt::simple_reflection(a2, 1);
    CHECK(simple_descent(s1) == 1);

    // 200 random nonidentity elements of length <= 8 always have a descent
    std::mt19937 rng(17);
    std::vector<AffineWeylElt> gens;
    for (int i = 0; i <= 2; ++i) gens.push_back(AffineWeylElt::simple_reflection(a2, i));
    for (int trial = 0; trial < 200; ++trial) {
        AffineWeylElt e(a2);
        int len = 1 + static_cast<int>(rng() % 8);
        for (int s = 0; s < len; ++s) e = e * gens[rng() % gens.size()];
        if (e.is_identity()) continue;
        CHECK(simple_descent(e).has_value());
    }
}

TEST_CASE("Kloosterman relevance: unit coset only") {
    RootSystem a1(parse_type("A1"));
    CHECK(kloosterman_relevant(AffineWeylElt(a1)).relevant);

    auto r1 = kloosterman_relevant(AffineWeylElt::simple_reflection(a1, 1));
    CHECK_FALSE(r1.relevant);
    CHECK(r1.witness == 1);

    auto rt = kloosterman_relevant(AffineWeylElt::translation(a1, {1}));
    CHECK_FALSE(rt.relevant);
    REQUIRE(rt.witness.has_value());
    // smallest-index witness: t^{-1} sends alpha_1 = alpha + 0 to alpha - 2,
    // while alpha_0 = -alpha + 1 goes to -alpha + 3 and stays positive
    CHECK(rt.witness == 1);
}

TEST_CASE("inverse and group identities") {
    RootSystem g2(parse_type("G2"));
    std::mt19937 rng(29);
    std::vector<AffineWeylElt> gens;
    for (int i = 0; i <= 2; ++i) gens.push_back(AffineWeylElt::simple_reflection(g2, i));
    for (int trial = 0; trial < 50; ++trial) {
        AffineWeylElt e(g2);
        for (int s = 0; s < 6; ++s) e = e * gens[rng() % gens.size()];
        CHECK((e * e.inverse()).is_identity());
        CHECK((e.inverse() * e).is_identity());
        CHECK(length(e.inverse()) == length(e));
    }
}
