#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rigidity/rootsys.hpp"

#include <map>
#include <random>
#include <set>

using namespace rigidity::rootsys;

namespace {

// Independent oracle: closure of the simple roots under reflection by EVERY
// root found so far (not only simple reflections), done on raw vectors with
// the inner product rebuilt from the Cartan data.
std::set<std::vector<int>> orbit_closure_oracle(const RootSystem& rs) {
    int n = rs.rank();
    auto ip = [&](const std::vector<int>& a, const std::vector<int>& b) {
        long long acc = 0;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                acc += static_cast<long long>(a[i]) * b[j] * rs.cartan()[i][j] * rs.half_norms()[i];
        return acc;
    };
    std::set<std::vector<int>> seen;
    std::vector<std::vector<int>> frontier;
    for (int i = 0; i < n; ++i) {
        std::vector<int> e(n, 0);
        e[i] = 1;
        seen.insert(e);
        frontier.push_back(e);
    }
    while (!frontier.empty()) {
        std::vector<std::vector<int>> next;
        std::vector<std::vector<int>> all(seen.begin(), seen.end());
        for (const auto& beta : all) {
            long long db = ip(beta, beta) / 2;
            for (const auto& r : all) {
                long long p = ip(r, beta) / db;
                std::vector<int> s = r;
                for (int j = 0; j < n; ++j) s[j] -= static_cast<int>(p) * beta[j];
                if (seen.insert(s).second) next.push_back(s);
            }
        }
        frontier = std::move(next);
    }
    return seen;
}

const std::map<std::string, size_t> kClassicalRootCounts = {
    {"A1", 2},  {"A2", 6},   {"A3", 12},  {"A4", 20},  {"B2", 8},  {"B3", 18},
    {"B4", 32}, {"C3", 18},  {"C4", 32},  {"D4", 24},  {"D5", 40}, {"E6", 72},
    {"E7", 126}, {"E8", 240}, {"F4", 48},  {"G2", 12},
};

std::vector<RootSystemType> all_types_up_to_rank(int maxrank) {
    std::vector<RootSystemType> out;
    for (int n = 1; n <= maxrank; ++n) out.push_back({Family::A, n});
    for (int n = 2; n <= maxrank; ++n) out.push_back({Family::B, n});
    for (int n = 2; n <= maxrank; ++n) out.push_back({Family::C, n});
    for (int n = 3; n <= maxrank; ++n) out.push_back({Family::D, n});
    for (int n = 6; n <= std::min(8, maxrank); ++n) out.push_back({Family::E, n});
    if (maxrank >= 4) out.push_back({Family::F, 4});
    if (maxrank >= 2) out.push_back({Family::G, 2});
    return out;
}

} // namespace

TEST_CASE("type parsing and rank admissibility") {
    CHECK(parse_type("A1").family == Family::A);
    CHECK(parse_type("E8").rank == 8);
    CHECK_THROWS_AS(parse_type("E9"), std::invalid_argument);
    CHECK_THROWS_AS(parse_type("D2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_type("G3"), std::invalid_argument);
    CHECK_THROWS_AS(parse_type("H4"), std::invalid_argument);
    CHECK_THROWS_AS(parse_type("A0"), std::invalid_argument);
    CHECK_THROWS_AS(RootSystem({Family::F, 3}), std::invalid_argument);
}

TEST_CASE("A2 has 6 roots with highest root a1+a2") {
    RootSystem rs(parse_type("A2"));
    CHECK(rs.roots().size() == 6);
    CHECK(rs.positive_roots().size() == 3);
    CHECK(rs.highest_root().coords == std::vector<int>{1, 1});
    CHECK(rs.weyl_order() == 6);
}

TEST_CASE("G2 has 12 roots and E8 has 240") {
    RootSystem g2(parse_type("G2"));
    CHECK(g2.roots().size() == 12);
    CHECK(g2.highest_root().coords == std::vector<int>{3, 2}); // highest long root
    RootSystem e8(parse_type("E8"));
    CHECK(e8.roots().size() == 240);
    CHECK(e8.dimension() == 248);
}

TEST_CASE("root counts match the reflection-closure oracle and classical table") {
    for (const auto& t : all_types_up_to_rank(8)) {
        RootSystem rs(t);
        auto oracle = orbit_closure_oracle(rs);
        CHECK_MESSAGE(rs.roots().size() == oracle.size(), t.name());
        auto it = kClassicalRootCounts.find(t.name());
        if (it != kClassicalRootCounts.end()) CHECK_MESSAGE(rs.roots().size() == it->second, t.name());
        for (const Root& r : rs.roots()) CHECK(oracle.count(r.coords) == 1);
    }
}

TEST_CASE("reflection basics") {
    RootSystem a1(parse_type("A1"));
    CHECK(a1.reflect(0, a1.simple_root(0)).coords == std::vector<int>{-1});

    RootSystem a2(parse_type("A2"));
    CHECK(a2.reflect(0, a2.simple_root(1)).coords == std::vector<int>{1, 1});

    RootSystem g2(parse_type("G2"));
    for (const Root& r : g2.roots())
        for (int i = 0; i < 2; ++i) CHECK(g2.reflect(i, g2.reflect(i, r)) == r);

    CHECK_THROWS_AS(a2.reflect(0, Root{{2, 0}}), std::invalid_argument);
}

TEST_CASE("reflection closure for all types of rank <= 8") {
    for (const auto& t : all_types_up_to_rank(8)) {
        RootSystem rs(t);
        for (const Root& r : rs.roots())
            for (int i = 0; i < rs.rank(); ++i) CHECK(rs.is_root(rs.reflect(i, r)));
    }
}

TEST_CASE("cartan matrix invariants") {
    for (const auto& t : all_types_up_to_rank(8)) {
        RootSystem rs(t);
        for (int i = 0; i < rs.rank(); ++i)
            for (int j = 0; j < rs.rank(); ++j) {
                if (i == j) {
                    CHECK(rs.cartan()[i][j] == 2);
                } else {
                    CHECK(rs.cartan()[i][j] <= 0);
                    CHECK(rs.cartan()[i][j] >= -3);
                }
            }
    }
}

TEST_CASE("pairing examples and bilinearity") {
    RootSystem a1(parse_type("A1"));
    CHECK(a1.pair(Coweight{{2}}, a1.simple_root(0)) == 2); // <alpha^vee, alpha> = 2

    RootSystem a2(parse_type("A2"));
    Coweight zero{{0, 0}};
    for (const Root& r : a2.roots()) CHECK(a2.pair(zero, r) == 0);
    // lambda = alpha_1^vee has pairings (2, -1) with the simple roots
    Coweight a1vee = a2.coweight_from_coroot_coords({1, 0});
    CHECK(a1vee.pairings == std::vector<long long>{2, -1});
    CHECK(a2.pair(a1vee, a2.simple_root(1)) == -1);

    CHECK_THROWS_AS(a2.pair(Coweight{{1}}, a2.simple_root(0)), std::invalid_argument);

    std::mt19937 rng(7);
    std::uniform_int_distribution<int> d(-4, 4);
    for (int trial = 0; trial < 100; ++trial) {
        Coweight l1{{d(rng), d(rng)}}, l2{{d(rng), d(rng)}};
        const Root& r = a2.roots()[rng() % a2.roots().size()];
        Coweight sum{{l1.pairings[0] + l2.pairings[0], l1.pairings[1] + l2.pairings[1]}};
        CHECK(a2.pair(sum, r) == a2.pair(l1, r) + a2.pair(l2, r));
    }
}

TEST_CASE("dim_gr: zero, A1 coroot, and Grassmannian dimensions") {
    RootSystem a1(parse_type("A1"));
    CHECK(a1.dim_gr(Coweight{{0}}) == 0);
    CHECK(a1.dim_gr(a1.coweight_from_coroot_coords({1})) == 2);

    for (int n = 2; n <= 8; ++n) {
        RootSystem rs({Family::A, n - 1});
        for (int i = 1; i < n; ++i) {
            Coweight fund{std::vector<long long>(n - 1, 0)};
            fund.pairings[i - 1] = 1;
            CHECK(rs.dim_gr(fund) == static_cast<long long>(i) * (n - i)); // dim Gr(n, i)
        }
    }

    RootSystem a2(parse_type("A2"));
    CHECK_THROWS_AS(a2.dim_gr(Coweight{{-1, 0}}), std::invalid_argument);
}

TEST_CASE("rho property: <2rho, alpha_i^vee> = 2 for all simple coroots") {
    for (const auto& t : all_types_up_to_rank(8)) {
        RootSystem rs(t);
        for (int i = 0; i < rs.rank(); ++i) {
            long long acc = 0;
            for (const Root& a : rs.positive_roots())
                acc += rs.pair_with_coroot(a, rs.simple_root(i));
            CHECK_MESSAGE(acc == 2, t.name());
        }
    }
}

TEST_CASE("dominant representative: fixed points, sign flip, exhaustive A2 orbit") {
    RootSystem a1(parse_type("A1"));
    CHECK(a1.dominant_representative(Coweight{{-2}}).pairings == std::vector<long long>{2});
    CHECK(a1.dominant_representative(Coweight{{3}}).pairings == std::vector<long long>{3});

    RootSystem a2(parse_type("A2"));
    // Oracle: brute-force the W-orbit by closing under simple reflections.
    auto orbit = [&](Coweight l) {
        std::set<std::vector<long long>> seen{l.pairings};
        std::vector<Coweight> frontier{l};
        while (!frontier.empty()) {
            std::vector<Coweight> next;
            for (const auto& c : frontier)
                for (int i = 0; i < 2; ++i) {
                    Coweight img = a2.reflect_coweight(i, c);
                    if (seen.insert(img.pairings).second) next.push_back(img);
                }
            frontier = std::move(next);
        }
        return seen;
    };
    std::mt19937 rng(11);
    std::uniform_int_distribution<long long> d(0, 5);
    for (int trial = 0; trial < 20; ++trial) {
        Coweight mu{{d(rng), d(rng)}}; // dominant
        auto orb = orbit(mu);
        CHECK(orb.size() <= 6);
        for (const auto& v : orb) {
            Coweight rep = a2.dominant_representative(Coweight{v});
            CHECK(rep == mu);
            CHECK(a2.dominant_representative(rep) == rep); // idempotent
        }
    }
}

TEST_CASE("dominant representative constant on random W-orbits across types") {
    std::mt19937 rng(23);
    for (const auto& t : all_types_up_to_rank(6)) {
        RootSystem rs(t);
        std::uniform_int_distribution<long long> d(-5, 5);
        for (int trial = 0; trial < 100 / 6; ++trial) {
            Coweight l{std::vector<long long>(rs.rank())};
            for (auto& x : l.pairings) x = d(rng);
            Coweight rep = rs.dominant_representative(l);
            Coweight moved = l;
            for (int s = 0; s < 8; ++s) moved = rs.reflect_coweight(rng() % rs.rank(), moved);
            CHECK(rs.dominant_representative(moved) == rep);
        }
    }
}

TEST_CASE("coroot coordinates are integral and consistent") {
    for (const auto& t : all_types_up_to_rank(8)) {
        RootSystem rs(t);
        for (const Root& r : rs.roots()) {
            auto cc = rs.coroot_coords(r);
            // <r, r^vee> = 2 expressed through the coweight built from cc
            std::vector<long long> ccl(cc.begin(), cc.end());
            CHECK(rs.pair(rs.coweight_from_coroot_coords(ccl), r) == 2);
        }
    }
}
