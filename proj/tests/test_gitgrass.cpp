#include <map>
#include <random>

#include "doctest.h"
#include "wonder/charring.hpp"
#include "wonder/gitgrass.hpp"

using namespace wonder;

namespace {

SubspacePoint random_point(std::mt19937& gen) {
    std::uniform_int_distribution<int> e(-2, 2);
    for (;;) {
        std::vector<std::vector<long long>> m(3, std::vector<long long>(6));
        for (auto& r : m)
            for (auto& x : r) x = e(gen);
        try {
            return SubspacePoint::from_ints(m);
        } catch (const std::invalid_argument&) {
        }
    }
}

// a point with d rows forced into V + 0
SubspacePoint random_point_meeting_v(std::mt19937& gen, int d) {
    std::uniform_int_distribution<int> e(-2, 2);
    for (;;) {
        std::vector<std::vector<long long>> m(3, std::vector<long long>(6));
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 6; ++j) m[i][j] = (i < d && j >= 3) ? 0 : e(gen);
        try {
            return SubspacePoint::from_ints(m);
        } catch (const std::invalid_argument&) {
        }
    }
}

// dim(U cap V) >= d iff every Plucker coordinate with more than 3 - d starred
// indices vanishes
int dv_from_plucker(const SubspacePoint& u, bool star) {
    int best = 0;
    for (int d = 1; d <= 3; ++d) {
        bool all_zero = true;
        for (const auto& p : all_plucker_indices()) {
            int s = static_cast<int>((star ? p.I : p.Istar).size());
            if (s > 3 - d && u.plucker(p) != 0) all_zero = false;
        }
        if (all_zero) best = d;
    }
    return best;
}

}  // namespace

TEST_CASE("C* weights of Plucker coordinates") {
    CHECK(cstar_weight({{1, 2, 3}, {}}) == 3);
    CHECK(cstar_weight({{1, 2}, {3}}) == 1);
    CHECK(cstar_weight({{1}, {2, 3}}) == -1);
    CHECK(cstar_weight({{}, {1, 2, 3}}) == -3);
    auto all = all_plucker_indices();
    REQUIRE(all.size() == 20);
    std::map<int, int> hist;
    for (const auto& p : all) {
        CHECK(p.I.size() + p.Istar.size() == 3);
        hist[cstar_weight(p)]++;
    }
    CHECK(hist == std::map<int, int>{{-3, 1}, {-1, 9}, {1, 9}, {3, 1}});
    CHECK(format_plucker({{1, 2}, {3}}) == "U_{1,2}^{3}");
    CHECK(PluckerIndex::from_positions({2, 3, 6}) == PluckerIndex{{2, 3}, {3}});
    CHECK_THROWS_AS(PluckerIndex::from_positions({1, 1, 2}), std::invalid_argument);
}

TEST_CASE("subspace points") {
    CHECK_THROWS_AS(SubspacePoint::from_ints({{1, 0, 0, 0, 0, 0}, {2, 0, 0, 0, 0, 0}, {0, 1, 0, 0, 0, 0}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(SubspacePoint::from_ints({{1, 0, 0, 0, 0, 0}}), std::invalid_argument);
    // equality is equality of subspaces
    auto a = SubspacePoint::from_ints({{1, 1, 0, 0, 0, 0}, {0, 1, 0, 0, 0, 0}, {0, 0, 0, 0, 0, 1}});
    CHECK(a == SubspacePoint::coordinate({1, 2, 6}));
    CHECK(a.rows()[0] == std::vector<Rat>{1, 0, 0, 0, 0, 0});
}

TEST_CASE("intersection dimensions and stability") {
    std::array<std::array<Rat, 3>, 3> m{};
    m[0] = {2, 1, 0};
    m[1] = {0, 1, 0};
    m[2] = {1, 0, 3};
    auto g = SubspacePoint::graph(m);
    CHECK(intersection_dims(g) == IntersectionDims{0, 0});
    CHECK(is_semistable(g));
    CHECK(is_stable(g));
    CHECK(unstable_component(g) == Stratum::None);

    auto v = SubspacePoint::coordinate({1, 2, 3});
    CHECK(intersection_dims(v) == IntersectionDims{3, 0});
    CHECK_FALSE(is_semistable(v));
    CHECK(unstable_component(v) == Stratum::F1);
    CHECK(unstable_component(SubspacePoint::coordinate({4, 5, 6})) == Stratum::F2);

    // e1* lies in the span, so the second dimension is 1
    CHECK(intersection_dims(SubspacePoint::coordinate({1, 2, 4})) == IntersectionDims{2, 1});
    CHECK_FALSE(is_semistable(SubspacePoint::coordinate({1, 2, 6})));

    // a singular M still gives a point, meeting V* in ker M
    std::array<std::array<Rat, 3>, 3> sing{};
    sing[0] = {1, 1, 0};
    auto h = SubspacePoint::graph(sing);
    CHECK(intersection_dims(h) == IntersectionDims{2, 0});
}

TEST_CASE("rank computation agrees with Plucker vanishing") {
    std::mt19937 gen(5);
    for (int t = 0; t < 200; ++t) {
        auto u = t % 3 == 0 ? random_point(gen) : random_point_meeting_v(gen, 1 + t % 3);
        if (t % 5 == 0) u = swap_blocks(u);
        auto d = intersection_dims(u);
        CHECK(d.dV == dv_from_plucker(u, false));
        CHECK(d.dVstar == dv_from_plucker(u, true));
        CHECK(is_semistable(u) == is_stable(u));
        CHECK((unstable_component(u) == Stratum::None) == is_semistable(u));
    }
}

TEST_CASE("semistable points have nonzero weight 1 and -1 parts") {
    std::mt19937 gen(11);
    int seen = 0;
    for (int t = 0; t < 300; ++t) {
        auto u = t % 2 ? random_point(gen) : random_point_meeting_v(gen, 1 + t % 3);
        if (t % 4 == 0) u = swap_blocks(u);
        // semistable iff both signs of C*-weight occur
        bool neg = weight_parts_nonzero(u, -1) || weight_parts_nonzero(u, -3);
        bool pos = weight_parts_nonzero(u, 1) || weight_parts_nonzero(u, 3);
        CHECK(is_semistable(u) == (neg && pos));
        if (!is_semistable(u)) continue;
        ++seen;
        CHECK(weight_parts_nonzero(u, 1));
        CHECK(weight_parts_nonzero(u, -1));
    }
    CHECK(seen > 50);
    CHECK_FALSE(weight_parts_nonzero(SubspacePoint::coordinate({1, 2, 3}), -1));
}

TEST_CASE("strata are C*-stable, B'-stable, and exchanged by the block swap") {
    std::mt19937 gen(3);
    std::uniform_int_distribution<int> pos(1, 6), c(-3, 3);
    for (int t = 0; t < 150; ++t) {
        auto u = t % 2 ? random_point(gen) : random_point_meeting_v(gen, 2);
        auto d = intersection_dims(u);
        auto comp = unstable_component(u);
        CHECK(unstable_component(scale_cstar(u, Rat(c(gen) == 0 ? 2 : 5, 3))) == comp);
        auto b = u;
        for (int s = 0; s < 6; ++s) {
            int i = pos(gen), j = pos(gen);
            if (i == j) continue;
            if (i > j) std::swap(i, j);
            b = apply_elementary(b, i, j, Rat(c(gen)));
        }
        CHECK(intersection_dims(b).dV >= d.dV);
        if (comp == Stratum::F1) CHECK(unstable_component(b) == Stratum::F1);
        auto sw = swap_blocks(u);
        CHECK(intersection_dims(sw) == IntersectionDims{d.dVstar, d.dV});
        if (comp == Stratum::F1) CHECK(unstable_component(sw) == Stratum::F2);
        if (comp == Stratum::F2) CHECK(unstable_component(sw) == Stratum::F1);
        if (comp == Stratum::None) CHECK(unstable_component(sw) == Stratum::None);
    }
}

TEST_CASE("T'-fixed points") {
    int f1 = 0, f2 = 0;
    for (const auto& p : all_plucker_indices()) {
        auto u = SubspacePoint::coordinate(p.positions());
        auto s = unstable_component(u);
        CHECK(s != Stratum::None);
        f1 += s == Stratum::F1;
        f2 += s == Stratum::F2;
        // oracle: count of unstarred indices
        CHECK((p.I.size() >= 2) == (s == Stratum::F1));
    }
    CHECK(f1 == 10);
    CHECK(f2 == 10);
}

TEST_CASE("Lagrangian and isotropic validators") {
    std::array<std::array<Rat, 3>, 3> sym{}, skew{};
    sym[0] = {1, 2, 0};
    sym[1] = {2, 0, 5};
    sym[2] = {0, 5, 1};
    skew[0] = {0, 2, -1};
    skew[1] = {-2, 0, 3};
    skew[2] = {1, -3, 0};
    CHECK(is_lagrangian(SubspacePoint::graph(sym)));
    CHECK_FALSE(is_orthogonal_isotropic(SubspacePoint::graph(sym)));
    CHECK(is_orthogonal_isotropic(SubspacePoint::graph(skew)));
    CHECK_FALSE(is_lagrangian(SubspacePoint::graph(skew)));
    CHECK(is_lagrangian(SubspacePoint::coordinate({1, 2, 3})));
    CHECK(is_orthogonal_isotropic(SubspacePoint::coordinate({1, 2, 3})));
}

TEST_CASE("G x G decomposition of Lambda^3") {
    auto parts = decompose_module();
    REQUIRE(parts.size() == 4);
    const std::vector<long long> dims{9, 9, 1, 1};
    const std::vector<int> cs{1, -1, 3, -3};
    long long total = 0;
    for (int i = 0; i < 4; ++i) {
        CHECK(parts[i].dim == dims[i]);
        CHECK(parts[i].cstar == cs[i]);
        total += parts[i].dim;
    }
    CHECK(total == 20);
    CHECK(parts[0].highest == Weight::fundamental({0, 1, 0, 1}));
    CHECK(parts[0].highest_vector == PluckerIndex{{1, 2}, {3}});
    CHECK(parts[1].highest == Weight::fundamental({1, 0, 1, 0}));
    CHECK(parts[1].highest_vector == PluckerIndex{{1}, {2, 3}});
    CHECK(parts[2].highest == Weight::zero(4));
    CHECK(parts[2].highest_vector == PluckerIndex{{1, 2, 3}, {}});
    CHECK(parts[3].highest_vector == PluckerIndex{{}, {1, 2, 3}});

    // the summand characters, computed independently, add up to the Plucker weights
    auto rs = RootSystem::parse("A2xA2");
    Character sum, pl;
    for (const auto& s : parts) sum += weyl_character_kostant(s.highest, rs);
    for (const auto& p : all_plucker_indices()) pl.add(gxg_weight(p), 1);
    CHECK(sum == pl);
}

TEST_CASE("invariant ring generators") {
    auto g = invariant_generators();
    REQUIRE(g.size() == 4);
    std::map<std::string, long long> got;
    for (const auto& f : g) {
        got[f.name] = f.count;
        CHECK(f.cstar == 0);
        int w = 0;
        auto parts = decompose_module();
        for (std::size_t i = 0; i < parts.size(); ++i) w += f.degrees[i] * parts[i].cstar;
        CHECK(w == 0);
    }
    // 9 * 9, Sym^3 of a 9-dimensional space, and zt
    CHECK(got == std::map<std::string, long long>{{"xy", 81}, {"zt", 1}, {"xxxt", 165}, {"yyyz", 165}});
}

TEST_CASE("sheaf correspondence") {
    CHECK(sheaf_correspondence(spanning_weight(1, 0, 0, 0)).k == 1);
    CHECK(sheaf_correspondence(spanning_weight(1, 0, 0, 0)).n == -1);
    CHECK(sheaf_correspondence(spanning_weight(0, 1, 0, 0)).n == 1);
    auto z = sheaf_correspondence(Weight::zero(4));
    CHECK(z.k == 0);
    CHECK(z.n == 0);
    auto g1 = sheaf_correspondence(spanning_weight(0, 0, 1, 0));
    CHECK(g1.k == 1);
    CHECK(g1.n == -3);
    auto g2 = sheaf_correspondence(spanning_weight(0, 0, 0, 1));
    CHECK(g2.k == 1);
    CHECK(g2.n == 3);
    // gamma_1 = 2 w1 - w2 on the diagonal
    CHECK(spanning_weight(0, 0, 1, 0) == Weight::fundamental({2, -1, 2, -1}));

    std::mt19937 gen(9);
    std::uniform_int_distribution<int> c(-5, 5);
    for (int t = 0; t < 50; ++t) {
        Weight a = spanning_weight(c(gen), c(gen), c(gen), c(gen));
        Weight b = spanning_weight(c(gen), c(gen), c(gen), c(gen));
        auto sa = sheaf_correspondence(a), sb = sheaf_correspondence(b), sab = sheaf_correspondence(a + b);
        CHECK(sab.k == sa.k + sb.k);
        CHECK(sab.n == sa.n + sb.n);
    }
    CHECK_THROWS_AS(sheaf_correspondence(Weight::fundamental({1, 0, 0, 0})), std::domain_error);
    CHECK_THROWS_AS(sheaf_correspondence(Weight::doubled({1, 1, 1, 1})), std::domain_error);
}
