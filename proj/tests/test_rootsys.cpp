#include <random>

#include "doctest.h"
#include "wonder/rootsys.hpp"

using namespace wonder;

TEST_CASE("root counts match the classification") {
    const std::pair<char, int> types[] = {{'A', 1}, {'A', 2}, {'A', 5}, {'A', 8}, {'B', 2},
                                          {'B', 5}, {'C', 3}, {'C', 6}, {'D', 4}, {'D', 7},
                                          {'E', 6}, {'E', 7}, {'E', 8}, {'F', 4}, {'G', 2}};
    for (auto [s, n] : types) {
        auto rs = RootSystem::build(s, n);
        CAPTURE(rs.label());
        CHECK(rs.num_roots() == classical_root_count(s, n));
        for (int i = 0; i < n; ++i) CHECK(rs.cartan()[i][i] == 2);
        for (const auto& r : rs.roots()) {
            CHECK(rs.is_root(-r));
            for (int i = 0; i < n; ++i) CHECK(rs.is_root(rs.reflect(r, i)));
        }
    }
    CHECK(RootSystem::build('A', 1).num_roots() == 2);
    CHECK(RootSystem::build('A', 2).num_roots() == 6);
    CHECK(RootSystem::build('A', 5).num_roots() == 30);
}

TEST_CASE("invalid labels are rejected") {
    CHECK_THROWS_AS(RootSystem::build('A', 0), std::invalid_argument);
    CHECK_THROWS_AS(RootSystem::build('D', 3), std::invalid_argument);
    CHECK_THROWS_AS(RootSystem::build('E', 9), std::invalid_argument);
    CHECK_THROWS_AS(RootSystem::build('H', 3), std::invalid_argument);
    CHECK_THROWS_AS(RootSystem::parse("A"), std::invalid_argument);
    CHECK_THROWS_AS(RootSystem::parse("A2y"), std::invalid_argument);
}

TEST_CASE("positive roots are ordered by height then coordinates") {
    auto rs = RootSystem::build('A', 3);
    const auto& p = rs.positive_roots();
    REQUIRE(p.size() == 6);
    CHECK(format_root(p[0]) == "a1");
    CHECK(format_root(p[1]) == "a2");
    CHECK(format_root(p[2]) == "a3");
    CHECK(format_root(p[3]) == "a1+a2");
    CHECK(format_root(p[5]) == "a1+a2+a3");
    CHECK(rs.highest_root() == p.back());
}

TEST_CASE("pairings") {
    auto a5 = RootSystem::build('A', 5);
    for (int i = 0; i < 5; ++i) {
        CHECK(a5.pairing(Root::simple(5, i), i) == 2);
        for (int j = 0; j < 5; ++j)
            CHECK(a5.pairing(Weight::fundamental_weight(5, j), i) == (i == j ? 1 : 0));
    }
    // <a2 + a3, a3^vee> = -1 + 2
    CHECK(a5.pairing(Root{{0, 1, 1, 0, 0}}, 2) == 1);
    CHECK_THROWS_AS(a5.pairing(Root{{0, 1, 1, 0, 0}}, 5), std::out_of_range);

    auto b2 = RootSystem::build('B', 2);
    // alpha_2 short: <a1, a2^vee> = -2, <a2, a1^vee> = -1
    CHECK(b2.pairing(Root{{1, 0}}, 1) == -2);
    CHECK(b2.pairing(Root{{0, 1}}, 0) == -1);
    CHECK(b2.norm(0) == 4);
    CHECK(b2.norm(1) == 2);
    // e1 against (e1+e2)^vee and e2^vee
    CHECK(b2.coroot_pairing(Root{{1, 1}}, Root{{1, 2}}) == 1);
    CHECK(b2.coroot_pairing(Root{{1, 1}}, Root{{0, 1}}) == 0);
    CHECK(b2.coroot_pairing(Root{{0, 1}}, Root{{1, 1}}) == 0);

    // bilinear in the weight argument
    std::mt19937 gen(7);
    std::uniform_int_distribution<int> d(-6, 6);
    for (int t = 0; t < 50; ++t) {
        std::vector<int> x(5), y(5);
        for (auto& v : x) v = d(gen);
        for (auto& v : y) v = d(gen);
        auto wx = Weight::fundamental(x), wy = Weight::fundamental(y);
        for (int i = 0; i < 5; ++i)
            CHECK(a5.pairing(wx * 3 + wy, i) == 3 * a5.pairing(wx, i) + a5.pairing(wy, i));
    }
}

TEST_CASE("group order and canonical words") {
    auto a5 = RootSystem::build('A', 5);
    CHECK(a5.elements().size() == 720);
    CHECK(RootSystem::build('B', 3).elements().size() == 48);
    CHECK(RootSystem::build('G', 2).elements().size() == 12);
    CHECK(RootSystem::build('F', 4).elements().size() == 1152);

    // s1 s2 s1 = s2 s1 s2 in A2, least word is s1s2s1
    auto a2 = RootSystem::build('A', 2);
    CHECK(a2.canonical({1, 0, 1}).word == std::vector<int>{0, 1, 0});
    CHECK(a2.canonical({0, 0}).is_identity());
    CHECK(a2.longest().length() == 3);
    CHECK(a5.longest().length() == 15);
}

TEST_CASE("canonical length equals number of inversions") {
    auto a4 = RootSystem::build('A', 4);
    for (const auto& w : a4.elements()) {
        int inv = 0;
        for (const auto& r : a4.positive_roots())
            if (a4.act(w, r).is_negative()) ++inv;
        CHECK(inv == w.length());
        CHECK(a4.canonical(w.word) == w);
    }
}

TEST_CASE("act is an action") {
    auto a5 = RootSystem::build('A', 5);
    auto d4 = RootSystem::build('D', 4);
    std::mt19937 gen(11);
    for (const RootSystem* rs : {&a5, &d4}) {
        std::uniform_int_distribution<int> idx(0, rs->rank() - 1);
        std::uniform_int_distribution<int> len(0, 10);
        std::uniform_int_distribution<int> co(-4, 4);
        for (int t = 0; t < 100; ++t) {
            std::vector<int> u(len(gen)), v(len(gen)), x(rs->rank());
            for (auto& i : u) i = idx(gen);
            for (auto& i : v) i = idx(gen);
            for (auto& c : x) c = co(gen);
            auto w1 = rs->canonical(u), w2 = rs->canonical(v);
            auto mu = Weight::fundamental(x);
            CHECK(rs->act(rs->multiply(w1, w2), mu) == rs->act(w1, rs->act(w2, mu)));
            auto r = rs->positive_roots()[t % rs->positive_roots().size()];
            CHECK(rs->act(rs->multiply(w1, w2), r) == rs->act(w1, rs->act(w2, r)));
            CHECK(rs->act(w1, rs->act(rs->inverse(w1), mu)) == mu);
        }
    }
}

TEST_CASE("simple reflections") {
    auto a5 = RootSystem::build('A', 5);
    CHECK(a5.act(WeylElement{}, Root{{1, 2, 0, 0, 1}}) == Root{{1, 2, 0, 0, 1}});
    for (int i = 0; i < 5; ++i)
        CHECK(a5.act(a5.simple_reflection(i), Root::simple(5, i)) == -Root::simple(5, i));
    // s1 on (k/2)(a3 - a5 - a1) gives (k/2)(a3 - a5 + a1), here as weights
    for (int k = 0; k <= 6; ++k) {
        Root r{{-1, 0, 1, 0, -1}}, s{{1, 0, 1, 0, -1}};
        Weight lhs = a5.to_weight(r) * k, rhs = a5.to_weight(s) * k;
        for (int& x : lhs.c2) x /= 2;
        for (int& x : rhs.c2) x /= 2;
        CHECK(a5.act(a5.simple_reflection(0), lhs) == rhs);
        auto rc = a5.root_coords2(lhs);
        REQUIRE(rc.has_value());
        CHECK(*rc == std::vector<int>{-k, 0, k, 0, -k});
    }
}

TEST_CASE("coset representatives") {
    auto a5 = RootSystem::build('A', 5);
    CHECK(a5.coset_reps({0, 1, 2, 3, 4}).size() == 1);
    auto reps = a5.coset_reps({0, 1, 3, 4});
    CHECK(reps.size() == 20);
    CHECK(reps.front().is_identity());
    CHECK(reps.back().length() == 9);
    // lengths follow the Gaussian binomial [6 choose 3]_q
    std::vector<int> byLen(10, 0);
    for (const auto& w : reps) byLen[w.length()]++;
    CHECK(byLen == std::vector<int>{1, 1, 2, 3, 3, 3, 3, 2, 1, 1});
    // partition of W: |W^P| * |W_P| = |W|
    CHECK(reps.size() * 36 == 720);
    for (const auto& w : reps)
        for (int j : {0, 1, 3, 4}) CHECK(a5.multiply(w, a5.simple_reflection(j)).length() > w.length());

    auto a1 = RootSystem::build('A', 1);
    auto r1 = a1.coset_reps({});
    REQUIRE(r1.size() == 2);
    CHECK(r1[0].is_identity());
    CHECK(r1[1].word == std::vector<int>{0});
}

TEST_CASE("dominant conjugate and rho") {
    auto a2 = RootSystem::build('A', 2);
    auto rho = a2.half_sum_positive();
    CHECK(rho == Weight::fundamental({1, 1}));
    CHECK(RootSystem::build('A', 1).half_sum_positive() == Weight::fundamental({1}));
    CHECK(RootSystem::build('A', 5).half_sum_positive() == Weight::fundamental({1, 1, 1, 1, 1}));
    CHECK(RootSystem::build('G', 2).half_sum_positive() == Weight::fundamental({1, 1}));

    auto d = a2.dominant_conjugate(Weight::fundamental({2, 0}));
    CHECK(d.dominant == Weight::fundamental({2, 0}));
    CHECK(d.length == 0);
    CHECK_FALSE(d.regular);
    CHECK(a2.dominant_conjugate(rho).regular);

    auto s1rho = a2.act(a2.simple_reflection(0), rho);
    auto e = a2.dominant_conjugate(s1rho);
    CHECK(e.dominant == rho);
    CHECK(e.w.word == std::vector<int>{0});
    CHECK(e.length == 1);
    CHECK(e.regular);

    // mu + rho = 0 for mu = -rho: singular
    CHECK_FALSE(a2.dominant_conjugate(-rho + rho).regular);
    auto m = a2.dominant_conjugate(-rho);
    CHECK(m.dominant == rho);
    CHECK(m.length == 3);

    auto a3 = RootSystem::build('A', 3);
    std::mt19937 gen(3);
    std::uniform_int_distribution<int> co(-5, 5);
    for (int t = 0; t < 200; ++t) {
        std::vector<int> x(3);
        for (auto& c : x) c = co(gen);
        auto mu = Weight::fundamental(x);
        auto dc = a3.dominant_conjugate(mu);
        CHECK(a3.act(dc.w, mu) == dc.dominant);
        for (int v : dc.dominant.c2) CHECK(v >= 0);
    }
}

TEST_CASE("products and identification") {
    auto p = RootSystem::parse("A2xA2");
    CHECK(p.rank() == 4);
    CHECK(p.num_roots() == 12);
    CHECK(p.components().size() == 2);
    CHECK_FALSE(p.is_connected());
    CHECK(p.elements().size() == 36);
    CHECK(identify_cartan(cartan_matrix('C', 2)) == "B2");
    CHECK(identify_cartan(cartan_matrix('C', 4)) == "C4");
    CHECK(identify_cartan(cartan_matrix('E', 7)) == "E7");
    IntMat g2t = {{2, -3}, {-1, 2}};
    CHECK(identify_cartan(g2t) == "G2");
    IntMat weird = {{2, -1}, {-1, 1}};
    CHECK(identify_cartan(weird) == "");
}

TEST_CASE("printing") {
    CHECK(format_word(WeylElement{{2, 3, 1, 2}}) == "s3s4s2s3");
    CHECK(format_word(WeylElement{}) == "e");
    CHECK(format_root(Root{{-2, 0, 1}}) == "-2a1+a3");
    CHECK(format_weight(Weight::doubled({1, -2, 0})) == "(1/2,-1,0)");
}
