#include <algorithm>
#include <functional>
#include <set>

#include "doctest.h"
#include "fixtures.hpp"
#include "wonder/schubert.hpp"

using namespace wonder;

namespace {

// w as a permutation of 1..6, the word read right to left
std::vector<int> permutation(const WeylElement& w) {
    std::vector<int> p(7);
    for (int x = 1; x <= 6; ++x) {
        int y = x;
        for (auto it = w.word.rbegin(); it != w.word.rend(); ++it) {
            const int a = *it + 1;
            y = y == a ? a + 1 : y == a + 1 ? a : y;
        }
        p[x] = y;
    }
    return p;
}

// e_i - e_j for i < j
Root eps_root(int i, int j) {
    std::vector<int> c(5, 0);
    for (int t = i; t < j; ++t) c[t - 1] = 1;
    return Root{c};
}

std::set<Root> as_set(const std::vector<Root>& v) { return {v.begin(), v.end()}; }

std::set<Root> fixture_roots(const nlohmann::json& a) {
    std::set<Root> out;
    for (const auto& s : a) out.insert(fixtures::parse_root(s.get<std::string>(), 5));
    return out;
}

// (k/2) r as a weight
Weight half_multiple(const Root& r, int k) {
    Weight w = grassmannian_system().to_weight(r);
    for (int& x : w.c2) x = x * k / 2;
    return w;
}

SchubertCell times_simple(int i, const SchubertCell& c) {
    std::vector<int> word{i};
    word.insert(word.end(), c.w.word.begin(), c.w.word.end());
    return cell_of(WeylElement{word});
}

}  // namespace

TEST_CASE("cells and fixed points") {
    auto cells = enumerate_cells();
    CHECK(cells.size() == 20);
    // Gaussian binomial [6 choose 3] in q
    std::vector<int> by_codim(10, 0);
    for (const auto& c : cells) by_codim.at(c.codim)++;
    CHECK(by_codim == std::vector<int>{1, 1, 2, 3, 3, 3, 3, 2, 1, 1});
    std::set<std::vector<int>> points;
    for (const auto& c : cells) {
        auto p = permutation(c.w);
        std::vector<int> img{p[4], p[5], p[6]};
        std::sort(img.begin(), img.end());
        CHECK(img == c.fixed_point);
        points.insert(c.fixed_point);
        CHECK(cell_of_fixed_point(c.fixed_point) == c);
    }
    CHECK(points.size() == 20);
    CHECK(cells.front().fixed_point == std::vector<int>{4, 5, 6});
    CHECK(cells.back().fixed_point == std::vector<int>{1, 2, 3});
    CHECK_THROWS_AS(cell_of(WeylElement{{0}}), std::invalid_argument);
}

TEST_CASE("parsing cells") {
    auto f1 = parse_cell("F1");
    CHECK(f1.fixed_point == std::vector<int>{2, 3, 6});
    CHECK(f1.codim == 4);
    CHECK(parse_cell("s3s4s2s3") == f1);
    CHECK(parse_cell("s3423") == f1);
    CHECK(parse_cell("236") == f1);
    CHECK(parse_cell("632") == f1);
    CHECK(parse_cell("e").codim == 0);
    CHECK(format_fixed_point(f1.fixed_point) == "{2,3,6}");
    CHECK_THROWS_AS(parse_cell("F2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_cell("s7"), std::invalid_argument);
    CHECK_THROWS_AS(parse_cell("s1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_cell("122"), std::invalid_argument);
    CHECK_THROWS_AS(parse_cell("x"), std::invalid_argument);
}

TEST_CASE("inversion sets match the permutation picture") {
    for (const auto& c : enumerate_cells()) {
        auto p = permutation(c.w);
        std::set<Root> K, L;
        for (int a = 1; a <= 3; ++a)
            for (int b = 4; b <= 6; ++b) {
                // -(e_a - e_b) goes to e_{p b} - e_{p a}
                if (p[b] < p[a])
                    K.insert(eps_root(p[b], p[a]));
                else
                    L.insert(eps_root(p[a], p[b]));
            }
        auto d = kl_sets(c);
        CHECK(as_set(d.K) == K);
        CHECK(as_set(d.L) == L);
        CHECK(static_cast<int>(d.K.size()) == c.codim);
        CHECK(d.J.size() == 9);
    }
}

TEST_CASE("inversion sets of the F1 cell and its two neighbours") {
    auto fx = fixtures::load("schubert.json");
    auto w = parse_cell(fx["top_cell"].get<std::string>());
    CHECK(w == stratum_cell(Stratum::F1));
    std::map<std::string, SchubertCell> cells{{"w", w}, {"s1w", times_simple(0, w)}, {"s5w", times_simple(4, w)}};
    for (const auto& [name, c] : cells) {
        CAPTURE(name);
        auto d = kl_sets(c);
        CHECK(as_set(d.K) == fixture_roots(fx["inversion_sets"][name]["K"]));
        CHECK(as_set(d.L) == fixture_roots(fx["inversion_sets"][name]["L"]));
        auto r = fixtures::parse_root(fx["leading_exponents"][name].get<std::string>(), 5);
        for (int k = -3; k <= 6; ++k) CHECK(leading_exponent(c, k) == half_multiple(r, k));
    }
}

TEST_CASE("closure order: tableau against Bruhat") {
    auto cells = enumerate_cells();
    for (const auto& a : cells)
        for (const auto& b : cells) {
            CAPTURE(format_fixed_point(a.fixed_point));
            CAPTURE(format_fixed_point(b.fixed_point));
            CHECK(closure_contains(a, b) == closure_contains_bruhat(a, b));
            if (closure_contains(a, b)) CHECK(a.codim <= b.codim);
        }
    // the open cell sees everything, the point only itself
    for (const auto& b : cells) CHECK(closure_contains(cells.front(), b));
    for (const auto& a : cells) CHECK(closure_contains(a, cells.back()));
    auto covers = hasse_covers();
    // every cell but the point has a cover below it
    std::set<int> has_down;
    for (auto [i, j] : covers) has_down.insert(i);
    CHECK(has_down.size() == 19);
}

TEST_CASE("Hasse diagram of the F1 fixed points embeds") {
    auto fx = fixtures::load("schubert.json")["hasse"];
    auto point = [](const std::string& s) { return cell_of_fixed_point(apply_word_to_v(fixtures::digits(s))); };
    for (const auto& n : fx["nodes"]) {
        auto c = point(n.get<std::string>());
        CHECK(unstable_component(SubspacePoint::coordinate(c.fixed_point)) == Stratum::F1);
    }
    CHECK(point("54123") == stratum_cell(Stratum::F1));
    CHECK(point("") == enumerate_cells().back());
    auto cells = enumerate_cells();
    auto index = [&](const SchubertCell& c) {
        return static_cast<int>(std::find(cells.begin(), cells.end(), c) - cells.begin());
    };
    auto covers = hasse_covers();
    std::set<std::pair<int, int>> cov(covers.begin(), covers.end());
    for (const auto& a : fx["arrows"]) {
        auto lo = point(a[0].get<std::string>()), hi = point(a[1].get<std::string>());
        CAPTURE(a[1].get<std::string>());
        CHECK(hi.codim + 1 == lo.codim);
        CHECK(cov.count({index(hi), index(lo)}) == 1);
    }
    // and the F1 part of the order has no further covers
    int inside = 0;
    for (auto [i, j] : covers)
        inside += unstable_component(SubspacePoint::coordinate(cells[i].fixed_point)) == Stratum::F1 &&
                  unstable_component(SubspacePoint::coordinate(cells[j].fixed_point)) == Stratum::F1;
    CHECK(inside == static_cast<int>(fx["arrows"].size()));
}

TEST_CASE("F1 is a Schubert closure, F2 is not") {
    auto top = stratum_cell(Stratum::F1);
    int inside = 0;
    for (const auto& c : enumerate_cells()) {
        bool in_f1 = unstable_component(SubspacePoint::coordinate(c.fixed_point)) == Stratum::F1;
        CHECK(closure_contains(top, c) == in_f1);
        inside += in_f1;
    }
    CHECK(inside == 10);
    CHECK_THROWS_AS(stratum_cell(Stratum::F2), std::invalid_argument);
    CHECK_THROWS_AS(stratum_cell(Stratum::None), std::invalid_argument);
}

TEST_CASE("block swap") {
    const RootSystem& rs = grassmannian_system();
    const auto& s = block_swap();
    CHECK(rs.multiply(s, s).is_identity());
    auto p = permutation(s);
    CHECK(std::vector<int>(p.begin() + 1, p.end()) == std::vector<int>{4, 5, 6, 1, 2, 3});
    // grade flips sign
    auto R = grassmannian_ring();
    for (const auto& r : rs.positive_roots())
        CHECK(R.grading().degree(rs.act(s, rs.to_weight(r))) == -R.grading().degree(rs.to_weight(r)));
    Character c;
    c.add(Weight::fundamental_weight(5, 2), 2);
    auto img = block_swap_image(c);
    CHECK(img.at(rs.act(s, Weight::fundamental_weight(5, 2))) == 2);
    CHECK(block_swap_image(img) == c);
}

TEST_CASE("Kempf series against brute-force enumeration") {
    auto R = grassmannian_ring();
    const RootSystem& rs = grassmannian_system();
    for (const char* spec : {"F1", "e", "124", "135", "123"}) {
        auto c = parse_cell(spec);
        CAPTURE(spec);
        for (int k : {0, 1, -2}) {
            KempfOptions opt{-6, 10, 5};
            auto s = kempf_character(c, k, opt);
            auto d = kl_sets(c);
            Weight num = leading_exponent(c, k);
            for (const auto& a : d.K) num = num + rs.to_weight(a);
            // sum over n in N^J with total height <= cap
            std::map<Weight, long long> brute;
            std::function<void(std::size_t, int, Weight)> walk = [&](std::size_t i, int left, Weight acc) {
                if (i == d.J.size()) {
                    long long deg = R.grading().degree(acc);
                    if (deg >= opt.dmin && deg <= opt.dmax) brute[acc]++;
                    return;
                }
                for (int n = 0; n * d.J[i].height() <= left; ++n)
                    walk(i + 1, left - n * d.J[i].height(), acc + rs.to_weight(d.J[i] * n));
            };
            walk(0, opt.height_cap, num);
            CHECK(s.terms == brute);
            for (const auto& [w, m] : s.terms) CHECK(m > 0);
        }
    }
}

TEST_CASE("Kempf series rejects bad options") {
    auto c = parse_cell("F1");
    CHECK_THROWS_AS(kempf_character(c, 0, {5, 4, 3}), std::invalid_argument);
    CHECK_THROWS_AS(kempf_character(c, 0, {0, 4, -1}), std::invalid_argument);
    CHECK_THROWS_AS(cousin_terms(c, 0, -1), std::invalid_argument);
    CHECK_THROWS_AS(unstable_character_bounds(Stratum::None, 0), std::invalid_argument);
}

TEST_CASE("Cousin terms below F1") {
    auto w = stratum_cell(Stratum::F1);
    KempfOptions opt{-4, 14, 6};
    auto t = cousin_terms(w, 2, 2, opt);
    REQUIRE(t.size() == 3);
    CHECK(t[0].cells == std::vector<SchubertCell>{w});
    std::set<std::vector<int>> first;
    for (const auto& c : t[1].cells) first.insert(c.fixed_point);
    CHECK(first == std::set<std::vector<int>>{times_simple(0, w).fixed_point, times_simple(4, w).fixed_point});
    for (const auto& term : t)
        for (const auto& c : term.cells) {
            CHECK(c.codim == w.codim + term.j);
            CHECK(closure_contains(w, c));
        }
    // the series of a term is the sum over its cells
    Character sum;
    for (const auto& c : t[1].cells)
        for (const auto& [x, m] : kempf_character(c, 2, opt).terms) sum.add(x, m);
    Character got;
    for (const auto& [x, m] : t[1].series.terms) got.add(x, m);
    CHECK(got == sum);
}

TEST_CASE("weight bounds on the unstable strata") {
    auto fx = fixtures::load("schubert.json")["weight_bounds"];
    KempfOptions opt{fx["dmin"].get<long long>(), fx["dmax"].get<long long>(), fx["height_cap"].get<int>()};
    auto R = grassmannian_ring();
    auto range = [&](const Character& c) {
        long long lo = kDegInf, hi = -kDegInf;
        for (const auto& [w, m] : c.terms) {
            lo = std::min(lo, R.grading().degree(w));
            hi = std::max(hi, R.grading().degree(w));
        }
        return std::make_pair(lo, hi);
    };
    for (int k : fx["k"].get<std::vector<int>>()) {
        CAPTURE(k);
        auto f1 = unstable_character_bounds(Stratum::F1, k, opt);
        auto f2 = unstable_character_bounds(Stratum::F2, k, opt);
        CHECK(range(f1.upper).first == k + fx["f1_min_offset"].get<int>());
        CHECK(range(f2.upper).second == k + fx["f2_max_offset"].get<int>());
        auto swapped = unstable_character_bounds(Stratum::F2, k, opt, Mirror::BlockSwap);
        CHECK(range(swapped.upper).second == -k - 8);
        for (const auto* b : {&f1, &f2, &swapped})
            for (const auto& [w, m] : b->lower.terms) CHECK(m <= b->upper.at(w));
    }
}

TEST_CASE("F1 bounds: lower is the top cell minus the neighbours") {
    KempfOptions opt{-10, 16, 8};
    auto b = unstable_character_bounds(Stratum::F1, 1, opt);
    CHECK(b.cells.size() == 3);
    CHECK(b.numerators.size() == 3);
    auto t = cousin_terms(stratum_cell(Stratum::F1), 1, 1, opt);
    for (const auto& [w, m] : b.upper.terms) {
        long long v = m - t[1].series.at(w);
        CHECK(b.lower.at(w) == std::max(0LL, v));
    }
    // exactness: the leading weight itself, and nothing outside the window
    CHECK(b.exact_at(b.numerators[0]));
    Weight far = b.numerators[0] + grassmannian_system().to_weight(Root{{1, 1, 1, 1, 1}}) * 3;
    CHECK_FALSE(b.exact_at(far));
    CHECK_FALSE(b.exact_at(Weight::fundamental_weight(5, 2) * 40));
}

TEST_CASE("grade slices") {
    auto R = grassmannian_ring();
    KempfOptions opt{0, 14, 6};
    auto s = kempf_character(stratum_cell(Stratum::F1), 0, opt);
    long long total = 0;
    for (long long n = opt.dmin; n <= opt.dmax; ++n) {
        auto g = grade_slice(s, n);
        for (const auto& [w, m] : g.terms) CHECK(R.grading().degree(w) == n);
        Character c;
        for (const auto& [w, m] : s.terms) c.add(w, m);
        CHECK(grade_slice(c, n) == g);
        total += g.size();
    }
    CHECK(total == static_cast<long long>(s.terms.size()));
    CHECK(grade_slice(s, 7).empty());
    CHECK_FALSE(grade_slice(s, 8).empty());
}
