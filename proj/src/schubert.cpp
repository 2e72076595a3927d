#include "wonder/schubert.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <stdexcept>

namespace wonder {

const RootSystem& grassmannian_system() {
    static const RootSystem rs = RootSystem::build('A', 5);
    return rs;
}

const std::vector<int>& grassmannian_parabolic() {
    static const std::vector<int> p{0, 1, 3, 4};
    return p;
}

const std::vector<int>& cstar_cocharacter() {
    static const std::vector<int> g{0, 0, 2, 0, 0};
    return g;
}

namespace {

const SeriesRing& ring() {
    static const SeriesRing r(grassmannian_system(), cstar_cocharacter());
    return r;
}

const std::vector<WeylElement>& reps() {
    static const std::vector<WeylElement> r = grassmannian_system().coset_reps(grassmannian_parabolic());
    return r;
}

std::vector<int> act_on_positions(const std::vector<int>& word0, std::vector<int> set) {
    for (auto it = word0.rbegin(); it != word0.rend(); ++it) {
        const int a = *it + 1, b = *it + 2;
        for (int& x : set) x = x == a ? b : x == b ? a : x;
    }
    std::sort(set.begin(), set.end());
    return set;
}

}  // namespace

const SeriesRing& grassmannian_ring() { return ring(); }

std::vector<int> apply_word_to_v(const std::vector<int>& word_1based) {
    std::vector<int> w0;
    for (int i : word_1based) {
        if (i < 1 || i > 5) throw std::invalid_argument("simple reflection index out of range 1..5");
        w0.push_back(i - 1);
    }
    return act_on_positions(w0, {1, 2, 3});
}

SchubertCell cell_of(const WeylElement& w) {
    WeylElement c = grassmannian_system().canonical(w.word);
    if (std::find(reps().begin(), reps().end(), c) == reps().end())
        throw std::invalid_argument(format_word(c) + " is not a minimal coset representative");
    return {c, c.length(), act_on_positions(c.word, {4, 5, 6})};
}

std::vector<SchubertCell> enumerate_cells() {
    std::vector<SchubertCell> out;
    for (const auto& w : reps()) out.push_back(cell_of(w));
    std::sort(out.begin(), out.end(), [](const SchubertCell& a, const SchubertCell& b) {
        return a.codim != b.codim ? a.codim < b.codim : a.fixed_point < b.fixed_point;
    });
    return out;
}

SchubertCell cell_of_fixed_point(const std::vector<int>& positions) {
    std::vector<int> s = PluckerIndex::from_positions(positions).positions();
    std::sort(s.begin(), s.end());
    for (const auto& c : enumerate_cells())
        if (c.fixed_point == s) return c;
    throw std::logic_error("no cell for a valid fixed point");
}

std::string format_fixed_point(const std::vector<int>& positions) {
    std::string s = "{";
    for (std::size_t i = 0; i < positions.size(); ++i) s += (i ? "," : "") + std::to_string(positions[i]);
    return s + "}";
}

SchubertCell parse_cell(const std::string& spec) {
    if (spec == "F1") return stratum_cell(Stratum::F1);
    if (spec == "e") return cell_of(WeylElement{});
    auto all_digits = [](const std::string& s) {
        return !s.empty() && std::all_of(s.begin(), s.end(), [](char ch) { return std::isdigit((unsigned char)ch); });
    };
    if (spec.size() == 3 && all_digits(spec)) {
        std::vector<int> p;
        for (char ch : spec) p.push_back(ch - '0');
        return cell_of_fixed_point(p);
    }
    if (spec.size() >= 2 && spec[0] == 's') {
        // "s3s4s2s3" or the compressed "s3423"
        std::string digits;
        for (char ch : spec)
            if (ch != 's') digits += ch;
        if (!all_digits(digits)) throw std::invalid_argument("cannot parse cell '" + spec + "'");
        std::vector<int> word;
        for (char ch : digits) {
            int i = ch - '0';
            if (i < 1 || i > 5) throw std::invalid_argument("simple reflection index out of range in '" + spec + "'");
            word.push_back(i - 1);
        }
        return cell_of(WeylElement{word});
    }
    throw std::invalid_argument("cannot parse cell '" + spec + "'");
}

InversionData kl_sets(const SchubertCell& c) {
    const RootSystem& rs = grassmannian_system();
    InversionData d;
    for (const auto& beta : rs.positive_roots()) {
        if (beta.c[2] == 0) continue;  // Levi root
        Root r = rs.act(c.w, -beta);
        if (r.is_positive())
            d.K.push_back(r);
        else
            d.L.push_back(-r);
    }
    std::sort(d.K.begin(), d.K.end());
    std::sort(d.L.begin(), d.L.end());
    d.J = d.K;
    d.J.insert(d.J.end(), d.L.begin(), d.L.end());
    return d;
}

bool closure_contains(const SchubertCell& outer, const SchubertCell& inner) {
    // B' upper triangular only moves basis vectors towards smaller positions
    for (int i = 0; i < 3; ++i)
        if (inner.fixed_point[i] > outer.fixed_point[i]) return false;
    return true;
}

bool closure_contains_bruhat(const SchubertCell& outer, const SchubertCell& inner) {
    // outer.w <= inner.w: outer.w is the product of a subword of inner.w
    const RootSystem& rs = grassmannian_system();
    const auto& word = inner.w.word;
    const int n = static_cast<int>(word.size());
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        if (__builtin_popcount(mask) != outer.codim) continue;
        std::vector<int> sub;
        for (int i = 0; i < n; ++i)
            if (mask >> i & 1u) sub.push_back(word[i]);
        if (rs.canonical(sub) == outer.w) return true;
    }
    return false;
}

std::vector<std::pair<int, int>> hasse_covers() {
    auto cells = enumerate_cells();
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < (int)cells.size(); ++i)
        for (int j = 0; j < (int)cells.size(); ++j)
            if (cells[j].codim == cells[i].codim + 1 && closure_contains(cells[i], cells[j])) out.emplace_back(i, j);
    return out;
}

SchubertCell stratum_cell(Stratum s) {
    if (s == Stratum::None) throw std::invalid_argument("the semistable locus is open, not a Schubert closure");
    std::vector<SchubertCell> in;
    for (const auto& c : enumerate_cells())
        if (unstable_component(SubspacePoint::coordinate(c.fixed_point)) == s) in.push_back(c);
    // the cells are sorted by codimension
    if (in.size() < 2 || in[0].codim == in[1].codim) throw std::logic_error("stratum is not a Schubert closure");
    // the closure of the top cell must be exactly the stratum; F2 is not
    // B'-stable and fails here
    std::size_t inside = 0;
    for (const auto& c : enumerate_cells()) inside += closure_contains(in[0], c);
    if (inside != in.size()) throw std::invalid_argument(std::string(stratum_name(s)) + " is not a Schubert closure");
    return in[0];
}

Weight leading_exponent(const SchubertCell& c, int k) {
    const RootSystem& rs = grassmannian_system();
    WeylElement w0 = rs.longest_coset_rep(grassmannian_parabolic());
    return rs.act(rs.multiply(c.w, w0), Weight::fundamental_weight(5, 2) * k);
}

TruncatedSeries kempf_character(const SchubertCell& c, int k, const KempfOptions& opt) {
    if (opt.dmin > opt.dmax) throw std::invalid_argument("empty degree window");
    if (opt.height_cap < 0) throw std::invalid_argument("height cap must be nonnegative");
    const RootSystem& rs = grassmannian_system();
    const SeriesRing& R = ring();
    auto inv = kl_sets(c);
    Weight num = leading_exponent(c, k);
    for (const auto& a : inv.K) num = num + rs.to_weight(a);
    TruncatedSeries s = R.monomial(num);
    const long long d0 = R.grading().degree(num);
    // every factor starts at relative degree 0, so only the top of the window
    // is passed down; the bottom is cut at the end
    for (const auto& b : inv.J) s = R.multiply(s, R.expand_inverse(b, 0, opt.dmax - d0, opt.height_cap));
    for (auto it = s.terms.begin(); it != s.terms.end();)
        it = R.grading().degree(it->first) < opt.dmin ? s.terms.erase(it) : std::next(it);
    s.dmin = opt.dmin;
    s.dmax = opt.dmax;
    s.height_cap = opt.height_cap;
    return s;
}

const WeylElement& block_swap() {
    static const WeylElement w = [] {
        const RootSystem& rs = grassmannian_system();
        const std::vector<Root> want{Root{{0, 0, 0, 1, 0}}, Root{{0, 0, 0, 0, 1}}, Root{{-1, -1, -1, -1, -1}},
                                     Root{{1, 0, 0, 0, 0}}, Root{{0, 1, 0, 0, 0}}};
        for (const auto& x : rs.elements()) {
            bool ok = true;
            for (int i = 0; i < 5 && ok; ++i) ok = rs.act(x, Root::simple(5, i)) == want[i];
            if (ok) return x;
        }
        throw std::logic_error("block swap not found in W(A5)");
    }();
    return w;
}

Character block_swap_image(const Character& c) {
    Character out;
    for (const auto& [w, m] : c.terms) out.add(grassmannian_system().act(block_swap(), w), m);
    return out;
}

std::vector<CousinTerm> cousin_terms(const SchubertCell& c, int k, int depth, const KempfOptions& opt) {
    if (depth < 0) throw std::invalid_argument("depth must be nonnegative");
    const SeriesRing& R = ring();
    std::vector<CousinTerm> out;
    for (int j = 0; j <= depth; ++j) {
        CousinTerm t;
        t.j = j;
        t.series.grading = cstar_cocharacter();
        t.series.numerator = Weight::zero(5);
        t.series.dmin = opt.dmin;
        t.series.dmax = opt.dmax;
        t.series.height_cap = opt.height_cap;
        bool first = true;
        for (const auto& x : enumerate_cells()) {
            if (x.codim != c.codim + j || !closure_contains(c, x)) continue;
            t.cells.push_back(x);
            auto s = kempf_character(x, k, opt);
            t.series = first ? s : R.add(t.series, s);
            first = false;
        }
        out.push_back(std::move(t));
    }
    return out;
}

namespace {

Character to_character(const TruncatedSeries& s) {
    Character c;
    for (const auto& [w, m] : s.terms) c.add(w, m);
    return c;
}

}  // namespace

UnstableBounds unstable_character_bounds(Stratum s, int k, const KempfOptions& opt, Mirror mirror) {
    if (s == Stratum::None) throw std::invalid_argument("bounds are only defined on F1 and F2");
    if (s == Stratum::F2) {
        KempfOptions mirrored{-opt.dmax, -opt.dmin, opt.height_cap};
        UnstableBounds b = unstable_character_bounds(Stratum::F1, mirror == Mirror::Literal ? -k : k, mirrored);
        b.component = Stratum::F2;
        b.k = k;
        b.window = opt;
        b.upper = block_swap_image(b.upper);
        b.lower = block_swap_image(b.lower);
        b.swapped = true;
        return b;
    }
    UnstableBounds b;
    b.component = s;
    b.k = k;
    b.window = opt;
    SchubertCell top = stratum_cell(s);
    auto terms = cousin_terms(top, k, 1, opt);
    b.upper = to_character(terms[0].series);
    Character next = to_character(terms[1].series);
    for (const auto& [w, m] : b.upper.terms) {
        long long v = m - next.at(w);
        if (v > 0) b.lower.add(w, v);
    }
    b.cells.push_back(top);
    for (const auto& c : terms[1].cells) b.cells.push_back(c);
    const RootSystem& rs = grassmannian_system();
    for (const auto& c : b.cells) {
        Weight num = leading_exponent(c, k);
        for (const auto& a : kl_sets(c).K) num = num + rs.to_weight(a);
        b.numerators.push_back(num);
    }
    return b;
}

bool UnstableBounds::exact_at(const Weight& mu) const {
    const SeriesRing& R = ring();
    Weight m = swapped ? grassmannian_system().act(block_swap(), mu) : mu;  // the swap is an involution
    long long lo = swapped ? -window.dmax : window.dmin, hi = swapped ? -window.dmin : window.dmax;
    if (!R.grading().integral_on(m)) return true;
    long long d = R.grading().degree(m);
    if (d < lo || d > hi) return false;
    for (const auto& num : numerators) {
        Weight diff = m - num;
        if (!R.height().integral_on(diff)) continue;
        if (R.height().degree(diff) > window.height_cap) return false;
    }
    return true;
}

Character grade_slice(const TruncatedSeries& s, long long n) { return ring().grade_project(s, n); }

Character grade_slice(const Character& c, long long n) {
    Character out;
    for (const auto& [w, m] : c.terms)
        if (ring().grading().integral_on(w) && ring().grading().degree(w) == n) out.add(w, m);
    return out;
}

}  // namespace wonder
