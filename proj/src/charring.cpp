#include "wonder/charring.hpp"

#include <algorithm>
#include <boost/rational.hpp>
#include <deque>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>

namespace wonder {

using Q = boost::rational<long long>;

namespace {

std::vector<std::vector<Q>> inverse_cartan(const IntMat& c) {
    const int n = static_cast<int>(c.size());
    std::vector<std::vector<Q>> a(n, std::vector<Q>(2 * n, Q(0)));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) a[i][j] = c[i][j];
        a[i][n + i] = 1;
    }
    for (int col = 0; col < n; ++col) {
        int piv = col;
        while (piv < n && a[piv][col] == Q(0)) ++piv;
        if (piv == n) throw std::invalid_argument("singular Cartan matrix");
        std::swap(a[piv], a[col]);
        Q p = a[col][col];
        for (auto& x : a[col]) x /= p;
        for (int i = 0; i < n; ++i) {
            if (i == col || a[i][col] == Q(0)) continue;
            Q f = a[i][col];
            for (int j = 0; j < 2 * n; ++j) a[i][j] -= f * a[col][j];
        }
    }
    std::vector<std::vector<Q>> inv(n, std::vector<Q>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv[i][j] = a[i][n + j];
    return inv;
}

// helpers shared by both Weyl character routes
struct WeightGeometry {
    const RootSystem& rs;
    std::vector<std::vector<Q>> cinv;  // varpi_i = sum_k cinv[i][k] alpha_k

    explicit WeightGeometry(const RootSystem& r) : rs(r), cinv(inverse_cartan(r.cartan())) {}

    // simple-root coordinates of an integral weight
    std::vector<Q> root_coords(const Weight& w) const {
        const int n = rs.rank();
        std::vector<Q> out(n, Q(0));
        for (int i = 0; i < n; ++i) {
            if (w.c2[i] == 0) continue;
            Q f(w.c2[i], 2);
            for (int k = 0; k < n; ++k) out[k] += f * cinv[i][k];
        }
        return out;
    }

    // lam - mu a nonnegative integral combination of simple roots
    bool below(const Weight& mu, const Weight& lam) const {
        for (const Q& x : root_coords(lam - mu))
            if (x < Q(0) || x.denominator() != 1) return false;
        return true;
    }

    Q inner(const Weight& a, const Weight& b) const {
        // (a, b) = sum_k r_k(b) (a, alpha_k), (a, alpha_k) = a_k d_k / 2
        auto rb = root_coords(b);
        Q s(0);
        for (int k = 0; k < rs.rank(); ++k) s += rb[k] * Q(a.c2[k] * rs.norm(k), 4);
        return s;
    }

    // (a, alpha) for a root alpha
    Q inner(const Weight& a, const Root& alpha) const {
        Q s(0);
        for (int k = 0; k < rs.rank(); ++k) s += Q(alpha.c[k] * a.c2[k] * rs.norm(k), 4);
        return s;
    }

    // all weights of V_lam, grouped by depth below lam
    std::vector<std::vector<Weight>> support(const Weight& lam) const {
        std::vector<std::vector<Weight>> levels{{lam}};
        std::set<Weight> seen{lam};
        for (;;) {
            std::vector<Weight> next;
            for (const auto& mu : levels.back()) {
                for (int i = 0; i < rs.rank(); ++i) {
                    Weight nu = mu - rs.to_weight(Root::simple(rs.rank(), i));
                    if (seen.count(nu)) continue;
                    if (!below(rs.dominant_conjugate(nu).dominant, lam)) continue;
                    seen.insert(nu);
                    next.push_back(nu);
                }
            }
            if (next.empty()) break;
            levels.push_back(std::move(next));
        }
        return levels;
    }
};

}  // namespace

// ------------------------------------------------------------- Grading

Grading::Grading(const RootSystem& rs, std::vector<int> on_simple_roots)
    : g_(std::move(on_simple_roots)) {
    const int n = rs.rank();
    if (static_cast<int>(g_.size()) != n) throw std::invalid_argument("grading rank mismatch");
    auto cinv = inverse_cartan(rs.cartan());
    std::vector<Q> fund(n, Q(0));
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) fund[i] += cinv[i][k] * g_[k];
    long long l = 1;
    for (const auto& q : fund) l = std::lcm(l, q.denominator());
    num_.resize(n);
    for (int i = 0; i < n; ++i) num_[i] = (fund[i] * l).numerator();
    den_ = 2 * l;
}

long long Grading::degree(const Root& r) const {
    long long s = 0;
    for (std::size_t i = 0; i < g_.size(); ++i) s += 1LL * r.c[i] * g_[i];
    return s;
}

bool Grading::integral_on(const Weight& w) const {
    long long s = 0;
    for (std::size_t i = 0; i < num_.size(); ++i) s += w.c2[i] * num_[i];
    return s % den_ == 0;
}

long long Grading::degree(const Weight& w) const {
    if (w.c2.size() != num_.size()) throw std::invalid_argument("grading rank mismatch");
    long long s = 0;
    for (std::size_t i = 0; i < num_.size(); ++i) s += w.c2[i] * num_[i];
    if (s % den_ != 0) throw std::domain_error("weight has non-integral degree");
    return s / den_;
}

// ----------------------------------------------------------- Character

void Character::add(const Weight& w, long long m) {
    if (m == 0) return;
    auto [it, fresh] = terms.emplace(w, m);
    if (!fresh) {
        it->second += m;
        if (it->second == 0) terms.erase(it);
    }
}

long long Character::at(const Weight& w) const {
    auto it = terms.find(w);
    return it == terms.end() ? 0 : it->second;
}

long long Character::dimension() const {
    long long s = 0;
    for (const auto& [w, m] : terms) s += m;
    return s;
}

Character Character::dual() const {
    Character out;
    for (const auto& [w, m] : terms) out.terms.emplace(-w, m);
    return out;
}

Character& Character::operator+=(const Character& o) {
    for (const auto& [w, m] : o.terms) add(w, m);
    return *this;
}

Character Character::operator+(const Character& o) const {
    Character c = *this;
    c += o;
    return c;
}

Character Character::operator-(const Character& o) const {
    Character c = *this;
    for (const auto& [w, m] : o.terms) c.add(w, -m);
    return c;
}

// ------------------------------------------------------ TruncatedSeries

long long TruncatedSeries::at(const Weight& w) const {
    auto it = terms.find(w);
    return it == terms.end() ? 0 : it->second;
}

SeriesRing::SeriesRing(const RootSystem& rs, std::vector<int> grading)
    : rs_(&rs), deg_(rs, std::move(grading)), ht_(rs, std::vector<int>(rs.rank(), 1)) {}

void SeriesRing::check(const TruncatedSeries& s) const {
    if (s.grading != deg_.on_simple() || s.numerator.rank() != rs_->rank())
        throw std::invalid_argument("series built over a different lattice or grading");
}

long long SeriesRing::rel_height(const TruncatedSeries& s, const Weight& w) const {
    return ht_.degree(w - s.numerator);
}

TruncatedSeries SeriesRing::monomial(const Weight& w) const {
    TruncatedSeries s;
    s.numerator = w;
    s.grading = deg_.on_simple();
    s.terms[w] = 1;
    return s;
}

TruncatedSeries SeriesRing::one() const { return monomial(Weight::zero(rs_->rank())); }

TruncatedSeries SeriesRing::from_character(const Character& c, long long dmin, long long dmax,
                                           int height_cap) const {
    TruncatedSeries s;
    s.numerator = Weight::zero(rs_->rank());
    s.grading = deg_.on_simple();
    s.dmin = dmin;
    s.dmax = dmax;
    s.height_cap = height_cap;
    for (const auto& [w, m] : c.terms) {
        long long d = deg_.degree(w);
        if (d < dmin || d > dmax) continue;
        if (height_cap != kNoHeightCap && ht_.degree(w) > height_cap) continue;
        s.terms[w] = m;
    }
    return s;
}

TruncatedSeries SeriesRing::expand_inverse(const Root& beta, long long dmin, long long dmax,
                                           int height_cap) const {
    if (beta.is_zero()) throw std::invalid_argument("expand_inverse of the zero root");
    long long d = deg_.degree(beta);
    long long h = beta.height();
    if (d < 0 && height_cap == kNoHeightCap)
        throw std::invalid_argument("negative-degree root needs an explicit height cutoff");
    if (d == 0 && (height_cap == kNoHeightCap || h <= 0))
        throw std::invalid_argument("degree-0 root needs a height cutoff");
    if (d <= 0 && h <= 0) throw std::invalid_argument("expansion would not terminate");

    TruncatedSeries s;
    s.numerator = Weight::zero(rs_->rank());
    s.denominator = {beta};
    s.grading = deg_.on_simple();
    s.dmin = dmin;
    s.dmax = dmax;
    s.height_cap = height_cap;
    Weight step = rs_->to_weight(beta);
    Weight cur = Weight::zero(rs_->rank());
    for (long long k = 0;; ++k) {
        long long dk = k * d, hk = k * h;
        if (height_cap != kNoHeightCap && hk > height_cap) break;
        if (d > 0 && dk > dmax) break;
        if (d < 0 && dk < dmin) break;
        if (dk >= dmin && dk <= dmax) s.terms[cur] = 1;
        cur = cur + step;
    }
    return s;
}

TruncatedSeries SeriesRing::multiply(const TruncatedSeries& a, const TruncatedSeries& b) const {
    check(a);
    check(b);
    TruncatedSeries c;
    c.grading = a.grading;
    c.numerator = a.numerator + b.numerator;
    c.denominator = a.denominator;
    c.denominator.insert(c.denominator.end(), b.denominator.begin(), b.denominator.end());
    long long da = deg_.degree(a.numerator), db = deg_.degree(b.numerator);
    auto sat = [](long long x, long long y) {
        long long s = x + y;
        return std::clamp(s, -kDegInf, kDegInf);
    };
    c.dmin = std::max(sat(a.dmin, db), sat(b.dmin, da));
    c.dmax = std::min(sat(a.dmax, db), sat(b.dmax, da));
    c.height_cap = std::min(a.height_cap, b.height_cap);
    for (const auto& [wa, ma] : a.terms) {
        for (const auto& [wb, mb] : b.terms) {
            Weight w = wa + wb;
            long long d = deg_.degree(w);
            if (d < c.dmin || d > c.dmax) continue;
            if (c.height_cap != kNoHeightCap && ht_.degree(w - c.numerator) > c.height_cap)
                continue;
            long long& slot = c.terms[w];
            slot += ma * mb;
            if (slot == 0) c.terms.erase(w);
        }
    }
    return c;
}

TruncatedSeries SeriesRing::add(const TruncatedSeries& a, const TruncatedSeries& b) const {
    check(a);
    check(b);
    TruncatedSeries c = a;
    c.dmin = std::max(a.dmin, b.dmin);
    c.dmax = std::min(a.dmax, b.dmax);
    c.height_cap = std::min(a.height_cap, b.height_cap);
    c.denominator.clear();
    c.terms.clear();
    for (const auto* s : {&a, &b})
        for (const auto& [w, m] : s->terms) {
            long long d = deg_.degree(w);
            if (d < c.dmin || d > c.dmax) continue;
            long long& slot = c.terms[w];
            slot += m;
            if (slot == 0) c.terms.erase(w);
        }
    return c;
}

Character SeriesRing::grade_project(const TruncatedSeries& s, long long n) const {
    check(s);
    if (n < s.dmin || n > s.dmax)
        throw std::out_of_range("degree " + std::to_string(n) + " outside the truncation window");
    Character out;
    for (const auto& [w, m] : s.terms)
        if (deg_.degree(w) == n) out.add(w, m);
    return out;
}

std::pair<long long, long long> SeriesRing::degree_range(const TruncatedSeries& s) const {
    if (s.terms.empty()) throw std::logic_error("degree range of an empty series");
    long long lo = kDegInf, hi = -kDegInf;
    for (const auto& [w, m] : s.terms) {
        long long d = deg_.degree(w);
        lo = std::min(lo, d);
        hi = std::max(hi, d);
    }
    return {lo, hi};
}

std::map<Weight, long long> convolve_terms(const TruncatedSeries& a, const TruncatedSeries& b) {
    std::map<Weight, long long> out;
    for (const auto& [wa, ma] : a.terms)
        for (const auto& [wb, mb] : b.terms) out[wa + wb] += ma * mb;
    for (auto it = out.begin(); it != out.end();)
        it = it->second == 0 ? out.erase(it) : std::next(it);
    return out;
}

// ------------------------------------------------------ Weyl characters

bool is_dominant(const Weight& w) {
    return std::all_of(w.c2.begin(), w.c2.end(), [](int x) { return x >= 0; });
}

namespace {

void require_dominant(const Weight& lam, const RootSystem& rs) {
    if (lam.rank() != rs.rank()) throw std::invalid_argument("weight rank mismatch");
    if (!lam.is_integral()) throw std::invalid_argument("highest weight must be integral");
    if (!is_dominant(lam)) throw std::invalid_argument("highest weight must be dominant");
}

}  // namespace

Character weyl_character(const Weight& lam, const RootSystem& rs) {
    require_dominant(lam, rs);
    WeightGeometry geo(rs);
    Weight rho = rs.half_sum_positive();
    Q top = geo.inner(lam + rho, lam + rho);
    std::map<Weight, long long> mult;
    for (const auto& level : geo.support(lam)) {
        for (const auto& mu : level) {
            if (mu == lam) {
                mult[mu] = 1;
                continue;
            }
            auto dc = rs.dominant_conjugate(mu);
            if (dc.dominant != mu) {
                auto it = mult.find(dc.dominant);
                mult[mu] = it == mult.end() ? 0 : it->second;
                continue;
            }
            Q sum(0);
            for (const auto& alpha : rs.positive_roots()) {
                Weight step = rs.to_weight(alpha);
                Weight nu = mu + step;
                while (geo.below(nu, lam)) {
                    auto it = mult.find(nu);
                    if (it != mult.end() && it->second != 0)
                        sum += Q(it->second) * geo.inner(nu, alpha);
                    nu = nu + step;
                }
            }
            Q den = top - geo.inner(mu + rho, mu + rho);
            Q m = 2 * sum / den;
            if (m.denominator() != 1) throw std::logic_error("non-integral Freudenthal multiplicity");
            mult[mu] = m.numerator();
        }
    }
    Character out;
    for (const auto& [w, m] : mult) out.add(w, m);
    return out;
}

Character weyl_character_kostant(const Weight& lam, const RootSystem& rs) {
    require_dominant(lam, rs);
    WeightGeometry geo(rs);
    const auto& pos = rs.positive_roots();
    const int n = rs.rank();
    Weight rho = rs.half_sum_positive();

    std::map<std::pair<std::size_t, std::vector<int>>, long long> memo;
    // number of ways to write nu as a sum of positive roots pos[k..]
    std::function<long long(std::size_t, const std::vector<int>&)> P =
        [&](std::size_t k, const std::vector<int>& nu) -> long long {
        for (int x : nu)
            if (x < 0) return 0;
        if (std::all_of(nu.begin(), nu.end(), [](int x) { return x == 0; })) return 1;
        if (k == pos.size()) return 0;
        auto key = std::make_pair(k, nu);
        if (auto it = memo.find(key); it != memo.end()) return it->second;
        long long s = 0;
        std::vector<int> cur = nu;
        for (;;) {
            s += P(k + 1, cur);
            bool ok = true;
            for (int i = 0; i < n; ++i) {
                cur[i] -= pos[k].c[i];
                if (cur[i] < 0) ok = false;
            }
            if (!ok) break;
        }
        memo[key] = s;
        return s;
    };

    // w(lam + rho) and sign(w), in root coordinates; root_coords is linear
    std::vector<std::pair<decltype(geo.root_coords(lam)), int>> orbit;
    for (const auto& w : rs.elements())
        orbit.emplace_back(geo.root_coords(rs.act(w, lam + rho)), w.length() % 2 == 0 ? 1 : -1);

    Character out;
    for (const auto& level : geo.support(lam)) {
        for (const auto& mu : level) {
            long long m = 0;
            auto base = geo.root_coords(mu + rho);
            for (const auto& [x, sign] : orbit) {
                std::vector<int> nu(n);
                bool ok = true;
                for (int i = 0; i < n; ++i) {
                    Q d = x[i] - base[i];
                    if (d.denominator() != 1 || d < Q(0)) { ok = false; break; }
                    nu[i] = static_cast<int>(d.numerator());
                }
                if (ok) m += sign * P(0, nu);
            }
            out.add(mu, m);
        }
    }
    return out;
}

long long weyl_dimension(const Weight& lam, const RootSystem& rs) {
    require_dominant(lam, rs);
    WeightGeometry geo(rs);
    Weight rho = rs.half_sum_positive();
    // reduce factor by factor; the full products overflow already for E6
    Q d(1);
    for (const auto& alpha : rs.positive_roots()) d *= geo.inner(lam + rho, alpha) / geo.inner(rho, alpha);
    if (d.denominator() != 1) throw std::logic_error("non-integral Weyl dimension");
    return d.numerator();
}

}  // namespace wonder
