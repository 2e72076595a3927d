#include "wonder/wondercoh.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <map>
#include <mutex>
#include <optional>
#include <tuple>

#include "wonder/gitgrass.hpp"
#include "wonder/satake.hpp"

namespace wonder {

const SphericalData& pgl3_data() {
    static const SphericalData d = [] {
        auto diag = catalog_diagram("GxG/G-A2");
        const RootSystem& rs = diag.system();
        SphericalData s{rs, {}, rs.half_sum_positive(), 0, Weight::zero(rs.rank()), Weight::zero(rs.rank())};
        for (const auto& g : restricted_system(diag).spherical_roots) s.sigma.push_back(rs.to_weight(g));
        s.dimY = static_cast<int>(rs.num_roots() + rs.rank()) / 2;  // dim G x G - dim G
        for (const auto& r : phi_split(diag).phi1)
            if (r.is_positive()) s.phi1_sum = s.phi1_sum + rs.to_weight(r);
        // Serre duality on Y needs the boundary divisors on top of phi1_sum
        s.canonical_shift = s.phi1_sum;
        for (const auto& g : s.sigma) s.canonical_shift = s.canonical_shift + g;
        return s;
    }();
    return d;
}

namespace {

// (mu, gamma) up to a positive factor, gamma in the root lattice

long long inner(const RootSystem& rs, const Weight& mu, const Weight& gamma) {
    auto g2 = rs.root_coords2(gamma);
    if (!g2) throw std::logic_error("spherical root outside the root lattice");
    long long s = 0;
    for (int i = 0; i < rs.rank(); ++i) s += static_cast<long long>((*g2)[i]) * rs.norm(i) * rs.pairing2(mu, i);
    return s;
}

// A term has z = v + G c with c_j z_j <= 0 for every j, v_j = (lambda + rho,
// gamma_j) and G the Gram matrix of the spherical roots. So c.G.c <= |c| |v|
// and |c| <= |v| / (least eigenvalue of G); one more for the shell test.
int auto_radius(const Weight& lambda) {
    const SphericalData& sd = pgl3_data();
    const RootSystem& rs = sd.system;
    const int r = static_cast<int>(sd.sigma.size());
    double v2 = 0;
    for (int j = 0; j < r; ++j) {
        double v = static_cast<double>(inner(rs, lambda + sd.rho, sd.sigma[j]));
        v2 += v * v;
    }
    // Gershgorin lower bound on the least eigenvalue
    double m = std::numeric_limits<double>::infinity();
    for (int j = 0; j < r; ++j) {
        double row = static_cast<double>(inner(rs, sd.sigma[j], sd.sigma[j]));
        for (int i = 0; i < r; ++i)
            if (i != j) row -= std::abs(static_cast<double>(inner(rs, sd.sigma[j], sd.sigma[i])));
        m = std::min(m, row);
    }
    if (m <= 0) throw std::logic_error("Gram matrix of the spherical roots is not diagonally dominant");
    return static_cast<int>(std::ceil(std::sqrt(v2) / m)) + 1;
}

}  // namespace

TchoudjemExpansion tchoudjem_expand(const Weight& lambda, int radius) {
    const SphericalData& sd = pgl3_data();
    const RootSystem& rs = sd.system;
    if (lambda.rank() != rs.rank()) throw std::invalid_argument("weight of the wrong rank for A2xA2");
    // Pic(Y) is the diagonal (lambda, lambda') inside the weights of G x G
    if (!lambda.is_integral() || lambda.c2[0] != lambda.c2[2] || lambda.c2[1] != lambda.c2[3])
        throw std::domain_error("line bundles on Y need an integral diagonal weight, got " + format_weight(lambda));
    const int r = static_cast<int>(sd.sigma.size());
    TchoudjemExpansion out;
    out.radius = radius > 0 ? radius : auto_radius(lambda);
    out.certified = true;
    std::vector<int> c(r, -out.radius);
    for (;;) {
        Weight mu = lambda;
        std::vector<int> J;
        for (int j = 0; j < r; ++j) {
            mu = mu + sd.sigma[j] * c[j];
            if (c[j] > 0) J.push_back(j);
        }
        Weight shifted = mu + sd.rho;
        std::vector<int> neg;
        for (int j = 0; j < r; ++j)
            if (inner(rs, shifted, sd.sigma[j]) < 0) neg.push_back(j);
        if (neg == J) {
            auto dc = rs.dominant_conjugate(shifted);
            bool regular = std::all_of(dc.dominant.c2.begin(), dc.dominant.c2.end(), [](int x) { return x > 0; });
            if (regular) {
                TchoudjemTerm t{J, c, mu, dc.dominant - sd.rho, dc.length, dc.length + static_cast<int>(J.size())};
                out.terms.push_back(t);
                for (int x : c)
                    if (std::abs(x) == out.radius) out.certified = false;
            }
        }
        int k = r - 1;
        while (k >= 0 && c[k] == out.radius) c[k--] = -out.radius;
        if (k < 0) break;
        ++c[k];
    }
    std::sort(out.terms.begin(), out.terms.end(), [](const TchoudjemTerm& a, const TchoudjemTerm& b) {
        return a.degree != b.degree ? a.degree < b.degree : a.mu_plus < b.mu_plus;
    });
    return out;
}

namespace {

TchoudjemExpansion certified_expand(const Weight& lambda, int radius) {
    auto e = tchoudjem_expand(lambda, radius);
    if (!e.certified)
        throw CertificationError("Tchoudjem terms reach the boundary of the box of radius " + std::to_string(e.radius) +
                                 " for lambda = " + format_weight(lambda));
    return e;
}

}  // namespace

std::vector<Weight> tchoudjem_components(const Weight& lambda, int i, int radius) {
    std::vector<Weight> out;
    for (const auto& t : certified_expand(lambda, radius).terms)
        if (t.degree == i) out.push_back(t.mu_plus);
    std::sort(out.begin(), out.end());
    return out;
}

Character h_character(const Weight& lambda, int i, int radius) {
    Character out;
    for (const auto& mu : tchoudjem_components(lambda, i, radius)) out += weyl_character(mu, pgl3_data().system).dual();
    return out;
}

std::set<int> vanishing_profile(const Weight& lambda, int radius) {
    std::set<int> out;
    for (const auto& t : certified_expand(lambda, radius).terms) out.insert(t.degree);
    return out;
}

bool serre_dual_check(const Weight& lambda, int i, const Weight& shift, int radius) {
    // irreducible characters are independent, so the characters agree iff the
    // highest weights do: [V*_a] = dual [V*_b] means a = -w0 b
    const RootSystem& rs = pgl3_data().system;
    const int top = pgl3_data().dimY;
    if (i < 0 || i > top) throw std::invalid_argument("cohomological degree out of range");
    auto a = tchoudjem_components(lambda, i, radius);
    std::vector<Weight> b;
    for (const auto& m : tchoudjem_components(-lambda - shift, top - i, radius)) b.push_back(-rs.act(rs.longest(), m));
    std::sort(b.begin(), b.end());
    return a == b;
}

bool serre_dual_check(const Weight& lambda, int i, int radius) {
    return serre_dual_check(lambda, i, pgl3_data().canonical_shift, radius);
}

Weight a5_to_gxg(const Weight& x) {
    if (x.rank() != 5) throw std::invalid_argument("expected an A5 weight");
    // dual of the gxg_weight reading: local cohomology of s(L) pairs with
    // H^3(Y, L) through V* on the first factor
    return Weight::doubled({-x.c2[0], -x.c2[1], x.c2[3], x.c2[4]});
}

namespace {

// the A5 weight of grade n over a G x G weight, if there is one
std::optional<Weight> gxg_to_a5(const Weight& m, long long n) {
    // n = d1/2 + d2 + 3 d3/2 + d4 + d5/2 in doubled coordinates
    long long d1 = -m.c2[0], d2 = -m.c2[1], d4 = m.c2[2], d5 = m.c2[3];
    long long num = 2 * n - d1 - 2 * d2 - 2 * d4 - d5;
    if (num % 3 != 0) return std::nullopt;
    return Weight::doubled({(int)d1, (int)d2, (int)(num / 3), (int)d4, (int)d5});
}

Character to_gxg(const Character& c) {
    Character out;
    for (const auto& [w, m] : c.terms) out.add(a5_to_gxg(w), m);
    return out;
}

}  // namespace

const UnstableBounds& cached_bounds(Stratum s, int k, const KempfOptions& opt) {
    using Key = std::tuple<int, int, long long, long long, int>;
    static std::map<Key, UnstableBounds> cache;
    static std::mutex mu;
    Key key{static_cast<int>(s), k, opt.dmin, opt.dmax, opt.height_cap};
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, unstable_character_bounds(s, k, opt, Mirror::BlockSwap)).first;
    return it->second;
}

CrossReport cross_validate_h3(const Weight& lambda, const KempfOptions& opt, int radius) {
    CrossReport rep;
    rep.lambda = lambda;
    auto sd = sheaf_correspondence(lambda);
    rep.k = sd.k;
    rep.n = sd.n;
    rep.h3 = h_character(lambda, 3, radius);
    if (rep.n < opt.dmin || rep.n > opt.dmax) {
        rep.certified = false;
        rep.violations.push_back("grade " + std::to_string(rep.n) + " outside the degree window");
        return rep;
    }
    const UnstableBounds* b[2] = {&cached_bounds(Stratum::F1, rep.k, opt), &cached_bounds(Stratum::F2, rep.k, opt)};
    for (int s = 0; s < 2; ++s) {
        rep.upper[s] = to_gxg(grade_slice(b[s]->upper, rep.n));
        rep.lower[s] = to_gxg(grade_slice(b[s]->lower, rep.n));
    }
    auto exact = [&](const Weight& w) {
        auto x = gxg_to_a5(w, rep.n);
        return !x || (b[0]->exact_at(*x) && b[1]->exact_at(*x));
    };
    auto check = [&](const Weight& w) {
        long long h = rep.h3.at(w);
        long long lo = rep.lower[0].at(w) + rep.lower[1].at(w);
        long long hi = rep.upper[0].at(w) + rep.upper[1].at(w);
        if (h < lo || h > hi)
            rep.violations.push_back("weight " + format_weight(w) + ": H3 multiplicity " + std::to_string(h) +
                                     " outside [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
    };
    // every H3 weight has to sit where both series are exact
    for (const auto& [w, m] : rep.h3.terms) {
        if (!exact(w)) {
            rep.certified = false;
            ++rep.skipped;
            continue;
        }
        check(w);
    }
    // past the height cap the truncated lower bound means nothing
    for (int s = 0; s < 2; ++s)
        for (const auto& [w, m] : rep.lower[s].terms) {
            if (!exact(w)) {
                ++rep.skipped;
                continue;
            }
            rep.contributes[s] = true;
            if (rep.h3.at(w) == 0 && (s == 0 || rep.lower[0].at(w) == 0)) check(w);
        }
    return rep;
}

}  // namespace wonder
