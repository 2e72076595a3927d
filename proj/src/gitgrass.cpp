#include "wonder/gitgrass.hpp"

#include <algorithm>
#include <stdexcept>

#include "wonder/charring.hpp"
#include "wonder/satake.hpp"

namespace wonder {

namespace {

using RatMat = std::vector<std::vector<Rat>>;

// in place; returns the rank
int rref(RatMat& m) {
    const int rows = static_cast<int>(m.size());
    const int cols = rows ? static_cast<int>(m[0].size()) : 0;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int piv = r;
        while (piv < rows && m[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[r], m[piv]);
        Rat inv = 1 / m[r][c];
        for (auto& x : m[r]) x *= inv;
        for (int i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            Rat f = m[i][c];
            for (int j = 0; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        ++r;
    }
    return r;
}

int column_rank(const RatMat& rows, int first, int last) {
    RatMat sub;
    for (const auto& r : rows) sub.emplace_back(r.begin() + first, r.begin() + last);
    return rref(sub);
}

Rat det3(const RatMat& a) {
    return a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) - a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
           a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
}

const RootSystem& gxg_system() {
    static const RootSystem rs = RootSystem::parse("A2xA2");
    return rs;
}

Weight a2_from_eps(const std::array<int, 3>& x) { return Weight::fundamental({x[0] - x[1], x[1] - x[2]}); }

long long binom(long long n, long long k) {
    long long r = 1;
    for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

}  // namespace

PluckerIndex PluckerIndex::from_positions(const std::vector<int>& pos) {
    if (pos.size() != 3) throw std::invalid_argument("a Plucker index has three positions");
    PluckerIndex p;
    for (int x : pos) {
        if (x < 1 || x > 6) throw std::invalid_argument("position out of range 1..6");
        (x <= 3 ? p.I : p.Istar).push_back(x <= 3 ? x : x - 3);
    }
    std::sort(p.I.begin(), p.I.end());
    std::sort(p.Istar.begin(), p.Istar.end());
    if (std::adjacent_find(p.I.begin(), p.I.end()) != p.I.end() ||
        std::adjacent_find(p.Istar.begin(), p.Istar.end()) != p.Istar.end())
        throw std::invalid_argument("repeated position");
    return p;
}

std::vector<int> PluckerIndex::positions() const {
    std::vector<int> out = I;
    for (int j : Istar) out.push_back(j + 3);
    return out;
}

std::vector<PluckerIndex> all_plucker_indices() {
    std::vector<PluckerIndex> out;
    for (int a = 1; a <= 6; ++a)
        for (int b = a + 1; b <= 6; ++b)
            for (int c = b + 1; c <= 6; ++c) out.push_back(PluckerIndex::from_positions({a, b, c}));
    return out;
}

int cstar_weight(const PluckerIndex& p) { return static_cast<int>(p.I.size()) - static_cast<int>(p.Istar.size()); }

Weight gxg_weight(const PluckerIndex& p) {
    std::array<int, 3> x{}, y{};
    for (int i : p.I) x[i - 1] = 1;
    for (int j : p.Istar) y[j - 1] = -1;  // e_j* has weight -eps_j
    Weight a = a2_from_eps(x), b = a2_from_eps(y);
    return Weight::doubled({a.c2[0], a.c2[1], b.c2[0], b.c2[1]});
}

std::string format_plucker(const PluckerIndex& p) {
    auto join = [](const std::vector<int>& v) {
        std::string s;
        for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
        return s;
    };
    return "U_{" + join(p.I) + "}^{" + join(p.Istar) + "}";
}

SubspacePoint::SubspacePoint(const std::vector<std::vector<Rat>>& rows) : rref_(rows) {
    if (rows.size() != 3) throw std::invalid_argument("a point of Gr_3(C^6) needs 3 rows");
    for (const auto& r : rows)
        if (r.size() != 6) throw std::invalid_argument("rows must have 6 entries");
    if (rref(rref_) != 3) throw std::invalid_argument("rows do not span a 3-dimensional subspace");
}

SubspacePoint SubspacePoint::from_ints(const std::vector<std::vector<long long>>& rows) {
    RatMat m;
    for (const auto& r : rows) {
        m.emplace_back();
        for (long long x : r) m.back().emplace_back(x);
    }
    return SubspacePoint(m);
}

SubspacePoint SubspacePoint::coordinate(const std::vector<int>& positions) {
    RatMat m;
    for (int p : PluckerIndex::from_positions(positions).positions()) {
        std::vector<Rat> r(6, Rat(0));
        r[p - 1] = 1;
        m.push_back(r);
    }
    return SubspacePoint(m);
}

SubspacePoint SubspacePoint::graph(const std::array<std::array<Rat, 3>, 3>& mat) {
    RatMat m;
    for (int i = 0; i < 3; ++i) {
        std::vector<Rat> r(6, Rat(0));
        r[i] = 1;
        for (int j = 0; j < 3; ++j) r[3 + j] = mat[j][i];
        m.push_back(r);
    }
    return SubspacePoint(m);
}

Rat SubspacePoint::plucker(const PluckerIndex& p) const {
    auto pos = p.positions();
    RatMat a(3, std::vector<Rat>(3));
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) a[i][j] = rref_[i][pos[j] - 1];
    return det3(a);
}

IntersectionDims intersection_dims(const SubspacePoint& u) {
    // U meets V + 0 in the kernel of the projection onto V*
    return {3 - column_rank(u.rows(), 3, 6), 3 - column_rank(u.rows(), 0, 3)};
}

bool is_semistable(const SubspacePoint& u) {
    auto d = intersection_dims(u);
    return 2 * d.dV <= 3 && 2 * d.dVstar <= 3;
}

bool is_stable(const SubspacePoint& u) {
    auto d = intersection_dims(u);
    return 2 * d.dV < 3 && 2 * d.dVstar < 3;
}

Stratum unstable_component(const SubspacePoint& u) {
    auto d = intersection_dims(u);
    if (d.dV >= 2) return Stratum::F1;
    if (d.dVstar >= 2) return Stratum::F2;
    return Stratum::None;
}

const char* stratum_name(Stratum s) {
    switch (s) {
        case Stratum::F1: return "F1";
        case Stratum::F2: return "F2";
        default: return "none";
    }
}

bool weight_parts_nonzero(const SubspacePoint& u, int cstar) {
    for (const auto& p : all_plucker_indices())
        if (cstar_weight(p) == cstar && u.plucker(p) != 0) return true;
    return false;
}

SubspacePoint apply_elementary(const SubspacePoint& u, int i, int j, const Rat& c) {
    if (!(1 <= i && i < j && j <= 6)) throw std::invalid_argument("need 1 <= i < j <= 6");
    RatMat m = u.rows();
    for (auto& r : m) r[i - 1] += c * r[j - 1];  // coordinates of (1 + c E_ij) x
    return SubspacePoint(m);
}

SubspacePoint swap_blocks(const SubspacePoint& u) {
    RatMat m = u.rows();
    for (auto& r : m) std::rotate(r.begin(), r.begin() + 3, r.end());
    return SubspacePoint(m);
}

SubspacePoint scale_cstar(const SubspacePoint& u, const Rat& t) {
    if (t == 0) throw std::invalid_argument("t must be nonzero");
    RatMat m = u.rows();
    for (auto& r : m)
        for (int j = 0; j < 6; ++j) r[j] *= j < 3 ? t : 1 / t;
    return SubspacePoint(m);
}

namespace {

template <int Sign>
bool form_vanishes(const SubspacePoint& u) {
    const auto& m = u.rows();
    for (int a = 0; a < 3; ++a)
        for (int b = a; b < 3; ++b) {
            Rat s = 0;
            for (int i = 0; i < 3; ++i) s += m[a][i] * m[b][i + 3] + Sign * m[a][i + 3] * m[b][i];
            if (s != 0) return false;
        }
    return true;
}

}  // namespace

bool is_lagrangian(const SubspacePoint& u) { return form_vanishes<-1>(u); }
bool is_orthogonal_isotropic(const SubspacePoint& u) { return form_vanishes<1>(u); }

std::vector<ModuleSummand> decompose_module() {
    const RootSystem& rs = gxg_system();
    Grading order(rs, {3, 3, 3, 3});
    std::vector<ModuleSummand> out;
    const auto idx = all_plucker_indices();
    for (int c : {3, 1, -1, -3}) {
        Character rest;
        for (const auto& p : idx)
            if (cstar_weight(p) == c) rest.add(gxg_weight(p), 1);
        while (!rest.empty()) {
            auto top = rest.terms.begin();
            for (auto it = rest.terms.begin(); it != rest.terms.end(); ++it)
                if (order.degree(it->first) > order.degree(top->first)) top = it;
            Weight hw = top->first;
            long long mult = top->second;
            if (mult < 0 || !is_dominant(hw)) throw std::logic_error("Plucker weights are not a G x G character");
            Character irr = weyl_character(hw, rs);
            for (long long m = 0; m < mult; ++m) {
                rest = rest - irr;
                ModuleSummand s{hw, {}, c, irr.dimension()};
                for (const auto& p : idx)
                    if (cstar_weight(p) == c && gxg_weight(p) == hw) {
                        s.highest_vector = p;
                        break;
                    }
                out.push_back(s);
            }
        }
    }
    std::stable_sort(out.begin(), out.end(), [](const ModuleSummand& a, const ModuleSummand& b) {
        return a.dim != b.dim ? a.dim > b.dim : a.cstar > b.cstar;
    });
    return out;
}

std::vector<InvariantFamily> invariant_generators() {
    const auto parts = decompose_module();
    const int s = static_cast<int>(parts.size());
    int box = 0;
    for (const auto& p : parts) box = std::max(box, std::abs(p.cstar));
    // a Hilbert basis element of {d >= 0 : sum d_i c_i = 0} has entries at most max |c_i|
    std::vector<std::vector<int>> sols;
    std::vector<int> d(s, 0);
    for (;;) {
        int k = s - 1;
        while (k >= 0 && d[k] == box) d[k--] = 0;
        if (k < 0) break;
        ++d[k];
        int w = 0;
        for (int i = 0; i < s; ++i) w += d[i] * parts[i].cstar;
        if (w == 0) sols.push_back(d);
    }
    auto below = [](const std::vector<int>& a, const std::vector<int>& b) {
        if (a == b) return false;
        for (std::size_t i = 0; i < a.size(); ++i)
            if (a[i] > b[i]) return false;
        return true;
    };
    const char letters[] = "xyztuvw";
    std::vector<InvariantFamily> out;
    for (const auto& a : sols) {
        bool minimal = true;
        for (const auto& b : sols)
            if (below(b, a)) minimal = false;
        if (!minimal) continue;
        InvariantFamily f;
        f.degrees = a;
        f.count = 1;
        for (int i = 0; i < s; ++i) {
            f.name += std::string(a[i], letters[i]);
            f.count *= binom(parts[i].dim + a[i] - 1, a[i]);
        }
        out.push_back(f);
    }
    std::sort(out.begin(), out.end(), [](const InvariantFamily& a, const InvariantFamily& b) {
        return a.name.size() != b.name.size() ? a.name.size() < b.name.size() : a.name < b.name;
    });
    return out;
}

Weight spanning_weight(int a1, int a2, int b1, int b2) {
    static const std::vector<Weight> gamma = [] {
        auto d = catalog_diagram("GxG/G-A2");
        auto rr = restricted_system(d);
        std::vector<Weight> g;
        for (const auto& r : rr.spherical_roots) g.push_back(d.system().to_weight(r));
        return g;
    }();
    Weight w1 = Weight::fundamental({1, 0, 1, 0}), w2 = Weight::fundamental({0, 1, 0, 1});
    return w1 * a1 + w2 * a2 + gamma[0] * b1 + gamma[1] * b2;
}

SheafDescriptor sheaf_correspondence(const Weight& lambda) {
    if (lambda.rank() != 4 || !lambda.is_integral() || lambda.c2[0] != lambda.c2[2] || lambda.c2[1] != lambda.c2[3])
        throw std::domain_error("weight " + format_weight(lambda) + " is not in the span of the (varpi_i, varpi_i')");
    const int p = lambda.coord(0), q = lambda.coord(1);
    // varpi~1 -> (1, -1), varpi~2 -> (1, 1)
    return {lambda, p + q, q - p};
}

}  // namespace wonder
