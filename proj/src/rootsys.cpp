#include "wonder/rootsys.hpp"

#include <algorithm>
#include <boost/rational.hpp>
#include <deque>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

namespace wonder {

using Q = boost::rational<long long>;

// ---------------------------------------------------------------- Root

int Root::height() const { return std::accumulate(c.begin(), c.end(), 0); }

bool Root::is_zero() const {
    return std::all_of(c.begin(), c.end(), [](int x) { return x == 0; });
}

bool Root::is_positive() const {
    return !is_zero() && std::all_of(c.begin(), c.end(), [](int x) { return x >= 0; });
}

bool Root::is_negative() const {
    return !is_zero() && std::all_of(c.begin(), c.end(), [](int x) { return x <= 0; });
}

Root Root::operator-() const {
    Root r = *this;
    for (int& x : r.c) x = -x;
    return r;
}

Root Root::operator+(const Root& o) const {
    Root r = *this;
    for (std::size_t i = 0; i < c.size(); ++i) r.c[i] += o.c[i];
    return r;
}

Root Root::operator-(const Root& o) const { return *this + (-o); }

Root Root::operator*(int k) const {
    Root r = *this;
    for (int& x : r.c) x *= k;
    return r;
}

Root Root::simple(int rank, int i) {
    Root r{std::vector<int>(rank, 0)};
    r.c.at(i) = 1;
    return r;
}

// -------------------------------------------------------------- Weight

Weight Weight::fundamental(const std::vector<int>& coords) {
    Weight w{coords};
    for (int& x : w.c2) x *= 2;
    return w;
}

Weight Weight::fundamental_weight(int rank, int i) {
    Weight w = zero(rank);
    w.c2.at(i) = 2;
    return w;
}

bool Weight::is_integral() const {
    return std::all_of(c2.begin(), c2.end(), [](int x) { return x % 2 == 0; });
}

int Weight::coord(int i) const {
    int v = c2.at(i);
    if (v % 2 != 0) throw std::domain_error("half-integral weight coordinate");
    return v / 2;
}

Weight Weight::operator-() const {
    Weight w = *this;
    for (int& x : w.c2) x = -x;
    return w;
}

Weight Weight::operator+(const Weight& o) const {
    if (o.c2.size() != c2.size()) throw std::invalid_argument("weight rank mismatch");
    Weight w = *this;
    for (std::size_t i = 0; i < c2.size(); ++i) w.c2[i] += o.c2[i];
    return w;
}

Weight Weight::operator-(const Weight& o) const { return *this + (-o); }

Weight Weight::operator*(int k) const {
    Weight w = *this;
    for (int& x : w.c2) x *= k;
    return w;
}

// ---------------------------------------------------------- Cartan data

IntMat cartan_matrix(char series, int n) {
    auto bad = [&] {
        throw std::invalid_argument(std::string("invalid root system type ") + series +
                                    std::to_string(n));
    };
    bool ok = false;
    switch (series) {
        case 'A': ok = n >= 1; break;
        case 'B': ok = n >= 2; break;
        case 'C': ok = n >= 2; break;
        case 'D': ok = n >= 4; break;
        case 'E': ok = n >= 6 && n <= 8; break;
        case 'F': ok = n == 4; break;
        case 'G': ok = n == 2; break;
        default: ok = false;
    }
    if (!ok) bad();

    IntMat c(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i) c[i][i] = 2;
    auto link = [&](int i, int j) { c[i][j] = c[j][i] = -1; };

    switch (series) {
        case 'A':
            for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
            break;
        case 'B':  // alpha_n short
            for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
            c[n - 2][n - 1] = -2;
            break;
        case 'C':  // alpha_n long
            for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
            c[n - 1][n - 2] = -2;
            break;
        case 'D':
            for (int i = 0; i + 2 < n; ++i) link(i, i + 1);
            link(n - 3, n - 1);
            break;
        case 'E':  // Bourbaki: 1-3-4-5-6-7-8 with 2 on 4
            link(0, 2);
            link(1, 3);
            for (int i = 2; i + 1 < n; ++i) link(i, i + 1);
            break;
        case 'F':  // alpha_1, alpha_2 long
            link(0, 1);
            link(2, 3);
            c[1][2] = -2;
            c[2][1] = -1;
            break;
        case 'G':  // alpha_1 short
            c[0][1] = -1;
            c[1][0] = -3;
            break;
    }
    return c;
}

std::size_t classical_root_count(char series, int n) {
    switch (series) {
        case 'A': return static_cast<std::size_t>(n) * (n + 1);
        case 'B':
        case 'C': return 2u * n * n;
        case 'D': return 2u * n * (n - 1);
        case 'E': return n == 6 ? 72 : n == 7 ? 126 : 240;
        case 'F': return 48;
        case 'G': return 12;
    }
    throw std::invalid_argument("unknown series");
}

namespace {

bool match_under_permutation(const IntMat& a, const IntMat& b) {
    const int n = static_cast<int>(a.size());
    if (static_cast<int>(b.size()) != n) return false;
    std::vector<int> perm(n, -1);
    std::vector<bool> used(n, false);
    std::function<bool(int)> go = [&](int i) -> bool {
        if (i == n) return true;
        for (int x = 0; x < n; ++x) {
            if (used[x]) continue;
            bool fits = a[x][x] == b[i][i];
            for (int j = 0; j < i && fits; ++j)
                fits = a[x][perm[j]] == b[i][j] && a[perm[j]][x] == b[j][i];
            if (!fits) continue;
            used[x] = true;
            perm[i] = x;
            if (go(i + 1)) return true;
            used[x] = false;
        }
        return false;
    };
    return go(0);
}

}  // namespace

std::string identify_cartan(const IntMat& c) {
    const int n = static_cast<int>(c.size());
    if (n == 0) return "";
    struct Cand { char s; int lo, hi; };
    const Cand cands[] = {{'A', 1, 64}, {'B', 2, 64}, {'C', 3, 64}, {'D', 4, 64},
                          {'E', 6, 8},  {'F', 4, 4},  {'G', 2, 2}};
    for (const auto& cd : cands) {
        if (n < cd.lo || n > cd.hi) continue;
        if (match_under_permutation(c, cartan_matrix(cd.s, n)))
            return std::string(1, cd.s) + std::to_string(n);
    }
    return "";
}

// ---------------------------------------------------------- RootSystem

RootSystem RootSystem::from_cartan(std::string label, IntMat cartan) {
    RootSystem rs;
    rs.label_ = std::move(label);
    rs.rank_ = static_cast<int>(cartan.size());
    if (rs.rank_ == 0) throw std::invalid_argument("empty Cartan matrix");
    for (const auto& row : cartan)
        if (static_cast<int>(row.size()) != rs.rank_)
            throw std::invalid_argument("Cartan matrix is not square");
    for (int i = 0; i < rs.rank_; ++i)
        for (int j = 0; j < rs.rank_; ++j) {
            if (i == j && cartan[i][j] != 2) throw std::invalid_argument("Cartan diagonal must be 2");
            if (i != j && cartan[i][j] > 0) throw std::invalid_argument("positive off-diagonal entry");
            if (i != j && (cartan[i][j] == 0) != (cartan[j][i] == 0))
                throw std::invalid_argument("Cartan matrix zero pattern not symmetric");
        }
    rs.cartan_ = std::move(cartan);

    // squared lengths: cartan[i][j] * d_j = cartan[j][i] * d_i
    std::vector<Q> d(rs.rank_, Q(0));
    for (int start = 0; start < rs.rank_; ++start) {
        if (d[start] != Q(0)) continue;
        std::vector<int> comp;
        std::deque<int> todo{start};
        d[start] = 1;
        while (!todo.empty()) {
            int i = todo.front();
            todo.pop_front();
            comp.push_back(i);
            for (int j = 0; j < rs.rank_; ++j) {
                if (j == i || rs.cartan_[i][j] == 0) continue;
                Q dj = d[i] * Q(rs.cartan_[j][i], rs.cartan_[i][j]);
                if (d[j] == Q(0)) {
                    d[j] = dj;
                    todo.push_back(j);
                } else if (d[j] != dj) {
                    throw std::invalid_argument("Cartan matrix is not symmetrizable");
                }
            }
        }
        Q mn = d[comp[0]];
        for (int i : comp) mn = std::min(mn, d[i]);
        for (int i : comp) d[i] = d[i] / mn * 2;
    }
    rs.norms_.resize(rs.rank_);
    for (int i = 0; i < rs.rank_; ++i) {
        if (d[i].denominator() != 1) throw std::invalid_argument("non-integral root lengths");
        rs.norms_[i] = static_cast<int>(d[i].numerator());
    }
    rs.enumerate();
    return rs;
}

RootSystem RootSystem::build(char series, int rank) {
    return from_cartan(std::string(1, series) + std::to_string(rank), cartan_matrix(series, rank));
}

RootSystem RootSystem::parse(const std::string& label) {
    std::vector<RootSystem> parts;
    std::stringstream ss(label);
    std::string tok;
    while (std::getline(ss, tok, 'x')) {
        if (tok.size() < 2 || !std::isupper(static_cast<unsigned char>(tok[0])))
            throw std::invalid_argument("bad root system label '" + label + "'");
        int n = 0;
        try {
            std::size_t used = 0;
            n = std::stoi(tok.substr(1), &used);
            if (used + 1 != tok.size()) throw std::invalid_argument("");
        } catch (const std::exception&) {
            throw std::invalid_argument("bad root system label '" + label + "'");
        }
        parts.push_back(build(tok[0], n));
    }
    if (parts.empty()) throw std::invalid_argument("empty root system label");
    return parts.size() == 1 ? parts[0] : product(parts);
}

RootSystem RootSystem::product(const std::vector<RootSystem>& parts) {
    int n = 0;
    std::string label;
    for (const auto& p : parts) {
        n += p.rank();
        label += (label.empty() ? "" : "x") + p.label();
    }
    IntMat c(n, std::vector<int>(n, 0));
    int off = 0;
    for (const auto& p : parts) {
        for (int i = 0; i < p.rank(); ++i)
            for (int j = 0; j < p.rank(); ++j) c[off + i][off + j] = p.cartan()[i][j];
        off += p.rank();
    }
    return from_cartan(label, c);
}

void RootSystem::enumerate() {
    std::deque<std::vector<int>> todo;
    for (int i = 0; i < rank_; ++i) {
        auto s = Root::simple(rank_, i).c;
        if (all_.insert(s).second) todo.push_back(s);
    }
    while (!todo.empty()) {
        Root x{todo.front()};
        todo.pop_front();
        for (int i = 0; i < rank_; ++i) {
            Root y = reflect(x, i);
            if (all_.insert(y.c).second) todo.push_back(y.c);
        }
    }
    for (const auto& v : all_) {
        Root r{v};
        if (!r.is_positive() && !r.is_negative()) throw std::logic_error("mixed-sign root");
        if (r.is_positive()) positive_.push_back(r);
    }
    std::sort(positive_.begin(), positive_.end(), [](const Root& a, const Root& b) {
        if (a.height() != b.height()) return a.height() < b.height();
        return a.c > b.c;
    });
    rho_fund_.assign(rank_, 1);
}

std::vector<Root> RootSystem::roots() const {
    std::vector<Root> out = positive_;
    for (const auto& r : positive_) out.push_back(-r);
    return out;
}

bool RootSystem::is_connected() const { return components().size() == 1; }

std::vector<std::vector<int>> RootSystem::components() const {
    std::vector<int> seen(rank_, -1);
    std::vector<std::vector<int>> out;
    for (int s = 0; s < rank_; ++s) {
        if (seen[s] >= 0) continue;
        std::vector<int> comp;
        std::deque<int> todo{s};
        seen[s] = static_cast<int>(out.size());
        while (!todo.empty()) {
            int i = todo.front();
            todo.pop_front();
            comp.push_back(i);
            for (int j = 0; j < rank_; ++j)
                if (j != i && cartan_[i][j] != 0 && seen[j] < 0) {
                    seen[j] = seen[s];
                    todo.push_back(j);
                }
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(comp);
    }
    return out;
}

Root RootSystem::highest_root() const {
    if (!is_connected()) throw std::logic_error("highest root of a disconnected system");
    return positive_.back();
}

int RootSystem::pairing(const Root& x, int i) const {
    if (i < 0 || i >= rank_) throw std::out_of_range("simple index out of range");
    int s = 0;
    for (int j = 0; j < rank_; ++j) s += x.c[j] * cartan_[j][i];
    return s;
}

int RootSystem::pairing2(const Weight& x, int i) const {
    if (i < 0 || i >= rank_) throw std::out_of_range("simple index out of range");
    return x.c2.at(i);
}

int RootSystem::pairing(const Weight& x, int i) const {
    if (i < 0 || i >= rank_) throw std::out_of_range("simple index out of range");
    return x.coord(i);
}

int RootSystem::form(const Root& a, const Root& b) const {
    long long s = 0;
    for (int i = 0; i < rank_; ++i) {
        if (a.c[i] == 0) continue;
        for (int j = 0; j < rank_; ++j) s += 1LL * a.c[i] * b.c[j] * cartan_[i][j] * norms_[j];
    }
    return static_cast<int>(s / 2);
}

int RootSystem::coroot_pairing(const Root& x, const Root& alpha) const {
    int num = 2 * form(x, alpha), den = form(alpha, alpha);
    if (den == 0 || num % den != 0) throw std::domain_error("non-integral coroot pairing");
    return num / den;
}

Root RootSystem::reflect(const Root& x, int i) const {
    Root y = x;
    y.c[i] -= pairing(x, i);
    return y;
}

Weight RootSystem::reflect(const Weight& x, int i) const {
    Weight y = x;
    int p = x.c2[i];
    for (int j = 0; j < rank_; ++j) y.c2[j] -= p * cartan_[i][j];
    return y;
}

Root RootSystem::act(const WeylElement& w, const Root& x) const {
    Root y = x;
    for (auto it = w.word.rbegin(); it != w.word.rend(); ++it) y = reflect(y, *it);
    return y;
}

Weight RootSystem::act(const WeylElement& w, const Weight& x) const {
    Weight y = x;
    for (auto it = w.word.rbegin(); it != w.word.rend(); ++it) y = reflect(y, *it);
    return y;
}

namespace {

// Weyl element from the image x = w(rho) of rho: peel off the smallest left
// descent each time, which yields the lexicographically least reduced word.
std::vector<int> word_from_rho_image(const RootSystem& rs, Weight x) {
    std::vector<int> word;
    for (;;) {
        int d = -1;
        for (int i = 0; i < rs.rank(); ++i)
            if (x.c2[i] < 0) { d = i; break; }
        if (d < 0) break;
        word.push_back(d);
        x = rs.reflect(x, d);
    }
    return word;
}

}  // namespace

WeylElement RootSystem::canonical(const std::vector<int>& word) const {
    for (int i : word)
        if (i < 0 || i >= rank_) throw std::out_of_range("reflection index out of range");
    Weight rho = Weight::fundamental(rho_fund_);
    Weight x = act(WeylElement{word}, rho);
    return WeylElement{word_from_rho_image(*this, x)};
}

WeylElement RootSystem::multiply(const WeylElement& a, const WeylElement& b) const {
    std::vector<int> w = a.word;
    w.insert(w.end(), b.word.begin(), b.word.end());
    return canonical(w);
}

WeylElement RootSystem::inverse(const WeylElement& w) const {
    return canonical(std::vector<int>(w.word.rbegin(), w.word.rend()));
}

WeylElement RootSystem::longest() const {
    return WeylElement{word_from_rho_image(*this, -Weight::fundamental(rho_fund_))};
}

std::vector<WeylElement> RootSystem::elements() const {
    Weight rho = Weight::fundamental(rho_fund_);
    std::set<Weight> seen{rho};
    std::deque<Weight> todo{rho};
    while (!todo.empty()) {
        Weight x = todo.front();
        todo.pop_front();
        for (int i = 0; i < rank_; ++i) {
            Weight y = reflect(x, i);
            if (seen.insert(y).second) todo.push_back(y);
        }
        if (seen.size() > 5'000'000) throw std::length_error("Weyl group too large to list");
    }
    std::vector<WeylElement> out;
    for (const auto& x : seen) out.push_back(WeylElement{word_from_rho_image(*this, x)});
    std::sort(out.begin(), out.end(), [](const WeylElement& a, const WeylElement& b) {
        return a.length() != b.length() ? a.length() < b.length() : a.word < b.word;
    });
    return out;
}

std::vector<WeylElement> RootSystem::coset_reps(const std::vector<int>& parabolic_subset) const {
    std::vector<int> lam(rank_, 1);
    for (int i : parabolic_subset) {
        if (i < 0 || i >= rank_) throw std::out_of_range("parabolic index out of range");
        lam[i] = 0;
    }
    Weight base = Weight::fundamental(lam);
    std::set<Weight> orbit{base};
    std::deque<Weight> todo{base};
    while (!todo.empty()) {
        Weight x = todo.front();
        todo.pop_front();
        for (int i = 0; i < rank_; ++i) {
            Weight y = reflect(x, i);
            if (orbit.insert(y).second) todo.push_back(y);
        }
    }
    std::vector<WeylElement> out;
    for (Weight x : orbit) {
        std::vector<int> word;
        for (;;) {
            int d = -1;
            for (int i = 0; i < rank_; ++i)
                if (x.c2[i] < 0) { d = i; break; }
            if (d < 0) break;
            word.push_back(d);
            x = reflect(x, d);
        }
        out.push_back(canonical(word));
    }
    std::sort(out.begin(), out.end(), [](const WeylElement& a, const WeylElement& b) {
        return a.length() != b.length() ? a.length() < b.length() : a.word < b.word;
    });
    return out;
}

WeylElement RootSystem::longest_coset_rep(const std::vector<int>& parabolic_subset) const {
    return coset_reps(parabolic_subset).back();
}

DominantConjugate RootSystem::dominant_conjugate(const Weight& mu) const {
    Weight x = mu;
    std::vector<int> steps;
    for (;;) {
        int d = -1;
        for (int i = 0; i < rank_; ++i)
            if (x.c2[i] < 0) { d = i; break; }
        if (d < 0) break;
        steps.push_back(d);
        x = reflect(x, d);
    }
    DominantConjugate out;
    out.dominant = x;
    out.w = canonical(std::vector<int>(steps.rbegin(), steps.rend()));
    out.length = out.w.length();
    out.regular = std::all_of(x.c2.begin(), x.c2.end(), [](int v) { return v > 0; });
    return out;
}

Weight RootSystem::to_weight(const Root& r) const {
    Weight w = Weight::zero(rank_);
    for (int j = 0; j < rank_; ++j) w.c2[j] = 2 * pairing(r, j);
    return w;
}

Weight RootSystem::half_sum_positive() const {
    Root sum{std::vector<int>(rank_, 0)};
    for (const auto& r : positive_) sum = sum + r;
    Weight w = to_weight(sum);
    for (int& x : w.c2) x /= 2;
    return w;
}

std::optional<std::vector<int>> RootSystem::root_coords2(const Weight& mu) const {
    // solve r * C = mu (row vectors) by Gauss-Jordan on the transpose
    const int n = rank_;
    std::vector<std::vector<Q>> a(n, std::vector<Q>(n + 1));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) a[i][j] = cartan_[j][i];
        a[i][n] = mu.c2[i];
    }
    for (int col = 0; col < n; ++col) {
        int piv = col;
        while (a[piv][col] == Q(0)) ++piv;
        std::swap(a[piv], a[col]);
        for (int i = 0; i < n; ++i) {
            if (i == col || a[i][col] == Q(0)) continue;
            Q f = a[i][col] / a[col][col];
            for (int j = col; j <= n; ++j) a[i][j] -= f * a[col][j];
        }
    }
    std::vector<int> out(n);
    for (int i = 0; i < n; ++i) {
        Q v = a[i][n] / a[i][i];
        if (v.denominator() != 1) return std::nullopt;
        out[i] = static_cast<int>(v.numerator());
    }
    return out;
}

// ------------------------------------------------------------ printing

std::string format_word(const WeylElement& w) {
    if (w.word.empty()) return "e";
    std::string s;
    for (int i : w.word) s += "s" + std::to_string(i + 1);
    return s;
}

std::string format_root(const Root& r) {
    std::string s;
    for (int i = 0; i < r.rank(); ++i) {
        int c = r.c[i];
        if (c == 0) continue;
        if (c < 0) s += "-";
        else if (!s.empty()) s += "+";
        if (std::abs(c) != 1) s += std::to_string(std::abs(c));
        s += "a" + std::to_string(i + 1);
    }
    return s.empty() ? "0" : s;
}

std::string format_weight(const Weight& w) {
    std::string s = "(";
    for (int i = 0; i < w.rank(); ++i) {
        if (i) s += ",";
        int v = w.c2[i];
        s += v % 2 == 0 ? std::to_string(v / 2) : std::to_string(v) + "/2";
    }
    return s + ")";
}

}  // namespace wonder
