#include "wonder/satake.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace wonder {

namespace {

// highest positive root with coefficient 1 on `lead`, zero on the other
// whites, anything on blacks
Root highest_over_blacks(const RootSystem& rs, const std::vector<Color>& color, int lead) {
    const Root* best = nullptr;
    for (const auto& r : rs.positive_roots()) {
        if (r.c[lead] != 1) continue;
        bool ok = true;
        for (int j = 0; j < rs.rank(); ++j)
            if (j != lead && color[j] == Color::White && r.c[j] != 0) ok = false;
        if (ok && (!best || r.height() > best->height())) best = &r;
    }
    return *best;  // alpha_lead itself always qualifies
}

struct UnionFind {
    std::vector<int> p;
    explicit UnionFind(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
    int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
    void unite(int a, int b) { p[find(a)] = find(b); }
};

std::string label_of(const IntMat& c) {
    // split into connected pieces and identify each
    const int n = static_cast<int>(c.size());
    UnionFind uf(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j && c[i][j] != 0) uf.unite(i, j);
    std::map<int, std::vector<int>> groups;
    for (int i = 0; i < n; ++i) groups[uf.find(i)].push_back(i);
    std::vector<std::vector<int>> parts;
    for (auto& [_, g] : groups) parts.push_back(g);
    std::sort(parts.begin(), parts.end());
    std::string out;
    for (const auto& g : parts) {
        IntMat sub(g.size(), std::vector<int>(g.size()));
        for (std::size_t a = 0; a < g.size(); ++a)
            for (std::size_t b = 0; b < g.size(); ++b) sub[a][b] = c[g[a]][g[b]];
        std::string s = identify_cartan(sub);
        if (s.empty()) return "";
        if (!out.empty()) out += "x";
        out += s;
    }
    return out;
}

IntMat submatrix(const IntMat& c, const std::vector<int>& idx) {
    IntMat sub(idx.size(), std::vector<int>(idx.size()));
    for (std::size_t a = 0; a < idx.size(); ++a)
        for (std::size_t b = 0; b < idx.size(); ++b) sub[a][b] = c[idx[a]][idx[b]];
    return sub;
}

}  // namespace

SatakeDiagram::SatakeDiagram(std::string name, RootSystem rs, const std::vector<int>& black,
                             const std::vector<std::pair<int, int>>& arrows)
    : name_(std::move(name)), rs_(std::move(rs)) {
    const int n = rs_.rank();
    color_.assign(n, Color::White);
    partner_.resize(n);
    std::iota(partner_.begin(), partner_.end(), 0);
    for (int b : black) {
        if (b < 0 || b >= n) throw std::invalid_argument("black vertex out of range");
        color_[b] = Color::Black;
    }
    for (auto [a, b] : arrows) {
        if (a < 0 || a >= n || b < 0 || b >= n || a == b)
            throw std::invalid_argument("bad arrow");
        if (color_[a] == Color::Black || color_[b] == Color::Black)
            throw std::invalid_argument("arrows may only join white vertices");
        if (partner_[a] != a || partner_[b] != b)
            throw std::invalid_argument("a white vertex carries at most one arrow");
        partner_[a] = b;
        partner_[b] = a;
    }
    mts_.resize(n);
    for (int i = 0; i < n; ++i)
        mts_[i] = color_[i] == Color::Black ? -Root::simple(n, i)
                                            : highest_over_blacks(rs_, color_, partner_[i]);
}

std::vector<int> SatakeDiagram::black_vertices() const {
    std::vector<int> out;
    for (int i = 0; i < rs_.rank(); ++i)
        if (is_black(i)) out.push_back(i);
    return out;
}

std::vector<std::pair<int, int>> SatakeDiagram::arrows() const {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < rs_.rank(); ++i)
        if (partner_[i] > i) out.emplace_back(i, partner_[i]);
    return out;
}

Root theta_of_simple(const SatakeDiagram& d, int i) {
    if (i < 0 || i >= d.system().rank()) throw std::out_of_range("vertex out of range");
    return -d.minus_theta_simple()[i];
}

Root theta(const SatakeDiagram& d, const Root& x) {
    const int n = d.system().rank();
    Root y{std::vector<int>(n, 0)};
    for (int i = 0; i < n; ++i)
        if (x.c[i]) y = y - d.minus_theta_simple()[i] * x.c[i];
    if (!x.is_zero() && !d.system().is_root(y))
        throw std::domain_error("theta leaves the root set; diagram is not a Satake diagram");
    return y;
}

PhiSplit phi_split(const SatakeDiagram& d) {
    PhiSplit s;
    for (const auto& r : d.system().roots()) (theta(d, r) == r ? s.phi0 : s.phi1).push_back(r);
    return s;
}

RestrictedRootSystem restricted_system(const SatakeDiagram& d) {
    const RootSystem& rs = d.system();
    const int n = rs.rank();
    RestrictedRootSystem out;
    for (int i = 0; i < n; ++i)
        if (!d.is_black(i) && d.partner(i) >= i) out.class_reps.push_back(i);
    out.rank = static_cast<int>(out.class_reps.size());
    if (out.rank == 0) throw std::domain_error("diagram has no white vertex");
    for (int i : out.class_reps)
        out.spherical_roots.push_back(Root::simple(n, i) + d.minus_theta_simple()[i]);

    const int r = out.rank;
    out.cartan.assign(r, std::vector<int>(r));
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) {
            int num = 2 * rs.form(out.spherical_roots[i], out.spherical_roots[j]);
            int den = rs.form(out.spherical_roots[j], out.spherical_roots[j]);
            if (den == 0 || num % den != 0)
                throw std::domain_error("spherical roots do not form a root basis");
            out.cartan[i][j] = num / den;
        }

    std::set<Root> doubled;  // alpha - theta(alpha), twice the restricted root
    for (const auto& a : rs.roots()) {
        Root t = theta(d, a);
        if (t != a) doubled.insert(a - t);
    }
    for (const auto& x : doubled)
        if (doubled.count(x * 2)) out.non_reduced = true;

    std::string base = label_of(out.cartan);
    if (base.empty()) throw std::domain_error("unrecognized restricted root system");
    if (out.non_reduced) {
        if (base.find('x') != std::string::npos || (base[0] != 'A' && base[0] != 'B' && base[0] != 'C'))
            throw std::domain_error("unrecognized non-reduced restricted root system");
        if (base[0] == 'A' && r > 1) throw std::domain_error("unrecognized non-reduced restricted root system");
        out.type_label = "BC" + std::to_string(r);
    } else {
        out.type_label = base;
    }

    // admissible: W-conjugate to alpha_i or to its arrow partner, i.e. same
    // component and same length
    auto comps = rs.components();
    std::vector<int> comp_of(n);
    for (std::size_t c = 0; c < comps.size(); ++c)
        for (int v : comps[c]) comp_of[v] = static_cast<int>(c);
    auto conjugate_to_simple = [&](const Root& a, int j) {
        for (int v = 0; v < n; ++v)
            if (a.c[v] != 0 && comp_of[v] != comp_of[j]) return false;
        return rs.form(a, a) == rs.norm(j);
    };
    out.families.resize(r);
    for (int i = 0; i < r; ++i) {
        int a0 = out.class_reps[i], a1 = d.partner(a0);
        for (const auto& a : rs.roots())
            if ((conjugate_to_simple(a, a0) || conjugate_to_simple(a, a1)) &&
                a - theta(d, a) == out.spherical_roots[i])
                out.families[i].push_back(a);
    }

    std::set<IntMat> mats;
    std::vector<std::size_t> pick(r, 0);
    const std::size_t limit = 1u << 20;
    std::size_t visited = 0;
    for (;;) {
        IntMat c(r, std::vector<int>(r));
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < r; ++j)
                c[i][j] = rs.coroot_pairing(out.spherical_roots[j], out.families[i][pick[i]]);
        mats.insert(c);
        if (++visited > limit) throw std::domain_error("admissible family enumeration too large");
        int k = 0;
        while (k < r && ++pick[k] == out.families[k].size()) pick[k++] = 0;
        if (k == r) break;
    }
    out.matrices.assign(mats.begin(), mats.end());
    return out;
}

std::vector<DiagramComponent> decompose(const SatakeDiagram& d) {
    const RootSystem& rs = d.system();
    const int n = rs.rank();
    UnionFind uf(n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j)
            if (i != j && rs.cartan()[i][j] != 0) uf.unite(i, j);
        uf.unite(i, d.partner(i));
    }
    std::map<int, std::vector<int>> groups;
    for (int i = 0; i < n; ++i) groups[uf.find(i)].push_back(i);
    std::vector<std::vector<int>> parts;
    for (auto& [_, g] : groups) parts.push_back(g);
    std::sort(parts.begin(), parts.end());

    std::vector<DiagramComponent> out;
    for (const auto& g : parts) {
        std::vector<int> local(n, -1);
        for (std::size_t a = 0; a < g.size(); ++a) local[g[a]] = static_cast<int>(a);
        std::vector<int> black;
        std::vector<std::pair<int, int>> arrows;
        for (int v : g) {
            if (d.is_black(v)) black.push_back(local[v]);
            if (d.partner(v) > v) arrows.emplace_back(local[v], local[d.partner(v)]);
        }
        IntMat sub = submatrix(rs.cartan(), g);
        std::string label = label_of(sub);
        auto sys = RootSystem::from_cartan(label.empty() ? "?" : label, sub);
        ComponentKind kind = sys.components().size() == 1 ? ComponentKind::SimpleG : ComponentKind::GxG;
        std::string name = parts.size() == 1 ? d.name() : d.name() + "[" + std::to_string(out.size()) + "]";
        out.push_back({SatakeDiagram(name, std::move(sys), black, arrows), kind, g});
    }
    return out;
}

std::vector<int> minus_theta_fixed_whites(const SatakeDiagram& d) {
    std::vector<int> out;
    const int n = d.system().rank();
    for (int i = 0; i < n; ++i)
        if (!d.is_black(i) && d.minus_theta_simple()[i] == Root::simple(n, i)) out.push_back(i);
    return out;
}

bool borel_convention_holds(const SatakeDiagram& d) {
    for (const auto& a : d.system().positive_roots()) {
        Root t = theta(d, a);
        if (t != a && !t.is_negative()) return false;
    }
    return true;
}

bool arrowed_highest_root_holds(const SatakeDiagram& d) {
    const RootSystem& rs = d.system();
    const int n = rs.rank();
    std::vector<Color> color(n);
    for (int i = 0; i < n; ++i) color[i] = d.color(i);
    for (int i = 0; i < n; ++i) {
        int p = d.partner(i);
        if (d.is_black(i) || p == i) continue;
        Root lhs = Root::simple(n, i) - Root::simple(n, p) + d.minus_theta_simple()[i];
        if (lhs != highest_over_blacks(rs, color, i)) return false;
    }
    return true;
}

// ------------------------------------------------------------- catalog

namespace {

struct Spec {
    std::string name;
    std::string description;
    std::string type;
    std::vector<int> black;  // 1-based
    std::vector<std::pair<int, int>> arrows;
    bool verified = true;
};

std::vector<Spec> build_catalog() {
    std::vector<Spec> v;
    v.push_back({"PGL6/PSp6", "AII on A5", "A5", {1, 3, 5}, {}, true});
    v.push_back({"E6/F4", "EIV", "E6", {2, 3, 4, 5}, {}, false});
    for (int n = 3; n <= 6; ++n) {
        Spec s{"PGL" + std::to_string(n) + "/GL" + std::to_string(n - 1), "AIII with one white arrow pair",
               "A" + std::to_string(n - 1), {}, {{1, n - 1}}, true};
        for (int j = 2; j <= n - 2; ++j) s.black.push_back(j);
        v.push_back(s);
    }
    for (int n = 2; n <= 4; ++n) {
        Spec s{"PSp" + std::to_string(2 * n) + "/P(SL2xSp" + std::to_string(2 * n - 2) + ")", "CII, alpha_2 white",
               "C" + std::to_string(n), {}, {}, true};
        for (int j = 1; j <= n; ++j)
            if (j != 2) s.black.push_back(j);
        v.push_back(s);
    }
    for (int n = 5; n <= 8; ++n) {
        // PSO6 is realized on A3, the diagram of PGL4/PSp4
        if (n == 6) continue;
        int rank = n / 2;
        std::string type = (n % 2 ? "B" : "D") + std::to_string(rank);
        Spec s{"PSO" + std::to_string(n) + "/P(SO" + std::to_string(n - 1) + "xGm)", "alpha_1 white, rest black",
               type, {}, {}, true};
        for (int j = 2; j <= rank; ++j) s.black.push_back(j);
        v.push_back(s);
    }
    v.push_back({"PGL4/PSp4", "AII on A3, isomorphic to PSO6/P(SO5xGm)", "A3", {1, 3}, {}, true});
    v.push_back({"F4/PSO9", "FII", "F4", {1, 2, 3}, {}, false});
    v.push_back({"PGL2/Gm", "split A1", "A1", {}, {}, true});
    v.push_back({"PGL3/PSO3", "split A2", "A2", {}, {}, true});
    v.push_back({"GxG/G-A1", "group case for A1", "A1xA1", {}, {{1, 2}}, true});
    v.push_back({"GxG/G-A2", "group case for A2", "A2xA2", {}, {{1, 3}, {2, 4}}, true});
    return v;
}

const std::vector<Spec>& catalog() {
    static const std::vector<Spec> c = build_catalog();
    return c;
}

SatakeDiagram from_spec(const Spec& s) {
    std::vector<int> black;
    for (int b : s.black) black.push_back(b - 1);
    std::vector<std::pair<int, int>> arrows;
    for (auto [a, b] : s.arrows) arrows.emplace_back(a - 1, b - 1);
    return SatakeDiagram(s.name, RootSystem::parse(s.type), black, arrows);
}

}  // namespace

std::vector<CatalogEntry> catalog_entries() {
    std::vector<CatalogEntry> out;
    for (const auto& s : catalog()) out.push_back({s.name, s.description, s.verified});
    return out;
}

SatakeDiagram catalog_diagram(const std::string& name) {
    for (const auto& s : catalog())
        if (s.name == name) return from_spec(s);
    throw std::out_of_range("no catalog diagram named '" + name + "'");
}

SatakeDiagram parse_diagram(const std::string& text) {
    std::istringstream in(text);
    std::string line, name = "user", type;
    std::vector<int> black;
    std::vector<std::pair<int, int>> arrows;
    int lineno = 0;
    auto fail = [&](const std::string& msg) {
        throw std::invalid_argument("line " + std::to_string(lineno) + ": " + msg);
    };
    auto read_int = [&](std::istringstream& ls) {
        std::string tok;
        ls >> tok;
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(tok, &used);
        } catch (const std::exception&) {
            fail("expected a vertex number, got '" + tok + "'");
        }
        if (used != tok.size()) fail("expected a vertex number, got '" + tok + "'");
        return v;
    };
    while (std::getline(in, line)) {
        ++lineno;
        if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
        std::istringstream ls(line);
        std::string key;
        if (!(ls >> key)) continue;
        if (key == "name") {
            std::getline(ls >> std::ws, name);
        } else if (key == "type") {
            if (!(ls >> type)) fail("missing type label");
        } else if (key == "black") {
            while (ls >> std::ws, !ls.eof()) black.push_back(read_int(ls) - 1);
        } else if (key == "arrow") {
            int a = read_int(ls), b = read_int(ls);
            arrows.emplace_back(a - 1, b - 1);
        } else {
            fail("unknown directive '" + key + "'");
        }
    }
    if (type.empty()) throw std::invalid_argument("diagram has no 'type' line");
    try {
        return SatakeDiagram(name, RootSystem::parse(type), black, arrows);
    } catch (const std::invalid_argument& e) {
        throw std::invalid_argument(std::string("diagram '") + name + "': " + e.what());
    }
}

std::string format_diagram(const SatakeDiagram& d) {
    std::ostringstream out;
    out << "name " << d.name() << "\n";
    out << "type " << d.system().label() << "\n";
    auto black = d.black_vertices();
    if (!black.empty()) {
        out << "black";
        for (int b : black) out << " " << b + 1;
        out << "\n";
    }
    for (auto [a, b] : d.arrows()) out << "arrow " << a + 1 << " " << b + 1 << "\n";
    return out.str();
}

}  // namespace wonder
