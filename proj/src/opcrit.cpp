#include "wonder/opcrit.hpp"

#include <set>
#include <stdexcept>

namespace wonder {

bool satisfies(const CriterionMatrix& c, const std::vector<int>& n) {
    const std::size_t r = n.size();
    for (std::size_t i = 0; i < r; ++i) {
        long long s = -n[i];
        for (std::size_t j = 0; j < r; ++j) s += static_cast<long long>(c.entries[i][j]) * n[j];
        if (s < 0) return false;
    }
    return true;
}

namespace {

void check_family(const std::vector<CriterionMatrix>& family) {
    if (family.empty()) throw std::invalid_argument("empty criterion family");
    const std::size_t r = family.front().entries.size();
    if (r == 0) throw std::invalid_argument("criterion matrix of size 0");
    for (const auto& c : family) {
        if (c.entries.size() != r) throw std::invalid_argument("criterion matrices of different sizes");
        for (const auto& row : c.entries)
            if (row.size() != r) throw std::invalid_argument("criterion matrix is not square");
    }
}

// Depth-first over coordinates. Row i can be decided early once every
// column carrying a positive coefficient is assigned: the unassigned
// remainder then only lowers the sum.
struct Search {
    const std::vector<CriterionMatrix>& family;
    int bound;
    int r;
    std::vector<std::vector<int>> last_positive;  // per matrix, per row
    std::vector<int> n;
    std::vector<OperatorSolution> out;

    Search(const std::vector<CriterionMatrix>& f, int b)
        : family(f), bound(b), r(static_cast<int>(f.front().entries.size())), n(r, 0) {
        for (const auto& c : family) {
            std::vector<int> lp(r, -1);
            for (int i = 0; i < r; ++i)
                for (int j = 0; j < r; ++j)
                    if (c.entries[i][j] - (i == j ? 1 : 0) > 0) lp[i] = j;
            last_positive.push_back(lp);
        }
    }

    bool feasible(int assigned) const {
        for (std::size_t m = 0; m < family.size(); ++m) {
            const auto& e = family[m].entries;
            for (int i = 0; i < r; ++i) {
                if (last_positive[m][i] >= assigned) continue;
                long long s = 0;
                for (int j = 0; j < assigned; ++j) s += static_cast<long long>(e[i][j] - (i == j)) * n[j];
                if (s < 0) return false;
            }
        }
        return true;
    }

    void run(int k) {
        if (k == r) {
            for (int v : n)
                if (v) {
                    out.push_back({n});
                    break;
                }
            return;
        }
        for (int v = 0; v <= bound; ++v) {
            n[k] = v;
            if (feasible(k + 1)) run(k + 1);
        }
        n[k] = 0;
    }
};

}  // namespace

std::vector<OperatorSolution> solution_set(const std::vector<CriterionMatrix>& family, int bound) {
    check_family(family);
    if (bound < 1) throw std::invalid_argument("bound must be at least 1");
    Search s(family, bound);
    s.run(0);
    return s.out;
}

std::vector<OperatorSolution> minimal_solutions(const std::vector<CriterionMatrix>& family, int bound) {
    auto all = solution_set(family, bound);
    std::set<std::vector<int>> in;
    for (const auto& s : all) in.insert(s.exponents);
    std::vector<OperatorSolution> out;
    for (const auto& s : all) {
        bool split = false;
        for (const auto& t : all) {
            if (t.exponents >= s.exponents) break;  // lexicographic: a summand is smaller
            std::vector<int> rest(s.exponents.size());
            bool ok = true;
            for (std::size_t i = 0; i < rest.size(); ++i) {
                rest[i] = s.exponents[i] - t.exponents[i];
                if (rest[i] < 0) ok = false;
            }
            if (ok && in.count(rest)) {
                split = true;
                break;
            }
        }
        if (!split) out.push_back(s);
    }
    return out;
}

IntMat bc_displayed_matrix(int r) {
    if (r < 1) throw std::invalid_argument("rank must be positive");
    IntMat c(r, std::vector<int>(r, 0));
    for (int i = 0; i < r; ++i) {
        c[i][i] = 2;
        if (i + 1 < r) c[i][i + 1] = c[i + 1][i] = -1;
    }
    c[r - 1][r - 1] = 1;
    return c;
}

IntMat group_case_matrix(char series, int rank) {
    IntMat a = cartan_matrix(series, rank);
    IntMat c(rank, std::vector<int>(rank));
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < rank; ++j) c[i][j] = a[j][i];
    return c;
}

Verdict classify(const SatakeDiagram& d, int bound, BcPolicy policy) {
    auto rr = restricted_system(d);
    Verdict v;
    v.diagram = d.name();
    v.restricted_type = rr.type_label;
    v.rank = rr.rank;
    bool bc = rr.non_reduced;
    if (!(bc && policy == BcPolicy::DisplayedOnly))
        for (const auto& m : rr.matrices) v.family.push_back({m, "pairing"});
    if (bc) v.family.push_back({bc_displayed_matrix(rr.rank), "bc-displayed"});
    v.minimal = minimal_solutions(v.family, bound);
    v.exists = !v.minimal.empty();
    return v;
}

SatakeDiagram bc_diagram(int r) {
    const int n = 2 * r;
    std::vector<std::pair<int, int>> arrows;
    for (int i = 0; i < r; ++i) arrows.emplace_back(i, n - 1 - i);
    return SatakeDiagram("SU(" + std::to_string(r) + "," + std::to_string(r + 1) + ")", RootSystem::build('A', n), {},
                         arrows);
}

std::vector<SweepRow> classification_sweep(int max_rank, int bound, BcPolicy policy) {
    std::vector<SweepRow> rows;
    auto record = [&](const std::string& label, const std::vector<CriterionMatrix>& family) {
        auto sols = solution_set(family, bound);
        SweepRow row{label, !sols.empty(), true, sols.size()};
        for (const auto& s : sols)
            for (int x : s.exponents)
                if (x != s.exponents.front()) row.equal_parts = false;
        rows.push_back(row);
    };
    const std::pair<char, int> lowest[] = {{'A', 1}, {'B', 2}, {'C', 3}, {'D', 4}};
    for (auto [s, lo] : lowest)
        for (int n = lo; n <= max_rank; ++n)
            record(std::string(1, s) + std::to_string(n), {{group_case_matrix(s, n), "cartan"}});
    for (auto [s, n] : {std::pair{'E', 6}, {'E', 7}, {'E', 8}, {'F', 4}, {'G', 2}})
        if (n <= max_rank) record(std::string(1, s) + std::to_string(n), {{group_case_matrix(s, n), "cartan"}});
    for (int r = 1; r <= max_rank; ++r) {
        auto v = classify(bc_diagram(r), 1, policy);  // only the family is needed here
        if (v.restricted_type != "BC" + std::to_string(r))
            throw std::logic_error("quasi-split AIII diagram did not give BC" + std::to_string(r));
        record(v.restricted_type, v.family);
    }
    return rows;
}

}  // namespace wonder
