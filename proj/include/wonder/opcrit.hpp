#pragma once
// Cone criterion (C - I) n >= 0 for monomial operators prod d_{t_i}^{n_i},
// and the classification it induces.

#include <compare>
#include <string>
#include <vector>

#include "wonder/rootsys.hpp"
#include "wonder/satake.hpp"

namespace wonder {

struct CriterionMatrix {
    IntMat entries;
    std::string family_tag;  // "pairing", "bc-displayed", "cartan", "user"
};

struct OperatorSolution {
    std::vector<int> exponents;
    auto operator<=>(const OperatorSolution&) const = default;
};

bool satisfies(const CriterionMatrix& c, const std::vector<int>& n);

// Every nonzero n in [0, bound]^r with (C - I) n >= 0 for all C in the
// family, in lexicographic order. Throws std::invalid_argument on an empty
// family or mismatched sizes.
std::vector<OperatorSolution> solution_set(const std::vector<CriterionMatrix>& family, int bound);
// members of the set that are not a sum of two members
std::vector<OperatorSolution> minimal_solutions(const std::vector<CriterionMatrix>& family, int bound);

// tridiagonal A_r pattern with last diagonal entry 1
IntMat bc_displayed_matrix(int r);
// (<alpha_j, alpha_i^vee>)_{ij}, the criterion matrix of the group case
IntMat group_case_matrix(char series, int rank);

enum class BcPolicy { Both, DisplayedOnly };

struct Verdict {
    std::string diagram;
    std::string restricted_type;
    int rank = 0;
    bool exists = false;
    std::vector<OperatorSolution> minimal;
    std::vector<CriterionMatrix> family;
};

Verdict classify(const SatakeDiagram& d, int bound = 100, BcPolicy policy = BcPolicy::Both);

struct SweepRow {
    std::string label;   // "A3", "BC2", ...
    bool exists = false;
    bool equal_parts = true;  // every solution has all coordinates equal
    std::size_t solutions = 0;
};
// every irreducible reduced type of rank <= max_rank through the group-case
// matrix, then BC_r for r <= max_rank through the quasi-split AIII diagram
// on A_{2r}
std::vector<SweepRow> classification_sweep(int max_rank, int bound, BcPolicy policy = BcPolicy::Both);
SatakeDiagram bc_diagram(int r);

}  // namespace wonder
