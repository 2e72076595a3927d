#pragma once
// The C*-action on X = Gr_3(V + V*), V = C^3, with weight 1 on V and -1 on
// V*. Basis order e1 < e2 < e3 < e1* < e2* < e3*, i.e. positions 1..6.

#include <array>
#include <boost/multiprecision/cpp_int.hpp>
#include <compare>
#include <string>
#include <vector>

#include "wonder/rootsys.hpp"

namespace wonder {

using Rat = boost::multiprecision::cpp_rational;

struct PluckerIndex {
    std::vector<int> I;      // indices of e_i, sorted, 1-based
    std::vector<int> Istar;  // indices of e_i*, sorted, 1-based

    // 3-subset of basis positions 1..6
    static PluckerIndex from_positions(const std::vector<int>& pos);
    std::vector<int> positions() const;
    auto operator<=>(const PluckerIndex&) const = default;
};

// all 20, ordered by position subsets
std::vector<PluckerIndex> all_plucker_indices();
int cstar_weight(const PluckerIndex& p);
// SL3 x SL3 weight of the basis vector, the first factor acting on V and the
// second on V* (fundamental coordinates of A2xA2)
Weight gxg_weight(const PluckerIndex& p);
std::string format_plucker(const PluckerIndex& p);  // "U_{1,2}^{3}"

class SubspacePoint {
public:
    // throws std::invalid_argument unless the rows are 3 vectors of length 6 of rank 3
    explicit SubspacePoint(const std::vector<std::vector<Rat>>& rows);
    static SubspacePoint from_ints(const std::vector<std::vector<long long>>& rows);
    static SubspacePoint coordinate(const std::vector<int>& positions);  // span of basis vectors
    // {v + M v*}: the rows e_i + sum_j M_ji e_j*
    static SubspacePoint graph(const std::array<std::array<Rat, 3>, 3>& m);

    // reduced row echelon form
    const std::vector<std::vector<Rat>>& rows() const { return rref_; }
    Rat plucker(const PluckerIndex& p) const;
    bool operator==(const SubspacePoint& o) const { return rref_ == o.rref_; }

private:
    std::vector<std::vector<Rat>> rref_;
};

struct IntersectionDims {
    int dV = 0;
    int dVstar = 0;
    bool operator==(const IntersectionDims&) const = default;
};

IntersectionDims intersection_dims(const SubspacePoint& u);
bool is_semistable(const SubspacePoint& u);
bool is_stable(const SubspacePoint& u);

enum class Stratum { None, F1, F2 };
Stratum unstable_component(const SubspacePoint& u);
const char* stratum_name(Stratum s);

// Semistable points have nonzero projection to both the C*-weight 1 and
// weight -1 parts of Lambda^3.
bool weight_parts_nonzero(const SubspacePoint& u, int cstar);

// e_i -> e_i + c e_j on basis vectors, i < j upper triangular (1-based positions)
SubspacePoint apply_elementary(const SubspacePoint& u, int i, int j, const Rat& c);
SubspacePoint swap_blocks(const SubspacePoint& u);
SubspacePoint scale_cstar(const SubspacePoint& u, const Rat& t);

// Lagrangian for the standard symplectic form, and isotropic for the split
// quadratic form, on V + V*.
bool is_lagrangian(const SubspacePoint& u);
bool is_orthogonal_isotropic(const SubspacePoint& u);

struct ModuleSummand {
    Weight highest;  // A2xA2 fundamental coordinates
    PluckerIndex highest_vector;
    int cstar = 0;
    long long dim = 0;
};
// Lambda^3(V + V*) as a G x G x C* module, by peeling highest weights off the
// Plucker weight multiset. Ordered by dimension, then C*-weight, descending.
std::vector<ModuleSummand> decompose_module();

struct InvariantFamily {
    std::string name;          // one letter per summand: x, y, z, t
    std::vector<int> degrees;  // per summand of decompose_module
    int cstar = 0;             // always 0
    long long count = 0;       // number of monomials in the family
};
// Hilbert basis of the C*-weight-zero degree cone over the summands
std::vector<InvariantFamily> invariant_generators();

struct SheafDescriptor {
    Weight on_Y;
    int k = 0;  // multiple of varpi_3
    int n = 0;  // C*-grade
    bool operator==(const SheafDescriptor&) const = default;
};
// lambda on A2xA2 in the span of (varpi_i, varpi_i'); throws
// std::domain_error otherwise
SheafDescriptor sheaf_correspondence(const Weight& lambda);
// a1 w1 + a2 w2 + b1 g1 + b2 g2 with wi = (varpi_i, varpi_i') and the
// spherical roots g1, g2 of the group case on A2xA2
Weight spanning_weight(int a1, int a2, int b1, int b2);

}  // namespace wonder
