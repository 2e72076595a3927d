#pragma once
// Schubert cells of X = Gr_3(C^6) = SL6/P', P' the maximal parabolic at
// alpha_3, with B' upper triangular in the basis e1, e2, e3, e1*, e2*, e3*
// (positions 1..6). The cell of w in W^{P'} is B'.w(V*) with V* at positions
// {4,5,6}; it has codimension l(w), so the identity is the open cell and V
// is the closed point.

#include <string>
#include <vector>

#include "wonder/charring.hpp"
#include "wonder/gitgrass.hpp"
#include "wonder/rootsys.hpp"

namespace wonder {

const RootSystem& grassmannian_system();          // A5
const std::vector<int>& grassmannian_parabolic();  // {0,1,3,4}
// x -> 2 <x, varpi_3^vee>, the C*-grading
const std::vector<int>& cstar_cocharacter();  // {0,0,2,0,0}

struct SchubertCell {
    WeylElement w;
    int codim = 0;
    std::vector<int> fixed_point;  // sorted positions, w applied to {4,5,6}
    bool operator==(const SchubertCell& o) const { return w == o.w; }
};

struct InversionData {
    std::vector<Root> K;  // positive roots of w R^u(P'^-) w^{-1}
    std::vector<Root> L;  // opposites of its negative roots
    std::vector<Root> J;  // K then L
};

// all 20, by codimension then fixed point
std::vector<SchubertCell> enumerate_cells();
SchubertCell cell_of(const WeylElement& w);  // throws unless w is a minimal coset representative
SchubertCell cell_of_fixed_point(const std::vector<int>& positions);
// "F1" for the open cell of that stratum, a fixed point
// such as "236", or a word such as "s3s4s2s3"
SchubertCell parse_cell(const std::string& spec);
std::string format_fixed_point(const std::vector<int>& positions);  // "{2,3,6}"

// x.V for the word x, read right to left as in "s54123.V"
std::vector<int> apply_word_to_v(const std::vector<int>& word_1based);

InversionData kl_sets(const SchubertCell& c);

// closure(X_outer) contains X_inner: the tableau criterion on fixed points,
// and the Bruhat order on words; the two must agree
bool closure_contains(const SchubertCell& outer, const SchubertCell& inner);
bool closure_contains_bruhat(const SchubertCell& outer, const SchubertCell& inner);
// pairs (i, j) of indices into enumerate_cells() with X_j of codimension one
// in closure(X_i)
std::vector<std::pair<int, int>> hasse_covers();

// open cell of F1: the smallest-codimension cell whose fixed point lies in
// the stratum. F2 is the block swap of F1 and no B'-orbit closure; it throws.
SchubertCell stratum_cell(Stratum s);

// w w_{0,P'}(k varpi_3), with w_{0,P'} the longest element of W^{P'}
Weight leading_exponent(const SchubertCell& c, int k);
const SeriesRing& grassmannian_ring();

struct KempfOptions {
    long long dmin = -20;
    long long dmax = 20;
    int height_cap = 12;
};

// e^{w w0(k varpi_3)} prod_{K} e^alpha prod_{J} 1/(1 - e^beta), cut to the
// window and to relative height <= height_cap
TruncatedSeries kempf_character(const SchubertCell& c, int k, const KempfOptions& opt = {});

// the Weyl element exchanging the two blocks, e_i <-> e_i*
const WeylElement& block_swap();
Character block_swap_image(const Character& c);

struct CousinTerm {
    int j = 0;
    std::vector<SchubertCell> cells;  // codim(c) + j, inside closure(X_c)
    TruncatedSeries series;
};
std::vector<CousinTerm> cousin_terms(const SchubertCell& c, int k, int depth, const KempfOptions& opt = {});

struct UnstableBounds {
    Stratum component = Stratum::F1;
    int k = 0;
    KempfOptions window;
    Character upper;  // [H^c_{X_w}] of the open cell
    Character lower;  // upper minus the next Cousin term, floored at 0
    // the cells that produced the bounds and their leading weights, before the
    // block swap for F2
    std::vector<SchubertCell> cells;
    std::vector<Weight> numerators;
    bool swapped = false;

    // every cell series is exact at mu (inside the window and the height cap)
    bool exact_at(const Weight& mu) const;
};
// F2 bounds are the block swap of an F1 computation on the mirrored window.
// Literal runs F1 at -k, which puts the F2 degrees at <= k - 8. The swap
// fixes O(k) and negates the C*-grade, so BlockSwap runs F1 at k and lands
// at <= -k - 8; the comparison with H^3(Y) needs that one.
enum class Mirror { Literal, BlockSwap };
UnstableBounds unstable_character_bounds(Stratum s, int k, const KempfOptions& opt = {},
                                         Mirror mirror = Mirror::Literal);

Character grade_slice(const TruncatedSeries& s, long long n);
Character grade_slice(const Character& c, long long n);

}  // namespace wonder
