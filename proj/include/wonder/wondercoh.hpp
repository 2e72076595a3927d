#pragma once
// Cohomology of line bundles on the wonderful compactification Y of PGL3,
// seen as (SL3 x SL3)/diag, through Tchoudjem's formula
//   H^i(Y, L_lambda) = sum_J sum_mu V*_{mu+},
// mu in (lambda + R_J) cap Omega_J, mu + rho regular, l(mu) + |J| = i.

#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "wonder/charring.hpp"
#include "wonder/rootsys.hpp"
#include "wonder/schubert.hpp"

namespace wonder {

struct SphericalData {
    RootSystem system;           // A2xA2
    std::vector<Weight> sigma;   // spherical roots, from the Satake data
    Weight rho;
    int dimY = 0;
    Weight phi1_sum;             // sum of the positive roots moved by theta
    Weight canonical_shift;      // lambda -> -lambda - shift pairs H^i with H^{dimY - i}
};
const SphericalData& pgl3_data();

// raised when the enumeration box cannot be shown to contain every term
struct CertificationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct TchoudjemTerm {
    std::vector<int> J;       // indices into sigma
    std::vector<int> coeffs;  // mu = lambda + sum coeffs_j sigma_j
    Weight mu;
    Weight mu_plus;           // w(mu + rho) - rho, w(mu + rho) strictly dominant
    int length = 0;           // l(mu) = l(w)
    int degree = 0;           // l(mu) + |J|
};

struct TchoudjemExpansion {
    std::vector<TchoudjemTerm> terms;  // every degree, sorted
    int radius = 0;
    bool certified = false;  // no term on the outer shell of the box
};

// radius 0 picks one past the a priori bound |c| <= |(lambda + rho, gamma)| / min eig
TchoudjemExpansion tchoudjem_expand(const Weight& lambda, int radius = 0);
// dominant weights mu+ of degree i, sorted; throws CertificationError
std::vector<Weight> tchoudjem_components(const Weight& lambda, int i, int radius = 0);
Character h_character(const Weight& lambda, int i, int radius = 0);
std::set<int> vanishing_profile(const Weight& lambda, int radius = 0);
// h_character(lambda, i) against the dual of h_character(-lambda - shift, dimY - i)
bool serre_dual_check(const Weight& lambda, int i, const Weight& shift, int radius = 0);
bool serre_dual_check(const Weight& lambda, int i, int radius = 0);

// A5 weight x as an SL3 x SL3 weight, dual to gitgrass::gxg_weight: the
// grade-n slice of the unstable local cohomology matches H^3(Y) this way
Weight a5_to_gxg(const Weight& x);

struct CrossReport {
    Weight lambda;
    int k = 0;
    int n = 0;
    Character h3;                       // Tchoudjem side, G x G weights
    Character lower[2], upper[2];       // grade-n slices for F1, F2 (block-swap mirror)
    bool contributes[2] = {false, false};  // lower bound positive at an exact weight
    bool certified = true;              // every H3 weight is exact in both series
    long long skipped = 0;              // weights left out for lying past the height cap
    std::vector<std::string> violations;

    bool ok() const { return certified && violations.empty() && !(contributes[0] && contributes[1]); }
};
CrossReport cross_validate_h3(const Weight& lambda, const KempfOptions& opt = {}, int radius = 0);

}  // namespace wonder
