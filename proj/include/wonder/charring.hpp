#pragma once
// Character ring: finitely supported characters, windowed expansions of
// products of 1/(1 - e^beta), gradings by a cocharacter, Weyl characters.

#include <climits>
#include <map>
#include <vector>

#include "wonder/rootsys.hpp"

namespace wonder {

// Linear functional on weights given by its values on the simple roots,
// e.g. the cocharacter 2*varpi_3^vee of A5 is {0,0,2,0,0}.
class Grading {
public:
    Grading() = default;
    Grading(const RootSystem& rs, std::vector<int> on_simple_roots);

    const std::vector<int>& on_simple() const { return g_; }
    long long degree(const Root& r) const;
    long long degree(const Weight& w) const;  // throws std::domain_error if not integral
    bool integral_on(const Weight& w) const;

    bool operator==(const Grading& o) const { return g_ == o.g_; }

private:
    std::vector<int> g_;
    // degree(mu) = sum_i c2_i * num_[i] / den_
    std::vector<long long> num_;
    long long den_ = 1;
};

struct Character {
    std::map<Weight, long long> terms;

    void add(const Weight& w, long long m);
    long long at(const Weight& w) const;
    long long dimension() const;
    bool empty() const { return terms.empty(); }
    std::size_t size() const { return terms.size(); }
    Character dual() const;  // [V*](mu) = [V](-mu)

    Character& operator+=(const Character& o);
    Character operator+(const Character& o) const;
    Character operator-(const Character& o) const;
    bool operator==(const Character& o) const { return terms == o.terms; }
};

inline constexpr int kNoHeightCap = INT_MAX / 4;
inline constexpr long long kDegInf = LLONG_MAX / 8;

// Terms are exact for every weight mu whose degree lies in [dmin, dmax]
// and with height(mu - numerator) <= height_cap, as long as every factor
// that went into the product had support at nonnegative relative degree
// and height (true for monomials times geometric series in positive roots).
// A lower cut above a factor's numerator degree is not propagated correctly
// by multiply; cut the product instead.
struct TruncatedSeries {
    std::map<Weight, long long> terms;
    Weight numerator;
    std::vector<Root> denominator;
    std::vector<int> grading;
    long long dmin = -kDegInf;
    long long dmax = kDegInf;
    int height_cap = kNoHeightCap;

    long long at(const Weight& w) const;
};

class SeriesRing {
public:
    SeriesRing(const RootSystem& rs, std::vector<int> grading);

    const RootSystem& system() const { return *rs_; }
    const Grading& grading() const { return deg_; }
    const Grading& height() const { return ht_; }

    TruncatedSeries one() const;
    TruncatedSeries monomial(const Weight& w) const;
    TruncatedSeries from_character(const Character& c, long long dmin, long long dmax,
                                   int height_cap = kNoHeightCap) const;
    // sum_{k >= 0} e^{k beta}, cut to the degree window and to
    // height(k beta) <= height_cap
    TruncatedSeries expand_inverse(const Root& beta, long long dmin, long long dmax,
                                   int height_cap = kNoHeightCap) const;
    TruncatedSeries multiply(const TruncatedSeries& a, const TruncatedSeries& b) const;
    TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b) const;
    // degree-n part; throws std::out_of_range when n is outside the window
    Character grade_project(const TruncatedSeries& s, long long n) const;
    long long rel_height(const TruncatedSeries& s, const Weight& w) const;

    std::pair<long long, long long> degree_range(const TruncatedSeries& s) const;

private:
    const RootSystem* rs_;
    Grading deg_;
    Grading ht_;
    void check(const TruncatedSeries& s) const;
};

// Brute-force convolution of two series over their stored terms, kept as a
// test oracle for SeriesRing::multiply.
std::map<Weight, long long> convolve_terms(const TruncatedSeries& a, const TruncatedSeries& b);

// Irreducible characters. weyl_character uses Freudenthal's recursion;
// weyl_character_kostant evaluates the alternating sum over W through
// Kostant's partition function. They are independent oracles for each other.
Character weyl_character(const Weight& dominant, const RootSystem& rs);
Character weyl_character_kostant(const Weight& dominant, const RootSystem& rs);
long long weyl_dimension(const Weight& dominant, const RootSystem& rs);
bool is_dominant(const Weight& w);

}  // namespace wonder
