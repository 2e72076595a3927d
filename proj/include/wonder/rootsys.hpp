#pragma once
// Finite root systems, Weyl group words, weights and parabolic cosets.
//
// Conventions used everywhere in the library:
//   * simple indices are 0-based internally; printing helpers add one.
//   * cartan[i][j] = <alpha_i, alpha_j^vee>, so alpha_i written in the
//     fundamental-weight basis is row i of the Cartan matrix.
//   * a Root holds integer coordinates in the simple-root basis.
//   * a Weight holds fundamental-weight coordinates scaled by 2, so that
//     half-integral exponents such as (k/2)(a3 - a5 - a1) stay exact.

#include <compare>
#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace wonder {

using IntMat = std::vector<std::vector<int>>;

struct Root {
    std::vector<int> c;

    Root() = default;
    explicit Root(std::vector<int> v) : c(std::move(v)) {}

    int rank() const { return static_cast<int>(c.size()); }
    int height() const;
    bool is_zero() const;
    bool is_positive() const;  // nonzero with all entries >= 0
    bool is_negative() const;

    Root operator-() const;
    Root operator+(const Root& o) const;
    Root operator-(const Root& o) const;
    Root operator*(int k) const;
    auto operator<=>(const Root&) const = default;

    static Root simple(int rank, int i);
};

struct Weight {
    std::vector<int> c2;  // twice the fundamental coordinates

    Weight() = default;
    explicit Weight(std::vector<int> v) : c2(std::move(v)) {}
    static Weight zero(int rank) { return Weight{std::vector<int>(rank, 0)}; }
    static Weight fundamental(const std::vector<int>& coords);  // integral input
    static Weight doubled(std::vector<int> twice) { return Weight{std::move(twice)}; }
    static Weight fundamental_weight(int rank, int i);

    int rank() const { return static_cast<int>(c2.size()); }
    bool is_integral() const;
    int coord(int i) const;  // throws unless that coordinate is integral

    Weight operator-() const;
    Weight operator+(const Weight& o) const;
    Weight operator-(const Weight& o) const;
    Weight operator*(int k) const;
    auto operator<=>(const Weight&) const = default;
};

// Weyl group element as its lexicographically least reduced word.
struct WeylElement {
    std::vector<int> word;

    int length() const { return static_cast<int>(word.size()); }
    bool is_identity() const { return word.empty(); }
    auto operator<=>(const WeylElement&) const = default;
};

struct DominantConjugate {
    Weight dominant;
    WeylElement w;  // w(mu) = dominant
    int length = 0;
    bool regular = false;
};

class RootSystem {
public:
    // Series letter A..G with rank; throws std::invalid_argument on bad pairs.
    static RootSystem build(char series, int rank);
    // "A5", "G2", "A2xA2" ...
    static RootSystem parse(const std::string& label);
    static RootSystem product(const std::vector<RootSystem>& parts);
    static RootSystem from_cartan(std::string label, IntMat cartan);

    const std::string& label() const { return label_; }
    int rank() const { return rank_; }
    const IntMat& cartan() const { return cartan_; }
    const std::vector<Root>& positive_roots() const { return positive_; }
    std::vector<Root> roots() const;  // positives then negatives
    std::size_t num_roots() const { return 2 * positive_.size(); }
    bool is_root(const Root& r) const { return all_.count(r.c) > 0; }
    Root highest_root() const;  // of the first component when disconnected
    bool is_connected() const;
    // connected components as index sets, increasing
    std::vector<std::vector<int>> components() const;

    // <x, alpha_i^vee>
    int pairing(const Root& x, int i) const;
    int pairing(const Weight& x, int i) const;
    int pairing2(const Weight& x, int i) const;  // twice <x, alpha_i^vee>
    // symmetric invariant form, scaled so the shortest roots of each
    // component have square length 2
    int form(const Root& a, const Root& b) const;
    int norm(int i) const { return norms_[i]; }
    int coroot_pairing(const Root& x, const Root& alpha) const;

    Root reflect(const Root& x, int i) const;
    Weight reflect(const Weight& x, int i) const;
    Root act(const WeylElement& w, const Root& x) const;
    Weight act(const WeylElement& w, const Weight& x) const;

    WeylElement canonical(const std::vector<int>& word) const;
    WeylElement multiply(const WeylElement& a, const WeylElement& b) const;
    WeylElement inverse(const WeylElement& w) const;
    WeylElement simple_reflection(int i) const { return WeylElement{{i}}; }
    WeylElement longest() const;
    std::vector<WeylElement> elements() const;  // whole group, by length

    // minimal length representatives of W / W_P for P = parabolic_subset
    std::vector<WeylElement> coset_reps(const std::vector<int>& parabolic_subset) const;
    WeylElement longest_coset_rep(const std::vector<int>& parabolic_subset) const;

    DominantConjugate dominant_conjugate(const Weight& mu) const;
    Weight half_sum_positive() const;
    Weight to_weight(const Root& r) const;
    // doubled simple-root coordinates, when mu lies in (1/2) * root lattice
    std::optional<std::vector<int>> root_coords2(const Weight& mu) const;

private:
    std::string label_;
    int rank_ = 0;
    IntMat cartan_;
    std::vector<int> norms_;
    std::vector<Root> positive_;
    std::set<std::vector<int>> all_;
    std::vector<int> rho_fund_;

    void enumerate();
};

IntMat cartan_matrix(char series, int rank);
std::size_t classical_root_count(char series, int rank);
// Matches an irreducible Cartan matrix against the classification, up to
// relabelling of the nodes. Returns e.g. "B3", or "" when nothing matches.
std::string identify_cartan(const IntMat& c);

std::string format_word(const WeylElement& w);   // "s3s4s2s3", "e"
std::string format_root(const Root& r);          // "a2+a3", "-a1"
std::string format_weight(const Weight& w);      // "(1,0,-1/2)"

}  // namespace wonder
