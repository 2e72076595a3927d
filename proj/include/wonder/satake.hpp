#pragma once
// Satake diagrams, the involution theta on roots, restricted root systems.

#include <string>
#include <vector>

#include "wonder/rootsys.hpp"

namespace wonder {

enum class Color { White, Black };

class SatakeDiagram {
public:
    // arrows are 0-based vertex pairs; black lists 0-based vertices
    SatakeDiagram(std::string name, RootSystem rs, const std::vector<int>& black,
                  const std::vector<std::pair<int, int>>& arrows);

    const std::string& name() const { return name_; }
    const RootSystem& system() const { return rs_; }
    Color color(int i) const { return color_.at(i); }
    bool is_black(int i) const { return color_.at(i) == Color::Black; }
    // partner of a white vertex, or the vertex itself when unarrowed
    int partner(int i) const { return partner_.at(i); }
    std::vector<int> black_vertices() const;
    std::vector<std::pair<int, int>> arrows() const;

    // -theta of simple roots, computed once
    const std::vector<Root>& minus_theta_simple() const { return mts_; }

private:
    std::string name_;
    RootSystem rs_;
    std::vector<Color> color_;
    std::vector<int> partner_;
    std::vector<Root> mts_;
};

Root theta_of_simple(const SatakeDiagram& d, int i);
// throws std::domain_error if the image is not a root
Root theta(const SatakeDiagram& d, const Root& x);

struct PhiSplit {
    std::vector<Root> phi0;  // theta-fixed
    std::vector<Root> phi1;
};
PhiSplit phi_split(const SatakeDiagram& d);

struct RestrictedRootSystem {
    int rank = 0;
    std::vector<int> class_reps;          // one white vertex per arrow class
    std::vector<Root> spherical_roots;    // gamma_i = alpha_i - theta(alpha_i)
    IntMat cartan;                        // 2(gamma_i, gamma_j) / (gamma_j, gamma_j)
    bool non_reduced = false;
    std::string type_label;               // "A2", "BC3", ...
    // admissible roots alpha with alpha - theta(alpha) = gamma_i, per i
    std::vector<std::vector<Root>> families;
    // distinct matrices (<gamma_j, alpha_i^vee>)_{ij} over all admissible choices
    std::vector<IntMat> matrices;
};
// throws std::domain_error when the type cannot be identified
RestrictedRootSystem restricted_system(const SatakeDiagram& d);

enum class ComponentKind { SimpleG, GxG };
struct DiagramComponent {
    SatakeDiagram diagram;
    ComponentKind kind;
    std::vector<int> vertices;  // in the parent diagram
};
std::vector<DiagramComponent> decompose(const SatakeDiagram& d);

std::vector<int> minus_theta_fixed_whites(const SatakeDiagram& d);

// theta maps positive non-fixed roots to negative ones
bool borel_convention_holds(const SatakeDiagram& d);
// for arrowed alpha ~ alpha': alpha - alpha' - theta(alpha) is the highest root
// of the form alpha + (black combination)
bool arrowed_highest_root_holds(const SatakeDiagram& d);

struct CatalogEntry {
    std::string name;
    std::string description;
    bool verified;  // false for diagrams kept as data only
};
std::vector<CatalogEntry> catalog_entries();
SatakeDiagram catalog_diagram(const std::string& name);  // throws std::out_of_range

// Text format, one directive per line, '#' comments:
//   name <string>
//   type <label>            e.g. A5 or A2xA2
//   black 1 3 5             1-based vertices
//   arrow 1 5               1-based pair, repeatable
// Errors are std::invalid_argument with "line N: ..." context.
SatakeDiagram parse_diagram(const std::string& text);
std::string format_diagram(const SatakeDiagram& d);

}  // namespace wonder
