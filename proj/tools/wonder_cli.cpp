// wonder: command-line front end to the library.
// Exit codes: 0 ok, 1 mismatch, 2 certification failure, 3 bad input.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "wonder/acceptance.hpp"
#include "wonder/gitgrass.hpp"
#include "wonder/opcrit.hpp"
#include "wonder/satake.hpp"
#include "wonder/schubert.hpp"
#include "wonder/wondercoh.hpp"

using namespace wonder;
using Json = nlohmann::ordered_json;

namespace {

enum Exit { kOk = 0, kMismatch = 1, kCertification = 2, kInput = 3 };

struct InputError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

std::vector<int> parse_ints(const std::string& s, char sep = ',') {
    std::vector<int> out;
    std::stringstream in(s);
    std::string tok;
    while (std::getline(in, tok, sep)) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoi(tok, &used));
            if (used != tok.size()) throw std::invalid_argument(tok);
        } catch (const std::exception&) {
            throw InputError("not an integer: '" + tok + "'");
        }
    }
    return out;
}

std::pair<long long, long long> parse_window(const std::string& s) {
    auto v = parse_ints(s, ':');
    if (v.size() != 2 || v[0] > v[1]) throw InputError("window must be a:b with a <= b, got '" + s + "'");
    return {v[0], v[1]};
}

std::string root_list(const std::vector<Root>& v) {
    std::string s;
    for (const auto& r : v) s += (s.empty() ? "" : " ") + format_root(r);
    return s;
}

// scalars as "# key<TAB>value", then rows under a header from the first row
void print(const Json& doc, const std::string& format) {
    if (format == "json") {
        std::cout << doc.dump(2) << "\n";
        return;
    }
    auto cell = [](const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
    for (const auto& [k, v] : doc.items()) {
        if (k == "rows" || (v.is_array() && !v.empty() && v[0].is_object())) continue;
        if (v.is_object()) {
            for (const auto& [k2, v2] : v.items()) std::cout << "# " << k << "." << k2 << "\t" << cell(v2) << "\n";
        } else {
            std::cout << "# " << k << "\t" << cell(v) << "\n";
        }
    }
    for (const auto& [k, v] : doc.items()) {
        if (!(v.is_array() && !v.empty() && v[0].is_object())) continue;
        if (k != "rows") std::cout << "## " << k << "\n";
        bool first = true;
        for (const auto& row : v) {
            if (first) {
                bool tab = false;
                for (const auto& [c, x] : row.items()) {
                    std::cout << (tab ? "\t" : "") << c;
                    tab = true;
                }
                std::cout << "\n";
                first = false;
            }
            bool tab = false;
            for (const auto& [c, x] : row.items()) {
                std::cout << (tab ? "\t" : "") << cell(x);
                tab = true;
            }
            std::cout << "\n";
        }
    }
}

SatakeDiagram load_diagram(const std::string& name, const std::string& file) {
    if (!file.empty()) {
        std::ifstream in(file);
        if (!in) throw InputError("cannot read " + file);
        std::stringstream ss;
        ss << in.rdbuf();
        return parse_diagram(ss.str());
    }
    try {
        return catalog_diagram(name);
    } catch (const std::out_of_range&) {
        throw InputError("unknown diagram '" + name + "'; try `wonder satake --list`");
    }
}

Json satake_doc(const SatakeDiagram& d) {
    Json doc;
    doc["name"] = d.name();
    doc["type"] = d.system().label();
    auto rr = restricted_system(d);
    doc["restricted_type"] = rr.type_label;
    doc["restricted_rank"] = rr.rank;
    doc["spherical_roots"] = root_list(rr.spherical_roots);
    auto split = phi_split(d);
    doc["phi0"] = split.phi0.size();
    doc["phi1"] = split.phi1.size();
    std::string comps;
    for (const auto& c : decompose(d)) {
        std::string v;
        for (int x : c.vertices) v += (v.empty() ? "" : ",") + std::to_string(x + 1);
        comps += (comps.empty() ? "" : " ") + std::string(c.kind == ComponentKind::GxG ? "GxG" : "G") + "{" + v + "}";
    }
    doc["components"] = comps;
    Json rows = Json::array();
    for (int i = 0; i < d.system().rank(); ++i) {
        rows.push_back({{"vertex", i + 1},
                        {"colour", d.is_black(i) ? "black" : "white"},
                        {"partner", d.partner(i) + 1},
                        {"theta", format_root(theta_of_simple(d, i))}});
    }
    doc["rows"] = rows;
    return doc;
}

SubspacePoint parse_point(const std::string& s) {
    std::vector<std::vector<long long>> rows;
    std::stringstream in(s);
    std::string r;
    while (std::getline(in, r, ';')) {
        auto v = parse_ints(r);
        if (v.size() != 6) throw InputError("each row needs 6 entries: '" + r + "'");
        rows.emplace_back(v.begin(), v.end());
    }
    if (rows.size() != 3) throw InputError("a point of Gr_3(C^6) needs 3 rows separated by ';'");
    return SubspacePoint::from_ints(rows);
}

Json character_rows(const Character& c, const Grading* g) {
    Json rows = Json::array();
    for (const auto& [w, m] : c.terms) {
        Json row{{"weight", format_weight(w)}};
        if (g) row["degree"] = g->degree(w);
        row["mult"] = m;
        rows.push_back(row);
    }
    return rows;
}

Json cross_doc(const CrossReport& r) {
    Json j;
    j["k"] = r.k;
    j["n"] = r.n;
    j["h3_dim"] = r.h3.dimension();
    j["F1_lower_dim"] = r.lower[0].dimension();
    j["F1_upper_dim"] = r.upper[0].dimension();
    j["F2_lower_dim"] = r.lower[1].dimension();
    j["F2_upper_dim"] = r.upper[1].dimension();
    j["F1_contributes"] = r.contributes[0];
    j["F2_contributes"] = r.contributes[1];
    j["certified"] = r.certified;
    j["skipped"] = r.skipped;
    j["violations"] = r.violations;
    j["ok"] = r.ok();
    return j;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Satake diagrams, GIT on Gr_3(C^6), Kempf series and cohomology of the wonderful PGL3"};
    app.require_subcommand(1);
    std::string format = "tsv";
    app.add_option("--format", format, "tsv or json")->check(CLI::IsMember({"tsv", "json"}));

    // satake
    auto* sat = app.add_subcommand("satake", "involution and restricted root system of a Satake diagram");
    std::string diagram, diagram_file;
    bool list = false;
    sat->add_option("--diagram", diagram, "catalog name, e.g. GxG/G-A2");
    sat->add_option("--file", diagram_file, "diagram in the text format");
    sat->add_flag("--list", list, "list the catalog");

    // classify
    auto* cls = app.add_subcommand("classify", "existence of monomial operators");
    int max_rank = 8, bound = 100;
    std::string policy = "both", cls_diagram;
    cls->add_option("--max-rank", max_rank)->check(CLI::Range(1, 8));
    cls->add_option("--bound", bound)->check(CLI::PositiveNumber);
    cls->add_option("--policy", policy)->check(CLI::IsMember({"both", "displayed"}));
    cls->add_option("--diagram", cls_diagram, "classify one catalog diagram instead of sweeping");

    // git
    auto* git = app.add_subcommand("git", "C*-GIT on Gr_3(V + V*)");
    git->require_subcommand(1);
    auto* strat = git->add_subcommand("stratify", "stability of a point");
    std::string point;
    strat->add_option("--point", point, "three rows of six integers, rows split by ';'")->required();
    auto* dec = git->add_subcommand("decompose", "G x G summands of Lambda^3(V + V*)");
    auto* inv = git->add_subcommand("invariants", "generators of the invariant ring");

    // schubert
    auto* sch = app.add_subcommand("schubert", "Schubert cells and Kempf series");
    sch->require_subcommand(1);
    auto* cells = sch->add_subcommand("cells", "the 20 cells");
    auto* kempf = sch->add_subcommand("kempf", "local cohomology character of one cell");
    std::string cell = "F1", window = "-20:20";
    int k = 0, cap = 12;
    kempf->add_option("--cell", cell, "F1, e, a fixed point like 236, or a word like s3s4s2s3");
    kempf->add_option("--k", k);
    kempf->add_option("--window", window, "degree window a:b");
    kempf->add_option("--cap", cap, "height cutoff")->check(CLI::NonNegativeNumber);
    auto* bnd = sch->add_subcommand("bounds", "Cousin bounds on an unstable stratum");
    std::string stratum = "F1", mirror = "literal";
    long long grade = 0;
    bnd->add_option("--stratum", stratum)->check(CLI::IsMember({"F1", "F2"}));
    bnd->add_option("--k", k);
    bnd->add_option("--window", window);
    bnd->add_option("--cap", cap)->check(CLI::NonNegativeNumber);
    bnd->add_option("--mirror", mirror, "F2 reading: literal (F1 at -k) or swap (F1 at k)")
        ->check(CLI::IsMember({"literal", "swap"}));
    auto* grade_opt = bnd->add_option("--grade", grade, "print only this C*-grade");

    // cohomology
    auto* coh = app.add_subcommand("cohomology", "H^i of line bundles on the wonderful PGL3");
    std::string lambda;
    int degree = 3, box = 0;
    std::string cwindow = "-24:24";
    int ccap = 16;
    coh->add_option("--lambda", lambda, "a1,a2,b1,b2: a1 w1 + a2 w2 + b1 g1 + b2 g2")->required();
    coh->add_option("--i", degree)->check(CLI::Range(0, 8));
    coh->add_option("--box", box, "search radius, 0 for the a priori bound")->check(CLI::NonNegativeNumber);
    coh->add_option("--window", cwindow, "degree window for the cross check");
    coh->add_option("--cap", ccap, "height cutoff for the cross check")->check(CLI::NonNegativeNumber);

    // acceptance
    auto* acc = app.add_subcommand("acceptance", "run the ten acceptance criteria");
    unsigned seed = 20240917;
    acc->add_option("--seed", seed);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kOk : kInput;
    }

    try {
        if (*sat) {
            if (list) {
                Json doc;
                Json rows = Json::array();
                for (const auto& e : catalog_entries())
                    rows.push_back({{"name", e.name}, {"verified", e.verified}, {"description", e.description}});
                doc["rows"] = rows;
                print(doc, format);
                return kOk;
            }
            if (diagram.empty() && diagram_file.empty()) throw InputError("satake needs --diagram, --file or --list");
            print(satake_doc(load_diagram(diagram, diagram_file)), format);
            return kOk;
        }
        if (*cls) {
            BcPolicy p = policy == "both" ? BcPolicy::Both : BcPolicy::DisplayedOnly;
            Json doc;
            if (!cls_diagram.empty()) {
                auto v = classify(load_diagram(cls_diagram, ""), bound, p);
                doc["diagram"] = v.diagram;
                doc["restricted_type"] = v.restricted_type;
                doc["rank"] = v.rank;
                doc["exists"] = v.exists;
                Json rows = Json::array();
                for (const auto& s : v.minimal) {
                    std::string e;
                    for (int x : s.exponents) e += (e.empty() ? "" : ",") + std::to_string(x);
                    rows.push_back({{"minimal_solution", e}});
                }
                doc["rows"] = rows;
            } else {
                Json rows = Json::array();
                for (const auto& r : classification_sweep(max_rank, bound, p))
                    rows.push_back({{"type", r.label},
                                    {"exists", r.exists},
                                    {"equal_parts", r.equal_parts},
                                    {"solutions", r.solutions}});
                doc["bound"] = bound;
                doc["rows"] = rows;
            }
            print(doc, format);
            return kOk;
        }
        if (*git) {
            Json doc;
            if (*strat) {
                auto u = parse_point(point);
                auto d = intersection_dims(u);
                doc["dim_U_cap_V"] = d.dV;
                doc["dim_U_cap_Vstar"] = d.dVstar;
                doc["semistable"] = is_semistable(u);
                doc["stable"] = is_stable(u);
                doc["stratum"] = stratum_name(unstable_component(u));
                doc["lagrangian"] = is_lagrangian(u);
                doc["orthogonal_isotropic"] = is_orthogonal_isotropic(u);
                Json rows = Json::array();
                for (const auto& p : all_plucker_indices()) {
                    auto c = u.plucker(p);
                    if (c == 0) continue;
                    rows.push_back({{"plucker", format_plucker(p)}, {"cstar", cstar_weight(p)}, {"value", c.str()}});
                }
                doc["rows"] = rows;
            } else if (*dec) {
                Json rows = Json::array();
                for (const auto& s : decompose_module())
                    rows.push_back({{"highest", format_weight(s.highest)},
                                    {"highest_vector", format_plucker(s.highest_vector)},
                                    {"cstar", s.cstar},
                                    {"dim", s.dim}});
                doc["rows"] = rows;
            } else if (*inv) {
                Json rows = Json::array();
                for (const auto& f : invariant_generators()) {
                    std::string d;
                    for (int x : f.degrees) d += (d.empty() ? "" : ",") + std::to_string(x);
                    rows.push_back({{"family", f.name}, {"degrees", d}, {"count", f.count}});
                }
                doc["rows"] = rows;
            }
            print(doc, format);
            return kOk;
        }
        if (*sch) {
            Json doc;
            const auto& g = grassmannian_ring().grading();
            if (*cells) {
                Json rows = Json::array();
                for (const auto& c : enumerate_cells()) {
                    auto d = kl_sets(c);
                    rows.push_back({{"word", format_word(c.w)},
                                    {"fixed_point", format_fixed_point(c.fixed_point)},
                                    {"codim", c.codim},
                                    {"stratum", stratum_name(unstable_component(SubspacePoint::coordinate(c.fixed_point)))},
                                    {"K", root_list(d.K)},
                                    {"L", root_list(d.L)}});
                }
                doc["rows"] = rows;
            } else if (*kempf) {
                auto [a, b] = parse_window(window);
                KempfOptions opt{a, b, cap};
                auto c = parse_cell(cell);
                auto d = kl_sets(c);
                doc["cell"] = format_word(c.w);
                doc["fixed_point"] = format_fixed_point(c.fixed_point);
                doc["codim"] = c.codim;
                doc["k"] = k;
                doc["leading"] = format_weight(leading_exponent(c, k));
                doc["K"] = root_list(d.K);
                doc["L"] = root_list(d.L);
                doc["window"] = window;
                doc["cap"] = cap;
                auto s = kempf_character(c, k, opt);
                Character ch;
                for (const auto& [w, m] : s.terms) ch.add(w, m);
                doc["terms"] = s.terms.size();
                doc["rows"] = character_rows(ch, &g);
            } else if (*bnd) {
                auto [a, b] = parse_window(window);
                KempfOptions opt{a, b, cap};
                Stratum st = stratum == "F1" ? Stratum::F1 : Stratum::F2;
                auto bb = unstable_character_bounds(st, k, opt, mirror == "swap" ? Mirror::BlockSwap : Mirror::Literal);
                doc["stratum"] = stratum;
                doc["k"] = k;
                doc["mirror"] = mirror;
                Character up = bb.upper, lo = bb.lower;
                if (*grade_opt) {
                    up = grade_slice(up, grade);
                    lo = grade_slice(lo, grade);
                    doc["grade"] = grade;
                }
                long long dmin = kDegInf, dmax = -kDegInf;
                for (const auto& [w, m] : bb.upper.terms) {
                    dmin = std::min(dmin, g.degree(w));
                    dmax = std::max(dmax, g.degree(w));
                }
                if (!bb.upper.empty()) {
                    doc["min_degree"] = dmin;
                    doc["max_degree"] = dmax;
                }
                Json rows = Json::array();
                for (const auto& [w, m] : up.terms)
                    rows.push_back({{"weight", format_weight(w)}, {"degree", g.degree(w)}, {"lower", lo.at(w)}, {"upper", m}});
                doc["rows"] = rows;
            }
            print(doc, format);
            return kOk;
        }
        if (*coh) {
            auto v = parse_ints(lambda);
            if (v.size() != 4) throw InputError("--lambda needs four integers a1,a2,b1,b2");
            Weight lam = spanning_weight(v[0], v[1], v[2], v[3]);
            Json doc;
            doc["lambda"] = format_weight(lam);
            doc["i"] = degree;
            auto prof = vanishing_profile(lam, box);
            doc["profile"] = std::vector<int>(prof.begin(), prof.end());
            std::string comps;
            for (const auto& m : tchoudjem_components(lam, degree, box)) comps += (comps.empty() ? "" : " ") + format_weight(m);
            doc["components"] = comps;
            auto h = h_character(lam, degree, box);
            doc["dim"] = h.dimension();
            int rc = kOk;
            if (degree == 3) {
                auto [a, b] = parse_window(cwindow);
                auto rep = cross_validate_h3(lam, KempfOptions{a, b, ccap}, box);
                doc["cross_check"] = cross_doc(rep);
                if (!rep.violations.empty() && rep.certified) rc = kMismatch;
                if (!rep.certified) rc = kCertification;
                if (rep.contributes[0] && rep.contributes[1]) rc = kMismatch;
            }
            doc["character"] = character_rows(h, nullptr);
            print(doc, format);
            return rc;
        }
        if (*acc) {
            Json doc;
            Json rows = Json::array();
            bool all = true;
            for (const auto& r : run_acceptance(seed)) {
                all = all && r.pass;
                char secs[32];
                std::snprintf(secs, sizeof secs, "%.2f", r.seconds);
                rows.push_back({{"criterion", r.id}, {"status", r.pass ? "PASS" : "FAIL"}, {"name", r.name},
                                {"seconds", secs}, {"detail", r.detail}});
            }
            doc["seed"] = seed;
            doc["rows"] = rows;
            print(doc, format);
            return all ? kOk : kMismatch;
        }
    } catch (const CertificationError& e) {
        std::cerr << "certification: " << e.what() << "\n";
        return kCertification;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input: " << e.what() << "\n";
        return kInput;
    } catch (const std::domain_error& e) {
        std::cerr << "input: " << e.what() << "\n";
        return kInput;
    } catch (const std::out_of_range& e) {
        std::cerr << "input: " << e.what() << "\n";
        return kInput;
    }
    return kOk;
}
