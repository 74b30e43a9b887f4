#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "matvar/invariants.hpp"
#include "matvar/json_io.hpp"
#include "matvar/segre.hpp"
#include "matvar/verify.hpp"

namespace {

using matvar::ArrangementPoset;
using matvar::BlowupTower;
using matvar::Field;
using matvar::IntPolynomial;
using nlohmann::json;

struct CommonInput {
    std::string graph_path;
    std::string config_path;
    std::string field = "Q";
    int padding = 1;

    void attach(CLI::App* cmd) {
        auto* g = cmd->add_option("--graph", graph_path, "graph JSON file");
        auto* c = cmd->add_option("--config", config_path, "point-configuration JSON file");
        g->excludes(c);
        cmd->add_option("--field", field, "coefficient field, Q or GF:p (graph input only)");
        cmd->add_option("--padding", padding,
                        "ambient dimension n = r(1) + padding for graph input")
            ->check(CLI::PositiveNumber);
    }

    json load_json(const std::string& path) const {
        std::ifstream in(path);
        if (!in) throw matvar::input_error("cannot open " + path);
        json j;
        try {
            in >> j;
        } catch (const json::exception& ex) {
            throw matvar::input_error(path + ": " + ex.what());
        }
        return j;
    }

    ArrangementPoset build() const {
        if (!graph_path.empty()) {
            matvar::Graph g = matvar::graph_from_json(load_json(graph_path));
            return matvar::build_arrangement(g, padding, Field::parse(field));
        }
        if (!config_path.empty())
            return matvar::build_arrangement(matvar::config_from_json(load_json(config_path)));
        throw matvar::input_error("one of --graph or --config is required");
    }

    matvar::Graph graph() const {
        if (graph_path.empty()) throw matvar::input_error("--graph is required here");
        return matvar::graph_from_json(load_json(graph_path));
    }
};

std::pair<long, long> parse_range(const std::string& s) {
    auto dots = s.find("..");
    try {
        if (dots == std::string::npos) {
            long v = std::stol(s);
            return {v, v};
        }
        long a = std::stol(s.substr(0, dots));
        long b = std::stol(s.substr(dots + 2));
        if (a > b) throw matvar::input_error("empty range " + s);
        return {a, b};
    } catch (const std::logic_error&) {
        throw matvar::input_error("malformed range " + s + " (expected a..b)");
    }
}

/// Compact polynomial form used by the scalar commands: ascending coefficients,
/// numeric when they fit in 64 bits, decimal strings otherwise.
json compact_poly(const IntPolynomial& p) {
    json coeffs = json::array();
    for (const auto& c : p.coeffs()) {
        if (c.fits_slong_p())
            coeffs.push_back(c.get_si());
        else
            coeffs.push_back(c.get_str());
    }
    return json{{"coeffs", coeffs}};
}

std::string request_line(int argc, char** argv) {
    std::string s;
    for (int i = 0; i < argc; ++i) {
        if (i) s += ' ';
        s += argv[i];
    }
    return s;
}

void emit(const json& j, const std::string& format) {
    if (format == "text") {
        if (j.contains("value")) {
            std::cout << j.at("value").get<std::string>() << "\n";
            return;
        }
        if (j.contains("table")) return;  // tables print themselves in text mode
    }
    std::cout << j.dump(2) << "\n";
}

void print_text_table(const std::vector<long>& ms, const std::vector<long>& ns,
                      const std::vector<std::vector<std::string>>& cells) {
    size_t width = 8;
    for (const auto& row : cells)
        for (const auto& c : row) width = std::max(width, c.size() + 2);
    std::cout << std::setw(6) << "n\\m";
    for (long m : ms) std::cout << std::setw(static_cast<int>(width)) << m;
    std::cout << "\n";
    for (size_t i = 0; i < ns.size(); ++i) {
        std::cout << std::setw(6) << ns[i];
        for (const auto& c : cells[i]) std::cout << std::setw(static_cast<int>(width)) << c;
        std::cout << "\n";
    }
}

int run(int argc, char** argv) {
    CLI::App app{"Exact intersection numbers on blow-ups of projective space "
                 "along subspace arrangements"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string format = "json";
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "text"}));

    CommonInput in;
    std::string m_range = "2..5", n_range = "3..7";
    int n_dim = -1;
    long m_single = -1;
    std::string monomial_spec, minor_target = "l4", suite = "all", corpus_name = "default";
    int max_vertices = 4;

    auto* c_flats = app.add_subcommand("flats", "the intersection-closed subspace poset");
    in.attach(c_flats);
    auto* c_charpoly = app.add_subcommand("charpoly", "characteristic polynomial of the lattice");
    in.attach(c_charpoly);
    auto* c_chromatic = app.add_subcommand("chromatic", "chromatic polynomial of a graph");
    in.attach(c_chromatic);
    c_chromatic->add_option("--m", m_single, "evaluate at m colors");
    auto* c_beta = app.add_subcommand("beta", "Crapo beta invariant");
    in.attach(c_beta);
    auto* c_modular = app.add_subcommand("modular", "modular flats of the lattice");
    in.attach(c_modular);
    auto* c_sbar = app.add_subcommand("sbar", "the class Sbar(t) in both bases");
    in.attach(c_sbar);
    auto* c_degree = app.add_subcommand("degree", "degree of one divisor monomial");
    in.attach(c_degree);
    c_degree->add_option("--n", n_dim, "tower dimension")->required();
    c_degree->add_option("--monomial", monomial_spec, "exponents as id:exp,id:exp,...")
        ->required();
    auto* c_dtable = app.add_subcommand("dtable", "table of d(m,n)");
    in.attach(c_dtable);
    c_dtable->add_option("--m-range", m_range, "columns, a..b");
    c_dtable->add_option("--n-range", n_range, "rows, a..b");
    auto* c_s0 = app.add_subcommand("s0table", "table of s0(m,n) with full Segre vectors");
    in.attach(c_s0);
    c_s0->add_option("--m-range", m_range, "columns, a..b");
    c_s0->add_option("--n-range", n_range, "rows, a..b");
    auto* c_nice = app.add_subcommand("nice", "niceness of the lattice");
    in.attach(c_nice);
    auto* c_minor = app.add_subcommand("minor", "search for a named minor");
    in.attach(c_minor);
    c_minor->add_option("--target", minor_target, "l4 or f7")
        ->check(CLI::IsMember({"l4", "f7"}));
    auto* c_verify = app.add_subcommand("verify", "run the identity/congruence suites");
    c_verify->add_option("--suite", suite, "all, identities or congruences")
        ->check(CLI::IsMember({"all", "identities", "congruences"}));
    c_verify->add_option("--corpus", corpus_name, "corpus name")
        ->check(CLI::IsMember({"default"}));
    c_verify->add_option("--max-vertices", max_vertices, "graph corpus bound")
        ->check(CLI::Range(2, 5));
    auto* c_congr = app.add_subcommand("congruence", "degree/Segre congruence scan");
    in.attach(c_congr);
    c_congr->add_option("--m-range", m_range, "values of m, a..b");
    c_congr->add_option("--n-range", n_range, "values of n, a..b");

    CLI11_PARSE(app, argc, argv);
    CLI::App* cmd = app.get_subcommands().front();

    json out;
    out["request"] = request_line(argc, argv);

    if (cmd == c_verify) {
        auto corpus = matvar::default_corpus(max_vertices);
        matvar::IdentityReport report;
        if (suite == "all" || suite == "identities") {
            matvar::IdentityReport r = matvar::run_identity_suite(corpus);
            report.checks += r.checks;
            report.failures.insert(report.failures.end(), r.failures.begin(), r.failures.end());
            report.notes.insert(report.notes.end(), r.notes.begin(), r.notes.end());
        }
        if (suite == "all" || suite == "congruences") {
            matvar::IdentityReport r = matvar::congruence_scan(corpus);
            report.checks += r.checks;
            report.failures.insert(report.failures.end(), r.failures.begin(), r.failures.end());
            report.notes.insert(report.notes.end(), r.notes.begin(), r.notes.end());
        }
        out["report"] = matvar::report_to_json(report);
        std::cout << out.dump(2) << "\n";
        return report.ok() ? 0 : 3;
    }

    if (cmd == c_chromatic) {
        matvar::Graph g = in.graph();
        IntPolynomial p = matvar::chromatic_polynomial(g);
        out["polynomial"] = compact_poly(p);
        if (m_single >= 0) out["m"] = m_single, out["value"] = p.eval(m_single).get_str();
        if (format == "text" && m_single >= 0) {
            std::cout << p.eval(m_single).get_str() << "\n";
            return 0;
        }
        std::cout << out.dump(2) << "\n";
        return 0;
    }

    ArrangementPoset poset = in.build();
    out["metadata"] = matvar::metadata_json(poset, n_dim);

    if (cmd == c_flats) {
        out["poset"] = matvar::poset_to_json(poset);
    } else if (cmd == c_charpoly) {
        out["polynomial"] = compact_poly(matvar::characteristic_polynomial(poset, 0));
    } else if (cmd == c_beta) {
        out["value"] = matvar::beta(poset, 0).get_str();
    } else if (cmd == c_modular) {
        json ids = json::array();
        for (int x : poset.flat_ids())
            if (matvar::is_modular(poset, x)) ids.push_back(x);
        out["modular_flats"] = ids;
    } else if (cmd == c_sbar) {
        matvar::DivisorClass sbar = matvar::build_Sbar(poset);
        out["H"] = matvar::divisor_to_json(sbar);
        out["E"] = matvar::divisor_to_json(matvar::change_basis(poset, sbar, matvar::Basis::E));
    } else if (cmd == c_degree) {
        BlowupTower tower = matvar::make_tower(poset, n_dim);
        matvar::DivisorMonomial mono(poset.elems.size(), 0);
        std::stringstream ss(monomial_spec);
        std::string item;
        while (std::getline(ss, item, ',')) {
            auto colon = item.find(':');
            if (colon == std::string::npos)
                throw matvar::input_error("monomial term " + item + " is not id:exp");
            int id, exp;
            try {
                id = std::stoi(item.substr(0, colon));
                exp = std::stoi(item.substr(colon + 1));
            } catch (const std::logic_error&) {
                throw matvar::input_error("monomial term " + item + " is not id:exp");
            }
            if (id < 0 || id >= static_cast<int>(mono.size()))
                throw matvar::input_error("monomial id " + std::to_string(id) + " out of range");
            mono[id] += exp;
        }
        matvar::DegreeEngine engine(tower);
        out["value"] = engine.monomial_degree(mono).get_str();
        emit(out, format);
        return 0;
    } else if (cmd == c_dtable || cmd == c_s0) {
        auto [m_lo, m_hi] = parse_range(m_range);
        auto [n_lo, n_hi] = parse_range(n_range);
        if (m_lo < 1) throw matvar::precondition_error("m must be >= 1");
        std::vector<long> ms, ns;
        for (long m = m_lo; m <= m_hi; ++m) ms.push_back(m);
        for (long n = n_lo; n <= n_hi; ++n) ns.push_back(n);
        json rows = json::array();
        std::vector<std::vector<std::string>> cells;
        for (long n : ns) {
            BlowupTower tower = matvar::make_tower(poset, static_cast<int>(n));
            json row = json::array();
            std::vector<std::string> text_row;
            for (long m : ms) {
                if (cmd == c_dtable) {
                    matvar::DegreeResult r = matvar::degree_d(tower, m);
                    row.push_back(json{{"m", m},
                                       {"n", n},
                                       {"value", r.value.get_str()},
                                       {"nice", r.nice}});
                    text_row.push_back(r.value.get_str());
                } else {
                    matvar::SegreVector s = matvar::segre_class(tower, m);
                    json comps = json::array();
                    for (const auto& c : s.components) comps.push_back(c.get_str());
                    row.push_back(json{{"m", m},
                                       {"n", n},
                                       {"s0", s.components[0].get_str()},
                                       {"components", comps},
                                       {"nice", s.nice}});
                    text_row.push_back(s.components[0].get_str());
                }
            }
            rows.push_back(row);
            cells.push_back(std::move(text_row));
        }
        out["table"] = rows;
        if (format == "text") {
            print_text_table(ms, ns, cells);
            return 0;
        }
    } else if (cmd == c_nice) {
        out["nice"] = matvar::is_nice(poset);
    } else if (cmd == c_minor) {
        matvar::MinorTarget t =
            minor_target == "l4" ? matvar::MinorTarget::L4 : matvar::MinorTarget::F7;
        out["target"] = minor_target;
        out["has_minor"] = matvar::has_minor(poset, t);
    } else if (cmd == c_congr) {
        auto [m_lo, m_hi] = parse_range(m_range);
        auto [n_lo, n_hi] = parse_range(n_range);
        matvar::CorpusEntry entry{in.graph_path.empty() ? in.config_path : in.graph_path,
                                  std::nullopt, poset};
        matvar::IdentityReport report =
            matvar::congruence_scan({entry}, m_hi, static_cast<int>(n_hi));
        (void)m_lo;
        (void)n_lo;
        out["report"] = matvar::report_to_json(report);
        std::cout << out.dump(2) << "\n";
        return report.ok() ? 0 : 3;
    }

    emit(out, format);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const matvar::input_error& ex) {
        std::cerr << "input error: " << ex.what() << "\n";
        return 1;
    } catch (const matvar::precondition_error& ex) {
        std::cerr << "precondition violated: " << ex.what() << "\n";
        return 2;
    } catch (const matvar::resource_error& ex) {
        std::cerr << "resource bound exceeded: " << ex.what() << "\n";
        return 2;
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 1;
    }
}
