// Command-line front end: verification suites, multiplication tables,
// degree diagrams, and the auxiliary Schubert-calculus calculators.
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "horochow/catalog.hpp"
#include "horochow/chern.hpp"
#include "horochow/errors.hpp"
#include "horochow/hasse.hpp"
#include "horochow/partition.hpp"
#include "horochow/render.hpp"
#include "horochow/report.hpp"
#include "horochow/ringkit.hpp"
#include "horochow/schubert.hpp"

namespace {

using namespace horochow;

/// Exit statuses: 0 success, 1 a verification ran and failed, 2 usage or
/// input errors (unknown variety, malformed partition, bad spec file...).
constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;

struct Printer {
    bool ascii = false;
    void line(const std::string& text) const {
        std::cout << (ascii ? render::to_ascii(text) : text) << "\n";
    }
};

/// Resolve a variety description: an explicit --spec path wins, then
/// $HOROCHOW_SPEC_DIR/<name>.json when present, then the built-in catalog.
catalog::VarietySpec resolve_spec(const std::string& name, const std::string& spec_path) {
    auto read_file = [](const std::string& path) {
        std::ifstream in(path);
        if (!in) throw Error("cannot read spec file: " + path);
        std::ostringstream text;
        text << in.rdbuf();
        return text.str();
    };
    if (!spec_path.empty()) return catalog::load_spec_text(read_file(spec_path));
    if (const char* dir = std::getenv("HOROCHOW_SPEC_DIR")) {
        const std::string path = std::string(dir) + "/" + name + ".json";
        if (std::ifstream(path).good()) return catalog::load_spec_text(read_file(path));
    }
    return catalog::builtin(name);
}

/// Seed classes of the Giambelli solve, parsed in the ring's variables.
std::map<std::string, ringkit::RingElt> parse_seeds(const catalog::VarietySpec& spec,
                                                    const ringkit::RingPtr& ring) {
    std::vector<std::string> names = spec.generator_names();
    if (ring->has_quantum()) names.push_back(ring->presentation().quantum);
    std::map<std::string, ringkit::RingElt> seeds;
    for (const auto& [vertex, text] : spec.seeds)
        seeds.emplace(vertex, ring->normal_form(catalog::parse_to_poly(text, names)));
    return seeds;
}

/// The seed vertex of positive degree (the second ring generator).
std::string second_seed_vertex(const catalog::VarietySpec& spec) {
    const HasseDiagram& diag = spec.hasse();
    for (const auto& [vertex, text] : spec.seeds)
        if (diag.degree_of(vertex) > 0) return vertex;
    throw InvariantViolation("no seed of positive degree");
}

int cmd_verify(const catalog::VarietySpec& spec, const catalog::SuiteOptions& options,
               bool as_json, const Printer& out) {
    CheckReport report = catalog::run_suite(spec, options);
    if (as_json) {
        std::cout << catalog::report_to_json(report).dump(2) << "\n";
        return report.all_pass() ? kOk : kCheckFailed;
    }
    int failed = 0;
    for (const auto& c : report.checks) {
        if (c.passed()) {
            out.line("PASS " + c.id + " " + c.summary);
            continue;
        }
        ++failed;
        std::string msg = "FAIL " + c.id + " " + c.summary;
        if (c.status == CheckResult::Status::Error) {
            msg += ": error: " + c.detail;
        } else {
            if (!c.lhs.empty() || !c.rhs.empty())
                msg += " [computed " + c.lhs + ", expected " + c.rhs + "]";
            if (!c.detail.empty()) msg += ": " + c.detail;
        }
        out.line(msg);
    }
    std::ostringstream tally;
    tally << report.checks.size() << " checks, ";
    if (failed == 0)
        tally << "all passed";
    else
        tally << failed << " failed";
    out.line(tally.str());
    return failed == 0 ? kOk : kCheckFailed;
}

/// Shared scaffolding for the table commands: ring, basis classes, and the
/// id of the class rendered as "1".
struct TableBasis {
    ringkit::RingPtr ring;
    std::map<std::string, ringkit::RingElt> classes;
    std::vector<HasseVertex> order;  ///< declaration order with degrees
    std::string unit;
};

TableBasis first_basis(const catalog::VarietySpec& spec, bool quantum) {
    TableBasis basis;
    basis.ring = quantum ? catalog::build_quantum_ring(spec) : catalog::build_classical_ring(spec);
    const HasseDiagram& diag = spec.hasse();
    GiambelliMap classes = giambelli_solve(diag, basis.ring, parse_seeds(spec, basis.ring));
    basis.classes = std::move(classes);
    basis.order = diag.vertices();
    basis.unit = diag.unit_vertex();
    return basis;
}

TableBasis dual_basis_classes(const catalog::VarietySpec& spec) {
    if (spec.golden.dual_diagram.vertices.empty())
        throw InvariantViolation("this variety description carries no dual-basis diagram");
    TableBasis basis;
    basis.ring = catalog::build_classical_ring(spec);
    const HasseDiagram& diag = spec.hasse();
    GiambelliMap giambelli = giambelli_solve(diag, basis.ring, parse_seeds(spec, basis.ring));
    std::map<std::string, ringkit::RingElt> duals;
    CheckReport rep = dual_diagram_check(spec.golden.dual_diagram, diag, basis.ring,
                                         giambelli, spec.name + ".dual", &duals);
    if (!rep.all_pass())
        throw InvariantViolation("the dual diagram is inconsistent with the intersection pairing");
    basis.classes = std::move(duals);
    basis.order = spec.golden.dual_diagram.vertices;
    for (const auto& v : basis.order)
        if (v.degree == 0) basis.unit = v.id;
    return basis;
}

nlohmann::json combo_to_json(const VertexCombo& combo) {
    nlohmann::json rhs = nlohmann::json::array();
    for (const auto& t : to_terms(combo))
        rhs.push_back({t.coeff.str(), t.vertex, t.q_power});
    return rhs;
}

int cmd_table(const catalog::VarietySpec& spec, const std::string& which, bool quantum,
              const std::string& format, const Printer& out) {
    const int top = spec.hasse().top_degree();
    bool all_expressed = true;
    nlohmann::json rows = nlohmann::json::array();

    auto emit = [&](const std::string& a, const std::string& a_show, const std::string& b,
                    const std::string& b_show, const TableBasis& basis) {
        ringkit::RingElt product = mult(basis.classes.at(a), basis.classes.at(b));
        std::optional<VertexCombo> combo = express_over(basis.classes, basis.ring, product);
        if (!combo) {
            all_expressed = false;
            out.line(a_show + "·" + b_show + " = (not expressible over the basis)");
            return;
        }
        if (format == "json")
            rows.push_back({{"a", a}, {"b", b}, {"rhs", combo_to_json(*combo)}});
        else
            out.line(a_show + "·" + b_show + " = " + render::combo(*combo, basis.unit));
    };

    if (quantum) {
        TableBasis basis = first_basis(spec, true);
        const std::string b = second_seed_vertex(spec);
        // A bare generator seed is displayed by its symbol, like the tables
        // it reproduces.
        std::string b_show = render::vertex(b);
        auto seed_text = spec.seeds.at(b);
        for (const auto& g : spec.generators)
            if (g.name == seed_text) b_show = render::vertex(seed_text);
        for (const auto& v : basis.order) {
            if (v.id == basis.unit) continue;
            emit(v.id, render::vertex(v.id), b, b_show, basis);
        }
    } else {
        TableBasis basis = which == "dual" ? dual_basis_classes(spec) : first_basis(spec, false);
        const auto& order = basis.order;
        for (std::size_t i = 0; i < order.size(); ++i) {
            if (order[i].id == basis.unit) continue;
            for (std::size_t j = i; j < order.size(); ++j) {
                if (order[j].id == basis.unit) continue;
                if (order[i].degree + order[j].degree > top) continue;
                emit(order[i].id, render::vertex(order[i].id), order[j].id,
                     render::vertex(order[j].id), basis);
            }
        }
    }
    if (format == "json") std::cout << rows.dump(2) << "\n";
    return all_expressed ? kOk : kCheckFailed;
}

int cmd_degrees(const catalog::VarietySpec& spec, const Printer& out) {
    const HasseDiagram& diag = spec.hasse();
    std::map<std::string, Rat> degs = degrees_from_hasse(diag);
    std::string line;
    for (const auto& v : diag.vertices()) {
        if (!line.empty()) line += " ";
        line += render::vertex(v.id) + ":" + degs.at(v.id).str();
    }
    out.line(line);
    return kOk;
}

int cmd_fundamental_class(const catalog::VarietySpec& spec, const Printer& out) {
    if (spec.name != "g2") {
        std::cerr << "error: the fundamental-class pipeline is specific to the g2 geometry\n";
        return kUsage;
    }
    chern::FundamentalClassReport report = chern::g2_fundamental_class();
    for (auto it = report.evaluations.rbegin(); it != report.evaluations.rend(); ++it)
        out.line("[" + it->first.str() + "]: " + it->second.str());
    out.line(render::schubert(report.cycle));
    return kOk;
}

int cmd_reconstruct(const catalog::VarietySpec& spec, const Printer& out) {
    const HasseDiagram& diag = spec.hasse();
    ringkit::RingPtr ring = catalog::build_classical_ring(spec);
    GiambelliMap classes = giambelli_solve(diag, ring, parse_seeds(spec, ring));

    std::map<std::pair<std::string, std::string>, Rat> pairing;
    for (const auto& a : diag.vertices())
        for (const auto& b : diag.vertices())
            if (a.degree + b.degree == diag.top_degree())
                pairing[{a.id, b.id}] = integrate(mult(classes.at(a.id), classes.at(b.id)));

    const std::string sigma = second_seed_vertex(spec);
    std::map<std::string, VertexCombo> true_mult;
    for (const auto& v : diag.vertices()) {
        ringkit::RingElt product = mult(classes.at(sigma), classes.at(v.id));
        std::optional<VertexCombo> combo = express_over(classes, ring, product);
        if (!combo) throw InvariantViolation("a product of basis classes left the basis span");
        true_mult[v.id] = *combo;
    }

    Reconstruction rec = reconstruct_second_generator(diag, pairing, sigma, true_mult);
    out.line("solution space dimension: " + std::to_string(rec.dimension));
    out.line(std::string("contains true multiplication: ") + (rec.contains_true ? "yes" : "no"));
    out.line(std::string("sample generates: ") + (rec.sample_generates ? "yes" : "no"));
    out.line(std::string("sample associative: ") + (rec.sample_associative ? "yes" : "no"));
    const bool ok = rec.contains_true && rec.sample_generates && rec.sample_associative;
    return ok ? kOk : kCheckFailed;
}

int cmd_semisimple(const catalog::VarietySpec& spec, const std::string& q_text,
                   const Printer& out) {
    const Rat q_value = Rat::parse(q_text);
    ringkit::RingPtr ring = catalog::build_quantum_ring(spec);
    ringkit::FiniteAlgebra alg = specialize_q(ring, q_value);

    auto label_index = [&](const std::string& name) -> int {
        for (int i = 0; i < alg.dim(); ++i)
            if (alg.labels[i] == name) return i;
        throw InvariantViolation("generator " + name + " is not a basis label");
    };
    std::string hyperplane, other;
    for (const auto& g : spec.generators)
        (g.degree == 1 ? hyperplane : other) = g.name;
    const int ih = label_index(hyperplane);
    const int ig = label_index(other);

    struct Candidate {
        std::string display;
        VecQ vec;
    };
    std::vector<Candidate> candidates;
    candidates.push_back({hyperplane, alg.basis_vector(ih)});
    for (const Rat& c : {Rat(1), Rat(2), Rat(3), Rat(-1), Rat(1, 2)}) {
        VecQ v = alg.basis_vector(ih) + c * alg.basis_vector(ig);
        candidates.push_back({hyperplane + " + " + c.str() + "·" + other, std::move(v)});
    }

    out.line("q = " + q_value.str());
    ringkit::SemisimpleCertificate last;
    std::string last_display;
    for (const auto& cand : candidates) {
        ringkit::SemisimpleCertificate cert = semisimple_certificate(alg, cand.vec);
        last = cert;
        last_display = cand.display;
        if (cert.squarefree && cert.generates) {
            out.line("element: " + cand.display);
            out.line("minimal polynomial: " + cert.minpoly.str("x"));
            out.line("squarefree: yes");
            out.line("degree: " + std::to_string(cert.minpoly.degree()) + " of dimension " +
                     std::to_string(alg.dim()));
            out.line("semisimple: certified (the element generates the algebra)");
            return kOk;
        }
    }
    out.line("element: " + last_display);
    out.line("minimal polynomial: " + last.minpoly.str("x"));
    out.line(std::string("squarefree: ") + (last.squarefree ? "yes" : "no"));
    out.line("degree: " + std::to_string(last.minpoly.degree()) + " of dimension " +
             std::to_string(alg.dim()));
    out.line("semisimple: not certified by any tried element");
    return kCheckFailed;
}

int cmd_catalog(const Printer& out) {
    for (const auto& name : catalog::builtin_names()) {
        catalog::VarietySpec spec = catalog::builtin(name);
        out.line(name + ": " + spec.group + ", dimension " + std::to_string(spec.dimension) +
                 ", index " + std::to_string(spec.index));
    }
    return kOk;
}

int cmd_grass_prod(int k, int n, const std::string& lam_text, const std::string& mu_text,
                   const Printer& out) {
    if (k <= 0 || n <= k) {
        std::cerr << "error: need 0 < k < n\n";
        return kUsage;
    }
    const schubert::GrassContext ctx{k, n};
    const schubert::SchubertCycle a(ctx, Partition::parse(lam_text));
    const schubert::SchubertCycle b(ctx, Partition::parse(mu_text));
    out.line(render::schubert(grass_mult(a, b)));
    return kOk;
}

int cmd_spinor_prod(const std::string& lam_text, const std::string& mu_text,
                    const Printer& out) {
    const schubert::SpinorCycle a(StrictPartition::parse(lam_text));
    const schubert::SpinorCycle b(StrictPartition::parse(mu_text));
    out.line(render::spinor(spinor_mult(a, b)));
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact intersection rings of horospherical two-orbit geometries"};
    app.require_subcommand(1);
    bool ascii = false;
    app.add_flag("--ascii", ascii, "transliterate σ/τ/γ and superscripts to plain ASCII");

    std::string variety, spec_path, q_text = "1";
    std::string basis = "first", format = "text";
    bool opt_classical = false, opt_quantum = false, opt_fc = false;
    bool opt_reconstruct = false, opt_semisimple = false, opt_all = false;
    bool as_json = false, table_quantum = false;
    int grass_k = 0, grass_n = 0;
    std::string lam_text, mu_text;

    auto add_variety = [&](CLI::App* cmd) {
        cmd->add_option("variety", variety, "variety name (see `horochow catalog`)")->required();
        cmd->add_option("--spec", spec_path, "load the variety description from this JSON file");
    };

    CLI::App* verify = app.add_subcommand("verify", "run the verification suite");
    add_variety(verify);
    verify->add_flag("--classical", opt_classical, "classical ring checks");
    verify->add_flag("--quantum", opt_quantum, "quantum ring checks");
    verify->add_flag("--fc", opt_fc, "fundamental-class pipeline checks");
    verify->add_flag("--reconstruct", opt_reconstruct, "reconstruction checks");
    verify->add_flag("--semisimple", opt_semisimple, "semisimplicity certificate");
    verify->add_flag("--all", opt_all, "every group (the default when none is named)");
    verify->add_flag("--json", as_json, "machine-readable report");

    CLI::App* table = app.add_subcommand("table", "recompute a multiplication table");
    add_variety(table);
    table->add_option("--basis", basis, "first or dual")
        ->check(CLI::IsMember({"first", "dual"}));
    table->add_flag("--quantum", table_quantum, "quantum products against the second generator");
    table->add_option("--format", format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));

    CLI::App* degrees = app.add_subcommand("degrees", "hyperplane degrees of the basis classes");
    add_variety(degrees);

    CLI::App* fc = app.add_subcommand("fundamental-class",
                                      "Schubert expansion of the quintic-cycle class");
    add_variety(fc);

    CLI::App* reconstruct =
        app.add_subcommand("reconstruct", "re-derive multiplication from the diagram and pairing");
    add_variety(reconstruct);

    CLI::App* semisimple =
        app.add_subcommand("semisimple", "semisimplicity certificate at a quantum value");
    add_variety(semisimple);
    semisimple->add_option("--q", q_text, "value substituted for the quantum parameter");

    CLI::App* grass = app.add_subcommand("grass", "Grassmannian Schubert calculus");
    grass->require_subcommand(1);
    CLI::App* grass_prod = grass->add_subcommand("prod", "product of two Schubert classes");
    grass_prod->add_option("k", grass_k, "subspace dimension")->required();
    grass_prod->add_option("n", grass_n, "ambient dimension")->required();
    grass_prod->add_option("lambda", lam_text, "first shape, comma-separated")->required();
    grass_prod->add_option("mu", mu_text, "second shape, comma-separated")->required();

    CLI::App* spinor = app.add_subcommand("spinor", "spinor-variety Schubert calculus");
    spinor->require_subcommand(1);
    CLI::App* spinor_prod = spinor->add_subcommand("prod", "product of two spinor classes");
    spinor_prod->add_option("lambda", lam_text, "first strict shape")->required();
    spinor_prod->add_option("mu", mu_text, "second strict shape")->required();

    CLI::App* cat = app.add_subcommand("catalog", "list the built-in varieties");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    const Printer out{ascii};
    try {
        if (verify->parsed()) {
            catalog::SuiteOptions options;
            const bool any =
                opt_classical || opt_quantum || opt_fc || opt_reconstruct || opt_semisimple;
            if (any && !opt_all) {
                options.classical = opt_classical;
                options.quantum = opt_quantum;
                options.fundamental_class = opt_fc;
                options.reconstruct = opt_reconstruct;
                options.semisimple = opt_semisimple;
            }
            return cmd_verify(resolve_spec(variety, spec_path), options, as_json, out);
        }
        if (table->parsed()) {
            if (table_quantum && basis == "dual") {
                std::cerr << "error: the dual-basis table is classical only\n";
                return kUsage;
            }
            return cmd_table(resolve_spec(variety, spec_path), basis, table_quantum, format, out);
        }
        if (degrees->parsed()) return cmd_degrees(resolve_spec(variety, spec_path), out);
        if (fc->parsed()) return cmd_fundamental_class(resolve_spec(variety, spec_path), out);
        if (reconstruct->parsed()) return cmd_reconstruct(resolve_spec(variety, spec_path), out);
        if (semisimple->parsed())
            return cmd_semisimple(resolve_spec(variety, spec_path), q_text, out);
        if (grass->parsed()) return cmd_grass_prod(grass_k, grass_n, lam_text, mu_text, out);
        if (spinor->parsed()) return cmd_spinor_prod(lam_text, mu_text, out);
        if (cat->parsed()) return cmd_catalog(out);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
