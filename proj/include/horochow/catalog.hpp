#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "horochow/hasse.hpp"
#include "horochow/rational.hpp"
#include "horochow/report.hpp"
#include "horochow/ringkit.hpp"

#include "json.hpp"

namespace horochow::catalog {

/// Abstract syntax tree for the polynomial expression grammar:
/// rational literals, generator names, + - (binary and unary), *, ^.
struct PolyExpr {
    enum class Kind { Literal, Generator, Neg, Add, Sub, Mul, Pow };

    Kind kind = Kind::Literal;
    Rat literal;                     ///< Kind::Literal
    std::string name;                ///< Kind::Generator
    int gen_index = -1;              ///< Kind::Generator
    int exponent = 0;                ///< Kind::Pow
    std::vector<PolyExpr> children;  ///< operands

    /// Evaluate against the generator list the expression was parsed with.
    SymPoly evaluate(int nvars) const;
    /// Canonical printing with minimal parentheses; parsing the result
    /// again yields the same expression.
    std::string print() const;
};

/// Parse text against the given generator names.  Standard precedence
/// (^ over * over + and -), explicit * between factors, rationals as a/b.
/// Throws SyntaxError (with byte offset) or UnknownIdentifier.
PolyExpr parse_poly(const std::string& text, const std::vector<std::string>& generators);

/// Convenience: parse and evaluate in one step.
SymPoly parse_to_poly(const std::string& text, const std::vector<std::string>& generators);

/// One golden power identity: lhs · h^h_power = rhs.
struct PowerIdentity {
    std::vector<ComboTerm> lhs;
    int h_power = 0;
    std::vector<ComboTerm> rhs;
};

/// Golden data for the zero-locus fundamental-class pipeline, keyed by
/// partition text.
struct FundamentalClassGolden {
    std::map<std::string, Rat> evaluations;
    std::map<std::string, Rat> y_expansion;
    std::map<std::string, Rat> final_class;
};

/// Published values the engine must reproduce.
struct Golden {
    std::vector<int> hilbert;
    std::map<std::string, Rat> degrees;
    std::map<std::string, std::string> giambelli;
    std::map<std::string, std::string> quantum_giambelli;  ///< overrides only
    std::vector<ProductRow> table;
    std::map<std::string, std::vector<ComboTerm>> dual_basis;
    std::vector<ProductRow> dual_table;
    DualDiagram dual_diagram;
    std::map<std::string, std::vector<ComboTerm>> quantum_chevalley;
    std::vector<ProductRow> quantum_table;  ///< second factor is the generator vertex
    std::map<std::string, PowerIdentity> identities;
    std::optional<FundamentalClassGolden> fundamental_class;
    std::vector<std::string> orth_a1;  ///< basis classes spanning the first factor
    std::vector<std::string> orth_a2;  ///< dual classes spanning the second factor
};

/// Bookkeeping that never enters a computation.
struct Metadata {
    std::vector<std::string> triple;  ///< (group, P_Y, P_Z)
    int module_dimension = 0;
    int k = 0;
    /// Restrictions of ring classes from the ambient Schubert basis,
    /// as symbol -> [(coefficient, partition text)].
    std::map<std::string, std::vector<std::pair<Rat, std::string>>> restriction;
};

/// A complete variety description: presentation, diagram, golden tables.
struct VarietySpec {
    std::string name;
    std::string group;
    int dimension = 0;
    int index = 0;
    std::vector<ringkit::Generator> generators;
    std::vector<std::string> classical_relations;
    std::vector<std::string> quantum_relations;
    ringkit::Normalization normalization;
    std::optional<HasseDiagram> diagram;
    std::map<std::string, std::string> seeds;  ///< vertex -> polynomial text
    Golden golden;
    Metadata metadata;

    const HasseDiagram& hasse() const { return *diagram; }
    std::vector<std::string> generator_names() const;
};

/// Parse and validate a JSON document.  Throws SchemaError (with a JSON
/// path) on shape problems and InvariantViolation on semantic ones.
VarietySpec load_spec(const nlohmann::json& doc);
VarietySpec load_spec_text(const std::string& text);

/// Serialize back to JSON; load_spec(serialize(s)) describes the same variety.
nlohmann::json serialize(const VarietySpec& spec);

/// Names of the shipped varieties, in catalog order.
std::vector<std::string> builtin_names();

/// The shipped JSON text, byte-identical to the repository data file.
const std::string& builtin_text(const std::string& name);

/// Load a shipped variety.  Throws UnknownVariety.
VarietySpec builtin(const std::string& name);

/// Classical presentation ring of the spec (expected Hilbert enforced).
ringkit::RingPtr build_classical_ring(const VarietySpec& spec);

/// Quantum presentation ring, with deformation parameter "q" of degree
/// equal to the Fano index.
ringkit::RingPtr build_quantum_ring(const VarietySpec& spec);

/// Which verification groups run_suite executes.
struct SuiteOptions {
    bool classical = true;
    bool quantum = true;
    bool fundamental_class = true;
    bool reconstruct = true;
    bool semisimple = true;
};

/// Run the selected verifications in dependency order and aggregate a
/// deterministic report.  Individual failures become failed checks; the
/// suite itself never throws for a mathematical mismatch.
CheckReport run_suite(const VarietySpec& spec, const SuiteOptions& options = {});

/// JSON form of a report: array of {id, status, summary, lhs, rhs, detail}.
nlohmann::json report_to_json(const CheckReport& report);

}  // namespace horochow::catalog
