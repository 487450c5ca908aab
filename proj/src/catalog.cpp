#include "horochow/catalog.hpp"

#include "horochow/builtin_specs.hpp"
#include "horochow/errors.hpp"

#include <cctype>
#include <sstream>
#include <utility>

namespace horochow::catalog {

// ---------------------------------------------------------------------------
// Polynomial expressions
// ---------------------------------------------------------------------------

SymPoly PolyExpr::evaluate(int nvars) const {
    switch (kind) {
        case Kind::Literal:
            return SymPoly::constant(nvars, literal);
        case Kind::Generator:
            return SymPoly::variable(nvars, gen_index);
        case Kind::Neg:
            return -children.at(0).evaluate(nvars);
        case Kind::Add:
            return children.at(0).evaluate(nvars) + children.at(1).evaluate(nvars);
        case Kind::Sub:
            return children.at(0).evaluate(nvars) - children.at(1).evaluate(nvars);
        case Kind::Mul:
            return children.at(0).evaluate(nvars) * children.at(1).evaluate(nvars);
        case Kind::Pow:
            return children.at(0).evaluate(nvars).pow(exponent);
    }
    throw Error("corrupt polynomial expression");
}

namespace {

// Binding strengths used when printing expressions with minimal parentheses.
int precedence(PolyExpr::Kind kind) {
    switch (kind) {
        case PolyExpr::Kind::Add:
        case PolyExpr::Kind::Sub: return 1;
        case PolyExpr::Kind::Neg: return 2;
        case PolyExpr::Kind::Mul: return 3;
        case PolyExpr::Kind::Pow: return 4;
        default: return 5;
    }
}

std::string print_wrapped(const PolyExpr& e, int min_prec) {
    std::string body = e.print();
    if (precedence(e.kind) < min_prec) return "(" + body + ")";
    return body;
}

}  // namespace

std::string PolyExpr::print() const {
    switch (kind) {
        case Kind::Literal:
            return literal.str();
        case Kind::Generator:
            return name;
        case Kind::Neg:
            return "-" + print_wrapped(children.at(0), 2);
        case Kind::Add:
            return print_wrapped(children.at(0), 1) + " + " + print_wrapped(children.at(1), 2);
        case Kind::Sub:
            return print_wrapped(children.at(0), 1) + " - " + print_wrapped(children.at(1), 2);
        case Kind::Mul:
            return print_wrapped(children.at(0), 3) + "*" + print_wrapped(children.at(1), 4);
        case Kind::Pow:
            return print_wrapped(children.at(0), 5) + "^" + std::to_string(exponent);
    }
    throw Error("corrupt polynomial expression");
}

namespace {

/// Recursive-descent parser for the generator-polynomial grammar:
///
///   expr   := ['-'] term (('+' | '-') term)*
///   term   := factor ('*' factor)*
///   factor := base ('^' nat)?
///   base   := rational | identifier | '(' expr ')' | '-' base
///
/// Whitespace is insignificant.  Identifiers must name a known generator.
class ExprParser {
public:
    ExprParser(const std::string& text, const std::vector<std::string>& generators)
        : text_(text), generators_(generators) {}

    PolyExpr run() {
        PolyExpr e = parse_expr();
        skip_ws();
        if (pos_ != text_.size())
            throw SyntaxError("unexpected trailing input", pos_);
        return e;
    }

private:
    const std::string& text_;
    const std::vector<std::string>& generators_;
    std::size_t pos_ = 0;

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool consume(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    static PolyExpr unary(PolyExpr::Kind kind, PolyExpr child) {
        PolyExpr e;
        e.kind = kind;
        e.children.push_back(std::move(child));
        return e;
    }

    static PolyExpr binary(PolyExpr::Kind kind, PolyExpr lhs, PolyExpr rhs) {
        PolyExpr e;
        e.kind = kind;
        e.children.push_back(std::move(lhs));
        e.children.push_back(std::move(rhs));
        return e;
    }

    PolyExpr parse_expr() {
        skip_ws();
        PolyExpr e = consume('-') ? unary(PolyExpr::Kind::Neg, parse_term()) : parse_term();
        while (true) {
            if (consume('+')) {
                e = binary(PolyExpr::Kind::Add, std::move(e), parse_term());
            } else if (consume('-')) {
                e = binary(PolyExpr::Kind::Sub, std::move(e), parse_term());
            } else {
                return e;
            }
        }
    }

    PolyExpr parse_term() {
        PolyExpr e = parse_factor();
        while (consume('*')) e = binary(PolyExpr::Kind::Mul, std::move(e), parse_factor());
        return e;
    }

    PolyExpr parse_factor() {
        PolyExpr base = parse_base();
        if (consume('^')) {
            skip_ws();
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            if (pos_ == start)
                throw SyntaxError("expected a nonnegative integer exponent after '^'", start);
            PolyExpr e;
            e.kind = PolyExpr::Kind::Pow;
            e.exponent = std::stoi(text_.substr(start, pos_ - start));
            e.children.push_back(std::move(base));
            return e;
        }
        return base;
    }

    PolyExpr parse_base() {
        skip_ws();
        if (pos_ >= text_.size()) throw SyntaxError("unexpected end of input", pos_);
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            PolyExpr e = parse_expr();
            skip_ws();
            if (!consume(')')) throw SyntaxError("expected ')'", pos_);
            return e;
        }
        if (c == '-') {
            ++pos_;
            return unary(PolyExpr::Kind::Neg, parse_base());
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return parse_rational();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return parse_identifier();
        throw SyntaxError(std::string("unexpected character '") + c + "'", pos_);
    }

    PolyExpr parse_rational() {
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ < text_.size() && text_[pos_] == '/') {
            ++pos_;
            std::size_t den_start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            if (pos_ == den_start)
                throw SyntaxError("expected digits after '/'", den_start);
        }
        PolyExpr e;
        e.kind = PolyExpr::Kind::Literal;
        e.literal = Rat::parse(text_.substr(start, pos_ - start));
        return e;
    }

    PolyExpr parse_identifier() {
        std::size_t start = pos_;
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'') {
                ++pos_;
            } else {
                break;
            }
        }
        std::string name = text_.substr(start, pos_ - start);
        for (std::size_t i = 0; i < generators_.size(); ++i) {
            if (generators_[i] == name) {
                PolyExpr e;
                e.kind = PolyExpr::Kind::Generator;
                e.name = name;
                e.gen_index = static_cast<int>(i);
                return e;
            }
        }
        throw UnknownIdentifier("unknown identifier '" + name + "'");
    }
};

}  // namespace

PolyExpr parse_poly(const std::string& text, const std::vector<std::string>& generators) {
    return ExprParser(text, generators).run();
}

SymPoly parse_to_poly(const std::string& text, const std::vector<std::string>& generators) {
    return parse_poly(text, generators).evaluate(static_cast<int>(generators.size()));
}

// ---------------------------------------------------------------------------
// JSON access helpers
// ---------------------------------------------------------------------------

namespace {

using nlohmann::json;

[[noreturn]] void schema_fail(const std::string& msg, const std::string& path) {
    throw SchemaError(msg, path);
}

const json& member(const json& j, const char* key, const std::string& path) {
    if (!j.is_object()) schema_fail("expected an object", path);
    auto it = j.find(key);
    if (it == j.end()) schema_fail(std::string("missing field '") + key + "'", path);
    return *it;
}

bool has_member(const json& j, const char* key) {
    return j.is_object() && j.contains(key);
}

std::string get_string(const json& j, const std::string& path) {
    if (!j.is_string()) schema_fail("expected a string", path);
    return j.get<std::string>();
}

int get_int(const json& j, const std::string& path) {
    if (!j.is_number_integer()) schema_fail("expected an integer", path);
    return j.get<int>();
}

Rat get_rat(const json& j, const std::string& path) {
    if (!j.is_string()) schema_fail("expected a rational encoded as a string", path);
    try {
        return Rat::parse(j.get<std::string>());
    } catch (const std::exception&) {
        schema_fail("malformed rational '" + j.get<std::string>() + "'", path);
    }
}

const json& array_at(const json& j, const std::string& path) {
    if (!j.is_array()) schema_fail("expected an array", path);
    return j;
}

std::string idx(const std::string& path, std::size_t i) {
    return path + "[" + std::to_string(i) + "]";
}

/// Parse an array of `[coeff, vertex, q_power]` triples.
std::vector<ComboTerm> get_terms(const json& j, const std::string& path) {
    std::vector<ComboTerm> out;
    for (std::size_t i = 0; i < array_at(j, path).size(); ++i) {
        const json& t = j[i];
        std::string p = idx(path, i);
        if (!t.is_array() || t.size() != 3) schema_fail("expected a [coeff, vertex, q_power] triple", p);
        ComboTerm term;
        term.coeff = get_rat(t[0], p + "[0]");
        term.vertex = get_string(t[1], p + "[1]");
        term.q_power = get_int(t[2], p + "[2]");
        if (term.q_power < 0) schema_fail("negative quantum power", p + "[2]");
        out.push_back(std::move(term));
    }
    return out;
}

/// Parse an array of `[coeff, vertex]` pairs (no quantum part).
std::vector<ComboTerm> get_pairs(const json& j, const std::string& path) {
    std::vector<ComboTerm> out;
    for (std::size_t i = 0; i < array_at(j, path).size(); ++i) {
        const json& t = j[i];
        std::string p = idx(path, i);
        if (!t.is_array() || t.size() != 2) schema_fail("expected a [coeff, vertex] pair", p);
        ComboTerm term;
        term.coeff = get_rat(t[0], p + "[0]");
        term.vertex = get_string(t[1], p + "[1]");
        term.q_power = 0;
        out.push_back(std::move(term));
    }
    return out;
}

std::map<std::string, Rat> get_rat_map(const json& j, const std::string& path) {
    if (!j.is_object()) schema_fail("expected an object", path);
    std::map<std::string, Rat> out;
    for (auto it = j.begin(); it != j.end(); ++it)
        out[it.key()] = get_rat(it.value(), path + "." + it.key());
    return out;
}

Family parse_family(const std::string& text, const std::string& path) {
    if (text == "Y") return Family::Y;
    if (text == "Z") return Family::Z;
    if (text == "shared") return Family::Shared;
    schema_fail("unknown family '" + text + "' (expected \"Y\", \"Z\", or \"shared\")", path);
}

std::string family_name(Family f) {
    switch (f) {
        case Family::Y: return "Y";
        case Family::Z: return "Z";
        case Family::Shared: return "shared";
    }
    return "shared";
}

HasseDiagram parse_hasse(const json& j, int index, const std::string& path) {
    std::vector<HasseVertex> vertices;
    const json& jv = member(j, "vertices", path);
    for (std::size_t i = 0; i < array_at(jv, path + ".vertices").size(); ++i) {
        std::string p = idx(path + ".vertices", i);
        HasseVertex v;
        v.id = get_string(member(jv[i], "id", p), p + ".id");
        v.degree = get_int(member(jv[i], "degree", p), p + ".degree");
        v.family = parse_family(get_string(member(jv[i], "family", p), p + ".family"), p + ".family");
        vertices.push_back(std::move(v));
    }
    std::vector<HasseEdge> edges;
    const json& je = member(j, "edges", path);
    for (std::size_t i = 0; i < array_at(je, path + ".edges").size(); ++i) {
        std::string p = idx(path + ".edges", i);
        HasseEdge e;
        e.from = get_string(member(je[i], "from", p), p + ".from");
        e.to = get_string(member(je[i], "to", p), p + ".to");
        e.mult = get_rat(member(je[i], "mult", p), p + ".mult");
        edges.push_back(std::move(e));
    }
    std::vector<QuantumEdge> q_edges;
    if (has_member(j, "q_edges")) {
        const json& jq = j["q_edges"];
        for (std::size_t i = 0; i < array_at(jq, path + ".q_edges").size(); ++i) {
            std::string p = idx(path + ".q_edges", i);
            QuantumEdge e;
            e.from = get_string(member(jq[i], "from", p), p + ".from");
            e.to = get_string(member(jq[i], "to", p), p + ".to");
            e.coeff = get_rat(member(jq[i], "coeff", p), p + ".coeff");
            e.q_power = get_int(member(jq[i], "q_power", p), p + ".q_power");
            q_edges.push_back(std::move(e));
        }
    }
    return HasseDiagram(std::move(vertices), std::move(edges), std::move(q_edges), index);
}

std::vector<ProductRow> parse_rows(const json& j, const std::string& path) {
    std::vector<ProductRow> rows;
    for (std::size_t i = 0; i < array_at(j, path).size(); ++i) {
        std::string p = idx(path, i);
        ProductRow row;
        row.a = get_string(member(j[i], "a", p), p + ".a");
        row.b = get_string(member(j[i], "b", p), p + ".b");
        row.expected = get_terms(member(j[i], "rhs", p), p + ".rhs");
        rows.push_back(std::move(row));
    }
    return rows;
}

Golden parse_golden(const json& j, const std::string& path) {
    Golden g;
    const json& jh = member(j, "hilbert", path);
    for (std::size_t i = 0; i < array_at(jh, path + ".hilbert").size(); ++i)
        g.hilbert.push_back(get_int(jh[i], idx(path + ".hilbert", i)));
    g.degrees = get_rat_map(member(j, "degrees", path), path + ".degrees");
    const json& jg = member(j, "giambelli", path);
    if (!jg.is_object()) schema_fail("expected an object", path + ".giambelli");
    for (auto it = jg.begin(); it != jg.end(); ++it)
        g.giambelli[it.key()] = get_string(it.value(), path + ".giambelli." + it.key());
    if (has_member(j, "quantum_giambelli")) {
        const json& jq = j["quantum_giambelli"];
        if (!jq.is_object()) schema_fail("expected an object", path + ".quantum_giambelli");
        for (auto it = jq.begin(); it != jq.end(); ++it)
            g.quantum_giambelli[it.key()] = get_string(it.value(), path + ".quantum_giambelli." + it.key());
    }
    g.table = parse_rows(member(j, "table", path), path + ".table");
    if (has_member(j, "dual_basis")) {
        const json& jd = j["dual_basis"];
        if (!jd.is_object()) schema_fail("expected an object", path + ".dual_basis");
        for (auto it = jd.begin(); it != jd.end(); ++it)
            g.dual_basis[it.key()] = get_pairs(it.value(), path + ".dual_basis." + it.key());
    }
    if (has_member(j, "dual_table"))
        g.dual_table = parse_rows(j["dual_table"], path + ".dual_table");
    if (has_member(j, "dual_diagram")) {
        const json& jd = j["dual_diagram"];
        std::string p = path + ".dual_diagram";
        const json& jv = member(jd, "vertices", p);
        for (std::size_t i = 0; i < array_at(jv, p + ".vertices").size(); ++i) {
            std::string pp = idx(p + ".vertices", i);
            HasseVertex v;
            v.id = get_string(member(jv[i], "id", pp), pp + ".id");
            v.degree = get_int(member(jv[i], "degree", pp), pp + ".degree");
            v.family = parse_family(get_string(member(jv[i], "family", pp), pp + ".family"), pp + ".family");
            g.dual_diagram.vertices.push_back(std::move(v));
        }
        const json& je = member(jd, "edges", p);
        for (std::size_t i = 0; i < array_at(je, p + ".edges").size(); ++i) {
            std::string pp = idx(p + ".edges", i);
            HasseEdge e;
            e.from = get_string(member(je[i], "from", pp), pp + ".from");
            e.to = get_string(member(je[i], "to", pp), pp + ".to");
            e.mult = get_rat(member(je[i], "mult", pp), pp + ".mult");
            g.dual_diagram.edges.push_back(std::move(e));
        }
        const json& jdo = member(jd, "dual_of", p);
        if (!jdo.is_object()) schema_fail("expected an object", p + ".dual_of");
        for (auto it = jdo.begin(); it != jdo.end(); ++it)
            g.dual_diagram.dual_of[it.key()] = get_string(it.value(), p + ".dual_of." + it.key());
    }
    if (has_member(j, "quantum_chevalley")) {
        const json& jq = j["quantum_chevalley"];
        if (!jq.is_object()) schema_fail("expected an object", path + ".quantum_chevalley");
        for (auto it = jq.begin(); it != jq.end(); ++it)
            g.quantum_chevalley[it.key()] = get_terms(it.value(), path + ".quantum_chevalley." + it.key());
    }
    if (has_member(j, "quantum_table"))
        g.quantum_table = parse_rows(j["quantum_table"], path + ".quantum_table");
    if (has_member(j, "identities")) {
        const json& ji = j["identities"];
        if (!ji.is_object()) schema_fail("expected an object", path + ".identities");
        for (auto it = ji.begin(); it != ji.end(); ++it) {
            std::string p = path + ".identities." + it.key();
            PowerIdentity ident;
            ident.lhs = get_terms(member(it.value(), "lhs", p), p + ".lhs");
            ident.h_power = get_int(member(it.value(), "h_power", p), p + ".h_power");
            ident.rhs = get_terms(member(it.value(), "rhs", p), p + ".rhs");
            g.identities[it.key()] = std::move(ident);
        }
    }
    if (has_member(j, "fundamental_class")) {
        const json& jf = j["fundamental_class"];
        std::string p = path + ".fundamental_class";
        FundamentalClassGolden fc;
        fc.evaluations = get_rat_map(member(jf, "evaluations", p), p + ".evaluations");
        fc.y_expansion = get_rat_map(member(jf, "y_expansion", p), p + ".y_expansion");
        fc.final_class = get_rat_map(member(jf, "class", p), p + ".class");
        g.fundamental_class = std::move(fc);
    }
    if (has_member(j, "orthogonal")) {
        const json& jo = j["orthogonal"];
        std::string p = path + ".orthogonal";
        const json& ja1 = member(jo, "a1", p);
        for (std::size_t i = 0; i < array_at(ja1, p + ".a1").size(); ++i)
            g.orth_a1.push_back(get_string(ja1[i], idx(p + ".a1", i)));
        const json& ja2 = member(jo, "a2", p);
        for (std::size_t i = 0; i < array_at(ja2, p + ".a2").size(); ++i)
            g.orth_a2.push_back(get_string(ja2[i], idx(p + ".a2", i)));
    }
    return g;
}

Metadata parse_metadata(const json& j, const std::string& path) {
    Metadata m;
    const json& jt = member(j, "triple", path);
    if (!jt.is_array() || jt.size() != 3)
        schema_fail("expected an array of three strings", path + ".triple");
    for (std::size_t i = 0; i < 3; ++i)
        m.triple.push_back(get_string(jt[i], idx(path + ".triple", i)));
    m.module_dimension = get_int(member(j, "module_dimension", path), path + ".module_dimension");
    m.k = get_int(member(j, "k", path), path + ".k");
    if (has_member(j, "restriction")) {
        const json& jr = j["restriction"];
        if (!jr.is_object()) schema_fail("expected an object", path + ".restriction");
        for (auto it = jr.begin(); it != jr.end(); ++it) {
            std::string p = path + ".restriction." + it.key();
            std::vector<std::pair<Rat, std::string>> terms;
            for (std::size_t i = 0; i < array_at(it.value(), p).size(); ++i) {
                const json& t = it.value()[i];
                std::string pp = idx(p, i);
                if (!t.is_array() || t.size() != 2)
                    schema_fail("expected a [coeff, partition] pair", pp);
                terms.emplace_back(get_rat(t[0], pp + "[0]"), get_string(t[1], pp + "[1]"));
            }
            m.restriction[it.key()] = std::move(terms);
        }
    }
    return m;
}

// ---------------------------------------------------------------------------
// Cross-reference validation
// ---------------------------------------------------------------------------

[[noreturn]] void invariant_fail(const std::string& msg) {
    throw InvariantViolation(msg);
}

void require_vertex(const HasseDiagram& diag, const std::string& id, const std::string& where) {
    if (!diag.has_vertex(id))
        invariant_fail(where + " references unknown vertex '" + id + "'");
}

void require_dual_vertex(const DualDiagram& dual, const std::string& id, const std::string& where) {
    for (const auto& v : dual.vertices)
        if (v.id == id) return;
    invariant_fail(where + " references unknown dual vertex '" + id + "'");
}

void validate_rows(const std::vector<ProductRow>& rows, const HasseDiagram& diag,
                   const std::string& where, bool allow_quantum) {
    for (const auto& row : rows) {
        require_vertex(diag, row.a, where);
        require_vertex(diag, row.b, where);
        for (const auto& term : row.expected) {
            require_vertex(diag, term.vertex, where);
            if (!allow_quantum && term.q_power != 0)
                invariant_fail(where + " contains a quantum term in a classical table");
        }
    }
}

void validate_spec(const VarietySpec& spec) {
    if (spec.dimension <= 0) invariant_fail("dimension must be positive");
    if (spec.index <= 0) invariant_fail("Fano index must be positive");
    std::vector<std::string> names = spec.generator_names();
    for (const auto& g : spec.generators)
        if (g.degree <= 0) invariant_fail("generator '" + g.name + "' must have positive degree");
    bool norm_ok = false;
    for (const auto& g : spec.generators)
        if (g.name == spec.normalization.generator) norm_ok = true;
    if (!norm_ok)
        invariant_fail("normalization generator '" + spec.normalization.generator +
                       "' is not a declared generator");

    // Relation texts must parse over the declared generators (plus q for the
    // quantum deformation).
    for (const auto& r : spec.classical_relations) parse_to_poly(r, names);
    std::vector<std::string> qnames = names;
    qnames.push_back("q");
    for (const auto& r : spec.quantum_relations) parse_to_poly(r, qnames);

    if (!spec.diagram) return;
    const HasseDiagram& diag = *spec.diagram;
    if (diag.top_degree() != spec.dimension)
        invariant_fail("diagram top degree " + std::to_string(diag.top_degree()) +
                       " does not match the variety dimension " + std::to_string(spec.dimension));

    if (!spec.golden.hilbert.empty() &&
        spec.golden.hilbert.size() != static_cast<std::size_t>(spec.dimension) + 1)
        invariant_fail("hilbert vector must have dimension+1 entries");

    // Seeds must name vertices, parse over the generators, and sit in the
    // degree the diagram assigns to the vertex.
    std::vector<int> weights;
    for (const auto& g : spec.generators) weights.push_back(g.degree);
    for (const auto& [vertex, text] : spec.seeds) {
        require_vertex(diag, vertex, "seed");
        SymPoly p = parse_to_poly(text, names);
        int deg = 0;
        if (!p.is_homogeneous(weights, &deg))
            invariant_fail("seed for '" + vertex + "' is not homogeneous");
        if (!p.is_zero() && deg != diag.degree_of(vertex))
            invariant_fail("seed for '" + vertex + "' has degree " + std::to_string(deg) +
                           " but the vertex has degree " + std::to_string(diag.degree_of(vertex)));
    }

    const Golden& g = spec.golden;
    for (const auto& [v, val] : g.degrees) {
        (void)val;
        require_vertex(diag, v, "golden degree entry");
    }
    for (const auto& [v, text] : g.giambelli) {
        require_vertex(diag, v, "giambelli entry");
        parse_to_poly(text, names);
    }
    for (const auto& [v, text] : g.quantum_giambelli) {
        require_vertex(diag, v, "quantum giambelli entry");
        parse_to_poly(text, qnames);
    }
    validate_rows(g.table, diag, "golden table", false);
    validate_rows(g.quantum_table, diag, "quantum table", true);
    for (const auto& [v, terms] : g.quantum_chevalley) {
        require_vertex(diag, v, "quantum chevalley entry");
        for (const auto& term : terms)
            require_vertex(diag, term.vertex, "quantum chevalley entry for '" + v + "'");
    }
    for (const auto& [name, ident] : g.identities) {
        for (const auto& term : ident.lhs)
            require_vertex(diag, term.vertex, "identity '" + name + "'");
        for (const auto& term : ident.rhs)
            require_vertex(diag, term.vertex, "identity '" + name + "'");
        if (ident.h_power < 0) invariant_fail("identity '" + name + "' has a negative power");
    }
    for (const auto& v : g.orth_a1) require_vertex(diag, v, "orthogonality list a1");

    if (!g.dual_diagram.vertices.empty()) {
        const DualDiagram& dual = g.dual_diagram;
        for (const auto& [d, p] : dual.dual_of) {
            require_dual_vertex(dual, d, "duality map");
            require_vertex(diag, p, "duality map");
        }
        for (const auto& e : dual.edges) {
            require_dual_vertex(dual, e.from, "dual diagram edge");
            require_dual_vertex(dual, e.to, "dual diagram edge");
        }
        for (const auto& [d, combo] : g.dual_basis) {
            require_dual_vertex(dual, d, "dual basis entry");
            for (const auto& term : combo)
                require_vertex(diag, term.vertex, "dual basis entry for '" + d + "'");
        }
        for (const auto& row : g.dual_table) {
            require_dual_vertex(dual, row.a, "dual table");
            require_dual_vertex(dual, row.b, "dual table");
            for (const auto& term : row.expected) {
                require_dual_vertex(dual, term.vertex, "dual table");
                if (term.q_power != 0)
                    invariant_fail("dual table contains a quantum term");
            }
        }
        for (const auto& v : g.orth_a2) require_dual_vertex(dual, v, "orthogonality list a2");
    } else {
        if (!g.dual_basis.empty() || !g.dual_table.empty() || !g.orth_a2.empty())
            invariant_fail("dual-basis data requires a dual diagram");
    }

    // Restriction data references partitions; they must parse.
    for (const auto& [sym, terms] : spec.metadata.restriction) {
        (void)sym;
        for (const auto& [coeff, part] : terms) {
            (void)coeff;
            Partition::parse(part);
        }
    }
}

}  // namespace

// ---------------------------------------------------------------------------
// Loading and serialization
// ---------------------------------------------------------------------------

std::vector<std::string> VarietySpec::generator_names() const {
    std::vector<std::string> names;
    names.reserve(generators.size());
    for (const auto& g : generators) names.push_back(g.name);
    return names;
}

VarietySpec load_spec(const nlohmann::json& doc) {
    VarietySpec spec;
    spec.name = get_string(member(doc, "name", "$"), "$.name");
    spec.group = get_string(member(doc, "group", "$"), "$.group");
    spec.dimension = get_int(member(doc, "dimension", "$"), "$.dimension");
    spec.index = get_int(member(doc, "index", "$"), "$.index");

    const json& jg = member(doc, "generators", "$");
    for (std::size_t i = 0; i < array_at(jg, "$.generators").size(); ++i) {
        std::string p = idx("$.generators", i);
        ringkit::Generator g;
        g.name = get_string(member(jg[i], "name", p), p + ".name");
        g.degree = get_int(member(jg[i], "degree", p), p + ".degree");
        spec.generators.push_back(std::move(g));
    }

    const json& jr = member(doc, "relations", "$");
    const json& jrc = member(jr, "classical", "$.relations");
    for (std::size_t i = 0; i < array_at(jrc, "$.relations.classical").size(); ++i)
        spec.classical_relations.push_back(get_string(jrc[i], idx("$.relations.classical", i)));
    const json& jrq = member(jr, "quantum", "$.relations");
    for (std::size_t i = 0; i < array_at(jrq, "$.relations.quantum").size(); ++i)
        spec.quantum_relations.push_back(get_string(jrq[i], idx("$.relations.quantum", i)));

    const json& jn = member(doc, "normalization", "$");
    spec.normalization.generator = get_string(member(jn, "generator", "$.normalization"),
                                              "$.normalization.generator");
    spec.normalization.exponent = get_int(member(jn, "exponent", "$.normalization"),
                                          "$.normalization.exponent");
    spec.normalization.value = get_rat(member(jn, "value", "$.normalization"),
                                       "$.normalization.value");

    if (has_member(doc, "hasse"))
        spec.diagram = parse_hasse(doc["hasse"], spec.index, "$.hasse");

    if (has_member(doc, "seeds")) {
        const json& js = doc["seeds"];
        if (!js.is_object()) schema_fail("expected an object", "$.seeds");
        for (auto it = js.begin(); it != js.end(); ++it)
            spec.seeds[it.key()] = get_string(it.value(), "$.seeds." + it.key());
    }

    if (has_member(doc, "golden")) spec.golden = parse_golden(doc["golden"], "$.golden");
    if (has_member(doc, "metadata")) spec.metadata = parse_metadata(doc["metadata"], "$.metadata");

    validate_spec(spec);
    return spec;
}

VarietySpec load_spec_text(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw SchemaError(std::string("invalid JSON: ") + e.what(), "$");
    }
    return load_spec(doc);
}

namespace {

json terms_to_json(const std::vector<ComboTerm>& terms) {
    json out = json::array();
    for (const auto& t : terms) out.push_back(json::array({t.coeff.str(), t.vertex, t.q_power}));
    return out;
}

json pairs_to_json(const std::vector<ComboTerm>& terms) {
    json out = json::array();
    for (const auto& t : terms) out.push_back(json::array({t.coeff.str(), t.vertex}));
    return out;
}

json rows_to_json(const std::vector<ProductRow>& rows) {
    json out = json::array();
    for (const auto& row : rows)
        out.push_back(json{{"a", row.a}, {"b", row.b}, {"rhs", terms_to_json(row.expected)}});
    return out;
}

json rat_map_to_json(const std::map<std::string, Rat>& m) {
    json out = json::object();
    for (const auto& [k, v] : m) out[k] = v.str();
    return out;
}

json vertices_to_json(const std::vector<HasseVertex>& vertices) {
    json out = json::array();
    for (const auto& v : vertices)
        out.push_back(json{{"id", v.id}, {"degree", v.degree}, {"family", family_name(v.family)}});
    return out;
}

json edges_to_json(const std::vector<HasseEdge>& edges) {
    json out = json::array();
    for (const auto& e : edges)
        out.push_back(json{{"from", e.from}, {"to", e.to}, {"mult", e.mult.str()}});
    return out;
}

}  // namespace

nlohmann::json serialize(const VarietySpec& spec) {
    json doc;
    doc["name"] = spec.name;
    doc["group"] = spec.group;
    doc["dimension"] = spec.dimension;
    doc["index"] = spec.index;
    json jg = json::array();
    for (const auto& g : spec.generators)
        jg.push_back(json{{"name", g.name}, {"degree", g.degree}});
    doc["generators"] = jg;
    doc["relations"] = json{{"classical", spec.classical_relations},
                            {"quantum", spec.quantum_relations}};
    doc["normalization"] = json{{"generator", spec.normalization.generator},
                                {"exponent", spec.normalization.exponent},
                                {"value", spec.normalization.value.str()}};
    if (spec.diagram) {
        json jh;
        jh["vertices"] = vertices_to_json(spec.diagram->vertices());
        jh["edges"] = edges_to_json(spec.diagram->edges());
        json jq = json::array();
        for (const auto& e : spec.diagram->q_edges())
            jq.push_back(json{{"from", e.from}, {"to", e.to},
                              {"coeff", e.coeff.str()}, {"q_power", e.q_power}});
        jh["q_edges"] = jq;
        doc["hasse"] = jh;
    }
    if (!spec.seeds.empty()) {
        json js = json::object();
        for (const auto& [v, text] : spec.seeds) js[v] = text;
        doc["seeds"] = js;
    }

    const Golden& g = spec.golden;
    json jgold;
    jgold["hilbert"] = g.hilbert;
    jgold["degrees"] = rat_map_to_json(g.degrees);
    json jgia = json::object();
    for (const auto& [v, text] : g.giambelli) jgia[v] = text;
    jgold["giambelli"] = jgia;
    if (!g.quantum_giambelli.empty()) {
        json jq = json::object();
        for (const auto& [v, text] : g.quantum_giambelli) jq[v] = text;
        jgold["quantum_giambelli"] = jq;
    }
    jgold["table"] = rows_to_json(g.table);
    if (!g.dual_basis.empty()) {
        json jd = json::object();
        for (const auto& [v, combo] : g.dual_basis) jd[v] = pairs_to_json(combo);
        jgold["dual_basis"] = jd;
    }
    if (!g.dual_table.empty()) jgold["dual_table"] = rows_to_json(g.dual_table);
    if (!g.dual_diagram.vertices.empty()) {
        json jd;
        jd["vertices"] = vertices_to_json(g.dual_diagram.vertices);
        jd["edges"] = edges_to_json(g.dual_diagram.edges);
        json jdo = json::object();
        for (const auto& [d, p] : g.dual_diagram.dual_of) jdo[d] = p;
        jd["dual_of"] = jdo;
        jgold["dual_diagram"] = jd;
    }
    if (!g.quantum_chevalley.empty()) {
        json jq = json::object();
        for (const auto& [v, terms] : g.quantum_chevalley) jq[v] = terms_to_json(terms);
        jgold["quantum_chevalley"] = jq;
    }
    if (!g.quantum_table.empty()) jgold["quantum_table"] = rows_to_json(g.quantum_table);
    if (!g.identities.empty()) {
        json ji = json::object();
        for (const auto& [name, ident] : g.identities)
            ji[name] = json{{"lhs", terms_to_json(ident.lhs)},
                            {"h_power", ident.h_power},
                            {"rhs", terms_to_json(ident.rhs)}};
        jgold["identities"] = ji;
    }
    if (g.fundamental_class) {
        jgold["fundamental_class"] = json{
            {"evaluations", rat_map_to_json(g.fundamental_class->evaluations)},
            {"y_expansion", rat_map_to_json(g.fundamental_class->y_expansion)},
            {"class", rat_map_to_json(g.fundamental_class->final_class)}};
    }
    if (!g.orth_a1.empty() || !g.orth_a2.empty())
        jgold["orthogonal"] = json{{"a1", g.orth_a1}, {"a2", g.orth_a2}};
    doc["golden"] = jgold;

    json jm;
    jm["triple"] = spec.metadata.triple;
    jm["module_dimension"] = spec.metadata.module_dimension;
    jm["k"] = spec.metadata.k;
    if (!spec.metadata.restriction.empty()) {
        json jr = json::object();
        for (const auto& [sym, terms] : spec.metadata.restriction) {
            json jt = json::array();
            for (const auto& [coeff, part] : terms)
                jt.push_back(json::array({coeff.str(), part}));
            jr[sym] = jt;
        }
        jm["restriction"] = jr;
    }
    doc["metadata"] = jm;
    return doc;
}

// ---------------------------------------------------------------------------
// Built-in varieties
// ---------------------------------------------------------------------------

std::vector<std::string> builtin_names() { return {"g2", "spin7"}; }

const std::string& builtin_text(const std::string& name) {
    static const std::string g2(builtin_data::kG2);
    static const std::string spin7(builtin_data::kSpin7);
    if (name == "g2") return g2;
    if (name == "spin7") return spin7;
    throw UnknownVariety("unknown variety '" + name + "'");
}

VarietySpec builtin(const std::string& name) { return load_spec_text(builtin_text(name)); }

// ---------------------------------------------------------------------------
// Ring construction
// ---------------------------------------------------------------------------

ringkit::RingPtr build_classical_ring(const VarietySpec& spec) {
    ringkit::Presentation pres;
    pres.generators = spec.generators;
    std::vector<std::string> names = spec.generator_names();
    for (const auto& r : spec.classical_relations)
        pres.relations.push_back(parse_to_poly(r, names));
    pres.top_degree = spec.dimension;
    pres.normalization = spec.normalization;
    std::optional<std::vector<int>> expected;
    if (!spec.golden.hilbert.empty()) expected = spec.golden.hilbert;
    return ringkit::GradedRing::build(std::move(pres), std::move(expected));
}

ringkit::RingPtr build_quantum_ring(const VarietySpec& spec) {
    ringkit::Presentation pres;
    pres.generators = spec.generators;
    pres.generators.push_back(ringkit::Generator{"q", spec.index});
    std::vector<std::string> names;
    for (const auto& g : pres.generators) names.push_back(g.name);
    for (const auto& r : spec.quantum_relations)
        pres.relations.push_back(parse_to_poly(r, names));
    pres.top_degree = spec.dimension;
    pres.normalization = spec.normalization;
    pres.quantum = "q";
    std::optional<std::vector<int>> expected;
    if (!spec.golden.hilbert.empty()) expected = spec.golden.hilbert;
    return ringkit::GradedRing::build(std::move(pres), std::move(expected));
}

}  // namespace horochow::catalog
