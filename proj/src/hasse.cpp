#include "horochow/hasse.hpp"

#include <algorithm>
#include <set>

#include "horochow/errors.hpp"
#include "horochow/linalg.hpp"
#include "horochow/render.hpp"

namespace horochow {

HasseDiagram::HasseDiagram(std::vector<HasseVertex> vertices, std::vector<HasseEdge> edges,
                           std::vector<QuantumEdge> q_edges, int index)
    : vertices_(std::move(vertices)),
      edges_(std::move(edges)),
      q_edges_(std::move(q_edges)),
      index_(index) {
    if (vertices_.empty()) throw InvariantViolation("diagram has no vertices");
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
        const auto& v = vertices_[i];
        if (v.degree < 0)
            throw InvariantViolation("vertex '" + v.id + "' has negative degree");
        if (!pos_.emplace(v.id, static_cast<int>(i)).second)
            throw InvariantViolation("duplicate vertex id '" + v.id + "'");
        top_ = std::max(top_, v.degree);
    }
    std::vector<std::string> bottom = vertices_at(0);
    if (bottom.size() != 1)
        throw InvariantViolation("diagram needs exactly one degree-zero vertex");
    unit_ = bottom.front();
    std::vector<std::string> topmost = vertices_at(top_);
    if (topmost.size() != 1)
        throw InvariantViolation("diagram needs exactly one vertex of maximal degree");
    point_ = topmost.front();
    for (const auto& e : edges_) {
        if (degree_of(e.to) != degree_of(e.from) + 1)
            throw InvariantViolation("edge " + e.from + " -> " + e.to +
                                     " does not raise degree by one");
    }
    for (const auto& e : q_edges_) {
        if (e.q_power < 1)
            throw InvariantViolation("quantum edge " + e.from + " -> " + e.to +
                                     " must carry a positive q power");
        if (degree_of(e.to) + e.q_power * index_ != degree_of(e.from) + 1)
            throw InvariantViolation("quantum edge " + e.from + " -> " + e.to +
                                     " violates the degree law");
    }
}

bool HasseDiagram::has_vertex(const std::string& id) const { return pos_.count(id) > 0; }

int HasseDiagram::degree_of(const std::string& id) const {
    auto it = pos_.find(id);
    if (it == pos_.end()) throw UnknownVertex("unknown vertex '" + id + "'");
    return vertices_[it->second].degree;
}

Family HasseDiagram::family_of(const std::string& id) const {
    auto it = pos_.find(id);
    if (it == pos_.end()) throw UnknownVertex("unknown vertex '" + id + "'");
    return vertices_[it->second].family;
}

std::vector<std::string> HasseDiagram::vertices_at(int degree) const {
    std::vector<std::string> out;
    for (const auto& v : vertices_)
        if (v.degree == degree) out.push_back(v.id);
    return out;
}

std::vector<HasseEdge> HasseDiagram::edges_from(const std::string& id) const {
    std::vector<HasseEdge> out;
    for (const auto& e : edges_)
        if (e.from == id) out.push_back(e);
    return out;
}

std::vector<QuantumEdge> HasseDiagram::q_edges_from(const std::string& id) const {
    std::vector<QuantumEdge> out;
    for (const auto& e : q_edges_)
        if (e.from == id) out.push_back(e);
    return out;
}

std::vector<ComboTerm> to_terms(const VertexCombo& combo) {
    std::vector<ComboTerm> out;
    for (const auto& [key, c] : combo)
        if (!c.is_zero()) out.push_back({c, key.first, key.second});
    std::sort(out.begin(), out.end(), [](const ComboTerm& a, const ComboTerm& b) {
        if (a.q_power != b.q_power) return a.q_power < b.q_power;
        return a.vertex < b.vertex;
    });
    return out;
}

VertexCombo to_combo(const std::vector<ComboTerm>& terms) {
    VertexCombo out;
    for (const auto& t : terms) {
        Rat& c = out[{t.vertex, t.q_power}];
        c += t.coeff;
        if (c.is_zero()) out.erase({t.vertex, t.q_power});
    }
    return out;
}

std::optional<int> combo_degree(const HasseDiagram& diag, const VertexCombo& combo) {
    std::optional<int> deg;
    for (const auto& [key, c] : combo) {
        if (c.is_zero()) continue;
        int d = diag.degree_of(key.first) + key.second * diag.index();
        if (!deg)
            deg = d;
        else if (*deg != d)
            throw MixedDegrees("combination mixes total degrees " + std::to_string(*deg) +
                               " and " + std::to_string(d));
    }
    return deg;
}

VertexCombo chevalley_apply(const HasseDiagram& diag, const VertexCombo& combo,
                            bool quantum) {
    combo_degree(diag, combo);  // homogeneity and vertex validation
    VertexCombo out;
    for (const auto& [key, c] : combo) {
        if (c.is_zero()) continue;
        for (const auto& e : diag.edges())
            if (e.from == key.first) out[{e.to, key.second}] += c * e.mult;
        if (quantum)
            for (const auto& e : diag.q_edges())
                if (e.from == key.first)
                    out[{e.to, key.second + e.q_power}] += c * e.coeff;
    }
    for (auto it = out.begin(); it != out.end();)
        it = it->second.is_zero() ? out.erase(it) : std::next(it);
    return out;
}

std::map<std::string, Rat> degrees_from_hasse(const HasseDiagram& diag) {
    std::map<std::string, Rat> deg;
    for (int d = diag.top_degree(); d >= 0; --d) {
        for (const auto& id : diag.vertices_at(d)) {
            if (id == diag.point_vertex()) {
                deg[id] = Rat(1);
                continue;
            }
            Rat s(0);
            for (const auto& e : diag.edges_from(id)) s += e.mult * deg[e.to];
            deg[id] = s;
        }
    }
    return deg;
}

namespace {

/// Coefficient vector of a (normal-form) polynomial over the degree-d
/// basis monomials of the ring.
VecQ coords_at(const ringkit::RingPtr& ring, const SymPoly& nf, int d) {
    auto monos = ring->basis_monomials(d);
    VecQ v = VecQ::Zero(static_cast<Eigen::Index>(monos.size()));
    for (std::size_t i = 0; i < monos.size(); ++i)
        v(static_cast<Eigen::Index>(i)) = nf.coeff(monos[i]);
    return v;
}

/// The unique degree-one generator used for Chevalley multiplication.
ringkit::RingElt hyperplane_elt(const ringkit::RingPtr& ring) {
    const auto& pres = ring->presentation();
    std::string name;
    int count = 0;
    for (const auto& g : pres.generators) {
        if (g.degree == 1 && g.name != pres.quantum) {
            name = g.name;
            ++count;
        }
    }
    if (count != 1)
        throw Error("ring needs exactly one degree-one generator for Chevalley steps");
    return ring->element_of(name);
}

std::vector<std::string> display_names(const ringkit::RingPtr& ring) {
    std::vector<std::string> names;
    for (const auto& g : ring->presentation().generators)
        names.push_back(render::vertex(g.name));
    return names;
}

bool vec_equal(const VecQ& a, const VecQ& b) {
    if (a.size() != b.size()) return false;
    for (Eigen::Index i = 0; i < a.size(); ++i)
        if (!(a(i) == b(i))) return false;
    return true;
}

}  // namespace

GiambelliMap giambelli_solve(const HasseDiagram& diag, const ringkit::RingPtr& ring,
                             const std::map<std::string, ringkit::RingElt>& seeds) {
    const bool quantum = ring->has_quantum();
    ringkit::RingElt h = hyperplane_elt(ring);
    if (quantum) {
        int qdeg = ring->weights()[ring->quantum_index()];
        if (qdeg != diag.index())
            throw InvariantViolation("quantum parameter degree differs from diagram index");
    }
    // Powers of the quantum parameter up to the largest q power on an edge.
    int max_qp = 0;
    for (const auto& e : diag.q_edges()) max_qp = std::max(max_qp, e.q_power);
    std::vector<ringkit::RingElt> qpow{ring->unit()};
    if (quantum) {
        ringkit::RingElt q = ring->element_of(ring->presentation().quantum);
        for (int p = 1; p <= max_qp; ++p) qpow.push_back(mult(qpow.back(), q));
    }

    GiambelliMap images;
    for (const auto& [id, elt] : seeds) {
        int vdeg = diag.degree_of(id);
        if (elt.ring().get() != ring.get())
            throw RingMismatch("seed class for '" + id + "' lives in a different ring");
        bool mixed = false;
        int d = elt.degree(&mixed);
        if (mixed || (!elt.is_zero() && d != vdeg))
            throw Error("seed class for '" + id + "' has the wrong degree");
        images.emplace(id, elt);
    }

    for (int d = 0; d <= diag.top_degree(); ++d) {
        std::vector<std::string> ids = diag.vertices_at(d);
        std::vector<std::string> unsolved;
        for (const auto& id : ids)
            if (!images.count(id)) unsolved.push_back(id);
        if (d == 0) {
            if (!unsolved.empty())
                throw Underdetermined("the unit class must be supplied as a seed", 0);
            continue;
        }
        std::vector<std::string> sources = diag.vertices_at(d - 1);
        const int m = ring->dimension(d);
        auto monos = ring->basis_monomials(d);
        std::map<std::string, int> col0;
        for (std::size_t i = 0; i < unsolved.size(); ++i)
            col0[unsolved[i]] = static_cast<int>(i) * m;
        MatQ A = MatQ::Zero(static_cast<Eigen::Index>(sources.size()) * m,
                            static_cast<Eigen::Index>(unsolved.size()) * m);
        VecQ b = VecQ::Zero(A.rows());
        for (std::size_t s = 0; s < sources.size(); ++s) {
            const int row0 = static_cast<int>(s) * m;
            ringkit::RingElt rhs = mult(h, images.at(sources[s]));
            for (const auto& e : diag.edges_from(sources[s])) {
                auto done = images.find(e.to);
                if (done != images.end()) {
                    rhs -= e.mult * done->second;
                } else {
                    for (int r = 0; r < m; ++r) A(row0 + r, col0.at(e.to) + r) += e.mult;
                }
            }
            if (quantum) {
                for (const auto& e : diag.q_edges_from(sources[s]))
                    rhs -= e.coeff * mult(qpow[e.q_power], images.at(e.to));
            }
            VecQ rv = coords_at(ring, rhs.poly(), d);
            for (int r = 0; r < m; ++r) b(row0 + r) = rv(r);
        }
        LinearSolution sol = solve(A, b);
        if (!sol.consistent) {
            std::string where = unsolved.empty() ? (ids.empty() ? "" : ids.front())
                                                 : unsolved.front();
            throw Inconsistent("no representative satisfies the hyperplane recursion in degree " +
                                   std::to_string(d),
                               d, where);
        }
        if (sol.kernel.cols() > 0)
            throw Underdetermined("representatives not unique in degree " + std::to_string(d), d);
        for (const auto& id : unsolved) {
            SymPoly p(ring->nvars());
            for (int r = 0; r < m; ++r) p.add_term(monos[r], sol.particular(col0.at(id) + r));
            images.emplace(id, ring->normal_form(p));
        }
    }
    return images;
}

std::optional<VertexCombo> express_over(const std::map<std::string, ringkit::RingElt>& classes,
                                        const ringkit::RingPtr& ring,
                                        const ringkit::RingElt& elt) {
    if (elt.is_zero()) return VertexCombo{};
    bool mixed = false;
    int d = elt.degree(&mixed);
    if (mixed) return std::nullopt;
    const bool quantum = ring->has_quantum();
    const int qdeg = quantum ? ring->weights()[ring->quantum_index()] : 0;
    ringkit::RingElt q = quantum ? ring->element_of(ring->presentation().quantum) : ring->zero();

    std::vector<VertexTerm> keys;
    std::vector<VecQ> cols;
    for (const auto& [name, cls] : classes) {
        if (cls.is_zero()) continue;
        bool cm = false;
        int dc = cls.degree(&cm);
        if (cm) continue;
        ringkit::RingElt scaled = cls;
        for (int p = 0; dc + p * qdeg <= d; ++p) {
            if (dc + p * qdeg == d) {
                keys.push_back({name, p});
                cols.push_back(coords_at(ring, scaled.poly(), d));
            }
            if (!quantum || qdeg == 0) break;
            scaled = mult(scaled, q);
        }
    }
    const int m = ring->dimension(d);
    MatQ A = MatQ::Zero(m, static_cast<Eigen::Index>(cols.size()));
    for (std::size_t j = 0; j < cols.size(); ++j) A.col(static_cast<Eigen::Index>(j)) = cols[j];
    LinearSolution sol = solve(A, coords_at(ring, elt.poly(), d));
    if (!sol.consistent) return std::nullopt;
    VertexCombo out;
    for (std::size_t j = 0; j < keys.size(); ++j) {
        const Rat& c = sol.particular(static_cast<Eigen::Index>(j));
        if (!c.is_zero()) out[keys[j]] = c;
    }
    return out;
}

CheckReport verify_table(const ringkit::RingPtr& ring,
                         const std::map<std::string, ringkit::RingElt>& classes,
                         const std::vector<ProductRow>& rows, const std::string& id_prefix,
                         const std::string& unit_id) {
    CheckReport rep;
    const bool quantum = ring->has_quantum();
    ringkit::RingElt q = quantum ? ring->element_of(ring->presentation().quantum) : ring->zero();
    auto lookup = [&](const std::string& s) -> const ringkit::RingElt& {
        auto it = classes.find(s);
        if (it == classes.end()) throw UnknownSymbol("unknown class '" + s + "'");
        return it->second;
    };
    for (const auto& row : rows) {
        const ringkit::RingElt& a = lookup(row.a);
        const ringkit::RingElt& b = lookup(row.b);
        ringkit::RingElt expect = ring->zero();
        for (const auto& t : row.expected) {
            ringkit::RingElt cls = lookup(t.vertex);
            if (t.q_power > 0) {
                if (!quantum)
                    throw NoQuantumParameter("product table term uses the quantum parameter");
                for (int p = 0; p < t.q_power; ++p) cls = mult(cls, q);
            }
            expect += t.coeff * cls;
        }
        ringkit::RingElt prod = mult(a, b);

        CheckResult cr;
        cr.id = id_prefix + "." + row.a + "*" + row.b;
        const std::string bshow = row.b_display.empty() ? render::vertex(row.b) : row.b_display;
        cr.rhs = render::terms(row.expected, unit_id);
        cr.summary = render::vertex(row.a) + "·" + bshow + " = " + cr.rhs;
        auto combo = express_over(classes, ring, prod);
        cr.lhs = combo ? render::combo(*combo, unit_id)
                       : render::poly(prod.poly(), display_names(ring), true);
        if (prod == expect) {
            cr.status = CheckResult::Status::Pass;
        } else {
            cr.status = CheckResult::Status::Fail;
            cr.detail = "recomputed product is " + cr.lhs;
        }
        rep.checks.push_back(std::move(cr));
    }
    return rep;
}

CheckReport dual_diagram_check(const DualDiagram& dual, const HasseDiagram& diag,
                               const ringkit::RingPtr& ring, const GiambelliMap& giambelli,
                               const std::string& id_prefix,
                               std::map<std::string, ringkit::RingElt>* out_classes) {
    CheckReport rep;
    const int top = diag.top_degree();

    CheckResult inv;
    inv.id = id_prefix + ".involution";
    inv.summary = "duality matches the two bases with complementary degrees";
    std::vector<std::string> problems;
    if (dual.vertices.size() != diag.vertices().size())
        problems.push_back("vertex counts differ");
    std::set<std::string> dual_ids;
    std::set<std::string> targets;
    std::map<std::string, int> dual_degree;
    for (const auto& v : dual.vertices) {
        if (!dual_ids.insert(v.id).second) problems.push_back("duplicate vertex '" + v.id + "'");
        dual_degree[v.id] = v.degree;
        auto it = dual.dual_of.find(v.id);
        if (it == dual.dual_of.end()) {
            problems.push_back("no duality partner recorded for '" + v.id + "'");
            continue;
        }
        if (!diag.has_vertex(it->second)) {
            problems.push_back("duality partner '" + it->second + "' is not a basis class");
            continue;
        }
        if (!targets.insert(it->second).second)
            problems.push_back("duality partner '" + it->second + "' repeated");
        if (v.degree + diag.degree_of(it->second) != top)
            problems.push_back("degrees of '" + v.id + "' and '" + it->second +
                               "' do not sum to " + std::to_string(top));
    }
    for (const auto& e : dual.edges) {
        if (!dual_degree.count(e.from) || !dual_degree.count(e.to)) {
            problems.push_back("edge " + e.from + " -> " + e.to + " references unknown vertex");
            continue;
        }
        if (dual_degree[e.to] != dual_degree[e.from] + 1)
            problems.push_back("edge " + e.from + " -> " + e.to + " does not raise degree by one");
    }
    if (problems.empty()) {
        inv.status = CheckResult::Status::Pass;
    } else {
        inv.status = CheckResult::Status::Fail;
        std::string all;
        for (const auto& p : problems) all += (all.empty() ? "" : "; ") + p;
        inv.detail = all;
    }
    rep.checks.push_back(inv);
    if (!problems.empty()) return rep;

    // Dual classes through the intersection pairing, degree by degree.
    std::map<std::string, std::string> dual_id_of;  // basis vertex -> dual vertex
    for (const auto& v : dual.vertices) dual_id_of[dual.dual_of.at(v.id)] = v.id;
    std::map<std::string, ringkit::RingElt> dclasses;
    for (int pd = 0; pd <= top; ++pd) {
        std::vector<std::string> prim = diag.vertices_at(pd);
        if (prim.empty()) continue;
        std::vector<ringkit::RingElt> basis;
        for (const auto& id : prim) {
            auto it = giambelli.find(id);
            if (it == giambelli.end()) throw UnknownSymbol("no representative for '" + id + "'");
            basis.push_back(it->second);
        }
        std::vector<ringkit::RingElt> duals = ringkit::dual_basis(ring, basis, pd);
        for (std::size_t i = 0; i < prim.size(); ++i)
            dclasses.emplace(dual_id_of.at(prim[i]), duals[i]);
    }

    ringkit::RingElt h = hyperplane_elt(ring);
    for (const auto& v : dual.vertices) {
        if (v.degree >= top) continue;
        ringkit::RingElt lhs = mult(h, dclasses.at(v.id));
        ringkit::RingElt rhs = ring->zero();
        std::vector<ComboTerm> expected;
        for (const auto& e : dual.edges) {
            if (e.from != v.id) continue;
            rhs += e.mult * dclasses.at(e.to);
            expected.push_back({e.mult, e.to, 0});
        }
        CheckResult cr;
        cr.id = id_prefix + ".chev." + v.id;
        cr.rhs = render::terms(expected, std::string());
        cr.summary = "h·" + render::vertex(v.id) + " = " + cr.rhs;
        auto combo = express_over(dclasses, ring, lhs);
        cr.lhs = combo ? render::combo(*combo, std::string())
                       : render::poly(lhs.poly(), display_names(ring), true);
        if (lhs == rhs) {
            cr.status = CheckResult::Status::Pass;
        } else {
            cr.status = CheckResult::Status::Fail;
            cr.detail = "hyperplane product is " + cr.lhs;
        }
        rep.checks.push_back(std::move(cr));
    }
    if (out_classes) *out_classes = std::move(dclasses);
    return rep;
}

Reconstruction reconstruct_second_generator(
    const HasseDiagram& diag,
    const std::map<std::pair<std::string, std::string>, Rat>& pairing,
    const std::string& sigma_vertex,
    const std::map<std::string, VertexCombo>& true_mult) {
    const auto& verts = diag.vertices();
    const int n = static_cast<int>(verts.size());
    const int top = diag.top_degree();
    std::map<std::string, int> idx;
    for (int i = 0; i < n; ++i) idx[verts[i].id] = i;
    const int gdeg = diag.degree_of(sigma_vertex);
    if (gdeg <= 0) throw Error("generator vertex must have positive degree");
    const int unit = idx.at(diag.unit_vertex());
    const int sigma = idx.at(sigma_vertex);

    auto pval = [&](const std::string& x, const std::string& y) -> Rat {
        auto it = pairing.find({x, y});
        if (it != pairing.end()) return it->second;
        it = pairing.find({y, x});
        if (it != pairing.end()) return it->second;
        return Rat(0);
    };

    // The pairing must be perfect in every degree.
    for (int d = 0; d <= top; ++d) {
        std::vector<std::string> vd = diag.vertices_at(d);
        std::vector<std::string> vc = diag.vertices_at(top - d);
        if (vd.size() != vc.size())
            throw DegeneratePairing("class counts differ between degrees " + std::to_string(d) +
                                    " and " + std::to_string(top - d));
        if (vd.empty()) continue;
        MatQ P(static_cast<Eigen::Index>(vd.size()), static_cast<Eigen::Index>(vc.size()));
        for (std::size_t i = 0; i < vd.size(); ++i)
            for (std::size_t j = 0; j < vc.size(); ++j)
                P(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
                    pval(vd[i], vc[j]);
        if (!inverse(P))
            throw DegeneratePairing("intersection pairing singular in degree " +
                                    std::to_string(d));
    }

    MatQ H = MatQ::Zero(n, n);
    for (const auto& e : diag.edges()) H(idx.at(e.to), idx.at(e.from)) += e.mult;

    // Unknown entries of the multiplication operator, grouped by grading.
    std::vector<std::pair<int, int>> vars;  // (target, source)
    std::map<std::pair<int, int>, int> var_of;
    for (int v = 0; v < n; ++v)
        for (int w = 0; w < n; ++w)
            if (verts[w].degree == verts[v].degree + gdeg) {
                var_of[{w, v}] = static_cast<int>(vars.size());
                vars.push_back({w, v});
            }

    std::vector<std::map<int, Rat>> rows;
    std::vector<Rat> rhs;
    // The operator sends the unit to the generator class.
    for (int w = 0; w < n; ++w) {
        if (verts[w].degree != gdeg) continue;
        rows.push_back({{var_of.at({w, unit}), Rat(1)}});
        rhs.push_back(w == sigma ? Rat(1) : Rat(0));
    }
    // It commutes with hyperplane multiplication.
    for (int v = 0; v < n; ++v) {
        for (int u = 0; u < n; ++u) {
            if (verts[u].degree != verts[v].degree + gdeg + 1) continue;
            std::map<int, Rat> row;
            for (int w = 0; w < n; ++w) {
                if (verts[w].degree == verts[v].degree + gdeg && !H(u, w).is_zero())
                    row[var_of.at({w, v})] += H(u, w);
                if (verts[w].degree == verts[v].degree + 1 && !H(w, v).is_zero())
                    row[var_of.at({u, w})] -= H(w, v);
            }
            if (!row.empty()) {
                rows.push_back(std::move(row));
                rhs.push_back(Rat(0));
            }
        }
    }
    // It is self-adjoint for the intersection pairing.
    for (int v = 0; v < n; ++v) {
        for (int w = v; w < n; ++w) {
            if (verts[v].degree + verts[w].degree + gdeg != top) continue;
            std::map<int, Rat> row;
            for (int u = 0; u < n; ++u) {
                if (verts[u].degree == verts[v].degree + gdeg) {
                    Rat c = pval(verts[u].id, verts[w].id);
                    if (!c.is_zero()) row[var_of.at({u, v})] += c;
                }
                if (verts[u].degree == verts[w].degree + gdeg) {
                    Rat c = pval(verts[u].id, verts[v].id);
                    if (!c.is_zero()) row[var_of.at({u, w})] -= c;
                }
            }
            if (!row.empty()) {
                rows.push_back(std::move(row));
                rhs.push_back(Rat(0));
            }
        }
    }

    MatQ A = MatQ::Zero(static_cast<Eigen::Index>(rows.size()),
                        static_cast<Eigen::Index>(vars.size()));
    VecQ b = VecQ::Zero(A.rows());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        for (const auto& [j, c] : rows[r]) A(static_cast<Eigen::Index>(r), j) = c;
        b(static_cast<Eigen::Index>(r)) = rhs[r];
    }
    LinearSolution sol = solve(A, b);

    Reconstruction out;
    if (!sol.consistent) {
        out.dimension = -1;
        return out;
    }
    out.dimension = static_cast<int>(sol.kernel.cols());

    MatQ Ms = MatQ::Zero(n, n);
    for (std::size_t k = 0; k < vars.size(); ++k)
        Ms(vars[k].first, vars[k].second) = sol.particular(static_cast<Eigen::Index>(k));
    for (int v = 0; v < n; ++v) {
        VertexCombo combo;
        for (int w = 0; w < n; ++w)
            if (!Ms(w, v).is_zero()) combo[{verts[w].id, 0}] = Ms(w, v);
        out.sample[verts[v].id] = std::move(combo);
    }

    // Does the actual multiplication operator satisfy the constraints?
    {
        VecQ xt = VecQ::Zero(static_cast<Eigen::Index>(vars.size()));
        bool graded = true;
        for (const auto& [vid, combo] : true_mult) {
            auto vi = idx.find(vid);
            if (vi == idx.end()) {
                graded = false;
                break;
            }
            for (const auto& [key, c] : combo) {
                if (c.is_zero()) continue;
                auto wi = idx.find(key.first);
                if (wi == idx.end() || key.second != 0 ||
                    verts[wi->second].degree != verts[vi->second].degree + gdeg) {
                    graded = false;
                    break;
                }
                xt(var_of.at({wi->second, vi->second})) = c;
            }
            if (!graded) break;
        }
        if (graded) {
            VecQ residual = A * xt - b;
            for (Eigen::Index i = 0; i < residual.size(); ++i)
                if (!residual(i).is_zero()) graded = false;
        }
        out.contains_true = graded;
    }

    // Stress-test the particular solution: does it, together with the
    // hyperplane operator, generate everything, and is the induced
    // product table commutative and associative?
    const int bmax = top / gdeg;
    std::vector<std::vector<VecQ>> gen_cols(bmax + 1);  // [b][a] = H^a Ms^b unit
    {
        VecQ e = VecQ::Zero(n);
        e(unit) = Rat(1);
        VecQ mb = e;
        for (int bp = 0; bp <= bmax; ++bp) {
            if (bp > 0) mb = Ms * mb;
            VecQ cur = mb;
            for (int a = 0; a + bp * gdeg <= top; ++a) {
                gen_cols[bp].push_back(cur);
                cur = H * cur;
            }
        }
    }
    out.sample_generates = true;
    std::vector<std::vector<std::pair<int, Rat>>> word;  // vertex -> [(var index in (a,b) list, coeff)]
    std::vector<std::vector<std::pair<int, int>>> word_keys(n);
    word.resize(n);
    for (int v = 0; v < n && out.sample_generates; ++v) {
        const int d = verts[v].degree;
        std::vector<std::pair<int, int>> keys;
        for (int bp = 0; bp <= bmax; ++bp)
            if (d - bp * gdeg >= 0) keys.push_back({d - bp * gdeg, bp});
        MatQ G = MatQ::Zero(n, static_cast<Eigen::Index>(keys.size()));
        for (std::size_t j = 0; j < keys.size(); ++j)
            G.col(static_cast<Eigen::Index>(j)) = gen_cols[keys[j].second][keys[j].first];
        VecQ ev = VecQ::Zero(n);
        ev(v) = Rat(1);
        LinearSolution ws = solve(G, ev);
        if (!ws.consistent) {
            out.sample_generates = false;
            break;
        }
        word_keys[v] = keys;
        for (std::size_t j = 0; j < keys.size(); ++j)
            if (!ws.particular(static_cast<Eigen::Index>(j)).is_zero())
                word[v].push_back({static_cast<int>(j), ws.particular(static_cast<Eigen::Index>(j))});
    }

    out.sample_associative = false;
    if (out.sample_generates) {
        // Operator for each class, as a polynomial in H and Ms.
        std::vector<MatQ> hp{MatQ::Identity(n, n)};
        for (int a = 1; a <= top; ++a) hp.push_back(H * hp.back());
        std::vector<MatQ> mp{MatQ::Identity(n, n)};
        for (int bp = 1; bp <= bmax; ++bp) mp.push_back(Ms * mp.back());
        std::vector<std::vector<VecQ>> prod(n, std::vector<VecQ>(n));
        for (int v = 0; v < n; ++v) {
            MatQ T = MatQ::Zero(n, n);
            for (const auto& [j, c] : word[v]) {
                const auto& key = word_keys[v][static_cast<std::size_t>(j)];
                T += c * (hp[key.first] * mp[key.second]);
            }
            for (int w = 0; w < n; ++w) prod[v][w] = T.col(w);
        }
        bool ok = true;
        for (int v = 0; v < n && ok; ++v)
            for (int w = v + 1; w < n && ok; ++w)
                if (!vec_equal(prod[v][w], prod[w][v])) ok = false;
        for (int u = 0; u < n && ok; ++u) {
            for (int v = 0; v < n && ok; ++v) {
                for (int w = 0; w < n && ok; ++w) {
                    VecQ lhs = VecQ::Zero(n);
                    VecQ rhs2 = VecQ::Zero(n);
                    for (int x = 0; x < n; ++x) {
                        if (!prod[u][v](x).is_zero()) lhs += prod[u][v](x) * prod[x][w];
                        if (!prod[v][w](x).is_zero()) rhs2 += prod[v][w](x) * prod[u][x];
                    }
                    if (!vec_equal(lhs, rhs2)) ok = false;
                }
            }
        }
        out.sample_associative = ok;
    }
    return out;
}

}  // namespace horochow
