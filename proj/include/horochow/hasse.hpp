#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "horochow/rational.hpp"
#include "horochow/report.hpp"
#include "horochow/ringkit.hpp"

namespace horochow {

/// Which of the two closed-orbit families a cohomology class sits over,
/// or Shared for classes that restrict from the ambient space.
enum class Family { Y, Z, Shared };

struct HasseVertex {
    std::string id;
    int degree = 0;
    Family family = Family::Shared;
};

/// Covering relation: multiplication by the hyperplane class sends
/// `from` to `mult * to` (plus the other covers of `from`).
struct HasseEdge {
    std::string from;
    std::string to;
    Rat mult = Rat(1);
};

/// Quantum correction: multiplication by the hyperplane class contributes
/// `coeff * q^q_power * to` when applied to `from`.
struct QuantumEdge {
    std::string from;
    std::string to;
    Rat coeff = Rat(1);
    int q_power = 1;
};

/// Degree-graded multiplication-by-hyperplane diagram on a basis of
/// cohomology classes.  Classical edges raise degree by one; quantum
/// edges satisfy deg(to) + q_power * index == deg(from) + 1.
class HasseDiagram {
public:
    HasseDiagram(std::vector<HasseVertex> vertices, std::vector<HasseEdge> edges,
                 std::vector<QuantumEdge> q_edges, int index);

    const std::vector<HasseVertex>& vertices() const { return vertices_; }
    const std::vector<HasseEdge>& edges() const { return edges_; }
    const std::vector<QuantumEdge>& q_edges() const { return q_edges_; }
    int index() const { return index_; }
    int top_degree() const { return top_; }

    bool has_vertex(const std::string& id) const;
    /// Degree of a vertex; throws UnknownVertex.
    int degree_of(const std::string& id) const;
    Family family_of(const std::string& id) const;
    /// Ids of the vertices of the given degree, in declaration order.
    std::vector<std::string> vertices_at(int degree) const;
    /// The unique degree-zero vertex.
    const std::string& unit_vertex() const { return unit_; }
    /// The unique vertex of maximal degree.
    const std::string& point_vertex() const { return point_; }

    std::vector<HasseEdge> edges_from(const std::string& id) const;
    std::vector<QuantumEdge> q_edges_from(const std::string& id) const;

private:
    std::vector<HasseVertex> vertices_;
    std::vector<HasseEdge> edges_;
    std::vector<QuantumEdge> q_edges_;
    int index_ = 0;
    int top_ = 0;
    std::string unit_;
    std::string point_;
    std::map<std::string, int> pos_;  // id -> index into vertices_
};

/// Formal combination of basis classes scaled by powers of the quantum
/// parameter: key (vertex id, q power), value coefficient.
using VertexTerm = std::pair<std::string, int>;
using VertexCombo = std::map<VertexTerm, Rat>;

/// One term of a combination in display order.
struct ComboTerm {
    Rat coeff;
    std::string vertex;
    int q_power = 0;
};

/// Canonical display order: ascending q power, then vertex id.
std::vector<ComboTerm> to_terms(const VertexCombo& combo);
VertexCombo to_combo(const std::vector<ComboTerm>& terms);

/// Total degree (vertex degree + q_power * index) of a homogeneous combo;
/// throws MixedDegrees if terms disagree, returns nullopt for zero.
std::optional<int> combo_degree(const HasseDiagram& diag, const VertexCombo& combo);

/// Multiply a homogeneous combination by the hyperplane class, following
/// classical edges and, when `quantum` is set, quantum edges too.
VertexCombo chevalley_apply(const HasseDiagram& diag, const VertexCombo& combo,
                            bool quantum);

/// Degree of each basis class against the hyperplane class, computed as a
/// weighted count of monotone edge paths down to the point vertex.
std::map<std::string, Rat> degrees_from_hasse(const HasseDiagram& diag);

using GiambelliMap = std::map<std::string, ringkit::RingElt>;

/// Solve for polynomial representatives of all basis classes from the
/// diagram's hyperplane-multiplication structure and the given seed
/// classes (at least the unit vertex).  Uses quantum edges exactly when
/// the ring carries a quantum parameter.  Throws Inconsistent if some
/// degree admits no solution and Underdetermined if it admits several.
GiambelliMap giambelli_solve(const HasseDiagram& diag, const ringkit::RingPtr& ring,
                             const std::map<std::string, ringkit::RingElt>& seeds);

/// Express a ring element over the classes in `classes`, allowing each
/// class to be scaled by powers of the quantum parameter.  Returns
/// nullopt when the element is not in their span.
std::optional<VertexCombo> express_over(const std::map<std::string, ringkit::RingElt>& classes,
                                        const ringkit::RingPtr& ring,
                                        const ringkit::RingElt& elt);

/// One asserted product: class `a` times class `b` equals `expected`
/// (terms kept in display order).  `b_display` overrides how the second
/// factor is rendered, e.g. a bare generator symbol.
struct ProductRow {
    std::string a;
    std::string b;
    std::vector<ComboTerm> expected;
    std::string b_display;
};

/// Recompute every asserted product in the ring and compare exactly.
/// Check ids are `<id_prefix>.<a>*<b>`; `unit_id` is the class suppressed
/// in renderings (so pure quantum terms print as "q", "2q²", ...).
CheckReport verify_table(const ringkit::RingPtr& ring,
                         const std::map<std::string, ringkit::RingElt>& classes,
                         const std::vector<ProductRow>& rows,
                         const std::string& id_prefix,
                         const std::string& unit_id);

/// Multiplication-by-hyperplane diagram on the Poincare-dual basis,
/// together with the duality pairing of vertex names.
struct DualDiagram {
    std::vector<HasseVertex> vertices;
    std::vector<HasseEdge> edges;
    std::map<std::string, std::string> dual_of;  // dual vertex -> primal vertex
};

/// Compute the dual classes of the Giambelli basis via the intersection
/// pairing and confirm (a) dual_of is a degree-complementing bijection and
/// (b) hyperplane multiplication of the dual classes follows the dual
/// diagram's edges.  Also returns the dual classes through `out_classes`
/// when non-null.
CheckReport dual_diagram_check(const DualDiagram& dual, const HasseDiagram& diag,
                               const ringkit::RingPtr& ring, const GiambelliMap& giambelli,
                               const std::string& id_prefix,
                               std::map<std::string, ringkit::RingElt>* out_classes = nullptr);

/// Outcome of reconstructing the second multiplication operator from the
/// diagram, the intersection pairing, and the name of the generator class.
struct Reconstruction {
    int dimension = 0;          ///< dimension of the affine solution space
    bool contains_true = false; ///< the actual multiplication satisfies the constraints
    bool sample_generates = false;   ///< sample + hyperplane operator span everything
    bool sample_associative = false; ///< induced product table is commutative/associative
    std::map<std::string, VertexCombo> sample;  ///< particular solution, vertex -> image
};

/// Solve for all degree-raising operators M on the vertex space with
/// M(unit) = sigma_vertex, M commuting with hyperplane multiplication,
/// and M self-adjoint for the pairing; then stress-test the particular
/// solution.  `pairing` maps complementary-degree vertex pairs to their
/// intersection number and must be nondegenerate in every degree.
/// `true_mult` gives the actual multiplication images for the
/// contains_true test.
Reconstruction reconstruct_second_generator(
    const HasseDiagram& diag,
    const std::map<std::pair<std::string, std::string>, Rat>& pairing,
    const std::string& sigma_vertex,
    const std::map<std::string, VertexCombo>& true_mult);

}  // namespace horochow
