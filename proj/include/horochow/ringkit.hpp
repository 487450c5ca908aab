#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "horochow/linalg.hpp"
#include "horochow/poly.hpp"
#include "horochow/unipoly.hpp"

namespace horochow::ringkit {

struct Generator {
    std::string name;
    int degree = 1;

    friend bool operator==(const Generator&, const Generator&) = default;
};

/// Declares the value of the integral of one monomial of top degree, which
/// pins down the integration functional on the one-dimensional socle.
struct Normalization {
    std::string generator;
    int exponent = 0;
    Rat value;

    friend bool operator==(const Normalization&, const Normalization&) = default;
};

/// Generators-and-relations description of a graded quotient ring.  When
/// `quantum` names one of the generators, that generator is treated as the
/// deformation parameter: Hilbert data refer to the slice with parameter
/// exponent zero, and integration reads that slice at the top degree.
struct Presentation {
    std::vector<Generator> generators;
    std::vector<SymPoly> relations;  ///< polynomials in the generator variables
    int top_degree = 0;
    std::optional<Normalization> normalization;
    std::string quantum;  ///< name of the deformation parameter, empty if none
};

class GradedRing;
using RingPtr = std::shared_ptr<const GradedRing>;

/// Element of a graded quotient ring, held in normal form: every monomial
/// appearing in the polynomial is a basis monomial of its degree.
class RingElt {
public:
    RingElt() = default;
    RingElt(RingPtr ring, SymPoly nf) : ring_(std::move(ring)), nf_(std::move(nf)) {}

    const RingPtr& ring() const { return ring_; }
    const SymPoly& poly() const { return nf_; }
    bool is_zero() const { return nf_.is_zero(); }

    /// Common degree of the terms; -1 for zero, `mixed` set when inhomogeneous.
    int degree(bool* mixed = nullptr) const;

    RingElt& operator+=(const RingElt& o);
    RingElt& operator-=(const RingElt& o);
    RingElt& operator*=(const Rat& c);
    friend RingElt operator+(RingElt a, const RingElt& b) { return a += b; }
    friend RingElt operator-(RingElt a, const RingElt& b) { return a -= b; }
    friend RingElt operator*(const Rat& c, RingElt a) { return a *= c; }
    friend bool operator==(const RingElt& a, const RingElt& b) {
        return a.ring_ == b.ring_ && a.nf_ == b.nf_;
    }

private:
    RingPtr ring_;
    SymPoly nf_;
};

/// Graded quotient ring with precomputed per-degree monomial bases and
/// reduction tables, obtained by exact row reduction of the relation
/// multiples degree by degree (no Groebner machinery involved).
class GradedRing : public std::enable_shared_from_this<GradedRing> {
public:
    /// Build the ring.  Throws InhomogeneousRelation for relations that mix
    /// weighted degrees, HilbertMismatch when `expected_hilbert` disagrees
    /// with the computed dimensions, and InvariantViolation when a quantum
    /// ring fails the basis-slice consistency check.
    static RingPtr build(Presentation pres,
                         std::optional<std::vector<int>> expected_hilbert = {});

    const Presentation& presentation() const { return pres_; }
    const std::vector<int>& weights() const { return weights_; }
    int top_degree() const { return pres_.top_degree; }
    int max_degree() const { return maxdeg_; }
    bool has_quantum() const { return q_index_ >= 0; }
    int quantum_index() const { return q_index_; }
    int generator_index(const std::string& name) const;

    /// Full dimension of the graded piece.
    int dimension(int d) const;
    /// Dimension of the slice with quantum exponent zero (equals the full
    /// dimension for rings without a quantum parameter).
    int classical_dimension(int d) const;
    /// Classical dimensions for degrees 0..top.
    std::vector<int> hilbert_function() const;

    /// Basis monomials of the graded piece, in reduction order.
    std::vector<SymPoly::Expo> basis_monomials(int d) const;
    /// Basis monomials with quantum exponent zero.
    std::vector<SymPoly::Expo> classical_basis_monomials(int d) const;

    /// Reduce an arbitrary polynomial in the generators.
    /// Throws DegreeOutOfRange beyond the precomputed range.
    RingElt normal_form(const SymPoly& p) const;
    RingElt element_of(const std::string& generator_name) const;
    RingElt unit() const;
    RingElt zero() const { return RingElt(shared_from_this(), SymPoly(nvars())); }

    int nvars() const { return static_cast<int>(pres_.generators.size()); }

private:
    friend RingElt mult(const RingElt&, const RingElt&);
    friend Rat integrate(const RingElt&);

    struct Slice {
        std::vector<SymPoly::Expo> monos;  ///< all monomials of this degree
        std::map<SymPoly::Expo, int> index;
        std::vector<int> basis;            ///< indices of basis monomials
        std::vector<VecQ> coords;          ///< reduction of each monomial
    };

    void build_slice(int d);
    void check_quantum_slices() const;
    void setup_integration();

    Presentation pres_;
    std::vector<int> weights_;
    int q_index_ = -1;
    int maxdeg_ = 0;
    std::vector<Slice> slices_;
    SymPoly::Expo top_mono_;  ///< the quantum-free basis monomial at the top
    Rat integral_scale_;
    bool has_integral_ = false;
};

/// Product in the ring; throws RingMismatch when the factors disagree.
RingElt mult(const RingElt& a, const RingElt& b);

/// The integration functional: zero below the top degree, the normalized
/// coefficient of the socle at the top degree (quantum-free slice).
/// Throws Inhomogeneous on mixed-degree input.
Rat integrate(const RingElt& e);

/// Matrix of integrals integrate(rows[i] * cols[j]).
MatQ pairing_matrix(const std::vector<RingElt>& rows, const std::vector<RingElt>& cols);

/// Poincare pairing between the monomial bases in complementary degrees
/// d and top-d (quantum-free slices).
MatQ pairing_matrix(const RingPtr& ring, int d);

/// For a basis of the degree-d piece, the dual basis in degree top-d:
/// integrate(basis[i] * result[j]) is 1 when i equals j and 0 otherwise.
/// Throws NotABasis when the family is not a basis, DegeneratePairing when
/// the pairing between the complementary degrees is singular.
std::vector<RingElt> dual_basis(const RingPtr& ring, const std::vector<RingElt>& basis,
                                int d);

/// Finite-dimensional commutative algebra with a distinguished basis;
/// the result of specializing the quantum parameter.
struct FiniteAlgebra {
    std::vector<std::string> labels;          ///< printable basis labels
    std::vector<std::vector<VecQ>> table;     ///< table[i][j] = coords of e_i e_j
    VecQ unit;

    int dim() const { return static_cast<int>(labels.size()); }
    VecQ mult(const VecQ& a, const VecQ& b) const;
    /// Matrix of multiplication by `a` acting on the algebra.
    MatQ mult_operator(const VecQ& a) const;
    /// Coordinates of a basis vector.
    VecQ basis_vector(int i) const;
};

/// Substitute a value for the quantum parameter, producing the finite
/// algebra on the quantum-free basis monomials of degrees 0..top.
/// Throws NoQuantumParameter for rings without one.
FiniteAlgebra specialize_q(const RingPtr& ring, const Rat& value);

/// Semisimplicity certificate for one element of a finite algebra.
struct SemisimpleCertificate {
    UniPoly minpoly;
    bool squarefree = false;
    bool generates = false;  ///< minimal polynomial degree equals the dimension
};

/// Minimal polynomial of `element` (by Krylov iteration from the unit),
/// with the squarefree and degree checks re-verified on the result.  When
/// both hold, the algebra is semisimple and the element generates it.
SemisimpleCertificate semisimple_certificate(const FiniteAlgebra& alg, const VecQ& element);

}  // namespace horochow::ringkit
