#pragma once

#include <map>

#include "horochow/partition.hpp"
#include "horochow/poly.hpp"

namespace horochow::symfunc {

/// Finite linear combination of Schur functions.
using SchurExpansion = std::map<Partition, Rat>;

/// Schur P- versus Q-functions (they differ by 2^(number of parts)).
enum class PQFamily { P, Q };

/// Finite linear combination of Schur P- or Q-functions.
struct PQExpansion {
    PQFamily family = PQFamily::P;
    std::map<StrictPartition, Rat> terms;

    friend bool operator==(const PQExpansion&, const PQExpansion&) = default;
};

/// Monomial symmetric function m_lam in `nvars` variables.
/// Throws TooManyParts when lam has more parts than variables.
SymPoly monomial_symmetric(const Partition& lam, int nvars);

/// Schur polynomial s_lam in `nvars` variables, computed as the generating
/// function of semistandard tableaux; zero when lam has more rows than
/// variables.
SymPoly schur_polynomial(const Partition& lam, int nvars);

/// Expand a symmetric polynomial in the Schur basis (partitions with at
/// most nvars parts).  Throws NotSymmetric when p is not symmetric.
SchurExpansion schur_expand(const SymPoly& p);

/// Littlewood-Richardson coefficient c^nu_{lam,mu}: the number of
/// semistandard skew tableaux of shape nu/lam and content mu whose reverse
/// reading word is a lattice word.
long lr_coefficient(const Partition& nu, const Partition& lam, const Partition& mu);

/// Product s_lam * s_mu expanded in the Schur basis (no truncation).
SchurExpansion lr_product(const Partition& lam, const Partition& mu);

/// Schur P- or Q-polynomial of a strict partition in `nvars` variables,
/// as the generating function of marked shifted tableaux.
/// Precondition: nvars >= weight of lam (the stable range used here).
SymPoly pq_polynomial(const StrictPartition& lam, int nvars, PQFamily family);

/// Product P_lam * P_mu (or Q_lam * Q_mu) expanded in the same family
/// over strict partitions; computed in |lam| + |mu| variables, where the
/// expansion of the product is already stable.
PQExpansion pq_product(const StrictPartition& lam, const StrictPartition& mu,
                       PQFamily family);

/// Convert an expansion between the P- and Q-families in place.
PQExpansion convert(const PQExpansion& e, PQFamily target);

}  // namespace horochow::symfunc
