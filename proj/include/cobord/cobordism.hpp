#ifndef COBORD_COBORDISM_HPP
#define COBORD_COBORDISM_HPP

#include <string>
#include <utility>
#include <vector>

#include "cobord/chern_vector.hpp"
#include "cobord/partitions.hpp"
#include "cobord/rat_matrix.hpp"
#include "cobord/tower.hpp"

namespace cobord {

// Concrete geometry realizing a partition list: the product of projective
// spaces P^lambda, a hyperplane pullback (or zero) per divisor slot, and a
// split bundle O^{r-l(mu)} + sum of L_m per bundle slot, all L_m pulled back
// from distinct factors.
struct BasisElement {
    PartitionList index;
    TowerVariety geometry;
    std::vector<GradedPoly> divisor_classes;
    std::vector<BundleSpec> bundles;

    std::string describe() const;
};

BasisElement basis_element(const Signature& sig, const PartitionList& idx);

// Rows indexed by the partition lists, columns by the Chern monomials, both
// in the canonical order; entry = integral of the monomial over the row's
// geometry.
struct PairingMatrix {
    Signature sig;
    std::vector<PartitionList> basis;
    std::vector<ChernMonomial> monomials;
    RatMatrix entries;
    Rational det;
};

PairingMatrix pairing_matrix(const Signature& sig);

// True iff the entry vanishes whenever row < column in the block order
// (monomial_partial_order applied through the indexing bijection).
bool check_triangular(const PairingMatrix& m);

// Coordinates of v in the basis: sum of coeff * chern_vector(basis element)
// reproduces v exactly.
std::vector<std::pair<PartitionList, Rational>> decompose(const ChernVector& v);

ChernVector recombine(const Signature& sig,
                      const std::vector<std::pair<PartitionList, Rational>>& coords);

// Componentwise check of the degeneration relation n0 = n1 + n2 - n3.
bool dpr_check(const ChernVector& n0, const ChernVector& n1, const ChernVector& n2,
               const ChernVector& n3);

} // namespace cobord

#endif
