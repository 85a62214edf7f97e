#ifndef COBORD_CHERN_VECTOR_HPP
#define COBORD_CHERN_VECTOR_HPP

#include <string>
#include <vector>

#include "cobord/partitions.hpp"
#include "cobord/rational.hpp"

namespace cobord {

// Every Chern number of a fixed signature, indexed by the canonical monomial
// order of enumerate_chern_monomials.
struct ChernVector {
    Signature sig;
    std::vector<Rational> values;

    bool operator==(const ChernVector&) const = default;
};

ChernVector zero_chern_vector(const Signature& sig);

// Lookup by canonical monomial name, e.g. "c1T*c1E1". Throws UnknownLabel.
const Rational& chern_value(const ChernVector& v, const std::string& monomial);

ChernVector chern_add(const ChernVector& a, const ChernVector& b);
ChernVector chern_sub(const ChernVector& a, const ChernVector& b);

} // namespace cobord

#endif
