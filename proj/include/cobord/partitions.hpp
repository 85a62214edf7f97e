#ifndef COBORD_PARTITIONS_HPP
#define COBORD_PARTITIONS_HPP

#include <compare>
#include <string>
#include <vector>

#include "cobord/graded_poly.hpp"
#include "cobord/rational.hpp"

namespace cobord {

// Enumeration sizes are capped; raise explicitly when a caller needs more.
inline constexpr int kDefaultSizeCap = 12;

// Integer partition: weakly decreasing list of positive parts.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    int size() const;
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    int largest() const { return parts_.empty() ? 0 : parts_.front(); }
    const std::vector<int>& parts() const { return parts_; }

    Partition transpose() const;

    static Partition multiset_union(const Partition& a, const Partition& b);
    bool contains_submultiset(const Partition& sub) const;
    // Multiset difference; requires contains_submultiset(sub).
    Partition multiset_difference(const Partition& sub) const;

    bool operator==(const Partition& other) const { return parts_ == other.parts_; }
    std::strong_ordering operator<=>(const Partition& other) const {
        return parts_ <=> other.parts_;
    }

    // Parts joined by '.', empty partition printed as '-': "2.1".
    std::string str() const;

private:
    std::vector<int> parts_;
};

// All partitions of n in descending lexicographic order: (n) first, (1^n) last.
// max_part < 0 means unbounded.
std::vector<Partition> enumerate_partitions(int n, int max_part = -1);

// The shape of the indexing data: dimension n, s divisor slots, and vector
// bundle slots of the given ranks.
struct Signature {
    int n = 0;
    int s = 0;
    std::vector<int> ranks;

    int bundle_count() const { return static_cast<int>(ranks.size()); }
    bool operator==(const Signature&) const = default;
    std::string str() const;
};

void check_signature_cap(const Signature& sig, int cap = kDefaultSizeCap);

// (lambda; pi_1..pi_s; mu_1..mu_k): the union of all pi and mu parts is a
// sub-multiset of lambda, each pi has length <= 1, each mu_j length <= ranks[j].
struct PartitionList {
    Partition lambda;
    std::vector<Partition> pis;
    std::vector<Partition> mus;

    bool operator==(const PartitionList&) const = default;

    // "(2.1 | 2 | 1, -)": lambda, divisor slots, bundle slots.
    std::string str() const;
    // Nested integer arrays: "[[2,1],[[2]],[[1],[]]]".
    std::string machine_str() const;
};

void validate_partition_list(const Signature& sig, const PartitionList& pl);
PartitionList parse_partition_list(const std::string& text);

// Exponent assignment on the signature's Chern symbols, total weight n.
struct ChernMonomial {
    Exponents exps;
    bool operator==(const ChernMonomial&) const = default;
};

// Symbols in order: c1T..cnT, then c1D1..c1Ds, then c1Ej..c{r_j}Ej per bundle.
// Weight of ciX is i, divisor symbols have weight 1.
VarTablePtr chern_symbols(const Signature& sig);
std::string monomial_name(const Signature& sig, const ChernMonomial& m);

// Offsets of symbol groups inside chern_symbols(sig).
size_t tangent_symbol_index(const Signature& sig, int i);           // c_iT, 1-based i
size_t divisor_symbol_index(const Signature& sig, int i);           // c1D_i, 0-based slot
size_t bundle_symbol_index(const Signature& sig, int j, int i);     // c_iE_j, 0-based j, 1-based i

// Canonical total order on monomials: bundle exponent blocks compared first
// (last bundle outermost, top Chern class first within a block), then divisor
// exponents (last slot first), then the tangent block (c_nT first).
bool monomial_less(const Signature& sig, const ChernMonomial& a, const ChernMonomial& b);

enum class PartialOrd { Less, Equal, Greater, Incomparable };

// The block order underlying triangularity: monomials are comparable exactly
// when they differ in the bundle or divisor exponents.
PartialOrd monomial_partial_order(const Signature& sig, const ChernMonomial& a,
                                  const ChernMonomial& b);

// All weight-n monomials in canonical order.
std::vector<ChernMonomial> enumerate_chern_monomials(const Signature& sig);

// Dual indexing data: nu a partition of the leftover weight, ps[i] a column
// (1^e) recording the divisor exponent, qs[j] a partition with largest part
// <= ranks[j] recording the Chern exponents of bundle j.
struct QElement {
    Partition nu;
    std::vector<Partition> ps;
    std::vector<Partition> qs;

    bool operator==(const QElement&) const = default;
};

ChernMonomial q_to_monomial(const Signature& sig, const QElement& q);
QElement monomial_to_q(const Signature& sig, const ChernMonomial& m);

// The transpose bijection onto partition lists:
// (nu; ps; qs) -> (nu u (u ps^t) u (u qs^t); ps^t; qs^t).
// Throws RankViolation if a part of qs[j] exceeds ranks[j] (or ps[i] exceeds 1),
// SignatureMismatch if the sizes do not sum to n.
PartitionList epsilon(const Signature& sig, const QElement& q);
QElement epsilon_inverse(const Signature& sig, const PartitionList& pl);

// All partition lists of the signature, one representative per equivalence
// class, enumerated directly and returned in the canonical order (the order
// of the corresponding monomials).
std::vector<PartitionList> enumerate_partition_lists(const Signature& sig);

} // namespace cobord

#endif
