#ifndef COBORD_SERIES_HPP
#define COBORD_SERIES_HPP

#include <map>
#include <string>
#include <vector>

#include "cobord/chern_vector.hpp"
#include "cobord/graded_poly.hpp"
#include "cobord/partitions.hpp"

namespace cobord {

// A finite multiset of singularity/tangency labels, split into the
// divisor-level part (beta) and the interior part (delta).
struct TypeMultiset {
    std::map<std::string, int> beta;
    std::map<std::string, int> delta;

    int total_points() const;
    bool empty() const { return beta.empty() && delta.empty(); }

    bool operator==(const TypeMultiset&) const = default;
    bool operator<(const TypeMultiset& other) const {
        if (beta != other.beta)
            return beta < other.beta;
        return delta < other.delta;
    }

    // "(tan2 | A1:2)"; empty side prints nothing.
    std::string str() const;
};

TypeMultiset multiset_union(const TypeMultiset& a, const TypeMultiset& b);

// "tan2 A1:2" -> multiplicities; empty string is the empty multiset.
std::map<std::string, int> parse_label_multiset(const std::string& text);

// Product over labels of multiplicity factorials.
Int aut_factor(const TypeMultiset& m);

// The linear data of the series: for every (beta, delta) an affine-linear
// polynomial in the Chern monomial symbols of the signature. Missing entries
// are zero; the empty key must stay zero.
class CoeffTable {
public:
    explicit CoeffTable(Signature sig);

    const Signature& sig() const { return sig_; }
    // One variable per weight-n Chern monomial, in canonical order, weight 1.
    const VarTablePtr& theta_table() const { return theta_; }
    size_t theta_index(const std::string& monomial_name) const;
    GradedPoly theta(const std::string& monomial_name) const;
    GradedPoly theta_constant(const Rational& c) const { return GradedPoly(theta_, c); }

    void set_entry(const TypeMultiset& key, const GradedPoly& value);
    const std::map<TypeMultiset, GradedPoly>& entries() const { return entries_; }
    GradedPoly entry(const TypeMultiset& key) const;
    Rational evaluate_entry(const TypeMultiset& key, const ChernVector& v) const;

private:
    Signature sig_;
    VarTablePtr theta_;
    std::map<TypeMultiset, GradedPoly> entries_;
};

// Converts a weight-n-plus-constant polynomial over the base Chern symbols
// (e.g. parsed from "3*c1E1^2 - 2") into the table's theta variables.
GradedPoly base_to_theta(const CoeffTable& table, const GradedPoly& base_poly);

// Truncated series over multiset keys. The empty-key coefficient is 1.
struct GenSeries {
    int bound = 0;
    std::map<TypeMultiset, Rational> coeffs;
};

struct SymbolicSeries {
    int bound = 0;
    VarTablePtr theta;
    std::map<TypeMultiset, GradedPoly> coeffs;
};

Rational series_coefficient(const GenSeries& s, const TypeMultiset& key);
GenSeries series_mul(const GenSeries& a, const GenSeries& b);
bool series_equal(const GenSeries& a, const GenSeries& b);

// exp(sum of entry(v) / aut per key), expanded exactly to |beta|+|delta| <= bound.
GenSeries exp_series(const CoeffTable& table, const ChernVector& v, int bound);
SymbolicSeries exp_series_symbolic(const CoeffTable& table, int bound);

// Coefficient of the key in the symbolic exponential: a polynomial of degree
// <= |beta|+|delta| in the theta variables.
GradedPoly universal_polynomial(const CoeffTable& table, const TypeMultiset& key);

// Product of singleton entries over the multiset divided by aut_factor.
// Throws MissingSingleton when a label has no singleton entry.
GradedPoly leading_term(const CoeffTable& table, const TypeMultiset& m);

// exp(n0) * exp(n3) == exp(n1) * exp(n2) to the truncation bound.
bool degeneration_identity_check(const CoeffTable& table, const ChernVector& n0,
                                 const ChernVector& n1, const ChernVector& n2,
                                 const ChernVector& n3, int bound);

// T = prod_j A_j^{Theta_j(v)} (times the exp of any constant parts):
// per basis monomial the series A_j and its logarithm.
struct Factorization {
    int bound = 0;
    std::vector<ChernMonomial> basis;
    std::vector<GenSeries> factors;
    std::vector<GenSeries> logs;
    GenSeries constant_log;
};

Factorization multiplicativity_factorization(const CoeffTable& table, int bound);
GenSeries reconstruct_product(const Factorization& f, const ChernVector& v);

// Theta-polynomial display with composite names parenthesized:
// "3*(c1E1^2) - 2*(c1T*c1E1) + (c2T)".
std::string theta_poly_str(const GradedPoly& p);

// The shipped surface data: nodal and triple-point interior singularities and
// the rational-divisor tangency entry, signature (2, 1, [1]).
CoeffTable kp_surface_table();

} // namespace cobord

#endif
