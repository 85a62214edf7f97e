#ifndef COBORD_GRADED_POLY_HPP
#define COBORD_GRADED_POLY_HPP

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cobord/rational.hpp"

namespace cobord {

// A universe of named variables, each with a positive integer weight.
// Shared immutably between all polynomials over the same universe.
class VarTable {
public:
    VarTable() = default;
    VarTable(std::vector<std::string> names, std::vector<int> weights);

    size_t size() const { return names_.size(); }
    const std::string& name(size_t i) const { return names_[i]; }
    int weight(size_t i) const { return weights_[i]; }
    std::optional<size_t> find(const std::string& name) const;

    bool operator==(const VarTable& other) const {
        return names_ == other.names_ && weights_ == other.weights_;
    }

private:
    std::vector<std::string> names_;
    std::vector<int> weights_;
    std::map<std::string, size_t> index_;
};

using VarTablePtr = std::shared_ptr<const VarTable>;

using Exponents = std::vector<int>;

// Sparse multivariate polynomial with rational coefficients over a weighted
// variable universe. Terms are keyed by exponent vectors; zero coefficients
// are never stored.
class GradedPoly {
public:
    GradedPoly() : vars_(empty_table()) {}
    explicit GradedPoly(VarTablePtr vars) : vars_(std::move(vars)) {}
    GradedPoly(VarTablePtr vars, const Rational& constant);

    static GradedPoly variable(VarTablePtr vars, size_t index, int exponent = 1);
    static GradedPoly monomial(VarTablePtr vars, Exponents exps, const Rational& coeff);

    const VarTablePtr& vars() const { return vars_; }
    const std::map<Exponents, Rational>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }

    // Sum of weight(var) * exponent over a term key.
    int term_degree(const Exponents& exps) const;
    bool is_homogeneous(int* degree_out = nullptr) const;
    GradedPoly graded_part(int degree) const;
    int max_degree() const;

    Rational coefficient(const Exponents& exps) const;
    Rational constant_term() const;

    GradedPoly operator-() const;
    GradedPoly operator+(const GradedPoly& other) const;
    GradedPoly operator-(const GradedPoly& other) const;
    GradedPoly operator*(const GradedPoly& other) const;
    GradedPoly operator*(const Rational& scalar) const;
    GradedPoly& operator+=(const GradedPoly& other);
    GradedPoly& operator-=(const GradedPoly& other);
    GradedPoly& operator*=(const Rational& scalar);

    bool operator==(const GradedPoly& other) const;
    bool operator!=(const GradedPoly& other) const { return !(*this == other); }

    GradedPoly pow(int exponent) const;
    GradedPoly derivative(size_t var) const;
    Rational evaluate(const std::vector<Rational>& values) const;

    void add_term(const Exponents& exps, const Rational& coeff);

    // Deterministic display, e.g. "3*x^2*y - 1/2".
    std::string str() const;

    static VarTablePtr empty_table();

private:
    void require_same_universe(const GradedPoly& other) const;

    VarTablePtr vars_;
    std::map<Exponents, Rational> terms_;
};

inline GradedPoly operator*(const Rational& scalar, const GradedPoly& p) {
    return p * scalar;
}

} // namespace cobord

#endif
