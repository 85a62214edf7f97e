#include "cobord/graded_poly.hpp"

#include <algorithm>
#include <sstream>

namespace cobord {

VarTable::VarTable(std::vector<std::string> names, std::vector<int> weights)
    : names_(std::move(names)), weights_(std::move(weights)) {
    if (names_.size() != weights_.size())
        throw DimensionMismatch("variable names and weights differ in length");
    for (size_t i = 0; i < names_.size(); ++i) {
        if (weights_[i] <= 0)
            throw InvalidState("variable weight must be positive");
        if (!index_.emplace(names_[i], i).second)
            throw InvalidState("duplicate variable name '" + names_[i] + "'");
    }
}

std::optional<size_t> VarTable::find(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end())
        return std::nullopt;
    return it->second;
}

VarTablePtr GradedPoly::empty_table() {
    static const VarTablePtr table = std::make_shared<VarTable>();
    return table;
}

GradedPoly::GradedPoly(VarTablePtr vars, const Rational& constant)
    : vars_(std::move(vars)) {
    if (constant != 0)
        terms_.emplace(Exponents(vars_->size(), 0), constant);
}

GradedPoly GradedPoly::variable(VarTablePtr vars, size_t index, int exponent) {
    if (index >= vars->size())
        throw InvalidIndex("variable index out of range");
    Exponents exps(vars->size(), 0);
    exps[index] = exponent;
    return monomial(std::move(vars), std::move(exps), 1);
}

GradedPoly GradedPoly::monomial(VarTablePtr vars, Exponents exps, const Rational& coeff) {
    if (exps.size() != vars->size())
        throw DimensionMismatch("exponent vector does not match variable universe");
    GradedPoly p(std::move(vars));
    if (coeff != 0)
        p.terms_.emplace(std::move(exps), coeff);
    return p;
}

int GradedPoly::term_degree(const Exponents& exps) const {
    int degree = 0;
    for (size_t i = 0; i < exps.size(); ++i)
        degree += vars_->weight(i) * exps[i];
    return degree;
}

bool GradedPoly::is_homogeneous(int* degree_out) const {
    if (terms_.empty()) {
        if (degree_out)
            *degree_out = 0;
        return true;
    }
    int degree = term_degree(terms_.begin()->first);
    for (const auto& [exps, coeff] : terms_)
        if (term_degree(exps) != degree)
            return false;
    if (degree_out)
        *degree_out = degree;
    return true;
}

GradedPoly GradedPoly::graded_part(int degree) const {
    GradedPoly part(vars_);
    for (const auto& [exps, coeff] : terms_)
        if (term_degree(exps) == degree)
            part.terms_.emplace(exps, coeff);
    return part;
}

int GradedPoly::max_degree() const {
    int degree = 0;
    for (const auto& [exps, coeff] : terms_)
        degree = std::max(degree, term_degree(exps));
    return degree;
}

Rational GradedPoly::coefficient(const Exponents& exps) const {
    auto it = terms_.find(exps);
    return it == terms_.end() ? Rational(0) : it->second;
}

Rational GradedPoly::constant_term() const {
    return coefficient(Exponents(vars_->size(), 0));
}

void GradedPoly::require_same_universe(const GradedPoly& other) const {
    if (vars_ != other.vars_ && !(*vars_ == *other.vars_))
        throw DimensionMismatch("polynomials over different variable universes");
}

void GradedPoly::add_term(const Exponents& exps, const Rational& coeff) {
    if (coeff == 0)
        return;
    if (exps.size() != vars_->size())
        throw DimensionMismatch("exponent vector does not match variable universe");
    auto [it, inserted] = terms_.emplace(exps, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0)
            terms_.erase(it);
    }
}

GradedPoly GradedPoly::operator-() const {
    GradedPoly result(vars_);
    for (const auto& [exps, coeff] : terms_)
        result.terms_.emplace(exps, -coeff);
    return result;
}

GradedPoly& GradedPoly::operator+=(const GradedPoly& other) {
    require_same_universe(other);
    for (const auto& [exps, coeff] : other.terms_)
        add_term(exps, coeff);
    return *this;
}

GradedPoly& GradedPoly::operator-=(const GradedPoly& other) {
    require_same_universe(other);
    for (const auto& [exps, coeff] : other.terms_)
        add_term(exps, -coeff);
    return *this;
}

GradedPoly GradedPoly::operator+(const GradedPoly& other) const {
    GradedPoly result = *this;
    result += other;
    return result;
}

GradedPoly GradedPoly::operator-(const GradedPoly& other) const {
    GradedPoly result = *this;
    result -= other;
    return result;
}

GradedPoly GradedPoly::operator*(const GradedPoly& other) const {
    require_same_universe(other);
    GradedPoly result(vars_);
    Exponents product(vars_->size());
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : other.terms_) {
            for (size_t i = 0; i < product.size(); ++i)
                product[i] = ea[i] + eb[i];
            result.add_term(product, ca * cb);
        }
    }
    return result;
}

GradedPoly GradedPoly::operator*(const Rational& scalar) const {
    GradedPoly result = *this;
    result *= scalar;
    return result;
}

GradedPoly& GradedPoly::operator*=(const Rational& scalar) {
    if (scalar == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [exps, coeff] : terms_)
        coeff *= scalar;
    return *this;
}

bool GradedPoly::operator==(const GradedPoly& other) const {
    require_same_universe(other);
    return terms_ == other.terms_;
}

GradedPoly GradedPoly::pow(int exponent) const {
    if (exponent < 0)
        throw InvalidState("negative polynomial power");
    GradedPoly result(vars_, 1);
    GradedPoly base = *this;
    int e = exponent;
    while (e > 0) {
        if (e & 1)
            result = result * base;
        base = base * base;
        e >>= 1;
    }
    return result;
}

GradedPoly GradedPoly::derivative(size_t var) const {
    if (var >= vars_->size())
        throw InvalidIndex("derivative variable out of range");
    GradedPoly result(vars_);
    for (const auto& [exps, coeff] : terms_) {
        if (exps[var] == 0)
            continue;
        Exponents e = exps;
        e[var] -= 1;
        result.add_term(e, coeff * Rational(exps[var]));
    }
    return result;
}

Rational GradedPoly::evaluate(const std::vector<Rational>& values) const {
    if (values.size() != vars_->size())
        throw DimensionMismatch("evaluation point does not match variable universe");
    Rational total = 0;
    for (const auto& [exps, coeff] : terms_) {
        Rational term = coeff;
        for (size_t i = 0; i < exps.size(); ++i) {
            for (int e = 0; e < exps[i]; ++e)
                term *= values[i];
        }
        total += term;
    }
    return total;
}

std::string GradedPoly::str() const {
    if (terms_.empty())
        return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [exps, coeff] : terms_) {
        Rational c = coeff;
        if (first) {
            if (c < 0) {
                out << "-";
                c = -c;
            }
        } else {
            out << (c < 0 ? " - " : " + ");
            if (c < 0)
                c = -c;
        }
        first = false;

        std::string factors;
        for (size_t i = 0; i < exps.size(); ++i) {
            if (exps[i] == 0)
                continue;
            if (!factors.empty())
                factors += "*";
            factors += vars_->name(i);
            if (exps[i] > 1)
                factors += "^" + std::to_string(exps[i]);
        }
        if (factors.empty()) {
            out << to_string(c);
        } else {
            if (c != 1)
                out << to_string(c) << "*";
            out << factors;
        }
    }
    return out.str();
}

} // namespace cobord
