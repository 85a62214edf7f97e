#include "cobord/series.hpp"

#include <sstream>

#include "cobord/errors.hpp"

namespace cobord {

int TypeMultiset::total_points() const {
    int total = 0;
    for (const auto& [label, mult] : beta)
        total += mult;
    for (const auto& [label, mult] : delta)
        total += mult;
    return total;
}

namespace {

std::string side_str(const std::map<std::string, int>& side) {
    std::string out;
    for (const auto& [label, mult] : side) {
        if (!out.empty())
            out += " ";
        out += label;
        if (mult > 1)
            out += ":" + std::to_string(mult);
    }
    return out;
}

} // namespace

std::string TypeMultiset::str() const {
    return "(" + side_str(beta) + " | " + side_str(delta) + ")";
}

TypeMultiset multiset_union(const TypeMultiset& a, const TypeMultiset& b) {
    TypeMultiset out = a;
    for (const auto& [label, mult] : b.beta)
        out.beta[label] += mult;
    for (const auto& [label, mult] : b.delta)
        out.delta[label] += mult;
    return out;
}

std::map<std::string, int> parse_label_multiset(const std::string& text) {
    std::map<std::string, int> out;
    std::istringstream in(text);
    std::string token;
    while (in >> token) {
        size_t colon = token.find(':');
        std::string label = token.substr(0, colon);
        int mult = 1;
        if (colon != std::string::npos) {
            try {
                mult = std::stoi(token.substr(colon + 1));
            } catch (...) {
                throw ParseError("bad multiplicity in '" + token + "'");
            }
        }
        if (label.empty() || mult <= 0)
            throw ParseError("bad multiset token '" + token + "'");
        out[label] += mult;
    }
    return out;
}

Int aut_factor(const TypeMultiset& m) {
    Int result = 1;
    for (const auto& [label, mult] : m.beta)
        result *= factorial(mult);
    for (const auto& [label, mult] : m.delta)
        result *= factorial(mult);
    return result;
}

CoeffTable::CoeffTable(Signature sig) : sig_(std::move(sig)) {
    std::vector<std::string> names;
    for (const ChernMonomial& m : enumerate_chern_monomials(sig_))
        names.push_back(monomial_name(sig_, m));
    theta_ = std::make_shared<VarTable>(std::move(names),
                                        std::vector<int>(enumerate_chern_monomials(sig_).size(), 1));
}

size_t CoeffTable::theta_index(const std::string& name) const {
    auto idx = theta_->find(name);
    if (!idx)
        throw UnknownLabel("no Chern monomial '" + name + "' in signature " + sig_.str());
    return *idx;
}

GradedPoly CoeffTable::theta(const std::string& name) const {
    return GradedPoly::variable(theta_, theta_index(name));
}

void CoeffTable::set_entry(const TypeMultiset& key, const GradedPoly& value) {
    if (!(*value.vars() == *theta_))
        throw SignatureMismatch("table entry uses a foreign symbol universe");
    if (key.empty()) {
        if (!value.is_zero())
            throw InvalidState("the empty-multiset entry must be zero");
        return;
    }
    for (const auto& [exps, coeff] : value.terms()) {
        int total = 0;
        for (int e : exps)
            total += e;
        if (total > 1)
            throw InvalidState("table entries must be affine-linear in the Chern monomials");
    }
    if (value.is_zero())
        entries_.erase(key);
    else
        entries_[key] = value;
}

GradedPoly CoeffTable::entry(const TypeMultiset& key) const {
    auto it = entries_.find(key);
    return it == entries_.end() ? GradedPoly(theta_) : it->second;
}

Rational CoeffTable::evaluate_entry(const TypeMultiset& key, const ChernVector& v) const {
    if (!(v.sig == sig_))
        throw SignatureMismatch("Chern vector signature does not match the table");
    return entry(key).evaluate(v.values);
}

GradedPoly base_to_theta(const CoeffTable& table, const GradedPoly& base_poly) {
    const Signature& sig = table.sig();
    VarTablePtr base = chern_symbols(sig);
    if (!(*base_poly.vars() == *base))
        throw SignatureMismatch("polynomial is not over the base Chern symbols");
    GradedPoly out(table.theta_table());
    for (const auto& [exps, coeff] : base_poly.terms()) {
        int weight = 0;
        for (size_t i = 0; i < exps.size(); ++i)
            weight += base->weight(i) * exps[i];
        if (weight == 0) {
            out += GradedPoly(table.theta_table(), coeff);
            continue;
        }
        if (weight != sig.n)
            throw InvalidState("table entries must combine weight-n monomials and constants");
        std::string name = monomial_name(sig, ChernMonomial{exps});
        out += table.theta(name) * coeff;
    }
    return out;
}

namespace {

template <typename C>
std::map<TypeMultiset, C> truncated_mul(const std::map<TypeMultiset, C>& a,
                                        const std::map<TypeMultiset, C>& b, int bound) {
    std::map<TypeMultiset, C> out;
    for (const auto& [ka, ca] : a) {
        for (const auto& [kb, cb] : b) {
            TypeMultiset key = multiset_union(ka, kb);
            if (key.total_points() > bound)
                continue;
            C prod = ca * cb;
            auto [it, inserted] = out.emplace(key, prod);
            if (!inserted)
                it->second = it->second + prod;
        }
    }
    return out;
}

template <typename C>
void drop_zeroes(std::map<TypeMultiset, C>& m, const C& zero) {
    for (auto it = m.begin(); it != m.end();) {
        if (it->second == zero)
            it = m.erase(it);
        else
            ++it;
    }
}

// exp of an argument with no empty-key term, truncated.
template <typename C>
std::map<TypeMultiset, C> exp_map(const std::map<TypeMultiset, C>& argument, int bound,
                                  const C& one, const C& zero) {
    std::map<TypeMultiset, C> total;
    total.emplace(TypeMultiset{}, one);
    std::map<TypeMultiset, C> power = total;
    Int fact = 1;
    for (int j = 1; j <= bound; ++j) {
        power = truncated_mul(power, argument, bound);
        if (power.empty())
            break;
        fact *= j;
        Rational inv = make_rational(Int(1), fact);
        for (const auto& [key, coeff] : power) {
            C scaled = coeff * inv;
            auto [it, inserted] = total.emplace(key, scaled);
            if (!inserted)
                it->second = it->second + scaled;
        }
    }
    drop_zeroes(total, zero);
    total.emplace(TypeMultiset{}, one); // keep the constant term explicit
    return total;
}

} // namespace

Rational series_coefficient(const GenSeries& s, const TypeMultiset& key) {
    auto it = s.coeffs.find(key);
    return it == s.coeffs.end() ? Rational(0) : it->second;
}

GenSeries series_mul(const GenSeries& a, const GenSeries& b) {
    if (a.bound != b.bound)
        throw SignatureMismatch("series have different truncation bounds");
    GenSeries out;
    out.bound = a.bound;
    out.coeffs = truncated_mul(a.coeffs, b.coeffs, a.bound);
    drop_zeroes(out.coeffs, Rational(0));
    return out;
}

bool series_equal(const GenSeries& a, const GenSeries& b) {
    if (a.bound != b.bound)
        return false;
    auto normalized = [](const GenSeries& s) {
        std::map<TypeMultiset, Rational> m = s.coeffs;
        for (auto it = m.begin(); it != m.end();) {
            if (it->second == 0)
                it = m.erase(it);
            else
                ++it;
        }
        return m;
    };
    return normalized(a) == normalized(b);
}

GenSeries exp_series(const CoeffTable& table, const ChernVector& v, int bound) {
    if (bound < 0)
        throw InvalidState("truncation bound must be nonnegative");
    std::map<TypeMultiset, Rational> argument;
    for (const auto& [key, poly] : table.entries()) {
        if (key.total_points() > bound)
            continue;
        Rational value = table.evaluate_entry(key, v) / Rational(aut_factor(key));
        if (value != 0)
            argument.emplace(key, value);
    }
    GenSeries out;
    out.bound = bound;
    out.coeffs = exp_map(argument, bound, Rational(1), Rational(0));
    return out;
}

SymbolicSeries exp_series_symbolic(const CoeffTable& table, int bound) {
    if (bound < 0)
        throw InvalidState("truncation bound must be nonnegative");
    std::map<TypeMultiset, GradedPoly> argument;
    GradedPoly zero(table.theta_table());
    for (const auto& [key, poly] : table.entries()) {
        if (key.total_points() > bound)
            continue;
        GradedPoly scaled = poly * make_rational(Int(1), aut_factor(key));
        if (!scaled.is_zero())
            argument.emplace(key, scaled);
    }
    SymbolicSeries out;
    out.bound = bound;
    out.theta = table.theta_table();
    out.coeffs = exp_map(argument, bound, GradedPoly(table.theta_table(), 1), zero);
    return out;
}

GradedPoly universal_polynomial(const CoeffTable& table, const TypeMultiset& key) {
    SymbolicSeries series = exp_series_symbolic(table, key.total_points());
    auto it = series.coeffs.find(key);
    return it == series.coeffs.end() ? GradedPoly(table.theta_table()) : it->second;
}

GradedPoly leading_term(const CoeffTable& table, const TypeMultiset& m) {
    GradedPoly product(table.theta_table(), 1);
    auto accumulate = [&](const std::map<std::string, int>& side, bool is_beta) {
        for (const auto& [label, mult] : side) {
            TypeMultiset singleton;
            (is_beta ? singleton.beta : singleton.delta)[label] = 1;
            auto it = table.entries().find(singleton);
            if (it == table.entries().end())
                throw MissingSingleton("no singleton entry for label '" + label + "'");
            product = product * it->second.pow(mult);
        }
    };
    accumulate(m.beta, true);
    accumulate(m.delta, false);
    return product * make_rational(Int(1), aut_factor(m));
}

bool degeneration_identity_check(const CoeffTable& table, const ChernVector& n0,
                                 const ChernVector& n1, const ChernVector& n2,
                                 const ChernVector& n3, int bound) {
    for (const ChernVector* v : {&n1, &n2, &n3})
        if (!(v->sig == n0.sig))
            throw SignatureMismatch("degeneration data must share one signature");
    GenSeries lhs = series_mul(exp_series(table, n0, bound), exp_series(table, n3, bound));
    GenSeries rhs = series_mul(exp_series(table, n1, bound), exp_series(table, n2, bound));
    return series_equal(lhs, rhs);
}

Factorization multiplicativity_factorization(const CoeffTable& table, int bound) {
    Factorization f;
    f.bound = bound;
    f.basis = enumerate_chern_monomials(table.sig());

    Exponents zero_key(table.theta_table()->size(), 0);
    f.constant_log.bound = bound;
    for (size_t j = 0; j < f.basis.size(); ++j) {
        GenSeries log;
        log.bound = bound;
        f.logs.push_back(log);
    }

    for (const auto& [key, poly] : table.entries()) {
        if (key.total_points() > bound)
            continue;
        Rational inv_aut = make_rational(Int(1), aut_factor(key));
        for (const auto& [exps, coeff] : poly.terms()) {
            Rational scaled = coeff * inv_aut;
            if (exps == zero_key) {
                f.constant_log.coeffs[key] += scaled;
                continue;
            }
            for (size_t j = 0; j < exps.size(); ++j)
                if (exps[j] == 1)
                    f.logs[j].coeffs[key] += scaled;
        }
    }

    for (GenSeries& log : f.logs) {
        GenSeries a;
        a.bound = bound;
        a.coeffs = exp_map(log.coeffs, bound, Rational(1), Rational(0));
        f.factors.push_back(std::move(a));
    }
    return f;
}

GenSeries reconstruct_product(const Factorization& f, const ChernVector& v) {
    if (v.values.size() != f.basis.size())
        throw SignatureMismatch("Chern vector does not match the factorization basis");
    std::map<TypeMultiset, Rational> argument = f.constant_log.coeffs;
    for (size_t j = 0; j < f.logs.size(); ++j) {
        if (v.values[j] == 0)
            continue;
        for (const auto& [key, coeff] : f.logs[j].coeffs)
            argument[key] += coeff * v.values[j];
    }
    for (auto it = argument.begin(); it != argument.end();) {
        if (it->second == 0)
            it = argument.erase(it);
        else
            ++it;
    }
    GenSeries out;
    out.bound = f.bound;
    out.coeffs = exp_map(argument, f.bound, Rational(1), Rational(0));
    return out;
}

std::string theta_poly_str(const GradedPoly& p) {
    if (p.is_zero())
        return "0";
    const VarTablePtr& vars = p.vars();
    std::ostringstream out;
    bool first = true;
    for (const auto& [exps, coeff] : p.terms()) {
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
            factors += "(" + vars->name(i) + ")";
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

CoeffTable kp_surface_table() {
    CoeffTable table(Signature{2, 1, {1}});

    TypeMultiset node;
    node.delta["A1"] = 1;
    table.set_entry(node, table.theta("c1E1^2") * make_rational(3) -
                              table.theta("c1T*c1E1") * make_rational(2) +
                              table.theta("c2T"));

    TypeMultiset triple_point;
    triple_point.delta["D4"] = 1;
    table.set_entry(triple_point, table.theta("c1E1^2") * make_rational(15) -
                                      table.theta("c1T*c1E1") * make_rational(20) +
                                      table.theta("c1T^2") * make_rational(5) +
                                      table.theta("c2T") * make_rational(5));

    TypeMultiset tangency;
    tangency.beta["tan2"] = 1;
    table.set_entry(tangency, table.theta("c1D1*c1E1") * make_rational(2) +
                                  table.theta_constant(make_rational(-2)));

    return table;
}

} // namespace cobord
