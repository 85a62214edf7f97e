#include "cobord/icis.hpp"

#include <algorithm>
#include <functional>

#include "cobord/errors.hpp"
#include "cobord/expr.hpp"
#include "cobord/rat_matrix.hpp"

namespace cobord {

GermMap parse_germ(const std::string& text, std::vector<std::string> variables) {
    std::vector<std::string> pieces;
    size_t start = 0;
    while (true) {
        size_t semi = text.find(';', start);
        pieces.push_back(text.substr(start, semi == std::string::npos ? semi : semi - start));
        if (semi == std::string::npos)
            break;
        start = semi + 1;
    }
    if (variables.empty()) {
        for (const std::string& piece : pieces)
            for (const std::string& name : collect_identifiers(piece)) {
                if (std::find(variables.begin(), variables.end(), name) == variables.end())
                    variables.push_back(name);
            }
    }
    if (variables.empty())
        throw ParseError("germ has no variables: '" + text + "'");

    auto table = std::make_shared<VarTable>(variables, std::vector<int>(variables.size(), 1));
    GermMap germ;
    germ.variables = std::move(variables);
    for (const std::string& piece : pieces) {
        GradedPoly p = parse_polynomial(piece, table);
        if (p.constant_term() != 0)
            throw InvalidState("germ component does not vanish at the origin: '" + piece + "'");
        germ.components.push_back(std::move(p));
    }
    if (germ.num_components() > germ.num_vars())
        throw InvalidState("germ has more equations than variables");
    return germ;
}

namespace {

// All exponent vectors with total degree <= k, deterministic order.
std::vector<Exponents> monomials_up_to(int num_vars, int k) {
    std::vector<Exponents> result;
    Exponents current(static_cast<size_t>(num_vars), 0);
    std::function<void(int, int)> recurse = [&](int var, int remaining) {
        if (var == num_vars) {
            result.push_back(current);
            return;
        }
        for (int e = 0; e <= remaining; ++e) {
            current[static_cast<size_t>(var)] = e;
            recurse(var + 1, remaining - e);
        }
        current[static_cast<size_t>(var)] = 0;
    };
    recurse(0, k);
    return result;
}

int total_degree(const Exponents& e) {
    int d = 0;
    for (int x : e)
        d += x;
    return d;
}

// Index of each monomial in the basis list.
std::map<Exponents, size_t> index_of(const std::vector<Exponents>& basis) {
    std::map<Exponents, size_t> index;
    for (size_t i = 0; i < basis.size(); ++i)
        index.emplace(basis[i], i);
    return index;
}

// Row vector of m * g truncated to degree <= k, over the monomial basis.
void fill_truncated_row(RatMatrix& matrix, size_t row, size_t slot_offset,
                        const Exponents& multiplier, const GradedPoly& g, int k,
                        const std::map<Exponents, size_t>& index) {
    for (const auto& [exps, coeff] : g.terms()) {
        Exponents prod = exps;
        for (size_t i = 0; i < prod.size(); ++i)
            prod[i] += multiplier[i];
        if (total_degree(prod) > k)
            continue;
        matrix.at(row, slot_offset + index.at(prod)) += coeff;
    }
}

void check_vars(const std::vector<GradedPoly>& gens, int num_vars) {
    for (const GradedPoly& g : gens)
        if (static_cast<int>(g.vars()->size()) != num_vars)
            throw DimensionMismatch("generator does not live in the stated ambient space");
}

} // namespace

int truncated_quotient_dim(const std::vector<GradedPoly>& gens, int num_vars, int k) {
    if (k < 0)
        throw InvalidState("truncation order must be nonnegative");
    check_vars(gens, num_vars);
    std::vector<Exponents> basis = monomials_up_to(num_vars, k);
    std::map<Exponents, size_t> index = index_of(basis);
    std::vector<Exponents> multipliers = basis;

    RatMatrix rows(gens.size() * multipliers.size(), basis.size());
    size_t r = 0;
    for (const GradedPoly& g : gens)
        for (const Exponents& m : multipliers)
            fill_truncated_row(rows, r++, 0, m, g, k, index);

    return static_cast<int>(basis.size() - rank(rows));
}

namespace {

// dim of O^c / (Df*O^N + <f>*O^c) truncated at degree k per slot.
int tjurina_truncated(const GermMap& f, int k) {
    int n = f.num_vars();
    size_t c = f.components.size();
    std::vector<Exponents> basis = monomials_up_to(n, k);
    std::map<Exponents, size_t> index = index_of(basis);
    size_t block = basis.size();

    // Df columns: one generator of O^c per ambient variable.
    std::vector<std::vector<GradedPoly>> jacobian_columns;
    for (int j = 0; j < n; ++j) {
        std::vector<GradedPoly> column;
        for (const GradedPoly& fi : f.components)
            column.push_back(fi.derivative(static_cast<size_t>(j)));
        jacobian_columns.push_back(std::move(column));
    }

    size_t gen_count = (static_cast<size_t>(n) + c * c) * basis.size();
    RatMatrix rows(gen_count, c * block);
    size_t r = 0;
    for (const auto& column : jacobian_columns)
        for (const Exponents& m : basis) {
            for (size_t slot = 0; slot < c; ++slot)
                fill_truncated_row(rows, r, slot * block, m, column[slot], k, index);
            ++r;
        }
    for (const GradedPoly& fi : f.components)
        for (size_t slot = 0; slot < c; ++slot)
            for (const Exponents& m : basis)
                fill_truncated_row(rows, r++, slot * block, m, fi, k, index);

    return static_cast<int>(c * block - rank(rows));
}

int stabilize(const std::function<int(int)>& truncated_dim, int max_truncation,
              const char* what) {
    int previous = truncated_dim(2);
    for (int k = 3; k <= max_truncation; ++k) {
        int current = truncated_dim(k);
        if (current == previous)
            return current;
        previous = current;
    }
    throw NoStabilization(std::string(what) +
                          " did not stabilize below truncation order " +
                          std::to_string(max_truncation) + " (non-isolated or cap too low)");
}

} // namespace

int tjurina(const GermMap& f, int max_truncation) {
    return stabilize([&](int k) { return tjurina_truncated(f, k); }, max_truncation,
                     "Tjurina number");
}

int milnor_number(const GermMap& f, int max_truncation) {
    if (f.num_components() != 1)
        throw Unsupported("Milnor number is computed for hypersurface germs only");
    std::vector<GradedPoly> partials;
    for (int j = 0; j < f.num_vars(); ++j)
        partials.push_back(f.components[0].derivative(static_cast<size_t>(j)));
    return stabilize(
        [&](int k) { return truncated_quotient_dim(partials, f.num_vars(), k); },
        max_truncation, "Milnor number");
}

int determinacy_bound(const GermMap& f, int max_k) {
    if (f.num_components() != 1)
        throw Unsupported("the determinacy criterion is implemented for hypersurfaces");
    const GradedPoly& g = f.components[0];
    int n = f.num_vars();

    for (int k = 1; k <= max_k; ++k) {
        int degree_cap = k + 1;
        std::vector<Exponents> basis = monomials_up_to(n, degree_cap);
        std::map<Exponents, size_t> index = index_of(basis);

        // span of m^2 * J(f) + m * <f> inside O / m^{k+2}
        std::vector<std::pair<Exponents, const GradedPoly*>> products;
        std::vector<GradedPoly> partials;
        for (int j = 0; j < n; ++j)
            partials.push_back(g.derivative(static_cast<size_t>(j)));
        std::vector<Exponents> multipliers = monomials_up_to(n, degree_cap);

        size_t row_count = 0;
        for (const Exponents& m : multipliers) {
            int d = total_degree(m);
            if (d >= 2)
                row_count += partials.size();
            if (d >= 1)
                row_count += 1;
        }
        std::vector<Exponents> top;
        for (const Exponents& e : basis)
            if (total_degree(e) == degree_cap)
                top.push_back(e);

        RatMatrix rows(row_count + top.size(), basis.size());
        size_t r = 0;
        for (const Exponents& m : multipliers) {
            int d = total_degree(m);
            if (d >= 2)
                for (const GradedPoly& partial : partials)
                    fill_truncated_row(rows, r++, 0, m, partial, degree_cap, index);
            if (d >= 1)
                fill_truncated_row(rows, r++, 0, m, g, degree_cap, index);
        }
        size_t span_rank = [&] {
            RatMatrix span_only(row_count, basis.size());
            for (size_t rr = 0; rr < row_count; ++rr)
                for (size_t cc = 0; cc < basis.size(); ++cc)
                    span_only.at(rr, cc) = rows.at(rr, cc);
            return rank(span_only);
        }();
        for (const Exponents& e : top)
            rows.at(r++, index.at(e)) = 1;

        if (rank(rows) == span_rank)
            return k; // every degree-(k+1) monomial already lies in the span
    }
    throw NoBound("determinacy criterion did not trigger below k = " + std::to_string(max_k));
}

int length_N(const GermMap& f, int k) {
    return truncated_quotient_dim(f.components, f.num_vars(), k);
}

ICISInvariants compute_invariants(const GermMap& f, int max_truncation) {
    ICISInvariants inv;
    inv.dim_p = f.dim();
    inv.tau = tjurina(f, max_truncation);
    inv.determinacy_bound = determinacy_bound(f);
    inv.length_N = length_N(f, inv.determinacy_bound);
    return inv;
}

std::vector<SingularityRecord> builtin_singularities() {
    struct Seed {
        const char* label;
        const char* germ;
        std::vector<std::string> vars;
    };
    std::vector<Seed> seeds = {
        {"A1", "x^2 + y^2", {"x", "y"}}, {"A2", "x^3 + y^2", {"x", "y"}},
        {"A3", "x^4 + y^2", {"x", "y"}}, {"A4", "x^5 + y^2", {"x", "y"}},
        {"A5", "x^6 + y^2", {"x", "y"}}, {"D4", "x^3 + y^3", {"x", "y"}},
        {"tan2", "t^2", {"t"}},          {"tan3", "t^3", {"t"}},
        {"tan4", "t^4", {"t"}},          {"tan5", "t^5", {"t"}},
    };
    std::vector<SingularityRecord> records;
    for (const Seed& seed : seeds) {
        GermMap germ = parse_germ(seed.germ, seed.vars);
        ICISInvariants inv = compute_invariants(germ);
        SingularityRecord rec;
        rec.label = seed.label;
        rec.germ = seed.germ;
        rec.variables = seed.vars;
        rec.tau = inv.tau;
        rec.determinacy = inv.determinacy_bound;
        rec.length = inv.length_N;
        records.push_back(std::move(rec));
    }
    return records;
}

SingularityTable builtin_singularity_table() {
    SingularityTable table;
    for (SingularityRecord& rec : builtin_singularities()) {
        std::string label = rec.label;
        table.emplace(std::move(label), std::move(rec));
    }
    return table;
}

int tau_total(const std::vector<std::string>& labels, const SingularityTable& table) {
    int total = 0;
    for (const std::string& label : labels) {
        auto it = table.find(label);
        if (it == table.end())
            throw UnknownLabel("no singularity named '" + label + "'");
        total += it->second.tau;
    }
    return total;
}

int codim_tangency(const TangencyProblem& problem, const SingularityTable& table) {
    return (problem.ambient_dim - 1) * static_cast<int>(problem.alpha.size()) +
           tau_total(problem.alpha, table) + tau_total(problem.beta, table);
}

} // namespace cobord
