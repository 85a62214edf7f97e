#include "cobord/tower.hpp"

#include <algorithm>

#include "cobord/errors.hpp"

namespace cobord {

BundleSpec trivial_bundle(int rank) {
    if (rank < 0)
        throw InvalidState("bundle rank must be nonnegative");
    BundleSpec spec;
    spec.summands.resize(static_cast<size_t>(rank));
    return spec;
}

TowerVariety::TowerVariety() : vars_(GradedPoly::empty_table()) {}

namespace {

VarTablePtr extended_table(const VarTablePtr& old) {
    std::vector<std::string> names;
    std::vector<int> weights;
    for (size_t i = 0; i < old->size(); ++i) {
        names.push_back(old->name(i));
        weights.push_back(old->weight(i));
    }
    names.push_back("g" + std::to_string(old->size() + 1));
    weights.push_back(1);
    return std::make_shared<VarTable>(std::move(names), std::move(weights));
}

} // namespace

GradedPoly TowerVariety::lift(const GradedPoly& p) const {
    if (p.vars()->size() > vars_->size())
        throw DimensionMismatch("class lives on a larger tower");
    GradedPoly out(vars_);
    for (const auto& [exps, coeff] : p.terms()) {
        Exponents padded = exps;
        padded.resize(vars_->size(), 0);
        out.add_term(padded, coeff);
    }
    return out;
}

void TowerVariety::add_projective_space(int m) {
    if (m < 0)
        throw InvalidState("projective space dimension must be nonnegative");
    vars_ = extended_table(vars_);
    Stage stage;
    stage.is_projective_space = true;
    stage.proj_dim = m;
    stage.cap = m + 1;
    stage.rewrite = GradedPoly(vars_); // h^{m+1} = 0
    stages_.push_back(std::move(stage));
    dimension_ += m;
}

void TowerVariety::add_projective_bundle(const BundleSpec& spec) {
    int r = spec.rank();
    if (r == 0)
        throw EmptySpec("projectivization of a rank-0 bundle");
    for (const LineBundleExpr& s : spec.summands)
        if (s.coeffs.size() > vars_->size())
            throw DimensionMismatch("summand refers to generators beyond the base");

    // Chern classes of the spec live on the base; compute before extending.
    std::vector<GradedPoly> chern(static_cast<size_t>(r) + 1);
    {
        GradedPoly total = GradedPoly(vars_, 1);
        for (const LineBundleExpr& s : spec.summands)
            total = total * (GradedPoly(vars_, 1) + line_class(s));
        total = reduce(total);
        for (int i = 0; i <= r; ++i)
            chern[static_cast<size_t>(i)] = total.graded_part(i);
    }

    vars_ = extended_table(vars_);
    size_t gen = vars_->size() - 1;

    Stage stage;
    stage.is_projective_space = false;
    for (const LineBundleExpr& s : spec.summands) {
        std::vector<int> row = s.coeffs;
        row.resize(vars_->size() - 1, 0);
        stage.summands.push_back(std::move(row));
    }
    stage.proj_dim = -1;
    stage.cap = r;
    // xi^r = -(c_1 xi^{r-1} + ... + c_r)
    GradedPoly rewrite(vars_);
    for (int i = 1; i <= r; ++i) {
        GradedPoly ci = lift(chern[static_cast<size_t>(i)]);
        Exponents xi_power(vars_->size(), 0);
        xi_power[gen] = r - i;
        rewrite -= ci * GradedPoly::monomial(vars_, xi_power, 1);
    }
    stage.rewrite = std::move(rewrite);
    stages_.push_back(std::move(stage));
    dimension_ += r - 1;
}

GradedPoly TowerVariety::generator(size_t stage) const {
    if (stage >= stages_.size())
        throw InvalidIndex("stage index out of range");
    return GradedPoly::variable(vars_, stage);
}

GradedPoly TowerVariety::line_class(const LineBundleExpr& expr) const {
    if (expr.coeffs.size() > vars_->size())
        throw DimensionMismatch("line bundle refers to generators beyond the tower");
    GradedPoly c1(vars_);
    for (size_t i = 0; i < expr.coeffs.size(); ++i) {
        if (expr.coeffs[i] == 0)
            continue;
        Exponents e(vars_->size(), 0);
        e[i] = 1;
        c1.add_term(e, make_rational(expr.coeffs[i]));
    }
    return c1;
}

GradedPoly TowerVariety::reduce(const GradedPoly& p) const {
    GradedPoly result(vars_);
    std::vector<std::pair<Exponents, Rational>> work;
    for (const auto& [exps, coeff] : p.terms()) {
        Exponents padded = exps;
        if (padded.size() > vars_->size())
            throw DimensionMismatch("class lives on a larger tower");
        padded.resize(vars_->size(), 0);
        work.emplace_back(std::move(padded), coeff);
    }

    while (!work.empty()) {
        auto [exps, coeff] = std::move(work.back());
        work.pop_back();
        if (coeff == 0)
            continue;

        int degree = 0;
        for (int e : exps)
            degree += e;
        if (degree > dimension_)
            continue; // the ring vanishes above the dimension

        // Rewrite the highest violating stage first; this strictly decreases
        // the reversed exponent tuple, so the loop terminates.
        int violating = -1;
        for (int j = static_cast<int>(stages_.size()) - 1; j >= 0; --j) {
            if (exps[static_cast<size_t>(j)] >= stages_[static_cast<size_t>(j)].cap) {
                violating = j;
                break;
            }
        }
        if (violating < 0) {
            result.add_term(exps, coeff);
            continue;
        }
        const Stage& stage = stages_[static_cast<size_t>(violating)];
        Exponents rest = exps;
        rest[static_cast<size_t>(violating)] -= stage.cap;
        for (const auto& [re, rc] : stage.rewrite.terms()) {
            Exponents sum = rest;
            for (size_t i = 0; i < sum.size(); ++i)
                sum[i] += re[i];
            work.emplace_back(std::move(sum), Rational(coeff * rc));
        }
    }
    return result;
}

GradedPoly TowerVariety::total_chern_tangent() const {
    GradedPoly total(vars_, 1);
    for (size_t j = 0; j < stages_.size(); ++j) {
        const Stage& stage = stages_[j];
        GradedPoly gen = GradedPoly::variable(vars_, j);
        if (stage.is_projective_space) {
            total = reduce(total * (constant(1) + gen).pow(stage.proj_dim + 1));
        } else {
            for (const auto& row : stage.summands) {
                LineBundleExpr expr{row};
                total = reduce(total * (constant(1) + gen + line_class(expr)));
            }
        }
    }
    return total;
}

GradedPoly TowerVariety::bundle_chern_class(const BundleSpec& spec, int i) const {
    if (i < 0 || i > spec.rank())
        return zero_class();
    GradedPoly total(vars_, 1);
    for (const LineBundleExpr& s : spec.summands)
        total = reduce(total * (constant(1) + line_class(s)));
    return total.graded_part(i);
}

Rational TowerVariety::integrate(const GradedPoly& p) const {
    GradedPoly normal = reduce(p);
    Exponents top(vars_->size(), 0);
    for (size_t j = 0; j < stages_.size(); ++j)
        top[j] = stages_[j].cap - 1;
    return normal.coefficient(top);
}

TowerVariety build_projective_product(const Partition& lambda) {
    TowerVariety tower;
    for (int m : lambda.parts())
        tower.add_projective_space(m);
    return tower;
}

TowerVariety build_projective_bundle(const TowerVariety& base, const BundleSpec& spec) {
    TowerVariety tower = base;
    tower.add_projective_bundle(spec);
    return tower;
}

ChernVector chern_vector(const TowerVariety& v, const std::vector<GradedPoly>& divisor_classes,
                         const std::vector<BundleSpec>& bundles) {
    Signature sig;
    sig.n = v.dimension();
    sig.s = static_cast<int>(divisor_classes.size());
    for (const BundleSpec& b : bundles)
        sig.ranks.push_back(b.rank());

    // Classes of every symbol, in the symbol-table order.
    std::vector<GradedPoly> symbol_class;
    GradedPoly ctotal = v.total_chern_tangent();
    for (int i = 1; i <= sig.n; ++i)
        symbol_class.push_back(ctotal.graded_part(i));
    for (const GradedPoly& d : divisor_classes) {
        GradedPoly dr = v.reduce(d);
        if (!dr.is_zero()) {
            int deg = 0;
            if (!dr.is_homogeneous(&deg) || deg != 1)
                throw SignatureMismatch("divisor class must be homogeneous of degree 1");
        }
        symbol_class.push_back(dr);
    }
    for (const BundleSpec& b : bundles)
        for (int i = 1; i <= b.rank(); ++i)
            symbol_class.push_back(v.bundle_chern_class(b, i));

    // Power cache per symbol.
    std::vector<std::vector<GradedPoly>> powers(symbol_class.size());
    auto power = [&](size_t sym, int e) -> const GradedPoly& {
        auto& cache = powers[sym];
        if (cache.empty())
            cache.push_back(v.constant(1));
        while (static_cast<int>(cache.size()) <= e)
            cache.push_back(v.reduce(cache.back() * symbol_class[sym]));
        return cache[static_cast<size_t>(e)];
    };

    ChernVector result;
    result.sig = sig;
    for (const ChernMonomial& m : enumerate_chern_monomials(sig)) {
        GradedPoly prod = v.constant(1);
        for (size_t sym = 0; sym < m.exps.size(); ++sym) {
            if (m.exps[sym] == 0)
                continue;
            prod = v.reduce(prod * power(sym, m.exps[sym]));
            if (prod.is_zero())
                break;
        }
        result.values.push_back(v.integrate(prod));
    }
    return result;
}

} // namespace cobord
