#ifndef COBORD_TOWER_HPP
#define COBORD_TOWER_HPP

#include <string>
#include <vector>

#include "cobord/chern_vector.hpp"
#include "cobord/graded_poly.hpp"
#include "cobord/partitions.hpp"

namespace cobord {

// First Chern class data of a line bundle on a tower: integer coefficients
// over the first coeffs.size() generators (missing entries are zero).
// An empty vector is the trivial bundle.
struct LineBundleExpr {
    std::vector<int> coeffs;
};

// A split bundle: a direct sum of line bundles.
struct BundleSpec {
    std::vector<LineBundleExpr> summands;
    int rank() const { return static_cast<int>(summands.size()); }
};

BundleSpec trivial_bundle(int rank);

// A Chow ring presented by a tower of stages over the point. Each stage
// introduces one degree-1 generator:
//   - a projective-space factor P^m: generator h with h^{m+1} = 0,
//   - the projectivization of a split bundle over the tower built so far:
//     generator xi with sum_{i=0..r} c_i(spec) xi^{r-i} = 0.
// Relations are triangular in stage order, so normal-form reduction
// terminates; the unique top normal-form monomial integrates to 1.
class TowerVariety {
public:
    TowerVariety();

    void add_projective_space(int m);
    // Throws EmptySpec for rank 0; summand expressions live on the current tower.
    void add_projective_bundle(const BundleSpec& spec);

    int dimension() const { return dimension_; }
    size_t stage_count() const { return stages_.size(); }
    const VarTablePtr& vars() const { return vars_; }

    GradedPoly constant(const Rational& c) const { return GradedPoly(vars_, c); }
    GradedPoly zero_class() const { return GradedPoly(vars_); }
    GradedPoly generator(size_t stage) const;
    GradedPoly line_class(const LineBundleExpr& expr) const;

    GradedPoly reduce(const GradedPoly& p) const;
    GradedPoly total_chern_tangent() const;
    // Degree-i Chern class of a split bundle (elementary symmetric function
    // of the summand classes), reduced.
    GradedPoly bundle_chern_class(const BundleSpec& spec, int i) const;

    Rational integrate(const GradedPoly& p) const;

    struct Stage {
        bool is_projective_space;
        int proj_dim;                               // for P^m stages
        std::vector<std::vector<int>> summands;     // c1 rows for bundle stages
        int cap;                                    // exponent cap of the generator
        GradedPoly rewrite;                         // g^cap reduces to this
    };
    const std::vector<Stage>& stages() const { return stages_; }

private:
    GradedPoly lift(const GradedPoly& p) const;     // re-key onto the current table

    std::vector<Stage> stages_;
    VarTablePtr vars_;
    int dimension_ = 0;
};

TowerVariety build_projective_product(const Partition& lambda);
TowerVariety build_projective_bundle(const TowerVariety& base, const BundleSpec& spec);

// Chern numbers of (tower, divisor classes, split bundles). Divisor classes
// must be homogeneous of degree 1 (or zero). The signature is
// (dimension, #divisors, bundle ranks).
ChernVector chern_vector(const TowerVariety& v, const std::vector<GradedPoly>& divisor_classes,
                         const std::vector<BundleSpec>& bundles);

} // namespace cobord

#endif
