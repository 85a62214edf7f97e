#ifndef COBORD_TESTS_FIXTURES_HPP
#define COBORD_TESTS_FIXTURES_HPP

#include "cobord/tower.hpp"

namespace cobord::fixtures {

struct DegenerationData {
    ChernVector n0, n1, n2, n3;
};

// Degeneration to the normal cone of a line in the plane, with the bundle
// O(d) and the divisor a second line. The special fiber is the plane glued
// to P(O(1)+O) over the line; the last piece is the P^1-bundle P(O+O(1)).
inline DegenerationData normal_cone_of_line(int d) {
    DegenerationData out;

    TowerVariety p2 = build_projective_product(Partition({2}));
    GradedPoly h = p2.generator(0);
    BundleSpec od{{LineBundleExpr{{d}}}};
    out.n0 = chern_vector(p2, {h}, {od});
    out.n1 = out.n0;

    TowerVariety p1 = build_projective_product(Partition({1}));
    TowerVariety y2 = build_projective_bundle(p1, BundleSpec{{LineBundleExpr{{1}}, LineBundleExpr{}}});
    out.n2 = chern_vector(y2, {y2.generator(0)}, {BundleSpec{{LineBundleExpr{{d}}}}});

    TowerVariety y3 = build_projective_bundle(p1, BundleSpec{{LineBundleExpr{}, LineBundleExpr{{1}}}});
    out.n3 = chern_vector(y3, {y3.generator(0)}, {BundleSpec{{LineBundleExpr{{d}}}}});

    return out;
}

// Same family, but the bundle is O(1) twisted down by the exceptional
// divisor. Restrictions: O(1) on the central fiber, O on the blown-up plane,
// O(f + xi) on the exceptional component, O on the last piece. This variant
// separates the last two vectors.
inline DegenerationData twisted_normal_cone_of_line() {
    DegenerationData out;

    TowerVariety p2 = build_projective_product(Partition({2}));
    GradedPoly h = p2.generator(0);
    out.n0 = chern_vector(p2, {h}, {BundleSpec{{LineBundleExpr{{1}}}}});
    out.n1 = chern_vector(p2, {h}, {trivial_bundle(1)});

    TowerVariety p1 = build_projective_product(Partition({1}));
    TowerVariety y2 = build_projective_bundle(p1, BundleSpec{{LineBundleExpr{{1}}, LineBundleExpr{}}});
    out.n2 = chern_vector(y2, {y2.generator(0)}, {BundleSpec{{LineBundleExpr{{1, 1}}}}});

    TowerVariety y3 = build_projective_bundle(p1, BundleSpec{{LineBundleExpr{}, LineBundleExpr{{1}}}});
    out.n3 = chern_vector(y3, {y3.generator(0)}, {trivial_bundle(1)});

    return out;
}

} // namespace cobord::fixtures

#endif
