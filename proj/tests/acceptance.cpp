// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <vector>

#include "cobord/cobordism.hpp"
#include "cobord/icis.hpp"
#include "cobord/series.hpp"
#include "cobord/severi.hpp"
#include "fixtures.hpp"

using namespace cobord;

namespace {

struct Check {
    bool ok = true;
    std::string detail;

    void require(bool condition, const std::string& what) {
        if (!condition && ok) {
            ok = false;
            detail = what;
        }
    }
};

Partition P(std::vector<int> parts) {
    return Partition(std::move(parts));
}

std::vector<std::vector<int>> rank_lists_up_to(int total) {
    std::vector<std::vector<int>> out = {{}};
    std::function<void(std::vector<int>&, int)> recurse = [&](std::vector<int>& current,
                                                              int remaining) {
        for (int r = 1; r <= remaining; ++r) {
            current.push_back(r);
            out.push_back(current);
            recurse(current, remaining - r);
            current.pop_back();
        }
    };
    std::vector<int> current;
    recurse(current, total);
    return out;
}

ChernVector plane_vector(int d) {
    TowerVariety p2 = build_projective_product(P({2}));
    return chern_vector(p2, {p2.generator(0)}, {BundleSpec{{LineBundleExpr{{d}}}}});
}

// 1. Basis counts against the displayed sets.
void criterion_basis_counts(Check& c) {
    Signature sig{3, 0, {2, 1}};
    auto lists = enumerate_partition_lists(sig);
    c.require(lists.size() == 17, "|P_{3,2,1}| != 17");

    auto pl = [](std::vector<int> l, std::vector<int> m1, std::vector<int> m2) {
        return PartitionList{Partition(std::move(l)), {},
                             {Partition(std::move(m1)), Partition(std::move(m2))}};
    };
    std::vector<PartitionList> displayed = {
        pl({3}, {}, {}),       pl({3}, {3}, {}),       pl({3}, {}, {3}),
        pl({2, 1}, {}, {}),    pl({2, 1}, {2}, {}),    pl({2, 1}, {1}, {}),
        pl({2, 1}, {}, {2}),   pl({2, 1}, {}, {1}),    pl({2, 1}, {2, 1}, {}),
        pl({2, 1}, {2}, {1}),  pl({2, 1}, {1}, {2}),   pl({1, 1, 1}, {}, {}),
        pl({1, 1, 1}, {1}, {}), pl({1, 1, 1}, {}, {1}), pl({1, 1, 1}, {1, 1}, {}),
        pl({1, 1, 1}, {1}, {1}), pl({1, 1, 1}, {1, 1}, {1}),
    };
    std::set<std::string> got, want;
    for (const auto& x : lists)
        got.insert(x.machine_str());
    for (const auto& x : displayed)
        want.insert(x.machine_str());
    c.require(got == want, "enumeration differs from the displayed 17-element set");

    c.require(enumerate_partition_lists(Signature{2, 1, {1}}).size() == 7,
              "|P'_{2,1,[1]}| != 7");
}

// 2. Dimension equality and bijectivity over the sweep.
void criterion_bijection(Check& c) {
    for (int n = 0; n <= 6; ++n)
        for (int s = 0; s <= 2; ++s)
            for (const auto& ranks : rank_lists_up_to(3)) {
                Signature sig{n, s, ranks};
                auto monos = enumerate_chern_monomials(sig);
                auto lists = enumerate_partition_lists(sig);
                c.require(monos.size() == lists.size(),
                          "|P'| != #monomials at " + sig.str());
                std::set<std::string> images, direct;
                for (size_t i = 0; i < monos.size(); ++i) {
                    PartitionList via = epsilon(sig, monomial_to_q(sig, monos[i]));
                    images.insert(via.machine_str());
                    direct.insert(lists[i].machine_str());
                }
                c.require(images.size() == monos.size(), "epsilon not injective at " + sig.str());
                c.require(images == direct, "epsilon not onto the lists at " + sig.str());
            }
}

// 3. Pairing matrices: square, nonsingular, block lower triangular.
void criterion_pairing(Check& c) {
    for (int n = 0; n <= 4; ++n)
        for (int s = 0; s <= 1; ++s)
            for (const auto& ranks : rank_lists_up_to(2)) {
                Signature sig{n, s, ranks};
                PairingMatrix m = pairing_matrix(sig);
                c.require(m.basis.size() == m.monomials.size(), "not square at " + sig.str());
                c.require(m.det != 0, "singular at " + sig.str());
                c.require(check_triangular(m), "not block triangular at " + sig.str());
            }
    PairingMatrix m1 = pairing_matrix(Signature{1, 0, {1}});
    c.require(m1.entries.at(0, 0) == 2 && m1.entries.at(0, 1) == 0 &&
                  m1.entries.at(1, 0) == 2 && m1.entries.at(1, 1) == 1,
              "M_{1,[1]} != [[2,0],[2,1]]");
}

// 4. Pinned intersection numbers.
void criterion_intersections(Check& c) {
    TowerVariety p2 = build_projective_product(P({2}));
    GradedPoly cp2 = p2.total_chern_tangent();
    c.require(p2.integrate(cp2.graded_part(2)) == 3, "c2(P^2) != 3");
    c.require(p2.integrate(cp2.graded_part(1).pow(2)) == 9, "c1^2(P^2) != 9");

    TowerVariety p1p1 = build_projective_product(P({1, 1}));
    GradedPoly cq = p1p1.total_chern_tangent();
    c.require(p1p1.integrate(cq.graded_part(1).pow(2)) == 8, "c1^2(P^1xP^1) != 8");
    c.require(p1p1.integrate(cq.graded_part(2)) == 4, "Euler(P^1xP^1) != 4");

    TowerVariety f1 = build_projective_bundle(build_projective_product(P({1})),
                                              BundleSpec{{LineBundleExpr{}, LineBundleExpr{{-1}}}});
    GradedPoly cf = f1.total_chern_tangent();
    c.require(f1.integrate(cf.graded_part(1).pow(2)) == 8, "c1^2(F1) != 8");
    c.require(f1.integrate(cf.graded_part(2)) == 4, "Euler(F1) != 4");

    for (int n = 1; n <= 4; ++n) {
        TowerVariety pn = build_projective_product(P({n}));
        c.require(pn.integrate(pn.total_chern_tangent().graded_part(n)) == n + 1,
                  "Euler(P^n) != n+1");
    }

    for (int d = 1; d <= 5; ++d) {
        ChernVector v = plane_vector(d);
        bool match = chern_value(v, "c1E1^2") == d * d &&
                     chern_value(v, "c1T*c1E1") == 3 * d &&   // L.K = -3d
                     chern_value(v, "c1T^2") == 9 && chern_value(v, "c2T") == 3 &&
                     chern_value(v, "c1D1^2") == 1 && chern_value(v, "c1D1*c1E1") == d &&
                     chern_value(v, "c1T*c1D1") == 3;         // D.K = -3
        c.require(match, "Chern vector of (P^2, line, O(" + std::to_string(d) + ")) wrong");
    }
}

// 5. Decomposition round-trips.
void criterion_decompose(Check& c) {
    TowerVariety p1 = build_projective_product(P({1}));
    ChernVector conic = chern_vector(p1, {}, {BundleSpec{{LineBundleExpr{{2}}}}});
    auto coords = decompose(conic);
    c.require(coords.size() == 2 && coords[0].second == -1 && coords[1].second == 2,
              "[P^1, O(2)] != -1*psi((1);-) + 2*psi((1);(1))");

    std::mt19937 rng(101);
    std::uniform_int_distribution<long> num(-40, 40), den(1, 9);
    for (Signature sig : {Signature{1, 0, {1}}, Signature{2, 0, {1}}, Signature{2, 1, {1}},
                          Signature{3, 0, {2}}}) {
        size_t dim = enumerate_chern_monomials(sig).size();
        for (int trial = 0; trial < 100; ++trial) {
            ChernVector v = zero_chern_vector(sig);
            for (size_t i = 0; i < dim; ++i)
                v.values[i] = make_rational(num(rng), den(rng));
            if (!(recombine(sig, decompose(v)) == v)) {
                c.require(false, "round-trip failed at " + sig.str());
                return;
            }
        }
    }
}

// 6. The normal-cone relation: additivity and the series identity.
void criterion_degeneration(Check& c) {
    CoeffTable table = kp_surface_table();
    for (int d = 1; d <= 5; ++d) {
        auto data = fixtures::normal_cone_of_line(d);
        c.require(dpr_check(data.n0, data.n1, data.n2, data.n3),
                  "additivity fails at d=" + std::to_string(d));
        c.require(degeneration_identity_check(table, data.n0, data.n1, data.n2, data.n3, 4),
                  "series identity fails at d=" + std::to_string(d));
    }
}

// 7. Singularity invariants.
void criterion_icis(Check& c) {
    c.require(tjurina(parse_germ("x^2 + y^2")) == 1, "tau(node) != 1");
    for (int k = 2; k <= 6; ++k)
        c.require(tjurina(parse_germ("t^" + std::to_string(k), {"t"})) == k - 1,
                  "tau(t^k) != k-1");
    c.require(tjurina(parse_germ("x^3 + y^3")) == 4, "tau(triple point) != 4");

    c.require(determinacy_bound(parse_germ("x^2 + y^2")) == 2, "bound(node) != 2");
    for (int k = 2; k <= 6; ++k)
        c.require(determinacy_bound(parse_germ("t^" + std::to_string(k), {"t"})) == k,
                  "bound(t^k) != k");
    c.require(determinacy_bound(parse_germ("x^3 + y^3")) == 3, "bound(triple point) != 3");

    c.require(length_N(parse_germ("x^2 + y^2"), 2) == 5, "N(node) != 5 at k=2");

    for (const char* germ : {"x^2 + y^2", "x^3 + y^2", "x^4 + y^2", "x^5 + y^2", "x^6 + y^2",
                             "x^3 + y^3"}) {
        GermMap f = parse_germ(germ);
        c.require(tjurina(f) == milnor_number(f),
                  std::string("tau != mu for quasi-homogeneous ") + germ);
    }
}

// 8. Recursion oracle against the universal polynomial.
void criterion_severi(Check& c) {
    for (int d = 3; d <= 8; ++d)
        c.require(severi(severi_state(d, 1)) == 3 * (d - 1) * (d - 1),
                  "N^{d,1} != 3(d-1)^2 at d=" + std::to_string(d));
    c.require(severi(severi_state(3, 1)) == 12, "N^{3,1} != 12");
    c.require(severi(severi_state(4, 2)) == 225, "N^{4,2} != 225");

    // the universal polynomial for one node evaluated on the plane equals
    // the recursion value
    CoeffTable table = kp_surface_table();
    TypeMultiset node;
    node.delta["A1"] = 1;
    GradedPoly a_node = universal_polynomial(table, node);
    for (int d = 3; d <= 8; ++d)
        c.require(a_node.evaluate(plane_vector(d).values) == Rational(severi(severi_state(d, 1))),
                  "universal polynomial disagrees with the recursion at d=" + std::to_string(d));

    auto leading = [&](int delta, int dmin, int dmax, int degree) {
        std::vector<std::pair<int, Int>> samples;
        for (int d = dmin; d <= dmax; ++d)
            samples.emplace_back(d, severi(severi_state(d, delta)));
        return leading_coefficient(fit_polynomial(samples, degree));
    };
    c.require(leading(0, 1, 3, 0) == 1, "leading(delta=0) != 1");
    c.require(leading(1, 3, 8, 2) == 3, "leading(delta=1) != 3");
    c.require(leading(2, 4, 9, 4) == make_rational(9, 2), "leading(delta=2) != 9/2");
    c.require(leading(3, 6, 13, 6) == make_rational(27, 6), "leading(delta=3) != 27/6");
}

// 9. Series algebra.
void criterion_series(Check& c) {
    std::mt19937 rng(211);
    std::uniform_int_distribution<long> coeff(-3, 3);
    std::uniform_int_distribution<long> num(-5, 5), den(1, 4);
    Signature sig{2, 1, {1}};
    size_t dim = enumerate_chern_monomials(sig).size();

    for (int trial = 0; trial < 100; ++trial) {
        CoeffTable table(sig);
        std::vector<TypeMultiset> keys(4);
        keys[0].delta["s1"] = 1;
        keys[1].delta["s2"] = 1;
        keys[2].beta["b1"] = 1;
        keys[3].beta["b1"] = 1;
        keys[3].delta["s1"] = 1;
        for (const TypeMultiset& key : keys) {
            GradedPoly value(table.theta_table());
            for (size_t j = 0; j < dim; ++j) {
                long cf = coeff(rng);
                if (cf)
                    value += GradedPoly::variable(table.theta_table(), j) * make_rational(cf);
            }
            table.set_entry(key, value);
        }
        ChernVector u = zero_chern_vector(sig), w = zero_chern_vector(sig);
        for (size_t i = 0; i < dim; ++i) {
            u.values[i] = make_rational(num(rng), den(rng));
            w.values[i] = make_rational(num(rng), den(rng));
        }
        GenSeries lhs = exp_series(table, chern_add(u, w), 3);
        GenSeries rhs = series_mul(exp_series(table, u, 3), exp_series(table, w, 3));
        if (!series_equal(lhs, rhs)) {
            c.require(false, "homomorphism fails at trial " + std::to_string(trial));
            return;
        }
        c.require(series_coefficient(lhs, TypeMultiset{}) == 1, "constant term != 1");
    }

    // singleton-only data: leading terms equal universal polynomials, bound 4
    CoeffTable table = kp_surface_table();
    for (int b = 0; b <= 4; ++b)
        for (int a1 = 0; a1 + b <= 4; ++a1)
            for (int d4 = 0; a1 + b + d4 <= 4; ++d4) {
                if (a1 + b + d4 == 0)
                    continue;
                TypeMultiset m;
                if (b)
                    m.beta["tan2"] = b;
                if (a1)
                    m.delta["A1"] = a1;
                if (d4)
                    m.delta["D4"] = d4;
                if (!(leading_term(table, m) == universal_polynomial(table, m))) {
                    c.require(false, "leading term != universal polynomial at " + m.str());
                    return;
                }
            }

    for (int d = 1; d <= 4; ++d)
        c.require(series_coefficient(exp_series(table, plane_vector(d), 3), TypeMultiset{}) == 1,
                  "empty-multiset coefficient != 1");
}

} // namespace

int main() {
    struct Criterion {
        int id;
        const char* label;
        std::function<void(Check&)> run;
    };
    std::vector<Criterion> criteria = {
        {1, "basis counts match the displayed sets", criterion_basis_counts},
        {2, "dimension equality and bijection sweep (n<=6, s<=2, sum r<=3)", criterion_bijection},
        {3, "pairing matrices square/nonsingular/triangular (n<=4, s<=1, sum r<=2)",
         criterion_pairing},
        {4, "pinned intersection numbers and plane Chern vectors", criterion_intersections},
        {5, "decomposition round-trips (100 random vectors per signature)", criterion_decompose},
        {6, "normal-cone relation: additivity + series identity (d=1..5, bound 4)",
         criterion_degeneration},
        {7, "singularity invariants (tau, determinacy, lengths, tau=mu)", criterion_icis},
        {8, "recursion oracle vs universal polynomial (N^{d,1}=3(d-1)^2, fits)",
         criterion_severi},
        {9, "series algebra (homomorphism, leading terms, constant term)", criterion_series},
    };

    int failures = 0;
    for (const Criterion& criterion : criteria) {
        Check check;
        auto start = std::chrono::steady_clock::now();
        try {
            criterion.run(check);
        } catch (const std::exception& e) {
            check.require(false, std::string("exception: ") + e.what());
        }
        auto stop = std::chrono::steady_clock::now();
        double seconds = std::chrono::duration<double>(stop - start).count();
        std::printf("criterion %d: %s (%.2fs) %s%s%s\n", criterion.id,
                    check.ok ? "PASS" : "FAIL", seconds, criterion.label,
                    check.ok ? "" : " -- ", check.ok ? "" : check.detail.c_str());
        if (!check.ok)
            ++failures;
    }
    if (failures == 0)
        std::printf("acceptance: all %zu criteria passed\n", criteria.size());
    else
        std::printf("acceptance: %d criteria FAILED\n", failures);
    return failures == 0 ? 0 : 1;
}
