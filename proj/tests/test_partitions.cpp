#include "doctest.h"

#include <algorithm>
#include <random>
#include <set>

#include "cobord/partitions.hpp"

using namespace cobord;

namespace {

Partition P(std::vector<int> parts) {
    return Partition(std::move(parts));
}

} // namespace

TEST_CASE("enumerate_partitions") {
    auto p0 = enumerate_partitions(0);
    REQUIRE(p0.size() == 1);
    CHECK(p0[0].empty());

    auto p3 = enumerate_partitions(3);
    REQUIRE(p3.size() == 3);
    CHECK(p3[0] == P({3}));
    CHECK(p3[1] == P({2, 1}));
    CHECK(p3[2] == P({1, 1, 1}));

    CHECK(enumerate_partitions(6).size() == 11); // classical p(6)

    // no duplicates, deterministic order
    auto p8 = enumerate_partitions(8);
    std::set<Partition> unique(p8.begin(), p8.end());
    CHECK(unique.size() == p8.size());
    CHECK(p8 == enumerate_partitions(8));
}

TEST_CASE("transpose is an involution") {
    std::mt19937 rng(5);
    for (int n = 0; n <= 9; ++n)
        for (const Partition& p : enumerate_partitions(n))
            CHECK(p.transpose().transpose() == p);
    CHECK(P({3, 1}).transpose() == P({2, 1, 1}));
    CHECK(P({2}).transpose() == P({1, 1}));
}

TEST_CASE("multiset operations") {
    CHECK(Partition::multiset_union(P({2, 1}), P({3, 1})) == P({3, 2, 1, 1}));
    CHECK(P({3, 2, 2, 1}).contains_submultiset(P({2, 1})));
    CHECK(!P({3, 2}).contains_submultiset(P({2, 2})));
    CHECK(P({3, 2, 2, 1}).multiset_difference(P({2, 1})) == P({3, 2}));
}

TEST_CASE("partition list validation") {
    Signature sig{3, 0, {2, 1}};
    PartitionList good{P({2, 1}), {}, {P({2}), P({1})}};
    CHECK_NOTHROW(validate_partition_list(sig, good));

    PartitionList bad_rank{P({2, 1}), {}, {P({2, 1}), P({2})}};
    // mu_2 would need a second copy of 2
    CHECK_THROWS_AS(validate_partition_list(sig, bad_rank), InvalidState);

    PartitionList too_long{P({3}), {}, {P({}), P({3, 1})}};
    CHECK_THROWS_AS(validate_partition_list(sig, too_long), RankViolation);

    Signature with_divisor{2, 1, {}};
    PartitionList two_parts{P({1, 1}), {P({1, 1})}, {}};
    CHECK_THROWS_AS(validate_partition_list(with_divisor, two_parts), RankViolation);
}

TEST_CASE("the 17 partition lists of size 3 and type (2,1)") {
    Signature sig{3, 0, {2, 1}};
    auto lists = enumerate_partition_lists(sig);
    CHECK(lists.size() == 17);

    auto pl = [](std::vector<int> l, std::vector<int> m1, std::vector<int> m2) {
        return PartitionList{Partition(std::move(l)), {},
                             {Partition(std::move(m1)), Partition(std::move(m2))}};
    };
    // the displayed set, grouped by lambda
    std::vector<PartitionList> expected = {
        pl({3}, {}, {}),       pl({3}, {3}, {}),      pl({3}, {}, {3}),
        pl({2, 1}, {}, {}),    pl({2, 1}, {2}, {}),   pl({2, 1}, {1}, {}),
        pl({2, 1}, {}, {2}),   pl({2, 1}, {}, {1}),   pl({2, 1}, {2, 1}, {}),
        pl({2, 1}, {2}, {1}),  pl({2, 1}, {1}, {2}),
        pl({1, 1, 1}, {}, {}), pl({1, 1, 1}, {1}, {}), pl({1, 1, 1}, {}, {1}),
        pl({1, 1, 1}, {1, 1}, {}), pl({1, 1, 1}, {1}, {1}), pl({1, 1, 1}, {1, 1}, {1}),
    };
    REQUIRE(expected.size() == 17);
    auto key = [](const PartitionList& x) { return x.machine_str(); };
    std::set<std::string> got, want;
    for (const auto& x : lists)
        got.insert(key(x));
    for (const auto& x : expected)
        want.insert(key(x));
    CHECK(got == want);
    CHECK(got.size() == 17);
}

TEST_CASE("partition lists with a divisor slot: the seven Chern numbers") {
    Signature sig{2, 1, {1}};
    auto lists = enumerate_partition_lists(sig);
    CHECK(lists.size() == 7);
    CHECK(enumerate_chern_monomials(sig).size() == 7);
}

TEST_CASE("empty size enumerates the empty list only") {
    Signature sig{0, 2, {1, 2}};
    auto lists = enumerate_partition_lists(sig);
    REQUIRE(lists.size() == 1);
    CHECK(lists[0].lambda.empty());
    for (const auto& pi : lists[0].pis)
        CHECK(pi.empty());
    for (const auto& mu : lists[0].mus)
        CHECK(mu.empty());
}

TEST_CASE("chern monomial enumeration") {
    Signature sig{1, 0, {1}};
    auto monos = enumerate_chern_monomials(sig);
    REQUIRE(monos.size() == 2);
    CHECK(monomial_name(sig, monos[0]) == "c1T");
    CHECK(monomial_name(sig, monos[1]) == "c1E1");

    Signature surface{2, 1, {1}};
    auto m7 = enumerate_chern_monomials(surface);
    CHECK(m7.size() == 7);

    Signature big{3, 0, {2, 1}};
    CHECK(enumerate_chern_monomials(big).size() == 17);

    // all weight n, pairwise distinct
    VarTablePtr table = chern_symbols(big);
    std::set<Exponents> seen;
    for (const auto& m : enumerate_chern_monomials(big)) {
        int w = 0;
        for (size_t i = 0; i < m.exps.size(); ++i)
            w += table->weight(i) * m.exps[i];
        CHECK(w == 3);
        seen.insert(m.exps);
    }
    CHECK(seen.size() == 17);
}

TEST_CASE("epsilon on pinned examples") {
    // ((1), [(2), {}]) with ranks [2,1] -> ((1,1,1); (1,1); {})
    Signature sig{3, 0, {2, 1}};
    QElement q{P({1}), {}, {P({2}), P({})}};
    PartitionList image = epsilon(sig, q);
    CHECK(image.lambda == P({1, 1, 1}));
    CHECK(image.mus[0] == P({1, 1}));
    CHECK(image.mus[1] == P({}));

    Signature line{1, 0, {1}};
    PartitionList single = epsilon(line, QElement{P({}), {}, {P({1})}});
    CHECK(single.lambda == P({1}));
    CHECK(single.mus[0] == P({1}));

    // a part exceeding the rank is rejected
    Signature r2{3, 0, {2}};
    CHECK_THROWS_AS(epsilon(r2, QElement{P({}), {}, {P({3})}}), RankViolation);
    // sizes must add up to n
    CHECK_THROWS_AS(epsilon(r2, QElement{P({1}), {}, {P({1})}}), SignatureMismatch);
}

TEST_CASE("epsilon is a bijection onto the partition lists") {
    // exhaustive over a sweep of signatures; the partition lists are
    // enumerated independently of the monomial/transpose route
    std::vector<Signature> sigs = {
        {3, 0, {2, 1}}, {2, 1, {1}}, {4, 0, {2}}, {4, 1, {1, 1}}, {5, 2, {1}}, {0, 0, {}},
    };
    for (const Signature& sig : sigs) {
        auto monos = enumerate_chern_monomials(sig);
        auto lists = enumerate_partition_lists(sig);
        REQUIRE(monos.size() == lists.size());
        std::set<std::string> images, direct;
        for (size_t i = 0; i < monos.size(); ++i) {
            QElement q = monomial_to_q(sig, monos[i]);
            CHECK(q_to_monomial(sig, q) == monos[i]);
            PartitionList via_eps = epsilon(sig, q);
            images.insert(via_eps.machine_str());
            direct.insert(lists[i].machine_str());
            // canonical order alignment: the i-th list corresponds to the i-th monomial
            CHECK(via_eps == lists[i]);
            CHECK(epsilon_inverse(sig, via_eps) == q);
        }
        CHECK(images.size() == monos.size()); // injective
        CHECK(images == direct);              // surjective onto the direct enumeration
    }
}

TEST_CASE("partition list serialization round-trips") {
    Signature sig{3, 0, {2, 1}};
    for (const PartitionList& pl : enumerate_partition_lists(sig)) {
        PartitionList parsed = parse_partition_list(pl.machine_str());
        CHECK(parsed == pl);
    }
    CHECK_THROWS_AS(parse_partition_list("[[2,1],[2]]"), ParseError);
    CHECK_THROWS_AS(parse_partition_list("nonsense"), ParseError);
}

TEST_CASE("size cap") {
    Signature sig{13, 0, {}};
    CHECK_THROWS_AS(enumerate_partition_lists(sig), CapExceeded);
    CHECK_THROWS_AS(enumerate_chern_monomials(sig), CapExceeded);
}
