#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "p3lie/search.hpp"
#include "testutil.hpp"

using namespace p3lie;
using namespace p3lie::testutil;

namespace {

SearchTemplate goldenTemplate() {
    // bracket pinned to [e1,e2,e3] = e1; the six product slots (2,2,l) and
    // (3,3,l) range over {0, 1, -3}; target family transposed
    SearchTemplate t;
    t.dim = 3;
    t.fixed.emplace_back(SlotRef{true, {0, 1, 2, 0}}, Scalar(1));
    for (int i : {1, 2})
        for (int l = 0; l < 3; ++l) t.freeSlots.push_back(SlotRef{false, {i, i, l, 0}});
    t.coefficients = {Scalar(0), Scalar(1), Scalar(-3)};
    t.families = {Family::Transposed};
    return t;
}

}  // namespace

TEST_CASE("the golden template rediscovers the stated assignment") {
    auto hits = enumerate_structures(goldenTemplate());
    CHECK(!hits.empty());
    Algebra t3 = goldenT3();
    bool found = false;
    for (const SearchHit& h : hits) {
        CHECK(validate(h.algebra, Family::Transposed).allPass());  // soundness
        if (h.algebra.sameConstants(t3)) {
            found = true;
            CHECK(h.assignment ==
                  std::vector<Scalar>{Scalar(1), Scalar(0), Scalar(0), Scalar(-3), Scalar(0),
                                      Scalar(0)});
        }
    }
    CHECK(found);
}

TEST_CASE("zero coefficients yield exactly the zero algebra") {
    SearchTemplate t;
    t.dim = 2;
    t.freeSlots.push_back(SlotRef{false, {0, 0, 0, 0}});
    t.freeSlots.push_back(SlotRef{false, {0, 1, 1, 0}});
    t.coefficients = {Scalar(0)};
    t.families = {Family::Poisson};
    auto hits = enumerate_structures(t);
    REQUIRE(hits.size() == 1);
    CHECK(hits[0].algebra.sameConstants(Algebra::zero(2)));
}

TEST_CASE("below dimension three every nonzero bracket slot is rejected") {
    SearchTemplate t;
    t.dim = 2;
    CHECK_THROWS_AS(
        [&] {
            t.freeSlots.push_back(SlotRef{true, {0, 0, 1, 0}});
            enumerate_structures(t);
        }(),
        InputError);  // a repeated index cannot carry a free slot
}

TEST_CASE("deduplication collapses assignments with equal constants") {
    // two slots whose values land in symmetric positions of a dim-1 product
    SearchTemplate t;
    t.dim = 3;
    t.freeSlots.push_back(SlotRef{false, {0, 0, 0, 0}});
    t.coefficients = {Scalar(1), Scalar(1)};  // duplicate coefficient list
    t.families = {};
    auto hits = enumerate_structures(t);
    CHECK(hits.size() == 1);
}

TEST_CASE("budget violations are refused with the required count") {
    SearchTemplate t = goldenTemplate();
    t.budget = 100;  // 3^6 = 729 candidates
    try {
        enumerate_structures(t);
        FAIL("expected BudgetError");
    } catch (const BudgetError& e) {
        CHECK(e.required == 729);
    }
}

TEST_CASE("identical templates yield identical streams") {
    auto a = enumerate_structures(goldenTemplate());
    auto b = enumerate_structures(goldenTemplate());
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].assignment == b[i].assignment);
        CHECK(a[i].algebra.sameConstants(b[i].algebra));
    }
}

TEST_CASE("planted valid assignments are always emitted") {
    Rng rng(101);
    for (int iter = 0; iter < 10; ++iter) {
        Algebra seed = randomValidAlgebra(rng, 2, Family::Poisson);
        SearchTemplate t;
        t.dim = 2;
        // expose two product slots of the seed as free, pin nothing
        t.freeSlots.push_back(SlotRef{false, {0, 0, 0, 0}});
        t.freeSlots.push_back(SlotRef{false, {0, 1, 0, 0}});
        t.coefficients = {Scalar(0), seed.product.at3(0, 0, 0), seed.product.at3(0, 1, 0)};
        t.families = {Family::Poisson};
        Algebra expect = Algebra::zero(2);
        expect.product.at3(0, 0, 0) = seed.product.at3(0, 0, 0);
        expect.product.at3(0, 1, 0) = seed.product.at3(0, 1, 0);
        expect.product.at3(1, 0, 0) = seed.product.at3(0, 1, 0);
        if (!validate(expect, Family::Poisson).allPass()) continue;
        bool found = false;
        for (const SearchHit& h : enumerate_structures(t))
            if (h.algebra.sameConstants(expect)) found = true;
        CHECK(found);
    }
}

TEST_CASE("overlapping slot orbits are rejected") {
    SearchTemplate t;
    t.dim = 3;
    t.fixed.emplace_back(SlotRef{false, {0, 1, 0, 0}}, Scalar(1));
    t.freeSlots.push_back(SlotRef{false, {1, 0, 0, 0}});  // same orbit as the fixed slot
    t.coefficients = {Scalar(0), Scalar(1)};
    CHECK_THROWS_AS(enumerate_structures(t), InputError);
}
