#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "p3lie/manin.hpp"
#include "testutil.hpp"

using namespace p3lie;
using namespace p3lie::testutil;

TEST_CASE("one-sided pairs pass their algebra's families") {
    Algebra a4 = goldenA4();
    MatchedPair mp = MatchedPair::zero(a4, Algebra::zero(0));
    for (Family f : {Family::Poisson, Family::Transposed, Family::Admissible})
        CHECK(check_matched_pair(mp, f).allPass());

    MatchedPair mpAb = MatchedPair::zero(a4, Algebra::zero(2));
    for (Family f : {Family::Poisson, Family::Transposed, Family::Admissible})
        CHECK(check_matched_pair(mpAb, f).allPass());
}

TEST_CASE("the coadjoint pair of the golden bundle is an admissible matched pair") {
    Algebra b4 = goldenB4();
    Algebra dual = dualize_coalgebra(goldenB4Coalgebra());
    MatchedPair mp = coadjoint_pair(b4, dual);
    CHECK(check_matched_pair(mp, Family::Admissible).allPass());
    // and therefore a matched pair of both weaker kinds
    CHECK(check_matched_pair(mp, Family::Poisson).allPass());
    CHECK(check_matched_pair(mp, Family::Transposed).allPass());
    CHECK(check_matched_pair(mp, Family::CommAssoc).allPass());
    CHECK(check_matched_pair(mp, Family::ThreeLie).allPass());
}

TEST_CASE("a perturbed coadjoint pair fails with a witness") {
    Algebra b4 = goldenB4();
    MatchedPair mp = coadjoint_pair(b4, dualize_coalgebra(goldenB4Coalgebra()));
    mp.rhoB[0][2].at(1, 1) += Scalar(1);
    LawReport r = check_matched_pair(mp, Family::Admissible);
    CHECK(!r.allPass());
    bool haveWitness = false;
    for (const auto& [name, result] : r.entries())
        if (!result.pass && result.witness) haveWitness = true;
    CHECK(haveWitness);
    // cross-check against the sum oracle
    CHECK(!validate(matched_pair_sum(mp), Family::Admissible).allPass());
}

TEST_CASE("matched pair sum with zero maps is the direct sum") {
    Rng rng(59);
    for (int iter = 0; iter < 20; ++iter) {
        Algebra a = randomAlgebra(rng, 1 + rng() % 3, rng() % 3, rng() % 2);
        Algebra b = randomAlgebra(rng, 1 + rng() % 3, rng() % 3, rng() % 2);
        CHECK(matched_pair_sum(MatchedPair::zero(a, b)).sameConstants(direct_sum(a, b)));
    }
}

TEST_CASE("coadjoint pair sum equals the double construction") {
    Algebra b4 = goldenB4();
    Coalgebra co = goldenB4Coalgebra();
    MatchedPair mp = coadjoint_pair(b4, dualize_coalgebra(co));
    CHECK(matched_pair_sum(mp).sameConstants(double_construct(b4, co).algebra));

    // with zero coproducts the sum is the semidirect product by the coadjoint
    Algebra a4 = goldenA4();
    MatchedPair mpz = coadjoint_pair(a4, Algebra::zero(4));
    Algebra sum = matched_pair_sum(mpz);
    auto coadj = dual_representation(adjoint_representation(a4), Family::Poisson);
    CHECK(sum.sameConstants(semidirect_product(coadj.rep)));
    CHECK(validate(sum, Family::Poisson).allPass());
}

TEST_CASE("theorem harness agrees on golden, trivial, and perturbed pairs") {
    Algebra b4 = goldenB4();
    MatchedPair mp = coadjoint_pair(b4, dualize_coalgebra(goldenB4Coalgebra()));
    EquivalenceReport eq = verify_matched_pair_theorem(mp, Family::Admissible);
    CHECK(eq.agree());
    CHECK(eq.allPass());

    MatchedPair trivial = MatchedPair::zero(goldenA4(), goldenA4());
    EquivalenceReport eqT = verify_matched_pair_theorem(trivial, Family::Poisson);
    CHECK(eqT.agree());
    CHECK(eqT.allPass());

    MatchedPair bad = mp;
    bad.muA[1].at(0, 0) += Scalar(2);
    EquivalenceReport eqB = verify_matched_pair_theorem(bad, Family::Admissible);
    CHECK(eqB.agree());
    CHECK(!eqB.allPass());
}

TEST_CASE("theorem harness agrees on seeded random pairs for all five families") {
    Rng rng(61);
    int allPass = 0, total = 0;
    for (int iter = 0; iter < 40; ++iter) {
        Family fv = kAllFamilies[iter % 5];
        Algebra a = randomValidAlgebra(rng, 1 + rng() % 2, fv);
        Algebra b = randomValidAlgebra(rng, 1 + rng() % 2, fv);
        MatchedPair mp = randomMatchedPair(rng, a, b, 1 + rng() % 4);
        for (Family g : kAllFamilies) {
            EquivalenceReport eq = verify_matched_pair_theorem(mp, g);
            CHECK(eq.agree());
            ++total;
            if (eq.allPass()) ++allPass;
        }
    }
    CHECK(allPass > 0);
    CHECK(allPass < total);
}

TEST_CASE("admissible pairs are poisson and transposed pairs on random instances") {
    Rng rng(67);
    int found = 0;
    for (int iter = 0; iter < 80 && found < 12; ++iter) {
        Algebra a = randomValidAlgebra(rng, 1 + rng() % 2, Family::Admissible);
        Algebra b = randomValidAlgebra(rng, 1 + rng() % 2, Family::Admissible);
        MatchedPair mp = (iter % 3 == 0) ? MatchedPair::zero(a, b)
                                         : randomMatchedPair(rng, a, b, 1 + rng() % 2);
        if (!check_matched_pair(mp, Family::Admissible).allPass()) continue;
        ++found;
        CHECK(check_matched_pair(mp, Family::Poisson).allPass());
        CHECK(check_matched_pair(mp, Family::Transposed).allPass());
    }
    CHECK(found >= 5);
}
