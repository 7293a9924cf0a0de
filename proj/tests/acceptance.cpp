#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <chrono>
#include <iostream>

#include "p3lie/io.hpp"
#include "p3lie/manin.hpp"
#include "testutil.hpp"

using namespace p3lie;
using namespace p3lie::testutil;

namespace {

std::string fixture(const std::string& name) {
    return std::string(P3LIE_FIXTURES_DIR) + "/" + name;
}

struct Criterion {
    int number;
    const char* name;
    double limitSeconds;
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

    ~Criterion() = default;
    void done(bool pass) {
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                          .count();
        std::cout << "[criterion " << number << "] " << name << ": "
                  << (pass ? "PASS" : "FAIL") << " (" << static_cast<long>(secs * 1000.0)
                  << " ms, limit " << static_cast<long>(limitSeconds * 1000.0) << " ms)"
                  << std::endl;
        CHECK(pass);
        CHECK(secs < limitSeconds);
    }
};

// independent brute force of the Filippov-Jacobi identity on basis tuples
Vec oracleBracket(const Algebra& a, const Vec& x, const Vec& y, const Vec& z) {
    const int n = a.dim;
    Vec out(static_cast<std::size_t>(n), Scalar());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                if (x[i].isZero() || y[j].isZero() || z[k].isZero()) continue;
                for (int l = 0; l < n; ++l)
                    out[l] += x[i] * y[j] * z[k] * a.bracket.at4(i, j, k, l);
            }
    return out;
}

bool oracleJacobiHolds(const Algebra& a, int x1, int x2, int y1, int y2, int y3) {
    const int n = a.dim;
    auto basis = [&](int i) {
        Vec v(static_cast<std::size_t>(n), Scalar());
        v[i] = Scalar(1);
        return v;
    };
    Vec lhs = oracleBracket(a, basis(x1), basis(x2),
                            oracleBracket(a, basis(y1), basis(y2), basis(y3)));
    Vec rhs = oracleBracket(a, oracleBracket(a, basis(x1), basis(x2), basis(y1)), basis(y2),
                            basis(y3));
    Vec t2 = oracleBracket(a, basis(y1), oracleBracket(a, basis(x1), basis(x2), basis(y2)),
                           basis(y3));
    Vec t3 = oracleBracket(a, basis(y1), basis(y2),
                           oracleBracket(a, basis(x1), basis(x2), basis(y3)));
    for (int l = 0; l < n; ++l) rhs[l] += t2[l] + t3[l];
    return lhs == rhs;
}

std::optional<std::vector<int>> oracleJacobiFirstFailure(const Algebra& a) {
    const int n = a.dim;
    for (int x1 = 0; x1 < n; ++x1)
        for (int x2 = 0; x2 < n; ++x2)
            for (int y1 = 0; y1 < n; ++y1)
                for (int y2 = 0; y2 < n; ++y2)
                    for (int y3 = 0; y3 < n; ++y3)
                        if (!oracleJacobiHolds(a, x1, x2, y1, y2, y3))
                            return std::vector<int>{x1, x2, y1, y2, y3};
    return std::nullopt;
}

Algebra randomCommAssocZeroBracket(Rng& rng, int dim) {
    for (int t = 0; t < 60; ++t) {
        Algebra a = randomAlgebra(rng, dim, 1 + static_cast<int>(rng() % 3), 0);
        if (validate(a, Family::CommAssoc).allPass()) return a;
    }
    return Algebra::zero(dim);
}

}  // namespace

TEST_CASE("criterion 1: transposed golden passes transposed, fails poisson exactly") {
    Criterion c{1, "golden transposed example", 0.1};
    Algebra t3 = goldenT3();
    bool pass = validate(t3, Family::Transposed).allPass();
    LawReport r = validate(t3, Family::Poisson);
    pass = pass && !r.allPass();
    const LawResult* leib = r.find(law::kLeibniz);
    pass = pass && leib && !leib->pass && leib->witness.has_value();
    if (pass) {
        // the witness realizes [e2.e2, e2, e3] = e1 != 0
        pass = pass && leib->witness->indices == std::vector<int>{1, 1, 1, 2};
        Vec e1(3);
        e1[0] = Scalar(1);
        pass = pass && leib->witness->lhs == e1 && isZeroVec(leib->witness->rhs);
    }
    c.done(pass);
}

TEST_CASE("criterion 2: admissible golden passes all three families") {
    Criterion c{2, "golden admissible example", 0.1};
    Algebra a4 = goldenA4();
    bool pass = validate(a4, Family::Poisson).allPass() &&
                validate(a4, Family::Transposed).allPass() &&
                validate(a4, Family::Admissible).allPass();
    c.done(pass);
}

TEST_CASE("criterion 3: golden bundle satisfies every bialgebra condition") {
    Criterion c{3, "golden bialgebra bundle", 0.5};
    Algebra b4 = goldenB4();
    Coalgebra co = goldenB4Coalgebra();
    LawReport adm = check_bialgebra(b4, co, Family::Admissible);
    bool pass = adm.allPass();
    for (int w = 1; w <= 6; ++w) pass = pass && adm.pass("admi_bialg_" + std::to_string(w));
    pass = pass && adm.pass("dc3l_1") && adm.pass("dc3l_2") && adm.pass("infinitesimal");
    pass = pass && adm.pass("co." + std::string(colaw::kCocommutative)) &&
           adm.pass("co." + std::string(colaw::kCoassociative)) &&
           adm.pass("co." + std::string(colaw::kCop3Antisym)) &&
           adm.pass("co." + std::string(colaw::kCoJacobi)) &&
           adm.pass("co." + std::string(colaw::kCoMixedProduct)) &&
           adm.pass("co." + std::string(colaw::kCoMixedBracket));
    pass = pass && check_bialgebra(b4, co, Family::Poisson).allPass();
    c.done(pass);
}

TEST_CASE("criterion 4: dualization and the eight-dimensional double") {
    Criterion c{4, "dual algebra and double", 1.0};
    Coalgebra co = goldenB4Coalgebra();
    Algebra dual = dualize_coalgebra(co);

    // exactly e1* o e1* = e2* and [e1*, e3*, e4*]* = e2*
    Algebra expected = Algebra::zero(4);
    expected.product.at3(0, 0, 1) = Scalar(1);
    Tensor w = wedge3(0, 2, 3, 4);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            for (int l = 0; l < 4; ++l)
                expected.bracket.at4(i, j, l, 1) = w.at3(i, j, l);
    bool pass = dual.sameConstants(expected);

    SplitDouble d8 = double_construct(goldenB4(), co);
    pass = pass && d8.algebra.dim == 8;
    pass = pass && validate(d8.algebra, Family::Admissible).allPass();
    LawReport inv = check_invariance(d8.form, d8.algebra);
    pass = pass && inv.pass("symmetric") && inv.pass("product_invariant") &&
           inv.pass("bracket_invariant") && inv.pass("nondegenerate");
    pass = pass && check_manin_triple(d8).allPass();
    c.done(pass);
}

TEST_CASE("criterion 5: equivalence theorems hold instance-wise under perturbation") {
    Criterion c{5, "equivalence harness", 5.0};
    Algebra b4 = goldenB4();
    Coalgebra co = goldenB4Coalgebra();

    EquivalenceReport golden = verify_equivalence(b4, co, Family::Admissible);
    bool pass = golden.agree() && golden.allPass();
    EquivalenceReport degenerate = verify_equivalence(goldenA4(), Coalgebra::zero(4),
                                                      Family::Poisson);
    pass = pass && degenerate.agree() && degenerate.allPass();

    // single-entry edits of product, bracket, Delta, delta; each must flip
    // all three statements to FAIL while the verdicts stay in agreement
    struct Edit {
        char tensor;  // 'p', 'b', 'D', 'd'
        int i, j, k, l;
    };
    const Edit edits[] = {
        {'p', 0, 0, 0, -1}, {'p', 0, 0, 1, -1}, {'p', 0, 1, 0, -1},
        {'p', 1, 1, 1, -1}, {'p', 2, 2, 0, -1}, {'p', 3, 3, 2, -1},
        {'b', 0, 1, 2, 0},  {'b', 1, 2, 3, 0},  {'b', 1, 2, 3, 1},
        {'b', 0, 1, 2, 3},  {'b', 0, 2, 3, 0},  {'b', 1, 3, 2, 0},
        {'D', 1, 0, 1, -1}, {'D', 1, 1, 0, -1}, {'D', 0, 0, 0, -1},
        {'D', 1, 1, 1, -1}, {'D', 2, 0, 0, -1}, {'D', 3, 0, 0, -1},
        {'d', 1, 0, 2, 3},  {'d', 0, 0, 2, 3},  {'d', 1, 1, 2, 3},
        {'d', 2, 0, 2, 3},  {'d', 1, 0, 1, 2},  {'d', 3, 1, 2, 3},
    };
    int allFail = 0;
    int perKind[4] = {0, 0, 0, 0};
    for (const Edit& e : edits) {
        Algebra alg = b4;
        Coalgebra cop = co;
        int kindIdx = 0;
        switch (e.tensor) {
            case 'p': alg.product.at3(e.i, e.j, e.k) += Scalar(1); kindIdx = 0; break;
            case 'b': alg.bracket.at4(e.i, e.j, e.k, e.l) += Scalar(1); kindIdx = 1; break;
            case 'D': cop.cop2.at3(e.i, e.j, e.k) += Scalar(1); kindIdx = 2; break;
            default: cop.cop3.at4(e.i, e.j, e.k, e.l) += Scalar(1); kindIdx = 3; break;
        }
        EquivalenceReport eq = verify_equivalence(alg, cop, Family::Admissible);
        pass = pass && eq.agree();  // a disagreement is the exit-3 sentinel
        bool failedEverywhere = true;
        for (const auto& [name, report] : eq.statements)
            failedEverywhere = failedEverywhere && !report.allPass();
        if (failedEverywhere) {
            ++allFail;
            ++perKind[kindIdx];
        }
    }
    pass = pass && allFail >= 20;
    for (int k = 0; k < 4; ++k) pass = pass && perKind[k] >= 4;
    c.done(pass);
}

TEST_CASE("criterion 6: no nondegenerate invariant form on the transposed golden") {
    Criterion c{6, "invariant form solver", 1.0};
    Algebra t3 = goldenT3();
    InvariantFormSolution sol = solve_invariant_forms(t3);
    bool pass = sol.genericDet.isZero() && !sol.nondegenerateExists;
    // matching nonzero mixed product [e2.e2, e2, e3] = e1
    LawReport r = validate(t3, Family::Admissible);
    const LawResult* mixed = r.find(law::kMixedBracket);
    pass = pass && mixed && !mixed->pass && mixed->witness.has_value();
    if (pass) {
        Vec e1(3);
        e1[0] = Scalar(1);
        pass = pass && mixed->witness->indices == std::vector<int>{1, 1, 1, 2} &&
               mixed->witness->lhs == e1;
    }
    c.done(pass);
}

TEST_CASE("criterion 7: semidirect biconditional on 500 seeded instances") {
    Criterion c{7, "semidirect biconditional", 10.0};
    Rng rng(0x5eed0007);
    const Family fams[] = {Family::Poisson, Family::Transposed, Family::Admissible};
    bool pass = true;
    int passSide = 0;
    for (int iter = 0; iter < 500; ++iter) {
        Family f = fams[iter % 3];
        int dim = 1 + static_cast<int>(rng() % 3);
        int carrier = static_cast<int>(rng() % 3);
        Algebra base = randomValidAlgebra(rng, dim, f);
        Representation rep;
        switch (rng() % 4) {
            case 0: rep = adjoint_representation(base); break;
            case 1: rep = dual_representation(adjoint_representation(base), f).rep; break;
            case 2: rep = Representation::zero(base, carrier); break;
            default: rep = randomRepresentation(rng, base, carrier, 1 + rng() % 4);
        }
        for (Family g : fams) {
            bool conditions = validate_representation(rep, g).allPass();
            bool sum = validate(semidirect_product(rep), g).allPass();
            pass = pass && (conditions == sum);
            if (conditions) ++passSide;
        }
    }
    pass = pass && passSide > 100;  // both directions genuinely exercised
    c.done(pass);
}

TEST_CASE("criterion 8: matched-pair biconditional on 200 seeded pairs plus goldens") {
    Criterion c{8, "matched-pair biconditional", 10.0};
    Rng rng(0x5eed0008);
    bool pass = true;

    Algebra b4 = goldenB4();
    MatchedPair golden = coadjoint_pair(b4, dualize_coalgebra(goldenB4Coalgebra()));
    for (Family g : kAllFamilies) {
        EquivalenceReport eq = verify_matched_pair_theorem(golden, g);
        pass = pass && eq.agree();
    }

    int allPass = 0;
    for (int iter = 0; iter < 200; ++iter) {
        Family fv = kAllFamilies[iter % 5];
        Algebra a = randomValidAlgebra(rng, 1 + rng() % 2, fv);
        Algebra b = randomValidAlgebra(rng, 1 + rng() % 2, fv);
        MatchedPair mp = (iter % 7 == 0) ? MatchedPair::zero(a, b)
                                         : randomMatchedPair(rng, a, b, 1 + rng() % 4);
        for (Family g : kAllFamilies) {
            EquivalenceReport eq = verify_matched_pair_theorem(mp, g);
            pass = pass && eq.agree();
            if (eq.allPass()) ++allPass;
        }
    }
    pass = pass && allPass > 50;
    c.done(pass);
}

TEST_CASE("criterion 9: duality soundness on 200 random tensors") {
    Criterion c{9, "duality soundness", 5.0};
    Rng rng(0x5eed0009);
    const Family fams[] = {Family::CommAssoc, Family::ThreeLie, Family::Poisson,
                           Family::Admissible};
    bool pass = true;
    int passSide = 0, failSide = 0;
    for (int iter = 0; iter < 200; ++iter) {
        int dim = 1 + static_cast<int>(rng() % 3);
        Coalgebra co = (iter % 2 == 0) ? randomCoalgebra(rng, dim, rng() % 3, rng() % 2)
                                       : randomRawCoalgebra(rng, dim, 1 + rng() % 5);
        Algebra dual = dualize_coalgebra(co);
        Coalgebra rt = dualize_algebra(dual);
        pass = pass && rt.cop2 == co.cop2 && rt.cop3 == co.cop3;
        Algebra arb = randomAlgebra(rng, dim, rng() % 3, rng() % 2);
        pass = pass && dualize_coalgebra(dualize_algebra(arb)).sameConstants(arb);
        for (Family f : fams) {
            bool viaCo = validate_coalgebra(co, f).allPass();
            bool viaAlg = validate(dual, f).allPass();
            pass = pass && (viaCo == viaAlg);
            (viaCo ? passSide : failSide) += 1;
        }
    }
    pass = pass && passSide > 0 && failSide > 0;
    c.done(pass);
}

TEST_CASE("criterion 10: constructions preserve their guaranteed families") {
    Criterion c{10, "construction preservation", 5.0};
    Rng rng(0x5eed0010);
    bool pass = true;

    Algebra a4 = goldenA4(), t3 = goldenT3();
    pass = pass && validate(direct_sum(a4, a4), Family::Admissible).allPass();
    pass = pass && validate(direct_sum(t3, t3), Family::Transposed).allPass();
    Algebra c2 = Algebra::zero(2);
    c2.product.at3(0, 0, 0) = Scalar(1);
    pass = pass && validate(tensor_with_commutative(a4, c2), Family::Poisson).allPass();
    pass = pass && validate(tensor_with_commutative(t3, c2), Family::Transposed).allPass();
    for (int b = 0; b < 3; ++b) {
        Vec h(3);
        h[b] = Scalar(1);
        pass = pass && validate(h_twist(t3, h), Family::Transposed).allPass();
    }

    for (int iter = 0; iter < 100; ++iter) {
        Family f = kAllFamilies[iter % 5];
        Algebra x = randomValidAlgebra(rng, 1 + rng() % 3, f);
        Algebra y = randomValidAlgebra(rng, 1 + rng() % 3, f);
        pass = pass && validate(direct_sum(x, y), f).allPass();
    }
    for (int iter = 0; iter < 100; ++iter) {
        Family f = (iter % 2 == 0) ? Family::Poisson : Family::Transposed;
        Algebra x = randomValidAlgebra(rng, 1 + rng() % 3, f);
        Algebra y = randomCommAssocZeroBracket(rng, 1 + rng() % 2);
        pass = pass && validate(tensor_with_commutative(x, y), f).allPass();
    }
    for (int iter = 0; iter < 100; ++iter) {
        Algebra x = randomValidAlgebra(rng, 1 + rng() % 3, Family::Transposed);
        Vec h(static_cast<std::size_t>(x.dim));
        for (Scalar& s : h) s = randomScalar(rng);
        pass = pass && validate(h_twist(x, h), Family::Transposed).allPass();
    }
    c.done(pass);
}

TEST_CASE("criterion 11: enumeration rediscovers the transposed golden") {
    Criterion c{11, "search rediscovery", 5.0};
    auto tpl = std::get<SearchTemplate>(load_file(fixture("search_t3.json")));
    bool pass = true;
    bool found = false;
    Algebra t3 = goldenT3();
    for (const SearchHit& h : enumerate_structures(tpl)) {
        pass = pass && validate(h.algebra, Family::Transposed).allPass();
        if (h.algebra.sameConstants(t3)) found = true;
    }
    pass = pass && found;
    c.done(pass);
}

TEST_CASE("criterion 12: jacobi counterexample with independently confirmed witness") {
    Criterion c{12, "jacobi counterexample", 0.5};
    // dim 4 with [e1,e2,e3] = e1 and [e1,e2,e4] = e2 under antisymmetric closure
    Algebra a = Algebra::zero(4);
    const int sgn[6] = {1, 1, 1, -1, -1, -1};
    const int p1[6][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {1, 0, 2}, {0, 2, 1}, {2, 1, 0}};
    const int p2[6][3] = {{0, 1, 3}, {1, 3, 0}, {3, 0, 1}, {1, 0, 3}, {0, 3, 1}, {3, 1, 0}};
    for (int p = 0; p < 6; ++p) {
        a.bracket.at4(p1[p][0], p1[p][1], p1[p][2], 0) = Scalar(sgn[p]);
        a.bracket.at4(p2[p][0], p2[p][1], p2[p][2], 1) = Scalar(sgn[p]);
    }

    LawReport r = validate(a, Family::ThreeLie);
    bool pass = !r.allPass() && r.pass(law::kAntisymmetric);
    const LawResult* jac = r.find(law::kJacobi);
    pass = pass && jac && !jac->pass && jac->witness.has_value();

    // brute-force evaluation over all basis 5-tuples confirms the witness
    auto oracle = oracleJacobiFirstFailure(a);
    pass = pass && oracle.has_value() && jac->witness->indices == *oracle;

    // and the tuple ((e1,e3),(e1,e2,e4)) is itself a genuine violation
    pass = pass && !oracleJacobiHolds(a, 0, 2, 0, 1, 3);
    c.done(pass);
}
