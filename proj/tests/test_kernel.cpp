#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "p3lie/linalg.hpp"
#include "p3lie/polynomial.hpp"
#include "testutil.hpp"

using namespace p3lie;
using p3lie::testutil::Rng;

namespace {

// independent rank oracle: plain rational Gaussian elimination, no Bareiss
int naiveRank(Matrix m) {
    int rank = 0;
    for (int col = 0; col < m.cols() && rank < m.rows(); ++col) {
        int piv = -1;
        for (int r = rank; r < m.rows(); ++r)
            if (!m.at(r, col).isZero()) { piv = r; break; }
        if (piv < 0) continue;
        for (int c = 0; c < m.cols(); ++c) std::swap(m.at(rank, c), m.at(piv, c));
        Scalar inv = Scalar(1) / m.at(rank, col);
        for (int c = 0; c < m.cols(); ++c) m.at(rank, c) *= inv;
        for (int r = 0; r < m.rows(); ++r) {
            if (r == rank || m.at(r, col).isZero()) continue;
            Scalar f = m.at(r, col);
            for (int c = 0; c < m.cols(); ++c) m.at(r, c) -= f * m.at(rank, c);
        }
        ++rank;
    }
    return rank;
}

Matrix randomMatrix(Rng& rng, int rows, int cols) {
    Matrix m(rows, cols);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) m.at(r, c) = testutil::randomScalar(rng);
    return m;
}

}  // namespace

TEST_CASE("scalar parsing and canonical form") {
    CHECK(Scalar::parse("3/6") == Scalar(1, 2));
    CHECK(Scalar::parse("-4/2") == Scalar(-2));
    CHECK(Scalar::parse("0/7") == Scalar(0));
    CHECK(Scalar::parse("12").str() == "12");
    CHECK(Scalar::parse("-7/3").str() == "-7/3");
    CHECK(Scalar(2, 4).str() == "1/2");
    CHECK(Scalar(1, -2) == Scalar(-1, 2));  // denominator kept positive
    CHECK_THROWS_AS(Scalar::parse("1/0"), InputError);
    CHECK_THROWS_AS(Scalar::parse("1.5"), InputError);
    CHECK_THROWS_AS(Scalar::parse(""), InputError);
    CHECK_THROWS_AS(Scalar::parse("x"), InputError);
    CHECK_THROWS_AS(Scalar(1, 0), InputError);
}

TEST_CASE("scalar arithmetic is exact and reduced") {
    Rng rng(7);
    for (int iter = 0; iter < 300; ++iter) {
        long a = static_cast<long>(rng() % 41) - 20, b = static_cast<long>(rng() % 19) + 1;
        long c = static_cast<long>(rng() % 41) - 20, d = static_cast<long>(rng() % 19) + 1;
        Scalar s = Scalar(a, b) + Scalar(c, d);
        // reconstruct over the common denominator and compare after reduction
        CHECK(s == Scalar(a * d + c * b, b * d));
        CHECK(Scalar::parse(s.str()) == s);
    }
    CHECK((Scalar(1, 3) * Scalar(3)) == Scalar(1));
    CHECK((Scalar(5) / Scalar(10)) == Scalar(1, 2));
    CHECK_THROWS_AS(Scalar(1) / Scalar(0), InputError);
}

TEST_CASE("transpose_factors on simple tensors") {
    Tensor t({2, 2});
    t.at({0, 1}) = Scalar(1);  // e1 x e2
    Tensor s = transpose_factors(t, 0, 1);
    CHECK(s.at({1, 0}) == Scalar(1));
    CHECK(s.at({0, 1}) == Scalar(0));

    Tensor sym({2, 2});
    sym.at({0, 0}) = Scalar(1);  // e1 x e1 is a fixed point
    CHECK(transpose_factors(sym, 0, 1) == sym);

    Tensor r4({4, 4, 4, 4});
    r4.at({0, 1, 2, 3}) = Scalar(1);  // e1 x e2 x e3 x e4
    Tensor moved = transpose_factors(transpose_factors(r4, 0, 2), 1, 3);
    CHECK(moved.at({2, 3, 0, 1}) == Scalar(1));  // e3 x e4 x e1 x e2

    CHECK_THROWS_AS(transpose_factors(t, 0, 0), InputError);
    CHECK_THROWS_AS(transpose_factors(t, 0, 5), InputError);
}

TEST_CASE("transpose_factors is an involution") {
    Rng rng(11);
    for (int iter = 0; iter < 50; ++iter) {
        int rank = 2 + static_cast<int>(rng() % 3);
        std::vector<int> dims(rank, 3);
        Tensor t(dims);
        for (int e = 0; e < 6; ++e) {
            std::vector<int> idx(rank);
            for (int& v : idx) v = static_cast<int>(rng() % 3);
            t.at(std::span<const int>(idx.data(), idx.size())) = testutil::randomScalar(rng);
        }
        int f1 = static_cast<int>(rng() % rank), f2 = static_cast<int>(rng() % rank);
        if (f1 == f2) continue;
        CHECK(transpose_factors(transpose_factors(t, f1, f2), f1, f2) == t);
    }
}

TEST_CASE("wedge3 expansion") {
    Tensor w = wedge3(0, 2, 3, 4);  // e1 ^ e3 ^ e4
    CHECK(w.at({0, 2, 3}) == Scalar(1));
    CHECK(w.at({2, 0, 3}) == Scalar(-1));
    CHECK(w.at({2, 3, 0}) == Scalar(1));
    CHECK(w.at({3, 0, 2}) == Scalar(1));
    CHECK(w.at({0, 3, 2}) == Scalar(-1));
    CHECK(w.at({3, 2, 0}) == Scalar(-1));
    int nonzero = 0;
    for (const Scalar& s : w.data())
        if (!s.isZero()) ++nonzero;
    CHECK(nonzero == 6);

    CHECK(wedge3(0, 0, 1, 4).isZero());  // repeated index kills the wedge
    CHECK_THROWS_AS(wedge3(0, 1, 4, 4), InputError);
}

TEST_CASE("wedge3 is totally antisymmetric") {
    Rng rng(13);
    for (int iter = 0; iter < 30; ++iter) {
        int n = 3 + static_cast<int>(rng() % 3);
        int u = static_cast<int>(rng() % n), v = static_cast<int>(rng() % n),
            w = static_cast<int>(rng() % n);
        Tensor t = wedge3(u, v, w, n);
        for (auto [f1, f2] : {std::pair{0, 1}, std::pair{1, 2}, std::pair{0, 2}}) {
            Tensor s = transpose_factors(t, f1, f2);
            for (std::size_t k = 0; k < t.data().size(); ++k)
                CHECK(t.data()[k] == -s.data()[k]);
        }
    }
}

TEST_CASE("wedge3 encodes the dual bracket of the coproduct") {
    // delta(e2) = e1 ^ e3 ^ e4 dualizes to [e1*, e3*, e4*]* = e2*
    Coalgebra co = Coalgebra::zero(4);
    Tensor w = wedge3(0, 2, 3, 4);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            for (int l = 0; l < 4; ++l) co.cop3.at4(1, i, j, l) = w.at3(i, j, l);
    Algebra dual = dualize_coalgebra(co);
    CHECK(dual.bracket.at4(0, 2, 3, 1) == Scalar(1));
    Vec e1(4), e3(4), e4(4);
    e1[0] = Scalar(1);
    e3[2] = Scalar(1);
    e4[3] = Scalar(1);
    Vec out = dual.bracketVec(e1, e3, e4);
    CHECK(out[1] == Scalar(1));
    CHECK(out[0].isZero());
}

TEST_CASE("nullspace on the stated examples") {
    CHECK(nullspace(Matrix::identity(3)).empty());

    Matrix z(2, 2);
    CHECK(nullspace(z).size() == 2);

    Matrix m(2, 2);
    m.at(0, 0) = Scalar(1);
    m.at(0, 1) = Scalar(2);
    m.at(1, 0) = Scalar(2);
    m.at(1, 1) = Scalar(4);
    auto basis = nullspace(m);
    REQUIRE(basis.size() == 1);
    // proportional to (2, -1): value computed by row reduction by hand
    const Vec& v = basis[0];
    CHECK(v[0] * Scalar(-1) == v[1] * Scalar(2));
    CHECK(!isZeroVec(v));
}

TEST_CASE("nullspace vectors annihilate and count cols - rank") {
    Rng rng(17);
    for (int iter = 0; iter < 120; ++iter) {
        int rows = 1 + static_cast<int>(rng() % 5), cols = 1 + static_cast<int>(rng() % 5);
        Matrix m = randomMatrix(rng, rows, cols);
        auto basis = nullspace(m);
        CHECK(static_cast<int>(basis.size()) == cols - naiveRank(m));
        CHECK(rank(m) == naiveRank(m));
        for (const Vec& v : basis) CHECK(isZeroVec(m.apply(v)));
    }
}

TEST_CASE("determinant agrees with cofactor expansion on small matrices") {
    Rng rng(19);
    for (int iter = 0; iter < 60; ++iter) {
        Matrix m = randomMatrix(rng, 3, 3);
        Scalar byCofactor;
        const int perm[6][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {1, 0, 2}, {0, 2, 1}, {2, 1, 0}};
        const int sgn[6] = {1, 1, 1, -1, -1, -1};
        for (int p = 0; p < 6; ++p) {
            Scalar term = m.at(0, perm[p][0]) * m.at(1, perm[p][1]) * m.at(2, perm[p][2]);
            byCofactor += sgn[p] > 0 ? term : -term;
        }
        CHECK(determinant(m) == byCofactor);
    }
    CHECK(determinant(Matrix::identity(4)) == Scalar(1));
    CHECK_THROWS_AS(determinant(Matrix(2, 3)), InputError);
}

TEST_CASE("generic determinant over a matrix pencil") {
    // det(t0 I + t1 N) with N nilpotent = t0^2
    Matrix id = Matrix::identity(2);
    Matrix nil(2, 2);
    nil.at(0, 1) = Scalar(1);
    Polynomial p = generic_determinant({id, nil}, 2);
    CHECK(!p.isZero());
    CHECK(p.evaluate({Scalar(3), Scalar(5)}) == Scalar(9));
    CHECK(p.evaluate({Scalar(0), Scalar(7)}) == Scalar(0));

    // a single antisymmetric 3x3 matrix is always singular
    Matrix anti(3, 3);
    anti.at(0, 1) = Scalar(1);
    anti.at(1, 0) = Scalar(-1);
    anti.at(1, 2) = Scalar(2);
    anti.at(2, 1) = Scalar(-2);
    CHECK(generic_determinant({anti}, 3).isZero());

    // and the polynomial matches the plain determinant on random evaluations
    Rng rng(23);
    std::vector<Matrix> basis{randomMatrix(rng, 3, 3), randomMatrix(rng, 3, 3),
                              randomMatrix(rng, 3, 3)};
    Polynomial q = generic_determinant(basis, 3);
    for (int iter = 0; iter < 20; ++iter) {
        Vec pt{testutil::randomScalar(rng), testutil::randomScalar(rng),
               testutil::randomScalar(rng)};
        Matrix combo(3, 3);
        for (int k = 0; k < 3; ++k) combo.addScaledMatrix(pt[k], basis[k]);
        CHECK(q.evaluate(pt) == determinant(combo));
    }
}
