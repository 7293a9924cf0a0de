#ifndef P3LIE_TESTUTIL_HPP
#define P3LIE_TESTUTIL_HPP

#include <optional>
#include <random>

#include "p3lie/coalgebra.hpp"
#include "p3lie/matched_pair.hpp"
#include "p3lie/representation.hpp"

namespace p3lie::testutil {

using Rng = std::mt19937_64;

// mostly zero, small numerators/denominators
inline Scalar randomScalar(Rng& rng) {
    static const Scalar pool[] = {Scalar(0), Scalar(0), Scalar(0), Scalar(1),  Scalar(-1),
                                  Scalar(2), Scalar(1, 2), Scalar(-1, 3), Scalar(3)};
    return pool[rng() % (sizeof(pool) / sizeof(pool[0]))];
}

inline Scalar randomNonzeroScalar(Rng& rng) {
    Scalar s;
    do { s = randomScalar(rng); } while (s.isZero());
    return s;
}

// sparse random structure constants with the symmetry closures applied
inline Algebra randomAlgebra(Rng& rng, int dim, int productEntries, int bracketEntries) {
    Algebra a = Algebra::zero(dim);
    for (int e = 0; e < productEntries && dim > 0; ++e) {
        int i = static_cast<int>(rng() % dim), j = static_cast<int>(rng() % dim),
            l = static_cast<int>(rng() % dim);
        Scalar v = randomScalar(rng);
        a.product.at3(i, j, l) = v;
        a.product.at3(j, i, l) = v;
    }
    for (int e = 0; e < bracketEntries && dim >= 3; ++e) {
        int i = static_cast<int>(rng() % dim), j = static_cast<int>(rng() % dim),
            k = static_cast<int>(rng() % dim), l = static_cast<int>(rng() % dim);
        if (i == j || j == k || i == k) continue;
        Scalar v = randomScalar(rng);
        const int perm[6][3] = {{i, j, k}, {j, k, i}, {k, i, j}, {j, i, k}, {i, k, j}, {k, j, i}};
        const int sgn[6] = {1, 1, 1, -1, -1, -1};
        for (int p = 0; p < 6; ++p)
            a.bracket.at4(perm[p][0], perm[p][1], perm[p][2], l) = sgn[p] > 0 ? v : -v;
    }
    return a;
}

// rejection-samples a family-valid algebra; falls back to the zero algebra
inline Algebra randomValidAlgebra(Rng& rng, int dim, Family family, int tries = 60) {
    for (int t = 0; t < tries; ++t) {
        Algebra a = randomAlgebra(rng, dim, 1 + static_cast<int>(rng() % 3),
                                  static_cast<int>(rng() % 2));
        if (validate(a, family).allPass()) return a;
    }
    return Algebra::zero(dim);
}

inline Representation randomRepresentation(Rng& rng, const Algebra& base, int carrier,
                                           int entries) {
    Representation rep = Representation::zero(base, carrier);
    const int n = base.dim;
    for (int e = 0; e < entries && carrier > 0 && n > 0; ++e) {
        int r = static_cast<int>(rng() % carrier), c = static_cast<int>(rng() % carrier);
        if (rng() % 2 == 0) {
            rep.mu[rng() % n].at(r, c) = randomScalar(rng);
        } else if (n >= 2) {
            int i = static_cast<int>(rng() % n), j = static_cast<int>(rng() % n);
            if (i == j) continue;
            Scalar v = randomScalar(rng);
            rep.rho[i][j].at(r, c) = v;
            rep.rho[j][i].at(r, c) = -v;
        }
    }
    return rep;
}

inline MatchedPair randomMatchedPair(Rng& rng, const Algebra& a, const Algebra& b, int entries) {
    MatchedPair mp = MatchedPair::zero(a, b);
    const int n = a.dim, p = b.dim;
    for (int e = 0; e < entries; ++e) {
        switch (rng() % 4) {
            case 0:
                if (n > 0 && p > 0)
                    mp.muA[rng() % n].at(rng() % p, rng() % p) = randomScalar(rng);
                break;
            case 1:
                if (n > 0 && p > 0)
                    mp.muB[rng() % p].at(rng() % n, rng() % n) = randomScalar(rng);
                break;
            case 2:
                if (n >= 2 && p > 0) {
                    int i = static_cast<int>(rng() % n), j = static_cast<int>(rng() % n);
                    if (i == j) break;
                    int r = static_cast<int>(rng() % p), cc = static_cast<int>(rng() % p);
                    Scalar v = randomScalar(rng);
                    mp.rhoA[i][j].at(r, cc) = v;
                    mp.rhoA[j][i].at(r, cc) = -v;
                }
                break;
            default:
                if (p >= 2 && n > 0) {
                    int i = static_cast<int>(rng() % p), j = static_cast<int>(rng() % p);
                    if (i == j) break;
                    int r = static_cast<int>(rng() % n), cc = static_cast<int>(rng() % n);
                    Scalar v = randomScalar(rng);
                    mp.rhoB[i][j].at(r, cc) = v;
                    mp.rhoB[j][i].at(r, cc) = -v;
                }
        }
    }
    return mp;
}

inline Coalgebra randomCoalgebra(Rng& rng, int dim, int entries2, int entries3) {
    Coalgebra co = Coalgebra::zero(dim);
    for (int e = 0; e < entries2 && dim > 0; ++e) {
        int k = static_cast<int>(rng() % dim), i = static_cast<int>(rng() % dim),
            j = static_cast<int>(rng() % dim);
        Scalar v = randomScalar(rng);
        co.cop2.at3(k, i, j) = v;
        co.cop2.at3(k, j, i) = v;
    }
    for (int e = 0; e < entries3 && dim >= 3; ++e) {
        int k = static_cast<int>(rng() % dim), i = static_cast<int>(rng() % dim),
            j = static_cast<int>(rng() % dim), l = static_cast<int>(rng() % dim);
        if (i == j || j == l || i == l) continue;
        Scalar v = randomScalar(rng);
        const int perm[6][3] = {{i, j, l}, {j, l, i}, {l, i, j}, {j, i, l}, {i, l, j}, {l, j, i}};
        const int sgn[6] = {1, 1, 1, -1, -1, -1};
        for (int p = 0; p < 6; ++p)
            co.cop3.at4(k, perm[p][0], perm[p][1], perm[p][2]) = sgn[p] > 0 ? v : -v;
    }
    return co;
}

// fully random tensors, no closure; exercises law-failure paths
inline Coalgebra randomRawCoalgebra(Rng& rng, int dim, int entries) {
    Coalgebra co = Coalgebra::zero(dim);
    for (int e = 0; e < entries && dim > 0; ++e) {
        if (rng() % 2 == 0)
            co.cop2.at3(rng() % dim, rng() % dim, rng() % dim) = randomScalar(rng);
        else
            co.cop3.at4(rng() % dim, rng() % dim, rng() % dim, rng() % dim) = randomScalar(rng);
    }
    return co;
}

// goldens built in code, independent of the fixture files
inline Algebra goldenT3() {
    Algebra a = Algebra::zero(3);
    a.product.at3(1, 1, 0) = Scalar(1);
    a.product.at3(2, 2, 0) = Scalar(-3);
    const int perm[6][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {1, 0, 2}, {0, 2, 1}, {2, 1, 0}};
    const int sgn[6] = {1, 1, 1, -1, -1, -1};
    for (int p = 0; p < 6; ++p)
        a.bracket.at4(perm[p][0], perm[p][1], perm[p][2], 0) = Scalar(sgn[p]);
    return a;
}

inline Algebra goldenA4() {
    Algebra a = Algebra::zero(4);
    a.product.at3(1, 2, 0) = Scalar(1);
    a.product.at3(2, 1, 0) = Scalar(1);
    const int perm[6][3] = {{1, 2, 3}, {2, 3, 1}, {3, 1, 2}, {2, 1, 3}, {1, 3, 2}, {3, 2, 1}};
    const int sgn[6] = {1, 1, 1, -1, -1, -1};
    for (int p = 0; p < 6; ++p)
        a.bracket.at4(perm[p][0], perm[p][1], perm[p][2], 0) = Scalar(sgn[p]);
    return a;
}

inline Algebra goldenB4() {
    Algebra a = goldenA4();
    a.product = Tensor({4, 4, 4});
    a.product.at3(1, 1, 0) = Scalar(1);
    return a;
}

inline Coalgebra goldenB4Coalgebra() {
    Coalgebra co = Coalgebra::zero(4);
    co.cop2.at3(1, 0, 0) = Scalar(1);
    co.cop3 = Tensor({4, 4, 4, 4});
    Tensor w = wedge3(0, 2, 3, 4);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            for (int l = 0; l < 4; ++l) co.cop3.at4(1, i, j, l) = w.at3(i, j, l);
    return co;
}

}  // namespace p3lie::testutil

#endif
