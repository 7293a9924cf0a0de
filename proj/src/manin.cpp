#include "p3lie/manin.hpp"

#include "p3lie/linalg.hpp"

namespace p3lie {

namespace {

LawResult scanFail(std::vector<int> idx, Vec lhs, Vec rhs) {
    return LawResult::fail(Witness{std::move(idx), std::move(lhs), std::move(rhs)});
}

}  // namespace

Matrix standard_pairing(int n) {
    Matrix m(2 * n, 2 * n);
    for (int i = 0; i < n; ++i) {
        m.at(i, n + i) = Scalar(1);
        m.at(n + i, i) = Scalar(1);
    }
    return m;
}

SplitDouble double_construct(const Algebra& alg, const Coalgebra& co) {
    if (alg.dim != co.dim) throw InputError("double_construct: dim mismatch");
    const int n = alg.dim;
    const Algebra dual = dualize_coalgebra(co);
    const Tensor& a = alg.product;
    const Tensor& c = alg.bracket;
    const Tensor& b = dual.product;
    const Tensor& d = dual.bracket;

    SplitDouble out;
    out.split = n;
    out.form = standard_pairing(n);
    Algebra& dbl = out.algebra;
    dbl = Algebra::zero(2 * n);

    // product blocks
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int l = 0; l < n; ++l) {
                dbl.product.at3(i, j, l) = a.at3(i, j, l);
                dbl.product.at3(n + i, n + j, n + l) = b.at3(i, j, l);
            }
    // e_i . f_b  =  -L*(e_i) f_b  -  L*(f_b) e_i  =  sum_l a[i][l][b] f_l + sum_l b[b][l][i] e_l
    for (int i = 0; i < n; ++i)
        for (int bb = 0; bb < n; ++bb)
            for (int l = 0; l < n; ++l) {
                const Scalar& cf = a.at3(i, l, bb);
                if (!cf.isZero()) {
                    dbl.product.at3(i, n + bb, n + l) = cf;
                    dbl.product.at3(n + bb, i, n + l) = cf;
                }
                const Scalar& ce = b.at3(bb, l, i);
                if (!ce.isZero()) {
                    dbl.product.at3(i, n + bb, l) = ce;
                    dbl.product.at3(n + bb, i, l) = ce;
                }
            }

    // bracket blocks
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l) {
                    dbl.bracket.at4(i, j, k, l) = c.at4(i, j, k, l);
                    dbl.bracket.at4(n + i, n + j, n + k, n + l) = d.at4(i, j, k, l);
                }
    // one dual slot: ad*_{e_i,e_j} f_g = -sum_l c[i][j][l][g] f_l, in each slot
    // position with the bracket's slot signs
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int g = 0; g < n; ++g)
                for (int l = 0; l < n; ++l) {
                    const Scalar& cf = c.at4(i, j, l, g);
                    if (cf.isZero()) continue;
                    dbl.bracket.at4(i, j, n + g, n + l) += -cf;  // ad*_{x,y} zeta
                    dbl.bracket.at4(i, n + g, j, n + l) += cf;   // -ad*_{x,z} eta
                    dbl.bracket.at4(n + g, i, j, n + l) += -cf;  // ad*_{y,z} xi
                }
    // one primal slot: ad'*_{f_a,f_b} e_k = -sum_l d[a][b][l][k] e_l
    for (int aa = 0; aa < n; ++aa)
        for (int bb = 0; bb < n; ++bb)
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l) {
                    const Scalar& ce = d.at4(aa, bb, l, k);
                    if (ce.isZero()) continue;
                    dbl.bracket.at4(n + aa, n + bb, k, l) += -ce;  // ad'*_{xi,eta} z
                    dbl.bracket.at4(n + aa, k, n + bb, l) += ce;   // -ad'*_{xi,zeta} y
                    dbl.bracket.at4(k, n + aa, n + bb, l) += -ce;  // ad'*_{eta,zeta} x
                }
    return out;
}

LawReport check_invariance(const Matrix& form, const Algebra& alg) {
    const int n = alg.dim;
    if (form.rows() != n || form.cols() != n) throw InputError("form extent mismatch");
    LawReport report;

    {
        LawResult r = LawResult::ok();
        for (int i = 0; i < n && r.pass; ++i)
            for (int j = 0; j < n && r.pass; ++j)
                if (form.at(i, j) != form.at(j, i))
                    r = scanFail({i, j}, {form.at(i, j)}, {form.at(j, i)});
        report.add("symmetric", std::move(r));
    }
    {
        // B(x.y, z) = B(x, y.z)
        LawResult r = LawResult::ok();
        for (int x = 0; x < n && r.pass; ++x)
            for (int y = 0; y < n && r.pass; ++y)
                for (int z = 0; z < n && r.pass; ++z) {
                    Scalar lhs, rhs;
                    auto xy = alg.productRow(x, y);
                    auto yz = alg.productRow(y, z);
                    for (int m = 0; m < n; ++m) {
                        if (!xy[m].isZero()) lhs += xy[m] * form.at(m, z);
                        if (!yz[m].isZero()) rhs += yz[m] * form.at(x, m);
                    }
                    if (lhs != rhs) r = scanFail({x, y, z}, {lhs}, {rhs});
                }
        report.add("product_invariant", std::move(r));
    }
    {
        // B([x,y,z], u) = -B([x,y,u], z)
        LawResult r = LawResult::ok();
        for (int x = 0; x < n && r.pass; ++x)
            for (int y = 0; y < n && r.pass; ++y)
                for (int z = 0; z < n && r.pass; ++z)
                    for (int u = 0; u < n && r.pass; ++u) {
                        Scalar lhs, rhs;
                        auto xyz = alg.bracketRow(x, y, z);
                        auto xyu = alg.bracketRow(x, y, u);
                        for (int m = 0; m < n; ++m) {
                            if (!xyz[m].isZero()) lhs += xyz[m] * form.at(m, u);
                            if (!xyu[m].isZero()) rhs -= xyu[m] * form.at(m, z);
                        }
                        if (lhs != rhs) r = scanFail({x, y, z, u}, {lhs}, {rhs});
                    }
        report.add("bracket_invariant", std::move(r));
    }
    {
        LawResult r = LawResult::ok();
        if (determinant(form).isZero())
            r = scanFail({}, {Scalar()}, {Scalar(1)});
        report.add("nondegenerate", std::move(r));
    }
    return report;
}

LawReport check_manin_triple(const SplitDouble& d) {
    const Algebra& g = d.algebra;
    const int total = g.dim, s = d.split;
    if (s < 0 || s > total) throw InputError("split out of range");
    LawReport report;
    auto half = [&](int t) { return t < s ? 0 : 1; };

    {
        // both halves closed under the product
        LawResult r = LawResult::ok();
        for (int i = 0; i < total && r.pass; ++i)
            for (int j = 0; j < total && r.pass; ++j) {
                if (half(i) != half(j)) continue;
                auto row = g.productRow(i, j);
                for (int l = 0; l < total; ++l)
                    if (half(l) != half(i) && !row[l].isZero()) {
                        r = scanFail({i, j, l}, {row[l]}, {Scalar()});
                        break;
                    }
            }
        report.add("product_subalgebras", std::move(r));
    }
    {
        LawResult r = LawResult::ok();
        for (int i = 0; i < total && r.pass; ++i)
            for (int j = 0; j < total && r.pass; ++j)
                for (int k = 0; k < total && r.pass; ++k) {
                    if (half(i) != half(j) || half(j) != half(k)) continue;
                    auto row = g.bracketRow(i, j, k);
                    for (int l = 0; l < total; ++l)
                        if (half(l) != half(i) && !row[l].isZero()) {
                            r = scanFail({i, j, k, l}, {row[l]}, {Scalar()});
                            break;
                        }
                }
        report.add("bracket_subalgebras", std::move(r));
    }
    {
        LawResult r = LawResult::ok();
        for (int i = 0; i < total && r.pass; ++i)
            for (int j = 0; j < total && r.pass; ++j)
                if (half(i) == half(j) && !d.form.at(i, j).isZero())
                    r = scanFail({i, j}, {d.form.at(i, j)}, {Scalar()});
        report.add("isotropic", std::move(r));
    }
    {
        // pr_1 [x1, y1, x2] = 0 and pr_2 [x2, y2, x1] = 0
        LawResult r = LawResult::ok();
        for (int i = 0; i < total && r.pass; ++i)
            for (int j = 0; j < total && r.pass; ++j)
                for (int k = 0; k < total && r.pass; ++k) {
                    int h1 = half(i), h2 = half(j), h3 = half(k);
                    if (!(h1 == h2 && h3 != h1)) continue;
                    auto row = g.bracketRow(i, j, k);
                    for (int l = 0; l < total; ++l)
                        if (half(l) == h1 && !row[l].isZero()) {
                            r = scanFail({i, j, k, l}, {row[l]}, {Scalar()});
                            break;
                        }
                }
        report.add("projection_conditions", std::move(r));
    }
    report.merge("form.", check_invariance(d.form, g));
    return report;
}

namespace {

// entrywise evaluations of the bialgebra compatibility identities
LawResult bialgInfinitesimal(const Tensor& a, const Tensor& b, int n) {
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int p = 0; p < n; ++p)
                for (int q = 0; q < n; ++q) {
                    Scalar lhs, rhs;
                    for (int m = 0; m < n; ++m) {
                        if (!a.at3(i, j, m).isZero()) lhs += a.at3(i, j, m) * b.at3(m, p, q);
                        if (!b.at3(j, m, q).isZero()) rhs += b.at3(j, m, q) * a.at3(i, m, p);
                        if (!b.at3(i, p, m).isZero()) rhs += b.at3(i, p, m) * a.at3(j, m, q);
                    }
                    if (lhs != rhs) return scanFail({i, j, p, q}, {lhs}, {rhs});
                }
    return LawResult::ok();
}

// delta([x,y,z]) = (1 x 1 x ad_{y,z}) delta(x) + (1 x 1 x ad_{z,x}) delta(y)
//                + (1 x 1 x ad_{x,y}) delta(z)
LawResult bialgDc3l1(const Tensor& c, const Tensor& d, int n) {
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (int p = 0; p < n; ++p)
                    for (int q = 0; q < n; ++q)
                        for (int r = 0; r < n; ++r) {
                            Scalar lhs, rhs;
                            for (int m = 0; m < n; ++m) {
                                if (!c.at4(i, j, k, m).isZero())
                                    lhs += c.at4(i, j, k, m) * d.at4(m, p, q, r);
                                if (!d.at4(i, p, q, m).isZero())
                                    rhs += d.at4(i, p, q, m) * c.at4(j, k, m, r);
                                if (!d.at4(j, p, q, m).isZero())
                                    rhs += d.at4(j, p, q, m) * c.at4(k, i, m, r);
                                if (!d.at4(k, p, q, m).isZero())
                                    rhs += d.at4(k, p, q, m) * c.at4(i, j, m, r);
                            }
                            if (lhs != rhs)
                                return scanFail({i, j, k, p, q, r}, {lhs}, {rhs});
                        }
    return LawResult::ok();
}

// delta([x,y,z]) = (1 x 1 x ad_{y,z}) delta(x) + (1 x ad_{y,z} x 1) delta(x)
//                + (ad_{y,z} x 1 x 1) delta(x)
LawResult bialgDc3l2(const Tensor& c, const Tensor& d, int n) {
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (int p = 0; p < n; ++p)
                    for (int q = 0; q < n; ++q)
                        for (int r = 0; r < n; ++r) {
                            Scalar lhs, rhs;
                            for (int m = 0; m < n; ++m) {
                                if (!c.at4(i, j, k, m).isZero())
                                    lhs += c.at4(i, j, k, m) * d.at4(m, p, q, r);
                                if (!d.at4(i, p, q, m).isZero())
                                    rhs += d.at4(i, p, q, m) * c.at4(j, k, m, r);
                                if (!d.at4(i, p, m, r).isZero())
                                    rhs += d.at4(i, p, m, r) * c.at4(j, k, m, q);
                                if (!d.at4(i, m, q, r).isZero())
                                    rhs += d.at4(i, m, q, r) * c.at4(j, k, m, p);
                            }
                            if (lhs != rhs)
                                return scanFail({i, j, k, p, q, r}, {lhs}, {rhs});
                        }
    return LawResult::ok();
}

// Delta([x,y,z]) = (1 x ad_{y,z}) Delta(x) + (ad_{y,z} x 1) Delta(x)
LawResult bialg1(const Tensor& c, const Tensor& b, int n) {
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (int p = 0; p < n; ++p)
                    for (int q = 0; q < n; ++q) {
                        Scalar lhs, rhs;
                        for (int m = 0; m < n; ++m) {
                            if (!c.at4(i, j, k, m).isZero())
                                lhs += c.at4(i, j, k, m) * b.at3(m, p, q);
                            if (!b.at3(i, p, m).isZero())
                                rhs += b.at3(i, p, m) * c.at4(j, k, m, q);
                            if (!b.at3(i, m, q).isZero())
                                rhs += b.at3(i, m, q) * c.at4(j, k, m, p);
                        }
                        if (lhs != rhs) return scanFail({i, j, k, p, q}, {lhs}, {rhs});
                    }
    return LawResult::ok();
}

// delta(x.y) = (L(y) x 1 x 1) delta(x) + (L(x) x 1 x 1) delta(y)
LawResult bialg2(const Tensor& a, const Tensor& d, int n) {
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int p = 0; p < n; ++p)
                for (int q = 0; q < n; ++q)
                    for (int r = 0; r < n; ++r) {
                        Scalar lhs, rhs;
                        for (int m = 0; m < n; ++m) {
                            if (!a.at3(i, j, m).isZero()) lhs += a.at3(i, j, m) * d.at4(m, p, q, r);
                            if (!d.at4(i, m, q, r).isZero())
                                rhs += d.at4(i, m, q, r) * a.at3(j, m, p);
                            if (!d.at4(j, m, q, r).isZero())
                                rhs += d.at4(j, m, q, r) * a.at3(i, m, p);
                        }
                        if (lhs != rhs) return scanFail({i, j, p, q, r}, {lhs}, {rhs});
                    }
    return LawResult::ok();
}

// (L(x) x 1 x 1) delta(y) = (1 x 1 x L(x)) delta(y)
LawResult bialg3(const Tensor& a, const Tensor& d, int n) {
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int p = 0; p < n; ++p)
                for (int q = 0; q < n; ++q)
                    for (int r = 0; r < n; ++r) {
                        Scalar lhs, rhs;
                        for (int m = 0; m < n; ++m) {
                            if (!d.at4(j, m, q, r).isZero())
                                lhs += d.at4(j, m, q, r) * a.at3(i, m, p);
                            if (!d.at4(j, p, q, m).isZero())
                                rhs += d.at4(j, p, q, m) * a.at3(i, m, r);
                        }
                        if (lhs != rhs) return scanFail({i, j, p, q, r}, {lhs}, {rhs});
                    }
    return LawResult::ok();
}

// (1 x ad_{x,y}) Delta(z) = (1 x ad_{y,z}) Delta(x)
LawResult bialg4(const Tensor& c, const Tensor& b, int n) {
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (int p = 0; p < n; ++p)
                    for (int q = 0; q < n; ++q) {
                        Scalar lhs, rhs;
                        for (int m = 0; m < n; ++m) {
                            if (!b.at3(k, p, m).isZero())
                                lhs += b.at3(k, p, m) * c.at4(i, j, m, q);
                            if (!b.at3(i, p, m).isZero())
                                rhs += b.at3(i, p, m) * c.at4(j, k, m, q);
                        }
                        if (lhs != rhs) return scanFail({i, j, k, p, q}, {lhs}, {rhs});
                    }
    return LawResult::ok();
}

// the six vanishing conditions of the admissible bialgebra
LawResult admiBialg(const Tensor& a, const Tensor& c, const Tensor& b, const Tensor& d, int n,
                    int which) {
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (int p = 0; p < n; ++p)
                    for (int q = 0; q < n; ++q) {
                        Scalar lhs;
                        switch (which) {
                            case 1:  // Delta([x,y,z]) = 0 over (i,j,k;p,q)
                                for (int m = 0; m < n; ++m)
                                    if (!c.at4(i, j, k, m).isZero())
                                        lhs += c.at4(i, j, k, m) * b.at3(m, p, q);
                                break;
                            case 3:  // (ad_{y,z} x 1) Delta(x) = 0 over (i;j,k;p,q)
                                for (int m = 0; m < n; ++m)
                                    if (!b.at3(i, m, q).isZero())
                                        lhs += b.at3(i, m, q) * c.at4(j, k, m, p);
                                break;
                            case 5:  // (1 x ad_{y,z}) Delta(x) = 0
                                for (int m = 0; m < n; ++m)
                                    if (!b.at3(i, p, m).isZero())
                                        lhs += b.at3(i, p, m) * c.at4(j, k, m, q);
                                break;
                            default:;
                        }
                        if (!lhs.isZero()) return scanFail({i, j, k, p, q}, {lhs}, {Scalar()});
                    }
    if (which == 1 || which == 3 || which == 5) return LawResult::ok();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int p = 0; p < n; ++p)
                for (int q = 0; q < n; ++q)
                    for (int r = 0; r < n; ++r) {
                        Scalar lhs;
                        switch (which) {
                            case 2:  // delta(x.y) = 0 over (i,j;p,q,r)
                                for (int m = 0; m < n; ++m)
                                    if (!a.at3(i, j, m).isZero())
                                        lhs += a.at3(i, j, m) * d.at4(m, p, q, r);
                                break;
                            case 4:  // (1 x 1 x L(y)) delta(x) = 0 over (i;j;p,q,r)
                                for (int m = 0; m < n; ++m)
                                    if (!d.at4(i, p, q, m).isZero())
                                        lhs += d.at4(i, p, q, m) * a.at3(j, m, r);
                                break;
                            case 6:  // (L(y) x 1 x 1) delta(x) = 0
                                for (int m = 0; m < n; ++m)
                                    if (!d.at4(i, m, q, r).isZero())
                                        lhs += d.at4(i, m, q, r) * a.at3(j, m, p);
                                break;
                            default:;
                        }
                        if (!lhs.isZero()) return scanFail({i, j, p, q, r}, {lhs}, {Scalar()});
                    }
    return LawResult::ok();
}

}  // namespace

LawReport check_bialgebra(const Algebra& alg, const Coalgebra& co, Family family) {
    if (alg.dim != co.dim) throw InputError("check_bialgebra: dim mismatch");
    const int n = alg.dim;
    const Tensor& a = alg.product;
    const Tensor& c = alg.bracket;
    const Tensor& b = co.cop2;
    const Tensor& d = co.cop3;

    LawReport report;
    report.merge("alg.", validate(alg, family));
    report.merge("co.", validate_coalgebra(co, family));
    switch (family) {
        case Family::CommAssoc:
            report.add("infinitesimal", bialgInfinitesimal(a, b, n));
            break;
        case Family::ThreeLie:
            report.add("dc3l_1", bialgDc3l1(c, d, n));
            report.add("dc3l_2", bialgDc3l2(c, d, n));
            break;
        case Family::Poisson:
            report.add("dc3l_1", bialgDc3l1(c, d, n));
            report.add("dc3l_2", bialgDc3l2(c, d, n));
            report.add("infinitesimal", bialgInfinitesimal(a, b, n));
            report.add("bialg_1", bialg1(c, b, n));
            report.add("bialg_2", bialg2(a, d, n));
            report.add("bialg_3", bialg3(a, d, n));
            report.add("bialg_4", bialg4(c, b, n));
            break;
        case Family::Admissible:
            report.add("dc3l_1", bialgDc3l1(c, d, n));
            report.add("dc3l_2", bialgDc3l2(c, d, n));
            report.add("infinitesimal", bialgInfinitesimal(a, b, n));
            for (int w = 1; w <= 6; ++w)
                report.add("admi_bialg_" + std::to_string(w), admiBialg(a, c, b, d, n, w));
            break;
        case Family::Transposed:
            throw InputError("no transposed double construction bialgebra family is defined");
    }
    return report;
}

InvariantFormSolution solve_invariant_forms(const Algebra& alg) {
    const int n = alg.dim;
    // unknowns g[i][j] flattened; rows collect symmetry and both invariance identities
    std::vector<Vec> rows;
    auto newRow = [&]() { return Vec(static_cast<std::size_t>(n) * n, Scalar()); };
    auto slot = [&](int i, int j) { return static_cast<std::size_t>(i) * n + j; };

    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            Vec row = newRow();
            row[slot(i, j)] += Scalar(1);
            row[slot(j, i)] -= Scalar(1);
            rows.push_back(std::move(row));
        }
    // B(x.y, z) - B(x, y.z) = 0
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z) {
                Vec row = newRow();
                auto xy = alg.productRow(x, y);
                auto yz = alg.productRow(y, z);
                for (int m = 0; m < n; ++m) {
                    if (!xy[m].isZero()) row[slot(m, z)] += xy[m];
                    if (!yz[m].isZero()) row[slot(x, m)] -= yz[m];
                }
                if (!isZeroVec(row)) rows.push_back(std::move(row));
            }
    // B([x,y,z], u) + B([x,y,u], z) = 0
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z)
                for (int u = 0; u < n; ++u) {
                    Vec row = newRow();
                    auto xyz = alg.bracketRow(x, y, z);
                    auto xyu = alg.bracketRow(x, y, u);
                    for (int m = 0; m < n; ++m) {
                        if (!xyz[m].isZero()) row[slot(m, u)] += xyz[m];
                        if (!xyu[m].isZero()) row[slot(m, z)] += xyu[m];
                    }
                    if (!isZeroVec(row)) rows.push_back(std::move(row));
                }

    Matrix system(static_cast<int>(rows.size()), n * n);
    for (int r = 0; r < static_cast<int>(rows.size()); ++r)
        for (int cidx = 0; cidx < n * n; ++cidx) system.at(r, cidx) = rows[r][cidx];

    InvariantFormSolution sol;
    for (const Vec& v : nullspace(system)) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) m.at(i, j) = v[slot(i, j)];
        sol.basis.push_back(std::move(m));
    }
    sol.genericDet = generic_determinant(sol.basis, n);
    sol.nondegenerateExists = !sol.genericDet.isZero();
    return sol;
}

MatchedPair coadjoint_pair(const Algebra& alg, const Algebra& dual) {
    if (alg.dim != dual.dim) throw InputError("coadjoint_pair: dim mismatch");
    const int n = alg.dim;
    MatchedPair mp = MatchedPair::zero(alg, dual);
    for (int i = 0; i < n; ++i)
        for (int l = 0; l < n; ++l)
            for (int k = 0; k < n; ++k) {
                // (-L*)(e_i) f_k = sum_l a[i][l][k] f_l, and mirrored for the dual side
                mp.muA[i].at(l, k) = alg.product.at3(i, l, k);
                mp.muB[i].at(l, k) = dual.product.at3(i, l, k);
            }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int l = 0; l < n; ++l)
                for (int k = 0; k < n; ++k) {
                    // ad*_{e_i,e_j} f_k = -sum_l c[i][j][l][k] f_l, mirrored for the dual
                    mp.rhoA[i][j].at(l, k) = -alg.bracket.at4(i, j, l, k);
                    mp.rhoB[i][j].at(l, k) = -dual.bracket.at4(i, j, l, k);
                }
    return mp;
}

EquivalenceReport verify_equivalence(const Algebra& alg, const Coalgebra& co, Family family) {
    if (family != Family::Poisson && family != Family::Admissible)
        throw InputError("verify_equivalence: family must be poisson or admissible");
    EquivalenceReport eq;
    eq.statements.emplace_back("bialgebra", check_bialgebra(alg, co, family));
    eq.statements.emplace_back(
        "matched_pair", check_matched_pair(coadjoint_pair(alg, dualize_coalgebra(co)), family));
    SplitDouble d = double_construct(alg, co);
    LawReport manin = check_manin_triple(d);
    manin.merge("double.", validate(d.algebra, family));
    eq.statements.emplace_back("manin_triple", std::move(manin));
    return eq;
}

}  // namespace p3lie
