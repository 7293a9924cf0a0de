#include "p3lie/algebra.hpp"

#include <algorithm>

namespace p3lie {

const char* family_name(Family f) {
    switch (f) {
        case Family::CommAssoc: return "comm-assoc";
        case Family::ThreeLie: return "3-lie";
        case Family::Poisson: return "poisson";
        case Family::Transposed: return "transposed";
        case Family::Admissible: return "admissible";
    }
    return "?";
}

std::optional<Family> family_from_name(std::string_view name) {
    for (Family f : kAllFamilies)
        if (name == family_name(f)) return f;
    return std::nullopt;
}

Algebra Algebra::zero(int n) {
    Algebra a;
    a.dim = n;
    a.product = Tensor({n, n, n});
    a.bracket = Tensor({n, n, n, n});
    return a;
}

Vec Algebra::mulVec(const Vec& x, const Vec& y) const {
    Vec out(static_cast<std::size_t>(dim), Scalar());
    for (int i = 0; i < dim; ++i) {
        if (x[i].isZero()) continue;
        for (int j = 0; j < dim; ++j) {
            if (y[j].isZero()) continue;
            addScaled(out, x[i] * y[j], productRow(i, j));
        }
    }
    return out;
}

Vec Algebra::bracketVec(const Vec& x, const Vec& y, const Vec& z) const {
    Vec out(static_cast<std::size_t>(dim), Scalar());
    for (int i = 0; i < dim; ++i) {
        if (x[i].isZero()) continue;
        for (int j = 0; j < dim; ++j) {
            if (y[j].isZero()) continue;
            const Scalar w = x[i] * y[j];
            for (int k = 0; k < dim; ++k) {
                if (z[k].isZero()) continue;
                addScaled(out, w * z[k], bracketRow(i, j, k));
            }
        }
    }
    return out;
}

Vec Algebra::mulIV(int i, const Vec& v) const {
    Vec out(static_cast<std::size_t>(dim), Scalar());
    for (int j = 0; j < dim; ++j) {
        if (v[j].isZero()) continue;
        addScaled(out, v[j], productRow(i, j));
    }
    return out;
}

Vec Algebra::bracketVJK(const Vec& v, int j, int k) const {
    Vec out(static_cast<std::size_t>(dim), Scalar());
    for (int i = 0; i < dim; ++i) {
        if (v[i].isZero()) continue;
        addScaled(out, v[i], bracketRow(i, j, k));
    }
    return out;
}

Vec Algebra::bracketIVK(int i, const Vec& v, int k) const {
    Vec out(static_cast<std::size_t>(dim), Scalar());
    for (int j = 0; j < dim; ++j) {
        if (v[j].isZero()) continue;
        addScaled(out, v[j], bracketRow(i, j, k));
    }
    return out;
}

Vec Algebra::bracketIJV(int i, int j, const Vec& v) const {
    Vec out(static_cast<std::size_t>(dim), Scalar());
    for (int k = 0; k < dim; ++k) {
        if (v[k].isZero()) continue;
        addScaled(out, v[k], bracketRow(i, j, k));
    }
    return out;
}

std::vector<std::string> family_laws(Family f) {
    switch (f) {
        case Family::CommAssoc:
            return {law::kCommutative, law::kAssociative};
        case Family::ThreeLie:
            return {law::kAntisymmetric, law::kJacobi};
        case Family::Poisson:
            return {law::kCommutative, law::kAssociative, law::kAntisymmetric, law::kJacobi,
                    law::kLeibniz};
        case Family::Transposed:
            return {law::kCommutative, law::kAssociative, law::kAntisymmetric, law::kJacobi,
                    law::kTransposedLeibniz};
        case Family::Admissible:
            return {law::kCommutative, law::kAssociative, law::kAntisymmetric, law::kJacobi,
                    law::kMixedProduct, law::kMixedBracket};
    }
    return {};
}

namespace {

void checkShape(const Algebra& alg) {
    const int n = alg.dim;
    if (alg.product.dims() != std::vector<int>{n, n, n} ||
        alg.bracket.dims() != std::vector<int>{n, n, n, n})
        throw InputError("algebra tensor extents do not match dim");
}

LawResult scanFail(std::vector<int> idx, Vec lhs, Vec rhs) {
    return LawResult::fail(Witness{std::move(idx), std::move(lhs), std::move(rhs)});
}

Vec rowVec(std::span<const Scalar> row) { return Vec(row.begin(), row.end()); }

bool zeroRow(std::span<const Scalar> row) {
    for (const Scalar& s : row)
        if (!s.isZero()) return false;
    return true;
}

void clearVec(Vec& v) {
    for (Scalar& s : v)
        if (!s.isZero()) s = Scalar();
}

LawResult checkCommutative(const Algebra& a) {
    for (int i = 0; i < a.dim; ++i)
        for (int j = 0; j < a.dim; ++j) {
            auto lhs = a.productRow(i, j), rhs = a.productRow(j, i);
            if (!std::equal(lhs.begin(), lhs.end(), rhs.begin()))
                return scanFail({i, j}, rowVec(lhs), rowVec(rhs));
        }
    return LawResult::ok();
}

LawResult checkAssociative(const Algebra& a) {
    const int n = a.dim;
    Vec lhs(static_cast<std::size_t>(n)), rhs(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            auto ij = a.productRow(i, j);
            const bool ijZero = zeroRow(ij);
            for (int k = 0; k < n; ++k) {
                auto jk = a.productRow(j, k);
                if (ijZero && zeroRow(jk)) continue;
                clearVec(lhs);
                clearVec(rhs);
                for (int m = 0; m < n; ++m) {
                    if (!ij[m].isZero()) addScaled(lhs, ij[m], a.productRow(m, k));
                    if (!jk[m].isZero()) addScaled(rhs, jk[m], a.productRow(i, m));
                }
                if (lhs != rhs) return scanFail({i, j, k}, lhs, rhs);
            }
        }
    return LawResult::ok();
}

LawResult checkAntisymmetric(const Algebra& a) {
    // adjacent transpositions generate S3; scanning both suffices and the
    // repeated-index cases force the zero value
    for (int i = 0; i < a.dim; ++i)
        for (int j = 0; j < a.dim; ++j)
            for (int k = 0; k < a.dim; ++k) {
                auto row = a.bracketRow(i, j, k);
                for (auto sw : {a.bracketRow(j, i, k), a.bracketRow(i, k, j)})
                    for (int l = 0; l < a.dim; ++l)
                        if (row[l] != -sw[l]) {
                            Vec rhs = rowVec(sw);
                            for (Scalar& s : rhs) s = -s;
                            return scanFail({i, j, k}, rowVec(row), std::move(rhs));
                        }
            }
    return LawResult::ok();
}

// [x1,x2,[y1,y2,y3]] = [[x1,x2,y1],y2,y3] + [y1,[x1,x2,y2],y3] + [y1,y2,[x1,x2,y3]]
LawResult checkJacobi(const Algebra& a) {
    const int n = a.dim;
    Vec lhs(static_cast<std::size_t>(n)), rhs(static_cast<std::size_t>(n));
    for (int x1 = 0; x1 < n; ++x1)
        for (int x2 = 0; x2 < n; ++x2)
            for (int y1 = 0; y1 < n; ++y1)
                for (int y2 = 0; y2 < n; ++y2)
                    for (int y3 = 0; y3 < n; ++y3) {
                        auto ry = a.bracketRow(y1, y2, y3);
                        auto r1 = a.bracketRow(x1, x2, y1);
                        auto r2 = a.bracketRow(x1, x2, y2);
                        auto r3 = a.bracketRow(x1, x2, y3);
                        if (zeroRow(ry) && zeroRow(r1) && zeroRow(r2) && zeroRow(r3)) continue;
                        clearVec(lhs);
                        clearVec(rhs);
                        for (int m = 0; m < n; ++m) {
                            if (!ry[m].isZero()) addScaled(lhs, ry[m], a.bracketRow(x1, x2, m));
                            if (!r1[m].isZero()) addScaled(rhs, r1[m], a.bracketRow(m, y2, y3));
                            if (!r2[m].isZero()) addScaled(rhs, r2[m], a.bracketRow(y1, m, y3));
                            if (!r3[m].isZero()) addScaled(rhs, r3[m], a.bracketRow(y1, y2, m));
                        }
                        if (lhs != rhs) return scanFail({x1, x2, y1, y2, y3}, lhs, rhs);
                    }
    return LawResult::ok();
}

// [w.x,y,z] = w.[x,y,z] + x.[w,y,z]
LawResult checkLeibniz(const Algebra& a) {
    const int n = a.dim;
    Vec lhs(static_cast<std::size_t>(n)), rhs(static_cast<std::size_t>(n));
    for (int w = 0; w < n; ++w)
        for (int x = 0; x < n; ++x) {
            auto wx = a.productRow(w, x);
            const bool wxZero = zeroRow(wx);
            for (int y = 0; y < n; ++y)
                for (int z = 0; z < n; ++z) {
                    auto rx = a.bracketRow(x, y, z);
                    auto rw = a.bracketRow(w, y, z);
                    if (wxZero && zeroRow(rx) && zeroRow(rw)) continue;
                    clearVec(lhs);
                    clearVec(rhs);
                    for (int m = 0; m < n; ++m) {
                        if (!wx[m].isZero()) addScaled(lhs, wx[m], a.bracketRow(m, y, z));
                        if (!rx[m].isZero()) addScaled(rhs, rx[m], a.productRow(w, m));
                        if (!rw[m].isZero()) addScaled(rhs, rw[m], a.productRow(x, m));
                    }
                    if (lhs != rhs) return scanFail({w, x, y, z}, lhs, rhs);
                }
        }
    return LawResult::ok();
}

// 3 w.[x,y,z] = [w.x,y,z] + [x,w.y,z] + [x,y,w.z]
LawResult checkTransposedLeibniz(const Algebra& a) {
    const int n = a.dim;
    const Scalar three(3);
    Vec lhs(static_cast<std::size_t>(n)), rhs(static_cast<std::size_t>(n));
    for (int w = 0; w < n; ++w)
        for (int x = 0; x < n; ++x) {
            auto wx = a.productRow(w, x);
            const bool wxZero = zeroRow(wx);
            for (int y = 0; y < n; ++y) {
                auto wy = a.productRow(w, y);
                const bool wyZero = zeroRow(wy);
                for (int z = 0; z < n; ++z) {
                    auto wz = a.productRow(w, z);
                    auto rb = a.bracketRow(x, y, z);
                    if (wxZero && wyZero && zeroRow(wz) && zeroRow(rb)) continue;
                    clearVec(lhs);
                    clearVec(rhs);
                    for (int m = 0; m < n; ++m) {
                        if (!rb[m].isZero()) addScaled(lhs, three * rb[m], a.productRow(w, m));
                        if (!wx[m].isZero()) addScaled(rhs, wx[m], a.bracketRow(m, y, z));
                        if (!wy[m].isZero()) addScaled(rhs, wy[m], a.bracketRow(x, m, z));
                        if (!wz[m].isZero()) addScaled(rhs, wz[m], a.bracketRow(x, y, m));
                    }
                    if (lhs != rhs) return scanFail({w, x, y, z}, lhs, rhs);
                }
            }
        }
    return LawResult::ok();
}

// u.[x,y,z] = 0
LawResult checkMixedProduct(const Algebra& a) {
    const int n = a.dim;
    const Vec zero(static_cast<std::size_t>(n), Scalar());
    Vec lhs(static_cast<std::size_t>(n));
    for (int u = 0; u < n; ++u)
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
                for (int z = 0; z < n; ++z) {
                    auto rb = a.bracketRow(x, y, z);
                    if (zeroRow(rb)) continue;
                    clearVec(lhs);
                    for (int m = 0; m < n; ++m)
                        if (!rb[m].isZero()) addScaled(lhs, rb[m], a.productRow(u, m));
                    if (!isZeroVec(lhs)) return scanFail({u, x, y, z}, lhs, zero);
                }
    return LawResult::ok();
}

// [u.x,y,z] = 0
LawResult checkMixedBracket(const Algebra& a) {
    const int n = a.dim;
    const Vec zero(static_cast<std::size_t>(n), Scalar());
    Vec lhs(static_cast<std::size_t>(n));
    for (int u = 0; u < n; ++u)
        for (int x = 0; x < n; ++x) {
            auto ux = a.productRow(u, x);
            if (zeroRow(ux)) continue;
            for (int y = 0; y < n; ++y)
                for (int z = 0; z < n; ++z) {
                    clearVec(lhs);
                    for (int m = 0; m < n; ++m)
                        if (!ux[m].isZero()) addScaled(lhs, ux[m], a.bracketRow(m, y, z));
                    if (!isZeroVec(lhs)) return scanFail({u, x, y, z}, lhs, zero);
                }
        }
    return LawResult::ok();
}

LawResult checkLaw(const Algebra& a, const std::string& l) {
    if (l == law::kCommutative) return checkCommutative(a);
    if (l == law::kAssociative) return checkAssociative(a);
    if (l == law::kAntisymmetric) return checkAntisymmetric(a);
    if (l == law::kJacobi) return checkJacobi(a);
    if (l == law::kLeibniz) return checkLeibniz(a);
    if (l == law::kTransposedLeibniz) return checkTransposedLeibniz(a);
    if (l == law::kMixedProduct) return checkMixedProduct(a);
    if (l == law::kMixedBracket) return checkMixedBracket(a);
    throw InputError("unknown law: " + l);
}

}  // namespace

LawReport validate(const Algebra& alg, Family family) {
    checkShape(alg);
    LawReport report;
    for (const std::string& l : family_laws(family)) report.add(l, checkLaw(alg, l));
    return report;
}

LawReport validate(const Algebra& alg, const std::vector<Family>& families) {
    checkShape(alg);
    LawReport report;
    std::vector<std::string> done;
    for (Family f : families)
        for (const std::string& l : family_laws(f)) {
            if (std::find(done.begin(), done.end(), l) != done.end()) continue;
            done.push_back(l);
            report.add(l, checkLaw(alg, l));
        }
    return report;
}

Algebra direct_sum(const Algebra& a1, const Algebra& a2) {
    checkShape(a1);
    checkShape(a2);
    const int n1 = a1.dim, n = a1.dim + a2.dim;
    Algebra out = Algebra::zero(n);
    for (int i = 0; i < a1.dim; ++i)
        for (int j = 0; j < a1.dim; ++j) {
            for (int l = 0; l < a1.dim; ++l) out.product.at3(i, j, l) = a1.product.at3(i, j, l);
            for (int k = 0; k < a1.dim; ++k)
                for (int l = 0; l < a1.dim; ++l)
                    out.bracket.at4(i, j, k, l) = a1.bracket.at4(i, j, k, l);
        }
    for (int i = 0; i < a2.dim; ++i)
        for (int j = 0; j < a2.dim; ++j) {
            for (int l = 0; l < a2.dim; ++l)
                out.product.at3(n1 + i, n1 + j, n1 + l) = a2.product.at3(i, j, l);
            for (int k = 0; k < a2.dim; ++k)
                for (int l = 0; l < a2.dim; ++l)
                    out.bracket.at4(n1 + i, n1 + j, n1 + k, n1 + l) = a2.bracket.at4(i, j, k, l);
        }
    return out;
}

Algebra tensor_with_commutative(const Algebra& a1, const Algebra& c2) {
    checkShape(a1);
    checkShape(c2);
    {
        LawReport pre = validate(c2, Family::CommAssoc);
        if (!c2.bracket.isZero()) {
            Witness w;
            w.indices = {};
            pre.add("zero_bracket", LawResult::fail(std::move(w)));
        }
        if (!pre.allPass())
            throw PreconditionError("tensor factor must be commutative associative with zero bracket",
                                    pre);
    }
    const int n1 = a1.dim, n2 = c2.dim, n = n1 * n2;
    auto flat = [n2](int x, int u) { return x * n2 + u; };
    Algebra out = Algebra::zero(n);
    // (x@u).(y@v) = (x.y)@(u.v)
    for (int i = 0; i < n1; ++i)
        for (int j = 0; j < n1; ++j)
            for (int u = 0; u < n2; ++u)
                for (int v = 0; v < n2; ++v)
                    for (int l = 0; l < n1; ++l) {
                        const Scalar& cl = a1.product.at3(i, j, l);
                        if (cl.isZero()) continue;
                        for (int w = 0; w < n2; ++w) {
                            const Scalar& cw = c2.product.at3(u, v, w);
                            if (cw.isZero()) continue;
                            out.product.at3(flat(i, u), flat(j, v), flat(l, w)) += cl * cw;
                        }
                    }
    // [x@u, y@v, z@w] = [x,y,z]@(u.v.w)
    for (int u = 0; u < n2; ++u)
        for (int v = 0; v < n2; ++v) {
            const Vec uv = Vec(c2.productRow(u, v).begin(), c2.productRow(u, v).end());
            for (int w = 0; w < n2; ++w) {
                Vec uvw(static_cast<std::size_t>(n2), Scalar());
                for (int m = 0; m < n2; ++m)
                    if (!uv[m].isZero()) addScaled(uvw, uv[m], c2.productRow(m, w));
                if (isZeroVec(uvw)) continue;
                for (int i = 0; i < n1; ++i)
                    for (int j = 0; j < n1; ++j)
                        for (int k = 0; k < n1; ++k)
                            for (int l = 0; l < n1; ++l) {
                                const Scalar& cl = a1.bracket.at4(i, j, k, l);
                                if (cl.isZero()) continue;
                                for (int t = 0; t < n2; ++t) {
                                    if (uvw[t].isZero()) continue;
                                    out.bracket.at4(flat(i, u), flat(j, v), flat(k, w),
                                                    flat(l, t)) += cl * uvw[t];
                                }
                            }
            }
        }
    return out;
}

Algebra h_twist(const Algebra& alg, const Vec& h) {
    checkShape(alg);
    if (static_cast<int>(h.size()) != alg.dim) throw InputError("twist element dim mismatch");
    {
        LawReport pre = validate(alg, Family::Transposed);
        if (!pre.allPass())
            throw PreconditionError("h_twist input must be a transposed Poisson 3-Lie algebra", pre);
    }
    const int n = alg.dim;
    Algebra out = alg;
    out.bracket = Tensor({n, n, n, n});
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                Vec twisted = alg.mulVec(h, Vec(alg.bracketRow(i, j, k).begin(),
                                                alg.bracketRow(i, j, k).end()));
                for (int l = 0; l < n; ++l) out.bracket.at4(i, j, k, l) = twisted[l];
            }
    if (!validate(out, Family::Transposed).allPass())
        throw std::logic_error("h_twist produced a non-transposed algebra");
    return out;
}

LawReport is_homomorphism(const LinearMap& f, const Algebra& a1, const Algebra& a2) {
    checkShape(a1);
    checkShape(a2);
    if (f.sourceDim != a1.dim || f.targetDim != a2.dim || f.m.rows() != a2.dim ||
        f.m.cols() != a1.dim)
        throw InputError("homomorphism dim mismatch");
    LawReport report;
    {
        LawResult r = LawResult::ok();
        for (int i = 0; i < a1.dim && r.pass; ++i)
            for (int j = 0; j < a1.dim && r.pass; ++j) {
                Vec lhs = f.m.apply(Vec(a1.productRow(i, j).begin(), a1.productRow(i, j).end()));
                Vec rhs = a2.mulVec(f.m.column(i), f.m.column(j));
                if (lhs != rhs) r = scanFail({i, j}, std::move(lhs), std::move(rhs));
            }
        report.add("hom_product", std::move(r));
    }
    {
        LawResult r = LawResult::ok();
        for (int i = 0; i < a1.dim && r.pass; ++i)
            for (int j = 0; j < a1.dim && r.pass; ++j)
                for (int k = 0; k < a1.dim && r.pass; ++k) {
                    Vec lhs = f.m.apply(
                        Vec(a1.bracketRow(i, j, k).begin(), a1.bracketRow(i, j, k).end()));
                    Vec rhs = a2.bracketVec(f.m.column(i), f.m.column(j), f.m.column(k));
                    if (lhs != rhs) r = scanFail({i, j, k}, std::move(lhs), std::move(rhs));
                }
        report.add("hom_bracket", std::move(r));
    }
    return report;
}

LawReport is_derivation(const LinearMap& d, const Algebra& alg) {
    checkShape(alg);
    if (d.sourceDim != alg.dim || d.targetDim != alg.dim || d.m.rows() != alg.dim ||
        d.m.cols() != alg.dim)
        throw InputError("derivation dim mismatch");
    LawReport report;
    LawResult r = LawResult::ok();
    for (int i = 0; i < alg.dim && r.pass; ++i)
        for (int j = 0; j < alg.dim && r.pass; ++j)
            for (int k = 0; k < alg.dim && r.pass; ++k) {
                Vec lhs = d.m.apply(
                    Vec(alg.bracketRow(i, j, k).begin(), alg.bracketRow(i, j, k).end()));
                Vec rhs = alg.bracketVJK(d.m.column(i), j, k);
                Vec t2 = alg.bracketIVK(i, d.m.column(j), k);
                Vec t3 = alg.bracketIJV(i, j, d.m.column(k));
                for (int l = 0; l < alg.dim; ++l) rhs[l] += t2[l] + t3[l];
                if (lhs != rhs) r = scanFail({i, j, k}, std::move(lhs), std::move(rhs));
            }
    report.add("derivation", std::move(r));
    return report;
}

Matrix ad_matrix(const Algebra& alg, int x1, int x2) {
    Matrix m(alg.dim, alg.dim);
    for (int k = 0; k < alg.dim; ++k) {
        auto row = alg.bracketRow(x1, x2, k);
        for (int l = 0; l < alg.dim; ++l) m.at(l, k) = row[l];
    }
    return m;
}

Matrix left_mul_matrix(const Algebra& alg, int i) {
    Matrix m(alg.dim, alg.dim);
    for (int j = 0; j < alg.dim; ++j) {
        auto row = alg.productRow(i, j);
        for (int l = 0; l < alg.dim; ++l) m.at(l, j) = row[l];
    }
    return m;
}

}  // namespace p3lie
