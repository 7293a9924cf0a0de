#include "p3lie/coalgebra.hpp"

#include <algorithm>
#include <array>

namespace p3lie {

namespace {

void checkShape(const Coalgebra& co) {
    const int n = co.dim;
    if (co.cop2.dims() != std::vector<int>{n, n, n} ||
        co.cop3.dims() != std::vector<int>{n, n, n, n})
        throw InputError("coalgebra tensor extents do not match dim");
}

LawResult scanFail(std::vector<int> idx, Vec lhs, Vec rhs) {
    return LawResult::fail(Witness{std::move(idx), std::move(lhs), std::move(rhs)});
}

LawResult checkCocommutative(const Coalgebra& co) {
    for (int k = 0; k < co.dim; ++k)
        for (int i = 0; i < co.dim; ++i)
            for (int j = 0; j < co.dim; ++j)
                if (co.cop2.at3(k, i, j) != co.cop2.at3(k, j, i))
                    return scanFail({k, i, j}, {co.cop2.at3(k, i, j)}, {co.cop2.at3(k, j, i)});
    return LawResult::ok();
}

LawResult checkCoassociative(const Coalgebra& co) {
    const int n = co.dim;
    const Tensor& b = co.cop2;
    for (int k = 0; k < n; ++k)
        for (int p = 0; p < n; ++p)
            for (int q = 0; q < n; ++q)
                for (int r = 0; r < n; ++r) {
                    Scalar lhs, rhs;
                    for (int m = 0; m < n; ++m) {
                        if (!b.at3(k, m, r).isZero()) lhs += b.at3(k, m, r) * b.at3(m, p, q);
                        if (!b.at3(k, p, m).isZero()) rhs += b.at3(k, p, m) * b.at3(m, q, r);
                    }
                    if (lhs != rhs) return scanFail({k, p, q, r}, {lhs}, {rhs});
                }
    return LawResult::ok();
}

LawResult checkCop3Antisym(const Coalgebra& co) {
    const Tensor& d = co.cop3;
    for (int k = 0; k < co.dim; ++k)
        for (int i = 0; i < co.dim; ++i)
            for (int j = 0; j < co.dim; ++j)
                for (int l = 0; l < co.dim; ++l) {
                    if (d.at4(k, i, j, l) != -d.at4(k, j, i, l))
                        return scanFail({k, i, j, l}, {d.at4(k, i, j, l)}, {-d.at4(k, j, i, l)});
                    if (d.at4(k, i, j, l) != -d.at4(k, i, l, j))
                        return scanFail({k, i, j, l}, {d.at4(k, i, j, l)}, {-d.at4(k, i, l, j)});
                }
    return LawResult::ok();
}

// flat rank-5 coefficient arrays, one per coproduct input; factor swaps are
// applied generically so the switching-operator composites stay literal
struct Rank5 {
    int n;
    std::vector<Scalar> a;

    explicit Rank5(int n_) : n(n_), a(static_cast<std::size_t>(n_) * n_ * n_ * n_ * n_) {}
    std::size_t off(const std::array<int, 5>& idx) const {
        std::size_t o = 0;
        for (int v : idx) o = o * static_cast<std::size_t>(n) + static_cast<std::size_t>(v);
        return o;
    }
    Scalar& at(const std::array<int, 5>& idx) { return a[off(idx)]; }

    Rank5 swapped(int f1, int f2) const {
        Rank5 out(n);
        std::array<int, 5> idx{};
        for (std::size_t flat = 0; flat < a.size(); ++flat) {
            if (!a[flat].isZero()) {
                std::array<int, 5> sw = idx;
                std::swap(sw[f1], sw[f2]);
                out.at(sw) = a[flat];
            }
            for (int k = 4; k >= 0; --k) {
                if (++idx[k] < n) break;
                idx[k] = 0;
            }
        }
        return out;
    }
};

// (delta x 1 x 1) delta + t23 t12 (1 x delta x 1) delta + t13 t24 (1 x 1 x delta) delta
//   = (1 x 1 x delta) delta
LawResult checkCoJacobi(const Coalgebra& co) {
    const int n = co.dim;
    const Tensor& d = co.cop3;
    for (int k = 0; k < n; ++k) {
        Rank5 t1(n), u(n), w(n);
        for (int p = 0; p < n; ++p)
            for (int q = 0; q < n; ++q)
                for (int r = 0; r < n; ++r)
                    for (int s = 0; s < n; ++s)
                        for (int t = 0; t < n; ++t) {
                            Scalar v1, v2, v3;
                            for (int m = 0; m < n; ++m) {
                                if (!d.at4(k, m, s, t).isZero())
                                    v1 += d.at4(k, m, s, t) * d.at4(m, p, q, r);
                                if (!d.at4(k, p, m, t).isZero())
                                    v2 += d.at4(k, p, m, t) * d.at4(m, q, r, s);
                                if (!d.at4(k, p, q, m).isZero())
                                    v3 += d.at4(k, p, q, m) * d.at4(m, r, s, t);
                            }
                            const std::array<int, 5> idx{p, q, r, s, t};
                            t1.at(idx) = std::move(v1);
                            u.at(idx) = std::move(v2);
                            w.at(idx) = std::move(v3);
                        }
        Rank5 uPerm = u.swapped(0, 1).swapped(1, 2);  // t23 after t12
        Rank5 wPerm = w.swapped(1, 3).swapped(0, 2);  // t13 after t24
        std::array<int, 5> idx{};
        for (std::size_t flat = 0; flat < t1.a.size(); ++flat) {
            Scalar lhs = t1.a[flat] + uPerm.a[flat] + wPerm.a[flat];
            if (lhs != w.a[flat])
                return scanFail({k, idx[0], idx[1], idx[2], idx[3], idx[4]}, {lhs}, {w.a[flat]});
            for (int z = 4; z >= 0; --z) {
                if (++idx[z] < n) break;
                idx[z] = 0;
            }
        }
    }
    return LawResult::ok();
}

// (Delta x 1 x 1) delta(x) = (1 x delta) Delta(x) + (t12 x 1 x 1)(1 x delta) Delta(x)
LawResult checkCoLeibniz(const Coalgebra& co) {
    const int n = co.dim;
    const Tensor& b = co.cop2;
    const Tensor& d = co.cop3;
    for (int k = 0; k < n; ++k)
        for (int p = 0; p < n; ++p)
            for (int q = 0; q < n; ++q)
                for (int r = 0; r < n; ++r)
                    for (int s = 0; s < n; ++s) {
                        Scalar lhs, rhs;
                        for (int m = 0; m < n; ++m) {
                            if (!d.at4(k, m, r, s).isZero())
                                lhs += d.at4(k, m, r, s) * b.at3(m, p, q);
                            if (!b.at3(k, p, m).isZero())
                                rhs += b.at3(k, p, m) * d.at4(m, q, r, s);
                            if (!b.at3(k, q, m).isZero())
                                rhs += b.at3(k, q, m) * d.at4(m, p, r, s);
                        }
                        if (lhs != rhs) return scanFail({k, p, q, r, s}, {lhs}, {rhs});
                    }
    return LawResult::ok();
}

// (Delta x 1 x 1) delta(x) = 0
LawResult checkCoMixedBracket(const Coalgebra& co) {
    const int n = co.dim;
    for (int k = 0; k < n; ++k)
        for (int p = 0; p < n; ++p)
            for (int q = 0; q < n; ++q)
                for (int r = 0; r < n; ++r)
                    for (int s = 0; s < n; ++s) {
                        Scalar lhs;
                        for (int m = 0; m < n; ++m)
                            if (!co.cop3.at4(k, m, r, s).isZero())
                                lhs += co.cop3.at4(k, m, r, s) * co.cop2.at3(m, p, q);
                        if (!lhs.isZero()) return scanFail({k, p, q, r, s}, {lhs}, {Scalar()});
                    }
    return LawResult::ok();
}

// (1 x delta) Delta(x) = 0
LawResult checkCoMixedProduct(const Coalgebra& co) {
    const int n = co.dim;
    for (int k = 0; k < n; ++k)
        for (int p = 0; p < n; ++p)
            for (int q = 0; q < n; ++q)
                for (int r = 0; r < n; ++r)
                    for (int s = 0; s < n; ++s) {
                        Scalar lhs;
                        for (int m = 0; m < n; ++m)
                            if (!co.cop2.at3(k, p, m).isZero())
                                lhs += co.cop2.at3(k, p, m) * co.cop3.at4(m, q, r, s);
                        if (!lhs.isZero()) return scanFail({k, p, q, r, s}, {lhs}, {Scalar()});
                    }
    return LawResult::ok();
}

}  // namespace

Coalgebra Coalgebra::zero(int n) {
    Coalgebra co;
    co.dim = n;
    co.cop2 = Tensor({n, n, n});
    co.cop3 = Tensor({n, n, n, n});
    return co;
}

LawReport validate_coalgebra(const Coalgebra& co, Family family) {
    checkShape(co);
    LawReport report;
    switch (family) {
        case Family::CommAssoc:
            report.add(colaw::kCocommutative, checkCocommutative(co));
            report.add(colaw::kCoassociative, checkCoassociative(co));
            break;
        case Family::ThreeLie:
            report.add(colaw::kCop3Antisym, checkCop3Antisym(co));
            report.add(colaw::kCoJacobi, checkCoJacobi(co));
            break;
        case Family::Poisson:
            report.add(colaw::kCocommutative, checkCocommutative(co));
            report.add(colaw::kCoassociative, checkCoassociative(co));
            report.add(colaw::kCop3Antisym, checkCop3Antisym(co));
            report.add(colaw::kCoJacobi, checkCoJacobi(co));
            report.add(colaw::kCoLeibniz, checkCoLeibniz(co));
            break;
        case Family::Admissible:
            report.add(colaw::kCocommutative, checkCocommutative(co));
            report.add(colaw::kCoassociative, checkCoassociative(co));
            report.add(colaw::kCop3Antisym, checkCop3Antisym(co));
            report.add(colaw::kCoJacobi, checkCoJacobi(co));
            report.add(colaw::kCoMixedProduct, checkCoMixedProduct(co));
            report.add(colaw::kCoMixedBracket, checkCoMixedBracket(co));
            break;
        case Family::Transposed:
            throw InputError("no transposed Poisson coalgebra family is defined");
    }
    return report;
}

LawReport validate_coalgebra(const Coalgebra& co, const std::vector<Family>& families) {
    LawReport merged;
    std::vector<std::string> seen;
    for (Family f : families) {
        LawReport r = validate_coalgebra(co, f);
        for (const auto& [lawName, result] : r.entries()) {
            if (std::find(seen.begin(), seen.end(), lawName) != seen.end()) continue;
            seen.push_back(lawName);
            merged.add(lawName, result);
        }
    }
    return merged;
}

Algebra dualize_coalgebra(const Coalgebra& co) {
    checkShape(co);
    const int n = co.dim;
    Algebra out = Algebra::zero(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int l = 0; l < n; ++l) out.product.at3(i, j, l) = co.cop2.at3(l, i, j);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l) out.bracket.at4(i, j, k, l) = co.cop3.at4(l, i, j, k);
    return out;
}

Coalgebra dualize_algebra(const Algebra& alg) {
    const int n = alg.dim;
    Coalgebra out = Coalgebra::zero(n);
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) out.cop2.at3(k, i, j) = alg.product.at3(i, j, k);
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (int l = 0; l < n; ++l) out.cop3.at4(k, i, j, l) = alg.bracket.at4(i, j, l, k);
    return out;
}

}  // namespace p3lie
