#include "p3lie/representation.hpp"

namespace p3lie {

namespace {

void checkShape(const Representation& r) {
    const int n = r.base.dim, m = r.carrierDim;
    if (static_cast<int>(r.mu.size()) != n || static_cast<int>(r.rho.size()) != n)
        throw InputError("representation action counts do not match base dim");
    for (const Matrix& mat : r.mu)
        if (mat.rows() != m || mat.cols() != m)
            throw InputError("mu matrix extent mismatch");
    for (const auto& row : r.rho) {
        if (static_cast<int>(row.size()) != n)
            throw InputError("rho action counts do not match base dim");
        for (const Matrix& mat : row)
            if (mat.rows() != m || mat.cols() != m)
                throw InputError("rho matrix extent mismatch");
    }
}

LawResult matrixFail(std::vector<int> idx, const Matrix& lhs, const Matrix& rhs) {
    return LawResult::fail(Witness{std::move(idx), lhs.data(), rhs.data()});
}

}  // namespace

Representation Representation::zero(const Algebra& base, int carrierDim) {
    Representation r;
    r.base = base;
    r.carrierDim = carrierDim;
    r.mu.assign(static_cast<std::size_t>(base.dim), Matrix(carrierDim, carrierDim));
    r.rho.assign(static_cast<std::size_t>(base.dim),
                 std::vector<Matrix>(static_cast<std::size_t>(base.dim),
                                     Matrix(carrierDim, carrierDim)));
    return r;
}

Matrix Representation::muOf(const Vec& x) const {
    Matrix out(carrierDim, carrierDim);
    for (std::size_t i = 0; i < x.size(); ++i) out.addScaledMatrix(x[i], mu[i]);
    return out;
}

Matrix Representation::rhoFirstOf(const Vec& x, int j) const {
    Matrix out(carrierDim, carrierDim);
    for (std::size_t i = 0; i < x.size(); ++i) out.addScaledMatrix(x[i], rho[i][j]);
    return out;
}

Matrix Representation::rhoSecondOf(int i, const Vec& y) const {
    Matrix out(carrierDim, carrierDim);
    for (std::size_t j = 0; j < y.size(); ++j) out.addScaledMatrix(y[j], rho[i][j]);
    return out;
}

Representation adjoint_representation(const Algebra& alg) {
    Representation r = Representation::zero(alg, alg.dim);
    for (int i = 0; i < alg.dim; ++i) r.mu[i] = left_mul_matrix(alg, i);
    for (int i = 0; i < alg.dim; ++i)
        for (int j = 0; j < alg.dim; ++j) r.rho[i][j] = ad_matrix(alg, i, j);
    return r;
}

LawReport representation_laws(const Representation& rep, Family family) {
    checkShape(rep);
    const Algebra& a = rep.base;
    const int n = a.dim;
    LawReport report;

    {
        LawResult r = LawResult::ok();
        for (int i = 0; i < n && r.pass; ++i)
            for (int j = 0; j < n && r.pass; ++j) {
                Matrix neg(rep.carrierDim, rep.carrierDim);
                neg.addScaledMatrix(Scalar(-1), rep.rho[j][i]);
                if (!(rep.rho[i][j] == neg)) r = matrixFail({i, j}, rep.rho[i][j], neg);
            }
        report.add(replaw::kRhoAntisym, std::move(r));
    }

    auto needMu = family == Family::CommAssoc || family == Family::Poisson ||
                  family == Family::Transposed || family == Family::Admissible;
    if (needMu) {
        LawResult r = LawResult::ok();
        for (int i = 0; i < n && r.pass; ++i)
            for (int j = 0; j < n && r.pass; ++j) {
                Matrix lhs = rep.muOf(Vec(a.productRow(i, j).begin(), a.productRow(i, j).end()));
                Matrix rhs = rep.mu[i] * rep.mu[j];
                if (!(lhs == rhs)) r = matrixFail({i, j}, lhs, rhs);
            }
        report.add(replaw::kMuRep, std::move(r));
    }

    auto needRho = family == Family::ThreeLie || family == Family::Poisson ||
                   family == Family::Transposed || family == Family::Admissible;
    if (needRho) {
        auto bracketVecOf = [&](int i, int j, int k) {
            return Vec(a.bracketRow(i, j, k).begin(), a.bracketRow(i, j, k).end());
        };
        {
            LawResult r = LawResult::ok();
            for (int i = 0; i < n && r.pass; ++i)
                for (int j = 0; j < n && r.pass; ++j)
                    for (int k = 0; k < n && r.pass; ++k)
                        for (int l = 0; l < n && r.pass; ++l) {
                            Matrix lhs = rep.rho[i][j] * rep.rho[k][l] -
                                         rep.rho[k][l] * rep.rho[i][j];
                            Matrix rhs = rep.rhoFirstOf(bracketVecOf(i, j, k), l) -
                                         rep.rhoFirstOf(bracketVecOf(i, j, l), k);
                            if (!(lhs == rhs)) r = matrixFail({i, j, k, l}, lhs, rhs);
                        }
            report.add(replaw::kRhoRep1, std::move(r));
        }
        {
            LawResult r = LawResult::ok();
            for (int i = 0; i < n && r.pass; ++i)
                for (int j = 0; j < n && r.pass; ++j)
                    for (int k = 0; k < n && r.pass; ++k)
                        for (int l = 0; l < n && r.pass; ++l) {
                            Matrix lhs = rep.rhoFirstOf(bracketVecOf(i, j, k), l);
                            Matrix rhs = rep.rho[i][j] * rep.rho[k][l] +
                                         rep.rho[j][k] * rep.rho[i][l] +
                                         rep.rho[k][i] * rep.rho[j][l];
                            if (!(lhs == rhs)) r = matrixFail({i, j, k, l}, lhs, rhs);
                        }
            report.add(replaw::kRhoRep2, std::move(r));
        }
    }

    auto productVecOf = [&](int i, int j) {
        return Vec(a.productRow(i, j).begin(), a.productRow(i, j).end());
    };
    auto bracketVecOf = [&](int i, int j, int k) {
        return Vec(a.bracketRow(i, j, k).begin(), a.bracketRow(i, j, k).end());
    };

    if (family == Family::Poisson) {
        {
            // rho(x.y, z) = mu(x) rho(y,z) + mu(y) rho(x,z)
            LawResult r = LawResult::ok();
            for (int x = 0; x < n && r.pass; ++x)
                for (int y = 0; y < n && r.pass; ++y)
                    for (int z = 0; z < n && r.pass; ++z) {
                        Matrix lhs = rep.rhoFirstOf(productVecOf(x, y), z);
                        Matrix rhs = rep.mu[x] * rep.rho[y][z] + rep.mu[y] * rep.rho[x][z];
                        if (!(lhs == rhs)) r = matrixFail({x, y, z}, lhs, rhs);
                    }
            report.add(replaw::kRep1, std::move(r));
        }
        {
            // rho(x,y) mu(z) = mu([x,y,z]) + mu(z) rho(x,y)
            LawResult r = LawResult::ok();
            for (int x = 0; x < n && r.pass; ++x)
                for (int y = 0; y < n && r.pass; ++y)
                    for (int z = 0; z < n && r.pass; ++z) {
                        Matrix lhs = rep.rho[x][y] * rep.mu[z];
                        Matrix rhs = rep.muOf(bracketVecOf(x, y, z)) + rep.mu[z] * rep.rho[x][y];
                        if (!(lhs == rhs)) r = matrixFail({x, y, z}, lhs, rhs);
                    }
            report.add(replaw::kRep2, std::move(r));
        }
    }

    if (family == Family::Transposed) {
        const Scalar three(3);
        {
            // 3 mu(x) rho(y,z) = rho(x.y, z) + rho(y, x.z) + rho(y,z) mu(x)
            LawResult r = LawResult::ok();
            for (int x = 0; x < n && r.pass; ++x)
                for (int y = 0; y < n && r.pass; ++y)
                    for (int z = 0; z < n && r.pass; ++z) {
                        Matrix lhs = three * (rep.mu[x] * rep.rho[y][z]);
                        Matrix rhs = rep.rhoFirstOf(productVecOf(x, y), z) +
                                     rep.rhoSecondOf(y, productVecOf(x, z)) +
                                     rep.rho[y][z] * rep.mu[x];
                        if (!(lhs == rhs)) r = matrixFail({x, y, z}, lhs, rhs);
                    }
            report.add(replaw::kTransRep1, std::move(r));
        }
        {
            // 3 mu([x,y,z]) = rho(y,z) mu(x) - rho(x,z) mu(y) + rho(x,y) mu(z)
            LawResult r = LawResult::ok();
            for (int x = 0; x < n && r.pass; ++x)
                for (int y = 0; y < n && r.pass; ++y)
                    for (int z = 0; z < n && r.pass; ++z) {
                        Matrix lhs = three * rep.muOf(bracketVecOf(x, y, z));
                        Matrix rhs = rep.rho[y][z] * rep.mu[x] - rep.rho[x][z] * rep.mu[y] +
                                     rep.rho[x][y] * rep.mu[z];
                        if (!(lhs == rhs)) r = matrixFail({x, y, z}, lhs, rhs);
                    }
            report.add(replaw::kTransRep2, std::move(r));
        }
    }

    if (family == Family::Admissible) {
        const Matrix zero(rep.carrierDim, rep.carrierDim);
        LawResult r1 = LawResult::ok(), r2 = LawResult::ok(), r3 = LawResult::ok(),
                  r4 = LawResult::ok();
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
                for (int z = 0; z < n; ++z) {
                    if (r1.pass) {
                        Matrix lhs = rep.mu[x] * rep.rho[y][z];
                        if (!lhs.isZero()) r1 = matrixFail({x, y, z}, lhs, zero);
                    }
                    if (r2.pass) {
                        Matrix lhs = rep.rho[y][z] * rep.mu[x];
                        if (!lhs.isZero()) r2 = matrixFail({x, y, z}, lhs, zero);
                    }
                    if (r3.pass) {
                        Matrix lhs = rep.rhoFirstOf(productVecOf(x, y), z);
                        if (!lhs.isZero()) r3 = matrixFail({x, y, z}, lhs, zero);
                    }
                    if (r4.pass) {
                        Matrix lhs = rep.muOf(bracketVecOf(x, y, z));
                        if (!lhs.isZero()) r4 = matrixFail({x, y, z}, lhs, zero);
                    }
                }
        report.add(replaw::kMuRhoZero, std::move(r1));
        report.add(replaw::kRhoMuZero, std::move(r2));
        report.add(replaw::kRhoProductZero, std::move(r3));
        report.add(replaw::kMuBracketZero, std::move(r4));
    }

    return report;
}

LawReport validate_representation(const Representation& rep, Family family) {
    LawReport report;
    report.merge("base.", validate(rep.base, family));
    report.merge("", representation_laws(rep, family));
    return report;
}

DualRepResult dual_representation(const Representation& rep, Family family) {
    checkShape(rep);
    DualRepResult out;
    out.rep = Representation::zero(rep.base, rep.carrierDim);
    for (int i = 0; i < rep.base.dim; ++i) out.rep.mu[i] = rep.mu[i].transposed();
    for (int i = 0; i < rep.base.dim; ++i)
        for (int j = 0; j < rep.base.dim; ++j) {
            Matrix t = rep.rho[i][j].transposed();
            Matrix neg(rep.carrierDim, rep.carrierDim);
            neg.addScaledMatrix(Scalar(-1), t);
            out.rep.rho[i][j] = std::move(neg);
        }

    if (family == Family::Transposed) {
        // iff condition on the original actions: mu(x) and rho(y,z) commute,
        // and mu of every bracket value vanishes
        const int n = rep.base.dim;
        const Matrix zero(rep.carrierDim, rep.carrierDim);
        LawResult commute = LawResult::ok(), muBracket = LawResult::ok();
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
                for (int z = 0; z < n; ++z) {
                    if (commute.pass) {
                        Matrix lhs = rep.mu[x] * rep.rho[y][z];
                        Matrix rhs = rep.rho[y][z] * rep.mu[x];
                        if (!(lhs == rhs)) commute = matrixFail({x, y, z}, lhs, rhs);
                    }
                    if (muBracket.pass) {
                        Matrix lhs = rep.muOf(Vec(rep.base.bracketRow(x, y, z).begin(),
                                                  rep.base.bracketRow(x, y, z).end()));
                        if (!lhs.isZero()) muBracket = matrixFail({x, y, z}, lhs, zero);
                    }
                }
        out.report.add("dual_mu_rho_commute", std::move(commute));
        out.report.add("dual_mu_bracket_zero", std::move(muBracket));
    }
    return out;
}

Algebra semidirect_product(const Representation& rep) {
    checkShape(rep);
    const int n = rep.base.dim, m = rep.carrierDim;
    Algebra out = Algebra::zero(n + m);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int l = 0; l < n; ++l)
                out.product.at3(i, j, l) = rep.base.product.at3(i, j, l);
    for (int i = 0; i < n; ++i)
        for (int u = 0; u < m; ++u)
            for (int r = 0; r < m; ++r) {
                const Scalar& c = rep.mu[i].at(r, u);
                if (c.isZero()) continue;
                out.product.at3(i, n + u, n + r) = c;
                out.product.at3(n + u, i, n + r) = c;
            }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l)
                    out.bracket.at4(i, j, k, l) = rep.base.bracket.at4(i, j, k, l);
    // [x1, x2, u] = rho(x1,x2)u placed in every slot with the bracket's signs
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int u = 0; u < m; ++u)
                for (int r = 0; r < m; ++r) {
                    const Scalar& c = rep.rho[i][j].at(r, u);
                    if (c.isZero()) continue;
                    out.bracket.at4(i, j, n + u, n + r) = c;
                    out.bracket.at4(i, n + u, j, n + r) = -c;
                    out.bracket.at4(n + u, i, j, n + r) = c;
                }
    return out;
}

}  // namespace p3lie
