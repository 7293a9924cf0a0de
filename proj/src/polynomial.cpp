#include "p3lie/polynomial.hpp"

#include <bit>
#include <sstream>

namespace p3lie {

Polynomial Polynomial::constant(int nvars, Scalar c) {
    Polynomial p(nvars);
    if (!c.isZero()) p.terms_.emplace(std::vector<int>(static_cast<std::size_t>(nvars), 0), c);
    return p;
}

Polynomial Polynomial::variable(int nvars, int index) {
    if (index < 0 || index >= nvars) throw InputError("polynomial variable out of range");
    Polynomial p(nvars);
    std::vector<int> e(static_cast<std::size_t>(nvars), 0);
    e[static_cast<std::size_t>(index)] = 1;
    p.terms_.emplace(std::move(e), Scalar(1));
    return p;
}

void Polynomial::insert(const std::vector<int>& expo, const Scalar& c) {
    if (c.isZero()) return;
    auto it = terms_.find(expo);
    if (it == terms_.end()) {
        terms_.emplace(expo, c);
    } else {
        it->second += c;
        if (it->second.isZero()) terms_.erase(it);
    }
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    if (nvars_ != o.nvars_) throw InputError("polynomial variable count mismatch");
    for (const auto& [e, c] : o.terms_) insert(e, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    if (nvars_ != o.nvars_) throw InputError("polynomial variable count mismatch");
    for (const auto& [e, c] : o.terms_) insert(e, -c);
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.nvars_ != b.nvars_) throw InputError("polynomial variable count mismatch");
    Polynomial out(a.nvars_);
    std::vector<int> e(static_cast<std::size_t>(a.nvars_));
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t k = 0; k < e.size(); ++k) e[k] = ea[k] + eb[k];
            out.insert(e, ca * cb);
        }
    return out;
}

Scalar Polynomial::evaluate(const Vec& point) const {
    if (static_cast<int>(point.size()) != nvars_)
        throw InputError("polynomial evaluation point size mismatch");
    Scalar total;
    for (const auto& [e, c] : terms_) {
        Scalar term = c;
        for (std::size_t k = 0; k < e.size(); ++k)
            for (int p = 0; p < e[k]; ++p) term *= point[k];
        total += term;
    }
    return total;
}

std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")";
        for (std::size_t k = 0; k < e.size(); ++k) {
            if (e[k] == 0) continue;
            os << "*t" << k;
            if (e[k] > 1) os << "^" << e[k];
        }
    }
    return os.str();
}

Polynomial generic_determinant(const std::vector<Matrix>& basis, int n) {
    const int r = static_cast<int>(basis.size());
    for (const Matrix& m : basis)
        if (m.rows() != n || m.cols() != n)
            throw InputError("generic_determinant: basis matrix shape mismatch");
    if (n == 0) return Polynomial::constant(r, Scalar(1));
    if (n > 16) throw InputError("generic_determinant: extent too large for subset expansion");

    // generic entries: E[i][j] = sum_k t_k basis[k](i,j)
    std::vector<std::vector<Polynomial>> entry(
        static_cast<std::size_t>(n), std::vector<Polynomial>(static_cast<std::size_t>(n), Polynomial(r)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Polynomial p(r);
            for (int k = 0; k < r; ++k) {
                const Scalar& c = basis[static_cast<std::size_t>(k)].at(i, j);
                if (c.isZero()) continue;
                p += Polynomial::constant(r, c) * Polynomial::variable(r, k);
            }
            entry[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = std::move(p);
        }

    // dp over column subsets: f(S) = det of rows 0..|S|-1 against columns S,
    // expanded along the last row of the block
    const std::size_t full = std::size_t{1} << n;
    std::vector<Polynomial> f(full, Polynomial(r));
    f[0] = Polynomial::constant(r, Scalar(1));
    for (std::size_t s = 1; s < full; ++s) {
        const int row = std::popcount(s) - 1;
        Polynomial acc(r);
        int pos = 0;
        for (int j = 0; j < n; ++j) {
            if (!(s & (std::size_t{1} << j))) continue;
            const Polynomial& e = entry[static_cast<std::size_t>(row)][static_cast<std::size_t>(j)];
            if (!e.isZero()) {
                Polynomial term = e * f[s & ~(std::size_t{1} << j)];
                if ((row + pos) % 2 == 0)
                    acc += term;
                else
                    acc -= term;
            }
            ++pos;
        }
        f[s] = std::move(acc);
    }
    return f[full - 1];
}

}  // namespace p3lie
