#include "p3lie/linalg.hpp"

namespace p3lie {

namespace {

struct Echelon {
    Matrix m;                   // row echelon form (integer rows, fraction-free)
    std::vector<int> pivotCols; // one per pivot row
    int swaps = 0;
    Vec rowScale;               // original row i was multiplied by rowScale[i] (nonzero)
};

// Scale each row by the lcm of its entry denominators, then run Bareiss
// elimination with first-nonzero pivoting. Row scaling preserves kernel and rank.
Echelon eliminate(Matrix m) {
    const int rows = m.rows(), cols = m.cols();
    Echelon e;
    e.rowScale.assign(static_cast<std::size_t>(rows), Scalar(1));
    for (int r = 0; r < rows; ++r) {
        mpz_class l(1);
        for (int c = 0; c < cols; ++c)
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m.at(r, c).raw().get_den().get_mpz_t());
        if (l != 1) {
            Scalar s{mpq_class(l)};
            for (int c = 0; c < cols; ++c) m.at(r, c) *= s;
            e.rowScale[r] = s;
        }
    }

    Scalar prev(1);
    int row = 0;
    for (int col = 0; col < cols && row < rows; ++col) {
        int piv = -1;
        for (int r = row; r < rows; ++r)
            if (!m.at(r, col).isZero()) { piv = r; break; }
        if (piv < 0) continue;
        if (piv != row) {
            for (int c = 0; c < cols; ++c) std::swap(m.at(row, c), m.at(piv, c));
            std::swap(e.rowScale[row], e.rowScale[piv]);
            ++e.swaps;
        }
        const Scalar pivot = m.at(row, col);
        for (int r = row + 1; r < rows; ++r) {
            const Scalar head = m.at(r, col);
            for (int c = col; c < cols; ++c)
                m.at(r, c) = (m.at(r, c) * pivot - head * m.at(row, c)) / prev;
        }
        prev = pivot;
        e.pivotCols.push_back(col);
        ++row;
    }
    e.m = std::move(m);
    return e;
}

}  // namespace

std::vector<Vec> nullspace(const Matrix& m) {
    const int cols = m.cols();
    Echelon e = eliminate(m);
    const int r = static_cast<int>(e.pivotCols.size());

    // reduce to RREF (rational division is exact and cheap at this size)
    Matrix u = e.m;
    for (int i = r - 1; i >= 0; --i) {
        const int pc = e.pivotCols[i];
        const Scalar inv = Scalar(1) / u.at(i, pc);
        for (int c = pc; c < cols; ++c) u.at(i, c) *= inv;
        for (int k = 0; k < i; ++k) {
            const Scalar f = u.at(k, pc);
            if (f.isZero()) continue;
            for (int c = pc; c < cols; ++c) u.at(k, c) -= f * u.at(i, c);
        }
    }

    std::vector<bool> isPivot(static_cast<std::size_t>(cols), false);
    for (int pc : e.pivotCols) isPivot[static_cast<std::size_t>(pc)] = true;

    std::vector<Vec> basis;
    for (int f = 0; f < cols; ++f) {
        if (isPivot[static_cast<std::size_t>(f)]) continue;
        Vec v(static_cast<std::size_t>(cols), Scalar());
        v[static_cast<std::size_t>(f)] = Scalar(1);
        for (int i = 0; i < r; ++i) v[static_cast<std::size_t>(e.pivotCols[i])] = -u.at(i, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

int rank(const Matrix& m) { return static_cast<int>(eliminate(m).pivotCols.size()); }

Scalar determinant(const Matrix& m) {
    if (m.rows() != m.cols()) throw InputError("determinant of a non-square matrix");
    const int n = m.rows();
    if (n == 0) return Scalar(1);
    Echelon e = eliminate(m);
    if (static_cast<int>(e.pivotCols.size()) < n) return Scalar();
    // Bareiss: the last pivot of the scaled matrix is its determinant
    Scalar det = e.m.at(n - 1, n - 1);
    if (e.swaps % 2 == 1) det = -det;
    for (const Scalar& s : e.rowScale) det /= s;
    return det;
}

}  // namespace p3lie
