#include "p3lie/tensor.hpp"

#include <array>

namespace p3lie {

bool isZeroVec(const Vec& v) {
    for (const auto& s : v)
        if (!s.isZero()) return false;
    return true;
}

void addScaled(Vec& dst, const Scalar& w, std::span<const Scalar> src) {
    if (w.isZero()) return;
    for (std::size_t i = 0; i < src.size(); ++i) {
        if (src[i].isZero()) continue;
        dst[i] += w * src[i];
    }
}

Tensor::Tensor(std::vector<int> dims) : dims_(std::move(dims)) {
    if (dims_.empty() || dims_.size() > 4)
        throw InputError("tensor rank must be between 1 and 4");
    std::size_t n = 1;
    for (int d : dims_) {
        if (d < 0) throw InputError("negative tensor extent");
        n *= static_cast<std::size_t>(d);
    }
    data_.assign(n, Scalar());
}

std::size_t Tensor::offset(std::span<const int> idx) const {
    if (idx.size() != dims_.size()) throw InputError("tensor index rank mismatch");
    std::size_t off = 0;
    for (std::size_t k = 0; k < idx.size(); ++k) {
        if (idx[k] < 0 || idx[k] >= dims_[k]) throw InputError("tensor index out of range");
        off = off * static_cast<std::size_t>(dims_[k]) + static_cast<std::size_t>(idx[k]);
    }
    return off;
}

bool Tensor::isZero() const {
    for (const auto& s : data_)
        if (!s.isZero()) return false;
    return true;
}

Tensor transpose_factors(const Tensor& t, int f1, int f2) {
    const int r = t.rank();
    if (f1 < 0 || f2 < 0 || f1 >= r || f2 >= r)
        throw InputError("transpose_factors: factor index out of range");
    if (f1 == f2) throw InputError("transpose_factors: factors must differ");
    if (t.dims()[f1] != t.dims()[f2])
        throw InputError("transpose_factors: factor extents differ");

    Tensor out(t.dims());
    std::array<int, 4> idx{0, 0, 0, 0};
    const auto& dims = t.dims();
    std::size_t total = t.data().size();
    for (std::size_t flat = 0; flat < total; ++flat) {
        if (t.data()[flat].isZero()) {
            // advance odometer
        } else {
            std::array<int, 4> swapped = idx;
            std::swap(swapped[f1], swapped[f2]);
            out.at(std::span<const int>(swapped.data(), r)) = t.data()[flat];
        }
        for (int k = r - 1; k >= 0; --k) {
            if (++idx[k] < dims[k]) break;
            idx[k] = 0;
        }
    }
    return out;
}

Tensor wedge3(int u, int v, int w, int n) {
    if (u < 0 || v < 0 || w < 0 || u >= n || v >= n || w >= n)
        throw InputError("wedge3: basis index out of range");
    Tensor out({n, n, n});
    const int perm[6][3] = {{u, v, w}, {v, w, u}, {w, u, v}, {v, u, w}, {u, w, v}, {w, v, u}};
    const int sgn[6] = {1, 1, 1, -1, -1, -1};
    for (int s = 0; s < 6; ++s)
        out.at3(perm[s][0], perm[s][1], perm[s][2]) += Scalar(sgn[s]);
    return out;
}

Matrix::Matrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw InputError("negative matrix extent");
    a_.assign(static_cast<std::size_t>(rows) * cols, Scalar());
}

Matrix Matrix::identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = Scalar(1);
    return m;
}

std::size_t Matrix::check(int r, int c) const {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
        throw InputError("matrix index out of range");
    return static_cast<std::size_t>(r) * cols_ + c;
}

Matrix Matrix::transposed() const {
    Matrix m(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) m.at(c, r) = at(r, c);
    return m;
}

bool Matrix::isZero() const {
    for (const auto& s : a_)
        if (!s.isZero()) return false;
    return true;
}

Matrix& Matrix::operator+=(const Matrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw InputError("matrix shape mismatch");
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw InputError("matrix shape mismatch");
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
    return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw InputError("matrix shape mismatch in product");
    Matrix out(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
        for (int k = 0; k < a.cols_; ++k) {
            const Scalar& aik = a.at(i, k);
            if (aik.isZero()) continue;
            for (int j = 0; j < b.cols_; ++j) {
                const Scalar& bkj = b.at(k, j);
                if (bkj.isZero()) continue;
                out.at(i, j) += aik * bkj;
            }
        }
    return out;
}

Matrix operator*(const Scalar& s, const Matrix& m) {
    Matrix out(m.rows_, m.cols_);
    if (s.isZero()) return out;
    for (std::size_t i = 0; i < m.a_.size(); ++i) out.a_[i] = s * m.a_[i];
    return out;
}

Vec Matrix::apply(const Vec& v) const {
    if (static_cast<int>(v.size()) != cols_) throw InputError("matrix/vector shape mismatch");
    Vec out(static_cast<std::size_t>(rows_), Scalar());
    for (int c = 0; c < cols_; ++c) {
        if (v[c].isZero()) continue;
        for (int r = 0; r < rows_; ++r) {
            const Scalar& m = at(r, c);
            if (m.isZero()) continue;
            out[r] += m * v[c];
        }
    }
    return out;
}

Vec Matrix::column(int c) const {
    Vec out(static_cast<std::size_t>(rows_), Scalar());
    for (int r = 0; r < rows_; ++r) out[r] = at(r, c);
    return out;
}

void Matrix::addScaledMatrix(const Scalar& w, const Matrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw InputError("matrix shape mismatch");
    if (w.isZero()) return;
    for (std::size_t i = 0; i < a_.size(); ++i) {
        if (o.a_[i].isZero()) continue;
        a_[i] += w * o.a_[i];
    }
}

}  // namespace p3lie
