#ifndef P3LIE_TENSOR_HPP
#define P3LIE_TENSOR_HPP

#include <initializer_list>
#include <span>
#include <vector>

#include "p3lie/scalar.hpp"

namespace p3lie {

using Vec = std::vector<Scalar>;

bool isZeroVec(const Vec& v);
void addScaled(Vec& dst, const Scalar& w, std::span<const Scalar> src);

/*
 * Dense tensor of rank 1..4 with exact rational entries, row-major.
 * All indices are 0-based; file formats translate from the 1-based
 * convention on load/save.
 */
class Tensor {
public:
    Tensor() = default;
    explicit Tensor(std::vector<int> dims);

    int rank() const { return static_cast<int>(dims_.size()); }
    const std::vector<int>& dims() const { return dims_; }

    const Scalar& at(std::span<const int> idx) const { return data_[offset(idx)]; }
    Scalar& at(std::span<const int> idx) { return data_[offset(idx)]; }

    const Scalar& at(std::initializer_list<int> idx) const {
        return at(std::span<const int>(idx.begin(), idx.size()));
    }
    Scalar& at(std::initializer_list<int> idx) {
        return at(std::span<const int>(idx.begin(), idx.size()));
    }

    // unchecked fast paths for inner loops; callers own the bounds
    const Scalar& at3(int i, int j, int k) const {
        return data_[(static_cast<std::size_t>(i) * dims_[1] + j) * dims_[2] + k];
    }
    Scalar& at3(int i, int j, int k) {
        return data_[(static_cast<std::size_t>(i) * dims_[1] + j) * dims_[2] + k];
    }
    const Scalar& at4(int i, int j, int k, int l) const {
        return data_[((static_cast<std::size_t>(i) * dims_[1] + j) * dims_[2] + k) * dims_[3] + l];
    }
    Scalar& at4(int i, int j, int k, int l) {
        return data_[((static_cast<std::size_t>(i) * dims_[1] + j) * dims_[2] + k) * dims_[3] + l];
    }

    // contiguous slice over the last index
    std::span<const Scalar> lastAxis3(int i, int j) const {
        return {&data_[(static_cast<std::size_t>(i) * dims_[1] + j) * dims_[2]],
                static_cast<std::size_t>(dims_[2])};
    }
    std::span<const Scalar> lastAxis4(int i, int j, int k) const {
        return {&data_[((static_cast<std::size_t>(i) * dims_[1] + j) * dims_[2] + k) * dims_[3]],
                static_cast<std::size_t>(dims_[3])};
    }

    bool isZero() const;
    friend bool operator==(const Tensor& a, const Tensor& b) {
        return a.dims_ == b.dims_ && a.data_ == b.data_;
    }

    const std::vector<Scalar>& data() const { return data_; }
    std::vector<Scalar>& data() { return data_; }

private:
    std::size_t offset(std::span<const int> idx) const;

    std::vector<int> dims_;
    std::vector<Scalar> data_;
};

// Exchanges tensor factors f1 and f2 (0-based); an involution.
Tensor transpose_factors(const Tensor& t, int f1, int f2);

// Full antisymmetrizer (no 1/3! factor): sum over S3 of sgn(s) e_{s(u)} x e_{s(v)} x e_{s(w)}
// as a rank-3 tensor of extent n. Indices 0-based.
Tensor wedge3(int u, int v, int w, int n);

class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols);
    static Matrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    const Scalar& at(int r, int c) const { return a_[check(r, c)]; }
    Scalar& at(int r, int c) { return a_[check(r, c)]; }

    Matrix transposed() const;
    bool isZero() const;

    Matrix& operator+=(const Matrix& o);
    Matrix& operator-=(const Matrix& o);
    friend Matrix operator+(Matrix a, const Matrix& b) { a += b; return a; }
    friend Matrix operator-(Matrix a, const Matrix& b) { a -= b; return a; }
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const Scalar& s, const Matrix& m);
    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }

    Vec apply(const Vec& v) const;          // m * v
    Vec column(int c) const;
    void addScaledMatrix(const Scalar& w, const Matrix& o);

    const std::vector<Scalar>& data() const { return a_; }

private:
    std::size_t check(int r, int c) const;

    int rows_ = 0, cols_ = 0;
    std::vector<Scalar> a_;
};

}  // namespace p3lie

#endif
