#ifndef P3LIE_POLYNOMIAL_HPP
#define P3LIE_POLYNOMIAL_HPP

#include <map>
#include <string>
#include <vector>

#include "p3lie/tensor.hpp"

namespace p3lie {

/*
 * Sparse multivariate polynomial with exact rational coefficients.
 * Only used to expand determinants of generic linear combinations of
 * matrices (nondegeneracy decisions over a solution space).
 */
class Polynomial {
public:
    explicit Polynomial(int nvars = 0) : nvars_(nvars) {}
    static Polynomial constant(int nvars, Scalar c);
    static Polynomial variable(int nvars, int index);

    int nvars() const { return nvars_; }
    bool isZero() const { return terms_.empty(); }

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { a += b; return a; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { a -= b; return a; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

    Scalar evaluate(const Vec& point) const;
    std::string str() const;  // diagnostic form, deterministic term order

    const std::map<std::vector<int>, Scalar>& terms() const { return terms_; }

private:
    void insert(const std::vector<int>& expo, const Scalar& c);

    int nvars_ = 0;
    std::map<std::vector<int>, Scalar> terms_;
};

// det(sum_k t_k basis[k]) as a polynomial in t_0..t_{r-1}; all basis matrices
// must be square of equal extent.
Polynomial generic_determinant(const std::vector<Matrix>& basis, int n);

}  // namespace p3lie

#endif
