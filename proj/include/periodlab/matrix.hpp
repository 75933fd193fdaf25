#pragma once

#include "periodlab/scalar.hpp"

#include <functional>
#include <stdexcept>
#include <vector>

namespace periodlab {

// Dense matrix over the computation backend.
class Mat {
public:
    Mat() : r_(0), c_(0) {}
    Mat(size_t rows, size_t cols, const Scalar& fill)
        : r_(rows), c_(cols), d_(rows * cols, fill) {}

    static Mat identity(size_t n, const Backend& b);
    static Mat zero(size_t rows, size_t cols, const Backend& b) {
        return Mat(rows, cols, Scalar::zero(b));
    }

    size_t rows() const { return r_; }
    size_t cols() const { return c_; }

    Scalar& at(size_t i, size_t j) { return d_[i * c_ + j]; }
    const Scalar& at(size_t i, size_t j) const { return d_[i * c_ + j]; }

    Mat operator*(const Mat& o) const;
    Mat operator+(const Mat& o) const;
    Mat operator-(const Mat& o) const;
    Mat scaled(const Scalar& s) const;
    Mat transpose() const;
    Mat kron(const Mat& o) const;

    std::vector<Scalar> col(size_t j) const;
    std::vector<Scalar> apply(const std::vector<Scalar>& v) const;

    Tri equals(const Mat& o) const;

private:
    size_t r_, c_;
    std::vector<Scalar> d_;
};

// Fraction-free determinant in the style of Bareiss; pivots are chosen
// by weight and exactness is preserved since the backend is a field.
Scalar det_bareiss(Mat m);

// Independent route for tests: expansion by minors.
Scalar det_cofactor(const Mat& m);

// Gauss-Jordan inverse; throws on (certainly or possibly) singular input.
Mat inverse(Mat m);

// Solve A x = b; A square invertible.
std::vector<Scalar> solve(Mat a, std::vector<Scalar> b);

} // namespace periodlab
