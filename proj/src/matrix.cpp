#include "periodlab/matrix.hpp"

namespace periodlab {

Mat Mat::identity(size_t n, const Backend& b) {
    Mat m(n, n, Scalar::zero(b));
    Scalar one = Scalar::one(b);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = one;
    return m;
}

Mat Mat::operator*(const Mat& o) const {
    if (c_ != o.r_) throw std::invalid_argument("Mat: dimension mismatch");
    Mat out(r_, o.c_, Scalar());
    for (size_t i = 0; i < r_; ++i)
        for (size_t j = 0; j < o.c_; ++j) {
            Scalar acc = at(i, 0) * o.at(0, j);
            for (size_t k = 1; k < c_; ++k) acc = acc + at(i, k) * o.at(k, j);
            out.at(i, j) = acc;
        }
    return out;
}

Mat Mat::operator+(const Mat& o) const {
    if (r_ != o.r_ || c_ != o.c_) throw std::invalid_argument("Mat: dimension mismatch");
    Mat out = *this;
    for (size_t i = 0; i < d_.size(); ++i) out.d_[i] = out.d_[i] + o.d_[i];
    return out;
}

Mat Mat::operator-(const Mat& o) const {
    if (r_ != o.r_ || c_ != o.c_) throw std::invalid_argument("Mat: dimension mismatch");
    Mat out = *this;
    for (size_t i = 0; i < d_.size(); ++i) out.d_[i] = out.d_[i] - o.d_[i];
    return out;
}

Mat Mat::scaled(const Scalar& s) const {
    Mat out = *this;
    for (auto& x : out.d_) x = x * s;
    return out;
}

Mat Mat::transpose() const {
    Mat out(c_, r_, Scalar());
    for (size_t i = 0; i < r_; ++i)
        for (size_t j = 0; j < c_; ++j) out.at(j, i) = at(i, j);
    return out;
}

Mat Mat::kron(const Mat& o) const {
    Mat out(r_ * o.r_, c_ * o.c_, Scalar());
    for (size_t i = 0; i < r_; ++i)
        for (size_t j = 0; j < c_; ++j)
            for (size_t k = 0; k < o.r_; ++k)
                for (size_t l = 0; l < o.c_; ++l)
                    out.at(i * o.r_ + k, j * o.c_ + l) = at(i, j) * o.at(k, l);
    return out;
}

std::vector<Scalar> Mat::col(size_t j) const {
    std::vector<Scalar> v(r_);
    for (size_t i = 0; i < r_; ++i) v[i] = at(i, j);
    return v;
}

std::vector<Scalar> Mat::apply(const std::vector<Scalar>& v) const {
    if (v.size() != c_) throw std::invalid_argument("Mat: apply dimension mismatch");
    std::vector<Scalar> out(r_);
    for (size_t i = 0; i < r_; ++i) {
        Scalar acc = at(i, 0) * v[0];
        for (size_t k = 1; k < c_; ++k) acc = acc + at(i, k) * v[k];
        out[i] = acc;
    }
    return out;
}

Tri Mat::equals(const Mat& o) const {
    if (r_ != o.r_ || c_ != o.c_) return Tri::no;
    bool unknown = false;
    for (size_t i = 0; i < d_.size(); ++i) {
        Tri e = d_[i].equals(o.d_[i]);
        if (e == Tri::no) return Tri::no;
        if (e == Tri::unknown) unknown = true;
    }
    return unknown ? Tri::unknown : Tri::yes;
}

namespace {
// pick the usable pivot with maximal weight in column k at rows >= k
size_t pick_pivot(const Mat& m, size_t k) {
    size_t best = m.rows();
    double bw = 0.0;
    for (size_t i = k; i < m.rows(); ++i) {
        const Scalar& s = m.at(i, k);
        if (s.is_zero() != Tri::no) continue;
        double w = s.pivot_weight();
        if (best == m.rows() || w > bw) {
            best = i;
            bw = w;
        }
    }
    return best;
}
} // namespace

Scalar det_bareiss(Mat m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("det: not square");
    size_t n = m.rows();
    if (n == 0) throw std::invalid_argument("det: empty matrix");
    bool negate = false;
    Scalar prev; // previous pivot, divides exactly in the Bareiss recurrence
    bool have_prev = false;
    for (size_t k = 0; k + 1 < n; ++k) {
        size_t piv = pick_pivot(m, k);
        if (piv == m.rows()) {
            // column is (certainly or possibly) all zero below; determinant 0
            // in exact mode; in float mode report the zero-containing entry
            return m.at(k, k);
        }
        if (piv != k) {
            for (size_t j = 0; j < n; ++j) std::swap(m.at(piv, j), m.at(k, j));
            negate = !negate;
        }
        for (size_t i = k + 1; i < n; ++i)
            for (size_t j = k + 1; j < n; ++j) {
                Scalar t = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
                m.at(i, j) = have_prev ? t / prev : t;
            }
        prev = m.at(k, k);
        have_prev = true;
    }
    Scalar d = m.at(n - 1, n - 1);
    return negate ? -d : d;
}

Scalar det_cofactor(const Mat& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("det: not square");
    size_t n = m.rows();
    if (n == 1) return m.at(0, 0);
    Scalar acc;
    bool have = false;
    for (size_t j = 0; j < n; ++j) {
        Mat minor(n - 1, n - 1, Scalar());
        for (size_t i = 1; i < n; ++i) {
            size_t cj = 0;
            for (size_t c = 0; c < n; ++c) {
                if (c == j) continue;
                minor.at(i - 1, cj++) = m.at(i, c);
            }
        }
        Scalar term = m.at(0, j) * det_cofactor(minor);
        if (j % 2 == 1) term = -term;
        acc = have ? acc + term : term;
        have = true;
    }
    return acc;
}

Mat inverse(Mat m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("inverse: not square");
    size_t n = m.rows();
    Scalar one = m.at(0, 0).pow(0);
    Scalar zero = one - one;
    Mat inv(n, n, zero);
    for (size_t i = 0; i < n; ++i) inv.at(i, i) = one;
    for (size_t k = 0; k < n; ++k) {
        size_t piv = pick_pivot(m, k);
        if (piv == m.rows()) throw std::domain_error("inverse: singular (or not certainly invertible)");
        if (piv != k)
            for (size_t j = 0; j < n; ++j) {
                std::swap(m.at(piv, j), m.at(k, j));
                std::swap(inv.at(piv, j), inv.at(k, j));
            }
        Scalar d = m.at(k, k).inverse();
        for (size_t j = 0; j < n; ++j) {
            m.at(k, j) = m.at(k, j) * d;
            inv.at(k, j) = inv.at(k, j) * d;
        }
        for (size_t i = 0; i < n; ++i) {
            if (i == k) continue;
            if (m.at(i, k).is_zero() == Tri::yes) continue;
            Scalar f = m.at(i, k);
            for (size_t j = 0; j < n; ++j) {
                m.at(i, j) = m.at(i, j) - f * m.at(k, j);
                inv.at(i, j) = inv.at(i, j) - f * inv.at(k, j);
            }
        }
    }
    return inv;
}

std::vector<Scalar> solve(Mat a, std::vector<Scalar> b) {
    if (a.rows() != a.cols() || a.rows() != b.size())
        throw std::invalid_argument("solve: dimension mismatch");
    size_t n = a.rows();
    for (size_t k = 0; k < n; ++k) {
        size_t piv = pick_pivot(a, k);
        if (piv == a.rows()) throw std::domain_error("solve: singular system");
        if (piv != k) {
            for (size_t j = 0; j < n; ++j) std::swap(a.at(piv, j), a.at(k, j));
            std::swap(b[piv], b[k]);
        }
        Scalar d = a.at(k, k).inverse();
        for (size_t j = k; j < n; ++j) a.at(k, j) = a.at(k, j) * d;
        b[k] = b[k] * d;
        for (size_t i = 0; i < n; ++i) {
            if (i == k || a.at(i, k).is_zero() == Tri::yes) continue;
            Scalar f = a.at(i, k);
            for (size_t j = k; j < n; ++j) a.at(i, j) = a.at(i, j) - f * a.at(k, j);
            b[i] = b[i] - f * b[k];
        }
    }
    return b;
}

} // namespace periodlab
