#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "krall/poly.hpp"

namespace krall {

template <class R>
class Matrix {
public:
    Matrix() : r_(0), c_(0) {}
    Matrix(int rows, int cols)
        : r_(rows), c_(cols), d_(static_cast<size_t>(rows) * static_cast<size_t>(cols)) {
        if (rows < 0 || cols < 0) throw std::invalid_argument("Matrix: negative dimension");
    }

    int rows() const { return r_; }
    int cols() const { return c_; }

    R& at(int i, int j) { return d_[index(i, j)]; }
    const R& at(int i, int j) const { return d_[index(i, j)]; }

    void swap_rows(int i, int j) {
        for (int c = 0; c < c_; ++c) std::swap(at(i, c), at(j, c));
    }

private:
    int r_, c_;
    std::vector<R> d_;
    size_t index(int i, int j) const {
        if (i < 0 || i >= r_ || j < 0 || j >= c_) throw std::out_of_range("Matrix: index");
        return static_cast<size_t>(i) * static_cast<size_t>(c_) + static_cast<size_t>(j);
    }
};

namespace detail {

template <class R>
R det_cofactor(const Matrix<R>& m) {
    const int n = m.rows();
    if (n == 1) return m.at(0, 0);
    if (n == 2) return m.at(0, 0) * m.at(1, 1) - m.at(0, 1) * m.at(1, 0);
    R acc{};
    for (int j = 0; j < n; ++j) {
        if (m.at(0, j).is_zero()) continue;
        Matrix<R> sub(n - 1, n - 1);
        for (int i = 1; i < n; ++i) {
            int cc = 0;
            for (int c = 0; c < n; ++c) {
                if (c == j) continue;
                sub.at(i - 1, cc++) = m.at(i, c);
            }
        }
        R term = m.at(0, j) * det_cofactor(sub);
        if (j % 2 == 0)
            acc += term;
        else
            acc -= term;
    }
    return acc;
}

// Fraction-free (Bareiss) elimination; every division is exact in R.
template <class R>
R det_bareiss(Matrix<R> m) {
    const int n = m.rows();
    R prev = R(1);
    bool negate = false;
    for (int t = 0; t + 1 < n; ++t) {
        int piv = -1;
        for (int i = t; i < n; ++i)
            if (!m.at(i, t).is_zero()) {
                piv = i;
                break;
            }
        if (piv < 0) return R{};
        if (piv != t) {
            m.swap_rows(piv, t);
            negate = !negate;
        }
        for (int i = t + 1; i < n; ++i) {
            for (int j = t + 1; j < n; ++j)
                m.at(i, j) = exact_div(m.at(i, j) * m.at(t, t) - m.at(i, t) * m.at(t, j), prev);
            m.at(i, t) = R{};
        }
        prev = m.at(t, t);
    }
    R d = m.at(n - 1, n - 1);
    return negate ? -d : d;
}

}  // namespace detail

/// Exact determinant: cofactor expansion for small sizes, fraction-free
/// elimination above. det of the empty matrix is 1.
template <class R>
R det(const Matrix<R>& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("det: matrix not square");
    if (m.rows() == 0) return R(1);
    if (m.rows() <= 4) return detail::det_cofactor(m);
    return detail::det_bareiss(m);
}

template <class R>
R pow_ring(const R& a, long e) {
    if (e < 0) throw std::invalid_argument("pow_ring: negative exponent");
    R r = R(1), b = a;
    for (long k = e; k > 0; k >>= 1) {
        if (k & 1) r = r * b;
        b = b * b;
    }
    return r;
}

/// Resultant as the determinant of the Sylvester matrix with the rows of p
/// first: Res(p, q) = lc(p)^deg(q) * prod q(roots of p). Zero input is an
/// error ("undefined resultant").
template <class R, class Var>
R resultant(const Poly<R, Var>& p, const Poly<R, Var>& q) {
    if (p.is_zero() || q.is_zero()) throw std::domain_error("undefined resultant: zero polynomial");
    const int dp = p.degree(), dq = q.degree();
    if (dp == 0 && dq == 0) return R(1);
    if (dp == 0) return pow_ring(p.coeff(0), dq);
    if (dq == 0) return pow_ring(q.coeff(0), dp);
    Matrix<R> s(dp + dq, dp + dq);
    for (int i = 0; i < dq; ++i)
        for (int j = 0; j <= dp; ++j) s.at(i, i + j) = p.coeff(dp - j);
    for (int i = 0; i < dp; ++i)
        for (int j = 0; j <= dq; ++j) s.at(dq + i, i + j) = q.coeff(dq - j);
    return det(s);
}

}  // namespace krall
