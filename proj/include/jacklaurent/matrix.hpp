#pragma once

#include <vector>

#include "jacklaurent/error.hpp"

namespace jl {

/// Dense matrix over an exact field (RatKP or RatK).
template <class F>
class Mat {
public:
    Mat() : rows_(0), cols_(0) {}
    Mat(int rows, int cols) : rows_(rows), cols_(cols), d_(static_cast<std::size_t>(rows) * cols) {}

    static Mat identity(int n) {
        Mat m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = F(1);
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    F& at(int i, int j) { return d_[static_cast<std::size_t>(i) * cols_ + j]; }
    const F& at(int i, int j) const { return d_[static_cast<std::size_t>(i) * cols_ + j]; }

    bool is_zero() const {
        for (const F& x : d_)
            if (!x.is_zero()) return false;
        return true;
    }

    friend Mat operator*(const Mat& a, const Mat& b) {
        if (a.cols_ != b.rows_) throw Error("matrix shape mismatch");
        Mat r(a.rows_, b.cols_);
        for (int i = 0; i < a.rows_; ++i)
            for (int t = 0; t < a.cols_; ++t) {
                const F& av = a.at(i, t);
                if (av.is_zero()) continue;
                for (int j = 0; j < b.cols_; ++j) {
                    const F& bv = b.at(t, j);
                    if (!bv.is_zero()) r.at(i, j) += av * bv;
                }
            }
        return r;
    }

    friend Mat operator+(Mat a, const Mat& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error("matrix shape mismatch");
        for (std::size_t t = 0; t < a.d_.size(); ++t) a.d_[t] += b.d_[t];
        return a;
    }

    friend Mat operator-(Mat a, const Mat& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error("matrix shape mismatch");
        for (std::size_t t = 0; t < a.d_.size(); ++t) a.d_[t] -= b.d_[t];
        return a;
    }

    Mat scaled(const F& c) const {
        Mat r(*this);
        for (F& x : r.d_) x = x * c;
        return r;
    }

    friend bool operator==(const Mat& a, const Mat& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.d_ == b.d_;
    }
    friend bool operator!=(const Mat& a, const Mat& b) { return !(a == b); }

private:
    int rows_, cols_;
    std::vector<F> d_;
};

/// Rank by fraction-wise Gaussian elimination (exact field ops).
template <class F>
int rank(Mat<F> m) {
    int rk = 0;
    for (int col = 0; col < m.cols() && rk < m.rows(); ++col) {
        int pivot = -1;
        for (int i = rk; i < m.rows(); ++i) {
            if (!m.at(i, col).is_zero()) {
                pivot = i;
                break;
            }
        }
        if (pivot < 0) continue;
        if (pivot != rk)
            for (int j = 0; j < m.cols(); ++j) std::swap(m.at(pivot, j), m.at(rk, j));
        F inv = F(1) / m.at(rk, col);
        for (int i = rk + 1; i < m.rows(); ++i) {
            if (m.at(i, col).is_zero()) continue;
            F factor = m.at(i, col) * inv;
            for (int j = col; j < m.cols(); ++j) m.at(i, j) -= factor * m.at(rk, j);
        }
        ++rk;
    }
    return rk;
}

}  // namespace jl
