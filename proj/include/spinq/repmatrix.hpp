#pragma once

#include "spinq/radext.hpp"

#include <stdexcept>
#include <vector>

namespace spinq {

/// Dense square matrix over an exact coefficient ring; multiplication skips
/// zero entries, which keeps the very sparse generator matrices cheap.
template <class T>
class Matrix {
  public:
    Matrix() : n_(0) {}
    explicit Matrix(int n) : n_(n), a_(static_cast<size_t>(n) * n) {}

    static Matrix identity(int n) {
        Matrix m(n);
        for (int i = 0; i < n; ++i) m.at(i, i) = T(Rat(1));
        return m;
    }

    int dim() const { return n_; }
    T& at(int i, int j) { return a_[static_cast<size_t>(i) * n_ + j]; }
    const T& at(int i, int j) const { return a_[static_cast<size_t>(i) * n_ + j]; }

    bool is_zero() const {
        for (const auto& v : a_)
            if (!v.is_zero()) return false;
        return true;
    }

    T trace() const {
        T s;
        for (int i = 0; i < n_; ++i) s += at(i, i);
        return s;
    }

    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        Matrix r = a;
        for (size_t i = 0; i < r.a_.size(); ++i) r.a_[i] += b.a_[i];
        return r;
    }
    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        Matrix r = a;
        for (size_t i = 0; i < r.a_.size(); ++i) r.a_[i] -= b.a_[i];
        return r;
    }
    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.n_ != b.n_) throw std::invalid_argument("matrix size mismatch");
        Matrix r(a.n_);
        for (int i = 0; i < a.n_; ++i)
            for (int k = 0; k < a.n_; ++k) {
                const T& v = a.at(i, k);
                if (v.is_zero()) continue;
                for (int j = 0; j < a.n_; ++j) {
                    const T& w = b.at(k, j);
                    if (!w.is_zero()) r.at(i, j) += v * w;
                }
            }
        return r;
    }
    friend Matrix operator*(const Matrix& a, const T& c) {
        Matrix r = a;
        for (auto& v : r.a_) v = v * c;
        return r;
    }
    friend Matrix operator-(const Matrix& a) {
        Matrix r = a;
        for (auto& v : r.a_) v = T() - v;
        return r;
    }
    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.n_ == b.n_ && a.a_ == b.a_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  private:
    int n_;
    std::vector<T> a_;
};

using RMatrix = Matrix<RadExt>;

}  // namespace spinq
