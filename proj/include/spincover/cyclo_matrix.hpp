#pragma once

// Small dense matrices over CycloNum: just enough linear algebra for the
// matrix oracle (products, traces, kernels, intertwiner solving).

#include <stdexcept>
#include <vector>

#include "spincover/cyclo.hpp"

namespace spincover {

class CMatrix {
public:
    CMatrix() : rows_(0), cols_(0) {}
    CMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

    static CMatrix identity(int n) {
        CMatrix m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = CycloNum(1);
        return m;
    }
    static CMatrix scalar(int n, const CycloNum& c) {
        CMatrix m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = c;
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    CycloNum& at(int r, int c) { return a_[r * cols_ + c]; }
    const CycloNum& at(int r, int c) const { return a_[r * cols_ + c]; }

    friend CMatrix operator*(const CMatrix& x, const CMatrix& y) {
        if (x.cols_ != y.rows_) throw std::domain_error("cmatrix: shape mismatch");
        CMatrix z(x.rows_, y.cols_);
        for (int i = 0; i < x.rows_; ++i)
            for (int k = 0; k < x.cols_; ++k) {
                if (x.at(i, k).is_zero()) continue;
                for (int j = 0; j < y.cols_; ++j) {
                    if (y.at(k, j).is_zero()) continue;
                    z.at(i, j) += x.at(i, k) * y.at(k, j);
                }
            }
        return z;
    }

    friend CMatrix operator+(const CMatrix& x, const CMatrix& y) {
        if (x.rows_ != y.rows_ || x.cols_ != y.cols_) throw std::domain_error("cmatrix: shape mismatch");
        CMatrix z = x;
        for (size_t i = 0; i < z.a_.size(); ++i) z.a_[i] += y.a_[i];
        return z;
    }

    friend CMatrix operator-(const CMatrix& x, const CMatrix& y) {
        if (x.rows_ != y.rows_ || x.cols_ != y.cols_) throw std::domain_error("cmatrix: shape mismatch");
        CMatrix z = x;
        for (size_t i = 0; i < z.a_.size(); ++i) z.a_[i] -= y.a_[i];
        return z;
    }

    friend CMatrix operator*(const CycloNum& c, const CMatrix& x) {
        CMatrix z = x;
        for (auto& v : z.a_) v = c * v;
        return z;
    }

    bool operator==(const CMatrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) return false;
        for (size_t i = 0; i < a_.size(); ++i)
            if (!(a_[i] == o.a_[i])) return false;
        return true;
    }

    CycloNum trace() const {
        CycloNum t;
        for (int i = 0; i < rows_ && i < cols_; ++i) t += at(i, i);
        return t;
    }

    static CMatrix kronecker(const CMatrix& x, const CMatrix& y) {
        CMatrix z(x.rows_ * y.rows_, x.cols_ * y.cols_);
        for (int i = 0; i < x.rows_; ++i)
            for (int j = 0; j < x.cols_; ++j) {
                if (x.at(i, j).is_zero()) continue;
                for (int r = 0; r < y.rows_; ++r)
                    for (int c = 0; c < y.cols_; ++c)
                        if (!y.at(r, c).is_zero())
                            z.at(i * y.rows_ + r, j * y.cols_ + c) = x.at(i, j) * y.at(r, c);
            }
        return z;
    }

    CMatrix inverse() const {
        if (rows_ != cols_) throw std::domain_error("cmatrix: inverse of non-square");
        int n = rows_;
        CMatrix aug(n, 2 * n);
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) aug.at(i, j) = at(i, j);
            aug.at(i, n + i) = CycloNum(1);
        }
        for (int col = 0, row = 0; col < n; ++col, ++row) {
            int pr = -1;
            for (int r = row; r < n; ++r)
                if (!aug.at(r, col).is_zero()) { pr = r; break; }
            if (pr < 0) throw std::domain_error("cmatrix: singular");
            for (int j = 0; j < 2 * n; ++j) std::swap(aug.at(row, j), aug.at(pr, j));
            CycloNum inv = aug.at(row, col).inverse();
            for (int j = 0; j < 2 * n; ++j) aug.at(row, j) = inv * aug.at(row, j);
            for (int r = 0; r < n; ++r) {
                if (r == row || aug.at(r, col).is_zero()) continue;
                CycloNum f = aug.at(r, col);
                for (int j = 0; j < 2 * n; ++j) aug.at(r, j) -= f * aug.at(row, j);
            }
        }
        CMatrix out(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) out.at(i, j) = aug.at(i, n + j);
        return out;
    }

    // Basis of the column space, as columns.
    std::vector<std::vector<CycloNum>> column_space_basis() const {
        CMatrix work = *this;
        std::vector<int> pivots;
        int row = 0;
        for (int col = 0; col < cols_ && row < rows_; ++col) {
            int pr = -1;
            for (int r = row; r < rows_; ++r)
                if (!work.at(r, col).is_zero()) { pr = r; break; }
            if (pr < 0) continue;
            for (int j = 0; j < cols_; ++j) std::swap(work.at(row, j), work.at(pr, j));
            CycloNum inv = work.at(row, col).inverse();
            for (int j = 0; j < cols_; ++j) work.at(row, j) = inv * work.at(row, j);
            for (int r = 0; r < rows_; ++r) {
                if (r == row || work.at(r, col).is_zero()) continue;
                CycloNum f = work.at(r, col);
                for (int j = 0; j < cols_; ++j) work.at(r, j) -= f * work.at(row, j);
            }
            pivots.push_back(col);
            ++row;
        }
        std::vector<std::vector<CycloNum>> basis;
        for (int col : pivots) {
            std::vector<CycloNum> v(rows_);
            for (int r = 0; r < rows_; ++r) v[r] = at(r, col);
            basis.push_back(std::move(v));
        }
        return basis;
    }

private:
    int rows_, cols_;
    std::vector<CycloNum> a_;
};

}  // namespace spincover
