#pragma once

#include <cassert>
#include <initializer_list>
#include <ostream>

#include "hsect/exact/int.hpp"

namespace hsect {

// Dense integer matrix, row-major.
class IntMat {
public:
    IntMat() : rows_(0), cols_(0) {}
    IntMat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), e_(rows * cols) {}
    IntMat(std::initializer_list<std::initializer_list<long>> init) {
        rows_ = init.size();
        cols_ = rows_ ? init.begin()->size() : 0;
        e_.reserve(rows_ * cols_);
        for (const auto& row : init) {
            assert(row.size() == cols_);
            for (long v : row) e_.emplace_back(v);
        }
    }

    static IntMat identity(std::size_t n) {
        IntMat m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Int& operator()(std::size_t i, std::size_t j) {
        assert(i < rows_ && j < cols_);
        return e_[i * cols_ + j];
    }
    const Int& operator()(std::size_t i, std::size_t j) const {
        assert(i < rows_ && j < cols_);
        return e_[i * cols_ + j];
    }

    bool operator==(const IntMat& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
    }

    bool is_symmetric() const {
        if (rows_ != cols_) return false;
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = i + 1; j < cols_; ++j)
                if ((*this)(i, j) != (*this)(j, i)) return false;
        return true;
    }

    bool is_zero() const {
        for (const Int& v : e_)
            if (v != 0) return false;
        return true;
    }

    IntMat transpose() const {
        IntMat t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    IntMat operator*(const IntMat& o) const {
        assert(cols_ == o.rows_);
        IntMat r(rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const Int& a = (*this)(i, k);
                if (a == 0) continue;
                for (std::size_t j = 0; j < o.cols_; ++j) r(i, j) += a * o(k, j);
            }
        return r;
    }

    IntVec operator*(const IntVec& v) const {
        assert(cols_ == v.size());
        IntVec r(rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r[i] += (*this)(i, j) * v[j];
        return r;
    }

    void swap_rows(std::size_t i, std::size_t j) {
        for (std::size_t k = 0; k < cols_; ++k) std::swap((*this)(i, k), (*this)(j, k));
    }
    void swap_cols(std::size_t i, std::size_t j) {
        for (std::size_t k = 0; k < rows_; ++k) std::swap((*this)(k, i), (*this)(k, j));
    }
    // row i += c * row j
    void add_row(std::size_t i, std::size_t j, const Int& c) {
        for (std::size_t k = 0; k < cols_; ++k) (*this)(i, k) += c * (*this)(j, k);
    }
    void add_col(std::size_t i, std::size_t j, const Int& c) {
        for (std::size_t k = 0; k < rows_; ++k) (*this)(k, i) += c * (*this)(k, j);
    }
    void negate_row(std::size_t i) {
        for (std::size_t k = 0; k < cols_; ++k) (*this)(i, k) = -(*this)(i, k);
    }
    void negate_col(std::size_t i) {
        for (std::size_t k = 0; k < rows_; ++k) (*this)(k, i) = -(*this)(k, i);
    }

    friend std::ostream& operator<<(std::ostream& os, const IntMat& m) {
        for (std::size_t i = 0; i < m.rows_; ++i) {
            os << (i ? "\n[" : "[");
            for (std::size_t j = 0; j < m.cols_; ++j) os << (j ? " " : "") << m(i, j).get_str();
            os << "]";
        }
        return os;
    }

private:
    std::size_t rows_, cols_;
    std::vector<Int> e_;
};

inline Int dot(const IntVec& a, const IntVec& b) {
    assert(a.size() == b.size());
    Int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

// x^T m y for symmetric pairing
inline Int pair_with(const IntMat& m, const IntVec& x, const IntVec& y) {
    return dot(x, m * y);
}

}  // namespace hsect
