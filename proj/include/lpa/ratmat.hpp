/*
 * ratmat.hpp
 * ----------
 * Dense exact matrices over Q: just enough linear algebra (product, sum,
 * inverse, rank) for auditing finite-dimensional representations.
 */
#pragma once

#include <optional>
#include <sstream>
#include <vector>

#include "lpa/error.hpp"
#include "lpa/ring.hpp"

namespace lpa {

class RatMat {
public:
    RatMat() = default;
    RatMat(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols, Rat(0)) {}

    static RatMat identity(std::size_t n) {
        RatMat m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rat& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Rat& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    bool is_zero() const {
        for (const Rat& x : a_)
            if (x != 0) return false;
        return true;
    }

    friend bool operator==(const RatMat& a, const RatMat& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }

    friend RatMat operator*(const RatMat& a, const RatMat& b) {
        if (a.cols_ != b.rows_) throw precondition_error("matrix product shape mismatch");
        RatMat r(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const Rat& aik = a(i, k);
                if (aik == 0) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) r(i, j) += aik * b(k, j);
            }
        return r;
    }

    friend RatMat operator+(const RatMat& a, const RatMat& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw precondition_error("matrix sum shape mismatch");
        RatMat r = a;
        for (std::size_t i = 0; i < r.a_.size(); ++i) r.a_[i] += b.a_[i];
        return r;
    }

    friend RatMat operator-(const RatMat& a, const RatMat& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw precondition_error("matrix difference shape mismatch");
        RatMat r = a;
        for (std::size_t i = 0; i < r.a_.size(); ++i) r.a_[i] -= b.a_[i];
        return r;
    }

    // Gauss-Jordan; nullopt when singular or non-square.
    std::optional<RatMat> inverse() const {
        if (rows_ != cols_) return std::nullopt;
        RatMat a = *this, inv = identity(rows_);
        for (std::size_t col = 0; col < cols_; ++col) {
            std::size_t piv = col;
            while (piv < rows_ && a(piv, col) == 0) ++piv;
            if (piv == rows_) return std::nullopt;
            for (std::size_t j = 0; j < cols_; ++j) {
                std::swap(a(piv, j), a(col, j));
                std::swap(inv(piv, j), inv(col, j));
            }
            Rat d = a(col, col);
            for (std::size_t j = 0; j < cols_; ++j) {
                a(col, j) /= d;
                inv(col, j) /= d;
            }
            for (std::size_t i = 0; i < rows_; ++i) {
                if (i == col || a(i, col) == 0) continue;
                Rat f = a(i, col);
                for (std::size_t j = 0; j < cols_; ++j) {
                    a(i, j) -= f * a(col, j);
                    inv(i, j) -= f * inv(col, j);
                }
            }
        }
        return inv;
    }

    std::size_t rank() const {
        RatMat a = *this;
        std::size_t r = 0;
        for (std::size_t col = 0; col < cols_ && r < rows_; ++col) {
            std::size_t piv = r;
            while (piv < rows_ && a(piv, col) == 0) ++piv;
            if (piv == rows_) continue;
            for (std::size_t j = 0; j < cols_; ++j) std::swap(a(piv, j), a(r, j));
            for (std::size_t i = r + 1; i < rows_; ++i) {
                if (a(i, col) == 0) continue;
                Rat f = a(i, col) / a(r, col);
                for (std::size_t j = col; j < cols_; ++j) a(i, j) -= f * a(r, j);
            }
            ++r;
        }
        return r;
    }

    std::string str() const {
        std::ostringstream os;
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t j = 0; j < cols_; ++j) {
                if (j) os << " ";
                os << (*this)(i, j);
            }
            os << "\n";
        }
        return os.str();
    }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Rat> a_;
};

}  // namespace lpa
