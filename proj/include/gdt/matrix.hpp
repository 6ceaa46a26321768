#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace gdt {

/// Dense real matrix, row-major storage. Constructors reject non-finite
/// entries; shapes are immutable after construction.
class Mat {
public:
    Mat() = default;

    Mat(std::size_t rows, std::size_t cols, double fill = 0.0)
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {
        if (!std::isfinite(fill)) throw std::invalid_argument("Mat: non-finite fill value");
    }

    Mat(std::size_t rows, std::size_t cols, std::vector<double> entries)
        : rows_(rows), cols_(cols), data_(std::move(entries)) {
        if (data_.size() != rows_ * cols_)
            throw std::invalid_argument("Mat: entry count does not match rows*cols");
        for (double v : data_)
            if (!std::isfinite(v)) throw std::invalid_argument("Mat: non-finite entry");
    }

    Mat(std::initializer_list<std::initializer_list<double>> init) {
        rows_ = init.size();
        cols_ = rows_ ? init.begin()->size() : 0;
        data_.reserve(rows_ * cols_);
        for (const auto& row : init) {
            if (row.size() != cols_) throw std::invalid_argument("Mat: ragged initializer");
            for (double v : row) {
                if (!std::isfinite(v)) throw std::invalid_argument("Mat: non-finite entry");
                data_.push_back(v);
            }
        }
    }

    static Mat identity(std::size_t n) {
        Mat m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t size() const { return data_.size(); }
    bool empty() const { return data_.empty(); }

    double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    double* row_ptr(std::size_t i) { return data_.data() + i * cols_; }
    const double* row_ptr(std::size_t i) const { return data_.data() + i * cols_; }

    std::span<const double> entries() const { return data_; }
    std::span<double> entries() { return data_; }

    bool same_shape(const Mat& o) const { return rows_ == o.rows_ && cols_ == o.cols_; }

    bool all_finite() const {
        for (double v : data_)
            if (!std::isfinite(v)) return false;
        return true;
    }

    Mat& operator+=(const Mat& o) {
        check_shape(o, "+=");
        for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
        return *this;
    }
    Mat& operator-=(const Mat& o) {
        check_shape(o, "-=");
        for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
        return *this;
    }
    Mat& operator*=(double a) {
        for (double& v : data_) v *= a;
        return *this;
    }

    friend Mat operator+(Mat a, const Mat& b) { return a += b; }
    friend Mat operator-(Mat a, const Mat& b) { return a -= b; }
    friend Mat operator*(Mat a, double s) { return a *= s; }
    friend Mat operator*(double s, Mat a) { return a *= s; }

private:
    void check_shape(const Mat& o, const char* op) const {
        if (!same_shape(o))
            throw std::invalid_argument(std::string("Mat: shape mismatch in ") + op);
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

inline Mat transpose(const Mat& a) {
    Mat t(a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
    return t;
}

/// C = A * B
inline Mat matmul(const Mat& a, const Mat& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matmul: inner dimensions differ");
    Mat c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        double* ci = c.row_ptr(i);
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const double aik = a(i, k);
            if (aik == 0.0) continue;
            const double* bk = b.row_ptr(k);
            for (std::size_t j = 0; j < b.cols(); ++j) ci[j] += aik * bk[j];
        }
    }
    return c;
}

/// C = A^T * B
inline Mat matmul_tn(const Mat& a, const Mat& b) {
    if (a.rows() != b.rows()) throw std::invalid_argument("matmul_tn: row counts differ");
    Mat c(a.cols(), b.cols());
    for (std::size_t k = 0; k < a.rows(); ++k) {
        const double* ak = a.row_ptr(k);
        const double* bk = b.row_ptr(k);
        for (std::size_t i = 0; i < a.cols(); ++i) {
            const double aki = ak[i];
            if (aki == 0.0) continue;
            double* ci = c.row_ptr(i);
            for (std::size_t j = 0; j < b.cols(); ++j) ci[j] += aki * bk[j];
        }
    }
    return c;
}

/// C = A * B^T
inline Mat matmul_nt(const Mat& a, const Mat& b) {
    if (a.cols() != b.cols()) throw std::invalid_argument("matmul_nt: column counts differ");
    Mat c(a.rows(), b.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        const double* ai = a.row_ptr(i);
        double* ci = c.row_ptr(i);
        for (std::size_t j = 0; j < b.rows(); ++j) {
            const double* bj = b.row_ptr(j);
            double s = 0.0;
            for (std::size_t k = 0; k < a.cols(); ++k) s += ai[k] * bj[k];
            ci[j] = s;
        }
    }
    return c;
}

inline double dot(const Mat& a, const Mat& b) {
    if (!a.same_shape(b)) throw std::invalid_argument("dot: shape mismatch");
    double s = 0.0;
    auto ea = a.entries(), eb = b.entries();
    for (std::size_t i = 0; i < ea.size(); ++i) s += ea[i] * eb[i];
    return s;
}

inline double frobenius_sq(const Mat& a) {
    double s = 0.0;
    for (double v : a.entries()) s += v * v;
    return s;
}

inline double frobenius_norm(const Mat& a) { return std::sqrt(frobenius_sq(a)); }

inline double max_abs(const Mat& a) {
    double m = 0.0;
    for (double v : a.entries()) m = std::max(m, std::abs(v));
    return m;
}

inline double row_sq_norm(const Mat& a, std::size_t i) {
    const double* p = a.row_ptr(i);
    double s = 0.0;
    for (std::size_t j = 0; j < a.cols(); ++j) s += p[j] * p[j];
    return s;
}

inline double col_sq_norm(const Mat& a, std::size_t j) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i) s += a(i, j) * a(i, j);
    return s;
}

/// Indices of rows with squared norm above tol.
inline std::vector<std::size_t> nonzero_rows(const Mat& a, double tol = 0.0) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < a.rows(); ++i)
        if (row_sq_norm(a, i) > tol * tol) idx.push_back(i);
    return idx;
}

inline std::vector<std::size_t> nonzero_cols(const Mat& a, double tol = 0.0) {
    std::vector<std::size_t> idx;
    for (std::size_t j = 0; j < a.cols(); ++j)
        if (col_sq_norm(a, j) > tol * tol) idx.push_back(j);
    return idx;
}

/// Stack a on top of b (column counts must match).
inline Mat vstack(const Mat& a, const Mat& b) {
    if (a.cols() != b.cols()) throw std::invalid_argument("vstack: column counts differ");
    Mat c(a.rows() + b.rows(), a.cols());
    std::copy(a.entries().begin(), a.entries().end(), c.entries().begin());
    std::copy(b.entries().begin(), b.entries().end(), c.entries().begin() + a.size());
    return c;
}

}  // namespace gdt
