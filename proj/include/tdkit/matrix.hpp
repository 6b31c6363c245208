#pragma once

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <span>
#include <vector>

#include "tdkit/rat.hpp"

namespace tdkit {

using Vec = std::vector<Rat>;

/// Dense row-major matrix over the rationals.
class Mat {
public:
    /// Zero matrix. Throws std::invalid_argument if either dimension is 0.
    Mat(std::size_t rows, std::size_t cols);
    Mat(std::size_t rows, std::size_t cols, std::vector<Rat> entries);

    static Mat identity(std::size_t n);
    static Mat diag(std::span<const Rat> values);
    static Mat from_rows(std::initializer_list<std::initializer_list<Rat>> rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }
    bool is_zero() const;

    Rat& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rat& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    const std::vector<Rat>& entries() const { return data_; }
    Vec column(std::size_t j) const;
    Mat transpose() const;
    Rat trace() const;

    Mat& operator+=(const Mat& rhs);
    Mat& operator-=(const Mat& rhs);
    Mat& operator*=(const Rat& s);

    friend Mat operator+(Mat a, const Mat& b) { return a += b; }
    friend Mat operator-(Mat a, const Mat& b) { return a -= b; }
    friend Mat operator*(Mat a, const Rat& s) { return a *= s; }
    friend Mat operator*(const Rat& s, Mat a) { return a *= s; }
    friend Mat operator-(Mat a) { return a *= Rat(-1); }
    friend Mat operator*(const Mat& a, const Mat& b);
    friend bool operator==(const Mat& a, const Mat& b) = default;

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Rat> data_;
};

/// Throws std::invalid_argument when a.cols() != b.rows().
Mat mat_mul(const Mat& a, const Mat& b);
Vec mat_vec(const Mat& a, std::span<const Rat> v);
/// ab - ba. Throws std::invalid_argument unless both are square of equal size.
Mat commutator(const Mat& a, const Mat& b);

std::ostream& operator<<(std::ostream& os, const Mat& m);

} // namespace tdkit
