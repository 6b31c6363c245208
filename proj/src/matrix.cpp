#include "tdkit/matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace tdkit {

Mat::Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols)
{
    if (rows == 0 || cols == 0) throw std::invalid_argument("matrix dimensions must be positive");
}

Mat::Mat(std::size_t rows, std::size_t cols, std::vector<Rat> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries))
{
    if (rows == 0 || cols == 0) throw std::invalid_argument("matrix dimensions must be positive");
    if (data_.size() != rows * cols) throw std::invalid_argument("matrix entry count mismatch");
}

Mat Mat::identity(std::size_t n)
{
    Mat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Rat(1);
    return m;
}

Mat Mat::diag(std::span<const Rat> values)
{
    Mat m(values.size(), values.size());
    for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
    return m;
}

Mat Mat::from_rows(std::initializer_list<std::initializer_list<Rat>> rows)
{
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows.begin()->size();
    std::vector<Rat> data;
    data.reserve(r * c);
    for (const auto& row : rows) {
        if (row.size() != c) throw std::invalid_argument("ragged matrix literal");
        data.insert(data.end(), row.begin(), row.end());
    }
    return Mat(r, c, std::move(data));
}

bool Mat::is_zero() const
{
    for (const Rat& x : data_) {
        if (!x.is_zero()) return false;
    }
    return true;
}

Vec Mat::column(std::size_t j) const
{
    Vec v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
}

Mat Mat::transpose() const
{
    Mat t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

Rat Mat::trace() const
{
    Rat t(0);
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
    return t;
}

Mat& Mat::operator+=(const Mat& rhs)
{
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw std::invalid_argument("matrix sum: shape mismatch");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += rhs.data_[k];
    return *this;
}

Mat& Mat::operator-=(const Mat& rhs)
{
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw std::invalid_argument("matrix difference: shape mismatch");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= rhs.data_[k];
    return *this;
}

Mat& Mat::operator*=(const Rat& s)
{
    for (Rat& x : data_) x *= s;
    return *this;
}

Mat operator*(const Mat& a, const Mat& b)
{
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product: dimension mismatch");
    Mat c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Rat& aik = a(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) {
                if (!b(k, j).is_zero()) c(i, j) += aik * b(k, j);
            }
        }
    }
    return c;
}

Mat mat_mul(const Mat& a, const Mat& b) { return a * b; }

Vec mat_vec(const Mat& a, std::span<const Rat> v)
{
    if (a.cols() != v.size()) throw std::invalid_argument("matrix-vector product: dimension mismatch");
    Vec out(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (!v[j].is_zero()) out[i] += a(i, j) * v[j];
        }
    return out;
}

Mat commutator(const Mat& a, const Mat& b)
{
    if (!a.is_square() || !b.is_square() || a.rows() != b.rows()) {
        throw std::invalid_argument("commutator: need square matrices of equal size");
    }
    return a * b - b * a;
}

std::ostream& operator<<(std::ostream& os, const Mat& m)
{
    os << '[';
    for (std::size_t i = 0; i < m.rows(); ++i) {
        os << (i ? ", [" : "[");
        for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? ", " : "") << m(i, j);
        os << ']';
    }
    return os << ']';
}

} // namespace tdkit
