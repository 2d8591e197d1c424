#include "dialg/matrix.hpp"

#include "dialg/error.hpp"

#include <utility>

namespace dialg {

Vector zero_vector(Field f, std::size_t n)
{
    return Vector(n, Scalar(f));
}

Vector unit_vector(Field f, std::size_t n, std::size_t i)
{
    Vector v = zero_vector(f, n);
    v.at(i) = Scalar::one(f);
    return v;
}

bool is_zero(std::span<const Scalar> v)
{
    for (const auto& s : v)
        if (!s.is_zero())
            return false;
    return true;
}

Matrix::Matrix(Field f, std::size_t rows, std::size_t cols)
    : field_(f), rows_(rows), cols_(cols), data_(rows * cols, Scalar(f))
{
}

Matrix Matrix::identity(Field f, std::size_t n)
{
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = Scalar::one(f);
    return m;
}

Matrix Matrix::from_ints(Field f, std::initializer_list<std::initializer_list<long>> rows)
{
    const std::size_t nr = rows.size();
    const std::size_t nc = nr ? rows.begin()->size() : 0;
    Matrix m(f, nr, nc);
    std::size_t r = 0;
    for (const auto& row : rows) {
        if (row.size() != nc)
            throw Error(ErrorKind::ShapeMismatch, "ragged matrix literal");
        std::size_t c = 0;
        for (long v : row)
            m(r, c++) = Scalar(f, v);
        ++r;
    }
    return m;
}

Matrix Matrix::from_entries(Field f, std::size_t rows, std::size_t cols, std::vector<Scalar> entries)
{
    if (entries.size() != rows * cols)
        throw Error(ErrorKind::ShapeMismatch, "entry count does not match shape");
    Matrix m(f, 0, 0);
    m.rows_ = rows;
    m.cols_ = cols;
    m.data_ = std::move(entries);
    return m;
}

Matrix Matrix::from_columns(Field f, std::size_t rows, std::span<const Vector> columns)
{
    Matrix m(f, rows, columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c) {
        if (columns[c].size() != rows)
            throw Error(ErrorKind::ShapeMismatch, "column length does not match row count");
        for (std::size_t r = 0; r < rows; ++r)
            m(r, c) = columns[c][r];
    }
    return m;
}

Vector Matrix::column(std::size_t c) const
{
    Vector v;
    v.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        v.push_back((*this)(r, c));
    return v;
}

Matrix Matrix::transpose() const
{
    Matrix t(field_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            t(c, r) = (*this)(r, c);
    return t;
}

bool Matrix::is_zero() const
{
    return dialg::is_zero(data_);
}

void Matrix::check_fields() const
{
    for (const auto& s : data_)
        if (s.field() != field_)
            throw Error(ErrorKind::MixedFields, "matrix entry over " + s.field().name() +
                                                    " in a matrix over " + field_.name());
}

Vector Matrix::apply(std::span<const Scalar> v) const
{
    if (v.size() != cols_)
        throw Error(ErrorKind::ShapeMismatch, "vector length does not match column count");
    Vector out = zero_vector(field_, rows_);
    std::vector<std::size_t> support;
    for (std::size_t c = 0; c < cols_; ++c)
        if (!v[c].is_zero())
            support.push_back(c);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c : support)
            if (!(*this)(r, c).is_zero())
                out[r].add_product((*this)(r, c), v[c]);
    return out;
}

Matrix& Matrix::operator+=(const Matrix& o)
{
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw Error(ErrorKind::ShapeMismatch, "matrix sum shape mismatch");
    for (std::size_t i = 0; i < data_.size(); ++i)
        data_[i] += o.data_[i];
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& o)
{
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw Error(ErrorKind::ShapeMismatch, "matrix difference shape mismatch");
    for (std::size_t i = 0; i < data_.size(); ++i)
        data_[i] -= o.data_[i];
    return *this;
}

Matrix& Matrix::operator*=(const Scalar& s)
{
    for (auto& x : data_)
        x *= s;
    return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b)
{
    if (a.cols_ != b.rows_)
        throw Error(ErrorKind::ShapeMismatch, "matrix product shape mismatch");
    Matrix out(a.field_, a.rows_, b.cols_);
    // Coboundary matrices are mostly zero; index the nonzeros of b by row.
    std::vector<std::vector<std::size_t>> b_support(b.rows_);
    for (std::size_t k = 0; k < b.rows_; ++k)
        for (std::size_t j = 0; j < b.cols_; ++j)
            if (!b(k, j).is_zero())
                b_support[k].push_back(j);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Scalar& aik = a(i, k);
            if (aik.is_zero())
                continue;
            for (std::size_t j : b_support[k])
                out(i, j).add_product(aik, b(k, j));
        }
    return out;
}

bool operator==(const Matrix& a, const Matrix& b)
{
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const
{
    if (r0 + nr > rows_ || c0 + nc > cols_)
        throw Error(ErrorKind::ShapeMismatch, "block out of range");
    Matrix m(field_, nr, nc);
    for (std::size_t r = 0; r < nr; ++r)
        for (std::size_t c = 0; c < nc; ++c)
            m(r, c) = (*this)(r0 + r, c0 + c);
    return m;
}

void Matrix::set_block(std::size_t r0, std::size_t c0, const Matrix& m)
{
    if (r0 + m.rows_ > rows_ || c0 + m.cols_ > cols_)
        throw Error(ErrorKind::ShapeMismatch, "block out of range");
    for (std::size_t r = 0; r < m.rows_; ++r)
        for (std::size_t c = 0; c < m.cols_; ++c)
            (*this)(r0 + r, c0 + c) = m(r, c);
}

Echelon row_reduce(Matrix m)
{
    m.check_fields();
    const std::size_t nr = m.rows();
    const std::size_t nc = m.cols();
    std::vector<std::size_t> pivots;
    std::vector<std::size_t> support;
    std::size_t cur = 0;
    for (std::size_t c = 0; c < nc && cur < nr; ++c) {
        std::size_t p = cur;
        while (p < nr && m(p, c).is_zero())
            ++p;
        if (p == nr)
            continue;
        if (p != cur)
            for (std::size_t k = c; k < nc; ++k)
                std::swap(m(p, k), m(cur, k));
        const Scalar inv = m(cur, c).inverse();
        support.clear();
        for (std::size_t k = c; k < nc; ++k) {
            if (m(cur, k).is_zero())
                continue;
            m(cur, k) *= inv;
            support.push_back(k);
        }
        // Clear column c everywhere else; only the pivot row's support changes.
        for (std::size_t r = 0; r < nr; ++r) {
            if (r == cur || m(r, c).is_zero())
                continue;
            const Scalar factor = -m(r, c);
            for (std::size_t k : support)
                m(r, k).add_product(factor, m(cur, k));
        }
        pivots.push_back(c);
        ++cur;
    }
    return Echelon{std::move(m), std::move(pivots)};
}

std::size_t rank(const Matrix& m)
{
    // Eliminating along the shorter side does less work.
    if (m.rows() > m.cols())
        return row_reduce(m.transpose()).rank();
    return row_reduce(m).rank();
}

std::optional<Vector> solve(const Matrix& a, std::span<const Scalar> b)
{
    if (b.size() != a.rows())
        throw Error(ErrorKind::ShapeMismatch, "right-hand side length does not match row count");
    for (const auto& s : b)
        if (s.field() != a.field())
            throw Error(ErrorKind::MixedFields, "right-hand side over a different field");
    Matrix aug(a.field(), a.rows(), a.cols() + 1);
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c)
            aug(r, c) = a(r, c);
        aug(r, a.cols()) = b[r];
    }
    const Echelon e = row_reduce(std::move(aug));
    if (!e.pivot_cols.empty() && e.pivot_cols.back() == a.cols())
        return std::nullopt;
    Vector x = zero_vector(a.field(), a.cols());
    for (std::size_t r = 0; r < e.pivot_cols.size(); ++r)
        x[e.pivot_cols[r]] = e.reduced(r, a.cols());
    return x;
}

LinearSolver::LinearSolver(const Matrix& a) : a_(a), e_(a.field(), a.rows(), a.rows())
{
    const std::size_t nr = a.rows(), nc = a.cols();
    Matrix aug(a.field(), nr, nc + nr);
    aug.set_block(0, 0, a);
    for (std::size_t r = 0; r < nr; ++r)
        aug(r, nc + r) = Scalar::one(a.field());
    Echelon ech = row_reduce(std::move(aug));
    for (std::size_t c : ech.pivot_cols)
        if (c < nc)
            pivot_cols_.push_back(c);
    e_ = ech.reduced.block(0, nc, nr, nr);
}

Vector LinearSolver::transform(std::span<const Scalar> b) const
{
    if (b.size() != a_.rows())
        throw Error(ErrorKind::ShapeMismatch, "right-hand side length does not match row count");
    for (const auto& s : b)
        if (s.field() != a_.field())
            throw Error(ErrorKind::MixedFields, "right-hand side over a different field");
    return e_.apply(b);
}

std::optional<Vector> LinearSolver::solve(std::span<const Scalar> b) const
{
    const Vector y = transform(b);
    // Rows past the rank have a zero A-part, so they must vanish on b.
    for (std::size_t r = rank(); r < y.size(); ++r)
        if (!y[r].is_zero())
            return std::nullopt;
    Vector x = zero_vector(a_.field(), a_.cols());
    for (std::size_t r = 0; r < rank(); ++r)
        x[pivot_cols_[r]] = y[r];
    return x;
}

std::size_t LinearSolver::augmented_rank(std::span<const Scalar> b) const
{
    const Vector y = transform(b);
    for (std::size_t r = rank(); r < y.size(); ++r)
        if (!y[r].is_zero())
            return rank() + 1;
    return rank();
}

std::vector<Vector> kernel_basis(const Matrix& m)
{
    const Echelon e = row_reduce(m);
    const std::size_t nc = m.cols();
    std::vector<bool> is_pivot(nc, false);
    for (auto c : e.pivot_cols)
        is_pivot[c] = true;
    std::vector<Vector> basis;
    for (std::size_t free = 0; free < nc; ++free) {
        if (is_pivot[free])
            continue;
        Vector v = zero_vector(m.field(), nc);
        v[free] = Scalar::one(m.field());
        for (std::size_t r = 0; r < e.pivot_cols.size(); ++r)
            v[e.pivot_cols[r]] = -e.reduced(r, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

} // namespace dialg
