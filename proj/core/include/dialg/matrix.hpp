#pragma once

#include "dialg/scalar.hpp"

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

namespace dialg {

using Vector = std::vector<Scalar>;

Vector zero_vector(Field f, std::size_t n);
/// The i-th standard basis vector of length n.
Vector unit_vector(Field f, std::size_t n, std::size_t i);
bool is_zero(std::span<const Scalar> v);

/// Dense row-major matrix over a single Field.
class Matrix {
public:
    Matrix() : Matrix(Field::rationals(), 0, 0) {}
    Matrix(Field f, std::size_t rows, std::size_t cols);

    static Matrix identity(Field f, std::size_t n);
    /// Small integer matrices, mostly for tests and fixtures.
    static Matrix from_ints(Field f, std::initializer_list<std::initializer_list<long>> rows);
    static Matrix from_entries(Field f, std::size_t rows, std::size_t cols, std::vector<Scalar> entries);
    /// Columns given as vectors of equal length.
    static Matrix from_columns(Field f, std::size_t rows, std::span<const Vector> columns);

    Field field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<const Scalar> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
    Vector column(std::size_t c) const;
    const std::vector<Scalar>& entries() const { return data_; }

    Matrix transpose() const;
    bool is_zero() const;

    /// Throws MixedFields if any entry's field differs from field().
    void check_fields() const;

    Vector apply(std::span<const Scalar> v) const;

    Matrix& operator+=(const Matrix& o);
    Matrix& operator-=(const Matrix& o);
    Matrix& operator*=(const Scalar& s);
    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(Matrix a, const Scalar& s) { return a *= s; }
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend bool operator==(const Matrix& a, const Matrix& b);

    /// Copy of the block [r0, r0+nr) x [c0, c0+nc).
    Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
    void set_block(std::size_t r0, std::size_t c0, const Matrix& m);

private:
    Field field_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Scalar> data_;
};

/// Reduced row echelon form with the pivot column of each nonzero row.
struct Echelon {
    Matrix reduced;
    std::vector<std::size_t> pivot_cols;
    std::size_t rank() const { return pivot_cols.size(); }
};

Echelon row_reduce(Matrix m);

std::size_t rank(const Matrix& m);

/// Some x with a*x = b, or nullopt when the system is inconsistent.
std::optional<Vector> solve(const Matrix& a, std::span<const Scalar> b);

/// Factorization of a fixed matrix for repeated solves: E·A = rref(A) with E invertible.
class LinearSolver {
public:
    explicit LinearSolver(const Matrix& a);

    std::size_t rank() const { return pivot_cols_.size(); }
    const Matrix& matrix() const { return a_; }
    /// Some x with A x = b, or nullopt when b is outside the column space.
    std::optional<Vector> solve(std::span<const Scalar> b) const;
    /// rank [A | b], computed from the stored transform.
    std::size_t augmented_rank(std::span<const Scalar> b) const;

private:
    Vector transform(std::span<const Scalar> b) const;

    Matrix a_;
    Matrix e_;
    std::vector<std::size_t> pivot_cols_;
};

/// Basis of ker(m); exactly cols - rank vectors.
std::vector<Vector> kernel_basis(const Matrix& m);

} // namespace dialg
