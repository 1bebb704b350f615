#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "qmds/field.hpp"

namespace qmds {

/// Dense row-major matrix of field elements.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    static Matrix from_rows(const std::vector<std::vector<Elem>>& rows);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Elem& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    Elem operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<Elem> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
    std::span<const Elem> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

    void append_row(std::span<const Elem> r);
    std::vector<std::vector<Elem>> to_rows() const;

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Elem> data_;
};

Matrix transpose(const Matrix& m);
Matrix multiply(const FieldTower& F, const Matrix& a, const Matrix& b);
/// Entrywise x -> x^q.
Matrix frobenius(const FieldTower& F, const Matrix& m);

/// Reduced row echelon form in place; returns the pivot columns.
std::vector<std::size_t> row_reduce(const FieldTower& F, Matrix& m);
std::size_t rank(const FieldTower& F, Matrix m);
/// Basis (as rows) of {u : m u^T = 0}.
Matrix nullspace(const FieldTower& F, const Matrix& m);
/// Rows of a and b stacked.
Matrix stack(const Matrix& a, const Matrix& b);
/// Whether the row space of `sub` lies inside the row space of `space`.
bool row_space_contains(const FieldTower& F, const Matrix& space, const Matrix& sub);

Elem dot(const FieldTower& F, std::span<const Elem> a, std::span<const Elem> b);

}  // namespace qmds
