#pragma once

#include "massey/scalar.hpp"

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace massey {

using Vector = std::vector<Scalar>;

Vector zero_vector(std::size_t n);
Vector unit_vector(std::size_t n, std::size_t i);
bool is_zero(std::span<const Scalar> v);
Vector add(std::span<const Scalar> a, std::span<const Scalar> b);
Vector subtract(std::span<const Scalar> a, std::span<const Scalar> b);
Vector scale(std::span<const Scalar> a, const Scalar& s);
/// "[a, b, c]" with exact rationals.
std::string to_string(std::span<const Scalar> v);

/// Dense row-major matrix over the rationals.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    Matrix(std::initializer_list<std::initializer_list<Scalar>> rows);

    static Matrix identity(std::size_t n);
    /// Matrix whose columns are the given vectors (all of length `rows`).
    static Matrix from_columns(std::size_t rows, std::span<const Vector> columns);
    static Matrix from_rows(std::size_t cols, std::span<const Vector> rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<const Scalar> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
    std::span<Scalar> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
    Vector column(std::size_t c) const;
    void set_column(std::size_t c, std::span<const Scalar> v);

    Vector apply(std::span<const Scalar> v) const;
    Matrix transpose() const;
    bool is_zero() const;

    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend bool operator==(const Matrix& a, const Matrix& b) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Scalar> data_;
};

struct RrefResult {
    Matrix reduced;
    std::vector<std::size_t> pivots;
};

/// Reduced row-echelon form with leftmost-nonzero pivoting.
RrefResult rref(Matrix m);

std::size_t rank(const Matrix& m);

/// Particular solution of a*x = b with every free variable set to zero, or
/// nullopt when the system is inconsistent.
std::optional<Vector> solve(const Matrix& a, std::span<const Scalar> b);

/// Linear subspace of Q^n, held as the nonzero rows of its reduced echelon form.
class Subspace {
public:
    Subspace() = default;
    explicit Subspace(std::size_t ambient_dim) : ambient_dim_(ambient_dim) {}

    static Subspace zero(std::size_t ambient_dim) { return Subspace(ambient_dim); }
    static Subspace full(std::size_t ambient_dim);
    static Subspace span(std::size_t ambient_dim, std::span<const Vector> vectors);
    /// Column space of a matrix.
    static Subspace image(const Matrix& m);

    std::size_t ambient_dim() const { return ambient_dim_; }
    std::size_t dim() const { return basis_.size(); }
    const std::vector<Vector>& basis() const { return basis_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    /// Canonical representative of v modulo this subspace: the pivot
    /// coordinates of the result are zero.
    Vector reduce(std::span<const Scalar> v) const;
    bool contains(std::span<const Scalar> v) const;
    bool contains(const Subspace& other) const;

    friend Subspace operator+(const Subspace& a, const Subspace& b);
    friend bool operator==(const Subspace& a, const Subspace& b) = default;

private:
    std::size_t ambient_dim_ = 0;
    std::vector<Vector> basis_;
    std::vector<std::size_t> pivots_;
};

Subspace kernel_basis(const Matrix& a);

/// True iff v lies in span(s).
bool member(std::span<const Scalar> v, const Subspace& s);

/// point + span(direction).
struct AffineCoset {
    Vector point;
    Subspace direction;

    AffineCoset canonical() const;
    bool contains(std::span<const Scalar> v) const;
    /// Containment of cosets: every element of this lies in `other`.
    bool subset_of(const AffineCoset& other) const;
};

/// True iff the coset meets span(s).
bool coset_meets(const AffineCoset& c, const Subspace& s);

}  // namespace massey
