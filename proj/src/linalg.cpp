#include "massey/linalg.hpp"

#include "massey/errors.hpp"

#include <sstream>
#include <utility>

namespace massey {

namespace {

void require_same_length(std::size_t a, std::size_t b, const char* what) {
    if (a != b)
        throw DimensionMismatch(std::string(what) + ": length " + std::to_string(a) + " vs " +
                                std::to_string(b));
}

}  // namespace

Vector zero_vector(std::size_t n) { return Vector(n); }

Vector unit_vector(std::size_t n, std::size_t i) {
    Vector v(n);
    v.at(i) = 1;
    return v;
}

bool is_zero(std::span<const Scalar> v) {
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

Vector add(std::span<const Scalar> a, std::span<const Scalar> b) {
    require_same_length(a.size(), b.size(), "add");
    Vector r(a.begin(), a.end());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

Vector subtract(std::span<const Scalar> a, std::span<const Scalar> b) {
    require_same_length(a.size(), b.size(), "subtract");
    Vector r(a.begin(), a.end());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
    return r;
}

Vector scale(std::span<const Scalar> a, const Scalar& s) {
    Vector r(a.begin(), a.end());
    for (auto& x : r) x *= s;
    return r;
}

std::string to_string(std::span<const Scalar> v) {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
    os << ']';
    return os.str();
}

Matrix::Matrix(std::initializer_list<std::initializer_list<Scalar>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw DimensionMismatch("ragged matrix literal");
        data_.insert(data_.end(), r.begin(), r.end());
    }
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Matrix Matrix::from_columns(std::size_t rows, std::span<const Vector> columns) {
    Matrix m(rows, columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c) m.set_column(c, columns[c]);
    return m;
}

Matrix Matrix::from_rows(std::size_t cols, std::span<const Vector> rows) {
    Matrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        require_same_length(rows[r].size(), cols, "Matrix::from_rows");
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
    }
    return m;
}

Vector Matrix::column(std::size_t c) const {
    Vector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
}

void Matrix::set_column(std::size_t c, std::span<const Scalar> v) {
    require_same_length(v.size(), rows_, "Matrix::set_column");
    for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
}

Vector Matrix::apply(std::span<const Scalar> v) const {
    require_same_length(v.size(), cols_, "Matrix::apply");
    Vector out(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            if (!v[c].is_zero() && !(*this)(r, c).is_zero()) out[r] += (*this)(r, c) * v[c];
    return out;
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

bool Matrix::is_zero() const { return massey::is_zero(data_); }

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product: inner dimensions differ");
    Matrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Scalar& aik = a(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols_; ++j)
                if (!b(k, j).is_zero()) out(i, j) += aik * b(k, j);
        }
    return out;
}

RrefResult rref(Matrix m) {
    std::vector<std::size_t> pivots;
    std::size_t lead_row = 0;
    for (std::size_t col = 0; col < m.cols() && lead_row < m.rows(); ++col) {
        std::size_t r = lead_row;
        while (r < m.rows() && m(r, col).is_zero()) ++r;
        if (r == m.rows()) continue;
        if (r != lead_row)
            for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(r, c), m(lead_row, c));
        const Scalar inv = Scalar(1) / m(lead_row, col);
        for (std::size_t c = col; c < m.cols(); ++c) m(lead_row, c) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == lead_row || m(i, col).is_zero()) continue;
            const Scalar factor = m(i, col);
            for (std::size_t c = col; c < m.cols(); ++c)
                if (!m(lead_row, c).is_zero()) m(i, c) -= factor * m(lead_row, c);
        }
        pivots.push_back(col);
        ++lead_row;
    }
    return {std::move(m), std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

std::optional<Vector> solve(const Matrix& a, std::span<const Scalar> b) {
    require_same_length(b.size(), a.rows(), "solve");
    Matrix aug(a.rows(), a.cols() + 1);
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) aug(r, c) = a(r, c);
        aug(r, a.cols()) = b[r];
    }
    auto [red, pivots] = rref(std::move(aug));
    if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;
    Vector x(a.cols());
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = red(i, a.cols());
    return x;
}

Subspace Subspace::full(std::size_t ambient_dim) {
    Subspace s(ambient_dim);
    for (std::size_t i = 0; i < ambient_dim; ++i) {
        s.basis_.push_back(unit_vector(ambient_dim, i));
        s.pivots_.push_back(i);
    }
    return s;
}

Subspace Subspace::span(std::size_t ambient_dim, std::span<const Vector> vectors) {
    Subspace s(ambient_dim);
    if (vectors.empty()) return s;
    auto [red, pivots] = rref(Matrix::from_rows(ambient_dim, vectors));
    for (std::size_t i = 0; i < pivots.size(); ++i) {
        auto row = red.row(i);
        s.basis_.emplace_back(row.begin(), row.end());
    }
    s.pivots_ = std::move(pivots);
    return s;
}

Subspace Subspace::image(const Matrix& m) {
    std::vector<Vector> cols;
    cols.reserve(m.cols());
    for (std::size_t c = 0; c < m.cols(); ++c) cols.push_back(m.column(c));
    return span(m.rows(), cols);
}

Vector Subspace::reduce(std::span<const Scalar> v) const {
    require_same_length(v.size(), ambient_dim_, "Subspace::reduce");
    Vector r(v.begin(), v.end());
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        const Scalar f = r[pivots_[i]];
        if (f.is_zero()) continue;
        for (std::size_t c = 0; c < ambient_dim_; ++c)
            if (!basis_[i][c].is_zero()) r[c] -= f * basis_[i][c];
    }
    return r;
}

bool Subspace::contains(std::span<const Scalar> v) const { return massey::is_zero(reduce(v)); }

bool Subspace::contains(const Subspace& other) const {
    if (other.ambient_dim_ != ambient_dim_) throw DimensionMismatch("Subspace::contains");
    for (const auto& b : other.basis_)
        if (!contains(b)) return false;
    return true;
}

Subspace operator+(const Subspace& a, const Subspace& b) {
    if (a.ambient_dim_ != b.ambient_dim_) throw DimensionMismatch("subspace sum");
    std::vector<Vector> all = a.basis_;
    all.insert(all.end(), b.basis_.begin(), b.basis_.end());
    return Subspace::span(a.ambient_dim_, all);
}

Subspace kernel_basis(const Matrix& a) {
    auto [red, pivots] = rref(a);
    std::vector<bool> is_pivot(a.cols(), false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<Vector> vecs;
    for (std::size_t f = 0; f < a.cols(); ++f) {
        if (is_pivot[f]) continue;
        Vector v(a.cols());
        v[f] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -red(i, f);
        vecs.push_back(std::move(v));
    }
    return Subspace::span(a.cols(), vecs);
}

bool member(std::span<const Scalar> v, const Subspace& s) { return s.contains(v); }

AffineCoset AffineCoset::canonical() const { return {direction.reduce(point), direction}; }

bool AffineCoset::contains(std::span<const Scalar> v) const {
    return direction.contains(subtract(v, point));
}

bool AffineCoset::subset_of(const AffineCoset& other) const {
    return other.contains(point) && other.direction.contains(direction);
}

bool coset_meets(const AffineCoset& c, const Subspace& s) {
    if (c.point.size() != c.direction.ambient_dim() || s.ambient_dim() != c.direction.ambient_dim())
        throw DimensionMismatch("coset_meets");
    return (c.direction + s).contains(c.point);
}

}  // namespace massey
