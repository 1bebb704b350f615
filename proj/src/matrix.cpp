#include "qmds/matrix.hpp"

#include <stdexcept>

namespace qmds {

Matrix Matrix::from_rows(const std::vector<std::vector<Elem>>& rows) {
    Matrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != m.cols_) throw std::invalid_argument("ragged matrix rows");
        for (std::size_t c = 0; c < m.cols_; ++c) m(r, c) = rows[r][c];
    }
    return m;
}

void Matrix::append_row(std::span<const Elem> r) {
    if (rows_ == 0 && data_.empty()) cols_ = r.size();
    if (r.size() != cols_) throw std::invalid_argument("row length mismatch");
    data_.insert(data_.end(), r.begin(), r.end());
    ++rows_;
}

std::vector<std::vector<Elem>> Matrix::to_rows() const {
    std::vector<std::vector<Elem>> out;
    out.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out.emplace_back(row(r).begin(), row(r).end());
    return out;
}

Matrix transpose(const Matrix& m) {
    Matrix t(m.cols(), m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) t(c, r) = m(r, c);
    return t;
}

Matrix multiply(const FieldTower& F, const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matrix shape mismatch");
    Matrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t l = 0; l < a.cols(); ++l) {
            const Elem x = a(i, l);
            if (x.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) = F.add(out(i, j), F.mul(x, b(l, j)));
        }
    return out;
}

Matrix frobenius(const FieldTower& F, const Matrix& m) {
    Matrix out = m;
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (auto& x : out.row(r)) x = F.frobenius(x);
    return out;
}

std::vector<std::size_t> row_reduce(const FieldTower& F, Matrix& m) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t piv = r;
        while (piv < m.rows() && m(piv, c).is_zero()) ++piv;
        if (piv == m.rows()) continue;
        if (piv != r)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(r, j), m(piv, j));
        const Elem s = F.inv(m(r, c));
        for (auto& x : m.row(r)) x = F.mul(x, s);
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c).is_zero()) continue;
            const Elem f = m(i, c);
            for (std::size_t j = c; j < m.cols(); ++j) m(i, j) = F.sub(m(i, j), F.mul(f, m(r, j)));
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

std::size_t rank(const FieldTower& F, Matrix m) { return row_reduce(F, m).size(); }

Matrix nullspace(const FieldTower& F, const Matrix& m) {
    Matrix red = m;
    const auto pivots = row_reduce(F, red);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : pivots) is_pivot[c] = true;
    Matrix basis(0, m.cols());
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        std::vector<Elem> u(m.cols());
        u[free] = F.one();
        for (std::size_t i = 0; i < pivots.size(); ++i) u[pivots[i]] = F.neg(red(i, free));
        basis.append_row(u);
    }
    return basis;
}

Matrix stack(const Matrix& a, const Matrix& b) {
    if (a.rows() == 0) return b;
    Matrix out = a;
    for (std::size_t r = 0; r < b.rows(); ++r) out.append_row(b.row(r));
    return out;
}

bool row_space_contains(const FieldTower& F, const Matrix& space, const Matrix& sub) {
    return rank(F, stack(space, sub)) == rank(F, space);
}

Elem dot(const FieldTower& F, std::span<const Elem> a, std::span<const Elem> b) {
    if (a.size() != b.size()) throw std::invalid_argument("vector length mismatch");
    Elem acc{};
    for (std::size_t i = 0; i < a.size(); ++i) acc = F.add(acc, F.mul(a[i], b[i]));
    return acc;
}

}  // namespace qmds
