#include "socle/linalg.hpp"

#include <algorithm>

#include "socle/errors.hpp"

namespace socle {

std::vector<std::size_t> row_reduce(Matrix& m, const FieldSpec& field) {
    std::vector<std::size_t> pivots;
    if (m.empty()) return pivots;
    const std::size_t cols = m.front().size();
    std::size_t row = 0;
    for (std::size_t c = 0; c < cols && row < m.size(); ++c) {
        std::size_t p = row;
        while (p < m.size() && m[p][c] == 0) ++p;
        if (p == m.size()) continue;
        std::swap(m[p], m[row]);
        const Scalar inv = field.inv(m[row][c]);
        for (auto& x : m[row]) x = field.mul(x, inv);
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == row || m[r][c] == 0) continue;
            const Scalar f = m[r][c];
            for (std::size_t k = c; k < cols; ++k) m[r][k] = field.sub(m[r][k], field.mul(f, m[row][k]));
        }
        pivots.push_back(c);
        ++row;
    }
    m.resize(row);
    return pivots;
}

std::vector<std::vector<Scalar>> nullspace(Matrix m, std::size_t cols, const FieldSpec& field) {
    for (const auto& r : m)
        if (r.size() != cols) throw PreconditionError("nullspace", "ragged matrix");
    const auto pivots = row_reduce(m, field);
    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<std::vector<Scalar>> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Scalar> v(cols, Scalar(0));
        v[free] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = field.neg(m[r][free]);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<Scalar> solve(Matrix a, std::vector<Scalar> b, const FieldSpec& field) {
    const std::size_t n = b.size();
    if (a.size() != n) throw PreconditionError("solve", "system is not square");
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i].size() != n) throw PreconditionError("solve", "system is not square");
        a[i].push_back(b[i]);
    }
    const auto pivots = row_reduce(a, field);
    if (pivots.size() != n || pivots.back() != n - 1) return {};
    std::vector<Scalar> x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = a[i][n];
    return x;
}

std::vector<Polynomial> linear_basis(std::vector<Polynomial> polys) {
    std::erase_if(polys, [](const Polynomial& p) { return p.is_zero(); });
    if (polys.empty()) return polys;
    const auto& ring = *polys.front().ring();
    std::vector<Polynomial> basis;
    for (auto& p : polys) {
        // Reduce p against the current echelon rows until its head is new.
        bool progress = true;
        while (progress && !p.is_zero()) {
            progress = false;
            for (const auto& b : basis) {
                const auto& bm = b.leading_monomial();
                auto it = std::find_if(p.terms().begin(), p.terms().end(), [&](const Term& t) { return t.mono == bm; });
                if (it == p.terms().end()) continue;
                p.sub_mul_term(it->coeff, Monomial(ring.nvars()), b);
                progress = true;
            }
        }
        if (p.is_zero()) continue;
        p = p.monic();
        for (auto& b : basis) {
            auto it = std::find_if(b.terms().begin(), b.terms().end(), [&](const Term& t) { return t.mono == p.leading_monomial(); });
            if (it != b.terms().end()) b.sub_mul_term(it->coeff, Monomial(ring.nvars()), p);
        }
        basis.push_back(std::move(p));
    }
    std::sort(basis.begin(), basis.end(),
              [&](const Polynomial& a, const Polynomial& b) { return ring.greater(b.leading_monomial(), a.leading_monomial()); });
    return basis;
}

}  // namespace socle
