#include "cft/linalg.hpp"

#include <algorithm>

namespace cft {

std::string to_string(Definiteness d) {
    switch (d) {
        case Definiteness::PositiveDefinite: return "PositiveDefinite";
        case Definiteness::PositiveSemidefinite: return "PositiveSemidefinite";
        case Definiteness::Indefinite: return "Indefinite";
    }
    return "?";
}

std::vector<Rational> charpoly(const RatMatrix& m) {
    if (!m.is_square()) throw std::invalid_argument("charpoly: non-square matrix");
    const std::size_t n = m.rows();
    // Faddeev-LeVerrier: det(tI - M) = t^n + c1 t^{n-1} + ... + cn.
    std::vector<Rational> c(n + 1, Rational(0));
    c[n] = Rational(1);
    RatMatrix mk = m;
    for (std::size_t k = 1; k <= n; ++k) {
        if (k > 1) {
            RatMatrix shifted = mk;
            for (std::size_t i = 0; i < n; ++i) shifted.at(i, i) += c[n - k + 1];
            mk = m * shifted;
        }
        Rational tr(0);
        for (std::size_t i = 0; i < n; ++i) tr += mk.at(i, i);
        c[n - k] = -(tr / Rational(static_cast<long>(k)));
    }
    return c;
}

Definiteness definiteness(const RatMatrix& m) {
    if (!m.is_symmetric()) throw std::invalid_argument("definiteness: asymmetric matrix");
    const std::size_t n = m.rows();

    bool pd = true;
    for (std::size_t k = 1; k <= n && pd; ++k)
        pd = bareiss_det(m.leading_block(k)).sign() > 0;
    if (pd) return Definiteness::PositiveDefinite;

    // det(tI - M) = sum a_k t^k; (-1)^{n-k} a_k is the sum of all principal
    // minors of order n-k, and a symmetric matrix is PSD iff these are >= 0.
    const auto a = charpoly(m);
    for (std::size_t k = 0; k <= n; ++k) {
        const Rational signed_coeff = ((n - k) % 2 == 0) ? a[k] : -a[k];
        if (signed_coeff.sign() < 0) return Definiteness::Indefinite;
    }
    return Definiteness::PositiveSemidefinite;
}

namespace {

// Row echelon form; returns pivot columns.
std::vector<std::size_t> echelonize(RatMatrix& m) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t p = row;
        while (p < m.rows() && m.at(p, col).is_zero()) ++p;
        if (p == m.rows()) continue;
        m.swap_rows(row, p);
        const Rational inv = Rational(1) / m.at(row, col);
        for (std::size_t j = col; j < m.cols(); ++j) m.at(row, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == row || m.at(i, col).is_zero()) continue;
            const Rational f = m.at(i, col);
            for (std::size_t j = col; j < m.cols(); ++j) m.at(i, j) -= f * m.at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace

std::size_t rank(RatMatrix m) { return echelonize(m).size(); }

std::vector<std::vector<Rational>> kernel_basis(RatMatrix m) {
    const std::size_t n = m.cols();
    const auto pivots = echelonize(m);
    std::vector<bool> is_pivot(n, false);
    for (auto c : pivots) is_pivot[c] = true;

    std::vector<std::vector<Rational>> basis;
    for (std::size_t free_col = 0; free_col < n; ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<Rational> v(n, Rational(0));
        v[free_col] = Rational(1);
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m.at(r, free_col);
        std::size_t first = 0;
        while (first < n && v[first].is_zero()) ++first;
        const Rational inv = Rational(1) / v[first];
        for (auto& x : v) x *= inv;
        basis.push_back(std::move(v));
    }
    std::sort(basis.begin(), basis.end(), [](const auto& a, const auto& b) {
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (a[i].is_zero() != b[i].is_zero()) return b[i].is_zero();
        }
        return false;
    });
    return basis;
}

}  // namespace cft
