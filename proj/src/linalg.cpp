#include "pencillab/linalg.hpp"

#include <optional>

namespace pencillab {

namespace {

// Row echelon over the rationals. Returns pivot column per pivot row.
std::vector<size_t> echelon(std::vector<std::vector<Rat>>& a) {
    std::vector<size_t> pivots;
    if (a.empty()) return pivots;
    size_t rows = a.size(), cols = a[0].size();
    size_t pr = 0;
    for (size_t pc = 0; pc < cols && pr < rows; ++pc) {
        size_t sel = pr;
        while (sel < rows && a[sel][pc] == 0) ++sel;
        if (sel == rows) continue;
        std::swap(a[pr], a[sel]);
        Rat inv = Rat(1) / a[pr][pc];
        for (size_t j = pc; j < cols; ++j) a[pr][j] *= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == pr || a[i][pc] == 0) continue;
            Rat f = a[i][pc];
            for (size_t j = pc; j < cols; ++j) a[i][j] -= f * a[pr][j];
        }
        pivots.push_back(pc);
        ++pr;
    }
    return pivots;
}

}  // namespace

size_t MatQ::rank() const {
    auto a = a_;
    return echelon(a).size();
}

std::vector<std::vector<Rat>> MatQ::nullspace() const {
    auto a = a_;
    auto pivots = echelon(a);
    std::vector<bool> is_pivot(c_, false);
    for (size_t p : pivots) is_pivot[p] = true;
    std::vector<std::vector<Rat>> basis;
    for (size_t free = 0; free < c_; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rat> v(c_, Rat(0));
        v[free] = 1;
        for (size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -a[i][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

Int det_bareiss(std::vector<std::vector<Int>> m) {
    size_t n = m.size();
    if (n == 0) return 1;
    Int prev(1);
    int sgn_acc = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            size_t sel = k + 1;
            while (sel < n && m[sel][k] == 0) ++sel;
            if (sel == n) return 0;
            std::swap(m[k], m[sel]);
            sgn_acc = -sgn_acc;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                Int num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                mpz_divexact(m[i][j].get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return sgn_acc > 0 ? m[n - 1][n - 1] : Int(-m[n - 1][n - 1]);
}

Rat MatQ::det() const {
    if (r_ != c_) throw DegeneracyError("determinant of non-square matrix");
    if (r_ == 0) return Rat(1);
    // Clear denominators row by row, then run Bareiss over the integers.
    std::vector<std::vector<Int>> m(r_, std::vector<Int>(c_));
    Rat scale(1);
    for (size_t i = 0; i < r_; ++i) {
        Int den(1);
        for (size_t j = 0; j < c_; ++j)
            mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), a_[i][j].get_den_mpz_t());
        for (size_t j = 0; j < c_; ++j) m[i][j] = a_[i][j].get_num() * (den / a_[i][j].get_den());
        scale *= Rat(1, 1) / Rat(den);
    }
    return Rat(det_bareiss(std::move(m))) * scale;
}

std::optional<std::vector<Rat>> MatQ::solve(const std::vector<Rat>& b) const {
    if (b.size() != r_) throw InputError("solve: size mismatch");
    std::vector<std::vector<Rat>> aug(r_, std::vector<Rat>(c_ + 1));
    for (size_t i = 0; i < r_; ++i) {
        for (size_t j = 0; j < c_; ++j) aug[i][j] = a_[i][j];
        aug[i][c_] = b[i];
    }
    auto pivots = echelon(aug);
    // Inconsistent if a pivot landed in the augmented column.
    for (size_t p : pivots)
        if (p == c_) return std::nullopt;
    std::vector<Rat> x(c_, Rat(0));
    for (size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug[i][c_];
    return x;
}

}  // namespace pencillab
