#pragma once

#include <vector>

#include "pencillab/rat.hpp"

namespace pencillab {

// Dense exact rational matrix; small sizes only (everything here is O(n^3)
// with big-number entries).
class MatQ {
  public:
    MatQ() = default;
    MatQ(size_t rows, size_t cols) : r_(rows), c_(cols), a_(rows, std::vector<Rat>(cols, Rat(0))) {}

    size_t rows() const { return r_; }
    size_t cols() const { return c_; }
    Rat& at(size_t i, size_t j) { return a_[i][j]; }
    const Rat& at(size_t i, size_t j) const { return a_[i][j]; }
    std::vector<Rat>& row(size_t i) { return a_[i]; }
    const std::vector<Rat>& row(size_t i) const { return a_[i]; }

    size_t rank() const;
    // Basis of the right null space (each vector has cols() entries).
    std::vector<std::vector<Rat>> nullspace() const;
    // Fraction-free determinant (square only).
    Rat det() const;
    // One solution of A x = b, if any.
    std::optional<std::vector<Rat>> solve(const std::vector<Rat>& b) const;

  private:
    size_t r_ = 0, c_ = 0;
    std::vector<std::vector<Rat>> a_;
};

// Determinant of an integer matrix by Bareiss elimination.
Int det_bareiss(std::vector<std::vector<Int>> m);

}  // namespace pencillab
