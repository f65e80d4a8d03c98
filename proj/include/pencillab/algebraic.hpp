#pragma once

#include <memory>

#include "pencillab/unipoly.hpp"

namespace pencillab {

// A real algebraic number: a squarefree defining polynomial plus an isolating
// interval. All predicates are exact; the interval refines lazily.
class AlgebraicReal {
  public:
    explicit AlgebraicReal(const Rat& value);
    AlgebraicReal(const UniPoly& defining, IsolatedRoot interval);

    bool is_rational() const { return iv_.is_exact(); }
    Rat rational_value() const;
    const Rat& lo() const { return iv_.lo; }
    const Rat& hi() const { return iv_.hi; }

    void refine() const;
    void refine_below(const Rat& width) const;

    // Exact sign of E at this number.
    int sign_of(const UniPoly& e) const;
    int compare(const Rat& q) const;
    int compare(const AlgebraicReal& o) const;
    bool operator<(const AlgebraicReal& o) const { return compare(o) < 0; }
    bool operator==(const AlgebraicReal& o) const { return compare(o) == 0; }

    double approx() const;
    std::string to_string() const;

  private:
    UniPoly defining_;  // squarefree; empty for plain rationals
    std::shared_ptr<const SturmChain> chain_;
    mutable IsolatedRoot iv_;
};

}  // namespace pencillab
