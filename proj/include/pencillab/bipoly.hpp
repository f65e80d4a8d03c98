#pragma once

#include <functional>
#include <vector>

#include "pencillab/unipoly.hpp"

namespace pencillab {

// Polynomial in a main variable Y whose coefficients are univariate
// polynomials in a second variable X. Which geometric variables play X and Y
// is up to the caller (fiber sweeps use Y = y, X = x; pencil eliminations use
// Y = x, X = t).
class BiPoly {
  public:
    BiPoly() = default;
    explicit BiPoly(std::vector<UniPoly> coeffs);
    static BiPoly from_unipoly_in_main(const UniPoly& p);   // p(Y)
    static BiPoly from_unipoly_in_coeff(const UniPoly& p);  // p(X)

    int degree() const { return static_cast<int>(c_.size()) - 1; }  // in Y
    int degree_coeff() const;                                       // max degree in X
    bool is_zero() const { return c_.empty(); }
    const UniPoly& lc() const;
    UniPoly coeff(size_t j) const;
    void set_coeff(size_t j, UniPoly p);

    BiPoly operator-() const;
    BiPoly operator+(const BiPoly& o) const;
    BiPoly operator-(const BiPoly& o) const;
    BiPoly operator*(const BiPoly& o) const;
    BiPoly scaled(const UniPoly& s) const;
    BiPoly derivative_main() const;

    UniPoly eval_main(const Rat& y) const;   // poly in X
    UniPoly eval_coeff(const Rat& x) const;  // poly in Y
    Rat eval(const Rat& x, const Rat& y) const;

    // Numerator of P(X, N(X)/D(X)), i.e. substitution of a rational function
    // for the main variable, cleared by D^deg.
    UniPoly eval_main_ratfun(const UniPoly& num, const UniPoly& den) const;

    // gcd of the coefficients (monic).
    UniPoly content() const;
    // Exact division of every coefficient.
    BiPoly divexact_coeff(const UniPoly& d) const;

    std::string to_string(const std::string& main_var = "y",
                          const std::string& coeff_var = "x") const;

  private:
    std::vector<UniPoly> c_;  // c_[j] = coefficient of Y^j
    void trim();
};

// Determinant of a square matrix of univariate polynomials, computed by
// interpolation at degree_bound+2 points (the extra point cross-checks the
// bound).
UniPoly det_unipoly(const std::vector<std::vector<UniPoly>>& m);

// Sylvester resultant of A and B with respect to the main variable; the
// result lives in the coefficient variable.
UniPoly resultant_main(const BiPoly& a, const BiPoly& b);

// Subresultant data for A, B with respect to the main variable Y.
struct SubresultantS1 {
    UniPoly s0;       // resultant res_Y(A, B)
    UniPoly sres1;    // principal subresultant coefficient of order 1
    UniPoly s1_lead;  // S_1 = s1_lead * Y + s1_const
    UniPoly s1_const;
};
SubresultantS1 subresultant_s1(const BiPoly& a, const BiPoly& b);

// Principal subresultant coefficient sres_j(X) for one j.
UniPoly principal_subresultant(const BiPoly& a, const BiPoly& b, int j);

}  // namespace pencillab
