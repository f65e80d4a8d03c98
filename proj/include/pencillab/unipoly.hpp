#pragma once

#include <optional>
#include <vector>

#include "pencillab/rat.hpp"

namespace pencillab {

// Dense integer polynomial, index = degree of the monomial. Trailing zeros
// are the caller's problem; helpers below normalize.
using ZPoly = std::vector<Int>;

int zp_degree(const ZPoly& p);
void zp_trim(ZPoly& p);
Int zp_content(const ZPoly& p);          // nonnegative; 0 for the zero poly
ZPoly zp_primitive(const ZPoly& p);      // p / content, sign kept
ZPoly zp_derivative(const ZPoly& p);
// Sign of p at a rational point / at the infinities.
int zp_sign_at(const ZPoly& p, const Rat& x);
int zp_sign_at_pos_inf(const ZPoly& p);
int zp_sign_at_neg_inf(const ZPoly& p);

// Univariate polynomial with exact rational coefficients.
class UniPoly {
  public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Rat> coeffs);
    static UniPoly zero() { return UniPoly(); }
    static UniPoly constant(const Rat& c);
    static UniPoly variable();                       // t
    static UniPoly linear(const Rat& c0, const Rat& c1);  // c0 + c1 t

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const Rat& lc() const;
    Rat coeff(size_t i) const { return i < c_.size() ? c_[i] : Rat(0); }
    const std::vector<Rat>& coeffs() const { return c_; }

    UniPoly operator-() const;
    UniPoly operator+(const UniPoly& o) const;
    UniPoly operator-(const UniPoly& o) const;
    UniPoly operator*(const UniPoly& o) const;
    UniPoly& operator+=(const UniPoly& o) { return *this = *this + o; }
    UniPoly& operator-=(const UniPoly& o) { return *this = *this - o; }
    UniPoly& operator*=(const UniPoly& o) { return *this = *this * o; }
    bool operator==(const UniPoly& o) const { return c_ == o.c_; }

    UniPoly scaled(const Rat& s) const;
    UniPoly shifted(size_t k) const;  // * t^k
    UniPoly derivative() const;
    Rat eval(const Rat& x) const;
    int sign_at(const Rat& x) const { return sign(eval(x)); }

    // Quotient/remainder over the rationals; o must be nonzero.
    std::pair<UniPoly, UniPoly> divrem(const UniPoly& o) const;
    // Division known to be exact; throws DegeneracyError on a remainder.
    UniPoly divexact(const UniPoly& o) const;

    UniPoly monic() const;
    // Primitive integer image (clears denominators, strips content).
    ZPoly primitive_z() const;

    std::string to_string(const std::string& var = "t") const;

  private:
    std::vector<Rat> c_;  // c_[i] * t^i, no trailing zeros
    void trim();
};

UniPoly gcd(const UniPoly& a, const UniPoly& b);  // monic
UniPoly squarefree_part(const UniPoly& f);        // monic-free: primitive-ish, same roots

// Sign-faithful Sturm chain of the squarefree part of f: every element equals
// the classical Sturm chain element up to a positive constant.
class SturmChain {
  public:
    explicit SturmChain(const UniPoly& f);
    int variations_at(const Rat& x) const;
    int variations_at_neg_inf() const;
    int variations_at_pos_inf() const;
    // Distinct real roots in the half-open interval (a, b]; no endpoint = infinite.
    long count(const std::optional<Rat>& a, const std::optional<Rat>& b) const;
    const ZPoly& squarefree() const { return chain_.front(); }

  private:
    std::vector<ZPoly> chain_;
};

// Distinct real roots of f in (a, b], endpoints optional (= -inf / +inf).
// Throws InputError("identically zero") on the zero polynomial.
long real_root_count(const UniPoly& f, const std::optional<Rat>& a,
                     const std::optional<Rat>& b);
long real_root_count(const UniPoly& f);  // whole line

// One isolated real root: the root r satisfies lo <= r <= hi, and lo == hi
// exactly when r is the rational number lo. For a strict interval the
// squarefree part has no root at either endpoint and exactly one inside.
struct IsolatedRoot {
    Rat lo, hi;
    bool is_exact() const { return lo == hi; }
    Rat mid() const { return (lo + hi) / 2; }
};

// All real roots, one interval each, sorted, with strict separation
// (hi of one interval < lo of the next).
std::vector<IsolatedRoot> isolate_roots(const UniPoly& f);

// Strict upper bound on the absolute value of every complex root.
Rat cauchy_bound(const UniPoly& f);

// Halves the interval while keeping exactly one root of f inside.
void refine_root(const SturmChain& chain, IsolatedRoot& r);

// Rational points s_0 < r_1 < s_1 < ... < r_n < s_n interleaving the given
// separated roots; none of the points is a root of f.
std::vector<Rat> gap_samples(const std::vector<IsolatedRoot>& roots);

// Exact polynomial through the given points (distinct abscissae).
UniPoly interpolate(const std::vector<std::pair<Rat, Rat>>& points);

}  // namespace pencillab
