#pragma once

#include <array>
#include <string>
#include <vector>

#include "pencillab/rat.hpp"
#include "pencillab/unipoly.hpp"

namespace pencillab {

// Point of the rational projective plane. Stored normalized: coprime integer
// coordinates, first nonzero coordinate positive.
struct ProjPoint {
    Rat x, y, z;

    ProjPoint() : x(0), y(0), z(1) {}
    ProjPoint(Rat px, Rat py, Rat pz);

    bool operator==(const ProjPoint& o) const { return x == o.x && y == o.y && z == o.z; }
    bool is_finite() const { return z != 0; }
    Rat affine_x() const;
    Rat affine_y() const;
    static ProjPoint affine(const Rat& ax, const Rat& ay) { return ProjPoint(ax, ay, Rat(1)); }
    std::string to_string() const;
};

// Orientation of the ordered triple: sign of det[a; b; c] (rows of
// homogeneous coordinates). For affine points this is the usual ccw test.
int orient(const ProjPoint& a, const ProjPoint& b, const ProjPoint& c);

using Mat3 = std::array<std::array<Rat, 3>, 3>;

Mat3 mat3_identity();
Mat3 mat3_mul(const Mat3& a, const Mat3& b);
Rat mat3_det(const Mat3& m);
Mat3 mat3_inverse(const Mat3& m);
ProjPoint mat3_apply(const Mat3& m, const ProjPoint& p);

class BiPoly;  // forward; see bipoly.hpp

// Homogeneous trivariate form of fixed degree d with exact rational
// coefficients, indexed by exponents (i,j,k) of x^i y^j z^k, i+j+k = d.
class HomForm {
  public:
    explicit HomForm(unsigned degree);
    static HomForm monomial(unsigned d, unsigned i, unsigned j, const Rat& c);

    unsigned degree() const { return deg_; }
    const Rat& coeff(unsigned i, unsigned j) const;  // k = d - i - j
    void set_coeff(unsigned i, unsigned j, const Rat& c);
    bool is_zero() const;
    size_t monomial_count() const { return c_.size(); }

    Rat eval(const ProjPoint& p) const;
    Rat eval(const Rat& x, const Rat& y, const Rat& z) const;
    HomForm partial(int var) const;  // 0=x, 1=y, 2=z
    HomForm operator+(const HomForm& o) const;
    HomForm operator-(const HomForm& o) const;
    HomForm operator*(const HomForm& o) const;
    HomForm scaled(const Rat& s) const;
    bool operator==(const HomForm& o) const;

    // Substitution x_i <- sum_j M[i][j] * x_j; (F.substituted(M))(p) = F(M p).
    HomForm substituted(const Mat3& m) const;

    // F(P + s Q) as a polynomial in s (degree <= d).
    UniPoly restrict_line(const ProjPoint& p, const ProjPoint& q) const;

    // F(x, y, 1) as a polynomial in the main variable y with coefficients in x.
    BiPoly dehomogenize_z() const;
    // Restriction to the line z = 0: F(x, 1, 0) in x (plus check F(1,0,0)).
    UniPoly restrict_infinity() const;

    // Same zero set test: proportional coefficient vectors.
    bool proportional_to(const HomForm& o) const;
    // Integer-primitive representative with deterministic sign.
    HomForm normalized() const;

    std::string to_string() const;

  private:
    unsigned deg_;
    std::vector<Rat> c_;
    size_t index(unsigned i, unsigned j) const;
};

}  // namespace pencillab
