#include "pencillab/homform.hpp"

#include <sstream>

#include "pencillab/bipoly.hpp"

namespace pencillab {

ProjPoint::ProjPoint(Rat px, Rat py, Rat pz) : x(std::move(px)), y(std::move(py)), z(std::move(pz)) {
    if (x == 0 && y == 0 && z == 0) throw InputError("projective point (0:0:0)");
    Int den(1);
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), y.get_den_mpz_t());
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), z.get_den_mpz_t());
    x *= Rat(den);
    y *= Rat(den);
    z *= Rat(den);
    Int g(0);
    mpz_gcd(g.get_mpz_t(), x.get_num_mpz_t(), y.get_num_mpz_t());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z.get_num_mpz_t());
    if (g != 0) {
        x /= Rat(g);
        y /= Rat(g);
        z /= Rat(g);
    }
    int lead = sign(x) != 0 ? sign(x) : (sign(y) != 0 ? sign(y) : sign(z));
    if (lead < 0) {
        x = -x;
        y = -y;
        z = -z;
    }
}

Rat ProjPoint::affine_x() const {
    if (z == 0) throw DegeneracyError("point at infinity has no affine coordinates");
    return x / z;
}

Rat ProjPoint::affine_y() const {
    if (z == 0) throw DegeneracyError("point at infinity has no affine coordinates");
    return y / z;
}

std::string ProjPoint::to_string() const {
    return "(" + rat_to_string(x) + " : " + rat_to_string(y) + " : " + rat_to_string(z) + ")";
}

int orient(const ProjPoint& a, const ProjPoint& b, const ProjPoint& c) {
    Rat d = a.x * (b.y * c.z - b.z * c.y) - a.y * (b.x * c.z - b.z * c.x) +
            a.z * (b.x * c.y - b.y * c.x);
    return sign(d);
}

Mat3 mat3_identity() {
    Mat3 m{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m[i][j] = Rat(i == j ? 1 : 0);
    return m;
}

Mat3 mat3_mul(const Mat3& a, const Mat3& b) {
    Mat3 r{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            Rat s(0);
            for (int k = 0; k < 3; ++k) s += a[i][k] * b[k][j];
            r[i][j] = s;
        }
    return r;
}

Rat mat3_det(const Mat3& m) {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
           m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

Mat3 mat3_inverse(const Mat3& m) {
    Rat d = mat3_det(m);
    if (d == 0) throw DegeneracyError("singular matrix");
    Mat3 r{};
    r[0][0] = (m[1][1] * m[2][2] - m[1][2] * m[2][1]) / d;
    r[0][1] = (m[0][2] * m[2][1] - m[0][1] * m[2][2]) / d;
    r[0][2] = (m[0][1] * m[1][2] - m[0][2] * m[1][1]) / d;
    r[1][0] = (m[1][2] * m[2][0] - m[1][0] * m[2][2]) / d;
    r[1][1] = (m[0][0] * m[2][2] - m[0][2] * m[2][0]) / d;
    r[1][2] = (m[0][2] * m[1][0] - m[0][0] * m[1][2]) / d;
    r[2][0] = (m[1][0] * m[2][1] - m[1][1] * m[2][0]) / d;
    r[2][1] = (m[0][1] * m[2][0] - m[0][0] * m[2][1]) / d;
    r[2][2] = (m[0][0] * m[1][1] - m[0][1] * m[1][0]) / d;
    return r;
}

ProjPoint mat3_apply(const Mat3& m, const ProjPoint& p) {
    return ProjPoint(m[0][0] * p.x + m[0][1] * p.y + m[0][2] * p.z,
                     m[1][0] * p.x + m[1][1] * p.y + m[1][2] * p.z,
                     m[2][0] * p.x + m[2][1] * p.y + m[2][2] * p.z);
}

HomForm::HomForm(unsigned degree) : deg_(degree) {
    c_.assign((degree + 1) * (degree + 2) / 2, Rat(0));
}

size_t HomForm::index(unsigned i, unsigned j) const {
    // Row i holds degrees j = 0..deg_-i.
    return static_cast<size_t>(i) * (2 * deg_ + 3 - i) / 2 + j;
}

HomForm HomForm::monomial(unsigned d, unsigned i, unsigned j, const Rat& c) {
    HomForm f(d);
    f.set_coeff(i, j, c);
    return f;
}

const Rat& HomForm::coeff(unsigned i, unsigned j) const {
    if (i + j > deg_) throw InputError("exponents exceed degree");
    return c_[index(i, j)];
}

void HomForm::set_coeff(unsigned i, unsigned j, const Rat& c) {
    if (i + j > deg_) throw InputError("exponents exceed degree");
    c_[index(i, j)] = c;
}

bool HomForm::is_zero() const {
    for (const auto& c : c_)
        if (c != 0) return false;
    return true;
}

Rat HomForm::eval(const Rat& x, const Rat& y, const Rat& z) const {
    Rat acc(0);
    for (unsigned i = 0; i <= deg_; ++i) {
        for (unsigned j = 0; j + i <= deg_; ++j) {
            const Rat& c = c_[index(i, j)];
            if (c == 0) continue;
            acc += c * rat_pow(x, i) * rat_pow(y, j) * rat_pow(z, deg_ - i - j);
        }
    }
    return acc;
}

Rat HomForm::eval(const ProjPoint& p) const { return eval(p.x, p.y, p.z); }

HomForm HomForm::partial(int var) const {
    if (deg_ == 0) {
        HomForm r(0);
        return r;
    }
    HomForm r(deg_ - 1);
    for (unsigned i = 0; i <= deg_; ++i) {
        for (unsigned j = 0; j + i <= deg_; ++j) {
            const Rat& c = c_[index(i, j)];
            if (c == 0) continue;
            unsigned k = deg_ - i - j;
            if (var == 0 && i > 0) r.set_coeff(i - 1, j, r.coeff(i - 1, j) + c * Rat(i));
            if (var == 1 && j > 0) r.set_coeff(i, j - 1, r.coeff(i, j - 1) + c * Rat(j));
            if (var == 2 && k > 0) r.set_coeff(i, j, r.coeff(i, j) + c * Rat(k));
        }
    }
    return r;
}

HomForm HomForm::operator+(const HomForm& o) const {
    if (deg_ != o.deg_) throw InputError("degree mismatch");
    HomForm r(deg_);
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i] + o.c_[i];
    return r;
}

HomForm HomForm::operator-(const HomForm& o) const {
    if (deg_ != o.deg_) throw InputError("degree mismatch");
    HomForm r(deg_);
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i] - o.c_[i];
    return r;
}

HomForm HomForm::operator*(const HomForm& o) const {
    HomForm r(deg_ + o.deg_);
    for (unsigned i = 0; i <= deg_; ++i)
        for (unsigned j = 0; j + i <= deg_; ++j) {
            const Rat& a = c_[index(i, j)];
            if (a == 0) continue;
            for (unsigned p = 0; p <= o.deg_; ++p)
                for (unsigned q = 0; q + p <= o.deg_; ++q) {
                    const Rat& b = o.coeff(p, q);
                    if (b == 0) continue;
                    r.set_coeff(i + p, j + q, r.coeff(i + p, j + q) + a * b);
                }
        }
    return r;
}

HomForm HomForm::scaled(const Rat& s) const {
    HomForm r(deg_);
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i] * s;
    return r;
}

bool HomForm::operator==(const HomForm& o) const { return deg_ == o.deg_ && c_ == o.c_; }

HomForm HomForm::substituted(const Mat3& m) const {
    // Linear forms the variables map to.
    std::array<HomForm, 3> lin = {HomForm(1), HomForm(1), HomForm(1)};
    for (int v = 0; v < 3; ++v) {
        lin[v].set_coeff(1, 0, m[v][0]);
        lin[v].set_coeff(0, 1, m[v][1]);
        lin[v].set_coeff(0, 0, m[v][2]);
    }
    // Powers of each linear form up to the degree.
    auto powers = [&](const HomForm& f) {
        std::vector<HomForm> p;
        p.push_back(HomForm::monomial(0, 0, 0, Rat(1)));
        for (unsigned e = 1; e <= deg_; ++e) p.push_back(p.back() * f);
        return p;
    };
    auto px = powers(lin[0]), py = powers(lin[1]), pz = powers(lin[2]);
    HomForm r(deg_);
    for (unsigned i = 0; i <= deg_; ++i)
        for (unsigned j = 0; j + i <= deg_; ++j) {
            const Rat& c = c_[index(i, j)];
            if (c == 0) continue;
            HomForm term = px[i] * py[j] * pz[deg_ - i - j];
            r = r + term.scaled(c);
        }
    return r;
}

UniPoly HomForm::restrict_line(const ProjPoint& p, const ProjPoint& q) const {
    // Coordinates of p + s q are linear polynomials in s.
    UniPoly X = UniPoly::linear(p.x, q.x);
    UniPoly Y = UniPoly::linear(p.y, q.y);
    UniPoly Z = UniPoly::linear(p.z, q.z);
    std::vector<UniPoly> pxs{UniPoly::constant(Rat(1))}, pys = pxs, pzs = pxs;
    for (unsigned e = 1; e <= deg_; ++e) {
        pxs.push_back(pxs.back() * X);
        pys.push_back(pys.back() * Y);
        pzs.push_back(pzs.back() * Z);
    }
    UniPoly acc;
    for (unsigned i = 0; i <= deg_; ++i)
        for (unsigned j = 0; j + i <= deg_; ++j) {
            const Rat& c = c_[index(i, j)];
            if (c == 0) continue;
            acc += (pxs[i] * pys[j] * pzs[deg_ - i - j]).scaled(c);
        }
    return acc;
}

BiPoly HomForm::dehomogenize_z() const {
    BiPoly r;
    for (unsigned j = 0; j <= deg_; ++j) {
        std::vector<Rat> cx(deg_ - j + 1, Rat(0));
        for (unsigned i = 0; i + j <= deg_; ++i) cx[i] = c_[index(i, j)];
        r.set_coeff(j, UniPoly(std::move(cx)));
    }
    return r;
}

UniPoly HomForm::restrict_infinity() const {
    std::vector<Rat> cx(deg_ + 1, Rat(0));
    for (unsigned i = 0; i <= deg_; ++i) cx[i] = c_[index(i, deg_ - i)];
    return UniPoly(std::move(cx));
}

bool HomForm::proportional_to(const HomForm& o) const {
    if (deg_ != o.deg_) return false;
    size_t k = 0;
    while (k < c_.size() && c_[k] == 0 && o.c_[k] == 0) ++k;
    if (k == c_.size()) return true;
    if (c_[k] == 0 || o.c_[k] == 0) return false;
    Rat ratio = c_[k] / o.c_[k];
    for (size_t i = k; i < c_.size(); ++i)
        if (c_[i] != o.c_[i] * ratio) return false;
    return true;
}

HomForm HomForm::normalized() const {
    Int den(1);
    for (const auto& c : c_) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    Int g(0);
    for (const auto& c : c_) {
        Int n = c.get_num() * (den / c.get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
    }
    if (g == 0) return *this;
    int lead = 0;
    for (const auto& c : c_)
        if (c != 0) {
            lead = sign(c);
            break;
        }
    Rat scale = Rat(den) / Rat(g) * Rat(lead);
    return scaled(scale);
}

std::string HomForm::to_string() const {
    std::ostringstream os;
    bool first = true;
    const char* vars = "xyz";
    for (unsigned i = 0; i <= deg_; ++i)
        for (unsigned j = 0; j + i <= deg_; ++j) {
            const Rat& c = c_[index(i, j)];
            if (c == 0) continue;
            if (!first) os << (c > 0 ? " + " : " - ");
            else if (c < 0) os << "-";
            first = false;
            Rat a = rat_abs(c);
            unsigned exps[3] = {i, j, deg_ - i - j};
            bool printed = false;
            if (a != 1 || (i == 0 && j == 0 && deg_ - i - j == 0)) {
                os << rat_to_string(a);
                printed = true;
            }
            for (int v = 0; v < 3; ++v) {
                if (exps[v] == 0) continue;
                if (printed) os << "*";
                os << vars[v];
                if (exps[v] > 1) os << "^" << exps[v];
                printed = true;
            }
        }
    if (first) os << "0";
    return os.str();
}

}  // namespace pencillab
