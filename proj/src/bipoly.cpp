#include "pencillab/bipoly.hpp"

#include <sstream>

#include "pencillab/linalg.hpp"

namespace pencillab {

BiPoly::BiPoly(std::vector<UniPoly> coeffs) : c_(std::move(coeffs)) { trim(); }

void BiPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

BiPoly BiPoly::from_unipoly_in_main(const UniPoly& p) {
    std::vector<UniPoly> c;
    for (int i = 0; i <= p.degree(); ++i) c.push_back(UniPoly::constant(p.coeff(i)));
    return BiPoly(std::move(c));
}

BiPoly BiPoly::from_unipoly_in_coeff(const UniPoly& p) {
    return BiPoly(std::vector<UniPoly>{p});
}

int BiPoly::degree_coeff() const {
    int d = -1;
    for (const auto& p : c_) d = std::max(d, p.degree());
    return d;
}

const UniPoly& BiPoly::lc() const {
    static const UniPoly zero;
    return c_.empty() ? zero : c_.back();
}

UniPoly BiPoly::coeff(size_t j) const { return j < c_.size() ? c_[j] : UniPoly(); }

void BiPoly::set_coeff(size_t j, UniPoly p) {
    if (j >= c_.size()) c_.resize(j + 1);
    c_[j] = std::move(p);
    trim();
}

BiPoly BiPoly::operator-() const {
    std::vector<UniPoly> r(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) r[i] = -c_[i];
    return BiPoly(std::move(r));
}

BiPoly BiPoly::operator+(const BiPoly& o) const {
    std::vector<UniPoly> r(std::max(c_.size(), o.c_.size()));
    for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return BiPoly(std::move(r));
}

BiPoly BiPoly::operator-(const BiPoly& o) const { return *this + (-o); }

BiPoly BiPoly::operator*(const BiPoly& o) const {
    if (is_zero() || o.is_zero()) return BiPoly();
    std::vector<UniPoly> r(c_.size() + o.c_.size() - 1);
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    }
    return BiPoly(std::move(r));
}

BiPoly BiPoly::scaled(const UniPoly& s) const {
    std::vector<UniPoly> r(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i] * s;
    return BiPoly(std::move(r));
}

BiPoly BiPoly::derivative_main() const {
    std::vector<UniPoly> r;
    for (size_t i = 1; i < c_.size(); ++i) r.push_back(c_[i].scaled(Rat(static_cast<long>(i))));
    return BiPoly(std::move(r));
}

UniPoly BiPoly::eval_main(const Rat& y) const {
    UniPoly acc;
    for (size_t i = c_.size(); i-- > 0;) acc = acc.scaled(y) + c_[i];
    return acc;
}

UniPoly BiPoly::eval_coeff(const Rat& x) const {
    std::vector<Rat> r(c_.size(), Rat(0));
    for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i].eval(x);
    return UniPoly(std::move(r));
}

Rat BiPoly::eval(const Rat& x, const Rat& y) const { return eval_coeff(x).eval(y); }

UniPoly BiPoly::eval_main_ratfun(const UniPoly& num, const UniPoly& den) const {
    if (is_zero()) return UniPoly();
    int d = degree();
    // sum c_j * num^j * den^(d-j)
    std::vector<UniPoly> npow{UniPoly::constant(Rat(1))}, dpow = npow;
    for (int e = 1; e <= d; ++e) {
        npow.push_back(npow.back() * num);
        dpow.push_back(dpow.back() * den);
    }
    UniPoly acc;
    for (int j = 0; j <= d; ++j) acc += c_[j] * npow[j] * dpow[d - j];
    return acc;
}

UniPoly BiPoly::content() const {
    UniPoly g;
    for (const auto& p : c_) {
        if (p.is_zero()) continue;
        g = g.is_zero() ? p.monic() : gcd(g, p);
        if (g.degree() == 0) return UniPoly::constant(Rat(1));
    }
    return g;
}

BiPoly BiPoly::divexact_coeff(const UniPoly& d) const {
    std::vector<UniPoly> r(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i].is_zero() ? UniPoly() : c_[i].divexact(d);
    return BiPoly(std::move(r));
}

std::string BiPoly::to_string(const std::string& main_var, const std::string& coeff_var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t j = c_.size(); j-- > 0;) {
        if (c_[j].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << "(" << c_[j].to_string(coeff_var) << ")";
        if (j > 0) {
            os << "*" << main_var;
            if (j > 1) os << "^" << j;
        }
    }
    return os.str();
}

UniPoly det_unipoly(const std::vector<std::vector<UniPoly>>& m) {
    size_t n = m.size();
    if (n == 0) return UniPoly::constant(Rat(1));
    long bound = 0;
    for (size_t i = 0; i < n; ++i) {
        int row_max = 0;
        for (size_t j = 0; j < n; ++j) row_max = std::max(row_max, m[i][j].degree());
        bound += std::max(row_max, 0);
    }
    std::vector<std::pair<Rat, Rat>> pts;
    auto eval_det = [&](const Rat& x) {
        MatQ q(n, n);
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) q.at(i, j) = m[i][j].eval(x);
        return q.det();
    };
    for (long k = 0; k <= bound; ++k) {
        Rat x = (k % 2 == 0) ? Rat(k / 2) : Rat(-(k / 2 + 1));
        pts.emplace_back(x, eval_det(x));
    }
    UniPoly det = interpolate(pts);
    // One extra node double-checks the degree bound.
    Rat extra = Rat(bound + 1);
    if (det.eval(extra) != eval_det(extra))
        throw DegeneracyError("interpolated determinant failed its check point");
    return det;
}

namespace {

// Entry of the Sylvester-style block matrix for subresultants of (a, b) in
// the main variable. Row layout: (n-j) shifts of a, then (m-j) shifts of b;
// column `col_monomial` is the monomial degree the column represents.
UniPoly subres_entry(const BiPoly& a, const BiPoly& b, int j, int row, int col_monomial) {
    int m = a.degree(), n = b.degree();
    if (row < n - j) {
        int shift = n - j - 1 - row;  // row is y^shift * a
        int idx = col_monomial - shift;
        return (idx >= 0 && idx <= m) ? a.coeff(idx) : UniPoly();
    }
    int r = row - (n - j);
    int shift = m - j - 1 - r;  // y^shift * b
    int idx = col_monomial - shift;
    return (idx >= 0 && idx <= n) ? b.coeff(idx) : UniPoly();
}

// Determinant of the square subresultant matrix of order j with the last
// column taken from monomial y^k (k <= j).
UniPoly subres_det(const BiPoly& a, const BiPoly& b, int j, int k) {
    int m = a.degree(), n = b.degree();
    int size = m + n - 2 * j;
    std::vector<std::vector<UniPoly>> mat(size, std::vector<UniPoly>(size));
    for (int row = 0; row < size; ++row) {
        for (int col = 0; col < size - 1; ++col) {
            int monomial = m + n - j - 1 - col;
            mat[row][col] = subres_entry(a, b, j, row, monomial);
        }
        mat[row][size - 1] = subres_entry(a, b, j, row, k);
    }
    return det_unipoly(mat);
}

}  // namespace

UniPoly principal_subresultant(const BiPoly& a, const BiPoly& b, int j) {
    int m = a.degree(), n = b.degree();
    if (m < 1 || n < 1) throw InputError("subresultants need positive degrees");
    if (m < n) return principal_subresultant(b, a, j);  // sign-insensitive uses only
    if (j >= n) throw InputError("subresultant order too large");
    if (j == 0) return resultant_main(a, b);
    return subres_det(a, b, j, j);
}

UniPoly resultant_main(const BiPoly& a, const BiPoly& b) {
    int m = a.degree(), n = b.degree();
    if (m < 0 || n < 0) return UniPoly();
    if (m == 0) {
        // res(const, b) = a^deg(b)
        UniPoly r = UniPoly::constant(Rat(1));
        for (int i = 0; i < n; ++i) r *= a.coeff(0);
        return r;
    }
    if (n == 0) {
        UniPoly r = UniPoly::constant(Rat(1));
        for (int i = 0; i < m; ++i) r *= b.coeff(0);
        return r;
    }
    if (m < n) {
        UniPoly r = resultant_main(b, a);
        return ((static_cast<long>(m) * n) % 2 == 1) ? -r : r;
    }
    int size = m + n;
    std::vector<std::vector<UniPoly>> mat(size, std::vector<UniPoly>(size));
    for (int row = 0; row < size; ++row)
        for (int col = 0; col < size; ++col)
            mat[row][col] = subres_entry(a, b, 0, row, m + n - 1 - col);
    return det_unipoly(mat);
}

SubresultantS1 subresultant_s1(const BiPoly& a, const BiPoly& b) {
    const BiPoly& hi = a.degree() >= b.degree() ? a : b;
    const BiPoly& lo = a.degree() >= b.degree() ? b : a;
    SubresultantS1 out;
    out.s0 = resultant_main(a, b);
    out.s1_lead = subres_det(hi, lo, 1, 1);
    out.s1_const = subres_det(hi, lo, 1, 0);
    out.sres1 = out.s1_lead;
    return out;
}

}  // namespace pencillab
