#include "pencillab/unipoly.hpp"

#include <algorithm>
#include <sstream>

namespace pencillab {

int zp_degree(const ZPoly& p) {
    int d = static_cast<int>(p.size()) - 1;
    while (d >= 0 && p[d] == 0) --d;
    return d;
}

void zp_trim(ZPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

Int zp_content(const ZPoly& p) {
    Int g = 0;
    for (const auto& c : p) {
        if (c != 0) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

ZPoly zp_primitive(const ZPoly& p) {
    Int g = zp_content(p);
    if (g == 0 || g == 1) {
        ZPoly q = p;
        zp_trim(q);
        return q;
    }
    ZPoly q;
    q.reserve(p.size());
    for (const auto& c : p) q.push_back(c / g);
    zp_trim(q);
    return q;
}

ZPoly zp_derivative(const ZPoly& p) {
    ZPoly d;
    for (size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * static_cast<long>(i));
    zp_trim(d);
    return d;
}

int zp_sign_at(const ZPoly& p, const Rat& x) {
    int d = zp_degree(p);
    if (d < 0) return 0;
    const Int& num = x.get_num();
    const Int& den = x.get_den();
    // Horner on p(num/den) * den^d, which has the same sign.
    Int acc = p[d];
    for (int i = d - 1; i >= 0; --i) acc = acc * num + p[i] * int_pow(den, d - i);
    return sign(acc);
}

int zp_sign_at_pos_inf(const ZPoly& p) {
    int d = zp_degree(p);
    return d < 0 ? 0 : sign(p[d]);
}

int zp_sign_at_neg_inf(const ZPoly& p) {
    int d = zp_degree(p);
    if (d < 0) return 0;
    int s = sign(p[d]);
    return (d % 2 == 0) ? s : -s;
}

UniPoly::UniPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

void UniPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

UniPoly UniPoly::constant(const Rat& c) { return UniPoly(std::vector<Rat>{c}); }

UniPoly UniPoly::variable() { return UniPoly(std::vector<Rat>{Rat(0), Rat(1)}); }

UniPoly UniPoly::linear(const Rat& c0, const Rat& c1) {
    return UniPoly(std::vector<Rat>{c0, c1});
}

const Rat& UniPoly::lc() const {
    static const Rat zero(0);
    return c_.empty() ? zero : c_.back();
}

UniPoly UniPoly::operator-() const {
    std::vector<Rat> r(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) r[i] = -c_[i];
    return UniPoly(std::move(r));
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
    std::vector<Rat> r(std::max(c_.size(), o.c_.size()), Rat(0));
    for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return UniPoly(std::move(r));
}

UniPoly UniPoly::operator-(const UniPoly& o) const { return *this + (-o); }

UniPoly UniPoly::operator*(const UniPoly& o) const {
    if (is_zero() || o.is_zero()) return UniPoly();
    std::vector<Rat> r(c_.size() + o.c_.size() - 1, Rat(0));
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    }
    return UniPoly(std::move(r));
}

UniPoly UniPoly::scaled(const Rat& s) const {
    std::vector<Rat> r(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i] * s;
    return UniPoly(std::move(r));
}

UniPoly UniPoly::shifted(size_t k) const {
    if (is_zero()) return UniPoly();
    std::vector<Rat> r(c_.size() + k, Rat(0));
    for (size_t i = 0; i < c_.size(); ++i) r[i + k] = c_[i];
    return UniPoly(std::move(r));
}

UniPoly UniPoly::derivative() const {
    std::vector<Rat> r;
    for (size_t i = 1; i < c_.size(); ++i) r.push_back(c_[i] * Rat(static_cast<long>(i)));
    return UniPoly(std::move(r));
}

Rat UniPoly::eval(const Rat& x) const {
    Rat acc(0);
    for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
}

std::pair<UniPoly, UniPoly> UniPoly::divrem(const UniPoly& o) const {
    if (o.is_zero()) throw DegeneracyError("division by zero polynomial");
    UniPoly r = *this;
    std::vector<Rat> q(std::max<int>(degree() - o.degree() + 1, 0), Rat(0));
    while (!r.is_zero() && r.degree() >= o.degree()) {
        Rat f = r.lc() / o.lc();
        size_t k = r.degree() - o.degree();
        q[k] = f;
        r -= o.scaled(f).shifted(k);
    }
    return {UniPoly(std::move(q)), r};
}

UniPoly UniPoly::divexact(const UniPoly& o) const {
    auto [q, r] = divrem(o);
    if (!r.is_zero()) throw DegeneracyError("inexact polynomial division");
    return q;
}

UniPoly UniPoly::monic() const {
    if (is_zero()) return *this;
    return scaled(Rat(1) / lc());
}

ZPoly UniPoly::primitive_z() const {
    if (is_zero()) return {};
    Int den(1);
    for (const auto& c : c_) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    ZPoly z;
    z.reserve(c_.size());
    for (const auto& c : c_) z.push_back(c.get_num() * (den / c.get_den()));
    return zp_primitive(z);
}

std::string UniPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = c_.size(); i-- > 0;) {
        if (c_[i] == 0) continue;
        if (!first) os << (c_[i] > 0 ? " + " : " - ");
        else if (c_[i] < 0) os << "-";
        first = false;
        Rat a = rat_abs(c_[i]);
        if (i == 0 || a != 1) os << rat_to_string(a);
        if (i > 0) {
            if (a != 1) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

namespace {

// Primitive pseudo-remainder with a positive multiplier: returns r with
// m * a = q * b + r for some m > 0, content stripped. The positive multiplier
// is what keeps chains built from it sign-faithful to the classical ones.
ZPoly prem_positive_primitive(const ZPoly& a, const ZPoly& b) {
    int db = zp_degree(b);
    const Int& lb = b[db];
    ZPoly r = a;
    zp_trim(r);
    long muls = 0;
    while (zp_degree(r) >= db) {
        int dr = zp_degree(r);
        Int f = r[dr];
        ZPoly nr(r.size(), Int(0));
        for (size_t i = 0; i < r.size(); ++i) nr[i] = r[i] * lb;
        for (int i = 0; i <= db; ++i) nr[i + dr - db] -= f * b[i];
        ++muls;
        r = std::move(nr);
        zp_trim(r);
        if (zp_degree(r) >= dr) throw DegeneracyError("pseudo-division failed to reduce degree");
    }
    // r == lb^muls * a mod b. If the multiplier is negative, flip r.
    if (lb < 0 && (muls & 1)) {
        for (auto& c : r) c = -c;
    }
    return zp_primitive(r);
}

}  // namespace

SturmChain::SturmChain(const UniPoly& f) {
    if (f.is_zero()) throw InputError("identically zero");
    UniPoly sf = squarefree_part(f);
    ZPoly p0 = sf.primitive_z();
    chain_.push_back(p0);
    if (zp_degree(p0) == 0) return;
    ZPoly p1 = zp_primitive(zp_derivative(p0));
    chain_.push_back(p1);
    while (zp_degree(chain_.back()) > 0) {
        ZPoly r = prem_positive_primitive(chain_[chain_.size() - 2], chain_.back());
        if (zp_degree(r) < 0) break;  // squarefree input: gcd is constant, last nonzero stays
        for (auto& c : r) c = -c;
        chain_.push_back(std::move(r));
    }
}

int SturmChain::variations_at(const Rat& x) const {
    int var = 0, last = 0;
    for (const auto& p : chain_) {
        int s = zp_sign_at(p, x);
        if (s == 0) continue;
        if (last != 0 && s != last) ++var;
        last = s;
    }
    return var;
}

int SturmChain::variations_at_neg_inf() const {
    int var = 0, last = 0;
    for (const auto& p : chain_) {
        int s = zp_sign_at_neg_inf(p);
        if (s == 0) continue;
        if (last != 0 && s != last) ++var;
        last = s;
    }
    return var;
}

int SturmChain::variations_at_pos_inf() const {
    int var = 0, last = 0;
    for (const auto& p : chain_) {
        int s = zp_sign_at_pos_inf(p);
        if (s == 0) continue;
        if (last != 0 && s != last) ++var;
        last = s;
    }
    return var;
}

long SturmChain::count(const std::optional<Rat>& a, const std::optional<Rat>& b) const {
    int va = a ? variations_at(*a) : variations_at_neg_inf();
    int vb = b ? variations_at(*b) : variations_at_pos_inf();
    return va - vb;
}

long real_root_count(const UniPoly& f, const std::optional<Rat>& a,
                     const std::optional<Rat>& b) {
    SturmChain chain(f);
    return chain.count(a, b);
}

long real_root_count(const UniPoly& f) {
    return real_root_count(f, std::nullopt, std::nullopt);
}

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    ZPoly x = a.primitive_z(), y = b.primitive_z();
    if (zp_degree(x) < zp_degree(y)) std::swap(x, y);
    while (zp_degree(y) > 0) {
        ZPoly r = prem_positive_primitive(x, y);
        x = std::move(y);
        y = std::move(r);
        if (zp_degree(y) < 0) {
            std::vector<Rat> c;
            for (const auto& z : x) c.emplace_back(z);
            return UniPoly(std::move(c)).monic();
        }
    }
    if (zp_degree(y) == 0) return UniPoly::constant(Rat(1));
    std::vector<Rat> c;
    for (const auto& z : x) c.emplace_back(z);
    return UniPoly(std::move(c)).monic();
}

UniPoly squarefree_part(const UniPoly& f) {
    if (f.is_zero()) throw InputError("identically zero");
    if (f.degree() == 0) return UniPoly::constant(Rat(1));
    UniPoly g = gcd(f, f.derivative());
    if (g.degree() == 0) return f;
    return f.divexact(g);
}

Rat cauchy_bound(const UniPoly& f) {
    if (f.is_zero()) throw InputError("identically zero");
    Rat m(0);
    Rat lead = rat_abs(f.lc());
    for (int i = 0; i < f.degree(); ++i) m = std::max(m, rat_abs(f.coeff(i)) / lead);
    return m + 1;
}

namespace {

void isolate_rec(const SturmChain& chain, const Rat& a, const Rat& b, int va, int vb,
                 std::vector<IsolatedRoot>& out) {
    int n = va - vb;
    if (n <= 0) return;
    if (n == 1) {
        if (zp_sign_at(chain.squarefree(), b) == 0) out.push_back({b, b});
        else out.push_back({a, b});
        return;
    }
    Rat m = (a + b) / 2;
    int vm = chain.variations_at(m);
    isolate_rec(chain, a, m, va, vm, out);
    isolate_rec(chain, m, b, vm, vb, out);
}

}  // namespace

void refine_root(const SturmChain& chain, IsolatedRoot& r) {
    if (r.is_exact()) return;
    Rat m = (r.lo + r.hi) / 2;
    if (zp_sign_at(chain.squarefree(), m) == 0) {
        r.lo = r.hi = m;
        return;
    }
    if (chain.variations_at(r.lo) - chain.variations_at(m) == 1) r.hi = m;
    else r.lo = m;
}

std::vector<IsolatedRoot> isolate_roots(const UniPoly& f) {
    SturmChain chain(f);
    std::vector<IsolatedRoot> out;
    if (zp_degree(chain.squarefree()) <= 0) return out;
    Rat bound = cauchy_bound(f);
    int va = chain.variations_at(-bound);
    int vb = chain.variations_at(bound);
    isolate_rec(chain, -bound, bound, va, vb, out);
    // Intervals come out sorted; enforce strict separation so that closures
    // are pairwise disjoint.
    bool again = true;
    while (again) {
        again = false;
        for (size_t i = 0; i + 1 < out.size(); ++i) {
            if (out[i].hi >= out[i + 1].lo) {
                refine_root(chain, out[i]);
                refine_root(chain, out[i + 1]);
                again = true;
            }
        }
    }
    return out;
}

std::vector<Rat> gap_samples(const std::vector<IsolatedRoot>& roots) {
    std::vector<Rat> s;
    if (roots.empty()) {
        s.emplace_back(0);
        return s;
    }
    s.push_back(roots.front().lo - 1);
    for (size_t i = 0; i + 1 < roots.size(); ++i)
        s.push_back((roots[i].hi + roots[i + 1].lo) / 2);
    s.push_back(roots.back().hi + 1);
    return s;
}

UniPoly interpolate(const std::vector<std::pair<Rat, Rat>>& points) {
    // Newton form with exact divided differences.
    size_t n = points.size();
    if (n == 0) return UniPoly();
    std::vector<Rat> dd;
    dd.reserve(n);
    for (const auto& p : points) dd.push_back(p.second);
    for (size_t level = 1; level < n; ++level) {
        for (size_t i = n - 1; i >= level; --i) {
            Rat dx = points[i].first - points[i - level].first;
            if (dx == 0) throw InputError("interpolation nodes must be distinct");
            dd[i] = (dd[i] - dd[i - 1]) / dx;
        }
    }
    UniPoly result = UniPoly::constant(dd[n - 1]);
    for (size_t i = n - 1; i-- > 0;) {
        UniPoly shift = UniPoly::linear(-points[i].first, Rat(1));
        result = result * shift + UniPoly::constant(dd[i]);
    }
    return result;
}

}  // namespace pencillab
