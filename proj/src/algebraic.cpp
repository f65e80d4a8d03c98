#include "pencillab/algebraic.hpp"

#include <sstream>

namespace pencillab {

AlgebraicReal::AlgebraicReal(const Rat& value) : iv_{value, value} {}

AlgebraicReal::AlgebraicReal(const UniPoly& defining, IsolatedRoot interval)
    : defining_(squarefree_part(defining)), iv_(std::move(interval)) {
    chain_ = std::make_shared<SturmChain>(defining_);
    if (!iv_.is_exact()) {
        if (chain_->count(iv_.lo, iv_.hi) != 1)
            throw InputError("interval does not isolate one root");
        if (zp_sign_at(chain_->squarefree(), iv_.lo) == 0) throw InputError("endpoint root");
        if (zp_sign_at(chain_->squarefree(), iv_.hi) == 0) {
            iv_.lo = iv_.hi;  // the isolated root is the right endpoint
        }
    }
}

Rat AlgebraicReal::rational_value() const {
    if (!is_rational()) throw DegeneracyError("not a rational value");
    return iv_.lo;
}

void AlgebraicReal::refine() const {
    if (iv_.is_exact()) return;
    refine_root(*chain_, iv_);
}

void AlgebraicReal::refine_below(const Rat& width) const {
    while (!iv_.is_exact() && iv_.hi - iv_.lo >= width) refine();
}

int AlgebraicReal::sign_of(const UniPoly& e) const {
    if (e.is_zero()) return 0;
    if (is_rational()) return e.sign_at(iv_.lo);
    UniPoly g = gcd(e, defining_);
    if (g.degree() > 0 && real_root_count(g, iv_.lo, iv_.hi) == 1) return 0;
    // e has no root at this number, so some refinement clears the interval.
    SturmChain ec(e);
    IsolatedRoot work = iv_;
    while (true) {
        if (ec.count(work.lo, work.hi) == 0) {
            iv_ = work;
            int s = e.sign_at(work.hi);
            if (s != 0) return s;
        }
        refine_root(*chain_, work);
        if (work.is_exact()) {
            iv_ = work;
            return e.sign_at(work.lo);
        }
    }
}

int AlgebraicReal::compare(const Rat& q) const {
    if (is_rational()) {
        Rat d = iv_.lo - q;
        return sign(d);
    }
    if (q <= iv_.lo) return 1;
    if (q >= iv_.hi) return -1;
    if (zp_sign_at(chain_->squarefree(), q) == 0) return 0;
    return chain_->count(iv_.lo, q) == 1 ? -1 : 1;
}

int AlgebraicReal::compare(const AlgebraicReal& o) const {
    if (o.is_rational()) return compare(o.iv_.lo);
    if (is_rational()) return -o.compare(iv_.lo);
    while (true) {
        if (iv_.hi <= o.iv_.lo) {
            if (iv_.hi < o.iv_.lo) return -1;
            // Shared endpoint is a root of neither defining polynomial.
            return -1;
        }
        if (o.iv_.hi <= iv_.lo) return 1;
        // Overlapping intervals: equal iff the defining polynomials share
        // the root, which then lies in the overlap.
        UniPoly g = gcd(defining_, o.defining_);
        if (g.degree() > 0) {
            Rat lo = std::max(iv_.lo, o.iv_.lo);
            Rat hi = std::min(iv_.hi, o.iv_.hi);
            if (real_root_count(g, lo, hi) >= 1) {
                // The common root is inside both isolating intervals, hence
                // equals both numbers.
                long mine = real_root_count(g, iv_.lo, iv_.hi);
                long theirs = real_root_count(g, o.iv_.lo, o.iv_.hi);
                if (mine == 1 && theirs == 1) return 0;
            }
        }
        refine();
        o.refine();
        if (is_rational()) return -o.compare(iv_.lo);
        if (o.is_rational()) return compare(o.iv_.lo);
    }
}

double AlgebraicReal::approx() const {
    refine_below(Rat(1, 1 << 20));
    return rat_to_double((iv_.lo + iv_.hi) / 2);
}

std::string AlgebraicReal::to_string() const {
    std::ostringstream os;
    if (is_rational()) {
        os << rat_to_string(iv_.lo);
    } else {
        os << "root in (" << rat_to_string(iv_.lo) << ", " << rat_to_string(iv_.hi) << ")";
    }
    return os.str();
}

}  // namespace pencillab
