#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace pencillab {

// Exact arithmetic scalars. mpq_class keeps values canonical (positive
// denominator, reduced), which is exactly the invariant we need.
using Int = mpz_class;
using Rat = mpq_class;

// Input that cannot be parsed or fails validation.
struct InputError : std::runtime_error {
    explicit InputError(const std::string& m) : std::runtime_error(m) {}
};

// Geometric/algebraic degeneracy (rank drops, singular inputs, failed
// genericity after retries, ...).
struct DegeneracyError : std::runtime_error {
    explicit DegeneracyError(const std::string& m) : std::runtime_error(m) {}
};

inline int sign(const Rat& q) { return sgn(q); }
inline int sign(const Int& z) { return sgn(z); }

inline Rat rat_abs(const Rat& q) { return q < 0 ? Rat(-q) : q; }

// Parses "p", "-p", or "p/q" with arbitrary-precision parts.
inline Rat rat_from_string(const std::string& s) {
    if (s.empty()) throw InputError("empty rational literal");
    Rat q;
    if (q.set_str(s, 10) != 0) throw InputError("bad rational literal: " + s);
    q.canonicalize();
    if (q.get_den() == 0) throw InputError("zero denominator: " + s);
    return q;
}

inline std::string rat_to_string(const Rat& q) { return q.get_str(); }

// Largest integer <= q.
inline Int rat_floor(const Rat& q) {
    Int r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

inline Rat rat_pow(const Rat& q, unsigned long e) {
    Rat r;
    mpz_pow_ui(r.get_num_mpz_t(), q.get_num_mpz_t(), e);
    mpz_pow_ui(r.get_den_mpz_t(), q.get_den_mpz_t(), e);
    r.canonicalize();
    return r;
}

inline Int int_pow(const Int& z, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), z.get_mpz_t(), e);
    return r;
}

inline double rat_to_double(const Rat& q) { return q.get_d(); }

}  // namespace pencillab
