#pragma once

#include <gmpxx.h>
#include <optional>
#include <stdexcept>
#include <string>

namespace badweave {

using Int = mpz_class;
using Rat = mpq_class;

inline int sgn_int(const Int& n) { return mpz_sgn(n.get_mpz_t()); }

inline Int ipow(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

// base^e for integer e; base must be nonzero when e < 0
inline Rat qpow(const Rat& base, const Int& e) {
    if (!e.fits_slong_p()) throw std::overflow_error("qpow: exponent out of range");
    long le = e.get_si();
    if (le == 0) return Rat(1);
    if (base == 0) {
        if (le < 0) throw std::domain_error("qpow: 0^negative");
        return Rat(0);
    }
    unsigned long m = le < 0 ? (unsigned long)(-le) : (unsigned long)le;
    Rat r(ipow(Int(base.get_num()), m), ipow(Int(base.get_den()), m));
    r.canonicalize();
    if (le < 0) r = 1 / r;
    return r;
}

inline Int ifloor(const Rat& q) {
    Int r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

inline Int iceil(const Rat& q) {
    Int r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

inline Int isqrt(const Int& n) {
    Int r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

// "p/q" or "p"
inline Rat parse_rational(const std::string& s) {
    Rat r;
    if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
    if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
    r.canonicalize();
    return r;
}

inline std::string rat_str(const Rat& r) { return r.get_str(); }

} // namespace badweave
