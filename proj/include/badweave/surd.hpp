#pragma once

#include "badweave/rational.hpp"

#include <vector>

namespace badweave {

// Element of a real quadratic field: (a + b*sqrt(d))/c with integer a,b,c,
// c > 0, d squarefree (d = 0 iff the value is rational).  All comparisons are
// exact; no floating point on certified paths.
class Surd {
public:
    Surd() : a_(0), b_(0), c_(1), d_(0) {}
    Surd(const Int& n) : a_(n), b_(0), c_(1), d_(0) {}
    Surd(long n) : a_(n), b_(0), c_(1), d_(0) {}
    Surd(const Rat& r) : a_(r.get_num()), b_(0), c_(r.get_den()), d_(0) {}
    // disambiguate gmpxx expression templates
    template <class U> Surd(const __gmp_expr<mpz_t, U>& e) : Surd(Int(e)) {}
    template <class U> Surd(const __gmp_expr<mpq_t, U>& e) : Surd(Rat(e)) {}
    // (a + b*sqrt(d))/c
    Surd(Int a, Int b, Int c, Int d);

    static Surd sqrt_of(const Int& D); // sqrt(D), D >= 0

    const Int& a() const { return a_; }
    const Int& b() const { return b_; }
    const Int& c() const { return c_; }
    const Int& d() const { return d_; }

    bool is_rational() const { return b_ == 0; }
    Rat to_rat() const; // requires is_rational()

    Surd operator-() const;
    Surd operator+(const Surd& o) const;
    Surd operator-(const Surd& o) const { return *this + (-o); }
    Surd operator*(const Surd& o) const;
    Surd inverse() const; // requires nonzero
    Surd operator/(const Surd& o) const { return *this * o.inverse(); }
    Surd conj() const { return Surd(a_, -b_, c_, d_); }
    Rat norm() const; // value * conj, rational
    Surd pow(long e) const;

    bool operator==(const Surd& o) const;
    int sgn() const;
    int cmp(const Surd& o) const { return (*this - o).sgn(); }
    bool operator<(const Surd& o) const { return cmp(o) < 0; }
    bool operator<=(const Surd& o) const { return cmp(o) <= 0; }
    bool operator>(const Surd& o) const { return cmp(o) > 0; }
    bool operator>=(const Surd& o) const { return cmp(o) >= 0; }

    Int floor() const;
    double to_double() const;
    std::string str() const; // exact rendering "(a+b*sqrt(d))/c"

private:
    void canon();
    Int a_, b_, c_, d_;
};

inline Surd operator*(const Rat& r, const Surd& s) { return Surd(r) * s; }
inline Surd operator+(const Rat& r, const Surd& s) { return Surd(r) + s; }
inline Surd operator-(const Rat& r, const Surd& s) { return Surd(r) - s; }

// theta grammar: "sqrt(D)" (meaning frac(sqrt(D))), "(a+b*sqrt(d))/c", or "p/q"
Surd parse_theta(const std::string& s);

// continued fraction of a quadratic irrational; partial quotients a_1, a_2, ...
// (a_0 = floor dropped from the max since ||q theta|| only sees the tail)
struct CFExpansion {
    std::vector<Int> preperiod; // a_1 .. (before the cycle)
    std::vector<Int> period;    // the repeating block
    Int a_max;                  // max over preperiod + period
};
CFExpansion continued_fraction(const Surd& theta);

} // namespace badweave
