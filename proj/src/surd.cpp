#include "badweave/surd.hpp"

#include <cmath>
#include <map>
#include <sstream>

namespace badweave {

namespace {

// split n >= 0 as s^2 * f with f squarefree (trial division)
void split_square(const Int& n, Int& s, Int& f) {
    s = 1;
    f = 1;
    Int rem = n;
    for (Int p = 2; p * p <= rem; ++p) {
        if (rem % p == 0) {
            int e = 0;
            while (rem % p == 0) { rem /= p; ++e; }
            if (e / 2 > 0) s *= ipow(p, e / 2);
            if (e % 2) f *= p;
        }
    }
    f *= rem;
}

} // namespace

void Surd::canon() {
    if (c_ == 0) throw std::domain_error("Surd: zero denominator");
    if (d_ < 0) throw std::domain_error("Surd: negative radicand");
    if (b_ != 0 && d_ != 0) {
        Int s, f;
        split_square(d_, s, f);
        if (f <= 1) { // perfect square (or d=1): rational after all
            a_ += b_ * s * f; // f==1: sqrt(d)=s; f==0 impossible here
            b_ = 0;
            d_ = 0;
        } else {
            b_ *= s;
            d_ = f;
        }
    }
    if (d_ == 0) b_ = 0; // sqrt(0) = 0
    if (b_ == 0) d_ = 0;
    if (c_ < 0) { a_ = -a_; b_ = -b_; c_ = -c_; }
    Int g = gcd(gcd(a_, b_), c_);
    if (g > 1) { a_ /= g; b_ /= g; c_ /= g; }
}

Surd::Surd(Int a, Int b, Int c, Int d) : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
    canon();
}

Surd Surd::sqrt_of(const Int& D) {
    if (D < 0) throw std::domain_error("sqrt of negative");
    return Surd(0, 1, 1, D);
}

Rat Surd::to_rat() const {
    if (!is_rational()) throw std::domain_error("Surd: irrational");
    Rat r(a_, c_);
    r.canonicalize();
    return r;
}

Surd Surd::operator-() const { return Surd(-a_, -b_, c_, d_); }

Surd Surd::operator+(const Surd& o) const {
    if (d_ != 0 && o.d_ != 0 && d_ != o.d_)
        throw std::logic_error("Surd: mixing distinct quadratic fields");
    Int d = d_ != 0 ? d_ : o.d_;
    return Surd(a_ * o.c_ + o.a_ * c_, b_ * o.c_ + o.b_ * c_, c_ * o.c_, d);
}

Surd Surd::operator*(const Surd& o) const {
    if (d_ != 0 && o.d_ != 0 && d_ != o.d_)
        throw std::logic_error("Surd: mixing distinct quadratic fields");
    Int d = d_ != 0 ? d_ : o.d_;
    // (a1 + b1 s)(a2 + b2 s) = a1 a2 + b1 b2 d + (a1 b2 + a2 b1) s
    return Surd(a_ * o.a_ + b_ * o.b_ * d, a_ * o.b_ + o.a_ * b_, c_ * o.c_, d);
}

Rat Surd::norm() const {
    Rat r(a_ * a_ - b_ * b_ * d_, c_ * c_);
    r.canonicalize();
    return r;
}

Surd Surd::inverse() const {
    if (sgn() == 0) throw std::domain_error("Surd: inverse of zero");
    // 1/x = conj(x) / (x * conj(x)); x*conj = (a^2 - b^2 d)/c^2
    Int nrm = a_ * a_ - b_ * b_ * d_; // times 1/c^2
    // 1/x = (a - b sqrt(d)) * c / nrm
    return Surd(a_ * c_, -b_ * c_, nrm, d_);
}

Surd Surd::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    Surd r(Int(1));
    Surd base = *this;
    unsigned long m = (unsigned long)e;
    while (m) {
        if (m & 1) r = r * base;
        base = base * base;
        m >>= 1;
    }
    return r;
}

bool Surd::operator==(const Surd& o) const {
    return a_ == o.a_ && b_ == o.b_ && c_ == o.c_ && d_ == o.d_;
}

int Surd::sgn() const {
    int sa = sgn_int(a_), sb = sgn_int(b_);
    if (sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    // opposite signs: compare a^2 vs b^2 d
    Int lhs = a_ * a_, rhs = b_ * b_ * d_;
    int c = ::cmp(lhs, rhs); // sign of |a| vs |b sqrt d|
    if (c == 0) return 0;  // cannot happen for squarefree d>1, kept for safety
    return c > 0 ? sa : sb;
}

Int Surd::floor() const {
    double est = to_double();
    Int n;
    if (std::isfinite(est)) {
        mpz_set_d(n.get_mpz_t(), std::floor(est));
    } else {
        n = 0;
    }
    // fix up exactly
    while (*this >= Surd(n + 1)) ++n;
    while (*this < Surd(n)) --n;
    return n;
}

double Surd::to_double() const {
    double da = a_.get_d(), db = b_.get_d(), dc = c_.get_d(), dd = d_.get_d();
    return (da + db * std::sqrt(dd)) / dc;
}

std::string Surd::str() const {
    std::ostringstream os;
    if (b_ == 0) {
        os << a_;
        if (c_ != 1) os << "/" << c_;
    } else {
        os << "(" << a_ << "+" << b_ << "*sqrt(" << d_ << "))/" << c_;
    }
    return os.str();
}

namespace {

struct Parser {
    const std::string& s;
    size_t pos = 0;
    explicit Parser(const std::string& str) : s(str) {}
    void skip_ws() { while (pos < s.size() && isspace((unsigned char)s[pos])) ++pos; }
    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) { ++pos; return true; }
        return false;
    }
    bool eat_kw(const std::string& kw) {
        skip_ws();
        if (s.compare(pos, kw.size(), kw) == 0) { pos += kw.size(); return true; }
        return false;
    }
    Int integer() {
        skip_ws();
        size_t start = pos;
        if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) ++pos;
        while (pos < s.size() && isdigit((unsigned char)s[pos])) ++pos;
        if (pos == start || (pos == start + 1 && !isdigit((unsigned char)s[start])))
            throw std::invalid_argument("theta: expected integer at '" + s.substr(start) + "'");
        return Int(s.substr(start, pos - start));
    }
};

} // namespace

Surd parse_theta(const std::string& str) {
    Parser p(str);
    Surd v;
    if (p.eat_kw("sqrt")) {
        if (!p.eat('(')) throw std::invalid_argument("theta: expected '(' after sqrt");
        Int D = p.integer();
        if (!p.eat(')')) throw std::invalid_argument("theta: expected ')'");
        v = Surd::sqrt_of(D);
    } else if (p.eat('(')) {
        // (a+b*sqrt(d))/c
        Int a = p.integer();
        p.skip_ws();
        Int b;
        bool neg = false;
        if (p.eat('+')) {
        } else if (p.eat('-')) {
            neg = true;
        } else {
            throw std::invalid_argument("theta: expected '+' or '-'");
        }
        b = p.integer();
        if (neg) b = -b;
        if (!p.eat('*') || !p.eat_kw("sqrt") || !p.eat('('))
            throw std::invalid_argument("theta: expected '*sqrt('");
        Int d = p.integer();
        if (!p.eat(')')) throw std::invalid_argument("theta: expected ')'");
        if (!p.eat(')')) throw std::invalid_argument("theta: expected ')'");
        Int c(1);
        if (p.eat('/')) c = p.integer();
        v = Surd(a, b, c, d);
    } else {
        Int a = p.integer();
        Int c(1);
        if (p.eat('/')) c = p.integer();
        v = Surd(a, Int(0), c, Int(0));
    }
    p.skip_ws();
    if (p.pos != str.size()) throw std::invalid_argument("theta: trailing input '" + str.substr(p.pos) + "'");
    // reduce mod 1 into [0,1)
    return v - Surd(v.floor());
}

CFExpansion continued_fraction(const Surd& theta) {
    if (theta.is_rational()) throw std::domain_error("continued_fraction: rational input");
    // write theta = (P + sqrt(D))/Q with Q | (D - P^2)
    Int P, Q, D;
    if (theta.b() > 0) {
        P = theta.a();
        Q = theta.c();
        D = theta.b() * theta.b() * theta.d();
    } else {
        P = -theta.a();
        Q = -theta.c();
        D = theta.b() * theta.b() * theta.d();
    }
    if ((D - P * P) % Q != 0) {
        Int aq = abs(Q);
        P *= aq;
        D *= aq * aq;
        Q *= aq;
    }
    CFExpansion cf;
    cf.a_max = 0;
    std::map<std::pair<Int, Int>, size_t> seen;
    std::vector<Int> quots;
    // drop a_0
    {
        Surd x = (Surd(P) + Surd::sqrt_of(D)) / Surd(Q);
        Int a0 = x.floor();
        P = a0 * Q - P;
        Q = (D - P * P) / Q;
    }
    for (size_t it = 0; it < 100000; ++it) {
        auto key = std::make_pair(P, Q);
        auto found = seen.find(key);
        if (found != seen.end()) {
            cf.preperiod.assign(quots.begin(), quots.begin() + found->second);
            cf.period.assign(quots.begin() + found->second, quots.end());
            for (const Int& a : quots) if (a > cf.a_max) cf.a_max = a;
            return cf;
        }
        seen.emplace(key, quots.size());
        Surd x = (Surd(P) + Surd::sqrt_of(D)) / Surd(Q);
        Int a = x.floor();
        quots.push_back(a);
        P = a * Q - P;
        Q = (D - P * P) / Q;
    }
    throw std::runtime_error("continued_fraction: no cycle found (not a quadratic irrational?)");
}

} // namespace badweave
