#include "badweave/power.hpp"

#include <cmath>
#include <sstream>

namespace badweave {

ExactPos::ExactPos(const Rat& r) : coeff_(r) {
    if (r <= 0) throw std::domain_error("ExactPos: nonpositive rational");
}

ExactPos ExactPos::pow_of(const Rat& base, const Rat& exp) {
    if (base <= 0) throw std::domain_error("ExactPos: nonpositive base");
    ExactPos e;
    e.push_pow(base, exp);
    return e;
}

ExactPos ExactPos::of_surd(const Surd& s, const Rat& exp) {
    if (s.sgn() <= 0) throw std::domain_error("ExactPos: nonpositive surd");
    ExactPos e;
    if (s.is_rational())
        e.push_pow(s.to_rat(), exp);
    else
        e.push_spow(s, exp);
    return e;
}

void ExactPos::push_pow(const Rat& base, const Rat& exp) {
    if (exp == 0 || base == 1) return;
    for (auto& [b, e] : pows_)
        if (b == base) {
            e += exp;
            return;
        }
    pows_.emplace_back(base, exp);
}

void ExactPos::push_spow(const Surd& s, const Rat& exp) {
    if (exp == 0) return;
    for (auto& [t, e] : spows_)
        if (t == s) {
            e += exp;
            return;
        }
    spows_.emplace_back(s, exp);
}

ExactPos ExactPos::operator*(const ExactPos& o) const {
    ExactPos r = *this;
    r.coeff_ *= o.coeff_;
    for (const auto& [b, e] : o.pows_) r.push_pow(b, e);
    for (const auto& [s, e] : o.spows_) r.push_spow(s, e);
    return r;
}

ExactPos ExactPos::inverse() const {
    ExactPos r;
    r.coeff_ = 1 / coeff_;
    for (const auto& [b, e] : pows_) r.pows_.emplace_back(b, -e);
    for (const auto& [s, e] : spows_) r.spows_.emplace_back(s, -e);
    return r;
}

ExactPos ExactPos::pow(const Rat& e) const {
    ExactPos r;
    if (e == 0) return r;
    if (coeff_ != 1) r.push_pow(coeff_, e);
    for (const auto& [b, x] : pows_) r.push_pow(b, x * e);
    for (const auto& [s, x] : spows_) r.push_spow(s, x * e);
    return r;
}

int ExactPos::cmp(const ExactPos& o) const {
    ExactPos z = *this / o;
    // N = lcm of exponent denominators
    Int N = 1;
    for (const auto& [b, e] : z.pows_) N = lcm(N, Int(e.get_den()));
    for (const auto& [s, e] : z.spows_) N = lcm(N, Int(e.get_den()));
    // z^N = rational * surd-part, element of one quadratic field
    Rat v = qpow(z.coeff_, N);
    Surd sv(Int(1));
    for (const auto& [b, e] : z.pows_) v *= qpow(b, Int(e.get_num()) * (N / Int(e.get_den())));
    for (const auto& [s, e] : z.spows_) {
        Int ie = Int(e.get_num()) * (N / Int(e.get_den()));
        if (!ie.fits_slong_p()) throw std::overflow_error("ExactPos: exponent too large");
        sv = sv * s.pow(ie.get_si());
    }
    Surd total = Surd(v) * sv;
    return total.cmp(Surd(Int(1)));
}

Int ExactPos::floor() const {
    double est = to_double();
    Int n;
    if (std::isfinite(est) && est > 0)
        mpz_set_d(n.get_mpz_t(), std::floor(est));
    else
        n = 0;
    if (n < 0) n = 0;
    // exact fixup; exponential fallback keeps this correct if the double
    // estimate is far off
    if (cmp(Rat(n + 1)) >= 0) {
        Int step = 1;
        while (cmp(Rat(n + step)) >= 0) { n += step; step *= 2; }
        Int lo = n, hi = n + step; // value in [lo, hi)
        while (hi - lo > 1) {
            Int mid = (lo + hi) / 2;
            if (cmp(Rat(mid)) >= 0) lo = mid; else hi = mid;
        }
        n = lo;
    } else {
        while (n > 0 && cmp(Rat(n)) < 0) --n;
    }
    return n;
}

double ExactPos::to_double() const {
    double v = coeff_.get_d();
    for (const auto& [b, e] : pows_) v *= std::pow(b.get_d(), e.get_d());
    for (const auto& [s, e] : spows_) v *= std::pow(s.to_double(), e.get_d());
    return v;
}

std::optional<Rat> ExactPos::as_rational() const {
    Rat v = coeff_;
    for (const auto& [b, e] : pows_) {
        if (e.get_den() != 1) {
            // might still be integral after combining; fall back to cmp-based check
            return std::nullopt;
        }
        v *= qpow(b, Int(e.get_num()));
    }
    if (!spows_.empty()) return std::nullopt;
    return v;
}

std::string ExactPos::str() const {
    std::ostringstream os;
    os << "~" << to_double();
    return os.str();
}

int cmp_power(const Rat& base1, const Rat& e1, const Rat& base2, const Rat& e2) {
    return ExactPos::pow_of(base1, e1).cmp(ExactPos::pow_of(base2, e2));
}

} // namespace badweave
