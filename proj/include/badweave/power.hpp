#pragma once

#include "badweave/surd.hpp"

#include <vector>

namespace badweave {

// Exact positive real of the form
//     coeff * prod_i base_i^{e_i} * prod_j surd_j^{f_j}
// with coeff, base_i positive rationals, e_i, f_j rationals, surd_j positive
// quadratic surds (all in one field).  Comparison is decided by raising the
// quotient to the lcm of the exponent denominators, which lands in Q(sqrt d).
class ExactPos {
public:
    ExactPos() : coeff_(1) {}
    explicit ExactPos(const Rat& r);
    explicit ExactPos(long n) : ExactPos(Rat(n)) {}
    static ExactPos pow_of(const Rat& base, const Rat& exp); // base > 0
    static ExactPos of_surd(const Surd& s, const Rat& exp = Rat(1)); // s > 0

    ExactPos operator*(const ExactPos& o) const;
    ExactPos operator/(const ExactPos& o) const { return *this * o.inverse(); }
    ExactPos inverse() const;
    ExactPos pow(const Rat& e) const;

    int cmp(const ExactPos& o) const;
    int cmp(const Rat& r) const { return cmp(ExactPos(r)); }
    bool operator<(const ExactPos& o) const { return cmp(o) < 0; }
    bool operator<=(const ExactPos& o) const { return cmp(o) <= 0; }
    bool operator>(const ExactPos& o) const { return cmp(o) > 0; }
    bool operator>=(const ExactPos& o) const { return cmp(o) >= 0; }
    bool operator==(const ExactPos& o) const { return cmp(o) == 0; }

    // exact floor (value > 0)
    Int floor() const;
    double to_double() const;
    // exact rational value if all exponents reduce to integers
    std::optional<Rat> as_rational() const;
    std::string str() const; // approximate decimal, display only

private:
    Rat coeff_; // > 0
    std::vector<std::pair<Rat, Rat>> pows_;  // base^exp
    std::vector<std::pair<Surd, Rat>> spows_; // surd^exp, surd irrational > 0
    void push_pow(const Rat& base, const Rat& exp);
    void push_spow(const Surd& s, const Rat& exp);
};

// compare base1^{e1} vs base2^{e2} (bases positive rationals): -1, 0, +1
int cmp_power(const Rat& base1, const Rat& e1, const Rat& base2, const Rat& e2);

} // namespace badweave
