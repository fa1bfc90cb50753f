#include "cyq/local_type.hpp"

#include <algorithm>
#include <stdexcept>

namespace cyq {

LocalType::LocalType(unsigned p, std::array<unsigned, 3> exps) : p_(p), exps_(exps) {
    if (!is_prime(p)) throw std::invalid_argument("LocalType: p must be prime");
    for (unsigned a : exps_)
        if (a >= p) throw std::invalid_argument("LocalType: exponent out of range [0, p-1]");
    std::sort(exps_.begin(), exps_.end(), std::greater<>());
}

unsigned LocalType::s() const { return (exps_[0] + exps_[1] + exps_[2]) % p_; }

bool LocalType::isolated() const { return exps_[2] > 0; }

bool LocalType::quasi_reflection() const { return exps_[0] > 0 && exps_[1] == 0; }

bool LocalType::gorenstein() const { return s() == 0; }

Rational LocalType::age(unsigned unit) const {
    if (unit % p_ == 0) throw std::invalid_argument("LocalType::age: unit must be nonzero mod p");
    unsigned long total = 0;
    for (unsigned a : exps_) total += (static_cast<unsigned long>(unit) * a) % p_;
    return make_rational(static_cast<long>(total), static_cast<long>(p_));
}

bool LocalType::terminal() const {
    if (!isolated()) throw std::invalid_argument("LocalType::terminal: type is not isolated");
    unsigned ss = s();
    return ss == exps_[0] || ss == exps_[1] || ss == exps_[2];
}

bool LocalType::terminal_by_age() const {
    if (!isolated()) throw std::invalid_argument("LocalType::terminal_by_age: type is not isolated");
    for (unsigned u = 1; u < p_; ++u)
        if (age(u) <= 1) return false;
    return true;
}

bool LocalType::canonical() const {
    if (!isolated()) throw std::invalid_argument("LocalType::canonical: type is not isolated");
    for (unsigned u = 1; u < p_; ++u)
        if (age(u) < 1) return false;
    return true;
}

SingularityClassification classify(const LocalType& t) {
    SingularityClassification c;
    c.isolated = t.isolated();
    c.quasi_reflection = t.quasi_reflection();
    c.gorenstein = t.gorenstein();
    c.s = t.s();
    for (unsigned u = 1; u < t.prime(); ++u) c.ages.emplace(u, t.age(u));
    if (c.isolated) {
        c.terminal = t.terminal();
        c.canonical = t.canonical();
        // The two terminal criteria must agree on every isolated type.
        if (*c.terminal != t.terminal_by_age())
            throw std::logic_error("classify: terminal criteria disagree");
    }
    return c;
}

std::vector<LocalType> enumerate_isolated_types(unsigned p) {
    if (!is_prime(p)) throw std::invalid_argument("enumerate_isolated_types: p must be prime");
    std::vector<LocalType> out;
    for (unsigned a = 1; a < p; ++a)
        for (unsigned b = 1; b <= a; ++b)
            for (unsigned c = 1; c <= b; ++c) out.emplace_back(p, std::array<unsigned, 3>{a, b, c});
    std::sort(out.begin(), out.end());
    return out;
}

Order5Partition partition_order5() {
    Order5Partition part;
    for (const LocalType& t : enumerate_isolated_types(5)) {
        if (t.s() == 0)
            part.symplectic.push_back(t);
        else if (t.terminal())
            part.terminal.push_back(t);
        else
            part.non_terminal.push_back(t);
    }
    return part;
}

}  // namespace cyq
