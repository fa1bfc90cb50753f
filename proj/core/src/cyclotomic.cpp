#include "cyq/cyclotomic.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace cyq {

unsigned long totient(unsigned long n) {
    unsigned long result = n, m = n;
    for (unsigned long p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            result -= result / p;
            while (m % p == 0) m /= p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

bool is_prime(unsigned long n) {
    if (n < 2) return false;
    for (unsigned long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

long mod_inverse(long k, unsigned long n) {
    long nn = static_cast<long>(n);
    long a = ((k % nn) + nn) % nn;
    if (std::gcd(a, nn) != 1) throw std::invalid_argument("mod_inverse: not a unit");
    long t = 0, new_t = 1, r = nn, new_r = a;
    while (new_r != 0) {
        long q = r / new_r;
        std::tie(t, new_t) = std::make_pair(new_t, t - q * new_t);
        std::tie(r, new_r) = std::make_pair(new_r, r - q * new_r);
    }
    return ((t % nn) + nn) % nn;
}

namespace {

using ZPoly = std::vector<Integer>;   // low degree first
using QPoly = std::vector<Rational>;  // low degree first

void ztrim(ZPoly& f) {
    while (f.size() > 1 && f.back() == 0) f.pop_back();
}

// Exact division of integer polynomials, g monic. Remainder must vanish.
ZPoly zdiv_exact(ZPoly f, const ZPoly& g) {
    ztrim(f);
    const size_t dg = g.size() - 1;
    if (f.size() - 1 < dg) throw std::logic_error("zdiv_exact: degree underflow");
    ZPoly q(f.size() - dg, Integer(0));
    for (size_t i = f.size() - 1; i + 1 > dg; --i) {
        Integer c = f[i];
        if (c != 0) {
            size_t shift = i - dg;
            q[shift] = c;
            for (size_t j = 0; j <= dg; ++j) f[shift + j] -= c * g[j];
        }
        if (i == 0) break;
    }
    for (const auto& c : f)
        if (c != 0) throw std::logic_error("zdiv_exact: nonzero remainder");
    ztrim(q);
    return q;
}

const CyclotomicPolynomial& cyclotomic_polynomial_locked(unsigned long n,
                                                         std::map<unsigned long, CyclotomicPolynomial>& cache) {
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    ZPoly num(n + 1, Integer(0));  // x^n - 1
    num[0] = -1;
    num[n] = 1;
    for (unsigned long d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        const auto& phi_d = cyclotomic_polynomial_locked(d, cache);
        num = zdiv_exact(std::move(num), phi_d.coeffs);
    }
    CyclotomicPolynomial phi;
    phi.order = n;
    phi.coeffs = std::move(num);
    return cache.emplace(n, std::move(phi)).first->second;
}

int qdeg(const QPoly& f) {
    for (size_t i = f.size(); i-- > 0;)
        if (f[i] != 0) return static_cast<int>(i);
    return -1;
}

// Remainder of f mod the monic integer polynomial g, over Q.
QPoly qrem(QPoly f, const ZPoly& g) {
    const int dg = static_cast<int>(g.size()) - 1;
    for (int i = qdeg(f); i >= dg; i = qdeg(f)) {
        Rational c = f[i];
        int shift = i - dg;
        for (int j = 0; j <= dg; ++j) {
            Rational t(g[j]);
            f[shift + j] -= c * t;
        }
    }
    f.resize(std::max(dg, 1), Rational(0));
    return f;
}

QPoly qmul(const QPoly& a, const QPoly& b) {
    QPoly out(a.size() + b.size() - 1, Rational(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    }
    return out;
}

QPoly qsub(QPoly a, const QPoly& b) {
    if (a.size() < b.size()) a.resize(b.size(), Rational(0));
    for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    return a;
}

std::pair<QPoly, QPoly> qdivmod(QPoly f, const QPoly& g) {
    const int dg = qdeg(g);
    if (dg < 0) throw std::logic_error("qdivmod: division by zero polynomial");
    QPoly q(std::max<size_t>(f.size(), 1), Rational(0));
    for (int i = qdeg(f); i >= dg; i = qdeg(f)) {
        Rational c = f[i] / g[dg];
        int shift = i - dg;
        q[shift] += c;
        for (int j = 0; j <= dg; ++j) f[shift + j] -= c * g[j];
    }
    return {q, f};
}

}  // namespace

const CyclotomicPolynomial& cyclotomic_polynomial(unsigned long n) {
    if (n < 1) throw std::invalid_argument("cyclotomic_polynomial: order must be >= 1");
    static std::map<unsigned long, CyclotomicPolynomial> cache;
    static std::mutex mutex;
    std::scoped_lock lock(mutex);
    return cyclotomic_polynomial_locked(n, cache);
}

Cyclotomic Cyclotomic::zero(unsigned long n) {
    if (n < 1) throw std::invalid_argument("Cyclotomic: order must be >= 1");
    return Cyclotomic(n, std::vector<Rational>(totient(n), Rational(0)));
}

Cyclotomic Cyclotomic::one(unsigned long n) { return from_rational(n, Rational(1)); }

Cyclotomic Cyclotomic::from_rational(unsigned long n, const Rational& value) {
    Cyclotomic z = zero(n);
    z.coeffs_[0] = value;
    return z;
}

Cyclotomic Cyclotomic::from_coeffs(unsigned long n, std::vector<Rational> poly) {
    if (n < 1) throw std::invalid_argument("Cyclotomic: order must be >= 1");
    const auto& phi = cyclotomic_polynomial(n);
    if (poly.empty()) poly.assign(1, Rational(0));
    QPoly reduced = qrem(std::move(poly), phi.coeffs);
    reduced.resize(totient(n), Rational(0));
    return Cyclotomic(n, std::move(reduced));
}

Cyclotomic Cyclotomic::root_of_unity(unsigned long n, long k) {
    if (n < 1) throw std::invalid_argument("Cyclotomic: order must be >= 1");
    long kk = ((k % static_cast<long>(n)) + static_cast<long>(n)) % static_cast<long>(n);
    std::vector<Rational> poly(static_cast<size_t>(kk) + 1, Rational(0));
    poly[static_cast<size_t>(kk)] = Rational(1);
    return from_coeffs(n, std::move(poly));
}

bool Cyclotomic::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c == 0; });
}

std::optional<Rational> Cyclotomic::as_rational() const {
    for (size_t i = 1; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return std::nullopt;
    return coeffs_[0];
}

Cyclotomic Cyclotomic::operator+(const Cyclotomic& rhs) const {
    if (order_ != rhs.order_) throw std::invalid_argument("Cyclotomic: order mismatch");
    std::vector<Rational> out = coeffs_;
    for (size_t i = 0; i < out.size(); ++i) out[i] += rhs.coeffs_[i];
    return Cyclotomic(order_, std::move(out));
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic& rhs) const {
    if (order_ != rhs.order_) throw std::invalid_argument("Cyclotomic: order mismatch");
    std::vector<Rational> out = coeffs_;
    for (size_t i = 0; i < out.size(); ++i) out[i] -= rhs.coeffs_[i];
    return Cyclotomic(order_, std::move(out));
}

Cyclotomic Cyclotomic::operator-() const {
    std::vector<Rational> out = coeffs_;
    for (auto& c : out) c = -c;
    return Cyclotomic(order_, std::move(out));
}

Cyclotomic Cyclotomic::operator*(const Cyclotomic& rhs) const {
    if (order_ != rhs.order_) throw std::invalid_argument("Cyclotomic: order mismatch");
    return from_coeffs(order_, qmul(coeffs_, rhs.coeffs_));
}

Cyclotomic Cyclotomic::inverse() const {
    if (is_zero()) throw std::domain_error("Cyclotomic: division by zero");
    const auto& phi = cyclotomic_polynomial(order_);
    // Extended Euclid over Q[x]: u*a + v*Phi = gcd = nonzero constant, since
    // Phi_n is irreducible and deg a < deg Phi_n. Then a^{-1} = u / gcd.
    QPoly r0(phi.coeffs.size());
    for (size_t i = 0; i < phi.coeffs.size(); ++i) r0[i] = Rational(phi.coeffs[i]);
    QPoly r1 = coeffs_;
    QPoly s0{Rational(0)}, s1{Rational(1)};
    while (qdeg(r1) > 0) {
        auto [q, r] = qdivmod(r0, r1);
        QPoly s = qsub(s0, qmul(q, s1));
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s);
    }
    if (qdeg(r1) < 0) throw std::logic_error("Cyclotomic::inverse: zero gcd");
    Rational c = r1[0];
    for (auto& x : s1) x /= c;
    return from_coeffs(order_, std::move(s1));
}

Cyclotomic Cyclotomic::galois(long k) const {
    long n = static_cast<long>(order_);
    long kk = ((k % n) + n) % n;
    if (std::gcd(kk, n) != 1) throw std::invalid_argument("Cyclotomic::galois: k not coprime to order");
    std::vector<Rational> poly(order_, Rational(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        size_t e = static_cast<size_t>((static_cast<long>(i) * kk) % n);
        poly[e] += coeffs_[i];
    }
    return from_coeffs(order_, std::move(poly));
}

Cyclotomic Cyclotomic::lift(unsigned long m) const {
    if (m < 1) throw std::invalid_argument("Cyclotomic::lift: factor must be >= 1");
    if (m == 1) return *this;
    unsigned long nm = order_ * m;
    std::vector<Rational> poly(coeffs_.size() * m, Rational(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) poly[i * m] = coeffs_[i];
    return from_coeffs(nm, std::move(poly));
}

std::complex<double> Cyclotomic::embed() const {
    std::complex<double> acc(0.0, 0.0);
    const double tau = 2.0 * M_PI / static_cast<double>(order_);
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        double c = coeffs_[i].get_d();
        acc += c * std::complex<double>(std::cos(tau * static_cast<double>(i)),
                                        std::sin(tau * static_cast<double>(i)));
    }
    return acc;
}

bool Cyclotomic::operator==(const Cyclotomic& rhs) const {
    if (order_ != rhs.order_) throw std::invalid_argument("Cyclotomic: comparing different orders");
    return coeffs_ == rhs.coeffs_;
}

std::string Cyclotomic::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        Rational c = coeffs_[i];
        if (first) {
            if (c < 0 && i > 0) {
                os << "-";
                c = -c;
            }
        } else {
            os << (c < 0 ? " - " : " + ");
            if (c < 0) c = -c;
        }
        if (i == 0) {
            os << cyq::to_string(c);
        } else {
            if (c != 1) os << cyq::to_string(c) << "*";
            os << "z";
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    if (first) return "0";
    return os.str();
}

}  // namespace cyq
