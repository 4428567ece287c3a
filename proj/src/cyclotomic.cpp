#include "pbq/cyclotomic.hpp"

#include <functional>
#include <map>
#include <mutex>
#include <numeric>

namespace pbq {

namespace {

// Dense rational polynomial helpers, ascending degree, no trailing zeros.
using Poly = std::vector<Rational>;

void trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

long degree(const Poly& p) { return static_cast<long>(p.size()) - 1; }

// In-place remainder of p modulo the monic integer polynomial mod.
void rem_monic(Poly& p, const std::vector<Integer>& mod) {
    const long d = static_cast<long>(mod.size()) - 1;
    for (long i = degree(p); i >= d; --i) {
        Rational c = p[i];
        if (c == 0) continue;
        p[i] = 0;
        for (long j = 0; j < d; ++j) p[i - d + j] -= c * Rational(mod[j]);
    }
    trim(p);
}

// Exact division of integer polynomials, remainder known to vanish.
std::vector<Integer> div_exact(std::vector<Integer> num, const std::vector<Integer>& den) {
    std::vector<Integer> quot(num.size() - den.size() + 1, Integer(0));
    const long dd = static_cast<long>(den.size()) - 1;
    for (long i = static_cast<long>(num.size()) - 1; i >= dd; --i) {
        if (num[i] == 0) continue;
        Integer c = num[i] / den[dd];
        quot[i - dd] = c;
        for (long j = 0; j <= dd; ++j) num[i - dd + j] -= c * den[j];
    }
    return quot;
}

}  // namespace

long euler_phi(long n) {
    long result = n;
    long m = n;
    for (long p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            result -= result / p;
            while (m % p == 0) m /= p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

const std::vector<Integer>& cyclotomic_polynomial(long n) {
    static std::map<long, std::vector<Integer>> cache;
    static std::mutex mutex;
    std::scoped_lock lock(mutex);
    if (auto it = cache.find(n); it != cache.end()) return it->second;

    // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d, computed by exact division.
    std::function<const std::vector<Integer>&(long)> get = [&](long v) -> const std::vector<Integer>& {
        if (auto it = cache.find(v); it != cache.end()) return it->second;
        std::vector<Integer> num(v + 1, Integer(0));
        num[0] = -1;
        num[v] = 1;
        for (long d = 1; d < v; ++d)
            if (v % d == 0) num = div_exact(std::move(num), get(d));
        return cache.emplace(v, std::move(num)).first->second;
    };
    return get(n);
}

CyclotomicNumber::CyclotomicNumber(long order) : order_(order) {
    if (order < 1) throw Error("cyclotomic order must be positive");
    coeffs_.assign(euler_phi(order), Rational(0));
}

CyclotomicNumber CyclotomicNumber::from_rational(const Rational& value, long order) {
    CyclotomicNumber x(order);
    if (!x.coeffs_.empty()) x.coeffs_[0] = value;
    x.reduce_();
    return x;
}

CyclotomicNumber CyclotomicNumber::from_long(long value, long order) {
    return from_rational(Rational(value), order);
}

CyclotomicNumber CyclotomicNumber::zeta(long order, long power) {
    return zeta(order, Integer(power));
}

CyclotomicNumber CyclotomicNumber::zeta(long order, const Integer& power) {
    CyclotomicNumber x(order);
    Integer e = power % order;
    if (e < 0) e += order;
    std::vector<Rational> raw(order, Rational(0));
    raw[e.get_ui()] = 1;
    x.coeffs_ = std::move(raw);
    x.reduce_();
    return x;
}

void CyclotomicNumber::reduce_() {
    Poly p = coeffs_;
    trim(p);
    // Fold exponents mod order (zeta^order = 1), then reduce mod Phi_order.
    if (degree(p) >= order_) {
        Poly folded(order_, Rational(0));
        for (long e = 0; e <= degree(p); ++e) folded[e % order_] += p[e];
        p = std::move(folded);
        trim(p);
    }
    rem_monic(p, cyclotomic_polynomial(order_));
    p.resize(euler_phi(order_), Rational(0));
    coeffs_ = std::move(p);
}

bool CyclotomicNumber::is_zero() const {
    for (const auto& c : coeffs_)
        if (c != 0) return false;
    return true;
}

bool CyclotomicNumber::is_rational() const {
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return false;
    return true;
}

Rational CyclotomicNumber::rational_value() const {
    if (!is_rational()) throw Error("cyclotomic value is not rational");
    return coeffs_.empty() ? Rational(0) : coeffs_[0];
}

bool CyclotomicNumber::is_real() const { return *this == conj(*this); }

CyclotomicNumber CyclotomicNumber::promoted(long new_order) const {
    if (new_order == order_) return *this;
    if (new_order % order_ != 0) throw Error("promotion target is not a multiple of the order");
    const long stride = new_order / order_;
    CyclotomicNumber out(new_order);
    std::vector<Rational> raw(new_order, Rational(0));
    for (std::size_t e = 0; e < coeffs_.size(); ++e) raw[e * stride] = coeffs_[e];
    out.coeffs_ = std::move(raw);
    out.reduce_();
    return out;
}

std::pair<CyclotomicNumber, CyclotomicNumber> CyclotomicNumber::aligned_(
    const CyclotomicNumber& a, const CyclotomicNumber& b) {
    if (a.order_ == b.order_) return {a, b};
    const long l = std::lcm(a.order_, b.order_);
    return {a.promoted(l), b.promoted(l)};
}

CyclotomicNumber operator+(const CyclotomicNumber& a, const CyclotomicNumber& b) {
    auto [x, y] = CyclotomicNumber::aligned_(a, b);
    for (std::size_t i = 0; i < x.coeffs_.size(); ++i) x.coeffs_[i] += y.coeffs_[i];
    return x;
}

CyclotomicNumber operator-(const CyclotomicNumber& a, const CyclotomicNumber& b) {
    auto [x, y] = CyclotomicNumber::aligned_(a, b);
    for (std::size_t i = 0; i < x.coeffs_.size(); ++i) x.coeffs_[i] -= y.coeffs_[i];
    return x;
}

CyclotomicNumber operator*(const CyclotomicNumber& a, const CyclotomicNumber& b) {
    auto [x, y] = CyclotomicNumber::aligned_(a, b);
    const long n = x.order_;
    std::vector<Rational> prod(n, Rational(0));
    for (std::size_t i = 0; i < x.coeffs_.size(); ++i) {
        if (x.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < y.coeffs_.size(); ++j) {
            if (y.coeffs_[j] == 0) continue;
            prod[(i + j) % n] += x.coeffs_[i] * y.coeffs_[j];
        }
    }
    CyclotomicNumber out(n);
    out.coeffs_ = std::move(prod);
    out.reduce_();
    return out;
}

CyclotomicNumber operator/(const CyclotomicNumber& a, const CyclotomicNumber& b) {
    return a * inverse(b);
}

CyclotomicNumber CyclotomicNumber::operator-() const {
    CyclotomicNumber out = *this;
    for (auto& c : out.coeffs_) c = -c;
    return out;
}

bool operator==(const CyclotomicNumber& a, const CyclotomicNumber& b) {
    auto [x, y] = CyclotomicNumber::aligned_(a, b);
    return x.coeffs_ == y.coeffs_;
}

CyclotomicNumber conj(const CyclotomicNumber& a) {
    // zeta |-> zeta^{N-1}: coefficient at e moves to (N - e) mod N.
    CyclotomicNumber out(a.order_);
    std::vector<Rational> raw(a.order_, Rational(0));
    for (std::size_t e = 0; e < a.coeffs_.size(); ++e)
        raw[e == 0 ? 0 : a.order_ - e] = a.coeffs_[e];
    out.coeffs_ = std::move(raw);
    out.reduce_();
    return out;
}

CyclotomicNumber inverse(const CyclotomicNumber& a) {
    if (a.is_zero()) throw DivisionByZeroError("inverse of zero cyclotomic value");
    if (a.is_rational()) return CyclotomicNumber::from_rational(1 / a.rational_value(), a.order_);

    // Extended Euclid in Q[x] against Phi_N, which is irreducible, so the gcd
    // with any nonzero reduced element is a nonzero constant g = s*a mod Phi.
    const auto& phi_int = cyclotomic_polynomial(a.order_);
    Poly r0(phi_int.begin(), phi_int.end());
    Poly r1 = a.coeffs_;
    trim(r1);
    Poly s0{Rational(0)}, s1{Rational(1)};
    while (degree(r1) > 0) {
        // r0 = q*r1 + r2
        Poly q(degree(r0) - degree(r1) + 1, Rational(0));
        Poly r2 = r0;
        for (long i = degree(r2); i >= degree(r1); --i) {
            if (r2[i] == 0) continue;
            Rational c = r2[i] / r1[degree(r1)];
            q[i - degree(r1)] = c;
            for (long j = 0; j <= degree(r1); ++j) r2[i - degree(r1) + j] -= c * r1[j];
        }
        trim(r2);
        // s2 = s0 - q*s1
        Poly qs(q.size() + s1.size() - 1, Rational(0));
        for (std::size_t i = 0; i < q.size(); ++i) {
            if (q[i] == 0) continue;
            for (std::size_t j = 0; j < s1.size(); ++j) qs[i + j] += q[i] * s1[j];
        }
        Poly s2 = s0;
        s2.resize(std::max(s2.size(), qs.size()), Rational(0));
        for (std::size_t i = 0; i < qs.size(); ++i) s2[i] -= qs[i];
        trim(s2);
        r0 = std::move(r1);
        r1 = std::move(r2);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (r1.empty()) throw Error("inverse: unexpected zero remainder");
    CyclotomicNumber out(a.order_);
    Poly inv = std::move(s1);
    for (auto& c : inv) c /= r1[0];
    inv.resize(a.order_, Rational(0));
    out.coeffs_ = std::move(inv);
    out.reduce_();
    return out;
}

ApproxComplex CyclotomicNumber::to_complex(unsigned digits) const {
    if (digits < kMinDigits) throw Error("precision below the 16-digit minimum");
    ApproxComplex acc = approx_zero(digits);
    const Real two_pi = pi_at(digits) * 2;
    for (std::size_t e = 0; e < coeffs_.size(); ++e) {
        if (coeffs_[e] == 0) continue;
        Real angle = two_pi * real_from_long(static_cast<long>(e), digits) /
                     real_from_long(order_, digits);
        Real c = real_from_rational(coeffs_[e], digits);
        acc.re += c * cos(angle);
        acc.im += c * sin(angle);
    }
    return acc;
}

}  // namespace pbq
