#include "pbq/algebra.hpp"

#include <deque>
#include <sstream>

#include "pbq/errors.hpp"

namespace pbq {

QContext::QContext(long m_, long k_) : m(m_), k(k_) {
    if (k < 1) throw UndefinedParameterError("k must be a positive integer");
    require_q_not_pm1(m, k);
}

Scalar QContext::q_scalar(long e) const { return Scalar(q_power(m, k, e)); }
Scalar QContext::q_scalar(const Rational& e) const { return Scalar(q_power(m, k, e)); }
Scalar QContext::q_minus_qinv() const { return q_scalar(1) - q_scalar(-1); }

AlgebraElement AlgebraElement::one(const QContext& ctx) {
    return from_scalar(ctx, Scalar::exact_long(1));
}

AlgebraElement AlgebraElement::from_scalar(const QContext& ctx, const Scalar& c) {
    AlgebraElement e(ctx);
    e.add_term(MonomialKey{}, c);
    return e;
}

AlgebraElement AlgebraElement::generator(const QContext& ctx, Generator g) {
    MonomialKey key;
    switch (g) {
        case Generator::Aplus: key.i = 1; break;
        case Generator::Aminus: key.j = 1; break;
        case Generator::K: key.s = 1; break;
        case Generator::Kinv: key.s = -1; break;
    }
    return monomial(ctx, key, Scalar::exact_long(1));
}

AlgebraElement AlgebraElement::monomial(const QContext& ctx, const MonomialKey& key,
                                        const Scalar& c) {
    if (key.i < 0 || key.j < 0) throw OutOfRangeError("negative a^{+-} exponent");
    AlgebraElement e(ctx);
    e.add_term(key, c);
    return e;
}

void AlgebraElement::add_term(const MonomialKey& key, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(key, c);
        return;
    }
    Scalar sum = it->second + c;
    if (sum.is_zero())
        terms_.erase(it);
    else
        it->second = sum;
}

bool AlgebraElement::is_scalar(Scalar* value) const {
    if (terms_.empty()) {
        if (value) *value = Scalar::exact_long(0);
        return true;
    }
    if (terms_.size() != 1) return false;
    const auto& [key, c] = *terms_.begin();
    if (key != MonomialKey{}) return false;
    if (value) *value = c;
    return true;
}

namespace {

void check_same_context(const AlgebraElement& a, const AlgebraElement& b) {
    if (!(a.context() == b.context()))
        throw MismatchError("algebra elements bound to different (m,k)");
}

std::vector<Generator> monomial_word(const MonomialKey& key) {
    std::vector<Generator> w;
    w.reserve(static_cast<std::size_t>(key.i + key.j + std::abs(key.s)));
    for (long t = 0; t < key.i; ++t) w.push_back(Generator::Aplus);
    for (long t = 0; t < key.j; ++t) w.push_back(Generator::Aminus);
    for (long t = 0; t < std::abs(key.s); ++t)
        w.push_back(key.s > 0 ? Generator::K : Generator::Kinv);
    return w;
}

bool is_cartan(Generator g) { return g == Generator::K || g == Generator::Kinv; }
bool is_odd_gen(Generator g) { return g == Generator::Aplus || g == Generator::Aminus; }

}  // namespace

AlgebraElement normal_order(const QContext& ctx, const std::vector<RawTerm>& raw) {
    AlgebraElement out(ctx);
    const Scalar q2 = ctx.q_scalar(2);
    const Scalar qm2 = ctx.q_scalar(-2);
    const Scalar denom_inv = Scalar::exact_long(1) / ctx.q_minus_qinv();

    std::deque<RawTerm> work(raw.begin(), raw.end());
    while (!work.empty()) {
        RawTerm t = std::move(work.front());
        work.pop_front();
        if (t.coeff.is_zero()) continue;

        // Find the leftmost pair violating the order a^+ < a^- < K-block.
        std::size_t pos = 0;
        bool found = false;
        for (; pos + 1 < t.word.size(); ++pos) {
            Generator l = t.word[pos], r = t.word[pos + 1];
            if (is_cartan(l) && is_odd_gen(r)) { found = true; break; }
            if (l == Generator::Aminus && r == Generator::Aplus) { found = true; break; }
            if ((l == Generator::K && r == Generator::Kinv) ||
                (l == Generator::Kinv && r == Generator::K)) { found = true; break; }
        }

        if (!found) {
            MonomialKey key;
            for (Generator g : t.word) {
                switch (g) {
                    case Generator::Aplus: ++key.i; break;
                    case Generator::Aminus: ++key.j; break;
                    case Generator::K: ++key.s; break;
                    case Generator::Kinv: --key.s; break;
                }
            }
            out.add_term(key, t.coeff);
            continue;
        }

        Generator l = t.word[pos], r = t.word[pos + 1];
        if (is_cartan(l) && is_odd_gen(r)) {
            // K a^{+-} = q^{+-2} a^{+-} K and K^{-1} a^{+-} = q^{-+2} a^{+-} K^{-1}.
            bool plus_power = (l == Generator::K) == (r == Generator::Aplus);
            RawTerm swapped = t;
            swapped.coeff = t.coeff * (plus_power ? q2 : qm2);
            std::swap(swapped.word[pos], swapped.word[pos + 1]);
            work.push_front(std::move(swapped));
        } else if (l == Generator::Aminus) {
            // a^- a^+ = -a^+ a^- + (K - K^{-1})/(q - q^{-1}).
            RawTerm flipped = t;
            flipped.coeff = -t.coeff;
            std::swap(flipped.word[pos], flipped.word[pos + 1]);

            RawTerm kterm;
            kterm.coeff = t.coeff * denom_inv;
            kterm.word.assign(t.word.begin(), t.word.begin() + static_cast<long>(pos));
            kterm.word.push_back(Generator::K);
            kterm.word.insert(kterm.word.end(), t.word.begin() + static_cast<long>(pos) + 2,
                              t.word.end());

            RawTerm kinvterm = kterm;
            kinvterm.coeff = -kterm.coeff;
            kinvterm.word[pos] = Generator::Kinv;

            work.push_front(std::move(kinvterm));
            work.push_front(std::move(kterm));
            work.push_front(std::move(flipped));
        } else {
            // K K^{-1} = K^{-1} K = 1: drop the pair.
            RawTerm cancelled = t;
            cancelled.word.erase(cancelled.word.begin() + static_cast<long>(pos),
                                 cancelled.word.begin() + static_cast<long>(pos) + 2);
            work.push_front(std::move(cancelled));
        }
    }
    return out;
}

AlgebraElement operator+(const AlgebraElement& a, const AlgebraElement& b) {
    check_same_context(a, b);
    AlgebraElement out = a;
    for (const auto& [key, c] : b.terms()) out.add_term(key, c);
    return out;
}

AlgebraElement operator-(const AlgebraElement& a, const AlgebraElement& b) {
    check_same_context(a, b);
    AlgebraElement out = a;
    for (const auto& [key, c] : b.terms()) out.add_term(key, -c);
    return out;
}

AlgebraElement AlgebraElement::operator-() const {
    AlgebraElement out(ctx_);
    for (const auto& [key, c] : terms_) out.terms_.emplace(key, -c);
    return out;
}

AlgebraElement operator*(const Scalar& c, const AlgebraElement& a) {
    AlgebraElement out(a.context());
    for (const auto& [key, coeff] : a.terms()) out.add_term(key, c * coeff);
    return out;
}

AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) {
    check_same_context(a, b);
    std::vector<RawTerm> raw;
    raw.reserve(a.terms().size() * b.terms().size());
    for (const auto& [ka, ca] : a.terms()) {
        for (const auto& [kb, cb] : b.terms()) {
            RawTerm t;
            t.coeff = ca * cb;
            t.word = monomial_word(ka);
            auto wb = monomial_word(kb);
            t.word.insert(t.word.end(), wb.begin(), wb.end());
            raw.push_back(std::move(t));
        }
    }
    return normal_order(a.context(), raw);
}

bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
    if (!(a.context() == b.context())) return false;
    if (a.terms().size() != b.terms().size()) return false;
    for (auto ia = a.terms().begin(), ib = b.terms().begin(); ia != a.terms().end(); ++ia, ++ib) {
        if (ia->first != ib->first) return false;
        if (!ia->second.equals(ib->second)) return false;
    }
    return true;
}

AlgebraElement pow(const AlgebraElement& a, long e) {
    if (e < 0) {
        if (a.terms().size() != 1) throw OutOfRangeError("negative power of a non-invertible element");
        const auto& [key, coeff] = *a.terms().begin();
        if (key.i != 0 || key.j != 0)
            throw OutOfRangeError("negative power of a non-invertible element");
        Scalar cinv = Scalar::exact_long(1) / coeff;
        AlgebraElement out = AlgebraElement::monomial(a.context(), MonomialKey{0, 0, -key.s}, cinv);
        return pow(out, -e);
    }
    AlgebraElement result = AlgebraElement::one(a.context());
    AlgebraElement base = a;
    while (e > 0) {
        if (e & 1L) result = result * base;
        e >>= 1L;
        if (e > 0) base = base * base;
    }
    return result;
}

AlgebraElement omega(const AlgebraElement& e) {
    // omega((a^+)^i (a^-)^j K^s) = K^{-s} (a^+)^j (a^-)^i
    //                            = q^{2s(i-j)} (a^+)^j (a^-)^i K^{-s}.
    AlgebraElement out(e.context());
    for (const auto& [key, c] : e.terms()) {
        Scalar factor = e.context().q_scalar(2 * key.s * (key.i - key.j));
        out.add_term(MonomialKey{key.j, key.i, -key.s}, conj(c) * factor);
    }
    return out;
}

Grade grade(const AlgebraElement& e) {
    bool saw_even = false, saw_odd = false;
    for (const auto& [key, c] : e.terms()) {
        ((key.i + key.j) % 2 == 0 ? saw_even : saw_odd) = true;
    }
    if (saw_even && saw_odd) return Grade::mixed;
    if (saw_odd) return Grade::odd;
    return Grade::even;
}

AlgebraElement casimir_element(long m, long k) {
    QContext ctx(m, k);
    require_q_not_degenerate(m, k);  // needs q^2 - q^{-2} != 0
    const Scalar q2 = ctx.q_scalar(2), qm2 = ctx.q_scalar(-2);
    const Scalar spread = q2 - qm2;                     // q^2 - q^{-2}
    const Scalar narrow = ctx.q_minus_qinv();           // q - q^{-1}

    auto mono = [&](long i, long j, long s, const Scalar& c) {
        return AlgebraElement::monomial(ctx, MonomialKey{i, j, s}, c);
    };
    AlgebraElement k_part = mono(0, 0, 2, q2) + mono(0, 0, -2, qm2);
    AlgebraElement middle = (mono(0, 0, 1, q2) + mono(0, 0, -1, qm2)) *
                            mono(0, 1, 0, spread * narrow) *
                            AlgebraElement::generator(ctx, Generator::Aplus);
    AlgebraElement tail = mono(0, 2, 0, -(spread * spread)) *
                          pow(AlgebraElement::generator(ctx, Generator::Aplus), 2);

    Scalar half = Scalar::exact_rational(make_rational(1, 2));
    return half * (k_part + middle + tail) + AlgebraElement::from_scalar(ctx, Scalar::exact_long(2));
}

namespace {

// Renders one exact coefficient as a parseable scalar expression. The sign of
// the leading printed symbol is returned separately so callers can fold it
// into the joining operator.
struct PrintedCoeff {
    bool negative = false;
    std::string text;       // absolute-value form
    bool needs_space = true;  // false when text is empty (coefficient +-1)
};

std::string rational_abs_string(const Rational& r) {
    Rational a = r < 0 ? Rational(-r) : r;
    return to_string(a);
}

PrintedCoeff print_exact_coeff(const CyclotomicNumber& c, bool unit_allowed) {
    PrintedCoeff out;
    if (c.is_rational()) {
        Rational r = c.rational_value();
        out.negative = r < 0;
        if (unit_allowed && (r == 1 || r == -1)) {
            out.text.clear();
            out.needs_space = false;
        } else {
            out.text = rational_abs_string(r);
        }
        return out;
    }
    const auto& coeffs = c.coeffs();
    std::vector<std::size_t> live;
    for (std::size_t e = 0; e < coeffs.size(); ++e)
        if (coeffs[e] != 0) live.push_back(e);
    if (live.size() == 1) {
        std::size_t e = live[0];
        Rational r = coeffs[e];
        out.negative = r < 0;
        std::ostringstream os;
        if (!(r == 1 || r == -1)) os << rational_abs_string(r) << " ";
        os << "zeta(" << c.order() << ")^" << e;
        out.text = os.str();
        return out;
    }
    std::ostringstream os;
    os << "(";
    bool first = true;
    for (std::size_t e : live) {
        Rational r = coeffs[e];
        bool neg = r < 0;
        if (first) {
            if (neg) os << "-";
            first = false;
        } else {
            os << (neg ? " - " : " + ");
        }
        Rational a = neg ? Rational(-r) : r;
        if (e == 0) {
            os << to_string(a);
        } else {
            if (a != 1) os << to_string(a) << " ";
            os << "zeta(" << c.order() << ")^" << e;
        }
    }
    os << ")";
    out.text = os.str();
    return out;
}

std::string monomial_string(const MonomialKey& key) {
    std::ostringstream os;
    bool first = true;
    auto emit = [&](const std::string& piece) {
        if (!first) os << " ";
        os << piece;
        first = false;
    };
    if (key.i == 1) emit("a+");
    else if (key.i > 1) emit("(a+)^" + std::to_string(key.i));
    if (key.j == 1) emit("a-");
    else if (key.j > 1) emit("(a-)^" + std::to_string(key.j));
    if (key.s == 1) emit("K");
    else if (key.s != 0) emit("K^" + std::to_string(key.s));
    return os.str();
}

}  // namespace

std::string pretty_print(const AlgebraElement& e) {
    if (e.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [key, c] : e.terms()) {
        std::string mono = monomial_string(key);
        PrintedCoeff pc;
        if (c.is_exact()) {
            pc = print_exact_coeff(c.exact(), /*unit_allowed=*/!mono.empty());
        } else {
            // Approximate coefficients render as decimals; not re-parseable.
            const auto& z = c.approx();
            pc.text = "(" + decimal_string(z.re, z.digits) + " + " +
                      decimal_string(z.im, z.digits) + "i)";
        }
        if (first) {
            if (pc.negative) os << "-";
            first = false;
        } else {
            os << (pc.negative ? " - " : " + ");
        }
        if (!pc.text.empty()) {
            os << pc.text;
            if (!mono.empty()) os << " ";
        }
        os << mono;
    }
    return os.str();
}

}  // namespace pbq
