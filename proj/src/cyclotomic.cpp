#include "qseries/cyclotomic.hpp"

#include <mpfr.h>

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

namespace qseries {

namespace {

using Poly = std::vector<Rational>; // low-to-high, no trailing zeros enforced by trim()

void trim(Poly& p) {
    while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

Poly poly_mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly c(a.size() + b.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (sgn(a[i]) == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    }
    trim(c);
    return c;
}

// exact quotient; remainder must vanish for the cyclotomic recursion
Poly poly_divmod(Poly num, const Poly& den, Poly* rem_out = nullptr) {
    Poly quot;
    if (num.size() >= den.size()) {
        quot.assign(num.size() - den.size() + 1, Rational(0));
        for (std::size_t k = num.size(); k-- >= den.size();) {
            Rational f = num[k] / den.back();
            quot[k - den.size() + 1] = f;
            if (sgn(f) != 0)
                for (std::size_t j = 0; j < den.size(); ++j)
                    num[k - den.size() + 1 + j] -= f * den[j];
            if (k == 0) break;
        }
    }
    trim(num);
    trim(quot);
    if (rem_out) *rem_out = std::move(num);
    return quot;
}

struct FieldData {
    long m = 1;
    long degree = 1;
    Poly phi; // Phi_m
};

std::mutex g_cache_mutex;

const FieldData& field(long m) {
    static std::map<long, FieldData> cache;
    std::lock_guard<std::mutex> lock(g_cache_mutex);
    auto it = cache.find(m);
    if (it == cache.end()) {
        FieldData fd;
        fd.m = m;
        fd.phi = cyclotomic_polynomial(m);
        fd.degree = static_cast<long>(fd.phi.size()) - 1;
        it = cache.emplace(m, std::move(fd)).first;
    }
    return it->second;
}

// reduce a polynomial in zeta modulo Phi_m, returning exactly degree coords
std::vector<Rational> reduce_mod_phi(Poly p, const FieldData& fd) {
    const auto d = static_cast<std::size_t>(fd.degree);
    for (std::size_t k = p.size(); k-- > d;) {
        Rational f = p[k]; // Phi monic
        if (sgn(f) != 0) {
            p[k] = 0;
            for (std::size_t j = 0; j < d; ++j) p[k - d + j] -= f * fd.phi[j];
        }
    }
    p.resize(d, Rational(0));
    return p;
}

} // namespace

long euler_phi(long m) {
    long result = m;
    for (long p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            while (m % p == 0) m /= p;
            result -= result / p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

std::vector<Rational> cyclotomic_polynomial(long m) {
    if (m < 1) throw usage_error("cyclotomic_polynomial: level must be positive");
    static std::map<long, Poly> memo;
    static std::mutex memo_mutex;
    {
        std::lock_guard<std::mutex> lock(memo_mutex);
        auto it = memo.find(m);
        if (it != memo.end()) return it->second;
    }
    Poly result;
    if (m == 1) {
        result = {Rational(-1), Rational(1)};
    } else {
        Poly num(static_cast<std::size_t>(m) + 1, Rational(0)); // x^m - 1
        num[0] = -1;
        num[static_cast<std::size_t>(m)] = 1;
        Poly den{Rational(1)};
        for (long d = 1; d < m; ++d)
            if (m % d == 0) den = poly_mul(den, cyclotomic_polynomial(d));
        Poly rem;
        result = poly_divmod(std::move(num), den, &rem);
        if (!rem.empty()) throw error("cyclotomic recursion left a nonzero remainder");
    }
    std::lock_guard<std::mutex> lock(memo_mutex);
    memo.emplace(m, result);
    return result;
}

Cyc Cyc::zeta(long level, long power) {
    if (level < 1) throw usage_error("zeta: level must be positive");
    const FieldData& fd = field(level);
    power %= level;
    if (power < 0) power += level;
    Poly p(static_cast<std::size_t>(power) + 1, Rational(0));
    p.back() = 1;
    return Cyc(level, reduce_mod_phi(std::move(p), fd));
}

Cyc Cyc::embed(const Rational& v, long level) {
    const FieldData& fd = field(level);
    std::vector<Rational> c(static_cast<std::size_t>(fd.degree), Rational(0));
    c[0] = v;
    return Cyc(level, std::move(c));
}

Cyc Cyc::imaginary_unit(long level) {
    if (level % 4 != 0) throw usage_error("imaginary unit needs 4 | level");
    return zeta(level, level / 4);
}

bool Cyc::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const Rational& v) { return sgn(v) == 0; });
}

bool Cyc::is_rational() const {
    for (std::size_t i = 1; i < c_.size(); ++i)
        if (sgn(c_[i]) != 0) return false;
    return true;
}

Rational Cyc::rational_part() const {
    if (!is_rational()) throw error("cyclotomic element is not rational: " + str());
    return c_[0];
}

Cyc Cyc::lifted(long level) const {
    if (level_ == level) return *this;
    if (level_ != 1) throw level_error("cannot lift level " + std::to_string(level_) +
                                       " into level " + std::to_string(level));
    return embed(c_[0], level);
}

namespace {

// align operands: equal levels, or embed a level-1 (rational) side
std::pair<Cyc, Cyc> aligned(const Cyc& a, const Cyc& b) {
    if (a.level() == b.level()) return {a, b};
    if (a.level() == 1) return {a.lifted(b.level()), b};
    if (b.level() == 1) return {a, b.lifted(a.level())};
    throw level_error("level mismatch: " + std::to_string(a.level()) + " vs " +
                      std::to_string(b.level()));
}

} // namespace

struct CycOps {
    static Cyc make(long level, std::vector<Rational> c) { return Cyc(level, std::move(c)); }
};

Cyc operator+(const Cyc& a0, const Cyc& b0) {
    auto [a, b] = aligned(a0, b0);
    std::vector<Rational> c = a.coords();
    for (std::size_t i = 0; i < c.size(); ++i) c[i] += b.coords()[i];
    return CycOps::make(a.level(), std::move(c));
}

Cyc operator-(const Cyc& a0, const Cyc& b0) {
    auto [a, b] = aligned(a0, b0);
    std::vector<Rational> c = a.coords();
    for (std::size_t i = 0; i < c.size(); ++i) c[i] -= b.coords()[i];
    return CycOps::make(a.level(), std::move(c));
}

Cyc Cyc::operator-() const {
    std::vector<Rational> c = c_;
    for (auto& v : c) v = -v;
    return Cyc(level_, std::move(c));
}

Cyc operator*(const Cyc& a0, const Cyc& b0) {
    auto [a, b] = aligned(a0, b0);
    if (a.level() == 1) return Cyc(a.coords()[0] * b.coords()[0]);
    const FieldData& fd = field(a.level());
    Poly p = poly_mul(a.coords(), b.coords());
    return CycOps::make(a.level(), reduce_mod_phi(std::move(p), fd));
}

Cyc operator*(const Cyc& a, const Rational& s) {
    std::vector<Rational> c = a.coords();
    for (auto& v : c) v *= s;
    return CycOps::make(a.level(), std::move(c));
}

Cyc Cyc::inv() const {
    if (is_zero()) throw division_error("division by zero in Q(zeta_" +
                                        std::to_string(level_) + ")");
    if (level_ == 1) return Cyc(Rational(1) / c_[0]);
    // extended Euclid: u*this + v*Phi = gcd = constant
    const FieldData& fd = field(level_);
    Poly r0 = fd.phi, r1 = c_;
    trim(r1);
    Poly s0{}, s1{Rational(1)}; // Bezout coefficients w.r.t. this element
    while (true) {
        Poly rem;
        Poly q = poly_divmod(std::move(r0), r1, &rem);
        if (rem.empty()) break;
        Poly s2 = s0; // s2 = s0 - q*s1
        Poly qs1 = poly_mul(q, s1);
        if (s2.size() < qs1.size()) s2.resize(qs1.size(), Rational(0));
        for (std::size_t i = 0; i < qs1.size(); ++i) s2[i] -= qs1[i];
        trim(s2);
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (r1.size() != 1) throw error("element is a zero divisor; Phi reduction is broken");
    Rational g = r1[0];
    for (auto& v : s1) v /= g;
    return CycOps::make(level_, reduce_mod_phi(std::move(s1), fd));
}

Cyc operator/(const Cyc& a, const Cyc& b) {
    auto [x, y] = aligned(a, b);
    return x * y.inv();
}

bool operator==(const Cyc& a0, const Cyc& b0) {
    try {
        auto [a, b] = aligned(a0, b0);
        return a.coords() == b.coords();
    } catch (const level_error&) {
        return false;
    }
}

std::string Cyc::str() const {
    if (is_rational()) return c_[0].get_str();
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (sgn(c_[i]) == 0) continue;
        Rational v = c_[i];
        if (first) {
            if (sgn(v) < 0) { os << "-"; v = -v; }
        } else {
            os << (sgn(v) < 0 ? " - " : " + ");
            if (sgn(v) < 0) v = -v;
        }
        first = false;
        if (i == 0) {
            os << v.get_str();
        } else {
            if (v != 1) os << v.get_str() << "*";
            os << "z" << level_;
            if (i > 1) os << "^" << i;
        }
    }
    if (first) os << "0";
    return os.str();
}

namespace {

constexpr mpfr_prec_t kApproxBits = 384;

void accum_embedding(const Cyc& a, long embedding, mpfr_t re, mpfr_t im) {
    mpfr_t pi, angle, t, c, s;
    mpfr_inits2(kApproxBits, pi, angle, t, c, s, static_cast<mpfr_ptr>(nullptr));
    mpfr_const_pi(pi, MPFR_RNDN);
    mpfr_set_zero(re, 1);
    mpfr_set_zero(im, 1);
    const long m = a.level();
    for (std::size_t k = 0; k < a.coords().size(); ++k) {
        const Rational& v = a.coords()[k];
        if (sgn(v) == 0) continue;
        // angle = 2*pi*embedding*k/m
        mpfr_mul_si(angle, pi, 2 * embedding * static_cast<long>(k), MPFR_RNDN);
        mpfr_div_si(angle, angle, m, MPFR_RNDN);
        mpfr_set_q(t, v.get_mpq_t(), MPFR_RNDN);
        mpfr_cos(c, angle, MPFR_RNDN);
        mpfr_sin(s, angle, MPFR_RNDN);
        mpfr_mul(c, c, t, MPFR_RNDN);
        mpfr_mul(s, s, t, MPFR_RNDN);
        mpfr_add(re, re, c, MPFR_RNDN);
        mpfr_add(im, im, s, MPFR_RNDN);
    }
    mpfr_clears(pi, angle, t, c, s, static_cast<mpfr_ptr>(nullptr));
}

std::string mpfr_to_string(mpfr_t x, long digits) {
    char* s = nullptr;
    if (mpfr_asprintf(&s, "%.*Rg", static_cast<int>(digits), x) < 0)
        throw error("mpfr formatting failed");
    std::string out(s);
    mpfr_free_str(s);
    return out;
}

} // namespace

std::pair<std::string, std::string> Cyc::approx(long digits, long embedding) const {
    mpfr_t re, im;
    mpfr_inits2(kApproxBits, re, im, static_cast<mpfr_ptr>(nullptr));
    accum_embedding(*this, embedding, re, im);
    auto out = std::make_pair(mpfr_to_string(re, digits), mpfr_to_string(im, digits));
    mpfr_clears(re, im, static_cast<mpfr_ptr>(nullptr));
    return out;
}

std::pair<double, double> Cyc::approx_double(long embedding) const {
    mpfr_t re, im;
    mpfr_inits2(kApproxBits, re, im, static_cast<mpfr_ptr>(nullptr));
    accum_embedding(*this, embedding, re, im);
    auto out = std::make_pair(mpfr_get_d(re, MPFR_RNDN), mpfr_get_d(im, MPFR_RNDN));
    mpfr_clears(re, im, static_cast<mpfr_ptr>(nullptr));
    return out;
}

Cyc trig_value(TrigKind kind, long num, long den, long level) {
    if (den <= 0) throw usage_error("trig_value: denominator must be positive");
    if (level % 4 != 0) throw usage_error("trig_value: level must be divisible by 4");
    if (level % (2 * den) != 0)
        throw usage_error("trig_value: level " + std::to_string(level) +
                          " too small for angle pi*" + std::to_string(num) + "/" +
                          std::to_string(den));
    const long k = num * (level / (2 * den)); // zeta^k = e^{i pi num/den}
    const Cyc zk = Cyc::zeta(level, k);
    const Cyc zmk = Cyc::zeta(level, -k);
    const Cyc two = Cyc(Rational(2));
    const Cyc i = Cyc::imaginary_unit(level);
    const Cyc cos_v = (zk + zmk) / two;
    const Cyc sin_v = (zk - zmk) / (two * i);
    switch (kind) {
    case TrigKind::cos: return cos_v;
    case TrigKind::sin: return sin_v;
    case TrigKind::tan:
        if (cos_v.is_zero()) throw pole_error("tan at odd multiple of pi/2");
        return sin_v / cos_v;
    case TrigKind::cot:
        if (sin_v.is_zero()) throw pole_error("cot at multiple of pi");
        return cos_v / sin_v;
    case TrigKind::csc:
        if (sin_v.is_zero()) throw pole_error("csc at multiple of pi");
        return Cyc(Rational(1)) / sin_v;
    }
    throw usage_error("trig_value: unknown kind");
}

} // namespace qseries
