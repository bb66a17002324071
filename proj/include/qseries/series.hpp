#pragma once

#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "qseries/cyclotomic.hpp"
#include "qseries/errors.hpp"
#include "qseries/rational.hpp"

namespace qseries {

// Convolution kernel selection. `automatic` uses the OpenMP kernel for large
// products; the serial kernel is the reference and both are bit-identical.
enum class ConvMode { automatic, serial, parallel };

ConvMode conv_mode() noexcept;
void set_conv_mode(ConvMode m) noexcept;

struct ZeroWitness {
    long expo_num = 0;
    long expo_den = 1;
    std::string coeff;
    // structured form of the coefficient: level 1 means plain rational
    long level = 1;
    std::vector<std::string> coords;
};

inline void witness_fill(const Rational& v, ZeroWitness& w) {
    w.coeff = qseries::to_string(v);
    w.level = 1;
    w.coords = {w.coeff};
}

inline void witness_fill(const Cyc& v, ZeroWitness& w) {
    w.coeff = v.str();
    w.level = v.level();
    w.coords.clear();
    for (const Rational& r : v.coords()) w.coords.push_back(qseries::to_string(r));
}

/// Truncated Laurent-Puiseux series in q^{1/D}. Exponents are integer indices
/// k meaning q^{k/D}; coefficients are exact and known on lo <= k < prec.
/// Values are immutable after construction and safe to share across threads.
template <class K>
class Series {
public:
    Series() = default;

    static Series monomial(K c, long k, long denom, long prec) {
        if (denom < 1) throw usage_error("series denominator must be positive");
        if (prec <= k) throw usage_error("monomial: prec must exceed the exponent");
        Series s;
        s.denom_ = denom;
        s.lo_ = k;
        s.prec_ = prec;
        s.c_.assign(static_cast<std::size_t>(prec - k), K(0));
        s.c_[0] = std::move(c);
        s.trim();
        return s;
    }

    static Series zero(long denom, long prec) {
        Series s;
        s.denom_ = denom;
        s.lo_ = prec;
        s.prec_ = prec;
        return s;
    }

    static Series from_coeffs(std::vector<K> coeffs, long lo, long denom, long prec) {
        Series s;
        s.denom_ = denom;
        s.lo_ = lo;
        s.prec_ = prec;
        s.c_ = std::move(coeffs);
        if (static_cast<long>(s.c_.size()) != prec - lo)
            throw usage_error("from_coeffs: coefficient count does not match lo/prec");
        s.trim();
        return s;
    }

    long denom() const { return denom_; }
    long lo() const { return lo_; }
    long prec() const { return prec_; }
    bool known_range_empty() const { return c_.empty(); }

    // coefficient of q^{num/den}; exact zero below lo, precision_error at or
    // beyond prec
    K coeff(long num, long den = 1) const {
        // compare num/den with prec/denom_ and lo/denom_ without overflow risk
        if (num * denom_ >= prec_ * den)
            throw precision_error("coefficient beyond known precision");
        if ((num * denom_) % den != 0) return K(0);
        const long k = num * denom_ / den;
        if (k < lo_) return K(0);
        return c_[static_cast<std::size_t>(k - lo_)];
    }

    Series lifted(long new_denom) const {
        if (new_denom == denom_) return *this;
        if (new_denom % denom_ != 0)
            throw usage_error("denominator lift must be to a multiple");
        const long f = new_denom / denom_;
        Series s;
        s.denom_ = new_denom;
        s.lo_ = lo_ * f;
        s.prec_ = prec_ * f;
        s.c_.assign(static_cast<std::size_t>(s.prec_ - s.lo_), K(0));
        for (std::size_t i = 0; i < c_.size(); ++i)
            s.c_[i * static_cast<std::size_t>(f)] = c_[i];
        return s;
    }

    // drop the common factor between the denominator and all exponents; the
    // precision bound rounds up to the next reduced-grid point (no reduced
    // exponent lies in between, so the claim stays sound)
    Series reduced() const {
        long g = denom_;
        g = std::gcd(g, lo_);
        for (std::size_t i = 0; i < c_.size() && g > 1; ++i)
            if (!qseries::is_zero(c_[i])) g = std::gcd(g, lo_ + static_cast<long>(i));
        if (g <= 1) return *this;
        Series s;
        s.denom_ = denom_ / g;
        s.lo_ = lo_ / g;
        s.prec_ = prec_ > 0 ? (prec_ + g - 1) / g : -(-prec_ / g);
        s.c_.assign(static_cast<std::size_t>(s.prec_ - s.lo_), K(0));
        for (std::size_t i = 0; i < c_.size(); ++i)
            if (!qseries::is_zero(c_[i])) c_dst(s, (lo_ + static_cast<long>(i)) / g) = c_[i];
        return s;
    }

    friend Series operator+(const Series& a, const Series& b) {
        auto [x, y] = aligned(a, b);
        Series s;
        s.denom_ = x.denom_;
        s.prec_ = std::min(x.prec_, y.prec_);
        s.lo_ = std::min(std::min(x.lo_, y.lo_), s.prec_);
        s.c_.assign(static_cast<std::size_t>(s.prec_ - s.lo_), K(0));
        x.accumulate_into(s, false);
        y.accumulate_into(s, false);
        s.trim();
        return s;
    }

    friend Series operator-(const Series& a, const Series& b) {
        auto [x, y] = aligned(a, b);
        Series s;
        s.denom_ = x.denom_;
        s.prec_ = std::min(x.prec_, y.prec_);
        s.lo_ = std::min(std::min(x.lo_, y.lo_), s.prec_);
        s.c_.assign(static_cast<std::size_t>(s.prec_ - s.lo_), K(0));
        x.accumulate_into(s, false);
        y.accumulate_into(s, true);
        s.trim();
        return s;
    }

    Series operator-() const {
        Series s = *this;
        for (auto& v : s.c_) v = K(0) - v;
        return s;
    }

    friend Series operator*(const Series& a, const Series& b) {
        auto [x, y] = aligned(a, b);
        const bool big = x.c_.size() * y.c_.size() >= 1u << 15;
        switch (conv_mode()) {
        case ConvMode::serial: return mul_serial(x, y);
        case ConvMode::parallel: return mul_parallel(x, y);
        case ConvMode::automatic: return big ? mul_parallel(x, y) : mul_serial(x, y);
        }
        return mul_serial(x, y);
    }

    friend Series operator*(const Series& a, const K& s) {
        Series r = a;
        for (auto& v : r.c_) v = v * s;
        r.trim();
        return r;
    }
    friend Series operator*(const K& s, const Series& a) { return a * s; }

    Series scaled(const Rational& s) const {
        Series r = *this;
        for (auto& v : r.c_) v = v * s;
        r.trim();
        return r;
    }

    // reference kernel: plain nested loop, deterministic order
    friend Series mul_serial(const Series& a, const Series& b) {
        Series s = mul_shape(a, b);
        if (s.c_.empty()) return s;
        for (long k = 0; k < static_cast<long>(s.c_.size()); ++k)
            s.c_[static_cast<std::size_t>(k)] = conv_at(a, b, k);
        s.trim();
        return s;
    }

    // OpenMP kernel: output coefficients are independent, each computed with
    // the same summation order as the serial kernel, so results are
    // bit-identical
    friend Series mul_parallel(const Series& a, const Series& b) {
        Series s = mul_shape(a, b);
        if (s.c_.empty()) return s;
        const long n = static_cast<long>(s.c_.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 16)
#endif
        for (long k = 0; k < n; ++k)
            s.c_[static_cast<std::size_t>(k)] = conv_at(a, b, k);
        s.trim();
        return s;
    }

    Series inv() const {
        if (c_.empty())
            throw division_error("cannot invert a series with no known nonzero term");
        const std::size_t n = c_.size();
        std::vector<K> g(n, K(0));
        const K& u0 = c_[0];
        g[0] = K(1) / u0;
        for (std::size_t k = 1; k < n; ++k) {
            K acc = K(0);
            for (std::size_t i = 1; i <= k; ++i) acc = acc + c_[i] * g[k - i];
            g[k] = (K(0) - acc) / u0;
        }
        Series s;
        s.denom_ = denom_;
        s.lo_ = -lo_;
        s.prec_ = prec_ - 2 * lo_;
        s.c_ = std::move(g);
        s.trim();
        return s;
    }

    Series pow(long e) const {
        if (e < 0) return inv().pow(-e);
        if (e == 0) return monomial(K(1), 0, denom_, std::max<long>(prec_ - lo_, 1));
        Series base = *this;
        Series result;
        bool have = false;
        while (e > 0) {
            if (e & 1) {
                result = have ? result * base : base;
                have = true;
            }
            e >>= 1;
            if (e > 0) base = base * base;
        }
        return result;
    }

    // f^{a/b} for a series with constant term exactly 1, via the recurrence
    // b*f*g' = a*f'*g
    Series pow_rational(long a, long b) const {
        if (b <= 0) throw usage_error("pow_rational: exponent denominator must be positive");
        if (c_.empty() || lo_ != 0 || !(c_[0] == K(1)))
            throw usage_error("pow_rational requires constant term exactly 1");
        const std::size_t n = c_.size();
        std::vector<K> g(n, K(0));
        g[0] = K(1);
        for (std::size_t k = 1; k < n; ++k) {
            K acc = K(0);
            for (std::size_t i = 1; i <= k; ++i) {
                const long w = a * static_cast<long>(i) -
                               b * static_cast<long>(k - i);
                if (w != 0) acc = acc + c_[i] * g[k - i] * make_rational(w);
            }
            g[k] = acc * make_rational(1, b * static_cast<long>(k));
        }
        Series s;
        s.denom_ = denom_;
        s.lo_ = 0;
        s.prec_ = prec_;
        s.c_ = std::move(g);
        s.trim();
        return s;
    }

    // q d/dq: multiply the coefficient of q^{k/D} by k/D
    Series theta() const {
        Series s = *this;
        for (std::size_t i = 0; i < s.c_.size(); ++i) {
            const long k = s.lo_ + static_cast<long>(i);
            s.c_[i] = s.c_[i] * make_rational(k, s.denom_);
        }
        s.trim();
        return s;
    }

    // q -> q^j
    Series subst_pow(long j) const {
        if (j < 1) throw usage_error("subst_pow: power must be positive");
        if (j == 1) return *this;
        Series s;
        s.denom_ = denom_;
        s.lo_ = lo_ * j;
        s.prec_ = prec_ * j;
        s.c_.assign(static_cast<std::size_t>(s.prec_ - s.lo_), K(0));
        for (std::size_t i = 0; i < c_.size(); ++i)
            s.c_[i * static_cast<std::size_t>(j)] = c_[i];
        s.trim();
        return s;
    }

    // true iff all known coefficients with exponent < order_num/order_den are
    // exactly zero; never passes beyond the known precision
    bool is_zero_to(long order_num, long order_den, ZeroWitness* witness = nullptr) const {
        if (order_den <= 0) throw usage_error("order denominator must be positive");
        if (prec_ * order_den < order_num * denom_)
            throw precision_error("requested order " + std::to_string(order_num) + "/" +
                                  std::to_string(order_den) + " exceeds known precision");
        for (std::size_t i = 0; i < c_.size(); ++i) {
            const long k = lo_ + static_cast<long>(i);
            if (k * order_den >= order_num * denom_) break;
            if (!qseries::is_zero(c_[i])) {
                if (witness) {
                    const long g = std::gcd(k < 0 ? -k : k, denom_);
                    witness->expo_num = k / (g ? g : 1);
                    witness->expo_den = denom_ / (g ? g : 1);
                    witness_fill(c_[i], *witness);
                }
                return false;
            }
        }
        return true;
    }

    friend bool operator==(const Series& a, const Series& b) {
        auto [x, y] = aligned(a, b);
        Series d = x - y;
        return d.is_zero_to(d.prec_, d.denom_ /* full known range */) && x.prec_ == y.prec_;
    }

private:
    long denom_ = 1;
    long lo_ = 0;
    long prec_ = 0;
    std::vector<K> c_;

    void trim() {
        std::size_t skip = 0;
        while (skip < c_.size() && qseries::is_zero(c_[skip])) ++skip;
        if (skip > 0) {
            c_.erase(c_.begin(), c_.begin() + static_cast<long>(skip));
            lo_ += static_cast<long>(skip);
        }
    }

    static K& c_dst(Series& s, long k) { return s.c_[static_cast<std::size_t>(k - s.lo_)]; }

    void accumulate_into(Series& s, bool negate) const {
        for (std::size_t i = 0; i < c_.size(); ++i) {
            const long k = lo_ + static_cast<long>(i);
            if (k >= s.prec_) break;
            K& dst = c_dst(s, k);
            if (negate)
                dst = dst - c_[i];
            else
                dst = dst + c_[i];
        }
    }

    static std::pair<Series, Series> aligned(const Series& a, const Series& b) {
        const long g = std::gcd(a.denom_, b.denom_);
        const long l = a.denom_ / g * b.denom_;
        return {a.lifted(l), b.lifted(l)};
    }

    static Series mul_shape(const Series& a, const Series& b) {
        Series s;
        s.denom_ = a.denom_;
        s.lo_ = a.lo_ + b.lo_;
        s.prec_ = std::min(a.prec_ + b.lo_, b.prec_ + a.lo_);
        if (s.prec_ < s.lo_) s.prec_ = s.lo_;
        s.c_.assign(static_cast<std::size_t>(s.prec_ - s.lo_), K(0));
        return s;
    }

    static K conv_at(const Series& a, const Series& b, long k) {
        // c[k] relative to lo_a + lo_b; skip zero operand coefficients
        K acc = K(0);
        const long ia_min = std::max<long>(0, k - static_cast<long>(b.c_.size()) + 1);
        const long ia_max = std::min<long>(static_cast<long>(a.c_.size()) - 1, k);
        for (long ia = ia_min; ia <= ia_max; ++ia) {
            const K& av = a.c_[static_cast<std::size_t>(ia)];
            if (qseries::is_zero(av)) continue;
            acc = acc + av * b.c_[static_cast<std::size_t>(k - ia)];
        }
        return acc;
    }
};

using RSeries = Series<Rational>;
using CSeries = Series<Cyc>;

// lift a rational series into Q(zeta_level)
inline CSeries to_cyc(const RSeries& s, long level) {
    std::vector<Cyc> c;
    c.reserve(static_cast<std::size_t>(s.prec() - s.lo()));
    for (long k = s.lo(); k < s.prec(); ++k)
        c.push_back(Cyc::embed(s.coeff(k, s.denom()), level));
    return CSeries::from_coeffs(std::move(c), s.lo(), s.denom(), s.prec());
}

} // namespace qseries
