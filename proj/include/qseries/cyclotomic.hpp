#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qseries/errors.hpp"
#include "qseries/rational.hpp"

namespace qseries {

long euler_phi(long m);

// Phi_M, the minimal polynomial of a primitive M-th root of unity.
// Monic with integer coefficients, stored low-to-high, degree phi(M).
std::vector<Rational> cyclotomic_polynomial(long m);

/// Element of the cyclotomic field Q(zeta_M), kept in canonical form as a
/// polynomial in zeta_M reduced modulo Phi_M. Level 1 is plain Q; rationals
/// lift implicitly into any level, while distinct levels > 1 never mix.
class Cyc {
public:
    Cyc() : level_(1), c_{Rational(0)} {}
    Cyc(long v) : level_(1), c_{Rational(v)} {}
    Cyc(Rational v) : level_(1), c_{std::move(v)} {}

    static Cyc zeta(long level, long power = 1);
    static Cyc embed(const Rational& v, long level);
    // the imaginary unit, zeta_M^{M/4}; requires 4 | M
    static Cyc imaginary_unit(long level);

    long level() const { return level_; }
    const std::vector<Rational>& coords() const { return c_; }

    bool is_zero() const;
    bool is_rational() const;
    Rational rational_part() const; // throws error if not rational

    Cyc lifted(long level) const;

    friend Cyc operator+(const Cyc& a, const Cyc& b);
    friend Cyc operator-(const Cyc& a, const Cyc& b);
    friend Cyc operator*(const Cyc& a, const Cyc& b);
    friend Cyc operator/(const Cyc& a, const Cyc& b);
    Cyc operator-() const;
    Cyc inv() const;

    friend Cyc operator*(const Cyc& a, const Rational& s);
    friend Cyc operator*(const Rational& s, const Cyc& a) { return a * s; }

    friend bool operator==(const Cyc& a, const Cyc& b);
    friend bool operator!=(const Cyc& a, const Cyc& b) { return !(a == b); }

    Cyc& operator+=(const Cyc& b) { return *this = *this + b; }
    Cyc& operator-=(const Cyc& b) { return *this = *this - b; }
    Cyc& operator*=(const Cyc& b) { return *this = *this * b; }

    // exact rendering: "p/q" when rational, otherwise a polynomial in z = zeta_M
    std::string str() const;

    // complex approximation mapping zeta_M to e^{2 pi i j / M}; reporting only,
    // never used in a verification verdict
    std::pair<std::string, std::string> approx(long digits = 30, long embedding = 1) const;
    std::pair<double, double> approx_double(long embedding = 1) const;

private:
    Cyc(long level, std::vector<Rational> coords)
        : level_(level), c_(std::move(coords)) {}

    long level_;
    std::vector<Rational> c_; // size phi(level), coordinates on 1, z, ..., z^{phi-1}

    friend struct CycOps;
};

inline bool is_zero(const Cyc& a) { return a.is_zero(); }
inline std::string to_string(const Cyc& a) { return a.str(); }

enum class TrigKind { sin, cos, tan, cot, csc };

// Exact value of f(pi * num / den) in Q(zeta_level).
// Requires 4 | level and (2*den) | level; poles throw pole_error.
Cyc trig_value(TrigKind kind, long num, long den, long level);

} // namespace qseries
