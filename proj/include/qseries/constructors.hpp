#pragma once

#include <string>
#include <variant>
#include <vector>

#include "qseries/series.hpp"

namespace qseries {

template <class K>
struct PeriodicSeq {
    std::vector<K> values; // index 0 = residue 0

    long period() const { return static_cast<long>(values.size()); }
    const K& at(long n) const {
        const long p = period();
        long r = n % p;
        if (r < 0) r += p;
        return values[static_cast<std::size_t>(r)];
    }
};

// (q^{j/D}; q^{m/D})_inf truncated: product of (1 - q^{(j+km)/D}) over all
// k >= 0 with j + km < prec
RSeries pochhammer(long j, long m, long D, long prec);

struct ProductFactor {
    long offset;   // j, in index units over D
    long modulus;  // m, in index units over D
    long exponent; // e, integer (negative allowed)
};

// coeff * q^{pre/D} * prod of pochhammer(offset, modulus, D, .)^exponent
RSeries eta_quotient(const Rational& coeff, long pre, const std::vector<ProductFactor>& factors,
                     long D, long prec);

// sum of (-1)^n q^{(A n^2 + B n + C)/D} over all integers n with exponent
// index < prec; the |n| bound from the quadratic gets a +2 safety margin,
// extra_margin widens it further (used by tests to confirm saturation)
RSeries bilateral_theta(long A, long B, long C, long D, long prec, long extra_margin = 0);

// theta series on the hexagonal lattice: kind 'a' counts representations by
// n^2+nm+m^2, 'b' weights by omega^{n-m} (computed in Q(zeta_3), demoted to
// rationals), 'c' shifts both indices by 1/3 and has denominator 3
RSeries cubic_theta(char kind, long prec);

// sum over n >= 1 of seq(n) * n^s * q^{an} / (1 - q^{mn})^p, expanded
// geometrically; prec in integer exponent units (D = 1)
template <class K>
Series<K> lambert(const PeriodicSeq<K>& seq, int s, int p, long a, long m, long prec) {
    if (s < 0 || s > 2 || (p != 1 && p != 2) || a < 1 || m < 1)
        throw usage_error("lambert: unsupported parameters");
    std::vector<K> c(static_cast<std::size_t>(prec > 0 ? prec : 0), K(0));
    for (long n = 1; a * n < prec; ++n) {
        const K& w = seq.at(n);
        if (qseries::is_zero(w)) continue;
        long ns = 1;
        for (int i = 0; i < s; ++i) ns *= n;
        const K base = w * make_rational(ns);
        for (long k = 0;; ++k) {
            const long e = a * n + k * m * n;
            if (e >= prec) break;
            auto& dst = c[static_cast<std::size_t>(e)];
            if (p == 1)
                dst = dst + base;
            else
                dst = dst + base * make_rational(k + 1);
        }
    }
    return Series<K>::from_coeffs(std::move(c), 0, 1, prec);
}

// E_2 = 1 - 24 sum sigma_1(n) q^n, E_4 = 1 + 240 sum sigma_3(n) q^n,
// E_6 = 1 - 504 sum sigma_5(n) q^n, then q -> q^j
RSeries eisenstein(int k, long j, long prec);

// the level-N parameters: kind 'e' = 1 + 4 tan(pi a) sum sin(2 n pi a) q^n/(1-q^n),
// 'P' = 1 - 8 sin^2(pi a) sum cos(2 n pi a) n q^n/(1-q^n),
// 'Q' = 1 - 8 tan(pi a) sin^2(pi a) sum sin(2 n pi a) n^2 q^n/(1-q^n),
// at a = p/N, coefficients in Q(zeta_level)
CSeries epq_family(char kind, long p, long N, long level, long prec);

// S_k = -1 - 2 sum_m q^{km} + 2 sum_{n,m} q^{(7n-k)m} - 2 sum_{n,m} q^{(7n+k)m};
// i*S_k is the logarithmic derivative of theta_1 at z = k pi tau, nome q^7
RSeries liu_logderiv_core(int k, long prec);

// the period-7 tables: 'a','b','c' (Lambert numerators of x, y, z), 'f','g','h'
// (log-derivative weights), 'j' (Jacobi symbol mod 7)
PeriodicSeq<Rational> gh1_sequence(char which);

using AnySeries = std::variant<RSeries, CSeries>;

// catalog constructor; order is the exponent bound in q-units (the returned
// series is exact below q^order)
AnySeries named_series(const std::string& name, long order);
std::vector<std::string> series_names();

} // namespace qseries
