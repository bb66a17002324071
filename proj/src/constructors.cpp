#include "qseries/constructors.hpp"

#include <array>
#include <cmath>
#include <map>

namespace qseries {

RSeries pochhammer(long j, long m, long D, long prec) {
    if (m < 1 || D < 1) throw usage_error("pochhammer: modulus and denominator must be positive");
    if (j <= 0) throw usage_error("pochhammer: offset must be positive (factor 1 - q^0 vanishes)");
    if (prec < 1) throw usage_error("pochhammer: precision must be positive");
    std::vector<Rational> c(static_cast<std::size_t>(prec), Rational(0));
    c[0] = 1;
    // multiply in place by (1 - q^{e/D}) for each factor
    for (long e = j; e < prec; e += m)
        for (long k = prec - 1; k >= e; --k)
            c[static_cast<std::size_t>(k)] -= c[static_cast<std::size_t>(k - e)];
    return RSeries::from_coeffs(std::move(c), 0, D, prec);
}

RSeries eta_quotient(const Rational& coeff, long pre, const std::vector<ProductFactor>& factors,
                     long D, long prec) {
    const long pprec = pre < 0 ? prec - pre : prec;
    RSeries r = RSeries::monomial(coeff, pre, D, pre + pprec);
    for (const auto& f : factors) {
        if (f.exponent == 0) continue;
        r = r * pochhammer(f.offset, f.modulus, D, pprec).pow(f.exponent);
    }
    return r;
}

RSeries bilateral_theta(long A, long B, long C, long D, long prec, long extra_margin) {
    if (A <= 0) throw usage_error("bilateral_theta: quadratic coefficient must be positive");
    const double disc = static_cast<double>(B) * B +
                        4.0 * A * std::max<long>(prec - C, 0);
    const long bound = static_cast<long>(std::ceil((std::llabs(B) + std::sqrt(disc)) / (2.0 * A)))
                       + 2 + extra_margin;
    std::map<long, Rational> terms;
    for (long n = -bound; n <= bound; ++n) {
        const long e = A * n * n + B * n + C;
        if (e >= prec) continue;
        terms[e] += (n % 2 == 0) ? 1 : -1;
    }
    long lo = terms.empty() ? prec : std::min<long>(terms.begin()->first, 0);
    if (lo > 0) lo = 0;
    std::vector<Rational> c(static_cast<std::size_t>(prec - lo), Rational(0));
    for (const auto& [e, v] : terms) c[static_cast<std::size_t>(e - lo)] = v;
    return RSeries::from_coeffs(std::move(c), lo, D, prec);
}

RSeries cubic_theta(char kind, long prec) {
    if (prec < 1) throw usage_error("cubic_theta: precision must be positive");
    const long bound = static_cast<long>(std::ceil(2.0 * std::sqrt(prec / 3.0))) + 2;
    if (kind == 'a' || kind == 'b') {
        // per-exponent counts by residue of n - m mod 3
        std::vector<std::array<long, 3>> cnt(static_cast<std::size_t>(prec), {0, 0, 0});
        for (long n = -bound; n <= bound; ++n)
            for (long m = -bound; m <= bound; ++m) {
                const long e = n * n + n * m + m * m;
                if (e >= prec) continue;
                long r = (n - m) % 3;
                if (r < 0) r += 3;
                ++cnt[static_cast<std::size_t>(e)][static_cast<std::size_t>(r)];
            }
        std::vector<Rational> c(static_cast<std::size_t>(prec), Rational(0));
        for (long e = 0; e < prec; ++e) {
            const auto& k = cnt[static_cast<std::size_t>(e)];
            if (kind == 'a') {
                c[static_cast<std::size_t>(e)] = Rational(k[0] + k[1] + k[2]);
            } else {
                Cyc v = Cyc(Rational(k[0])) + Cyc::zeta(3) * Rational(k[1]) +
                        Cyc::zeta(3, 2) * Rational(k[2]);
                if (!v.is_rational())
                    throw error("cubic theta b: non-rational coefficient at exponent " +
                                std::to_string(e));
                c[static_cast<std::size_t>(e)] = v.rational_part();
            }
        }
        return RSeries::from_coeffs(std::move(c), 0, 1, prec);
    }
    if (kind == 'c') {
        // exponent index 3(n^2+nm+m^2+n+m)+1 over denominator 3
        std::vector<Rational> c(static_cast<std::size_t>(prec), Rational(0));
        const long b2 = bound + 2;
        for (long n = -b2; n <= b2; ++n)
            for (long m = -b2; m <= b2; ++m) {
                const long e = 3 * (n * n + n * m + m * m + n + m) + 1;
                if (e < 0 || e >= prec) continue;
                c[static_cast<std::size_t>(e)] += 1;
            }
        return RSeries::from_coeffs(std::move(c), 0, 3, prec);
    }
    throw usage_error("cubic_theta: unknown kind");
}

RSeries eisenstein(int k, long j, long prec) {
    if (j < 1) throw usage_error("eisenstein: argument power must be positive");
    long coef;
    int s;
    switch (k) {
    case 2: coef = -24; s = 1; break;
    case 4: coef = 240; s = 3; break;
    case 6: coef = -504; s = 5; break;
    default: throw usage_error("eisenstein: weight must be 2, 4, or 6");
    }
    const long base = (prec + j - 1) / j;
    std::vector<Rational> c(static_cast<std::size_t>(base > 0 ? base : 1), Rational(0));
    c[0] = 1;
    for (long d = 1; d < base; ++d) {
        mpz_class pw;
        mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(d), static_cast<unsigned long>(s));
        const Rational term = Rational(pw) * coef;
        for (long n = d; n < base; n += d) c[static_cast<std::size_t>(n)] += term;
    }
    return RSeries::from_coeffs(std::move(c), 0, 1, std::max<long>(base, 1)).subst_pow(j);
}

CSeries epq_family(char kind, long p, long N, long level, long prec) {
    if (N < 1) throw usage_error("epq_family: denominator must be positive");
    const long g = std::gcd(p < 0 ? -p : p, N);
    p /= g;
    N /= g;
    p %= N;
    if (p < 0) p += N;
    if (N == 1) throw usage_error("epq_family: integer alpha excluded");
    if (2 * p == N) throw usage_error("epq_family: alpha = 1/2 excluded");
    const Cyc tn = trig_value(TrigKind::tan, p, N, level);
    const Cyc sn = trig_value(TrigKind::sin, p, N, level);
    Cyc pre;
    int s;
    switch (kind) {
    case 'e': pre = tn * make_rational(4); s = 0; break;
    case 'P': pre = sn * sn * make_rational(-8); s = 1; break;
    case 'Q': pre = tn * sn * sn * make_rational(-8); s = 2; break;
    default: throw usage_error("epq_family: kind must be e, P, or Q");
    }
    PeriodicSeq<Cyc> seq;
    seq.values.reserve(static_cast<std::size_t>(N));
    for (long n = 0; n < N; ++n) {
        const TrigKind tk = (kind == 'P') ? TrigKind::cos : TrigKind::sin;
        Cyc t;
        // sin/cos(2 pi n p / N) = value at pi * (2np)/N; poles cannot occur
        const long num = 2 * n * p;
        if (num % (2 * N) == 0 && tk == TrigKind::sin)
            t = Cyc(0);
        else
            t = trig_value(tk, num, N, level);
        seq.values.push_back(pre * t);
    }
    CSeries sum = lambert<Cyc>(seq, s, 1, 1, 1, prec);
    return CSeries::monomial(Cyc(1), 0, 1, prec) + sum;
}

RSeries liu_logderiv_core(int k, long prec) {
    if (k < 1 || k > 3) throw usage_error("liu_logderiv_core: k must be 1, 2, or 3");
    std::vector<Rational> c(static_cast<std::size_t>(prec > 1 ? prec : 1), Rational(0));
    c[0] = -1;
    for (long m = 1; k * m < prec; ++m) c[static_cast<std::size_t>(k * m)] -= 2;
    for (long n = 1; 7 * n - k < prec; ++n) {
        const long e1 = 7 * n - k;
        for (long m = 1; e1 * m < prec; ++m) c[static_cast<std::size_t>(e1 * m)] += 2;
        const long e2 = 7 * n + k;
        for (long m = 1; e2 * m < prec; ++m) c[static_cast<std::size_t>(e2 * m)] -= 2;
    }
    return RSeries::from_coeffs(std::move(c), 0, 1, std::max<long>(prec, 1));
}

PeriodicSeq<Rational> gh1_sequence(char which) {
    auto mk = [](std::initializer_list<long> v) {
        PeriodicSeq<Rational> s;
        for (long x : v) s.values.push_back(Rational(x));
        return s;
    };
    switch (which) {
    case 'a': return mk({0, 1, -1, -2, 2, 1, -1});
    case 'b': return mk({0, 1, -2, 1, -1, 2, -1});
    case 'c': return mk({0, 2, 1, 1, -1, -1, -2});
    case 'f': return mk({-2, 0, -1, 2, 2, -1, 0});
    case 'g': return mk({-2, -1, 2, 0, 0, 2, -1});
    case 'h': return mk({-2, 2, 0, -1, -1, 0, 2});
    case 'j': return mk({0, 1, 1, -1, 1, -1, -1}); // Jacobi symbol mod 7
    }
    throw usage_error("gh1_sequence: unknown sequence");
}

namespace {

const PeriodicSeq<Rational> kOnes{{Rational(1)}};

RSeries septic_theta(char kind, long prec56) {
    switch (kind) {
    case 'a': return -bilateral_theta(196, 140, 25, 56, prec56);
    case 'b': return bilateral_theta(196, 84, 9, 56, prec56);
    case 'c': return bilateral_theta(196, 28, 1, 56, prec56);
    }
    throw usage_error("septic theta: unknown kind");
}

// canonical product forms, D = 1
RSeries xyz_product(char which, long prec) {
    switch (which) {
    case 'x':
        return eta_quotient(1, 1, {{7, 7, 2}, {2, 7, 1}, {5, 7, 1}, {3, 7, -2}, {4, 7, -2}}, 1, prec);
    case 'y':
        return eta_quotient(1, 1, {{7, 7, 2}, {1, 7, 1}, {6, 7, 1}, {2, 7, -2}, {5, 7, -2}}, 1, prec);
    case 'z':
        return eta_quotient(1, 0, {{7, 7, 2}, {3, 7, 1}, {4, 7, 1}, {1, 7, -2}, {6, 7, -2}}, 1, prec);
    }
    throw usage_error("xyz_product: unknown symbol");
}

// theta-quotient forms, D = 56
RSeries xyz_theta(char which, long prec56) {
    const long m = prec56 + 64; // margin for the inverted square (z loses 49 index units)
    const RSeries eta7 = eta_quotient(1, 49, {{392, 392, 3}}, 56, m);
    const RSeries a = septic_theta('a', m), b = septic_theta('b', m), c = septic_theta('c', m);
    switch (which) {
    case 'x': return eta7 * b * (c * c).inv();
    case 'y': return -(eta7 * a * (b * b).inv());
    case 'z': return eta7 * c * (a * a).inv();
    }
    throw usage_error("xyz_theta: unknown symbol");
}

RSeries xyz_lambert(char which, long prec) {
    const RSeries s = lambert<Rational>(gh1_sequence(which == 'x' ? 'a' : which == 'y' ? 'b' : 'c'),
                                        0, 1, 1, 1, prec);
    if (which == 'z') return RSeries::monomial(1, 0, 1, prec) + s;
    return s;
}

RSeries one(long prec) { return RSeries::monomial(1, 0, 1, prec); }

RSeries quintic(char which, long prec) {
    // A = q^{1/5} (q;q)^{-3/5} sum (-1)^n q^{(5n^2-3n)/2}; B likewise with (5n^2-n)/2
    const long m = prec + 2;
    const RSeries p = pochhammer(1, 1, 1, m).pow_rational(-3, 5);
    const RSeries t = bilateral_theta(5, which == 'A' ? -3 : -1, 0, 2, 2 * m).reduced();
    const RSeries base = p * t;
    if (which == 'B') return base;
    return RSeries::monomial(1, 1, 5, 5 * m) * base.lifted(5);
}

CSeries theta1_special_sum(int k, long prec8) {
    const RSeries s = bilateral_theta(28, 28 + 8 * k, 7 + 4 * k, 8, prec8);
    return to_cyc(s, 4) * (-Cyc::imaginary_unit(4));
}

CSeries theta1_special_product(int k, long prec8) {
    static const long pre[4] = {0, 3, -1, -5};
    const RSeries p =
        eta_quotient(1, pre[k], {{8 * k, 56, 1}, {8 * (7 - k), 56, 1}, {56, 56, 1}}, 8, prec8);
    return to_cyc(p, 4) * Cyc::imaginary_unit(4);
}

} // namespace

AnySeries named_series(const std::string& name, long order) {
    if (order < 1) throw usage_error("series order must be positive");
    const long p1 = order;        // D = 1
    const long p56 = 56 * order;  // D = 56
    const long p8 = 8 * order;    // D = 8

    if (name == "septic.a") return septic_theta('a', p56);
    if (name == "septic.b") return septic_theta('b', p56);
    if (name == "septic.c") return septic_theta('c', p56);
    if (name == "x" || name == "y" || name == "z") return xyz_product(name[0], p1);
    if (name == "x.theta" || name == "y.theta" || name == "z.theta")
        return xyz_theta(name[0], p56);
    if (name == "x.lambert" || name == "y.lambert" || name == "z.lambert")
        return xyz_lambert(name[0], p1);
    if (name == "P") return eisenstein(2, 7, p1);
    if (name == "E2") return eisenstein(2, 1, p1);
    if (name == "E4") return eisenstein(4, 1, p1);
    if (name == "E6") return eisenstein(6, 1, p1);
    if (name == "E4.q7") return eisenstein(4, 7, p1);
    if (name == "E6.q7") return eisenstein(6, 7, p1);
    if (name == "quintic.A") return quintic('A', p1);
    if (name == "quintic.B") return quintic('B', p1);
    if (name == "quintic.P") return eisenstein(2, 5, p1);
    if (name == "cubic.a") return cubic_theta('a', p1);
    if (name == "cubic.b") return cubic_theta('b', p1);
    if (name == "cubic.c") return cubic_theta('c', 3 * order);
    if (name == "cubic.P") {
        PeriodicSeq<Rational> cs{{Rational(-6), make_rational(3), make_rational(3)}};
        return one(p1) + lambert<Rational>(cs, 1, 1, 1, 1, p1);
    }
    if (name == "sigma")
        return one(p1) + lambert<Rational>(gh1_sequence('j'), 0, 1, 1, 1, p1).scaled(2);
    if (name == "Z") return eta_quotient(1, 0, {{1, 1, 7}, {7, 7, -1}}, 1, p1);
    if (name == "X") return eta_quotient(1, 1, {{7, 7, 4}, {1, 1, -4}}, 1, p1);
    if (name == "j7") return eta_quotient(1, -1, {{1, 1, 4}, {7, 7, -4}}, 1, p1);
    if (name == "D1" || name == "D2" || name == "D3") {
        const long k = name[1] - '0';
        return lambert<Rational>(kOnes, 1, 1, k, 7, p1) +
               lambert<Rational>(kOnes, 1, 1, 7 - k, 7, p1);
    }
    if (name == "theta1prime.q7") return eta_quotient(2, 7, {{56, 56, 3}}, 8, p8);
    if (name == "theta1.k1") return theta1_special_product(1, p8);
    if (name == "theta1.k2") return theta1_special_product(2, p8);
    if (name == "theta1.k3") return theta1_special_product(3, p8);
    if (name == "theta1.k1.sum") return theta1_special_sum(1, p8);
    if (name == "theta1.k2.sum") return theta1_special_sum(2, p8);
    if (name == "theta1.k3.sum") return theta1_special_sum(3, p8);
    throw usage_error("unknown series name: " + name);
}

std::vector<std::string> series_names() {
    return {"D1",         "D2",          "D3",          "E2",          "E4",
            "E4.q7",      "E6",          "E6.q7",       "P",           "X",
            "Z",          "cubic.P",     "cubic.a",     "cubic.b",     "cubic.c",
            "j7",         "quintic.A",   "quintic.B",   "quintic.P",   "septic.a",
            "septic.b",   "septic.c",    "sigma",       "theta1.k1",   "theta1.k1.sum",
            "theta1.k2",  "theta1.k2.sum", "theta1.k3", "theta1.k3.sum", "theta1prime.q7",
            "x",          "x.lambert",   "x.theta",     "y",           "y.lambert",
            "y.theta",    "z",           "z.lambert",   "z.theta"};
}

} // namespace qseries
