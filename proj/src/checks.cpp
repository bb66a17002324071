#include "qseries/checks.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <thread>

#include "qseries/septic_constants.hpp"

namespace qseries {

namespace {

long cdiv(long a, long b) { return (a + b - 1) / b; }

RSeries RS(const std::string& name, long ord) {
    return std::get<RSeries>(named_series(name, ord));
}
CSeries CS(const std::string& name, long ord) {
    return std::get<CSeries>(named_series(name, ord));
}

RSeries one_r(long prec) { return RSeries::monomial(1, 0, 1, prec); }
CSeries one_c(long prec) { return CSeries::monomial(Cyc(1), 0, 1, prec); }

const PeriodicSeq<Rational> kOnes{{Rational(1)}};

struct M3 {
    long c;
    int i, j, k;
};

RSeries poly_xyz(const std::vector<M3>& terms, const RSeries& x, const RSeries& y,
                 const RSeries& z) {
    int mi = 0, mj = 0, mk = 0;
    for (const auto& t : terms) {
        mi = std::max(mi, t.i);
        mj = std::max(mj, t.j);
        mk = std::max(mk, t.k);
    }
    auto powers = [](const RSeries& s, int n) {
        std::vector<RSeries> p(static_cast<std::size_t>(n) + 1);
        for (int e = 0; e <= n; ++e) p[static_cast<std::size_t>(e)] = s.pow(e);
        return p;
    };
    const auto xp = powers(x, mi), yp = powers(y, mj), zp = powers(z, mk);
    bool have = false;
    RSeries acc;
    for (const auto& t : terms) {
        RSeries m = xp[static_cast<std::size_t>(t.i)] * yp[static_cast<std::size_t>(t.j)] *
                    zp[static_cast<std::size_t>(t.k)];
        m = m.scaled(t.c);
        acc = have ? acc + m : m;
        have = true;
    }
    return acc;
}

// polynomial term tables (coefficient, powers of x, y, z)
const std::vector<M3> kQuadX = {{5, 0, 2, 0}, {5, 0, 0, 2}, {-7, 2, 0, 0}, {-20, 0, 1, 1}, {-52, 1, 1, 0}};
const std::vector<M3> kQuadY = {{5, 0, 0, 2}, {5, 2, 0, 0}, {-7, 0, 2, 0}, {20, 1, 0, 1}, {-52, 0, 1, 1}};
const std::vector<M3> kQuadZ = {{5, 2, 0, 0}, {5, 0, 2, 0}, {-7, 0, 0, 2}, {-20, 1, 1, 0}, {52, 1, 0, 1}};
const std::vector<M3> kSysPQuartic = {{-1, 4, 0, 0}, {4, 3, 1, 0}, {12, 1, 3, 0}, {-1, 0, 4, 0},
                                      {-12, 3, 0, 1}, {4, 0, 3, 1}, {-4, 1, 0, 3}, {12, 0, 1, 3},
                                      {-1, 0, 0, 4}};
const std::vector<M3> kE4Bridge = {{1, 4, 0, 0}, {-4, 3, 1, 0}, {12, 3, 0, 1}, {-12, 1, 3, 0},
                                   {4, 1, 0, 3}, {1, 0, 4, 0}, {-4, 0, 3, 1}, {-12, 0, 1, 3},
                                   {1, 0, 0, 4}};
const std::vector<M3> kFinaE4q7 = {{1, 4, 0, 0}, {4, 3, 1, 0}, {-4, 1, 3, 0}, {1, 0, 4, 0},
                                   {4, 3, 0, 1}, {8, 1, 1, 2}, {8, 2, 1, 1}, {-8, 1, 2, 1},
                                   {4, 0, 3, 1}, {-4, 1, 0, 3}, {-4, 0, 1, 3}, {1, 0, 0, 4}};
const std::vector<M3> kFinaE4 = {{1, 4, 0, 0}, {-116, 3, 1, 0}, {116, 1, 3, 0}, {1, 0, 4, 0},
                                 {-116, 3, 0, 1}, {848, 1, 1, 2}, {848, 2, 1, 1}, {-848, 1, 2, 1},
                                 {-116, 0, 3, 1}, {116, 1, 0, 3}, {116, 0, 1, 3}, {1, 0, 0, 4}};
const std::vector<M3> kFinaE6 = {
    {1, 6, 0, 0},     {258, 5, 1, 0},   {-5904, 4, 2, 0}, {-5904, 2, 4, 0}, {-258, 1, 5, 0},
    {1, 0, 6, 0},     {258, 5, 0, 1},   {7310, 3, 2, 1},  {7310, 2, 3, 1},  {258, 0, 5, 1},
    {-5904, 4, 0, 2}, {7310, 3, 1, 2},  {-8751, 2, 2, 2}, {-7310, 1, 3, 2}, {-5904, 0, 4, 2},
    {-7310, 2, 1, 3}, {-7310, 1, 2, 3}, {-5904, 2, 0, 4}, {-5904, 0, 2, 4}, {-258, 1, 0, 5},
    {-258, 0, 1, 5},  {1, 0, 0, 6}};
const std::vector<M3> kFinaE6q7 = {
    {1, 6, 0, 0},   {6, 5, 1, 0},   {18, 4, 2, 0},  {18, 2, 4, 0},  {-6, 1, 5, 0},
    {1, 0, 6, 0},   {6, 5, 0, 1},   {2, 3, 2, 1},   {2, 2, 3, 1},   {6, 0, 5, 1},
    {18, 4, 0, 2},  {2, 3, 1, 2},   {-57, 2, 2, 2}, {-2, 1, 3, 2},  {18, 0, 4, 2},
    {-2, 2, 1, 3},  {-2, 1, 2, 3},  {18, 2, 0, 4},  {18, 0, 2, 4},  {-6, 1, 0, 5},
    {-6, 0, 1, 5},  {1, 0, 0, 6}};
const std::vector<M3> kHauptRhs = {{1, 0, 0, 2}, {-1, 1, 0, 1}, {-1, 0, 2, 0}, {-6, 0, 1, 1}};
const std::vector<M3> kCubeProdRhs = {{1, 1, 0, 2}, {-1, 1, 2, 0}, {6, 2, 1, 0}, {-7, 2, 0, 1}};
const std::vector<M3> kZ7Rhs = {{1, 3, 0, 0}, {-32, 2, 1, 0}, {13, 1, 2, 0}, {-1, 0, 3, 0},
                                {45, 2, 0, 1}, {-13, 1, 0, 2}, {1, 0, 0, 3}};

void get_xyz(long ord, RSeries& x, RSeries& y, RSeries& z) {
    x = RS("x", ord);
    y = RS("y", ord);
    z = RS("z", ord);
}

Cyc ct(TrigKind k, long num, long den, long level) { return trig_value(k, num, den, level); }

PeriodicSeq<Cyc> trig_coeff_seq(TrigKind kind, long twice, long p, long N, long level) {
    // values of sin/cos(2 pi n p twice / N) for n mod N (twice = 1 or 2)
    PeriodicSeq<Cyc> s;
    for (long n = 0; n < N; ++n)
        s.values.push_back(ct(kind, 2 * twice * n * p, N, level));
    return s;
}

PeriodicSeq<Cyc> lemma_ba_seq(TrigSeqKind kind, long p, long level) {
    PeriodicSeq<Cyc> s;
    for (long n = 0; n < 7; ++n) s.values.push_back(trig_seq_value(kind, p, 7, n, level));
    return s;
}

RSeries mip_rhs(const PeriodicSeq<Rational>& seq, long prec) {
    RSeries acc = RSeries::zero(1, prec);
    for (long m = 1; m <= 7; ++m)
        acc = acc + lambert<Rational>(kOnes, 1, 1, m, 7, prec).scaled(seq.at(m));
    return acc;
}

// sum over n >= 1, 7 not dividing n, of n q^n/(1-q^n)
RSeries lambert_n_coprime7(long prec) {
    return lambert<Rational>(kOnes, 1, 1, 1, 1, prec) -
           lambert<Rational>(kOnes, 1, 1, 7, 7, prec).scaled(7);
}

AnySeries septic_system_residual(char eq, long ou) {
    const long m = ou + 2;
    RSeries x, y, z;
    get_xyz(m, x, y, z);
    const RSeries P = eisenstein(2, 7, m);
    const auto& quad = eq == 'x' ? kQuadX : eq == 'y' ? kQuadY : kQuadZ;
    const RSeries rhs = poly_xyz(quad, x, y, z) + P.scaled(7);
    const RSeries& w = eq == 'x' ? x : eq == 'y' ? y : z;
    return w.theta().scaled(12) - w * rhs;
}

AnySeries septic_lambert_residual(char eq, long ou) {
    const long m = ou + 2;
    RSeries x, y, z;
    get_xyz(m, x, y, z);
    const RSeries P = eisenstein(2, 7, m);
    const auto& quad = eq == 'x' ? kQuadX : eq == 'y' ? kQuadY : kQuadZ;
    const char tab = eq == 'x' ? 'f' : eq == 'y' ? 'g' : 'h';
    RSeries rhs = lambert<Rational>(gh1_sequence(tab), 1, 1, 1, 1, m);
    if (eq != 'z') rhs = rhs + one_r(m); // the z log-derivative has no constant term
    return poly_xyz(quad, x, y, z) + P.scaled(7) - rhs.scaled(12);
}

AnySeries edecomp_residual(int which, long ou) {
    const long m = ou + 1;
    const SepticConstants sc = efund_constants();
    const std::array<Cyc, 3>& cs = which == 0 ? sc.alphas : which == 1 ? sc.betas : sc.gammas;
    const char sym[3] = {'x', 'y', 'z'};
    const CSeries lhs = to_cyc(RS(std::string(1, sym[which]), m), kSepticLevel);
    CSeries rhs = epq_family('e', 1, 7, kSepticLevel, m) * cs[0];
    rhs = rhs + epq_family('e', 2, 7, kSepticLevel, m) * cs[1];
    rhs = rhs + epq_family('e', 3, 7, kSepticLevel, m) * cs[2];
    return lhs - rhs;
}

AnySeries ramanujan_residual(int k, long ou) {
    const long m = ou + 1;
    const RSeries e2 = eisenstein(2, 1, m), e4 = eisenstein(4, 1, m), e6 = eisenstein(6, 1, m);
    switch (k) {
    case 2: return e2.theta().scaled(12) - (e2 * e2 - e4);
    case 4: return e4.theta().scaled(3) - (e2 * e4 - e6);
    case 6: return e6.theta().scaled(2) - (e2 * e6 - e4 * e4);
    }
    throw usage_error("bad weight");
}

AnySeries lemp_one_residual(long p, long ou) {
    const long m = ou + 1, L = kSepticLevel;
    const CSeries e = epq_family('e', p, 7, L, m);
    const Cyc t = ct(TrigKind::tan, p, 7, L);
    const Cyc t2 = t * t;
    const auto cosq = trig_coeff_seq(TrigKind::cos, 1, p, 7, L);
    const CSeries T1 = lambert<Cyc>(cosq, 0, 2, 1, 1, m) * (t2 * make_rational(16));
    const CSeries T2 =
        to_cyc(lambert<Rational>(kOnes, 1, 1, 1, 1, m), L) * (t2 * make_rational(8));
    const CSeries T3 = lambert<Cyc>(cosq, 1, 1, 1, 1, m) * (t2 * make_rational(8));
    return e * e - (one_c(m) + T1 + T2 - T3);
}

AnySeries lemp_two_residual(long p, long ou) {
    const long m = ou + 1, L = kSepticLevel;
    const long r = 7 - 2 * p; // numerator of 1 - 2 alpha over 7
    const CSeries ea = epq_family('e', p, 7, L, m);
    const CSeries eb = epq_family('e', r, 7, L, m);
    const CSeries Pa = epq_family('P', p, 7, L, m);
    const CSeries Pb = epq_family('P', r, 7, L, m);
    const Cyc cota = ct(TrigKind::cot, p, 7, L), cotb = ct(TrigKind::cot, r, 7, L);
    const Cyc csca = ct(TrigKind::csc, p, 7, L), cscb = ct(TrigKind::csc, r, 7, L);
    const CSeries lhs = eb * cotb + ea * (cota * make_rational(2));
    const CSeries rhs = Pb * (cscb * cscb) + Pa * (csca * csca * make_rational(2)) -
                        to_cyc(eisenstein(2, 1, m), L);
    return lhs * lhs - rhs;
}

AnySeries ba_residual(int which, long p, long ou) {
    const long m = ou + 1, L = kSepticLevel;
    if (which == 1) {
        const CSeries e = epq_family('e', p, 7, L, m);
        const CSeries rhs = one_c(m) +
                            lambert<Cyc>(lemma_ba_seq(TrigSeqKind::delta, p, L), 1, 1, 1, 1, m) +
                            lambert<Cyc>(lemma_ba_seq(TrigSeqKind::lambda, p, L), 0, 2, 1, 1, m);
        return e * e - rhs;
    }
    const CSeries ea = epq_family('e', p, 7, L, m);
    const CSeries eb = epq_family('e', 7 - 2 * p, 7, L, m);
    const CSeries rhs = one_c(m) +
                        lambert<Cyc>(lemma_ba_seq(TrigSeqKind::kappa, p, L), 1, 1, 1, 1, m) +
                        lambert<Cyc>(lemma_ba_seq(TrigSeqKind::mu, p, L), 0, 2, 1, 1, m);
    return ea * eb - rhs;
}

AnySeries mainthm_residual(char eq, long p, long N, long ou) {
    const long L = std::lcm<long>(4, 2 * N);
    const long m = ou + 1;
    const long r = N - 2 * p; // numerator of 1 - 2 alpha over N (reduced inside epq_family)
    const CSeries e = epq_family('e', p, N, L, m);
    const CSeries P = epq_family('P', p, N, L, m);
    const CSeries Q = epq_family('Q', p, N, L, m);
    const Cyc csc1 = ct(TrigKind::csc, p, N, L);
    const Cyc c1sq = csc1 * csc1;
    const Cyc cot1 = ct(TrigKind::cot, p, N, L);
    if (eq == 'e') return e.theta().scaled(4) - (e * P - Q) * c1sq;
    const CSeries eb = epq_family('e', r, N, L, m);
    const Cyc cot2 = ct(TrigKind::cot, 2 * p, N, L);
    if (eq == 'p') {
        const CSeries rhs = P * P * c1sq - e * Q * (cot1 * cot1 * make_rational(2)) +
                            eb * Q * (cot1 * cot2 * make_rational(2));
        return P.theta().scaled(4) - rhs;
    }
    const CSeries Pb = epq_family('P', r, N, L, m);
    const Cyc csc2 = ct(TrigKind::csc, 2 * p, N, L);
    const CSeries rhs = Q * P * c1sq + Pb * Q * (csc2 * csc2 * make_rational(2)) -
                        eb * eb * Q * (cot2 * cot2 * make_rational(2)) +
                        e * eb * Q * (cot1 * cot2 * make_rational(6)) -
                        e * e * Q * (cot1 * cot1 * make_rational(4));
    return Q.theta().scaled(4) - rhs;
}

AnySeries quintic_residual(char eq, long ou) {
    const long m = ou + 2;
    const RSeries A = RS("quintic.A", m), B = RS("quintic.B", m);
    const RSeries P = eisenstein(2, 5, m);
    const RSeries A5 = A.pow(5), B5 = B.pow(5);
    const RSeries A10 = A5 * A5, B10 = B5 * B5;
    if (eq == 'a') {
        const RSeries rhs = B10.scaled(7) - A10.scaled(5) - (A5 * B5).scaled(66) + P.scaled(5);
        return A.theta().scaled(60) - A * rhs;
    }
    if (eq == 'b') {
        const RSeries rhs = A10.scaled(7) - B10.scaled(5) + (A5 * B5).scaled(66) + P.scaled(5);
        return B.theta().scaled(60) - B * rhs;
    }
    const RSeries rhs = P * P - B10 * B10 + (B10 * B5 * A5).scaled(12) -
                        (B10 * A10).scaled(14) - (B5 * A10 * A5).scaled(12) - A10 * A10;
    return P.theta().scaled(12) - rhs.scaled(5);
}

AnySeries cubic_residual(char eq, long ou) {
    const long m = ou + 2;
    const RSeries a = cubic_theta('a', m), b = cubic_theta('b', m);
    const RSeries P = std::get<RSeries>(named_series("cubic.P", m));
    const RSeries b3 = b.pow(3);
    if (eq == 'a') return a.theta().scaled(3) - (a * P - b3);
    if (eq == 'p') return P.theta().scaled(3) - (P * P - a * b3);
    return b3.theta() - (P * b3 - a * a * b3);
}

AnySeries liu_residual(int k, long ou) {
    const long m = ou + 3;
    const Cyc I = Cyc::imaginary_unit(4);
    const CSeries T1 = CS("theta1.k1", m), T2 = CS("theta1.k2", m), T3 = CS("theta1.k3", m);
    const CSeries tp = to_cyc(RS("theta1prime.q7", m), 4);
    const RSeries S1 = liu_logderiv_core(1, m), S2 = liu_logderiv_core(2, m),
                  S3 = liu_logderiv_core(3, m);
    switch (k) {
    case 1: {
        const CSeries lhs = CSeries::monomial(Cyc(1), -8, 8, 8 * m) * tp * T2;
        const CSeries rhs =
            to_cyc(S1 - S2 - S3.scaled(2), 4) * I - one_c(m) * (I * make_rational(2));
        return lhs - rhs * (T3 * T3);
    }
    case 2: {
        const CSeries lhs = CSeries::monomial(Cyc(1), -4, 8, 8 * m) * tp * T1;
        const CSeries rhs = to_cyc(S1 - S2.scaled(2) + S3, 4) * I;
        return lhs - rhs * (T2 * T2);
    }
    case 3: {
        const CSeries lhs = CSeries::monomial(Cyc(1), 4, 8, 8 * m) * tp * T3;
        const CSeries rhs =
            to_cyc(S1.scaled(2) + S2 + S3, 4) * I + one_c(m) * (I * make_rational(2));
        return lhs - rhs * (T1 * T1);
    }
    }
    throw usage_error("bad index");
}

AnySeries liu_xyz_residual(char which, long ou) {
    const long m = ou + 1;
    const RSeries S1 = liu_logderiv_core(1, m), S2 = liu_logderiv_core(2, m),
                  S3 = liu_logderiv_core(3, m);
    switch (which) {
    case 'x': return RS("x", m).scaled(2) - one_r(m).scaled(2) + S1 - S2 - S3.scaled(2);
    case 'y': return RS("y", m).scaled(2) + S1 - S2.scaled(2) + S3;
    case 'z':
        return RS("z", m).scaled(2) + one_r(m).scaled(2) + S1.scaled(2) + S2 + S3;
    }
    throw usage_error("bad symbol");
}

CSeries cyc_residual_from(const std::vector<Cyc>& diffs, long ou) {
    const long m = std::max<long>(ou, static_cast<long>(diffs.size())) + 1;
    std::vector<Cyc> c(static_cast<std::size_t>(m), Cyc(0));
    std::copy(diffs.begin(), diffs.end(), c.begin());
    return CSeries::from_coeffs(std::move(c), 0, 1, m);
}

RSeries rat_residual_from(const std::vector<Rational>& diffs, long ou) {
    const long m = std::max<long>(ou, static_cast<long>(diffs.size())) + 1;
    std::vector<Rational> c(static_cast<std::size_t>(m), Rational(0));
    std::copy(diffs.begin(), diffs.end(), c.begin());
    return RSeries::from_coeffs(std::move(c), 0, 1, m);
}

std::vector<CheckDef> build_registry() {
    std::vector<CheckDef> v;
    auto add = [&v](std::string name, std::string anchor, long ord,
                    std::function<AnySeries(long, long)> fn) {
        v.push_back(CheckDef{std::move(name), std::move(anchor), ord, 1, std::move(fn)});
    };

    // Klein quartic relation and its quadratic reformulations
    add("septic.klein.quartic", "a^3 b + b^3 c + c^3 a = 0 for the septic theta functions", 10,
        [](long on, long od) -> AnySeries {
            const long m = cdiv(on, od) + 1;
            const RSeries a = RS("septic.a", m), b = RS("septic.b", m), c = RS("septic.c", m);
            return a.pow(3) * b + b.pow(3) * c + c.pow(3) * a;
        });
    add("septic.klein.xyz", "x y - x z + y z = 0", 200, [](long on, long od) -> AnySeries {
        RSeries x, y, z;
        get_xyz(cdiv(on, od) + 1, x, y, z);
        return x * y - x * z + y * z;
    });
    for (int k = 0; k < 3; ++k) {
        static const char* names[3] = {"septic.klein.d12", "septic.klein.d13",
                                       "septic.klein.d23"};
        static const char* anchors[3] = {"D1 - D2 = y z", "D1 - D3 = x z", "D2 - D3 = x y"};
        add(names[k], anchors[k], 100, [k](long on, long od) -> AnySeries {
            const long m = cdiv(on, od) + 1;
            RSeries x, y, z;
            get_xyz(m, x, y, z);
            const RSeries d1 = RS("D1", m), d2 = RS("D2", m), d3 = RS("D3", m);
            if (k == 0) return d1 - d2 - y * z;
            if (k == 1) return d1 - d3 - x * z;
            return d2 - d3 - x * y;
        });
    }

    // Lambert representations
    for (char s : {'x', 'y', 'z'}) {
        add(std::string("septic.lambert.") + s,
            std::string(1, s) + " as eta quotient equals its Lambert series form", 60,
            [s](long on, long od) -> AnySeries {
                const long m = cdiv(on, od) + 1;
                return RS(std::string(1, s), m) - RS(std::string(1, s) + ".lambert", m);
            });
    }
    for (int i = 0; i < 3; ++i) {
        static const char* names[3] = {"septic.lambert.edecomp.x", "septic.lambert.edecomp.y",
                                       "septic.lambert.edecomp.z"};
        add(names[i],
            "decomposition over e_{1/7}, e_{2/7}, e_{3/7} with exact cyclotomic constants", 40,
            [i](long on, long od) -> AnySeries { return edecomp_residual(i, cdiv(on, od)); });
    }
    add("septic.lambert.sigma", "weight-one Eisenstein series sigma = x - y + z", 60,
        [](long on, long od) -> AnySeries {
            const long m = cdiv(on, od) + 1;
            RSeries x, y, z;
            get_xyz(m, x, y, z);
            return RS("sigma", m) - (x - y + z);
        });
    add("septic.lambert.mip.ones",
        "period-7 rearrangement of sum q^n/(1-q^n)^2 for the constant sequence", 30,
        [](long on, long od) -> AnySeries {
            const long m = cdiv(on, od) + 1;
            return lambert<Rational>(kOnes, 0, 2, 1, 1, m) - mip_rhs(kOnes, m);
        });
    add("septic.lambert.mip.b",
        "period-7 rearrangement applied to the induced numerator sequence b_n", 30,
        [](long on, long od) -> AnySeries {
            const long m = cdiv(on, od) + 1;
            const PhiBundle b = phi_constants('x');
            return lambert<Rational>(b.bn, 0, 2, 1, 1, m) - mip_rhs(b.bn, m);
        });
    add("septic.lambert.collapse",
        "sum b_n q^n/(1-q^n)^2 collapses to -37 sum over n coprime to 7", 40,
        [](long on, long od) -> AnySeries {
            const long m = cdiv(on, od) + 1;
            const PhiBundle b = phi_constants('x');
            return lambert<Rational>(b.bn, 0, 2, 1, 1, m) + lambert_n_coprime7(m).scaled(37);
        });

    // the septic differential system
    for (char s : {'x', 'y', 'z'}) {
        add(std::string("septic.system.") + s,
            std::string("12 q d") + s + "/dq = " + s + " (quadratic + 7 P)", 60,
            [s](long on, long od) { return septic_system_residual(s, cdiv(on, od)); });
        add(std::string("septic.system.lambert.") + s,
            std::string("quadratic for ") + s + " equals its Lambert form with the period-7 table",
            60, [s](long on, long od) { return septic_lambert_residual(s, cdiv(on, od)); });
    }
    add("septic.system.p", "12 q dP/dq = 7 (P^2 - quartic in x, y, z)", 60,
        [](long on, long od) -> AnySeries {
            const long m = cdiv(on, od) + 2;
            RSeries x, y, z;
            get_xyz(m, x, y, z);
            const RSeries P = eisenstein(2, 7, m);
            return P.theta().scaled(12) -
                   (P * P + poly_xyz(kSysPQuartic, x, y, z)).scaled(7);
        });
    add("septic.system.e4bridge", "E4(q^7) as a quartic in x, y, z", 40,
        [](long on, long od) -> AnySeries {
            const long m = cdiv(on, od) + 2;
            RSeries x, y, z;
            get_xyz(m, x, y, z);
            return eisenstein(4, 7, m) - poly_xyz(kE4Bridge, x, y, z);
        });
    add("septic.system.closing",
        "difference of the two E4(q^7) quartics is 8(xy - xz + yz)(x^2 + y^2 + z^2)", 40,
        [](long on, long od) -> AnySeries {
            const long m = cdiv(on, od) + 2;
            RSeries x, y, z;
            get_xyz(m, x, y, z);
            const RSeries klein = x * y - x * z + y * z;
            const RSeries s2 = x * x + y * y + z * z;
            return poly_xyz(kFinaE4q7, x, y, z) - poly_xyz(kE4Bridge, x, y, z) -
                   (klein * s2).scaled(8);
        });

    // Eisenstein parameterizations
    add("eisenstein.hauptmodul", "j7 = (z^2 - xz - y^2 - 6yz)/(yz)", 50,
        [](long on, long od) -> AnySeries {
            const long m = cdiv(on, od) + 3;
            RSeries x, y, z;
            get_xyz(m, x, y, z);
            return RS("j7", m) * y * z - poly_xyz(kHauptRhs, x, y, z);
        });
    add("eisenstein.elkies", "j7 = (ab^5 + bc^5 + ca^5 - 5a^2b^2c^2)/(a^2b^2c^2), septic a, b, c",
        50, [](long on, long od) -> AnySeries {
            const long m = cdiv(on, od) + 2;
            const RSeries a = RS("septic.a", m), b = RS("septic.b", m), c = RS("septic.c", m);
            const RSeries abc2 = (a * b * c).pow(2);
            const RSeries j7 = RS("j7", m).lifted(56);
            return j7 * abc2 -
                   (a * b.pow(5) + b * c.pow(5) + c * a.pow(5) - abc2.scaled(5));
        });
    add("eisenstein.ring2.xyz", "q^2 (q^7;q^7)^7/(q;q) = x y z", 50,
        [](long on, long od) -> AnySeries {
            const long m = cdiv(on, od) + 2;
            RSeries x, y, z;
            get_xyz(m, x, y, z);
            return eta_quotient(1, 2, {{7, 7, 7}, {1, 1, -1}}, 1, m) - x * y * z;
        });
    add("eisenstein.ring2.cubeprod", "q (q;q)^3 (q^7;q^7)^3 = x(z^2 - y^2 + 6xy - 7xz)", 50,
        [](long on, long od) -> AnySeries {
            const long m = cdiv(on, od) + 2;
            RSeries x, y, z;
            get_xyz(m, x, y, z);
            return eta_quotient(1, 1, {{1, 1, 3}, {7, 7, 3}}, 1, m) -
                   poly_xyz(kCubeProdRhs, x, y, z);
        });
    add("eisenstein.ring2.z7", "(q;q)^7/(q^7;q^7) as a cubic in x, y, z", 50,
        [](long on, long od) -> AnySeries {
            const long m = cdiv(on, od) + 2;
            RSeries x, y, z;
            get_xyz(m, x, y, z);
            return RS("Z", m) - poly_xyz(kZ7Rhs, x, y, z);
        });
    {
        struct CTSpec {
            const char* name;
            const char* anchor;
            int weight;
            int power;
            std::vector<long> poly; // coefficients of X^0, X^1, ...
            int zpow;
            bool sigma;
        };
        static const std::vector<CTSpec> specs = {
            {"eisenstein.coopt.e4", "E4(q) = Z sigma (1 + 245 X + 2401 X^2)", 4, 1,
             {1, 245, 2401}, 1, true},
            {"eisenstein.coopt.e4q7", "E4(q^7) = Z sigma (1 + 5 X + X^2)", 4, 7, {1, 5, 1}, 1,
             true},
            {"eisenstein.coopt.e6",
             "E6(q) = Z^2 (1 - 490 X - 21609 X^2 - 235298 X^3 - 823543 X^4)", 6, 1,
             {1, -490, -21609, -235298, -823543}, 2, false},
            {"eisenstein.coopt.e6q7", "E6(q^7) = Z^2 (1 + 14 X + 63 X^2 + 70 X^3 - 7 X^4)", 6, 7,
             {1, 14, 63, 70, -7}, 2, false}};
        for (const auto& sp : specs)
            add(sp.name, sp.anchor, 40, [&sp](long on, long od) -> AnySeries {
                const long m = cdiv(on, od) + 2;
                const RSeries Zs = RS("Z", m), Xs = RS("X", m);
                RSeries acc = one_r(m).scaled(sp.poly[0]);
                for (std::size_t i = 1; i < sp.poly.size(); ++i)
                    acc = acc + Xs.pow(static_cast<long>(i)).scaled(sp.poly[i]);
                RSeries rhs = Zs.pow(sp.zpow) * acc;
                if (sp.sigma) rhs = rhs * RS("sigma", m);
                return eisenstein(sp.weight, sp.power, m) - rhs;
            });
    }
    {
        struct FinaSpec {
            const char* name;
            const char* anchor;
            int weight;
            int power;
            const std::vector<M3>* poly;
        };
        static const std::vector<FinaSpec> specs = {
            {"eisenstein.fina.e4", "symmetric quartic for E4(q)", 4, 1, &kFinaE4},
            {"eisenstein.fina.e4q7", "symmetric quartic for E4(q^7)", 4, 7, &kFinaE4q7},
            {"eisenstein.fina.e6", "symmetric sextic for E6(q)", 6, 1, &kFinaE6},
            {"eisenstein.fina.e6q7", "symmetric sextic for E6(q^7)", 6, 7, &kFinaE6q7}};
        for (const auto& sp : specs)
            add(sp.name, sp.anchor, 40, [&sp](long on, long od) -> AnySeries {
                const long m = cdiv(on, od) + 2;
                RSeries x, y, z;
                get_xyz(m, x, y, z);
                return eisenstein(sp.weight, sp.power, m) - poly_xyz(*sp.poly, x, y, z);
            });
    }

    // classical systems
    add("classical.ramanujan.e2", "12 q dE2/dq = E2^2 - E4", 80,
        [](long on, long od) { return ramanujan_residual(2, cdiv(on, od)); });
    add("classical.ramanujan.e4", "3 q dE4/dq = E2 E4 - E6", 80,
        [](long on, long od) { return ramanujan_residual(4, cdiv(on, od)); });
    add("classical.ramanujan.e6", "2 q dE6/dq = E2 E6 - E4^2", 80,
        [](long on, long od) { return ramanujan_residual(6, cdiv(on, od)); });
    for (long p = 1; p <= 3; ++p) {
        const std::string suf = ".k" + std::to_string(p) + "_7";
        add("classical.lemp.one" + suf, "Lambert expansion of e_a^2 at a = " + std::to_string(p) +
                                            "/7", 30,
            [p](long on, long od) { return lemp_one_residual(p, cdiv(on, od)); });
        add("classical.lemp.two" + suf,
            "squared cotangent combination vs P parameters at a = " + std::to_string(p) + "/7", 30,
            [p](long on, long od) { return lemp_two_residual(p, cdiv(on, od)); });
        add("classical.ba.db1" + suf,
            "e_a^2 via the delta/lambda sequences at a = " + std::to_string(p) + "/7", 30,
            [p](long on, long od) { return ba_residual(1, p, cdiv(on, od)); });
        add("classical.ba.db2" + suf,
            "e_a e_{1-2a} via the kappa/mu sequences at a = " + std::to_string(p) + "/7", 30,
            [p](long on, long od) { return ba_residual(2, p, cdiv(on, od)); });
    }

    // the general differential system
    {
        static const std::pair<long, long> alphas[] = {{1, 7}, {2, 7}, {3, 7}, {1, 3}, {1, 5}};
        for (const auto& [p, N] : alphas) {
            const std::string suf = std::to_string(p) + "_" + std::to_string(N);
            for (char eq : {'e', 'p', 'q'}) {
                add("general.mainthm." + suf + "." + eq,
                    std::string("differential equation for ") +
                        (eq == 'e' ? "e" : eq == 'p' ? "P" : "Q") + "_a at a = " +
                        std::to_string(p) + "/" + std::to_string(N),
                    25, [eq, p, N](long on, long od) {
                        return mainthm_residual(eq, p, N, cdiv(on, od));
                    });
            }
        }
    }

    // quintic and cubic analogues
    add("quintic.a", "60 q dA/dq = A (7B^10 - 5A^10 - 66A^5B^5 + 5 P)", 30,
        [](long on, long od) { return quintic_residual('a', cdiv(on, od)); });
    add("quintic.b", "60 q dB/dq = B (7A^10 - 5B^10 + 66A^5B^5 + 5 P)", 30,
        [](long on, long od) { return quintic_residual('b', cdiv(on, od)); });
    add("quintic.p", "12 q dP/dq = 5 (P^2 - B^20 + 12B^15A^5 - 14B^10A^10 - 12B^5A^15 - A^20)", 30,
        [](long on, long od) { return quintic_residual('p', cdiv(on, od)); });
    add("cubic.a", "3 q da/dq = a P - b^3 for the cubic theta functions", 40,
        [](long on, long od) { return cubic_residual('a', cdiv(on, od)); });
    add("cubic.p", "3 q dP/dq = P^2 - a b^3", 40,
        [](long on, long od) { return cubic_residual('p', cdiv(on, od)); });
    add("cubic.b3", "q d(b^3)/dq = P b^3 - a^2 b^3", 40,
        [](long on, long od) { return cubic_residual('b', cdiv(on, od)); });

    // theta products and Liu's identities
    for (int k = 1; k <= 3; ++k) {
        add("products.jtp.k" + std::to_string(k),
            "bilateral sum of theta_1(" + std::to_string(k) +
                " pi tau | q^7) equals its triple product form",
            20, [k](long on, long od) -> AnySeries {
                const long m = cdiv(on, od) + 1;
                return CS("theta1.k" + std::to_string(k) + ".sum", m) -
                       CS("theta1.k" + std::to_string(k), m);
            });
        add("products.liu.yu" + std::to_string(k),
            "Liu identity " + std::to_string(k) + " for theta quotients at the septic nome", 20,
            [k](long on, long od) { return liu_residual(k, cdiv(on, od)); });
    }
    for (char s : {'x', 'y', 'z'}) {
        add(std::string("products.liu.") + s,
            std::string("Lambert reformulation of ") + s + " from the Liu log-derivatives", 20,
            [s](long on, long od) { return liu_xyz_residual(s, cdiv(on, od)); });
    }

    // exact constant tables
    add("constants.efund", "nine expansion constants: closed forms vs Fourier derivation", 9,
        [](long on, long od) -> AnySeries {
            const SepticConstants c = efund_constants();
            std::vector<Cyc> d;
            for (int i = 0; i < 3; ++i) d.push_back(c.alphas[i] - c.alphas_dft[i]);
            for (int i = 0; i < 3; ++i) d.push_back(c.betas[i] - c.betas_dft[i]);
            for (int i = 0; i < 3; ++i) d.push_back(c.gammas[i] - c.gammas_dft[i]);
            return cyc_residual_from(d, cdiv(on, od));
        });
    add("constants.phi.sum", "Phi_1 + ... + Phi_6 = 5", 1, [](long on, long od) -> AnySeries {
        const PhiBundle b = phi_constants('x');
        return rat_residual_from({b.phi_sum - 5}, cdiv(on, od));
    });
    add("constants.phi.an", "induced sequence a_n = {0, 37, 25, 61, 61, 25, 37}", 7,
        [](long on, long od) -> AnySeries {
            const PhiBundle b = phi_constants('x');
            static const long expect[7] = {0, 37, 25, 61, 61, 25, 37};
            std::vector<Rational> d;
            for (long n = 0; n < 7; ++n) d.push_back(b.an.at(n) - expect[n]);
            return rat_residual_from(d, cdiv(on, od));
        });
    add("constants.phi.bn", "induced sequence b_n = {222, -37, ..., -37}", 7,
        [](long on, long od) -> AnySeries {
            const PhiBundle b = phi_constants('x');
            std::vector<Rational> d;
            for (long n = 0; n < 7; ++n) d.push_back(b.bn.at(n) - (n == 0 ? 222 : -37));
            return rat_residual_from(d, cdiv(on, od));
        });
    add("constants.fgh", "period-7 weight tables f, g, h recovered from the log-derivatives", 21,
        [](long on, long od) -> AnySeries {
            const long m = 20;
            RSeries x, y, z;
            get_xyz(m, x, y, z);
            std::vector<Rational> d;
            const char tabs[3] = {'f', 'g', 'h'};
            const RSeries* ws[3] = {&x, &y, &z};
            for (int i = 0; i < 3; ++i) {
                const RSeries t = ws[i]->theta() * ws[i]->inv();
                const PeriodicSeq<Rational> rec = recover_period7_weights(t);
                const PeriodicSeq<Rational> exp = gh1_sequence(tabs[i]);
                for (long n = 0; n < 7; ++n) d.push_back(rec.at(n) - exp.at(n));
            }
            return rat_residual_from(d, cdiv(on, od));
        });

    std::sort(v.begin(), v.end(),
              [](const CheckDef& a, const CheckDef& b) { return a.name < b.name; });
    return v;
}

} // namespace

const std::vector<CheckDef>& check_registry() {
    static const std::vector<CheckDef> reg = build_registry();
    return reg;
}

std::vector<const CheckDef*> select_checks(const std::vector<std::string>& patterns) {
    const auto& reg = check_registry();
    std::vector<const CheckDef*> out;
    for (const auto& p : patterns) {
        bool matched = false;
        for (const auto& def : reg) {
            const bool hit = def.name == p ||
                             (def.name.size() > p.size() && def.name.compare(0, p.size(), p) == 0 &&
                              def.name[p.size()] == '.');
            if (hit) {
                if (std::find(out.begin(), out.end(), &def) == out.end()) out.push_back(&def);
                matched = true;
            }
        }
        if (!matched) throw usage_error("no check matches '" + p + "'");
    }
    std::sort(out.begin(), out.end(),
              [](const CheckDef* a, const CheckDef* b) { return a->name < b->name; });
    return out;
}

CheckResult run_check(const CheckDef& def, std::optional<std::pair<long, long>> order) {
    CheckResult r;
    r.name = def.name;
    r.order_num = order ? order->first : def.order_num;
    r.order_den = order ? order->second : def.order_den;
    const auto t0 = std::chrono::steady_clock::now();
    try {
        const AnySeries res = def.residual(r.order_num, r.order_den);
        ZeroWitness w;
        const bool ok = std::visit(
            [&](const auto& s) { return s.is_zero_to(r.order_num, r.order_den, &w); }, res);
        if (ok) {
            r.status = CheckStatus::pass;
        } else {
            r.status = CheckStatus::fail;
            r.first_failure = w;
        }
    } catch (const precision_error& e) {
        r.status = CheckStatus::precision_error;
        r.message = e.what();
    } catch (const error& e) {
        r.status = CheckStatus::precision_error;
        r.message = std::string("internal: ") + e.what();
    }
    const auto t1 = std::chrono::steady_clock::now();
    r.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
    return r;
}

Report run_checks(const std::vector<const CheckDef*>& defs,
                  std::optional<std::pair<long, long>> order, int jobs) {
    Report rep;
    rep.version = "0.1.0";
    rep.order_override = order;
    rep.results.resize(defs.size());
    const auto t0 = std::chrono::steady_clock::now();
    if (jobs < 1) jobs = 1;
    const int nthreads = std::min<int>(jobs, static_cast<int>(defs.size()));
    if (nthreads <= 1) {
        for (std::size_t i = 0; i < defs.size(); ++i)
            rep.results[i] = run_check(*defs[i], order);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(nthreads));
        for (int t = 0; t < nthreads; ++t)
            pool.emplace_back([&] {
                for (;;) {
                    const std::size_t i = next.fetch_add(1);
                    if (i >= defs.size()) return;
                    rep.results[i] = run_check(*defs[i], order);
                }
            });
        for (auto& th : pool) th.join();
    }
    const auto t1 = std::chrono::steady_clock::now();
    rep.total_elapsed_ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
    std::sort(rep.results.begin(), rep.results.end(),
              [](const CheckResult& a, const CheckResult& b) { return a.name < b.name; });
    for (const auto& r : rep.results) {
        switch (r.status) {
        case CheckStatus::pass: ++rep.pass_count; break;
        case CheckStatus::fail: ++rep.fail_count; break;
        case CheckStatus::precision_error: ++rep.precision_count; break;
        }
    }
    return rep;
}

} // namespace qseries
