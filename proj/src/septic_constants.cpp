#include "qseries/septic_constants.hpp"

#include <algorithm>

namespace qseries {

namespace {

Cyc trig(TrigKind k, long num, long den, long level = kSepticLevel) {
    return trig_value(k, num, den, level);
}

} // namespace

Cyc trig_seq_value(TrigSeqKind kind, long p, long N, long n, long level) {
    const Cyc t1 = trig(TrigKind::tan, p, N, level);
    switch (kind) {
    case TrigSeqKind::delta: {
        const Cyc s = trig(TrigKind::sin, n * p, N, level);
        return t1 * t1 * s * s * make_rational(16);
    }
    case TrigSeqKind::lambda:
        return t1 * t1 * trig(TrigKind::cos, 2 * n * p, N, level) * make_rational(16);
    case TrigSeqKind::kappa: {
        const Cyc t2 = trig(TrigKind::tan, 2 * p, N, level);
        const Cyc s = trig(TrigKind::sin, n * p, N, level);
        return t1 * t2 * s * s * make_rational(8);
    }
    case TrigSeqKind::mu: {
        const Cyc t2 = trig(TrigKind::tan, 2 * p, N, level);
        const Cyc c2 = trig(TrigKind::cos, 2 * n * p, N, level);
        const Cyc c4 = trig(TrigKind::cos, 4 * n * p, N, level);
        return t1 * t2 * (c2 * make_rational(4) + c4) * make_rational(4);
    }
    }
    throw usage_error("trig_seq_value: unknown kind");
}

FourierTriple dft_sine(const PeriodicSeq<Rational>& seq) {
    if (seq.period() != 7) throw usage_error("dft_sine: sequence must have period 7");
    for (long k = 0; k < 7; ++k)
        if (seq.at(k) != -seq.at(7 - k))
            throw usage_error("dft_sine: sequence is not odd modulo 7");
    FourierTriple out;
    for (long m = 1; m <= 3; ++m) {
        Cyc acc(0);
        for (long k = 0; k < 7; ++k) {
            if (sgn(seq.at(k)) == 0) continue;
            acc += trig(TrigKind::sin, 2 * m * k, 7) * seq.at(k);
        }
        Cyc l = acc * make_rational(2, 7);
        (m == 1 ? out.l1 : m == 2 ? out.l2 : out.l3) = l;
    }
    return out;
}

SepticConstants efund_constants() {
    SepticConstants c;

    const Cyc s1_14 = trig(TrigKind::sin, 1, 14);
    const Cyc s3_14 = trig(TrigKind::sin, 3, 14);
    const Cyc c1_7 = trig(TrigKind::cos, 1, 7);
    const Cyc c3_14 = trig(TrigKind::cos, 3, 14);
    const Cyc csc1_7 = trig(TrigKind::csc, 1, 7);
    const Cyc csc1_14 = trig(TrigKind::csc, 1, 14);
    const Cyc csc3_14 = trig(TrigKind::csc, 3, 14);
    const Cyc one(1);

    c.alphas[0] = (one - c3_14 * csc1_7 * make_rational(3)) * make_rational(1, 14);
    c.alphas[1] = (one + s3_14 * make_rational(6)) * make_rational(1, 14);
    c.alphas[2] = (one - s1_14 * make_rational(6)) * make_rational(1, 14);

    c.betas[0] = (Cyc(4) - csc1_14 * (Cyc(2) + csc3_14)) * make_rational(1, 56);
    c.betas[1] = (one + s3_14 * make_rational(4) - c1_7 * make_rational(2)) * make_rational(1, 14);
    c.betas[2] = (Cyc(2) - s1_14 * make_rational(4) + csc3_14) * make_rational(1, 28);

    c.gammas[0] = (Cyc(4) + csc1_14 * (Cyc(3) + csc3_14)) * make_rational(1, 28);
    c.gammas[1] = (one - s3_14 * make_rational(5) + c1_7 * make_rational(3)) * make_rational(1, 7);
    c.gammas[2] = (Cyc(4) + s1_14 * make_rational(8) - csc3_14 * make_rational(3)) * make_rational(1, 28);

    const char seqs[3] = {'a', 'b', 'c'};
    std::array<Cyc, 3>* dst[3] = {&c.alphas_dft, &c.betas_dft, &c.gammas_dft};
    for (int i = 0; i < 3; ++i) {
        const FourierTriple l = dft_sine(gh1_sequence(seqs[i]));
        const Cyc ls[3] = {l.l1, l.l2, l.l3};
        for (long j = 1; j <= 3; ++j)
            (*dst[i])[static_cast<std::size_t>(j - 1)] =
                ls[j - 1] / (trig(TrigKind::tan, j, 7) * make_rational(4));
    }
    return c;
}

PhiBundle phi_constants(char equation) {
    // symmetric coefficient matrix of the quadratic in (x, y, z)
    long M[3][3];
    switch (equation) {
    case 'x': {
        // -7x^2 + 5y^2 + 5z^2 - 52xy - 20yz
        long m[3][3] = {{-7, -26, 0}, {-26, 5, -10}, {0, -10, 5}};
        std::copy(&m[0][0], &m[0][0] + 9, &M[0][0]);
        break;
    }
    case 'y': {
        // 5x^2 - 7y^2 + 5z^2 + 20xz - 52yz
        long m[3][3] = {{5, 0, 10}, {0, -7, -26}, {10, -26, 5}};
        std::copy(&m[0][0], &m[0][0] + 9, &M[0][0]);
        break;
    }
    case 'z': {
        // 5x^2 + 5y^2 - 7z^2 - 20xy + 52xz
        long m[3][3] = {{5, -10, 26}, {-10, 5, 0}, {26, 0, -7}};
        std::copy(&m[0][0], &m[0][0] + 9, &M[0][0]);
        break;
    }
    default: throw usage_error("phi_constants: equation must be x, y, or z");
    }

    const SepticConstants c = efund_constants();
    // v_j = coefficient vector of e_{j/7} in (x, y, z)
    std::array<std::array<Cyc, 3>, 3> v;
    for (int j = 0; j < 3; ++j)
        v[static_cast<std::size_t>(j)] = {c.alphas[static_cast<std::size_t>(j)],
                                          c.betas[static_cast<std::size_t>(j)],
                                          c.gammas[static_cast<std::size_t>(j)]};

    auto bilinear = [&](const std::array<Cyc, 3>& u, const std::array<Cyc, 3>& w) {
        Cyc acc(0);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                acc += u[static_cast<std::size_t>(i)] * w[static_cast<std::size_t>(j)] *
                       make_rational(M[i][j]);
        return acc;
    };

    PhiBundle b;
    b.phi[0] = bilinear(v[0], v[0]);
    b.phi[1] = bilinear(v[1], v[1]);
    b.phi[2] = bilinear(v[2], v[2]);
    b.phi[3] = bilinear(v[0], v[1]) * make_rational(2);
    b.phi[4] = bilinear(v[0], v[2]) * make_rational(2);
    b.phi[5] = bilinear(v[1], v[2]) * make_rational(2);

    Cyc sum(0);
    for (const Cyc& p : b.phi) sum += p;
    if (!sum.is_rational()) throw error("phi_constants: non-rational phi sum");
    b.phi_sum = sum.rational_part();

    // e_{j/7} e_{k/7} is an instance of e_a e_{1-2a}: (1,2) at a=1/7,
    // (1,3) at a=3/7, (2,3) at a=2/7
    const long cross_alpha[3] = {1, 3, 2};
    for (long n = 0; n < 7; ++n) {
        Cyc an(0), bn(0);
        for (long k = 1; k <= 3; ++k) {
            an += b.phi[static_cast<std::size_t>(k - 1)] *
                  trig_seq_value(TrigSeqKind::delta, k, 7, n);
            bn += b.phi[static_cast<std::size_t>(k - 1)] *
                  trig_seq_value(TrigSeqKind::lambda, k, 7, n);
        }
        for (int r = 0; r < 3; ++r) {
            an += b.phi[static_cast<std::size_t>(3 + r)] *
                  trig_seq_value(TrigSeqKind::kappa, cross_alpha[r], 7, n);
            bn += b.phi[static_cast<std::size_t>(3 + r)] *
                  trig_seq_value(TrigSeqKind::mu, cross_alpha[r], 7, n);
        }
        if (!an.is_rational() || !bn.is_rational())
            throw error("phi_constants: non-rational induced sequence at n = " +
                        std::to_string(n));
        b.an.values.push_back(an.rational_part());
        b.bn.values.push_back(bn.rational_part());
    }
    return b;
}

PeriodicSeq<Rational> recover_period7_weights(const RSeries& t) {
    if (t.denom() != 1 || t.prec() < 15)
        throw usage_error("weight recovery needs an integer-exponent series through q^14");
    std::array<Rational, 15> w;
    w[0] = 0;
    for (long n = 1; n <= 14; ++n) {
        Rational acc = t.coeff(n);
        for (long d = 1; d < n; ++d)
            if (n % d == 0) acc -= w[static_cast<std::size_t>(d)] * d;
        acc /= n;
        w[static_cast<std::size_t>(n)] = acc;
    }
    for (long d = 1; d <= 7; ++d)
        if (w[static_cast<std::size_t>(d)] != w[static_cast<std::size_t>(d + 7)])
            throw error("weight table is not 7-periodic at d = " + std::to_string(d));
    PeriodicSeq<Rational> out;
    out.values.push_back(w[7]);
    for (long r = 1; r <= 6; ++r) out.values.push_back(w[static_cast<std::size_t>(r)]);
    return out;
}

} // namespace qseries
