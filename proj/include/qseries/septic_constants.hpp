#pragma once

#include <array>

#include "qseries/constructors.hpp"
#include "qseries/cyclotomic.hpp"

namespace qseries {

inline constexpr long kSepticLevel = 28;

// The four coefficient sequences attached to squares and cross products of
// the e parameters, at alpha = p/N:
//   delta(n)  = 16 tan^2(pi a) sin^2(pi n a)
//   lambda(n) = 16 tan^2(pi a) cos(2 pi n a)
//   kappa(n)  =  8 tan(pi a) tan(2 pi a) sin^2(pi n a)
//   mu(n)     =  4 tan(pi a) tan(2 pi a) (4 cos(2 pi n a) + cos(4 pi n a))
enum class TrigSeqKind { delta, lambda, kappa, mu };

Cyc trig_seq_value(TrigSeqKind kind, long p, long N, long n, long level = kSepticLevel);

struct FourierTriple {
    Cyc l1, l2, l3;
};

// l_m = (2/7) sum_{k=0}^{6} seq(k) sin(2 pi m k / 7); requires an odd
// period-7 sequence (seq(k) = -seq(7-k))
FourierTriple dft_sine(const PeriodicSeq<Rational>& seq);

// The nine expansion constants of x, y, z over e_{1/7}, e_{2/7}, e_{3/7},
// computed two independent ways: printed closed forms via exact trig values,
// and l_j / (4 tan(j pi / 7)) from the Fourier analysis of the Lambert
// numerator sequences.
struct SepticConstants {
    std::array<Cyc, 3> alphas, betas, gammas;             // closed forms
    std::array<Cyc, 3> alphas_dft, betas_dft, gammas_dft; // DFT derivation
};

SepticConstants efund_constants();

struct PhiBundle {
    // coefficients of e1^2, e2^2, e3^2, e1 e2, e1 e3, e2 e3
    std::array<Cyc, 6> phi;
    // the induced period-7 numerators of the n q^n/(1-q^n) and q^n/(1-q^n)^2
    // parts; proven rational, demoted
    PeriodicSeq<Rational> an, bn;
    Rational phi_sum;
};

// expansion of the quadratic on the right of the x, y, or z equation as a
// degree-two polynomial in the e parameters, derived generically from the
// quadratic's coefficient matrix
PhiBundle phi_constants(char equation = 'x');

// Given T = c + sum_{n>=1} t(n) q^n with t(n) = sum_{d|n} d w(d), recover
// the weight table {w(0), ..., w(6)} with w(0) the value at multiples of 7.
// Throws if w is not 7-periodic through d = 14.
PeriodicSeq<Rational> recover_period7_weights(const RSeries& t);

} // namespace qseries
