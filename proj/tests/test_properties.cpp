#include <doctest.h>

#include <random>

#include "qseries/constructors.hpp"

using namespace qseries;

namespace {

constexpr int kCases = 120;

struct Gen {
    std::mt19937 rng{20240817};

    long pick(long lo, long hi) {
        return std::uniform_int_distribution<long>(lo, hi)(rng);
    }

    Rational rat() {
        const long num = pick(-9, 9);
        const long den = pick(1, 6);
        return make_rational(num, den);
    }

    RSeries series(long denom = 1) {
        const long lo = pick(-3, 3);
        const long len = pick(1, 14);
        std::vector<Rational> c;
        c.reserve(static_cast<std::size_t>(len));
        for (long i = 0; i < len; ++i) c.push_back(rat());
        return RSeries::from_coeffs(std::move(c), lo, denom, lo + len);
    }

    // constant term exactly 1, suitable for rational powers
    RSeries unit_series() {
        const long len = pick(4, 14);
        std::vector<Rational> c{Rational(1)};
        for (long i = 1; i < len; ++i) c.push_back(rat());
        return RSeries::from_coeffs(std::move(c), 0, 1, len);
    }

    // nonzero leading coefficient, invertible
    RSeries unit_lead_series() {
        RSeries s = series();
        while (s.known_range_empty()) s = series();
        return s;
    }

    Cyc cyc(long level) {
        Cyc acc(0);
        for (int t = 0; t < 3; ++t)
            acc += Cyc::zeta(level, pick(0, level - 1)) * rat();
        return acc;
    }
};

bool vanishes(const RSeries& d) { return d.is_zero_to(d.prec(), d.denom()); }

} // namespace

TEST_CASE("series ring laws") {
    Gen g;
    for (int i = 0; i < kCases; ++i) {
        const RSeries a = g.series(), b = g.series(), c = g.series();
        CHECK(vanishes((a + b) - (b + a)));
        CHECK(vanishes((a * b) - (b * a)));
        CHECK(vanishes(((a + b) + c) - (a + (b + c))));
        const RSeries l = (a * b) * c, r = a * (b * c);
        CHECK(vanishes(l - r));
        CHECK(vanishes((a * (b + c)) - (a * b + a * c)));
    }
}

TEST_CASE("Leibniz rule for the theta operator") {
    Gen g;
    for (int i = 0; i < kCases; ++i) {
        const RSeries a = g.series(g.pick(1, 3)), b = g.series(g.pick(1, 3));
        CHECK(vanishes((a * b).theta() - (a.theta() * b + a * b.theta())));
    }
}

TEST_CASE("rational power laws") {
    Gen g;
    for (int i = 0; i < kCases; ++i) {
        const RSeries f = g.unit_series();
        const long a = g.pick(-4, 4), b = g.pick(1, 4);
        const long c = g.pick(-4, 4), d = g.pick(1, 4);
        const RSeries lhs = f.pow_rational(a, b) * f.pow_rational(c, d);
        const RSeries rhs = f.pow_rational(a * d + c * b, b * d);
        CHECK(vanishes(lhs - rhs));
        // defining property: the b-th power recovers f^a
        const RSeries p = f.pow_rational(a, b).pow(b);
        CHECK(vanishes(p - f.pow(a)));
    }
}

TEST_CASE("inverse round-trips") {
    Gen g;
    for (int i = 0; i < kCases; ++i) {
        const RSeries f = g.unit_lead_series();
        const RSeries p = f * f.inv();
        const RSeries one = RSeries::monomial(1, 0, f.denom(), std::max<long>(p.prec(), 1));
        CHECK(vanishes(p - one));
        const RSeries back = f.inv().inv();
        CHECK(vanishes(back - f));
    }
}

TEST_CASE("substitution and derivative chain rule") {
    Gen g;
    for (int i = 0; i < kCases; ++i) {
        const RSeries f = g.series();
        const long j = g.pick(1, 5);
        const RSeries lhs = f.subst_pow(j).theta();
        const RSeries rhs = f.theta().subst_pow(j).scaled(j);
        CHECK(vanishes(lhs - rhs));
    }
}

TEST_CASE("cyclotomic field axioms") {
    Gen g;
    for (int i = 0; i < kCases; ++i) {
        const long level = i % 2 ? 12 : 28;
        const Cyc a = g.cyc(level), b = g.cyc(level), c = g.cyc(level);
        CHECK((a + b) * c == a * c + b * c);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a + (-a) == Cyc(0));
        if (!a.is_zero()) {
            CHECK(a * a.inv() == Cyc(1));
            CHECK(a / a == Cyc(1));
        }
    }
}

TEST_CASE("exact trig identities") {
    Gen g;
    for (int i = 0; i < kCases; ++i) {
        const long den = std::vector<long>{1, 2, 7, 14}[static_cast<std::size_t>(g.pick(0, 3))];
        const long num = g.pick(-20, 20);
        const Cyc s = trig_value(TrigKind::sin, num, den, 28);
        const Cyc c = trig_value(TrigKind::cos, num, den, 28);
        CHECK(s * s + c * c == Cyc(1));
        if (!c.is_zero()) CHECK(trig_value(TrigKind::tan, num, den, 28) == s / c);
        if (!s.is_zero()) CHECK(trig_value(TrigKind::csc, num, den, 28) * s == Cyc(1));
    }
}

TEST_CASE("kernel agreement on random series") {
    Gen g;
    for (int i = 0; i < 30; ++i) {
        const RSeries a = g.series(), b = g.series();
        set_conv_mode(ConvMode::serial);
        const RSeries ps = a * b;
        set_conv_mode(ConvMode::parallel);
        const RSeries pp = a * b;
        set_conv_mode(ConvMode::automatic);
        CHECK(vanishes(ps - pp));
        CHECK(ps.lo() == pp.lo());
        CHECK(ps.prec() == pp.prec());
    }
}
