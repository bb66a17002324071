#include <doctest.h>

#include "qseries/constructors.hpp"

using namespace qseries;

namespace {

RSeries geom(long n) {
    std::vector<Rational> c(static_cast<std::size_t>(n), Rational(1));
    return RSeries::from_coeffs(std::move(c), 0, 1, n);
}

RSeries one_minus_q(long prec) {
    return RSeries::monomial(1, 0, 1, prec) - RSeries::monomial(1, 1, 1, prec);
}

} // namespace

TEST_CASE("monomials and basic shape") {
    const RSeries c1 = RSeries::monomial(1, 0, 1, 10);
    CHECK(c1.denom() == 1);
    CHECK(c1.lo() == 0);
    CHECK(c1.prec() == 10);
    CHECK(c1.coeff(0) == 1);
    CHECK(c1.coeff(9) == 0);

    const RSeries qinv = RSeries::monomial(1, -1, 1, 5);
    CHECK(qinv.lo() == -1);
    CHECK(qinv.coeff(-1) == 1);

    const RSeries pre = RSeries::monomial(1, 49, 56, 100); // q^{49/56} = q^{7/8}
    CHECK(pre.coeff(49, 56) == 1);
    CHECK(pre.coeff(7, 8) == 1);
    const RSeries red = pre.reduced();
    CHECK(red.denom() == 8);
    CHECK(red.lo() == 7);
}

TEST_CASE("multiplication") {
    const long n = 9;
    const RSeries p = one_minus_q(n) * geom(n);
    CHECK(p.prec() == n);
    CHECK(p.coeff(0) == 1);
    for (long k = 1; k < n; ++k) CHECK(p.coeff(k) == 0);

    const RSeries h = RSeries::monomial(1, 1, 2, 8);
    const RSeries q1 = (h * h).reduced();
    CHECK(q1.denom() == 1);
    CHECK(q1.coeff(1) == 1);

    const RSeries f = RSeries::from_coeffs({1, 2, 3}, 0, 1, 3);
    const RSeries f2 = f * f;
    CHECK(f2.prec() == 3);
    CHECK(f2.coeff(0) == 1);
    CHECK(f2.coeff(1) == 4);
    CHECK(f2.coeff(2) == 10);
}

TEST_CASE("inverse") {
    const RSeries g = one_minus_q(4).inv();
    for (long k = 0; k < 4; ++k) CHECK(g.coeff(k) == 1);

    const RSeries qi = RSeries::monomial(1, 1, 1, 3).inv();
    CHECK(qi.lo() == -1);
    CHECK(qi.coeff(-1) == 1);

    // inv(2q^2 + 2q^3 + O(q^6)) = q^-2/2 - q^-1/2 + 1/2 - q/2 + O(q^2)
    const RSeries f = RSeries::from_coeffs({2, 2, 0, 0}, 2, 1, 6);
    const RSeries fi = f.inv();
    CHECK(fi.lo() == -2);
    CHECK(fi.prec() == 2);
    CHECK(fi.coeff(-2) == make_rational(1, 2));
    CHECK(fi.coeff(-1) == make_rational(-1, 2));
    CHECK(fi.coeff(0) == make_rational(1, 2));
    CHECK(fi.coeff(1) == make_rational(-1, 2));

    CHECK_THROWS_AS(RSeries::zero(1, 5).inv(), division_error);
}

TEST_CASE("powers") {
    const RSeries b = one_minus_q(3).pow_rational(-3, 5);
    CHECK(b.coeff(0) == 1);
    CHECK(b.coeff(1) == make_rational(3, 5));
    CHECK(b.coeff(2) == make_rational(12, 25));

    const RSeries f = RSeries::from_coeffs({1, 5, -2, 7}, 0, 1, 4);
    CHECK(f.pow_rational(0, 5).is_zero_to(1, 1) == false); // constant 1, not 0
    CHECK((f.pow_rational(0, 5) - RSeries::monomial(1, 0, 1, 4)).known_range_empty());

    const RSeries r = f.pow_rational(1, 3);
    const RSeries d = r.pow(3) - f;
    CHECK(d.is_zero_to(d.prec(), d.denom()));

    CHECK((f.pow(2) - f * f).known_range_empty());
    const RSeries fi = f.pow(-2) * f.pow(2);
    CHECK((fi - RSeries::monomial(1, 0, 1, fi.prec())).is_zero_to(fi.prec(), 1));

    // rational powers need constant term exactly 1
    CHECK_THROWS_AS(RSeries::monomial(2, 0, 1, 4).pow_rational(1, 2), usage_error);
}

TEST_CASE("theta operator and substitution") {
    const RSeries m = RSeries::monomial(1, 3, 2, 8).theta();
    CHECK(m.coeff(3, 2) == make_rational(3, 2));

    CHECK(RSeries::monomial(5, 0, 1, 4).theta().known_range_empty());

    const RSeries te2 = eisenstein(2, 1, 4).theta();
    CHECK(te2.coeff(1) == -24);
    CHECK(te2.coeff(2) == -144);
    CHECK(te2.coeff(3) == -288);

    const RSeries e2_7 = eisenstein(2, 1, 2).subst_pow(7);
    CHECK(e2_7.prec() == 14);
    CHECK(e2_7.coeff(0) == 1);
    CHECK(e2_7.coeff(7) == -24);
    CHECK(e2_7.coeff(5) == 0);

    const RSeries f = RSeries::from_coeffs({4, -1, 3}, -1, 1, 2);
    CHECK((f.subst_pow(1) - f).known_range_empty());
    CHECK(RSeries::monomial(1, 1, 2, 4).subst_pow(2).reduced().coeff(1) == 1);
}

TEST_CASE("zero test and witnesses") {
    const RSeries f = RSeries::from_coeffs({2, -3, 5}, 0, 1, 3);
    CHECK((f - f).is_zero_to(3, 1));

    const RSeries g = RSeries::monomial(1, 5, 1, 10);
    CHECK(g.is_zero_to(5, 1));
    ZeroWitness w;
    CHECK(!g.is_zero_to(6, 1, &w));
    CHECK(w.expo_num == 5);
    CHECK(w.expo_den == 1);
    CHECK(w.coeff == "1");

    CHECK_THROWS_AS(g.is_zero_to(11, 1), precision_error);
    CHECK_THROWS_AS(f.coeff(3), precision_error);
    CHECK(f.coeff(1, 2) == 0); // exponent not on the integer grid

    // cyclotomic witness carries level and coordinates
    const CSeries cs = CSeries::monomial(Cyc::zeta(28), 2, 1, 5);
    ZeroWitness cw;
    CHECK(!cs.is_zero_to(3, 1, &cw));
    CHECK(cw.level == 28);
    CHECK(cw.coords.size() == 12);
}

TEST_CASE("convolution kernels are bit-identical") {
    const RSeries a = eisenstein(4, 1, 200);
    const RSeries b = eisenstein(6, 1, 200);
    set_conv_mode(ConvMode::serial);
    const RSeries ps = a * b;
    set_conv_mode(ConvMode::parallel);
    const RSeries pp = a * b;
    set_conv_mode(ConvMode::automatic);
    CHECK(ps == pp);
}
