#include <doctest.h>

#include <algorithm>

#include "qseries/constructors.hpp"

using namespace qseries;

namespace {

RSeries rs(const std::string& name, long order) {
    return std::get<RSeries>(named_series(name, order));
}
CSeries cs(const std::string& name, long order) {
    return std::get<CSeries>(named_series(name, order));
}

} // namespace

TEST_CASE("pochhammer products") {
    const RSeries e = pochhammer(1, 1, 1, 6); // (q;q)_inf
    CHECK(e.coeff(0) == 1);
    CHECK(e.coeff(1) == -1);
    CHECK(e.coeff(2) == -1);
    CHECK(e.coeff(3) == 0);
    CHECK(e.coeff(4) == 0);
    CHECK(e.coeff(5) == 1); // pentagonal numbers

    const RSeries e7 = pochhammer(7, 7, 1, 7); // (q^7;q^7)_inf below q^7
    CHECK(e7.coeff(0) == 1);
    for (long k = 1; k < 7; ++k) CHECK(e7.coeff(k) == 0);
}

TEST_CASE("bilateral theta sums") {
    const RSeries c = rs("septic.c", 2); // sum (-1)^n q^{(14n+1)^2/56}
    CHECK(c.lo() == 1);
    CHECK(c.denom() == 56);
    CHECK(c.coeff(1, 56) == 1);

    const RSeries a = rs("septic.a", 2);
    CHECK(a.coeff(25, 56) == -1); // overall minus sign on the n = 0 term

    const RSeries qn = bilateral_theta(5, -1, 0, 2, 10).reduced(); // (5n^2-n)/2
    CHECK(qn.coeff(0) == 1);
    CHECK(qn.coeff(1) == 0);
    CHECK(qn.coeff(2) == -1);
    CHECK(qn.coeff(3) == -1);

    // enlarging the summation bound changes nothing
    const RSeries base = bilateral_theta(196, 140, 25, 56, 400);
    const RSeries wide = bilateral_theta(196, 140, 25, 56, 400, 25);
    CHECK((base - wide).known_range_empty());
}

TEST_CASE("cubic theta functions") {
    const RSeries a = cubic_theta('a', 4);
    CHECK(a.coeff(0) == 1);
    CHECK(a.coeff(1) == 6);
    CHECK(a.coeff(2) == 0);
    CHECK(a.coeff(3) == 6);

    CHECK(cubic_theta('b', 3).coeff(0) == 1);

    const RSeries c = cubic_theta('c', 2);
    CHECK(c.denom() == 3);
    CHECK(c.lo() == 1);
    CHECK(c.coeff(1, 3) == 3);
}

TEST_CASE("Lambert series") {
    const RSeries z = rs("z", 3);
    CHECK(z.coeff(0) == 1);
    CHECK(z.coeff(1) == 2);
    CHECK(z.coeff(2) == 3);

    const PeriodicSeq<Rational> ones{{Rational(1)}};
    const RSeries sig = lambert<Rational>(ones, 1, 1, 1, 1, 4);
    CHECK(sig.coeff(1) == 1);
    CHECK(sig.coeff(2) == 3);
    CHECK(sig.coeff(3) == 4);

    const RSeries d1 = rs("D1", 2);
    CHECK(d1.lo() == 1);
    CHECK(d1.coeff(1) == 1);

    const RSeries x = rs("x", 4);
    CHECK(x.coeff(1) == 1);
    CHECK(x.coeff(2) == 0);
    CHECK(x.coeff(3) == -1);
}

TEST_CASE("Eisenstein series") {
    const RSeries e2 = eisenstein(2, 1, 4);
    CHECK(e2.coeff(0) == 1);
    CHECK(e2.coeff(1) == -24);
    CHECK(e2.coeff(2) == -72);
    CHECK(e2.coeff(3) == -96);

    const RSeries e4 = eisenstein(4, 1, 3);
    CHECK(e4.coeff(1) == 240);
    CHECK(e4.coeff(2) == 2160);

    const RSeries p = rs("P", 8);
    CHECK(p.coeff(0) == 1);
    CHECK(p.coeff(7) == -24);
    CHECK(p.coeff(5) == 0);
    CHECK_THROWS_AS(eisenstein(3, 1, 4), usage_error);
}

TEST_CASE("e, P, Q parameters") {
    const CSeries e17 = epq_family('e', 1, 7, 28, 3);
    CHECK(e17.coeff(0) == Cyc(1));

    const CSeries p27 = epq_family('P', 2, 7, 28, 2);
    const Cyc s = trig_value(TrigKind::sin, 2, 7, 28);
    const Cyc c = trig_value(TrigKind::cos, 4, 7, 28);
    CHECK(p27.coeff(1) == Cyc(0) - s * s * c * make_rational(8));

    CHECK_THROWS_AS(epq_family('e', 1, 2, 28, 3), usage_error); // alpha = 1/2 excluded
}

TEST_CASE("catalog cross-builds") {
    // eta-quotient and theta-quotient forms of x, y, z agree
    for (const char* n : {"x", "y", "z"}) {
        const RSeries canon = rs(n, 30);
        const RSeries quot = rs(std::string(n) + ".theta", 30).reduced();
        const RSeries d = canon.lifted(quot.denom()) - quot;
        CHECK(d.is_zero_to(30, 1));
    }

    const RSeries sg = rs("sigma", 3);
    CHECK(sg.coeff(2) == 4); // 2(chi(1) + chi(2)) with chi the mod-7 character

    CHECK(rs("cubic.P", 2).coeff(1) == 3);

    const RSeries qa = rs("quintic.A", 2);
    CHECK(qa.denom() == 5);
    CHECK(qa.lo() == 1); // leading exponent 1/5
    const RSeries qb = rs("quintic.B", 2);
    CHECK(qb.coeff(0) == 1);

    // bilateral sum versus triple-product form of the specialized theta
    for (int k = 1; k <= 3; ++k) {
        const std::string base = "theta1.k" + std::to_string(k);
        const CSeries d = cs(base + ".sum", 8) - cs(base, 8);
        CHECK(d.is_zero_to(8, 1));
    }

    CHECK_THROWS_AS(named_series("nope", 5), usage_error);
    const auto names = series_names();
    CHECK(std::find(names.begin(), names.end(), "x") != names.end());
    CHECK(std::find(names.begin(), names.end(), "E4.q7") != names.end());
}

TEST_CASE("rebuilding at higher precision preserves coefficients") {
    for (const char* n : {"x", "z", "E2", "septic.b", "quintic.A", "j7", "Z"}) {
        const RSeries lo_ord = rs(n, 8);
        const RSeries hi_ord = rs(n, 20);
        const RSeries d = lo_ord - hi_ord;
        CHECK(d.is_zero_to(lo_ord.prec(), lo_ord.denom()));
    }
}
