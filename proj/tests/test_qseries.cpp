#include <doctest.h>

#include <random>

#include "zi/qseries.hpp"

using zi::FracPowerSeries;

namespace {

FracPowerSeries theta(long order) {
    std::vector<mpq_class> c(order, mpq_class(0));
    for (long n = 0; n * n < order; ++n) c[n * n] += n == 0 ? 1 : 2;
    return FracPowerSeries(2, 0, c, order);
}

std::vector<mpq_class> r1(long order) {
    std::vector<mpq_class> c(order, mpq_class(0));
    for (long n = -order; n <= order; ++n)
        if (n * n < order) c[n * n] += 1;
    return c;
}

FracPowerSeries random_series(std::mt19937_64& rng, long denom, long base, long len) {
    std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
    std::vector<mpq_class> c(len);
    for (auto& x : c) x = mpq_class(num(rng), den(rng));
    if (c[0] == 0) c[0] = 1;
    return FracPowerSeries(denom, base, c, base + len);
}

}  // namespace

TEST_CASE("theta squared gives r2 counts") {
    auto t2 = theta(12) * theta(12);
    long want[] = {1, 4, 4, 0, 4, 8};
    for (int i = 0; i < 6; ++i) CHECK(t2.at(i) == want[i]);
    CHECK(t2.coeff(mpq_class(5, 2)) == 8);
    auto oracle = zi::brute_convolve(r1(12), r1(12), 12);
    for (int i = 0; i < 12; ++i) CHECK(t2.at(i) == oracle[i]);
}

TEST_CASE("theta cubed via rational power") {
    auto th = theta(20);
    auto t3 = zi::pow_rational(th, 3);
    auto oracle = zi::brute_convolve(zi::brute_convolve(r1(20), r1(20), 20), r1(20), 20);
    long want[] = {1, 6, 12, 8, 6, 24};
    for (int i = 0; i < 6; ++i) CHECK(t3.at(i) == want[i]);
    for (int i = 0; i < 20; ++i) CHECK(t3.at(i) == oracle[i]);
    auto t32 = zi::pow_rational(th, mpq_class(3, 2));
    CHECK(zi::pow_rational(t32, 2) == t3);
}

TEST_CASE("coefficient lookups") {
    auto th = theta(10);
    CHECK(th.coeff(0) == 1);
    CHECK(th.coeff(mpq_class(1, 2)) == 2);
    CHECK(th.coeff(mpq_class(1, 4)) == 0);
    CHECK_THROWS_AS(th.coeff(5), std::out_of_range);
}

TEST_CASE("identity and monomial cancellation") {
    std::mt19937_64 rng(7);
    auto a = random_series(rng, 2, -1, 10);
    auto one = FracPowerSeries::one(2, 40);
    CHECK(one * a == a);
    auto m = FracPowerSeries::monomial(2, -1, 1, 10) * FracPowerSeries::monomial(2, 1, 1, 10);
    CHECK(m.base() == 0);
    CHECK(m.at(0) == 1);
    for (long i = 1; i < m.trunc(); ++i) CHECK(m.at(i) == 0);
}

TEST_CASE("invert") {
    auto g = zi::invert(FracPowerSeries(2, 0, {1, -1, 0, 0, 0, 0, 0, 0}, 8));
    for (long i = 0; i < 8; ++i) CHECK(g.at(i) == 1);
    auto th = theta(30);
    auto p = th * zi::invert(th);
    CHECK(p.at(0) == 1);
    for (long i = 1; i < p.trunc(); ++i) CHECK(p.at(i) == 0);
    CHECK_THROWS_AS(zi::invert(FracPowerSeries::zero(2, 5)), zi::QSeriesError);
}

TEST_CASE("binomial series and square-root round trip") {
    auto s = zi::pow_rational(FracPowerSeries(2, 0, {1, 1}, 6), mpq_class(1, 2));
    CHECK(s.at(0) == 1);
    CHECK(s.at(1) == mpq_class(1, 2));
    CHECK(s.at(2) == mpq_class(-1, 8));
    CHECK(s.at(3) == mpq_class(1, 16));
    auto th = theta(25);
    auto h = zi::pow_rational(th, mpq_class(1, 2));
    CHECK(zi::pow_rational(h, 2) == th);
    CHECK(zi::pow_rational(th, 1) == th);
    CHECK_THROWS_AS(zi::pow_rational(th.scale(2), mpq_class(1, 2)), zi::QSeriesError);
    CHECK_THROWS_AS(zi::pow_rational(th.shift(1), mpq_class(1, 3)), zi::QSeriesError);
    // integer powers are fine for any leading monomial
    auto x = zi::pow_rational(th.shift(1).scale(3), -2);
    CHECK(x.base() == -2);
    CHECK(x.at(-2) == mpq_class(1, 9));
}

TEST_CASE("mixed denominators lift to the lcm") {
    auto a = FracPowerSeries(8, 1, {1, 0, 0, 0, 0, 0, 0, 0, 1}, 20);
    auto b = theta(4);
    auto c = a * b;
    CHECK(c.denom() == 8);
    CHECK(c.coeff(mpq_class(1, 8)) == 1);
    CHECK(c.coeff(mpq_class(5, 8)) == 2);
    CHECK(c.coeff(mpq_class(9, 8)) == 1);
}

TEST_CASE("dump and parse round trip") {
    auto th = theta(10);
    auto txt = th.dump();
    CHECK(txt.rfind("denom=2 base=0 trunc=10\n", 0) == 0);
    CHECK(txt.find("1/2:2/1") != std::string::npos);
    CHECK(FracPowerSeries::parse(txt) == th);
}

TEST_CASE("random ring axioms against brute convolution") {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 200; ++trial) {
        long len = 3 + static_cast<long>(rng() % 12);
        auto a = random_series(rng, 2, 0, len);
        auto b = random_series(rng, 2, 0, len);
        auto c = random_series(rng, 2, 0, len);
        auto ab = a * b;
        auto oracle = zi::brute_convolve(a.coeffs(), b.coeffs(), len);
        for (long i = 0; i < len; ++i) REQUIRE(ab.at(i) == oracle[i]);
        REQUIRE((a * b) * c == a * (b * c));
        REQUIRE(a * (b + c) == a * b + a * c);
        auto ai = zi::invert(a);
        auto one = a * ai;
        REQUIRE(one.at(0) == 1);
        for (long i = 1; i < len; ++i) REQUIRE(one.at(i) == 0);
    }
}

TEST_CASE("raising truncation never changes reported coefficients") {
    auto lo = zi::pow_rational(theta(12), mpq_class(5, 2));
    auto hi = zi::pow_rational(theta(30), mpq_class(5, 2));
    for (long i = 0; i < 12; ++i) CHECK(lo.at(i) == hi.at(i));
    auto ilo = zi::invert(theta(12).shift(-1));
    auto ihi = zi::invert(theta(30).shift(-1));
    for (long i = ilo.base(); i < ilo.trunc(); ++i) CHECK(ilo.at(i) == ihi.at(i));
}
