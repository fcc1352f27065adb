#include <doctest.h>

#include <random>

#include "zi/modular_integral.hpp"

using namespace zi;

namespace {

const mpq_class kHalf(1, 2), kThreeHalves(3, 2), kTwo(2);

bool is_positive_square(long n) {
    if (n <= 0) return false;
    long r = static_cast<long>(std::llround(std::sqrt(static_cast<double>(n))));
    return r * r == n;
}

long sigma1(long n) {
    long s = 0;
    for (long d = 1; d <= n; ++d)
        if (n % d == 0) s += d;
    return s;
}

long sig(long n, long d) { return n % d == 0 ? sigma1(n / d) : 0; }

}  // namespace

TEST_CASE("special values at s = 0 and s = k/2") {
    std::vector<double> em, ep, eq;
    auto am = alpha_all(kHalf, -1, Phi::power(0), 30, &em);
    auto ap = alpha_all(kHalf, 1, Phi::power(0), 30, &ep);
    auto aq = alpha_all(kHalf, 1, Phi::power(0.25), 30, &eq);
    for (long n = 0; n <= 30; ++n) {
        CHECK(std::abs(am[n] - cd(n == 0 ? 1.0 : 0.0)) < 1e-8);
        CHECK(std::abs(ap[n] - cd(is_positive_square(n) ? -2.0 : 0.0)) < 1e-8);
        CHECK(std::abs(aq[n]) < 1e-8);
        CHECK(em[n] < 1e-8);
    }
}

TEST_CASE("weight 2 Eisenstein coefficients at s = 1") {
    for (long n = 1; n <= 20; ++n) {
        auto v = alpha(n, kTwo, -1, 1.0);
        double want = 8 * M_PI * static_cast<double>(sigma1(n) - 5 * sig(n, 2) + 4 * sig(n, 4));
        CHECK(std::abs(v.value - want) <= 1e-7 * std::abs(want));
    }
    CHECK(std::abs(alpha(1, kTwo, -1, 1.0).value - 25.132741228718345) < 1e-9);
}

TEST_CASE("values below nu vanish and errors are reported") {
    auto t = make_alpha_table(kHalf, 1, cd(0.3, 1.0), 48);
    REQUIRE(t.values.size() == 49);
    CHECK(t.values[0] == cd(0));
    for (double e : t.quad_error) CHECK(e < 1e-9);
    auto t2 = make_alpha_table(kThreeHalves, -1, cd(0.3, 1.0), 20);
    CHECK(std::abs(t2.values[0]) > 1e-3);
    CHECK_THROWS_AS(alpha(-1, kHalf, 1, 0.0), std::invalid_argument);
}

TEST_CASE("symmetry s -> k - s") {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> re(-0.5, 1.5), im(-4, 4);
    for (const mpq_class& k : {kHalf, kThreeHalves}) {
        for (int sign : {1, -1}) {
            for (int trial = 0; trial < 3; ++trial) {
                cd s(re(rng), im(rng));
                std::vector<double> e1, e2;
                auto a = alpha_all(k, sign, Phi::power(s), 20, &e1);
                auto b = alpha_all(k, sign, Phi::power(k.get_d() - s), 20, &e2);
                for (long n = 0; n <= 20; ++n)
                    CHECK(std::abs(b[n] + static_cast<double>(sign) * a[n]) <= 2 * std::max(e1[n], 1e-12) + 1e-12);
            }
        }
    }
}

TEST_CASE("growth in the imaginary direction stays below exp(pi |v| / 2)") {
    std::vector<double> r;
    for (double v : {0.0, 4.0, 8.0, 16.0, 24.0, 32.0}) {
        auto a = alpha(3, kHalf, -1, cd(0.25, v));
        r.push_back(std::abs(a.value) * std::exp(-M_PI * v / 2));
    }
    for (double x : r) CHECK(x < 1.0);
    // beyond the first oscillations the normalized size falls faster than v^{-4}
    CHECK(r[4] * std::pow(24.0, 4) < r[3] * std::pow(16.0, 4));
    CHECK(r[5] * std::pow(32.0, 4) < r[4] * std::pow(24.0, 4));
}

TEST_CASE("F_eval in the Fourier and contour regimes") {
    auto t0 = make_alpha_table(kHalf, -1, 0.0, 48);
    for (double y : {1.0, 2.0, 5.0}) CHECK(std::abs(F_eval(PointUH(0, y), 0.0, kHalf, -1, t0).value - 1.0) < 1e-9);
    auto tq = make_alpha_table(kHalf, 1, 0.25, 48);
    for (cd tau : {cd(0.3, 0.8), cd(-0.7, 1.1), cd(0.95, 0.4)}) {
        auto f = F_eval(PointUH(tau), 0.25, kHalf, 1, tq);
        CHECK(std::abs(f.value) < 1e-9);
        CHECK(f.contour == (tau.imag() < 0.5));
    }
    CHECK_THROWS_AS(F_eval(PointUH(0.1, 0.3), 0.25, kHalf, 1, tq), UnsupportedRegion);

    const cd i1(0, 1);
    for (int sign : {1, -1}) {
        cd s(0.3, 0.7);
        auto t = make_alpha_table(kHalf, sign, s, 48);
        for (cd tau : {std::polar(1.0, M_PI / 3), std::polar(1.0, M_PI / 8), cd(0.4, 1.3)}) {
            cd a = F_eval(PointUH(tau), s, kHalf, sign, t).value;
            cd b = F_eval(PointUH(-1.0 / tau), s, kHalf, sign, t).value;
            cd lhs = a - static_cast<double>(sign) * std::pow(tau / i1, -0.5) * b;
            cd rhs = std::pow(tau / i1, -s) - static_cast<double>(sign) * std::pow(tau / i1, s - 0.5);
            CHECK(std::abs(lhs - rhs) < 1e-6);
        }
    }
}

TEST_CASE("cocycle route reproduces the arc quadrature") {
    cd s(0.3, 0.7);
    for (int sign : {1, -1}) {
        std::vector<double> ea;
        auto a = alpha_all(kHalf, sign, Phi::power(s), 48, &ea);
        FEvaluator fe(kHalf, sign, Phi::power(s), a, 1e-18);
        const int M = 1024;
        const double y = 1.0 / 64;
        std::vector<cd> F(M);
        for (int j = 0; j < M; ++j) F[j] = fe.eval(cd(2.0 * j / M, y));
        for (int n = 0; n <= 48; n += 3) {
            cd c = 0;
            for (int j = 0; j < M; ++j) c += F[j] * std::exp(cd(0, -2 * M_PI * n * j / M));
            c *= std::exp(M_PI * n * y) / static_cast<double>(M);
            CHECK(std::abs(c - a[n]) < 1e-9);
        }
        // contour and Fourier sums agree where both apply
        for (cd tau : {cd(0.3, 0.96), cd(0.9, 0.6), cd(-0.8, 0.7)}) CHECK(std::abs(fe.contour(tau) - fe.fourier(tau)) < 1e-12);
    }
}

TEST_CASE("partial sums at s = k/2 vanish") {
    auto t = make_alpha_table(kHalf, 1, 0.25, 48);
    for (double x : {10.0, 30.0, 48.0}) {
        auto p = partial_sum_alpha(x, kHalf, 1, 0.25, t.values);
        CHECK(std::abs(p.sum) < 1e-8);
    }
}
