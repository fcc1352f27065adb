#include <doctest.h>

#include <cmath>

#include "zi/quadrature.hpp"
#include "zi/rv_basis.hpp"

using namespace zi;

namespace {

bool is_square(long n) {
    long r = static_cast<long>(std::llround(std::sqrt(static_cast<double>(n))));
    return r * r == n;
}

}  // namespace

TEST_CASE("interpolation deltas at square roots") {
    for (long m = 1; m <= 8; ++m) {
        double x = std::sqrt(static_cast<double>(m));
        for (int sign : {1, -1}) {
            auto bv = b_all(sign, x, 8);
            auto dv = d_all(sign, x, 8);
            for (long n = 1; n <= 8; ++n) {
                double want = n == m ? 1.0 : 0.0;
                CHECK(std::abs(bv[n].value - want) < 1e-6);
                CHECK(std::abs(dv[n].value - want) < 1e-6);
            }
        }
    }
    CHECK(std::abs(b(3, 1, std::sqrt(3.0)).value - 1) < 1e-6);
    CHECK(std::abs(b(3, 1, std::sqrt(5.0)).value) < 1e-6);
}

TEST_CASE("values at zero") {
    auto p = b_all(1, 0, 16), m = b_all(-1, 0, 16);
    for (long n = 1; n <= 16; ++n) {
        CHECK(std::abs(m[n].value) < 1e-9);
        CHECK(std::abs(p[n].value - (is_square(n) ? -2.0 : 0.0)) < 1e-9);
    }
    CHECK(std::abs(b(4, 1, 0).value + 2) < 1e-9);
    CHECK(std::abs(b(3, 1, 0).value) < 1e-9);
    // b_0^+ is zero by convention, b_0^-(0) = 1
    CHECK(p[0].value == 0.0);
    CHECK(std::abs(m[0].value - 1) < 1e-9);
}

TEST_CASE("Poisson values of the pair") {
    auto a = a_pairs(0, 9);
    CHECK(std::abs(a[0].a - 0.5) < 1e-6);
    CHECK(std::abs(a[0].ahat - 0.5) < 1e-6);
    for (long n = 1; n <= 9; ++n) {
        double want = is_square(n) ? -1.0 : 0.0;
        CHECK(std::abs(a[n].a - want) < 1e-6);
        CHECK(std::abs(a[n].ahat + want) < 1e-6);
    }
    auto p1 = a_pair(1, 0);
    CHECK(std::abs(p1.a + 1) < 1e-6);
    CHECK(std::abs(p1.ahat - 1) < 1e-6);
}

TEST_CASE("parity and argument validation") {
    CHECK(std::abs(b(2, 1, -0.8).value - b(2, 1, 0.8).value) < 1e-14);
    CHECK(std::abs(d(2, -1, -0.8).value + d(2, -1, 0.8).value) < 1e-14);
    RVBasisEntry e{3, -1, RVBasisEntry::Parity::Odd};
    CHECK(std::abs(e(std::sqrt(3.0)).value - 1) < 1e-6);
    CHECK_THROWS_AS(b(-1, 1, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(b(1, 0, 0.5), std::invalid_argument);
}

TEST_CASE("Fourier eigenfunctions") {
    // cosine and sine transforms on [0, 7] by 14 panels of 12-point Gauss-Legendre
    const auto& gl = gl_double(12);
    std::vector<double> xs, ws;
    for (int p = 0; p < 14; ++p)
        for (std::size_t i = 0; i < gl.x.size(); ++i) {
            xs.push_back(0.5 * p + 0.25 * (gl.x[i] + 1));
            ws.push_back(0.25 * gl.w[i]);
        }
    const long nmax = 3;
    std::vector<std::vector<RVValue>> bp, bm, dp, dm;
    for (double x : xs) {
        bp.push_back(b_all(1, x, nmax));
        bm.push_back(b_all(-1, x, nmax));
        dp.push_back(d_all(1, x, nmax));
        dm.push_back(d_all(-1, x, nmax));
    }
    for (int t = 0; t < 20; ++t) {
        double xi = 0.05 + 0.075 * t;
        std::vector<RVValue> bpx = b_all(1, xi, nmax), bmx = b_all(-1, xi, nmax);
        std::vector<RVValue> dpx = d_all(1, xi, nmax), dmx = d_all(-1, xi, nmax);
        for (long n = 1; n <= nmax; ++n) {
            double cp = 0, cm = 0, sp = 0, sm = 0;
            for (std::size_t j = 0; j < xs.size(); ++j) {
                double c = 2 * ws[j] * std::cos(2 * M_PI * xs[j] * xi), s = 2 * ws[j] * std::sin(2 * M_PI * xs[j] * xi);
                cp += c * bp[j][n].value;
                cm += c * bm[j][n].value;
                sp += s * dp[j][n].value;
                sm += s * dm[j][n].value;
            }
            // even: transform is the cosine transform; odd: -i times the sine transform
            CHECK(std::abs(cp + bpx[n].value) < 1e-5);
            CHECK(std::abs(cm - bmx[n].value) < 1e-5);
            CHECK(std::abs(-sp - dpx[n].value) < 1e-5);
            CHECK(std::abs(-sm + dmx[n].value) < 1e-5);
        }
    }
}

TEST_CASE("Schwartz decay proxy") {
    for (int sign : {1, -1}) {
        double worst = 0;
        for (int j = 0; j <= 40; ++j) {
            double x = 0.5 * j + 0.013;
            auto v = b_all(sign, x, 5);
            for (long n = 0; n <= 5; ++n) worst = std::max(worst, std::abs(v[n].value) * std::pow(1 + x, 4));
        }
        CHECK(worst < 100);
    }
}

TEST_CASE("reconstruction of Gaussians") {
    auto g = TestFunction::gaussian(1.0);
    auto r = rv_reconstruct(g, 0.7, 60);
    CHECK(std::abs(r.residual) < 1e-4);
    // at a node the only surviving term is f(sqrt 5) a_5(sqrt 5) = f(sqrt 5)
    auto a5 = a_pairs(std::sqrt(5.0), 8);
    CHECK(std::abs(a5[5].a - 1) < 1e-6);
    CHECK(std::abs(a5[5].ahat) < 1e-6);
    auto h = TestFunction::gaussian(1 / std::sqrt(2.0));
    double prev = 1e300;
    for (long N : {20, 40, 80}) {
        double res = std::abs(rv_reconstruct(h, 0.45, N).residual);
        CHECK(res <= prev);
        prev = res;
    }
    CHECK(prev < 1e-6);
    // Poisson summation at x = 0
    auto p = rv_reconstruct(g, 0.0, 30);
    CHECK(std::abs(p.residual) < 1e-9);
    CHECK_THROWS_AS(rv_reconstruct(TestFunction::tabulated(
                                             "odd", [](cd z) { return z * std::exp(-M_PI * z * z); },
                                             [](cd z) { return (1.0 - 2 * M_PI * z * z) * std::exp(-M_PI * z * z); },
                                             [](cd xi) { return cd(0, -1) * xi * std::exp(-M_PI * xi * xi); }, false, {1, 1}),
                                         0.3, 5),
                    std::invalid_argument);
}

TEST_CASE("partial sums at zero") {
    for (long N : {1, 7, 16, 30}) {
        auto p = partial_sum_b(N, 1, 0);
        CHECK(std::abs(p.sum + 2 * std::floor(std::sqrt(static_cast<double>(N)))) < 1e-8);
        auto m = partial_sum_b(N, -1, 0);
        CHECK(std::abs(m.sum) < 1e-8);
    }
}
