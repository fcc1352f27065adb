#include <doctest.h>

#include <cmath>
#include <random>

#include "zi/dirichlet_kernels.hpp"
#include "zi/quadrature.hpp"
#include "zi/rv_basis.hpp"

using namespace zi;

namespace {

KernelContext ctx_of(int sign, mpq_class k = mpq_class(1, 2)) {
    KernelContext c;
    c.k = k;
    c.sign = sign;
    return c;
}

cd crit(double gamma) { return cd(0.5, gamma); }

}  // namespace

TEST_CASE("A at s = 0 in closed form") {
    auto plus = ctx_of(1), minus = ctx_of(-1);
    CHECK(std::abs(A_eval(2.0, 0.0, plus).value + M_PI * M_PI / 45) < 1e-10);
    std::mt19937 rng(5);
    std::uniform_real_distribution<double> re(0.6, 4), im(-20, 20);
    for (int t = 0; t < 10; ++t) {
        cd w(re(rng), im(rng));
        cd want = -2.0 * std::exp(-w * std::log(M_PI)) * gamma_c(w) * zeta(2.0 * w);
        auto got = A_eval(w, 0.0, plus);
        CHECK(std::abs(got.value - want) < 1e-7 * std::abs(want));
        CHECK(std::abs(A_eval(w, 0.0, minus).value) < 1e-10);
        CHECK(std::abs(A_eval(w, 0.5, minus).value) < 1e-10);
    }
}

TEST_CASE("residues of A") {
    cd s(0.3, 1.1);
    for (int sign : {1, -1}) {
        auto ctx = ctx_of(sign);
        double k = 0.5;
        auto a0 = alpha(0, ctx.k, sign, s).value;
        auto A = [&](cd w) { return A_eval(w, s, ctx).value; };
        CHECK(std::abs(circle_mean(A, s, 0.1, 64) - 1.0) < 1e-6);
        CHECK(std::abs(circle_mean(A, k - s, 0.1, 64) + static_cast<double>(sign)) < 1e-6);
        CHECK(std::abs(circle_mean(A, 0.0, 0.1, 64) + a0) < 1e-6);
        CHECK(std::abs(circle_mean(A, k, 0.1, 64) - static_cast<double>(sign) * a0) < 1e-6);
        try {
            A_eval(s + 1e-10, s, ctx);
            CHECK(false);
        } catch (const PoleError& e) {
            CHECK(e.residue == cd(1.0));
        }
        try {
            A_eval(k - s, s, ctx);
            CHECK(false);
        } catch (const PoleError& e) {
            CHECK(e.residue == cd(-static_cast<double>(sign)));
        }
    }
    // alpha_0^+ vanishes at k = 1/2, so w = 0 is not a pole there
    CHECK_NOTHROW(A_eval(0.0, s, ctx_of(1)));
    CHECK_THROWS_AS(A_eval(0.0, s, ctx_of(-1)), PoleError);
}

TEST_CASE("A matches its Dirichlet series where it converges") {
    for (int sign : {1, -1}) {
        auto ctx = ctx_of(sign);
        for (cd w : {cd(6, 0), cd(7, 3), cd(8, -5)})
            for (cd s : {cd(0.3, 0), cd(0.7, 2)}) {
                cd a = A_eval(w, s, ctx).value, b = A_dirichlet_series(w, s, ctx, 64);
                CHECK(std::abs(a - b) < 1e-8);
            }
    }
    // weight 3/2 as well
    auto c32 = ctx_of(1, mpq_class(3, 2));
    CHECK(std::abs(A_eval(cd(7, 1), 0.4, c32).value - A_dirichlet_series(cd(7, 1), 0.4, c32, 64)) < 1e-8);
}

TEST_CASE("A functional equation in w") {
    std::mt19937 rng(9);
    std::uniform_real_distribution<double> re(-1, 2), im(-8, 8);
    for (int sign : {1, -1})
        for (int t = 0; t < 5; ++t) {
            auto ctx = ctx_of(sign);
            cd w(re(rng), im(rng)), s(re(rng) / 2, im(rng) / 2);
            cd lhs = A_eval(0.5 - w, s, ctx).value, rhs = static_cast<double>(sign) * A_eval(w, s, ctx).value;
            CHECK(std::abs(lhs - rhs) < 1e-9 * std::max(1.0, std::abs(lhs)));
        }
}

TEST_CASE("H functional equations") {
    std::mt19937 rng(13);
    std::uniform_real_distribution<double> re(-1, 2), im(-15, 15);
    for (int sign : {1, -1})
        for (int t = 0; t < 6; ++t) {
            cd w(re(rng), im(rng)), s(re(rng), im(rng));
            cd h = H_eval(w, s, sign).value;
            double scale = std::max(1.0, std::abs(h));
            CHECK(std::abs(H_eval(1.0 - w, s, sign).value - static_cast<double>(sign) * h) < 1e-7 * scale);
            CHECK(std::abs(H_eval(w, 1.0 - s, sign).value + static_cast<double>(sign) * h) < 1e-7 * scale);
        }
    // the limit at s = 0 respects the s-equation
    cd w(0.8, 4.0);
    CHECK(std::abs(H_eval(w, 0.0, -1).value - H_eval(w, 1.0, -1).value) < 1e-7);
    CHECK(std::abs(H_eval(w, 0.0, -1).value - H_eval(w, cd(1e-3, 0), -1).value) < 1e-2);
}

TEST_CASE("H poles and D relation") {
    cd s(0.4, 2.0);
    for (int sign : {1, -1}) {
        try {
            H_eval(1.0 - s, s, sign);
            CHECK(false);
        } catch (const PoleError& e) {
            CHECK(e.residue == cd(-static_cast<double>(sign)));
        }
        auto H = [&](cd w) { return H_eval(w, s, sign).value; };
        CHECK(std::abs(circle_mean(H, s, 0.1, 64) - 1.0) < 1e-6);
        CHECK(std::abs(circle_mean(H, 1.0 - s, 0.1, 64) + static_cast<double>(sign)) < 1e-6);
        cd w(1.7, -3.0);
        cd viaD = zeta(s) * D_eval(w, s, sign).value / zeta(w);
        CHECK(std::abs(viaD - H(w)) < 1e-9 * std::max(1.0, std::abs(viaD)));
    }
    CHECK_THROWS_AS(H_eval(crit(14.134725141734693), s, -1), PoleError);
}

TEST_CASE("h coefficients") {
    cd s(0.5, 3.0);
    auto a1 = alpha(1, mpq_class(1, 2), -1, s / 2.0).value;
    CHECK(std::abs(h_coeff(1, -1, s) - zeta_star(s) / 2.0 * a1) < 1e-12);
    CHECK(h_coeff(1, 1, s) == cd(0));
    auto a4 = alpha(4, mpq_class(1, 2), 1, s / 2.0).value, a1p = alpha(1, mpq_class(1, 2), 1, s / 2.0).value;
    CHECK(std::abs(h_coeff(4, 1, s) - zeta_star(s) / 2.0 * (a4 - a1p)) < 1e-10);
    auto all = h_coeffs(8, -1, s);
    for (long n = 1; n <= 8; ++n) CHECK(std::abs(all[n - 1] - h_coeff(n, -1, s)) < 1e-12);
    cd rho = crit(14.134725141734693);
    for (long n = 1; n <= 5; ++n)
        for (int sign : {1, -1}) CHECK(std::abs(h_coeff(n, sign, rho)) < 1e-6);
    // Dirichlet series of H_- far to the right
    cd w(10, 1.5), s2(0.6, 2.0);
    auto hs = h_coeffs(64, -1, s2);
    cd series = 0;
    for (long n = 1; n <= 64; ++n) series += hs[n - 1] * std::exp(-w / 2.0 * std::log(static_cast<double>(n)));
    CHECK(std::abs(series - H_eval(w, s2, -1).value) < 1e-8);
}

TEST_CASE("U vanishes at zeros and decays") {
    std::vector<double> g = {14.134725141734693, 21.022039638771555, 25.010857580145688};
    for (double gam : g) {
        auto u = U_all(5, cd(gam, 0));
        for (long n = 1; n <= 5; ++n) CHECK(std::abs(u[n - 1]) < 1e-6);
    }
    double worst = 0, near0 = 0, far = 0;
    for (double x = 0; x <= 60; x += 2.5) {
        auto u = U_all(5, cd(x + 0.01, 0));
        for (cd v : u) {
            if (x <= 30) worst = std::max(worst, std::abs(v) * std::pow(1 + x, 6));
            if (x <= 15) near0 = std::max(near0, std::abs(v));
            if (x >= 45) far = std::max(far, std::abs(v));
        }
    }
    CHECK(std::isfinite(worst));
    CHECK(worst < 1e8);
    CHECK(far < 0.1 * near0);
}

TEST_CASE("Fourier-side deltas of u_n") {
    for (long m = 1; m <= 6; ++m) {
        double x = std::sqrt(static_cast<double>(m));
        std::vector<double> u(7, 0);
        for (long k = 1; k * x <= 24; ++k) {
            auto bv = b_all(-1, k * x, 6);
            for (long n = 1; n <= 6; ++n)
                for (long d = 1; d * d <= n; ++d)
                    if (n % (d * d) == 0) u[n] += mobius(d) * bv[n / (d * d)].value;
        }
        for (long n = 1; n <= 6; ++n) CHECK(std::abs(u[n] - (n == m ? 1.0 : 0.0)) < 1e-5);
    }
}

TEST_CASE("V interpolation deltas") {
    std::vector<double> g = {14.134725141734693, 21.022039638771555, 25.010857580145688, 30.424876125859513};
    cd rho1 = crit(g[0]);
    CHECK(std::abs(V_eval(rho1, 0, cd(g[1], 0), g)) < 1e-5);
    CHECK(std::abs(V_eval(rho1, 0, cd(g[2], 0), g)) < 1e-5);
    CHECK(std::abs(V_eval(rho1, 0, cd(g[0], 0), g) - 1.0) < 1e-5);
    CHECK(std::abs(V_eval(crit(g[1]), 0, cd(g[1], 0), g) - 1.0) < 1e-5);
    VOptions bad;
    bad.eps = 0.5;
    CHECK_THROWS_AS(V_eval(rho1, 0, cd(14.5, 0), g, bad), std::invalid_argument);
}

TEST_CASE("Laurent coefficients on a synthetic double pole") {
    cd c(0.5, 3.0);
    auto g = [&](cd w) { return 1.0 / ((w - c) * (w - c)) + 3.0 / (w - c) + std::exp(w); };
    CHECK(std::abs(laurent_coefficient(g, c, 0, 0.2) - 3.0) < 1e-12);
    CHECK(std::abs(laurent_coefficient(g, c, 1, 0.2) - cd(0, -1)) < 1e-12);
    CHECK(std::abs(laurent_coefficient(g, c, 2, 0.2)) < 1e-12);
}

TEST_CASE("character kernels") {
    std::mt19937 rng(17);
    std::uniform_real_distribution<double> re(-0.5, 1.5), im(-6, 6);
    for (long q : {3, 4, 5})
        for (const auto& chi : primitive_characters(q)) {
            if (!chi.real()) continue;
            cd wchi = root_number(chi);
            for (int delta : {1, -1})
                for (int t = 0; t < 3; ++t) {
                    cd w(re(rng), im(rng)), s(re(rng), im(rng));
                    cd lhs = H_chi_eval(w, s, delta, chi).value;
                    cd rhs = static_cast<double>(delta) * wchi * H_chi_eval(1.0 - w, s, delta, chi.conj()).value;
                    CHECK(std::abs(lhs - rhs) < 1e-6 * std::max(1.0, std::abs(lhs)));
                }
        }
    // complex characters need the L*(s, chi) / L*(s, conj chi) ratio and conj(w(chi))
    for (const auto& chi : primitive_characters(5)) {
        if (chi.real()) continue;
        cd wchi = root_number(chi);
        for (int delta : {1, -1}) {
            cd w(re(rng), im(rng)), s(re(rng), im(rng));
            cd lhs = H_chi_eval(w, s, delta, chi).value;
            cd rhs = static_cast<double>(delta) * std::conj(wchi) * L_star(s, chi) / L_star(s, chi.conj()) *
                     H_chi_eval(1.0 - w, s, delta, chi.conj()).value;
            CHECK(std::abs(lhs - rhs) < 1e-6 * std::max(1.0, std::abs(lhs)));
        }
    }
    // the trivial character reproduces the zeta kernel
    auto one = dirichlet_characters(1)[0];
    cd w(0.3, 5), s(0.7, -2);
    CHECK(std::abs(H_chi_eval(w, s, -1, one).value - H_eval(w, s, -1).value) < 1e-10);
}
