#include <doctest.h>

#include <random>

#include "zi/modforms.hpp"

using namespace zi;

namespace {

double rel(cd a, cd b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

// direct sum of exp(-pi n^2)
double theta_i_oracle() {
    double s = 1;
    for (int n = 1; n < 10; ++n) s += 2 * std::exp(-M_PI * n * n);
    return s;
}

cd numeric_jprime(cd z) {
    double h = 1e-3;
    auto J = [](cd w) { return eval_pack_d(w).J; };
    return (-J(z + 2.0 * h) + 8.0 * J(z + h) - 8.0 * J(z - h) + J(z - 2.0 * h)) / (12.0 * h);
}

}  // namespace

TEST_CASE("lambda, J and J_- expansions") {
    auto lam = lambda_series(10);
    CHECK(lam.at(1) == 16);
    CHECK(lam.at(2) == -128);
    CHECK(lam.at(3) == 704);
    auto J = j_series(10);
    CHECK(J.base() == -1);
    CHECK(J.at(-1) == 1);
    CHECK(J.at(0) == 24);
    CHECK(J.at(1) == 276);
    auto Jm = jminus_series(40);
    auto lhs = Jm * Jm + invert(j_series(42)).scale(64);
    CHECK(lhs.at(0) == 1);
    for (long i = 1; i < 40; ++i) CHECK(lhs.at(i) == 0);
    // J_- = 1 - 2 lambda as an independent identity
    auto alt = FracPowerSeries::one(2, 40) - lambda_series(40).scale(2);
    CHECK(alt == Jm);
    auto ij = invert(J);
    CHECK(ij.base() == 1);
    CHECK(ij.at(1) == 1);
}

TEST_CASE("product formula for lambda against theta-constant quotient") {
    // lambda = theta_2^4 / theta_3^4 with theta_2 = 2 t^{1/4} sum t^{n(n+1)}
    long N = 30;
    std::vector<mpq_class> s2(N, mpq_class(0));
    for (long n = 0; n * (n + 1) < N; ++n) s2[n * (n + 1)] = 1;
    FracPowerSeries S2(2, 0, s2, N);
    auto q = pow_int(S2 * invert(theta_series(N)), 4).scale(16).shift(1);
    CHECK(q == lambda_series(N + 1));
}

TEST_CASE("cusp expansions") {
    auto J1 = cusp1_series(CuspForm::J, 8).scale(mpq_class(-1, 4096));
    CHECK(J1.coeff(1) == 1);
    CHECK(J1.coeff(2) == 24);
    CHECK(J1.coeff(3) == 300);
    CHECK(J1.coeff(mpq_class(1, 2)) == 0);
    auto Jm1 = cusp1_series(CuspForm::Jminus, 8).scale(8);
    CHECK(Jm1.coeff(mpq_class(-1, 2)) == 1);
    CHECK(Jm1.coeff(mpq_class(1, 2)) == 20);
    CHECK(Jm1.coeff(mpq_class(3, 2)) == -62);
    auto th = cusp1_series(CuspForm::ThetaScaled, 12);
    CHECK(th.denom() == 8);
    for (long e = 0; e < 8 * 12; ++e) {
        long r = 0;
        for (long m = 1; m * m <= e; m += 2)
            if (m * m == e) r = 1;
        CHECK(th.at(e) == r);
    }
}

TEST_CASE("values at i") {
    PointUH i(0, 1);
    CHECK(std::abs(eval(Form::Theta, i) - theta_i_oracle()) < 1e-14);
    CHECK(std::abs(eval(Form::Theta, i) - std::pow(M_PI, 0.25) / std::tgamma(0.75)) < 1e-14);
    CHECK(std::abs(eval(Form::J, i) - 64.0) < 1e-12);
    CHECK(std::abs(eval(Form::Jminus, i)) < 1e-14);
}

TEST_CASE("bulk and cusp charts agree on the overlap") {
    for (double phi = 0.4; phi < 1.3; phi += 0.05) {
        for (double sgn : {1.0, -1.0}) {
            cd z = std::polar(1.0, sgn > 0 ? phi : M_PI - phi);
            auto b = eval_pack_d(z, Chart::Bulk);
            auto c = eval_pack_d(z, Chart::Cusp);
            CHECK(rel(b.theta, c.theta) < 1e-10);
            CHECK(std::abs(b.log_theta - c.log_theta) < 1e-10);
            CHECK(rel(b.J, c.J) < 1e-10);
            CHECK(std::abs(b.Jm - c.Jm) < 1e-10);
        }
    }
}

TEST_CASE("modularity smoke test") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> ux(-1, 1), uy(0.9, 2.0);
    for (int t = 0; t < 30; ++t) {
        cd z(ux(rng), uy(rng));
        if (std::abs(z) < 1) continue;
        cd a = eval_pack_d(z).J;
        CHECK(rel(eval_pack_d(-1.0 / z).J, a) < 1e-10);
        CHECK(rel(eval_pack_d(z + 2.0).J, a) < 1e-10);
        // theta(-1/z) = (z/i)^{1/2} theta(z)
        cd th = eval_pack_d(z).theta;
        CHECK(rel(eval_pack_d(-1.0 / z).theta, std::sqrt(z / cd(0, 1)) * th) < 1e-10);
    }
}

TEST_CASE("derivative of J") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> ux(-0.9, 0.9), uy(0.6, 1.6);
    for (int t = 0; t < 20; ++t) {
        cd z(ux(rng), uy(rng));
        cd num = numeric_jprime(z);
        cd f = jderiv_formula(PointUH(z));
        CHECK(std::abs(num - f) / std::abs(f) < 1e-8);
    }
}

TEST_CASE("theta^4 dz = dw / (pi sqrt(w (64 - w)))") {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> ux(-0.95, 0.95), uy(0.5, 1.5);
    for (int t = 0; t < 10; ++t) {
        cd z(ux(rng), uy(rng));
        auto p = eval_pack_d(z);
        cd th4 = std::pow(p.theta, 4);
        cd dwdz = numeric_jprime(z);
        cd lhs = std::pow(th4 / dwdz, 2);
        cd rhs = 1.0 / (M_PI * M_PI * p.J * (64.0 - p.J));
        CHECK(std::abs(lhs - rhs) / std::abs(rhs) < 1e-7);
    }
}

TEST_CASE("precision loss near the real line") {
    CHECK_THROWS_AS(eval(Form::J, PointUH(0.5, 0.01)), PrecisionLoss);
    CHECK_NOTHROW(eval(Form::J, PointUH(0.999, 0.001)));
}

TEST_CASE("dimension formula and basis") {
    CHECK(mf_dim(mpq_class(1, 2), -1) == 0);
    CHECK(mf_dim(mpq_class(1, 2), 1) == 1);
    CHECK(mf_dim(2, -1) == 1);
    CHECK(mf_dim(4, 1) == 2);
    for (mpq_class k : {mpq_class(1, 2), mpq_class(3, 2), mpq_class(2), mpq_class(4), mpq_class(13, 2), mpq_class(8)}) {
        for (int sign : {1, -1}) {
            auto basis = mf_basis(k, sign);
            long nu_ = nu(k, sign);
            REQUIRE(static_cast<long>(basis.size()) == nu_);
            // holomorphic at both cusps; leading block is unit triangular in t = q^{1/2},
            // so an element whose expansion starts at or beyond nu must vanish
            for (long j = 0; j < nu_; ++j) {
                auto qe = basis[j].q_expansion(nu_ + 4);
                CHECK(qe.base() == j);
                CHECK(qe.at(j) == 1);
                auto ce = basis[j].cusp1_expansion(6);
                CHECK(ce.base() >= 0);
            }
            // one more power of 1/J breaks holomorphy at the cusp
            ModularFormRep extra = sign > 0 ? ModularFormRep{k, 1, 0, {{-nu_, 1}}} : ModularFormRep{k, -1, 1, {{-nu_, 1}}};
            CHECK(extra.cusp1_expansion(6).base() < 0);
        }
    }
}

TEST_CASE("basis element numeric evaluation matches the q-expansion") {
    ModularFormRep f{mpq_class(5, 2), -1, 1, {{0, 1}}};
    auto qe = f.q_expansion(40);
    cd z(0.2, 1.3);
    cd t = std::exp(cd(0, M_PI) * z);
    cd s = 0;
    for (long i = qe.base(); i < 40; ++i) s += qe.at(i).get_d() * std::pow(t, static_cast<double>(i));
    CHECK(rel(f.eval(PointUH(z)), s) < 1e-12);
}
