#include <doctest.h>

#include "zi/kernel_forms.hpp"

using namespace zi;

namespace {

const mpq_class kHalf(1, 2), kThreeHalves(3, 2), kTwo(2);

double theta_i() {
    double s = 1;
    for (int n = 1; n < 10; ++n) s += 2 * std::exp(-M_PI * n * n);
    return s;
}

}  // namespace

TEST_CASE("first forms") {
    auto g0 = g_form(0, kHalf, -1);
    CHECK(g0.rep.jminus_power == 0);
    CHECK(g0.rep.weight == kThreeHalves);
    REQUIRE(g0.rep.j_poly.size() == 1);
    CHECK(g0.rep.j_poly.at(0) == 1);
    auto g1 = g_form(1, kHalf, 1);
    auto qe = g1.rep.q_expansion(4);
    CHECK(qe.base() == -1);
    CHECK(qe.coeff(mpq_class(-1, 2)) == 1);
    CHECK_THROWS_AS(g_form(0, kHalf, 1), std::invalid_argument);
}

TEST_CASE("principal part is q^{-n/2} + O(q^{-(nu-1)/2})") {
    for (const mpq_class& k : {kHalf, kThreeHalves, kTwo}) {
        for (int sign : {1, -1}) {
            long nu_ = nu(k, sign);
            auto forms = g_forms(30, k, sign);
            for (auto& g : forms) {
                auto qe = g.rep.q_expansion(2);
                REQUIRE(qe.base() == -g.n);
                CHECK(qe.at(-g.n) == 1);
                for (long e = nu_; e < g.n; ++e) CHECK(qe.at(-e) == 0);
            }
        }
    }
}

TEST_CASE("geometric expansion agrees with principal-part matching") {
    for (const mpq_class& k : {kHalf, kThreeHalves, kTwo}) {
        for (int sign : {1, -1}) {
            for (long n = nu(k, sign); n <= 8; ++n) {
                auto a = g_form(n, k, sign);
                auto b = g_form_matcher(n, k, sign);
                CHECK(a.coeffs() == b.coeffs());
            }
        }
    }
}

TEST_CASE("numeric values") {
    double t3 = std::pow(theta_i(), 3);
    CHECK(std::abs(g_eval(0, kHalf, -1, PointUH(0, 1)) - t3) < 1e-13);
    CHECK(std::abs(t3 - 1.28237) < 1e-5);
}

TEST_CASE("decay toward both cusps along the semicircle") {
    for (int sign : {1, -1}) {
        for (long n = nu(kHalf, sign); n <= 4; ++n) {
            for (double side : {1.0, -1.0}) {
                double prev = 1e300;
                double last = 0;
                for (double phi = 0.5; phi > 0.02; phi *= 0.85) {
                    cd z = std::polar(1.0, side > 0 ? phi : M_PI - phi);
                    double v = std::abs(g_eval(n, kHalf, sign, PointUH(z)));
                    CHECK(v < prev);
                    prev = v;
                    last = v;
                }
                CHECK(last < 1e-12);
            }
        }
    }
}

TEST_CASE("weight 2-k transformation with opposite character") {
    cd pts[] = {{0.3, 1.2}, {-0.6, 0.9}, {0.1, 1.7}, {0.8, 0.7}};
    for (const mpq_class& k : {kHalf, kThreeHalves, kTwo}) {
        for (int sign : {1, -1}) {
            for (long n = nu(k, sign); n <= 4; ++n) {
                auto g = g_form(n, k, sign);
                for (cd z : pts) {
                    cd lhs = g_eval(g, PointUH(-1.0 / z));
                    cd rhs = -static_cast<double>(sign) * std::pow(z / cd(0, 1), 2 - k.get_d()) * g_eval(g, PointUH(z));
                    CHECK(std::abs(lhs - rhs) / std::max(1.0, std::abs(rhs)) < 1e-8);
                }
            }
        }
    }
}

TEST_CASE("kernel closed form equals its coefficient series where it converges") {
    for (int sign : {1, -1}) {
        auto forms = g_forms(40, kHalf, sign);
        cd tau(0.2, 2.2), z(-0.1, 1.1);
        cd t = std::exp(cd(0, M_PI) * tau);
        cd s = 0;
        for (auto& g : forms) s += g_eval(g, PointUH(z)) * std::pow(t, static_cast<double>(g.n));
        cd k = kernel_eval(0.5, sign, tau, z);
        CHECK(std::abs(s - k) / std::abs(k) < 1e-9);
    }
}

TEST_CASE("residue of the kernel at z = tau is 1/(pi i)") {
    for (double k : {0.5, 1.5, 2.0}) {
        for (int sign : {1, -1}) {
            cd tau(0.15, 1.8);
            int M = 256;
            double r = 0.05;
            cd acc = 0;
            for (int j = 0; j < M; ++j) {
                cd e = std::polar(1.0, 2 * M_PI * j / M);
                cd z = tau + r * e;
                acc += kernel_eval(k, sign, tau, z) * (r * e * cd(0, 2 * M_PI / M));
            }
            cd res = acc / cd(0, 2 * M_PI);
            CHECK(std::abs(res - 1.0 / cd(0, M_PI)) < 1e-6);
        }
    }
}
