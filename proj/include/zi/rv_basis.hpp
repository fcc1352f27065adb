#pragma once

#include <vector>

#include "zi/alpha_coeffs.hpp"
#include "zi/test_function.hpp"

namespace zi {

struct RVValue {
    double value = 0;
    double err = 0;
};

// b^{sign}_n(x) = (1/2) int g^{sign}_{n,1/2}(z) e^{pi i z x^2} dz, zero below nu.
RVValue b(long n, int sign, double x);
// d^{sign}_n(x) = (x / (2 sqrt n)) int g^{sign}_{n,3/2}(z) e^{pi i z x^2} dz for n >= 1, so that
// d_n(sqrt m) = delta_{nm}; d_0 keeps the factor x / 2.
RVValue d(long n, int sign, double x);
// n = 0..n_max at one x
std::vector<RVValue> b_all(int sign, double x, long n_max);
std::vector<RVValue> d_all(int sign, double x, long n_max);

struct RVBasisEntry {
    enum class Parity { Even, Odd };
    long n = 0;
    int sign = 1;
    Parity parity = Parity::Even;
    RVValue operator()(double x) const { return parity == Parity::Even ? b(n, sign, x) : d(n, sign, x); }
};

struct APair {
    double a = 0, ahat = 0;
    double err = 0;
};

// a_n = (b^+_n + b^-_n) / 2, ahat_n = (b^-_n - b^+_n) / 2
APair a_pair(long n, double x);
std::vector<APair> a_pairs(double x, long n_max);

struct Reconstruction {
    double approximation = 0;
    double residual = 0;  // approximation - f(x)
    double err = 0;       // propagated coefficient error
};

// sum_{n<=N} f(sqrt n) a_n(x) + fhat(sqrt n) ahat_n(x)
Reconstruction rv_reconstruct(const TestFunction& f, double x, long N);

struct PartialSumB {
    double sum = 0;       // sum_{1<=n<=N} b_n(x)
    double main = 0;      // sign 2 b_0(x) sqrt N
    double residual = 0;  // sum - main
    double normalized = 0;  // residual / (N^{1/4} log^3 N)
    double err = 0;
};

PartialSumB partial_sum_b(long N, int sign, double x);

}  // namespace zi
