#include "zi/rv_basis.hpp"

#include <cmath>
#include <stdexcept>

namespace zi {

namespace {

const mpq_class kHalf(1, 2), kThreeHalves(3, 2);

void check_sign(int sign) {
    if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +1 or -1");
}

std::vector<RVValue> collect(const std::vector<cd>& v, const std::vector<double>& e) {
    std::vector<RVValue> out(v.size());
    // the values are real; a stray imaginary part counts as error
    for (std::size_t n = 0; n < v.size(); ++n) out[n] = {v[n].real(), e[n] + std::abs(v[n].imag())};
    return out;
}

struct Kahan {
    double s = 0, c = 0;
    void add(double x) {
        double y = x - c;
        double t = s + y;
        c = (t - s) - y;
        s = t;
    }
};

}  // namespace

std::vector<RVValue> b_all(int sign, double x, long n_max) {
    check_sign(sign);
    if (n_max < 0) throw std::invalid_argument("n_max must be nonnegative");
    std::vector<double> e;
    auto v = alpha_all(kHalf, sign, Phi::gauss(std::abs(x)), n_max, &e);
    return collect(v, e);
}

std::vector<RVValue> d_all(int sign, double x, long n_max) {
    check_sign(sign);
    if (n_max < 0) throw std::invalid_argument("n_max must be nonnegative");
    std::vector<double> e;
    auto v = alpha_all(kThreeHalves, sign, Phi::odd_gauss(x), n_max, &e);
    auto out = collect(v, e);
    for (long n = 1; n <= n_max; ++n) {
        double r = std::sqrt(static_cast<double>(n));
        out[n].value /= r;
        out[n].err /= r;
    }
    return out;
}

RVValue b(long n, int sign, double x) {
    if (n < 0) throw std::invalid_argument("n must be nonnegative");
    return b_all(sign, x, n)[static_cast<std::size_t>(n)];
}

RVValue d(long n, int sign, double x) {
    if (n < 0) throw std::invalid_argument("n must be nonnegative");
    return d_all(sign, x, n)[static_cast<std::size_t>(n)];
}

std::vector<APair> a_pairs(double x, long n_max) {
    auto p = b_all(1, x, n_max), m = b_all(-1, x, n_max);
    std::vector<APair> out(static_cast<std::size_t>(n_max + 1));
    for (std::size_t n = 0; n < out.size(); ++n)
        out[n] = {(p[n].value + m[n].value) / 2, (m[n].value - p[n].value) / 2, (p[n].err + m[n].err) / 2};
    return out;
}

APair a_pair(long n, double x) {
    if (n < 0) throw std::invalid_argument("n must be nonnegative");
    return a_pairs(x, n)[static_cast<std::size_t>(n)];
}

Reconstruction rv_reconstruct(const TestFunction& f, double x, long N) {
    if (!f.even()) throw std::invalid_argument("reconstruction needs an even test function");
    if (N < 0) throw std::invalid_argument("N must be nonnegative");
    auto a = a_pairs(x, N);
    Kahan sum;
    double err = 0;
    for (long n = 0; n <= N; ++n) {
        double r = std::sqrt(static_cast<double>(n));
        double fv = f.f(r).real(), gv = f.fhat(r).real();
        sum.add(fv * a[n].a);
        sum.add(gv * a[n].ahat);
        err += (std::abs(fv) + std::abs(gv)) * a[n].err;
    }
    Reconstruction out;
    out.approximation = sum.s;
    out.residual = sum.s - f.f(x).real();
    out.err = err;
    return out;
}

PartialSumB partial_sum_b(long N, int sign, double x) {
    if (N < 1) throw std::invalid_argument("N must be positive");
    if (x < 0) throw std::invalid_argument("x must be nonnegative");
    auto v = b_all(sign, x, N);
    Kahan s;
    double err = 0;
    for (long n = 1; n <= N; ++n) {
        s.add(v[n].value);
        err += v[n].err;
    }
    PartialSumB out;
    out.sum = s.s;
    double b0 = sign > 0 ? 0.0 : v[0].value;
    out.main = sign * 2 * b0 * std::sqrt(static_cast<double>(N));
    out.residual = out.sum - out.main;
    double ln = std::log(static_cast<double>(N));
    double scale = std::pow(static_cast<double>(N), 0.25) * std::max(ln * ln * ln, 1.0);
    out.normalized = out.residual / scale;
    out.err = err;
    return out;
}

}  // namespace zi
