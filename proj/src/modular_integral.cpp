#include "zi/modular_integral.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "zi/quadrature.hpp"

namespace zi {

FEvaluator::FEvaluator(const mpq_class& k, int sign, const Phi& phi, std::vector<cd> alpha, double alpha_err)
    : k_(k.get_d()), nu_(nu(k, sign)), sign_(sign), phi_(phi), alpha_(std::move(alpha)), alpha_err_(alpha_err) {
    if (alpha_.empty()) throw std::invalid_argument("empty coefficient table");
}

bool FEvaluator::in_domain(cd tau) {
    return tau.imag() > 0 && std::abs(tau.real()) <= 1 + 1e-12 && std::abs(tau) >= 1 - 1e-12;
}

cd FEvaluator::fourier(cd tau, double* tail) const {
    const cd q = std::exp(cd(0, M_PI) * tau);
    cd s = 0, p = 1;
    for (const auto& a : alpha_) {
        s += a * p;
        p *= q;
    }
    if (tail) {
        double r = std::abs(q);
        std::size_t n = alpha_.size();
        double last = std::max({1.0, std::abs(alpha_[n - 1]), n > 1 ? std::abs(alpha_[n - 2]) : 0.0});
        *tail = 4 * last * std::pow(r, static_cast<double>(n)) / (1 - r) + alpha_err_ / (1 - r);
    }
    return s;
}

cd FEvaluator::contour(cd tau, double tol) const {
    if (!in_domain(tau)) throw std::domain_error("contour evaluation needs tau in the fundamental domain");
    // sigma = 1/(1 - z) maps the right half of the unit semicircle to Re sigma = 1/2; the path
    // keeps a horizontal distance 1/2 from the pole sigma_c of the kernel at z = tau.
    cd tt = tau.real() < 0 ? tau + 2.0 : tau;
    cd sc = 1.0 / (1.0 - tt);
    double c = sc.real() + 0.5;
    auto pt = eval_pack_d(tau);
    auto f = [&](cd sigma) {
        cd z = 1.0 - 1.0 / sigma;
        auto pz = eval_pack_d(z);
        return 0.5 * kernel_from_packs<cd>(k_, sign_, nu_, pt, pz) * phi_.psi(z, k_, sign_) / (sigma * sigma);
    };
    cd total = 0;
    if (std::abs(c - 0.5) > 0) total += integrate([&](double x) { return f(cd(x, 0.5)); }, 0.5, c, tol).value;
    // the integrand peaks next to the pole height, so cover it before the tail search
    auto vert = [&](double v) { return f(cd(c, v)) * cd(0, 1); };
    double vp = sc.imag();
    double v1 = std::max(vp - 4, 0.5), v2 = vp + 8;
    if (v1 > 0.5) total += integrate(vert, 0.5, v1, tol).value;
    total += integrate(vert, v1, vp, tol).value;
    total += integrate(vert, vp, v2, tol).value;
    total += integrate_to_inf(vert, v2, 1.0, tol).value;
    return total;
}

cd FEvaluator::eval(cd tau, int* steps) const {
    if (!(tau.imag() > 0)) throw std::invalid_argument("tau must lie in the upper half-plane");
    const cd i1(0, 1);
    cd acc = 0, fac = 1;
    int st = 0;
    for (; st < 100000; ++st) {
        double x = tau.real() - 2 * std::floor((tau.real() + 1) / 2);
        tau = cd(x, tau.imag());
        if (tau.imag() >= kFourierMinIm) {
            acc += fac * fourier(tau);
            break;
        }
        if (std::abs(tau) >= 1) {
            acc += fac * contour(tau);
            break;
        }
        acc += fac * phi_.psi(tau, k_, sign_);
        fac *= static_cast<double>(sign_) * std::pow(tau / i1, -k_);
        tau = -1.0 / tau;
    }
    if (steps) *steps = st;
    return acc;
}

std::vector<cd> alpha_route_b(const mpq_class& k, int sign, const Phi& phi, long n_max, std::vector<double>* err,
                              RouteBOptions opt) {
    if (n_max < 1) throw std::invalid_argument("n_max must be positive");
    std::vector<double> ea;
    auto a = alpha_all(k, sign, phi, kArcDepth, &ea);
    double emax = *std::max_element(ea.begin(), ea.end());
    FEvaluator fe(k, sign, phi, a, emax);
    const double y = opt.y_scale / static_cast<double>(n_max);
    std::size_t M = 1;
    while (M < static_cast<std::size_t>(opt.oversample) * static_cast<std::size_t>(n_max)) M <<= 1;
    auto* buf = static_cast<fftw_complex*>(fftw_malloc(sizeof(fftw_complex) * M));
    fftw_plan plan = fftw_plan_dft_1d(static_cast<int>(M), buf, buf, FFTW_FORWARD, FFTW_ESTIMATE);
    for (std::size_t j = 0; j < M; ++j) {
        cd v = fe.eval(cd(2.0 * static_cast<double>(j) / static_cast<double>(M), y));
        buf[j][0] = v.real();
        buf[j][1] = v.imag();
    }
    fftw_execute(plan);
    std::vector<cd> out(static_cast<std::size_t>(n_max + 1));
    for (long n = 0; n <= n_max; ++n)
        out[n] = std::exp(M_PI * n * y) * cd(buf[n][0], buf[n][1]) / static_cast<double>(M);
    fftw_destroy_plan(plan);
    fftw_free(buf);
    // discrepancy against the arc quadrature on the overlap scales the error of the rest
    double d = 0;
    long overlap = std::min(n_max, kArcDepth);
    for (long n = 0; n <= overlap; ++n) d = std::max(d, std::abs(out[n] - a[n]));
    d = std::max(d, 1e-15);
    if (err) err->assign(out.size(), 0.0);
    for (long n = 0; n <= n_max; ++n) {
        if (n <= overlap) {
            out[n] = a[n];
            if (err) (*err)[n] = ea[n];
        } else if (err) {
            (*err)[n] = d * std::exp(M_PI * n * y);
        }
    }
    if (n_max >= nu(k, sign))
        for (long n = 0; n < nu(k, sign); ++n) out[n] = 0;
    return out;
}

}  // namespace zi
