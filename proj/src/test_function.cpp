#include "zi/test_function.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "zi/quadrature.hpp"

namespace zi {

namespace {

// max over x >= 0 of (1+x)^2 e^{-pi x^2 / sigma^2}
double gauss_weight_max(double sigma) {
    double x = (-1 + std::sqrt(1 + 4 * sigma * sigma / M_PI)) / 2;
    return (1 + x) * (1 + x) * std::exp(-M_PI * x * x / (sigma * sigma));
}

}  // namespace

TestFunction TestFunction::gaussian(double sigma) {
    if (!(sigma > 0)) throw std::invalid_argument("gaussian width must be positive");
    TestFunction t;
    t.kind_ = Kind::Gaussian;
    t.sigma_ = sigma;
    t.name_ = "gaussian:" + std::to_string(sigma);
    const double c = M_PI / (sigma * sigma);
    t.f_ = [c](cd z) { return std::exp(-c * z * z); };
    t.df_ = [c](cd z) { return -2.0 * c * z * std::exp(-c * z * z); };
    t.fhat_ = [sigma](cd xi) { return sigma * std::exp(-M_PI * sigma * sigma * xi * xi); };
    t.cert_.strip = 1.0;
    t.cert_.C = std::exp(c * t.cert_.strip * t.cert_.strip) * gauss_weight_max(sigma);
    return t;
}

TestFunction TestFunction::modulated_gaussian(double sigma, double a) {
    if (!(sigma > 0)) throw std::invalid_argument("gaussian width must be positive");
    TestFunction t = gaussian(sigma);
    t.kind_ = Kind::ModulatedGaussian;
    t.freq_ = a;
    t.name_ = "modulated:" + std::to_string(sigma) + "," + std::to_string(a);
    const double c = M_PI / (sigma * sigma), w = 2 * M_PI * a;
    t.f_ = [c, w](cd z) { return std::exp(-c * z * z) * std::cos(w * z); };
    t.df_ = [c, w](cd z) { return std::exp(-c * z * z) * (-2.0 * c * z * std::cos(w * z) - w * std::sin(w * z)); };
    t.fhat_ = [sigma, a](cd xi) {
        double s2 = M_PI * sigma * sigma;
        return 0.5 * sigma * (std::exp(-s2 * (xi - a) * (xi - a)) + std::exp(-s2 * (xi + a) * (xi + a)));
    };
    t.cert_.C *= std::cosh(w * t.cert_.strip);
    return t;
}

TestFunction TestFunction::tabulated(std::string name, std::function<cd(cd)> f, std::function<cd(cd)> df,
                                     std::function<cd(cd)> fhat, bool even, DecayCertificate cert) {
    if (!f || !df || !fhat) throw std::invalid_argument("tabulated test function needs f, f' and fhat");
    TestFunction t;
    t.kind_ = Kind::Tabulated;
    t.even_ = even;
    t.name_ = std::move(name);
    t.f_ = std::move(f);
    t.df_ = std::move(df);
    t.fhat_ = std::move(fhat);
    t.cert_ = cert;
    return t;
}

double TestFunction::h1_proxy(int y_samples) const {
    double best = 0;
    for (int j = 0; j < y_samples; ++j) {
        double y = y_samples > 1 ? -cert_.strip + 2 * cert_.strip * j / (y_samples - 1) : 0.0;
        y *= 0.999;
        auto g = [&](double x) { return cd(std::abs(f_(cd(x, y))) * (1 + std::abs(x))); };
        double v = integrate_to_inf(g, 0, std::max(1.0, sigma_), 1e-12).value.real() +
                   integrate_to_inf([&](double x) { return g(-x); }, 0, std::max(1.0, sigma_), 1e-12).value.real();
        best = std::max(best, v);
    }
    return best;
}

TestFunction parse_test_function(const std::string& spec) {
    auto colon = spec.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("test function must look like gaussian:SIGMA");
    std::string kind = spec.substr(0, colon), rest = spec.substr(colon + 1);
    try {
        if (kind == "gaussian") return TestFunction::gaussian(std::stod(rest));
        if (kind == "modulated") {
            auto comma = rest.find(',');
            if (comma == std::string::npos) throw std::invalid_argument("modulated needs SIGMA,A");
            return TestFunction::modulated_gaussian(std::stod(rest.substr(0, comma)), std::stod(rest.substr(comma + 1)));
        }
    } catch (const std::logic_error& e) {
        throw std::invalid_argument("bad test function parameters: " + spec);
    }
    throw std::invalid_argument("unknown test function kind: " + kind);
}

}  // namespace zi
