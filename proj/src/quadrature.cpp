#include "zi/quadrature.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>

namespace zi {

namespace {

template <class R>
void legendre_eval(int n, const R& x, R& p, R& dp) {
    R p0 = 1, p1 = x;
    for (int k = 2; k <= n; ++k) {
        R p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
    }
    p = p1;
    dp = n * (x * p1 - p0) / (x * x - 1);
}

void gl_nodes_double(int n, std::vector<double>& x, std::vector<double>& w) {
    x.resize(n);
    w.resize(n);
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double r = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double p, dp;
        for (int it = 0; it < 100; ++it) {
            legendre_eval(n, r, p, dp);
            double d = p / dp;
            r -= d;
            if (std::abs(d) < 1e-16) break;
        }
        legendre_eval(n, r, p, dp);
        x[i] = -r;
        x[n - 1 - i] = r;
        w[i] = w[n - 1 - i] = 2.0 / ((1 - r * r) * dp * dp);
    }
}

std::mutex mu;
std::map<int, std::unique_ptr<GaussLegendre<double>>> dcache;
std::map<std::pair<int, unsigned>, std::unique_ptr<GaussLegendre<mpreal>>> mcache;

}  // namespace

const GaussLegendre<double>& gl_double(int n) {
    std::lock_guard<std::mutex> lk(mu);
    auto& slot = dcache[n];
    if (!slot) {
        slot = std::make_unique<GaussLegendre<double>>();
        gl_nodes_double(n, slot->x, slot->w);
    }
    return *slot;
}

const GaussLegendre<mpreal>& gl_mp(int n, unsigned bits) {
    const auto& d = gl_double(n);
    std::lock_guard<std::mutex> lk(mu);
    auto& slot = mcache[{n, bits}];
    if (slot) return *slot;
    MpPrecision prec(bits);
    slot = std::make_unique<GaussLegendre<mpreal>>();
    slot->x.resize(n);
    slot->w.resize(n);
    mpreal tol = boost::multiprecision::ldexp(mpreal(1), -static_cast<int>(bits) + 4);
    for (int i = 0; i < (n + 1) / 2; ++i) {
        mpreal r = -d.x[i];
        mpreal p, dp;
        for (int it = 0; it < 60; ++it) {
            legendre_eval(n, r, p, dp);
            mpreal del = p / dp;
            r -= del;
            if (boost::multiprecision::abs(del) < tol) break;
        }
        legendre_eval(n, r, p, dp);
        slot->x[i] = -r;
        slot->x[n - 1 - i] = r;
        slot->w[i] = slot->w[n - 1 - i] = 2 / ((1 - r * r) * dp * dp);
    }
    if (n % 2 == 1) slot->x[n / 2] = 0;
    return *slot;
}

namespace {

std::complex<double> gl_panel(const CFun& f, double a, double b, int n) {
    const auto& g = gl_double(n);
    double c = 0.5 * (a + b), h = 0.5 * (b - a);
    std::complex<double> s = 0;
    for (int i = 0; i < n; ++i) s += g.w[i] * f(c + h * g.x[i]);
    return s * h;
}

void adapt(const CFun& f, double a, double b, std::complex<double> whole, double tol, int depth, QuadResult& out) {
    double m = 0.5 * (a + b);
    auto l = gl_panel(f, a, m, 32), r = gl_panel(f, m, b, 32);
    out.evals += 64;
    double e = std::abs(l + r - whole);
    // resolution floor relative to the panel magnitude
    double floor_ = 64 * 2.2e-16 * (std::abs(l) + std::abs(r));
    if (e <= std::max(tol, floor_) || depth <= 0 || out.evals > 200000) {
        out.value += l + r;
        out.err += e;
        return;
    }
    adapt(f, a, m, l, 0.5 * tol, depth - 1, out);
    adapt(f, m, b, r, 0.5 * tol, depth - 1, out);
}

}  // namespace

QuadResult integrate(const CFun& f, double a, double b, double tol, int depth) {
    QuadResult out;
    auto whole = gl_panel(f, a, b, 32);
    out.evals = 32;
    adapt(f, a, b, whole, tol, depth, out);
    return out;
}

QuadResult integrate_to_inf(const CFun& f, double a, double h0, double tol, int quiet) {
    QuadResult out;
    double lo = a, h = h0;
    int calm = 0;
    for (int panel = 0; panel < 200 && calm < quiet; ++panel) {
        auto r = integrate(f, lo, lo + h, tol * 0.25);
        out.value += r.value;
        out.err += r.err;
        out.evals += r.evals;
        calm = std::abs(r.value) < tol * 0.25 ? calm + 1 : 0;
        lo += h;
        h *= 2;
    }
    return out;
}

QuadResult integrate_path(const std::function<std::complex<double>(std::complex<double>)>& f,
                          const std::function<std::complex<double>(double)>& z,
                          const std::function<std::complex<double>(double)>& dz, double a, double b, double tol) {
    return integrate([&](double u) { return f(z(u)) * dz(u); }, a, b, tol);
}

std::complex<double> circle_mean(const std::function<std::complex<double>(std::complex<double>)>& f,
                                 std::complex<double> center, double radius, int points) {
    // (2 pi i)^{-1} \oint f dz with z = c + r e^{i theta}, dz = i r e^{i theta} d theta
    std::complex<double> s = 0;
    for (int j = 0; j < points; ++j) {
        auto e = std::polar(1.0, 2 * M_PI * (j + 0.5) / points);
        s += f(center + radius * e) * e;
    }
    return s * radius / static_cast<double>(points);
}

}  // namespace zi
