#include "zi/interp_engine.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "zi/quadrature.hpp"
#include "zi/special.hpp"

namespace zi {

namespace {

const cd I(0, 1);

// |t| beyond which |f(t + iy)| stays below tol for |y| <= y_max (Gaussian-type test functions)
double decay_height(const TestFunction& f, double y_max, double tol) {
    double t = 1;
    while (t < 1e4) {
        double worst = 0;
        for (double y : {-y_max, 0.0, y_max}) worst = std::max(worst, std::abs(f.f(cd(t, y))));
        if (worst < tol) return t;
        t *= 1.1;
    }
    throw std::runtime_error("test function does not decay fast enough along the line");
}

}  // namespace

double envelope_total(const std::vector<Envelope>& e) {
    double s = 0;
    for (const auto& x : e) s += x.value;
    return s;
}

cd F_of(const TestFunction& f, cd s, int delta) {
    cd a = f.f((s - 0.5) / I), b = f.f((0.5 - s) / I);
    return 0.5 * (a + static_cast<double>(delta) * b);
}

LineResult R_operator(const TestFunction& f, cd s, int delta, double c, double tol) {
    if (!(1 - c < s.real() && s.real() < c)) throw std::invalid_argument("R_operator: 1 - c < Re s < c required");
    double V = decay_height(f, c - 0.5, tol);
    double herr = 0;
    auto integrand = [&](double v) {
        cd w(c, v);
        auto h1 = H_eval(w, s, -delta), h2 = H_eval(1.0 - w, s, -delta);
        cd Fw = F_of(f, w, delta);
        herr = std::max(herr, (h1.err + h2.err) * std::abs(Fw));
        // dw = i dv cancels the i of 4 pi i
        return (h1.value - h2.value) * Fw / (4 * M_PI);
    };
    auto q = integrate(integrand, -V, V, tol);
    LineResult r;
    r.value = q.value;
    r.height = V;
    r.envelopes = {{"quadrature", q.err}, {"kernel", herr * 2 * V / (4 * M_PI)}, {"truncation", tol}};
    r.err = envelope_total(r.envelopes);
    return r;
}

LineResult R_dirichlet_side(const TestFunction& f, cd s, int delta, long N) {
    if (N < 1) throw std::invalid_argument("R_dirichlet_side: N >= 1 required");
    auto h = h_coeffs(N, -delta, s);
    cd acc = 0;
    double last = 0;
    for (long n = 1; n <= N; ++n) {
        double xi = std::log(static_cast<double>(n)) / (4 * M_PI);
        cd fh = 0.5 * (f.fhat(xi) + static_cast<double>(delta) * f.fhat(-xi));
        cd m = std::pow(static_cast<double>(n), -0.25) / (2 * M_PI) * fh;
        acc += m * h[n - 1];
        last = std::abs(m);
    }
    LineResult r;
    r.value = acc;
    // the transform decays faster than any power in log n; the last term bounds the remaining ones
    double hmax = 0;
    for (cd v : h) hmax = std::max(hmax, std::abs(v));
    r.envelopes = {{"series_tail", last * hmax * static_cast<double>(N)}, {"coefficients", 1e-12 * hmax}};
    r.err = envelope_total(r.envelopes);
    return r;
}

double cut_after(const ZeroTable& table, long count) {
    if (count < 1 || count >= static_cast<long>(table.ordinates.size()))
        throw std::invalid_argument("cut_after: need count+1 ordinates in the table");
    return 0.5 * (table.ordinates[count - 1] + table.ordinates[count]);
}

double choose_Tk(const ZeroTable& table, int k) {
    double lo = std::ldexp(1.0, k), hi = std::ldexp(1.0, k + 1);
    if (hi > table.upto) throw std::invalid_argument("choose_Tk: window beyond the zero table");
    std::vector<double> pts = {lo};
    for (double g : table.ordinates)
        if (g > lo && g < hi) pts.push_back(g);
    pts.push_back(hi);
    double best = -1, T = 0;
    for (std::size_t i = 1; i < pts.size(); ++i) {
        // gaps touching the window edge are only half-known, so only interior gaps qualify when present
        bool interior = i > 1 && i + 1 < pts.size();
        bool any_interior = pts.size() > 3;
        if (any_interior && !interior) continue;
        double gap = pts[i] - pts[i - 1];
        if (gap > best) {
            best = gap;
            T = 0.5 * (pts[i] + pts[i - 1]);
        }
    }
    return T;
}

LineResult R_residue_side(const TestFunction& f, cd s, int delta, const ZeroTable& table, long zeros, double c) {
    double T = cut_after(table, zeros);
    std::vector<double> gam(table.ordinates.begin(), table.ordinates.begin() + std::min<long>(zeros + 1, table.ordinates.size()));
    cd acc = F_of(f, s, delta);
    double kernel_err = 0;
    for (long j = 0; j < zeros; ++j) {
        cd rho(0.5, gam[j]);
        double guard = std::min(std::abs(rho - s), std::abs(rho - (1.0 - s)));
        for (double g : gam)
            if (g != gam[j]) guard = std::min(guard, std::abs(g - gam[j]));
        guard = std::min(guard, 2 * gam[j]);
        double gerr = 0;
        auto g = [&](cd w) {
            auto h = H_eval(w, s, -delta, 16);
            cd Fw = F_of(f, w, delta);
            gerr = std::max(gerr, h.err * std::abs(Fw));
            return h.value * Fw;
        };
        acc += laurent_coefficient(g, rho, 0, 0.4 * guard, 64);
        kernel_err += 0.4 * guard * gerr;
    }
    // E(s, T): half of the closing segments at heights +-T, plus the line beyond T
    const auto& gl = gl_double(16);
    double seg = 0;
    for (double sgn : {1.0, -1.0}) {
        cd part = 0;
        for (std::size_t i = 0; i < gl.x.size(); ++i) {
            double u = 0.5 + (c - 0.5) * gl.x[i];
            cd w(u, sgn * T);
            cd gv;
            try {
                gv = 0.5 * (H_eval(w, s, -delta, 16).value - H_eval(1.0 - w, s, -delta, 16).value) * F_of(f, w, delta);
            } catch (const PoleError&) {
                gv = 0;
            }
            part += gv * ((c - 0.5) * gl.w[i]);
        }
        seg += std::abs(part) / (4 * M_PI);
    }
    double beyond = 0;
    {
        double hmax = 0;
        for (double v : {T, T + 5, T + 10}) {
            auto h = H_eval(cd(c, v), s, -delta, 16);
            hmax = std::max(hmax, std::abs(h.value) + h.err);
        }
        auto tail = integrate_to_inf([&](double v) { return cd(std::abs(F_of(f, cd(c, v), delta))); }, T, 1.0, 1e-30);
        beyond = 2 * hmax * std::abs(tail.value) / (2 * M_PI);
    }
    LineResult r;
    r.value = acc;
    r.height = T;
    r.envelopes = {{"closing_segments", seg},
                   {"line_beyond_T", beyond},
                   {"residue_kernel", kernel_err},
                   {"residue_quadrature", 1e-10 * static_cast<double>(zeros)}};
    r.err = envelope_total(r.envelopes);
    return r;
}

ReconstructionRHS reconstruction_rhs(const TestFunction& f, cd z, long N, long zeros, const ZeroTable& table) {
    if (!f.even()) throw std::invalid_argument("reconstruction_rhs: even test function required");
    if (std::abs(z.imag()) >= 0.5) throw std::invalid_argument("reconstruction_rhs: |Im z| < 1/2 required");
    ReconstructionRHS r;
    r.T = cut_after(table, zeros);
    r.zeros_used = zeros;
    auto U = U_all(N, z);
    double last = 0, umax = 0;
    for (long n = 1; n <= N; ++n) {
        cd fh = f.fhat(std::log(static_cast<double>(n)) / (4 * M_PI));
        r.u_part += fh * U[n - 1];
        last = std::abs(fh);
        umax = std::max(umax, std::abs(U[n - 1]));
    }
    std::vector<double> gam(table.ordinates.begin(), table.ordinates.begin() + zeros + 1);
    double vmax = 0;
    for (long j = 0; j < zeros; ++j) {
        cd v = V_eval(cd(0.5, gam[j]), 0, z, gam);
        r.v_part += f.f(gam[j]) * v;
        vmax = std::max(vmax, std::abs(v));
    }
    r.value = r.u_part + r.v_part;
    r.target = f.f(z);
    r.residual = r.value - r.target;
    // zeros beyond the cut, weighted by the density log(t / 2 pi) / 2 pi
    auto zt = integrate_to_inf(
        [&](double t) { return cd(std::abs(f.f(t)) * std::log(t / (2 * M_PI)) / (2 * M_PI)); }, r.T, 1.0, 1e-30);
    r.envelopes = {{"u_tail", last * umax * static_cast<double>(N)}, {"zero_tail", std::abs(zt.value) * std::max(vmax, 1.0)}};
    return r;
}

RWResult riemann_weil(const TestFunction& f, const ZeroTable& table, long n_max, long zeros, double tol) {
    RWResult r;
    long nz = zeros < 0 ? static_cast<long>(table.ordinates.size()) : zeros;
    if (nz > static_cast<long>(table.ordinates.size())) throw std::invalid_argument("riemann_weil: not enough zeros");

    double L = decay_height(f, 0.0, 1e-18);
    // psi(1/4 + it/2) and psi(1/4 - it/2) enter symmetrically; for real t that is the real part
    auto arch = integrate(
        [&](double t) { return f.f(t) * (digamma_c(cd(0.25, t / 2)).real() - std::log(M_PI)); }, -L, L, 1e-14);
    r.archimedean = arch.value / (2 * M_PI);
    r.poles = f.f(cd(0, 0.5)) + f.f(cd(0, -0.5));
    r.lhs = r.archimedean + r.poles;

    auto Lam = von_mangoldt_table(n_max);
    cd ps = 0;
    for (long n = 2; n <= n_max; ++n) {
        if (Lam[n] == 0) continue;
        double xi = std::log(static_cast<double>(n)) / (2 * M_PI);
        ps += Lam[n] / std::sqrt(static_cast<double>(n)) * (f.fhat(xi) + f.fhat(-xi));
    }
    r.primes = ps / (2 * M_PI);
    cd zs = 0;
    for (long j = 0; j < nz; ++j) zs += f.f(table.ordinates[j]) + f.f(-table.ordinates[j]);
    r.zero_sum = zs;
    r.rhs = r.primes + r.zero_sum;
    r.residual = r.lhs - r.rhs;

    // tails: sum over n > n_max ~ int e^{u/2} |fhat(u / 2 pi)| du / pi, zeros beyond the last listed one
    double u0 = std::log(static_cast<double>(n_max));
    auto pt = integrate_to_inf(
        [&](double u) {
            double xi = u / (2 * M_PI);
            return cd(std::exp(u / 2) * (std::abs(f.fhat(xi)) + std::abs(f.fhat(-xi))) / (2 * M_PI));
        },
        u0, 1.0, 1e-30);
    double Tz = nz > 0 ? table.ordinates[nz - 1] : 0;
    auto zt = integrate_to_inf(
        [&](double t) {
            return cd((std::abs(f.f(t)) + std::abs(f.f(-t))) * std::log(std::max(t, 2 * M_PI) / (2 * M_PI)) / (2 * M_PI));
        },
        Tz, 1.0, 1e-30);
    double edge = (std::abs(f.f(Tz)) + std::abs(f.f(-Tz))) * (1 + std::log(std::max(Tz, 2.0)));
    r.envelopes = {{"archimedean_quadrature", arch.err / (2 * M_PI) + 1e-15},
                   {"prime_tail", std::abs(pt.value)},
                   {"zero_tail", std::abs(zt.value) + edge}};
    r.inconclusive = envelope_total(r.envelopes) > tol;
    return r;
}

std::vector<WResult> W_on_basis(const std::vector<WTarget>& targets, const std::vector<double>& neighbors, WOptions opt) {
    long nU = 0;
    for (const auto& t : targets)
        if (t.kind == WTarget::Kind::U) nU = std::max(nU, t.n);
    auto values_at = [&](cd z) {
        std::vector<cd> out(targets.size());
        std::vector<cd> u;
        if (nU > 0) u = U_all(std::max(nU, 16L), z);
        for (std::size_t i = 0; i < targets.size(); ++i) {
            const auto& t = targets[i];
            out[i] = t.kind == WTarget::Kind::U ? u[t.n - 1] : V_eval(cd(0.5, t.gamma), 0, z, neighbors);
        }
        return out;
    };
    // U_n and V_{rho,0} are even, so the odd imaginary part of the digamma weight integrates to zero
    const auto& gl = gl_double(opt.points);
    std::vector<cd> acc(targets.size(), 0.0), last(targets.size(), 0.0);
    for (double lo = 0; lo < opt.x_max - 1e-12; lo += opt.panel) {
        std::vector<cd> part(targets.size(), 0.0);
        for (std::size_t q = 0; q < gl.x.size(); ++q) {
            double t = lo + 0.5 * opt.panel * (1 + gl.x[q]);
            double wt = 0.5 * opt.panel * gl.w[q] * 2 * (digamma_c(cd(0.25, t / 2)).real() - std::log(M_PI)) / (2 * M_PI);
            auto v = values_at(cd(t, 0));
            for (std::size_t i = 0; i < targets.size(); ++i) part[i] += wt * v[i];
        }
        for (std::size_t i = 0; i < targets.size(); ++i) {
            acc[i] += part[i];
            last[i] = part[i];
        }
    }
    // z = +-i/2 puts s at 1 and 0, where the values are limits
    auto top = values_at(cd(0, 0.5));
    auto bottom = values_at(cd(0, -0.5));
    std::vector<WResult> out(targets.size());
    for (std::size_t i = 0; i < targets.size(); ++i) {
        out[i].target = targets[i];
        out[i].integral = acc[i];
        out[i].endpoints = top[i] + bottom[i];
        out[i].value = acc[i] + top[i] + bottom[i];
        // the panels decay roughly geometrically; the final panel's size bounds the truncated remainder
        out[i].err = 3 * std::abs(last[i]) + 1e-8;
    }
    return out;
}

WAdjudication adjudicate_W_square(long n, cd value, double err) {
    long r = std::lround(std::sqrt(static_cast<double>(n)));
    if (r * r != n) throw std::invalid_argument("adjudicate_W_square: n must be a square");
    WAdjudication a;
    a.value = value.real();
    a.literal = von_mangoldt(n) / (M_PI * std::sqrt(static_cast<double>(n)));
    a.alternative = von_mangoldt(r) / (M_PI * std::pow(static_cast<double>(n), 0.25));
    double dl = std::abs(a.value - a.literal), da = std::abs(a.value - a.alternative);
    double tol = std::max(10 * err, 1e-4);
    if (da <= tol && da < dl)
        a.verdict = "alternative";
    else if (dl <= tol && dl < da)
        a.verdict = "literal";
    else
        a.verdict = "neither";
    return a;
}

namespace {

cd sinc(cd u) { return std::abs(u) < 1e-8 ? cd(1.0) - u * u / 6.0 : std::sin(u) / u; }

}  // namespace

cd pw_E_integral(int sign, double x, cd z) {
    if (static_cast<double>(sign) * z.imag() <= 0) throw std::invalid_argument("pw_E_integral: sign * Im z > 0 required");
    // unit blocks [n - 1/2, n + 1/2] with n = -sign, -2 sign, ...; the bracket is 1 - e^{-2 pi i x n}
    cd acc = 0;
    for (long m = 1; m < 100000; ++m) {
        double n = -static_cast<double>(sign) * static_cast<double>(m);
        cd bracket = 1.0 - std::exp(-2 * M_PI * I * x * n);
        auto q = integrate([&](double y) { return std::exp(-2 * M_PI * I * y * (z - x)); }, n - 0.5, n + 0.5, 1e-17);
        cd term = 2 * M_PI * I * bracket * q.value;
        acc += term;
        if (std::abs(term) < 1e-18 * std::max(1.0, std::abs(acc)) && m > 2) break;
    }
    return acc;
}

cd pw_E_stated(int sign, double x, cd z) {
    cd u = z - x;
    return -static_cast<double>(sign) *
           (std::exp(M_PI * I * u) / u - M_PI * std::exp(-M_PI * I * z) / std::sin(M_PI * z) * sinc(M_PI * u));
}

cd pw_E_derived(int sign, double x, cd z) {
    // both signs continue the same meromorphic function up to the factor -sign
    cd u = z - x;
    return -static_cast<double>(sign) *
           (std::exp(M_PI * I * u) / u - M_PI * std::exp(M_PI * I * z) / std::sin(M_PI * z) * sinc(M_PI * u));
}

cd pw_Estar_series(int sign, double xi, cd w, double tol) {
    if (std::abs(xi) > 0.5) return 0.0;
    if (static_cast<double>(sign) * w.imag() <= 0) throw std::invalid_argument("pw_Estar_series: sign * Im w > 0 required");
    cd acc = M_PI * I;
    for (long n = 1; n < 10000000; ++n) {
        cd term = 2 * M_PI * I * std::exp(static_cast<double>(sign) * 2 * M_PI * I * static_cast<double>(n) * (w - xi));
        acc += term;
        if (std::abs(term) < tol) break;
    }
    return acc;
}

cd pw_Estar_stated(int sign, double xi, cd w) {
    if (std::abs(xi) > 0.5) return 0.0;
    return static_cast<double>(sign) * M_PI / std::tan(M_PI * (w - xi));
}

cd pw_Estar_derived(int sign, double xi, cd w) { return -pw_Estar_stated(sign, xi, w); }

PWCheck paley_wiener_check(double x, cd z, int sign) {
    PWCheck c;
    c.E.reference = pw_E_integral(sign, x, z);
    c.E.stated = pw_E_stated(sign, x, z);
    c.E.derived = pw_E_derived(sign, x, z);
    c.E.residual_stated = std::abs(c.E.stated - c.E.reference);
    c.E.residual_derived = std::abs(c.E.derived - c.E.reference);
    double xi = std::clamp(x, -0.5, 0.5);
    c.Estar.reference = pw_Estar_series(sign, xi, z);
    c.Estar.stated = pw_Estar_stated(sign, xi, z);
    c.Estar.derived = pw_Estar_derived(sign, xi, z);
    c.Estar.residual_stated = std::abs(c.Estar.stated - c.Estar.reference);
    c.Estar.residual_derived = std::abs(c.Estar.derived - c.Estar.reference);
    return c;
}

}  // namespace zi
