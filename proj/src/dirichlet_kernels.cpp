#include "zi/dirichlet_kernels.hpp"

#include <cmath>
#include <stdexcept>

#include "zi/quadrature.hpp"

namespace zi {

namespace {

constexpr double kPoleGap = 1e-8;
constexpr double kLimitStep = 1e-3;

// (f(x0 + h) + f(x0 - h))/2 with one Richardson step in h^2
cd symmetric_limit(const std::function<cd(cd)>& f, cd x0) {
    auto avg = [&](double h) { return 0.5 * (f(x0 + h) + f(x0 - h)); };
    return (4.0 * avg(kLimitStep / 2) - avg(kLimitStep)) / 3.0;
}

bool near(cd a, cd b, double gap) { return std::abs(a - b) < gap; }

// The same representation in MPFR, for w where the pieces cancel to far below their size.
cd A_mp(cd w, cd s, double k, int eps, const std::vector<cd>& a, double t_max) {
    const unsigned bits = 192;
    MpPrecision prec(bits);
    const auto& gl = gl_mp(24, bits);
    mpcomplex W(w), S(s), K{mpreal(k)}, one(1), E(eps);
    mpcomplex acc = one / (W - S) - E / (W - (K - S));
    mpcomplex a0(a[0]);
    if (std::abs(a[0]) > 1e-12) acc -= a0 * (one / W + E / (K - W));
    std::vector<mpcomplex> am;
    for (cd v : a) am.emplace_back(v);
    const mpreal pi = boost::math::constants::pi<mpreal>();
    mpcomplex wm1 = W - one, kw1 = K - W - one;
    const double h = 0.5;
    for (double lo = 1; lo < t_max - 1e-12; lo += h) {
        mpreal c = mpreal(lo + h / 2), hw = mpreal(h / 2);
        for (std::size_t i = 0; i < gl.x.size(); ++i) {
            mpreal t = c + hw * gl.x[i];
            mpreal q = boost::multiprecision::exp(-pi * t);
            mpcomplex G;
            for (std::size_t n = am.size() - 1; n >= 1; --n) G = (G + am[n]) * q;
            mpcomplex lt(boost::multiprecision::log(t));
            acc += G * (exp(wm1 * lt) + E * exp(kw1 * lt)) * (hw * gl.w[i]);
        }
    }
    return acc.to_double();
}

KValue A_from_coeffs(cd w, cd s, double k, int eps, const std::vector<cd>& a, const std::vector<double>& aerr,
                     const KernelContext& ctx) {
    cd a0 = a[0];
    bool has_a0 = std::abs(a0) > 1e-12;
    if (near(w, s, kPoleGap)) throw PoleError("A: pole at w = s", s, 1.0);
    if (near(w, k - s, kPoleGap)) throw PoleError("A: pole at w = k - s", k - s, -static_cast<double>(eps));
    if (has_a0 && near(w, 0.0, kPoleGap)) throw PoleError("A: pole at w = 0", 0.0, -a0);
    if (has_a0 && near(w, k, kPoleGap)) throw PoleError("A: pole at w = k", k, static_cast<double>(eps) * a0);

    cd poles = 1.0 / (w - s) - static_cast<double>(eps) / (w - (k - s));
    if (has_a0) poles -= a0 * (1.0 / w + static_cast<double>(eps) / (k - w));

    const std::size_t depth = a.size();
    auto G = [&](double t) {
        cd q = std::exp(-M_PI * t), acc = 0;
        for (std::size_t n = depth - 1; n >= 1; --n) acc = (acc + a[n]) * q;
        return acc;
    };
    double scale = 0;
    for (std::size_t n = 1; n < depth; ++n) scale = std::max(scale, std::abs(a[n]));
    auto integrand = [&](double t) {
        double lt = std::log(t);
        return G(t) * (std::exp((w - 1.0) * lt) + static_cast<double>(eps) * std::exp((k - w - 1.0) * lt));
    };
    auto q = integrate(integrand, 1.0, ctx.t_max, ctx.tol * std::max(1.0, scale));

    // tails: beyond t_max, and beyond the Fourier depth at t = 1
    double pmax = std::max(w.real() - 1, k - w.real() - 1);
    double tail_t = scale * std::exp(-M_PI * ctx.t_max) * std::pow(ctx.t_max, std::max(pmax, 0.0)) * 2 / M_PI;
    double tail_n = scale * std::pow(static_cast<double>(depth), 0.5) * std::exp(-M_PI * static_cast<double>(depth)) *
                    std::pow(ctx.t_max, std::max(pmax, 0.0)) * 2;
    double coeff_err = 0;
    for (std::size_t n = 1; n < depth; ++n) coeff_err += aerr[n] * std::exp(-M_PI * static_cast<double>(n));
    coeff_err *= 2 * std::pow(ctx.t_max, std::max(pmax, 0.0));
    double err = q.err + tail_t + tail_n + coeff_err + (has_a0 ? aerr[0] * (1 / std::abs(w) + 1 / std::abs(k - w)) : 0) +
                 4e-16 * std::max(std::abs(poles), std::abs(q.value));
    cd value = poles + q.value;
    double size = std::max(std::abs(poles), std::abs(q.value));
    if (std::abs(value) < 1e-5 * size) {
        // cancellation: redo in MPFR over a longer range; rounding of the inputs is what remains
        double t_far = std::max(ctx.t_max, 24.0);
        value = A_mp(w, s, k, eps, a, t_far);
        double in_round = 0;
        for (std::size_t n = 0; n < depth; ++n) in_round += std::abs(a[n]) * std::exp(-M_PI * static_cast<double>(n));
        err = 1.2e-16 * in_round * 2 * std::pow(t_far, std::max(pmax, 0.0)) + coeff_err +
              scale * std::exp(-M_PI * t_far) * std::pow(t_far, std::max(pmax, 0.0));
    }
    return {value, err};
}

std::vector<cd> coeffs_for(const mpq_class& k, int sign, cd s, long depth, std::vector<double>* err) {
    return alpha_all(k, sign, Phi::power(s), depth, err);
}

const mpq_class kHalf(1, 2);
const mpq_class kThreeHalves(3, 2);

}  // namespace

KValue A_eval(cd w, cd s, const KernelContext& ctx) {
    std::vector<double> aerr;
    auto a = coeffs_for(ctx.k, ctx.sign, s, ctx.depth, &aerr);
    return A_from_coeffs(w, s, ctx.k.get_d(), ctx.sign, a, aerr, ctx);
}

cd A_dirichlet_series(cd w, cd s, const KernelContext& ctx, long N) {
    auto a = coeffs_for(ctx.k, ctx.sign, s, N, nullptr);
    cd acc = 0;
    for (long n = N; n >= 1; --n) acc += a[n] * std::exp(-w * std::log(static_cast<double>(n)));
    return std::exp(-w * std::log(M_PI)) * gamma_c(w) * acc;
}

cd h_coeff(long n, int sign, cd s, long depth) {
    if (n < 1) throw std::invalid_argument("h_coeff: n >= 1 required");
    if (sign == 1 && n == 1) return 0.0;
    if (std::abs(s) < 1e-6) return symmetric_limit([&](cd x) { return h_coeff(n, sign, x, depth); }, 0.0);
    if (std::abs(s - 1.0) < 1e-6) return symmetric_limit([&](cd x) { return h_coeff(n, sign, x, depth); }, 1.0);
    auto a = coeffs_for(kHalf, sign, s / 2.0, std::max(n, depth), nullptr);
    cd acc = 0;
    for (long d = 1; d * d <= n; ++d)
        if (n % (d * d) == 0) acc += static_cast<double>(mobius(d)) * a[n / (d * d)];
    return zeta_star(s) / 2.0 * acc;
}

std::vector<cd> h_coeffs(long N, int sign, cd s) {
    if (std::abs(s) < 1e-6 || std::abs(s - 1.0) < 1e-6) {
        std::vector<cd> out(N);
        for (long n = 1; n <= N; ++n) out[n - 1] = h_coeff(n, sign, s);
        return out;
    }
    auto a = coeffs_for(kHalf, sign, s / 2.0, N, nullptr);
    cd z = zeta_star(s) / 2.0;
    std::vector<cd> out(N);
    for (long n = 1; n <= N; ++n) {
        if (sign == 1 && n == 1) continue;
        cd acc = 0;
        for (long d = 1; d * d <= n; ++d)
            if (n % (d * d) == 0) acc += static_cast<double>(mobius(d)) * a[n / (d * d)];
        out[n - 1] = z * acc;
    }
    return out;
}

KValue H_eval(cd w, cd s, int sign, long depth) {
    auto limit = [&](cd x0, bool in_w) {
        double e = 0;
        cd v = symmetric_limit(
            [&](cd x) {
                auto r = in_w ? H_eval(x, s, sign, depth) : H_eval(w, x, sign, depth);
                e = std::max(e, r.err);
                return r.value;
            },
            x0);
        return KValue{v, e / kLimitStep + 1e-9 * std::abs(v)};
    };
    if (std::abs(s) < 1e-6) return limit(0.0, false);
    if (std::abs(s - 1.0) < 1e-6) return limit(1.0, false);
    if (std::abs(w) < 1e-6) return limit(0.0, true);
    if (std::abs(w - 1.0) < 1e-6) return limit(1.0, true);
    if (near(w, s, kPoleGap)) throw PoleError("H: pole at w = s", s, 1.0);
    if (near(w, 1.0 - s, kPoleGap)) throw PoleError("H: pole at w = 1 - s", 1.0 - s, -static_cast<double>(sign));

    KernelContext ctx;
    ctx.k = kHalf;
    ctx.sign = sign;
    ctx.depth = depth;
    std::vector<double> aerr;
    auto a = coeffs_for(kHalf, sign, s / 2.0, depth, &aerr);
    auto A = A_from_coeffs(w / 2.0, s / 2.0, 0.5, sign, a, aerr, ctx);
    cd zs = zeta_star(s), zw = zeta_star(w);
    // judge zeros by zeta itself; the gamma factor makes zeta* tiny high on the line
    if (std::abs(zw) < 1e-11 * std::abs(gamma_R(w))) {
        cd res = circle_mean([&](cd x) { return H_eval(x, s, sign, depth).value; }, w, 1e-3, 16);
        throw PoleError("H: zero of zeta*(w)", w, res);
    }
    cd v = zs / 2.0 * (A.value / zw - (sign == 1 ? a[1] : cd(0)));
    double err = std::abs(zs / 2.0) * (A.err / std::abs(zw) + (sign == 1 ? aerr[1] : 0));
    return {v, err};
}

KValue D_eval(cd w, cd s, int sign, long depth) {
    if (near(w, s, kPoleGap)) throw PoleError("D: pole at w = s", s, gamma_R(s) / (2.0 * gamma_R(s)));
    KernelContext ctx;
    ctx.k = kHalf;
    ctx.sign = sign;
    ctx.depth = depth;
    std::vector<double> aerr;
    auto a = coeffs_for(kHalf, sign, s / 2.0, depth, &aerr);
    auto A = A_from_coeffs(w / 2.0, s / 2.0, 0.5, sign, a, aerr, ctx);
    cd gs = gamma_R(s) / 2.0;
    cd inner = A.value * rgamma_c(w / 2.0) * std::exp(w / 2.0 * std::log(M_PI));
    if (sign == 1) inner -= a[1] * zeta(w);
    return {gs * inner, std::abs(gs) * A.err * std::abs(rgamma_c(w / 2.0) * std::exp(w / 2.0 * std::log(M_PI)))};
}

cd U_n(long n, cd z) { return U_all(n, z)[n - 1]; }

std::vector<cd> U_all(long N, cd z) {
    auto h = h_coeffs(N, -1, cd(0.5, 0) + cd(0, 1) * z);
    for (long n = 1; n <= N; ++n) h[n - 1] /= 2 * M_PI * std::pow(static_cast<double>(n), 0.25);
    return h;
}

cd laurent_coefficient(const std::function<cd(cd)>& g, cd center, int j, double eps, int M) {
    if (eps <= 0 || j < 0) throw std::invalid_argument("laurent_coefficient: eps > 0 and j >= 0 required");
    double fact = std::tgamma(j + 1.0);
    cd ij = std::pow(cd(0, 1), -j);
    return circle_mean([&](cd w) { return ij * std::pow(w - center, j) / fact * g(w); }, center, eps, M);
}

double V_guard(cd rho, cd z, const std::vector<double>& neighbors) {
    cd s = cd(0.5, 0) + cd(0, 1) * z;
    double g = std::min(std::abs(rho - s), std::abs(rho - (1.0 - s)));
    for (double gam : neighbors)
        for (double sg : {gam, -gam}) {
            cd r2(0.5, sg);
            double d = std::abs(r2 - rho);
            if (d > 1e-9) g = std::min(g, d);
        }
    return g;
}

cd V_eval(cd rho, int j, cd z, const std::vector<double>& neighbors, VOptions opt) {
    double guard = V_guard(rho, z, neighbors);
    if (opt.eps == 0 && guard < 1e-3) {
        // z sits on a node: V is entire in z, so take its mean over a small circle
        double others = V_guard(rho, cd(1e9, 0), neighbors);
        double r = std::min(0.05, 0.25 * others);
        const int mz = 16;
        cd acc = 0;
        for (int i = 0; i < mz; ++i) acc += V_eval(rho, j, z + std::polar(r, 2 * M_PI * i / mz), neighbors, opt);
        return acc / static_cast<double>(mz);
    }
    double eps = opt.eps > 0 ? opt.eps : 0.4 * guard;
    if (eps >= guard) throw std::invalid_argument("V_eval: circle radius violates the guard distance");
    cd s = cd(0.5, 0) + cd(0, 1) * z;
    // s = 0 and s = 1 are removable in z; the completed zeta factor is not
    if (std::abs(s) < 1e-6 || std::abs(s - 1.0) < 1e-6)
        return symmetric_limit([&](cd x) { return V_eval(rho, j, x, neighbors, opt); }, z);
    KernelContext ctx;
    ctx.k = kHalf;
    ctx.sign = -1;
    ctx.depth = opt.depth;
    std::vector<double> aerr;
    auto a = coeffs_for(kHalf, -1, s / 2.0, opt.depth, &aerr);
    cd zs = zeta_star(s) / 2.0;
    auto H = [&](cd w) { return zs * A_from_coeffs(w / 2.0, s / 2.0, 0.5, -1, a, aerr, ctx).value / zeta_star(w); };
    return -laurent_coefficient(H, rho, j, eps, opt.points);
}

KValue H_chi_eval(cd w, cd s, int delta, const CharacterRep& chi, long depth) {
    if (!chi.primitive) throw std::invalid_argument("H_chi_eval: primitive character required");
    double a = chi.even ? 0 : 1;
    const mpq_class& k = chi.even ? kHalf : kThreeHalves;
    KernelContext ctx;
    ctx.k = k;
    ctx.sign = delta;
    ctx.depth = depth;
    std::vector<double> aerr;
    auto al = coeffs_for(k, delta, (s + a) / 2.0, depth, &aerr);
    auto A = A_from_coeffs((w + a) / 2.0, (s + a) / 2.0, k.get_d(), delta, al, aerr, ctx);
    cd ratio = L_star(s, chi) / (2.0 * L_star(w, chi));
    return {ratio * A.value, std::abs(ratio) * A.err};
}

}  // namespace zi
