#pragma once

#include <complex>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "zi/mp.hpp"
#include "zi/qseries.hpp"

namespace zi {

using cd = std::complex<double>;

struct PointUH {
    double re = 0.0, im = 1.0;
    PointUH() = default;
    PointUH(double r, double i) : re(r), im(i) {
        if (!(i > 0)) throw std::invalid_argument("point must lie in the upper half-plane");
    }
    explicit PointUH(cd z) : PointUH(z.real(), z.imag()) {}
    cd c() const { return {re, im}; }
};

struct PrecisionLoss : std::runtime_error {
    double achieved;
    PrecisionLoss(const std::string& what, double err) : std::runtime_error(what), achieved(err) {}
};

// Both charts need |t| <= exp(-pi * kChartMinIm) in their own variable.
inline constexpr double kChartMinIm = 0.35;

// ---- exact expansions in t = q^{1/2} (denom 2) ----
FracPowerSeries theta_series(long order);
FracPowerSeries lambda_series(long order);
FracPowerSeries j_series(long order);
FracPowerSeries jminus_series(long order);

enum class CuspForm { ThetaScaled, J, Jminus, Lambda };

// Expansion at the cusp 1 in q = e^{2 pi i tau} of form(1 - 1/tau).
// ThetaScaled is (1/2)(tau/i)^{-1/2} theta(1 - 1/tau) at denom 8; the others are at denom 2.
FracPowerSeries cusp1_series(CuspForm form, long order);

// theta^{2k} J_-^{jminus_power} sum_m j_poly[m] J^m
struct ModularFormRep {
    mpq_class weight;
    int sign = 1;
    int jminus_power = 0;
    std::map<long, mpq_class> j_poly;

    FracPowerSeries q_expansion(long order) const;
    // Expansion at the cusp 1 with the automorphy factor 2^{2k}(tau/i)^{k} removed.
    FracPowerSeries cusp1_expansion(long order) const;
    cd eval(PointUH z) const;
    std::string to_string() const;
};

long nu_plus(const mpq_class& k);
long nu_minus(const mpq_class& k);
long nu(const mpq_class& k, int sign);

long mf_dim(const mpq_class& k, int sign);
std::vector<ModularFormRep> mf_basis(const mpq_class& k, int sign);

enum class Form { Theta, J, Jminus, Lambda };

cd eval(Form f, PointUH z);
cd eval_theta_power(double two_k, PointUH z);

// Values at one point; all share the chart selection.
template <class C>
struct FormPack {
    C theta, log_theta, J, Jm, lambda;
    // logarithms that stay finite where J underflows near the cusp 1
    C logJ, logJm;
    bool cusp = false;
};

enum class Chart { Auto, Bulk, Cusp };

template <class C>
FormPack<C> eval_pack(const C& z, Chart chart = Chart::Auto);

FormPack<cd> eval_pack_d(cd z, Chart chart = Chart::Auto);

// Values of theta_3, S_2 = sum_{n>=0} t^{n(n+1)} at nome t.
template <class C>
void theta_nome_sums(const C& t, C& th3, C& s2) {
    using R = typename ctraits<C>::real;
    R eps = ctraits<C>::eps();
    th3 = C(1);
    s2 = C(1);
    C t2 = t * t;
    // t^{n^2}: successive ratio t^{2n-1}
    C term = C(1), ratio = t;
    for (int n = 1; n < 100000; ++n) {
        term = term * ratio;
        ratio = ratio * t2;
        th3 = th3 + term * R(2);
        if (abs(term) < eps) break;
    }
    // t^{n(n+1)}: successive ratio t^{2n}
    term = C(1);
    ratio = t2;
    for (int n = 1; n < 100000; ++n) {
        term = term * ratio;
        ratio = ratio * t2;
        s2 = s2 + term;
        if (abs(term) < eps) break;
    }
}

template <class C>
FormPack<C> eval_pack(const C& z0, Chart chart) {
    using R = typename ctraits<C>::real;
    using std::floor;
    using std::log;
    const R pi = ctraits<C>::pi();
    R x = real(z0), y = imag(z0);
    if (!(y > 0)) throw std::invalid_argument("point must lie in the upper half-plane");
    // reduce Re z into [-1, 1)
    x = x - R(2) * floor((x + R(1)) / R(2));
    bool mirror = x < 0;
    if (mirror) x = -x;
    C z = ctraits<C>::make(x, y);
    C one_minus = C(1) - z;
    R ys = y / norm(one_minus);  // Im sigma for sigma = 1/(1-z)
    bool use_cusp;
    if (chart == Chart::Bulk) {
        use_cusp = false;
    } else if (chart == Chart::Cusp) {
        use_cusp = true;
    } else {
        use_cusp = ys > y;
    }
    R best = use_cusp ? ys : y;
    if (best < R(kChartMinIm)) {
        throw PrecisionLoss("point too close to the real line for both charts",
                            std::exp(-M_PI * ctraits<C>::to_double(best)));
    }
    FormPack<C> out;
    C i1 = ctraits<C>::make(R(0), R(1));
    if (!use_cusp) {
        C t = exp(i1 * z * pi);
        C th3, s2;
        theta_nome_sums(t, th3, s2);
        C r = s2 / th3;
        C r2 = r * r;
        C lam = t * r2 * r2 * R(16);
        out.theta = th3;
        out.log_theta = log(th3);
        out.lambda = lam;
        out.J = C(16) / (lam * (C(1) - lam));
        out.Jm = C(1) - lam * R(2);
        out.logJ = log(out.J);
        out.logJm = log(out.Jm);
    } else {
        C sigma = C(1) / one_minus;
        C ts = exp(i1 * sigma * pi);
        C th3, s2;
        theta_nome_sums(ts, th3, s2);
        C r = s2 / th3;
        C r2 = r * r;
        C ls = ts * r2 * r2 * R(16);  // lambda(sigma)
        // lambda(1 - 1/sigma) = (ls - 1)/ls
        out.lambda = (ls - C(1)) / ls;
        out.J = ls * ls * R(16) / (ls - C(1));
        out.Jm = C(2) / ls - C(1);
        C lls = C(log(R(16))) + i1 * sigma * pi + log(r2 * r2);
        out.logJ = C(log(R(16))) + lls * R(2) - log(C(1) - ls) + i1 * pi;
        out.logJm = log(C(2) - ls) - lls;
        C lsi = log(sigma / i1);
        out.log_theta = C(log(R(2))) + lsi * R(0.5) + i1 * sigma * (pi / R(4)) + log(s2);
        out.theta = exp(out.log_theta);
        out.cusp = true;
    }
    if (mirror) {
        out.theta = conj(out.theta);
        out.log_theta = conj(out.log_theta);
        out.J = conj(out.J);
        out.Jm = conj(out.Jm);
        out.lambda = conj(out.lambda);
        out.logJ = conj(out.logJ);
        out.logJm = conj(out.logJm);
    }
    return out;
}

// Derivative relation J' = -pi i theta^4 J J_-.
cd jderiv_formula(PointUH z);

}  // namespace zi
