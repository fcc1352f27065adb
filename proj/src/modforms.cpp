#include "zi/modforms.hpp"

#include <sstream>

namespace zi {

FracPowerSeries theta_series(long order) {
    std::vector<mpq_class> c(static_cast<std::size_t>(order), mpq_class(0));
    for (long n = 0; n * n < order; ++n) c[n * n] += n == 0 ? 1 : 2;
    return FracPowerSeries(2, 0, std::move(c), order);
}

FracPowerSeries lambda_series(long order) {
    // 16 t prod (1+t^{2n})^8 (1+t^{2n-1})^{-8}, known to t^{order-1}
    long inner = std::max(1L, order - 1);
    auto one = FracPowerSeries::one(2, inner);
    FracPowerSeries num = one, den = one;
    for (long m = 1; m < inner; ++m) {
        std::vector<mpq_class> f(static_cast<std::size_t>(inner), mpq_class(0));
        f[0] = 1;
        f[m] = 1;
        FracPowerSeries fac(2, 0, std::move(f), inner);
        if (m % 2 == 0)
            num = num * fac;
        else
            den = den * fac;
    }
    auto ratio = pow_int(num * invert(den), 8);
    return ratio.scale(16).shift(1);
}

FracPowerSeries j_series(long order) {
    auto lam = lambda_series(order + 2);
    auto one = FracPowerSeries::one(2, order + 2);
    return invert(lam * (one - lam)).scale(16).truncate(order);
}

FracPowerSeries jminus_series(long order) {
    auto j = j_series(order + 2);
    auto inner = FracPowerSeries::one(2, order + 4) - invert(j).scale(64);
    return pow_rational(inner, mpq_class(1, 2)).truncate(order);
}

FracPowerSeries cusp1_series(CuspForm form, long order) {
    // the q-order equals the t-order divided by two, so work at 2*order in t
    long t_order = 2 * order;
    switch (form) {
        case CuspForm::J: {
            auto lam = lambda_series(t_order + 1);
            auto one = FracPowerSeries::one(2, t_order + 1);
            return (lam * lam * invert(lam - one)).scale(16).truncate(t_order);
        }
        case CuspForm::Jminus: {
            auto lam = lambda_series(t_order + 3);
            return (invert(lam).scale(2) - FracPowerSeries::one(2, t_order + 3)).truncate(t_order);
        }
        case CuspForm::Lambda: {
            auto lam = lambda_series(t_order + 3);
            return ((lam - FracPowerSeries::one(2, t_order + 3)) * invert(lam)).truncate(t_order);
        }
        case CuspForm::ThetaScaled: {
            // (1/2) theta_2 = q^{1/8} (lambda/(16 t))^{1/4} theta at u = q^{1/8} = t^{1/4}
            auto lam = lambda_series(t_order + 1);
            auto base = lam.shift(-1).scale(mpq_class(1, 16));
            auto r = pow_rational(base, mpq_class(1, 4)) * theta_series(t_order);
            return r.lift(8).shift(1).truncate(8 * order);
        }
    }
    throw std::logic_error("unknown cusp form");
}

long nu_plus(const mpq_class& k) {
    mpz_class f;
    mpq_class v = (k + 4) / 4;
    mpz_fdiv_q(f.get_mpz_t(), v.get_num_mpz_t(), v.get_den_mpz_t());
    return f.get_si();
}

long nu_minus(const mpq_class& k) {
    mpz_class f;
    mpq_class v = (k + 2) / 4;
    mpz_fdiv_q(f.get_mpz_t(), v.get_num_mpz_t(), v.get_den_mpz_t());
    return f.get_si();
}

long nu(const mpq_class& k, int sign) { return sign > 0 ? nu_plus(k) : nu_minus(k); }

long mf_dim(const mpq_class& k, int sign) {
    if (k < 0) return 0;
    return nu(k, sign);
}

std::vector<ModularFormRep> mf_basis(const mpq_class& k, int sign) {
    std::vector<ModularFormRep> out;
    long d = mf_dim(k, sign);
    for (long j = 0; j < d; ++j) {
        ModularFormRep f;
        f.weight = k;
        f.sign = sign;
        if (sign > 0) {
            // theta^{2k} J (1/J)^{j+1}
            f.jminus_power = 0;
            f.j_poly[-j] = 1;
        } else {
            f.jminus_power = 1;
            f.j_poly[-j] = 1;
        }
        out.push_back(f);
    }
    return out;
}

FracPowerSeries ModularFormRep::q_expansion(long order) const {
    long lo = 0, hi = 0;
    for (auto& [m, c] : j_poly) {
        lo = std::min(lo, m);
        hi = std::max(hi, m);
    }
    // J^m with m > 0 lowers the base by m, so extend the working order
    long work = order + hi + 2;
    auto j = j_series(work);
    auto ji = invert(j);
    auto th = pow_rational(theta_series(work), 2 * weight);
    FracPowerSeries poly = FracPowerSeries::zero(2, work);
    for (auto& [m, c] : j_poly) {
        if (c == 0) continue;
        auto term = m >= 0 ? pow_int(j, m) : pow_int(ji, -m);
        if (m == 0) term = FracPowerSeries::one(2, work);
        poly = poly + term.scale(c);
    }
    auto r = th * poly;
    if (jminus_power) r = r * jminus_series(work);
    return r.truncate(order);
}

FracPowerSeries ModularFormRep::cusp1_expansion(long order) const {
    // theta^{2k}(1 - 1/tau) = 2^{2k}(tau/i)^k ((1/2)theta_2)^{2k}; the factor is removed here.
    // ((1/2)theta_2)^{2k} = q^{k/4} * (unit series at denom 8)^{2k}
    long work = order + 4;
    auto ht = cusp1_series(CuspForm::ThetaScaled, work);
    auto unit = ht.shift(-1);
    auto th = pow_rational(unit, 2 * weight);
    auto jc = cusp1_series(CuspForm::J, work + 4);
    auto jmc = cusp1_series(CuspForm::Jminus, work + 4);
    FracPowerSeries poly = FracPowerSeries::zero(2, 2 * work);
    for (auto& [m, c] : j_poly) {
        if (c == 0) continue;
        FracPowerSeries term = m > 0 ? pow_int(jc, m) : m < 0 ? pow_int(invert(jc), -m) : FracPowerSeries::one(2, 2 * work);
        poly = poly + term.scale(c);
    }
    auto r = th * poly;
    if (jminus_power) r = r * jmc;
    // shift by q^{k/4}: k/4 = (2k)/8, integral at denom 8 only when 2k is an integer
    mpq_class sh = weight * 2;
    if (sh.get_den() != 1) throw QSeriesError("cusp expansion needs 2k integral");
    r = r.lift(8).shift(sh.get_num().get_si());
    return r.truncate(std::min(r.trunc(), 8 * order));
}

cd ModularFormRep::eval(PointUH z) const {
    auto p = eval_pack_d(z.c());
    cd poly = 0;
    for (auto& [m, c] : j_poly) poly += c.get_d() * std::pow(p.J, static_cast<double>(m));
    cd r = std::exp(2.0 * weight.get_d() * p.log_theta) * poly;
    if (jminus_power) r *= p.Jm;
    return r;
}

std::string ModularFormRep::to_string() const {
    std::ostringstream os;
    os << "theta^(" << mpq_class(2 * weight).get_str() << ")";
    if (jminus_power) os << "*Jminus";
    os << "*(";
    bool first = true;
    for (auto& [m, c] : j_poly) {
        if (c == 0) continue;
        if (!first) os << " + ";
        os << "(" << c.get_str() << ")*J^" << m;
        first = false;
    }
    if (first) os << "0";
    os << ")";
    return os.str();
}

FormPack<cd> eval_pack_d(cd z, Chart chart) { return eval_pack<cd>(z, chart); }

cd eval(Form f, PointUH z) {
    auto p = eval_pack_d(z.c());
    switch (f) {
        case Form::Theta:
            return p.theta;
        case Form::J:
            return p.J;
        case Form::Jminus:
            return p.Jm;
        case Form::Lambda:
            return p.lambda;
    }
    throw std::logic_error("unknown form");
}

cd eval_theta_power(double two_k, PointUH z) { return std::exp(two_k * eval_pack_d(z.c()).log_theta); }

cd jderiv_formula(PointUH z) {
    auto p = eval_pack_d(z.c());
    cd th2 = p.theta * p.theta;
    return cd(0, -M_PI) * th2 * th2 * p.J * p.Jm;
}

}  // namespace zi
