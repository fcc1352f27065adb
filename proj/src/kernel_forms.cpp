#include "zi/kernel_forms.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

namespace zi {

namespace {

struct KeyLess {
    bool operator()(const std::pair<mpq_class, int>& a, const std::pair<mpq_class, int>& b) const {
        if (a.first != b.first) return a.first < b.first;
        return a.second < b.second;
    }
};

std::mutex g_cache_mu;
std::map<std::pair<mpq_class, int>, std::vector<KernelCoefficientForm>, KeyLess> g_cache;

void check_args(long n, const mpq_class& k, int sign) {
    if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +1 or -1");
    if (k < 0) throw std::invalid_argument("weight must be nonnegative");
    if (n < zi::nu(k, sign)) throw std::invalid_argument("n below nu for this weight and sign");
}

KernelCoefficientForm make_form(long n, const mpq_class& k, int sign, const std::vector<mpq_class>& c, long nu_) {
    KernelCoefficientForm g;
    g.n = n;
    g.k = k;
    g.sign = sign;
    g.rep.weight = 2 - k;
    g.rep.sign = -sign;
    g.rep.jminus_power = sign > 0 ? 1 : 0;
    for (std::size_t i = 0; i < c.size(); ++i)
        if (c[i] != 0) g.rep.j_poly[nu_ + static_cast<long>(i)] = c[i];
    return g;
}

}  // namespace

long KernelCoefficientForm::nu() const { return zi::nu(k, sign); }

std::vector<mpq_class> KernelCoefficientForm::coeffs() const {
    long nu_ = nu();
    std::vector<mpq_class> c(static_cast<std::size_t>(n - nu_ + 1), mpq_class(0));
    for (auto& [m, v] : rep.j_poly) c[static_cast<std::size_t>(m - nu_)] = v;
    return c;
}

std::vector<KernelCoefficientForm> g_forms(long n_max, const mpq_class& k, int sign) {
    long nu_ = zi::nu(k, sign);
    check_args(n_max, k, sign);
    {
        std::lock_guard<std::mutex> lk(g_cache_mu);
        auto it = g_cache.find({k, sign});
        if (it != g_cache.end() && static_cast<long>(it->second.size()) >= n_max - nu_ + 1)
            return {it->second.begin(), it->second.begin() + (n_max - nu_ + 1)};
    }
    // tau side: theta^{2k} [J_-] J^{-m}, m = nu..n_max, each known through t^{n_max}
    long order = n_max + 1;
    auto th = pow_rational(theta_series(order), 2 * k);
    if (sign < 0) th = th * jminus_series(order);
    auto ji = invert(j_series(order + 2));
    auto cur = th;
    for (long m = 0; m < nu_; ++m) cur = cur * ji;
    // coef[n][m - nu]
    std::vector<std::vector<mpq_class>> coef(static_cast<std::size_t>(n_max + 1));
    for (long m = nu_; m <= n_max; ++m) {
        for (long n = m; n <= n_max; ++n) {
            auto& row = coef[static_cast<std::size_t>(n)];
            if (row.empty()) row.assign(static_cast<std::size_t>(n - nu_ + 1), mpq_class(0));
            row[static_cast<std::size_t>(m - nu_)] = cur.at(n);
        }
        cur = cur * ji;
    }
    std::vector<KernelCoefficientForm> out;
    for (long n = nu_; n <= n_max; ++n) {
        auto& row = coef[static_cast<std::size_t>(n)];
        if (row.empty()) row.assign(static_cast<std::size_t>(n - nu_ + 1), mpq_class(0));
        out.push_back(make_form(n, k, sign, row, nu_));
    }
    std::lock_guard<std::mutex> lk(g_cache_mu);
    auto& slot = g_cache[{k, sign}];
    if (slot.size() < out.size()) slot = out;
    return out;
}

KernelCoefficientForm g_form(long n, const mpq_class& k, int sign) {
    check_args(n, k, sign);
    return g_forms(n, k, sign).back();
}

KernelCoefficientForm g_form_matcher(long n, const mpq_class& k, int sign) {
    check_args(n, k, sign);
    long nu_ = zi::nu(k, sign);
    // basis series theta^{4-2k} Y J^m, m = nu..n, known through t^0
    long order = 2;
    auto th = pow_rational(theta_series(order + n + 2), 4 - 2 * k);
    if (sign > 0) th = th * jminus_series(order + n + 2);
    auto j = j_series(order + n + 2);
    std::vector<FracPowerSeries> basis;
    auto cur = th;
    for (long m = 0; m < nu_; ++m) cur = cur * j;
    for (long m = nu_; m <= n; ++m) {
        basis.push_back(cur);
        cur = cur * j;
    }
    // triangular solve: target t^{-n} + 0 t^{-e} for nu <= e < n
    std::vector<mpq_class> c(static_cast<std::size_t>(n - nu_ + 1), mpq_class(0));
    for (long m = n; m >= nu_; --m) {
        mpq_class want = m == n ? 1 : 0;
        mpq_class have = 0;
        for (long mm = m + 1; mm <= n; ++mm) have += c[mm - nu_] * basis[mm - nu_].at(-m);
        mpq_class lead = basis[m - nu_].at(-m);
        c[m - nu_] = (want - have) / lead;
    }
    return make_form(n, k, sign, c, nu_);
}

cd g_eval(const KernelCoefficientForm& g, PointUH z) {
    auto p = eval_pack_d(z.c());
    auto c = g.coeffs();
    long nu_ = g.nu();
    cd poly = 0;
    for (long m = g.n; m >= nu_; --m) poly = poly * p.J + c[m - nu_].get_d();
    for (long m = 0; m < nu_; ++m) poly *= p.J;
    cd r = std::exp((4.0 - 2.0 * g.k.get_d()) * p.log_theta) * poly;
    if (g.sign > 0) r *= p.Jm;
    return r;
}

cd g_eval(long n, const mpq_class& k, int sign, PointUH z) { return g_eval(g_form(n, k, sign), z); }

cd kernel_eval(double k, int sign, cd tau, cd z) {
    long nu_ = sign > 0 ? static_cast<long>(std::floor((k + 4) / 4)) : static_cast<long>(std::floor((k + 2) / 4));
    return kernel_from_packs<cd>(k, sign, nu_, eval_pack_d(tau), eval_pack_d(z));
}

double poly_cancellation_bits(const KernelCoefficientForm& g) {
    double mx = 0;
    long nu_ = g.nu();
    auto c = g.coeffs();
    for (long m = nu_; m <= g.n; ++m) {
        const auto& v = c[m - nu_];
        if (v == 0) continue;
        double b = static_cast<double>(mpz_sizeinbase(v.get_num_mpz_t(), 2)) -
                   static_cast<double>(mpz_sizeinbase(v.get_den_mpz_t(), 2)) + 6.0 * m;
        mx = std::max(mx, b);
    }
    return mx;
}

}  // namespace zi
