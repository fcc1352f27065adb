#include "zi/alpha_coeffs.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <list>
#include <map>
#include <mutex>
#include <stdexcept>

#include "zi/modular_integral.hpp"
#include "zi/quadrature.hpp"
#include "zi/special.hpp"

namespace zi {

namespace {

constexpr double kGuardBits = 80;
constexpr int kGL = 64;
constexpr double kSplitPhi = 0.5;  // bulk panels above, cusp panels in u = 1/phi below

mpreal to_mp(const mpq_class& q) {
    mpreal r;
    mpfr_set_q(r.backend().data(), q.get_mpq_t(), MPFR_RNDN);
    return r;
}

double log2_abs(const mpq_class& q) {
    if (q == 0) return -std::numeric_limits<double>::infinity();
    long en, ed;
    double mn = mpz_get_d_2exp(&en, q.get_num_mpz_t());
    double md = mpz_get_d_2exp(&ed, q.get_den_mpz_t());
    return std::log2(std::abs(mn / md)) + static_cast<double>(en - ed);
}

// Bulk panels are stored as fractions of [kSplitPhi, pi/2] so that pi/2 is hit exactly in MPFR.
struct Panel {
    bool cusp;  // true: variable u = 1/phi
    double a, b;
};

}  // namespace

cd Phi::psi(cd z, double k, int sign) const {
    const cd i1(0, 1);
    return eval<cd>(z) - static_cast<double>(sign) * std::pow(z / i1, -k) * eval<cd>(-1.0 / z);
}

double Phi::arc_bits() const {
    switch (kind) {
        case Kind::Power:
            return std::abs(s.imag()) * M_PI / 2 / std::log(2.0);
        case Kind::Gauss:
            return 0;
        case Kind::OddGauss:
            return std::max(0.0, std::log2(std::abs(x)));
    }
    return 0;
}

ArcTable::ArcTable(const mpq_class& k, int sign, long n_max, unsigned bits, ArcOptions opt)
    : k_(k), sign_(sign), nu_(zi::nu(k, sign)), bits_(bits), target_(opt.target) {
    n_max_ = std::max(n_max, nu_);
    auto forms = g_forms(n_max_, k, sign);
    for (auto& g : forms) poly_bits_ = std::max(poly_bits_, poly_cancellation_bits(g));
    double allowance = static_cast<double>(bits) - poly_bits_ - kGuardBits;
    if (allowance < 0) throw std::invalid_argument("arc table precision below the cancellation of its forms");

    const std::size_t nf = forms.size();
    std::vector<std::vector<double>> lc(nf);
    for (std::size_t i = 0; i < nf; ++i) {
        auto c = forms[i].coeffs();
        for (auto& v : c) lc[i].push_back(log2_abs(v) * std::log(2.0));
    }
    const double wk = 4 - 2 * k.get_d();
    // natural log of max_n |theta^{4-2k} Y sum_m c_m J^m| at phi = 1/u
    auto log_bound = [&](double u) {
        auto p = eval_pack_d(std::polar(1.0, 1.0 / u));
        double base = wk * p.log_theta.real() + (sign > 0 ? std::log(std::abs(p.Jm)) : 0.0);
        double lJ = std::log(std::abs(p.J));
        double best = -std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < nf; ++i) {
            for (std::size_t m = 0; m < lc[i].size(); ++m) {
                long pw = nu_ + static_cast<long>(m);
                double t = lc[i][m] + (pw == 0 ? 0.0 : pw * lJ);
                best = std::max(best, t + std::log(static_cast<double>(lc[i].size())));
            }
        }
        return base + best;
    };
    const double ltarget = std::log(opt.target) - allowance * std::log(2.0) - 3;
    double u_max = 1 / kSplitPhi;
    double lb = log_bound(u_max);
    while (u_max < 5000 && lb + std::log(2.0 / (u_max * u_max)) > ltarget) {
        u_max += 1;
        lb = log_bound(u_max);
    }
    trunc_log2_ = (lb + std::log(2.0 / (u_max * u_max))) / std::log(2.0);

    std::vector<Panel> panels;
    int P = opt.bulk_panels > 0 ? opt.bulk_panels : static_cast<int>(n_max_ / 4 + 6);
    P += P % 2;
    for (int i = 0; i < P; ++i) panels.push_back({false, static_cast<double>(i) / P, static_cast<double>(i + 1) / P});
    std::vector<Panel> cusp;
    for (double u = 1 / kSplitPhi; u < u_max;) {
        double hu = std::min(4.0, 0.4 * u);
        cusp.push_back({true, u, u + hu});
        u += hu;
    }
    if (cusp.size() % 2 == 1) {
        double a = cusp.back().b;
        cusp.push_back({true, a, a + std::min(4.0, 0.4 * a)});
    }
    panels.insert(panels.end(), cusp.begin(), cusp.end());
    std::vector<Panel> coarse;
    for (std::size_t i = 0; i + 1 < panels.size(); i += 2) coarse.push_back({panels[i].cusp, panels[i].a, panels[i + 1].b});

    MpPrecision prec(bits);
    const auto& gl = gl_mp(kGL, bits);
    std::vector<std::vector<mpreal>> cm(nf);
    for (std::size_t i = 0; i < nf; ++i)
        for (auto& v : forms[i].coeffs()) cm[i].push_back(to_mp(v));
    const mpreal wkm = to_mp(mpq_class(4 - 2 * k));
    const mpcomplex mhalf_i(mpreal(0), mpreal(-0.5));

    auto build = [&](const std::vector<Panel>& ps, std::vector<mpcomplex>& zs, std::vector<std::vector<mpcomplex>>& G,
                     std::vector<double>& lmax) {
        G.assign(nf, {});
        const mpreal span = boost::math::constants::half_pi<mpreal>() - mpreal(kSplitPhi);
        for (const auto& p : ps) {
            mpreal a = p.cusp ? mpreal(p.a) : mpreal(kSplitPhi) + span * mpreal(p.a);
            mpreal b = p.cusp ? mpreal(p.b) : mpreal(kSplitPhi) + span * mpreal(p.b);
            mpreal c = (a + b) / 2, hw = (b - a) / 2;
            for (int q = 0; q < kGL; ++q) {
                mpreal v = c + hw * gl.x[q];
                mpreal w = hw * gl.w[q];
                mpreal ph = v;
                if (p.cusp) {
                    ph = 1 / v;
                    w = w / (v * v);
                }
                mpcomplex z(boost::multiprecision::cos(ph), boost::multiprecision::sin(ph));
                auto pk = eval_pack<mpcomplex>(z);
                mpcomplex pre = exp(pk.log_theta * wkm);
                if (sign > 0) pre = pre * pk.Jm;
                pre = pre * mhalf_i * z * w;
                std::vector<mpcomplex> jp(static_cast<std::size_t>(n_max_ + 1));
                jp[0] = mpcomplex(1);
                for (long m = 1; m <= n_max_; ++m) jp[m] = jp[m - 1] * pk.J;
                double lm = -std::numeric_limits<double>::infinity();
                for (std::size_t i = 0; i < nf; ++i) {
                    mpreal re = 0, im = 0;
                    for (std::size_t m = 0; m < cm[i].size(); ++m) {
                        const auto& J = jp[static_cast<std::size_t>(nu_) + m];
                        re += cm[i][m] * J.re;
                        im += cm[i][m] * J.im;
                    }
                    mpcomplex g = pre * mpcomplex(re, im);
                    double a = static_cast<double>(boost::multiprecision::log2(abs(g) + mpreal(1e-300)));
                    lm = std::max(lm, a);
                    G[i].push_back(g);
                }
                zs.push_back(z);
                lmax.push_back(lm);
            }
        }
    };
    build(panels, z_, G_, lmax_);
    build(coarse, zc_, Gc_, lmaxc_);
}

std::vector<cd> ArcTable::sum(const Phi& phi, const std::vector<mpcomplex>& z, const std::vector<std::vector<mpcomplex>>& G,
                              const std::vector<double>& lmax, double* round_log2) const {
    MpPrecision prec(bits_);
    const std::size_t nf = G.size();
    std::vector<mpreal> re(nf, mpreal(0)), im(nf, mpreal(0));
    const double skip = std::log2(target_) - 16;
    const bool mirror_real = phi.kind != Phi::Kind::Power || phi.s.imag() == 0;
    double top = -std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < z.size(); ++j) {
        cd zd = z[j].to_double();
        cd zm(-zd.real(), zd.imag());
        double pb = std::log2(std::max(std::abs(phi.eval<cd>(zd)), std::abs(phi.eval<cd>(zm))) + 1e-300);
        if (lmax[j] + pb < skip) continue;
        top = std::max(top, lmax[j] + pb);
        mpcomplex f1 = phi.eval<mpcomplex>(z[j]);
        // phi(-conj z) = conj phi(z) whenever phi is real on the imaginary axis
        mpcomplex f2 = mirror_real ? mpcomplex(f1.re, -f1.im) : phi.eval<mpcomplex>(mpcomplex(-z[j].re, z[j].im));
        mpreal pr = f1.re + f2.re, qt = f1.im - f2.im, qs = f1.im + f2.im, pd = f1.re - f2.re;
        for (std::size_t i = 0; i < nf; ++i) {
            const auto& g = G[i][j];
            // G f1 + conj(G) f2
            re[i] += g.re * pr - g.im * qt;
            im[i] += g.re * qs + g.im * pd;
        }
    }
    if (round_log2) *round_log2 = top - static_cast<double>(bits_) + std::log2(static_cast<double>(z.size()) + 1) + 2;
    std::vector<cd> out(static_cast<std::size_t>(n_max_ + 1), cd(0));
    for (std::size_t i = 0; i < nf; ++i)
        out[static_cast<std::size_t>(nu_) + i] = cd(static_cast<double>(re[i]), static_cast<double>(im[i]));
    return out;
}

std::vector<cd> ArcTable::coeffs(const Phi& phi, std::vector<double>* err) const {
    double rl = 0;
    auto v = sum(phi, z_, G_, lmax_, &rl);
    if (err) {
        double rc = 0;
        auto c = sum(phi, zc_, Gc_, lmaxc_, &rc);
        double fixed = std::exp2(trunc_log2_ + phi.arc_bits()) + std::exp2(rl) + std::exp2(rc) + target_;
        err->assign(v.size(), 0.0);
        for (std::size_t n = static_cast<std::size_t>(nu_); n < v.size(); ++n) (*err)[n] = std::abs(v[n] - c[n]) + fixed;
    }
    return v;
}

unsigned ArcTable::bits_needed(const Phi& phi) const {
    return static_cast<unsigned>(std::ceil(poly_bits_ + phi.arc_bits() + kGuardBits));
}

namespace {

struct TableKey {
    mpq_class k;
    int sign;
    long tier;
    bool operator<(const TableKey& o) const {
        if (k != o.k) return k < o.k;
        return std::tie(sign, tier) < std::tie(o.sign, o.tier);
    }
};

std::mutex table_mu;
std::map<TableKey, std::shared_ptr<const ArcTable>> tables;

double max_poly_bits(const mpq_class& k, int sign, long n_max) {
    double b = 0;
    for (auto& g : g_forms(std::max(n_max, nu(k, sign)), k, sign)) b = std::max(b, poly_cancellation_bits(g));
    return b;
}

// depth tiers: small tables are much cheaper per test function
long tier_for(long n_max) {
    for (long t : {16L, kArcDepth, kArcMax})
        if (n_max <= t) return t;
    return n_max;
}

}  // namespace

std::shared_ptr<const ArcTable> arc_table(const mpq_class& k, int sign, long n_max, const Phi& phi) {
    std::lock_guard<std::mutex> lk(table_mu);
    long tier = tier_for(n_max);
    auto& slot = tables[{k, sign, tier}];
    if (slot && slot->bits() >= slot->bits_needed(phi)) return slot;
    // slack keeps moderate |Im s| from forcing rebuilds
    double need = max_poly_bits(k, sign, tier) + phi.arc_bits() + kGuardBits + 64;
    unsigned bits = static_cast<unsigned>(std::ceil(need / 32.0) * 32);
    if (slot) bits = std::max(bits, slot->bits());
    slot = std::make_shared<const ArcTable>(k, sign, tier, bits);
    return slot;
}

namespace {

struct CacheKey {
    mpq_class k;
    int sign;
    int kind;
    double sr, si, x;
    bool operator<(const CacheKey& o) const {
        if (k != o.k) return k < o.k;
        return std::tie(sign, kind, sr, si, x) < std::tie(o.sign, o.kind, o.sr, o.si, o.x);
    }
};

struct CacheVal {
    std::vector<cd> v;
    std::vector<double> e;
};

std::mutex cache_mu;
std::map<CacheKey, CacheVal> value_cache;
std::list<CacheKey> lru;
constexpr std::size_t kCacheSize = 512;

}  // namespace

std::vector<cd> alpha_all(const mpq_class& k, int sign, const Phi& phi, long n_max, std::vector<double>* err) {
    if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +1 or -1");
    CacheKey key{k, sign, static_cast<int>(phi.kind), phi.s.real(), phi.s.imag(), phi.x};
    {
        std::lock_guard<std::mutex> lk(cache_mu);
        auto it = value_cache.find(key);
        if (it != value_cache.end() && static_cast<long>(it->second.v.size()) > n_max) {
            std::vector<cd> v(it->second.v.begin(), it->second.v.begin() + n_max + 1);
            if (err) err->assign(it->second.e.begin(), it->second.e.begin() + n_max + 1);
            return v;
        }
    }
    CacheVal cv;
    if (n_max <= kArcMax) {
        auto t = arc_table(k, sign, n_max, phi);
        cv.v = t->coeffs(phi, &cv.e);
    } else {
        cv.v = alpha_route_b(k, sign, phi, n_max, &cv.e);
    }
    std::vector<cd> v(cv.v.begin(), cv.v.begin() + n_max + 1);
    if (err) err->assign(cv.e.begin(), cv.e.begin() + n_max + 1);
    std::lock_guard<std::mutex> lk(cache_mu);
    if (!value_cache.count(key)) {
        lru.push_back(key);
        if (lru.size() > kCacheSize) {
            value_cache.erase(lru.front());
            lru.pop_front();
        }
    }
    value_cache[key] = std::move(cv);
    return v;
}

AlphaValue alpha(long n, const mpq_class& k, int sign, cd s, double tol) {
    if (n < 0) throw std::invalid_argument("n must be nonnegative");
    if (!(tol > 0)) throw std::invalid_argument("tol must be positive");
    std::vector<double> err;
    auto v = alpha_all(k, sign, Phi::power(s), std::max(n, kArcDepth), &err);
    return {v[static_cast<std::size_t>(n)], err[static_cast<std::size_t>(n)]};
}

AlphaTable make_alpha_table(const mpq_class& k, int sign, cd s, long n_max) {
    AlphaTable t;
    t.k = k;
    t.sign = sign;
    t.s = s;
    t.values = alpha_all(k, sign, Phi::power(s), n_max, &t.quad_error);
    return t;
}

FValue F_eval(PointUH tau, cd s, const mpq_class& k, int sign, const AlphaTable& table) {
    cd t = tau.c();
    double err = 0;
    for (double e : table.quad_error) err = std::max(err, e);
    FEvaluator fe(k, sign, Phi::power(s), table.values, err);
    if (t.imag() >= FEvaluator::kFourierMinIm) {
        double tail = 0;
        cd v = fe.fourier(t, &tail);
        return {v, tail + err, false};
    }
    if (FEvaluator::in_domain(t)) return {fe.contour(t), 1e-10 + err, true};
    throw UnsupportedRegion("tau is below the Fourier regime and outside the fundamental domain");
}

PartialSum partial_sum_alpha(double x, const mpq_class& k, int sign, cd s, const std::vector<cd>& values) {
    PartialSum r;
    long top = static_cast<long>(std::floor(x));
    if (top >= static_cast<long>(values.size())) throw std::invalid_argument("partial sum beyond the coefficient table");
    for (long n = 0; n <= top; ++n) r.sum += values[static_cast<std::size_t>(n)];
    double kd = k.get_d();
    double px = M_PI * x;
    r.main_terms = static_cast<double>(sign) * values[0] * std::pow(px, kd) * rgamma_c(kd + 1) +
                   std::pow(cd(px), s) * rgamma_c(s + 1.0);
    r.residual = r.sum - r.main_terms;
    return r;
}

}  // namespace zi
