#include "zi/qseries.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace zi {

FracPowerSeries::FracPowerSeries(long denom, long base, std::vector<mpq_class> coeffs, long trunc)
    : denom_(denom), base_(base), c_(std::move(coeffs)), trunc_(trunc) {
    if (denom_ <= 0) throw QSeriesError("denominator must be positive");
    if (base_ + static_cast<long>(c_.size()) > trunc_) c_.resize(std::max(0L, trunc_ - base_));
    normalize();
}

void FracPowerSeries::normalize() {
    for (auto& x : c_) x.canonicalize();
    std::size_t k = 0;
    while (k < c_.size() && c_[k] == 0) ++k;
    if (k == c_.size()) {
        c_.clear();
        base_ = trunc_;
        return;
    }
    if (k) {
        c_.erase(c_.begin(), c_.begin() + static_cast<long>(k));
        base_ += static_cast<long>(k);
    }
    // pad with explicit zeros up to the truncation order
    long want = trunc_ - base_;
    if (static_cast<long>(c_.size()) < want) c_.resize(want, mpq_class(0));
}

FracPowerSeries FracPowerSeries::zero(long denom, long trunc) { return FracPowerSeries(denom, trunc, {}, trunc); }

FracPowerSeries FracPowerSeries::one(long denom, long trunc) { return monomial(denom, 0, 1, trunc); }

FracPowerSeries FracPowerSeries::monomial(long denom, long exp, const mpq_class& c, long trunc) {
    if (exp >= trunc) return zero(denom, trunc);
    return FracPowerSeries(denom, exp, {c}, trunc);
}

mpq_class FracPowerSeries::at(long i) const {
    if (i >= trunc_) throw std::out_of_range("exponent beyond truncation order");
    if (i < base_) return 0;
    return c_[static_cast<std::size_t>(i - base_)];
}

mpq_class FracPowerSeries::coeff(const mpq_class& e) const {
    mpq_class u = e * denom_;
    u.canonicalize();
    if (u.get_den() != 1) {
        if (e * denom_ >= trunc_) throw std::out_of_range("exponent beyond truncation order");
        return 0;
    }
    mpz_class n = u.get_num();
    if (n >= trunc_) throw std::out_of_range("exponent beyond truncation order");
    return at(n.get_si());
}

FracPowerSeries FracPowerSeries::lift(long nd) const {
    if (nd % denom_ != 0) throw QSeriesError("lift target must be a multiple of denom");
    long m = nd / denom_;
    if (m == 1) return *this;
    if (is_zero()) return zero(nd, trunc_ * m);
    std::vector<mpq_class> out(static_cast<std::size_t>((trunc_ - base_) * m), mpq_class(0));
    for (std::size_t i = 0; i < c_.size(); ++i) out[i * m] = c_[i];
    long nt = trunc_ * m;
    return FracPowerSeries(nd, base_ * m, std::move(out), nt);
}

FracPowerSeries FracPowerSeries::truncate(long nt) const {
    if (nt >= trunc_) return *this;
    std::vector<mpq_class> out(c_.begin(), c_.begin() + std::max(0L, nt - base_));
    return FracPowerSeries(denom_, base_, std::move(out), nt);
}

FracPowerSeries FracPowerSeries::shift(long m) const {
    FracPowerSeries r = *this;
    r.base_ += m;
    r.trunc_ += m;
    return r;
}

FracPowerSeries FracPowerSeries::scale(const mpq_class& a) const {
    if (a == 0) return zero(denom_, trunc_);
    FracPowerSeries r = *this;
    for (auto& x : r.c_) x *= a;
    return r;
}

FracPowerSeries FracPowerSeries::negate_var() const {
    FracPowerSeries r = *this;
    for (std::size_t i = 0; i < r.c_.size(); ++i)
        if ((r.base_ + static_cast<long>(i)) % 2 != 0) r.c_[i] = -r.c_[i];
    return r;
}

bool FracPowerSeries::operator==(const FracPowerSeries& o) const {
    return denom_ == o.denom_ && base_ == o.base_ && trunc_ == o.trunc_ && c_ == o.c_;
}

std::string FracPowerSeries::dump() const {
    std::ostringstream os;
    os << "denom=" << denom_ << " base=" << base_ << " trunc=" << trunc_ << "\n";
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        mpq_class e(base_ + static_cast<long>(i), denom_);
        e.canonicalize();
        os << e.get_num() << (e.get_den() == 1 ? "" : "/" + e.get_den().get_str()) << ":"
           << c_[i].get_num() << "/" << c_[i].get_den() << "\n";
    }
    return os.str();
}

FracPowerSeries FracPowerSeries::parse(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    long d = 0, b = 0, t = 0;
    if (!std::getline(is, line) || std::sscanf(line.c_str(), "denom=%ld base=%ld trunc=%ld", &d, &b, &t) != 3)
        throw QSeriesError("bad series header");
    std::vector<mpq_class> c(static_cast<std::size_t>(std::max(0L, t - b)), mpq_class(0));
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        auto colon = line.find(':');
        if (colon == std::string::npos) throw QSeriesError("bad series line: " + line);
        mpq_class e(line.substr(0, colon));
        e.canonicalize();
        mpq_class v(line.substr(colon + 1));
        v.canonicalize();
        mpq_class u = e * d;
        if (u.get_den() != 1) throw QSeriesError("exponent not on the denominator grid");
        long i = u.get_num().get_si() - b;
        if (i < 0 || i >= static_cast<long>(c.size())) throw QSeriesError("exponent out of range");
        c[static_cast<std::size_t>(i)] = v;
    }
    return FracPowerSeries(d, b, std::move(c), t);
}

namespace {

long lcm_l(long a, long b) { return std::lcm(a, b); }

void common(const FracPowerSeries& a, const FracPowerSeries& b, FracPowerSeries& x, FracPowerSeries& y) {
    long d = lcm_l(a.denom(), b.denom());
    x = a.lift(d);
    y = b.lift(d);
}

}  // namespace

FracPowerSeries operator+(const FracPowerSeries& a0, const FracPowerSeries& b0) {
    FracPowerSeries a, b;
    common(a0, b0, a, b);
    long t = std::min(a.trunc(), b.trunc());
    long lo = std::min(a.base(), b.base());
    if (lo >= t) return FracPowerSeries::zero(a.denom(), t);
    std::vector<mpq_class> c(static_cast<std::size_t>(t - lo), mpq_class(0));
    for (long e = lo; e < t; ++e) c[static_cast<std::size_t>(e - lo)] = a.at(e) + b.at(e);
    return FracPowerSeries(a.denom(), lo, std::move(c), t);
}

FracPowerSeries operator-(const FracPowerSeries& a) { return a.scale(-1); }

FracPowerSeries operator-(const FracPowerSeries& a, const FracPowerSeries& b) { return a + (-b); }

FracPowerSeries mul(const FracPowerSeries& a0, const FracPowerSeries& b0) {
    FracPowerSeries a, b;
    common(a0, b0, a, b);
    long t = std::min(a.trunc() + b.base(), b.trunc() + a.base());
    if (a.is_zero() || b.is_zero()) {
        return FracPowerSeries::zero(a.denom(), t);
    }
    long base = a.base() + b.base();
    long n = t - base;
    if (n <= 0) return FracPowerSeries::zero(a.denom(), t);
    const auto& ac = a.coeffs();
    const auto& bc = b.coeffs();
    std::vector<mpq_class> c(static_cast<std::size_t>(n), mpq_class(0));
    for (long i = 0; i < n && i < static_cast<long>(ac.size()); ++i) {
        if (ac[i] == 0) continue;
        for (long j = 0; i + j < n && j < static_cast<long>(bc.size()); ++j) c[i + j] += ac[i] * bc[j];
    }
    return FracPowerSeries(a.denom(), base, std::move(c), t);
}

FracPowerSeries invert(const FracPowerSeries& a) {
    if (a.is_zero()) throw QSeriesError("cannot invert a series with zero leading coefficient");
    const auto& ac = a.coeffs();
    long n = a.trunc() - a.base();
    std::vector<mpq_class> r(static_cast<std::size_t>(n), mpq_class(0));
    mpq_class inv0 = 1 / ac[0];
    r[0] = inv0;
    for (long k = 1; k < n; ++k) {
        mpq_class s = 0;
        for (long j = 1; j <= k && j < static_cast<long>(ac.size()); ++j) s += ac[j] * r[k - j];
        r[k] = -s * inv0;
    }
    return FracPowerSeries(a.denom(), -a.base(), std::move(r), -a.base() + n);
}

FracPowerSeries pow_rational(const FracPowerSeries& a, const mpq_class& r0) {
    mpq_class r = r0;
    r.canonicalize();
    if (r.get_den() == 1 && (a.base() != 0 || a.is_zero() || a.coeffs()[0] != 1)) {
        return pow_int(a, r.get_num().get_si());
    }
    if (a.is_zero() || a.base() != 0 || a.coeffs()[0] != 1)
        throw QSeriesError("rational power needs base exponent 0 and constant term 1");
    const auto& ac = a.coeffs();
    long n = a.trunc();
    std::vector<mpq_class> b(static_cast<std::size_t>(n), mpq_class(0));
    b[0] = 1;
    // J. C. P. Miller recurrence for (1 + a_1 u + ...)^r
    for (long m = 1; m < n; ++m) {
        mpq_class s = 0;
        for (long k = 1; k <= m && k < static_cast<long>(ac.size()); ++k) {
            if (ac[k] == 0) continue;
            s += (r * k - (m - k)) * ac[k] * b[m - k];
        }
        b[m] = s / m;
    }
    return FracPowerSeries(a.denom(), 0, std::move(b), n);
}

FracPowerSeries pow_int(const FracPowerSeries& a, long r) {
    if (a.is_zero()) {
        if (r > 0) return a;
        throw QSeriesError("cannot raise the zero series to a non-positive power");
    }
    if (r == 0) return FracPowerSeries::one(a.denom(), a.trunc() - a.base());
    if (r < 0) return pow_int(invert(a), -r);
    FracPowerSeries result = FracPowerSeries::one(a.denom(), a.trunc() - a.base());
    FracPowerSeries base = a;
    bool first = true;
    while (r) {
        if (r & 1) {
            result = first ? base : mul(result, base);
            first = false;
        }
        r >>= 1;
        if (r) base = mul(base, base);
    }
    return result;
}

std::vector<mpq_class> brute_convolve(const std::vector<mpq_class>& a, const std::vector<mpq_class>& b,
                                      std::size_t n) {
    std::vector<mpq_class> c(n, mpq_class(0));
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i <= k; ++i) {
            mpq_class x = i < a.size() ? a[i] : mpq_class(0);
            mpq_class y = (k - i) < b.size() ? b[k - i] : mpq_class(0);
            c[k] += x * y;
        }
    return c;
}

}  // namespace zi
