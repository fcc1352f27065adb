#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace zi {

// Laurent series in u = q^{1/denom} with exact rational coefficients.
// c[i] is the coefficient of u^{base + i}; everything at exponent >= trunc
// is unknown. Stored densely: c.size() == trunc - base, c[0] != 0 unless the
// series is zero (then c is empty and base == trunc).
class FracPowerSeries {
public:
    FracPowerSeries() = default;
    FracPowerSeries(long denom, long base, std::vector<mpq_class> coeffs, long trunc);

    static FracPowerSeries zero(long denom, long trunc);
    static FracPowerSeries one(long denom, long trunc);
    static FracPowerSeries monomial(long denom, long exp, const mpq_class& c, long trunc);

    long denom() const { return denom_; }
    long base() const { return base_; }
    long trunc() const { return trunc_; }
    const std::vector<mpq_class>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }

    // coefficient of q^e, e = num/den; throws std::out_of_range beyond trunc
    mpq_class coeff(const mpq_class& e) const;
    // coefficient of u^i at the native denominator
    mpq_class at(long i) const;

    FracPowerSeries lift(long new_denom) const;
    FracPowerSeries truncate(long new_trunc) const;
    FracPowerSeries shift(long m) const;  // multiply by u^m
    FracPowerSeries scale(const mpq_class& a) const;
    // substitute u -> -u (q^{1/d} -> -q^{1/d})
    FracPowerSeries negate_var() const;

    std::string dump() const;
    static FracPowerSeries parse(const std::string& text);

    bool operator==(const FracPowerSeries& o) const;

private:
    void normalize();
    long denom_ = 1;
    long base_ = 0;
    std::vector<mpq_class> c_;
    long trunc_ = 0;
};

FracPowerSeries operator+(const FracPowerSeries& a, const FracPowerSeries& b);
FracPowerSeries operator-(const FracPowerSeries& a, const FracPowerSeries& b);
FracPowerSeries operator-(const FracPowerSeries& a);

FracPowerSeries mul(const FracPowerSeries& a, const FracPowerSeries& b);
FracPowerSeries invert(const FracPowerSeries& a);
FracPowerSeries pow_rational(const FracPowerSeries& a, const mpq_class& r);
FracPowerSeries pow_int(const FracPowerSeries& a, long r);

inline FracPowerSeries operator*(const FracPowerSeries& a, const FracPowerSeries& b) { return mul(a, b); }

// Plain O(n^2) convolution over integers/rationals without the truncation
// bookkeeping, used as the independent oracle in tests.
std::vector<mpq_class> brute_convolve(const std::vector<mpq_class>& a, const std::vector<mpq_class>& b,
                                      std::size_t n);

struct QSeriesError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

}  // namespace zi
