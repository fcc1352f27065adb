#pragma once

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <cmath>
#include <complex>

namespace zi {

using mpreal =
    boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>, boost::multiprecision::et_off>;

// Sets the working precision of newly created mpreal values for a scope.
class MpPrecision {
public:
    explicit MpPrecision(unsigned bits) : saved_(mpreal::default_precision()) {
        mpreal::default_precision(bits_to_digits(bits));
    }
    ~MpPrecision() { mpreal::default_precision(saved_); }
    MpPrecision(const MpPrecision&) = delete;
    MpPrecision& operator=(const MpPrecision&) = delete;
    static unsigned bits_to_digits(unsigned bits) { return static_cast<unsigned>(bits * 0.30103) + 2; }

private:
    unsigned saved_;
};

struct mpcomplex {
    mpreal re, im;
    mpcomplex() : re(0), im(0) {}
    mpcomplex(const mpreal& r) : re(r), im(0) {}  // NOLINT
    mpcomplex(const mpreal& r, const mpreal& i) : re(r), im(i) {}
    mpcomplex(double r) : re(r), im(0) {}  // NOLINT
    mpcomplex(int r) : re(r), im(0) {}     // NOLINT
    explicit mpcomplex(const std::complex<double>& z) : re(z.real()), im(z.imag()) {}

    mpreal real() const { return re; }
    mpreal imag() const { return im; }

    mpcomplex& operator+=(const mpcomplex& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    mpcomplex& operator-=(const mpcomplex& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    mpcomplex& operator*=(const mpcomplex& o) {
        mpreal r = re * o.re - im * o.im;
        im = re * o.im + im * o.re;
        re = r;
        return *this;
    }
    mpcomplex& operator*=(const mpreal& a) {
        re *= a;
        im *= a;
        return *this;
    }
    mpcomplex& operator/=(const mpcomplex& o) {
        mpreal d = o.re * o.re + o.im * o.im;
        mpreal r = (re * o.re + im * o.im) / d;
        im = (im * o.re - re * o.im) / d;
        re = r;
        return *this;
    }
    std::complex<double> to_double() const { return {static_cast<double>(re), static_cast<double>(im)}; }
};

inline mpcomplex operator+(mpcomplex a, const mpcomplex& b) { return a += b; }
inline mpcomplex operator-(mpcomplex a, const mpcomplex& b) { return a -= b; }
inline mpcomplex operator*(mpcomplex a, const mpcomplex& b) { return a *= b; }
inline mpcomplex operator/(mpcomplex a, const mpcomplex& b) { return a /= b; }
inline mpcomplex operator*(mpcomplex a, const mpreal& b) { return a *= b; }
inline mpcomplex operator*(const mpreal& b, mpcomplex a) { return a *= b; }
inline mpcomplex operator/(mpcomplex a, const mpreal& b) {
    a.re /= b;
    a.im /= b;
    return a;
}
inline mpcomplex operator-(const mpcomplex& a) { return {-a.re, -a.im}; }

inline mpreal real(const mpcomplex& z) { return z.re; }
inline mpreal imag(const mpcomplex& z) { return z.im; }
inline mpcomplex conj(const mpcomplex& z) { return {z.re, -z.im}; }
inline mpreal norm(const mpcomplex& z) { return z.re * z.re + z.im * z.im; }
inline mpreal abs(const mpcomplex& z) { return boost::multiprecision::hypot(z.re, z.im); }
inline mpreal arg(const mpcomplex& z) { return boost::multiprecision::atan2(z.im, z.re); }
inline mpcomplex exp(const mpcomplex& z) {
    mpreal m = boost::multiprecision::exp(z.re);
    return {m * boost::multiprecision::cos(z.im), m * boost::multiprecision::sin(z.im)};
}
inline mpcomplex log(const mpcomplex& z) { return {boost::multiprecision::log(abs(z)), arg(z)}; }
inline mpcomplex pow(const mpcomplex& a, const mpcomplex& b) { return exp(b * log(a)); }
inline mpcomplex sqrt(const mpcomplex& z) { return exp(log(z) * mpreal(0.5)); }

template <class C>
struct ctraits;

template <>
struct ctraits<std::complex<double>> {
    using real = double;
    static double pi() { return M_PI; }
    static double eps() { return 1e-17; }
    static std::complex<double> make(double r, double i) { return {r, i}; }
    static double to_double(double x) { return x; }
};

template <>
struct ctraits<mpcomplex> {
    using real = mpreal;
    static mpreal pi() { return boost::math::constants::pi<mpreal>(); }
    static mpreal eps() {
        return boost::multiprecision::ldexp(mpreal(1), -static_cast<int>(mpreal::default_precision() * 3.33) - 4);
    }
    static mpcomplex make(const mpreal& r, const mpreal& i) { return {r, i}; }
    static double to_double(const mpreal& x) { return static_cast<double>(x); }
};

}  // namespace zi
