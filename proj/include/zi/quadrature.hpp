#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "zi/mp.hpp"

namespace zi {

template <class R>
struct GaussLegendre {
    std::vector<R> x, w;  // nodes and weights on [-1, 1]
};

const GaussLegendre<double>& gl_double(int n);
// Cached per (n, bits); the reference stays valid for the program lifetime.
const GaussLegendre<mpreal>& gl_mp(int n, unsigned bits);

struct QuadResult {
    std::complex<double> value;
    double err = 0;
    int evals = 0;
};

using CFun = std::function<std::complex<double>(double)>;

// Panel Gauss-Legendre with bisection until the two-level estimate is below tol.
QuadResult integrate(const CFun& f, double a, double b, double tol, int depth = 40);
// Integral over [a, inf) by panels of doubling length; stops after `quiet` consecutive
// panels each contribute below tol.
QuadResult integrate_to_inf(const CFun& f, double a, double h0, double tol, int quiet = 3);
// Integral along a complex path z(u), u in [a, b], given f(z) and z'(u).
QuadResult integrate_path(const std::function<std::complex<double>(std::complex<double>)>& f,
                          const std::function<std::complex<double>(double)>& z,
                          const std::function<std::complex<double>(double)>& dz, double a, double b, double tol);
// Periodic trapezoid rule on a circle, returning (2 pi i)^{-1} times the contour integral.
std::complex<double> circle_mean(const std::function<std::complex<double>(std::complex<double>)>& f,
                                 std::complex<double> center, double radius, int points);

}  // namespace zi
