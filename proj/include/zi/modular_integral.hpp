#pragma once

#include <vector>

#include "zi/alpha_coeffs.hpp"

namespace zi {

// Evaluates F(tau) = sum alpha_n(phi) e^{pi i n tau} anywhere in the upper half-plane:
// Fourier sum high up, kernel contour integral near the cusps of the fundamental domain,
// and the relation F(tau) = psi(tau) + sign (tau/i)^{-k} F(-1/tau) to get there.
class FEvaluator {
public:
    FEvaluator(const mpq_class& k, int sign, const Phi& phi, std::vector<cd> alpha, double alpha_err);

    // Im tau >= kFourierMinIm
    cd fourier(cd tau, double* tail = nullptr) const;
    // tau in the closed fundamental domain |Re tau| <= 1, |tau| >= 1
    cd contour(cd tau, double tol = 1e-13) const;
    cd eval(cd tau, int* steps = nullptr) const;

    static bool in_domain(cd tau);
    static constexpr double kFourierMinIm = 0.5;

private:
    double k_;
    long nu_;
    int sign_;
    Phi phi_;
    std::vector<cd> alpha_;
    double alpha_err_;
};

struct RouteBOptions {
    double y_scale = 1.0;  // sampling height y = y_scale / n_max
    int oversample = 13;   // M >= oversample * n_max, rounded to a power of two
};

// alpha_n(phi) for n = 0..n_max from samples of F on the line Im tau = y via a discrete Fourier transform.
std::vector<cd> alpha_route_b(const mpq_class& k, int sign, const Phi& phi, long n_max, std::vector<double>* err = nullptr,
                              RouteBOptions opt = {});

}  // namespace zi
