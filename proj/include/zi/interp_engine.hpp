#pragma once

#include <string>
#include <vector>

#include "zi/analytic_nt.hpp"
#include "zi/dirichlet_kernels.hpp"
#include "zi/test_function.hpp"

namespace zi {

struct Envelope {
    std::string name;
    double value = 0;
};

double envelope_total(const std::vector<Envelope>& e);

// F(s) = f((s - 1/2)/i) and its parts F_delta(s) = (F(s) + delta F(1 - s)) / 2
cd F_of(const TestFunction& f, cd s, int delta);

struct LineResult {
    cd value;
    double err = 0;
    double height = 0;  // |Im w| cut of the line integral
    std::vector<Envelope> envelopes;
};

// (4 pi i)^{-1} int_{(c)} [H_{-delta}(w, s) - H_{-delta}(1 - w, s)] F_delta(w) dw, truncated where the
// Gaussian decay of F_delta falls below tol.
LineResult R_operator(const TestFunction& f, cd s, int delta, double c = 3, double tol = 1e-10);

// sum_{n<=N} (M^{-1} F_delta)(sqrt n) h^{-delta}_n(s); requires f entire (the inverse Mellin transform is
// taken on Re w = 1/2).
LineResult R_dirichlet_side(const TestFunction& f, cd s, int delta, long N);

// F_delta(s) + sum over the first `zeros` ordinates of Res_{w=rho} H_{-delta}(w, s) F_delta(w); the
// horizontal closing segments at the cut height are reported as an envelope.
LineResult R_residue_side(const TestFunction& f, cd s, int delta, const ZeroTable& table, long zeros, double c = 3);

// Midpoint of the widest gap between consecutive ordinates inside [2^k, 2^{k+1}].
double choose_Tk(const ZeroTable& table, int k);
// Midpoint between the count-th ordinate and the next one.
double cut_after(const ZeroTable& table, long count);

struct ReconstructionRHS {
    cd value;
    cd target;
    cd residual;
    double T = 0;
    long zeros_used = 0;
    cd u_part, v_part;
    std::vector<Envelope> envelopes;
};

// sum_{n<=N} fhat(log n / 4 pi) U_n(z) + sum_{0<gamma<=T} f(gamma) V_{rho,0}(z), with the cut placed after
// the first `zeros` ordinates.
ReconstructionRHS reconstruction_rhs(const TestFunction& f, cd z, long N, long zeros, const ZeroTable& table);

struct RWResult {
    cd lhs, rhs, residual;
    cd archimedean, poles, primes, zero_sum;
    std::vector<Envelope> envelopes;
    bool inconclusive = false;
};

// Both sides of the explicit formula: lhs = W f, rhs = prime sum up to n_max + sum over the first
// `zeros` ordinates (all of the table when negative).
RWResult riemann_weil(const TestFunction& f, const ZeroTable& table, long n_max, long zeros = -1, double tol = 1e-5);

struct WTarget {
    enum class Kind { U, V };
    Kind kind = Kind::U;
    long n = 1;        // U_n
    double gamma = 0;  // V_{rho,0}, rho = 1/2 + i gamma
};

struct WOptions {
    double x_max = 84;  // the integral runs over |t| <= x_max
    double panel = 3;
    int points = 12;
};

struct WResult {
    WTarget target;
    cd value;
    double err = 0;
    cd integral, endpoints;
};

// W applied by quadrature to each target, sharing one sweep over t; `neighbors` feed the V guard.
std::vector<WResult> W_on_basis(const std::vector<WTarget>& targets, const std::vector<double>& neighbors,
                                WOptions opt = {});

struct WAdjudication {
    double value = 0;
    double literal = 0;      // Lambda(n) / (pi sqrt n)
    double alternative = 0;  // Lambda(sqrt n) / (pi n^{1/4})
    std::string verdict;     // "literal", "alternative" or "neither"
};

WAdjudication adjudicate_W_square(long n, cd value, double err);

struct PWResidual {
    cd reference;  // defining integral or series
    cd stated;     // closed form with the exponent and sign as printed
    cd derived;    // closed form obtained by summing the series
    double residual_stated = 0, residual_derived = 0;
};

// E_{sign}(x, z) from its defining integral over sign*y <= -1/2 (needs sign Im z > 0)
cd pw_E_integral(int sign, double x, cd z);
cd pw_E_stated(int sign, double x, cd z);
cd pw_E_derived(int sign, double x, cd z);
// Fourier side kernel from its series (needs sign Im w > 0) and its closed forms
cd pw_Estar_series(int sign, double xi, cd w, double tol = 1e-16);
cd pw_Estar_stated(int sign, double xi, cd w);
cd pw_Estar_derived(int sign, double xi, cd w);

struct PWCheck {
    PWResidual E, Estar;
};

PWCheck paley_wiener_check(double x, cd z, int sign = 1);

}  // namespace zi
