#pragma once

#include <functional>
#include <vector>

#include "zi/alpha_coeffs.hpp"
#include "zi/analytic_nt.hpp"

namespace zi {

struct KernelContext {
    mpq_class k{1, 2};
    int sign = -1;
    double t_max = 14;  // upper end of the t-integral
    long depth = kArcDepth;  // coefficients used in the Fourier sum of F(it)
    double tol = 1e-13;
};

struct KValue {
    cd value;
    double err = 0;
};

// A^{sign}_k(w, s) through the symmetrized integral over [1, t_max] plus its pole terms;
// PoleError within 1e-8 of w in {s, k - s} and of {0, k} when alpha_0 != 0.
KValue A_eval(cd w, cd s, const KernelContext& ctx);
// pi^{-w} Gamma(w) sum_{1<=n<=N} alpha_n n^{-w}; only sensible for large Re w
cd A_dirichlet_series(cd w, cd s, const KernelContext& ctx, long N);

// h^{sign}_n(s) = (zeta*(s)/2) sum_{d^2 | n} mu(d) alpha^{sign}_{n/d^2, 1/2}(s/2); h^+_1 := 0
cd h_coeff(long n, int sign, cd s, long depth = 16);
// h_n for n = 1..N at one s (index n - 1)
std::vector<cd> h_coeffs(long N, int sign, cd s);

// H_-(w, s) = (zeta*(s)/2) A^-(w/2, s/2) / zeta*(w), H_+ subtracts alpha^+_1(s/2)
KValue H_eval(cd w, cd s, int sign, long depth = kArcDepth);
// D = (Gamma_R(s)/2) (A(w/2, s/2) / Gamma_R(w) - [sign +] alpha^+_1(s/2) zeta(w)), so that H = zeta(s) D / zeta(w)
KValue D_eval(cd w, cd s, int sign, long depth = kArcDepth);

// U_n(z) = h^-_n(1/2 + i z) / (2 pi n^{1/4}), normalized so that its Fourier transform is
// delta_{n,m} at log(m) / (4 pi).
cd U_n(long n, cd z);
// all U_1..U_N at one z (index n - 1)
std::vector<cd> U_all(long N, cd z);

// (2 pi i)^{-1} oint_{|w - c| = eps} i^{-j} (w - c)^j / j! g(w) dw by the M-point trapezoid rule
cd laurent_coefficient(const std::function<cd(cd)>& g, cd center, int j, double eps, int M = 64);

struct VOptions {
    double eps = 0;  // 0 picks 0.4 times the smallest guard distance
    int points = 64;
    long depth = 16;
};

// V_{rho,j}(z) = -(2 pi i)^{-1} oint i^{-j} (w - rho)^j / j! H_-(w, 1/2 + i z) dw, so that V_{rho,0} takes
// the value 1 at (rho - 1/2)/i. `neighbors` lists the other zero ordinates used for the guard.
cd V_eval(cd rho, int j, cd z, const std::vector<double>& neighbors, VOptions opt = {});
// the smallest guard distance for (rho, z)
double V_guard(cd rho, cd z, const std::vector<double>& neighbors);

// Kernels with a primitive character: weight 1/2 (even chi) or 3/2 (odd chi).
KValue H_chi_eval(cd w, cd s, int delta, const CharacterRep& chi, long depth = kArcDepth);

}  // namespace zi
