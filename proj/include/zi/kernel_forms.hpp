#pragma once

#include <vector>

#include "zi/modforms.hpp"

namespace zi {

// g^{sign}_{n,k} = theta^{4-2k} * Y * sum_{m=nu}^{n} c_m J^m with Y = J_- for sign + and Y = 1 for sign -.
struct KernelCoefficientForm {
    long n = 0;
    mpq_class k;
    int sign = 1;
    ModularFormRep rep;

    // c_m for m = nu..n, index m - nu
    std::vector<mpq_class> coeffs() const;
    long nu() const;
};

// Coefficient of q_tau^{n/2} in the two-variable kernel, read off from its geometric expansion.
KernelCoefficientForm g_form(long n, const mpq_class& k, int sign);
// All forms n = nu..n_max at once; shares the tau-side series work.
std::vector<KernelCoefficientForm> g_forms(long n_max, const mpq_class& k, int sign);
// Independent construction: principal-part matching in theta^{4-2k} Y C[J].
KernelCoefficientForm g_form_matcher(long n, const mpq_class& k, int sign);

cd g_eval(long n, const mpq_class& k, int sign, PointUH z);
cd g_eval(const KernelCoefficientForm& g, PointUH z);

// Closed form of the kernel K^{sign}_k(tau, z).
cd kernel_eval(double k, int sign, cd tau, cd z);
template <class C>
C kernel_from_packs(double k, int sign, long nu, const FormPack<C>& pt, const FormPack<C>& pz);

// Bits lost to cancellation when summing c_m J^m for |J| <= 64.
double poly_cancellation_bits(const KernelCoefficientForm& g);

template <class C>
C kernel_from_packs(double k, int sign, long nu_, const FormPack<C>& pt, const FormPack<C>& pz) {
    using R = typename ctraits<C>::real;
    // only the ratio J(z)/J(tau) enters, so work with logarithms
    C lr = pz.logJ - pt.logJ;
    C ly = sign > 0 ? pz.logJm : pt.logJm;
    C e = pt.log_theta * R(2 * k) + pz.log_theta * R(4 - 2 * k) + lr * R(static_cast<double>(nu_)) + ly;
    if (real(lr) > R(0)) return -exp(e - lr) / (C(1) - exp(-lr));
    return exp(e) / (C(1) - exp(lr));
}

}  // namespace zi
