#pragma once

#include <memory>
#include <vector>

#include "zi/kernel_forms.hpp"

namespace zi {

// Test function phi(z) integrated against the kernel.
struct Phi {
    enum class Kind { Power, Gauss, OddGauss };
    Kind kind = Kind::Power;
    cd s = 0;
    double x = 0;

    static Phi power(cd s) { return {Kind::Power, s, 0}; }
    static Phi gauss(double x) { return {Kind::Gauss, 0, x}; }
    static Phi odd_gauss(double x) { return {Kind::OddGauss, 0, x}; }

    template <class C>
    C eval(const C& z) const;
    // phi(z) - sign (z/i)^{-k} phi(-1/z)
    cd psi(cd z, double k, int sign) const;
    // log2 of the largest |phi| on the unit semicircle
    double arc_bits() const;
    bool operator==(const Phi& o) const { return kind == o.kind && s == o.s && x == o.x; }
};

template <class C>
C Phi::eval(const C& z) const {
    using R = typename ctraits<C>::real;
    C i1 = ctraits<C>::make(R(0), R(1));
    switch (kind) {
        case Kind::Power: {
            C sc = ctraits<C>::make(R(s.real()), R(s.imag()));
            return exp(-(sc * log(z / i1)));
        }
        case Kind::Gauss:
            return exp(i1 * z * (ctraits<C>::pi() * R(x) * R(x)));
        case Kind::OddGauss:
            return exp(i1 * z * (ctraits<C>::pi() * R(x) * R(x))) * R(x);
    }
    return C(0);
}

struct ArcOptions {
    int bulk_panels = 0;  // 0 picks a default from n_max
    double target = 1e-20;
};

// Coefficients (1/2) int_{-1}^{1} g_n(z) phi(z) dz over the unit semicircle, by panel
// Gauss-Legendre in MPFR at the nodes z = e^{i phi}. The values g_n(z_j) are cached; a new
// phi only costs one pass over the nodes.
class ArcTable {
public:
    ArcTable(const mpq_class& k, int sign, long n_max, unsigned bits, ArcOptions opt = {});

    long n_max() const { return n_max_; }
    long nu() const { return nu_; }
    unsigned bits() const { return bits_; }
    std::size_t node_count() const { return 2 * z_.size(); }

    // alpha_n(phi) for n = 0..n_max (zero below nu) and per-entry error estimates
    std::vector<cd> coeffs(const Phi& phi, std::vector<double>* err = nullptr) const;
    // bits needed so that phi does not exhaust the working precision
    unsigned bits_needed(const Phi& phi) const;

private:
    mpq_class k_;
    int sign_;
    long n_max_, nu_;
    unsigned bits_;
    std::vector<mpcomplex> z_;                    // right half nodes, Re z >= 0
    std::vector<std::vector<mpcomplex>> G_;       // [n - nu][j]
    std::vector<double> lmax_;                    // log2 max_n |G_nj|
    std::vector<mpcomplex> zc_;                   // nodes of the coarse rule (merged panels)
    std::vector<std::vector<mpcomplex>> Gc_;
    std::vector<double> lmaxc_;
    double trunc_log2_ = 0;
    double poly_bits_ = 0;
    double target_ = 0;

    std::vector<cd> sum(const Phi& phi, const std::vector<mpcomplex>& z, const std::vector<std::vector<mpcomplex>>& G,
                        const std::vector<double>& lmax, double* round_log2) const;
};

// Shared cache; rebuilt with more precision or depth as needed.
std::shared_ptr<const ArcTable> arc_table(const mpq_class& k, int sign, long n_max, const Phi& phi);

// Default depth of the MPFR route and the largest n it serves directly.
inline constexpr long kArcDepth = 48;
inline constexpr long kArcMax = 64;

struct AlphaValue {
    cd value;
    double err;
};

// alpha^{sign}_{n,k}(s)
AlphaValue alpha(long n, const mpq_class& k, int sign, cd s, double tol = 1e-9);
// all coefficients n = 0..n_max for one phi; n_max beyond the arc depth uses the cocycle route
std::vector<cd> alpha_all(const mpq_class& k, int sign, const Phi& phi, long n_max, std::vector<double>* err = nullptr);

struct AlphaTable {
    mpq_class k;
    int sign = 1;
    cd s;
    std::vector<cd> values;
    std::vector<double> quad_error;
};

AlphaTable make_alpha_table(const mpq_class& k, int sign, cd s, long n_max);

// Unsupported region for F_eval.
struct UnsupportedRegion : std::domain_error {
    using std::domain_error::domain_error;
};

struct FValue {
    cd value;
    double err;
    bool contour;
};

// F^{sign}_k(tau, s): Fourier sum for Im tau >= 0.5, contour integral in the closed fundamental domain.
FValue F_eval(PointUH tau, cd s, const mpq_class& k, int sign, const AlphaTable& table);

struct PartialSum {
    cd sum;
    cd main_terms;
    cd residual;
};

// sum_{n<=x} alpha_n and the residual after removing +-alpha_0 (pi x)^k / Gamma(k+1) + (pi x)^s / Gamma(s+1).
PartialSum partial_sum_alpha(double x, const mpq_class& k, int sign, cd s, const std::vector<cd>& values);

}  // namespace zi
