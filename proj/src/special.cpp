#include "zi/special.hpp"

#include <cmath>

namespace zi {

namespace {

// B_{2j} / (2j (2j - 1)) for the Stirling series
constexpr double kStirling[] = {1.0 / 12,       -1.0 / 360,        1.0 / 1260,        -1.0 / 1680,
                                1.0 / 1188,     -691.0 / 360360,   1.0 / 156,         -3617.0 / 122400};
// B_{2j} / (2j) for the digamma series
constexpr double kDigamma[] = {1.0 / 12,   -1.0 / 120,     1.0 / 252,  -1.0 / 240,
                               1.0 / 132,  -691.0 / 32760, 1.0 / 12,   -3617.0 / 8160};

constexpr double kShift = 16;

cd stirling(cd w) {
    cd s = (w - 0.5) * std::log(w) - w + 0.5 * std::log(2 * M_PI);
    cd inv = 1.0 / w, inv2 = inv * inv, p = inv;
    for (double c : kStirling) {
        s += c * p;
        p *= inv2;
    }
    return s;
}

// log sin(pi z) without overflow for large |Im z|
cd log_sin_pi(cd z) {
    const cd i1(0, 1);
    if (z.imag() >= 0) return -i1 * M_PI * z + std::log((std::exp(2.0 * i1 * M_PI * z) - 1.0) / (2.0 * i1));
    return i1 * M_PI * z + std::log((1.0 - std::exp(-2.0 * i1 * M_PI * z)) / (2.0 * i1));
}

}  // namespace

cd lgamma_c(cd z) {
    if (z.real() < 0.5) {
        // reflection; the branch is fixed only up to 2 pi i, which exp removes
        return std::log(M_PI) - log_sin_pi(z) - lgamma_c(1.0 - z);
    }
    cd acc = 0;
    cd w = z;
    while (std::abs(w) < kShift || w.real() < kShift * 0.5) {
        acc += std::log(w);
        w += 1.0;
    }
    return stirling(w) - acc;
}

namespace {

// distance to the nearest nonpositive integer, or infinity
double pole_gap(cd z, double* m) {
    double r = std::round(z.real());
    *m = r;
    if (r > 0) return INFINITY;
    return std::abs(z - r);
}

}  // namespace

cd gamma_c(cd z) {
    double m = 0;
    if (pole_gap(z, &m) < 1e-14) {
        // residue (-1)^m / m! at -m
        double res = 1;
        for (int j = 1; j <= static_cast<int>(-m); ++j) res /= -j;
        throw PoleError("gamma pole", cd(m, 0), res);
    }
    return std::exp(lgamma_c(z));
}

cd rgamma_c(cd z) {
    if (z.real() <= 0 && z.imag() == 0 && z.real() == std::floor(z.real())) return 0;
    return std::exp(-lgamma_c(z));
}

cd digamma_c(cd z) {
    double m = 0;
    if (pole_gap(z, &m) < 1e-14) throw PoleError("digamma pole", cd(m, 0), -1.0);
    if (z.real() < 0.5) return digamma_c(1.0 - z) - M_PI / std::tan(M_PI * z);
    cd acc = 0;
    cd w = z;
    while (std::abs(w) < kShift || w.real() < kShift * 0.5) {
        acc += 1.0 / w;
        w += 1.0;
    }
    cd inv2 = 1.0 / (w * w), p = inv2;
    cd s = std::log(w) - 0.5 / w;
    for (double c : kDigamma) {
        s -= c * p;
        p *= inv2;
    }
    return s - acc;
}

}  // namespace zi
