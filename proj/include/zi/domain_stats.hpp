#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "zi/analytic_nt.hpp"
#include "zi/modforms.hpp"

namespace zi {

// Integer matrix (a b; c d) acting by Moebius transformation, taken up to sign.
struct Mat2 {
    long a = 1, b = 0, c = 0, d = 1;
    Mat2 operator*(const Mat2& o) const {
        return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
    }
    long det() const { return a * d - b * c; }
    cd act(cd z) const { return (static_cast<double>(a) * z + static_cast<double>(b)) / (static_cast<double>(c) * z + static_cast<double>(d)); }
    bool same_projective(const Mat2& o) const {
        return (a == o.a && b == o.b && c == o.c && d == o.d) || (a == -o.a && b == -o.b && c == -o.c && d == -o.d);
    }
};

// A letter of a canonical word: S, or T^{2m} with m != 0.
struct Letter {
    enum class Kind { S, T2 } kind = Kind::S;
    long m = 0;
};

struct ReductionResult {
    std::vector<Letter> word;  // leftmost letter applied last
    Mat2 matrix;               // matrix * tau = reduced
    PointUH reduced;
    long inversions = 1;       // N(tau): one plus the number of S letters
    double height = 1;         // I(tau) = Im of the reduced point
};

// Greedy reduction into {|Re| <= 1, |z| >= 1}: translate by T^{2m}, invert while |z| < 1. Boundary ties on
// the unit circle take the extra inversion.
ReductionResult reduce(PointUH tau, double tie_tol = 1e-12, int max_iter = 100000);

// Oracle: enumerate canonical words with at most max_inversions S letters and |m| <= max_shift and return
// the image of largest height (ties prefer |Re| <= 1, then more inversions).
ReductionResult reduce_by_search(PointUH tau, int max_inversions, long max_shift);

double word_height(PointUH tau);     // I(tau)
long word_inversions(PointUH tau);   // N(tau)

struct SamplerConfig {
    long samples = 100000;
    bool monte_carlo = false;  // default: stratified grid with one jittered point per stratum
    std::uint64_t seed = 1;
};

struct StatEstimate {
    double value = 0;
    double stderr_ = 0;
};

struct StatIntegrals {
    double y = 0;
    StatEstimate N;                       // int_{-1}^{1} N(x + iy) dx
    std::vector<double> alphas;
    std::vector<StatEstimate> I_alpha;    // int_{-1}^{1} I(x + iy)^alpha dx
    long max_inversions = 0;
};

StatIntegrals stat_integrals(double y, const std::vector<double>& alphas, SamplerConfig cfg = {});

// Fit Phi(y) = a log^2 y + b log y + c through the given levels (least squares when more than three).
struct LogFit {
    double a = 0, b = 0, c = 0;
};
LogFit log_square_fit(const std::vector<double>& ys, const std::vector<double>& values);

inline constexpr double kInversionLeading = 0.20264236728467555;  // 2 / pi^2
inline constexpr double kInversionC2 = 1.180066;                  // Phi = a log^2 y - c2 log y + ...

}  // namespace zi
