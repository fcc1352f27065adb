#include "zi/domain_stats.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>

namespace zi {

namespace {

const Mat2 kS{0, -1, 1, 0};
Mat2 T2(long m) { return {1, 2 * m, 0, 1}; }

}  // namespace

ReductionResult reduce(PointUH tau, double tie_tol, int max_iter) {
    cd z = tau.c();
    Mat2 M;
    std::vector<Letter> applied;
    long inv = 0;
    for (int it = 0;; ++it) {
        if (it >= max_iter) throw IntegrityError("reduce: iteration cap reached", tau.re, tau.im);
        long m = static_cast<long>(std::floor((z.real() + 1) / 2));
        if (m != 0) {
            z -= 2.0 * static_cast<double>(m);
            M = T2(-m) * M;
            applied.push_back({Letter::Kind::T2, -m});
        }
        double r = std::abs(z);
        bool last_s = !applied.empty() && applied.back().kind == Letter::Kind::S;
        if (r < 1 - tie_tol || (std::abs(r - 1) <= tie_tol && !last_s)) {
            bool tie = r >= 1 - tie_tol;
            z = -1.0 / z;
            M = kS * M;
            applied.push_back({Letter::Kind::S, 0});
            ++inv;
            if (tie) break;
            continue;
        }
        break;
    }
    ReductionResult out;
    out.word.assign(applied.rbegin(), applied.rend());
    out.matrix = M;
    out.reduced = PointUH(z.real(), std::max(z.imag(), 1e-300));
    out.inversions = 1 + inv;
    out.height = z.imag();
    return out;
}

ReductionResult reduce_by_search(PointUH tau, int max_inversions, long max_shift) {
    ReductionResult best;
    best.reduced = tau;
    best.height = tau.im;
    best.inversions = 1;
    bool best_inside = std::abs(tau.re) <= 1 + 1e-12;
    std::vector<Letter> word;
    auto consider = [&](cd z, const Mat2& M, long inv) {
        bool inside = std::abs(z.real()) <= 1 + 1e-12;
        double tol = 1e-12 * std::max(1.0, best.height);
        bool better = z.imag() > best.height + tol;
        if (!better && std::abs(z.imag() - best.height) <= tol) {
            if (inside && !best_inside) better = true;
            else if (inside == best_inside && inv + 1 > best.inversions) better = true;
        }
        if (!better) return;
        best.height = z.imag();
        best.reduced = PointUH(z.real(), z.imag());
        best.matrix = M;
        best.inversions = inv + 1;
        best.word.assign(word.rbegin(), word.rend());
        best_inside = inside;
    };
    // letters alternate between S and nonzero translations
    std::function<void(cd, const Mat2&, long, bool)> walk = [&](cd z, const Mat2& M, long inv, bool last_s) {
        consider(z, M, inv);
        if (last_s || word.empty()) {
            for (long m = -max_shift; m <= max_shift; ++m) {
                if (m == 0) continue;
                word.push_back({Letter::Kind::T2, m});
                cd zt = z + 2.0 * static_cast<double>(m);
                Mat2 Mt = T2(m) * M;
                consider(zt, Mt, inv);
                if (inv < max_inversions) {
                    word.push_back({Letter::Kind::S, 0});
                    walk(-1.0 / zt, kS * Mt, inv + 1, true);
                    word.pop_back();
                }
                word.pop_back();
            }
        }
        if (word.empty() && inv < max_inversions) {
            word.push_back({Letter::Kind::S, 0});
            walk(-1.0 / z, kS * M, inv + 1, true);
            word.pop_back();
        }
    };
    walk(tau.c(), Mat2{}, 0, false);
    return best;
}

double word_height(PointUH tau) { return reduce(tau).height; }
long word_inversions(PointUH tau) { return reduce(tau).inversions; }

StatIntegrals stat_integrals(double y, const std::vector<double>& alphas, SamplerConfig cfg) {
    if (!(y > 0 && y < 0.5)) throw std::invalid_argument("stat_integrals: 0 < y < 1/2 required");
    if (cfg.samples < 2) throw std::invalid_argument("stat_integrals: at least two samples");
    long S = cfg.samples - cfg.samples % 2;
    std::mt19937_64 rng(cfg.seed);
    std::uniform_real_distribution<double> unit(0, 1);
    std::size_t na = alphas.size();
    std::vector<double> fN(S);
    std::vector<std::vector<double>> fI(na, std::vector<double>(S));
    StatIntegrals out;
    out.y = y;
    out.alphas = alphas;
    for (long i = 0; i < S; ++i) {
        double x = cfg.monte_carlo ? -1 + 2 * unit(rng) : -1 + 2 * (static_cast<double>(i) + unit(rng)) / static_cast<double>(S);
        auto r = reduce(PointUH(x, y));
        fN[i] = static_cast<double>(r.inversions);
        out.max_inversions = std::max(out.max_inversions, r.inversions);
        for (std::size_t a = 0; a < na; ++a) fI[a][i] = std::pow(r.height, alphas[a]);
    }
    auto estimate = [&](const std::vector<double>& f) {
        StatEstimate e;
        double h = 2.0 / static_cast<double>(S), sum = 0;
        for (double v : f) sum += v;
        e.value = h * sum;
        double acc = 0;
        if (cfg.monte_carlo) {
            double mean = sum / static_cast<double>(S);
            for (double v : f) acc += (v - mean) * (v - mean);
            e.stderr_ = 2 * std::sqrt(acc / static_cast<double>(S - 1) / static_cast<double>(S));
        } else {
            // adjacent strata paired: each pair difference estimates twice the per-stratum variance
            for (long i = 0; i + 1 < S; i += 2) acc += (f[i] - f[i + 1]) * (f[i] - f[i + 1]);
            e.stderr_ = h * std::sqrt(acc);
        }
        return e;
    };
    out.N = estimate(fN);
    for (std::size_t a = 0; a < na; ++a) out.I_alpha.push_back(estimate(fI[a]));
    return out;
}

LogFit log_square_fit(const std::vector<double>& ys, const std::vector<double>& values) {
    if (ys.size() != values.size() || ys.size() < 3) throw std::invalid_argument("log_square_fit: three or more levels");
    double A[3][4] = {};
    for (std::size_t i = 0; i < ys.size(); ++i) {
        double L = std::log(ys[i]);
        double row[3] = {L * L, L, 1};
        for (int r = 0; r < 3; ++r) {
            for (int c = 0; c < 3; ++c) A[r][c] += row[r] * row[c];
            A[r][3] += row[r] * values[i];
        }
    }
    for (int p = 0; p < 3; ++p) {
        int piv = p;
        for (int r = p + 1; r < 3; ++r)
            if (std::abs(A[r][p]) > std::abs(A[piv][p])) piv = r;
        std::swap(A[p], A[piv]);
        for (int r = 0; r < 3; ++r) {
            if (r == p) continue;
            double f = A[r][p] / A[p][p];
            for (int c = p; c < 4; ++c) A[r][c] -= f * A[p][c];
        }
    }
    return {A[0][3] / A[0][0], A[1][3] / A[1][1], A[2][3] / A[2][2]};
}

}  // namespace zi
