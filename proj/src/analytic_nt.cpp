#include "zi/analytic_nt.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <numeric>
#include <sstream>

namespace zi {

namespace {

constexpr int kEMTerms = 20;

// B_{2k} / (2k)! for k = 1..kEMTerms
const std::vector<double>& bernoulli_over_factorial() {
    static const std::vector<double> table = [] {
        const int m_max = 2 * kEMTerms;
        std::vector<mpq_class> B(m_max + 1);
        B[0] = 1;
        for (int m = 1; m <= m_max; ++m) {
            mpq_class s = 0;
            mpz_class binom = 1;  // C(m+1, j)
            for (int j = 0; j < m; ++j) {
                s += binom * B[j];
                binom = binom * (m + 1 - j) / (j + 1);
            }
            B[m] = -s / (m + 1);
        }
        std::vector<double> out;
        mpz_class fact = 1;
        for (int m = 1; m <= m_max; ++m) {
            fact *= m;
            if (m % 2 == 0) out.push_back(mpq_class(B[m] / fact).get_d());
        }
        return out;
    }();
    return table;
}

long em_cutoff(cd s) { return 20 + static_cast<long>(std::abs(s) / 2); }

// Euler-Maclaurin pieces of sum_{n>=0} (n+a)^{-s}: everything except the pole term
// (N+a)^{1-s}/(s-1), which is returned separately.
cd hurwitz_regular(cd s, double a, long N, cd* pole_term) {
    cd sum = 0;
    for (long n = 0; n < N; ++n) sum += std::exp(-s * std::log(static_cast<double>(n) + a));
    const double x = static_cast<double>(N) + a;
    const double lx = std::log(x);
    cd xs = std::exp(-s * lx);
    if (pole_term) *pole_term = x * xs / (s - 1.0);
    sum += 0.5 * xs;
    // B_{2k}/(2k)! s(s+1)...(s+2k-2) x^{-s-2k+1}
    const auto& bf = bernoulli_over_factorial();
    cd rising = s, xp = xs / x;
    for (int k = 1; k <= kEMTerms; ++k) {
        cd term = bf[k - 1] * rising * xp;
        sum += term;
        if (std::abs(term) < 1e-18 * std::abs(sum)) break;
        rising *= (s + static_cast<double>(2 * k - 1)) * (s + static_cast<double>(2 * k));
        xp /= x * x;
    }
    return sum;
}

void check_pole(cd s, cd at, cd residue, const char* what) {
    if (std::abs(s - at) < 1e-8) throw PoleError(what, at, residue);
}

}  // namespace

cd hurwitz_zeta(cd s, double a) {
    if (!(a > 0)) throw std::invalid_argument("hurwitz parameter must be positive");
    check_pole(s, 1.0, 1.0, "hurwitz zeta pole at s = 1");
    cd pole;
    cd r = hurwitz_regular(s, a, em_cutoff(s), &pole);
    return r + pole;
}

cd zeta(cd s) {
    check_pole(s, 1.0, 1.0, "zeta pole at s = 1");
    if (s.real() < -1) {
        // reflection keeps the trivial-zero region accurate
        cd one_minus = 1.0 - s;
        return std::pow(2.0, s) * std::pow(M_PI, s - 1.0) * std::sin(M_PI * s / 2.0) * gamma_c(one_minus) * zeta(one_minus);
    }
    return hurwitz_zeta(s, 1.0);
}

cd gamma_R(cd s) { return std::exp(-s / 2.0 * std::log(M_PI)) * gamma_c(s / 2.0); }

cd zeta_star(cd s) {
    check_pole(s, 1.0, 1.0, "completed zeta pole at s = 1");
    check_pole(s, 0.0, -1.0, "completed zeta pole at s = 0");
    return gamma_R(s) * zeta(s);
}

cd zeta_eta(cd s, int n) {
    check_pole(s, 1.0, 1.0, "zeta pole at s = 1");
    // d_k = n sum_{i<=k} (n+i-1)! 4^i / ((n-i)! (2i)!)
    std::vector<double> d(static_cast<std::size_t>(n + 1));
    double t = 1.0 / n, acc = 0;
    for (int i = 0; i <= n; ++i) {
        if (i > 0) t *= 4.0 * (n + i - 1) * (n - i + 1) / ((2.0 * i) * (2.0 * i - 1));
        acc += t;
        d[i] = n * acc;
    }
    cd eta = 0;
    for (int k = 0; k < n; ++k) {
        double c = (d[k] - d[n]) / d[n];
        cd term = c * std::exp(-s * std::log(static_cast<double>(k + 1)));
        eta += (k % 2 == 0) ? term : -term;
    }
    eta = -eta;
    return eta / (1.0 - std::exp((1.0 - s) * std::log(2.0)));
}

double rs_theta(double t) {
    if (t >= 10) {
        double t2 = t * t;
        return t / 2 * std::log(t / (2 * M_PI)) - t / 2 - M_PI / 8 + 1 / (48 * t) + 7 / (5760 * t * t2);
    }
    return lgamma_c(cd(0.25, t / 2)).imag() - t / 2 * std::log(M_PI);
}

double hardy_Z(double t) {
    cd z = zeta(cd(0.5, t));
    return (std::exp(cd(0, rs_theta(t))) * z).real();
}

double rvm_main(double T) { return T / (2 * M_PI) * std::log(T / (2 * M_PI * M_E)); }

std::string cache_dir() {
    const char* env = std::getenv("ZI_CACHE_DIR");
    return env && *env ? std::string(env) : std::string("zi_cache");
}

ZeroTable read_zeros_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open zeros file " + path);
    ZeroTable t;
    t.source = "file";
    t.upto = -1;
    std::string line;
    bool header = false;
    while (std::getline(in, line)) {
        auto b = line.find_first_not_of(" \t\r");
        if (b == std::string::npos) continue;
        line = line.substr(b);
        if (line[0] == '#') {
            if (line.rfind("# upto=", 0) == 0) t.upto = std::stod(line.substr(7));
            continue;
        }
        if (line.rfind("precision=", 0) == 0) {
            t.precision = std::stod(line.substr(10));
            header = true;
            continue;
        }
        std::size_t used = 0;
        double v = 0;
        try {
            v = std::stod(line, &used);
        } catch (const std::logic_error&) {
            throw std::invalid_argument("bad ordinate line in " + path + ": " + line);
        }
        if (line.find_first_not_of(" \t\r", used) != std::string::npos)
            throw std::invalid_argument("bad ordinate line in " + path + ": " + line);
        t.ordinates.push_back(v);
    }
    if (!header) throw std::invalid_argument("zeros file lacks the precision= header: " + path);
    for (std::size_t i = 1; i < t.ordinates.size(); ++i)
        if (!(t.ordinates[i] > t.ordinates[i - 1])) throw std::invalid_argument("zeros file is not increasing: " + path);
    if (t.upto < 0) t.upto = t.ordinates.empty() ? 0 : t.ordinates.back();
    return t;
}

void write_zeros_file(const std::string& path, const ZeroTable& table) {
    std::filesystem::path p(path);
    if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
    std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp);
        if (!out) throw std::runtime_error("cannot write zeros file " + path);
        char buf[64];
        out << "# ordinates of zeros of zeta on the critical line\n";
        std::snprintf(buf, sizeof buf, "# upto=%.6f\n", table.upto);
        out << buf;
        std::snprintf(buf, sizeof buf, "precision=%.1e\n", table.precision);
        out << buf;
        for (double g : table.ordinates) {
            std::snprintf(buf, sizeof buf, "%.12f\n", g);
            out << buf;
        }
    }
    std::filesystem::rename(tmp, path);
}

namespace {

constexpr double kZeroTol = 1e-10;
constexpr double kMaxT = 500;
constexpr double kStep = 0.05;

// Illinois regula falsi on a sign change of Z
double refine(double a, double b, double fa, double fb) {
    int side = 0;
    for (int it = 0; it < 200 && b - a > kZeroTol; ++it) {
        double c = (a * fb - b * fa) / (fb - fa);
        if (!(c > a && c < b)) c = 0.5 * (a + b);
        double fc = hardy_Z(c);
        if (fc == 0) return c;
        if ((fc > 0) == (fb > 0)) {
            b = c;
            fb = fc;
            if (side == -1) fa /= 2;
            side = -1;
        } else {
            a = c;
            fa = fc;
            if (side == 1) fb /= 2;
            side = 1;
        }
        if (it % 3 == 2) {
            // a bisection step every few iterations bounds the worst case
            double m = 0.5 * (a + b), fm = hardy_Z(m);
            if ((fm > 0) == (fb > 0)) {
                b = m;
                fb = fm;
            } else {
                a = m;
                fa = fm;
            }
        }
    }
    return 0.5 * (a + b);
}

// golden-section search for min |Z| on [a, b]; returns the location
double min_abs_Z(double a, double b, double* fmin) {
    const double g = (std::sqrt(5.0) - 1) / 2;
    double x1 = b - g * (b - a), x2 = a + g * (b - a);
    double f1 = hardy_Z(x1), f2 = hardy_Z(x2);
    for (int it = 0; it < 60 && b - a > 1e-9; ++it) {
        if (std::abs(f1) < std::abs(f2)) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - g * (b - a);
            f1 = hardy_Z(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + g * (b - a);
            f2 = hardy_Z(x2);
        }
        // a sign change inside the bracket ends the search
        if ((f1 > 0) != (f2 > 0)) break;
    }
    if (std::abs(f1) < std::abs(f2)) {
        *fmin = f1;
        return x1;
    }
    *fmin = f2;
    return x2;
}

ZeroTable compute_zeros(double T) {
    ZeroTable out;
    out.precision = 1e-9;
    out.upto = T;
    double t0 = 1.0;
    double f0 = hardy_Z(t0);
    double tp = t0, fp = f0;
    double t1 = t0 + kStep, f1 = hardy_Z(t1);
    auto add_bracket = [&](double a, double b, double fa, double fb) { out.ordinates.push_back(refine(a, b, fa, fb)); };
    if ((f0 > 0) != (f1 > 0)) add_bracket(t0, t1, f0, f1);
    while (t1 < T) {
        double t2 = std::min(t1 + kStep, T), f2 = hardy_Z(t2);
        if ((f1 > 0) != (f2 > 0)) {
            add_bracket(t1, t2, f1, f2);
        } else if ((fp > 0) == (f1 > 0) && std::abs(f1) < std::abs(fp) && std::abs(f1) <= std::abs(f2)) {
            // |Z| dips without a sign change: look for a hidden pair of zeros
            double fm = 0;
            double m = min_abs_Z(tp, t2, &fm);
            if ((fm > 0) != (f1 > 0)) {
                double fl = hardy_Z(tp);
                add_bracket(tp, m, fl, fm);
                add_bracket(m, t2, fm, f2);
            } else if (std::abs(fm) < 1e-7) {
                throw IntegrityError("Z nearly vanishes without a sign change (suspected double zero)", tp, t2);
            }
        }
        tp = t1;
        fp = f1;
        t1 = t2;
        f1 = f2;
    }
    std::sort(out.ordinates.begin(), out.ordinates.end());
    for (std::size_t i = 1; i < out.ordinates.size(); ++i)
        if (out.ordinates[i] - out.ordinates[i - 1] < 10 * out.precision)
            throw IntegrityError("zero ordinates closer than the resolution", out.ordinates[i - 1], out.ordinates[i]);
    return out;
}

std::mutex zero_mu;

}  // namespace

ZeroTable find_zeros(double T) {
    if (!(T > 0) || T > kMaxT) throw std::invalid_argument("zero search supports 0 < T <= 500");
    std::lock_guard<std::mutex> lk(zero_mu);
    const std::string path = cache_dir() + "/zeros.txt";
    ZeroTable full;
    bool have = false;
    if (std::filesystem::exists(path)) {
        try {
            full = read_zeros_file(path);
            have = full.upto >= T;
        } catch (const std::exception&) {
            have = false;
        }
    }
    if (!have) {
        full = compute_zeros(T);
        try {
            write_zeros_file(path, full);
        } catch (const std::exception&) {
            // the cache is an optimization only
        }
    }
    ZeroTable out = full;
    out.ordinates.clear();
    for (double g : full.ordinates)
        if (g <= T) out.ordinates.push_back(g);
    out.upto = T;
    return out;
}

ZeroTable first_zeros(long count) {
    if (count < 0) throw std::invalid_argument("count must be nonnegative");
    double T = 20;
    while (rvm_main(T) + 2 < static_cast<double>(count)) T += 10;
    for (;;) {
        T = std::min(T, kMaxT);
        ZeroTable z = find_zeros(T);
        if (static_cast<long>(z.ordinates.size()) >= count) {
            z.ordinates.resize(static_cast<std::size_t>(count));
            if (count > 0) z.upto = z.ordinates.back();
            return z;
        }
        if (T >= kMaxT) throw std::invalid_argument("more zeros requested than lie below T = 500");
        T += 10;
    }
}

long count_N(double T) { return static_cast<long>(find_zeros(T).ordinates.size()); }

int mobius(long n) {
    if (n < 1) throw std::invalid_argument("mobius needs n >= 1");
    int m = 1;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        n /= p;
        if (n % p == 0) return 0;
        m = -m;
    }
    if (n > 1) m = -m;
    return m;
}

double von_mangoldt(long n) {
    if (n < 1) throw std::invalid_argument("von Mangoldt needs n >= 1");
    for (long p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        while (n % p == 0) n /= p;
        return n == 1 ? std::log(static_cast<double>(p)) : 0.0;
    }
    return n > 1 ? std::log(static_cast<double>(n)) : 0.0;
}

long divisor_sigma(long n, int k) {
    if (n < 1) throw std::invalid_argument("divisor sum needs n >= 1");
    long s = 0;
    for (long d = 1; d * d <= n; ++d) {
        if (n % d) continue;
        long e = n / d;
        long pd = 1, pe = 1;
        for (int j = 0; j < k; ++j) {
            pd *= d;
            pe *= e;
        }
        s += pd;
        if (e != d) s += pe;
    }
    return s;
}

long r_squares(int l, long n) {
    if (l < 0 || n < 0) throw std::invalid_argument("r_squares needs l, n >= 0");
    if (l == 0) return n == 0 ? 1 : 0;
    long total = 0;
    for (long m = 0; m * m <= n; ++m) total += (m == 0 ? 1 : 2) * r_squares(l - 1, n - m * m);
    return total;
}

std::vector<double> von_mangoldt_table(long N) {
    std::vector<double> L(static_cast<std::size_t>(N + 1), 0.0);
    std::vector<char> composite(static_cast<std::size_t>(N + 1), 0);
    for (long p = 2; p <= N; ++p) {
        if (composite[p]) continue;
        for (long m = p * p; m <= N; m += p) composite[m] = 1;
        double lp = std::log(static_cast<double>(p));
        for (long q = p; q <= N; q *= p) {
            L[q] = lp;
            if (q > N / p) break;
        }
    }
    return L;
}

std::vector<int> mobius_table(long N) {
    std::vector<int> mu(static_cast<std::size_t>(N + 1), 1);
    std::vector<char> composite(static_cast<std::size_t>(N + 1), 0);
    if (N >= 0) mu[0] = 0;
    for (long p = 2; p <= N; ++p) {
        if (composite[p]) continue;
        for (long m = p; m <= N; m += p) {
            if (m > p) composite[m] = 1;
            mu[m] = -mu[m];
        }
        if (p <= N / p)
            for (long m = p * p; m <= N; m += p * p) mu[m] = 0;
    }
    return mu;
}

CharacterRep CharacterRep::conj() const {
    CharacterRep c = *this;
    for (auto& v : c.values) v = std::conj(v);
    return c;
}

bool CharacterRep::real() const {
    for (const auto& v : values)
        if (std::abs(v.imag()) > 1e-12) return false;
    return true;
}

namespace {

long powmod(long b, long e, long m) {
    long r = 1 % m;
    b %= m;
    while (e > 0) {
        if (e & 1) r = r * b % m;
        b = b * b % m;
        e >>= 1;
    }
    return r;
}

// cyclic factor: generator g of order `order` mod m, or the 2-power pieces
struct Component {
    long m;      // prime power modulus
    long g;      // generator
    long order;  // order of g
    bool minus;  // component generated by -1 (2-power case)
};

std::vector<Component> components(long q) {
    std::vector<Component> out;
    long n = q;
    for (long p = 2; p <= n; ++p) {
        if (n % p) continue;
        long pe = 1;
        int e = 0;
        while (n % p == 0) {
            n /= p;
            pe *= p;
            ++e;
        }
        if (p == 2) {
            if (e == 2) out.push_back({4, 3, 2, true});
            if (e >= 3) {
                out.push_back({pe, pe - 1, 2, true});
                out.push_back({pe, 5, pe / 4, false});
            }
            continue;
        }
        long phi = pe / p * (p - 1);
        for (long g = 2; g < pe; ++g) {
            if (std::gcd(g, pe) != 1) continue;
            bool prim = true;
            for (long r = 2; r <= phi && prim; ++r)
                if (phi % r == 0) {
                    bool prime_r = true;
                    for (long u = 2; u * u <= r; ++u)
                        if (r % u == 0) prime_r = false;
                    if (prime_r && powmod(g, phi / r, pe) == 1) prim = false;
                }
            if (prim) {
                out.push_back({pe, g, phi, false});
                break;
            }
        }
    }
    return out;
}

// exponent vector of n in the components (n coprime to q)
std::vector<long> dlog(long n, const std::vector<Component>& comps) {
    std::vector<long> out;
    for (std::size_t i = 0; i < comps.size(); ++i) {
        const auto& c = comps[i];
        long r = ((n % c.m) + c.m) % c.m;
        if (c.minus) {
            // 2-power modulus: n = (-1)^a 5^b
            bool neg = c.m == 4 ? r == 3 : (r % 4 == 3);
            out.push_back(neg ? 1 : 0);
            continue;
        }
        if (i > 0 && comps[i - 1].minus && comps[i - 1].m == c.m && r % 4 == 3) r = c.m - r;
        long x = 1;
        long k = 0;
        while (x != r) {
            x = x * c.g % c.m;
            ++k;
            if (k > c.order) throw std::logic_error("discrete log failed");
        }
        out.push_back(k);
    }
    return out;
}

}  // namespace

std::vector<CharacterRep> dirichlet_characters(long q) {
    if (q < 1) throw std::invalid_argument("modulus must be positive");
    auto comps = components(q);
    long count = 1;
    for (const auto& c : comps) count *= c.order;
    std::vector<std::vector<long>> logs(static_cast<std::size_t>(q));
    for (long n = 0; n < q; ++n)
        if (std::gcd(n, q) == 1) logs[n] = dlog(n, comps);
    std::vector<CharacterRep> out;
    for (long idx = 0; idx < count; ++idx) {
        std::vector<long> a;
        long r = idx;
        for (const auto& c : comps) {
            a.push_back(r % c.order);
            r /= c.order;
        }
        CharacterRep chi;
        chi.q = q;
        chi.index = static_cast<int>(idx);
        chi.values.assign(static_cast<std::size_t>(q), cd(0));
        for (long n = 0; n < q; ++n) {
            if (std::gcd(n, q) != 1) continue;
            double phase = 0;
            for (std::size_t i = 0; i < comps.size(); ++i)
                phase += static_cast<double>(a[i] * logs[n][i] % comps[i].order) / static_cast<double>(comps[i].order);
            chi.values[n] = std::polar(1.0, 2 * M_PI * phase);
            if (std::abs(chi.values[n].imag()) < 1e-15) chi.values[n] = cd(chi.values[n].real(), 0);
            if (std::abs(chi.values[n].real()) < 1e-15) chi.values[n] = cd(0, chi.values[n].imag());
        }
        if (q == 1) chi.values[0] = 1;
        chi.even = q <= 2 || std::abs(chi(q - 1) - 1.0) < 1e-12;
        // conductor: least d | q with chi trivial on n = 1 mod d
        chi.conductor = q;
        for (long d = 1; d <= q; ++d) {
            if (q % d) continue;
            bool trivial = true;
            for (long n = 1; n < q && trivial; n += d)
                if (std::gcd(n, q) == 1 && std::abs(chi(n) - 1.0) > 1e-12) trivial = false;
            if (trivial) {
                chi.conductor = d;
                break;
            }
        }
        chi.primitive = chi.conductor == q;
        out.push_back(std::move(chi));
    }
    return out;
}

std::vector<CharacterRep> primitive_characters(long q) {
    std::vector<CharacterRep> out;
    for (auto& c : dirichlet_characters(q))
        if (c.primitive) out.push_back(c);
    return out;
}

CharacterRep character(long q, int index) {
    auto all = dirichlet_characters(q);
    if (index < 0 || index >= static_cast<int>(all.size())) throw std::invalid_argument("character index out of range");
    return all[static_cast<std::size_t>(index)];
}

cd L_chi(cd s, const CharacterRep& chi) {
    if (chi.q == 1) return zeta(s);
    const long N = em_cutoff(s);
    cd total = 0, poles = 0, chisum = 0;
    const double q = static_cast<double>(chi.q);
    cd log_acc = 0;
    for (long a = 1; a <= chi.q; ++a) {
        cd c = chi(a);
        if (c == cd(0)) continue;
        cd pole;
        total += c * hurwitz_regular(s, static_cast<double>(a) / q, N, &pole);
        poles += c * pole;
        chisum += c;
        log_acc += c * std::log(static_cast<double>(N) + static_cast<double>(a) / q);
    }
    if (std::abs(s - 1.0) < 1e-8) {
        if (std::abs(chisum) > 1e-9) throw PoleError("L-function pole at s = 1", 1.0, chisum / q);
        // the pole terms cancel; their limit is -sum chi(a) log(N + a/q)
        poles = -log_acc;
    }
    return std::exp(-s * std::log(q)) * (total + poles);
}

cd L_star(cd s, const CharacterRep& chi) {
    double a = chi.even ? 0.0 : 1.0;
    return std::exp(s / 2.0 * std::log(static_cast<double>(chi.q))) * gamma_R(s + a) * L_chi(s, chi);
}

cd root_number(const CharacterRep& chi) {
    if (!chi.primitive) throw std::invalid_argument("root number needs a primitive character");
    cd tau = 0;
    for (long n = 1; n <= chi.q; ++n) tau += chi(n) * std::polar(1.0, 2 * M_PI * static_cast<double>(n) / static_cast<double>(chi.q));
    cd ia = chi.even ? cd(1) : cd(0, 1);
    return tau / (ia * std::sqrt(static_cast<double>(chi.q)));
}

}  // namespace zi
