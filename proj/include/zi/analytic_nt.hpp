#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "zi/special.hpp"

namespace zi {

// Hurwitz zeta sum_{n>=0} (n+a)^{-s} by Euler-Maclaurin, a > 0.
cd hurwitz_zeta(cd s, double a);
// Riemann zeta; PoleError within 1e-8 of s = 1.
cd zeta(cd s);
// pi^{-s/2} Gamma(s/2) zeta(s); PoleError near s = 0, 1.
cd zeta_star(cd s);
// Gamma_R(s) = pi^{-s/2} Gamma(s/2)
cd gamma_R(cd s);
// Independent evaluation through the alternating eta series (Borwein acceleration).
cd zeta_eta(cd s, int terms = 80);

// Riemann-Siegel theta phase and Hardy's Z on the critical line.
double rs_theta(double t);
double hardy_Z(double t);

struct ZeroTable {
    std::vector<double> ordinates;
    double precision = 1e-9;
    double upto = 0;  // every zero with 0 < gamma <= upto is listed
    std::string source = "computed";
};

// Integrity failure of the zero search (suspected double or missed zero).
struct IntegrityError : std::runtime_error {
    IntegrityError(const std::string& what, double lo, double hi) : std::runtime_error(what), lo(lo), hi(hi) {}
    double lo, hi;
};

// All ordinates in (0, T]; T <= 500. Uses and refreshes the cache file under ZI_CACHE_DIR.
ZeroTable find_zeros(double T);
// The first `count` ordinates.
ZeroTable first_zeros(long count);
long count_N(double T);
// (T / 2 pi) log(T / 2 pi e)
double rvm_main(double T);

ZeroTable read_zeros_file(const std::string& path);
void write_zeros_file(const std::string& path, const ZeroTable& table);
// ZI_CACHE_DIR, or ./zi_cache when unset
std::string cache_dir();

int mobius(long n);
double von_mangoldt(long n);
long divisor_sigma(long n, int k = 1);
// number of representations of n as an ordered sum of l signed squares
long r_squares(int l, long n);
// Lambda(n) for n = 0..N by a sieve (index 0 unused)
std::vector<double> von_mangoldt_table(long N);
std::vector<int> mobius_table(long N);

struct CharacterRep {
    long q = 1;
    int index = 0;
    std::vector<cd> values;  // chi(n mod q)
    bool even = true;
    bool primitive = true;
    long conductor = 1;

    cd operator()(long n) const { return values[static_cast<std::size_t>(((n % q) + q) % q)]; }
    CharacterRep conj() const;
    bool real() const;
};

// All characters mod q in a fixed order (index 0 is principal).
std::vector<CharacterRep> dirichlet_characters(long q);
std::vector<CharacterRep> primitive_characters(long q);
CharacterRep character(long q, int index);

// L(s, chi) for chi mod q by Hurwitz sums per residue class.
cd L_chi(cd s, const CharacterRep& chi);
// q^{s/2} Gamma_R(s + a) L(s, chi), a = 0 for even and 1 for odd chi
cd L_star(cd s, const CharacterRep& chi);
// Gauss sum / (i^a sqrt q); std::invalid_argument for imprimitive chi
cd root_number(const CharacterRep& chi);

}  // namespace zi
