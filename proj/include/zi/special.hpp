#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace zi {

using cd = std::complex<double>;

// Raised when an argument sits on (or within tolerance of) a pole.
struct PoleError : std::domain_error {
    PoleError(const std::string& what, cd where, cd residue) : std::domain_error(what), where(where), residue(residue) {}
    cd where;
    cd residue;
};

// log Gamma on the principal branch (continuous off the negative real axis).
cd lgamma_c(cd z);
// Gamma and digamma; PoleError at nonpositive integers.
cd gamma_c(cd z);
cd digamma_c(cd z);
// 1/Gamma, entire.
cd rgamma_c(cd z);

}  // namespace zi
