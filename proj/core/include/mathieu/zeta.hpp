#pragma once

#include "mathieu/enclosure.hpp"

namespace mathieu {

//! Certified value of the Riemann zeta (or Dirichlet eta) function at an
//! integer argument s >= 2, from a direct sum plus integral-test bracket.
struct ZetaValue {
    int s = 0;
    Enclosure enclosure;

    double value() const { return enclosure.midpoint(); }
};

//! zeta(s) for integer s >= 2 with enclosure half-width <= tol.
//! Throws std::domain_error for s < 2.
ZetaValue zeta_int(int s, double tol = 5e-13);

//! eta(s) = (1 - 2^{1-s}) * zeta(s); the prefactor is exact in binary.
ZetaValue eta_int(int s, double tol = 5e-13);

//! Coefficient of h^{m-1} in the small-h expansion of the series.
//!
//! corrected:  (-1)^{m-1} * m * zeta(2m+1)  — the value the generating
//!             integral actually produces;
//! as_printed: (-1)^{m+1} * zeta(2m)/(2m-1)! — the coefficient the audited
//!             note prints.
struct ExpansionCoeff {
    int m = 0;
    double corrected = 0.0;
    double as_printed = 0.0;
    Enclosure corrected_enclosure;
};

ExpansionCoeff expansion_coeff(int m);

//! Small-h expansion sum_{m>=1} (-1)^{m-1} m zeta(2m+1) h^{m-1}.
//! Radius of convergence is 1: throws std::domain_error for h >= 1.
SumResult eval_expansion(double h, double tol);

//! Alternating analogue sum_{m>=1} (-1)^{m-1} m eta(2m+1) h^{m-1}, h < 1.
SumResult eval_expansion_alternating(double h, double tol);

} // namespace mathieu
