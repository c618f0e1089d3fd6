#pragma once

#include "mathieu/enclosure.hpp"

#include <functional>

namespace mathieu {

//! Configuration for the semi-infinite oscillatory quadrature.
//!
//! The integrand must decay like C*x*e^{-theta*x} with theta >= 1/2 so the
//! truncation at `truncation` is covered by the enclosure's tail allowance.
struct QuadConfig {
    double truncation = 50.0;   // integrate [0, truncation], tail bounded analytically
    double panel_length = 2.0;  // initial panel length (halved per refinement level)
    int nodes_per_panel = 12;   // Gauss-Legendre nodes per panel
    int refinement_levels = 2;  // minimum levels; refinement continues adaptively
    double tol = 1e-10;         // target half-width; also scales the divergence guard
};

//! Panel rule for integrands oscillating like sin(omega*x): half a period,
//! capped at max_panel.
QuadConfig make_quad_config(double omega, double tol, double max_panel = 2.0);

//! Integrate fn over [0, inf) as [0, X] panels with fixed-order nodes.
//! Successive refinement levels halve the panel length; the enclosure is the
//! finest value +/- (2*|level difference| + rounding slack + tail allowance).
//! Throws QuadratureDivergence when levels disagree by more than 1e6*tol.
SumResult quad_semiinfinite(const std::function<double(double)>& fn,
                            const QuadConfig& cfg);

//! F(h) via the sine-transform representation
//! (1/(2*sqrt(h))) * integral_0^inf u(x) sin(sqrt(h) x) dx, h > 0.
SumResult integral_F(double h, double tol);

//! F(h) via the twice-integrated-by-parts representation
//! 1/(2h) + (1/(2h^2)) * integral_0^inf f''(x) (1 - cos(sqrt(h) x)) dx, h > 0.
//! 1 - cos is evaluated as 2 sin^2(.../2) to avoid cancellation.
SumResult integral_F_parts(double h, double tol);

//! S(h) via the alternating kernel:
//! (1/(2*sqrt(h))) * integral_0^inf x/(e^x+1) sin(sqrt(h) x) dx, h > 0.
SumResult integral_S(double h, double tol);

} // namespace mathieu
