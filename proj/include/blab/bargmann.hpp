#pragma once

// The Bargmann-type transform T_h, its adjoint and projector, and the
// weighted inner product of H_Phi. T_h has an exact path on PolyGauss inputs;
// T_h^*, the projector and the H_Phi inner product run on 2D quadrature.

#include "blab/gaussalg.hpp"
#include "blab/phasecore.hpp"
#include "blab/quadrature.hpp"

namespace blab {

inline constexpr int kDefaultGrid2D = 120;
inline constexpr Real kDefaultTailTol = 1e-10L;

// T_h f(z) = C_phi h^{-3/4} * integral of e^{i phi(z,x)/h} f(x) dx, exactly.
HoloGauss transform(const PhaseParams& p, const PolyGauss& f);

// Exponent -2 Phi(z)/h of the weight of L^2_Phi.
PlaneQuadratic weight_exponent(const PhaseParams& p);

// Tensor Gauss-Hermite grid for exp(-2 Phi/h); needs Phi positive definite.
QuadGrid weight_grid(const PhaseParams& p, int n = kDefaultGrid2D);

// |U|^2 e^{-2 Phi/h} has Gaussian decay.
bool in_weighted_space(const PhaseParams& p, const HoloGauss& U);

// T_h^* U(x) = C_phi h^{-3/4} * integral of e^{-i conj(phi(z,x))/h} U(z) e^{-2 Phi/h}.
QuadEstimate adjoint_quad(const PhaseParams& p, const HoloGauss& U, Real x,
                          const QuadGrid& grid, Real tail_tol = kDefaultTailTol);
// Grid fitted to the integrand at this x.
QuadEstimate adjoint_quad(const PhaseParams& p, const HoloGauss& U, Real x,
                          int n = kDefaultGrid2D, Real tail_tol = kDefaultTailTol);

// (C_Phi/h) * integral of e^{2 Psi(z, conj zeta)/h} U(zeta) e^{-2 Phi(zeta)/h}.
QuadEstimate projector_apply(const PhaseParams& p, const GridFunction& U, Complex z,
                             Real tail_tol = kDefaultTailTol);

// (U, V) in L^2_Phi.
QuadEstimate inner_product_HPhi(const PhaseParams& p, const HoloGauss& U, const HoloGauss& V,
                                const QuadGrid& grid, Real tail_tol = kDefaultTailTol);
QuadEstimate inner_product_HPhi(const PhaseParams& p, const HoloGauss& U, const HoloGauss& V,
                                int n = kDefaultGrid2D, Real tail_tol = kDefaultTailTol);

}  // namespace blab
