#pragma once

#include <complex>

#include "drlab/group.hpp"
#include "drlab/profiles.hpp"
#include "drlab/quad.hpp"
#include "drlab/spherical.hpp"

namespace drlab {

/// Line Fourier transform, integral of g(t) e^{-i s t} over the support of g.
/// Even g is folded to 2 * integral over t >= 0 of g(t) cos(s t).
cdouble fourier_line(const SmoothFn& g, cdouble s, const QuadOptions& opt = {});

/// Inverse line Fourier transform, carries the 1/(2 pi).
cdouble fourier_line_inverse(const SmoothFn& g, cdouble lambda, const QuadOptions& opt = {});

/// Lebesgue scaling kappa(g) = 2^{m_z} Gamma(n/2) / (2 pi^{n/2}) that makes
/// the radial part of the left Haar measure exactly A(r) dr (fixed by the
/// r -> 0 Euclidean limit; certified end to end by the two-route identity at
/// lambda = i Q/2 where the spherical function is constant 1).
double lebesgue_scale(const GroupParams& g);

/// Surface measure of the unit sphere in R^d.
double unit_sphere_area(int d);

/// kappa * omega_{m_v-1} * omega_{m_z-1}: constant in front of the reduced
/// (xi, zeta) integral of the Abel transform (the omega_{m_z-1} factor is
/// dropped when m_z = 0).
double abel_measure_constant(const GroupParams& g);

/// Prefactor of the inverse Abel operator stack for the normalization above:
/// 2^{1 - m_v - 3 m_z/2} sqrt(pi) / Gamma(n/2) on the even-m_z branch and
/// 2^{1 - m_v - 3 m_z/2} / Gamma(n/2) on the odd branch (their ratio sqrt(pi)
/// matches the even/odd ratio of the classical constants).
double abel_inverse_prefactor(const GroupParams& g);

/// Abel transform
///   A f(t) = c(g) e^{-Q t/2} \int\int f(radius(xi, zeta, e^t))
///            xi^{m_v-1} zeta^{m_z-1} dxi dzeta,
/// reduced to a single integral when m_z = 0. Even in t.
double abel_forward(const GroupParams& g, const SmoothFn& f, double t,
                    const QuadOptions& opt = {});

/// Chebyshev model of t -> abel_forward(g, f, t) on [0, t_hi] as an even
/// profile, the derivative provider for round trips through the inverse.
SmoothFn abel_forward_profile(const GroupParams& g, const SmoothFn& f, double t_hi,
                              const PiecewiseCheb::FitOptions& fit = {},
                              const QuadOptions& opt = {});

/// Inverse Abel transform, even m_z: a local derivative stack
///   pref * (-(1/sinh r) d/dr)^{m_z/2} (-(1/sinh(r/2)) d/dr)^{m_v/2} F(r).
/// Queries at r < 1e-3 evaluate the even-extension limit at r = 1e-3.
double abel_inverse_even(const GroupParams& g, const SmoothFn& F, double r,
                         const QuadOptions& opt = {});

/// Inverse Abel transform, odd m_z: the same stack with (m_z+1)/2 full-sinh
/// factors under the singular integral ds (cosh s - cosh r)^{-1/2} sinh s.
/// The square-root endpoint is removed exactly by s = 2 asinh(sqrt(sinh^2(r/2)
/// + y^2/2)); the far tail is integrated in s and truncated when negligible.
double abel_inverse_odd(const GroupParams& g, const SmoothFn& F, double r,
                        const QuadOptions& opt = {});

/// Parity dispatch between the two branches.
double abel_inverse(const GroupParams& g, const SmoothFn& F, double r,
                    const QuadOptions& opt = {});

/// Spherical transform, route 1: integral of phi_lambda(r) f(r) A(r) dr using
/// the cached eigenfunction evaluator.
cdouble spherical_transform(const SmoothFn& f, const SphericalEvaluator& ev,
                            const QuadOptions& opt = {});

/// Route 2: line Fourier transform of a cached Abel profile of f.
cdouble spherical_transform_via_abel(const SmoothFn& abel_profile, cdouble lambda,
                                     const QuadOptions& opt = {});

struct TwoRouteResult {
  cdouble direct;    // route 1
  cdouble via_abel;  // route 2
  double rel_dev;
};

/// Both routes at the evaluator's lambda; rel_dev is their relative gap.
TwoRouteResult spherical_transform_two_route(const SmoothFn& f, const SphericalEvaluator& ev,
                                             const SmoothFn& abel_profile,
                                             const QuadOptions& opt = {});

/// Inverse spherical transform of a spectral function supplied through its
/// Abel-side (line-Fourier) profile: abel_inverse(m_hat)(r) / (2 pi).
double spherical_inverse_from_hat(const GroupParams& g, const SmoothFn& m_hat, double r,
                                  const QuadOptions& opt = {});

}  // namespace drlab
