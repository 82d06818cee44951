#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "srpoly/families.hpp"
#include "srpoly/transform.hpp"

namespace srpoly {

// Relative residual bound every reported root satisfies after polishing.
inline constexpr double kResidualRelTol = 1e-9;

// Roots with ||z| - 1| below this count as on the unit circle.
inline constexpr double kOnCircleTol = 1e-7;

// Zero set of a self-reciprocal polynomial: conjugate circle pairs plus
// real off-circle zeros (which come in reciprocal pairs). residuals holds
// |P(z)| per entry of circle, then per entry of real_off.
struct RootSet {
    std::vector<CircleZero> circle;
    std::vector<double> real_off;
    std::vector<double> residuals;

    // Total zero count including multiplicity and conjugates.
    int total_count() const;
};

// Real zeros of Q_n - c Q_{n-1} on [-1, 1], ascending. Each zero is
// bisected inside its interlacing bracket built from the zeros of Q_n and
// Q_{n-1}; for c = 0 the zeros of Q_n are returned directly. All zeros are
// strictly interior except when c sits on a threshold, where the extreme
// zero hugs (or equals) +-1.
std::vector<double> interior_roots(ChebKind kind, int n, double c);

// The escaped real zero (|x| > 1), present exactly when c lies strictly
// beyond a threshold: above f_n(1) or below f_n(-1).
std::optional<double> exterior_root(ChebKind kind, int n, double c,
                                    double boundary_tol = kDefaultBoundaryTol);

// All complex roots by simultaneous (Durand-Kerner) iteration with Newton
// polishing. Multiple roots are returned as repeated entries; clusters
// tighter than max(10*tol, 1e-7*(1+|z|)) collapse to their refined mean.
// Throws NoConvergence.
std::vector<std::complex<double>> all_roots_monomial(const DensePolynomial& p,
                                                     double tol = 1e-13, int max_iter = 1000);

// Multiplicity of `point` as a root of p: the number of times synthetic
// division by (z - point) leaves a remainder below accept_rel times the
// current coefficient sum. next_remainder_rel is the first rejected
// relative remainder (infinity when the polynomial is exhausted).
struct MultiplicityResult {
    int multiplicity = 0;
    double next_remainder_rel = 0.0;
};
MultiplicityResult multiplicity_at(const DensePolynomial& p, double point,
                                   double accept_rel = 1e-10);

// Complete zero set of P. With a spec the set is assembled analytically
// (interlacing bisection, threshold classification, the exterior pair);
// without one the Durand-Kerner oracle runs and the result is partitioned
// by ||z| - 1| < on_circle_tol, confirming multiplicities at +-1 by
// synthetic division. Complex zeros off the circle are out of scope and
// raise Error.
RootSet full_rootset(const SelfReciprocalPoly& p,
                     const std::optional<FamilySpec>& spec = std::nullopt,
                     double on_circle_tol = kOnCircleTol);

} // namespace srpoly
