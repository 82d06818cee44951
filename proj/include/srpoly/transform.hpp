#pragma once

#include <complex>
#include <utility>
#include <vector>

#include "srpoly/polynomial.hpp"

namespace srpoly {

// Default relative tolerance for accepting a coefficient vector as
// palindromic. Integer input is expected to satisfy the symmetry exactly.
inline constexpr double kDefaultPalindromeTol = 1e-9;

// Real polynomial with p_j = p_{d-j}. Zeros come in reciprocal pairs
// (z, 1/z); zeros on the unit circle pair as conjugates e^{+-i theta}.
class SelfReciprocalPoly {
public:
    // Wraps a polynomial whose coefficients are already exactly symmetric.
    static SelfReciprocalPoly exact(DensePolynomial p);

    const DensePolynomial& poly() const { return poly_; }
    int degree() const { return poly_.degree(); }
    int half_degree() const { return poly_.degree() / 2; }
    bool odd_degree() const { return poly_.degree() % 2 != 0; }

    double eval(double x) const { return poly_.eval(x); }
    std::complex<double> eval(const std::complex<double>& z) const { return poly_.eval(z); }

    bool operator==(const SelfReciprocalPoly&) const = default;

private:
    explicit SelfReciprocalPoly(DensePolynomial p) : poly_(std::move(p)) {}
    DensePolynomial poly_;
};

// Validates |p_i - p_{d-i}| <= tolerance * max_j |p_j| and symmetrizes by
// averaging the mirrored coefficients. The vector overload rejects a zero
// trailing coefficient before trimming.
SelfReciprocalPoly make_self_reciprocal(const std::vector<double>& coeffs,
                                        double tolerance = kDefaultPalindromeTol);
SelfReciprocalPoly make_self_reciprocal(const DensePolynomial& p,
                                        double tolerance = kDefaultPalindromeTol);

// Combination sum_j t_j T_j(x) in the first-kind basis; t.back() != 0.
class ChebCombination {
public:
    explicit ChebCombination(std::vector<double> t);

    int degree() const { return static_cast<int>(t_.size()) - 1; }
    const std::vector<double>& t() const { return t_; }
    double eval(double x) const;

    bool operator==(const ChebCombination&) const = default;

private:
    std::vector<double> t_;
};

// Zero on the unit circle: the conjugate pair e^{+-i theta} for
// 0 < theta < pi, or the real zero +1 / -1 at theta = 0 / pi.
struct CircleZero {
    double theta = 0.0;
    int multiplicity = 1;
    bool operator==(const CircleZero&) const = default;
};

// Under x = (z + 1/z)/2 an even self-reciprocal P of degree 2n becomes
// P(z) = 2 z^n C(x) with t_j = p_{n+j} for j >= 1 and t_0 = p_n / 2.
ChebCombination to_cheb(const SelfReciprocalPoly& p);
SelfReciprocalPoly from_cheb(const ChebCombination& c);

// Expands sum_j t_j T_j(x) to monomial coefficients in x.
DensePolynomial cheb_to_monomial(const ChebCombination& c);

// Odd-degree factorization S(z) = scale * (z + 1) * P(z) with P monic,
// even-degree and self-reciprocal; scale is the leading coefficient of S.
struct OddFactorization {
    double scale;
    SelfReciprocalPoly even_part;
};
OddFactorization factor_odd(const SelfReciprocalPoly& s);

// x = (z + 1/z)/2; rejects z = 0.
std::complex<double> x_from_z(const std::complex<double>& z);

// The two preimages of x: for |x| <= 1 the conjugate circle pair
// (x + i sqrt(1-x^2), conj), otherwise the real reciprocal pair
// (x + sgn(x) sqrt(x^2-1), x - sgn(x) sqrt(x^2-1)) with the outer zero first.
std::pair<std::complex<double>, std::complex<double>> z_pair_from_x(double x);

// Maps increasing x values in [-1, 1] to increasing angles arccos(x).
// Values within 1e-12 outside [-1, 1] are clamped; beyond that is an error.
std::vector<CircleZero> thetas_from_xs(const std::vector<double>& xs);

} // namespace srpoly
