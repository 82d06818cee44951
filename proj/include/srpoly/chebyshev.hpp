#pragma once

#include <array>
#include <span>
#include <string_view>
#include <vector>

#include "srpoly/polynomial.hpp"

namespace srpoly {

// The four classical Chebyshev families T, U, V, W. All satisfy the same
// three-term recurrence q_k = 2x q_{k-1} - q_{k-2} and differ only in q_1:
// T_1 = x, U_1 = 2x, V_1 = 2x - 1, W_1 = 2x + 1.
enum class ChebKind { FirstKind, SecondKind, ThirdKind, FourthKind };

inline constexpr std::array<ChebKind, 4> kAllKinds = {
    ChebKind::FirstKind, ChebKind::SecondKind, ChebKind::ThirdKind, ChebKind::FourthKind};

char kind_letter(ChebKind kind);
ChebKind kind_from_letter(std::string_view s);

// Integer coefficients stay exact in binary64 up to this degree.
inline constexpr int kExactCoeffLimit = 30;

// Monomial coefficients of the degree-n polynomial, ascending.
DensePolynomial cheb_coeffs(ChebKind kind, int n);

// Clenshaw (backward recurrence) evaluation of sum_k a[k] q_k(x) in the
// given kind's basis.
double cheb_series_eval(ChebKind kind, std::span<const double> a, double x);

// Value of the degree-n polynomial at x.
double cheb_eval(ChebKind kind, int n, double x);

// The n zeros, strictly increasing, all inside (-1, 1).
std::vector<double> cheb_zeros(ChebKind kind, int n);

// Monomial expansions of both sides of the 2*T_n identity for the given
// kind: U_n - U_{n-2} (n >= 2), V_n + V_{n-1} (n >= 1), W_n - W_{n-1}
// (n >= 1). All three equal 2*T_n.
struct IdentityPair {
    DensePolynomial left;
    DensePolynomial right;
};
IdentityPair two_t_identity(ChebKind kind, int n);

} // namespace srpoly
