#pragma once

#include <string>
#include <utility>

#include "srpoly/chebyshev.hpp"
#include "srpoly/transform.hpp"

namespace srpoly {

// Relative tolerance for deciding that c sits exactly on a threshold.
inline constexpr double kDefaultBoundaryTol = 1e-12;

enum class Parity { Even, Odd };

std::string parity_name(Parity p);
Parity parity_from_name(std::string_view s);

// Parameters of one family member. The even member of half-degree n has
// degree 2n and is determined by its leading coefficient and the single
// free subleading coefficient; the odd member of degree 2n + 1 equals
// lead * (z + 1) times a monic even member and `next` is its own free
// coefficient (s_{2n-1} for kinds T and W, s_{2n} for kinds U and V).
struct FamilySpec {
    ChebKind kind = ChebKind::FirstKind;
    int n = 2;
    double lead = 1.0;
    double next = 1.0;
    Parity parity = Parity::Even;

    bool operator==(const FamilySpec&) const = default;
};

// Throws Degenerate / ZeroLeading / OutOfRange when the parameters leave
// the family (collapse to another kind, vanishing quasi pair, bad n).
// Even patterns and the odd T / W patterns need n >= 2; the odd U / V
// patterns are already well formed at n = 1.
void validate(const FamilySpec& spec);

enum class ZeroCase {
    AllOnCircle,
    TwoRealNegative,
    TwoRealPositive,
    BoundaryPlusOne,
    BoundaryMinusOne,
};

std::string case_name(ZeroCase c);
ZeroCase case_from_name(std::string_view s);

struct Classification {
    double c = 0.0;
    double f_minus = 0.0;
    double f_plus = 0.0;
    ZeroCase zero_case = ZeroCase::AllOnCircle;
    int on_circle = 0;
    int off_circle = 0;
    int boundary_multiplicity = 0;
};

// The four even coefficient patterns (degree 2n, ascending):
//   T: lead, next, 0, ..., 0, next, lead
//   U: lead and next alternating, lead at even powers
//   V: lead, then (-1)^{j+1} next at power j, lead
//   W: lead, next, next, ..., next, lead
SelfReciprocalPoly construct_even(const FamilySpec& spec);

// Odd member lead * (z + 1) * (monic even member); see even_counterpart
// for the subleading coefficient of the even factor.
SelfReciprocalPoly construct_odd(const FamilySpec& spec);

// Dispatches on spec.parity.
SelfReciprocalPoly construct(const FamilySpec& spec);

// Quasi parameter of the even member with coefficients (lead, next):
//   T, U: -next/lead    V: -(next/lead + 1)    W: 1 - next/lead
// The member's combination is c0 Q_n + c1 Q_{n-1} with c = -c1/c0.
double compute_c(ChebKind kind, double lead, double next);

// The monic even member an odd spec factors through; even specs map to
// themselves. The subleading coefficient of the even factor is
//   T: next/lead   U, V: next/lead - 1   W: next/(2 lead).
FamilySpec even_counterpart(const FamilySpec& spec);

// Quasi parameter of the member described by spec (via even_counterpart).
double family_c(const FamilySpec& spec);

// Inverse of family_c for fixed kind, n, parity and leading coefficient.
FamilySpec spec_from_c(ChebKind kind, int n, double c, Parity parity, double lead = 1.0);

// Threshold interval (f_n(-1), f_n(1)) of the quasi parameter:
//   T: (-1, 1)                    U: (-(n+1)/n, (n+1)/n)
//   V: (-(2n+1)/(2n-1), 1)        W: (-1, (2n+1)/(2n-1))
std::pair<double, double> thresholds(ChebKind kind, int n);

// Case of a member with quasi parameter c against the given thresholds.
ZeroCase case_from_c(double c, double f_minus, double f_plus,
                     double boundary_tol = kDefaultBoundaryTol);

// Predicts the zero structure of the member described by spec. The zero
// counts satisfy on_circle + off_circle + boundary_multiplicity = degree;
// odd members carry one permanent circle zero at z = -1, which merges into
// a triple boundary zero when c sits on the lower threshold.
Classification classify(const FamilySpec& spec, double boundary_tol = kDefaultBoundaryTol);

// Matches a palindromic coefficient vector against the four patterns of
// its parity, in the order T, U, V, W (degenerate overlaps resolve to U).
// Comparisons use tol * max_j |p_j|. Throws NoMatch.
FamilySpec detect_class(const SelfReciprocalPoly& p, double tol = kDefaultPalindromeTol);

// Expands c0 Q_n + c1 Q_{n-1} into the first-kind basis.
ChebCombination quasi_in_T_basis(ChebKind kind, int n, double c0, double c1);

} // namespace srpoly
