#include "srpoly/families.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "srpoly/errors.hpp"

namespace srpoly {
namespace {

int min_n(const FamilySpec& spec) {
    if (spec.parity == Parity::Even) return 2;
    return (spec.kind == ChebKind::SecondKind || spec.kind == ChebKind::ThirdKind) ? 1 : 2;
}

std::vector<double> even_pattern(ChebKind kind, int n, double lead, double next) {
    const size_t d = static_cast<size_t>(2 * n);
    std::vector<double> p(d + 1, 0.0);
    p[0] = p[d] = lead;
    switch (kind) {
        case ChebKind::FirstKind:
            p[1] = p[d - 1] = next;
            break;
        case ChebKind::SecondKind:
            for (size_t j = 1; j < d; ++j) p[j] = (j % 2 == 0) ? lead : next;
            break;
        case ChebKind::ThirdKind:
            for (size_t j = 1; j < d; ++j) p[j] = (j % 2 == 1) ? next : -next;
            break;
        case ChebKind::FourthKind:
            for (size_t j = 1; j < d; ++j) p[j] = next;
            break;
    }
    return p;
}

std::vector<double> odd_pattern(ChebKind kind, int n, double lead, double next) {
    const size_t d = static_cast<size_t>(2 * n) + 1;
    std::vector<double> s(d + 1, 0.0);
    s[0] = s[d] = lead;
    switch (kind) {
        case ChebKind::FirstKind:
            s[1] = s[d - 1] = lead + next;
            s[2] = s[d - 2] = next;
            break;
        case ChebKind::SecondKind:
            for (size_t j = 1; j < d; ++j) s[j] = next;
            break;
        case ChebKind::ThirdKind:
            s[1] = s[d - 1] = next;
            break;
        case ChebKind::FourthKind:
            s[1] = s[d - 1] = lead + next / 2.0;
            for (size_t j = 2; j + 2 <= d; ++j) s[j] = next;
            break;
    }
    return s;
}

// T-basis coefficients of the degree-m polynomial of the given kind,
// obtained by telescoping the 2*T identities:
//   U_m = 2(T_m + T_{m-2} + ...)          V_m = 2(T_m - T_{m-1} + ...)
//   W_m = 2(T_m + T_{m-1} + ... + T_1) + T_0
std::vector<double> t_expansion(ChebKind kind, int m) {
    std::vector<double> v(static_cast<size_t>(m) + 1, 0.0);
    switch (kind) {
        case ChebKind::FirstKind:
            v[static_cast<size_t>(m)] = 1.0;
            break;
        case ChebKind::SecondKind:
            for (int k = m; k > 0; k -= 2) v[static_cast<size_t>(k)] = 2.0;
            if (m % 2 == 0) v[0] = 1.0;
            break;
        case ChebKind::ThirdKind:
            for (int k = m; k >= 1; --k)
                v[static_cast<size_t>(k)] = ((m - k) % 2 == 0) ? 2.0 : -2.0;
            v[0] = (m % 2 == 0) ? 1.0 : -1.0;
            break;
        case ChebKind::FourthKind:
            for (int k = m; k >= 1; --k) v[static_cast<size_t>(k)] = 2.0;
            v[0] = 1.0;
            break;
    }
    return v;
}

} // namespace

std::string parity_name(Parity p) { return p == Parity::Even ? "even" : "odd"; }

Parity parity_from_name(std::string_view s) {
    if (s == "even") return Parity::Even;
    if (s == "odd") return Parity::Odd;
    throw Error("unknown parity '" + std::string(s) + "'");
}

void validate(const FamilySpec& spec) {
    if (spec.lead == 0.0) throw ZeroLeading("leading coefficient must be nonzero");
    if (spec.n < min_n(spec))
        throw OutOfRange("n must be at least " + std::to_string(min_n(spec)) +
                         " for this kind and parity");
    if (spec.parity == Parity::Even) {
        switch (spec.kind) {
            case ChebKind::FirstKind:
            case ChebKind::SecondKind:
                if (spec.next == 0.0) throw Degenerate("next must be nonzero for this kind");
                break;
            case ChebKind::ThirdKind:
                if (spec.lead == -spec.next)
                    throw Degenerate("lead == -next collapses the V pattern to the U pattern");
                break;
            case ChebKind::FourthKind:
                if (spec.lead == spec.next)
                    throw Degenerate("lead == next collapses the W pattern to the U pattern");
                break;
        }
    } else {
        switch (spec.kind) {
            case ChebKind::FirstKind:
            case ChebKind::ThirdKind:
                if (spec.next == 0.0) throw Degenerate("next must be nonzero for this kind");
                break;
            case ChebKind::FourthKind:
                if (spec.next == 0.0) throw Degenerate("next must be nonzero for this kind");
                if (spec.next == 2.0 * spec.lead)
                    throw Degenerate("next == 2*lead collapses the W pattern to the U pattern");
                break;
            case ChebKind::SecondKind:
                break;
        }
    }
}

SelfReciprocalPoly construct_even(const FamilySpec& spec) {
    if (spec.parity != Parity::Even) throw Error("construct_even requires an even spec");
    validate(spec);
    return SelfReciprocalPoly::exact(
        DensePolynomial(even_pattern(spec.kind, spec.n, spec.lead, spec.next)));
}

SelfReciprocalPoly construct_odd(const FamilySpec& spec) {
    if (spec.parity != Parity::Odd) throw Error("construct_odd requires an odd spec");
    validate(spec);
    return SelfReciprocalPoly::exact(
        DensePolynomial(odd_pattern(spec.kind, spec.n, spec.lead, spec.next)));
}

SelfReciprocalPoly construct(const FamilySpec& spec) {
    return spec.parity == Parity::Even ? construct_even(spec) : construct_odd(spec);
}

double compute_c(ChebKind kind, double lead, double next) {
    if (lead == 0.0) throw ZeroLeading("leading coefficient must be nonzero");
    const double r = next / lead;
    switch (kind) {
        case ChebKind::FirstKind:
        case ChebKind::SecondKind: return -r;
        case ChebKind::ThirdKind: return -(r + 1.0);
        case ChebKind::FourthKind: return 1.0 - r;
    }
    throw Error("unknown Chebyshev kind");
}

FamilySpec even_counterpart(const FamilySpec& spec) {
    if (spec.parity == Parity::Even) return spec;
    if (spec.lead == 0.0) throw ZeroLeading("leading coefficient must be nonzero");
    const double r = spec.next / spec.lead;
    double q = 0.0;
    switch (spec.kind) {
        case ChebKind::FirstKind: q = r; break;
        case ChebKind::SecondKind:
        case ChebKind::ThirdKind: q = r - 1.0; break;
        case ChebKind::FourthKind: q = r / 2.0; break;
    }
    return {spec.kind, spec.n, 1.0, q, Parity::Even};
}

double family_c(const FamilySpec& spec) {
    const FamilySpec e = even_counterpart(spec);
    return compute_c(e.kind, e.lead, e.next);
}

FamilySpec spec_from_c(ChebKind kind, int n, double c, Parity parity, double lead) {
    double q = 0.0; // subleading of the monic even member with this c
    switch (kind) {
        case ChebKind::FirstKind:
        case ChebKind::SecondKind: q = -c; break;
        case ChebKind::ThirdKind: q = -(c + 1.0); break;
        case ChebKind::FourthKind: q = 1.0 - c; break;
    }
    double next = 0.0;
    if (parity == Parity::Even) {
        next = q * lead;
    } else {
        switch (kind) {
            case ChebKind::FirstKind: next = q * lead; break;
            case ChebKind::SecondKind:
            case ChebKind::ThirdKind: next = (q + 1.0) * lead; break;
            case ChebKind::FourthKind: next = 2.0 * q * lead; break;
        }
    }
    return {kind, n, lead, next, parity};
}

std::pair<double, double> thresholds(ChebKind kind, int n) {
    if (n < 1) throw OutOfRange("thresholds requires n >= 1");
    const double dn = static_cast<double>(n);
    switch (kind) {
        case ChebKind::FirstKind: return {-1.0, 1.0};
        case ChebKind::SecondKind: return {-(dn + 1.0) / dn, (dn + 1.0) / dn};
        case ChebKind::ThirdKind: return {-(2.0 * dn + 1.0) / (2.0 * dn - 1.0), 1.0};
        case ChebKind::FourthKind: return {-1.0, (2.0 * dn + 1.0) / (2.0 * dn - 1.0)};
    }
    throw Error("unknown Chebyshev kind");
}

ZeroCase case_from_c(double c, double f_minus, double f_plus, double boundary_tol) {
    if (std::abs(c - f_plus) <= boundary_tol * std::max(std::abs(c), std::abs(f_plus)))
        return ZeroCase::BoundaryPlusOne;
    if (std::abs(c - f_minus) <= boundary_tol * std::max(std::abs(c), std::abs(f_minus)))
        return ZeroCase::BoundaryMinusOne;
    if (c > f_plus) return ZeroCase::TwoRealPositive;
    if (c < f_minus) return ZeroCase::TwoRealNegative;
    return ZeroCase::AllOnCircle;
}

Classification classify(const FamilySpec& spec, double boundary_tol) {
    validate(spec);
    Classification cls;
    cls.c = family_c(spec);
    std::tie(cls.f_minus, cls.f_plus) = thresholds(spec.kind, spec.n);
    cls.zero_case = case_from_c(cls.c, cls.f_minus, cls.f_plus, boundary_tol);
    const int degree = spec.parity == Parity::Even ? 2 * spec.n : 2 * spec.n + 1;
    switch (cls.zero_case) {
        case ZeroCase::AllOnCircle:
            cls.on_circle = degree;
            break;
        case ZeroCase::TwoRealPositive:
        case ZeroCase::TwoRealNegative:
            cls.off_circle = 2;
            cls.on_circle = degree - 2;
            break;
        case ZeroCase::BoundaryPlusOne:
            cls.boundary_multiplicity = 2;
            cls.on_circle = degree - 2;
            break;
        case ZeroCase::BoundaryMinusOne:
            // The odd member's permanent zero at -1 joins the double zero.
            cls.boundary_multiplicity = spec.parity == Parity::Even ? 2 : 3;
            cls.on_circle = degree - cls.boundary_multiplicity;
            break;
    }
    return cls;
}

std::string case_name(ZeroCase c) {
    switch (c) {
        case ZeroCase::AllOnCircle: return "all_on_circle";
        case ZeroCase::TwoRealNegative: return "two_real_negative";
        case ZeroCase::TwoRealPositive: return "two_real_positive";
        case ZeroCase::BoundaryPlusOne: return "boundary_plus_one";
        case ZeroCase::BoundaryMinusOne: return "boundary_minus_one";
    }
    throw Error("unknown zero case");
}

ZeroCase case_from_name(std::string_view s) {
    if (s == "all_on_circle") return ZeroCase::AllOnCircle;
    if (s == "two_real_negative") return ZeroCase::TwoRealNegative;
    if (s == "two_real_positive") return ZeroCase::TwoRealPositive;
    if (s == "boundary_plus_one") return ZeroCase::BoundaryPlusOne;
    if (s == "boundary_minus_one") return ZeroCase::BoundaryMinusOne;
    throw Error("unknown zero case '" + std::string(s) + "'");
}

FamilySpec detect_class(const SelfReciprocalPoly& p, double tol) {
    const auto& c = p.poly().coeffs();
    const int d = p.degree();
    double scale = 0.0;
    for (double v : c) scale = std::max(scale, std::abs(v));
    const double atol = tol * scale;
    auto at = [&](int j) { return c[static_cast<size_t>(j)]; };
    auto near = [&](double a, double b) { return std::abs(a - b) <= atol; };
    auto nz = [&](double a) { return std::abs(a) > atol; };
    const double lead = at(d);

    if (d % 2 == 0) {
        const int n = d / 2;
        if (n < 2) throw NoMatch("even-degree matching requires degree >= 4");
        const double sub = at(d - 1);
        {
            bool ok = nz(sub);
            for (int j = 2; ok && j <= d - 2; ++j) ok = near(at(j), 0.0);
            if (ok) return {ChebKind::FirstKind, n, lead, sub, Parity::Even};
        }
        {
            bool ok = nz(sub);
            for (int j = 1; ok && j < d; ++j) ok = near(at(j), j % 2 == 0 ? lead : sub);
            if (ok) return {ChebKind::SecondKind, n, lead, sub, Parity::Even};
        }
        {
            bool ok = nz(sub) && !near(lead, -sub);
            for (int j = 1; ok && j < d; ++j) ok = near(at(j), j % 2 == 1 ? sub : -sub);
            if (ok) return {ChebKind::ThirdKind, n, lead, sub, Parity::Even};
        }
        {
            bool ok = !near(lead, sub);
            for (int j = 1; ok && j < d; ++j) ok = near(at(j), sub);
            if (ok && nz(sub)) return {ChebKind::FourthKind, n, lead, sub, Parity::Even};
        }
        // W admits a vanishing interior; so does V. Try the shared shape once.
        if (!nz(sub)) {
            bool ok = true;
            for (int j = 1; ok && j < d; ++j) ok = near(at(j), 0.0);
            if (ok) return {ChebKind::ThirdKind, n, lead, 0.0, Parity::Even};
        }
        throw NoMatch("coefficient vector fits no even family pattern");
    }

    const int n = (d - 1) / 2;
    if (n < 1) throw NoMatch("odd-degree matching requires degree >= 3");
    if (n >= 2) {
        const double t = at(d - 2);
        bool ok = nz(t) && near(at(d - 1), lead + t);
        for (int j = 3; ok && j <= d - 3; ++j) ok = near(at(j), 0.0);
        if (ok) return {ChebKind::FirstKind, n, lead, t, Parity::Odd};
    }
    {
        const double m = at(d - 1);
        bool ok = true;
        for (int j = 1; ok && j < d; ++j) ok = near(at(j), m);
        if (ok) return {ChebKind::SecondKind, n, lead, m, Parity::Odd};
    }
    if (n >= 2) {
        const double m = at(d - 1);
        bool ok = nz(m);
        for (int j = 2; ok && j <= d - 2; ++j) ok = near(at(j), 0.0);
        if (ok) return {ChebKind::ThirdKind, n, lead, m, Parity::Odd};
    }
    if (n >= 2) {
        const double t = at(d - 2);
        bool ok = nz(t) && near(at(d - 1), lead + t / 2.0);
        for (int j = 2; ok && j <= d - 2; ++j) ok = near(at(j), t);
        if (ok) return {ChebKind::FourthKind, n, lead, t, Parity::Odd};
    }
    throw NoMatch("coefficient vector fits no odd family pattern");
}

ChebCombination quasi_in_T_basis(ChebKind kind, int n, double c0, double c1) {
    if (n < 1) throw OutOfRange("quasi_in_T_basis requires n >= 1");
    if (c0 == 0.0 || c1 == 0.0) throw ZeroInput("quasi coefficients must be nonzero");
    std::vector<double> t(static_cast<size_t>(n) + 1, 0.0);
    const std::vector<double> hi = t_expansion(kind, n);
    const std::vector<double> lo = t_expansion(kind, n - 1);
    for (size_t j = 0; j < hi.size(); ++j) t[j] += c0 * hi[j];
    for (size_t j = 0; j < lo.size(); ++j) t[j] += c1 * lo[j];
    return ChebCombination(std::move(t));
}

} // namespace srpoly
