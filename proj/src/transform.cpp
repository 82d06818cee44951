#include "srpoly/transform.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "srpoly/chebyshev.hpp"
#include "srpoly/errors.hpp"

namespace srpoly {

SelfReciprocalPoly SelfReciprocalPoly::exact(DensePolynomial p) {
    const auto& c = p.coeffs();
    const int d = p.degree();
    for (int i = 0; 2 * i <= d; ++i)
        if (c[static_cast<size_t>(i)] != c[static_cast<size_t>(d - i)])
            throw NotSelfReciprocal("coefficients are not exactly palindromic");
    return SelfReciprocalPoly(std::move(p));
}

SelfReciprocalPoly make_self_reciprocal(const std::vector<double>& coeffs, double tolerance) {
    if (coeffs.empty()) throw Error("empty coefficient sequence");
    if (coeffs.back() == 0.0) throw ZeroLeading("leading coefficient is zero");
    return make_self_reciprocal(DensePolynomial(coeffs), tolerance);
}

SelfReciprocalPoly make_self_reciprocal(const DensePolynomial& p, double tolerance) {
    const int d = p.degree();
    if (d < 1) throw Error("degree must be at least 1");
    if (p.is_zero()) throw ZeroLeading("zero polynomial");
    const auto& c = p.coeffs();
    double scale = 0.0;
    for (double v : c) scale = std::max(scale, std::abs(v));
    std::vector<double> sym(c.size());
    for (int i = 0; 2 * i <= d; ++i) {
        const double lo = c[static_cast<size_t>(i)];
        const double hi = c[static_cast<size_t>(d - i)];
        if (std::abs(lo - hi) > tolerance * scale)
            throw NotSelfReciprocal("coefficients " + std::to_string(i) + " and " +
                                    std::to_string(d - i) + " differ beyond tolerance");
        sym[static_cast<size_t>(i)] = sym[static_cast<size_t>(d - i)] = 0.5 * (lo + hi);
    }
    DensePolynomial q(std::move(sym));
    if (q.degree() != d) throw ZeroLeading("leading coefficient vanished after symmetrization");
    return SelfReciprocalPoly::exact(std::move(q));
}

ChebCombination::ChebCombination(std::vector<double> t) : t_(std::move(t)) {
    if (t_.empty()) throw Error("empty combination");
    if (t_.back() == 0.0) throw ZeroLeading("leading combination coefficient is zero");
}

double ChebCombination::eval(double x) const {
    return cheb_series_eval(ChebKind::FirstKind, t_, x);
}

ChebCombination to_cheb(const SelfReciprocalPoly& p) {
    if (p.odd_degree()) throw OddDegree("to_cheb requires even degree");
    const int n = p.half_degree();
    std::vector<double> t(static_cast<size_t>(n) + 1);
    t[0] = p.poly()[n] / 2.0;
    for (int j = 1; j <= n; ++j) t[static_cast<size_t>(j)] = p.poly()[n + j];
    return ChebCombination(std::move(t));
}

SelfReciprocalPoly from_cheb(const ChebCombination& c) {
    const int n = c.degree();
    std::vector<double> p(static_cast<size_t>(2 * n) + 1, 0.0);
    p[static_cast<size_t>(n)] = 2.0 * c.t()[0];
    for (int j = 1; j <= n; ++j) {
        p[static_cast<size_t>(n + j)] = c.t()[static_cast<size_t>(j)];
        p[static_cast<size_t>(n - j)] = c.t()[static_cast<size_t>(j)];
    }
    return SelfReciprocalPoly::exact(DensePolynomial(std::move(p)));
}

DensePolynomial cheb_to_monomial(const ChebCombination& c) {
    DensePolynomial acc({0.0});
    for (int j = 0; j <= c.degree(); ++j) {
        const double t = c.t()[static_cast<size_t>(j)];
        if (t == 0.0) continue;
        acc = acc + t * cheb_coeffs(ChebKind::FirstKind, j);
    }
    return acc;
}

OddFactorization factor_odd(const SelfReciprocalPoly& s) {
    if (!s.odd_degree()) throw EvenDegree("factor_odd requires odd degree");
    auto div = divide_by_linear(s.poly(), -1.0);
    const double tol = 1e-12 * s.poly().abs_coeff_sum();
    if (std::abs(div.remainder) > tol)
        throw ResidualTooLarge("remainder after dividing by (z + 1) exceeds tolerance");
    const double scale = s.poly().leading();
    std::vector<double> q = div.quotient.coeffs();
    for (double& v : q) v /= scale;
    // Division in floating point can break the symmetry at roundoff level.
    return {scale, make_self_reciprocal(q, 1e-12)};
}

std::complex<double> x_from_z(const std::complex<double>& z) {
    if (z == std::complex<double>(0.0, 0.0)) throw ZeroInput("x_from_z requires z != 0");
    return 0.5 * (z + 1.0 / z);
}

std::pair<std::complex<double>, std::complex<double>> z_pair_from_x(double x) {
    if (std::abs(x) <= 1.0) {
        const double s = std::sqrt(1.0 - x * x);
        return {{x, s}, {x, -s}};
    }
    const double s = std::sqrt(x * x - 1.0);
    const double sign = x > 0.0 ? 1.0 : -1.0;
    return {{x + sign * s, 0.0}, {x - sign * s, 0.0}};
}

std::vector<CircleZero> thetas_from_xs(const std::vector<double>& xs) {
    std::vector<CircleZero> out;
    out.reserve(xs.size());
    for (auto it = xs.rbegin(); it != xs.rend(); ++it) {
        double x = *it;
        if (std::abs(x) > 1.0 + 1e-12)
            throw OutOfRange("value " + std::to_string(x) + " lies outside [-1, 1]");
        x = std::clamp(x, -1.0, 1.0);
        out.push_back({std::acos(x), 1});
    }
    return out;
}

} // namespace srpoly
