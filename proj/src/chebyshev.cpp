#include "srpoly/chebyshev.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <utility>

#include "srpoly/errors.hpp"

namespace srpoly {
namespace {

// Coefficient of x in q_1 is always 2 except for the first kind; the
// constant term distinguishes the third and fourth kinds.
double phi1(ChebKind kind, double x) {
    switch (kind) {
        case ChebKind::FirstKind: return x;
        case ChebKind::SecondKind: return 2.0 * x;
        case ChebKind::ThirdKind: return 2.0 * x - 1.0;
        case ChebKind::FourthKind: return 2.0 * x + 1.0;
    }
    throw Error("unknown Chebyshev kind");
}

std::vector<double> first_degree_coeffs(ChebKind kind) {
    switch (kind) {
        case ChebKind::FirstKind: return {0.0, 1.0};
        case ChebKind::SecondKind: return {0.0, 2.0};
        case ChebKind::ThirdKind: return {-1.0, 2.0};
        case ChebKind::FourthKind: return {1.0, 2.0};
    }
    throw Error("unknown Chebyshev kind");
}

} // namespace

char kind_letter(ChebKind kind) {
    switch (kind) {
        case ChebKind::FirstKind: return 'T';
        case ChebKind::SecondKind: return 'U';
        case ChebKind::ThirdKind: return 'V';
        case ChebKind::FourthKind: return 'W';
    }
    throw Error("unknown Chebyshev kind");
}

ChebKind kind_from_letter(std::string_view s) {
    if (s.size() == 1) {
        switch (s[0]) {
            case 'T': return ChebKind::FirstKind;
            case 'U': return ChebKind::SecondKind;
            case 'V': return ChebKind::ThirdKind;
            case 'W': return ChebKind::FourthKind;
            default: break;
        }
    }
    throw Error("unknown Chebyshev kind '" + std::string(s) + "' (expected T, U, V or W)");
}

DensePolynomial cheb_coeffs(ChebKind kind, int n) {
    if (n < 0) throw OutOfRange("cheb_coeffs requires n >= 0");
    std::vector<double> prev{1.0};
    if (n == 0) return DensePolynomial(std::move(prev));
    std::vector<double> cur = first_degree_coeffs(kind);
    for (int k = 2; k <= n; ++k) {
        std::vector<double> next(static_cast<size_t>(k) + 1, 0.0);
        for (size_t j = 0; j < cur.size(); ++j) next[j + 1] = 2.0 * cur[j];
        for (size_t j = 0; j < prev.size(); ++j) next[j] -= prev[j];
        prev = std::move(cur);
        cur = std::move(next);
    }
    return DensePolynomial(std::move(cur));
}

double cheb_series_eval(ChebKind kind, std::span<const double> a, double x) {
    if (a.empty()) return 0.0;
    const int n = static_cast<int>(a.size()) - 1;
    if (n == 0) return a[0];
    double b1 = 0.0, b2 = 0.0;
    for (int k = n; k >= 1; --k) {
        const double b = a[static_cast<size_t>(k)] + 2.0 * x * b1 - b2;
        b2 = b1;
        b1 = b;
    }
    return (a[0] - b2) + phi1(kind, x) * b1;
}

double cheb_eval(ChebKind kind, int n, double x) {
    if (n < 0) throw OutOfRange("cheb_eval requires n >= 0");
    if (n == 0) return 1.0;
    double b1 = 1.0, b2 = 0.0;
    for (int k = n - 1; k >= 1; --k) {
        const double b = 2.0 * x * b1 - b2;
        b2 = b1;
        b1 = b;
    }
    return phi1(kind, x) * b1 - b2;
}

std::vector<double> cheb_zeros(ChebKind kind, int n) {
    if (n < 0) throw OutOfRange("cheb_zeros requires n >= 0");
    if (n == 0) return {};
    const double pi = std::numbers::pi;
    std::vector<double> xs(static_cast<size_t>(n));
    for (int k = 1; k <= n; ++k) {
        double theta = 0.0;
        switch (kind) {
            case ChebKind::FirstKind: theta = (2.0 * k - 1.0) * pi / (2.0 * n); break;
            case ChebKind::SecondKind: theta = k * pi / (n + 1.0); break;
            case ChebKind::ThirdKind: theta = (2.0 * k - 1.0) * pi / (2.0 * n + 1.0); break;
            case ChebKind::FourthKind: theta = 2.0 * k * pi / (2.0 * n + 1.0); break;
        }
        xs[static_cast<size_t>(n - k)] = std::cos(theta); // cos is decreasing, so reverse
    }
    return xs;
}

IdentityPair two_t_identity(ChebKind kind, int n) {
    DensePolynomial left = 2.0 * cheb_coeffs(ChebKind::FirstKind, n);
    switch (kind) {
        case ChebKind::SecondKind:
            if (n < 2) throw OutOfRange("two_t_identity for the second kind requires n >= 2");
            return {std::move(left), cheb_coeffs(kind, n) - cheb_coeffs(kind, n - 2)};
        case ChebKind::ThirdKind:
            if (n < 1) throw OutOfRange("two_t_identity requires n >= 1");
            return {std::move(left), cheb_coeffs(kind, n) + cheb_coeffs(kind, n - 1)};
        case ChebKind::FourthKind:
            if (n < 1) throw OutOfRange("two_t_identity requires n >= 1");
            return {std::move(left), cheb_coeffs(kind, n) - cheb_coeffs(kind, n - 1)};
        case ChebKind::FirstKind:
            break;
    }
    throw Error("two_t_identity relates the first kind to U, V or W");
}

} // namespace srpoly
