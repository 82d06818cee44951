#include "srpoly/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "srpoly/errors.hpp"

namespace srpoly {

DensePolynomial::DensePolynomial(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw Error("empty coefficient sequence");
    while (coeffs_.size() > 1 && coeffs_.back() == 0.0) coeffs_.pop_back();
}

double DensePolynomial::operator[](int j) const {
    if (j < 0 || j > degree()) return 0.0;
    return coeffs_[static_cast<size_t>(j)];
}

double DensePolynomial::eval(double x) const {
    double acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

std::complex<double> DensePolynomial::eval(const std::complex<double>& z) const {
    std::complex<double> acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
    return acc;
}

DensePolynomial DensePolynomial::derivative() const {
    if (degree() == 0) return DensePolynomial({0.0});
    std::vector<double> d(coeffs_.size() - 1);
    for (size_t j = 1; j < coeffs_.size(); ++j) d[j - 1] = static_cast<double>(j) * coeffs_[j];
    return DensePolynomial(std::move(d));
}

double DensePolynomial::abs_coeff_sum() const {
    double s = 0.0;
    for (double c : coeffs_) s += std::abs(c);
    return s;
}

double DensePolynomial::cauchy_root_bound() const {
    if (is_zero()) throw Error("cauchy_root_bound of the zero polynomial");
    double m = 0.0;
    for (size_t j = 0; j + 1 < coeffs_.size(); ++j) m = std::max(m, std::abs(coeffs_[j]));
    return 1.0 + m / std::abs(coeffs_.back());
}

DensePolynomial operator+(const DensePolynomial& a, const DensePolynomial& b) {
    std::vector<double> c(std::max(a.coeffs().size(), b.coeffs().size()), 0.0);
    for (size_t j = 0; j < c.size(); ++j) c[j] = a[static_cast<int>(j)] + b[static_cast<int>(j)];
    return DensePolynomial(std::move(c));
}

DensePolynomial operator-(const DensePolynomial& a, const DensePolynomial& b) {
    std::vector<double> c(std::max(a.coeffs().size(), b.coeffs().size()), 0.0);
    for (size_t j = 0; j < c.size(); ++j) c[j] = a[static_cast<int>(j)] - b[static_cast<int>(j)];
    return DensePolynomial(std::move(c));
}

DensePolynomial operator*(const DensePolynomial& a, const DensePolynomial& b) {
    std::vector<double> c(a.coeffs().size() + b.coeffs().size() - 1, 0.0);
    for (size_t i = 0; i < a.coeffs().size(); ++i)
        for (size_t j = 0; j < b.coeffs().size(); ++j) c[i + j] += a.coeffs()[i] * b.coeffs()[j];
    return DensePolynomial(std::move(c));
}

DensePolynomial operator*(double s, const DensePolynomial& p) {
    std::vector<double> c = p.coeffs();
    for (double& v : c) v *= s;
    return DensePolynomial(std::move(c));
}

LinearDivision divide_by_linear(const DensePolynomial& p, double root) {
    const int d = p.degree();
    if (d < 1) throw Error("divide_by_linear requires degree >= 1");
    const auto& a = p.coeffs();
    std::vector<double> q(static_cast<size_t>(d), 0.0);
    double carry = a[static_cast<size_t>(d)];
    for (int k = d - 1; k >= 0; --k) {
        q[static_cast<size_t>(k)] = carry;
        carry = a[static_cast<size_t>(k)] + root * carry;
    }
    return {DensePolynomial(std::move(q)), carry};
}

} // namespace srpoly
