#pragma once

#include <complex>
#include <vector>

namespace srpoly {

// Real polynomial stored densely by ascending power. Trailing zero
// coefficients are trimmed on construction, so leading() is nonzero for
// every polynomial except the zero polynomial, which is kept as the single
// coefficient 0. The empty coefficient sequence is rejected.
class DensePolynomial {
public:
    explicit DensePolynomial(std::vector<double> coeffs);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<double>& coeffs() const { return coeffs_; }

    // Coefficient of z^j; zero outside [0, degree].
    double operator[](int j) const;

    double leading() const { return coeffs_.back(); }
    bool is_zero() const { return coeffs_.size() == 1 && coeffs_[0] == 0.0; }

    double eval(double x) const;
    std::complex<double> eval(const std::complex<double>& z) const;

    DensePolynomial derivative() const;

    double abs_coeff_sum() const;

    // 1 + max_j |c_j / c_d|; every root has modulus below this.
    double cauchy_root_bound() const;

    bool operator==(const DensePolynomial&) const = default;

private:
    std::vector<double> coeffs_;
};

DensePolynomial operator+(const DensePolynomial& a, const DensePolynomial& b);
DensePolynomial operator-(const DensePolynomial& a, const DensePolynomial& b);
DensePolynomial operator*(const DensePolynomial& a, const DensePolynomial& b);
DensePolynomial operator*(double s, const DensePolynomial& p);

struct LinearDivision {
    DensePolynomial quotient;
    double remainder;
};

// Synthetic division of p by (z - root).
LinearDivision divide_by_linear(const DensePolynomial& p, double root);

} // namespace srpoly
