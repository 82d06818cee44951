#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "srpoly/chebyshev.hpp"
#include "srpoly/errors.hpp"

using namespace srpoly;

namespace {

std::vector<double> coeffs_of(ChebKind kind, int n) {
    return cheb_coeffs(kind, n).coeffs();
}

} // namespace

TEST_CASE("kind letters round-trip") {
    for (ChebKind kind : kAllKinds) {
        CHECK(kind_from_letter(std::string(1, kind_letter(kind))) == kind);
    }
    CHECK(kind_letter(ChebKind::FirstKind) == 'T');
    CHECK(kind_letter(ChebKind::SecondKind) == 'U');
    CHECK(kind_letter(ChebKind::ThirdKind) == 'V');
    CHECK(kind_letter(ChebKind::FourthKind) == 'W');
    CHECK_THROWS_AS(kind_from_letter("X"), Error);
    CHECK_THROWS_AS(kind_from_letter("TT"), Error);
}

TEST_CASE("low-degree coefficients") {
    CHECK(coeffs_of(ChebKind::FirstKind, 0) == std::vector<double>{1});
    CHECK(coeffs_of(ChebKind::FirstKind, 1) == std::vector<double>{0, 1});
    CHECK(coeffs_of(ChebKind::FirstKind, 2) == std::vector<double>{-1, 0, 2});
    CHECK(coeffs_of(ChebKind::FirstKind, 3) == std::vector<double>{0, -3, 0, 4});
    CHECK(coeffs_of(ChebKind::FirstKind, 4) == std::vector<double>{1, 0, -8, 0, 8});
    CHECK(coeffs_of(ChebKind::SecondKind, 1) == std::vector<double>{0, 2});
    CHECK(coeffs_of(ChebKind::SecondKind, 3) == std::vector<double>{0, -4, 0, 8});
    CHECK(coeffs_of(ChebKind::ThirdKind, 1) == std::vector<double>{-1, 2});
    CHECK(coeffs_of(ChebKind::ThirdKind, 3) == std::vector<double>{1, -4, -4, 8});
    CHECK(coeffs_of(ChebKind::FourthKind, 1) == std::vector<double>{1, 2});
    CHECK(coeffs_of(ChebKind::FourthKind, 3) == std::vector<double>{-1, -4, 4, 8});
    CHECK_THROWS_AS(cheb_coeffs(ChebKind::FirstKind, -1), OutOfRange);
}

TEST_CASE("coefficients stay integral through the exact range") {
    for (ChebKind kind : kAllKinds) {
        for (double c : coeffs_of(kind, kExactCoeffLimit)) {
            CHECK(c == std::floor(c));
        }
    }
}

TEST_CASE("trigonometric closed forms") {
    const double pi = std::numbers::pi;
    for (int k = 1; k <= 7; ++k) {
        const double th = 0.4 * k;
        const double x = std::cos(th);
        for (int n = 0; n <= 12; ++n) {
            CHECK(cheb_eval(ChebKind::FirstKind, n, x) ==
                  doctest::Approx(std::cos(n * th)).epsilon(1e-12));
            CHECK(cheb_eval(ChebKind::SecondKind, n, x) ==
                  doctest::Approx(std::sin((n + 1) * th) / std::sin(th)).epsilon(1e-12));
            CHECK(cheb_eval(ChebKind::ThirdKind, n, x) ==
                  doctest::Approx(std::cos((n + 0.5) * th) / std::cos(th / 2)).epsilon(1e-12));
            CHECK(cheb_eval(ChebKind::FourthKind, n, x) ==
                  doctest::Approx(std::sin((n + 0.5) * th) / std::sin(th / 2)).epsilon(1e-12));
        }
        (void)pi;
    }
}

TEST_CASE("evaluation matches the monomial expansion") {
    for (ChebKind kind : kAllKinds) {
        for (int n : {0, 1, 2, 5, 9}) {
            const DensePolynomial p = cheb_coeffs(kind, n);
            for (double x : {-0.9, -0.3, 0.0, 0.4, 0.99}) {
                CHECK(cheb_eval(kind, n, x) == doctest::Approx(p.eval(x)).epsilon(1e-13));
            }
        }
    }
}

TEST_CASE("Clenshaw series evaluation") {
    const std::vector<double> a = {0.5, -1.25, 2.0, 0.75};
    for (ChebKind kind : kAllKinds) {
        for (double x : {-0.8, -0.1, 0.35, 0.9}) {
            double direct = 0.0;
            for (int k = 0; k < static_cast<int>(a.size()); ++k)
                direct += a[static_cast<std::size_t>(k)] * cheb_eval(kind, k, x);
            CHECK(cheb_series_eval(kind, a, x) == doctest::Approx(direct).epsilon(1e-13));
        }
    }
}

TEST_CASE("zeros are ascending, interior, and annihilate the polynomial") {
    CHECK(cheb_zeros(ChebKind::FirstKind, 0).empty());
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    const std::vector<double> t2 = cheb_zeros(ChebKind::FirstKind, 2);
    REQUIRE(t2.size() == 2);
    CHECK(t2[0] == doctest::Approx(-inv_sqrt2).epsilon(1e-15));
    CHECK(t2[1] == doctest::Approx(inv_sqrt2).epsilon(1e-15));

    for (ChebKind kind : kAllKinds) {
        for (int n : {1, 2, 3, 8, 15}) {
            const std::vector<double> xs = cheb_zeros(kind, n);
            REQUIRE(static_cast<int>(xs.size()) == n);
            for (std::size_t i = 0; i < xs.size(); ++i) {
                CHECK(xs[i] > -1.0);
                CHECK(xs[i] < 1.0);
                if (i > 0) CHECK(xs[i] > xs[i - 1]);
                CHECK(std::abs(cheb_eval(kind, n, xs[i])) < 1e-12);
            }
        }
    }
}

TEST_CASE("consecutive zero sets interlace") {
    for (ChebKind kind : kAllKinds) {
        for (int n : {2, 3, 7, 12}) {
            const std::vector<double> zn = cheb_zeros(kind, n);
            const std::vector<double> zn1 = cheb_zeros(kind, n - 1);
            for (int i = 0; i + 1 < n; ++i) {
                CHECK(zn[static_cast<std::size_t>(i)] < zn1[static_cast<std::size_t>(i)]);
                CHECK(zn1[static_cast<std::size_t>(i)] < zn[static_cast<std::size_t>(i) + 1]);
            }
        }
    }
}

TEST_CASE("the 2 T_n identities hold with exact coefficients") {
    for (int n = 2; n <= 12; ++n) {
        const DensePolynomial twice_t = 2.0 * cheb_coeffs(ChebKind::FirstKind, n);
        for (ChebKind kind :
             {ChebKind::SecondKind, ChebKind::ThirdKind, ChebKind::FourthKind}) {
            const IdentityPair pair = two_t_identity(kind, n);
            CHECK(pair.left == pair.right);
            CHECK(pair.right == twice_t);
        }
    }
    // V_1 + V_0 and W_1 - W_0 already work at n = 1; the U form does not.
    CHECK(two_t_identity(ChebKind::ThirdKind, 1).left ==
          2.0 * cheb_coeffs(ChebKind::FirstKind, 1));
    CHECK(two_t_identity(ChebKind::FourthKind, 1).left ==
          2.0 * cheb_coeffs(ChebKind::FirstKind, 1));
    CHECK_THROWS_AS(two_t_identity(ChebKind::SecondKind, 1), OutOfRange);
    CHECK_THROWS_AS(two_t_identity(ChebKind::FirstKind, 3), Error);
}
