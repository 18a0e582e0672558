#include <cmath>

#include "doctest.h"
#include "forktx/andreev.hpp"

using forktx::AboveGap;
using forktx::andreev_amplitude;
using forktx::Complex;

TEST_CASE("andreev_amplitude: anchor values") {
    CHECK(std::abs(andreev_amplitude(0.0, 1.0) - Complex(0.0, -1.0)) < 1e-15);
    CHECK(std::abs(andreev_amplitude(1.0, 1.0) - Complex(1.0, 0.0)) < 1e-15);
    CHECK(std::abs(andreev_amplitude(-1.0, 1.0) - Complex(-1.0, 0.0)) < 1e-15);
    CHECK(andreev_amplitude(2.0, 1.0).real() ==
          doctest::Approx(2.0 - std::sqrt(3.0)).epsilon(1e-15));
    CHECK(andreev_amplitude(2.0, 1.0).imag() == 0.0);
    CHECK(andreev_amplitude(0.3, 0.0) == Complex(0.0, 0.0));
}

TEST_CASE("andreev_amplitude: unimodular inside the gap, damped outside") {
    for (double e = -0.99; e < 1.0; e += 0.07)
        CHECK(std::abs(andreev_amplitude(e, 1.0)) ==
              doctest::Approx(1.0).epsilon(1e-14));
    for (double e : {1.3, 2.0, 5.0, -1.7, -40.0})
        CHECK(std::abs(andreev_amplitude(e, 1.0)) < 1.0);
    CHECK(std::abs(andreev_amplitude(10.0, 1.0)) < 0.06);  // ~ gap / (2 energy)
}

TEST_CASE("andreev_amplitude: continuous at the gap edges") {
    // the two branches differ by ~2 sqrt(step) across the edge
    for (double step : {1e-6, 1e-7, 1e-8}) {
        CHECK(std::abs(andreev_amplitude(1.0 - step, 1.0) -
                       andreev_amplitude(1.0 + step, 1.0)) <
              2.1 * std::sqrt(step));
        CHECK(std::abs(andreev_amplitude(-1.0 + step, 1.0) -
                       andreev_amplitude(-1.0 - step, 1.0)) <
              2.1 * std::sqrt(step));
    }
    // within 1e-6 of the edge the values agree to 1e-3
    CHECK(std::abs(andreev_amplitude(1.0 - 1e-7, 1.0) -
                   andreev_amplitude(1.0 + 1e-7, 1.0)) < 1e-3);
}

TEST_CASE("andreev_amplitude: particle-hole relation inside the gap") {
    for (double e = -0.95; e < 1.0; e += 0.11) {
        const Complex a = andreev_amplitude(e, 1.0);
        const Complex b = andreev_amplitude(-e, 1.0);
        CHECK(std::abs(b + std::conj(a)) < 1e-15);
    }
}

TEST_CASE("andreev_amplitude: hard cutoff variant vanishes above the gap") {
    CHECK(andreev_amplitude(1.5, 1.0, AboveGap::cutoff) == Complex(0.0, 0.0));
    CHECK(std::abs(andreev_amplitude(0.5, 1.0, AboveGap::cutoff) -
                   andreev_amplitude(0.5, 1.0)) == 0.0);
}

TEST_CASE("andreev_matrix: per-arm amplitudes on the diagonal") {
    const forktx::Matrix m = forktx::andreev_matrix(0.0, {{1.0, 1.0}});
    CHECK(std::abs(m(0, 0) - Complex(0.0, -1.0)) < 1e-15);
    CHECK(std::abs(m(1, 1) - Complex(0.0, -1.0)) < 1e-15);
    CHECK(m(0, 1) == Complex(0.0, 0.0));

    // unequal gaps: one arm already above its gap, the other still inside
    const forktx::Matrix u = forktx::andreev_matrix(1.5, {{1.0, 2.0}});
    CHECK(u(0, 0).real() == doctest::Approx(1.5 - std::sqrt(1.25)).epsilon(1e-15));
    CHECK(u(0, 0).imag() == 0.0);
    CHECK(u(1, 1).real() == doctest::Approx(0.75).epsilon(1e-15));
    CHECK(u(1, 1).imag() ==
          doctest::Approx(-std::sqrt(1.0 - 0.5625)).epsilon(1e-15));

    CHECK(forktx::andreev_matrix(0.7, {{0.0, 0.0}}).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("andreev model rejects negative gaps") {
    CHECK_THROWS_AS(forktx::andreev_matrix(0.0, {{-1.0, 1.0}}),
                    forktx::DomainError);
    CHECK_THROWS_AS(andreev_amplitude(0.0, -0.5), forktx::DomainError);
}
