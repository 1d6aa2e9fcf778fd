#include <doctest.h>

#include <cmath>
#include <complex>

#include "tempcert/inequality.hpp"
#include "tempcert/observables.hpp"
#include "tempcert/sequential.hpp"

using namespace tempcert;

TEST_CASE("fourier coefficients satisfy the defining identities") {
  for (int d = 2; d <= 12; ++d) {
    for (int k = 1; k < d; ++k) {
      const Complex ak = coeff_a(k, d);
      CHECK(std::abs(std::norm(ak) - 0.5) < 1e-12);
      CHECK(std::abs(coeff_a(d - k, d) - std::conj(ak)) < 1e-12);
      const Complex akc = std::conj(ak);
      CHECK(std::abs(ak * ak * root_power(d, -k) + akc * akc) < 1e-12);
    }
  }
}

TEST_CASE("frozen coefficient value at d=3") {
  const Complex a1 = coeff_a(1, 3);
  CHECK(a1.real() == doctest::Approx(0.6830127018922193).epsilon(1e-15));
  CHECK(a1.imag() == doctest::Approx(-0.18301270189221938).epsilon(1e-15));
}

TEST_CASE("clock observable") {
  const auto z = build_z(5);
  CHECK(z.d == 5);
  CHECK(z.D == 5);
  CHECK(is_unitary(z.unitary));
  for (int i = 0; i < 5; ++i) {
    CHECK(std::abs(z.unitary(i, i) - root_power(5, i)) < 1e-12);
  }
  CHECK(z.rank_one());
}

TEST_CASE("companion observable at d=2 is the negated flip") {
  const auto t = build_t(2);
  Matrix expected(2, 2);
  expected << 0, -1, -1, 0;
  CHECK(hs_dist(t.unitary, expected) < 1e-12);
}

TEST_CASE("companion observable frozen first row at d=3") {
  const auto t = build_t(3);
  CHECK(t.unitary(0, 0).real() == doctest::Approx(0.166666666666667).epsilon(1e-12));
  CHECK(t.unitary(0, 0).imag() == doctest::Approx(0.288675134594813).epsilon(1e-12));
  CHECK(t.unitary(0, 1).real() == doctest::Approx(-0.333333333333333).epsilon(1e-12));
  CHECK(t.unitary(0, 1).imag() == doctest::Approx(0.577350269189626).epsilon(1e-12));
  CHECK(t.unitary(0, 2).real() == doctest::Approx(-0.666666666666667).epsilon(1e-12));
  CHECK(std::abs(t.unitary(0, 2).imag()) < 1e-12);
}

TEST_CASE("companion observable is unitary with simple root spectrum") {
  for (int d = 2; d <= 10; ++d) {
    const auto t = build_t(d);
    CHECK(is_unitary(t.unitary));
    CHECK(t.rank_one());
  }
}

TEST_CASE("closed-form companion eigenvectors") {
  for (int d = 2; d <= 8; ++d) {
    const auto t = build_t(d);
    for (int r = 0; r < d; ++r) {
      Vector v(d);
      for (int q = 0; q < d; ++q) {
        const double sign = q == 0 ? -1.0 : 1.0;
        v(q) = sign * std::conj(half_power(d, q)) /
               (1.0 - half_power(d, 2 * (r - q) - 1));
      }
      v *= 2.0 / d;
      CHECK(std::abs(v.norm() - 1.0) < 1e-9);
      CHECK((t.unitary * v - root_power(d, r) * v).norm() < 1e-9);
    }
  }
}

TEST_CASE("spectral powers follow exponent arithmetic") {
  const auto t = build_t(4);
  CHECK(hs_dist(t.power(0), Matrix::Identity(4, 4)) < 1e-12);
  CHECK(hs_dist(t.power(1), t.unitary) < 1e-10);
  CHECK(hs_dist(t.power(2), t.unitary * t.unitary) < 1e-10);
  CHECK(hs_dist(t.power(-1), t.unitary.adjoint()) < 1e-10);
  CHECK(hs_dist(t.power(5), t.power(1)) < 1e-10);
  CHECK(hs_dist(t.power(-1), t.power(3)) < 1e-12);
}

TEST_CASE("projector round trip") {
  const auto t = build_t(3);
  const auto rebuilt = observable_from_projectors(t.projectors, 3);
  CHECK(hs_dist(rebuilt.unitary, t.unitary) < 1e-10);
}

TEST_CASE("from_projectors validates completeness and orthogonality") {
  const auto z = build_z(3);
  auto projs = z.projectors;
  projs[0] = 0.5 * projs[0];
  CHECK_THROWS_AS(RootOfUnityObservable::from_projectors(projs),
                  validation_error);
}

TEST_CASE("canonical quartet attains the quantum maximum") {
  for (int d = 2; d <= 8; ++d) {
    const Quartet q = canonical_quartet(d);
    q.validate();
    CHECK(q.d == d);
    CHECK(q.D == d);
    for (int i = 1; i <= 4; ++i) {
      CHECK(is_unitary(q.a(i).unitary));
      CHECK(q.a(i).rank_one());
    }
    const PreparedState rho = PreparedState::maximally_mixed(d);
    const double tau =
        std::real((rho.density * tau_operator(q)).trace());
    CHECK(tau == doctest::Approx(4.0 * (d - 1)).epsilon(1e-10));
  }
}

TEST_CASE("canonical quartet builds at the supported ceiling") {
  const Quartet q = canonical_quartet(16);
  q.validate();
  CHECK(q.d == 16);
}

TEST_CASE("canonical quartet matches the closed combination of Z and T") {
  for (int d = 2; d <= 6; ++d) {
    const Quartet q = canonical_quartet(d);
    const Complex a1 = coeff_a(1, d);
    const Complex a1c = std::conj(a1);
    const Matrix z = build_z(d).unitary;
    const Matrix t = build_t(d).unitary;
    CHECK(hs_dist(q.a(3).unitary, a1 * z + a1c * t) < 1e-9);
    CHECK(hs_dist(q.a(4).unitary, a1c * root_of_unity(d) * z + a1 * t) < 1e-9);
  }
}

TEST_CASE("printed closed-form candidates do not reach the maximum") {
  const auto mat_pow = [](const Matrix& m, int k) {
    Matrix out = Matrix::Identity(m.rows(), m.cols());
    for (int i = 0; i < k; ++i) out = out * m;
    return out;
  };
  for (int d = 2; d <= 5; ++d) {
    const auto [a3, a4] = printed_a34(d);
    const Matrix z = build_z(d).unitary;
    const Matrix t = build_t(d).unitary;
    Matrix beta = Matrix::Zero(d, d);
    for (int k = 1; k < d; ++k) {
      const Complex a = coeff_a(k, d);
      const Complex ac = std::conj(a);
      const Complex aw = ac * root_power(d, k);
      const Matrix zk = mat_pow(z, k);
      const Matrix tk = mat_pow(t, k);
      const Matrix a3k = mat_pow(a3, d - k);
      const Matrix a4k = mat_pow(a4, d - k);
      beta += a * zk * a3k + aw * zk * a4k + ac * tk * a3k + a * tk * a4k;
      beta += a * a3k * zk + aw * a4k * zk + ac * a3k * tk + a * a4k * tk;
    }
    const double tau = std::real(beta.trace()) / d;
    CHECK(tau < 4.0 * (d - 1) - 0.5);
  }
}

TEST_CASE("d=2 canonical pair lies along the diagonal qubit directions") {
  const Quartet q = canonical_quartet(2);
  Matrix sz(2, 2), sx(2, 2);
  sz << 1, 0, 0, -1;
  sx << 0, 1, 1, 0;
  const double s = std::sqrt(2.0);
  CHECK(hs_dist(q.a(3).unitary, (sz - sx) / s) < 1e-9);
  CHECK(hs_dist(q.a(4).unitary, -(sz + sx) / s) < 1e-9);
}

TEST_CASE("quartet accessor is one-based") {
  const Quartet q = canonical_quartet(2);
  CHECK_THROWS_AS(q.a(0), dimension_error);
  CHECK_THROWS_AS(q.a(5), dimension_error);
  CHECK(hs_dist(q.a(1).unitary, build_z(2).unitary) < 1e-12);
}
