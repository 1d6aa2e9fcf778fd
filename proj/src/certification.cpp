#include "tempcert/certification.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace tempcert {

namespace {

constexpr double kPi = std::numbers::pi;

RootOfUnityObservable conjugated(const RootOfUnityObservable& o, const Matrix& u) {
  RootOfUnityObservable out;
  out.d = o.d;
  out.D = o.D;
  out.unitary = u * o.unitary * u.adjoint();
  out.projectors.reserve(o.projectors.size());
  for (const auto& p : o.projectors) out.projectors.push_back(u * p * u.adjoint());
  return out;
}

/// d = 2 observable in D = 3 from a unit vector: +1 on the vector, -1 on the
/// complement; flipped swaps the outcome labels.
RootOfUnityObservable rank_one_pm(const Vector& v, bool flipped) {
  const Matrix p = v * v.adjoint();
  const Matrix rest = Matrix::Identity(3, 3) - p;
  RootOfUnityObservable o;
  o.d = 2;
  o.D = 3;
  o.projectors = flipped ? std::vector<Matrix>{rest, p} : std::vector<Matrix>{p, rest};
  o.unitary = o.projectors[0] - o.projectors[1];
  return o;
}

}  // namespace

double AlgebraicResiduals::max() const {
  return std::max({ab_identity, b_unitarity, commutation, b_power_consistency});
}

AlgebraicResiduals algebraic_residuals(const Quartet& q, const PreparedState& rho,
                                       const ToleranceConfig& tol) {
  if (!rho.is_maximally_mixed(tol))
    throw validation_error("algebraic_residuals: state must be maximally mixed");
  q.validate(tol);
  const int d = q.d;
  const Matrix id = Matrix::Identity(q.D, q.D);

  AlgebraicResiduals r;
  std::array<Matrix, 2> b1 = {build_b(1, 1, q.a(3), q.a(4)),
                              build_b(2, 1, q.a(3), q.a(4))};
  for (int k = 1; k <= d - 1; ++k) {
    std::array<Matrix, 2> bk = {build_b(1, k, q.a(3), q.a(4)),
                                build_b(2, k, q.a(3), q.a(4))};
    for (int x = 0; x < 2; ++x) {
      r.ab_identity = std::max(r.ab_identity,
                               hs_dist(q.a(x + 1).power(k) * bk[static_cast<std::size_t>(x)], id));
      r.b_unitarity = std::max(
          r.b_unitarity,
          hs_dist(bk[static_cast<std::size_t>(x)].adjoint() * bk[static_cast<std::size_t>(x)], id));
      Matrix b1k = id;
      for (int p = 0; p < k; ++p) b1k = b1k * b1[static_cast<std::size_t>(x)];
      r.b_power_consistency =
          std::max(r.b_power_consistency, hs_dist(bk[static_cast<std::size_t>(x)], b1k));
    }
    const Matrix lhs = q.a(3).power(k) * q.a(4).power(-k);
    const Matrix rhs = root_power(d, -k) * q.a(4).power(k) * q.a(3).power(-k);
    r.commutation = std::max(r.commutation, hs_dist(lhs, rhs));
  }
  return r;
}

std::vector<double> overlap_fingerprint(const Quartet& q) {
  std::vector<double> vals;
  vals.reserve(6 * static_cast<std::size_t>(q.d) * static_cast<std::size_t>(q.d));
  for (int i = 1; i <= 4; ++i)
    for (int j = i + 1; j <= 4; ++j)
      for (int a = 0; a < q.d; ++a)
        for (int b = 0; b < q.d; ++b)
          vals.push_back((q.a(i).projectors[static_cast<std::size_t>(a)] *
                          q.a(j).projectors[static_cast<std::size_t>(b)])
                             .trace()
                             .real());
  std::sort(vals.begin(), vals.end());
  return vals;
}

double fingerprint_distance(const Quartet& q, const Quartet& reference) {
  if (q.d != reference.d)
    throw dimension_error("fingerprint_distance: outcome counts differ");
  std::vector<double> own = overlap_fingerprint(q);
  std::vector<double> ref = overlap_fingerprint(reference);
  const double scale =
      (q.D % reference.D == 0) ? static_cast<double>(q.D / reference.D) : 1.0;
  double dist = 0.0;
  for (std::size_t n = 0; n < own.size(); ++n)
    dist = std::max(dist, std::abs(own[n] - scale * ref[n]));
  return dist;
}

Quartet perturb_quartet(int d, double delta, std::uint64_t seed,
                        const ToleranceConfig& tol) {
  if (delta < 0.0 || delta > 0.5)
    throw validation_error("perturb_quartet: delta must lie in [0, 0.5]");
  Quartet q = canonical_quartet(d, tol);
  if (delta == 0.0) return q;
  Rng rng(seed);
  for (int i = 1; i <= 4; ++i) {
    const Matrix h = random_hermitian_unit(d, rng);
    const Matrix u = exp_i_hermitian(h, delta);
    q.a(i) = conjugated(q.a(i), u);
  }
  q.validate(tol);
  return q;
}

RobustnessReport robustness_check(const Quartet& ideal, const Quartet& actual,
                                  const PreparedState& rho,
                                  const ToleranceConfig& tol) {
  if (ideal.d != actual.d || ideal.D != actual.D)
    throw dimension_error("robustness_check: quartet shapes differ");
  if (!rho.is_maximally_mixed(tol))
    throw validation_error("robustness_check: state must be maximally mixed");
  for (int i = 1; i <= 4; ++i)
    if (!projectivity_check(Povm::projective(actual.a(i), tol), tol).repeatable)
      throw validation_error("robustness_check: actual quartet fails the repeatability criterion");

  const int d = actual.d;
  const Complex a1 = coeff_a(1, d);
  const Complex a1c = std::conj(a1);
  const Complex w = root_of_unity(d);
  const Matrix& rhom = rho.density;

  const auto row_a1 = [&](const Quartet& q) -> Matrix {
    return q.a(1).unitary *
           (a1 * q.a(3).unitary.adjoint() + a1c * w * q.a(4).unitary.adjoint()) * rhom;
  };
  const auto row_a2 = [&](const Quartet& q) -> Matrix {
    return q.a(2).unitary *
           (a1c * q.a(3).unitary.adjoint() + a1 * q.a(4).unitary.adjoint()) * rhom;
  };
  const auto pair34 = [&](const Quartet& q) -> Matrix {
    return (q.a(4).unitary * q.a(3).unitary.adjoint() -
            w * q.a(3).unitary * q.a(4).unitary.adjoint()) * rhom;
  };
  const auto pair12 = [&](const Quartet& q) -> Matrix {
    return (w * q.a(2).unitary * q.a(1).unitary.adjoint() -
            q.a(1).unitary * q.a(2).unitary.adjoint()) * rhom;
  };

  RobustnessReport r;
  const double tau = (rhom * tau_operator(actual)).trace().real();
  r.epsilon = 4.0 * (d - 1) - tau;
  if (r.epsilon < -tol.value_tol)
    throw numeric_error("robustness_check: tau exceeds the quantum maximum");
  r.epsilon = std::max(r.epsilon, 0.0);

  r.defect_a1 = hs_dist(row_a1(ideal), row_a1(actual));
  r.defect_a2 = hs_dist(row_a2(ideal), row_a2(actual));
  r.defect_pair34 = hs_dist(pair34(ideal), pair34(actual));
  r.defect_pair12 = hs_dist(pair12(ideal), pair12(actual));

  const double se = std::sqrt(r.epsilon);
  r.bound_tight = se;
  r.bound_loose = 2.0 * se * (2.0 + se);
  r.bound_sharp = std::sqrt(r.epsilon / actual.D);
  r.all_bounds_hold = r.defect_a1 < r.bound_tight + tol.value_tol &&
                      r.defect_a2 < r.bound_tight + tol.value_tol &&
                      r.defect_pair34 <= r.bound_loose + tol.value_tol &&
                      r.defect_pair12 <= r.bound_loose + tol.value_tol;
  r.sharp_bounds_hold = r.defect_a1 < r.bound_sharp + tol.value_tol &&
                        r.defect_a2 < r.bound_sharp + tol.value_tol;
  return r;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::certified: return "certified";
    case Verdict::not_certified: return "not_certified";
    case Verdict::inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

CertificationReport certify(const Quartet& q, const ToleranceConfig& tol) {
  q.validate(tol);
  CertificationReport r;
  r.d = q.d;
  r.D = q.D;

  bool all_repeatable = true;
  for (int i = 1; i <= 4; ++i) {
    const bool ok = projectivity_check(Povm::projective(q.a(i), tol), tol).repeatable;
    r.repeatable[static_cast<std::size_t>(i - 1)] = ok;
    all_repeatable = all_repeatable && ok;
    r.spectral_multiplicities.push_back(q.a(i).ranks());
  }

  const PreparedState rho = PreparedState::maximally_mixed(q.D);
  r.tau = tau_from_stats(tables_from_quartet(q, rho, tol), tol);
  r.epsilon = 4.0 * (q.d - 1) - r.tau;
  r.residuals = algebraic_residuals(q, rho, tol);

  const Quartet reference = canonical_quartet(q.d, tol);
  r.fingerprint_distance = fingerprint_distance(q, reference);

  bool rank_one = true;
  for (int i = 1; i <= 4; ++i) rank_one = rank_one && q.a(i).rank_one();

  if (!all_repeatable || r.epsilon > tol.value_tol ||
      r.fingerprint_distance > tol.value_tol) {
    r.verdict = Verdict::not_certified;
  } else if (q.D == q.d && rank_one) {
    r.verdict = Verdict::certified;
  } else {
    r.verdict = Verdict::inconclusive;
  }
  return r;
}

Strategy strategy_planar(double theta, double phi, const ToleranceConfig& tol) {
  const double c8 = std::cos(kPi / 8);
  const double s8 = std::sin(kPi / 8);
  Strategy s;
  for (auto& v : s.vectors) v = Vector::Zero(3);
  s.vectors[0] << 1, 0, 0;
  s.vectors[1] << std::cos(kPi / 4), std::sin(kPi / 4), 0;
  s.vectors[2] << c8, s8, 0;
  s.vectors[3] << c8, -s8, 0;

  s.quartet.d = 2;
  s.quartet.D = 3;
  for (int i = 0; i < 4; ++i)
    s.quartet.obs[static_cast<std::size_t>(i)] =
        rank_one_pm(s.vectors[static_cast<std::size_t>(i)], i == 3);
  s.quartet.validate(tol);

  Vector psi(3);
  psi << Complex(std::cos(theta), 0), std::polar(std::sin(theta), phi), Complex(0, 0);
  s.state = PreparedState::pure(psi, tol);
  return s;
}

Strategy strategy_skew(const ToleranceConfig& tol) {
  const double sq2 = std::sqrt(2.0);
  const double sq3 = std::sqrt(3.0);
  Vector e0(3), e1(3), e2(3);
  e0 << 1, 0, 0;
  e1 << 0, 1, 0;
  e2 << 0, 0, 1;

  Vector v3(3);
  v3 << Complex(std::cos(kPi / 4), 0), 0.5 * std::polar(1.0, kPi / 4),
      0.5 * std::polar(1.0, kPi / 4);

  // State fixed by the optimality conditions: the single free scalar constraint
  // <psi|{A_1, A_3}|psi> = sqrt(2) with the family phase at pi/2.
  const Vector w1 = std::polar(1.0, kPi / 4) * (e1 + e2) / sq2;
  const Vector rhat = (e1 - e2) / sq2;
  const double cos_nu = (sq2 - 1.0) / sq3;
  const double sin_nu = std::sqrt(2.0 * sq2 / 3.0);
  const Vector psi =
      0.5 * e0 + (sq3 / 2.0) * (cos_nu * w1 + sin_nu * std::polar(1.0, kPi / 2) * rhat);

  const Matrix id = Matrix::Identity(3, 3);
  const Matrix a1 = 2.0 * (e0 * e0.adjoint()) - id;
  const Matrix a3 = 2.0 * (v3 * v3.adjoint()) - id;
  Vector v4 = (id + a3 - sq2 * a1) * psi;
  Vector v2 = (id + sq2 * a3 - a1) * psi;
  v4.normalize();
  v2.normalize();

  Strategy s;
  s.vectors = {e0, v2, v3, v4};
  s.quartet.d = 2;
  s.quartet.D = 3;
  for (int i = 0; i < 4; ++i)
    s.quartet.obs[static_cast<std::size_t>(i)] =
        rank_one_pm(s.vectors[static_cast<std::size_t>(i)], false);
  s.quartet.validate(tol);
  s.state = PreparedState::pure(psi, tol);
  return s;
}

NonuniquenessReport nonuniqueness_demo(double theta, double phi,
                                       const ToleranceConfig& tol) {
  const Strategy planar = strategy_planar(theta, phi, tol);
  const Strategy skew = strategy_skew(tol);

  NonuniquenessReport r;
  r.tau_planar =
      tau_from_stats(tables_from_quartet(planar.quartet, planar.state, tol), tol);
  r.tau_skew = tau_from_stats(tables_from_quartet(skew.quartet, skew.state, tol), tol);
  r.overlap_planar = std::abs(planar.vectors[0].dot(planar.vectors[2]));
  r.overlap_skew = std::abs(skew.vectors[0].dot(skew.vectors[2]));
  r.overlap_mismatch = std::abs(r.overlap_planar - r.overlap_skew);

  std::vector<double> fp = overlap_fingerprint(planar.quartet);
  std::vector<double> fs = overlap_fingerprint(skew.quartet);
  for (std::size_t n = 0; n < fp.size(); ++n)
    r.fingerprint_gap = std::max(r.fingerprint_gap, std::abs(fp[n] - fs[n]));
  r.connecting_unitary_exists = r.overlap_mismatch <= tol.value_tol;
  return r;
}

}  // namespace tempcert
