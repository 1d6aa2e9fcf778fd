#include "tempcert/sequential.hpp"

#include <cmath>
#include <string>

namespace tempcert {

PreparedState PreparedState::maximally_mixed(int D) {
  if (D < 1) throw dimension_error("maximally_mixed: D must be positive");
  PreparedState s;
  s.D = D;
  s.density = Matrix::Identity(D, D) / static_cast<double>(D);
  return s;
}

PreparedState PreparedState::from_density(const Matrix& rho, const ToleranceConfig& tol) {
  if (rho.rows() != rho.cols()) throw dimension_error("state: density must be square");
  if (!is_hermitian(rho, tol)) throw validation_error("state: density is not Hermitian");
  if (std::abs(rho.trace().real() - 1.0) > tol.structural_tol ||
      std::abs(rho.trace().imag()) > tol.structural_tol)
    throw validation_error("state: density trace is not 1");
  Eigen::SelfAdjointEigenSolver<Matrix> solver((rho + rho.adjoint().eval()) / 2.0);
  if (solver.eigenvalues().minCoeff() < -tol.structural_tol)
    throw validation_error("state: density has a negative eigenvalue");
  PreparedState s;
  s.D = static_cast<int>(rho.rows());
  s.density = rho;
  return s;
}

PreparedState PreparedState::pure(const Vector& psi, const ToleranceConfig& tol) {
  if (std::abs(psi.norm() - 1.0) > tol.structural_tol)
    throw validation_error("state: vector is not normalized");
  PreparedState s;
  s.D = static_cast<int>(psi.size());
  s.density = psi * psi.adjoint();
  return s;
}

bool PreparedState::is_maximally_mixed(const ToleranceConfig& tol) const {
  return hs_dist(density, Matrix::Identity(D, D) / static_cast<double>(D)) <=
         tol.structural_tol;
}

Povm Povm::from_effects(const std::vector<Matrix>& effects, const ToleranceConfig& tol) {
  return from_effects(effects, {}, tol);
}

Povm Povm::from_effects(const std::vector<Matrix>& effects,
                        const std::vector<Matrix>& kraus_unitaries,
                        const ToleranceConfig& tol) {
  if (effects.empty()) throw dimension_error("povm: no effects");
  Povm m;
  m.d = static_cast<int>(effects.size());
  m.D = static_cast<int>(effects[0].rows());
  m.effects = effects;
  m.kraus_unitaries = kraus_unitaries;
  m.validate(tol);
  return m;
}

Povm Povm::projective(const RootOfUnityObservable& obs, const ToleranceConfig& tol) {
  return from_effects(obs.projectors, {}, tol);
}

Povm Povm::smoothed(const RootOfUnityObservable& obs, double lambda,
                    const ToleranceConfig& tol) {
  if (lambda < 0.0 || lambda > 1.0)
    throw validation_error("povm: smoothing parameter must lie in [0, 1]");
  std::vector<Matrix> effects;
  effects.reserve(obs.projectors.size());
  const Matrix iso = ((1.0 - lambda) / obs.d) * Matrix::Identity(obs.D, obs.D);
  for (const auto& p : obs.projectors) effects.push_back(lambda * p + iso);
  return from_effects(effects, {}, tol);
}

Povm Povm::random(int d, int D, Rng& rng, const ToleranceConfig& tol) {
  if (d < 1 || D < 1) throw dimension_error("povm: need d >= 1 and D >= 1");
  std::vector<Matrix> grams;
  grams.reserve(static_cast<std::size_t>(d));
  Matrix total = Matrix::Zero(D, D);
  for (int a = 0; a < d; ++a) {
    Matrix g(D, D);
    for (int i = 0; i < D; ++i) {
      for (int j = 0; j < D; ++j) {
        g(i, j) = Complex(rng.gaussian(), rng.gaussian());
      }
    }
    Matrix gram = g * g.adjoint();
    total += gram;
    grams.push_back(std::move(gram));
  }
  Eigen::SelfAdjointEigenSolver<Matrix> es(total);
  if (es.info() != Eigen::Success || es.eigenvalues().minCoeff() <= 0.0) {
    throw numeric_error("povm: random effect sum is singular");
  }
  const Matrix inv_root =
      es.eigenvectors() *
      es.eigenvalues().cwiseSqrt().cwiseInverse().asDiagonal() *
      es.eigenvectors().adjoint();
  std::vector<Matrix> effects;
  effects.reserve(grams.size());
  for (const auto& gram : grams) effects.push_back(inv_root * gram * inv_root);
  return from_effects(effects, {}, tol);
}

Povm Povm::random_projective(int d, Rng& rng, const ToleranceConfig& tol) {
  if (d < 2) throw dimension_error("povm: need d >= 2");
  const Matrix u = haar_unitary(d, rng);
  std::vector<Matrix> effects;
  effects.reserve(static_cast<std::size_t>(d));
  for (int a = 0; a < d; ++a) {
    effects.push_back(u.col(a) * u.col(a).adjoint());
  }
  return from_effects(effects, {}, tol);
}

Matrix Povm::kraus(int outcome, const ToleranceConfig& tol) const {
  if (outcome < 0 || outcome >= d) throw dimension_error("povm: outcome out of range");
  const Matrix root = sqrt_psd(effects[static_cast<std::size_t>(outcome)], tol);
  if (kraus_unitaries.empty()) return root;
  return kraus_unitaries[static_cast<std::size_t>(outcome)] * root;
}

void Povm::validate(const ToleranceConfig& tol) const {
  if (d < 1 || D < 1) throw dimension_error("povm: d and D must be positive");
  Matrix sum = Matrix::Zero(D, D);
  for (int a = 0; a < d; ++a) {
    const Matrix& e = effects[static_cast<std::size_t>(a)];
    if (e.rows() != D || e.cols() != D)
      throw dimension_error("povm: effect " + std::to_string(a) + " has wrong shape");
    if (!is_hermitian(e, tol))
      throw validation_error("povm: effect " + std::to_string(a) + " is not Hermitian");
    Eigen::SelfAdjointEigenSolver<Matrix> solver((e + e.adjoint().eval()) / 2.0);
    if (solver.eigenvalues().minCoeff() < -tol.structural_tol)
      throw validation_error("povm: effect " + std::to_string(a) + " is not positive");
    sum += e;
  }
  if (hs_dist(sum, Matrix::Identity(D, D)) > tol.structural_tol)
    throw validation_error("povm: effects do not sum to identity");
  if (!kraus_unitaries.empty()) {
    if (static_cast<int>(kraus_unitaries.size()) != d)
      throw dimension_error("povm: expected one Kraus unitary per outcome");
    for (const auto& u : kraus_unitaries)
      if (u.rows() != D || u.cols() != D || !is_unitary(u, tol))
        throw validation_error("povm: invalid Kraus unitary");
  }
}

JointTable luders_joint(const PreparedState& rho, const Povm& first,
                        const Povm& second, const ToleranceConfig& tol) {
  if (rho.D != first.D || rho.D != second.D)
    throw dimension_error("luders_joint: dimension mismatch");
  JointTable t;
  t.d_first = first.d;
  t.d_second = second.d;
  t.probs.resize(first.d, second.d);
  double total = 0.0;
  for (int a = 0; a < first.d; ++a) {
    const Matrix k = first.kraus(a, tol);
    const Matrix post = k * rho.density * k.adjoint();
    for (int b = 0; b < second.d; ++b) {
      double p = (second.effects[static_cast<std::size_t>(b)] * post).trace().real();
      if (p < -tol.structural_tol)
        throw numeric_error("luders_joint: probability " + std::to_string(p) +
                            " below tolerance");
      if (p < 0) p = 0;
      if (p > 1.0 + tol.structural_tol)
        throw numeric_error("luders_joint: probability " + std::to_string(p) +
                            " above tolerance");
      if (p > 1) p = 1;
      t.probs(a, b) = p;
      total += p;
    }
  }
  if (std::abs(total - 1.0) > tol.value_tol)
    throw numeric_error("luders_joint: table sums to " + std::to_string(total));
  return t;
}

std::vector<double> first_marginal(const JointTable& t) {
  std::vector<double> out(static_cast<std::size_t>(t.d_first));
  for (int a = 0; a < t.d_first; ++a) out[static_cast<std::size_t>(a)] = t.probs.row(a).sum();
  return out;
}

std::vector<double> repeatability_residuals(const Povm& m, const PreparedState& rho,
                                            const ToleranceConfig& tol) {
  if (!rho.is_maximally_mixed(tol))
    throw validation_error("repeatability_residuals: state must be maximally mixed");
  const JointTable t = luders_joint(rho, m, m, tol);
  const std::vector<double> marg = first_marginal(t);
  std::vector<double> out(static_cast<std::size_t>(m.d));
  for (int a = 0; a < m.d; ++a)
    out[static_cast<std::size_t>(a)] = std::abs(t.probs(a, a) - marg[static_cast<std::size_t>(a)]);
  return out;
}

ProjectivityReport projectivity_check(const Povm& m, const ToleranceConfig& tol) {
  ProjectivityReport r;
  r.residuals = repeatability_residuals(m, PreparedState::maximally_mixed(m.D), tol);
  for (double v : r.residuals) r.max_repeatability_residual = std::max(r.max_repeatability_residual, v);
  r.repeatable = r.max_repeatability_residual <= tol.value_tol;
  for (const auto& e : m.effects)
    r.max_idempotency_residual = std::max(r.max_idempotency_residual, hs_dist(e * e, e));
  r.idempotent_effects = r.max_idempotency_residual <= tol.structural_tol;
  r.criteria_agree = (r.repeatable == r.idempotent_effects);
  return r;
}

}  // namespace tempcert
