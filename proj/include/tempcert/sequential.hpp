#pragma once

#include <vector>

#include "tempcert/numerics.hpp"
#include "tempcert/observables.hpp"

namespace tempcert {

struct PreparedState {
  int D = 0;
  Matrix density;

  static PreparedState maximally_mixed(int D);
  static PreparedState from_density(const Matrix& rho, const ToleranceConfig& tol = {});
  static PreparedState pure(const Vector& psi, const ToleranceConfig& tol = {});

  bool is_maximally_mixed(const ToleranceConfig& tol = {}) const;
};

/// d-outcome measurement: positive effects summing to identity, with optional
/// per-outcome Kraus unitaries (identity by default). The Kraus operator of
/// outcome a is U_a sqrt(M_a).
struct Povm {
  int d = 0;
  int D = 0;
  std::vector<Matrix> effects;
  std::vector<Matrix> kraus_unitaries;  // empty means all identity

  static Povm from_effects(const std::vector<Matrix>& effects,
                           const ToleranceConfig& tol = {});
  static Povm from_effects(const std::vector<Matrix>& effects,
                           const std::vector<Matrix>& kraus_unitaries,
                           const ToleranceConfig& tol = {});
  static Povm projective(const RootOfUnityObservable& obs,
                         const ToleranceConfig& tol = {});
  /// lambda * Pi^a + (1 - lambda)/d * identity per outcome.
  static Povm smoothed(const RootOfUnityObservable& obs, double lambda,
                       const ToleranceConfig& tol = {});
  /// Generic full-rank POVM: Gram-normalized random PSD effects.
  static Povm random(int d, int D, Rng& rng, const ToleranceConfig& tol = {});
  /// Rank-one projective measurement in a Haar-random basis (D = d).
  static Povm random_projective(int d, Rng& rng,
                                const ToleranceConfig& tol = {});

  Matrix kraus(int outcome, const ToleranceConfig& tol = {}) const;
  void validate(const ToleranceConfig& tol = {}) const;
};

struct JointTable {
  int d_first = 0;
  int d_second = 0;
  Eigen::MatrixXd probs;  // probs(a, b) = p(a, b) with a the first outcome
};

/// Two sequential measurements under the Lueders update:
/// p(a, b) = Tr[E_b K_a rho K_a^dagger].
JointTable luders_joint(const PreparedState& rho, const Povm& first,
                        const Povm& second, const ToleranceConfig& tol = {});

std::vector<double> first_marginal(const JointTable& t);

/// |p(a, a) - p(a)| per outcome for a measurement repeated twice on the
/// maximally mixed state. Requires that state by precondition.
std::vector<double> repeatability_residuals(const Povm& m, const PreparedState& rho,
                                            const ToleranceConfig& tol = {});

struct ProjectivityReport {
  bool repeatable = false;            // max repeatability residual <= value_tol
  bool idempotent_effects = false;    // every effect idempotent within structural_tol
  bool criteria_agree = false;
  double max_repeatability_residual = 0.0;
  double max_idempotency_residual = 0.0;
  std::vector<double> residuals;
};

/// The repeatability criterion on the maximally mixed state, with the direct
/// idempotency check alongside for agreement reporting.
ProjectivityReport projectivity_check(const Povm& m, const ToleranceConfig& tol = {});

}  // namespace tempcert
