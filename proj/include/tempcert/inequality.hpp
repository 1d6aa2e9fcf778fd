#pragma once

#include <array>
#include <map>
#include <tuple>
#include <utility>
#include <vector>

#include "tempcert/observables.hpp"
#include "tempcert/sequential.hpp"

namespace tempcert {

/// Imaginary part of tau beyond this indicates corrupted statistics.
inline constexpr double kTauRealnessTol = 1e-8;

/// The eight ordered measurement pairs entering tau, in evaluation order.
inline constexpr std::array<std::pair<int, int>, 8> kTauPairs = {{
    {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 1}, {4, 1}, {3, 2}, {4, 2}}};

/// Two-dimensional Fourier transform of a joint table:
/// sum_{a,b} omega^{a*k + b*l} p(a, b).
Complex fourier_correlator(const JointTable& t, int k, int l, int d);

/// Correlators <A_i^k A_j^l> keyed by (i, j, k, l) with i measured first.
struct CorrelationSet {
  int d = 0;
  std::map<std::tuple<int, int, int, int>, Complex> values;

  void set(int i, int j, int k, int l, Complex v);
  Complex at(int i, int j, int k, int l) const;
  void validate(const ToleranceConfig& tol = {}) const;
};

/// The eight sequential joint tables of a tau evaluation, indexed per kTauPairs.
struct TauTables {
  int d = 0;
  std::array<JointTable, 8> tables;

  const JointTable& pair(int i, int j) const;
};

TauTables tables_from_quartet(const Quartet& q, const PreparedState& rho,
                              const ToleranceConfig& tol = {});

CorrelationSet correlations_from_tables(const TauTables& t,
                                        const ToleranceConfig& tol = {});

/// tau evaluated from sequential statistics. Throws numeric_error when the
/// imaginary part exceeds kTauRealnessTol.
double tau_from_stats(const TauTables& tables, const ToleranceConfig& tol = {});

/// Same sum without the realness gate, for diagnostics.
Complex tau_from_stats_complex(const TauTables& tables);

/// The tau operator: tau(rho) = Tr[rho * tau_operator(q)] for projective
/// quartets under the Lueders rule.
Matrix tau_operator(const Quartet& q);

struct ClassicalDecomposition {
  std::vector<double> alphas;  // alpha_0 .. alpha_{d-1}
  double s_value = 0.0;
};

ClassicalDecomposition classical_decomposition(int d);

/// Rescaled probability form: tau = d * tau_tilde - 8 * S for any normalized
/// statistics.
double tau_tilde(const TauTables& tables);

/// C_d = 3 cot(pi/4d) - cot(3pi/4d) - 4.
double classical_bound_closed(int d);

/// Chained-equation maximization over (q1, q2, q3) in {0..d-1}^3. Throws
/// numeric_error when it disagrees with the closed form beyond 1e-12.
double classical_bound_bruteforce(int d);

struct AssignmentEnumeration {
  double bound = 0.0;
  std::array<int, 4> argmax{};  // deterministic values v_1..v_4 attaining it
};

/// Independent enumeration of all d^4 deterministic value assignments,
/// evaluating tau_tilde on delta statistics.
AssignmentEnumeration classical_bound_assignments(int d);

struct InequalityReport {
  int d = 0;
  Complex tau;
  double classical_bound = 0.0;
  double quantum_max = 0.0;
  bool violated = false;
  double gap = 0.0;  // quantum_max - classical_bound
};

InequalityReport evaluate_inequality(const TauTables& tables,
                                     const ToleranceConfig& tol = {});

}  // namespace tempcert
