#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "tempcert/inequality.hpp"
#include "tempcert/observables.hpp"
#include "tempcert/sequential.hpp"
#include "tempcert/sos.hpp"

namespace tempcert {

/// Max-over-k Hilbert-Schmidt residuals of the four operator conditions that
/// pin the quartet at the quantum maximum.
struct AlgebraicResiduals {
  double ab_identity = 0.0;          // A_x^k B_x^{(k)} = I
  double b_unitarity = 0.0;          // (B_x^{(k)})+ B_x^{(k)} = I
  double commutation = 0.0;          // A_3^k A_4^{-k} = omega^{-k} A_4^k A_3^{-k}
  double b_power_consistency = 0.0;  // B_x^{(k)} = (B_x^{(1)})^k

  double max() const;
};

AlgebraicResiduals algebraic_residuals(const Quartet& q, const PreparedState& rho,
                                       const ToleranceConfig& tol = {});

/// Sorted multiset {Tr[Pi_i^a Pi_j^b] : i < j, a, b in 0..d-1}; invariant under
/// simultaneous unitary conjugation and outcome relabeling.
std::vector<double> overlap_fingerprint(const Quartet& q);

/// Max absolute difference of sorted fingerprints. When q.D is an integer
/// multiple m of reference.D, the reference entries are scaled by m (the value
/// the tensor-factor structure would produce).
double fingerprint_distance(const Quartet& q, const Quartet& reference);

/// Canonical quartet with every observable conjugated by an independent
/// exp(i*delta*H), H a seeded random Hermitian of unit Hilbert-Schmidt norm.
Quartet perturb_quartet(int d, double delta, std::uint64_t seed,
                        const ToleranceConfig& tol = {});

struct RobustnessReport {
  double epsilon = 0.0;
  double defect_a1 = 0.0;      // optimality defect of the A_1 row
  double defect_a2 = 0.0;      // optimality defect of the A_2 row
  double defect_pair34 = 0.0;  // twisted commutation defect of (A_3, A_4)
  double defect_pair12 = 0.0;  // twisted commutation defect of (A_1, A_2)
  double bound_tight = 0.0;    // sqrt(epsilon), for the row defects
  double bound_loose = 0.0;    // 2 sqrt(epsilon) (2 + sqrt(epsilon)), for the pair defects
  double bound_sharp = 0.0;    // sqrt(epsilon / D), intermediate bound for the row defects
  bool all_bounds_hold = false;
  bool sharp_bounds_hold = false;
};

RobustnessReport robustness_check(const Quartet& ideal, const Quartet& actual,
                                  const PreparedState& rho,
                                  const ToleranceConfig& tol = {});

enum class Verdict { certified, not_certified, inconclusive };

std::string to_string(Verdict v);

struct CertificationReport {
  int d = 0;
  int D = 0;
  std::array<bool, 4> repeatable{};  // per-observable repeatability criterion
  double tau = 0.0;
  double epsilon = 0.0;
  AlgebraicResiduals residuals;
  double fingerprint_distance = 0.0;
  std::vector<std::vector<int>> spectral_multiplicities;  // per observable
  Verdict verdict = Verdict::inconclusive;
};

/// Full pipeline against canonical_quartet(q.d) on the maximally mixed state.
CertificationReport certify(const Quartet& q, const ToleranceConfig& tol = {});

/// One of the two inequivalent maximal-violation strategies: d = 2 observables
/// in D = 3 built from rank-one vectors, on a pure state.
struct Strategy {
  Quartet quartet;
  PreparedState state;
  std::array<Vector, 4> vectors;
};

/// Planar-vector strategy: A_i = 2|u_i><u_i| - I (A_4 with flipped outcomes),
/// state (cos theta, e^{i phi} sin theta, 0).
Strategy strategy_planar(double theta, double phi, const ToleranceConfig& tol = {});

/// Second strategy, reconstructed in closed form from its fixed anchor vectors
/// v_1 = e_0 and v_3 = (cos pi/4, e^{i pi/4}/2, e^{i pi/4}/2).
Strategy strategy_skew(const ToleranceConfig& tol = {});

struct NonuniquenessReport {
  double tau_planar = 0.0;
  double tau_skew = 0.0;
  double overlap_planar = 0.0;  // |<u_1|u_3>| = cos(pi/8)
  double overlap_skew = 0.0;    // |<v_1|v_3>| = cos(pi/4)
  double overlap_mismatch = 0.0;
  double fingerprint_gap = 0.0;  // sorted-fingerprint distance between the strategies
  bool connecting_unitary_exists = false;
};

/// Two inequivalent strategies reaching the d = 2 quantum maximum: the overlap
/// mismatch witnesses that no unitary maps one onto the other.
NonuniquenessReport nonuniqueness_demo(double theta, double phi,
                                       const ToleranceConfig& tol = {});

}  // namespace tempcert
