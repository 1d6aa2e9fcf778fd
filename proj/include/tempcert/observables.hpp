#pragma once

#include <array>
#include <utility>
#include <vector>

#include "tempcert/numerics.hpp"

namespace tempcert {

/// Fourier coefficient a_k = (1-i)/2 * e^{i*pi*k/(2d)}; |a_k|^2 = 1/2.
Complex coeff_a(int k, int d);

/// Unitary with spectrum in the d-th roots of unity, carried together with its
/// spectral projectors (projector a corresponds to eigenvalue omega^a).
struct RootOfUnityObservable {
  int d = 0;
  int D = 0;
  Matrix unitary;
  std::vector<Matrix> projectors;

  static RootOfUnityObservable from_unitary(const Matrix& u, int d,
                                            const ToleranceConfig& tol = {});
  static RootOfUnityObservable from_projectors(const std::vector<Matrix>& projs,
                                               const ToleranceConfig& tol = {});

  void validate(const ToleranceConfig& tol = {}) const;

  /// Spectral power: sum_a omega^{a*k mod d} projectors[a]. Exact for any
  /// integer k; k = 0 gives the identity, negative k wraps to d - (|k| mod d).
  Matrix power(long long k) const;

  std::vector<int> ranks() const;
  bool rank_one() const;  // every projector rank 1 and D == d
};

/// Fourier transform of a complete projective measurement: A = sum_a omega^a projs[a].
RootOfUnityObservable observable_from_projectors(const std::vector<Matrix>& projs,
                                                 int d,
                                                 const ToleranceConfig& tol = {});

Matrix observable_power(const RootOfUnityObservable& a, long long k);

/// The clock observable diag(1, omega, ..., omega^{d-1}).
RootOfUnityObservable build_z(int d);

/// The companion observable with entries
/// T[i][j] = delta_ij omega^{i+1/2} - (2/d)(-1)^{delta_i0 + delta_j0} omega^{(i+j+1)/2},
/// half-integer powers on the principal branch.
RootOfUnityObservable build_t(int d);

struct Quartet {
  int d = 0;
  int D = 0;
  std::array<RootOfUnityObservable, 4> obs;

  const RootOfUnityObservable& a(int i) const;  // 1-based index
  RootOfUnityObservable& a(int i);
  void validate(const ToleranceConfig& tol = {}) const;
};

/// The optimal quartet: A_1 = Z_d, A_2 = T_d, and A_3, A_4 from the k = 1
/// optimality system a_1 X + a_1* omega Y = Z^dagger, a_1* X + a_1 Y = T^dagger
/// with X = A_3^{-1}, Y = A_4^{-1}. Each root of unity appears exactly once in
/// every member's spectrum.
Quartet canonical_quartet(int d, const ToleranceConfig& tol = {});

/// The closed-form A_3, A_4 candidates as printed in the source theorem
/// (a_1* Z + 2 a_1*^3 T and a_1 Z - a_1* T). Kept for comparison reporting;
/// these do not attain the quantum maximum for any tested d.
std::pair<Matrix, Matrix> printed_a34(int d);

}  // namespace tempcert
