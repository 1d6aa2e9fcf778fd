#pragma once

#include <vector>

#include "tempcert/inequality.hpp"
#include "tempcert/observables.hpp"

namespace tempcert {

/// B_1^{(k)} = a_k A_3^{-k} + a_k* omega^k A_4^{-k};
/// B_2^{(k)} = a_k* A_3^{-k} + a_k A_4^{-k}.
Matrix build_b(int x, int k, const RootOfUnityObservable& a3,
               const RootOfUnityObservable& a4);

/// The mirrored family acting on A_1, A_2:
/// C_1^{(k)} = a_k* A_1^{-k} + a_k A_2^{-k};
/// C_2^{(k)} = a_k omega^{-k} A_1^{-k} + a_k* A_2^{-k}.
Matrix build_c(int x, int k, const RootOfUnityObservable& a1,
               const RootOfUnityObservable& a2);

struct SosReport {
  int d = 0;
  double primary_residual = 0.0;  // ||sum P+P - (4(d-1) I - tau_op)||
  double alt_residual = 0.0;      // same for the C/Q family
  std::vector<double> per_term_norms;  // ||P_x^{(k)}||, k major, x minor
};

/// Residuals of both sum-of-squares identities for 4(d-1) I - tau_operator,
/// with P_x^{(k)} = I - A_x^k B_x^{(k)} and Q_x^{(k)} = I - A_{x+2}^k C_x^{(k)}.
SosReport sos_residuals(const Quartet& q, const ToleranceConfig& tol = {});

}  // namespace tempcert
