#include "tempcert/sos.hpp"

namespace tempcert {

Matrix build_b(int x, int k, const RootOfUnityObservable& a3,
               const RootOfUnityObservable& a4) {
  if (x != 1 && x != 2) throw dimension_error("build_b: x must be 1 or 2");
  const int d = a3.d;
  const Complex ak = coeff_a(k, d);
  const Complex akc = std::conj(ak);
  const Matrix a3m = a3.power(-k);
  const Matrix a4m = a4.power(-k);
  if (x == 1) return ak * a3m + akc * root_power(d, k) * a4m;
  return akc * a3m + ak * a4m;
}

Matrix build_c(int x, int k, const RootOfUnityObservable& a1,
               const RootOfUnityObservable& a2) {
  if (x != 1 && x != 2) throw dimension_error("build_c: x must be 1 or 2");
  const int d = a1.d;
  const Complex ak = coeff_a(k, d);
  const Complex akc = std::conj(ak);
  const Matrix a1m = a1.power(-k);
  const Matrix a2m = a2.power(-k);
  if (x == 1) return akc * a1m + ak * a2m;
  return ak * root_power(d, -k) * a1m + akc * a2m;
}

SosReport sos_residuals(const Quartet& q, const ToleranceConfig& tol) {
  q.validate(tol);
  const int d = q.d;
  const Matrix id = Matrix::Identity(q.D, q.D);

  SosReport r;
  r.d = d;
  Matrix sum_p = Matrix::Zero(q.D, q.D);
  Matrix sum_q = Matrix::Zero(q.D, q.D);
  for (int k = 1; k <= d - 1; ++k) {
    for (int x = 1; x <= 2; ++x) {
      const Matrix p = id - q.a(x).power(k) * build_b(x, k, q.a(3), q.a(4));
      r.per_term_norms.push_back(hs_norm(p));
      sum_p += p.adjoint() * p;
      const Matrix qq = id - q.a(x + 2).power(k) * build_c(x, k, q.a(1), q.a(2));
      sum_q += qq.adjoint() * qq;
    }
  }
  const Matrix target = 4.0 * (d - 1) * id - tau_operator(q);
  r.primary_residual = hs_dist(sum_p, target);
  r.alt_residual = hs_dist(sum_q, target);
  return r;
}

}  // namespace tempcert
