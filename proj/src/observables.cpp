#include "tempcert/observables.hpp"

#include <cmath>
#include <string>

namespace tempcert {

Complex coeff_a(int k, int d) {
  if (d < 2) throw dimension_error("coeff_a: d must be >= 2");
  if (k < 1 || k > d - 1)
    throw dimension_error("coeff_a: k must lie in 1..d-1, got " + std::to_string(k));
  return Complex(0.5, -0.5) * half_power(2 * d, k);  // e^{i pi k/(2d)}
}

RootOfUnityObservable RootOfUnityObservable::from_unitary(const Matrix& u, int d,
                                                          const ToleranceConfig& tol) {
  RootOfUnityObservable obs;
  obs.d = d;
  obs.D = static_cast<int>(u.rows());
  obs.unitary = u;
  obs.projectors = spectral_project_roots(u, d, tol);
  obs.validate(tol);
  return obs;
}

RootOfUnityObservable RootOfUnityObservable::from_projectors(
    const std::vector<Matrix>& projs, const ToleranceConfig& tol) {
  if (projs.empty()) throw dimension_error("from_projectors: empty projector list");
  const int d = static_cast<int>(projs.size());
  const auto n = projs[0].rows();

  std::string faults;
  Matrix sum = Matrix::Zero(n, n);
  for (int a = 0; a < d; ++a) {
    const Matrix& p = projs[static_cast<std::size_t>(a)];
    if (p.rows() != n || p.cols() != n)
      throw dimension_error("from_projectors: projector shapes differ");
    const double herm = hs_dist(p, p.adjoint().eval());
    const double idem = hs_dist(p * p, p);
    if (herm > tol.structural_tol)
      faults += " projector " + std::to_string(a) + " hermiticity residual " + std::to_string(herm) + ";";
    if (idem > tol.structural_tol)
      faults += " projector " + std::to_string(a) + " idempotency residual " + std::to_string(idem) + ";";
    sum += p;
    for (int b = 0; b < a; ++b) {
      const double cross = hs_norm(p * projs[static_cast<std::size_t>(b)]);
      if (cross > tol.structural_tol)
        faults += " projectors " + std::to_string(a) + "," + std::to_string(b) +
                  " orthogonality residual " + std::to_string(cross) + ";";
    }
  }
  const double comp = hs_dist(sum, Matrix::Identity(n, n));
  if (comp > tol.structural_tol)
    faults += " completeness residual " + std::to_string(comp) + ";";
  if (!faults.empty())
    throw validation_error("from_projectors: invalid measurement:" + faults);

  RootOfUnityObservable obs;
  obs.d = d;
  obs.D = static_cast<int>(n);
  obs.projectors = projs;
  obs.unitary = Matrix::Zero(n, n);
  for (int a = 0; a < d; ++a)
    obs.unitary += root_power(d, a) * projs[static_cast<std::size_t>(a)];
  return obs;
}

void RootOfUnityObservable::validate(const ToleranceConfig& tol) const {
  if (d < 1 || D < 1) throw dimension_error("observable: d and D must be positive");
  if (unitary.rows() != D || unitary.cols() != D)
    throw dimension_error("observable: unitary shape does not match D");
  if (static_cast<int>(projectors.size()) != d)
    throw dimension_error("observable: expected d projectors");
  if (!is_unitary(unitary, tol))
    throw validation_error("observable: unitary residual exceeds tolerance");
  Matrix sum = Matrix::Zero(D, D);
  Matrix rebuilt = Matrix::Zero(D, D);
  for (int a = 0; a < d; ++a) {
    const Matrix& p = projectors[static_cast<std::size_t>(a)];
    if (hs_dist(p, p.adjoint().eval()) > tol.structural_tol ||
        hs_dist(p * p, p) > tol.structural_tol)
      throw validation_error("observable: projector " + std::to_string(a) + " is not a projector");
    sum += p;
    rebuilt += root_power(d, a) * p;
  }
  if (hs_dist(sum, Matrix::Identity(D, D)) > tol.structural_tol)
    throw validation_error("observable: projectors do not sum to identity");
  if (hs_dist(rebuilt, unitary) > tol.structural_tol)
    throw validation_error("observable: projectors do not reconstruct the unitary");
}

Matrix RootOfUnityObservable::power(long long k) const {
  const long long kr = mod_d(k, d);
  Matrix out = Matrix::Zero(D, D);
  for (int a = 0; a < d; ++a)
    out += root_power(d, a * kr) * projectors[static_cast<std::size_t>(a)];
  return out;
}

std::vector<int> RootOfUnityObservable::ranks() const {
  std::vector<int> out;
  out.reserve(projectors.size());
  for (const auto& p : projectors)
    out.push_back(static_cast<int>(std::lround(p.trace().real())));
  return out;
}

bool RootOfUnityObservable::rank_one() const {
  if (D != d) return false;
  for (int r : ranks())
    if (r != 1) return false;
  return true;
}

RootOfUnityObservable observable_from_projectors(const std::vector<Matrix>& projs,
                                                 int d, const ToleranceConfig& tol) {
  if (static_cast<int>(projs.size()) != d)
    throw dimension_error("observable_from_projectors: expected d projectors");
  return RootOfUnityObservable::from_projectors(projs, tol);
}

Matrix observable_power(const RootOfUnityObservable& a, long long k) {
  return a.power(k);
}

RootOfUnityObservable build_z(int d) {
  if (d < 2) throw dimension_error("build_z: d must be >= 2");
  RootOfUnityObservable obs;
  obs.d = d;
  obs.D = d;
  obs.unitary = Matrix::Zero(d, d);
  obs.projectors.assign(static_cast<std::size_t>(d), Matrix::Zero(d, d));
  for (int i = 0; i < d; ++i) {
    obs.unitary(i, i) = root_power(d, i);
    obs.projectors[static_cast<std::size_t>(i)](i, i) = 1.0;
  }
  return obs;
}

RootOfUnityObservable build_t(int d) {
  if (d < 2) throw dimension_error("build_t: d must be >= 2");
  Matrix t = Matrix::Zero(d, d);
  for (int i = 0; i < d; ++i) {
    t(i, i) += half_power(d, 2 * i + 1);
    for (int j = 0; j < d; ++j) {
      const int sign = ((i == 0) != (j == 0)) ? -1 : 1;
      t(i, j) -= (2.0 / d) * static_cast<double>(sign) * half_power(d, i + j + 1);
    }
  }
  return RootOfUnityObservable::from_unitary(t, d);
}

const RootOfUnityObservable& Quartet::a(int i) const {
  if (i < 1 || i > 4) throw dimension_error("quartet index must be 1..4");
  return obs[static_cast<std::size_t>(i - 1)];
}

RootOfUnityObservable& Quartet::a(int i) {
  if (i < 1 || i > 4) throw dimension_error("quartet index must be 1..4");
  return obs[static_cast<std::size_t>(i - 1)];
}

void Quartet::validate(const ToleranceConfig& tol) const {
  if (d < 2) throw dimension_error("quartet: d must be >= 2");
  for (const auto& o : obs) {
    if (o.d != d || o.D != D)
      throw dimension_error("quartet: members disagree on d or D");
    o.validate(tol);
  }
}

Quartet canonical_quartet(int d, const ToleranceConfig& tol) {
  if (d < 2) throw dimension_error("canonical_quartet: d must be >= 2");
  const RootOfUnityObservable z = build_z(d);
  const RootOfUnityObservable t = build_t(d);
  const Complex a1 = coeff_a(1, d);
  const Complex a1c = std::conj(a1);
  const Complex w = root_of_unity(d);

  // Cramer solve of [a1, a1c*w; a1c, a1] [X; Y] = [Z^dag; T^dag].
  const Complex det = a1 * a1 - a1c * a1c * w;
  if (std::abs(det) < 1e-12)
    throw validation_error("canonical_quartet: singular optimality system");
  const Matrix zd = z.unitary.adjoint();
  const Matrix td = t.unitary.adjoint();
  const Matrix x = (a1 * zd - a1c * w * td) / det;   // A_3^{-1}
  const Matrix y = (a1 * td - a1c * zd) / det;       // A_4^{-1}
  if (!is_unitary(x, tol) || !is_unitary(y, tol))
    throw validation_error("canonical_quartet: solved inverses are not unitary");

  Quartet q;
  q.d = d;
  q.D = d;
  q.obs[0] = z;
  q.obs[1] = t;
  q.obs[2] = RootOfUnityObservable::from_unitary(x.adjoint(), d, tol);
  q.obs[3] = RootOfUnityObservable::from_unitary(y.adjoint(), d, tol);
  for (const auto& o : q.obs)
    if (!o.rank_one())
      throw validation_error("canonical_quartet: member spectrum is not simple");
  q.validate(tol);
  return q;
}

std::pair<Matrix, Matrix> printed_a34(int d) {
  const RootOfUnityObservable z = build_z(d);
  const RootOfUnityObservable t = build_t(d);
  const Complex a1c = std::conj(coeff_a(1, d));
  const Matrix a3 = a1c * z.unitary + 2.0 * a1c * a1c * a1c * t.unitary;
  const Matrix a4 = coeff_a(1, d) * z.unitary - a1c * t.unitary;
  return {a3, a4};
}

}  // namespace tempcert
