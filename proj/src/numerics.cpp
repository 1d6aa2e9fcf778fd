#include "tempcert/numerics.hpp"

#include <cmath>
#include <numbers>

namespace tempcert {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

}  // namespace

void ToleranceConfig::validate() const {
  if (!(structural_tol > 0) || !(value_tol > 0) || !(paper_numeric_tol > 0))
    throw validation_error("tolerances must be strictly positive");
  if (paper_numeric_tol < structural_tol)
    throw validation_error("paper_numeric_tol must be >= structural_tol");
}

Complex root_of_unity(int d) {
  if (d < 1) throw dimension_error("root_of_unity: d must be positive");
  return std::polar(1.0, kTwoPi / d);
}

Complex root_power(int d, long long a) {
  return std::polar(1.0, kTwoPi * static_cast<double>(mod_d(a, d)) / d);
}

Complex half_power(int d, long long num) {
  if (d < 1) throw dimension_error("half_power: d must be positive");
  const long long r = ((num % (2LL * d)) + 2LL * d) % (2LL * d);
  return std::polar(1.0, std::numbers::pi * static_cast<double>(r) / d);
}

long long mod_d(long long k, int d) {
  if (d < 1) throw dimension_error("mod_d: d must be positive");
  long long r = k % d;
  return r < 0 ? r + d : r;
}

double hs_norm(const Matrix& m) {
  if (!m.allFinite()) throw validation_error("hs_norm: non-finite entries");
  return m.norm();
}

double hs_dist(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw dimension_error("hs_dist: shape mismatch");
  return hs_norm(a - b);
}

bool is_unitary(const Matrix& m, const ToleranceConfig& tol) {
  if (m.rows() != m.cols()) throw dimension_error("is_unitary: matrix not square");
  const Matrix gram = m.adjoint() * m;
  return hs_dist(gram, Matrix::Identity(m.rows(), m.cols())) <= tol.structural_tol;
}

bool is_hermitian(const Matrix& m, const ToleranceConfig& tol) {
  if (m.rows() != m.cols()) throw dimension_error("is_hermitian: matrix not square");
  return hs_dist(m, m.adjoint().eval()) <= tol.structural_tol;
}

std::vector<Matrix> spectral_project_roots(const Matrix& a, int d,
                                           const ToleranceConfig& tol) {
  if (d < 1) throw dimension_error("spectral_project_roots: d must be positive");
  if (!is_unitary(a, tol))
    throw validation_error("spectral_project_roots: input is not unitary");

  const auto n = a.rows();
  Eigen::ComplexEigenSolver<Matrix> solver(a);
  if (solver.info() != Eigen::Success)
    throw numeric_error("spectral_project_roots: eigendecomposition failed");

  // Snap each eigenvalue to the nearest root exponent by angular distance.
  std::vector<std::vector<Eigen::Index>> clusters(d);
  for (Eigen::Index j = 0; j < n; ++j) {
    const Complex lam = solver.eigenvalues()(j);
    const double ang = std::arg(lam);
    long long r = std::llround(ang * d / kTwoPi);
    r = mod_d(r, d);
    if (std::abs(lam - root_power(d, r)) > tol.structural_tol)
      throw spectrum_error("spectral_project_roots: eigenvalue " +
                           std::to_string(lam.real()) + (lam.imag() < 0 ? "-" : "+") +
                           std::to_string(std::abs(lam.imag())) +
                           "i is not near any root of unity for d=" + std::to_string(d));
    clusters[static_cast<std::size_t>(r)].push_back(j);
  }

  // Orthonormalize each degenerate cluster before forming the projector.
  std::vector<Matrix> projs(d, Matrix::Zero(n, n));
  for (int r = 0; r < d; ++r) {
    const auto& idx = clusters[static_cast<std::size_t>(r)];
    if (idx.empty()) continue;
    Matrix cols(n, static_cast<Eigen::Index>(idx.size()));
    for (std::size_t c = 0; c < idx.size(); ++c) cols.col(static_cast<Eigen::Index>(c)) = solver.eigenvectors().col(idx[c]);
    Eigen::JacobiSVD<Matrix> svd(cols, Eigen::ComputeThinU);
    const auto& sv = svd.singularValues();
    Eigen::Index rank = 0;
    for (Eigen::Index s = 0; s < sv.size(); ++s)
      if (sv(s) > 1e-8 * sv(0)) ++rank;
    if (rank != static_cast<Eigen::Index>(idx.size()))
      throw numeric_error("spectral_project_roots: degenerate eigenvector cluster is rank deficient");
    const Matrix basis = svd.matrixU().leftCols(rank);
    projs[static_cast<std::size_t>(r)] = basis * basis.adjoint();
  }

  // Post-conditions: completeness and reconstruction.
  Matrix sum = Matrix::Zero(n, n);
  Matrix rebuilt = Matrix::Zero(n, n);
  for (int r = 0; r < d; ++r) {
    sum += projs[static_cast<std::size_t>(r)];
    rebuilt += root_power(d, r) * projs[static_cast<std::size_t>(r)];
  }
  if (hs_dist(sum, Matrix::Identity(n, n)) > tol.structural_tol)
    throw numeric_error("spectral_project_roots: projectors do not sum to identity");
  if (hs_dist(rebuilt, a) > tol.structural_tol)
    throw numeric_error("spectral_project_roots: projectors do not reconstruct the input");
  return projs;
}

Matrix sqrt_psd(const Matrix& m, const ToleranceConfig& tol) {
  if (!is_hermitian(m, tol)) throw validation_error("sqrt_psd: input is not Hermitian");
  Eigen::SelfAdjointEigenSolver<Matrix> solver((m + m.adjoint().eval()) / 2.0);
  if (solver.info() != Eigen::Success)
    throw numeric_error("sqrt_psd: eigendecomposition failed");
  Eigen::VectorXd ev = solver.eigenvalues();
  for (Eigen::Index i = 0; i < ev.size(); ++i) {
    if (ev(i) < -tol.structural_tol)
      throw validation_error("sqrt_psd: negative eigenvalue " + std::to_string(ev(i)));
    if (ev(i) < 0) ev(i) = 0;
  }
  return solver.eigenvectors() * ev.cwiseSqrt().asDiagonal() *
         solver.eigenvectors().adjoint();
}

Matrix exp_i_hermitian(const Matrix& h, double scale) {
  ToleranceConfig tol;
  if (!is_hermitian(h, tol)) throw validation_error("exp_i_hermitian: input is not Hermitian");
  if (scale == 0.0) return Matrix::Identity(h.rows(), h.cols());
  Eigen::SelfAdjointEigenSolver<Matrix> solver((h + h.adjoint().eval()) / 2.0);
  if (solver.info() != Eigen::Success)
    throw numeric_error("exp_i_hermitian: eigendecomposition failed");
  Vector phases(solver.eigenvalues().size());
  for (Eigen::Index i = 0; i < phases.size(); ++i)
    phases(i) = std::polar(1.0, scale * solver.eigenvalues()(i));
  return solver.eigenvectors() * phases.asDiagonal() * solver.eigenvectors().adjoint();
}

double Rng::uniform() {
  return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
}

double Rng::gaussian() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  const double u1 = 1.0 - uniform();  // (0, 1]
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  spare_ = r * std::sin(kTwoPi * u2);
  has_spare_ = true;
  return r * std::cos(kTwoPi * u2);
}

Matrix haar_unitary(int n, std::uint64_t seed) {
  Rng rng(seed);
  return haar_unitary(n, rng);
}

Matrix haar_unitary(int n, Rng& rng) {
  if (n < 1) throw dimension_error("haar_unitary: n must be positive");
  Matrix g(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const double re = rng.gaussian();
      const double im = rng.gaussian();
      g(i, j) = Complex(re, im);
    }
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ() * Matrix::Identity(n, n);
  const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < n; ++j) {
    const Complex rjj = r(j, j);
    const Complex phase = std::abs(rjj) > 0 ? rjj / std::abs(rjj) : Complex(1, 0);
    q.col(j) *= phase;
  }
  return q;
}

Matrix random_hermitian_unit(int n, Rng& rng) {
  if (n < 1) throw dimension_error("random_hermitian_unit: n must be positive");
  Matrix g(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const double re = rng.gaussian();
      const double im = rng.gaussian();
      g(i, j) = Complex(re, im);
    }
  Matrix h = (g + g.adjoint().eval()) / 2.0;
  const double norm = hs_norm(h);
  if (norm == 0.0) throw numeric_error("random_hermitian_unit: zero draw");
  return h / norm;
}

}  // namespace tempcert
