#pragma once

#include <complex>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace tempcert {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// Thrown when an input fails a structural precondition (shape, range, file content).
struct validation_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Thrown on dimension mismatches and out-of-range sizes.
struct dimension_error : validation_error {
  using validation_error::validation_error;
};

/// Thrown when an eigenvalue cannot be matched to a d-th root of unity.
struct spectrum_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Thrown when a computed quantity violates a numeric consistency claim.
struct numeric_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ToleranceConfig {
  double structural_tol = 1e-9;   // unitarity / projector / identity residuals
  double value_tol = 1e-9;        // scalar comparisons
  double paper_numeric_tol = 5e-3;  // comparisons against 3-decimal reference data

  void validate() const;
};

/// e^{2*pi*i/d}
Complex root_of_unity(int d);

/// omega^a with the exponent reduced mod d (exact phase, no power accumulation).
Complex root_power(int d, long long a);

/// e^{i*pi*num/d}: half-integer powers of omega on the principal branch
/// (num = 2k gives omega^k, num = 2k+1 gives omega^{k+1/2}).
Complex half_power(int d, long long num);

long long mod_d(long long k, int d);

double hs_norm(const Matrix& m);
double hs_dist(const Matrix& a, const Matrix& b);

bool is_unitary(const Matrix& m, const ToleranceConfig& tol = {});
bool is_hermitian(const Matrix& m, const ToleranceConfig& tol = {});

/// Spectral projectors of a unitary whose eigenvalues all lie within
/// structural_tol of d-th roots of unity, indexed by root exponent.
/// Projectors for absent eigenvalues are zero matrices.
std::vector<Matrix> spectral_project_roots(const Matrix& a, int d,
                                           const ToleranceConfig& tol = {});

/// Hermitian PSD square root; eigenvalues in [-structural_tol, 0) are clamped to 0.
Matrix sqrt_psd(const Matrix& m, const ToleranceConfig& tol = {});

/// exp(i*scale*H) for Hermitian H, via eigendecomposition.
Matrix exp_i_hermitian(const Matrix& h, double scale);

/// Deterministic random stream: mt19937_64 with an explicit Box-Muller
/// transform so the gaussian sequence is identical across platforms.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  double uniform();   // [0, 1)
  double gaussian();  // standard normal
  std::uint64_t raw() { return gen_(); }

 private:
  std::mt19937_64 gen_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

/// Haar-distributed n x n unitary: complex Gaussian matrix, QR, diagonal phase fix.
/// Deterministic for fixed (n, seed).
Matrix haar_unitary(int n, std::uint64_t seed);
Matrix haar_unitary(int n, Rng& rng);

/// Random Hermitian matrix normalized to unit Hilbert-Schmidt norm.
Matrix random_hermitian_unit(int n, Rng& rng);

}  // namespace tempcert
