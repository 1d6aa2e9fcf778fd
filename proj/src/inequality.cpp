#include "tempcert/inequality.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace tempcert {

namespace {

int pair_index(int i, int j) {
  for (std::size_t n = 0; n < kTauPairs.size(); ++n)
    if (kTauPairs[n].first == i && kTauPairs[n].second == j) return static_cast<int>(n);
  throw dimension_error("tau tables: pair (" + std::to_string(i) + "," +
                        std::to_string(j) + ") is not part of tau");
}

double cot(double x) { return std::cos(x) / std::sin(x); }

// p(first = second + k): sum_m p[(m + k) mod d, m]
double prob_first_leads(const JointTable& t, int k, int d) {
  double s = 0.0;
  for (int m = 0; m < d; ++m) s += t.probs(static_cast<int>(mod_d(m + k, d)), m);
  return s;
}

// p(second = first + k): sum_j p[j, (j + k) mod d]
double prob_second_leads(const JointTable& t, int k, int d) {
  double s = 0.0;
  for (int j = 0; j < d; ++j) s += t.probs(j, static_cast<int>(mod_d(j + k, d)));
  return s;
}

}  // namespace

Complex fourier_correlator(const JointTable& t, int k, int l, int d) {
  if (k < 0 || k > d - 1 || l < 0 || l > d - 1)
    throw dimension_error("fourier_correlator: powers must lie in 0..d-1");
  Complex s(0, 0);
  for (int a = 0; a < t.d_first; ++a)
    for (int b = 0; b < t.d_second; ++b)
      s += root_power(d, static_cast<long long>(a) * k + static_cast<long long>(b) * l) *
           t.probs(a, b);
  return s;
}

void CorrelationSet::set(int i, int j, int k, int l, Complex v) {
  values[{i, j, k, l}] = v;
}

Complex CorrelationSet::at(int i, int j, int k, int l) const {
  const auto it = values.find({i, j, k, l});
  if (it == values.end())
    throw validation_error("correlation set: missing entry (" + std::to_string(i) + "," +
                           std::to_string(j) + "," + std::to_string(k) + "," +
                           std::to_string(l) + ")");
  return it->second;
}

void CorrelationSet::validate(const ToleranceConfig& tol) const {
  for (const auto& [key, v] : values) {
    if (std::abs(v) > 1.0 + tol.value_tol)
      throw validation_error("correlation set: modulus exceeds 1");
    const auto [i, j, k, l] = key;
    const auto conj_it = values.find({i, j, static_cast<int>(mod_d(d - k, d)),
                                      static_cast<int>(mod_d(d - l, d))});
    if (conj_it != values.end() &&
        std::abs(v - std::conj(conj_it->second)) > tol.value_tol)
      throw validation_error("correlation set: conjugation symmetry violated");
  }
}

const JointTable& TauTables::pair(int i, int j) const {
  return tables[static_cast<std::size_t>(pair_index(i, j))];
}

TauTables tables_from_quartet(const Quartet& q, const PreparedState& rho,
                              const ToleranceConfig& tol) {
  TauTables t;
  t.d = q.d;
  for (std::size_t n = 0; n < kTauPairs.size(); ++n) {
    const auto [i, j] = kTauPairs[n];
    t.tables[n] = luders_joint(rho, Povm::projective(q.a(i), tol),
                               Povm::projective(q.a(j), tol), tol);
  }
  return t;
}

CorrelationSet correlations_from_tables(const TauTables& t, const ToleranceConfig& tol) {
  CorrelationSet c;
  c.d = t.d;
  for (const auto& [i, j] : kTauPairs)
    for (int k = 1; k <= t.d - 1; ++k) {
      const int dk = t.d - k;
      const bool forward = i < j;  // forward pairs carry powers (k, d-k)
      const int ki = forward ? k : dk;
      const int kj = forward ? dk : k;
      c.set(i, j, ki, kj, fourier_correlator(t.pair(i, j), ki, kj, t.d));
    }
  c.validate(tol);
  return c;
}

Complex tau_from_stats_complex(const TauTables& tables) {
  const int d = tables.d;
  const CorrelationSet c = correlations_from_tables(tables);
  Complex tau(0, 0);
  for (int k = 1; k <= d - 1; ++k) {
    const Complex ak = coeff_a(k, d);
    const Complex akc = std::conj(ak);
    const Complex wk = root_power(d, k);
    const int dk = d - k;
    tau += ak * c.at(1, 3, k, dk);
    tau += akc * wk * c.at(1, 4, k, dk);
    tau += akc * c.at(2, 3, k, dk);
    tau += ak * c.at(2, 4, k, dk);
    tau += ak * c.at(3, 1, dk, k);
    tau += akc * wk * c.at(4, 1, dk, k);
    tau += akc * c.at(3, 2, dk, k);
    tau += ak * c.at(4, 2, dk, k);
  }
  return tau;
}

double tau_from_stats(const TauTables& tables, const ToleranceConfig&) {
  const Complex tau = tau_from_stats_complex(tables);
  if (std::abs(tau.imag()) >= kTauRealnessTol)
    throw numeric_error("tau_from_stats: imaginary part " + std::to_string(tau.imag()) +
                        " signals corrupted statistics");
  return tau.real();
}

Matrix tau_operator(const Quartet& q) {
  const int d = q.d;
  Matrix beta = Matrix::Zero(q.D, q.D);
  for (int k = 1; k <= d - 1; ++k) {
    const Complex ak = coeff_a(k, d);
    const Complex akc = std::conj(ak);
    const Complex wk = root_power(d, k);
    const Matrix a1k = q.a(1).power(k);
    const Matrix a2k = q.a(2).power(k);
    const Matrix a3m = q.a(3).power(-k);
    const Matrix a4m = q.a(4).power(-k);
    beta += ak * a1k * a3m + akc * wk * a1k * a4m;
    beta += akc * a2k * a3m + ak * a2k * a4m;
    beta += ak * a3m * a1k + akc * wk * a4m * a1k;
    beta += akc * a3m * a2k + ak * a4m * a2k;
  }
  return beta;
}

ClassicalDecomposition classical_decomposition(int d) {
  if (d < 2) throw dimension_error("classical_decomposition: d must be >= 2");
  ClassicalDecomposition out;
  out.alphas.reserve(static_cast<std::size_t>(d));
  const double pi = std::numbers::pi;
  const double t4 = std::tan(pi / (4 * d));
  const double sign = (d % 2 == 0) ? 1.0 : -1.0;
  for (int k = 0; k < d; ++k)
    out.alphas.push_back((cot(pi * (k + 0.25) / d) + sign * t4) / (2.0 * d));
  out.s_value = 0.5 * (1.0 - cot((pi / d) * (d / 2 + 0.25)));
  return out;
}

double tau_tilde(const TauTables& tables) {
  const int d = tables.d;
  const ClassicalDecomposition dec = classical_decomposition(d);
  double tt = 0.0;
  for (int k = 0; k < d; ++k) {
    const int mk = static_cast<int>(mod_d(-k, d));
    const int mk1 = static_cast<int>(mod_d(-k - 1, d));
    double group = 0.0;
    group += prob_first_leads(tables.pair(1, 3), k, d);
    group += prob_first_leads(tables.pair(2, 4), k, d);
    group += prob_first_leads(tables.pair(2, 3), mk, d);
    group += prob_first_leads(tables.pair(1, 4), mk1, d);
    group += prob_second_leads(tables.pair(3, 1), k, d);
    group += prob_second_leads(tables.pair(4, 2), k, d);
    group += prob_second_leads(tables.pair(3, 2), mk, d);
    group += prob_second_leads(tables.pair(4, 1), mk1, d);
    tt += dec.alphas[static_cast<std::size_t>(k)] * group;
  }
  return tt;
}

double classical_bound_closed(int d) {
  if (d < 2) throw dimension_error("classical_bound_closed: d must be >= 2");
  const double pi = std::numbers::pi;
  return 3.0 * cot(pi / (4 * d)) - cot(3.0 * pi / (4 * d)) - 4.0;
}

double classical_bound_bruteforce(int d) {
  const ClassicalDecomposition dec = classical_decomposition(d);
  double best = -1e300;
  for (int q1 = 0; q1 < d; ++q1)
    for (int q2 = 0; q2 < d; ++q2)
      for (int q3 = 0; q3 < d; ++q3) {
        const int q4 = static_cast<int>(mod_d(-1 - (q1 + q2 + q3), d));
        const double v = 2.0 * (dec.alphas[static_cast<std::size_t>(q1)] +
                                dec.alphas[static_cast<std::size_t>(q2)] +
                                dec.alphas[static_cast<std::size_t>(q3)] +
                                dec.alphas[static_cast<std::size_t>(q4)]);
        best = std::max(best, v);
      }
  const double bound = d * best - 8.0 * dec.s_value;
  if (std::abs(bound - classical_bound_closed(d)) > 1e-12)
    throw numeric_error("classical_bound_bruteforce: disagrees with the closed form by " +
                        std::to_string(bound - classical_bound_closed(d)));
  return bound;
}

AssignmentEnumeration classical_bound_assignments(int d) {
  const ClassicalDecomposition dec = classical_decomposition(d);
  AssignmentEnumeration out;
  double best = -1e300;
  for (int v1 = 0; v1 < d; ++v1)
    for (int v2 = 0; v2 < d; ++v2)
      for (int v3 = 0; v3 < d; ++v3)
        for (int v4 = 0; v4 < d; ++v4) {
          const double tt =
              2.0 * (dec.alphas[static_cast<std::size_t>(mod_d(v1 - v3, d))] +
                     dec.alphas[static_cast<std::size_t>(mod_d(v2 - v4, d))] +
                     dec.alphas[static_cast<std::size_t>(mod_d(v3 - v2, d))] +
                     dec.alphas[static_cast<std::size_t>(mod_d(v4 - v1 - 1, d))]);
          if (tt > best) {
            best = tt;
            out.argmax = {v1, v2, v3, v4};
          }
        }
  out.bound = d * best - 8.0 * dec.s_value;
  return out;
}

InequalityReport evaluate_inequality(const TauTables& tables, const ToleranceConfig& tol) {
  InequalityReport r;
  r.d = tables.d;
  r.tau = tau_from_stats_complex(tables);
  if (std::abs(r.tau.imag()) >= kTauRealnessTol)
    throw numeric_error("evaluate_inequality: tau has imaginary part " +
                        std::to_string(r.tau.imag()));
  r.classical_bound = classical_bound_closed(tables.d);
  r.quantum_max = 4.0 * (tables.d - 1);
  r.violated = r.tau.real() > r.classical_bound + tol.value_tol;
  r.gap = r.quantum_max - r.classical_bound;
  return r;
}

}  // namespace tempcert
