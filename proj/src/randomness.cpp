#include "tempcert/randomness.hpp"

#include <cmath>
#include <string>

namespace tempcert {

double zt_overlap(int a1, int a2, int d) {
  if (d < 2) throw dimension_error("zt_overlap: d must be >= 2");
  const long long diff = mod_d(static_cast<long long>(a2) - a1, d);
  const Complex denom = 1.0 - half_power(d, 2 * diff - 1);
  return (4.0 / (static_cast<double>(d) * d)) / std::norm(denom);
}

namespace {

double shannon_bits(const std::vector<double>& p) {
  double h = 0.0;
  for (double x : p) {
    if (x > 0.0) h -= x * std::log2(x);
  }
  return h;
}

}  // namespace

double pair_entropy(const RootOfUnityObservable& first,
                    const RootOfUnityObservable& second,
                    const ToleranceConfig& tol) {
  if (first.d != second.d || first.D != second.D) {
    throw dimension_error("pair_entropy: observables must share d and D");
  }
  const int d = first.d;
  std::vector<std::vector<double>> dist(d, std::vector<double>(d, 0.0));
  for (int a = 0; a < d; ++a) {
    const double w = std::real(first.projectors[a].trace());
    if (w <= tol.structural_tol) {
      throw numeric_error("pair_entropy: empty eigenspace for outcome " +
                          std::to_string(a));
    }
    for (int b = 0; b < d; ++b) {
      dist[a][b] =
          std::real((first.projectors[a] * second.projectors[b]).trace()) / w;
    }
  }
  const double h0 = shannon_bits(dist[0]);
  double spread = 0.0;
  for (int a = 1; a < d; ++a) {
    spread = std::max(spread, std::abs(shannon_bits(dist[a]) - h0));
  }
  if (spread > tol.value_tol) {
    throw numeric_error(
        "pair_entropy: randomness rate depends on the prepared eigenstate "
        "(spread " +
        std::to_string(spread) + " bits); rate undefined");
  }
  return h0;
}

double entropy_closed_form(int d, const ToleranceConfig& tol) {
  if (d < 2) throw dimension_error("entropy_closed_form: d must be >= 2");
  std::vector<double> p(d);
  for (int x = 0; x < d; ++x) p[x] = zt_overlap(0, x, d);
  const double h = shannon_bits(p);
  const double h_vec = pair_entropy(build_z(d), build_t(d), tol);
  if (std::abs(h - h_vec) > tol.value_tol) {
    throw numeric_error("entropy_closed_form: closed form disagrees with "
                        "eigenvector route by " +
                        std::to_string(std::abs(h - h_vec)));
  }
  return h;
}

EntropyTable entropy_sweep(int dmin, int dmax, const ToleranceConfig& tol) {
  if (dmin < 2 || dmax < dmin || dmax > 32) {
    throw validation_error("entropy_sweep: need 2 <= dmin <= dmax <= 32");
  }
  constexpr int kMainPairs[4][2] = {{1, 2}, {2, 1}, {3, 4}, {4, 3}};
  constexpr int kExtraPairs[4][2] = {{1, 3}, {1, 4}, {2, 3}, {2, 4}};
  EntropyTable table;
  for (int d = dmin; d <= dmax; ++d) {
    const Quartet q = canonical_quartet(d, tol);
    const double h_closed = entropy_closed_form(d, tol);
    for (const auto& pr : kMainPairs) {
      const double h = pair_entropy(q.a(pr[0]), q.a(pr[1]), tol);
      if (std::abs(h - h_closed) > tol.value_tol) {
        throw numeric_error(
            "entropy_sweep: pair (" + std::to_string(pr[0]) + "," +
            std::to_string(pr[1]) + ") at d=" + std::to_string(d) +
            " deviates from the common certified rate");
      }
      table.closed_rows.push_back({d, pr[0], pr[1], h_closed, true});
      table.overlap_rows.push_back({d, pr[0], pr[1], h, true});
    }
    for (const auto& pr : kExtraPairs) {
      const double h = pair_entropy(q.a(pr[0]), q.a(pr[1]), tol);
      table.extra_rows.push_back({d, pr[0], pr[1], h, true});
    }
  }
  return table;
}

}  // namespace tempcert
