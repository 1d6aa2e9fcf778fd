#pragma once

#include <vector>

#include "tempcert/numerics.hpp"
#include "tempcert/observables.hpp"

namespace tempcert {

// Transition probability |<z_a1|t_a2>|^2 between eigenvectors of the two
// canonical root-of-unity observables in dimension d.
double zt_overlap(int a1, int a2, int d);

// Shannon entropy (bits) of the outcome distribution obtained by measuring
// `second` eigenbasis on an eigenstate of `first`.  Requires the distribution
// to be independent of which `first` eigenstate was prepared; otherwise the
// extracted randomness is ill-defined and a numeric_error is thrown.
double pair_entropy(const RootOfUnityObservable& first,
                    const RootOfUnityObservable& second,
                    const ToleranceConfig& tol = {});

// Same entropy from the closed-form overlap expression, cross-checked
// internally against the eigenvector route.
double entropy_closed_form(int d, const ToleranceConfig& tol = {});

struct EntropyRow {
  int d = 0;
  int first = 0;   // 1-based observable index within the canonical quartet
  int second = 0;
  double entropy_bits = 0.0;
  bool uniform = false;  // outcome distribution identical for every eigenstate
};

struct EntropyTable {
  std::vector<EntropyRow> closed_rows;   // pairs (1,2),(2,1),(3,4),(4,3)
  std::vector<EntropyRow> overlap_rows;  // same pairs, eigenvector route
  std::vector<EntropyRow> extra_rows;    // pairs (1,3),(1,4),(2,3),(2,4)
};

// Entropy of every certified observable pair for d = dmin..dmax.
EntropyTable entropy_sweep(int dmin, int dmax, const ToleranceConfig& tol = {});

}  // namespace tempcert
