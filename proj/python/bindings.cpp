#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "tempcert/certification.hpp"
#include "tempcert/inequality.hpp"
#include "tempcert/io.hpp"
#include "tempcert/randomness.hpp"
#include "tempcert/report.hpp"
#include "tempcert/sos.hpp"

namespace py = pybind11;

namespace {

using namespace tempcert;

std::vector<Matrix> quartet_unitaries(int d) {
  const Quartet q = canonical_quartet(d);
  return {q.a(1).unitary, q.a(2).unitary, q.a(3).unitary, q.a(4).unitary};
}

py::dict tau_canonical(int d) {
  const Quartet q = canonical_quartet(d);
  const PreparedState rho = PreparedState::maximally_mixed(d);
  const TauTables tables = tables_from_quartet(q, rho);
  py::dict out;
  out["tau_stats"] = tau_from_stats(tables);
  out["tau_operator"] = std::real((rho.density * tau_operator(q)).trace());
  out["classical_bound"] = classical_bound_closed(d);
  out["quantum_max"] = 4.0 * (d - 1);
  return out;
}

py::dict classical_bound(int d) {
  py::dict out;
  out["closed"] = classical_bound_closed(d);
  out["chained"] = classical_bound_bruteforce(d);
  out["enumerated"] = classical_bound_assignments(d).bound;
  return out;
}

py::dict sos(int d) {
  const SosReport rep = sos_residuals(canonical_quartet(d));
  py::dict out;
  out["primary"] = rep.primary_residual;
  out["alt"] = rep.alt_residual;
  out["per_term_norms"] = rep.per_term_norms;
  return out;
}

py::dict robustness_trial(int d, double delta, std::uint64_t seed) {
  const Quartet ideal = canonical_quartet(d);
  const Quartet actual = perturb_quartet(d, delta, seed);
  const RobustnessReport r =
      robustness_check(ideal, actual, PreparedState::maximally_mixed(d));
  py::dict out;
  out["epsilon"] = r.epsilon;
  out["defect_a1"] = r.defect_a1;
  out["defect_a2"] = r.defect_a2;
  out["defect_pair34"] = r.defect_pair34;
  out["defect_pair12"] = r.defect_pair12;
  out["bound_tight"] = r.bound_tight;
  out["bound_loose"] = r.bound_loose;
  out["bound_sharp"] = r.bound_sharp;
  out["all_bounds_hold"] = r.all_bounds_hold;
  out["sharp_bounds_hold"] = r.sharp_bounds_hold;
  return out;
}

py::dict certify_dict(const CertificationReport& rep) {
  py::dict out;
  out["d"] = rep.d;
  out["D"] = rep.D;
  out["tau"] = rep.tau;
  out["epsilon"] = rep.epsilon;
  out["fingerprint_distance"] = rep.fingerprint_distance;
  out["max_residual"] = rep.residuals.max();
  out["verdict"] = to_string(rep.verdict);
  return out;
}

py::dict certify_canonical(int d) { return certify_dict(certify(canonical_quartet(d))); }

py::dict certify_file(const std::string& path) {
  return certify_dict(certify(load_quartet(path)));
}

void save_canonical_quartet(const std::string& path, int d) {
  save_quartet(path, canonical_quartet(d));
}

py::dict nonuniqueness(double theta, double phi) {
  const NonuniquenessReport r = nonuniqueness_demo(theta, phi);
  py::dict out;
  out["tau_planar"] = r.tau_planar;
  out["tau_skew"] = r.tau_skew;
  out["overlap_planar"] = r.overlap_planar;
  out["overlap_skew"] = r.overlap_skew;
  out["overlap_mismatch"] = r.overlap_mismatch;
  out["fingerprint_gap"] = r.fingerprint_gap;
  out["connecting_unitary_exists"] = r.connecting_unitary_exists;
  return out;
}

}  // namespace

PYBIND11_MODULE(_tempcert, m) {
  m.doc() = "Certification of d-outcome quantum measurements from temporal "
            "correlations";
  m.attr("__version__") = kToolVersion;

  py::register_exception<validation_error>(m, "ValidationError",
                                           PyExc_ValueError);
  py::register_exception<spectrum_error>(m, "SpectrumError", PyExc_ValueError);
  py::register_exception<numeric_error>(m, "NumericError",
                                        PyExc_ArithmeticError);

  m.def("canonical_quartet_unitaries", &quartet_unitaries, py::arg("d"),
        "The four canonical observables as complex matrices");
  m.def("tau", &tau_canonical, py::arg("d"),
        "Temporal functional of the canonical quartet on the maximally mixed "
        "state, via statistics and via the operator route");
  m.def("classical_bound", &classical_bound, py::arg("d"),
        "Classical bound via closed form and both enumerations");
  m.def("sos_residuals", &sos, py::arg("d"),
        "Residuals of both sum-of-squares certificates");
  m.def("entropy", [](int d) { return entropy_closed_form(d); }, py::arg("d"),
        "Certified randomness (bits) of the canonical pair");
  m.def("pair_entropy",
        [](int d, int i, int j) {
          const Quartet q = canonical_quartet(d);
          return pair_entropy(q.a(i), q.a(j));
        },
        py::arg("d"), py::arg("i"), py::arg("j"),
        "Entropy of measuring observable j on an eigenstate of observable i");
  m.def("robustness_trial", &robustness_trial, py::arg("d"), py::arg("delta"),
        py::arg("seed"), "One seeded perturbation trial against the bounds");
  m.def("certify_canonical", &certify_canonical, py::arg("d"),
        "Certification pipeline on the canonical quartet");
  m.def("certify_file", &certify_file, py::arg("path"),
        "Certification pipeline on a quartet JSON file");
  m.def("save_canonical_quartet", &save_canonical_quartet, py::arg("path"),
        py::arg("d"), "Write the canonical quartet to a JSON file");
  m.def("nonuniqueness", &nonuniqueness, py::arg("theta"), py::arg("phi"),
        "Compare the two inequivalent maximal-violation strategies");
}
