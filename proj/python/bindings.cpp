#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "atsim/angular.hpp"
#include "atsim/config.hpp"
#include "atsim/dressed.hpp"
#include "atsim/errors.hpp"
#include "atsim/propagation.hpp"
#include "atsim/quadrature.hpp"
#include "atsim/scheme.hpp"
#include "atsim/susceptibility.hpp"
#include "atsim/version.hpp"

namespace py = pybind11;
using namespace atsim;

PYBIND11_MODULE(_atsim, m) {
  m.doc() = "Dressed-atom susceptibility and slow-light propagation for an "
            "alkali D1 hyperfine doublet";
  m.attr("__version__") = kVersion;

  py::register_exception<PhysicsError>(m, "PhysicsError");

  py::class_<HalfInt>(m, "HalfInt")
      .def(py::init<int>())
      .def(py::init(&HalfInt::from_value))
      .def_static("from_twice", &HalfInt::from_twice)
      .def_property_readonly("twice", &HalfInt::twice)
      .def_property_readonly("value", &HalfInt::value)
      .def("__float__", &HalfInt::value)
      .def("__repr__", [](const HalfInt& h) { return "HalfInt(" + h.str() + ")"; })
      .def("__eq__", [](const HalfInt& a, const HalfInt& b) { return a == b; });
  py::implicitly_convertible<py::int_, HalfInt>();
  py::implicitly_convertible<py::float_, HalfInt>();

  m.def("wigner3j", &wigner3j, py::arg("j1"), py::arg("j2"), py::arg("j3"),
        py::arg("m1"), py::arg("m2"), py::arg("m3"));
  m.def("wigner6j", &wigner6j, py::arg("j1"), py::arg("j2"), py::arg("j3"),
        py::arg("j4"), py::arg("j5"), py::arg("j6"));
  m.def(
      "dipole_amplitude",
      [](HalfInt fg, HalfInt mg, HalfInt fe, HalfInt me, int q, HalfInt i,
         HalfInt jg, HalfInt je) {
        return dipole_amplitude(fg, mg, fe, me, q, i, jg, je).value;
      },
      py::arg("f_ground"), py::arg("m_ground"), py::arg("f_excited"),
      py::arg("m_excited"), py::arg("q"),
      py::arg("nuclear_spin") = HalfInt::from_twice(7),
      py::arg("j_ground") = HalfInt::from_twice(1),
      py::arg("j_excited") = HalfInt::from_twice(1));
  m.def("relative_line_strength", &relative_line_strength, py::arg("f_ground"),
        py::arg("f_excited"), py::arg("nuclear_spin") = HalfInt::from_twice(7),
        py::arg("j_ground") = HalfInt::from_twice(1),
        py::arg("j_excited") = HalfInt::from_twice(1));

  py::enum_<Model>(m, "Model")
      .value("full", Model::full)
      .value("lambda_", Model::lambda);

  py::class_<LevelConfig>(m, "LevelConfig")
      .def(py::init<>())
      .def_readwrite("nuclear_spin", &LevelConfig::nuclear_spin)
      .def_readwrite("ground_f", &LevelConfig::ground_f)
      .def_readwrite("excited_f_low", &LevelConfig::excited_f_low)
      .def_readwrite("excited_f_high", &LevelConfig::excited_f_high)
      .def_readwrite("j_ground", &LevelConfig::j_ground)
      .def_readwrite("j_excited", &LevelConfig::j_excited)
      .def_readwrite("hyperfine_splitting", &LevelConfig::hyperfine_splitting)
      .def_static("cesium_d1", &LevelConfig::cesium_d1);

  py::class_<ControlField>(m, "ControlField")
      .def(py::init<>())
      .def(py::init([](double detuning, double rabi) {
             return ControlField{detuning, rabi};
           }),
           py::arg("detuning"), py::arg("rabi"))
      .def_readwrite("detuning", &ControlField::detuning)
      .def_readwrite("rabi", &ControlField::rabi);

  py::class_<SchemeInstance>(m, "SchemeInstance")
      .def_readonly("level", &SchemeInstance::level)
      .def_readonly("control", &SchemeInstance::control)
      .def_readonly("model", &SchemeInstance::model)
      .def_readwrite("energy_m", &SchemeInstance::energy_m)
      .def_readwrite("energy_m_prime", &SchemeInstance::energy_m_prime)
      .def_readwrite("energy_n", &SchemeInstance::energy_n)
      .def_readwrite("energy_n_prime", &SchemeInstance::energy_n_prime)
      .def_readwrite("coupling_n", &SchemeInstance::coupling_n)
      .def_readwrite("coupling_n_prime", &SchemeInstance::coupling_n_prime)
      .def_readwrite("probe_n", &SchemeInstance::probe_n)
      .def_readwrite("probe_n_prime", &SchemeInstance::probe_n_prime)
      .def_property_readonly("strength_n", &SchemeInstance::strength_n)
      .def_property_readonly("strength_n_prime",
                             &SchemeInstance::strength_n_prime);

  m.def("build_scheme", &build_scheme, py::arg("level"), py::arg("control"),
        py::arg("model") = Model::full);
  m.def("validate", [](const SchemeInstance& s) {
    std::vector<std::string> out;
    for (const auto v : validate(s)) out.emplace_back(to_string(v));
    return out;
  });

  py::enum_<ExcitedLevel>(m, "ExcitedLevel")
      .value("n", ExcitedLevel::n)
      .value("n_prime", ExcitedLevel::n_prime);

  py::class_<QuasiEnergyPair>(m, "QuasiEnergyPair")
      .def_readonly("e_plus", &QuasiEnergyPair::e_plus)
      .def_readonly("e_minus", &QuasiEnergyPair::e_minus);
  m.def("quasi_energies", &quasi_energies, py::arg("level"), py::arg("scheme"),
        py::arg("velocity_shift") = 0.0);
  m.def("self_energy", &self_energy, py::arg("level"), py::arg("energy"),
        py::arg("scheme"), py::arg("velocity_shift") = 0.0);

  py::class_<GreenMatrix>(m, "GreenMatrix")
      .def_readonly("nn", &GreenMatrix::nn)
      .def_readonly("nnp", &GreenMatrix::nnp)
      .def_readonly("npn", &GreenMatrix::npn)
      .def_readonly("npnp", &GreenMatrix::npnp);
  m.def("green_matrix", &green_matrix, py::arg("energy"), py::arg("scheme"),
        py::arg("velocity_shift") = 0.0);

  py::class_<DopplerConfig>(m, "DopplerConfig")
      .def(py::init<>())
      .def_readwrite("enabled", &DopplerConfig::enabled)
      .def_readwrite("thermal_width", &DopplerConfig::thermal_width)
      .def_readwrite("quadrature_order", &DopplerConfig::quadrature_order)
      .def_readwrite("copropagating", &DopplerConfig::copropagating);

  m.def("chi_at", &chi_at, py::arg("delta_bar"), py::arg("scheme"));
  m.def("chi_doppler", &chi_doppler, py::arg("delta_bar"), py::arg("scheme"),
        py::arg("doppler"));

  py::class_<GridSpec>(m, "GridSpec")
      .def(py::init([](double lo, double hi, int count) {
             return GridSpec{lo, hi, count};
           }),
           py::arg("min"), py::arg("max"), py::arg("count"))
      .def_readwrite("min", &GridSpec::min)
      .def_readwrite("max", &GridSpec::max)
      .def_readwrite("count", &GridSpec::count);

  py::class_<SusceptibilitySpectrum>(m, "SusceptibilitySpectrum")
      .def_readonly("detunings", &SusceptibilitySpectrum::detunings)
      .def_readonly("chi", &SusceptibilitySpectrum::chi)
      .def_readonly("scheme", &SusceptibilitySpectrum::scheme)
      .def_readonly("doppler", &SusceptibilitySpectrum::doppler);
  m.def("spectrum", &spectrum, py::arg("grid"), py::arg("scheme"),
        py::arg("doppler") = DopplerConfig{});

  py::class_<Peak>(m, "Peak")
      .def_readonly("position", &Peak::position)
      .def_readonly("height", &Peak::height)
      .def_readonly("fwhm", &Peak::fwhm)
      .def("__repr__", [](const Peak& p) {
        return "Peak(position=" + std::to_string(p.position) +
               ", height=" + std::to_string(p.height) + ")";
      });
  m.def("find_peaks", &find_peaks, py::arg("spectrum"),
        py::arg("min_prominence") = -1.0);

  py::class_<Extremum>(m, "Extremum")
      .def_readonly("position", &Extremum::position)
      .def_readonly("value", &Extremum::value);
  m.def("eit_minimum", &eit_minimum, py::arg("scheme"), py::arg("window_lo"),
        py::arg("window_hi"));

  py::class_<MediumConfig>(m, "MediumConfig")
      .def(py::init<>())
      .def_readwrite("cooperativity", &MediumConfig::cooperativity)
      .def_readwrite("scheme", &MediumConfig::scheme)
      .def_readwrite("doppler", &MediumConfig::doppler)
      .def_readwrite("atom_mass", &MediumConfig::atom_mass);

  py::class_<PulseProfile>(m, "PulseProfile")
      .def(py::init<>())
      .def_readwrite("t", &PulseProfile::t)
      .def_readwrite("envelope", &PulseProfile::envelope)
      .def_readwrite("carrier_detuning", &PulseProfile::carrier_detuning)
      .def_property_readonly("dt", &PulseProfile::dt)
      .def_property_readonly("energy", &PulseProfile::energy);
  m.def("gaussian_pulse", &gaussian_pulse, py::arg("fwhm"),
        py::arg("carrier_detuning"), py::arg("window"),
        py::arg("samples") = std::size_t{1} << 14);
  m.def(
      "transfer_function",
      [](const std::vector<double>& omega, const MediumConfig& medium,
         double carrier) {
        return transfer_function(omega, medium, carrier);
      },
      py::arg("omega"), py::arg("medium"), py::arg("carrier_detuning"));
  m.def("propagate_pulse", &propagate_pulse, py::arg("pulse"),
        py::arg("medium"));
  m.def("propagate_with_chi", &propagate_with_chi, py::arg("pulse"),
        py::arg("cooperativity"), py::arg("chi"));

  py::class_<PulseMetrics>(m, "PulseMetrics")
      .def_readonly("transmission", &PulseMetrics::transmission)
      .def_readonly("centroid_delay", &PulseMetrics::centroid_delay)
      .def_readonly("fwhm_in", &PulseMetrics::fwhm_in)
      .def_readonly("fwhm_out", &PulseMetrics::fwhm_out)
      .def_readonly("fractional_delay", &PulseMetrics::fractional_delay)
      .def_readonly("proxy_efficiency", &PulseMetrics::proxy_efficiency);
  m.def("pulse_metrics", &pulse_metrics, py::arg("input"), py::arg("output"));

  py::class_<SweepPoint>(m, "SweepPoint")
      .def_readonly("carrier", &SweepPoint::carrier)
      .def_readonly("fwhm", &SweepPoint::fwhm)
      .def_readonly("metrics", &SweepPoint::metrics);
  m.def(
      "sweep_operating_points",
      [](const MediumConfig& medium, const std::vector<double>& carriers,
         const std::vector<double>& fwhms) {
        return sweep_operating_points(medium, carriers, fwhms);
      },
      py::arg("medium"), py::arg("carriers"), py::arg("fwhms"));

  py::class_<GaussHermite>(m, "GaussHermite")
      .def_readonly("nodes", &GaussHermite::nodes)
      .def_readonly("weights", &GaussHermite::weights);
  m.def("gauss_hermite", &gauss_hermite, py::arg("order"));
}
