#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "orthowell/analysis.hpp"
#include "orthowell/core.hpp"
#include "orthowell/expansion.hpp"
#include "orthowell/kets.hpp"
#include "orthowell/operators.hpp"
#include "orthowell/overlap.hpp"

namespace py = pybind11;
using namespace orthowell;

PYBIND11_MODULE(_core, m) {
    m.doc() = "orthonormal eigenbasis families of the interval-confined particle";

    py::class_<WellConfig>(m, "WellConfig")
        .def(py::init([](double a, double hbar, double mass) {
                 WellConfig c{a, hbar, mass};
                 c.validate();
                 return c;
             }),
             py::arg("a") = 1.0, py::arg("hbar") = 1.0, py::arg("mass") = 1.0)
        .def_readwrite("a", &WellConfig::a)
        .def_readwrite("hbar", &WellConfig::hbar)
        .def_readwrite("mass", &WellConfig::mass)
        .def("grid_step", &WellConfig::grid_step)
        .def("momentum", &WellConfig::momentum, py::arg("j"))
        .def("__repr__", [](const WellConfig& c) {
            return "WellConfig(a=" + std::to_string(c.a) + ", hbar=" + std::to_string(c.hbar) +
                   ", mass=" + std::to_string(c.mass) + ")";
        });

    py::enum_<ModeKind>(m, "ModeKind")
        .value("Const", ModeKind::Const)
        .value("Cos", ModeKind::Cos)
        .value("Sin", ModeKind::Sin);

    py::enum_<Family>(m, "Family")
        .value("I", Family::I)
        .value("II", Family::II)
        .value("III", Family::III)
        .value("IV", Family::IV);

    py::class_<ModeId>(m, "ModeId")
        .def(py::init<int, ModeKind>(), py::arg("j"), py::arg("kind"))
        .def_readwrite("j", &ModeId::j)
        .def_readwrite("kind", &ModeId::kind)
        .def_property_readonly("parity", [](const ModeId& m) { return parity(m); })
        .def("__eq__", [](const ModeId& a, const ModeId& b) { return a == b; })
        .def("__repr__",
             [](const ModeId& m) { return "ModeId(" + std::to_string(m.j) + ", " + to_string(m) + ")"; });

    m.def("enumerate_modes", &enumerate_modes, py::arg("family"), py::arg("cutoff"));
    m.def("family_contains", &family_contains, py::arg("family"), py::arg("mode"));
    m.def("eval_mode", &eval_mode, py::arg("cfg"), py::arg("mode"), py::arg("x"));
    m.def("eval_mode_derivative", &eval_mode_derivative, py::arg("cfg"), py::arg("mode"),
          py::arg("x"));
    m.def("energy_of", &energy_of, py::arg("cfg"), py::arg("j"));
    m.def("eval_free_doublet", &eval_free_doublet, py::arg("cfg"), py::arg("p_abs"),
          py::arg("parity"), py::arg("x"));

    // overlaps and sifting
    m.def("kernel_free", &kernel_free, py::arg("cfg"), py::arg("p"), py::arg("pprime"));
    m.def("kernel_free_diagonal", &kernel_free_diagonal, py::arg("cfg"), py::arg("p"));
    m.def("mode_overlap", &mode_overlap, py::arg("lhs"), py::arg("rhs"));
    m.def("modes_orthogonal", &modes_orthogonal, py::arg("lhs"), py::arg("rhs"));

    py::class_<GramReport>(m, "GramReport")
        .def_readonly("row_modes", &GramReport::row_modes)
        .def_readonly("col_modes", &GramReport::col_modes)
        .def_readonly("matrix", &GramReport::matrix)
        .def_readonly("max_offdiag", &GramReport::max_offdiag)
        .def_readonly("max_diag_dev", &GramReport::max_diag_dev)
        .def_readonly("is_orthonormal", &GramReport::is_orthonormal);
    m.def("gram_family", &gram_family, py::arg("cfg"), py::arg("family"), py::arg("cutoff"),
          py::arg("tol") = 1e-12);
    m.def("gram_cross", &gram_cross, py::arg("cfg"), py::arg("family_a"), py::arg("family_b"),
          py::arg("cutoff"), py::arg("tol") = 1e-12);

    py::class_<SiftResult>(m, "SiftResult")
        .def_readonly("sets", &SiftResult::sets)
        .def_readonly("matched", &SiftResult::matched)
        .def_readonly("matched_all", &SiftResult::matched_all);
    m.def("sift_families", &sift_families, py::arg("cfg"), py::arg("cutoff"));

    // expansions
    py::class_<BoundaryRecord>(m, "BoundaryRecord")
        .def_readonly("value_hi", &BoundaryRecord::value_hi)
        .def_readonly("value_lo", &BoundaryRecord::value_lo)
        .def_readonly("deriv_hi", &BoundaryRecord::deriv_hi)
        .def_readonly("deriv_lo", &BoundaryRecord::deriv_lo)
        .def_readonly("sup_error", &BoundaryRecord::sup_error);
    py::class_<ExpansionReport>(m, "ExpansionReport")
        .def_readonly("family", &ExpansionReport::family)
        .def_readonly("cutoff", &ExpansionReport::cutoff)
        .def_readonly("modes", &ExpansionReport::modes)
        .def_readonly("coeffs", &ExpansionReport::coeffs)
        .def_readonly("f_norm_sq", &ExpansionReport::f_norm_sq)
        .def_readonly("coeff_energy", &ExpansionReport::coeff_energy)
        .def_readonly("l2_residual", &ExpansionReport::l2_residual)
        .def_readonly("parseval_ratio", &ExpansionReport::parseval_ratio)
        .def_readonly("boundary", &ExpansionReport::boundary)
        .def("partial_sum", &ExpansionReport::partial_sum, py::arg("cfg"), py::arg("x"))
        .def("partial_sum_derivative", &ExpansionReport::partial_sum_derivative, py::arg("cfg"),
             py::arg("x"));
    m.def("expand", &expand, py::arg("cfg"), py::arg("family"), py::arg("cutoff"), py::arg("fn"),
          py::arg("sup_samples") = 2001);
    m.def("rotate_IV_from_III", &rotate_IV_from_III, py::arg("cfg"), py::arg("n"),
          py::arg("parity"), py::arg("x"));
    py::class_<GibbsRow>(m, "GibbsRow")
        .def_readonly("cutoff", &GibbsRow::cutoff)
        .def_readonly("l2_residual", &GibbsRow::l2_residual)
        .def_readonly("sup_error", &GibbsRow::sup_error)
        .def_readonly("parseval_ratio", &GibbsRow::parseval_ratio);
    m.def("gibbs_study", &gibbs_study, py::arg("cfg"), py::arg("cutoffs"), py::arg("fn"));
    m.def("builtin_function", &builtin_function, py::arg("name"), py::arg("cfg"),
          py::arg("sigma") = 0.5);

    // operators
    py::enum_<OperatorKind>(m, "OperatorKind")
        .value("Hamiltonian", OperatorKind::Hamiltonian)
        .value("Projector", OperatorKind::Projector);
    py::class_<OperatorMatrix>(m, "OperatorMatrix")
        .def_readonly("family", &OperatorMatrix::family)
        .def_readonly("kind", &OperatorMatrix::kind)
        .def_readonly("source_cutoff", &OperatorMatrix::source_cutoff)
        .def_readonly("ref_cutoff", &OperatorMatrix::ref_cutoff)
        .def_readonly("matrix", &OperatorMatrix::matrix);
    m.def("reference_basis", &reference_basis, py::arg("ref_cutoff"));
    m.def("rep_mode", &rep_mode, py::arg("cfg"), py::arg("mode"), py::arg("ref_cutoff"));
    m.def(
        "build_hamiltonian",
        [](const WellConfig& cfg, Family f, int J, int ref, bool include_constant) {
            return build_hamiltonian(cfg, f, J, ref,
                                     include_constant ? ConstantMode::Include : ConstantMode::Omit);
        },
        py::arg("cfg"), py::arg("family"), py::arg("cutoff"), py::arg("ref_cutoff"),
        py::arg("include_constant") = true);
    m.def(
        "build_projector",
        [](const WellConfig& cfg, Family f, int J, int ref, bool include_constant) {
            return build_projector(cfg, f, J, ref,
                                   include_constant ? ConstantMode::Include : ConstantMode::Omit);
        },
        py::arg("cfg"), py::arg("family"), py::arg("cutoff"), py::arg("ref_cutoff"),
        py::arg("include_constant") = true);
    py::class_<LinearDependenceReport>(m, "LinearDependenceReport")
        .def_readonly("source_cutoff", &LinearDependenceReport::source_cutoff)
        .def_readonly("ref_cutoff", &LinearDependenceReport::ref_cutoff)
        .def_readonly("hamiltonian_residual", &LinearDependenceReport::hamiltonian_residual)
        .def_readonly("projector_residual", &LinearDependenceReport::projector_residual);
    m.def(
        "check_linear_dependence",
        [](const WellConfig& cfg, int J, int ref) { return check_linear_dependence(cfg, J, ref); },
        py::arg("cfg"), py::arg("cutoff"), py::arg("ref_cutoff"));
    py::class_<CommutatorReport>(m, "CommutatorReport")
        .def_readonly("comm_fro", &CommutatorReport::comm_fro)
        .def_readonly("a_fro", &CommutatorReport::a_fro)
        .def_readonly("b_fro", &CommutatorReport::b_fro);
    m.def("commutator_norm", &commutator_norm, py::arg("A"), py::arg("B"));
    py::class_<SpectralActionRow>(m, "SpectralActionRow")
        .def_readonly("mode", &SpectralActionRow::mode)
        .def_readonly("energy", &SpectralActionRow::energy)
        .def_readonly("rel_residual", &SpectralActionRow::rel_residual);
    py::class_<SpectralActionReport>(m, "SpectralActionReport")
        .def_readonly("rows", &SpectralActionReport::rows)
        .def_readonly("max_rel_residual", &SpectralActionReport::max_rel_residual);
    m.def("spectral_action_check", &spectral_action_check, py::arg("cfg"), py::arg("family"),
          py::arg("cutoff"), py::arg("ref_cutoff"), py::arg("max_modes") = 0);
    m.def("idempotence_residual", &idempotence_residual, py::arg("P"));
    m.def("symmetry_residual", &symmetry_residual, py::arg("M"));

    // mixed boundary conditions and the wide-well study
    m.def("mixed_bc_det",
          [](const WellConfig& cfg, double h) { return mixed_bc_det(cfg, h); }, py::arg("cfg"),
          py::arg("h"));
    py::class_<MixedBcRoot>(m, "MixedBcRoot")
        .def_readonly("h", &MixedBcRoot::h)
        .def_readonly("coeff_cos", &MixedBcRoot::coeff_cos)
        .def_readonly("coeff_sin", &MixedBcRoot::coeff_sin)
        .def_readonly("value_residual", &MixedBcRoot::value_residual)
        .def_readonly("deriv_residual", &MixedBcRoot::deriv_residual)
        .def_readonly("candidate_norm", &MixedBcRoot::candidate_norm)
        .def_readonly("satisfies_bcs", &MixedBcRoot::satisfies_bcs);
    py::class_<MixedBcReport>(m, "MixedBcReport")
        .def_readonly("h_grid", &MixedBcReport::h_grid)
        .def_readonly("det_values", &MixedBcReport::det_values)
        .def_readonly("roots", &MixedBcReport::roots)
        .def_readonly("nontrivial_solutions_found", &MixedBcReport::nontrivial_solutions_found);
    m.def(
        "mixed_bc_scan",
        [](const WellConfig& cfg, double h_max, int samples) {
            return mixed_bc_scan(cfg, h_max, samples);
        },
        py::arg("cfg"), py::arg("h_max"), py::arg("samples") = 1001);
    py::class_<ConvergenceRow>(m, "ConvergenceRow")
        .def_readonly("a", &ConvergenceRow::a)
        .def_readonly("grid_index", &ConvergenceRow::grid_index)
        .def_readonly("p_selected", &ConvergenceRow::p_selected)
        .def_readonly("momentum_gap", &ConvergenceRow::momentum_gap)
        .def_readonly("sup_error_even", &ConvergenceRow::sup_error_even)
        .def_readonly("sup_error_odd", &ConvergenceRow::sup_error_odd);
    m.def("convergence_study", &convergence_study, py::arg("cfg"), py::arg("family"),
          py::arg("p_target"), py::arg("window"), py::arg("a_list"),
          py::arg("sup_samples") = 2001);

    // formal ket algebra (numeric checks only)
    m.def("doublet_coefficients", [](double p, int par) {
        std::vector<std::complex<double>> out(2);
        const auto s = kets::build_doublet(p, par);
        for (const auto& [c, l] : s.terms()) out[l.sign > 0 ? 0 : 1] = c;
        return out;
    });
    m.def("completeness_check", &kets::completeness_check, py::arg("p"));

#ifdef ORTHOWELL_VERSION_INFO
    m.attr("__version__") = ORTHOWELL_VERSION_INFO;
#else
    m.attr("__version__") = "dev";
#endif
}
