#include "orthowell/cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "orthowell/analysis.hpp"
#include "orthowell/core.hpp"
#include "orthowell/expansion.hpp"
#include "orthowell/kets.hpp"
#include "orthowell/operators.hpp"
#include "orthowell/overlap.hpp"

namespace orthowell {

namespace {

using json = nlohmann::ordered_json;

// full-precision scientific notation, 17 significant digits
std::string sci(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.16e", v);
    return buf;
}

std::string kind_name(ModeKind k) {
    switch (k) {
        case ModeKind::Const: return "const";
        case ModeKind::Cos: return "cos";
        case ModeKind::Sin: return "sin";
    }
    return "?";
}

struct Check {
    std::string name;
    double value = 0.0;
    double threshold = 0.0;
    bool pass = false;
};

json checks_json(const std::vector<Check>& checks) {
    json arr = json::array();
    for (const auto& c : checks)
        arr.push_back({{"name", c.name},
                       {"value", c.value},
                       {"threshold", c.threshold},
                       {"pass", c.pass}});
    return arr;
}

bool all_pass(const std::vector<Check>& checks) {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

struct Options {
    WellConfig well;
    int cutoff = 16;
    int ref_cutoff = 64;
    double tol = 1e-12;
    std::string emit = "json";
    std::string out_path;
};

json envelope(const std::string& subcommand, const Options& opt) {
    json j;
    j["tool"] = "orthowell";
    j["version"] = kVersion;
    j["subcommand"] = subcommand;
    j["a"] = opt.well.a;
    j["hbar"] = opt.well.hbar;
    j["mass"] = opt.well.mass;
    return j;
}

class CsvTable {
public:
    explicit CsvTable(std::vector<std::string> header) : header_(std::move(header)) {}
    void add_row(std::vector<std::string> row) { rows_.push_back(std::move(row)); }
    void render(std::ostream& os) const {
        render_line(os, header_);
        for (const auto& r : rows_) render_line(os, r);
    }

private:
    static void render_line(std::ostream& os, const std::vector<std::string>& fields) {
        for (std::size_t i = 0; i < fields.size(); ++i) {
            if (i) os << ',';
            os << fields[i];
        }
        os << '\n';
    }
    std::vector<std::string> header_;
    std::vector<std::vector<std::string>> rows_;
};

int deliver(const std::string& payload, const Options& opt, std::ostream& out, std::ostream& err) {
    if (opt.out_path.empty()) {
        out << payload;
        return kExitOk;
    }
    std::ofstream f(opt.out_path, std::ios::binary);
    if (!f) {
        err << "error: cannot open output path '" << opt.out_path << "'\n";
        return kExitOutputError;
    }
    f << payload;
    if (!f.good()) {
        err << "error: failed writing '" << opt.out_path << "'\n";
        return kExitOutputError;
    }
    return kExitOk;
}

int finish(json report, const std::vector<Check>& checks, const std::string& csv,
           const Options& opt, std::ostream& out, std::ostream& err) {
    report["checks"] = checks_json(checks);
    const bool pass = all_pass(checks);
    report["pass"] = pass;
    const std::string payload = opt.emit == "csv" ? csv : report.dump(2) + "\n";
    const int rc = deliver(payload, opt, out, err);
    if (rc != kExitOk) return rc;
    return pass ? kExitOk : kExitCheckFailed;
}

// ---------------------------------------------------------------- modes --

int cmd_modes(const Options& opt, Family family, std::ostream& out, std::ostream& err) {
    const auto modes = enumerate_modes(family, opt.cutoff);
    json rep = envelope("modes", opt);
    rep["family"] = to_string(family);
    rep["cutoff"] = opt.cutoff;
    json list = json::array();
    CsvTable csv({"j", "kind", "parity", "momentum", "energy"});
    for (const ModeId& m : modes) {
        const double p = opt.well.momentum(m.j);
        const double e = energy_of(opt.well, m.j);
        list.push_back({{"j", m.j},
                        {"kind", kind_name(m.kind)},
                        {"parity", parity(m)},
                        {"level", to_string(m)},
                        {"momentum", p},
                        {"energy", e}});
        csv.add_row({std::to_string(m.j), kind_name(m.kind), std::to_string(parity(m)), sci(p),
                     sci(e)});
    }
    rep["modes"] = list;
    std::ostringstream csv_os;
    csv.render(csv_os);
    return finish(std::move(rep), {}, csv_os.str(), opt, out, err);
}

// ----------------------------------------------------------------- gram --

int cmd_gram(const Options& opt, Family family, const std::string& cross, std::ostream& out,
             std::ostream& err) {
    GramReport g;
    std::vector<Check> checks;
    if (cross.empty()) {
        g = gram_family(opt.well, family, opt.cutoff, opt.tol);
        checks.push_back({"max_offdiag", g.max_offdiag, opt.tol, g.max_offdiag <= opt.tol});
        checks.push_back({"max_diag_dev", g.max_diag_dev, opt.tol, g.max_diag_dev <= opt.tol});
    } else {
        g = gram_cross(opt.well, family, family_from_string(cross), opt.cutoff, opt.tol);
    }
    json rep = envelope("gram", opt);
    rep["family"] = to_string(family);
    if (!cross.empty()) rep["cross_family"] = cross;
    rep["cutoff"] = opt.cutoff;
    rep["tol"] = opt.tol;
    rep["max_offdiag"] = g.max_offdiag;
    rep["is_orthonormal"] = g.is_orthonormal;
    json rows = json::array();
    for (Eigen::Index r = 0; r < g.matrix.rows(); ++r) {
        json row = json::array();
        for (Eigen::Index c = 0; c < g.matrix.cols(); ++c) row.push_back(g.matrix(r, c));
        rows.push_back(row);
    }
    rep["matrix"] = rows;

    std::vector<std::string> header{"mode"};
    for (const ModeId& m : g.col_modes) header.push_back(to_string(m) + kind_name(m.kind));
    CsvTable csv(header);
    for (Eigen::Index r = 0; r < g.matrix.rows(); ++r) {
        std::vector<std::string> row{to_string(g.row_modes[r]) + kind_name(g.row_modes[r].kind)};
        for (Eigen::Index c = 0; c < g.matrix.cols(); ++c) row.push_back(sci(g.matrix(r, c)));
        csv.add_row(std::move(row));
    }
    std::ostringstream csv_os;
    csv.render(csv_os);
    return finish(std::move(rep), checks, csv_os.str(), opt, out, err);
}

// ----------------------------------------------------------------- sift --

int cmd_sift(const Options& opt, std::ostream& out, std::ostream& err) {
    const SiftResult res = sift_families(opt.well, opt.cutoff);
    json rep = envelope("sift", opt);
    rep["cutoff"] = opt.cutoff;
    json sets = json::array();
    CsvTable csv({"set", "family", "j", "kind", "parity"});
    for (std::size_t s = 0; s < res.sets.size(); ++s) {
        json set;
        const std::string fam = s < res.matched.size() ? to_string(res.matched[s]) : "?";
        set["family"] = fam;
        json members = json::array();
        for (const ModeId& m : res.sets[s]) {
            members.push_back({{"j", m.j}, {"kind", kind_name(m.kind)}, {"parity", parity(m)}});
            csv.add_row({std::to_string(s), fam, std::to_string(m.j), kind_name(m.kind),
                         std::to_string(parity(m))});
        }
        set["modes"] = members;
        sets.push_back(set);
    }
    rep["sets"] = sets;
    rep["set_count"] = res.sets.size();
    std::vector<Check> checks;
    checks.push_back({"maximal_set_count", static_cast<double>(res.sets.size()), 4.0,
                      res.sets.size() == 4});
    checks.push_back({"sets_match_families", res.matched_all ? 1.0 : 0.0, 1.0, res.matched_all});
    std::ostringstream csv_os;
    csv.render(csv_os);
    return finish(std::move(rep), checks, csv_os.str(), opt, out, err);
}

// --------------------------------------------------------------- expand --

int cmd_expand(const Options& opt, Family family, const std::string& fn_name, double sigma,
               int samples, std::ostream& out, std::ostream& err) {
    const RealFn fn = builtin_function(fn_name, opt.well, sigma);
    const ExpansionReport rep = expand(opt.well, family, opt.cutoff, fn);

    std::vector<Check> checks;
    checks.push_back({"bessel_ratio", rep.parseval_ratio, 1.0 + 1e-9,
                      rep.parseval_ratio <= 1.0 + 1e-9 && rep.parseval_ratio >= 0.0});
    const double pythagoras =
        std::abs(rep.l2_residual * rep.l2_residual + rep.coeff_energy - rep.f_norm_sq);
    checks.push_back({"energy_budget_residual", pythagoras, 1e-8, pythagoras <= 1e-8});

    json j = envelope("expand", opt);
    j["family"] = to_string(family);
    j["cutoff"] = opt.cutoff;
    j["fn"] = fn_name;
    if (fn_name == "gauss") j["sigma"] = sigma;
    j["f_norm_sq"] = rep.f_norm_sq;
    j["coeff_energy"] = rep.coeff_energy;
    j["l2_residual"] = rep.l2_residual;
    j["parseval_ratio"] = rep.parseval_ratio;
    j["sup_error"] = rep.boundary.sup_error;
    j["boundary_value_hi"] = rep.boundary.value_hi;
    j["boundary_value_lo"] = rep.boundary.value_lo;
    j["boundary_deriv_hi"] = rep.boundary.deriv_hi;
    j["boundary_deriv_lo"] = rep.boundary.deriv_lo;
    json coeffs = json::array();
    for (std::size_t k = 0; k < rep.modes.size(); ++k)
        coeffs.push_back({{"j", rep.modes[k].j},
                          {"kind", kind_name(rep.modes[k].kind)},
                          {"coeff", rep.coeffs[k]}});
    j["coeffs"] = coeffs;

    CsvTable csv({"x", "f", "s_n"});
    for (int i = 0; i < samples; ++i) {
        const double x = -opt.well.a + 2.0 * opt.well.a * i / (samples - 1);
        csv.add_row({sci(x), sci(fn(x)), sci(rep.partial_sum(opt.well, x))});
    }
    std::ostringstream csv_os;
    csv.render(csv_os);
    if (opt.emit == "csv" && !opt.out_path.empty()) {
        // samples go to the file, the report itself to stdout
        const int rc = deliver(csv_os.str(), opt, out, err);
        if (rc != kExitOk) return rc;
        j["checks"] = checks_json(checks);
        const bool pass = all_pass(checks);
        j["pass"] = pass;
        j["samples_path"] = opt.out_path;
        out << j.dump(2) << "\n";
        return pass ? kExitOk : kExitCheckFailed;
    }
    return finish(std::move(j), checks, csv_os.str(), opt, out, err);
}

// ------------------------------------------------------------ operators --

int cmd_operators(const Options& opt, const std::string& which, const std::string& dump,
                  std::ostream& out, std::ostream& err) {
    const WellConfig& w = opt.well;
    const int J = opt.cutoff;
    const int R = opt.ref_cutoff;

    if (!dump.empty()) {
        // export one operator matrix as CSV
        const bool projector = dump[0] == 'P';
        const Family fam = family_from_string(dump.substr(dump.find('_') + 1));
        const OperatorMatrix op = projector ? build_projector(w, fam, J, R)
                                            : build_hamiltonian(w, fam, J, R);
        std::ostringstream csv_os;
        const auto ref = reference_basis(R);
        std::vector<std::string> header;
        for (const ModeId& m : ref) header.push_back(to_string(m) + kind_name(m.kind));
        CsvTable csv(header);
        for (Eigen::Index r = 0; r < op.matrix.rows(); ++r) {
            std::vector<std::string> row;
            for (Eigen::Index c = 0; c < op.matrix.cols(); ++c) row.push_back(sci(op.matrix(r, c)));
            csv.add_row(std::move(row));
        }
        csv.render(csv_os);
        Options copt = opt;
        copt.emit = "csv";
        json rep = envelope("operators", opt);
        return finish(std::move(rep), {}, csv_os.str(), copt, out, err);
    }

    std::vector<Check> checks;
    json rep = envelope("operators", opt);
    rep["cutoff"] = J;
    rep["ref_cutoff"] = R;
    rep["tol"] = opt.tol;
    rep["check"] = which;

    if (which == "lindep" || which == "all") {
        const auto ld = check_linear_dependence(w, J, R);
        rep["hamiltonian_sum_residual"] = ld.hamiltonian_residual;
        rep["projector_sum_residual"] = ld.projector_residual;
        checks.push_back({"hamiltonian_sum_residual", ld.hamiltonian_residual, opt.tol,
                          ld.hamiltonian_residual <= opt.tol});
        checks.push_back({"projector_sum_residual", ld.projector_residual, opt.tol,
                          ld.projector_residual <= opt.tol});
    }
    if (which == "commute" || which == "all") {
        const auto c1 = commutator_norm(build_hamiltonian(w, Family::I, J, R),
                                        build_hamiltonian(w, Family::II, J, R));
        const auto c2 = commutator_norm(build_hamiltonian(w, Family::I, J, 2 * R),
                                        build_hamiltonian(w, Family::II, J, 2 * R));
        rep["commutator_fro"] = c1.comm_fro;
        rep["commutator_fro_refined"] = c2.comm_fro;
        const double drift = std::abs(c2.comm_fro - c1.comm_fro) / c1.comm_fro;
        rep["commutator_drift"] = drift;
        checks.push_back({"commutator_nonzero", c1.comm_fro, 0.0, c1.comm_fro > 0.0});
        checks.push_back({"commutator_stability", drift, 0.2, drift <= 0.2});
    }
    if (which == "spectral" || which == "all") {
        json per = json::object();
        double max_iii = 0.0;
        bool decays = true;
        for (Family f : {Family::I, Family::II, Family::III, Family::IV}) {
            const auto coarse = spectral_action_check(w, f, J, R);
            const auto fine = spectral_action_check(w, f, J, 2 * R);
            per[to_string(f)] = {{"max_rel_residual", coarse.max_rel_residual},
                                 {"max_rel_residual_refined", fine.max_rel_residual}};
            if (f == Family::III) max_iii = coarse.max_rel_residual;
            if (fine.max_rel_residual > coarse.max_rel_residual + 1e-15) decays = false;
        }
        rep["spectral_action"] = per;
        checks.push_back({"spectral_reference_family_exact", max_iii, opt.tol, max_iii <= opt.tol});
        checks.push_back({"spectral_residual_decays", decays ? 1.0 : 0.0, 1.0, decays});
    }
    if (which == "idempotence" || which == "all") {
        json per = json::object();
        bool decays = true;
        for (Family f : {Family::I, Family::II, Family::III, Family::IV}) {
            const double r1 = idempotence_residual(build_projector(w, f, J, R));
            const double r2 = idempotence_residual(build_projector(w, f, J, 2 * R));
            per[to_string(f)] = {{"residual", r1}, {"residual_refined", r2}};
            if (r2 > r1 + 1e-15) decays = false;
        }
        const double matched = idempotence_residual(build_projector(w, Family::III, R, R));
        rep["idempotence"] = per;
        rep["idempotence_matched_reference"] = matched;
        checks.push_back({"idempotence_matched_reference", matched, opt.tol, matched <= opt.tol});
        checks.push_back({"idempotence_residual_decays", decays ? 1.0 : 0.0, 1.0, decays});
    }
    if (checks.empty()) {
        err << "error: unknown operators check '" << which << "'\n";
        return kExitUsage;
    }

    CsvTable csv({"check", "value", "threshold", "pass"});
    for (const auto& c : checks)
        csv.add_row({c.name, sci(c.value), sci(c.threshold), c.pass ? "1" : "0"});
    std::ostringstream csv_os;
    csv.render(csv_os);
    return finish(std::move(rep), checks, csv_os.str(), opt, out, err);
}

// ------------------------------------------------------------ kets-check --

int cmd_kets_check(const Options& opt, std::ostream& out, std::ostream& err) {
    using namespace kets;
    std::vector<Check> checks;
    const std::vector<double> momenta{0.5, 1.0, 2.0, 10.0};

    {
        FormalState bra(Symbol::P), ket(Symbol::PPrime);
        bra.add_term({1.0, 0.0}, +1, 1.0);
        ket.add_term({1.0, 0.0}, +1, 1.0);
        const DeltaExpr d = inner(bra, ket);
        const double r = std::abs(d.c_minus - Complex(1.0, 0.0)) + std::abs(d.c_plus);
        checks.push_back({"plane_wave_delta_norm", r, 1e-15, r <= 1e-15});
        FormalState mbra(Symbol::P);
        mbra.add_term({1.0, 0.0}, -1, 1.0);
        const DeltaExpr d2 = inner(mbra, ket);
        const double r2 = std::abs(d2.c_plus - Complex(1.0, 0.0)) + std::abs(d2.c_minus);
        checks.push_back({"opposite_sign_delta_rule", r2, 1e-15, r2 <= 1e-15});
    }

    for (double p : momenta) {
        char tag_buf[24];
        std::snprintf(tag_buf, sizeof(tag_buf), "_p%g", p);
        const std::string tag = tag_buf;
        const FormalState plusP = build_doublet(p, +1, Symbol::P);
        const FormalState plusQ = build_doublet(p, +1, Symbol::PPrime);
        const FormalState minusP = build_doublet(p, -1, Symbol::P);
        const FormalState minusQ = build_doublet(p, -1, Symbol::PPrime);
        const double target = 1.0 / (2.0 * p);

        const DeltaExpr self_plus = inner(plusP, plusQ);
        const DeltaExpr self_minus = inner(minusP, minusQ);
        const DeltaExpr want{Complex(target, 0.0), Complex(target, 0.0)};
        double r = std::abs(self_plus.c_minus - want.c_minus) + std::abs(self_plus.c_plus - want.c_plus);
        checks.push_back({"even_self_overlap" + tag, r, 1e-14, self_plus.strict_equal(want, 1e-14)});
        r = std::abs(self_minus.c_minus - want.c_minus);
        checks.push_back(
            {"odd_self_overlap_on_support" + tag, r, 1e-14, self_minus.on_support_equal(want, 1e-14)});

        const DeltaExpr cross = inner(plusP, minusQ);
        r = std::abs(cross.c_minus) + std::abs(cross.c_plus);
        checks.push_back({"doublet_orthogonality" + tag, r, 1e-15, r <= 1e-15});

        const DoubletConstraints cons = solve_doublet_coefficients(p);
        const Complex A(0.5 / std::sqrt(p), 0.0);
        const bool plus_ok = cons.satisfied(A, A, +1, 1e-14);
        checks.push_back({"even_coefficients_satisfy" + tag, plus_ok ? 0.0 : 1.0, 0.0, plus_ok});
        const Complex Am(0.0, -0.5 / std::sqrt(p));
        const bool minus_ok = cons.satisfied(Am, -Am, -1, 1e-14);
        checks.push_back({"odd_coefficients_satisfy" + tag, minus_ok ? 0.0 : 1.0, 0.0, minus_ok});

        const Eigen::Matrix2cd M = completeness_check(p);
        const double cr = (2.0 * p * M - Eigen::Matrix2cd::Identity()).cwiseAbs().maxCoeff();
        checks.push_back({"completeness_identity" + tag, cr, 1e-14, cr <= 1e-14});

        const FormalState ep = build_doublet(p, +1, Symbol::P, DeltaNorm::Energy, opt.well.mass);
        const FormalState eq = build_doublet(p, +1, Symbol::PPrime, DeltaNorm::Energy, opt.well.mass);
        const DeltaExpr eself = inner(ep, eq);
        const double er = std::abs(eself.c_minus - Complex(opt.well.mass / p, 0.0));
        checks.push_back({"energy_norm_self_overlap" + tag, er, 1e-14, er <= 1e-14});
    }

    const UniquenessScan scan = plus_branch_uniqueness_scan(1.0);
    checks.push_back({"uniqueness_solutions_found", static_cast<double>(scan.solutions_found), 1.0,
                      scan.solutions_found >= 1});
    checks.push_back(
        {"uniqueness_max_deviation", scan.max_deviation, 1e-3, scan.max_deviation <= 1e-3});

    json rep = envelope("kets-check", opt);
    CsvTable csv({"check", "value", "threshold", "pass"});
    for (const auto& c : checks)
        csv.add_row({c.name, sci(c.value), sci(c.threshold), c.pass ? "1" : "0"});
    std::ostringstream csv_os;
    csv.render(csv_os);
    return finish(std::move(rep), checks, csv_os.str(), opt, out, err);
}

// -------------------------------------------------------------- mixed-bc --

int cmd_mixed_bc(const Options& opt, double hmax, int samples, std::ostream& out,
                 std::ostream& err) {
    const MixedBcReport scan = mixed_bc_scan(opt.well, hmax, samples);

    double det_identity_dev = 0.0;
    for (std::size_t i = 0; i < scan.h_grid.size(); ++i)
        det_identity_dev = std::max(det_identity_dev,
                                    std::abs(scan.det_values[i] -
                                             std::cos(2.0 * scan.h_grid[i] * opt.well.a)));
    bool candidates_ok = !scan.roots.empty();
    double worst_resid = 0.0;
    for (const auto& r : scan.roots) {
        candidates_ok = candidates_ok && r.satisfies_bcs;
        worst_resid = std::max({worst_resid, r.value_residual, r.deriv_residual});
    }

    std::vector<Check> checks;
    checks.push_back({"det_equals_cos_2ha", det_identity_dev, 1e-14, det_identity_dev <= 1e-14});
    checks.push_back({"roots_admit_nontrivial_solutions", worst_resid, 1e-10, candidates_ok});

    json rep = envelope("mixed-bc", opt);
    rep["h_max"] = hmax;
    rep["samples"] = samples;
    json roots = json::array();
    for (const auto& r : scan.roots)
        roots.push_back({{"h", r.h},
                         {"coeff_cos", r.coeff_cos},
                         {"coeff_sin", r.coeff_sin},
                         {"value_residual", r.value_residual},
                         {"deriv_residual", r.deriv_residual},
                         {"candidate_norm", r.candidate_norm},
                         {"satisfies_bcs", r.satisfies_bcs}});
    rep["roots"] = roots;
    rep["nontrivial_solutions_found"] = scan.nontrivial_solutions_found;
    rep["note"] =
        "determinant roots at h*a = pi/4 + k*pi/2 admit nontrivial candidates satisfying "
        "both mixed conditions; a no-solution conclusion for this system does not hold";

    CsvTable csv({"h", "det"});
    for (std::size_t i = 0; i < scan.h_grid.size(); ++i)
        csv.add_row({sci(scan.h_grid[i]), sci(scan.det_values[i])});
    std::ostringstream csv_os;
    csv.render(csv_os);
    return finish(std::move(rep), checks, csv_os.str(), opt, out, err);
}

// -------------------------------------------------------------- converge --

int cmd_converge(const Options& opt, const std::string& family_str, double p_target,
                 double window, const std::vector<double>& a_list, std::ostream& out,
                 std::ostream& err) {
    const Family fam = family_from_string(family_str);
    const auto rows = convergence_study(opt.well, fam, p_target, window, a_list);

    bool finite = true;
    for (const auto& r : rows)
        finite = finite && std::isfinite(r.sup_error_even) && std::isfinite(r.sup_error_odd);
    std::vector<Check> checks;
    checks.push_back({"errors_finite", finite ? 1.0 : 0.0, 1.0, finite});

    json rep = envelope("converge", opt);
    rep["family"] = to_string(fam);
    rep["p_target"] = p_target;
    rep["window"] = window;
    json table = json::array();
    CsvTable csv({"a", "grid_index", "p_selected", "momentum_gap", "sup_error_even",
                  "sup_error_odd"});
    for (const auto& r : rows) {
        table.push_back({{"a", r.a},
                         {"grid_index", r.grid_index},
                         {"p_selected", r.p_selected},
                         {"momentum_gap", r.momentum_gap},
                         {"sup_error_even", r.sup_error_even},
                         {"sup_error_odd", r.sup_error_odd}});
        csv.add_row({sci(r.a), std::to_string(r.grid_index), sci(r.p_selected),
                     sci(r.momentum_gap), sci(r.sup_error_even), sci(r.sup_error_odd)});
    }
    rep["table"] = table;
    std::ostringstream csv_os;
    csv.render(csv_os);
    return finish(std::move(rep), checks, csv_os.str(), opt, out, err);
}

std::vector<double> parse_double_list(const std::string& s) {
    std::vector<double> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) out.push_back(std::stod(item));
    }
    return out;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"orthowell: orthonormal eigenbasis families of the interval-confined particle"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string("orthowell ") + kVersion);

    Options opt;
    app.add_option("--a", opt.well.a, "well half-width");
    app.add_option("--hbar", opt.well.hbar, "reduced Planck constant");
    app.add_option("--mass", opt.well.mass, "particle mass");
    app.add_option("--cutoff", opt.cutoff, "momentum grid cutoff J");
    app.add_option("--ref-cutoff", opt.ref_cutoff, "reference basis cutoff");
    app.add_option("--tol", opt.tol, "orthonormality / identity tolerance");
    app.add_option("--emit,--format", opt.emit, "output format: json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--out", opt.out_path, "write the report to this path instead of stdout");

    std::string family_str = "I";
    std::string cross_str, fn_name = "const1", check_which = "all", dump;
    double sigma = 0.5, hmax = 10.0, p_target = std::numbers::pi, window = 1.0;
    int samples = 1001, sup_samples = 201;
    std::string a_list_str = "2,4,8,16";

    auto* modes_cmd = app.add_subcommand("modes", "enumerate family modes");
    modes_cmd->add_option("--family", family_str, "family I..IV")->required();

    auto* gram_cmd = app.add_subcommand("gram", "pairwise mode overlaps");
    gram_cmd->add_option("--family", family_str, "family I..IV")->required();
    gram_cmd->add_option("--cross", cross_str, "second family for a cross-Gram");

    app.add_subcommand("sift", "discover maximal orthogonal mode sets");

    auto* expand_cmd = app.add_subcommand("expand", "expand a function in a family");
    expand_cmd->add_option("--family", family_str, "family I..IV")->required();
    expand_cmd->add_option("--fn", fn_name, "const1, linear, square, triangle, gauss");
    expand_cmd->add_option("--sigma", sigma, "gauss width");
    expand_cmd->add_option("--samples", sup_samples, "sample count for the (x, f, S_N) table");

    auto* op_cmd = app.add_subcommand("operators", "operator identity checks");
    op_cmd->add_option("--check", check_which, "all, lindep, commute, spectral, idempotence");
    op_cmd->add_option("--dump", dump, "export one matrix as CSV: H_I..H_IV, P_I..P_IV");

    app.add_subcommand("kets-check", "formal delta-algebra verification");

    auto* mixed_cmd = app.add_subcommand("mixed-bc", "mixed boundary-condition determinant scan");
    mixed_cmd->add_option("--hmax", hmax, "scan upper wavenumber");
    mixed_cmd->add_option("--samples", samples, "scan sample count");

    auto* conv_cmd = app.add_subcommand("converge", "wide-well doublet comparison");
    conv_cmd->add_option("--family", family_str, "family III or IV")->required();
    conv_cmd->add_option("--p-target", p_target, "target momentum");
    conv_cmd->add_option("--window", window, "comparison half-window");
    conv_cmd->add_option("--a-list", a_list_str, "comma-separated well half-widths");

    // well/cutoff/output options live on the parent and may appear anywhere
    for (auto* sc : app.get_subcommands(nullptr)) sc->fallthrough();

    std::vector<std::string> cli_args(args.rbegin(), args.rend());
    try {
        app.parse(cli_args);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForVersion&) {
        out << "orthowell " << kVersion << "\n";
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        opt.well.validate();
        if (opt.cutoff < 1) throw std::invalid_argument("cutoff must be >= 1");
        if (opt.ref_cutoff < 1) throw std::invalid_argument("ref-cutoff must be >= 1");
        if (!(opt.tol > 0.0)) throw std::invalid_argument("tol must be > 0");

        if (modes_cmd->parsed())
            return cmd_modes(opt, family_from_string(family_str), out, err);
        if (gram_cmd->parsed()) return cmd_gram(opt, family_from_string(family_str), cross_str, out, err);
        if (app.get_subcommand("sift")->parsed()) return cmd_sift(opt, out, err);
        if (expand_cmd->parsed())
            return cmd_expand(opt, family_from_string(family_str), fn_name, sigma, sup_samples,
                              out, err);
        if (op_cmd->parsed()) return cmd_operators(opt, check_which, dump, out, err);
        if (app.get_subcommand("kets-check")->parsed()) return cmd_kets_check(opt, out, err);
        if (mixed_cmd->parsed()) return cmd_mixed_bc(opt, hmax, samples, out, err);
        if (conv_cmd->parsed())
            return cmd_converge(opt, family_str, p_target, window, parse_double_list(a_list_str),
                                out, err);
        err << "error: no subcommand\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kExitBadRange;
    } catch (const QuadratureError& e) {
        err << "error: " << e.what() << "\n";
        return kExitCheckFailed;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}

}  // namespace orthowell
