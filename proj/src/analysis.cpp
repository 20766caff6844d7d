#include "orthowell/analysis.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "orthowell/quadrature.hpp"

namespace orthowell {

namespace {

constexpr double kPi = std::numbers::pi;

struct BcSystem {
    // rows of the 2x2 system on (A, B)
    double r00, r01, r10, r11;
};

BcSystem bc_system(const WellConfig& cfg, double h, MixedBcVariant v) {
    const double c = std::cos(h * cfg.a), s = std::sin(h * cfg.a);
    if (v == MixedBcVariant::ValueAtPlusA) {
        // psi(a) = 0        ->  A c + B s = 0
        // psi'(-a)/h = 0    ->  A s + B c = 0
        return {c, s, s, c};
    }
    // psi(-a) = 0       ->  A c - B s = 0
    // psi'(a)/h = 0     -> -A s + B c = 0
    return {c, -s, -s, c};
}

}  // namespace

double mixed_bc_det(const WellConfig& cfg, double h, MixedBcVariant v) {
    cfg.validate();
    if (h < 0.0) throw std::invalid_argument("mixed_bc_det: wavenumber must be >= 0");
    const BcSystem sys = bc_system(cfg, h, v);
    return sys.r00 * sys.r11 - sys.r01 * sys.r10;
}

MixedBcReport mixed_bc_scan(const WellConfig& cfg, double h_max, int samples, MixedBcVariant v) {
    cfg.validate();
    if (!(h_max > 0.0)) throw std::invalid_argument("mixed_bc_scan: h_max must be > 0");
    if (samples < 100) throw std::invalid_argument("mixed_bc_scan: need at least 100 samples");

    MixedBcReport rep;
    rep.variant = v;
    rep.h_grid.reserve(samples);
    rep.det_values.reserve(samples);
    for (int i = 0; i < samples; ++i) {
        const double h = h_max * i / (samples - 1);
        rep.h_grid.push_back(h);
        rep.det_values.push_back(mixed_bc_det(cfg, h, v));
    }

    for (int i = 0; i + 1 < samples; ++i) {
        double lo = rep.h_grid[i], hi = rep.h_grid[i + 1];
        double flo = rep.det_values[i], fhi = rep.det_values[i + 1];
        if (flo == 0.0 && i > 0) continue;  // counted as the previous interval's endpoint
        if (flo * fhi > 0.0) continue;
        while (hi - lo > 1e-12) {
            const double mid = 0.5 * (lo + hi);
            const double fm = mixed_bc_det(cfg, mid, v);
            if (flo * fm <= 0.0) {
                hi = mid;
                fhi = fm;
            } else {
                lo = mid;
                flo = fm;
            }
        }
        const double h = 0.5 * (lo + hi);

        MixedBcRoot root;
        root.h = h;
        // null vector of the singular system, unit coefficient norm
        const BcSystem sys = bc_system(cfg, h, v);
        double A = sys.r01, B = -sys.r00;  // orthogonal to the first row
        const double n = std::hypot(A, B);
        A /= n;
        B /= n;
        root.coeff_cos = A;
        root.coeff_sin = B;
        const auto psi = [&](double x) { return A * std::cos(h * x) + B * std::sin(h * x); };
        const auto dpsi = [&](double x) { return h * (-A * std::sin(h * x) + B * std::cos(h * x)); };
        if (v == MixedBcVariant::ValueAtPlusA) {
            root.value_residual = std::abs(psi(cfg.a));
            root.deriv_residual = std::abs(dpsi(-cfg.a));
        } else {
            root.value_residual = std::abs(psi(-cfg.a));
            root.deriv_residual = std::abs(dpsi(cfg.a));
        }
        root.candidate_norm = std::sqrt(
            integrate([&](double x) { return psi(x) * psi(x); }, -cfg.a, cfg.a, 64));
        root.satisfies_bcs = root.value_residual <= 1e-10 &&
                             root.deriv_residual <= 1e-10 && root.candidate_norm > 1e-6;
        rep.nontrivial_solutions_found |= root.satisfies_bcs;
        rep.roots.push_back(root);
    }
    return rep;
}

bool family_has_doublets(Family f) { return f == Family::III || f == Family::IV; }

std::vector<ConvergenceRow> convergence_study(const WellConfig& cfg_base, Family f,
                                              double p_target, double window,
                                              const std::vector<double>& a_list,
                                              int sup_samples) {
    cfg_base.validate();
    if (!family_has_doublets(f))
        throw std::invalid_argument(
            "convergence_study: family " + to_string(f) +
            " has no equal-energy opposite-parity pair; only III and IV host doublets");
    if (!(p_target > 0.0)) throw std::invalid_argument("convergence_study: p_target must be > 0");
    if (!(window > 0.0)) throw std::invalid_argument("convergence_study: window must be > 0");
    for (double a : a_list)
        if (window > a)
            throw std::invalid_argument("convergence_study: window must fit inside every well");

    // L2-normalize samples of g over [-w, w] and take the sup difference.
    const int norm_panels = 64;
    const auto normalized_sup_diff = [&](const RealFn& g1, const RealFn& g2) {
        const double n1 = std::sqrt(
            integrate([&](double x) { return g1(x) * g1(x); }, -window, window, norm_panels));
        const double n2 = std::sqrt(
            integrate([&](double x) { return g2(x) * g2(x); }, -window, window, norm_panels));
        double sup = 0.0;
        for (int i = 0; i < sup_samples; ++i) {
            const double x = -window + 2.0 * window * i / (sup_samples - 1);
            sup = std::max(sup, std::abs(g1(x) / n1 - g2(x) / n2));
        }
        return sup;
    };

    std::vector<ConvergenceRow> rows;
    for (double a : a_list) {
        WellConfig cfg = cfg_base;
        cfg.a = a;
        const double step = cfg.grid_step();
        // family momenta: even grid indices for III, odd for IV
        const double ideal = p_target / step;
        const int lo_allowed = f == Family::III ? 2 : 1;
        int j;
        if (f == Family::III) {
            j = 2 * static_cast<int>(std::llround(ideal / 2.0));
        } else {
            j = 2 * static_cast<int>(std::llround((ideal - 1.0) / 2.0)) + 1;
        }
        if (j < lo_allowed) j = lo_allowed;
        // ties break toward the lower momentum
        const int j_down = j - 2;
        if (j_down >= lo_allowed &&
            std::abs(cfg.momentum(j_down) - p_target) <= std::abs(cfg.momentum(j) - p_target))
            j = j_down;

        ConvergenceRow row;
        row.a = a;
        row.grid_index = j;
        row.p_selected = cfg.momentum(j);
        row.momentum_gap = std::abs(row.p_selected - p_target);
        row.sup_error_even = normalized_sup_diff(
            [&](double x) { return eval_mode(cfg, {j, ModeKind::Cos}, x); },
            [&](double x) { return eval_free_doublet(cfg, p_target, +1, x); });
        row.sup_error_odd = normalized_sup_diff(
            [&](double x) { return eval_mode(cfg, {j, ModeKind::Sin}, x); },
            [&](double x) { return eval_free_doublet(cfg, p_target, -1, x); });
        rows.push_back(row);
    }
    return rows;
}

}  // namespace orthowell
