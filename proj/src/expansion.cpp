#include "orthowell/expansion.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace orthowell {

namespace {

int base_panels(int J) { return std::max(32, 2 * J); }

}  // namespace

double ExpansionReport::partial_sum(const WellConfig& cfg, double x) const {
    double s = 0.0;
    for (std::size_t k = 0; k < modes.size(); ++k) s += coeffs[k] * eval_mode(cfg, modes[k], x);
    return s;
}

double ExpansionReport::partial_sum_derivative(const WellConfig& cfg, double x) const {
    double s = 0.0;
    for (std::size_t k = 0; k < modes.size(); ++k)
        s += coeffs[k] * eval_mode_derivative(cfg, modes[k], x);
    return s;
}

ExpansionReport expand(const WellConfig& cfg, Family f, int J, const RealFn& fn,
                       int sup_samples) {
    cfg.validate();
    if (J < 1) throw std::invalid_argument("expand: cutoff J must be >= 1");
    if (sup_samples < 2) throw std::invalid_argument("expand: need at least 2 sup samples");

    ExpansionReport rep;
    rep.family = f;
    rep.cutoff = J;
    rep.modes = enumerate_modes(f, J);
    rep.coeffs.resize(rep.modes.size());

    const double a = cfg.a;
    const int panels = base_panels(J);
    for (std::size_t k = 0; k < rep.modes.size(); ++k) {
        const ModeId m = rep.modes[k];
        rep.coeffs[k] = integrate_checked(
            [&](double x) { return fn(x) * eval_mode(cfg, m, x); }, -a, a, panels);
        rep.coeff_energy += rep.coeffs[k] * rep.coeffs[k];
    }

    rep.f_norm_sq = integrate_checked([&](double x) { return fn(x) * fn(x); }, -a, a, panels);
    const double resid_sq = integrate_checked(
        [&](double x) {
            const double d = fn(x) - rep.partial_sum(cfg, x);
            return d * d;
        },
        -a, a, panels, 1e-8);
    rep.l2_residual = std::sqrt(std::max(0.0, resid_sq));
    rep.parseval_ratio = rep.f_norm_sq > 0.0 ? rep.coeff_energy / rep.f_norm_sq : 0.0;

    rep.boundary.value_hi = rep.partial_sum(cfg, a);
    rep.boundary.value_lo = rep.partial_sum(cfg, -a);
    rep.boundary.deriv_hi = rep.partial_sum_derivative(cfg, a);
    rep.boundary.deriv_lo = rep.partial_sum_derivative(cfg, -a);
    double sup = 0.0;
    for (int i = 0; i < sup_samples; ++i) {
        const double x = -a + 2.0 * a * i / (sup_samples - 1);
        sup = std::max(sup, std::abs(fn(x) - rep.partial_sum(cfg, x)));
    }
    rep.boundary.sup_error = sup;
    return rep;
}

BoundaryProbe boundary_probe(const WellConfig& cfg, Family f, int J, const RealFn& fn) {
    const ExpansionReport rep = expand(cfg, f, J, fn);
    BoundaryProbe probe;
    probe.record = rep.boundary;
    const auto& b = rep.boundary;
    switch (f) {
        case Family::I:
            probe.family_residual = std::max(std::abs(b.value_hi), std::abs(b.value_lo));
            break;
        case Family::II:
            probe.family_residual = std::max(std::abs(b.deriv_hi), std::abs(b.deriv_lo));
            break;
        case Family::III:
            probe.family_residual =
                std::max(std::abs(b.value_hi - b.value_lo), std::abs(b.deriv_hi - b.deriv_lo));
            break;
        case Family::IV:
            probe.family_residual = std::abs(b.value_hi + b.value_lo);
            break;
    }
    return probe;
}

double rotate_IV_from_III(const WellConfig& cfg, int n, int parity, double x) {
    cfg.validate();
    if (n < 1) throw std::invalid_argument("rotate_IV_from_III: n must be >= 1");
    if (parity != 1 && parity != -1)
        throw std::invalid_argument("rotate_IV_from_III: parity must be +-1");
    const double half = std::numbers::pi * x / (2.0 * cfg.a);
    const double c = std::cos(half), s = std::sin(half);
    const double even_cos = eval_mode(cfg, {2 * n, ModeKind::Cos}, x);
    const double even_sin = eval_mode(cfg, {2 * n, ModeKind::Sin}, x);
    return parity > 0 ? c * even_cos + s * even_sin : c * even_sin - s * even_cos;
}

std::vector<GibbsRow> gibbs_study(const WellConfig& cfg, const std::vector<int>& cutoffs,
                                  const RealFn& fn) {
    std::vector<GibbsRow> rows;
    rows.reserve(cutoffs.size());
    for (int J : cutoffs) {
        const ExpansionReport rep = expand(cfg, Family::IV, J, fn);
        rows.push_back({J, rep.l2_residual, rep.boundary.sup_error, rep.parseval_ratio});
    }
    return rows;
}

RealFn builtin_function(const std::string& name, const WellConfig& cfg, double sigma) {
    cfg.validate();
    const double a = cfg.a;
    if (name == "const1") return [](double) { return 1.0; };
    if (name == "linear") return [](double x) { return x; };
    if (name == "square") return [](double x) { return x * x; };
    if (name == "triangle") return [a](double x) { return 1.0 - std::abs(x) / a; };
    if (name == "gauss") {
        if (!(sigma > 0.0)) throw std::invalid_argument("gauss width must be > 0");
        return [sigma](double x) { return std::exp(-x * x / (2.0 * sigma * sigma)); };
    }
    throw std::invalid_argument("unknown function '" + name +
                                "' (available: const1, linear, square, triangle, gauss)");
}

std::vector<std::string> builtin_function_names() {
    return {"const1", "linear", "square", "triangle", "gauss"};
}

}  // namespace orthowell
