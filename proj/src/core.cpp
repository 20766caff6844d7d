#include "orthowell/core.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace orthowell {

namespace {
constexpr double kPi = std::numbers::pi;
}

void WellConfig::validate() const {
    if (!(a > 0.0)) throw std::invalid_argument("WellConfig: half-width a must be > 0");
    if (!(hbar > 0.0)) throw std::invalid_argument("WellConfig: hbar must be > 0");
    if (!(mass > 0.0)) throw std::invalid_argument("WellConfig: mass must be > 0");
}

double WellConfig::grid_step() const { return kPi * hbar / (2.0 * a); }

double WellConfig::momentum(int j) const {
    if (j < 0) throw std::invalid_argument("momentum: grid index must be >= 0");
    return static_cast<double>(j) * grid_step();
}

bool mode_is_valid(const ModeId& m) {
    if (m.j < 0) return false;
    if (m.kind == ModeKind::Const) return m.j == 0;
    return m.j >= 1;  // sin(0) is identically zero, cos(0) is the constant
}

int parity(const ModeId& m) { return m.kind == ModeKind::Sin ? -1 : +1; }

std::string to_string(const ModeId& m) {
    return std::to_string(m.j) + (parity(m) > 0 ? "+" : "-");
}

std::string to_string(Family f) {
    switch (f) {
        case Family::I: return "I";
        case Family::II: return "II";
        case Family::III: return "III";
        case Family::IV: return "IV";
    }
    throw std::logic_error("bad Family");
}

Family family_from_string(const std::string& s) {
    if (s == "I" || s == "1") return Family::I;
    if (s == "II" || s == "2") return Family::II;
    if (s == "III" || s == "3") return Family::III;
    if (s == "IV" || s == "4") return Family::IV;
    throw std::invalid_argument("unknown family '" + s + "' (expected I, II, III or IV)");
}

bool family_contains(Family f, const ModeId& m) {
    if (!mode_is_valid(m)) return false;
    const bool even = m.j % 2 == 0;
    switch (f) {
        case Family::I:
            return (m.kind == ModeKind::Cos && !even) || (m.kind == ModeKind::Sin && even);
        case Family::II:
            return m.kind == ModeKind::Const || (m.kind == ModeKind::Cos && even) ||
                   (m.kind == ModeKind::Sin && !even);
        case Family::III:
            return m.kind == ModeKind::Const || even;
        case Family::IV:
            return m.kind != ModeKind::Const && !even;
    }
    return false;
}

std::vector<ModeId> enumerate_modes(Family f, int J) {
    if (J < 1) throw std::invalid_argument("enumerate_modes: cutoff J must be >= 1");
    std::vector<ModeId> out;
    for (int j = 0; j <= J; ++j) {
        for (ModeKind k : {ModeKind::Const, ModeKind::Cos, ModeKind::Sin}) {
            ModeId m{j, k};
            if (mode_is_valid(m) && family_contains(f, m)) out.push_back(m);
        }
    }
    return out;
}

double eval_mode(const WellConfig& cfg, const ModeId& m, double x) {
    cfg.validate();
    if (!mode_is_valid(m)) throw std::invalid_argument("eval_mode: invalid mode " + to_string(m));
    if (std::abs(x) > cfg.a) return 0.0;
    const double arg = static_cast<double>(m.j) * kPi * x / (2.0 * cfg.a);
    switch (m.kind) {
        case ModeKind::Const: return 1.0 / std::sqrt(2.0 * cfg.a);
        case ModeKind::Cos: return std::cos(arg) / std::sqrt(cfg.a);
        case ModeKind::Sin: return std::sin(arg) / std::sqrt(cfg.a);
    }
    throw std::logic_error("bad ModeKind");
}

double eval_mode_derivative(const WellConfig& cfg, const ModeId& m, double x) {
    cfg.validate();
    if (!mode_is_valid(m)) throw std::invalid_argument("eval_mode_derivative: invalid mode");
    if (std::abs(x) > cfg.a) return 0.0;
    const double k = static_cast<double>(m.j) * kPi / (2.0 * cfg.a);
    const double arg = k * x;
    switch (m.kind) {
        case ModeKind::Const: return 0.0;
        case ModeKind::Cos: return -k * std::sin(arg) / std::sqrt(cfg.a);
        case ModeKind::Sin: return k * std::cos(arg) / std::sqrt(cfg.a);
    }
    throw std::logic_error("bad ModeKind");
}

double energy_of(const WellConfig& cfg, int j) {
    cfg.validate();
    const double p = cfg.momentum(j);
    return p * p / (2.0 * cfg.mass);
}

double eval_free_doublet(const WellConfig& cfg, double p_abs, int par, double x) {
    cfg.validate();
    if (!(p_abs > 0.0)) throw std::invalid_argument("eval_free_doublet: momentum must be > 0");
    if (par != 1 && par != -1) throw std::invalid_argument("eval_free_doublet: parity must be +-1");
    const double amp = std::sqrt(cfg.mass / (kPi * cfg.hbar * p_abs));
    const double arg = p_abs * x / cfg.hbar;
    return par > 0 ? amp * std::cos(arg) : amp * std::sin(arg);
}

}  // namespace orthowell
