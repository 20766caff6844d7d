#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace orthowell {

// Physical configuration of the interval [-a, a] the particle is confined to.
// The admissible momenta live on the grid p_j = j*pi*hbar/(2a), j = 0,1,2,...
struct WellConfig {
    double a = 1.0;     // half-width of the interval
    double hbar = 1.0;
    double mass = 1.0;

    void validate() const;               // throws std::invalid_argument
    double grid_step() const;            // pi*hbar/(2a)
    double momentum(int j) const;        // p_j = j * grid_step()
};

// Trig kind of a confined mode. Enumerator order fixes the (j, kind) sort
// order used everywhere: the constant mode first, then cos before sin.
enum class ModeKind : std::uint8_t { Const = 0, Cos = 1, Sin = 2 };

// One confined mode: grid index j plus trig kind.
//   Const: 1/sqrt(2a)                  (j = 0 only)
//   Cos:   cos(j*pi*x/(2a))/sqrt(a)    (j >= 1)
//   Sin:   sin(j*pi*x/(2a))/sqrt(a)    (j >= 1; identically zero at j = 0)
struct ModeId {
    int j = 0;
    ModeKind kind = ModeKind::Const;

    friend auto operator<=>(const ModeId&, const ModeId&) = default;
};

bool mode_is_valid(const ModeId& m);
int parity(const ModeId& m);             // +1 for Cos/Const, -1 for Sin
std::string to_string(const ModeId& m);  // e.g. "2-" , "0+", "3+"

// The four maximal orthonormal families of confined modes:
//   I   : cos at odd j, sin at even j      (modes vanish at +-a)
//   II  : const, cos at even j, sin at odd j  (mode derivatives vanish at +-a)
//   III : const, cos and sin at even j     (periodic; the Fourier basis)
//   IV  : cos and sin at odd j             (antiperiodic)
enum class Family : std::uint8_t { I, II, III, IV };

std::string to_string(Family f);
Family family_from_string(const std::string& s);  // "I".."IV"

bool family_contains(Family f, const ModeId& m);

// All family members with j <= J, sorted by (j, kind). Throws on J < 1.
std::vector<ModeId> enumerate_modes(Family f, int J);

// Mode amplitude at x. Zero outside [-a, a]: the modes are restrictions of
// plane-wave combinations to the interval and carry no support beyond it.
double eval_mode(const WellConfig& cfg, const ModeId& m, double x);

// d/dx of the mode, also zero outside [-a, a].
double eval_mode_derivative(const WellConfig& cfg, const ModeId& m, double x);

// E_j = p_j^2 / (2m). E_0 = 0.
double energy_of(const WellConfig& cfg, int j);

// Unconfined doublet member at |p| = p_abs:
//   sqrt(m/(pi*hbar*p)) * cos(p x / hbar)   for parity +1
//   sqrt(m/(pi*hbar*p)) * sin(p x / hbar)   for parity -1
// Defined for all x. Throws on p_abs <= 0 or parity not in {-1, +1}.
double eval_free_doublet(const WellConfig& cfg, double p_abs, int par, double x);

}  // namespace orthowell
