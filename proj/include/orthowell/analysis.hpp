#pragma once

#include <vector>

#include "orthowell/core.hpp"

namespace orthowell {

// Which end carries the value condition in the mixed boundary problem:
//   ValueAtPlusA : psi(+a) = 0 and psi'(-a) = 0
//   ValueAtMinusA: psi(-a) = 0 and psi'(+a) = 0  (mirror image)
enum class MixedBcVariant { ValueAtPlusA, ValueAtMinusA };

// Determinant of the 2x2 linear system the ansatz psi = A cos(hx) + B sin(hx)
// must satisfy under the mixed conditions. Equals cos(2ha) for both variants.
double mixed_bc_det(const WellConfig& cfg, double h, MixedBcVariant v = MixedBcVariant::ValueAtPlusA);

struct MixedBcRoot {
    double h = 0.0;
    double coeff_cos = 0.0;  // A of the null-space candidate, unit coefficient norm
    double coeff_sin = 0.0;  // B
    double value_residual = 0.0;  // |psi| at the value end
    double deriv_residual = 0.0;  // |psi'| at the derivative end
    double candidate_norm = 0.0;  // L2 norm of psi over [-a, a] (nontriviality)
    bool satisfies_bcs = false;
};

struct MixedBcReport {
    MixedBcVariant variant = MixedBcVariant::ValueAtPlusA;
    std::vector<double> h_grid;
    std::vector<double> det_values;
    std::vector<MixedBcRoot> roots;
    // The determinant does vanish, and each root carries a nontrivial
    // candidate satisfying both conditions: a sign-by-sign derivation that
    // the system only admits the trivial solution does not survive the
    // numerics, and the report says so.
    bool nontrivial_solutions_found = false;
};

// Scans the determinant over h in [0, h_max], bisects every sign change to
// 1e-12 and evaluates the null-space candidate at each root directly.
MixedBcReport mixed_bc_scan(const WellConfig& cfg, double h_max, int samples,
                            MixedBcVariant v = MixedBcVariant::ValueAtPlusA);

struct ConvergenceRow {
    double a = 0.0;
    int grid_index = 0;       // selected family index j
    double p_selected = 0.0;  // j * pi * hbar / (2a)
    double momentum_gap = 0.0;
    double sup_error_even = 0.0;  // cos members, L2-normalized over the window
    double sup_error_odd = 0.0;   // sin members
};

// Compares the confined doublet at the family momentum nearest p_target
// against the unconfined doublet at p_target, both L2-normalized over
// [-w, w], for a sequence of widening wells. Only families III and IV carry
// doublets (two opposite-parity modes per energy); I and II are rejected.
std::vector<ConvergenceRow> convergence_study(const WellConfig& cfg_base, Family f,
                                              double p_target, double window,
                                              const std::vector<double>& a_list,
                                              int sup_samples = 2001);

// True when every nonzero-energy level of the family holds exactly two
// opposite-parity modes (families III, IV); families I and II hold one.
bool family_has_doublets(Family f);

}  // namespace orthowell
