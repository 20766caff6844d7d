#pragma once

#include <string>
#include <vector>

#include "orthowell/core.hpp"
#include "orthowell/quadrature.hpp"

namespace orthowell {

struct BoundaryRecord {
    double value_hi = 0.0;   // S_N(+a)
    double value_lo = 0.0;   // S_N(-a)
    double deriv_hi = 0.0;   // S_N'(+a)
    double deriv_lo = 0.0;   // S_N'(-a)
    double sup_error = 0.0;  // max |f - S_N| over a dense sample of [-a, a]
};

struct ExpansionReport {
    Family family = Family::I;
    int cutoff = 0;
    std::vector<ModeId> modes;
    std::vector<double> coeffs;      // aligned with modes
    double f_norm_sq = 0.0;          // ||f||^2 over [-a, a]
    double coeff_energy = 0.0;       // sum of coeff^2
    double l2_residual = 0.0;        // ||f - S_N||_2
    double parseval_ratio = 0.0;     // coeff_energy / f_norm_sq
    BoundaryRecord boundary;

    double partial_sum(const WellConfig& cfg, double x) const;
    double partial_sum_derivative(const WellConfig& cfg, double x) const;
};

// Expansion coefficients <mode, f> by stabilized composite Gauss-Legendre
// quadrature, plus the Parseval budget and boundary diagnostics of the
// partial sum. Throws QuadratureError when a coefficient integral fails to
// stabilize under panel refinement.
ExpansionReport expand(const WellConfig& cfg, Family f, int J, const RealFn& fn,
                       int sup_samples = 2001);

// Residuals of the boundary identities each family obeys termwise,
// evaluated on the expansion of fn:
//   I  : S_N(+-a) = 0          II : S_N'(+-a) = 0
//   III: S_N(a) = S_N(-a) and S_N'(a) = S_N'(-a)
//   IV : S_N(a) = -S_N(-a)
struct BoundaryProbe {
    BoundaryRecord record;
    double family_residual = 0.0;  // the identity residual for this family
};
BoundaryProbe boundary_probe(const WellConfig& cfg, Family f, int J, const RealFn& fn);

// Antiperiodic mode at odd index 2n-1 assembled from the two periodic
// modes at index 2n and the half-angle rotation factors cos(pi x/(2a)),
// sin(pi x/(2a)). Pointwise equal to the mode itself.
double rotate_IV_from_III(const WellConfig& cfg, int n, int parity, double x);

struct GibbsRow {
    int cutoff = 0;
    double l2_residual = 0.0;
    double sup_error = 0.0;
    double parseval_ratio = 0.0;
};

// L2-vs-uniform convergence table for antiperiodic (family IV) expansions:
// the L2 residual decays while the sup-norm error near the boundary does
// not, whenever f(a) != -f(-a).
std::vector<GibbsRow> gibbs_study(const WellConfig& cfg, const std::vector<int>& cutoffs,
                                  const RealFn& fn);

// Named test functions for the CLI: const1, linear, square, triangle,
// gauss (with width sigma). Throws on unknown names.
RealFn builtin_function(const std::string& name, const WellConfig& cfg, double sigma = 0.5);
std::vector<std::string> builtin_function_names();

}  // namespace orthowell
