#pragma once

#include <vector>

#include <Eigen/Core>

#include "orthowell/core.hpp"

namespace orthowell {

enum class OperatorKind { Hamiltonian, Projector };

// Whether the j = 0 constant mode participates in operator sums. Families
// II and III own it once each, so either choice keeps the pairwise sum
// identities exact; including it matches the level tables.
enum class ConstantMode { Include, Omit };

// Truncated matrix of a confined-family operator on the reference basis
// (the periodic family III modes with j <= ref_cutoff, constant included).
struct OperatorMatrix {
    Family family = Family::I;
    OperatorKind kind = OperatorKind::Hamiltonian;
    int source_cutoff = 0;  // family modes with j <= this enter the sum
    int ref_cutoff = 0;
    Eigen::MatrixXd matrix;
};

// Reference basis modes: family III with j <= ref_cutoff.
std::vector<ModeId> reference_basis(int ref_cutoff);

// Coefficients of `mode` on the reference basis, by closed-form overlaps.
// Entry-exact unit vector when the mode itself belongs to family III.
Eigen::VectorXd rep_mode(const WellConfig& cfg, const ModeId& mode, int ref_cutoff);

// Sum of E(p_j) v_j v_j^T over family modes with j <= J, v_j = rep_mode.
OperatorMatrix build_hamiltonian(const WellConfig& cfg, Family f, int J, int ref_cutoff,
                                 ConstantMode cm = ConstantMode::Include);

// Same sum with E == 1.
OperatorMatrix build_projector(const WellConfig& cfg, Family f, int J, int ref_cutoff,
                               ConstantMode cm = ConstantMode::Include);

struct LinearDependenceReport {
    int source_cutoff = 0;
    int ref_cutoff = 0;
    double hamiltonian_residual = 0.0;  // max entry of |(H_I+H_II)-(H_III+H_IV)|
    double projector_residual = 0.0;    // same for the projectors
};

// The two sides enumerate the same modes, so both residuals sit at machine
// precision for any matched cutoff. Throws if the four inputs' cutoffs
// disagree (the overload taking prebuilt matrices).
LinearDependenceReport check_linear_dependence(const WellConfig& cfg, int J, int ref_cutoff,
                                               ConstantMode cm = ConstantMode::Include);
double pairwise_sum_residual(const OperatorMatrix& a, const OperatorMatrix& b,
                             const OperatorMatrix& c, const OperatorMatrix& d);

struct CommutatorReport {
    double comm_fro = 0.0;  // ||AB - BA||_F
    double a_fro = 0.0;
    double b_fro = 0.0;
};
CommutatorReport commutator_norm(const OperatorMatrix& A, const OperatorMatrix& B);

struct SpectralActionRow {
    ModeId mode;
    double energy = 0.0;
    double rel_residual = 0.0;  // ||H v - E v|| / (E ||v||), 0 for E = 0
};
struct SpectralActionReport {
    std::vector<SpectralActionRow> rows;
    double max_rel_residual = 0.0;
};

// Applies the truncated Hamiltonian to each family mode's representation
// and measures the eigen-action residual. `max_modes` = 0 checks all modes
// with j <= J.
SpectralActionReport spectral_action_check(const WellConfig& cfg, Family f, int J,
                                           int ref_cutoff, int max_modes = 0);

double idempotence_residual(const OperatorMatrix& P);  // ||P^2 - P||_F
double symmetry_residual(const OperatorMatrix& M);     // max entry of |M - M^T|

}  // namespace orthowell
