#pragma once

#include <vector>

#include <Eigen/Core>

#include "orthowell/core.hpp"

namespace orthowell {

// Overlap of two interval-restricted free doublet members (delta-normalized,
// even kind) at momenta p, p' > 0:
//   m/sqrt(p p') * ( sin(a(p-p')/hbar)/(pi(p-p')) + sin(a(p+p')/hbar)/(pi(p+p')) )
// Removable singularities are evaluated through sin(z)/z limits, so the
// diagonal p = p' is well defined and includes the oscillatory second term.
double kernel_free(const WellConfig& cfg, double p, double pprime);

// Pure-diagonal convention: m*a/(pi*hbar*p). Coincides with kernel_free on
// the quantization grid, where the second term's sine vanishes.
double kernel_free_diagonal(const WellConfig& cfg, double p);

// Closed-form overlap of two unit-normalized confined modes over [-a, a].
// Scale-free: independent of the well half-width.
double mode_overlap(const ModeId& lhs, const ModeId& rhs);

// Integer predicate for mode_overlap(lhs, rhs) == 0. Same-parity kinds
// (cos/const vs cos/const, sin vs sin) are orthogonal iff the grid indices
// have equal parity; opposite kinds are orthogonal outright.
bool modes_orthogonal(const ModeId& lhs, const ModeId& rhs);

struct GramReport {
    std::vector<ModeId> row_modes;
    std::vector<ModeId> col_modes;  // == row_modes for a single-family report
    Eigen::MatrixXd matrix;
    double max_offdiag = 0.0;   // cross report: max |entry| over same-parity pairs
    double max_diag_dev = 0.0;  // max |diag - 1|; 0 for cross reports
    bool is_orthonormal = false;
    double tol = 1e-12;
};

// Pairwise overlaps of one family's modes with j <= J, closed forms only.
GramReport gram_family(const WellConfig& cfg, Family f, int J, double tol = 1e-12);

// Rectangular overlaps between two distinct families. Opposite-kind pairs
// vanish by parity; the interesting entries are the same-kind ones.
GramReport gram_cross(const WellConfig& cfg, Family fa, Family fb, int J, double tol = 1e-12);

struct SiftResult {
    std::vector<std::vector<ModeId>> sets;  // maximal mutually orthogonal sets
    // For each set, the matching family if it equals enumerate_modes(f, J).
    std::vector<Family> matched;            // valid when matched_all
    bool matched_all = false;
};

// Enumerates all maximal mutually-orthogonal subsets of the mode pool
// {const, cos_j, sin_j : j <= J} under modes_orthogonal, via maximal-clique
// search. Sets come out sorted by (j, kind), families in I..IV order when
// they match. Throws on J < 2.
SiftResult sift_families(const WellConfig& cfg, int J);

}  // namespace orthowell
