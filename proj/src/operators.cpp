#include "orthowell/operators.hpp"

#include <cmath>
#include <stdexcept>

#include "orthowell/overlap.hpp"
#include "orthowell/parallel.hpp"

namespace orthowell {

std::vector<ModeId> reference_basis(int ref_cutoff) {
    return enumerate_modes(Family::III, ref_cutoff);
}

Eigen::VectorXd rep_mode(const WellConfig& cfg, const ModeId& mode, int ref_cutoff) {
    cfg.validate();
    if (!mode_is_valid(mode)) throw std::invalid_argument("rep_mode: invalid mode");
    const auto ref = reference_basis(ref_cutoff);
    Eigen::VectorXd v(static_cast<Eigen::Index>(ref.size()));
    for (std::size_t i = 0; i < ref.size(); ++i)
        v(static_cast<Eigen::Index>(i)) = mode_overlap(ref[i], mode);
    return v;
}

namespace {

OperatorMatrix build_operator(const WellConfig& cfg, Family f, int J, int ref_cutoff,
                              OperatorKind kind, ConstantMode cm) {
    cfg.validate();
    if (ref_cutoff < 1) throw std::invalid_argument("ref_cutoff must be >= 1");
    auto modes = enumerate_modes(f, J);
    if (cm == ConstantMode::Omit)
        std::erase_if(modes, [](const ModeId& m) { return m.kind == ModeKind::Const; });

    const auto ref = reference_basis(ref_cutoff);
    const Eigen::Index M = static_cast<Eigen::Index>(ref.size());

    // one outer product per mode, accumulated in mode order
    std::vector<Eigen::VectorXd> reps(modes.size());
    parallel_for(modes.size(), [&](std::size_t k) { reps[k] = rep_mode(cfg, modes[k], ref_cutoff); });

    OperatorMatrix op;
    op.family = f;
    op.kind = kind;
    op.source_cutoff = J;
    op.ref_cutoff = ref_cutoff;
    op.matrix = Eigen::MatrixXd::Zero(M, M);
    for (std::size_t k = 0; k < modes.size(); ++k) {
        const double w = kind == OperatorKind::Hamiltonian ? energy_of(cfg, modes[k].j) : 1.0;
        if (w == 0.0) continue;
        op.matrix.noalias() += w * reps[k] * reps[k].transpose();
    }
    return op;
}

}  // namespace

OperatorMatrix build_hamiltonian(const WellConfig& cfg, Family f, int J, int ref_cutoff,
                                 ConstantMode cm) {
    return build_operator(cfg, f, J, ref_cutoff, OperatorKind::Hamiltonian, cm);
}

OperatorMatrix build_projector(const WellConfig& cfg, Family f, int J, int ref_cutoff,
                               ConstantMode cm) {
    return build_operator(cfg, f, J, ref_cutoff, OperatorKind::Projector, cm);
}

double pairwise_sum_residual(const OperatorMatrix& a, const OperatorMatrix& b,
                             const OperatorMatrix& c, const OperatorMatrix& d) {
    for (const OperatorMatrix* m : {&b, &c, &d}) {
        if (m->source_cutoff != a.source_cutoff)
            throw std::invalid_argument("pairwise_sum_residual: source cutoffs must match");
        if (m->ref_cutoff != a.ref_cutoff)
            throw std::invalid_argument("pairwise_sum_residual: reference cutoffs must match");
    }
    return ((a.matrix + b.matrix) - (c.matrix + d.matrix)).cwiseAbs().maxCoeff();
}

LinearDependenceReport check_linear_dependence(const WellConfig& cfg, int J, int ref_cutoff,
                                               ConstantMode cm) {
    LinearDependenceReport rep;
    rep.source_cutoff = J;
    rep.ref_cutoff = ref_cutoff;
    const auto HI = build_hamiltonian(cfg, Family::I, J, ref_cutoff, cm);
    const auto HII = build_hamiltonian(cfg, Family::II, J, ref_cutoff, cm);
    const auto HIII = build_hamiltonian(cfg, Family::III, J, ref_cutoff, cm);
    const auto HIV = build_hamiltonian(cfg, Family::IV, J, ref_cutoff, cm);
    rep.hamiltonian_residual = pairwise_sum_residual(HI, HII, HIII, HIV);
    const auto PI = build_projector(cfg, Family::I, J, ref_cutoff, cm);
    const auto PII = build_projector(cfg, Family::II, J, ref_cutoff, cm);
    const auto PIII = build_projector(cfg, Family::III, J, ref_cutoff, cm);
    const auto PIV = build_projector(cfg, Family::IV, J, ref_cutoff, cm);
    rep.projector_residual = pairwise_sum_residual(PI, PII, PIII, PIV);
    return rep;
}

CommutatorReport commutator_norm(const OperatorMatrix& A, const OperatorMatrix& B) {
    if (A.matrix.rows() != B.matrix.rows() || A.matrix.cols() != B.matrix.cols() ||
        A.ref_cutoff != B.ref_cutoff)
        throw std::invalid_argument("commutator_norm: operator dimensions must match");
    CommutatorReport rep;
    rep.comm_fro = (A.matrix * B.matrix - B.matrix * A.matrix).norm();
    rep.a_fro = A.matrix.norm();
    rep.b_fro = B.matrix.norm();
    return rep;
}

SpectralActionReport spectral_action_check(const WellConfig& cfg, Family f, int J,
                                           int ref_cutoff, int max_modes) {
    const auto H = build_hamiltonian(cfg, f, J, ref_cutoff);
    auto modes = enumerate_modes(f, J);
    if (max_modes > 0 && static_cast<int>(modes.size()) > max_modes)
        modes.resize(static_cast<std::size_t>(max_modes));

    SpectralActionReport rep;
    for (const ModeId& m : modes) {
        SpectralActionRow row;
        row.mode = m;
        row.energy = energy_of(cfg, m.j);
        const Eigen::VectorXd v = rep_mode(cfg, m, ref_cutoff);
        if (row.energy > 0.0) {
            const Eigen::VectorXd r = H.matrix * v - row.energy * v;
            row.rel_residual = r.norm() / (row.energy * v.norm());
        } else {
            // zero-momentum mode: H annihilates it identically
            row.rel_residual = (H.matrix * v).norm();
        }
        rep.max_rel_residual = std::max(rep.max_rel_residual, row.rel_residual);
        rep.rows.push_back(row);
    }
    return rep;
}

double idempotence_residual(const OperatorMatrix& P) {
    return (P.matrix * P.matrix - P.matrix).norm();
}

double symmetry_residual(const OperatorMatrix& M) {
    return (M.matrix - M.matrix.transpose()).cwiseAbs().maxCoeff();
}

}  // namespace orthowell
