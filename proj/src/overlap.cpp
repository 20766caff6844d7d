#include "orthowell/overlap.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "orthowell/parallel.hpp"

namespace orthowell {

namespace {

constexpr double kPi = std::numbers::pi;

double sinc(double z) {
    if (std::abs(z) < 1e-8) return 1.0 - z * z / 6.0;
    return std::sin(z) / z;
}

// integral of cos(n t) over [-pi/2, pi/2]; exactly zero for even n != 0.
double cos_moment(int n) {
    n = std::abs(n);
    if (n == 0) return kPi;
    if (n % 2 == 0) return 0.0;
    const double s = (n % 4 == 1) ? 1.0 : -1.0;  // sin(n pi/2) for odd n
    return 2.0 * s / n;
}

bool cos_like(ModeKind k) { return k != ModeKind::Sin; }

}  // namespace

double kernel_free(const WellConfig& cfg, double p, double pprime) {
    cfg.validate();
    if (!(p > 0.0) || !(pprime > 0.0))
        throw std::invalid_argument("kernel_free: momenta must be > 0");
    const double scale = cfg.a / cfg.hbar;
    const double base = cfg.mass * cfg.a / (kPi * cfg.hbar * std::sqrt(p * pprime));
    return base * (sinc(scale * (p - pprime)) + sinc(scale * (p + pprime)));
}

double kernel_free_diagonal(const WellConfig& cfg, double p) {
    cfg.validate();
    if (!(p > 0.0)) throw std::invalid_argument("kernel_free_diagonal: momentum must be > 0");
    return cfg.mass * cfg.a / (kPi * cfg.hbar * p);
}

double mode_overlap(const ModeId& lhs, const ModeId& rhs) {
    if (!mode_is_valid(lhs) || !mode_is_valid(rhs))
        throw std::invalid_argument("mode_overlap: invalid mode");
    if (cos_like(lhs.kind) != cos_like(rhs.kind)) return 0.0;  // odd integrand
    if (lhs.kind == ModeKind::Sin) {
        return (cos_moment(lhs.j - rhs.j) - cos_moment(lhs.j + rhs.j)) / kPi;
    }
    if (lhs.kind == ModeKind::Const && rhs.kind == ModeKind::Const) return 1.0;
    if (lhs.kind == ModeKind::Const) return std::sqrt(2.0) / kPi * cos_moment(rhs.j);
    if (rhs.kind == ModeKind::Const) return std::sqrt(2.0) / kPi * cos_moment(lhs.j);
    return (cos_moment(lhs.j - rhs.j) + cos_moment(lhs.j + rhs.j)) / kPi;
}

bool modes_orthogonal(const ModeId& lhs, const ModeId& rhs) {
    if (cos_like(lhs.kind) != cos_like(rhs.kind)) return true;
    // same trig parity class: orthogonal iff the grid indices have equal
    // parity (and the modes are not one and the same)
    if (lhs == rhs) return false;
    return (lhs.j - rhs.j) % 2 == 0;
}

namespace {

GramReport build_gram(const WellConfig& cfg, std::vector<ModeId> rows, std::vector<ModeId> cols,
                      bool square, double tol) {
    cfg.validate();
    GramReport rep;
    rep.tol = tol;
    rep.row_modes = std::move(rows);
    rep.col_modes = std::move(cols);
    const auto nr = rep.row_modes.size();
    const auto nc = rep.col_modes.size();
    rep.matrix.resize(static_cast<Eigen::Index>(nr), static_cast<Eigen::Index>(nc));
    parallel_for(nr, [&](std::size_t r) {
        for (std::size_t c = 0; c < nc; ++c)
            rep.matrix(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
                mode_overlap(rep.row_modes[r], rep.col_modes[c]);
    });
    if (square) {
        for (std::size_t r = 0; r < nr; ++r) {
            for (std::size_t c = 0; c < nc; ++c) {
                const double v = rep.matrix(r, c);
                if (r == c)
                    rep.max_diag_dev = std::max(rep.max_diag_dev, std::abs(v - 1.0));
                else
                    rep.max_offdiag = std::max(rep.max_offdiag, std::abs(v));
            }
        }
        rep.is_orthonormal = rep.max_offdiag <= tol && rep.max_diag_dev <= tol;
    } else {
        for (std::size_t r = 0; r < nr; ++r) {
            for (std::size_t c = 0; c < nc; ++c) {
                if (cos_like(rep.row_modes[r].kind) != cos_like(rep.col_modes[c].kind)) continue;
                rep.max_offdiag = std::max(rep.max_offdiag, std::abs(rep.matrix(r, c)));
            }
        }
        rep.is_orthonormal = false;
    }
    return rep;
}

}  // namespace

GramReport gram_family(const WellConfig& cfg, Family f, int J, double tol) {
    auto modes = enumerate_modes(f, J);
    return build_gram(cfg, modes, modes, /*square=*/true, tol);
}

GramReport gram_cross(const WellConfig& cfg, Family fa, Family fb, int J, double tol) {
    if (fa == fb) throw std::invalid_argument("gram_cross: families must differ");
    return build_gram(cfg, enumerate_modes(fa, J), enumerate_modes(fb, J), /*square=*/false, tol);
}

namespace {

// Bron-Kerbosch with pivoting over the orthogonality-compatibility graph.
void bron_kerbosch(const std::vector<std::vector<bool>>& adj, std::vector<int>& R,
                   std::vector<int> P, std::vector<int> X,
                   std::vector<std::vector<int>>& cliques) {
    if (P.empty() && X.empty()) {
        cliques.push_back(R);
        return;
    }
    // pivot: vertex of P u X with the most neighbours in P
    int pivot = -1;
    std::size_t best = 0;
    for (const auto& pool : {P, X}) {
        for (int u : pool) {
            std::size_t deg = 0;
            for (int v : P)
                if (adj[u][v]) ++deg;
            if (pivot < 0 || deg > best) {
                pivot = u;
                best = deg;
            }
        }
    }
    std::vector<int> candidates;
    for (int v : P)
        if (pivot < 0 || !adj[pivot][v]) candidates.push_back(v);
    for (int v : candidates) {
        std::vector<int> P2, X2;
        for (int w : P)
            if (adj[v][w]) P2.push_back(w);
        for (int w : X)
            if (adj[v][w]) X2.push_back(w);
        R.push_back(v);
        bron_kerbosch(adj, R, std::move(P2), std::move(X2), cliques);
        R.pop_back();
        P.erase(std::find(P.begin(), P.end(), v));
        X.push_back(v);
    }
}

}  // namespace

SiftResult sift_families(const WellConfig& cfg, int J) {
    cfg.validate();
    if (J < 2) throw std::invalid_argument("sift_families: cutoff J must be >= 2");

    std::vector<ModeId> pool;
    pool.push_back({0, ModeKind::Const});
    for (int j = 1; j <= J; ++j) {
        pool.push_back({j, ModeKind::Cos});
        pool.push_back({j, ModeKind::Sin});
    }
    const int n = static_cast<int>(pool.size());
    std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
    for (int i = 0; i < n; ++i)
        for (int k = i + 1; k < n; ++k)
            adj[i][k] = adj[k][i] = modes_orthogonal(pool[i], pool[k]);

    std::vector<std::vector<int>> cliques;
    std::vector<int> R, P(n), X;
    for (int i = 0; i < n; ++i) P[i] = i;
    bron_kerbosch(adj, R, std::move(P), std::move(X), cliques);

    SiftResult result;
    for (auto& c : cliques) {
        std::vector<ModeId> set;
        set.reserve(c.size());
        for (int idx : c) set.push_back(pool[idx]);
        std::sort(set.begin(), set.end());
        result.sets.push_back(std::move(set));
    }
    std::sort(result.sets.begin(), result.sets.end());

    // match discovered sets against the four families
    std::vector<std::vector<ModeId>> ordered;
    std::vector<Family> matched;
    for (Family f : {Family::I, Family::II, Family::III, Family::IV}) {
        const auto expect = enumerate_modes(f, J);
        auto it = std::find(result.sets.begin(), result.sets.end(), expect);
        if (it != result.sets.end()) {
            ordered.push_back(*it);
            matched.push_back(f);
            result.sets.erase(it);
        }
    }
    result.matched_all = result.sets.empty() && matched.size() == 4;
    // leftovers (none expected) stay appended after the matched sets
    for (auto& s : result.sets) ordered.push_back(std::move(s));
    result.sets = std::move(ordered);
    result.matched = std::move(matched);
    return result;
}

}  // namespace orthowell
