#include "orthowell/kets.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace orthowell::kets {

FormalState::FormalState(const std::vector<std::pair<Complex, KetLabel>>& terms) {
    if (terms.empty()) return;
    symbol_ = terms.front().second.symbol;
    for (const auto& [c, l] : terms) {
        if (l.symbol != symbol_)
            throw std::invalid_argument("FormalState: terms mix momentum symbols");
        add_term(c, l.sign, l.magnitude);
    }
}

void FormalState::add_term(Complex coeff, int sign, double magnitude) {
    if (sign != +1 && sign != -1) throw std::invalid_argument("ket sign must be +-1");
    if (!(magnitude > 0.0)) throw std::invalid_argument("ket momentum magnitude must be > 0");
    const KetLabel label{sign, symbol_, magnitude};
    for (auto& [c, l] : terms_) {
        if (l == label) {
            c += coeff;
            return;
        }
    }
    terms_.emplace_back(coeff, label);
}

FormalState FormalState::scaled(Complex factor) const {
    FormalState out(symbol_);
    for (const auto& [c, l] : terms_) out.add_term(factor * c, l.sign, l.magnitude);
    return out;
}

bool DeltaExpr::strict_equal(const DeltaExpr& o, double tol) const {
    return std::abs(c_minus - o.c_minus) <= tol && std::abs(c_plus - o.c_plus) <= tol;
}

bool DeltaExpr::on_support_equal(const DeltaExpr& o, double tol) const {
    return std::abs(c_minus - o.c_minus) <= tol;
}

namespace {
void check_single_symbol(const FormalState& s, const char* which) {
    for (const auto& [c, l] : s.terms()) {
        if (l.symbol != s.symbol())
            throw std::invalid_argument(std::string("inner: ") + which + " state mixes momentum symbols");
    }
}
}  // namespace

DeltaExpr inner(const FormalState& bra, const FormalState& ket) {
    check_single_symbol(bra, "bra");
    check_single_symbol(ket, "ket");
    const bool same_symbol = bra.symbol() == ket.symbol();
    DeltaExpr out;
    for (const auto& [cb, lb] : bra.terms()) {
        for (const auto& [ck, lk] : ket.terms()) {
            const Complex w = std::conj(cb) * ck;
            if (lb.sign == lk.sign) {
                out.c_minus += w;
            } else if (!same_symbol) {
                // delta(p + p') never fires for a shared positive variable
                out.c_plus += w;
            }
        }
    }
    return out;
}

FormalState build_doublet(double p, int parity, Symbol symbol, DeltaNorm norm, double mass) {
    if (!(p > 0.0)) throw std::invalid_argument("build_doublet: momentum must be > 0");
    if (parity != 1 && parity != -1) throw std::invalid_argument("build_doublet: parity must be +-1");
    Complex pref;
    if (norm == DeltaNorm::MomentumSquared) {
        pref = Complex(1.0 / (2.0 * std::sqrt(p)), 0.0);
    } else {
        if (!(mass > 0.0)) throw std::invalid_argument("build_doublet: mass must be > 0");
        pref = Complex(std::sqrt(mass / (2.0 * p)), 0.0);
    }
    FormalState s(symbol);
    if (parity > 0) {
        s.add_term(pref, +1, p);
        s.add_term(pref, -1, p);
    } else {
        // 1/(2i sqrt p) = -i/(2 sqrt p); the energy-normalized odd member
        // carries -i sqrt(m/(2p)).
        const Complex ipref = pref * Complex(0.0, -1.0);
        s.add_term(ipref, +1, p);
        s.add_term(-ipref, -1, p);
    }
    return s;
}

double DoubletConstraints::norm_residual(Complex A, Complex B) const {
    return std::abs(std::norm(A) + std::norm(B) - norm_target);
}

double DoubletConstraints::cross_residual(Complex A, Complex B, int sign) const {
    const Complex cross = A * std::conj(B) + std::conj(A) * B;
    return std::abs(cross - Complex(sign * cross_magnitude, 0.0));
}

bool DoubletConstraints::satisfied(Complex A, Complex B, int sign, double tol) const {
    return norm_residual(A, B) <= tol && cross_residual(A, B, sign) <= tol;
}

DoubletConstraints solve_doublet_coefficients(double p) {
    if (!(p > 0.0)) throw std::invalid_argument("solve_doublet_coefficients: momentum must be > 0");
    return DoubletConstraints{p, 1.0 / (2.0 * p), 1.0 / (2.0 * p)};
}

UniquenessScan plus_branch_uniqueness_scan(double p, int grid, double tol) {
    const DoubletConstraints c = solve_doublet_coefficients(p);
    const double r_canon = 1.0 / (2.0 * std::sqrt(p));
    const double r_max = 1.0 / std::sqrt(2.0 * p);  // largest r_A the norm allows

    // Complete a trial r_A optimally: the norm constraint fixes r_B, the
    // cross constraint fixes the phase up to clamping. Returns the residual
    // of the best completion.
    struct Completion {
        Complex A, B;
        double dphi;
        double residual;
    };
    const auto complete = [&](double r_a) -> Completion {
        const double rb2 = std::max(0.0, c.norm_target - r_a * r_a);
        const double r_b = std::sqrt(rb2);
        const double denom = 2.0 * r_a * r_b;
        const double cosd = denom > 0.0 ? c.cross_magnitude / denom : 2.0;
        const double dphi = std::acos(std::clamp(cosd, -1.0, 1.0));
        const Complex A(r_a, 0.0);
        const Complex B = std::polar(r_b, dphi);
        return {A, B, dphi, c.norm_residual(A, B) + c.cross_residual(A, B, +1)};
    };

    UniquenessScan scan;
    const auto record = [&](const Completion& comp, double r_a) {
        if (!c.satisfied(comp.A, comp.B, +1, tol)) return;
        ++scan.solutions_found;
        const double dev = std::max({std::abs(r_a - r_canon),
                                     std::abs(std::abs(comp.B) - r_canon), std::abs(comp.dphi)});
        scan.max_deviation = std::max(scan.max_deviation, dev);
    };

    // coarse sweep: any solution far from the canonical radius would be
    // caught here; ternary refinement around each local minimum then pins
    // the actual solution set
    double best_r = r_canon, best_res = complete(r_canon).residual;
    for (int ia = 1; ia < grid; ++ia) {
        const double r_a = r_max * ia / grid;
        const Completion comp = complete(r_a);
        record(comp, r_a);
        if (comp.residual < best_res) {
            best_res = comp.residual;
            best_r = r_a;
        }
    }
    double lo = std::max(0.0, best_r - r_max / grid), hi = std::min(r_max, best_r + r_max / grid);
    for (int it = 0; it < 200 && hi - lo > 1e-15; ++it) {
        const double m1 = lo + (hi - lo) / 3.0, m2 = hi - (hi - lo) / 3.0;
        if (complete(m1).residual <= complete(m2).residual)
            hi = m2;
        else
            lo = m1;
    }
    const double r_star = 0.5 * (lo + hi);
    record(complete(r_star), r_star);
    return scan;
}

Eigen::Matrix2cd completeness_check(double p) {
    if (!(p > 0.0)) throw std::invalid_argument("completeness_check: momentum must be > 0");
    Eigen::Matrix2cd sum = Eigen::Matrix2cd::Zero();
    for (int par : {+1, -1}) {
        const FormalState s = build_doublet(p, par);
        Eigen::Vector2cd v = Eigen::Vector2cd::Zero();
        for (const auto& [coeff, label] : s.terms()) v(label.sign > 0 ? 0 : 1) = coeff;
        sum += v * v.adjoint();
    }
    return sum;
}

int sign_of(double p) { return p > 0.0 ? 1 : (p < 0.0 ? -1 : 0); }

}  // namespace orthowell::kets
