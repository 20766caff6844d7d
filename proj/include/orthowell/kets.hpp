#pragma once

#include <complex>
#include <vector>

#include <Eigen/Core>

namespace orthowell::kets {

using Complex = std::complex<double>;

// Formal momentum label: sign * symbol, with the positive magnitude attached.
// Two symbols are enough: one for bra-side states, one for ket-side states.
enum class Symbol : int { P = 0, PPrime = 1 };

struct KetLabel {
    int sign = +1;            // +1 -> |+p>, -1 -> |-p>
    Symbol symbol = Symbol::P;
    double magnitude = 1.0;   // > 0; the sign lives in `sign`

    friend bool operator==(const KetLabel&, const KetLabel&) = default;
};

// Finite combination of momentum kets, all carrying the same symbol.
// Duplicate labels are merged by summing coefficients.
class FormalState {
public:
    FormalState() = default;
    explicit FormalState(Symbol s) : symbol_(s) {}
    // Builds from explicit labels; throws if they mix symbols.
    explicit FormalState(const std::vector<std::pair<Complex, KetLabel>>& terms);

    void add_term(Complex coeff, int sign, double magnitude);
    const std::vector<std::pair<Complex, KetLabel>>& terms() const { return terms_; }
    Symbol symbol() const { return symbol_; }
    FormalState scaled(Complex factor) const;

private:
    Symbol symbol_ = Symbol::P;
    std::vector<std::pair<Complex, KetLabel>> terms_;
};

// Inner product of two momentum-ket combinations, expressed on the two
// delta kinds the algebra produces:
//     <s*p | t*p'> = delta(p - p')  when s == t,
//                    delta(p + p')  when s != t.
// c_minus multiplies delta(p - p'), c_plus multiplies delta(p + p').
struct DeltaExpr {
    Complex c_minus{0.0, 0.0};
    Complex c_plus{0.0, 0.0};

    // Both coefficients agree.
    bool strict_equal(const DeltaExpr& o, double tol = 1e-12) const;
    // Only the delta(p - p') part must agree: for positive momenta the
    // delta(p + p') term has empty support and cannot fire.
    bool on_support_equal(const DeltaExpr& o, double tol = 1e-12) const;
};

// Bilinear expansion with conjugated bra coefficients. When bra and ket
// share a symbol the momenta are the same positive variable, so the
// delta(p + p') contributions are dropped. Throws if either state mixes
// symbols internally.
DeltaExpr inner(const FormalState& bra, const FormalState& ket);

// Which delta normalization a doublet is built to reproduce.
enum class DeltaNorm {
    MomentumSquared,  // <q|q'> = delta(q - q'), prefactor 1/(2 sqrt p)
    Energy            // <E|E'> = delta(E - E'), prefactor sqrt(m/(2p))
};

// The two orthogonal momentum-squared eigenstates at |p| = p:
//   parity +1:  (|p> + |-p>) / (2 sqrt p)
//   parity -1:  (|p> - |-p>) / (2 i sqrt p)
// With DeltaNorm::Energy the prefactor becomes sqrt(m/(2p)) (and -i for
// the odd member). Throws on p <= 0.
FormalState build_doublet(double p, int parity, Symbol symbol = Symbol::P,
                          DeltaNorm norm = DeltaNorm::MomentumSquared, double mass = 1.0);

// Constraint system a combination A|p> + B|-p> must satisfy to carry the
// delta(p^2 - p'^2) normalization:
//   |A|^2 + |B|^2          = 1/(2p)     (coefficient of delta(p - p'))
//   A conj(B) + conj(A) B  = +-1/(2p)   (coefficient of delta(p + p'))
struct DoubletConstraints {
    double p = 1.0;
    double norm_target = 0.5;        // 1/(2p)
    double cross_magnitude = 0.5;    // 1/(2p)

    double norm_residual(Complex A, Complex B) const;
    double cross_residual(Complex A, Complex B, int sign) const;
    bool satisfied(Complex A, Complex B, int sign, double tol = 1e-12) const;
};

DoubletConstraints solve_doublet_coefficients(double p);

// Result of the polar-parameterization scan of the + branch: A = r_A
// (global phase divided out), B = r_B e^{i dphi}. For every r_A on a grid
// the norm constraint fixes r_B and the cross constraint fixes dphi; the
// scan records every completion that satisfies both.
struct UniquenessScan {
    int solutions_found = 0;
    double max_deviation = 0.0;  // from (r_A, r_B, dphi) = (1/(2 sqrt p), same, 0)
};

// All solutions collapse onto the canonical point: a nonzero
// solutions_found with a tiny max_deviation certifies that the + branch
// is unique up to a global phase.
UniquenessScan plus_branch_uniqueness_scan(double p, int grid = 512, double tol = 1e-9);

// Sum of the two doublet outer products on the basis {|p>, |-p>}. Equals
// I/(2p); together with the measure d(p^2) = 2p dp this is the resolution
// of identity carried by the doublet pair.
Eigen::Matrix2cd completeness_check(double p);

int sign_of(double p);  // +1 / 0 / -1

}  // namespace orthowell::kets
