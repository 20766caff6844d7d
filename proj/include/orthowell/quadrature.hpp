#pragma once

#include <functional>
#include <stdexcept>
#include <vector>

namespace orthowell {

using RealFn = std::function<double(double)>;

// Raised when the panel-refinement loop fails to stabilize an integral.
struct QuadratureError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Gauss-Legendre nodes/weights on [-1, 1], computed by Newton iteration on
// the Legendre recurrence. Cached per order.
struct GaussRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};
const GaussRule& gauss_legendre(int order);

// Composite Gauss-Legendre quadrature: `panels` equal subintervals of
// [lo, hi], `order` points each.
double integrate(const RealFn& f, double lo, double hi, int panels, int order = 16);

// Integrate with a stabilization check: evaluates at `panels` and double
// that; accepts when the two agree to abs_tol, otherwise doubles once more
// and retries the check. Throws QuadratureError if still unstable.
double integrate_checked(const RealFn& f, double lo, double hi, int panels,
                         double abs_tol = 1e-10, int order = 16);

}  // namespace orthowell
