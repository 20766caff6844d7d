#include "orthowell/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>

namespace orthowell {

namespace {

GaussRule compute_rule(int n) {
    GaussRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    const int m = (n + 1) / 2;
    for (int i = 0; i < m; ++i) {
        // Chebyshev-based initial guess, then Newton on P_n(z).
        double z = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p1 = 1.0, p2 = 0.0;
            for (int k = 0; k < n; ++k) {
                const double p3 = p2;
                p2 = p1;
                p1 = ((2.0 * k + 1.0) * z * p2 - k * p3) / (k + 1.0);
            }
            pp = n * (z * p1 - p2) / (z * z - 1.0);
            const double dz = p1 / pp;
            z -= dz;
            if (std::abs(dz) < 1e-15) break;
        }
        rule.nodes[i] = -z;
        rule.nodes[n - 1 - i] = z;
        rule.weights[i] = 2.0 / ((1.0 - z * z) * pp * pp);
        rule.weights[n - 1 - i] = rule.weights[i];
    }
    return rule;
}

}  // namespace

const GaussRule& gauss_legendre(int order) {
    if (order < 1) throw std::invalid_argument("gauss_legendre: order must be >= 1");
    static std::map<int, GaussRule> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(order);
    if (it == cache.end()) it = cache.emplace(order, compute_rule(order)).first;
    return it->second;
}

double integrate(const RealFn& f, double lo, double hi, int panels, int order) {
    if (panels < 1) throw std::invalid_argument("integrate: panels must be >= 1");
    const GaussRule& rule = gauss_legendre(order);
    const double width = (hi - lo) / panels;
    double total = 0.0;
    for (int p = 0; p < panels; ++p) {
        const double mid = lo + (p + 0.5) * width;
        const double half = 0.5 * width;
        double acc = 0.0;
        for (int k = 0; k < order; ++k) acc += rule.weights[k] * f(mid + half * rule.nodes[k]);
        total += half * acc;
    }
    return total;
}

double integrate_checked(const RealFn& f, double lo, double hi, int panels,
                         double abs_tol, int order) {
    double coarse = integrate(f, lo, hi, panels, order);
    double fine = integrate(f, lo, hi, 2 * panels, order);
    if (std::abs(fine - coarse) <= abs_tol) return fine;
    coarse = fine;
    fine = integrate(f, lo, hi, 4 * panels, order);
    if (std::abs(fine - coarse) <= abs_tol) return fine;
    throw QuadratureError("integral did not stabilize after panel refinement (|delta| = " +
                          std::to_string(std::abs(fine - coarse)) + ")");
}

}  // namespace orthowell
