#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <random>

#include "orthowell/core.hpp"
#include "orthowell/overlap.hpp"
#include "orthowell/quadrature.hpp"

using namespace orthowell;

namespace {

const WellConfig unit_cfg{1.0, 1.0, 1.0};

// quadrature oracle: integral over [-a, a] of the product of two
// delta-normalized even free members (the closed form under test never
// enters this path)
double kernel_oracle(const WellConfig& cfg, double p, double pp, int panels = 64) {
    return integrate(
        [&](double x) {
            return eval_free_doublet(cfg, p, +1, x) * eval_free_doublet(cfg, pp, +1, x);
        },
        -cfg.a, cfg.a, panels);
}

// same oracle for confined modes
double mode_overlap_oracle(const WellConfig& cfg, const ModeId& m1, const ModeId& m2) {
    return integrate([&](double x) { return eval_mode(cfg, m1, x) * eval_mode(cfg, m2, x); },
                     -cfg.a, cfg.a, 64);
}

}  // namespace

TEST_CASE("kernel: frozen spot values") {
    // (1/sqrt 2)(sin 1/pi + sin 3/(3 pi))
    CHECK(kernel_free(unit_cfg, 1.0, 2.0) ==
          doctest::Approx(0.19998523478154445).epsilon(1e-14));
    // both sine terms vanish at integer-pi arguments
    CHECK(kernel_free(unit_cfg, std::numbers::pi, 2.0 * std::numbers::pi) ==
          doctest::Approx(0.0).epsilon(1e-15));
    // diagonal convention value at p = pi/2
    CHECK(kernel_free_diagonal(unit_cfg, std::numbers::pi / 2.0) ==
          doctest::Approx(0.20264236728467554).epsilon(1e-14));
    CHECK_THROWS_AS(kernel_free(unit_cfg, -1.0, 2.0), std::invalid_argument);
    CHECK_THROWS_AS(kernel_free_diagonal(unit_cfg, 0.0), std::invalid_argument);
}

TEST_CASE("kernel matches the quadrature oracle on random momentum pairs") {
    std::mt19937 rng(7041998);
    std::uniform_real_distribution<double> logp(std::log(0.1), std::log(20.0));
    const WellConfig cfgs[] = {unit_cfg, WellConfig{0.7, 1.3, 2.0}};
    for (const auto& cfg : cfgs) {
        for (int t = 0; t < 100; ++t) {
            const double p = std::exp(logp(rng));
            const double pp = std::exp(logp(rng));
            CHECK(kernel_free(cfg, p, pp) ==
                  doctest::Approx(kernel_oracle(cfg, p, pp)).epsilon(1e-10));
        }
        // diagonal: the full kernel limit includes the oscillatory term...
        const double p = 1.37;
        CHECK(kernel_free(cfg, p, p) == doctest::Approx(kernel_oracle(cfg, p, p)).epsilon(1e-12));
        // ...while the pure-diagonal convention agrees on the grid exactly
        for (int j : {1, 2, 5}) {
            const double pj = cfg.momentum(j);
            CHECK(kernel_free(cfg, pj, pj) ==
                  doctest::Approx(kernel_free_diagonal(cfg, pj)).epsilon(1e-13));
        }
    }
}

TEST_CASE("kernel diagonal limit is continuous") {
    for (double p : {0.5, 2.0, 11.0}) {
        const double lim = kernel_free(unit_cfg, p, p);
        CHECK(kernel_free(unit_cfg, p, p + 1e-9) == doctest::Approx(lim).epsilon(1e-7));
        CHECK(kernel_free(unit_cfg, p, p * (1.0 + 1e-13)) == doctest::Approx(lim).epsilon(1e-10));
    }
}

TEST_CASE("closed-form mode overlaps match quadrature") {
    std::mt19937 rng(411);
    std::uniform_int_distribution<int> js(1, 20);
    const WellConfig cfg{1.9, 1.0, 1.0};
    auto rand_mode = [&](int t) {
        const int j = js(rng);
        return ModeId{j, t % 2 ? ModeKind::Cos : ModeKind::Sin};
    };
    for (int t = 0; t < 200; ++t) {
        const ModeId m1 = t % 5 == 0 ? ModeId{0, ModeKind::Const} : rand_mode(t);
        const ModeId m2 = rand_mode(t + 1);
        CHECK(mode_overlap(m1, m2) ==
              doctest::Approx(mode_overlap_oracle(cfg, m1, m2)).epsilon(1e-12));
    }
}

TEST_CASE("family Gram matrices are the identity") {
    for (Family f : {Family::I, Family::II, Family::III, Family::IV}) {
        for (int J : {2, 16, 64}) {
            const GramReport g = gram_family(unit_cfg, f, J);
            CHECK(g.is_orthonormal);
            CHECK(g.max_offdiag <= 1e-12);
            CHECK(g.max_diag_dev <= 1e-12);
            // symmetric to machine precision
            CHECK((g.matrix - g.matrix.transpose()).cwiseAbs().maxCoeff() <= 1e-15);
        }
    }
    // normalization of the constant mode
    const GramReport g = gram_family(unit_cfg, Family::III, 4);
    CHECK(g.matrix(0, 0) == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("cross-family overlaps") {
    const GramReport g = gram_cross(unit_cfg, Family::I, Family::II, 4);
    // <I:(1,cos) | II:(2,cos)> = 4/(3 pi)
    int r = -1, c = -1;
    for (std::size_t i = 0; i < g.row_modes.size(); ++i)
        if (g.row_modes[i] == ModeId{1, ModeKind::Cos}) r = static_cast<int>(i);
    for (std::size_t i = 0; i < g.col_modes.size(); ++i)
        if (g.col_modes[i] == ModeId{2, ModeKind::Cos}) c = static_cast<int>(i);
    REQUIRE(r >= 0);
    REQUIRE(c >= 0);
    CHECK(g.matrix(r, c) == doctest::Approx(0.42441318157838756).epsilon(1e-14));
    CHECK(g.max_offdiag >= 0.42);

    // opposite-kind entries vanish outright
    for (std::size_t i = 0; i < g.row_modes.size(); ++i)
        for (std::size_t k = 0; k < g.col_modes.size(); ++k)
            if ((g.row_modes[i].kind == ModeKind::Sin) != (g.col_modes[k].kind == ModeKind::Sin))
                CHECK(g.matrix(i, k) == 0.0);

    // III vs IV carries a nonzero same-kind witness
    const GramReport g2 = gram_cross(unit_cfg, Family::III, Family::IV, 4);
    CHECK(g2.max_offdiag > 0.1);

    CHECK_THROWS_AS(gram_cross(unit_cfg, Family::I, Family::I, 4), std::invalid_argument);
}

TEST_CASE("orthogonality predicate agrees with the closed forms") {
    std::vector<ModeId> pool{{0, ModeKind::Const}};
    for (int j = 1; j <= 9; ++j) {
        pool.push_back({j, ModeKind::Cos});
        pool.push_back({j, ModeKind::Sin});
    }
    for (const ModeId& m1 : pool)
        for (const ModeId& m2 : pool) {
            if (m1 == m2) continue;
            CHECK(modes_orthogonal(m1, m2) == (std::abs(mode_overlap(m1, m2)) < 1e-15));
        }
}

TEST_CASE("sifting discovers exactly the four families") {
    for (int J : {2, 4, 8, 16}) {
        const SiftResult res = sift_families(unit_cfg, J);
        REQUIRE(res.sets.size() == 4);
        CHECK(res.matched_all);
        for (std::size_t i = 0; i < 4; ++i)
            CHECK(res.sets[i] == enumerate_modes(res.matched[i], J));

        // each cos index lands in exactly two families; same for sin
        for (int j = 1; j <= J; ++j) {
            int cos_count = 0, sin_count = 0;
            for (const auto& set : res.sets)
                for (const ModeId& m : set) {
                    if (m.j != j) continue;
                    if (m.kind == ModeKind::Cos) ++cos_count;
                    if (m.kind == ModeKind::Sin) ++sin_count;
                }
            CHECK(cos_count == 2);
            CHECK(sin_count == 2);
        }
    }
    CHECK_THROWS_AS(sift_families(unit_cfg, 1), std::invalid_argument);
}

TEST_CASE("sifting is scale invariant") {
    const SiftResult base = sift_families(unit_cfg, 6);
    for (double a : {0.3, 2.0, 17.0}) {
        const SiftResult scaled = sift_families(WellConfig{a, 1.0, 1.0}, 6);
        CHECK(scaled.sets == base.sets);
    }
}

TEST_CASE("compatibility spot pairs") {
    CHECK(modes_orthogonal({1, ModeKind::Cos}, {3, ModeKind::Cos}));
    CHECK_FALSE(modes_orthogonal({1, ModeKind::Cos}, {2, ModeKind::Cos}));
    CHECK(std::abs(mode_overlap({1, ModeKind::Cos}, {2, ModeKind::Cos}) -
                   0.42441318157838756) <= 1e-14);
}
