#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <random>

#include "orthowell/core.hpp"

using namespace orthowell;

namespace {
const WellConfig unit_cfg{1.0, 1.0, 1.0};

std::vector<std::pair<int, int>> level_table(Family f, int J) {
    std::vector<std::pair<int, int>> out;
    for (const ModeId& m : enumerate_modes(f, J)) out.emplace_back(m.j, parity(m));
    return out;
}
}  // namespace

TEST_CASE("family enumeration matches the level tables") {
    using P = std::vector<std::pair<int, int>>;
    CHECK(level_table(Family::I, 8) ==
          P{{1, 1}, {2, -1}, {3, 1}, {4, -1}, {5, 1}, {6, -1}, {7, 1}, {8, -1}});
    CHECK(level_table(Family::II, 7) ==
          P{{0, 1}, {1, -1}, {2, 1}, {3, -1}, {4, 1}, {5, -1}, {6, 1}, {7, -1}});
    CHECK(level_table(Family::III, 8) ==
          P{{0, 1}, {2, 1}, {2, -1}, {4, 1}, {4, -1}, {6, 1}, {6, -1}, {8, 1}, {8, -1}});
    CHECK(level_table(Family::IV, 7) ==
          P{{1, 1}, {1, -1}, {3, 1}, {3, -1}, {5, 1}, {5, -1}, {7, 1}, {7, -1}});
}

TEST_CASE("enumeration examples") {
    auto modes = enumerate_modes(Family::I, 4);
    CHECK(modes == std::vector<ModeId>{{1, ModeKind::Cos},
                                       {2, ModeKind::Sin},
                                       {3, ModeKind::Cos},
                                       {4, ModeKind::Sin}});
    modes = enumerate_modes(Family::III, 4);
    CHECK(modes == std::vector<ModeId>{{0, ModeKind::Const},
                                       {2, ModeKind::Cos},
                                       {2, ModeKind::Sin},
                                       {4, ModeKind::Cos},
                                       {4, ModeKind::Sin}});
    modes = enumerate_modes(Family::IV, 1);
    CHECK(modes == std::vector<ModeId>{{1, ModeKind::Cos}, {1, ModeKind::Sin}});

    CHECK_THROWS_AS(enumerate_modes(Family::I, 0), std::invalid_argument);
}

TEST_CASE("mode evaluation") {
    CHECK(eval_mode(unit_cfg, {1, ModeKind::Cos}, 0.0) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(eval_mode(unit_cfg, {2, ModeKind::Sin}, 1.0) == doctest::Approx(0.0).epsilon(1e-15));
    for (double x : {-1.0, -0.3, 0.0, 0.9, 1.0})
        CHECK(eval_mode(unit_cfg, {0, ModeKind::Const}, x) ==
              doctest::Approx(0.70710678118654752).epsilon(1e-15));

    // zero support outside the interval, exactly
    CHECK(eval_mode(unit_cfg, {3, ModeKind::Cos}, 1.0 + 1e-12) == 0.0);
    CHECK(eval_mode(unit_cfg, {3, ModeKind::Sin}, -5.0) == 0.0);
    CHECK(eval_mode_derivative(unit_cfg, {3, ModeKind::Sin}, 2.0) == 0.0);

    CHECK_THROWS_AS(eval_mode(unit_cfg, {0, ModeKind::Sin}, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(eval_mode(unit_cfg, {2, ModeKind::Const}, 0.0), std::invalid_argument);
}

TEST_CASE("energies") {
    CHECK(energy_of(unit_cfg, 1) == doctest::Approx(1.2337005501361697).epsilon(1e-15));
    CHECK(energy_of(unit_cfg, 2) == doctest::Approx(4.9348022005446793).epsilon(1e-15));
    CHECK(energy_of(unit_cfg, 0) == 0.0);
    CHECK(energy_of(WellConfig{2.5, 0.7, 3.0}, 0) == 0.0);

    // E(p_j) == p_j^2/(2m) on the grid, any units
    const WellConfig cfg{0.8, 1.3, 2.1};
    for (int j = 0; j <= 40; ++j) {
        const double p = cfg.momentum(j);
        CHECK(energy_of(cfg, j) == doctest::Approx(p * p / (2.0 * cfg.mass)).epsilon(1e-15));
    }
    // monotone nondecreasing
    for (int j = 1; j <= 40; ++j) CHECK(energy_of(cfg, j) >= energy_of(cfg, j - 1));
}

TEST_CASE("free doublet members") {
    CHECK(eval_free_doublet(unit_cfg, 1.0, +1, 0.0) ==
          doctest::Approx(0.56418958354775629).epsilon(1e-15));
    CHECK(eval_free_doublet(unit_cfg, 7.3, -1, 0.0) == 0.0);
    CHECK(eval_free_doublet(unit_cfg, 2.0, +1, std::acos(-1.0) / 4.0) ==
          doctest::Approx(0.0).epsilon(1e-15));
    // unconfined: alive outside the interval
    CHECK(std::abs(eval_free_doublet(unit_cfg, 1.0, +1, 10.0)) > 0.0);
    CHECK_THROWS_AS(eval_free_doublet(unit_cfg, 0.0, +1, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(eval_free_doublet(unit_cfg, -2.0, -1, 0.0), std::invalid_argument);
}

TEST_CASE("parity property over random modes and positions") {
    std::mt19937 rng(20260810);
    std::uniform_real_distribution<double> xs(-1.0, 1.0);
    std::uniform_int_distribution<int> js(0, 24);
    const WellConfig cfg{1.7, 1.0, 1.0};
    for (int trial = 0; trial < 500; ++trial) {
        int j = js(rng);
        ModeKind kind = j == 0 ? ModeKind::Const
                               : (trial % 2 == 0 ? ModeKind::Cos : ModeKind::Sin);
        const ModeId m{j, kind};
        const double x = xs(rng) * cfg.a;
        CHECK(eval_mode(cfg, m, -x) ==
              doctest::Approx(parity(m) * eval_mode(cfg, m, x)).epsilon(1e-14));
    }
}

TEST_CASE("config validation") {
    CHECK_THROWS_AS(energy_of(WellConfig{-1.0, 1.0, 1.0}, 1), std::invalid_argument);
    CHECK_THROWS_AS(energy_of(WellConfig{1.0, 0.0, 1.0}, 1), std::invalid_argument);
    CHECK_THROWS_AS(energy_of(WellConfig{1.0, 1.0, -0.5}, 1), std::invalid_argument);
    const WellConfig cfg{3.0, 2.0, 1.0};
    CHECK(cfg.grid_step() == doctest::Approx(std::acos(-1.0) / 3.0).epsilon(1e-15));
    CHECK_THROWS_AS(cfg.momentum(-1), std::invalid_argument);
}
