#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "staotto/errors.hpp"
#include "staotto/sta.hpp"

using namespace staotto;

namespace {

const RampSpec kFig3Ramp = make_quintic_ramp(0.32, 1.0, 3.0);
const RampSample kMid = eval_ramp(kFig3Ramp, 1.5);  // omega 0.66, domega 0.425, ddomega 0

}  // namespace

TEST_CASE("thermal mean energy") {
    // 0.16 coth(0.08) and 0.5 coth(0.025), computed as omega / (2 tanh)
    CHECK(initial_mean_energy(0.32, 0.5) ==
          doctest::Approx(0.16 / std::tanh(0.08)).epsilon(1e-15));
    CHECK(initial_mean_energy(0.32, 0.5) == doctest::Approx(2.00426484733112).epsilon(1e-13));
    CHECK(initial_mean_energy(1.0, 0.05) == doctest::Approx(20.0041664930659).epsilon(1e-13));
    // ground state in the cold limit
    CHECK(initial_mean_energy(1.0, 1e6) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(initial_mean_energy(0.32, 0.5) > 0.16);

    CHECK_THROWS_AS(initial_mean_energy(0.0, 0.5), DomainError);
    CHECK_THROWS_AS(initial_mean_energy(1.0, 0.0), DomainError);
    CHECK_THROWS_AS(initial_mean_energy(1.0, -2.0), DomainError);
}

TEST_CASE("counterdiabatic effective frequency") {
    const RampSample still = eval_ramp(kFig3Ramp, 0.0);
    CHECK(effective_freq_cd(still) == still.omega);

    CHECK(effective_freq_cd(kMid) == doctest::Approx(0.576138450576979).epsilon(1e-13));
    CHECK(effective_freq_cd(kMid) > 0.0);
    CHECK(effective_freq_cd(kMid) <= kMid.omega);

    // at tau = 1 the midpoint slope violates domega^2 < 4 omega^4
    const RampSpec fast = make_quintic_ramp(0.32, 1.0, 1.0);
    const RampSample bad = eval_ramp(fast, 0.5);
    CHECK_THROWS_AS(effective_freq_cd(bad), TrapInversionError);
    try {
        effective_freq_cd(bad);
    } catch (const TrapInversionError& e) {
        CHECK(e.time() == 0.5);
    }
}

TEST_CASE("adiabaticity parameters at the midpoint sample") {
    CHECK(qstar_cd(kMid) == doctest::Approx(1.14555798061913).epsilon(1e-13));
    CHECK(qstar_lcd(kMid) == doctest::Approx(0.762019086853172).epsilon(1e-13));
    CHECK(qstar_ie(kMid) == doctest::Approx(1.11899045657341).epsilon(1e-13));
    CHECK(qstar_lcd(kMid) < 1.0);  // the trace dips below 1 where ddomega = 0
}

TEST_CASE("adiabaticity parameters equal one at the stroke boundaries") {
    for (const double t : {0.0, 3.0}) {
        const RampSample smp = eval_ramp(kFig3Ramp, t);
        CHECK(qstar_cd(smp) == 1.0);
        CHECK(qstar_lcd(smp) == 1.0);
        CHECK(qstar_ie(smp) == 1.0);
    }
}

TEST_CASE("local counterdiabatic squared frequency") {
    const RampSample still = eval_ramp(kFig3Ramp, 0.0);
    CHECK(lcd_freq_sq(still) == doctest::Approx(0.32 * 0.32).epsilon(1e-15));

    CHECK(lcd_freq_sq(kMid) == doctest::Approx(0.124606542699725).epsilon(1e-13));

    const RampSpec fast = make_quintic_ramp(0.32, 1.0, 1.0);
    CHECK(lcd_freq_sq(eval_ramp(fast, 0.5)) < 0.0);  // reported, not raised
}

TEST_CASE("cost densities at the midpoint and boundaries") {
    const double e0 = initial_mean_energy(0.32, 0.5);
    for (const StaMethod m : {StaMethod::CD, StaMethod::LCD, StaMethod::IE}) {
        CHECK(cost_density(m, eval_ramp(kFig3Ramp, 0.0), 0.32, e0) == 0.0);
        CHECK(cost_density(m, eval_ramp(kFig3Ramp, 3.0), 0.32, e0) == 0.0);
    }
    CHECK(cost_density(StaMethod::IE, kMid, 0.32, e0) ==
          doctest::Approx(0.491882302885821).epsilon(1e-12));
    CHECK(cost_density(StaMethod::CD, kMid, 0.32, e0) ==
          doctest::Approx(0.601707034094581).epsilon(1e-12));
    // second half of the compression has ddomega < 0, so the LCD density
    // goes negative and must stay unclamped
    CHECK(cost_density(StaMethod::LCD, eval_ramp(kFig3Ramp, 2.25), 0.32, e0) < 0.0);

    CHECK_THROWS_AS(cost_density(StaMethod::IE, kMid, 0.0, e0), DomainError);
    CHECK_THROWS_AS(cost_density(StaMethod::IE, kMid, 0.32, 0.0), DomainError);
}

TEST_CASE("cost density is linear in the initial energy") {
    const double e0 = initial_mean_energy(0.32, 0.5);
    for (const StaMethod m : {StaMethod::CD, StaMethod::LCD, StaMethod::IE}) {
        CHECK(cost_density(m, kMid, 0.32, 2.0 * e0) ==
              doctest::Approx(2.0 * cost_density(m, kMid, 0.32, e0)).epsilon(1e-15));
    }
}

TEST_CASE("time-averaged cost of the Fig-3 compression stroke") {
    const QuadratureConfig quad;
    const double avg_ie = time_avg_cost(StaMethod::IE, kFig3Ramp, 0.5, quad);
    CHECK(avg_ie == doctest::Approx(0.311062179214737).epsilon(1e-9));

    // a constant-frequency stroke costs nothing
    const RampSpec still = make_quintic_ramp(0.7, 0.7, 4.0);
    for (const StaMethod m : {StaMethod::CD, StaMethod::LCD, StaMethod::IE}) {
        CHECK(time_avg_cost(m, still, 0.5, quad) == 0.0);
    }
}

TEST_CASE("slow strokes cost almost nothing") {
    const QuadratureConfig quad;
    const RampSpec slow = make_quintic_ramp(0.32, 1.0, 500.0);
    const double e0 = initial_mean_energy(0.32, 0.5);
    for (const StaMethod m : {StaMethod::CD, StaMethod::LCD, StaMethod::IE}) {
        CHECK(time_avg_cost(m, slow, 0.5, quad) < 1e-4 * e0);
    }
}

TEST_CASE("CD and IE cost densities are pointwise nonnegative, averages positive") {
    const QuadratureConfig quad;
    for (const RampSpec ramp :
         {kFig3Ramp, make_quintic_ramp(1.0, 0.32, 3.0), make_quintic_ramp(0.5, 2.0, 8.0)}) {
        const double e0 = initial_mean_energy(ramp.omega_start, 0.5);
        for (int i = 0; i <= 200; ++i) {
            const RampSample smp = eval_ramp(ramp, ramp.tau * i / 200.0);
            CHECK(cost_density(StaMethod::IE, smp, ramp.omega_start, e0) >= 0.0);
            CHECK(cost_density(StaMethod::CD, smp, ramp.omega_start, e0) >= 0.0);
        }
        CHECK(time_avg_cost(StaMethod::IE, ramp, 0.5, quad) > 0.0);
        CHECK(time_avg_cost(StaMethod::CD, ramp, 0.5, quad) > 0.0);
    }
}

TEST_CASE("counterdiabatic costs dominate inverse-engineering costs") {
    const QuadratureConfig quad;
    for (const double tau : {2.5, 3.0, 5.0, 10.0, 30.0}) {
        const RampSpec ramp = make_quintic_ramp(0.32, 1.0, tau);
        CHECK(time_avg_cost(StaMethod::CD, ramp, 0.5, quad) >=
              time_avg_cost(StaMethod::IE, ramp, 0.5, quad));
    }
}

TEST_CASE("the LCD average cost is twice the IE average cost") {
    // integrating ddomega/omega^2 by parts turns the LCD bracket into
    // +domega^2/(4 omega^4): double the IE one
    const QuadratureConfig quad;
    for (const double tau : {3.0, 7.0, 20.0}) {
        const RampSpec ramp = make_quintic_ramp(0.32, 1.0, tau);
        const double lcd = time_avg_cost(StaMethod::LCD, ramp, 0.5, quad);
        const double ie = time_avg_cost(StaMethod::IE, ramp, 0.5, quad);
        CHECK(lcd == doctest::Approx(2.0 * ie).epsilon(1e-8));
    }
}

TEST_CASE("average costs scale with the initial energy only") {
    const QuadratureConfig quad;
    const double ratio_e0 = initial_mean_energy(0.32, 0.25) / initial_mean_energy(0.32, 0.5);
    for (const StaMethod m : {StaMethod::CD, StaMethod::LCD, StaMethod::IE}) {
        const double hot = time_avg_cost(m, kFig3Ramp, 0.25, quad);
        const double cold = time_avg_cost(m, kFig3Ramp, 0.5, quad);
        CHECK(hot / cold == doctest::Approx(ratio_e0).epsilon(1e-9));
    }
}

TEST_CASE("average costs fall off as 1/tau^2") {
    const QuadratureConfig quad;
    for (const StaMethod m : {StaMethod::CD, StaMethod::LCD, StaMethod::IE}) {
        const double at100 = time_avg_cost(m, make_quintic_ramp(0.32, 1.0, 100.0), 0.5, quad);
        const double at200 = time_avg_cost(m, make_quintic_ramp(0.32, 1.0, 200.0), 0.5, quad);
        CHECK(at100 / at200 == doctest::Approx(4.0).epsilon(0.05));
    }
}

TEST_CASE("time_avg_cost reports the first trap-inverted time for CD") {
    const RampSpec fast = make_quintic_ramp(0.32, 1.0, 1.0);
    try {
        time_avg_cost(StaMethod::CD, fast, 0.5, QuadratureConfig{});
        FAIL("expected TrapInversionError");
    } catch (const TrapInversionError& e) {
        CHECK(e.time() > 0.0);
        CHECK(e.time() < 0.5);
        // every scanned time before the reported one is still valid
        for (int i = 0; i <= 4096; ++i) {
            const double t = 1.0 * i / 4096;
            if (t >= e.time()) break;
            const RampSample smp = eval_ramp(fast, t);
            const double w2 = smp.omega * smp.omega;
            CHECK(smp.domega * smp.domega < 4.0 * w2 * w2);
        }
    }
}

TEST_CASE("pointwise ordering qstar_cd >= qstar_ie >= 1 wherever CD applies") {
    std::mt19937 rng(20240811);
    std::uniform_real_distribution<double> freq(0.2, 2.5);
    std::uniform_real_distribution<double> dur(0.5, 30.0);
    int checked = 0;
    while (checked < 40) {
        const double wi = freq(rng), wf = freq(rng), tau = dur(rng);
        const RampSpec ramp = make_quintic_ramp(wi, wf, tau);
        for (int i = 0; i <= 100; ++i) {
            const RampSample smp = eval_ramp(ramp, tau * i / 100.0);
            const double w2 = smp.omega * smp.omega;
            if (!(smp.domega * smp.domega < 4.0 * w2 * w2)) continue;
            CHECK(qstar_cd(smp) >= qstar_ie(smp) - 1e-12);
            CHECK(qstar_ie(smp) >= 1.0);
            ++checked;
        }
    }
}

TEST_CASE("cost profile endpoints vanish and its average matches") {
    const QuadratureConfig quad;
    for (const StaMethod m : {StaMethod::CD, StaMethod::LCD, StaMethod::IE}) {
        const CostProfile profile = sample_cost_profile(m, kFig3Ramp, 0.5, 101, quad);
        REQUIRE(profile.samples.size() == 101);
        CHECK(profile.samples.front().cost_density == 0.0);
        CHECK(profile.samples.back().cost_density == 0.0);
        CHECK(std::abs(profile.samples.front().qstar - 1.0) < 1e-9);
        CHECK(std::abs(profile.samples.back().qstar - 1.0) < 1e-9);
        CHECK(profile.time_avg_cost == time_avg_cost(m, kFig3Ramp, 0.5, quad));
        CHECK(profile.e0 == initial_mean_energy(0.32, 0.5));
    }
    CHECK_THROWS_AS(sample_cost_profile(StaMethod::IE, kFig3Ramp, 0.5, 1, quad), DomainError);
}
