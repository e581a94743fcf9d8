#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "staotto/dynamics.hpp"
#include "staotto/errors.hpp"
#include "staotto/ramp.hpp"

using namespace staotto;

namespace {

// Central finite differences of omega; the second derivative uses a larger
// step because the double difference is roundoff-bound at 1e-6 tau.
double fd_domega(const RampSpec& ramp, double t, double h) {
    return (eval_ramp(ramp, t + h).omega - eval_ramp(ramp, t - h).omega) / (2.0 * h);
}

double fd_ddomega(const RampSpec& ramp, double t, double h) {
    return (eval_ramp(ramp, t + h).omega - 2.0 * eval_ramp(ramp, t).omega +
            eval_ramp(ramp, t - h).omega) /
           (h * h);
}

}  // namespace

TEST_CASE("quintic ramp boundary values and midpoint") {
    const RampSpec ramp = make_quintic_ramp(0.32, 1.0, 3.0);

    const RampSample lo = eval_ramp(ramp, 0.0);
    CHECK(lo.omega == 0.32);
    CHECK(lo.domega == 0.0);
    CHECK(lo.ddomega == 0.0);

    const RampSample hi = eval_ramp(ramp, 3.0);
    CHECK(hi.omega == 1.0);
    CHECK(hi.domega == 0.0);
    CHECK(hi.ddomega == 0.0);

    // midpoint of the smoothstep: omega at the arithmetic mean, ddomega = 0,
    // domega = 15 (omega_end - omega_start) / (8 tau)
    const RampSample mid = eval_ramp(ramp, 1.5);
    CHECK(mid.s == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(mid.omega == doctest::Approx(0.66).epsilon(1e-14));
    CHECK(mid.ddomega == doctest::Approx(0.0).scale(1.0).epsilon(1e-14));
    CHECK(mid.domega == doctest::Approx(0.425).epsilon(1e-14));
    CHECK(mid.domega == doctest::Approx(fd_domega(ramp, 1.5, 1e-6)).epsilon(1e-7));
}

TEST_CASE("quintic ramp rejects non-positive parameters") {
    CHECK_THROWS_AS(make_quintic_ramp(0.0, 1.0, 3.0), DomainError);
    CHECK_THROWS_AS(make_quintic_ramp(-0.32, 1.0, 3.0), DomainError);
    CHECK_THROWS_AS(make_quintic_ramp(0.32, 0.0, 3.0), DomainError);
    CHECK_THROWS_AS(make_quintic_ramp(0.32, 1.0, 0.0), DomainError);
    CHECK_THROWS_AS(make_quintic_ramp(0.32, 1.0, -1.0), DomainError);
}

TEST_CASE("eval_ramp polynomial value at s = 1/4") {
    const RampSpec ramp = make_quintic_ramp(0.32, 1.0, 3.0);
    // 0.32 + 0.68 (10/64 - 15/256 + 6/1024), all terms exact in binary
    CHECK(eval_ramp(ramp, 0.75).omega == doctest::Approx(0.390390625).epsilon(1e-15));
}

TEST_CASE("eval_ramp domain") {
    const RampSpec ramp = make_quintic_ramp(0.32, 1.0, 3.0);
    CHECK_THROWS_AS(eval_ramp(ramp, -1e-12), DomainError);
    CHECK_THROWS_AS(eval_ramp(ramp, 3.0 + 1e-12), DomainError);
    CHECK_NOTHROW(eval_ramp(ramp, 0.0));
    CHECK_NOTHROW(eval_ramp(ramp, 3.0));
}

TEST_CASE("analytic derivatives match finite differences on interior points") {
    const RampSpec quintic = make_quintic_ramp(0.32, 1.0, 3.0);
    const RampSpec designed = design_ie_frequency(0.32, 1.0, 3.0);
    for (const RampSpec& ramp : {quintic, designed}) {
        const double tau = ramp.tau;
        const double scale_dd = std::abs(ramp.omega_end - ramp.omega_start) / (tau * tau);
        for (int i = 1; i < 100; ++i) {
            const double t = tau * i / 100.0;
            const RampSample smp = eval_ramp(ramp, t);
            const double fd1 = fd_domega(ramp, t, 1e-6 * tau);
            CHECK(std::abs(smp.domega - fd1) <= 1e-6 * std::max(std::abs(smp.domega), 1e-3));
            const double fd2 = fd_ddomega(ramp, t, 1e-4 * tau);
            CHECK(std::abs(smp.ddomega - fd2) <= 1e-5 * std::max(std::abs(smp.ddomega), scale_dd));
        }
    }
}

TEST_CASE("quintic ramp is monotone between its endpoints") {
    const RampSpec up = make_quintic_ramp(0.32, 1.0, 3.0);
    const RampSpec down = reverse_ramp(up);
    for (const RampSpec& ramp : {up, down}) {
        const double lo = std::min(ramp.omega_start, ramp.omega_end) - 1e-12;
        const double hi = std::max(ramp.omega_start, ramp.omega_end) + 1e-12;
        double prev = eval_ramp(ramp, 0.0).omega;
        const bool increasing = ramp.omega_end > ramp.omega_start;
        for (int i = 0; i <= 10000; ++i) {
            const double w = eval_ramp(ramp, ramp.tau * i / 10000.0).omega;
            CHECK(w >= lo);
            CHECK(w <= hi);
            if (i > 0) CHECK((increasing ? w >= prev : w <= prev));
            prev = w;
        }
    }
}

TEST_CASE("reverse_ramp swaps endpoints and reflects samples") {
    const RampSpec ramp = make_quintic_ramp(0.32, 1.0, 3.0);
    const RampSpec rev = reverse_ramp(ramp);
    CHECK(rev.omega_start == 1.0);
    CHECK(rev.omega_end == 0.32);
    CHECK(eval_ramp(rev, 1.5).omega == doctest::Approx(0.66).epsilon(1e-14));

    for (int i = 0; i <= 64; ++i) {
        const double t = ramp.tau * i / 64.0;
        const RampSample fwd = eval_ramp(ramp, t);
        const RampSample mirrored = eval_ramp(rev, ramp.tau - t);
        CHECK(fwd.omega == doctest::Approx(mirrored.omega).epsilon(1e-13));
        CHECK(fwd.domega == doctest::Approx(-mirrored.domega).epsilon(1e-13));
        CHECK(fwd.ddomega ==
              doctest::Approx(mirrored.ddomega).scale(1.0).epsilon(1e-13));
    }
}

TEST_CASE("reverse_ramp is an involution, bit for bit") {
    for (const RampSpec ramp :
         {make_quintic_ramp(0.32, 1.0, 3.0), design_ie_frequency(0.32, 1.0, 3.0)}) {
        const RampSpec twice = reverse_ramp(reverse_ramp(ramp));
        for (int i = 0; i <= 257; ++i) {
            const double t = ramp.tau * i / 257.0;
            const RampSample a = eval_ramp(ramp, t);
            const RampSample b = eval_ramp(twice, t);
            CHECK(a.omega == b.omega);
            CHECK(a.domega == b.domega);
            CHECK(a.ddomega == b.ddomega);
        }
    }
}

TEST_CASE("boundary check passes the quintic ramp") {
    const RampSpec ramp = make_quintic_ramp(0.32, 1.0, 3.0);
    CHECK(check_boundary_conditions(ramp, 1e-9).empty());
    CHECK(check_boundary_conditions(reverse_ramp(ramp), 1e-9).empty());
}

TEST_CASE("boundary check flags a linear ramp") {
    const double wi = 0.32, wf = 1.0, tau = 3.0;
    auto linear = [&](double t) {
        RampSample smp;
        smp.t = t;
        smp.s = t / tau;
        smp.omega = wi + (wf - wi) * smp.s;
        smp.domega = (wf - wi) / tau;
        smp.ddomega = 0.0;
        return smp;
    };
    const auto report = check_boundary_conditions(linear, wi, wf, tau, 1e-9);
    REQUIRE(!report.empty());
    const bool flags_slope_at_start =
        std::any_of(report.begin(), report.end(),
                    [](const BoundaryViolation& v) { return v.quantity == "domega(0)"; });
    CHECK(flags_slope_at_start);
}

TEST_CASE("boundary check on the inverse-engineered ramp") {
    // The designed protocol hits the endpoint frequencies exactly but keeps
    // nonzero edge slopes: omega^2 = omega0^2/b^4 - bddot/b has
    // d(omega^2)/dt(0) = -b'''(0), and the quintic b has b'''(0) != 0.
    const RampSpec ramp = design_ie_frequency(0.32, 1.0, 3.0);
    CHECK(eval_ramp(ramp, 0.0).omega == 0.32);
    CHECK(eval_ramp(ramp, 3.0).omega == 1.0);

    const auto report = check_boundary_conditions(ramp, 1e-9);
    REQUIRE(!report.empty());
    for (const BoundaryViolation& v : report) {
        CHECK(v.quantity != "omega(0)");
        CHECK(v.quantity != "omega(tau)");
    }
    // frozen slopes: -b'''(0)/(2 omega0) and -b'''(tau)/(2 omega_f b(tau))
    CHECK(eval_ramp(ramp, 0.0).domega == doctest::Approx(1.50803671892626).epsilon(1e-12));
    CHECK(eval_ramp(ramp, 3.0).domega == doctest::Approx(0.853074392184854).epsilon(1e-12));
}

TEST_CASE("boundary check rejects a non-positive tolerance") {
    const RampSpec ramp = make_quintic_ramp(0.32, 1.0, 3.0);
    CHECK_THROWS_AS(check_boundary_conditions(ramp, 0.0), DomainError);
}
