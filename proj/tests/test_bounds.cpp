// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cmath>
#include <vector>

#include <json.hpp>

#include <pcrank/bounds.hpp>
#include <pcrank/inconsistency.hpp>
#include <pcrank/matrix.hpp>
#include <pcrank/prioritize.hpp>
#include <pcrank/rankstats.hpp>

using pcrank::Error;
using pcrank::errc;
using pcrank::Method;
using pcrank::PCMatrix;
using pcrank::PriorityVector;
using pcrank::StabilityCertificate;

TEST_CASE("distance bounds collapse to zero at zero inconsistency") {
    const pcrank::DistanceBounds b = pcrank::md_bounds(0.0);
    CHECK(b.lower == 0.0);
    CHECK(b.upper == 0.0);
}

TEST_CASE("distance bounds at ki = 0.5") {
    const pcrank::DistanceBounds b = pcrank::md_bounds(0.5);
    CHECK(b.lower == doctest::Approx(-0.75).epsilon(1e-15));
    CHECK(b.upper == doctest::Approx(3.0).epsilon(1e-15));
}

TEST_CASE("invalid inconsistency values are rejected") {
    for (double ki : {-0.01, 1.0, 1.5, std::nan("")}) {
        try {
            (void)pcrank::md_bounds(ki);
            FAIL_CHECK("expected InvalidKI for ki = " << ki);
        } catch (const Error& e) {
            CHECK(e.code() == errc::invalid_ki);
        }
    }
}

TEST_CASE("weight gaps of a sorted vector") {
    const PriorityVector w({0.10, 0.60, 0.30}, Method::geometric_mean);
    const pcrank::WeightGaps g = pcrank::weight_gaps(w);
    CHECK(g.top_gap == doctest::Approx(0.30).epsilon(1e-15));
    CHECK(g.min_gap == doctest::Approx(0.20).epsilon(1e-15));
}

TEST_CASE("weight gaps reject ties") {
    const PriorityVector w({0.25, 0.25, 0.5}, Method::geometric_mean);
    try {
        (void)pcrank::weight_gaps(w);
        FAIL("expected TiesPresent");
    } catch (const Error& e) {
        CHECK(e.code() == errc::ties_present);
    }
}

TEST_CASE("certification compares gaps against the budget strictly") {
    const PriorityVector w({0.60, 0.30, 0.10}, Method::eigenvalue, 3.0);
    CHECK(pcrank::certify_order(w, 0.03));
    CHECK(pcrank::certify_top(w, 0.03));
    // ki = 0.10 gives budget 1/0.81 - 1 = 0.2346: above the 0.20 minimal gap,
    // below the 0.30 top gap.
    CHECK_FALSE(pcrank::certify_order(w, 0.10));
    CHECK(pcrank::certify_top(w, 0.10));
    CHECK_FALSE(pcrank::certify_top(w, 0.60));
}

TEST_CASE("swap budget counts strict multiples of the minimal gap") {
    CHECK(pcrank::max_feasible_swaps(0.2, 0.05, 5) == 0);
    CHECK(pcrank::max_feasible_swaps(0.1, 0.35, 5) == 3);
    CHECK(pcrank::max_feasible_swaps(0.25, 0.5, 5) == 1);
    CHECK(pcrank::max_feasible_swaps(0.1, 1e9, 5) == 10);
    CHECK(pcrank::max_feasible_swaps(0.5, 0.0, 5) == 0);
}

TEST_CASE("swap budget rejects degenerate gaps") {
    try {
        (void)pcrank::max_feasible_swaps(0.0, 0.5, 5);
        FAIL("expected DegenerateGap");
    } catch (const Error& e) {
        CHECK(e.code() == errc::degenerate_gap);
    }
    CHECK_THROWS_AS((void)pcrank::max_feasible_swaps(0.1, -1.0, 5), std::invalid_argument);
}

TEST_CASE("correlation floors for k swaps") {
    CHECK(pcrank::tau_lower_bound(5, 0) == 1.0);
    CHECK(pcrank::rho_lower_bound(5, 0) == 1.0);
    CHECK(pcrank::tau_lower_bound(5, 3) == 0.40);
    CHECK(pcrank::rho_lower_bound(5, 2) == 0.70);
    CHECK(pcrank::tau_lower_bound(3, 3) == -1.0);
    try {
        (void)pcrank::tau_lower_bound(5, 11);
        FAIL("expected KOutOfRange");
    } catch (const Error& e) {
        CHECK(e.code() == errc::k_out_of_range);
    }
    CHECK_THROWS_AS((void)pcrank::rho_lower_bound(5, -1), Error);
}

TEST_CASE("largest reachable minimal gap is 2 / (n (n - 1))") {
    CHECK(std::abs(pcrank::max_feasible_gap(3) - 1.0 / 3) <= 1e-15);
    CHECK(std::abs(pcrank::max_feasible_gap(4) - 1.0 / 6) <= 1e-15);
    CHECK(std::abs(pcrank::max_feasible_gap(5) - 1.0 / 10) <= 1e-15);
}

TEST_CASE("consistent matrices certify with zero swaps and unit floors") {
    const PCMatrix m = PCMatrix::from_weights(std::vector<double>{0.5, 0.3, 0.2});
    const StabilityCertificate c = pcrank::full_certificate(m);
    CHECK(c.n == 3);
    CHECK(c.ki < 1e-12);
    CHECK(c.max_swaps == 0);
    CHECK(c.order_certified);
    CHECK(c.top_certified);
    CHECK(c.tau_lower == 1.0);
    CHECK(c.rho_lower == 1.0);
}

TEST_CASE("certificates stay sound on disturbed matrices") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const PCMatrix m = disturb(PCMatrix::random_consistent(4, seed), 4.0, seed + 50);
        const PriorityVector ev = pcrank::evm(m);
        const PriorityVector gm = pcrank::gmm(m);
        StabilityCertificate c;
        try {
            c = pcrank::full_certificate(m);
        } catch (const Error& e) {
            CHECK(e.code() == errc::ties_present);
            continue;
        }
        CHECK(pcrank::manhattan_distance(ev, gm) <= c.md_upper + 1e-8);
        if (c.order_certified)
            CHECK(pcrank::ordinal_ranking(ev).order() == pcrank::ordinal_ranking(gm).order());
        if (c.top_certified)
            CHECK(pcrank::ordinal_ranking(ev).order()[0] == pcrank::ordinal_ranking(gm).order()[0]);
    }
}

TEST_CASE("certificate serialization round-trips through JSON") {
    const PCMatrix m = PCMatrix::from_weights(std::vector<double>{0.55, 0.35, 0.10});
    const StabilityCertificate c = pcrank::full_certificate(m);
    const nlohmann::json j = nlohmann::json::parse(pcrank::to_json(c));
    CHECK(j["n"] == 3);
    CHECK(j["ki"].get<double>() == c.ki);
    CHECK(j["md_upper"].get<double>() == c.md_upper);
    CHECK(j["min_gap"].get<double>() == c.min_gap);
    CHECK(j["top_gap"].get<double>() == c.top_gap);
    CHECK(j["max_swaps"] == 0);
    CHECK(j["order_certified"] == true);
    CHECK(j["top_certified"] == true);
    CHECK(j["tau_lower"] == 1.0);
    CHECK(j["rho_lower"] == 1.0);

    const auto keys = {"n",        "ki",       "kappa",           "md_lower",
                       "md_upper", "min_gap",  "top_gap",         "max_swaps",
                       "order_certified",      "top_certified",   "tau_lower",
                       "rho_lower"};
    std::size_t pos = 0;
    const std::string text = pcrank::to_json(c);
    for (const char* key : keys) {
        const std::size_t at = text.find(std::string("\"") + key + "\"");
        REQUIRE(at != std::string::npos);
        CHECK(at >= pos);
        pos = at;
    }
}
