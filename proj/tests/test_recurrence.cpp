#include <cmath>
#include <numeric>

#include "doctest.h"
#include "mixgraph/core/rng.hpp"
#include "mixgraph/recurrence/master.hpp"
#include "mixgraph/recurrence/solve.hpp"
#include "oracle_values.hpp"

using namespace mixgraph;
using namespace mixgraph::recurrence;

namespace {

double max_rel_diff(const Sequence& a, const Sequence& b) {
  double worst = 0.0;
  for (std::size_t k = 0; k < std::min(a.size(), b.size()); ++k) {
    const double scale = std::max(std::abs(a[k]), std::abs(b[k]));
    if (scale > 0.0) worst = std::max(worst, std::abs(a[k] - b[k]) / scale);
  }
  return worst;
}

Sequence random_forcing(Rng& rng, std::int64_t k_max) {
  Sequence phi(static_cast<std::size_t>(k_max) + 1);
  for (auto& v : phi) v = rng.uniform();
  return phi;
}

}  // namespace

TEST_CASE("lower forcing and default rho") {
  const auto psi = forcing_lower_psi(std::exp(-1.0) / 2.0, 10);
  CHECK(psi[0] == doctest::Approx(0.18393972058572117));
  CHECK(std::accumulate(psi.begin() + 1, psi.end(), 0.0) == 0.0);
  CHECK_THROWS(forcing_lower_psi(0.0, 10));
  CHECK_THROWS(forcing_lower_psi(1.5, 10));
  CHECK(default_rho(Family::PureBa, ModelParams::ba(1.0)) == doctest::Approx(0.18393972058572117));
  CHECK(default_rho(Family::Mixed, ModelParams::mixed(0.5, 1.0, 1.0)) ==
        doctest::Approx(0.18393972058572117));
  CHECK_THROWS(default_rho(Family::PureCopy, ModelParams::hard_copy(1.0, 1.0)));
}

TEST_CASE("upper forcings") {
  const auto ba = forcing_upper_phi(Family::PureBa, ModelParams::ba(1.0), 10);
  CHECK(ba[0] == doctest::Approx(std::exp(-1.0)));
  CHECK(ba[1] == doctest::Approx(24.0));
  CHECK(ba[2] == doctest::Approx(1.5));
  const auto mixed = forcing_upper_phi(Family::Mixed, ModelParams::mixed(0.5, 1.0, 1.0), 10);
  CHECK(mixed[1] == doctest::Approx(5040.0));  // n = 7, C = 7!
  CHECK(mixed[2] == doctest::Approx(5040.0 / 128.0));
  CHECK_THROWS(forcing_upper_phi(Family::Mixed, ModelParams(0.0, 1.0, 1.0), 10));
  const auto cl = forcing_upper_phi(Family::Classical, ModelParams::classical(1.0), 60);
  CHECK(std::accumulate(cl.begin(), cl.end(), 0.0) == doctest::Approx(1.0).epsilon(1e-12));
  const auto hc = forcing_upper_phi(Family::HardCopy, ModelParams::hard_copy(0.4, 1.0), 60);
  CHECK(std::accumulate(hc.begin(), hc.end(), 0.0) == doctest::Approx(0.6).epsilon(1e-12));
}

TEST_CASE("presets") {
  const auto spec = make_spec(Family::Mixed, ModelParams::mixed(0.5, 1.0, 1.0), {}, 5);
  CHECK(spec.gain[0] == 0.0);
  CHECK(spec.gain[2] == doctest::Approx(0.75));
  CHECK(spec.loss[2] == doctest::Approx(1.0));
  CHECK_FALSE(spec.extension);
  CHECK(make_spec(Family::Mixed, ModelParams::mixed(0.5, 1.0, 2.0), {}, 5).extension);
  const auto hc = make_spec(Family::HardCopy, ModelParams::hard_copy(0.5, 1.0), {}, 5);
  CHECK(hc.gain[3] == doctest::Approx(1.5));
  CHECK(hc.loss[0] == doctest::Approx(0.0));
  CHECK(family_for(ModelKind::HardCopy, ModelParams::hard_copy(1.0, 1.0)) == Family::PureCopy);
  CHECK(family_for(ModelKind::Mixed, ModelParams::mixed(1.0, 1.0, 1.0)) == Family::PureBa);
}

TEST_CASE("pure BA impulse solution") {
  Sequence phi(6, 0.0);
  phi[1] = 1.0;
  const auto fwd = solve_forward(make_spec(Family::PureBa, ModelParams::ba(1.0), phi, 5));
  const auto closed = closed_form_pure_ba(phi, 5);
  for (std::size_t k = 0; k < 6; ++k) {
    CHECK(fwd.d[k] == doctest::Approx(oracle::kBaImpulseD[k]).epsilon(1e-14));
    CHECK(closed.d[k] == doctest::Approx(oracle::kBaImpulseD[k]).epsilon(1e-14));
  }
  Sequence only0(6, 0.0);
  only0[0] = 0.3;
  const auto d0 = solve_forward(make_spec(Family::PureBa, ModelParams::ba(1.0), only0, 5));
  CHECK(d0.d[0] == 0.3);
  CHECK(std::accumulate(d0.d.begin() + 1, d0.d.end(), 0.0) == 0.0);
}

TEST_CASE("closed forms agree with the forward recursion on random forcings") {
  Rng rng(2024);
  for (int i = 0; i < 20; ++i) {
    const auto phi = random_forcing(rng, 10000);
    const auto fwd = solve_forward(make_spec(Family::PureBa, ModelParams::ba(1.0), phi, 10000));
    CHECK(max_rel_diff(fwd.d, closed_form_pure_ba(phi, 10000).d) <= 1e-12);
  }
  const auto params = ModelParams::mixed(0.5, 1.0, 1.0);
  for (int i = 0; i < 20; ++i) {
    const auto phi = random_forcing(rng, 1000);
    const auto fwd = solve_forward(make_spec(Family::Mixed, params, phi, 1000));
    CHECK(max_rel_diff(fwd.d, closed_form_mixed(phi, params, 1000).d) <= 1e-10);
  }
  CHECK_THROWS(closed_form_mixed({}, ModelParams::mixed(0.5, 1.0, 2.0), 10));
  CHECK_THROWS(closed_form_mixed({}, ModelParams::ba(1.0), 10));
}

TEST_CASE("closed form mixed at alpha one half") {
  const auto params = ModelParams::mixed(0.5, 1.0, 1.0);
  Sequence phi(3, 0.0);
  phi[0] = 1.0;
  CHECK(closed_form_mixed(phi, params, 2).d[0] == doctest::Approx(2.0 / 3.0));
  const auto up = closed_form_mixed(forcing_upper_phi(Family::Mixed, params, 2000), params, 2000);
  CHECK(up.d[10] == doctest::Approx(oracle::kMixedUpperD10).epsilon(1e-10));
  CHECK(tail_ratio(up, 1000) == doctest::Approx(oracle::kMixedUpperRatio1000).epsilon(1e-9));
}

TEST_CASE("tail constants and ratios of solved sequences") {
  const auto ba = closed_form_pure_ba(forcing_upper_phi(Family::PureBa, ModelParams::ba(1.0), 2000), 2000);
  CHECK(ba.d[1000] * 1e9 == doctest::Approx(oracle::kBaUpperK3DAt1000).epsilon(1e-10));
  CHECK(std::abs(ba.d[1000] * 1e9 / oracle::kBaUpperTailLimit - 1.0) < 0.01);
  CHECK(tail_ratio(ba, 1000) == doctest::Approx(oracle::kBaRatio1000).epsilon(1e-3));

  const auto hc_params = ModelParams::hard_copy(0.4, 1.0);
  const auto hc = solve_forward(make_spec(Family::HardCopy, hc_params,
                                          forcing_upper_phi(Family::HardCopy, hc_params, 2000), 2000));
  CHECK(tail_ratio(hc, 1000) == doctest::Approx(oracle::kHardCopy04Ratio1000).epsilon(1e-9));

  const auto half = ModelParams::hard_copy(0.5, 1.0);
  auto hc2 = solve_forward(make_spec(Family::HardCopy, half, forcing_upper_phi(Family::HardCopy, half, 4000), 4000));
  CHECK(tail_ratio(hc2, 1000) == doctest::Approx(oracle::kHardCopy05Ratio1000).epsilon(1e-9));
  attach_tail_fit(hc2, Family::HardCopy, half);
  REQUIRE(hc2.fitted_exponent);
  CHECK(*hc2.fitted_exponent == doctest::Approx(2.0).epsilon(0.02));

  const auto cl_params = ModelParams::classical(1.0);
  auto cl = solve_forward(make_spec(Family::Classical, cl_params,
                                    forcing_upper_phi(Family::Classical, cl_params, 200), 200));
  CHECK(cl.d[41] / cl.d[40] == doctest::Approx(0.5).epsilon(1e-12));
  attach_tail_fit(cl, Family::Classical, cl_params);
  REQUIRE(cl.fitted_ratio);
  CHECK(*cl.fitted_ratio == doctest::Approx(0.5).epsilon(1e-9));
}

TEST_CASE("pure copy has no stationary solution") {
  CHECK_THROWS_AS(solve_forward(make_spec(Family::PureCopy, ModelParams::hard_copy(1.0, 1.0), {}, 10)),
                  RecurrenceError);
}

TEST_CASE("predicted tail descriptors") {
  using Kind = TailDescriptor::Kind;
  const auto ba = predicted_exponent(Family::PureBa, ModelParams::ba(1.0));
  CHECK(ba.kind == Kind::PowerLaw);
  CHECK(ba.value == 3.0);
  CHECK(predicted_exponent(Family::Mixed, ModelParams::mixed(0.5, 1.0, 1.0)).value == doctest::Approx(5.0));
  const auto cl = predicted_exponent(Family::Classical, ModelParams::classical(1.0));
  CHECK(cl.kind == Kind::Geometric);
  CHECK(cl.value == doctest::Approx(0.5));
  CHECK(predicted_exponent(Family::HardCopy, ModelParams::hard_copy(0.4, 1.0)).value == doctest::Approx(2.5));
  CHECK(predicted_exponent(Family::PureCopy, ModelParams::hard_copy(1.0, 1.0)).kind == Kind::Degenerate);
}

TEST_CASE("general-zeta mixed preset reproduces its exponent") {
  const auto params = ModelParams::mixed(0.5, 1.0, 2.0);
  const auto beta = predicted_exponent(Family::Mixed, params).value;
  const auto sol = solve_forward(make_spec(Family::Mixed, params, forcing_upper_phi(Family::Mixed, params, 40000), 40000));
  CHECK(std::log2(sol.d[10000] / sol.d[20000]) == doctest::Approx(beta).epsilon(0.01));
}

TEST_CASE("comparing sandwich") {
  RecurrenceSolution s;
  s.d = {0.3, 0.2, 0.1};
  s.k_max = 2;
  const auto rows = comparing_sandwich(s, s, s.d, 0.0);
  REQUIRE(rows.size() == 3);
  for (const auto& r : rows) CHECK((r.lower_ok && r.upper_ok));
  const auto bad = comparing_sandwich(s, s, Sequence{0.3, 0.25}, 0.01);
  CHECK(bad.size() == 2);
  CHECK_FALSE(bad[1].upper_ok);
  CHECK(sandwich_slack(2.0, 100000) == doctest::Approx(2.0 * std::pow(1e5, -0.2)));
}

TEST_CASE("master evolution matches exact small-t expectations") {
  // Pure copy at t = 2 and t = 3.
  const auto pc = evolve_master(Family::PureCopy, ModelParams::hard_copy(1.0, 1.0), NoForcing{}, 5, 10, {2, 3});
  CHECK(pc.snapshots.at(2)[1] == doctest::Approx(2.0));
  CHECK(pc.snapshots.at(2)[2] == doctest::Approx(1.0));
  CHECK(pc.snapshots.at(3)[2] == doctest::Approx(oracle::kPureCopyMeanD2At3));
  for (std::size_t k = 0; k < 6; ++k) CHECK(pc.final_counts[k] == doctest::Approx(oracle::kPureCopyMeanCounts[k]));

  // Classical and hard copy expectations are linear in the histogram, so the
  // evolution is exact.
  const auto cl_params = ModelParams::classical(1.0);
  const auto cl = evolve_master(Family::Classical, cl_params, natural_forcing(Family::Classical, cl_params), 5, 10);
  for (std::size_t k = 0; k < 6; ++k) {
    CHECK(cl.final_counts[k] == doctest::Approx(oracle::kClassicalZeta1MeanCounts[k]).epsilon(1e-12));
  }
  const auto hc_params = ModelParams::hard_copy(0.5, 1.0);
  const auto hc = evolve_master(Family::HardCopy, hc_params, natural_forcing(Family::HardCopy, hc_params), 5, 10);
  for (std::size_t k = 0; k < 6; ++k) {
    CHECK(hc.final_counts[k] == doctest::Approx(oracle::kHardCopyHalfMeanCounts[k]).epsilon(1e-12));
  }
}

TEST_CASE("master evolution conserves the vertex budget") {
  const auto params = ModelParams::ba(1.0);
  const auto phi = poisson_pmf(1.0, 60);
  const auto traj = evolve_master(Family::PureBa, params, StationaryForcing{phi}, 5000, 200);
  CHECK(traj.total() + traj.truncated_mass == doctest::Approx(5001.0).epsilon(1e-12));
  CHECK(std::abs(traj.total() + traj.truncated_mass - 5001.0) <= 1e-9);

  const auto small = evolve_master(Family::PureBa, params, StationaryForcing{phi}, 3000, 20);
  CHECK(small.truncated_mass > 0.0);
  CHECK(std::abs(small.total() + small.truncated_mass - 3001.0) <= 1e-9);

  const auto hc_params = ModelParams::hard_copy(0.4, 1.0);
  const auto hc = evolve_master(Family::HardCopy, hc_params, natural_forcing(Family::HardCopy, hc_params), 3000, 3001);
  CHECK(std::abs(hc.total() + hc.truncated_mass - 3001.0) <= 1e-9);

  const auto zeta3 = ModelParams::classical(3.0);
  const auto cl = evolve_master(Family::Classical, zeta3, natural_forcing(Family::Classical, zeta3), 1000, 1001, {2});
  CHECK(cl.snapshots.at(2)[2] == doctest::Approx(3.0));
  CHECK(std::abs(cl.total() - 1001.0) <= 1e-9);
}

TEST_CASE("pure BA master evolution approaches the stationary solution") {
  const auto params = ModelParams::ba(1.0);
  const auto phi = poisson_pmf(1.0, 60);
  const auto stationary = solve_forward(make_spec(Family::PureBa, params, phi, 100));
  const auto traj = evolve_master(Family::PureBa, params, StationaryForcing{phi}, 20000, 100);
  for (std::size_t k = 0; k <= 20; ++k) {
    CHECK(std::abs(traj.final_counts[k] / 20000.0 - stationary.d[k]) < 1e-3);
  }
}

TEST_CASE("master evolution rejects mis-set coefficients") {
  // Mixed with a large classical rate drives class 1 negative at t = 1.
  CHECK_THROWS_AS(evolve_master(Family::Mixed, ModelParams::mixed(0.5, 4.0, 4.0),
                                StationaryForcing{poisson_pmf(4.0, 30)}, 10, 30),
                  RecurrenceError);
  CHECK_THROWS(natural_forcing(Family::PureBa, ModelParams::ba(1.0)));
}
