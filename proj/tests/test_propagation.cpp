#include <doctest.h>

#include <cmath>

#include "optchan/constants.hpp"
#include "optchan/errors.hpp"
#include "optchan/propagation.hpp"

using namespace optchan;

TEST_SUITE("propagation") {

TEST_CASE("default geometry ties the cavity to the transition wavelength") {
  const auto geometry = propagation::default_geometry(10);
  CHECK(geometry.l0 == doctest::Approx(10 * 1.24e-6 / (2.0 * 2.2)).epsilon(1e-15));
  CHECK(geometry.l == doctest::Approx(200.0 * geometry.l0).epsilon(1e-15));
  CHECK(geometry.resonant_index() == doctest::Approx(2000.0).epsilon(1e-12));
}

TEST_CASE("dispersion units round-trip") {
  const auto geometry = propagation::default_geometry(1);
  const auto params = propagation::DispersionParams::from_ps_nm_km(10.0, geometry);
  CHECK(params.d_ps_nm_km() == doctest::Approx(10.0).epsilon(1e-15));
  CHECK(params.d_si == doctest::Approx(10.0e-6).epsilon(1e-15));
}

TEST_CASE("dispersive frequency matches hand arithmetic") {
  const modes::CavityGeometry geometry{5e-6, 1e-3, 2.2, 10};
  const auto params = propagation::DispersionParams::from_ps_nm_km(10.0, geometry);
  const double c = 299792458.0;
  // s = 1000 sits halfway to the resonant mode 2000
  const double expected =
      (std::acos(-1.0) * c / 2.2) *
      (1000.0 / 1e-3 + (c * 10.0e-6 / (2.2 * 2.2)) * 0.25);
  CHECK(propagation::dispersive_frequency(params, 1000) ==
        doctest::Approx(expected).epsilon(1e-14));
  // the resonant mode is dispersion-free
  const double free_running = std::acos(-1.0) * 2000.0 * c / (2.2 * 1e-3);
  CHECK(propagation::dispersive_frequency(params, 2000) ==
        doctest::Approx(free_running).epsilon(1e-14));
}

TEST_CASE("round-trip time is 2 l n / c") {
  const auto geometry = propagation::default_geometry(1);
  CHECK(propagation::roundtrip_time(geometry) ==
        doctest::Approx(2.0 * geometry.l * 2.2 / constants::speed_of_light)
            .epsilon(1e-15));
}

TEST_CASE("zero dispersion gives an exact revival") {
  for (int s0 : {1, 4}) {
    const auto geometry = propagation::default_geometry(s0);
    const auto spectrum = modes::population_spectrum(geometry);
    const auto params = propagation::DispersionParams::from_ps_nm_km(0.0, geometry);
    // the truncated tail (budget 1e-8) bounds how close to 1 the sum can be
    CHECK(propagation::roundtrip_fidelity(params, spectrum) ==
          doctest::Approx(1.0).epsilon(1e-7));
    CHECK(propagation::roundtrip_fidelity(params, spectrum,
                                          propagation::FidelityMethod::grid) ==
          doctest::Approx(1.0).epsilon(1e-7));
  }
}

TEST_CASE("spectral and grid fidelities agree off revival") {
  const auto geometry = propagation::default_geometry(1);
  const auto spectrum = modes::population_spectrum(geometry);
  const auto params = propagation::DispersionParams::from_ps_nm_km(10.0, geometry);
  const double spectral = propagation::roundtrip_fidelity(params, spectrum);
  const double grid = propagation::roundtrip_fidelity(
      params, spectrum, propagation::FidelityMethod::grid);
  CHECK(spectral < 1.0);
  CHECK(std::abs(spectral - grid) < 1e-8);
}

TEST_CASE("initial snapshot reproduces the isolated-cavity mode") {
  const auto geometry = propagation::default_geometry(1);
  const auto spectrum = modes::population_spectrum(geometry);
  const auto params = propagation::DispersionParams::from_ps_nm_km(5.0, geometry);
  const auto state =
      propagation::field_snapshot(params, spectrum, 0.0, 2 * spectrum.s_max + 1);
  REQUIRE(state.grid.size() == state.values.size());
  // find the grid point closest to the isolated-cavity antinode
  const double antinode = geometry.l0 / 2.0;
  std::size_t closest = 0;
  for (std::size_t i = 1; i < state.grid.size(); ++i)
    if (std::abs(state.grid[i] - antinode) < std::abs(state.grid[closest] - antinode))
      closest = i;
  const double expected = std::sqrt(2.0 / geometry.l0) *
                          std::sin(std::acos(-1.0) * state.grid[closest] / geometry.l0);
  CHECK(state.values[closest].real() == doctest::Approx(expected).epsilon(1e-4));
  CHECK(std::abs(state.values[closest].imag()) < 1e-9 * std::abs(expected));
}

TEST_CASE("undersampled snapshot grid is rejected") {
  const auto geometry = propagation::default_geometry(1);
  const auto spectrum = modes::population_spectrum(geometry);
  const auto params = propagation::DispersionParams::from_ps_nm_km(0.0, geometry);
  CHECK_THROWS_AS(propagation::field_snapshot(params, spectrum, 0.0, 101),
                  GridUndersampledError);
}

TEST_CASE("fidelity sweep is ordered by (s0, D)") {
  const auto points = propagation::fidelity_sweep({2, 1}, {4.0, 0.0});
  REQUIRE(points.size() == 4);
  CHECK(points[0].s0 == 1);
  CHECK(points[0].d_ps_nm_km == 0.0);
  CHECK(points[1].s0 == 1);
  CHECK(points[1].d_ps_nm_km == 4.0);
  CHECK(points[2].s0 == 2);
  CHECK(points[3].s0 == 2);
  CHECK(points[0].fidelity == doctest::Approx(1.0).epsilon(1e-7));
  CHECK(points[1].fidelity < points[0].fidelity);
}

}
