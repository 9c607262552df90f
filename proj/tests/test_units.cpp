#include <doctest.h>

#include <sstream>

#include "optchan/io.hpp"
#include "optchan/units.hpp"

using namespace optchan;

TEST_SUITE("units") {

TEST_CASE("length parsing requires a unit suffix") {
  CHECK(units::parse_length("1.24um") == doctest::Approx(1.24e-6).epsilon(1e-15));
  CHECK(units::parse_length("5nm") == doctest::Approx(5e-9).epsilon(1e-15));
  CHECK(units::parse_length("1mm") == doctest::Approx(1e-3).epsilon(1e-15));
  CHECK(units::parse_length("2m") == doctest::Approx(2.0).epsilon(1e-15));
  CHECK_THROWS_AS(units::parse_length("1.24"), std::invalid_argument);
  CHECK_THROWS_AS(units::parse_length("um"), std::invalid_argument);
  CHECK_THROWS_AS(units::parse_length("1.24kg"), std::invalid_argument);
}

TEST_CASE("time parsing covers the SI ladder") {
  CHECK(units::parse_time("3ps") == doctest::Approx(3e-12).epsilon(1e-15));
  CHECK(units::parse_time("1.5ns") == doctest::Approx(1.5e-9).epsilon(1e-15));
  CHECK_THROWS_AS(units::parse_time("10"), std::invalid_argument);
}

TEST_CASE("dispersion parses both quoted units") {
  CHECK(units::parse_dispersion("10ps_nm_km") == doctest::Approx(10.0).epsilon(1e-15));
  CHECK(units::parse_dispersion("1e-5s_m2") == doctest::Approx(10.0).epsilon(1e-12));
  CHECK_THROWS_AS(units::parse_dispersion("10"), std::invalid_argument);
}

TEST_CASE("intensity normalizes to W/cm^2") {
  CHECK(units::parse_intensity("1e11W_cm2") == doctest::Approx(1e11).epsilon(1e-15));
  CHECK(units::parse_intensity("1e15W_m2") == doctest::Approx(1e11).epsilon(1e-12));
}

TEST_CASE("kerr coefficient normalizes to m^2/W") {
  CHECK(units::parse_kerr_coefficient("83.3e-16cm2_W") ==
        doctest::Approx(83.3e-20).epsilon(1e-12));
  CHECK(units::parse_kerr_coefficient("1e-18m2_W") ==
        doctest::Approx(1e-18).epsilon(1e-15));
}

TEST_CASE("dipole and volume parsing") {
  CHECK(units::parse_dipole("1e-28C_m") == doctest::Approx(1e-28).epsilon(1e-15));
  CHECK(units::parse_volume("1um3") == doctest::Approx(1e-18).epsilon(1e-12));
  CHECK(units::parse_volume("2cm3") == doctest::Approx(2e-6).epsilon(1e-12));
}

TEST_CASE("format_double emits shortest round-trip decimals") {
  CHECK(units::format_double(1.0) == "1");
  CHECK(units::format_double(0.1) == "0.1");
  CHECK(units::format_double(0.0) == "0");
  CHECK(std::stod(units::format_double(1.24e-6)) == 1.24e-6);
  CHECK(std::stod(units::format_double(0.03823755703800358)) ==
        0.03823755703800358);
}

TEST_CASE("fidelity CSV layout") {
  std::ostringstream out;
  io::write_fidelity_csv(out, {{1, 0.0, 1.0}, {1, 2.5, 0.75}});
  CHECK(out.str() == "s0,D_ps_per_nm_km,F\n1,0,1\n1,2.5,0.75\n");
}

TEST_CASE("spectrum CSV layout") {
  std::ostringstream out;
  io::write_spectrum_csv(out, {{1, 0.25}, {2, 1.0}});
  CHECK(out.str() == "s,value\n1,0.25\n2,1\n");
}

TEST_CASE("reflectivity CSV layout") {
  std::ostringstream out;
  device::ReflectivitySpectrum spectrum;
  spectrum.wavelengths = {1.24e-6};
  spectrum.reflectivity = {0.5};
  spectrum.transmissivity = {0.5};
  io::write_reflectivity_csv(out, spectrum);
  CHECK(out.str() == "lambda_m,R,T\n1.24e-06,0.5,0.5\n");
}

}
