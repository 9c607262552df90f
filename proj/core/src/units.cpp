#include "optchan/units.hpp"

#include <array>
#include <charconv>
#include <cstdlib>
#include <span>
#include <stdexcept>
#include <utility>

namespace optchan::units {

namespace {

struct Suffix {
  const char* name;
  double factor;
};

double parse_with_suffixes(const std::string& text, const char* quantity,
                           std::span<const Suffix> suffixes) {
  for (const auto& suffix : suffixes) {
    const std::string_view name(suffix.name);
    if (text.size() > name.size() &&
        text.compare(text.size() - name.size(), name.size(), name) == 0) {
      const std::string number = text.substr(0, text.size() - name.size());
      char* end = nullptr;
      const double value = std::strtod(number.c_str(), &end);
      if (end != number.c_str() + number.size() || number.empty())
        throw std::invalid_argument(std::string(quantity) + ": bad number in '" +
                                    text + "'");
      return value * suffix.factor;
    }
  }
  throw std::invalid_argument(std::string(quantity) +
                              ": missing or unknown unit suffix in '" + text + "'");
}

}  // namespace

double parse_length(const std::string& text) {
  // Longer suffixes first so "nm" is not read as "m".
  static constexpr std::array<Suffix, 4> suffixes{
      {{"mm", 1e-3}, {"um", 1e-6}, {"nm", 1e-9}, {"m", 1.0}}};
  return parse_with_suffixes(text, "length", suffixes);
}

double parse_time(const std::string& text) {
  static constexpr std::array<Suffix, 6> suffixes{{{"ms", 1e-3},
                                                   {"us", 1e-6},
                                                   {"ns", 1e-9},
                                                   {"ps", 1e-12},
                                                   {"fs", 1e-15},
                                                   {"s", 1.0}}};
  return parse_with_suffixes(text, "time", suffixes);
}

double parse_dispersion(const std::string& text) {
  static constexpr std::array<Suffix, 2> suffixes{
      {{"ps_nm_km", 1.0}, {"s_m2", 1e6}}};
  return parse_with_suffixes(text, "dispersion", suffixes);
}

double parse_intensity(const std::string& text) {
  static constexpr std::array<Suffix, 2> suffixes{
      {{"W_cm2", 1.0}, {"W_m2", 1e-4}}};
  return parse_with_suffixes(text, "intensity", suffixes);
}

double parse_kerr_coefficient(const std::string& text) {
  static constexpr std::array<Suffix, 2> suffixes{
      {{"cm2_W", 1e-4}, {"m2_W", 1.0}}};
  return parse_with_suffixes(text, "kerr coefficient", suffixes);
}

double parse_dipole(const std::string& text) {
  static constexpr std::array<Suffix, 1> suffixes{{{"C_m", 1.0}}};
  return parse_with_suffixes(text, "dipole moment", suffixes);
}

double parse_volume(const std::string& text) {
  static constexpr std::array<Suffix, 3> suffixes{
      {{"um3", 1e-18}, {"cm3", 1e-6}, {"m3", 1.0}}};
  return parse_with_suffixes(text, "volume", suffixes);
}

std::string format_double(double value) {
  std::array<char, 64> buffer;
  const auto result =
      std::to_chars(buffer.data(), buffer.data() + buffer.size(), value);
  return std::string(buffer.data(), result.ptr);
}

}  // namespace optchan::units
