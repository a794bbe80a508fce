#ifndef POWFRAC_REPORT_IO_HPP
#define POWFRAC_REPORT_IO_HPP

#include <gmpxx.h>

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "powfrac/orbit.hpp"
#include "powfrac/real.hpp"
#include "powfrac/salem.hpp"

namespace powfrac::io {

inline constexpr std::string_view kOrbitCsvHeader = "n,x_n,y_n,bits_used,exact";
inline constexpr std::string_view kHistogramCsvHeader = "bin_lo,bin_hi,count";

/// Decimal digits that carry `bits` binary digits.
int decimal_digits(mp::Bits bits);

/// Truncated decimal of value with the digits matching `bits`.
std::string tagged_decimal(const mpq_class& value, mp::Bits bits);

std::string orbit_csv_row(const orbit::OrbitSample& s);
std::string orbit_csv(const std::vector<orbit::OrbitSample>& samples);
std::string histogram_csv(const salem::DensityReport& report);

/// Writes through a temporary file in the same directory and renames it.
void write_atomic(const std::filesystem::path& path, std::string_view content);

}  // namespace powfrac::io

#endif  // POWFRAC_REPORT_IO_HPP
