#include "powfrac/report_io.hpp"

#include <cmath>
#include <fstream>
#include <system_error>

#include "powfrac/error.hpp"

namespace powfrac::io {

int decimal_digits(mp::Bits bits) {
    return static_cast<int>(std::ceil(static_cast<double>(bits) * std::log10(2.0)));
}

std::string tagged_decimal(const mpq_class& value, mp::Bits bits) {
    return orbit::fixed_decimal(value, decimal_digits(bits));
}

std::string orbit_csv_row(const orbit::OrbitSample& s) {
    return std::to_string(s.n) + ',' + s.x.get_str() + ',' + s.y_string() + ',' + std::to_string(s.bits_used) + ',' +
           (s.exact ? "true" : "false");
}

std::string orbit_csv(const std::vector<orbit::OrbitSample>& samples) {
    std::string out(kOrbitCsvHeader);
    out += '\n';
    for (const auto& s : samples) {
        out += orbit_csv_row(s);
        out += '\n';
    }
    return out;
}

std::string histogram_csv(const salem::DensityReport& report) {
    std::string out(kHistogramCsvHeader);
    out += '\n';
    const auto bins = static_cast<long>(report.histogram.size());
    for (long k = 0; k < bins; ++k) {
        out += orbit::fixed_decimal(mpq_class(k, bins), 9) + ',' + orbit::fixed_decimal(mpq_class(k + 1, bins), 9) + ',' +
               std::to_string(report.histogram[static_cast<std::size_t>(k)]) + '\n';
    }
    return out;
}

void write_atomic(const std::filesystem::path& path, std::string_view content) {
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f) throw Error(ErrorKind::BadInput, "io", "cannot open " + tmp.string() + " for writing");
        f.write(content.data(), static_cast<std::streamsize>(content.size()));
        if (!f) throw Error(ErrorKind::BadInput, "io", "write failed for " + tmp.string());
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) throw Error(ErrorKind::BadInput, "io", "cannot rename " + tmp.string() + ": " + ec.message());
}

}  // namespace powfrac::io
