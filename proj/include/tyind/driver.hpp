#pragma once

#include <complex>
#include <string>

#include "tyind/verify.hpp"

namespace tyind {

// 12-significant-digit rendering; components below 1e-12 of the magnitude
// are treated as zero so exact integers print as integers.
std::string format_complex(std::complex<double> z);

// Canonical exact rendering of a value (normalized scale, reduced conductor).
std::string exact_str(const ScaledValue& v);

// JSON producers behind the C API; all output is deterministic for a fixed
// input (sorted keys, fixed orderings, canonical exact strings).
std::string table_json(const Bicharacter& chi, int tau_sign, int64_t n_min, int64_t n_max,
                       const WorkBounds& wb);
// pass=false when some check failed; the JSON always carries the report.
std::pair<std::string, bool> verify_json(const Bicharacter& chi, int tau_sign,
                                         const std::string& suite, int64_t kmax,
                                         const WorkBounds& wb);
std::string center_json(const Bicharacter& chi, int tau_sign);
std::string fiber_json(const Bicharacter& chi, int tau_sign, const WorkBounds& wb);
std::string frobenius_json(const Bicharacter& chi, int tau_sign, const WorkBounds& wb);
std::string certificate_json(const Bicharacter& chi, int tau_sign, int64_t k,
                             const WorkBounds& wb);
std::string classify_json(int64_t order, const WorkBounds& wb);

}  // namespace tyind
