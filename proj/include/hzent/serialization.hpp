#pragma once

// Text formats shared by the CLI and its tests. Every floating-point value is
// written with 17 significant digits via std::to_chars, so output is
// byte-deterministic and locale-independent.

#include "hzent/collapse_geometry.hpp"
#include "hzent/entanglement.hpp"
#include "hzent/fock.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hzent {

inline constexpr std::string_view kCsvHeader = "x,omega,mass,statistics,S_closed,S_numeric,gap,mean_occ,T_ratio,error";

/// 17 significant digits; "nan" / "inf" / "-inf" for non-finite values.
std::string format_double(double v);

/// CSV row (no trailing newline) in kCsvHeader column order. Error rows leave
/// the numeric report columns empty and quote the message.
std::string csv_row(const SweepPoint& point, double mass);

/// JSON object with the CSV field names. Non-finite numbers become null.
std::string json_object(const SweepPoint& point, double mass);

/// CSV header + rows, or a JSON array, newline terminated.
std::string format_points(const std::vector<SweepPoint>& points, double mass, bool json);

struct StateHeader {
    Statistics statistics;
    double r;
    double x;
};

/// {"squeezing": {...}, "basis": [...], "diag": [...], "offdiag_norm": ...}
/// Bosonic labels are integers n, fermionic labels [particle, antiparticle].
/// `extra` is spliced in as additional members (pre-rendered "key": value pairs).
std::string density_to_json(const DensityOperator& rho, const std::optional<StateHeader>& header,
                            const std::vector<std::pair<std::string, std::string>>& extra = {});

/// Rebuilds a diagonal DensityOperator from density_to_json output. Throws
/// InvalidDensityOperator if offdiag_norm exceeds 1e-10 (off-diagonal entries
/// are not serialized) and InvalidParameter on malformed input. The trace may
/// fall short of 1 by up to 1e-6, the largest tail a bosonic state may drop.
DensityOperator density_from_json(std::string_view text);

} // namespace hzent
