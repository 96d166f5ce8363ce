#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "blanc/approximate.hpp"
#include "blanc/certify.hpp"
#include "blanc/series.hpp"
#include "blanc/zoom.hpp"

// File formats. Rationals are always serialized as canonical "p/q" or "p"
// strings. All parsers throw blanc::Error on malformed input.
namespace blanc::io {

/// {"p": int, "vertices": ["0", "1/2", "0"]}
Generator parse_generator_json(std::string_view text);
std::string generator_json(const Generator& g);
Generator load_generator(const std::filesystem::path& path);

/// {"generator": <generator object or path>, "c": int}. A relative path is
/// resolved against base_dir.
BlancmangeSpec parse_spec_json(std::string_view text, const std::filesystem::path& base_dir = {});
std::string spec_json(const BlancmangeSpec& spec);
BlancmangeSpec load_spec(const std::filesystem::path& path);

/// {"t": "j/(p*b^m)" or "p/q", "lo": ..., "hi": ..., "n_used": int}, plus
/// "exact" when the value is known exactly.
std::string series_value_json(const BlancmangeSpec& spec, const SeriesValue& value,
                              const std::optional<Rational>& exact = std::nullopt);

/// {"interval": {"m": int, "j": "..."}, "points": [["t", "v"], ...], "det": "p/q"}
/// with points ordered left, right, middle.
std::string witness_json(const NonAffineWitness& w);

/// {"n": int, "defect": {"lo", "hi"}, "normalized": {"lo", "hi"}}
std::string defect_json(const DefectReport& report);

/// Spec plus the three error enclosures and the target eps.
std::string approximation_json(const ApproximationResult& result, const Rational& eps);

/// Header "n,h,slope" then one row per scale.
std::string scan_csv(const std::vector<ScanRow>& rows);

/// Two columns "t","f" of rationals; a header row is optional.
SampledFunction parse_samples_csv(std::string_view text);
SampledFunction load_samples(const std::filesystem::path& path);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view contents);

}  // namespace blanc::io
