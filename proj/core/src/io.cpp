#include "blanc/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace blanc::io {

using nlohmann::json;

namespace {

json parse_json(std::string_view text, std::string_view what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(Errc::invalid_argument, std::string(what) + ": " + e.what());
  }
}

Rational rational_field(const json& j, std::string_view what) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw Error(Errc::malformed_rational, std::string(what) + " must be a rational string");
}

json enclosure_json(const Enclosure& e) { return {{"lo", e.lo.str()}, {"hi", e.hi.str()}}; }

json generator_object(const Generator& g) {
  json vertices = json::array();
  for (const auto& v : g.vertices()) vertices.push_back(v.str());
  return {{"p", g.p()}, {"vertices", vertices}};
}

Generator generator_from(const json& j) {
  if (!j.is_object() || !j.contains("p") || !j.contains("vertices") ||
      !j["p"].is_number_integer() || !j["vertices"].is_array()) {
    throw Error(Errc::invalid_argument,
                R"(generator JSON must look like {"p": int, "vertices": [...]})");
  }
  std::vector<Rational> vertices;
  for (const auto& v : j["vertices"]) vertices.push_back(rational_field(v, "vertex"));
  return Generator::make(j["p"].get<std::int64_t>(), std::move(vertices));
}

json spec_object(const BlancmangeSpec& spec) {
  return {{"generator", generator_object(spec.gen())}, {"c", spec.c()}};
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '"')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r' || s.back() == '"')) {
    s.remove_suffix(1);
  }
  return s;
}

}  // namespace

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::io_error, "cannot open '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::filesystem::path& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(Errc::io_error, "cannot write '" + path.string() + "'");
  out << contents;
  if (!out) throw Error(Errc::io_error, "write failed for '" + path.string() + "'");
}

Generator parse_generator_json(std::string_view text) {
  return generator_from(parse_json(text, "generator JSON"));
}

std::string generator_json(const Generator& g) { return generator_object(g).dump(); }

Generator load_generator(const std::filesystem::path& path) {
  return parse_generator_json(read_file(path));
}

BlancmangeSpec parse_spec_json(std::string_view text, const std::filesystem::path& base_dir) {
  const json j = parse_json(text, "spec JSON");
  if (!j.is_object() || !j.contains("generator") || !j.contains("c") ||
      !j["c"].is_number_integer()) {
    throw Error(Errc::invalid_argument,
                R"(spec JSON must look like {"generator": <object or path>, "c": int})");
  }
  const json& g = j["generator"];
  Generator gen = g.is_string() ? load_generator(base_dir / g.get<std::string>())
                                : generator_from(g);
  return BlancmangeSpec::make(std::move(gen), j["c"].get<std::int64_t>());
}

std::string spec_json(const BlancmangeSpec& spec) { return spec_object(spec).dump(); }

BlancmangeSpec load_spec(const std::filesystem::path& path) {
  return parse_spec_json(read_file(path), path.parent_path());
}

std::string series_value_json(const BlancmangeSpec& spec, const SeriesValue& value,
                              const std::optional<Rational>& exact) {
  json j;
  const auto pt = BAdicPoint::from_rational(spec, value.point);
  j["t"] = pt ? pt->lattice_str(spec) : value.point.str();
  j["lo"] = value.enclosure.lo.str();
  j["hi"] = value.enclosure.hi.str();
  j["n_used"] = value.n_used;
  if (exact) j["exact"] = exact->str();
  return j.dump();
}

std::string witness_json(const NonAffineWitness& w) {
  json points = json::array();
  for (std::size_t i = 0; i < 3; ++i) {
    points.push_back(json::array({w.abscissae[i].str(), w.values[i].str()}));
  }
  json j;
  j["interval"] = {{"m", w.interval.m}, {"j", w.interval.j.get_str()}};
  j["points"] = points;
  j["det"] = w.det.str();
  return j.dump();
}

std::string defect_json(const DefectReport& report) {
  json j;
  j["n"] = report.n;
  j["defect"] = enclosure_json(report.defect);
  j["normalized"] = enclosure_json(report.normalized);
  return j.dump();
}

std::string approximation_json(const ApproximationResult& result, const Rational& eps) {
  json j;
  j["spec"] = spec_object(result.spec);
  j["eps"] = eps.str();
  j["interp_error"] = enclosure_json(result.interp_error);
  j["series_error"] = enclosure_json(result.series_error);
  j["total"] = enclosure_json(result.total);
  j["certified"] = result.total.hi < eps;
  return j.dump(2);
}

std::string scan_csv(const std::vector<ScanRow>& rows) {
  std::string out = "n,h,slope\n";
  for (const auto& row : rows) {
    out += std::to_string(row.n) + "," + row.h.str() + "," + row.slope.str() + "\n";
  }
  return out;
}

SampledFunction parse_samples_csv(std::string_view text) {
  std::vector<SampledFunction::Sample> samples;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    ++line_no;
    line = trim(line);
    if (line.empty() || line.front() == '#') continue;
    const auto comma = line.find(',');
    if (comma == std::string_view::npos) {
      throw Error(Errc::invalid_samples,
                  "samples line " + std::to_string(line_no) + ": expected two columns");
    }
    const auto t_text = trim(line.substr(0, comma));
    const auto f_text = trim(line.substr(comma + 1));
    if (samples.empty() && t_text == "t" && f_text == "f") continue;
    try {
      samples.emplace_back(Rational::parse(t_text), Rational::parse(f_text));
    } catch (const Error& e) {
      throw Error(e.code(), "samples line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  if (samples.empty()) throw Error(Errc::empty_sample_set, "no samples in CSV");
  return SampledFunction::make(std::move(samples));
}

SampledFunction load_samples(const std::filesystem::path& path) {
  return parse_samples_csv(read_file(path));
}

}  // namespace blanc::io
