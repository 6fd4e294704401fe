#include "morita/cli.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>

#include <openssl/evp.h>

#include "morita/error.hpp"
#include "morita/linalg.hpp"
#include "morita/pluecker.hpp"

namespace morita {

std::string sha256_hex(std::string_view bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  EVP_Digest(bytes.data(), bytes.size(), digest, &length, EVP_sha256(), nullptr);
  std::ostringstream out;
  for (unsigned int i = 0; i < length; ++i)
    out << std::hex << std::setw(2) << std::setfill('0') << int(digest[i]);
  return out.str();
}

Json to_json(const HomogeneousCurve& c) {
  return Json::parse(to_curve_json(c));
}

Json to_json(const CurveReport& report) {
  Json out;
  out["d"] = report.d;
  out["degree"] = report.degree;
  out["splitting"] = report.splitting.exponents;
  out["width"] = report.splitting.width;
  out["delta_nonzero"] = report.delta_nonzero ? Json(*report.delta_nonzero) : Json();
  out["sigma_zero"] = report.sigma_zero ? Json(*report.sigma_zero) : Json();
  if (report.chart) {
    out["chart"] = to_string(report.chart->chart);
    out["chart_rows"] = pluecker_label(report.d, report.chart->inverted_rows);
    out["chart_map"] = to_json(report.chart->y);
  } else {
    out["chart"] = nullptr;
  }
  return out;
}

Json to_json(const GroupElement& g) {
  Json out;
  out["A"] = to_json(g.a());
  out["B"] = to_json(g.b());
  out["C"] = to_json(g.c());
  out["D"] = to_json(g.d_block());
  return out;
}

Json to_json(const MoritaVerdict& verdict) {
  Json out;
  out["accepted"] = verdict.accepted;
  out["reason"] = to_string(verdict.reason);
  out["witness"] = verdict.witness ? to_json(*verdict.witness) : Json();
  out["base_point"] = verdict.base_point ? Json(to_string(*verdict.base_point)) : Json();
  out["notes"] = verdict.notes;
  out["report"] = to_json(verdict.report);
  return out;
}

namespace {

Report input_error(const std::string& command, const std::string& digest,
                   const std::string& message, std::size_t line = 0,
                   std::size_t column = 0) {
  Report r{command, digest, Json(), 2};
  r.result["error"] = message;
  if (line) {
    r.result["line"] = line;
    r.result["column"] = column;
  }
  return r;
}

// Runs body(curve) on the parsed file, mapping parse failures to exit 2.
template <typename Body>
Report with_curve(const std::string& command, const std::string& text, Body body) {
  const std::string digest = sha256_hex(text);
  std::optional<HomogeneousCurve> curve;
  try {
    curve = parse_curve(text);
  } catch (const ParseError& e) {
    return input_error(command, digest, e.what(), e.line(), e.column());
  }
  Report r{command, digest, Json(), 0};
  try {
    body(*curve, r);
  } catch (const MathError& e) {
    return input_error(command, digest, e.what());
  }
  return r;
}

std::optional<std::string> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

template <typename Fn>
Report from_file(const std::string& command, const std::string& path, Fn fn) {
  const auto text = read_file(path);
  if (!text) return input_error(command, "", "cannot read " + path);
  return fn(*text);
}

}  // namespace

Report analyze_text(const std::string& text) {
  return with_curve("analyze", text, [](const HomogeneousCurve& c, Report& r) {
    r.result = to_json(analyze(c));
  });
}

Report decide_text(const std::string& text) {
  return with_curve("decide", text, [](const HomogeneousCurve& c, Report& r) {
    const MoritaVerdict verdict = decide_morita(c);
    r.result = to_json(verdict);
    r.exit_code = verdict.accepted ? 0 : 1;
  });
}

Report klein_text(const std::string& text) {
  return with_curve("klein", text, [](const HomogeneousCurve& c, Report& r) {
    if (c.d() != 2) throw MathError("klein needs a d = 2 curve, got d = " + std::to_string(c.d()));
    const PlueckerVector p = pluecker_vector(c);
    const auto rows = subsets(4, 2);
    Json coords;
    for (std::size_t k = 0; k < rows.size(); ++k)
      coords[pluecker_label(2, rows[k])] = to_string(p.coords[k]);
    const auto plane = morita_plane_residuals(c);
    Json residuals;
    residuals["z_11,21"] = to_string(plane[0]);
    residuals["z_12,22"] = to_string(plane[1]);
    residuals["z_11,22 + z_12,21"] = to_string(plane[2]);
    r.result["coordinates"] = coords;
    r.result["quadric_residual"] = to_string(klein_quadric_residual(c));
    r.result["plane_residuals"] = residuals;
    r.result["on_morita_plane"] =
        plane[0].is_zero() && plane[1].is_zero() && plane[2].is_zero();
  });
}

Report replay_text(const std::string& text) {
  const std::string digest = sha256_hex(text);
  Report r{"laws", digest, Json(), 0};
  try {
    const Json instance = Json::parse(text);
    r.result["suite"] = instance.value("suite", "");
    bool ok = false;
    try {
      ok = check_instance(instance);
    } catch (const MathError& e) {
      r.result["error"] = e.what();
    }
    r.result["passed"] = ok;
    r.exit_code = ok ? 0 : 1;
  } catch (const Json::parse_error& e) {
    return input_error("laws", digest, e.what());
  } catch (const ParseError& e) {
    return input_error("laws", digest, e.what());
  } catch (const Json::exception& e) {
    return input_error("laws", digest, e.what());
  }
  return r;
}

Report cmd_analyze(const std::string& path) { return from_file("analyze", path, analyze_text); }
Report cmd_decide(const std::string& path) { return from_file("decide", path, decide_text); }
Report cmd_klein(const std::string& path) { return from_file("klein", path, klein_text); }
Report cmd_replay(const std::string& path) { return from_file("laws", path, replay_text); }

Report cmd_laws(Index d, int trials, std::uint64_t seed) {
  Json params;
  params["d"] = d;
  params["trials"] = trials;
  params["seed"] = seed;
  const std::string digest = sha256_hex(params.dump());
  if (d < 1 || d > 12) return input_error("laws", digest, "--d must be between 1 and 12");
  if (trials < 1) return input_error("laws", digest, "--trials must be at least 1");

  Report r{"laws", digest, Json(), 0};
  r.result["d"] = d;
  r.result["trials"] = trials;
  r.result["seed"] = seed;
  Json suites = Json::array();
  Json failures = Json::array();
  for (const SuiteResult& s : run_laws(d, trials, seed)) {
    Json entry;
    entry["suite"] = to_string(s.suite);
    entry["trials"] = s.trials;
    entry["passed"] = s.passed;
    suites.push_back(entry);
    for (const Json& f : s.failures) failures.push_back(f);
  }
  r.result["suites"] = suites;
  r.result["failures"] = failures;
  r.exit_code = failures.empty() ? 0 : 1;
  return r;
}

namespace {

std::string scalar_text(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_null()) return "n/a";
  return j.dump();
}

bool is_matrix(const Json& j) {
  if (!j.is_array() || j.empty()) return false;
  for (const auto& row : j)
    if (!row.is_array()) return false;
  return true;
}

void render_plain(const Json& j, int indent, std::ostream& out) {
  const std::string pad(std::size_t(indent), ' ');
  for (const auto& [key, value] : j.items()) {
    if (value.is_object()) {
      out << pad << key << ":\n";
      render_plain(value, indent + 2, out);
    } else if (is_matrix(value)) {
      out << pad << key << ":\n";
      for (const auto& row : value) {
        out << pad << "  [";
        for (std::size_t k = 0; k < row.size(); ++k)
          out << (k ? ", " : "") << scalar_text(row[k]);
        out << "]\n";
      }
    } else if (value.is_array() && !value.empty() && value[0].is_object()) {
      out << pad << key << ":\n";
      for (const auto& item : value) {
        out << pad << "  -\n";
        render_plain(item, indent + 4, out);
      }
    } else if (value.is_array()) {
      out << pad << key << ": [";
      for (std::size_t k = 0; k < value.size(); ++k)
        out << (k ? ", " : "") << scalar_text(value[k]);
      out << "]\n";
    } else {
      out << pad << key << ": " << scalar_text(value) << "\n";
    }
  }
}

}  // namespace

std::string render(const Report& report, Format format) {
  if (format == Format::Structured) {
    Json doc;
    doc["command"] = report.command;
    doc["input_digest"] = report.input_digest;
    doc["result"] = report.result;
    doc["exit_code"] = report.exit_code;
    return doc.dump(2) + "\n";
  }
  std::ostringstream out;
  out << "command: " << report.command << "\n"
      << "input_digest: " << report.input_digest << "\n";
  render_plain(report.result, 0, out);
  out << "exit_code: " << report.exit_code << "\n";
  return out.str();
}

}  // namespace morita
