#pragma once

// Subcommands behind the morita executable. Each returns one Report; exit
// codes are 0 for success or acceptance, 1 for a well-formed negative
// verdict or a failed law, 2 for unusable input.

#include <cstdint>
#include <string>

#include "morita/laws.hpp"
#include "morita/morita.hpp"

namespace morita {

struct Report {
  std::string command;
  std::string input_digest;  // SHA-256 of the input bytes, hex
  Json result;
  int exit_code = 0;
};

enum class Format { Structured, Plain };

std::string sha256_hex(std::string_view bytes);

Json to_json(const HomogeneousCurve& c);
Json to_json(const CurveReport& report);
Json to_json(const GroupElement& g);
Json to_json(const MoritaVerdict& verdict);

// The *_text variants take the file contents directly.
Report analyze_text(const std::string& text);
Report decide_text(const std::string& text);
Report klein_text(const std::string& text);
Report replay_text(const std::string& text);

Report cmd_analyze(const std::string& path);
Report cmd_decide(const std::string& path);
Report cmd_klein(const std::string& path);
Report cmd_replay(const std::string& path);
Report cmd_laws(Index d, int trials, std::uint64_t seed);

std::string render(const Report& report, Format format);

}  // namespace morita
