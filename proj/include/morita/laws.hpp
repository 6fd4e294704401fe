#pragma once

// Seeded property suites for the sigma laws. Every instance is drawn as a
// JSON object and checked from that object, so a printed failure replays
// exactly.

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "morita/eigen.hpp"
#include "morita/random.hpp"

namespace morita {

using Json = nlohmann::ordered_json;

enum class LawSuite { Transformation, Invariance, Cocycle, D1Reduction };

std::string to_string(LawSuite suite);

// Suites that apply to dimension d; the d = 1 reduction only runs for d = 1.
std::vector<LawSuite> suites_for(Index d);

// Independent stream per (seed, suite, trial).
Rng trial_rng(std::uint64_t seed, LawSuite suite, int trial);

Json draw_instance(LawSuite suite, Index d, Rng& rng);

// Throws ParseError for an instance that does not describe a law check.
bool check_instance(const Json& instance);

struct SuiteResult {
  LawSuite suite;
  int trials = 0;
  int passed = 0;
  std::vector<Json> failures;
};

std::vector<SuiteResult> run_laws(Index d, int trials, std::uint64_t seed);

// Matrix and curve encodings shared with the report writer.
Json to_json(const QMatrix& m);
Json to_json(const RatMatrix& m);
QMatrix qmatrix_from_json(const Json& j);
RatMatrix ratmatrix_from_json(const Json& j);

}  // namespace morita
