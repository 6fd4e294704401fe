#pragma once

// The Morita curve [s I; t I], the hypothesis gate and the decision
// procedure with an explicit witness g, f = g . f_M.

#include <optional>
#include <string>
#include <vector>

#include "morita/curve.hpp"
#include "morita/schwarzian.hpp"
#include "morita/splitting.hpp"

namespace morita {

HomogeneousCurve morita_curve(Index d);

enum class Reason { Ok, DegreeMismatch, DeltaZero, WidthExceeded, SigmaNonzero };

// "OK", "DEGREE_MISMATCH", ...
std::string to_string(Reason reason);

// delta_nonzero is set only when degree == d; sigma_zero only when in
// addition delta is nonzero.
struct CurveReport {
  Index d = 0;
  std::size_t degree = 0;
  SplittingType splitting;
  std::optional<bool> delta_nonzero;
  std::optional<bool> sigma_zero;
  // Chart in which delta and sigma were evaluated.
  std::optional<ChartMap> chart;
};

CurveReport analyze(const HomogeneousCurve& c);

inline constexpr std::size_t kWidthBound = 3;

// First failing hypothesis in the order degree, delta, width.
Reason hypothesis_gate(const CurveReport& report);

struct HypothesisCheck {
  CurveReport report;
  Reason reason = Reason::Ok;
};

HypothesisCheck check_hypotheses(const HomogeneousCurve& c);

// Witness for y(x) = (Ax + B)(Cx + D)^{-1} from the data of y at x0. Throws
// MathError("base point outside the chart domain"), MathError("pick another
// base point") when y'(x0) is singular, and MathError("curve is not a matrix
// Möbius map") when the identity fails.
GroupElement recover_group_element(const ChartMap& cm, const Rational& x0);

// Scales g so its first nonzero entry in row-major order is 1.
GroupElement normalized(const GroupElement& g);

struct MoritaVerdict {
  bool accepted = false;
  Reason reason = Reason::Ok;
  std::optional<GroupElement> witness;
  std::optional<Rational> base_point;
  CurveReport report;
  std::vector<std::string> notes;
};

// Verdict reason once sigma is known; width > kWidthBound with sigma = 0 is
// still accepted.
Reason final_reason(Reason gate, bool sigma_zero);

MoritaVerdict decide_morita(const HomogeneousCurve& c);

// g . f_M and the saturation of c agree pointwise at 2 * (max degree) + 1
// sample points and have proportional Pluecker vectors.
bool verify_equivalence(const GroupElement& g, const HomogeneousCurve& c);

}  // namespace morita
