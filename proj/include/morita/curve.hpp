#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "morita/eigen.hpp"

namespace morita {

struct ProjectivePoint {
  Rational s;
  Rational t;
};

// Deterministic distinct points (0:1), (1:1), (1:0), (2:1), (1:2), (3:1), ...
std::vector<ProjectivePoint> sample_points(std::size_t count);

// A morphism P^1 -> G(d, 2d), given by a 2d x d matrix of homogeneous
// polynomials whose column span at (s:t) is the subspace f(s:t). Column j
// is homogeneous of degree column_degrees()[j]. Rows are ordered
// 1(x)1, ..., 1(x)d, 2(x)1, ..., 2(x)d, so the top block pairs with s and the
// bottom block with t in the Morita curve [s I; t I].
class HomogeneousCurve {
 public:
  // Throws MathError("column j mixes degrees"), MathError("column j is
  // identically zero") or MathError("degenerate curve matrix") when the
  // matrix does not have generic rank d.
  explicit HomogeneousCurve(HomoMatrix matrix);

  Index d() const { return matrix_.cols(); }
  const HomoMatrix& matrix() const { return matrix_; }
  const std::vector<std::size_t>& column_degrees() const { return degrees_; }
  std::size_t max_column_degree() const;
  std::size_t total_column_degree() const;

  // Upper (s-paired) and lower (t-paired) d x d blocks.
  HomoMatrix top() const { return matrix_.topRows(d()); }
  HomoMatrix bottom() const { return matrix_.bottomRows(d()); }

 private:
  HomoMatrix matrix_;
  std::vector<std::size_t> degrees_;
};

// Which d rows are inverted: Bottom uses rows d..2d-1 (the default big cell),
// Top uses rows 0..d-1, Rows is any other coordinate cell.
enum class Chart { Bottom, Top, Rows };

std::string to_string(Chart chart);

// The curve read in an affine chart with x = s/t: y = L R^{-1}, where R is the
// inverted block and L the complementary rows (in increasing order).
struct ChartMap {
  Index d = 0;
  RatMatrix y;
  Chart chart = Chart::Bottom;
  std::vector<int> inverted_rows;
  // Monic det of the inverted block at t = 1; its roots bound the chart.
  UniPoly domain_denominator;
};

// Throws MathError("curve does not meet this chart").
ChartMap chart_map(const HomogeneousCurve& c, Chart chart);

// Chart with an arbitrary set of d inverted rows.
ChartMap chart_map(const HomogeneousCurve& c, const std::vector<int>& rows);

// Bottom if the curve meets it, else Top, else the first coordinate cell in
// lexicographic row order that it meets.
ChartMap visible_chart(const HomogeneousCurve& c);

// Throws MathError("not a point of the projective line") for (0, 0).
QMatrix evaluate_subspace(const HomogeneousCurve& c, const Rational& s,
                          const Rational& t);

// Minimal basis of the saturated column module; column degrees become the
// splitting exponents in ascending order.
HomogeneousCurve saturate(const HomogeneousCurve& c);

// [y; I] with each column cleared of denominators and homogenized.
HomogeneousCurve curve_from_chart(const RatMatrix& y);

// Curve file: {"d": 2, "columns": [["s","0","t","0"], ...]} or the affine
// form {"d": 2, "y": [["x^2","x"],["0","0"]]} (rows of y). Throws
// ParseError for malformed text and for matrices that are not valid curves.
HomogeneousCurve parse_curve(std::string_view text);

// Canonical "columns" form of the curve file.
std::string to_curve_json(const HomogeneousCurve& c);

}  // namespace morita
