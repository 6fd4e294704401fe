#include "morita/curve.hpp"

#include <algorithm>
#include <numeric>

#include <nlohmann/json.hpp>

#include "morita/error.hpp"
#include "morita/linalg.hpp"
#include "morita/parser.hpp"

namespace morita {

std::vector<ProjectivePoint> sample_points(std::size_t count) {
  std::vector<ProjectivePoint> out;
  const ProjectivePoint head[] = {{0, 1}, {1, 1}, {1, 0}};
  for (const auto& p : head) {
    if (out.size() == count) return out;
    out.push_back(p);
  }
  for (int k = 2; out.size() < count; ++k) {
    out.push_back({Rational(k), Rational(1)});
    if (out.size() < count) out.push_back({Rational(1), Rational(k)});
  }
  return out;
}

HomogeneousCurve::HomogeneousCurve(HomoMatrix matrix)
    : matrix_(std::move(matrix)) {
  if (matrix_.cols() < 1 || matrix_.rows() != 2 * matrix_.cols())
    throw MathError("curve matrix must be 2d x d");
  for (Index j = 0; j < matrix_.cols(); ++j) {
    std::optional<std::size_t> degree;
    for (Index i = 0; i < matrix_.rows(); ++i) {
      const HomoPoly& entry = matrix_(i, j);
      if (entry.is_zero()) continue;
      if (degree && *degree != entry.degree())
        throw MathError("column " + std::to_string(j) + " mixes degrees");
      degree = entry.degree();
    }
    if (!degree)
      throw MathError("column " + std::to_string(j) + " is identically zero");
    for (Index i = 0; i < matrix_.rows(); ++i)
      if (matrix_(i, j).is_zero()) matrix_(i, j) = HomoPoly::zero(*degree);
    degrees_.push_back(*degree);
  }
  // The maximal minors have degree sum(e_j); rank < d at more points than
  // that forces all of them to vanish.
  bool generic_rank = false;
  for (const auto& p : sample_points(total_column_degree() + 1)) {
    if (rank(evaluate(matrix_, p.s, p.t)) == d()) {
      generic_rank = true;
      break;
    }
  }
  if (!generic_rank) throw MathError("degenerate curve matrix");
}

std::size_t HomogeneousCurve::max_column_degree() const {
  return *std::max_element(degrees_.begin(), degrees_.end());
}

std::size_t HomogeneousCurve::total_column_degree() const {
  return std::accumulate(degrees_.begin(), degrees_.end(), std::size_t{0});
}

std::string to_string(Chart chart) {
  switch (chart) {
    case Chart::Bottom: return "bottom";
    case Chart::Top: return "top";
    case Chart::Rows: return "rows";
  }
  return "unknown";
}

ChartMap chart_map(const HomogeneousCurve& c, const std::vector<int>& rows) {
  const Index d = c.d();
  if (Index(rows.size()) != d) throw MathError("a chart inverts exactly d rows");
  std::vector<int> others;
  for (int r = 0; r < 2 * d; ++r)
    if (std::find(rows.begin(), rows.end(), r) == rows.end()) others.push_back(r);

  Mat<UniPoly> inverted(d, d);
  RatMatrix inverted_t(d, d);
  RatMatrix complement_t(d, d);
  for (Index i = 0; i < d; ++i)
    for (Index j = 0; j < d; ++j) {
      inverted(i, j) = dehomogenize(c.matrix()(rows[i], j));
      inverted_t(j, i) = RatFun(inverted(i, j));
      complement_t(j, i) = RatFun(dehomogenize(c.matrix()(others[i], j)));
    }
  const UniPoly det = ring_determinant(inverted);
  if (det.is_zero()) throw MathError("curve does not meet this chart");

  // y R = L  <=>  R^T y^T = L^T
  auto y_t = try_solve(inverted_t, complement_t);
  if (!y_t) throw MathError("curve does not meet this chart");

  ChartMap out;
  out.d = d;
  out.y = y_t->transpose();
  out.inverted_rows = rows;
  out.domain_denominator = det.monic();
  std::vector<int> bottom(d), top(d);
  std::iota(top.begin(), top.end(), 0);
  std::iota(bottom.begin(), bottom.end(), int(d));
  out.chart = rows == bottom ? Chart::Bottom
              : rows == top  ? Chart::Top
                             : Chart::Rows;
  return out;
}

ChartMap chart_map(const HomogeneousCurve& c, Chart chart) {
  std::vector<int> rows(c.d());
  switch (chart) {
    case Chart::Bottom:
      std::iota(rows.begin(), rows.end(), int(c.d()));
      break;
    case Chart::Top:
      std::iota(rows.begin(), rows.end(), 0);
      break;
    case Chart::Rows:
      throw MathError("Chart::Rows needs an explicit row set");
  }
  return chart_map(c, rows);
}

ChartMap visible_chart(const HomogeneousCurve& c) {
  for (Chart chart : {Chart::Bottom, Chart::Top}) {
    try {
      return chart_map(c, chart);
    } catch (const MathError&) {
    }
  }
  for (const auto& rows : subsets(int(2 * c.d()), int(c.d()))) {
    try {
      return chart_map(c, rows);
    } catch (const MathError&) {
    }
  }
  throw MathError("curve does not meet any coordinate chart");
}

QMatrix evaluate_subspace(const HomogeneousCurve& c, const Rational& s,
                          const Rational& t) {
  if (s.is_zero() && t.is_zero())
    throw MathError("not a point of the projective line");
  return evaluate(c.matrix(), s, t);
}

HomogeneousCurve curve_from_chart(const RatMatrix& y) {
  const Index d = y.rows();
  if (y.cols() != d) throw MathError("chart map must be square");
  HomoMatrix m(2 * d, d);
  for (Index j = 0; j < d; ++j) {
    UniPoly common(1);
    for (Index i = 0; i < d; ++i) {
      const UniPoly& den = y(i, j).den();
      common = exact_div(common * den, poly_gcd(common, den));
    }
    std::vector<UniPoly> column(2 * d);
    std::size_t degree = *common.degree();
    for (Index i = 0; i < d; ++i) {
      column[i] = y(i, j).num() * exact_div(common, y(i, j).den());
      if (column[i].degree()) degree = std::max(degree, *column[i].degree());
    }
    column[d + j] = common;
    for (Index i = 0; i < 2 * d; ++i) m(i, j) = homogenize(column[i], degree);
  }
  return HomogeneousCurve(std::move(m));
}

namespace {

using nlohmann::json;

ParseError at_byte(const std::string& what, std::string_view text,
                   std::size_t byte) {
  std::size_t line = 1, column = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return ParseError(what, line, column);
}

std::string entry_text(const json& entry, const std::string& where) {
  if (entry.is_string()) return entry.get<std::string>();
  if (entry.is_number_integer()) return std::to_string(entry.get<long long>());
  throw ParseError(where + ": entries must be strings");
}

const json& require_array(const json& value, std::size_t size,
                          const std::string& where) {
  if (!value.is_array() || value.size() != size)
    throw ParseError(where + " must be an array of " + std::to_string(size) +
                     " entries");
  return value;
}

template <typename Fn>
auto parse_entry(const std::string& text, const std::string& where, Fn fn) {
  try {
    return fn(text);
  } catch (const ParseError& e) {
    throw ParseError(where + " \"" + text + "\", character " +
                     std::to_string(e.column()) + ": " + e.message());
  } catch (const MathError& e) {
    throw ParseError(where + " \"" + text + "\": " + e.what());
  }
}

HomogeneousCurve parse_columns(const json& columns, Index d) {
  require_array(columns, std::size_t(d), "\"columns\"");
  HomoMatrix m(2 * d, d);
  for (Index j = 0; j < d; ++j) {
    const std::string col_name = "column " + std::to_string(j);
    require_array(columns[j], std::size_t(2 * d), col_name);
    std::vector<BiPoly> entries;
    std::set<std::size_t> degrees;
    for (Index i = 0; i < 2 * d; ++i) {
      const std::string where = col_name + ", row " + std::to_string(i);
      const std::string text = entry_text(columns[j][i], where);
      entries.push_back(parse_entry(text, where, [](const std::string& s) {
        return parse_bipoly(s);
      }));
      const auto entry_degrees = monomial_degrees(entries.back());
      degrees.insert(entry_degrees.begin(), entry_degrees.end());
    }
    if (degrees.size() > 1) throw ParseError(col_name + " mixes degrees");
    if (degrees.empty()) throw ParseError(col_name + " is identically zero");
    for (Index i = 0; i < 2 * d; ++i)
      m(i, j) = to_homo_poly(entries[i], *degrees.begin());
  }
  return HomogeneousCurve(std::move(m));
}

HomogeneousCurve parse_affine(const json& rows, Index d) {
  require_array(rows, std::size_t(d), "\"y\"");
  RatMatrix y(d, d);
  for (Index i = 0; i < d; ++i) {
    require_array(rows[i], std::size_t(d), "row " + std::to_string(i) + " of y");
    for (Index j = 0; j < d; ++j) {
      const std::string where =
          "y(" + std::to_string(i) + "," + std::to_string(j) + ")";
      const std::string text = entry_text(rows[i][j], where);
      y(i, j) = parse_entry(text, where, [](const std::string& s) {
        return parse_ratfun(s);
      });
    }
  }
  return curve_from_chart(y);
}

}  // namespace

HomogeneousCurve parse_curve(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    // nlohmann prefixes its own position; keep only the diagnostic.
    std::string what = e.what();
    if (const auto colon = what.find(": "); colon != std::string::npos)
      what = what.substr(colon + 2);
    throw at_byte("malformed curve file: " + what, text, e.byte == 0 ? 0 : e.byte - 1);
  }
  if (!doc.is_object()) throw ParseError("curve file must be an object");
  if (!doc.contains("d") || !doc["d"].is_number_integer() ||
      doc["d"].get<long long>() < 1 || doc["d"].get<long long>() > 12)
    throw ParseError("\"d\" must be an integer between 1 and 12");
  const Index d = doc["d"].get<Index>();
  const bool has_columns = doc.contains("columns");
  const bool has_y = doc.contains("y");
  if (has_columns == has_y)
    throw ParseError("curve file needs exactly one of \"columns\" or \"y\"");
  try {
    return has_columns ? parse_columns(doc["columns"], d)
                       : parse_affine(doc["y"], d);
  } catch (const MathError& e) {
    throw ParseError(e.what());
  }
}

std::string to_curve_json(const HomogeneousCurve& c) {
  nlohmann::ordered_json doc;
  doc["d"] = c.d();
  doc["columns"] = nlohmann::ordered_json::array();
  for (Index j = 0; j < c.d(); ++j) {
    nlohmann::ordered_json column = nlohmann::ordered_json::array();
    for (Index i = 0; i < 2 * c.d(); ++i) column.push_back(to_string(c.matrix()(i, j)));
    doc["columns"].push_back(column);
  }
  return doc.dump();
}

}  // namespace morita
