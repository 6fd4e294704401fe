#include "morita/laws.hpp"

#include "morita/error.hpp"
#include "morita/linalg.hpp"
#include "morita/oracle.hpp"
#include "morita/parser.hpp"
#include "morita/schwarzian.hpp"
#include "morita/splitting.hpp"

namespace morita {

std::string to_string(LawSuite suite) {
  switch (suite) {
    case LawSuite::Transformation: return "transformation_law";
    case LawSuite::Invariance: return "gl2_invariance";
    case LawSuite::Cocycle: return "cocycle";
    case LawSuite::D1Reduction: return "d1_reduction";
  }
  return "unknown";
}

std::vector<LawSuite> suites_for(Index d) {
  std::vector<LawSuite> out = {LawSuite::Transformation, LawSuite::Invariance,
                               LawSuite::Cocycle};
  if (d == 1) out.push_back(LawSuite::D1Reduction);
  return out;
}

Rng trial_rng(std::uint64_t seed, LawSuite suite, int trial) {
  std::seed_seq seq{std::uint32_t(seed), std::uint32_t(seed >> 32),
                    std::uint32_t(suite), std::uint32_t(trial)};
  return Rng(seq);
}

Json to_json(const QMatrix& m) {
  Json rows = Json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Index j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json to_json(const RatMatrix& m) {
  Json rows = Json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Index j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

namespace {

template <typename T, typename Fn>
Mat<T> matrix_from_json(const Json& j, Fn parse) {
  if (!j.is_array() || j.empty() || !j[0].is_array())
    throw ParseError("expected a matrix of strings");
  Mat<T> m(Index(j.size()), Index(j[0].size()));
  for (Index i = 0; i < m.rows(); ++i) {
    if (!j[i].is_array() || Index(j[i].size()) != m.cols())
      throw ParseError("matrix rows differ in length");
    for (Index k = 0; k < m.cols(); ++k) {
      if (!j[i][k].is_string()) throw ParseError("matrix entries must be strings");
      m(i, k) = parse(j[i][k].get<std::string>());
    }
  }
  return m;
}

const Json& field(const Json& instance, const char* name) {
  if (!instance.contains(name))
    throw ParseError(std::string("law instance lacks \"") + name + "\"");
  return instance.at(name);
}

// Random polynomial chart map with det y' not identically zero.
RatMatrix random_chart(Rng& rng, Index d) {
  while (true) {
    RatMatrix y = random_poly_matrix(rng, d, 2, 3);
    if (!determinant(derivative(y)).is_zero()) return y;
  }
}

RatMatrix lower_factor(const GroupElement& g, const RatMatrix& y) {
  return cast_matrix<RatFun>(g.c()) * y + cast_matrix<RatFun>(g.d_block());
}

}  // namespace

QMatrix qmatrix_from_json(const Json& j) {
  return matrix_from_json<Rational>(j, [](const std::string& s) { return parse_rational(s); });
}

RatMatrix ratmatrix_from_json(const Json& j) {
  return matrix_from_json<RatFun>(j, [](const std::string& s) { return parse_ratfun(s); });
}

Json draw_instance(LawSuite suite, Index d, Rng& rng) {
  Json out;
  out["suite"] = to_string(suite);
  out["d"] = d;
  switch (suite) {
    case LawSuite::Transformation: {
      const RatMatrix y = random_chart(rng, d);
      QMatrix g;
      do {
        g = random_invertible(rng, 2 * d, 3);
      } while (determinant(lower_factor(GroupElement(g), y)).is_zero());
      out["y"] = to_json(y);
      out["g"] = to_json(g);
      break;
    }
    case LawSuite::Invariance: {
      out["y"] = to_json(random_chart(rng, d));
      out["mu"] = to_json(random_invertible(rng, 2, 4));
      break;
    }
    case LawSuite::Cocycle: {
      out["curve"] = Json::parse(to_curve_json(random_curve(rng, d, 2, 3)));
      out["g1"] = to_json(random_invertible(rng, 2 * d, 3));
      out["g2"] = to_json(random_invertible(rng, 2 * d, 3));
      break;
    }
    case LawSuite::D1Reduction: {
      out["f"] = to_string(random_ratfun(rng, 3, 4));
      break;
    }
  }
  return out;
}

bool check_instance(const Json& instance) {
  const std::string suite = field(instance, "suite").get<std::string>();
  try {
    if (suite == to_string(LawSuite::Transformation)) {
      ChartMap cm;
      cm.y = ratmatrix_from_json(field(instance, "y"));
      cm.d = cm.y.rows();
      return transformation_check(GroupElement(qmatrix_from_json(field(instance, "g"))), cm);
    }
    if (suite == to_string(LawSuite::Invariance)) {
      ChartMap cm;
      cm.y = ratmatrix_from_json(field(instance, "y"));
      cm.d = cm.y.rows();
      const QMatrix m = qmatrix_from_json(field(instance, "mu"));
      if (m.rows() != 2 || m.cols() != 2) throw ParseError("\"mu\" must be 2 x 2");
      return invariance_check(Moebius2(m(0, 0), m(0, 1), m(1, 0), m(1, 1)), cm);
    }
    if (suite == to_string(LawSuite::Cocycle)) {
      const HomogeneousCurve c = parse_curve(field(instance, "curve").dump());
      const QMatrix g1 = qmatrix_from_json(field(instance, "g1"));
      const QMatrix g2 = qmatrix_from_json(field(instance, "g2"));
      const HomogeneousCurve once = saturate(moebius_apply(GroupElement(QMatrix(g1 * g2)), c));
      const HomogeneousCurve twice =
          saturate(moebius_apply(GroupElement(g1), moebius_apply(GroupElement(g2), c)));
      const std::size_t degree = std::max(once.max_column_degree(), twice.max_column_degree());
      return once.column_degrees() == twice.column_degrees() &&
             subspace_equal_at_samples(once, twice, sample_points(2 * degree + 1));
    }
    if (suite == to_string(LawSuite::D1Reduction)) {
      const RatFun f = parse_ratfun(field(instance, "f").get<std::string>());
      RatMatrix y(1, 1);
      y(0, 0) = f;
      return sigma_coefficient(y)(0, 0) == classical_schwarzian(f);
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed law instance: ") + e.what());
  }
  throw ParseError("unknown law suite \"" + suite + "\"");
}

std::vector<SuiteResult> run_laws(Index d, int trials, std::uint64_t seed) {
  std::vector<SuiteResult> out;
  for (LawSuite suite : suites_for(d)) {
    SuiteResult result;
    result.suite = suite;
    for (int trial = 0; trial < trials; ++trial) {
      Rng rng = trial_rng(seed, suite, trial);
      Json instance = draw_instance(suite, d, rng);
      ++result.trials;
      bool ok = false;
      try {
        ok = check_instance(instance);
      } catch (const MathError& e) {
        instance["error"] = e.what();
      }
      if (ok) {
        ++result.passed;
      } else {
        instance["trial"] = trial;
        instance["seed"] = seed;
        result.failures.push_back(std::move(instance));
      }
    }
    out.push_back(std::move(result));
  }
  return out;
}

}  // namespace morita
