#pragma once

// Brute-force cross-checks used by the test and law suites. Nothing here
// shares code paths with the minimal-basis search or the chart calculus.

#include <vector>

#include "morita/curve.hpp"
#include "morita/ratfun.hpp"
#include "morita/splitting.hpp"

namespace morita {

// dims[m] = number of independent degree-m homogeneous vectors v with
// v(p) in the column span at every point p, i.e. h0(f*S(m)).
struct H0Sequence {
  Index d = 0;
  std::vector<Index> dims;
};

// Membership is tested pointwise at m + sum(column degrees) + 1 sample
// points where the curve matrix has full rank; the (d+1)-minors of [c | v]
// have exactly that degree, so vanishing there makes them vanish
// identically.
H0Sequence h0_sequence(const HomogeneousCurve& c, std::size_t m_max);

// Extends the sequence until one step gains d dimensions, which means every
// exponent has been passed.
H0Sequence h0_profile(const HomogeneousCurve& c);

// Inverts dims[m] = sum_i max(0, m - a_i + 1). Throws
// MathError("not an h0 profile") for inconsistent input.
SplittingType splitting_from_h0(const H0Sequence& seq);

// f''' / f' - 3/2 (f'' / f')^2. Throws MathError for constant f.
RatFun classical_schwarzian(const RatFun& f);

// True iff at every point both evaluated matrices span the same subspace.
bool subspace_equal_at_samples(const HomogeneousCurve& a, const HomogeneousCurve& b,
                               const std::vector<ProjectivePoint>& points);

}  // namespace morita
