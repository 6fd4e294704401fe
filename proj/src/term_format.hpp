#pragma once

#include <string>

#include "morita/rational.hpp"

namespace morita::detail {

// Appends "c*monomial" to a sum being printed, handling signs and unit
// coefficients. An empty monomial stands for 1.
void append_term(std::string& out, const Rational& c,
                 const std::string& monomial);

std::string power(char var, std::size_t k);

}  // namespace morita::detail
