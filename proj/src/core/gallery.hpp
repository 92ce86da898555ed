#pragma once

#include <string>
#include <vector>

#include "core/recop.hpp"

namespace ng {

// Named example operators.  Hecke recursion operators live in the hecke
// module (their initial values come from q-expansion oracles); everything
// else is constructed here from its printed companion and initial values.
//
//   trivial-f2, trivial-q      X^2 - yX, initial [0, 1]
//   sec3-4-f2, sec3-4-f3       X^2 + yX + y, initial [0, 1]
//   fib-q, fib-f2/f3/f5/f7     X^2 - yX - y^2, initial [0, 1]
//   prop10.3-d2/-d3/-d5        X^d - y^d - y over Q, initial [0, ..., 0, 1]
//   sec10-p3/p5/p7/p11         the characteristic-p list, initial [0, 1, y, ..., y^(d-2)]
std::vector<std::string> gallery_names();
RecursionOperator example_gallery(const std::string& name);

// Ring, both companion renderings, and initial values as a JSON document.
std::string operator_config_json(const std::string& name, const RecursionOperator& T);

}  // namespace ng
