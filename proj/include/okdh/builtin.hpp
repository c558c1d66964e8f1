#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "okdh/filtration.hpp"

namespace okdh {

/// Named model/filtration pairs used by the test suites and the CLI.
struct BuiltinExample {
  std::string name;
  std::string description;
  WeightFiltration filtration;
  bool divisorial = false;  // a single integral piece, usable as DivisorData
};

const std::vector<BuiltinExample>& builtin_examples();

/// Throws ValidationError listing the known names.
const BuiltinExample& builtin_example(std::string_view name);

}  // namespace okdh
