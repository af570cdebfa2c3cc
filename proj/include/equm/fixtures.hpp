#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "equm/formats.hpp"

namespace equm {

/// Model files compiled into the library, by name.
const std::vector<std::pair<std::string_view, std::string_view>>& embedded_fixtures();

/// Throws UnknownId for an unknown name.
ModelDocument fixture_model(std::string_view name);

struct FixtureCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Reproduces the worked examples: dice, consolation prize, infinite utility,
/// maximin, lexicographic contrast, and the {1, 1/2, 0} witness.
std::vector<FixtureCheck> run_fixture_checks();

}  // namespace equm
