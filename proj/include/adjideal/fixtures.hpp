#pragma once

#include "adjideal/resolution.hpp"
#include "adjideal/scene.hpp"

#include <optional>
#include <string>
#include <vector>

namespace adjideal {

struct Fixture {
  std::string name;
  Scene scene;
  ResolutionCertificate cert;
};

// cross2d, delta3 (uses c, default 1/2), cusp, node, disc1d.
Fixture make_fixture(const std::string& name, std::optional<Rational> c = std::nullopt);
std::vector<std::string> fixture_names();

// One-variable chart data: b = 0, ν = 1, offset −1.
SncData disc_snc_data();
SncData cross_snc_data();

}  // namespace adjideal
