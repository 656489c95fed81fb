#include "brho/rho.hpp"

#include <stdexcept>
#include <string>

namespace brho {

std::string_view to_string(Algorithm a) noexcept { return a == Algorithm::floyd ? "floyd" : "brent"; }

Algorithm parse_algorithm(std::string_view text) {
  if (text == "floyd") return Algorithm::floyd;
  if (text == "brent") return Algorithm::brent;
  throw std::invalid_argument("unknown algorithm '" + std::string(text) + "'");
}

}  // namespace brho
