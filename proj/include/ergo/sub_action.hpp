#pragma once

#include "ergo/rational.hpp"

#include <string_view>

namespace ergo {

enum class Provenance { CalibratedFromBoundary, Dominant, Separating, UserSupplied };

std::string_view to_string(Provenance p);

/// A function constant on depth-k cylinders, stored as one value per node of
/// the order-k refinement (nodes in lexicographic order).
struct SubAction {
  int depth = 1;
  RationalVector values;
  Provenance provenance = Provenance::UserSupplied;
};

}  // namespace ergo
