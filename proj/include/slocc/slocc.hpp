#pragma once

#include "slocc/arith/fp.hpp"
#include "slocc/arith/matrix.hpp"
#include "slocc/arith/random.hpp"
#include "slocc/arith/rational.hpp"
#include "slocc/arith/reduce.hpp"
#include "slocc/errors.hpp"
#include "slocc/geometry/multiform.hpp"
#include "slocc/geometry/points.hpp"
#include "slocc/geometry/projection.hpp"
#include "slocc/geometry/smoothness.hpp"
#include "slocc/geometry/variety.hpp"
#include "slocc/invariants/classify.hpp"
#include "slocc/invariants/curves.hpp"
#include "slocc/invariants/hyperdet.hpp"
#include "slocc/states/named.hpp"
#include "slocc/states/slocc_operator.hpp"
#include "slocc/states/state_io.hpp"
#include "slocc/states/tensor.hpp"
#include "slocc/zalgebra/hilbert.hpp"
#include "slocc/zalgebra/relations.hpp"
#include "slocc/zalgebra/segre.hpp"

namespace slocc {
inline constexpr const char* kVersion = "0.1.0";
}
