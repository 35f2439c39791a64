#pragma once

#include <cstdint>
#include <Eigen/Core>

namespace sds {

// All arithmetic in this library is exact. Coefficients, field/group element
// indices and character-sum coordinates are 64-bit integers; dense vectors and
// matrices of them are Eigen types so the usual expression operators apply.
using Int = std::int64_t;
using IntVector = Eigen::Matrix<Int, Eigen::Dynamic, 1>;
using IntMatrix = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;

} // namespace sds
