#pragma once

#include <Eigen/Core>
#include <cstdint>

namespace klcx {

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using IntMatrix = Matrix<std::int64_t>;
using IntVector = Vector<std::int64_t>;

}  // namespace klcx
