#pragma once

#include "zeno/hp/angle.hpp"
#include "zeno/hp/real.hpp"

namespace zeno::optics {

/// Projection-postulate probability for N polarizers stepped by pi/2N:
/// {cos^2(pi/2N)}^N.
hp::HReal projection_probability(int n, const hp::PrecisionContext& ctx);

/// cos^2 theta: passing a second polarizer at angle theta.
hp::HReal two_polarizer_probability(const hp::Angle& theta, const hp::PrecisionContext& ctx);

/// cos^2 theta · cos^2(pi/2 - theta): an intermediate polarizer at theta
/// ahead of a crossed final one.
hp::HReal intermediate_polarizer_probability(const hp::Angle& theta, const hp::PrecisionContext& ctx);

}  // namespace zeno::optics
