#ifndef POLYSYM_TOLERANCES_HPP
#define POLYSYM_TOLERANCES_HPP

#include <cstdint>

namespace polysym::tol {

// Trailing coefficients with modulus below kTrimRel * height are trimmed
// during normalization. Single global knob.
inline constexpr double kTrimRel = 1e-14;

// Default tolerance for symmetry-class coefficient relations, relative to
// the coefficient height.
inline constexpr double kClassify = 1e-10;

// Default root-location tolerance (distance to circle / real axis).
inline constexpr double kLocate = 1e-8;

// Criteria-vs-oracle comparisons exclude roots within kGuardFactor * tol
// of the unit circle.
inline constexpr double kGuardFactor = 10.0;

// Default relative remainder bound accepted by deflation.
inline constexpr double kDeflate = 1e-8;

// Pole-point deflation tolerance used by the Cayley polynomial transforms,
// relative to height.
inline constexpr double kPoleDeflate = 1e-10;

}  // namespace polysym::tol

namespace polysym {

// Seed used by every seeded algorithm unless the caller overrides it.
inline constexpr std::uint64_t kDefaultSeed = 1;

}  // namespace polysym

#endif
