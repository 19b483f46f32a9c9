#pragma once

#include <cstdint>

#include "gve/rational.hpp"

namespace gve {

// A rational interval known to contain pi.
struct PiInterval {
    Rational lo;
    Rational hi;
    Rational width() const { return hi - lo; }
};

// Shared incremental approximation of pi.
//
// Seeded from the continued-fraction convergents 333/106 < pi < 355/113 and
// refined by a BBP-type series, four bits per term. Refinement is monotone
// and append-only: later snapshots are always sub-intervals of earlier ones,
// so results do not depend on caller interleaving.
//
// The precision cap comes from GVE_PI_BITS (default 1'000'000 bits); asking
// past it throws BoundExceeded.
namespace pi_enclosure {

// Interval of width < 2^-bits containing pi.
PiInterval with_bits(std::uint64_t bits);

// Largest precision any comparison has requested so far (test telemetry).
std::uint64_t max_bits_requested();

std::uint64_t bit_cap();

}  // namespace pi_enclosure

}  // namespace gve
