#pragma once

#include <random>
#include <vector>

#include "gve/cut.hpp"
#include "gve/value_group.hpp"

namespace gve::testutil {

constexpr std::uint64_t kDefaultSeed = 0xC0FFEE;

class Rng {
  public:
    explicit Rng(std::uint64_t seed = kDefaultSeed) : eng_(seed) {}

    long pick(long lo, long hi) {
        std::uniform_int_distribution<long> d(lo, hi);
        return d(eng_);
    }

    Rational rational(long max_num = 12, long max_den = 8) {
        long den = pick(1, max_den);
        return rat(pick(-max_num, max_num), den);
    }

    Rational positive_rational(long max_num = 12, long max_den = 8) {
        long den = pick(1, max_den);
        return rat(pick(1, max_num), den);
    }

    PiLinear pilinear(long max_num = 6, long max_den = 4) {
        return PiLinear(rational(max_num, max_den), rational(max_num, max_den));
    }

    PiLinear lattice_value(const ValueGroup& g, const Slot& s) {
        switch (g.lattice_at(s)) {
            case SlotLattice::Integers: return PiLinear(Rational(pick(-9, 9)));
            case SlotLattice::Rationals: return PiLinear(rational());
            case SlotLattice::RationalsPlusPi:
                return PiLinear(rational(), g.pi_step * Rational(pick(-3, 3)));
        }
        return PiLinear();
    }

    // Random group element with small support.
    ValueVector vector(const ValueGroup& g) {
        ValueVector v;
        if (g.is_line()) {
            v.set(Slot::y(Rational(0)), lattice_value(g, Slot::y(Rational(0))));
            return v;
        }
        if (pick(0, 1)) v.set(Slot::z(), PiLinear(rational(6, 4)));
        int n = static_cast<int>(pick(0, 3));
        for (int i = 0; i < n; ++i) {
            Slot s = Slot::y(rational(4, 3));
            v.set(s, lattice_value(g, s));
        }
        return v;
    }

    std::mt19937_64& engine() { return eng_; }

  private:
    std::mt19937_64 eng_;
};

// Sampled subset comparison: no member of `a` outside `b` among probes.
inline bool sampled_subset(Rng& rng, const Cut& a, const Cut& b, int samples = 200) {
    for (int i = 0; i < samples; ++i) {
        ValueVector x = rng.vector(a.group);
        if (cut_member(a, x) && !cut_member(b, x)) return false;
    }
    return true;
}

inline bool sampled_equal(Rng& rng, const Cut& a, const Cut& b, int samples = 200) {
    for (int i = 0; i < samples; ++i) {
        ValueVector x = rng.vector(a.group);
        if (cut_member(a, x) != cut_member(b, x)) return false;
    }
    return true;
}

}  // namespace gve::testutil
