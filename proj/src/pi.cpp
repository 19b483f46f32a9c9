#include "gve/pi.hpp"

#include <cstdlib>
#include <mutex>

namespace gve {
namespace pi_enclosure {
namespace {

struct State {
    Rational lo{Int(333), Int(106)};
    Rational hi{Int(355), Int(113)};
    Rational partial{0};          // sum of series terms 0..next_term-1
    std::uint64_t next_term = 0;
    std::uint64_t bits = 6;       // width of the seed interval is below 2^-6
    std::uint64_t max_requested = 0;
};

State& state() {
    static State s;
    return s;
}

std::mutex& mtx() {
    static std::mutex m;
    return m;
}

std::uint64_t env_bit_cap() {
    static std::uint64_t cap = [] {
        if (const char* v = std::getenv("GVE_PI_BITS")) {
            long long n = std::atoll(v);
            if (n > 0) return static_cast<std::uint64_t>(n);
        }
        return static_cast<std::uint64_t>(1'000'000);
    }();
    return cap;
}

// One BBP term: pi = sum_k (120k^2+151k+47) / (16^k (512k^4+1024k^3+712k^2+194k+15)),
// with remainder after term k strictly below 16^-k.
Rational term(std::uint64_t k) {
    Int ik(k);
    Int num = 120 * ik * ik + 151 * ik + 47;
    Int den = 512 * ik * ik * ik * ik + 1024 * ik * ik * ik + 712 * ik * ik + 194 * ik + 15;
    den <<= 4 * k;
    return Rational(num, den);
}

void refine_locked(State& s, std::uint64_t bits) {
    // Doubling schedule: each pass at least doubles the precision target.
    std::uint64_t target = s.bits ? s.bits : 1;
    while (target < bits) target *= 2;
    if (target > env_bit_cap())
        throw BoundExceeded("pi enclosure beyond GVE_PI_BITS=" + std::to_string(env_bit_cap()));

    // After summing terms 0..k-1 the remainder is below 16^-(k-1).
    while (s.next_term == 0 || 4 * (s.next_term - 1) < target) {
        s.partial += term(s.next_term);
        ++s.next_term;
    }
    Rational lo = s.partial;
    Rational hi = s.partial + Rational(Int(1), Int(1) << (4 * (s.next_term - 1)));
    // Intersect with the current enclosure; refinement only narrows.
    if (lo > s.lo) s.lo = lo;
    if (hi < s.hi) s.hi = hi;
    s.bits = target;
}

}  // namespace

PiInterval with_bits(std::uint64_t bits) {
    std::lock_guard<std::mutex> lock(mtx());
    State& s = state();
    if (bits > s.max_requested) s.max_requested = bits;
    if (s.bits < bits) refine_locked(s, bits);
    return PiInterval{s.lo, s.hi};
}

std::uint64_t max_bits_requested() {
    std::lock_guard<std::mutex> lock(mtx());
    return state().max_requested;
}

std::uint64_t bit_cap() { return env_bit_cap(); }

}  // namespace pi_enclosure
}  // namespace gve
