#pragma once

#include <cstdint>

namespace grasscs {

// Counter-based generator: the stream for (seed, stream_id) is a SplitMix64
// run started at a hashed offset, so sample i of a Monte-Carlo run can be
// produced independently of every other sample.  That keeps chunked and
// re-ordered evaluation bitwise reproducible.
class CounterRng {
  public:
    CounterRng(std::uint64_t seed, std::uint64_t stream_id) {
        state_ = mix64(mix64(seed + 0x632be59bd9b4e019ULL) ^ mix64(stream_id + 0x9e3779b97f4a7c15ULL));
    }

    std::uint64_t next_u64() {
        state_ += 0x9e3779b97f4a7c15ULL;
        return mix64(state_);
    }

    // uniform in [0, 1)
    double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // uniform in [lo, hi)
    double uniform(double lo, double hi) { return lo + (hi - lo) * next_double(); }

    static std::uint64_t mix64(std::uint64_t x) {
        x ^= x >> 30;
        x *= 0xbf58476d1ce4e5b9ULL;
        x ^= x >> 27;
        x *= 0x94d049bb133111ebULL;
        x ^= x >> 31;
        return x;
    }

  private:
    std::uint64_t state_;
};

}  // namespace grasscs
