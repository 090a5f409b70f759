#ifndef STABGRAPH_RNG_HPP
#define STABGRAPH_RNG_HPP

#include <cstdint>

namespace stabgraph {

// Counter-based splittable generator built on the SplitMix64 finalizer.
// A stream is identified by a 64-bit key; the t-th output word is
// mix64(key + (t+1)*golden), i.e. the plain SplitMix64 sequence seeded at
// `key`. Words can be read at arbitrary counters, so consumers may address
// slots directly (order-free) or walk the stream sequentially. Child streams
// are derived by hashing (key, index), which keeps parallel trials
// independent of scheduling and bit-reproducible across platforms.

inline constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

inline std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

class Rng {
public:
    explicit Rng(std::uint64_t key) : key_(key) {}

    static Rng derive(std::uint64_t seed, std::uint64_t stream) {
        return Rng(mix64(mix64(seed + kGolden) ^ mix64(stream ^ 0xd1b54a32d192ed03ULL)));
    }

    std::uint64_t key() const { return key_; }

    // random access
    std::uint64_t word(std::uint64_t counter) const {
        return mix64(key_ + (counter + 1) * kGolden);
    }
    double uniform(std::uint64_t counter) const { return to_unit(word(counter)); }

    // sequential access; cursor advances past any slots already read this way
    std::uint64_t next() { return word(cursor_++); }
    double next_uniform() { return to_unit(next()); }

    // unbiased integer in [0, bound) via rejection
    std::uint64_t next_below(std::uint64_t bound) {
        std::uint64_t threshold = (0 - bound) % bound;
        for (;;) {
            std::uint64_t w = next();
            if (w >= threshold) return w % bound;
        }
    }

private:
    static double to_unit(std::uint64_t w) { return static_cast<double>(w >> 11) * 0x1.0p-53; }

    std::uint64_t key_;
    std::uint64_t cursor_ = 0;
};

} // namespace stabgraph

#endif
