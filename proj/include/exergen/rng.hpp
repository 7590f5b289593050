#ifndef EXERGEN_RNG_HPP
#define EXERGEN_RNG_HPP

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace exergen {

// SHA-256 over an arbitrary byte string. Self-contained so that seeds are
// identical on every platform regardless of what crypto libraries exist.
std::array<std::uint8_t, 32> sha256(std::string_view data);
std::string sha256_hex(std::string_view data);

// Seed derived from student identity. Equal inputs give equal seeds.
struct Seed64 {
    std::uint64_t value = 0;
    friend bool operator==(Seed64 a, Seed64 b) { return a.value == b.value; }
};

// Seed64 = first 8 bytes (big-endian) of SHA-256 over
// "<student_id>\x1F<slot>\x1F<variant>". Throws InvalidInputError on empty id.
Seed64 derive_seed(std::string_view student_id, std::string_view exercise_slot,
                   std::uint32_t variant);

// Deterministic splitmix64 stream. Single-owner mutable value; every draw is
// a pure function of (seed, label, draw index).
class RngStream {
public:
    RngStream() = default;
    explicit RngStream(std::uint64_t state) : state_(state) {}

    std::uint64_t next();
    // Uniform real in [0, 1) with 53 bits.
    double next_double();
    // Uniform integer in [lo, hi], inclusive. Consumes exactly one draw.
    std::int64_t uniform_int(std::int64_t lo, std::int64_t hi);
    // Index into `weights` (non-negative, positive sum). One draw; a
    // zero-weight entry is never chosen.
    std::size_t weighted_choice(std::span<const double> weights);
    // Bernoulli with probability p. One draw.
    bool chance(double p);

    // Fisher-Yates, descending index order.
    template <typename T>
    void shuffle(std::vector<T>& items) {
        for (std::size_t i = items.size(); i > 1; --i) {
            auto j = static_cast<std::size_t>(uniform_int(0, static_cast<std::int64_t>(i) - 1));
            std::swap(items[i - 1], items[j]);
        }
    }

    std::uint64_t state() const { return state_; }

private:
    std::uint64_t state_ = 0;
};

// Stream whose draws depend only on (seed, label). Distinct labels give
// independent-looking streams; splitting L1 never perturbs L2.
RngStream split_stream(Seed64 seed, std::string_view label);

} // namespace exergen

#endif
