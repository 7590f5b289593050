#include "exergen/rng.hpp"

#include "exergen/errors.hpp"

#include <cstring>

namespace exergen {

namespace {

constexpr std::array<std::uint32_t, 64> kSha256K = {
    0x428a2f98, 0x71374491, 0xb5c0fbcf, 0xe9b5dba5, 0x3956c25b, 0x59f111f1,
    0x923f82a4, 0xab1c5ed5, 0xd807aa98, 0x12835b01, 0x243185be, 0x550c7dc3,
    0x72be5d74, 0x80deb1fe, 0x9bdc06a7, 0xc19bf174, 0xe49b69c1, 0xefbe4786,
    0x0fc19dc6, 0x240ca1cc, 0x2de92c6f, 0x4a7484aa, 0x5cb0a9dc, 0x76f988da,
    0x983e5152, 0xa831c66d, 0xb00327c8, 0xbf597fc7, 0xc6e00bf3, 0xd5a79147,
    0x06ca6351, 0x14292967, 0x27b70a85, 0x2e1b2138, 0x4d2c6dfc, 0x53380d13,
    0x650a7354, 0x766a0abb, 0x81c2c92e, 0x92722c85, 0xa2bfe8a1, 0xa81a664b,
    0xc24b8b70, 0xc76c51a3, 0xd192e819, 0xd6990624, 0xf40e3585, 0x106aa070,
    0x19a4c116, 0x1e376c08, 0x2748774c, 0x34b0bcb5, 0x391c0cb3, 0x4ed8aa4a,
    0x5b9cca4f, 0x682e6ff3, 0x748f82ee, 0x78a5636f, 0x84c87814, 0x8cc70208,
    0x90befffa, 0xa4506ceb, 0xbef9a3f7, 0xc67178f2};

inline std::uint32_t rotr(std::uint32_t x, int n) {
    return (x >> n) | (x << (32 - n));
}

} // namespace

std::array<std::uint8_t, 32> sha256(std::string_view data) {
    std::array<std::uint32_t, 8> h = {0x6a09e667, 0xbb67ae85, 0x3c6ef372,
                                      0xa54ff53a, 0x510e527f, 0x9b05688c,
                                      0x1f83d9ab, 0x5be0cd19};

    const std::uint64_t bit_len = static_cast<std::uint64_t>(data.size()) * 8;
    std::vector<std::uint8_t> msg(data.begin(), data.end());
    msg.push_back(0x80);
    while (msg.size() % 64 != 56) msg.push_back(0);
    for (int i = 7; i >= 0; --i) msg.push_back(static_cast<std::uint8_t>(bit_len >> (8 * i)));

    std::array<std::uint32_t, 64> w{};
    for (std::size_t block = 0; block < msg.size(); block += 64) {
        for (int t = 0; t < 16; ++t) {
            w[t] = (static_cast<std::uint32_t>(msg[block + 4 * t]) << 24) |
                   (static_cast<std::uint32_t>(msg[block + 4 * t + 1]) << 16) |
                   (static_cast<std::uint32_t>(msg[block + 4 * t + 2]) << 8) |
                   static_cast<std::uint32_t>(msg[block + 4 * t + 3]);
        }
        for (int t = 16; t < 64; ++t) {
            std::uint32_t s0 = rotr(w[t - 15], 7) ^ rotr(w[t - 15], 18) ^ (w[t - 15] >> 3);
            std::uint32_t s1 = rotr(w[t - 2], 17) ^ rotr(w[t - 2], 19) ^ (w[t - 2] >> 10);
            w[t] = w[t - 16] + s0 + w[t - 7] + s1;
        }
        auto [a, b, c, d, e, f, g, hh] = h;
        for (int t = 0; t < 64; ++t) {
            std::uint32_t s1 = rotr(e, 6) ^ rotr(e, 11) ^ rotr(e, 25);
            std::uint32_t ch = (e & f) ^ (~e & g);
            std::uint32_t temp1 = hh + s1 + ch + kSha256K[t] + w[t];
            std::uint32_t s0 = rotr(a, 2) ^ rotr(a, 13) ^ rotr(a, 22);
            std::uint32_t maj = (a & b) ^ (a & c) ^ (b & c);
            std::uint32_t temp2 = s0 + maj;
            hh = g;
            g = f;
            f = e;
            e = d + temp1;
            d = c;
            c = b;
            b = a;
            a = temp1 + temp2;
        }
        h[0] += a;
        h[1] += b;
        h[2] += c;
        h[3] += d;
        h[4] += e;
        h[5] += f;
        h[6] += g;
        h[7] += hh;
    }

    std::array<std::uint8_t, 32> out{};
    for (int i = 0; i < 8; ++i) {
        out[4 * i] = static_cast<std::uint8_t>(h[i] >> 24);
        out[4 * i + 1] = static_cast<std::uint8_t>(h[i] >> 16);
        out[4 * i + 2] = static_cast<std::uint8_t>(h[i] >> 8);
        out[4 * i + 3] = static_cast<std::uint8_t>(h[i]);
    }
    return out;
}

std::string sha256_hex(std::string_view data) {
    static const char* digits = "0123456789abcdef";
    auto digest = sha256(data);
    std::string out;
    out.reserve(64);
    for (auto byte : digest) {
        out.push_back(digits[byte >> 4]);
        out.push_back(digits[byte & 0xF]);
    }
    return out;
}

namespace {

std::uint64_t leading_u64(const std::array<std::uint8_t, 32>& digest) {
    std::uint64_t v = 0;
    for (int i = 0; i < 8; ++i) v = (v << 8) | digest[i];
    return v;
}

// splitmix64 finalizer, also used to mix seed and label into a stream state.
std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

} // namespace

Seed64 derive_seed(std::string_view student_id, std::string_view exercise_slot,
                   std::uint32_t variant) {
    if (student_id.empty()) throw InvalidInputError("derive_seed: empty student_id");
    std::string msg;
    msg.reserve(student_id.size() + exercise_slot.size() + 14);
    msg.append(student_id);
    msg.push_back('\x1f');
    msg.append(exercise_slot);
    msg.push_back('\x1f');
    msg.append(std::to_string(variant));
    return Seed64{leading_u64(sha256(msg))};
}

RngStream split_stream(Seed64 seed, std::string_view label) {
    std::uint64_t label_digest = leading_u64(sha256(label));
    return RngStream(mix64(seed.value ^ label_digest));
}

std::uint64_t RngStream::next() {
    state_ += 0x9e3779b97f4a7c15ULL;
    return mix64(state_);
}

double RngStream::next_double() {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

std::int64_t RngStream::uniform_int(std::int64_t lo, std::int64_t hi) {
    if (lo > hi) throw InvalidInputError("uniform_int: lo > hi");
    std::uint64_t span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
    if (span == 0) return static_cast<std::int64_t>(next()); // full 64-bit range
    std::uint64_t scaled =
        static_cast<std::uint64_t>((static_cast<unsigned __int128>(next()) * span) >> 64);
    return lo + static_cast<std::int64_t>(scaled);
}

std::size_t RngStream::weighted_choice(std::span<const double> weights) {
    if (weights.empty()) throw InvalidInputError("weighted_choice: no weights");
    double total = 0;
    for (double w : weights) {
        if (w < 0) throw InvalidInputError("weighted_choice: negative weight");
        total += w;
    }
    if (total <= 0) throw InvalidInputError("weighted_choice: weights sum to zero");
    double u = next_double() * total;
    double cum = 0;
    std::size_t last_positive = 0;
    for (std::size_t i = 0; i < weights.size(); ++i) {
        if (weights[i] > 0) last_positive = i;
        cum += weights[i];
        if (u < cum && weights[i] > 0) return i;
    }
    return last_positive;
}

bool RngStream::chance(double p) {
    return next_double() < p;
}

} // namespace exergen
