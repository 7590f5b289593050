#include "exergen/rational.hpp"

#include <cmath>
#include <cstdlib>

namespace exergen {

namespace {

using Wide = __int128;

constexpr std::int64_t kMax = INT64_MAX;
constexpr std::int64_t kMin = INT64_MIN;

bool fits(Wide v) {
    return v <= static_cast<Wide>(kMax) && v >= static_cast<Wide>(kMin);
}

Wide wide_gcd(Wide a, Wide b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        Wide t = a % b;
        a = b;
        b = t;
    }
    return a;
}

std::optional<Rational> reduce(Wide num, Wide den) {
    if (den == 0) return std::nullopt;
    if (den < 0) {
        num = -num;
        den = -den;
    }
    Wide g = wide_gcd(num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    if (!fits(num) || !fits(den)) return std::nullopt;
    return Rational::make(static_cast<std::int64_t>(num), static_cast<std::int64_t>(den));
}

} // namespace

std::optional<Rational> Rational::make(std::int64_t num, std::int64_t den) {
    if (den == 0) return std::nullopt;
    if (den < 0) {
        if (num == kMin || den == kMin) return std::nullopt;
        num = -num;
        den = -den;
    }
    std::int64_t g = std::gcd(num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    return Rational(num, den);
}

std::string Rational::to_string() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

std::optional<Rational> Rational::add(const Rational& o) const {
    return reduce(static_cast<Wide>(num_) * o.den_ + static_cast<Wide>(o.num_) * den_,
                  static_cast<Wide>(den_) * o.den_);
}

std::optional<Rational> Rational::sub(const Rational& o) const {
    return reduce(static_cast<Wide>(num_) * o.den_ - static_cast<Wide>(o.num_) * den_,
                  static_cast<Wide>(den_) * o.den_);
}

std::optional<Rational> Rational::mul(const Rational& o) const {
    return reduce(static_cast<Wide>(num_) * o.num_, static_cast<Wide>(den_) * o.den_);
}

std::optional<Rational> Rational::div(const Rational& o) const {
    if (o.num_ == 0) return std::nullopt;
    return reduce(static_cast<Wide>(num_) * o.den_, static_cast<Wide>(den_) * o.num_);
}

std::optional<Rational> Rational::pow(const Rational& exponent) const {
    if (!exponent.is_integer()) return std::nullopt;
    std::int64_t k = exponent.num();
    if (k == 0) return Rational(1); // matches std::pow(x, 0) == 1, including x == 0
    bool invert = k < 0;
    if (invert && num_ == 0) return std::nullopt;
    std::uint64_t reps = invert ? static_cast<std::uint64_t>(-(k + 1)) + 1
                                : static_cast<std::uint64_t>(k);
    if (reps > 63) return std::nullopt;
    Wide num = 1, den = 1;
    for (std::uint64_t i = 0; i < reps; ++i) {
        num *= num_;
        den *= den_;
        if (!fits(num) || !fits(den)) return std::nullopt;
    }
    return invert ? reduce(den, num) : reduce(num, den);
}

std::optional<Rational> Rational::sqrt() const {
    if (num_ < 0) return std::nullopt;
    auto isqrt_exact = [](std::int64_t v) -> std::optional<std::int64_t> {
        if (v < 0) return std::nullopt;
        auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(v)));
        for (std::int64_t c = (r > 1 ? r - 1 : 0); c <= r + 1; ++c) {
            if (c * c == v) return c;
        }
        return std::nullopt;
    };
    auto rn = isqrt_exact(num_);
    auto rd = isqrt_exact(den_);
    if (!rn || !rd) return std::nullopt;
    return Rational::make(*rn, *rd);
}

} // namespace exergen
