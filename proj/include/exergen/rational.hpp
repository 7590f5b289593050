#ifndef EXERGEN_RATIONAL_HPP
#define EXERGEN_RATIONAL_HPP

#include <cstdint>
#include <numeric>
#include <optional>
#include <string>

namespace exergen {

// Exact rational on int64 with overflow-checked arithmetic. Operations that
// would overflow, divide by zero, or leave the rationals (fractional pow,
// inexact sqrt) return nullopt; callers skip the fold in that case.
class Rational {
public:
    Rational() = default;
    Rational(std::int64_t value) : num_(value), den_(1) {} // NOLINT: implicit by design

    static std::optional<Rational> make(std::int64_t num, std::int64_t den);

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }
    bool is_integer() const { return den_ == 1; }
    bool is_zero() const { return num_ == 0; }
    bool is_negative() const { return num_ < 0; }
    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }
    std::string to_string() const;

    std::optional<Rational> add(const Rational& o) const;
    std::optional<Rational> sub(const Rational& o) const;
    std::optional<Rational> mul(const Rational& o) const;
    std::optional<Rational> div(const Rational& o) const;
    // Integer exponents only; fractional exponents are irrational in general.
    std::optional<Rational> pow(const Rational& exponent) const;
    std::optional<Rational> sqrt() const; // exact perfect squares only
    Rational neg() const { return Rational(-num_, den_); }
    Rational abs() const { return Rational(num_ < 0 ? -num_ : num_, den_); }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

private:
    Rational(std::int64_t num, std::int64_t den) : num_(num), den_(den) {}

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

} // namespace exergen

#endif
