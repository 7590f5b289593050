#ifndef EXERGEN_RETRY_HPP
#define EXERGEN_RETRY_HPP

#include "exergen/errors.hpp"
#include "exergen/rng.hpp"

#include <optional>
#include <string>
#include <type_traits>
#include <utility>

namespace exergen {

struct RetryPolicy {
    int max_attempts = 1000;
    std::string on_exhaust = "candidate generation exhausted";
};

// Exercise-level and test-sampling defaults.
inline RetryPolicy exercise_retry_policy() { return {1000, "exercise generation exhausted"}; }
inline RetryPolicy testset_retry_policy() { return {5000, "test suite sampling exhausted"}; }

template <typename T>
struct Generated {
    T value;
    int attempts;
};

namespace detail {
template <typename T>
struct is_optional : std::false_type {};
template <typename T>
struct is_optional<std::optional<T>> : std::true_type {};
} // namespace detail

// Draws candidates from `gen` until `check` accepts one, consuming the stream
// monotonically across attempts. `gen` may return std::optional to signal a
// construction dead-end, which counts as a failed attempt. Throws
// ExhaustedError after policy.max_attempts failures.
template <typename Gen, typename Check>
auto generate_with_retry(Gen&& gen, Check&& check, const RetryPolicy& policy, RngStream& stream) {
    if (policy.max_attempts < 1)
        throw InvalidInputError("generate_with_retry: max_attempts must be >= 1");
    using Raw = std::invoke_result_t<Gen&, RngStream&>;
    for (int attempt = 1; attempt <= policy.max_attempts; ++attempt) {
        if constexpr (detail::is_optional<Raw>::value) {
            Raw candidate = gen(stream);
            if (candidate && check(*candidate))
                return Generated<typename Raw::value_type>{std::move(*candidate), attempt};
        } else {
            Raw candidate = gen(stream);
            if (check(candidate)) return Generated<Raw>{std::move(candidate), attempt};
        }
    }
    throw ExhaustedError(policy.max_attempts,
                         policy.on_exhaust + " after " + std::to_string(policy.max_attempts) +
                             " attempts");
}

} // namespace exergen

#endif
