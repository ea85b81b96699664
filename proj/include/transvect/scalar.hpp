#pragma once

#include "transvect/quadext.hpp"
#include "transvect/rational.hpp"

#include <concepts>
#include <string>

namespace transvect {

/// Exact field scalars the solvers run over. Two instances: Rational and
/// QuadExt; everything downstream (densities, operators, kernels) is generic
/// so that the sqrt(21)-weight computations reuse the same code paths.
template <class S>
concept ScalarField = std::regular<S> && requires(const S a, const S b) {
    { a + b } -> std::same_as<S>;
    { a - b } -> std::same_as<S>;
    { a * b } -> std::same_as<S>;
    { -a } -> std::same_as<S>;
    { a.is_zero() } -> std::same_as<bool>;
    { a.inv() } -> std::same_as<S>;
    { a.str() } -> std::same_as<std::string>;
    S(0);
    S(1);
};

static_assert(ScalarField<Rational>);
static_assert(ScalarField<QuadExt>);

template <ScalarField S>
S parse_scalar(std::string_view text);

template <>
inline Rational parse_scalar<Rational>(std::string_view text) {
    return Rational::parse(text);
}

template <>
inline QuadExt parse_scalar<QuadExt>(std::string_view text) {
    return QuadExt::parse(text);
}

} // namespace transvect
