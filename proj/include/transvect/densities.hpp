#pragma once

#include "transvect/op.hpp"
#include "transvect/scalar.hpp"

#include <stdexcept>
#include <vector>

namespace transvect {

namespace poly {

/// Dense univariate polynomials as coefficient vectors (coeff of x^m at
/// index m), trailing zeros trimmed.
template <ScalarField S>
void trim(std::vector<S>& c) {
    while (!c.empty() && c.back().is_zero())
        c.pop_back();
}

template <ScalarField S>
std::vector<S> add(const std::vector<S>& a, const std::vector<S>& b) {
    std::vector<S> out(std::max(a.size(), b.size()), S(0));
    for (size_t i = 0; i < a.size(); ++i)
        out[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i)
        if (!b[i].is_zero())
            out[i] = out[i] + b[i];
    trim(out);
    return out;
}

template <ScalarField S>
std::vector<S> scale(const S& c, const std::vector<S>& a) {
    if (c.is_zero())
        return {};
    std::vector<S> out = a;
    for (S& v : out)
        if (!v.is_zero())
            v = c * v;
    return out;
}

template <ScalarField S>
std::vector<S> mul(const std::vector<S>& a, const std::vector<S>& b) {
    if (a.empty() || b.empty())
        return {};
    std::vector<S> out(a.size() + b.size() - 1, S(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero())
            continue;
        for (size_t j = 0; j < b.size(); ++j) {
            if (b[j].is_zero())
                continue;
            out[i + j] = out[i + j] + a[i] * b[j];
        }
    }
    trim(out);
    return out;
}

template <ScalarField S>
std::vector<S> derivative(const std::vector<S>& a, int times = 1) {
    std::vector<S> out = a;
    for (int t = 0; t < times && !out.empty(); ++t) {
        std::vector<S> d(out.size() > 1 ? out.size() - 1 : 0, S(0));
        for (size_t i = 1; i < out.size(); ++i)
            if (!out[i].is_zero())
                d[i - 1] = S(static_cast<long long>(i)) * out[i];
        out = std::move(d);
    }
    trim(out);
    return out;
}

template <ScalarField S>
std::vector<S> monomial(int degree, const S& c = S(1)) {
    std::vector<S> out(degree + 1, S(0));
    out[degree] = c;
    trim(out);
    return out;
}

} // namespace poly

/// Polynomial density phi(x) (dx)^weight.
template <ScalarField S>
struct WeightedDensity {
    std::vector<S> coeffs;
    S weight = S(0);

    WeightedDensity() = default;
    WeightedDensity(std::vector<S> c, S w) : coeffs(std::move(c)), weight(std::move(w)) {
        poly::trim(coeffs);
    }

    static WeightedDensity monomial(int degree, S w) {
        return WeightedDensity(poly::monomial<S>(degree), std::move(w));
    }

    bool is_zero() const { return coeffs.empty(); }
    int degree() const { return static_cast<int>(coeffs.size()) - 1; }

    friend bool operator==(const WeightedDensity& a, const WeightedDensity& b) = default;
};

/// Polynomial vector field f(x) d/dx.
template <ScalarField S>
struct VectorField1D {
    std::vector<S> coeffs;

    VectorField1D() = default;
    explicit VectorField1D(std::vector<S> c) : coeffs(std::move(c)) { poly::trim(coeffs); }

    static VectorField1D monomial(int degree) {
        return VectorField1D(poly::monomial<S>(degree));
    }

    friend bool operator==(const VectorField1D& a, const VectorField1D& b) = default;
};

/// Commutator [X, Y] = (X(g) - Y(f)) d/dx for X = f d/dx, Y = g d/dx.
template <ScalarField S>
VectorField1D<S> bracket(const VectorField1D<S>& X, const VectorField1D<S>& Y) {
    auto xg = poly::mul(X.coeffs, poly::derivative(Y.coeffs));
    auto yf = poly::mul(Y.coeffs, poly::derivative(X.coeffs));
    return VectorField1D<S>(poly::add(xg, poly::scale(S(-1), yf)));
}

/// L_{f d/dx} (phi (dx)^w) = (f phi' + w f' phi) (dx)^w.
template <ScalarField S>
WeightedDensity<S> lie_derivative(const VectorField1D<S>& X, const WeightedDensity<S>& phi) {
    auto main = poly::mul(X.coeffs, poly::derivative(phi.coeffs));
    auto weight_term = poly::scale(phi.weight, poly::mul(poly::derivative(X.coeffs), phi.coeffs));
    return WeightedDensity<S>(poly::add(main, weight_term), phi.weight);
}

template <ScalarField S>
WeightedDensity<S> apply_op(const DensityOp<S>& op, const std::vector<WeightedDensity<S>>& args) {
    if (static_cast<int>(args.size()) != op.arity())
        throw std::invalid_argument("apply_op: arity mismatch");
    for (int s = 0; s < op.arity(); ++s)
        if (!(args[s].weight == op.source_weights()[s]))
            throw std::invalid_argument("apply_op: argument weight mismatch");

    std::vector<S> out;
    for (const auto& [idx, val] : op.coeffs()) {
        std::vector<S> term = {val};
        for (int s = 0; s < op.arity(); ++s)
            term = poly::mul(term, poly::derivative(args[s].coeffs, idx[s]));
        out = poly::add(out, term);
    }
    return WeightedDensity<S>(std::move(out), target_weight(op));
}

/// Invariance defect L_X(A(args)) - sum_s A(..., L_X args_s, ...);
/// identically zero over all polynomial args exactly when A is X-invariant.
template <ScalarField S>
WeightedDensity<S> defect(const DensityOp<S>& op, const VectorField1D<S>& X,
                          const std::vector<WeightedDensity<S>>& args) {
    WeightedDensity<S> lhs = lie_derivative(X, apply_op(op, args));
    std::vector<S> total = lhs.coeffs;
    for (int s = 0; s < op.arity(); ++s) {
        auto moved = args;
        moved[s] = lie_derivative(X, args[s]);
        total = poly::add(total, poly::scale(S(-1), apply_op(op, moved).coeffs));
    }
    return WeightedDensity<S>(std::move(total), lhs.weight);
}

} // namespace transvect
