#pragma once

#include "transvect/scalar.hpp"

#include <array>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace transvect {

using MultiIndex = std::vector<int>;

inline int index_sum(const MultiIndex& idx) {
    return std::accumulate(idx.begin(), idx.end(), 0);
}

template <ScalarField S>
S scalar_from_bigint(const BigInt& n) {
    return S(Rational(n));
}

template <>
inline Rational scalar_from_bigint<Rational>(const BigInt& n) {
    return Rational(n);
}

/// Constant-coefficient homogeneous k-ary differential operator on weighted
/// densities: sum over multi-indices I (|I| = order) of coeff_I * prod of
/// the I-th derivatives of the arguments. The target weight is never stored;
/// it is sum(source weights) + order, so mis-weighted tables cannot exist.
template <ScalarField S>
class DensityOp {
  public:
    DensityOp(std::vector<S> source_weights, int order, std::map<MultiIndex, S> coeffs)
        : weights_(std::move(source_weights)), order_(order), coeffs_(std::move(coeffs)) {
        if (weights_.empty() || weights_.size() > 3)
            throw std::invalid_argument("DensityOp: arity must be 1, 2 or 3");
        if (order_ < 0)
            throw std::invalid_argument("DensityOp: negative order");
        for (auto it = coeffs_.begin(); it != coeffs_.end();) {
            const auto& [idx, val] = *it;
            if (idx.size() != weights_.size())
                throw std::invalid_argument("DensityOp: multi-index arity mismatch");
            for (int d : idx)
                if (d < 0)
                    throw std::invalid_argument("DensityOp: negative derivative order");
            if (index_sum(idx) != order_)
                throw std::invalid_argument("DensityOp: multi-index sum must equal order");
            it = val.is_zero() ? coeffs_.erase(it) : std::next(it);
        }
    }

    static DensityOp zero(std::vector<S> source_weights, int order) {
        return DensityOp(std::move(source_weights), order, {});
    }

    /// Single-coefficient operator with coeff 1 at the given multi-index.
    static DensityOp elementary(std::vector<S> source_weights, MultiIndex idx) {
        int k = index_sum(idx);
        std::map<MultiIndex, S> c;
        c.emplace(std::move(idx), S(1));
        return DensityOp(std::move(source_weights), k, std::move(c));
    }

    int arity() const { return static_cast<int>(weights_.size()); }
    int order() const { return order_; }
    const std::vector<S>& source_weights() const { return weights_; }
    const std::map<MultiIndex, S>& coeffs() const { return coeffs_; }

    S coeff(const MultiIndex& idx) const {
        auto it = coeffs_.find(idx);
        return it == coeffs_.end() ? S(0) : it->second;
    }

    /// Identically zero tables are legal; several catalog families genuinely
    /// degenerate at isolated weights and are reported as such, not rejected.
    bool is_zero() const { return coeffs_.empty(); }

    friend bool operator==(const DensityOp& x, const DensityOp& y) = default;

    friend DensityOp operator*(const S& c, const DensityOp& op) {
        std::map<MultiIndex, S> out;
        if (!c.is_zero())
            for (const auto& [idx, val] : op.coeffs_)
                out.emplace(idx, c * val);
        return DensityOp(op.weights_, op.order_, std::move(out));
    }

    friend DensityOp operator+(const DensityOp& x, const DensityOp& y) {
        if (x.weights_ != y.weights_ || x.order_ != y.order_)
            throw std::invalid_argument("DensityOp: sum of incompatible operators");
        std::map<MultiIndex, S> out = x.coeffs_;
        for (const auto& [idx, val] : y.coeffs_) {
            auto [it, fresh] = out.emplace(idx, val);
            if (!fresh)
                it->second = it->second + val;
        }
        return DensityOp(x.weights_, x.order_, std::move(out));
    }

    friend DensityOp operator-(const DensityOp& x, const DensityOp& y) { return x + S(-1) * y; }

  private:
    std::vector<S> weights_;
    int order_;
    std::map<MultiIndex, S> coeffs_;
};

template <ScalarField S>
S target_weight(const DensityOp<S>& op) {
    S mu = S(op.order());
    for (const S& w : op.source_weights())
        mu = mu + w;
    return mu;
}

/// Bijection of {1,2,3}; image(p) gives the 0-based image of 0-based slot p.
class Permutation3 {
  public:
    Permutation3() : images_{0, 1, 2} {}
    explicit Permutation3(std::array<int, 3> images_zero_based) : images_(images_zero_based) {
        std::array<bool, 3> seen{};
        for (int v : images_) {
            if (v < 0 || v > 2 || seen[v])
                throw std::invalid_argument("Permutation3: not a bijection");
            seen[v] = true;
        }
    }

    static Permutation3 identity() { return Permutation3(); }
    static Permutation3 transposition(int p, int q) {
        std::array<int, 3> im{0, 1, 2};
        std::swap(im[p - 1], im[q - 1]);
        return Permutation3(im);
    }
    /// 1-based images: sigma(1)=i1, sigma(2)=i2, sigma(3)=i3.
    static Permutation3 from_images(int i1, int i2, int i3) {
        return Permutation3({i1 - 1, i2 - 1, i3 - 1});
    }

    int image(int p) const { return images_[p]; }

    Permutation3 inverse() const {
        std::array<int, 3> im{};
        for (int p = 0; p < 3; ++p)
            im[images_[p]] = p;
        return Permutation3(im);
    }

    /// (sigma * rho)(p) = sigma(rho(p)).
    friend Permutation3 operator*(const Permutation3& sigma, const Permutation3& rho) {
        return Permutation3({sigma.images_[rho.images_[0]], sigma.images_[rho.images_[1]],
                             sigma.images_[rho.images_[2]]});
    }

    int sign() const {
        int s = 1;
        for (int p = 0; p < 3; ++p)
            for (int q = p + 1; q < 3; ++q)
                if (images_[p] > images_[q])
                    s = -s;
        return s;
    }

    /// Acts on position-indexed tuples: (sigma.v)[sigma(p)] = v[p].
    template <class T>
    std::vector<T> apply(const std::vector<T>& v) const {
        std::vector<T> out(3);
        for (int p = 0; p < 3; ++p)
            out[images_[p]] = v[p];
        return out;
    }

    friend bool operator==(const Permutation3&, const Permutation3&) = default;

    static const std::array<Permutation3, 6>& all() {
        static const std::array<Permutation3, 6> group = {
            Permutation3({0, 1, 2}), Permutation3({0, 2, 1}), Permutation3({1, 0, 2}),
            Permutation3({1, 2, 0}), Permutation3({2, 0, 1}), Permutation3({2, 1, 0})};
        return group;
    }

  private:
    std::array<int, 3> images_;
};

/// A^sigma(args) = A(sigma^{-1} args); weights move along with the slots.
template <ScalarField S>
DensityOp<S> permute(const DensityOp<S>& op, const Permutation3& sigma) {
    if (op.arity() != 3)
        throw std::invalid_argument("permute: ternary operators only");
    std::map<MultiIndex, S> out;
    for (const auto& [idx, val] : op.coeffs())
        out.emplace(sigma.apply(idx), val);
    return DensityOp<S>(sigma.apply(op.source_weights()), op.order(), std::move(out));
}

/// Formal adjoint in one slot (1-based), by integration by parts against the
/// pairing F_w x F_{1-w} -> F_1: a term with i derivatives on the dualized
/// slot transfers them with sign (-1)^i and Leibniz multinomials; the slot
/// weight becomes 1 - mu and the target becomes 1 - (old slot weight).
template <ScalarField S>
DensityOp<S> dualize(const DensityOp<S>& op, int slot) {
    if (op.arity() != 3)
        throw std::invalid_argument("dualize: ternary operators only");
    if (slot < 1 || slot > 3)
        throw std::invalid_argument("dualize: slot must be 1, 2 or 3");
    const int s = slot - 1;
    std::vector<S> weights = op.source_weights();
    weights[s] = S(1) - target_weight(op);

    std::map<MultiIndex, S> out;
    for (const auto& [idx, val] : op.coeffs()) {
        const int i = idx[s];
        const int o1 = (s + 1) % 3, o2 = (s + 2) % 3;
        const S sign = (i % 2 == 0) ? S(1) : S(-1);
        for (int q = 0; q <= i; ++q) {
            for (int r = 0; q + r <= i; ++r) {
                MultiIndex nidx = idx;
                nidx[s] = i - q - r;
                nidx[o1] += q;
                nidx[o2] += r;
                S add = sign * val * scalar_from_bigint<S>(binomial(i, q) * binomial(i - q, r));
                auto [it, fresh] = out.emplace(std::move(nidx), add);
                if (!fresh)
                    it->second = it->second + add;
            }
        }
    }
    return DensityOp<S>(std::move(weights), op.order(), std::move(out));
}

/// Composition: the inner operator's arguments are spliced into the outer
/// slot (1-based), in order. Requires target_weight(inner) to equal the
/// outer slot weight and the combined arity to stay at most 3.
template <ScalarField S>
DensityOp<S> insert(const DensityOp<S>& outer, int slot, const DensityOp<S>& inner) {
    if (slot < 1 || slot > outer.arity())
        throw std::invalid_argument("insert: slot out of range");
    const int arity = outer.arity() + inner.arity() - 1;
    if (arity > 3)
        throw std::invalid_argument("insert: combined arity exceeds 3");
    const int s = slot - 1;
    if (!(target_weight(inner) == outer.source_weights()[s]))
        throw std::domain_error("insert: inner target weight does not match outer slot weight");

    std::vector<S> weights;
    weights.reserve(arity);
    for (int p = 0; p < s; ++p)
        weights.push_back(outer.source_weights()[p]);
    for (const S& w : inner.source_weights())
        weights.push_back(w);
    for (int p = s + 1; p < outer.arity(); ++p)
        weights.push_back(outer.source_weights()[p]);

    const int in_arity = inner.arity();
    std::map<MultiIndex, S> out;
    auto emit = [&](const MultiIndex& oidx, const S& oval, const MultiIndex& iidx, const S& ival,
                    const std::vector<int>& split, const BigInt& multinom) {
        MultiIndex nidx;
        nidx.reserve(arity);
        for (int p = 0; p < s; ++p)
            nidx.push_back(oidx[p]);
        for (int t = 0; t < in_arity; ++t)
            nidx.push_back(iidx[t] + split[t]);
        for (int p = s + 1; p < outer.arity(); ++p)
            nidx.push_back(oidx[p]);
        S add = oval * ival * scalar_from_bigint<S>(multinom);
        auto [it, fresh] = out.emplace(std::move(nidx), add);
        if (!fresh)
            it->second = it->second + add;
    };

    for (const auto& [oidx, oval] : outer.coeffs()) {
        const int m = oidx[s];
        for (const auto& [iidx, ival] : inner.coeffs()) {
            if (in_arity == 1) {
                emit(oidx, oval, iidx, ival, {m}, 1);
            } else if (in_arity == 2) {
                for (int q = 0; q <= m; ++q)
                    emit(oidx, oval, iidx, ival, {q, m - q}, binomial(m, q));
            } else {
                for (int q = 0; q <= m; ++q)
                    for (int r = 0; q + r <= m; ++r)
                        emit(oidx, oval, iidx, ival, {q, r, m - q - r},
                             binomial(m, q) * binomial(m - q, r));
            }
        }
    }
    return DensityOp<S>(std::move(weights), outer.order() + inner.order(), std::move(out));
}

} // namespace transvect
