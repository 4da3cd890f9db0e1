#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

#include "swrpinn/errors.hpp"
#include "swrpinn/tape.hpp"

namespace swrpinn {

/// Scalar carrying its value plus first and second directional derivatives
/// along a single seeded input direction. Arithmetic follows exact Taylor
/// propagation: for h = g(f), h.d1 = g'(f)·f.d1 and
/// h.d2 = g''(f)·f.d1² + g'(f)·f.d2. Constants carry d1 = d2 = 0; a seeded
/// coordinate carries d1 = 1, d2 = 0.
///
/// T is the underlying field: double for plain evaluation, Rev when the
/// whole forward pass must also be recorded for parameter gradients.
template <class T>
struct HyperDual {
    T v{};
    T d1{};
    T d2{};

    HyperDual() = default;
    HyperDual(T value) : v(std::move(value)), d1(0.0), d2(0.0) {}
    HyperDual(T value, T first, T second)
        : v(std::move(value)), d1(std::move(first)), d2(std::move(second)) {}

    friend HyperDual operator+(const HyperDual& a, const HyperDual& b) {
        return {a.v + b.v, a.d1 + b.d1, a.d2 + b.d2};
    }
    friend HyperDual operator-(const HyperDual& a, const HyperDual& b) {
        return {a.v - b.v, a.d1 - b.d1, a.d2 - b.d2};
    }
    HyperDual operator-() const { return {-v, -d1, -d2}; }

    friend HyperDual operator*(const HyperDual& a, const HyperDual& b) {
        return {a.v * b.v, a.d1 * b.v + a.v * b.d1,
                a.d2 * b.v + 2.0 * (a.d1 * b.d1) + a.v * b.d2};
    }
    friend HyperDual operator/(const HyperDual& a, const HyperDual& b) {
        if (value_of(b.v) == 0.0) throw numeric_error("division by zero", "divide");
        const T qv = a.v / b.v;
        const T q1 = (a.d1 - qv * b.d1) / b.v;
        const T q2 = (a.d2 - 2.0 * (q1 * b.d1) - qv * b.d2) / b.v;
        return {qv, q1, q2};
    }

    // Parameters and literals enter as direction-constants (d1 = d2 = 0).
    friend HyperDual operator+(const HyperDual& a, const T& c) { return {a.v + c, a.d1, a.d2}; }
    friend HyperDual operator+(const T& c, const HyperDual& a) { return {c + a.v, a.d1, a.d2}; }
    friend HyperDual operator-(const HyperDual& a, const T& c) { return {a.v - c, a.d1, a.d2}; }
    friend HyperDual operator-(const T& c, const HyperDual& a) { return {c - a.v, -a.d1, -a.d2}; }
    friend HyperDual operator*(const HyperDual& a, const T& c) {
        return {a.v * c, a.d1 * c, a.d2 * c};
    }
    friend HyperDual operator*(const T& c, const HyperDual& a) {
        return {c * a.v, c * a.d1, c * a.d2};
    }
    friend HyperDual operator/(const HyperDual& a, const T& c) {
        if (value_of(c) == 0.0) throw numeric_error("division by zero", "divide");
        return {a.v / c, a.d1 / c, a.d2 / c};
    }

    HyperDual& operator+=(const HyperDual& o) { return *this = *this + o; }
    HyperDual& operator-=(const HyperDual& o) { return *this = *this - o; }
    HyperDual& operator*=(const HyperDual& o) { return *this = *this * o; }
};

namespace detail {
template <class T>
HyperDual<T> chain(const HyperDual<T>& x, T g, T g1, T g2) {
    return {std::move(g), g1 * x.d1, g2 * (x.d1 * x.d1) + g1 * x.d2};
}
} // namespace detail

template <class T>
HyperDual<T> tanh(const HyperDual<T>& x) {
    using std::tanh;
    const T th = tanh(x.v);
    const T sech2 = 1.0 - th * th;
    return detail::chain(x, th, sech2, -2.0 * (th * sech2));
}

template <class T>
HyperDual<T> sigmoid(const HyperDual<T>& x) {
    using std::exp;
    const T s = 1.0 / (1.0 + exp(-x.v));
    const T s1 = s * (1.0 - s);
    return detail::chain(x, s, s1, s1 * (1.0 - 2.0 * s));
}

inline double sigmoid(double x) { return 1.0 / (1.0 + std::exp(-x)); }

template <class T>
HyperDual<T> exp(const HyperDual<T>& x) {
    using std::exp;
    const T e = exp(x.v);
    return detail::chain(x, e, e, e);
}

template <class T>
HyperDual<T> sin(const HyperDual<T>& x) {
    using std::cos;
    using std::sin;
    const T s = sin(x.v);
    return detail::chain(x, s, cos(x.v), -s);
}

template <class T>
HyperDual<T> cos(const HyperDual<T>& x) {
    using std::cos;
    using std::sin;
    const T c = cos(x.v);
    return detail::chain(x, c, -sin(x.v), -c);
}

using HyperDualScalar = HyperDual<double>;

/// Lift a point into hyper-dual space with coordinate `axis` seeded
/// (d1 = 1, d2 = 0) and every other coordinate constant.
template <class T = double>
std::vector<HyperDual<T>> seed_coordinate(std::span<const double> point, std::size_t axis) {
    if (axis >= point.size()) throw input_error("seed axis out of range");
    std::vector<HyperDual<T>> out;
    out.reserve(point.size());
    for (std::size_t i = 0; i < point.size(); ++i)
        out.emplace_back(T(point[i]), T(i == axis ? 1.0 : 0.0), T(0.0));
    return out;
}

/// Lift a point with no seeded coordinate (all derivatives zero).
template <class T = double>
std::vector<HyperDual<T>> lift_point(std::span<const double> point) {
    std::vector<HyperDual<T>> out;
    out.reserve(point.size());
    for (double c : point) out.emplace_back(T(c), T(0.0), T(0.0));
    return out;
}

template <class T>
double value_of(const HyperDual<T>& x) {
    return value_of(x.v);
}

} // namespace swrpinn
