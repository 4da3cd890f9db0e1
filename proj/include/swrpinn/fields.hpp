#pragma once

#include <cmath>
#include <span>
#include <string>
#include <vector>

#include "swrpinn/errors.hpp"
#include "swrpinn/hyperdual.hpp"

namespace swrpinn {

/// Named scalar field u(x) evaluable in plain or hyper-dual arithmetic, so
/// initial conditions can be differentiated through trial networks.
///
/// Built-ins (s = |x - center|^2):
///   zero             0
///   constant         value
///   gaussian         amplitude * exp(-width * s)
///   gaussian_cosine  amplitude * exp(-width * s) * cos(freq * s)
///   sine_product     amplitude * prod_i sin(pi * freq * x_i)
struct SpatialField {
    enum class Kind { zero, constant, gaussian, gaussian_cosine, sine_product };

    Kind kind = Kind::zero;
    double value = 0.0;     // constant
    double amplitude = 1.0; // gaussian / gaussian_cosine / sine_product
    double width = 1.0;     // gaussian exponent coefficient
    double freq = 0.0;      // cosine/sine frequency
    std::vector<double> center;

    static SpatialField zero_field() { return {}; }
    static SpatialField constant(double c) {
        SpatialField f;
        f.kind = Kind::constant;
        f.value = c;
        return f;
    }
    static SpatialField gaussian(double amp, double w, std::vector<double> c) {
        SpatialField f;
        f.kind = Kind::gaussian;
        f.amplitude = amp;
        f.width = w;
        f.center = std::move(c);
        return f;
    }
    static SpatialField gaussian_cosine(double amp, double w, double fq, std::vector<double> c) {
        SpatialField f = gaussian(amp, w, std::move(c));
        f.kind = Kind::gaussian_cosine;
        f.freq = fq;
        return f;
    }
    static SpatialField sine_product(double amp, double fq) {
        SpatialField f;
        f.kind = Kind::sine_product;
        f.amplitude = amp;
        f.freq = fq;
        return f;
    }

    template <class S>
    S eval(std::span<const S> x) const {
        using std::cos;
        using std::exp;
        using std::sin;
        switch (kind) {
            case Kind::zero: return S(0.0);
            case Kind::constant: return S(value);
            case Kind::gaussian: {
                S s = radius_sq(x);
                return amplitude * exp(-width * s);
            }
            case Kind::gaussian_cosine: {
                S s = radius_sq(x);
                return amplitude * (exp(-width * s) * cos(freq * s));
            }
            case Kind::sine_product: {
                S p = S(amplitude);
                for (const S& xi : x) p = p * sin((3.14159265358979323846 * freq) * xi);
                return p;
            }
        }
        throw usage_error("unknown spatial field kind");
    }

    double operator()(std::span<const double> x) const { return eval<double>(x); }

  private:
    template <class S>
    S radius_sq(std::span<const S> x) const {
        S s = S(0.0);
        for (std::size_t i = 0; i < x.size(); ++i) {
            const double c = i < center.size() ? center[i] : 0.0;
            S d = x[i] - S(c);
            s = s + d * d;
        }
        return s;
    }
};

/// Scalar coefficient nu(x)/r(x)/a_i(x) evaluated pointwise as a double.
/// piecewise_subdomain selects a per-subdomain value by splitting the first
/// axis at `breaks` (core boundaries, left-closed intervals).
struct CoeffField {
    enum class Kind { constant, piecewise_subdomain, gaussian, gaussian_cosine };

    Kind kind = Kind::constant;
    double value = 0.0;
    std::vector<double> values; // piecewise: one per subdomain
    std::vector<double> breaks; // piecewise: interior split positions, ascending
    SpatialField shape;         // gaussian / gaussian_cosine

    static CoeffField constant(double c) {
        CoeffField f;
        f.value = c;
        return f;
    }
    static CoeffField piecewise(std::vector<double> vals, std::vector<double> brks) {
        if (vals.size() != brks.size() + 1)
            throw config_error("piecewise coefficient needs one value per interval");
        CoeffField f;
        f.kind = Kind::piecewise_subdomain;
        f.values = std::move(vals);
        f.breaks = std::move(brks);
        return f;
    }
    static CoeffField from_field(SpatialField s) {
        CoeffField f;
        f.kind = s.kind == SpatialField::Kind::gaussian ? Kind::gaussian : Kind::gaussian_cosine;
        f.shape = std::move(s);
        return f;
    }

    double operator()(std::span<const double> x) const {
        switch (kind) {
            case Kind::constant: return value;
            case Kind::piecewise_subdomain: {
                std::size_t i = 0;
                while (i < breaks.size() && x[0] >= breaks[i]) ++i;
                return values[i];
            }
            case Kind::gaussian:
            case Kind::gaussian_cosine: return shape(x);
        }
        throw usage_error("unknown coefficient kind");
    }
};

/// Source term f(x, t); the studied equations use f = 0, tests may not.
struct SourceField {
    enum class Kind { zero, constant };
    Kind kind = Kind::zero;
    double value = 0.0;

    double operator()(std::span<const double>, double) const {
        return kind == Kind::zero ? 0.0 : value;
    }
};

} // namespace swrpinn
