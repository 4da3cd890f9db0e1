#pragma once

#include <array>
#include <cmath>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "swrpinn/errors.hpp"
#include "swrpinn/fields.hpp"

namespace swrpinn {

/// Axis-aligned box, dimension 1 or 2.
struct Box {
    std::vector<double> lo, hi;

    int dim() const { return static_cast<int>(lo.size()); }

    void validate() const {
        if (lo.size() != hi.size() || lo.empty() || lo.size() > 2)
            throw config_error("box must be 1D or 2D with matching bounds");
        for (std::size_t i = 0; i < lo.size(); ++i)
            if (!(lo[i] < hi[i])) throw config_error("box must have positive extent");
    }

    bool contains(std::span<const double> x, double tol = 0.0) const {
        for (std::size_t i = 0; i < lo.size(); ++i)
            if (x[i] < lo[i] - tol || x[i] > hi[i] + tol) return false;
        return true;
    }

    /// Half-open membership [lo, hi) per axis; used to partition quadrature
    /// nodes so that subdomain splits never double-count.
    bool contains_half_open(std::span<const double> x) const {
        for (std::size_t i = 0; i < lo.size(); ++i)
            if (x[i] < lo[i] || x[i] >= hi[i]) return false;
        return true;
    }

    double measure() const {
        double m = 1.0;
        for (std::size_t i = 0; i < lo.size(); ++i) m *= hi[i] - lo[i];
        return m;
    }

    bool operator==(const Box&) const = default;
};

/// Dirichlet (identity) or Robin trace operator lambda*u + n.grad(u).
struct TransmissionCondition {
    enum class Kind { dirichlet, robin };
    Kind kind = Kind::dirichlet;
    double lambda = 0.0;

    void validate() const {
        if (kind == Kind::robin && !(lambda > 0.0 && std::isfinite(lambda)))
            throw config_error("robin transmission requires finite lambda > 0");
    }
};

/// One interface face between a subdomain and a neighbor: a point in 1D, a
/// segment {x = position} x [face_lo, face_hi] in 2D. normal_sign is the
/// owner's outward normal along `axis`.
struct Interface {
    int owner = 0;
    int neighbor = 0;
    int axis = 0;
    double position = 0.0;
    double normal_sign = 1.0;
};

/// Face of the external boundary Lambda = boundary \ interfaces.
struct ExternalFace {
    int axis = 0;
    double position = 0.0;
    double normal_sign = 1.0;
};

struct Subdomain {
    Box box;
    std::vector<Interface> interfaces;
    std::vector<ExternalFace> external;
};

/// Overlapping (or touching) strip decomposition along the first axis.
struct Decomposition {
    Box domain;
    double eps = 0.0;
    std::vector<Subdomain> subs;

    int size() const { return static_cast<int>(subs.size()); }

    /// Non-overlapping core cell of subdomain i (equal strips of the domain),
    /// used to partition convolution quadrature nodes.
    Box core(int i) const;

    /// Closure intersection of two subdomain boxes (degenerate when eps = 0).
    Box overlap(int i, int j) const;

    std::vector<std::pair<int, int>> neighbor_pairs() const;
};

/// 1D: n_sub strips of equal core width, each extended by eps/2 into its
/// neighbors. 2D: the same split applied to the first axis (vertical strips).
Decomposition split_decomposition(const Box& domain, int n_sub, double eps);

/// Kernel rho with a fixed quadrature of int_Omega . rho(y) dy.
struct NonlocalTerm {
    SpatialField kernel;
    std::vector<std::vector<double>> quad_nodes;
    std::vector<double> quad_weights;

    void validate() const {
        if (quad_nodes.size() != quad_weights.size())
            throw config_error("nonlocal quadrature nodes/weights length mismatch");
    }

    /// Uniform midpoint-rule grid over the domain, n nodes per axis.
    static NonlocalTerm midpoint_grid(const Box& domain, int n_per_axis, SpatialField rho);
};

/// Local/nonlocal advection-diffusion-reaction problem on a box with
/// homogeneous Dirichlet boundary data:
///   du/dt = nu(x) Lap u + a(x).grad u + r(x) u + f(x,t)        (local)
///   du/dt = nu(x) Lap u + conv(u, rho) + f(x,t)                (nonlocal)
struct PdeProblem {
    int dim = 1;
    Box domain;
    double horizon = 1.0;
    CoeffField nu = CoeffField::constant(0.0);
    std::vector<CoeffField> adv;
    CoeffField reac = CoeffField::constant(0.0);
    SourceField source;
    SpatialField u0;
    std::optional<NonlocalTerm> nonlocal;

    void validate() const;
};

/// Value and input derivatives of a field at one space-time point.
template <class S>
struct FieldEval {
    int dim = 1;
    S value{};
    S dt{};
    std::array<S, 2> grad{};
    S lap{};
};

/// dt(N) - nu Lap(N) - a.grad(N) - r N - f at (x, t).
template <class S>
S pde_residual(const PdeProblem& p, const FieldEval<S>& e, std::span<const double> x, double t) {
    if (e.dim != p.dim)
        throw usage_error("pde_residual: derivative bundle dimension does not match problem");
    S adv_term = S(0.0);
    for (int i = 0; i < p.dim; ++i) {
        const double ai = i < static_cast<int>(p.adv.size()) ? p.adv[i](x) : 0.0;
        adv_term += ai * e.grad[static_cast<std::size_t>(i)];
    }
    return e.value * (-p.reac(x)) + (e.dt - p.nu(x) * e.lap - adv_term) - p.source(x, t);
}

/// Dirichlet -> value; Robin -> lambda * value + normal . grad(value).
template <class S>
S transmission_trace(const TransmissionCondition& tc, const FieldEval<S>& e,
                     std::span<const double> normal) {
    if (tc.kind == TransmissionCondition::Kind::dirichlet) return e.value;
    S nd = S(0.0);
    for (std::size_t i = 0; i < normal.size(); ++i) nd += normal[i] * e.grad[i];
    return tc.lambda * e.value + nd;
}

struct ConvolutionResult {
    double value = 0.0;
    bool empty = false;
};

/// Midpoint-rule convolution sum_{x_j in restrict_to} c_j field(x - x_j, t)
/// rho(x_j). The field callable is responsible for its own extension by zero
/// outside the global domain. Node membership is half-open so partitioned
/// evaluations sum exactly to the whole-domain sum.
template <class Field>
auto convolution_quadrature_generic(const NonlocalTerm& term, Field&& field,
                                    std::span<const double> x, double t, const Box& restrict_to,
                                    bool* empty_flag = nullptr)
    -> decltype(field(std::span<const double>{}, t)) {
    using S = decltype(field(std::span<const double>{}, t));
    S acc = S(0.0);
    bool any = false;
    std::vector<double> shifted(x.size());
    for (std::size_t j = 0; j < term.quad_nodes.size(); ++j) {
        const auto& node = term.quad_nodes[j];
        if (!restrict_to.contains_half_open(node)) continue;
        any = true;
        for (std::size_t i = 0; i < x.size(); ++i) shifted[i] = x[i] - node[i];
        const double rho = term.kernel(node);
        acc += (term.quad_weights[j] * rho) * field(std::span<const double>(shifted), t);
    }
    if (empty_flag) *empty_flag = !any;
    return acc;
}

ConvolutionResult convolution_quadrature(const NonlocalTerm& term,
                                         const std::function<double(std::span<const double>, double)>& field,
                                         std::span<const double> x, double t,
                                         const Box& restrict_to);

} // namespace swrpinn
