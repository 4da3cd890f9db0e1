#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "swrpinn/errors.hpp"
#include "swrpinn/fields.hpp"
#include "swrpinn/hyperdual.hpp"
#include "swrpinn/rng.hpp"

namespace swrpinn {

enum class Activation { tanh, sigmoid };

Activation activation_from_name(const std::string& name);
std::string activation_name(Activation a);

/// Dense feed-forward architecture: input (spatial dim + time), hidden
/// widths, scalar output. Parameter layout per layer l mapping a_l -> a_{l+1}:
/// row-major weights [out x in] followed by out biases, so the total length
/// is sum_l (a_l + 1) * a_{l+1}.
struct NetworkArchitecture {
    int input_dim = 2;
    std::vector<int> hidden = {20};
    Activation activation = Activation::tanh;
    int output_dim = 1;

    void validate() const {
        if (input_dim < 1) throw config_error("network input_dim must be >= 1");
        if (output_dim != 1) throw config_error("network output_dim must be 1");
        if (hidden.empty()) throw config_error("network needs at least one hidden layer");
        for (int w : hidden)
            if (w < 1) throw config_error("network widths must be >= 1");
    }

    /// Widths a_0..a_{p+1} including input and output.
    std::vector<int> dims() const {
        std::vector<int> d;
        d.reserve(hidden.size() + 2);
        d.push_back(input_dim);
        d.insert(d.end(), hidden.begin(), hidden.end());
        d.push_back(output_dim);
        return d;
    }

    std::size_t layer_count() const { return hidden.size() + 1; }

    std::size_t param_count() const {
        const auto d = dims();
        std::size_t n = 0;
        for (std::size_t l = 0; l + 1 < d.size(); ++l)
            n += static_cast<std::size_t>(d[l] + 1) * static_cast<std::size_t>(d[l + 1]);
        return n;
    }

    std::size_t layer_offset(std::size_t layer) const {
        const auto d = dims();
        if (layer >= layer_count()) throw usage_error("layer index out of range");
        std::size_t off = 0;
        for (std::size_t l = 0; l < layer; ++l)
            off += static_cast<std::size_t>(d[l] + 1) * static_cast<std::size_t>(d[l + 1]);
        return off;
    }

    std::size_t weight_index(std::size_t layer, std::size_t out_row, std::size_t in_col) const {
        const auto d = dims();
        const auto nin = static_cast<std::size_t>(d[layer]);
        const auto nout = static_cast<std::size_t>(d[layer + 1]);
        if (out_row >= nout || in_col >= nin) throw usage_error("weight index out of range");
        return layer_offset(layer) + out_row * nin + in_col;
    }

    std::size_t bias_index(std::size_t layer, std::size_t out_row) const {
        const auto d = dims();
        const auto nin = static_cast<std::size_t>(d[layer]);
        const auto nout = static_cast<std::size_t>(d[layer + 1]);
        if (out_row >= nout) throw usage_error("bias index out of range");
        return layer_offset(layer) + nout * nin + out_row;
    }

    bool operator==(const NetworkArchitecture&) const = default;
};

/// Flat parameter vector in the layout described by NetworkArchitecture.
struct NetworkParams {
    std::vector<double> w;

    std::size_t size() const { return w.size(); }
    std::span<const double> view() const { return w; }
};

/// Xavier-uniform weights, zero biases, reproducible from the seed.
NetworkParams init_params(const NetworkArchitecture& arch, std::uint64_t seed);

/// Evaluate the network. S is the point scalar (double, Rev, HyperDual<...>),
/// P the parameter scalar (double, or Rev when recording for gradients).
template <class S, class P>
S forward(const NetworkArchitecture& arch, std::span<const P> params, std::span<const S> input) {
    using std::tanh;
    if (static_cast<int>(input.size()) != arch.input_dim)
        throw usage_error("forward: point length does not match input_dim");
    if (params.size() != arch.param_count())
        throw usage_error("forward: parameter vector length mismatch");

    const auto d = arch.dims();
    std::vector<S> cur(input.begin(), input.end());
    std::vector<S> next;
    std::size_t off = 0;
    for (std::size_t l = 0; l + 1 < d.size(); ++l) {
        const auto nin = static_cast<std::size_t>(d[l]);
        const auto nout = static_cast<std::size_t>(d[l + 1]);
        next.clear();
        next.reserve(nout);
        const bool last = (l + 2 == d.size());
        for (std::size_t i = 0; i < nout; ++i) {
            S acc = S(params[off + nout * nin + i]); // bias
            for (std::size_t j = 0; j < nin; ++j) acc += params[off + i * nin + j] * cur[j];
            if (!last)
                next.push_back(arch.activation == Activation::tanh ? tanh(acc) : sigmoid(acc));
            else
                next.push_back(acc);
        }
        cur.swap(next);
        off += (nin + 1) * nout;
    }
    return cur[0];
}

enum class IcMode { hard, soft };

/// Network plus the wrapper that embeds the initial condition: in hard mode
/// the represented solution is u0(x) + t * N(w, x, t), which matches u0 at
/// t = 0 for every parameter vector.
struct TrialNetwork {
    NetworkArchitecture arch;
    IcMode ic_mode = IcMode::hard;
    SpatialField u0;
};

/// Evaluate the trial solution at a lifted space-time point xt = (x..., t).
template <class S, class P>
S trial_eval(const TrialNetwork& trial, std::span<const P> params, std::span<const S> xt) {
    S n = forward<S, P>(trial.arch, params, xt);
    if (trial.ic_mode == IcMode::soft) return n;
    std::span<const S> x = xt.subspan(0, xt.size() - 1);
    const S& t = xt[xt.size() - 1];
    return trial.u0.eval(x) + t * n;
}

/// Transmission-aware trial: chi blends the frozen neighbor trace into the
/// local trial so the interface value is met exactly where chi = 1.
/// `trace` and `chi` must be evaluable on lifted points.
template <class S, class P, class TraceFn, class BlendFn>
S hard_interface_trial(const TrialNetwork& trial, std::span<const P> params, TraceFn&& trace,
                       BlendFn&& chi, std::span<const S> xt) {
    std::span<const S> x = xt.subspan(0, xt.size() - 1);
    S c = chi(x);
    const double cv = value_of(c);
    if (cv < 0.0 || cv > 1.0)
        throw config_error("interface blend must lie in [0, 1]", "blend");
    return c * trace(xt) + (1.0 - c) * trial_eval(trial, params, xt);
}

/// Binary checkpoint: 8-byte magic, architecture descriptor, seed, then the
/// flat parameter vector as little-endian 64-bit floats.
struct Checkpoint {
    NetworkArchitecture arch;
    std::uint64_t seed = 0;
    NetworkParams params;
};

void save_checkpoint(const std::string& path, const Checkpoint& ck);
Checkpoint load_checkpoint(const std::string& path);

} // namespace swrpinn
