#pragma once

#include <cmath>
#include <cstdint>
#include <span>
#include <vector>

#include "swrpinn/errors.hpp"

namespace swrpinn {

/// Append-only record of scalar operations in evaluation order.
/// Node i stores the local partials w.r.t. at most two parents; a reverse
/// sweep accumulates adjoints so that leaves receive dL/dw. Leaves are the
/// first nodes pushed (parameter binding order = parameter index), so the
/// adjoint buffer is keyed by parameter index. Untouched leaves keep an
/// adjoint of exactly 0.
class GradientTape {
  public:
    struct Node {
        double w1, w2;
        std::int32_t p1, p2;
    };

    std::int32_t add_leaf() {
        nodes_.push_back({0.0, 0.0, -1, -1});
        return static_cast<std::int32_t>(nodes_.size()) - 1;
    }

    std::int32_t add_unary(std::int32_t p, double w) {
        nodes_.push_back({w, 0.0, p, -1});
        return static_cast<std::int32_t>(nodes_.size()) - 1;
    }

    std::int32_t add_binary(std::int32_t p1, double w1, std::int32_t p2, double w2) {
        nodes_.push_back({w1, w2, p1, p2});
        return static_cast<std::int32_t>(nodes_.size()) - 1;
    }

    std::size_t size() const { return nodes_.size(); }
    bool empty() const { return nodes_.empty(); }

    /// Drop all recordings, keeping capacity.
    void reset() { nodes_.clear(); }

    /// Reverse sweep from `output`, scaling the seed adjoint by `seed`, and
    /// accumulate (+=) leaf adjoints 0..grad.size()-1 into `grad`.
    void accumulate_gradient(std::int32_t output, double seed, std::span<double> grad) const {
        if (nodes_.empty()) throw usage_error("gradient requested from an empty tape");
        if (output < 0 || static_cast<std::size_t>(output) >= nodes_.size())
            throw usage_error("gradient output index out of range");
        adj_.assign(nodes_.size(), 0.0);
        adj_[static_cast<std::size_t>(output)] = seed;
        for (std::int32_t i = output; i >= 0; --i) {
            const double a = adj_[static_cast<std::size_t>(i)];
            if (a == 0.0) continue;
            const Node& n = nodes_[static_cast<std::size_t>(i)];
            if (n.p1 >= 0) adj_[static_cast<std::size_t>(n.p1)] += n.w1 * a;
            if (n.p2 >= 0) adj_[static_cast<std::size_t>(n.p2)] += n.w2 * a;
        }
        const std::size_t m = std::min(grad.size(), nodes_.size());
        for (std::size_t i = 0; i < m; ++i) grad[i] += adj_[i];
    }

    /// dL/dw for every leaf in binding order (spec's grad_wrt_params).
    std::vector<double> gradient(std::int32_t output, std::size_t n_params) const {
        std::vector<double> g(n_params, 0.0);
        accumulate_gradient(output, 1.0, g);
        return g;
    }

  private:
    std::vector<Node> nodes_;
    mutable std::vector<double> adj_;
};

/// Scalar recorded on the active (thread-local) tape. Each training worker
/// owns a private tape; tapes are never shared across threads.
class Rev {
  public:
    Rev() : v_(0.0), idx_(-1) {}
    Rev(double v) : v_(v), idx_(-1) {} // constant: not recorded
    Rev(double v, std::int32_t idx) : v_(v), idx_(idx) {}

    static GradientTape*& active_tape() {
        thread_local GradientTape* tape = nullptr;
        return tape;
    }

    static Rev leaf(double v) {
        GradientTape* t = active_tape();
        if (!t) throw usage_error("Rev::leaf requires an active tape");
        return Rev(v, t->add_leaf());
    }

    double value() const { return v_; }
    std::int32_t index() const { return idx_; }
    bool recorded() const { return idx_ >= 0; }

    friend Rev operator+(const Rev& a, const Rev& b) {
        return combine(a.v_ + b.v_, a, 1.0, b, 1.0);
    }
    friend Rev operator-(const Rev& a, const Rev& b) {
        return combine(a.v_ - b.v_, a, 1.0, b, -1.0);
    }
    friend Rev operator*(const Rev& a, const Rev& b) {
        return combine(a.v_ * b.v_, a, b.v_, b, a.v_);
    }
    friend Rev operator/(const Rev& a, const Rev& b) {
        if (b.v_ == 0.0) throw numeric_error("division by zero", "divide");
        const double inv = 1.0 / b.v_;
        return combine(a.v_ * inv, a, inv, b, -a.v_ * inv * inv);
    }
    Rev operator-() const { return unary(-v_, *this, -1.0); }

    Rev& operator+=(const Rev& o) { return *this = *this + o; }
    Rev& operator-=(const Rev& o) { return *this = *this - o; }
    Rev& operator*=(const Rev& o) { return *this = *this * o; }

    friend Rev tanh(const Rev& a) {
        const double th = std::tanh(a.v_);
        return unary(th, a, 1.0 - th * th);
    }
    friend Rev sigmoid(const Rev& a) {
        const double s = 1.0 / (1.0 + std::exp(-a.v_));
        return unary(s, a, s * (1.0 - s));
    }
    friend Rev exp(const Rev& a) {
        const double e = std::exp(a.v_);
        return unary(e, a, e);
    }
    friend Rev sin(const Rev& a) { return unary(std::sin(a.v_), a, std::cos(a.v_)); }
    friend Rev cos(const Rev& a) { return unary(std::cos(a.v_), a, -std::sin(a.v_)); }

  private:
    static Rev unary(double v, const Rev& a, double w) {
        if (!a.recorded()) return Rev(v);
        return Rev(v, Rev::active_tape()->add_unary(a.idx_, w));
    }
    static Rev combine(double v, const Rev& a, double wa, const Rev& b, double wb) {
        GradientTape* t = active_tape();
        if (a.recorded() && b.recorded()) return Rev(v, t->add_binary(a.idx_, wa, b.idx_, wb));
        if (a.recorded()) return Rev(v, t->add_unary(a.idx_, wa));
        if (b.recorded()) return Rev(v, t->add_unary(b.idx_, wb));
        return Rev(v);
    }

    double v_;
    std::int32_t idx_;
};

/// RAII activation of a worker's private tape for the current thread.
class TapeScope {
  public:
    explicit TapeScope(GradientTape& tape) : prev_(Rev::active_tape()) {
        Rev::active_tape() = &tape;
    }
    ~TapeScope() { Rev::active_tape() = prev_; }
    TapeScope(const TapeScope&) = delete;
    TapeScope& operator=(const TapeScope&) = delete;

  private:
    GradientTape* prev_;
};

inline double value_of(double x) { return x; }
inline double value_of(const Rev& x) { return x.value(); }

} // namespace swrpinn
