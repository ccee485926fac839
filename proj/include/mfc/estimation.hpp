#pragma once

#include <cstddef>
#include <deque>
#include <stdexcept>

namespace mfc {

/// One control-period record feeding the integral estimators.
struct LoopSample {
    double t = 0.0;          // seconds
    double y = 0.0;          // measured output
    double u = 0.0;          // commanded control over [t, t + Ts)
    double e = 0.0;          // tracking error y - y*
    double y_star_dot = 0.0; // reference derivative
};

/// Fixed-capacity chronological buffer of loop samples with uniform spacing.
/// Oldest sample first; pushing into a full window evicts the oldest entry.
class SlidingWindow {
public:
    SlidingWindow(std::size_t capacity, double sample_period)
        : capacity_(capacity), ts_(sample_period) {
        if (capacity < 2)
            throw std::invalid_argument("SlidingWindow: capacity must be at least 2");
        if (!(sample_period > 0.0))
            throw std::invalid_argument("SlidingWindow: sample period must be positive");
    }

    /// Appends a sample. The timestamp must equal last.t + Ts (the window
    /// never interpolates); out-of-order or mis-spaced samples are rejected.
    void push(const LoopSample& s) {
        if (!entries_.empty()) {
            const double expected = entries_.back().t + ts_;
            const double tol = 1e-9 * (1.0 + std::abs(expected));
            if (s.t <= entries_.back().t)
                throw std::invalid_argument("SlidingWindow: non-monotonic sample");
            if (std::abs(s.t - expected) > tol)
                throw std::invalid_argument("SlidingWindow: sample spacing must equal the period");
        }
        entries_.push_back(s);
        if (entries_.size() > capacity_)
            entries_.pop_front();
    }

    bool full() const { return entries_.size() == capacity_; }
    std::size_t size() const { return entries_.size(); }
    std::size_t capacity() const { return capacity_; }
    double sample_period() const { return ts_; }
    /// Time span covered by a full window: (capacity - 1) * Ts.
    double span() const { return static_cast<double>(capacity_ - 1) * ts_; }

    const LoopSample& operator[](std::size_t i) const { return entries_[i]; }

    void clear() { entries_.clear(); }

private:
    std::size_t capacity_;
    double ts_;
    std::deque<LoopSample> entries_;
};

struct EstimatorConfig {
    double tau;   // window length, seconds; must equal the window span
    double alpha; // ultra-local scaling
    double k_p;   // loop gain; used by the closed-loop variant only

    EstimatorConfig(double tau_, double alpha_, double k_p_ = 0.0)
        : tau(tau_), alpha(alpha_), k_p(k_p_) {
        if (!(tau > 0.0))
            throw std::invalid_argument("EstimatorConfig: tau must be positive");
    }
};

// Both estimators return the piecewise-constant estimate of F in
// ydot = F + alpha*u, averaged over the trailing window [t - tau, t].
//
// algebraic_estimate integrates the annihilator-filter form
//   F = -(6/tau^3) * int_0^tau [ (tau - 2s) y(t - tau + s)
//                                + alpha s (tau - s) u(t - tau + s) ] ds
// with s window-local, so the result is invariant under time shifts and
// recovers a constant F exactly for y affine in t and u constant.
//
// closed_loop_estimate averages the loop identity
//   F = (1/tau) * int_{t-tau}^{t} ( y*dot - alpha u - k_p e ) ds,
// which is exact when the loop imposes its design dynamics
// edot + k_p e = 0. It needs no y samples but inherits the loop's own
// tracking quality; it is a good observer, not an anchor.
//
// Quadrature is composite Simpson on the uniform sample grid, so a full
// window must span an even number of intervals (odd sample count); the
// weight polynomials are then integrated exactly.

/// Throws std::logic_error("insufficient data") until the window is full;
/// callers run with f_est = 0 during warm-up.
double algebraic_estimate(const SlidingWindow& window, const EstimatorConfig& cfg);

/// Same contract as algebraic_estimate.
double closed_loop_estimate(const SlidingWindow& window, const EstimatorConfig& cfg);

} // namespace mfc
