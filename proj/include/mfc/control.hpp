#pragma once

#include <stdexcept>
#include <vector>

namespace mfc {

/// First-order phenomenological model  ydot = F + alpha * u.
/// F lumps the unknown dynamics and every disturbance; it is re-estimated
/// continuously (see estimation.hpp). alpha is a practitioner-chosen scaling
/// that puts alpha*u on the same magnitude as ydot.
class UltraLocalModel {
public:
    explicit UltraLocalModel(double alpha, int order = 1)
        : alpha_(alpha) {
        if (alpha == 0.0)
            throw std::invalid_argument("UltraLocalModel: alpha must be nonzero");
        if (order != 1)
            throw std::invalid_argument("UltraLocalModel: only first-order models are supported");
    }

    double alpha() const { return alpha_; }
    int order() const { return 1; }

private:
    double alpha_;
};

/// Controller gains. k_i == 0 selects the pure proportional law.
struct GainSet {
    double k_p;       // per time unit, > 0 (error dynamics edot + k_p e = 0)
    double k_i = 0.0; // >= 0

    GainSet(double kp, double ki = 0.0) : k_p(kp), k_i(ki) {
        if (!(kp > 0.0))
            throw std::invalid_argument("GainSet: k_p must be positive");
        if (ki < 0.0)
            throw std::invalid_argument("GainSet: k_i must be non-negative");
    }
};

/// Setpoint and its analytic derivative at one instant.
struct ReferencePoint {
    double value = 0.0;
    double derivative = 0.0;
};

/// Piecewise-constant setpoint profile. The derivative is identically zero;
/// step changes are treated as jumps with zero slope, never differenced.
class ReferenceSignal {
public:
    struct Step {
        double t;     // seconds, start of the new level
        double value;
    };

    static ReferenceSignal constant(double value) {
        return ReferenceSignal(value, {});
    }

    static ReferenceSignal steps(double initial, std::vector<Step> changes) {
        for (std::size_t i = 1; i < changes.size(); ++i)
            if (!(changes[i].t > changes[i - 1].t))
                throw std::invalid_argument("ReferenceSignal: step times must be strictly increasing");
        return ReferenceSignal(initial, std::move(changes));
    }

    double value_at(double t) const {
        double v = initial_;
        for (const auto& s : steps_) {
            if (t >= s.t)
                v = s.value;
            else
                break;
        }
        return v;
    }

    double derivative_at(double) const { return 0.0; }

    ReferencePoint at(double t) const { return {value_at(t), 0.0}; }

private:
    ReferenceSignal(double initial, std::vector<Step> steps)
        : initial_(initial), steps_(std::move(steps)) {}

    double initial_;
    std::vector<Step> steps_;
};

/// Proportional law: u = -(f_est - ystar_dot + k_p * (y - ystar)) / alpha.
/// Output is unclamped; saturation and duty conversion belong to actuation.
inline double ip_control(double f_est, double y, const ReferencePoint& ref,
                         const GainSet& gains, const UltraLocalModel& model) {
    const double e = y - ref.value;
    return -(f_est - ref.derivative + gains.k_p * e) / model.alpha();
}

/// Proportional-integral law; e_integral is the caller-accumulated error
/// integral (see ErrorIntegrator). k_i == 0 reduces to ip_control.
inline double ipi_control(double f_est, double y, double e_integral,
                          const ReferencePoint& ref, const GainSet& gains,
                          const UltraLocalModel& model) {
    const double e = y - ref.value;
    return -(f_est - ref.derivative + gains.k_p * e + gains.k_i * e_integral)
           / model.alpha();
}

/// Closed-form error response e(t) = e0 * exp(-k_p * t) of the design
/// dynamics edot + k_p e = 0. Reference oracle for the loop tests.
double predict_error(double e0, double k_p, double t);

/// Left-rectangle error accumulator for the PI law, clamped to
/// +-10 * actuator_span / k_i so a saturated actuator cannot wind it up.
class ErrorIntegrator {
public:
    ErrorIntegrator(double k_i, double actuator_span)
        : limit_(k_i > 0.0 ? 10.0 * actuator_span / k_i : 0.0), k_i_(k_i) {
        if (actuator_span <= 0.0)
            throw std::invalid_argument("ErrorIntegrator: actuator span must be positive");
    }

    double accumulate(double e, double dt) {
        value_ += e * dt;
        if (k_i_ > 0.0) {
            if (value_ > limit_) value_ = limit_;
            if (value_ < -limit_) value_ = -limit_;
        }
        return value_;
    }

    double value() const { return value_; }
    void reset() { value_ = 0.0; }

private:
    double limit_;
    double k_i_;
    double value_ = 0.0;
};

} // namespace mfc
