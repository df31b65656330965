#ifndef HITCHINLAB_FLOW_HPP
#define HITCHINLAB_FLOW_HPP

#include <cmath>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace hitchinlab::flow {

struct StepOptions {
    double fixed_point_tol = 1e-13;
    int max_iterations = 50;
};

struct NonConvergenceError : std::runtime_error {
    std::size_t step_index;
    explicit NonConvergenceError(std::size_t step)
        : std::runtime_error("implicit midpoint: fixed-point iteration did not converge at step " +
                             std::to_string(step)),
          step_index(step) {}
};

namespace detail {
inline double abs2(double x) { return x * x; }
inline double abs2(const std::complex<double>& x) { return std::norm(x); }
} // namespace detail

// One implicit-midpoint step x' = x + h f((x+x')/2), solved by fixed-point
// iteration on the midpoint. Scalar may be double or complex<double>.
template <typename Scalar, typename Field>
std::vector<Scalar> implicit_midpoint_step(const std::vector<Scalar>& x, double h, Field&& f,
                                           const StepOptions& opt, std::size_t step_index) {
    std::vector<Scalar> mid = x;
    std::vector<Scalar> rhs = f(x);
    for (std::size_t i = 0; i < x.size(); ++i) mid[i] = x[i] + Scalar(0.5 * h) * rhs[i];
    for (int it = 0; it < opt.max_iterations; ++it) {
        rhs = f(mid);
        double delta2 = 0.0;
        for (std::size_t i = 0; i < x.size(); ++i) {
            Scalar next = x[i] + Scalar(0.5 * h) * rhs[i];
            delta2 = std::max(delta2, detail::abs2(next - mid[i]));
            mid[i] = next;
        }
        if (delta2 <= opt.fixed_point_tol * opt.fixed_point_tol) {
            std::vector<Scalar> out(x.size());
            for (std::size_t i = 0; i < x.size(); ++i) out[i] = Scalar(2.0) * mid[i] - x[i];
            return out;
        }
    }
    throw NonConvergenceError(step_index);
}

} // namespace hitchinlab::flow

#endif
