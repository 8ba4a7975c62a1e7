#ifndef AGDSIM_QUADRATURE_HPP
#define AGDSIM_QUADRATURE_HPP

#include <functional>
#include <stdexcept>
#include <string>

namespace agdsim {

struct QuadratureSpec {
    double abs_tol = 1e-12;
    double rel_tol = 1e-10;
    int max_subdivisions = 18; // adaptive bisection depth
};

/// Raised when the error estimate stays above tolerance at the depth cap.
class QuadratureError : public std::runtime_error {
public:
    QuadratureError(const std::string& what, double achieved_error)
        : std::runtime_error(what), achieved_error_(achieved_error) {}
    double achieved_error() const { return achieved_error_; }

private:
    double achieved_error_;
};

/// Adaptive Gauss-Kronrod integral over [a, b].
double integrate(const std::function<double(double)>& f, double a, double b,
                 const QuadratureSpec& spec = {});

/// Integral over [0, inf) for integrands with a knee near `split` and an
/// exponentially decaying tail: [0, split] directly, then the tail under
/// the map t = split - ln(1-u), u in [0,1).
double integrate_semi_infinite(const std::function<double(double)>& f, double split,
                               const QuadratureSpec& spec = {});

} // namespace agdsim

#endif // AGDSIM_QUADRATURE_HPP
