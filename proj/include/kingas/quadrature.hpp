#ifndef KINGAS_QUADRATURE_HPP
#define KINGAS_QUADRATURE_HPP

#include <cmath>
#include <functional>
#include <stdexcept>

namespace kingas {

class QuadratureError : public std::runtime_error {
public:
  QuadratureError(const std::string& msg, double achieved)
      : std::runtime_error(msg), achieved_tolerance(achieved) {}
  double achieved_tolerance;
};

namespace detail {

// Gauss-Kronrod 7-15 nodes/weights on [-1, 1].
inline const double kKronrodX[15] = {
    -0.991455371120813, -0.949107912342759, -0.864864423359769,
    -0.741531185599394, -0.586087235467691, -0.405845151377397,
    -0.207784955007898, 0.0, 0.207784955007898, 0.405845151377397,
    0.586087235467691, 0.741531185599394, 0.864864423359769,
    0.949107912342759, 0.991455371120813};
inline const double kKronrodW[15] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250,
    0.140653259715525, 0.169004726639267, 0.190350578064785,
    0.204432940075298, 0.209482141084728, 0.204432940075298,
    0.190350578064785, 0.169004726639267, 0.140653259715525,
    0.104790010322250, 0.063092092629979, 0.022935322010529};
inline const double kGaussW[7] = {
    0.129484966168870, 0.279705391489277, 0.381830050505119,
    0.417959183673469, 0.381830050505119, 0.279705391489277,
    0.129484966168870};

template <class F>
void gk15(const F& f, double a, double b, double& result, double& err) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  double kr = 0.0, ga = 0.0;
  for (int i = 0; i < 15; ++i) {
    const double v = f(c + h * kKronrodX[i]);
    kr += kKronrodW[i] * v;
    if (i % 2 == 1) ga += kGaussW[i / 2] * v;
  }
  result = kr * h;
  err = std::abs((kr - ga) * h);
}

template <class F>
double integrate_rec(const F& f, double a, double b, double tol, int depth,
                     double& achieved) {
  double r, e;
  gk15(f, a, b, r, e);
  if (e <= tol || depth >= 40) {
    achieved += e;
    return r;
  }
  const double c = 0.5 * (a + b);
  return integrate_rec(f, a, c, 0.5 * tol, depth + 1, achieved) +
         integrate_rec(f, c, b, 0.5 * tol, depth + 1, achieved);
}

}  // namespace detail

/// Adaptive Gauss-Kronrod integration of f over [a, b] to absolute
/// tolerance abs_tol. Throws QuadratureError if the accumulated error
/// estimate exceeds 100x the requested tolerance.
template <class F>
double integrate(const F& f, double a, double b, double abs_tol = 1e-12) {
  double achieved = 0.0;
  const double r = detail::integrate_rec(f, a, b, abs_tol, 0, achieved);
  if (achieved > 100.0 * abs_tol)
    throw QuadratureError("quadrature did not converge to requested tolerance",
                          achieved);
  return r;
}

}  // namespace kingas

#endif
