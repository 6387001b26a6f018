#ifndef COGCAP_SPECFUN_HPP
#define COGCAP_SPECFUN_HPP

//
// Special functions used by every capacity expression.
//
// Sign convention: everything is written in terms of Gamma(0, x) = E1(x) with
// x > 0.  The exponential integral Ei of a negative argument relates to it by
// -Ei(-x) = E1(x) = Gamma(0, x).
//
// All functions are pure and thread-safe.
//

#include <cstdint>

namespace cogcap::specfun {

/// Parameter c of the unified bound c*ln(1 + 1/(c*x)) on e^x Gamma(0, x).
/// c = 0.5 is a lower bound, c = 1 an upper bound.
class BoundParam {
public:
  explicit BoundParam(double c);

  static BoundParam lower() { return BoundParam(0.5); }
  static BoundParam upper() { return BoundParam(1.0); }

  double value() const noexcept { return c_; }

private:
  double c_;
};

/// Gamma(0, x) = E1(x) for x > 0.  Relative accuracy ~1e-14 on [1e-8, 700];
/// underflows to 0 beyond x ~ 745.
double gamma0(double x);

/// e^x Gamma(0, x) for x > 0, without overflow for large x.
double exg0(double x);

/// c * ln(1 + 1/(c x)).
double exg0_bound(double x, BoundParam c);

/// Arithmetic mean of the c = 1 and c = 0.5 bounds.
double exg0_approx(double x);

/// Gamma(m + 1, x) = m! e^{-x} sum_{j=0}^{m} x^j / j!   (shape = m + 1 >= 1, x >= 0).
double upper_inc_gamma_int(std::int64_t shape, double x);

/// e^x Gamma(m + 1, x) / m! = sum_{j=0}^{m} x^j / j!  (finite, overflow-free
/// for the ranges used by the capacity series).
double truncated_exp_sum(std::int64_t m, double x);

/// Laguerre polynomial L_k(x) by the three-term recurrence.
double laguerre(std::int64_t k, double x);

// Building blocks, exposed so the two E1 evaluation routes can be checked
// against each other.

/// E1(x) by the power series -gamma - ln x - sum (-x)^k / (k k!).  Accurate for
/// x < ~2; loses digits to cancellation beyond that.
double e1_series(double x);

/// e^x E1(x) by the modified-Lentz continued fraction.  Converges for any
/// x > 0 but slowly for x << 1.  `iterations` receives the term count.
double exg0_continued_fraction(double x, int* iterations = nullptr);

}  // namespace cogcap::specfun

#endif
