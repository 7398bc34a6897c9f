#pragma once

#include <string>

namespace specpts {

enum class WeightFamily { ExpDecay, OneMinusExp, InversePower, NegLog };

/// Kernel f acting on squared pairwise distances, with analytic derivative
/// and shape flags derived from the family:
///   ExpDecay(alpha)     f(r) = exp(-alpha r)
///   OneMinusExp(alpha)  f(r) = 1 - exp(-alpha r)
///   InversePower(s)     f(r) = r^{-s}
///   NegLog              f(r) = -log r
class WeightFunction {
 public:
  static WeightFunction exp_decay(double alpha);
  static WeightFunction one_minus_exp(double alpha);
  static WeightFunction inverse_power(double s);
  static WeightFunction neg_log();

  double operator()(double r) const;
  double deriv(double r) const;

  WeightFamily family() const { return family_; }
  double param() const { return param_; }

  bool nonnegative() const { return nonnegative_; }
  bool decreasing() const { return decreasing_; }
  bool increasing() const { return increasing_; }
  bool convex() const { return convex_; }
  bool concave() const { return concave_; }
  /// True when f blows up as r -> 0 (InversePower, NegLog).
  bool singular_at_zero() const;
  /// True when f(r) -> 0 as r -> infinity fast enough for lattice sums.
  bool decays_at_infinity() const;

  std::string label() const;  // e.g. "exp:2", "invpow:0.5", "neglog"

 private:
  WeightFunction(WeightFamily family, double param);

  WeightFamily family_;
  double param_;
  bool nonnegative_, decreasing_, increasing_, convex_, concave_;
};

}  // namespace specpts
