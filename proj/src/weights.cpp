#include "specpts/weights.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace specpts {

WeightFunction::WeightFunction(WeightFamily family, double param)
    : family_(family), param_(param) {
  switch (family_) {
    case WeightFamily::ExpDecay:
      if (param <= 0) throw std::invalid_argument("exp kernel needs alpha > 0");
      nonnegative_ = true;
      decreasing_ = true;
      increasing_ = false;
      convex_ = true;
      concave_ = false;
      break;
    case WeightFamily::OneMinusExp:
      if (param <= 0) throw std::invalid_argument("exp kernel needs alpha > 0");
      nonnegative_ = true;
      decreasing_ = false;
      increasing_ = true;
      convex_ = false;
      concave_ = true;
      break;
    case WeightFamily::InversePower:
      if (param <= 0) throw std::invalid_argument("power kernel needs s > 0");
      nonnegative_ = true;
      decreasing_ = true;
      increasing_ = false;
      convex_ = true;
      concave_ = false;
      break;
    case WeightFamily::NegLog:
      nonnegative_ = false;  // negative for r > 1
      decreasing_ = true;
      increasing_ = false;
      convex_ = true;
      concave_ = false;
      break;
  }
}

WeightFunction WeightFunction::exp_decay(double alpha) {
  return WeightFunction(WeightFamily::ExpDecay, alpha);
}
WeightFunction WeightFunction::one_minus_exp(double alpha) {
  return WeightFunction(WeightFamily::OneMinusExp, alpha);
}
WeightFunction WeightFunction::inverse_power(double s) {
  return WeightFunction(WeightFamily::InversePower, s);
}
WeightFunction WeightFunction::neg_log() {
  return WeightFunction(WeightFamily::NegLog, 0.0);
}

double WeightFunction::operator()(double r) const {
  switch (family_) {
    case WeightFamily::ExpDecay:
      return std::exp(-param_ * r);
    case WeightFamily::OneMinusExp:
      return 1.0 - std::exp(-param_ * r);
    case WeightFamily::InversePower:
      return std::pow(r, -param_);
    case WeightFamily::NegLog:
      return -std::log(r);
  }
  return 0.0;
}

double WeightFunction::deriv(double r) const {
  switch (family_) {
    case WeightFamily::ExpDecay:
      return -param_ * std::exp(-param_ * r);
    case WeightFamily::OneMinusExp:
      return param_ * std::exp(-param_ * r);
    case WeightFamily::InversePower:
      return -param_ * std::pow(r, -param_ - 1.0);
    case WeightFamily::NegLog:
      return -1.0 / r;
  }
  return 0.0;
}

bool WeightFunction::singular_at_zero() const {
  return family_ == WeightFamily::InversePower ||
         family_ == WeightFamily::NegLog;
}

bool WeightFunction::decays_at_infinity() const {
  switch (family_) {
    case WeightFamily::ExpDecay:
      return true;
    case WeightFamily::InversePower:
      return param_ > 1.0;  // summable over a 2-D lattice
    default:
      return false;
  }
}

std::string WeightFunction::label() const {
  std::ostringstream out;
  switch (family_) {
    case WeightFamily::ExpDecay:
      out << "exp:" << param_;
      break;
    case WeightFamily::OneMinusExp:
      out << "oneminusexp:" << param_;
      break;
    case WeightFamily::InversePower:
      out << "invpow:" << param_;
      break;
    case WeightFamily::NegLog:
      out << "neglog";
      break;
  }
  return out.str();
}

}  // namespace specpts
