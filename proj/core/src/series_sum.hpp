#pragma once

#include <cmath>
#include <complex>

namespace asianlt::detail {

// Neumaier (improved Kahan) summation.
class NeumaierSum {
 public:
  void add(double v) noexcept {
    const double t = sum_ + v;
    if (std::abs(sum_) >= std::abs(v)) {
      comp_ += (sum_ - t) + v;
    } else {
      comp_ += (v - t) + sum_;
    }
    sum_ = t;
  }
  void scale(double f) noexcept {
    sum_ *= f;
    comp_ *= f;
  }
  [[nodiscard]] double value() const noexcept { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

class NeumaierComplex {
 public:
  void add(std::complex<double> v) noexcept {
    re_.add(v.real());
    im_.add(v.imag());
  }
  void scale(double f) noexcept {
    re_.scale(f);
    im_.scale(f);
  }
  [[nodiscard]] std::complex<double> value() const noexcept { return {re_.value(), im_.value()}; }

 private:
  NeumaierSum re_;
  NeumaierSum im_;
};

}  // namespace asianlt::detail
