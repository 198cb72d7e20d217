#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace catnet {

/// Non-negative rational m/n, kept reduced with n > 0.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Rational() = default;
  Rational(std::int64_t n, std::int64_t d);

  double value() const noexcept { return static_cast<double>(num) / static_cast<double>(den); }
  friend bool operator==(const Rational&, const Rational&) = default;
  friend bool operator<(const Rational& a, const Rational& b);
};

/// Signed reals under + with the usual order. Signed values are admitted so
/// the Hopfield gate can test sums that may be negative.
struct RealResource {
  double value = 0.0;

  static RealResource unit() { return {}; }
  friend RealResource operator+(RealResource a, RealResource b) { return {a.value + b.value}; }
  friend bool operator==(const RealResource&, const RealResource&) = default;
};

/// Integer vectors under componentwise + with the componentwise order.
struct IntVectorResource {
  std::vector<std::int64_t> value;

  static IntVectorResource unit(std::size_t dim) { return {std::vector<std::int64_t>(dim, 0)}; }
  friend IntVectorResource operator+(const IntVectorResource& a, const IntVectorResource& b);
  friend bool operator==(const IntVectorResource&, const IntVectorResource&) = default;
};

IntVectorResource scale(const IntVectorResource& a, std::int64_t k);

/// a ⪰ b
bool dominates(const RealResource& a, const RealResource& b);
bool dominates(const IntVectorResource& a, const IntVectorResource& b);

/// r ⪰ 0
bool threshold(const RealResource& r);
bool threshold(const IntVectorResource& r);

/// Identity measuring on the real carrier; M(r) >= 0 iff r ⪰ 0 holds here.
struct RealMeasuring {
  double operator()(const RealResource& r) const noexcept { return r.value; }
};

/// M(v) = sum w_i v_i with strictly positive weights. Additive and order
/// preserving; the sign equivalence does not hold on this carrier.
class LinearMeasuring {
 public:
  explicit LinearMeasuring(std::vector<double> weights);
  double operator()(const IntVectorResource& r) const;
  const std::vector<double>& weights() const noexcept { return weights_; }

 private:
  std::vector<double> weights_;
};

/// Largest m/n with n a ⪰ m b over 1 <= n <= n_max and integer m >= 0.
/// Throws UnboundedRate when no component bounds m, InfeasibleConversion when
/// no n in range admits any m.
Rational conversion_rate(const RealResource& a, const RealResource& b, std::int64_t n_max);
Rational conversion_rate(const IntVectorResource& a, const IntVectorResource& b, std::int64_t n_max);

}  // namespace catnet
