#include "catnet/resources.hpp"

#include <cmath>
#include <numeric>
#include <optional>

#include <boost/multiprecision/cpp_int.hpp>

#include "catnet/error.hpp"

namespace catnet {

using Wide = boost::multiprecision::int128_t;

Rational::Rational(std::int64_t n, std::int64_t d) : num(n), den(d) {
  if (d == 0) throw Error(Errc::InvalidArgument, "zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
}

bool operator<(const Rational& a, const Rational& b) {
  return static_cast<Wide>(a.num) * b.den < static_cast<Wide>(b.num) * a.den;
}

IntVectorResource operator+(const IntVectorResource& a, const IntVectorResource& b) {
  if (a.value.size() != b.value.size()) throw Error(Errc::DimensionMismatch, "resource dimensions differ");
  IntVectorResource out = a;
  for (std::size_t i = 0; i < b.value.size(); ++i) out.value[i] += b.value[i];
  return out;
}

IntVectorResource scale(const IntVectorResource& a, std::int64_t k) {
  IntVectorResource out = a;
  for (auto& x : out.value) x *= k;
  return out;
}

bool dominates(const RealResource& a, const RealResource& b) { return a.value >= b.value; }

bool dominates(const IntVectorResource& a, const IntVectorResource& b) {
  if (a.value.size() != b.value.size()) throw Error(Errc::DimensionMismatch, "resource dimensions differ");
  for (std::size_t i = 0; i < a.value.size(); ++i)
    if (a.value[i] < b.value[i]) return false;
  return true;
}

bool threshold(const RealResource& r) { return r.value >= 0.0; }

bool threshold(const IntVectorResource& r) {
  for (std::int64_t x : r.value)
    if (x < 0) return false;
  return true;
}

LinearMeasuring::LinearMeasuring(std::vector<double> weights) : weights_(std::move(weights)) {
  for (double w : weights_)
    if (!(w > 0.0)) throw Error(Errc::InvalidArgument, "measuring weights must be positive");
}

double LinearMeasuring::operator()(const IntVectorResource& r) const {
  if (r.value.size() != weights_.size()) throw Error(Errc::DimensionMismatch, "measuring dimension");
  double s = 0.0;
  for (std::size_t i = 0; i < weights_.size(); ++i) s += weights_[i] * static_cast<double>(r.value[i]);
  return s;
}

namespace {

// floor(p / q) for q > 0
std::int64_t floor_div(Wide p, Wide q) {
  Wide d = p / q;
  if ((p % q != 0) && (p < 0)) --d;
  return static_cast<std::int64_t>(d);
}

std::int64_t ceil_div(Wide p, Wide q) { return -floor_div(-p, q); }

Rational best_of(const std::optional<Rational>& best) {
  if (!best) throw Error(Errc::InfeasibleConversion, "no n in range admits n a ⪰ m b");
  return *best;
}

}  // namespace

Rational conversion_rate(const RealResource& a, const RealResource& b, std::int64_t n_max) {
  if (n_max < 1) throw Error(Errc::InvalidArgument, "n_max must be >= 1");
  if (!(b.value > 0.0)) throw Error(Errc::UnboundedRate, "b ⪯ 0 puts no bound on m");
  std::optional<Rational> best;
  for (std::int64_t n = 1; n <= n_max; ++n) {
    const double m_real = std::floor(static_cast<double>(n) * a.value / b.value);
    if (m_real < 0.0) continue;
    auto m = static_cast<std::int64_t>(m_real);
    // guard the floor against rounding at exact ratios
    while (static_cast<double>(n) * a.value < static_cast<double>(m) * b.value && m > 0) --m;
    if (static_cast<double>(n) * a.value < static_cast<double>(m) * b.value) continue;
    Rational r(m, n);
    if (!best || *best < r) best = r;
  }
  return best_of(best);
}

Rational conversion_rate(const IntVectorResource& a, const IntVectorResource& b, std::int64_t n_max) {
  if (n_max < 1) throw Error(Errc::InvalidArgument, "n_max must be >= 1");
  if (a.value.size() != b.value.size()) throw Error(Errc::DimensionMismatch, "resource dimensions differ");
  bool bounded = false;
  for (std::int64_t x : b.value) bounded = bounded || x > 0;
  if (!bounded) throw Error(Errc::UnboundedRate, "b ⪯ 0 puts no bound on m");
  std::optional<Rational> best;
  for (std::int64_t n = 1; n <= n_max; ++n) {
    std::int64_t hi = INT64_MAX, lo = 0;
    bool ok = true;
    for (std::size_t i = 0; i < a.value.size(); ++i) {
      const Wide na = static_cast<Wide>(n) * a.value[i];
      const std::int64_t bi = b.value[i];
      if (bi > 0) {
        hi = std::min(hi, floor_div(na, bi));
      } else if (bi < 0) {
        lo = std::max(lo, ceil_div(-na, -static_cast<Wide>(bi)));
      } else if (na < 0) {
        ok = false;
      }
    }
    if (!ok || hi < lo) continue;
    Rational r(hi, n);
    if (!best || *best < r) best = r;
  }
  return best_of(best);
}

}  // namespace catnet
