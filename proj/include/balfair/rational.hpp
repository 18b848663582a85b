#pragma once

#include <compare>
#include <concepts>
#include <cstddef>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include <Eigen/Core>

namespace balfair {

/// Exact arbitrary-precision fraction, always kept in canonical form
/// (positive denominator, numerator and denominator coprime).
class Rational {
 public:
  Rational() = default;

  template <std::integral T>
  Rational(T value) : value_(static_cast<long>(value)) {}  // NOLINT(google-explicit-constructor)

  Rational(long numerator, long denominator);

  explicit Rational(mpq_class value);

  /// Accepts "p", "-p" or "p/q" (decimal integers, q != 0).
  static Rational parse(std::string_view text);

  /// "p" for integers, "p/q" otherwise.
  std::string str() const;
  std::string numerator_str() const;
  std::string denominator_str() const;

  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const;
  double to_double() const { return value_.get_d(); }

  const mpq_class& mpq() const { return value_; }

  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
  friend Rational operator-(const Rational& x);

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.value_, b.value_) == 0; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& x);

 private:
  mpq_class value_{0};
};

Rational abs(const Rational& x);
Rational min(const Rational& a, const Rational& b);
Rational max(const Rational& a, const Rational& b);

using Matrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using Vector = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;
using RowVector = Eigen::Matrix<Rational, 1, Eigen::Dynamic>;

}  // namespace balfair

template <>
struct std::hash<balfair::Rational> {
  std::size_t operator()(const balfair::Rational& x) const noexcept;
};

namespace Eigen {

template <>
struct NumTraits<balfair::Rational> : GenericNumTraits<balfair::Rational> {
  using Real = balfair::Rational;
  using NonInteger = balfair::Rational;
  using Literal = balfair::Rational;
  using Nested = balfair::Rational;

  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 8,
    MulCost = 16
  };

  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen
