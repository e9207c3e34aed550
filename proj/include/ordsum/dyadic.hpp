#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace ordsum {

using BigInt = boost::multiprecision::cpp_int;

// Exact dyadic rational numerator / 2^exponent, always normalized so that
// exponent == 0 or the numerator is odd.
class Dyadic {
 public:
  static constexpr std::uint32_t kMaxExponent = 1u << 16;

  Dyadic() = default;
  Dyadic(long long n) : num_(n) {}  // NOLINT(google-explicit-constructor): integers are dyadics
  Dyadic(BigInt numerator, std::uint32_t exponent);

  // 2^k for any integer k (negative k gives 1/2^|k|).
  static Dyadic pow2(long long k);

  // Accepts `n`, `a/b` with b a power of two, `a/2^p`, and exact decimals such as `0.8125`.
  // Throws std::invalid_argument on malformed or non-dyadic text.
  static Dyadic parse(std::string_view text);

  const BigInt& numerator() const noexcept { return num_; }
  std::uint32_t exponent() const noexcept { return exp_; }
  bool is_integer() const noexcept { return exp_ == 0; }
  bool is_zero() const noexcept { return num_.is_zero(); }
  int sign() const noexcept { return num_.sign(); }

  BigInt floor() const;
  BigInt ceil() const;
  Dyadic abs() const { return sign() < 0 ? -*this : *this; }
  // Multiplies by 2^k; k may be negative.
  Dyadic scaled(long long k) const;
  Dyadic half() const { return scaled(-1); }

  // Narrowing helper for small integers; throws if not an integer in range.
  long long to_int() const;

  std::string to_string() const;

  Dyadic operator-() const;
  friend Dyadic operator+(const Dyadic& a, const Dyadic& b);
  friend Dyadic operator-(const Dyadic& a, const Dyadic& b) { return a + (-b); }
  Dyadic& operator+=(const Dyadic& o) { return *this = *this + o; }
  Dyadic& operator-=(const Dyadic& o) { return *this = *this - o; }

  friend bool operator==(const Dyadic& a, const Dyadic& b) noexcept {
    return a.exp_ == b.exp_ && a.num_ == b.num_;
  }
  friend std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b);

 private:
  void normalize();

  BigInt num_ = 0;
  std::uint32_t exp_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Dyadic& d);

struct DyadicHash {
  std::size_t operator()(const Dyadic& d) const;
};

// Day on which x is born: |x| for integers, ceil(|x|) + exponent otherwise.
std::uint64_t birthday(const Dyadic& x);

// The unique dyadic of least birthday strictly between the bounds; an absent
// bound is unbounded on that side. Throws DomainError when lo >= hi.
Dyadic simplest_between(const std::optional<Dyadic>& lo, const std::optional<Dyadic>& hi);

}  // namespace ordsum
