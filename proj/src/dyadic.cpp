#include "ordsum/dyadic.hpp"

#include <cctype>
#include <functional>
#include <ostream>
#include <stdexcept>

#include "ordsum/errors.hpp"

namespace ordsum {

namespace {

BigInt shl(const BigInt& v, std::uint32_t k) { return v << k; }

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

BigInt parse_digits(std::string_view s) {
  if (!all_digits(s)) throw std::invalid_argument("expected digits in dyadic literal");
  return BigInt(std::string(s));
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Dyadic::Dyadic(BigInt numerator, std::uint32_t exponent) : num_(std::move(numerator)), exp_(exponent) {
  normalize();
}

void Dyadic::normalize() {
  if (num_.is_zero()) {
    exp_ = 0;
    return;
  }
  if (exp_ > 0) {
    // lsb is the index of the lowest set bit of |num|.
    const auto lsb = static_cast<std::uint32_t>(boost::multiprecision::lsb(boost::multiprecision::abs(num_)));
    const std::uint32_t drop = lsb < exp_ ? lsb : exp_;
    num_ >>= drop;  // exact: the low `drop` bits are zero
    exp_ -= drop;
  }
  if (exp_ > kMaxExponent) throw ResourceError("dyadic exponent exceeds 2^16");
}

Dyadic Dyadic::pow2(long long k) {
  if (k >= 0) {
    if (k > static_cast<long long>(kMaxExponent)) throw ResourceError("dyadic magnitude exceeds 2^(2^16)");
    return Dyadic(shl(BigInt(1), static_cast<std::uint32_t>(k)), 0);
  }
  if (-k > static_cast<long long>(kMaxExponent)) throw ResourceError("dyadic exponent exceeds 2^16");
  return Dyadic(BigInt(1), static_cast<std::uint32_t>(-k));
}

Dyadic Dyadic::parse(std::string_view text) {
  std::string_view s = trim(text);
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
    s = trim(s);
  }
  if (s.empty()) throw std::invalid_argument("empty dyadic literal");

  Dyadic result;
  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view whole = s.substr(0, dot);
    std::string_view frac = s.substr(dot + 1);
    if (whole.empty()) whole = "0";
    if (!all_digits(whole) || !all_digits(frac)) throw std::invalid_argument("malformed decimal literal");
    // frac/10^d = frac/(2^d 5^d); dyadic only if 5^d divides frac.
    BigInt numerator = parse_digits(frac);
    BigInt five_pow = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) five_pow *= 5;
    if (numerator % five_pow != 0) throw std::invalid_argument("decimal literal is not a dyadic rational");
    if (frac.size() > kMaxExponent) throw std::invalid_argument("decimal literal too long");
    result = Dyadic(parse_digits(whole), 0) + Dyadic(numerator / five_pow, static_cast<std::uint32_t>(frac.size()));
  } else if (auto slash = s.find('/'); slash != std::string_view::npos) {
    BigInt numerator = parse_digits(trim(s.substr(0, slash)));
    std::string_view den = trim(s.substr(slash + 1));
    std::uint32_t exponent = 0;
    if (auto caret = den.find('^'); caret != std::string_view::npos) {
      if (trim(den.substr(0, caret)) != "2") throw std::invalid_argument("denominator base must be 2");
      BigInt p = parse_digits(trim(den.substr(caret + 1)));
      if (p > kMaxExponent) throw std::invalid_argument("dyadic exponent exceeds 2^16");
      exponent = static_cast<std::uint32_t>(p);
    } else {
      BigInt d = parse_digits(den);
      if (d <= 0 || (d & (d - 1)) != 0) throw std::invalid_argument("denominator is not a power of two");
      exponent = static_cast<std::uint32_t>(boost::multiprecision::msb(d));
      if (exponent > kMaxExponent) throw std::invalid_argument("dyadic exponent exceeds 2^16");
    }
    result = Dyadic(numerator, exponent);
  } else {
    result = Dyadic(parse_digits(s), 0);
  }
  return negative ? -result : result;
}

BigInt Dyadic::floor() const {
  if (exp_ == 0) return num_;
  // Arithmetic shift of a negative cpp_int rounds toward zero, so adjust.
  BigInt q = boost::multiprecision::abs(num_) >> exp_;
  if (num_.sign() < 0) return -q - 1;
  return q;
}

BigInt Dyadic::ceil() const {
  if (exp_ == 0) return num_;
  return floor() + 1;
}

Dyadic Dyadic::scaled(long long k) const {
  if (num_.is_zero()) return *this;
  if (k >= 0) {
    const auto uk = static_cast<std::uint64_t>(k);
    if (uk <= exp_) return Dyadic(num_, exp_ - static_cast<std::uint32_t>(uk));
    if (uk - exp_ > kMaxExponent) throw ResourceError("dyadic magnitude exceeds 2^(2^16)");
    return Dyadic(shl(num_, static_cast<std::uint32_t>(uk - exp_)), 0);
  }
  const auto uk = static_cast<std::uint64_t>(-k);
  if (exp_ + uk > kMaxExponent) throw ResourceError("dyadic exponent exceeds 2^16");
  return Dyadic(num_, exp_ + static_cast<std::uint32_t>(uk));
}

long long Dyadic::to_int() const {
  if (exp_ != 0) throw DomainError("dyadic " + to_string() + " is not an integer");
  if (num_ > BigInt(std::numeric_limits<long long>::max()) || num_ < BigInt(std::numeric_limits<long long>::min())) {
    throw ResourceError("integer " + to_string() + " out of range");
  }
  return static_cast<long long>(num_);
}

std::string Dyadic::to_string() const {
  if (exp_ == 0) return num_.str();
  return num_.str() + "/" + shl(BigInt(1), exp_).str();
}

Dyadic Dyadic::operator-() const {
  Dyadic r = *this;
  r.num_ = -r.num_;
  return r;
}

Dyadic operator+(const Dyadic& a, const Dyadic& b) {
  if (a.exp_ == b.exp_) return Dyadic(a.num_ + b.num_, a.exp_);
  if (a.exp_ > b.exp_) return Dyadic(a.num_ + shl(b.num_, a.exp_ - b.exp_), a.exp_);
  return Dyadic(shl(a.num_, b.exp_ - a.exp_) + b.num_, b.exp_);
}

std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b) {
  const std::uint32_t e = a.exp_ > b.exp_ ? a.exp_ : b.exp_;
  const BigInt lhs = shl(a.num_, e - a.exp_);
  const BigInt rhs = shl(b.num_, e - b.exp_);
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Dyadic& d) { return os << d.to_string(); }

std::size_t DyadicHash::operator()(const Dyadic& d) const {
  std::size_t h = std::hash<std::string>{}(d.numerator().str());
  return h ^ (static_cast<std::size_t>(d.exponent()) * 0x9e3779b97f4a7c15ULL);
}

std::uint64_t birthday(const Dyadic& x) {
  const Dyadic a = x.abs();
  if (a.is_integer()) return static_cast<std::uint64_t>(a.numerator());
  return static_cast<std::uint64_t>(a.ceil()) + a.exponent();
}

Dyadic simplest_between(const std::optional<Dyadic>& lo, const std::optional<Dyadic>& hi) {
  if (lo && hi && *lo >= *hi) {
    throw DomainError("simplest_between: empty interval (" + lo->to_string() + ", " + hi->to_string() + ")");
  }
  const bool zero_above_lo = !lo || lo->sign() < 0;
  const bool zero_below_hi = !hi || hi->sign() > 0;
  if (zero_above_lo && zero_below_hi) return Dyadic(0);

  if (!zero_below_hi) {
    // Whole interval is at or below zero: mirror.
    std::optional<Dyadic> mlo = hi ? std::optional<Dyadic>(-*hi) : std::nullopt;
    std::optional<Dyadic> mhi = lo ? std::optional<Dyadic>(-*lo) : std::nullopt;
    return -simplest_between(mlo, mhi);
  }

  // Here lo >= 0 is present.
  const Dyadic next_integer(lo->floor() + 1, 0);
  if (!hi || next_integer < *hi) return next_integer;

  // No integer fits: bisect inside (floor(lo), floor(lo) + 1).
  Dyadic step = Dyadic(1).half();
  Dyadic mid = Dyadic(lo->floor(), 0) + step;
  for (;;) {
    if (*lo < mid && mid < *hi) return mid;
    step = step.half();
    if (mid <= *lo) {
      mid += step;
    } else {
      mid -= step;
    }
  }
}

}  // namespace ordsum
