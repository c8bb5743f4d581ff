#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstdint>
#include <string>
#include <string_view>

#include "hopfgal/errors.hpp"

namespace hopfgal {

namespace detail {

inline bool is_decimal_integer(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

inline mpz_class parse_integer(std::string_view s) {
  if (!is_decimal_integer(s)) throw ParseError("not an integer: '" + std::string(s) + "'");
  if (s.front() == '+') s.remove_prefix(1);
  return mpz_class(std::string(s), 10);
}

/// Splits "a/b" (or "a") into numerator and denominator strings.
inline std::pair<std::string_view, std::string_view> split_fraction(std::string_view s) {
  auto slash = s.find('/');
  if (slash == std::string_view::npos) return {s, std::string_view{}};
  return {s.substr(0, slash), s.substr(slash + 1)};
}

}  // namespace detail

/// Exact rational number, always in lowest terms with positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(long n) : q_(n) {}  // NOLINT: implicit from integers is intended
  Rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw std::domain_error("zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
  }

  static Rational parse(std::string_view s) {
    auto [num, den] = detail::split_fraction(s);
    if (den.empty()) {
      if (s.find('/') != std::string_view::npos) throw ParseError("bad fraction: '" + std::string(s) + "'");
      return Rational(detail::parse_integer(num), 1);
    }
    auto d = detail::parse_integer(den);
    if (d == 0) throw ParseError("zero denominator in '" + std::string(s) + "'");
    return Rational(detail::parse_integer(num), d);
  }

  mpz_class numerator() const { return q_.get_num(); }
  mpz_class denominator() const { return q_.get_den(); }
  bool is_zero() const { return sgn(q_) == 0; }

  Rational inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero");
    return Rational(q_.get_den(), q_.get_num());
  }

  std::string str() const {
    if (q_.get_den() == 1) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
  }

  friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ + b.q_)); }
  friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ - b.q_)); }
  friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ * b.q_)); }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw std::domain_error("division by zero");
    return Rational(mpq_class(a.q_ / b.q_));
  }
  Rational operator-() const { return Rational(mpq_class(-q_)); }
  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
  }

 private:
  explicit Rational(mpq_class q) : q_(std::move(q)) {}
  mpq_class q_;
};

/// Element of GF(p); carries its modulus so that arithmetic needs no context.
class Residue {
 public:
  Residue() = default;
  Residue(std::uint32_t value, std::uint32_t modulus) : value_(value % modulus), modulus_(modulus) {}

  std::uint32_t value() const { return value_; }
  std::uint32_t modulus() const { return modulus_; }
  bool is_zero() const { return value_ == 0; }

  Residue inverse() const {
    if (value_ == 0) throw std::domain_error("inverse of zero residue");
    // extended Euclid on (value, p)
    std::int64_t r0 = modulus_, r1 = value_, s0 = 0, s1 = 1;
    while (r1 != 0) {
      std::int64_t q = r0 / r1;
      std::int64_t r2 = r0 - q * r1;
      r0 = r1;
      r1 = r2;
      std::int64_t s2 = s0 - q * s1;
      s0 = s1;
      s1 = s2;
    }
    std::int64_t inv = s0 % static_cast<std::int64_t>(modulus_);
    if (inv < 0) inv += modulus_;
    return Residue(static_cast<std::uint32_t>(inv), modulus_);
  }

  std::string str() const { return std::to_string(value_); }

  friend Residue operator+(Residue a, Residue b) {
    check(a, b);
    std::uint64_t s = std::uint64_t{a.value_} + b.value_;
    return Residue(static_cast<std::uint32_t>(s % a.modulus_), a.modulus_);
  }
  friend Residue operator-(Residue a, Residue b) {
    check(a, b);
    std::uint64_t s = std::uint64_t{a.value_} + a.modulus_ - b.value_;
    return Residue(static_cast<std::uint32_t>(s % a.modulus_), a.modulus_);
  }
  friend Residue operator*(Residue a, Residue b) {
    check(a, b);
    std::uint64_t s = std::uint64_t{a.value_} * b.value_;
    return Residue(static_cast<std::uint32_t>(s % a.modulus_), a.modulus_);
  }
  friend Residue operator/(Residue a, Residue b) { return a * b.inverse(); }
  Residue operator-() const { return Residue(value_ == 0 ? 0 : modulus_ - value_, modulus_); }
  Residue& operator+=(Residue o) { return *this = *this + o; }
  Residue& operator-=(Residue o) { return *this = *this - o; }
  Residue& operator*=(Residue o) { return *this = *this * o; }

  friend bool operator==(Residue a, Residue b) { return a.value_ == b.value_ && a.modulus_ == b.modulus_; }
  friend std::strong_ordering operator<=>(Residue a, Residue b) {
    if (auto c = a.modulus_ <=> b.modulus_; c != 0) return c;
    return a.value_ <=> b.value_;
  }

 private:
  static void check(Residue a, Residue b) {
    if (a.modulus_ != b.modulus_) throw std::logic_error("mixing residues of different moduli");
  }
  std::uint32_t value_ = 0;
  std::uint32_t modulus_ = 1;
};

inline bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

/// The field of rational numbers.
struct RationalField {
  using Element = Rational;

  Element zero() const { return {}; }
  Element one() const { return Rational(1); }
  Element from_int(std::int64_t n) const { return Rational(static_cast<long>(n)); }
  Element parse(std::string_view s) const { return Rational::parse(s); }
  std::string format(const Element& a) const { return a.str(); }
  std::string name() const { return "Q"; }
  std::uint32_t characteristic() const { return 0; }

  friend bool operator==(const RationalField&, const RationalField&) = default;
};

/// The prime field GF(p), p < 2^31.
class PrimeField {
 public:
  using Element = Residue;

  explicit PrimeField(std::uint32_t p) : p_(p) {
    if (p >= (1u << 31) || !is_prime(p)) throw InvalidArgument("GF(p) needs a prime p < 2^31, got " + std::to_string(p));
  }

  std::uint32_t modulus() const { return p_; }
  Element zero() const { return Residue(0, p_); }
  Element one() const { return Residue(1, p_); }
  Element from_int(std::int64_t n) const {
    std::int64_t r = n % static_cast<std::int64_t>(p_);
    if (r < 0) r += p_;
    return Residue(static_cast<std::uint32_t>(r), p_);
  }
  /// Accepts decimal integers (reduced mod p) and fractions whose denominator is a unit mod p.
  Element parse(std::string_view s) const {
    auto [num, den] = detail::split_fraction(s);
    Element n = reduce(detail::parse_integer(num));
    if (den.empty()) {
      if (s.find('/') != std::string_view::npos) throw ParseError("bad fraction: '" + std::string(s) + "'");
      return n;
    }
    Element d = reduce(detail::parse_integer(den));
    if (d.is_zero()) throw ParseError("denominator of '" + std::string(s) + "' vanishes mod " + std::to_string(p_));
    return n / d;
  }
  std::string format(const Element& a) const { return a.str(); }
  std::string name() const { return "GF(" + std::to_string(p_) + ")"; }
  std::uint32_t characteristic() const { return p_; }

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  Element reduce(const mpz_class& z) const {
    mpz_class r = z % p_;
    if (r < 0) r += p_;
    return Residue(static_cast<std::uint32_t>(r.get_ui()), p_);
  }
  std::uint32_t p_;
};

template <class F>
concept ExactField = std::equality_comparable<F> && requires(const F& f, const typename F::Element& a,
                                                            std::string_view s, std::int64_t n) {
  { f.zero() } -> std::same_as<typename F::Element>;
  { f.one() } -> std::same_as<typename F::Element>;
  { f.from_int(n) } -> std::same_as<typename F::Element>;
  { f.parse(s) } -> std::same_as<typename F::Element>;
  { f.format(a) } -> std::same_as<std::string>;
  { a + a } -> std::same_as<typename F::Element>;
  { a - a } -> std::same_as<typename F::Element>;
  { a * a } -> std::same_as<typename F::Element>;
  { a / a } -> std::same_as<typename F::Element>;
  { -a } -> std::same_as<typename F::Element>;
  { a.inverse() } -> std::same_as<typename F::Element>;
  { a.is_zero() } -> std::same_as<bool>;
  { a == a } -> std::same_as<bool>;
};

static_assert(ExactField<RationalField>);
static_assert(ExactField<PrimeField>);

}  // namespace hopfgal
