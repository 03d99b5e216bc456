#pragma once

// Exact scalars: rationals backed by GMP and residues modulo an odd prime.
// Both types expose the same surface so every algorithm in the library is a
// template over the scalar type.

#include <concepts>
#include <cstdint>
#include <gmpxx.h>
#include <ostream>
#include <random>
#include <string>
#include <string_view>

#include "extremal/error.hpp"

namespace extremal {

class FieldSpec {
 public:
  enum class Kind { Rationals, PrimeField };

  static FieldSpec rationals() { return FieldSpec(Kind::Rationals, 0); }

  /// p must be an odd prime below 2^31.
  static FieldSpec prime(std::int64_t p) {
    if (p == 2) throw Error(ErrorKind::CharTwo, "characteristic 2 is not supported");
    if (p < 3 || p >= (std::int64_t{1} << 31) || !is_prime(p))
      throw Error(ErrorKind::InvalidField, "modulus " + std::to_string(p) + " is not an odd prime");
    return FieldSpec(Kind::PrimeField, p);
  }

  /// Accepts "Q", "F<p>", "GF<p>" and "GF(<p>)".
  static FieldSpec parse(std::string_view text) {
    if (text == "Q" || text == "QQ") return rationals();
    std::string_view digits = text;
    if (digits.starts_with("GF")) digits.remove_prefix(2);
    else if (digits.starts_with("F")) digits.remove_prefix(1);
    else throw Error(ErrorKind::ParseError, "unknown field '" + std::string(text) + "'");
    if (digits.starts_with("(") && digits.ends_with(")")) digits = digits.substr(1, digits.size() - 2);
    if (digits.empty() || digits.size() > 10)
      throw Error(ErrorKind::ParseError, "unknown field '" + std::string(text) + "'");
    std::int64_t p = 0;
    for (char c : digits) {
      if (c < '0' || c > '9') throw Error(ErrorKind::ParseError, "unknown field '" + std::string(text) + "'");
      p = p * 10 + (c - '0');
    }
    return prime(p);
  }

  Kind kind() const { return kind_; }
  std::int64_t characteristic() const { return p_; }
  bool is_rationals() const { return kind_ == Kind::Rationals; }

  std::string to_string() const { return is_rationals() ? "Q" : "F" + std::to_string(p_); }

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

 private:
  FieldSpec(Kind kind, std::int64_t p) : kind_(kind), p_(p) {}

  static bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t d = 2; d * d <= n; ++d)
      if (n % d == 0) return false;
    return true;
  }

  Kind kind_;
  std::int64_t p_;
};

/// Field element of Q. GMP keeps every value in lowest terms after each
/// operation.
class Rational {
 public:
  Rational() = default;
  Rational(long n) : v_(n) {}  // NOLINT(google-explicit-constructor)
  explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

  static Rational from_int(const FieldSpec& f, std::int64_t n) {
    check_field(f);
    return Rational(static_cast<long>(n));
  }
  static Rational from_fraction(const FieldSpec& f, const mpz_class& num, const mpz_class& den) {
    check_field(f);
    if (den == 0) throw Error(ErrorKind::DivisionByZero, "zero denominator");
    return Rational(mpq_class(num, den));
  }
  /// Integer numerators drawn from [-box, box]; over Q "generic" means this.
  template <class Rng>
  static Rational random(const FieldSpec& f, Rng& rng, std::int64_t box = 100) {
    check_field(f);
    std::uniform_int_distribution<long> dist(-box, box);
    return Rational(dist(rng));
  }

  FieldSpec field() const { return FieldSpec::rationals(); }
  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  const mpq_class& value() const { return v_; }

  Rational inverse() const {
    if (is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
    return Rational(mpq_class(1) / v_);
  }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw Error(ErrorKind::DivisionByZero, "division by zero");
    v_ /= o.v_;
    return *this;
  }
  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const { return Rational(mpq_class(-v_)); }
  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }

  std::string to_string() const { return v_.get_str(); }
  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

 private:
  static void check_field(const FieldSpec& f) {
    if (!f.is_rationals()) throw Error(ErrorKind::MixedFields, "Rational requested for " + f.to_string());
  }

  mpq_class v_;
};

/// Residue modulo an odd prime. A default-constructed ModP is an unbound
/// zero that adopts the modulus of whatever it is combined with; two bound
/// values with different moduli raise MixedFields.
class ModP {
 public:
  ModP() = default;

  static ModP from_int(const FieldSpec& f, std::int64_t n) {
    check_field(f);
    std::int64_t p = f.characteristic();
    std::int64_t r = n % p;
    if (r < 0) r += p;
    return ModP(r, p);
  }
  static ModP from_fraction(const FieldSpec& f, const mpz_class& num, const mpz_class& den) {
    check_field(f);
    mpz_class p = static_cast<long>(f.characteristic());
    mpz_class n = num % p, d = den % p;
    if (d < 0) d += p;
    if (d == 0) throw Error(ErrorKind::DivisionByZero, "denominator vanishes mod " + p.get_str());
    if (n < 0) n += p;
    return ModP(n.get_si(), f.characteristic()) / ModP(d.get_si(), f.characteristic());
  }
  /// Uniform over all residues.
  template <class Rng>
  static ModP random(const FieldSpec& f, Rng& rng, std::int64_t /*box*/ = 0) {
    check_field(f);
    std::uniform_int_distribution<std::int64_t> dist(0, f.characteristic() - 1);
    return ModP(dist(rng), f.characteristic());
  }

  FieldSpec field() const {
    if (p_ == 0) throw Error(ErrorKind::MixedFields, "unbound residue has no field");
    return FieldSpec::prime(p_);
  }
  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }
  std::int64_t value() const { return v_; }
  std::int64_t modulus() const { return p_; }

  ModP inverse() const {
    if (v_ == 0) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
    // extended Euclid
    std::int64_t a = v_, b = p_, x0 = 1, x1 = 0;
    while (b != 0) {
      std::int64_t q = a / b;
      std::int64_t t = a - q * b; a = b; b = t;
      t = x0 - q * x1; x0 = x1; x1 = t;
    }
    if (x0 < 0) x0 += p_;
    return ModP(x0, p_);
  }

  ModP& operator+=(const ModP& o) {
    adopt(o);
    v_ += o.v_;
    if (v_ >= p_ && p_ != 0) v_ -= p_;
    return *this;
  }
  ModP& operator-=(const ModP& o) {
    adopt(o);
    v_ -= o.v_;
    if (v_ < 0) v_ += p_;
    return *this;
  }
  ModP& operator*=(const ModP& o) {
    adopt(o);
    if (p_ != 0) v_ = static_cast<std::int64_t>((static_cast<__int128>(v_) * o.v_) % p_);
    return *this;
  }
  ModP& operator/=(const ModP& o) {
    adopt(o);
    if (o.v_ == 0) throw Error(ErrorKind::DivisionByZero, "division by zero");
    ModP inv = ModP(o.v_, p_).inverse();
    return *this *= inv;
  }
  friend ModP operator+(ModP a, const ModP& b) { return a += b; }
  friend ModP operator-(ModP a, const ModP& b) { return a -= b; }
  friend ModP operator*(ModP a, const ModP& b) { return a *= b; }
  friend ModP operator/(ModP a, const ModP& b) { return a /= b; }
  ModP operator-() const { return ModP(v_ == 0 ? 0 : p_ - v_, p_); }
  friend bool operator==(const ModP& a, const ModP& b) {
    if (a.p_ != 0 && b.p_ != 0 && a.p_ != b.p_) throw Error(ErrorKind::MixedFields, "comparing residues of different fields");
    return a.v_ == b.v_;
  }

  std::string to_string() const { return std::to_string(v_); }
  friend std::ostream& operator<<(std::ostream& os, const ModP& r) { return os << r.v_; }

 private:
  ModP(std::int64_t v, std::int64_t p) : v_(v), p_(p) {}

  static void check_field(const FieldSpec& f) {
    if (f.is_rationals()) throw Error(ErrorKind::MixedFields, "ModP requested for Q");
  }
  void adopt(const ModP& o) {
    if (p_ == 0) p_ = o.p_;
    else if (o.p_ != 0 && o.p_ != p_)
      throw Error(ErrorKind::MixedFields, "mod " + std::to_string(p_) + " vs mod " + std::to_string(o.p_));
  }

  std::int64_t v_ = 0;
  std::int64_t p_ = 0;
};

template <class K>
concept Scalar = requires(const K a, const K b, const FieldSpec f) {
  { a + b } -> std::same_as<K>;
  { a - b } -> std::same_as<K>;
  { a * b } -> std::same_as<K>;
  { a / b } -> std::same_as<K>;
  { -a } -> std::same_as<K>;
  { a.is_zero() } -> std::same_as<bool>;
  { a.inverse() } -> std::same_as<K>;
  { a.to_string() } -> std::same_as<std::string>;
  { K::from_int(f, 1) } -> std::same_as<K>;
};

template <Scalar K>
K from_int(const FieldSpec& f, std::int64_t n) {
  return K::from_int(f, n);
}

/// Parses "n", "-n" or "n/d" into the field.
template <Scalar K>
K parse_scalar(const FieldSpec& f, std::string_view text) {
  auto bad = [&] { return Error(ErrorKind::ParseError, "bad scalar '" + std::string(text) + "'"); };
  std::string s(text);
  auto slash = s.find('/');
  std::string num = slash == std::string::npos ? s : s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  auto valid = [](const std::string& t, bool allow_sign) {
    if (t.empty()) return false;
    std::size_t i = (allow_sign && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') return false;
    return true;
  };
  if (!valid(num, true) || !valid(den, false)) throw bad();
  if (num[0] == '+') num.erase(0, 1);
  mpz_class n(num, 10), d(den, 10);
  if (d == 0) throw Error(ErrorKind::DivisionByZero, "zero denominator in '" + s + "'");
  return K::from_fraction(f, n, d);
}

}  // namespace extremal
