/**
 * @file scalar.hpp
 * @brief Exact ground-field scalars: rationals (GMP) or residues modulo a prime.
 *
 * A Scalar carries its field tag. Rational scalars act as "generic" constants:
 * combining a rational with a GF(p) residue maps the rational through the
 * canonical reduction Z_(p) -> GF(p), so literals like Scalar(1) work in every
 * field. Combining residues of two different primes is an error.
 */
#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace homhopf {

class Field {
 public:
  constexpr Field() = default;

  static constexpr Field rationals() { return Field{}; }
  /// Throws Error unless p is a prime below 2^31.
  static Field prime(std::uint32_t p);
  /// Parses "Q" or "GF(p)".
  static Field parse(std::string_view text);

  constexpr std::uint32_t characteristic() const { return p_; }
  constexpr bool is_rational() const { return p_ == 0; }
  std::string to_string() const;

  friend constexpr bool operator==(Field, Field) = default;

 private:
  constexpr explicit Field(std::uint32_t p) : p_(p) {}
  std::uint32_t p_ = 0;
};

class Scalar {
 public:
  Scalar() = default;
  Scalar(long value);  // NOLINT(google-explicit-constructor): literals are scalars
  Scalar(long num, long den);
  explicit Scalar(mpq_class value, Field field = Field::rationals());

  /// Parses an optional-sign integer, optionally followed by "/" and a positive integer.
  static Scalar parse(std::string_view text, Field field = Field::rationals());

  Field field() const { return field_; }
  const mpq_class& value() const { return value_; }
  bool is_zero() const { return value_ == 0; }
  bool is_one() const { return value_ == 1; }

  /// Re-expresses this scalar in `field` (rationals reduce modulo p).
  Scalar in(Field field) const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);
  Scalar& operator/=(const Scalar& rhs);

  friend Scalar operator+(Scalar lhs, const Scalar& rhs) { return lhs += rhs; }
  friend Scalar operator-(Scalar lhs, const Scalar& rhs) { return lhs -= rhs; }
  friend Scalar operator*(Scalar lhs, const Scalar& rhs) { return lhs *= rhs; }
  friend Scalar operator/(Scalar lhs, const Scalar& rhs) { return lhs /= rhs; }
  friend bool operator==(const Scalar& lhs, const Scalar& rhs);

  Scalar inverse() const;

  /// Canonical text: "n" or "n/d" in lowest terms; residues print as their representative.
  std::string to_string() const;

 private:
  void normalize();

  mpq_class value_{0};
  Field field_{};
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);
std::ostream& operator<<(std::ostream& os, Field f);

}  // namespace homhopf
