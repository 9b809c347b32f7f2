#include "homhopf/scalar.hpp"

#include <cctype>
#include <ostream>
#include <utility>

#include "homhopf/errors.hpp"

namespace homhopf {

namespace {

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t p) {
  // Fermat; p < 2^31 keeps products in range.
  std::uint64_t result = 1;
  std::uint64_t base = a % p;
  std::uint64_t e = p - 2;
  while (e > 0) {
    if (e & 1U) result = result * base % p;
    base = base * base % p;
    e >>= 1U;
  }
  return result;
}

std::uint64_t residue(const mpz_class& z, std::uint32_t p) {
  mpz_class r = z % p;
  if (r < 0) r += p;
  return r.get_ui();
}

Field common_field(Field a, Field b) {
  if (a == b) return a;
  if (a.is_rational()) return b;
  if (b.is_rational()) return a;
  throw FieldMismatch("cannot combine " + a.to_string() + " and " + b.to_string() + " scalars");
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (std::isdigit(static_cast<unsigned char>(c)) == 0) return false;
  }
  return true;
}

}  // namespace

Field Field::prime(std::uint32_t p) {
  if (p >= (1U << 31U) || !is_prime(p)) {
    throw Error("GF(p) requires a prime p < 2^31, got " + std::to_string(p));
  }
  return Field{p};
}

Field Field::parse(std::string_view text) {
  if (text == "Q") return rationals();
  if (text.size() > 4 && text.substr(0, 3) == "GF(" && text.back() == ')') {
    auto digits = text.substr(3, text.size() - 4);
    if (all_digits(digits) && digits.size() <= 10) {
      return prime(static_cast<std::uint32_t>(std::stoull(std::string(digits))));
    }
  }
  throw Error("unknown field \"" + std::string(text) + "\" (expected Q or GF(p))");
}

std::string Field::to_string() const {
  return is_rational() ? "Q" : "GF(" + std::to_string(p_) + ")";
}

Scalar::Scalar(long value) : value_(value) {}

Scalar::Scalar(long num, long den) {
  if (den == 0) throw BadRational("zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Scalar::Scalar(mpq_class value, Field field) : value_(std::move(value)), field_(field) {
  value_.canonicalize();
  normalize();
}

Scalar Scalar::parse(std::string_view text, Field field) {
  auto fail = [&] { return BadRational("malformed rational \"" + std::string(text) + "\""); };
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) throw fail();
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) throw BadRational("zero denominator in \"" + std::string(text) + "\"");
  if (negative) n = -n;
  mpq_class q(n, d);
  q.canonicalize();
  return Scalar(std::move(q), Field::rationals()).in(field);
}

void Scalar::normalize() {
  if (field_.is_rational()) return;
  const std::uint32_t p = field_.characteristic();
  std::uint64_t den = residue(value_.get_den(), p);
  if (den == 0) throw Error("denominator vanishes in " + field_.to_string());
  std::uint64_t num = residue(value_.get_num(), p);
  value_ = mpq_class(static_cast<unsigned long>(num * inverse_mod(den, p) % p));
}

Scalar Scalar::in(Field field) const {
  if (field == field_) return *this;
  if (!field_.is_rational()) {
    if (field.is_rational()) return *this;  // residues never lift back to Q
    throw FieldMismatch("cannot move " + field_.to_string() + " scalar into " + field.to_string());
  }
  return Scalar(value_, field);
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  r.value_ = -r.value_;
  r.normalize();
  return r;
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
  Field f = common_field(field_, rhs.field_);
  if (f.is_rational()) {
    value_ += rhs.value_;
    return *this;
  }
  Scalar a = in(f);
  Scalar b = rhs.in(f);
  const std::uint64_t p = f.characteristic();
  *this = Scalar(mpq_class(static_cast<unsigned long>((a.value_.get_num().get_ui() + b.value_.get_num().get_ui()) % p)), f);
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) { return *this += -rhs; }

Scalar& Scalar::operator*=(const Scalar& rhs) {
  Field f = common_field(field_, rhs.field_);
  if (f.is_rational()) {
    value_ *= rhs.value_;
    return *this;
  }
  Scalar a = in(f);
  Scalar b = rhs.in(f);
  const std::uint64_t p = f.characteristic();
  *this = Scalar(mpq_class(static_cast<unsigned long>(a.value_.get_num().get_ui() * b.value_.get_num().get_ui() % p)), f);
  return *this;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error("division by zero");
  if (field_.is_rational()) return Scalar(1 / value_, field_);
  const std::uint64_t p = field_.characteristic();
  return Scalar(mpq_class(static_cast<unsigned long>(inverse_mod(value_.get_num().get_ui(), p))), field_);
}

Scalar& Scalar::operator/=(const Scalar& rhs) {
  Field f = common_field(field_, rhs.field_);
  return *this *= rhs.in(f).inverse();
}

bool operator==(const Scalar& lhs, const Scalar& rhs) {
  if (lhs.field_ == rhs.field_) return lhs.value_ == rhs.value_;
  Field f = common_field(lhs.field_, rhs.field_);
  return lhs.in(f).value_ == rhs.in(f).value_;
}

std::string Scalar::to_string() const { return value_.get_str(); }

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }
std::ostream& operator<<(std::ostream& os, Field f) { return os << f.to_string(); }

}  // namespace homhopf
