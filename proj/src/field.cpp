#include "gmsr/field.hpp"

#include <string>

namespace gmsr {

bool is_prime(std::uint64_t v) {
  if (v < 2) return false;
  if (v % 2 == 0) return v == 2;
  for (std::uint64_t f = 3; f * f <= v; f += 2) {
    if (v % f == 0) return false;
  }
  return true;
}

Field::Field(std::uint32_t q) : q_(q) {
  if (q >= (1u << 31)) {
    throw InvalidParams("field size " + std::to_string(q) + " must be below 2^31");
  }
  if (!is_prime(q)) {
    throw InvalidParams("field size " + std::to_string(q) + " is not prime");
  }
}

Symbol Field::pow(Symbol a, std::uint64_t e) const noexcept {
  Symbol result = q_ == 1 ? 0 : 1;
  Symbol base = a;
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

Symbol Field::inv(Symbol a) const {
  if (a == 0) throw DivisionByZero("zero has no multiplicative inverse");
  // Extended Euclid on (a, q).
  std::int64_t r0 = q_, r1 = a;
  std::int64_t t0 = 0, t1 = 1;
  while (r1 != 0) {
    std::int64_t quot = r0 / r1;
    std::int64_t r2 = r0 - quot * r1;
    r0 = r1;
    r1 = r2;
    std::int64_t t2 = t0 - quot * t1;
    t0 = t1;
    t1 = t2;
  }
  if (t0 < 0) t0 += q_;
  return static_cast<Symbol>(t0);
}

namespace {

void check_same(const FieldElement& a, const FieldElement& b) {
  if (a.modulus() != b.modulus()) {
    throw ModulusMismatch("operands live in GF(" + std::to_string(a.modulus()) +
                          ") and GF(" + std::to_string(b.modulus()) + ")");
  }
}

}  // namespace

FieldElement FieldElement::pow(std::uint64_t e) const {
  return FieldElement(field().pow(value_, e), q_, 0);
}

FieldElement FieldElement::inv() const {
  return FieldElement(field().inv(value_), q_, 0);
}

FieldElement operator+(FieldElement a, FieldElement b) {
  check_same(a, b);
  return FieldElement(a.field().add(a.value_, b.value_), a.q_, 0);
}

FieldElement operator-(FieldElement a, FieldElement b) {
  check_same(a, b);
  return FieldElement(a.field().sub(a.value_, b.value_), a.q_, 0);
}

FieldElement operator*(FieldElement a, FieldElement b) {
  check_same(a, b);
  return FieldElement(a.field().mul(a.value_, b.value_), a.q_, 0);
}

FieldElement operator/(FieldElement a, FieldElement b) {
  check_same(a, b);
  return FieldElement(a.field().div(a.value_, b.value_), a.q_, 0);
}

FieldElement ff_add(FieldElement a, FieldElement b) { return a + b; }
FieldElement ff_mul(FieldElement a, FieldElement b) { return a * b; }
FieldElement ff_pow(FieldElement a, std::uint64_t e) { return a.pow(e); }
FieldElement ff_inv(FieldElement a) { return a.inv(); }

}  // namespace gmsr
