#pragma once

#include <cstdint>
#include <ostream>

#include "gmsr/error.hpp"

namespace gmsr {

/// Raw field symbol. Always held in canonical form [0, q).
using Symbol = std::uint32_t;

bool is_prime(std::uint64_t v);

/// Arithmetic context for the prime field GF(q), q < 2^31.
///
/// Operations work on raw Symbols and assume canonical inputs; results are
/// reduced after every product.
class Field {
 public:
  explicit Field(std::uint32_t q);

  std::uint32_t modulus() const noexcept { return q_; }
  bool contains(std::uint64_t v) const noexcept { return v < q_; }

  Symbol reduce(std::uint64_t v) const noexcept {
    return static_cast<Symbol>(v % q_);
  }
  Symbol add(Symbol a, Symbol b) const noexcept {
    std::uint32_t s = a + b;  // q < 2^31, cannot overflow
    return s >= q_ ? s - q_ : s;
  }
  Symbol sub(Symbol a, Symbol b) const noexcept {
    return a >= b ? a - b : a + q_ - b;
  }
  Symbol neg(Symbol a) const noexcept { return a == 0 ? 0 : q_ - a; }
  Symbol mul(Symbol a, Symbol b) const noexcept {
    return static_cast<Symbol>(static_cast<std::uint64_t>(a) * b % q_);
  }
  /// Square-and-multiply. pow(0, 0) == 1.
  Symbol pow(Symbol a, std::uint64_t e) const noexcept;
  /// Throws DivisionByZero for a == 0.
  Symbol inv(Symbol a) const;
  Symbol div(Symbol a, Symbol b) const { return mul(a, inv(b)); }

  friend bool operator==(const Field&, const Field&) = default;

 private:
  friend class FieldElement;
  struct Trusted {};
  Field(std::uint32_t q, Trusted) : q_(q) {}

  std::uint32_t q_;
};

/// A residue class modulo a prime, carrying its own modulus so that mixing
/// elements of different fields is caught at runtime.
class FieldElement {
 public:
  FieldElement(const Field& field, std::uint64_t value)
      : value_(field.reduce(value)), q_(field.modulus()) {}

  Symbol value() const noexcept { return value_; }
  std::uint32_t modulus() const noexcept { return q_; }

  FieldElement pow(std::uint64_t e) const;
  FieldElement inv() const;

  friend FieldElement operator+(FieldElement a, FieldElement b);
  friend FieldElement operator-(FieldElement a, FieldElement b);
  friend FieldElement operator*(FieldElement a, FieldElement b);
  friend FieldElement operator/(FieldElement a, FieldElement b);
  friend bool operator==(const FieldElement&, const FieldElement&) = default;

  friend std::ostream& operator<<(std::ostream& os, const FieldElement& e) {
    return os << e.value_;
  }

 private:
  FieldElement(Symbol v, std::uint32_t q, int) : value_(v), q_(q) {}
  Field field() const { return Field(q_, Field::Trusted{}); }

  Symbol value_;
  std::uint32_t q_;
};

FieldElement ff_add(FieldElement a, FieldElement b);
FieldElement ff_mul(FieldElement a, FieldElement b);
FieldElement ff_pow(FieldElement a, std::uint64_t e);
FieldElement ff_inv(FieldElement a);

}  // namespace gmsr
