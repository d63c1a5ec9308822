#pragma once

#include <cstdint>
#include <memory>
#include <utility>
#include <vector>

namespace deza {

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/// Element of a finite field, identified by its index in the field's
/// canonical enumeration.  Arithmetic delegates to the owning field; mixing
/// elements of different field objects throws std::invalid_argument.
class FieldElement {
 public:
  FieldElement() = default;
  FieldElement(const Field* field, uint64_t index) : field_(field), idx_(index) {}

  uint64_t index() const { return idx_; }
  const Field& field() const { return *field_; }
  bool is_zero() const { return idx_ == 0; }

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator/(const FieldElement& o) const;
  FieldElement operator-() const;
  bool operator==(const FieldElement& o) const;
  bool operator!=(const FieldElement& o) const { return !(*this == o); }

 private:
  const Field* field_ = nullptr;
  uint64_t idx_ = 0;
};

/// GF(p^m) for an odd prime p, with q = p^m <= 2^20.
///
/// Two representations share this interface:
///  - polynomial: GF(p)[t] modulo the lexicographically smallest monic
///    irreducible of degree m (coefficients compared most-significant
///    first).  The element with index sum_j c_j p^j is the residue
///    sum_j c_j t^j, so indices 0..q-1 enumerate elements
///    lexicographically by (c_{m-1}, ..., c_0).
///  - quadratic extension: GF(q^2) = { x + y*alpha : x, y in GF(q) } over a
///    base field GF(q), where alpha^2 = d and d is the first non-square of
///    the base field in enumeration order.  The element x + y*alpha has
///    index x + q*y, so the base field occupies indices 0..q-1.
///
/// Downstream vertex orders (Paley graphs, switching classes) are defined by
/// these enumerations.  Squares are cached as a membership table at
/// construction.
class Field : public std::enable_shared_from_this<Field> {
 public:
  /// GF(p^m) in the polynomial representation.
  static FieldPtr make(uint32_t p, uint32_t m = 1);
  /// GF(q^2) in the pair representation over `base` (order q, q^2 <= 2^20).
  static FieldPtr make_quadratic_extension(FieldPtr base);

  uint32_t characteristic() const { return p_; }
  uint32_t degree() const { return m_; }        // over the prime field
  uint64_t order() const { return q_; }
  bool is_quadratic_extension() const { return base_ != nullptr; }
  /// Base field of a quadratic extension; throws otherwise.
  const Field& base_field() const;
  /// The non-square d with alpha^2 = d, as a base-field element; throws if
  /// this field is not a quadratic extension.
  FieldElement non_square_d() const;
  /// Modulus polynomial, constant coefficient first, leading coefficient 1.
  /// Coefficients are prime-field digits (polynomial representation) or
  /// base-field indices (quadratic extension: t^2 - d).
  const std::vector<uint64_t>& modulus() const { return modulus_; }

  FieldElement element(uint64_t index) const;
  FieldElement zero() const { return {this, 0}; }
  FieldElement one() const { return {this, 1}; }
  /// Polynomial-representation element from digits c_0, c_1, ... (short
  /// vectors are zero-padded).
  FieldElement from_coeffs(const std::vector<uint32_t>& coeffs) const;
  std::vector<uint32_t> coeffs(const FieldElement& e) const;

  // Arithmetic on element indices (the form used by hot loops).
  uint64_t add(uint64_t a, uint64_t b) const;
  uint64_t sub(uint64_t a, uint64_t b) const;
  uint64_t neg(uint64_t a) const;
  uint64_t mul(uint64_t a, uint64_t b) const;
  uint64_t inv(uint64_t a) const;               // a != 0
  uint64_t pow(uint64_t a, uint64_t e) const;

  /// True iff a is a nonzero square; throws std::invalid_argument on zero.
  bool is_square(uint64_t a) const;
  /// Multiplicative order of a nonzero element.
  uint64_t mul_order(uint64_t a) const;
  /// First element in enumeration order whose multiplicative order is q-1.
  FieldElement primitive_element() const;

  // Quadratic-extension view (throws std::invalid_argument elsewhere).
  /// x + y*alpha |-> x - y*alpha, the q-power Frobenius of GF(q^2)/GF(q).
  uint64_t frobenius(uint64_t a) const;
  FieldElement frobenius(const FieldElement& e) const;
  /// Norm x^2 - d*y^2 onto the base field (returned as a base-field element).
  FieldElement norm(const FieldElement& e) const;
  uint64_t norm_index(uint64_t a) const;
  std::pair<uint64_t, uint64_t> pair_parts(uint64_t a) const;
  uint64_t from_pair(uint64_t x, uint64_t y) const;

 private:
  Field() = default;
  void build_square_table();
  std::vector<uint32_t> digits(uint64_t a) const;
  uint64_t from_digits(const std::vector<uint32_t>& d) const;

  uint32_t p_ = 0;
  uint32_t m_ = 0;
  uint64_t q_ = 0;
  FieldPtr base_;                    // null for the polynomial representation
  uint64_t d_ = 0;                   // base-field index of alpha^2
  std::vector<uint64_t> modulus_;    // see modulus()
  std::vector<bool> square_;         // square_[a]: a is a nonzero square
};

}  // namespace deza
