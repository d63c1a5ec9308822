#include "deza/ffield.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "deza/error.hpp"

namespace deza {

namespace {

constexpr uint64_t kMaxOrder = uint64_t{1} << 20;

bool is_prime(uint32_t p) {
  if (p < 2) return false;
  for (uint32_t d = 2; uint64_t{d} * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// Dense polynomials over GF(p), constant coefficient first.
using Poly = std::vector<uint32_t>;

int poly_deg(const Poly& f) {
  for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i)
    if (f[i] != 0) return i;
  return -1;
}

// f mod g, g monic of positive degree.
Poly poly_mod(Poly f, const Poly& g, uint32_t p) {
  const int dg = poly_deg(g);
  for (int df = poly_deg(f); df >= dg; df = poly_deg(f)) {
    const uint64_t c = f[df];
    for (int j = 0; j <= dg; ++j) {
      uint64_t t = f[df - dg + j] + uint64_t{p} * p - c * g[j] % p;
      f[df - dg + j] = static_cast<uint32_t>(t % p);
    }
  }
  f.resize(dg);
  return f;
}

bool poly_is_zero(const Poly& f) { return poly_deg(f) < 0; }

// Exhaustive factor check: no roots, and for degree >= 4 no monic factor of
// degree 2..deg/2.  Candidate counts stay tiny at the supported field sizes.
bool is_irreducible(const Poly& f, uint32_t p) {
  const int deg = poly_deg(f);
  for (uint32_t x = 0; x < p; ++x) {
    uint64_t v = 0, xp = 1;
    for (int j = 0; j <= deg; ++j) {
      v = (v + f[j] * xp) % p;
      xp = xp * x % p;
    }
    if (v == 0) return false;
  }
  for (int dd = 2; 2 * dd <= deg; ++dd) {
    uint64_t count = 1;
    for (int j = 0; j < dd; ++j) count *= p;
    for (uint64_t enc = 0; enc < count; ++enc) {
      Poly g(dd + 1, 0);
      uint64_t e = enc;
      for (int j = 0; j < dd; ++j) {
        g[j] = static_cast<uint32_t>(e % p);
        e /= p;
      }
      g[dd] = 1;
      if (poly_is_zero(poly_mod(f, g, p))) return false;
    }
  }
  return true;
}

std::vector<uint64_t> prime_factors(uint64_t n) {
  std::vector<uint64_t> fs;
  for (uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      fs.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) fs.push_back(n);
  return fs;
}

}  // namespace

FieldPtr Field::make(uint32_t p, uint32_t m) {
  if (!is_prime(p) || p == 2) throw gate_error("field characteristic must be an odd prime");
  if (m < 1) throw gate_error("field degree must be at least 1");
  uint64_t q = 1;
  for (uint32_t i = 0; i < m; ++i) {
    q *= p;
    if (q > kMaxOrder) throw gate_error("field order exceeds 2^20");
  }

  auto f = FieldPtr(new Field());
  auto* fld = const_cast<Field*>(f.get());
  fld->p_ = p;
  fld->m_ = m;
  fld->q_ = q;

  // Lexicographically smallest monic irreducible modulus: minimise the
  // integer encoding sum_j c_j p^j of the non-leading coefficients, which
  // orders candidates by (c_{m-1}, ..., c_0).
  Poly chosen;
  for (uint64_t enc = 0; enc < q; ++enc) {
    Poly g(m + 1, 0);
    uint64_t e = enc;
    for (uint32_t j = 0; j < m; ++j) {
      g[j] = static_cast<uint32_t>(e % p);
      e /= p;
    }
    g[m] = 1;
    if (m == 1 || is_irreducible(g, p)) {
      chosen = g;
      break;
    }
  }
  if (chosen.empty()) throw check_error("no irreducible modulus found");
  fld->modulus_.assign(chosen.begin(), chosen.end());
  fld->build_square_table();
  return f;
}

FieldPtr Field::make_quadratic_extension(FieldPtr base) {
  if (!base) throw std::invalid_argument("null base field");
  const uint64_t q = base->order();
  if (q * q > kMaxOrder) throw gate_error("field order exceeds 2^20");

  uint64_t d = 0;
  for (uint64_t a = 1; a < q; ++a) {
    if (!base->is_square(a)) {
      d = a;
      break;
    }
  }
  if (d == 0) throw check_error("no non-square in base field");

  auto f = FieldPtr(new Field());
  auto* fld = const_cast<Field*>(f.get());
  fld->p_ = base->characteristic();
  fld->m_ = 2 * base->degree();
  fld->q_ = q * q;
  fld->base_ = std::move(base);
  fld->d_ = d;
  fld->modulus_ = {fld->base_->neg(d), 0, 1};  // t^2 - d
  fld->build_square_table();
  return f;
}

void Field::build_square_table() {
  square_.assign(q_, false);
  for (uint64_t a = 1; a < q_; ++a) square_[mul(a, a)] = true;
}

const Field& Field::base_field() const {
  if (!base_) throw std::invalid_argument("not a quadratic extension field");
  return *base_;
}

FieldElement Field::non_square_d() const {
  if (!base_) throw std::invalid_argument("not a quadratic extension field");
  return {base_.get(), d_};
}

FieldElement Field::element(uint64_t index) const {
  if (index >= q_) throw std::invalid_argument("element index out of range");
  return {this, index};
}

std::vector<uint32_t> Field::digits(uint64_t a) const {
  std::vector<uint32_t> d(m_);
  for (uint32_t j = 0; j < m_; ++j) {
    d[j] = static_cast<uint32_t>(a % p_);
    a /= p_;
  }
  return d;
}

uint64_t Field::from_digits(const std::vector<uint32_t>& d) const {
  uint64_t a = 0;
  for (size_t j = d.size(); j-- > 0;) a = a * p_ + d[j] % p_;
  return a;
}

FieldElement Field::from_coeffs(const std::vector<uint32_t>& coeffs) const {
  if (coeffs.size() > m_) throw std::invalid_argument("too many coefficients");
  std::vector<uint32_t> d(coeffs);
  d.resize(m_, 0);
  return {this, from_digits(d)};
}

std::vector<uint32_t> Field::coeffs(const FieldElement& e) const {
  if (&e.field() != this) throw std::invalid_argument("element of a different field");
  return digits(e.index());
}

uint64_t Field::add(uint64_t a, uint64_t b) const {
  if (base_) {
    const uint64_t q = base_->order();
    return base_->add(a % q, b % q) + q * base_->add(a / q, b / q);
  }
  uint64_t r = 0, mult = 1;
  for (uint32_t j = 0; j < m_; ++j) {
    r += (a % p_ + b % p_) % p_ * mult;
    a /= p_;
    b /= p_;
    mult *= p_;
  }
  return r;
}

uint64_t Field::neg(uint64_t a) const {
  if (base_) {
    const uint64_t q = base_->order();
    return base_->neg(a % q) + q * base_->neg(a / q);
  }
  uint64_t r = 0, mult = 1;
  for (uint32_t j = 0; j < m_; ++j) {
    r += (p_ - a % p_) % p_ * mult;
    a /= p_;
    mult *= p_;
  }
  return r;
}

uint64_t Field::sub(uint64_t a, uint64_t b) const { return add(a, neg(b)); }

uint64_t Field::mul(uint64_t a, uint64_t b) const {
  if (base_) {
    const auto& F = *base_;
    const uint64_t q = F.order();
    const uint64_t x1 = a % q, y1 = a / q, x2 = b % q, y2 = b / q;
    const uint64_t x = F.add(F.mul(x1, x2), F.mul(d_, F.mul(y1, y2)));
    const uint64_t y = F.add(F.mul(x1, y2), F.mul(x2, y1));
    return x + q * y;
  }
  if (m_ == 1) return a * b % p_;
  const auto da = digits(a), db = digits(b);
  std::vector<uint64_t> prod(2 * m_ - 1, 0);
  for (uint32_t i = 0; i < m_; ++i) {
    if (da[i] == 0) continue;
    for (uint32_t j = 0; j < m_; ++j) prod[i + j] += uint64_t{da[i]} * db[j];
  }
  // Reduce modulo the monic modulus.
  for (size_t i = prod.size(); i-- > m_;) {
    const uint64_t c = prod[i] % p_;
    if (c == 0) continue;
    for (uint32_t j = 0; j < m_; ++j) {
      prod[i - m_ + j] += uint64_t{p_} * p_ - c * (modulus_[j] % p_) % p_;
    }
    prod[i] = 0;
  }
  uint64_t r = 0, mult = 1;
  for (uint32_t j = 0; j < m_; ++j) {
    r += prod[j] % p_ * mult;
    mult *= p_;
  }
  return r;
}

uint64_t Field::pow(uint64_t a, uint64_t e) const {
  uint64_t r = 1;
  while (e > 0) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

uint64_t Field::inv(uint64_t a) const {
  if (a == 0) throw std::invalid_argument("inverse of zero");
  return pow(a, q_ - 2);
}

bool Field::is_square(uint64_t a) const {
  if (a == 0) throw std::invalid_argument("is_square of zero");
  if (a >= q_) throw std::invalid_argument("element index out of range");
  return square_[a];
}

uint64_t Field::mul_order(uint64_t a) const {
  if (a == 0) throw std::invalid_argument("multiplicative order of zero");
  uint64_t t = q_ - 1;
  for (uint64_t f : prime_factors(q_ - 1)) {
    while (t % f == 0 && pow(a, t / f) == 1) t /= f;
  }
  return t;
}

FieldElement Field::primitive_element() const {
  for (uint64_t a = 1; a < q_; ++a) {
    if (mul_order(a) == q_ - 1) return {this, a};
  }
  throw check_error("no primitive element found");
}

uint64_t Field::frobenius(uint64_t a) const {
  if (!base_) throw std::invalid_argument("frobenius: element not in an extension field");
  const uint64_t q = base_->order();
  return a % q + q * base_->neg(a / q);
}

FieldElement Field::frobenius(const FieldElement& e) const {
  if (&e.field() != this) throw std::invalid_argument("element of a different field");
  return {this, frobenius(e.index())};
}

uint64_t Field::norm_index(uint64_t a) const {
  if (!base_) throw std::invalid_argument("norm: element not in an extension field");
  const auto& F = *base_;
  const uint64_t q = F.order();
  const uint64_t x = a % q, y = a / q;
  return F.sub(F.mul(x, x), F.mul(d_, F.mul(y, y)));
}

FieldElement Field::norm(const FieldElement& e) const {
  if (&e.field() != this) throw std::invalid_argument("element of a different field");
  return {base_.get(), norm_index(e.index())};
}

std::pair<uint64_t, uint64_t> Field::pair_parts(uint64_t a) const {
  if (!base_) throw std::invalid_argument("not a quadratic extension field");
  const uint64_t q = base_->order();
  return {a % q, a / q};
}

uint64_t Field::from_pair(uint64_t x, uint64_t y) const {
  if (!base_) throw std::invalid_argument("not a quadratic extension field");
  const uint64_t q = base_->order();
  if (x >= q || y >= q) throw std::invalid_argument("pair part out of range");
  return x + q * y;
}

static const Field& same_field(const FieldElement& a, const FieldElement& b) {
  if (&a.field() != &b.field()) throw std::invalid_argument("elements of different fields");
  return a.field();
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  const Field& f = same_field(*this, o);
  return {&f, f.add(idx_, o.idx_)};
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
  const Field& f = same_field(*this, o);
  return {&f, f.sub(idx_, o.idx_)};
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
  const Field& f = same_field(*this, o);
  return {&f, f.mul(idx_, o.idx_)};
}

FieldElement FieldElement::operator/(const FieldElement& o) const {
  const Field& f = same_field(*this, o);
  return {&f, f.mul(idx_, f.inv(o.idx_))};
}

FieldElement FieldElement::operator-() const { return {field_, field_->neg(idx_)}; }

bool FieldElement::operator==(const FieldElement& o) const {
  same_field(*this, o);
  return idx_ == o.idx_;
}

}  // namespace deza
