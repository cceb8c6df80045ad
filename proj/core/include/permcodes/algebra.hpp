#pragma once

// Prime fields, dense polynomials over F_p, irreducible polynomial search,
// and the unit group G = (F_p[x]/(f^2))^x together with a computable
// homomorphism G -> F_p^m whose kernel is the subgroup of p-th powers.

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "permcodes/errors.hpp"

namespace permcodes {

bool is_prime(std::uint64_t n);
/// Least prime p >= n.
std::uint64_t smallest_prime_geq(std::uint64_t n);
/// Least prime q >= floor(n/2). For n >= 4 this satisfies q <= n.
std::uint64_t smallest_prime_geq_half(std::uint64_t n);

/// Arithmetic in F_p on canonical representatives {0..p-1}.
class PrimeField {
 public:
  explicit PrimeField(std::uint32_t p);

  std::uint32_t characteristic() const { return p_; }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const { return (a + b) % p_; }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return (a + p_ - b) % p_; }
  std::uint32_t neg(std::uint32_t a) const { return a == 0 ? 0 : p_ - a; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p_);
  }
  std::uint32_t pow(std::uint32_t a, std::uint64_t e) const;
  /// Throws InvalidArgument on 0.
  std::uint32_t inv(std::uint32_t a) const;
  std::uint32_t reduce(long long v) const;

 private:
  std::uint32_t p_;
};

/// Polynomial over F_p, coefficients lowest degree first, no trailing zeros.
class Poly {
 public:
  /// Zero polynomial over F_p.
  explicit Poly(std::uint32_t p);
  Poly(std::uint32_t p, std::vector<std::uint32_t> coefficients);

  static Poly constant(std::uint32_t p, std::uint32_t c);
  static Poly monomial(std::uint32_t p, std::uint32_t c, int degree);
  /// x - alpha
  static Poly x_minus(std::uint32_t p, std::uint32_t alpha);
  /// Parses a low-first comma-separated coefficient list such as "2,0,1".
  static Poly parse(std::uint32_t p, const std::string& text);

  std::uint32_t characteristic() const { return p_; }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }
  std::uint32_t coeff(int i) const;
  const std::vector<std::uint32_t>& coefficients() const { return c_; }
  PrimeField field() const { return PrimeField(p_); }

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly operator%(const Poly& m) const { return divmod(*this, m).second; }
  Poly scaled(std::uint32_t c) const;

  /// Quotient and remainder; throws on division by zero.
  friend std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);

  std::uint32_t evaluate(std::uint32_t x) const;

  /// "c0 + c1*x + ... + ck*x^k" listing nonzero terms; "0" for zero.
  std::string to_string() const;
  /// "c0,c1,...,ck"
  std::string to_coefficient_list() const;

  bool operator==(const Poly&) const = default;

 private:
  void trim();
  void check_same_field(const Poly& o) const;

  std::uint32_t p_;
  std::vector<std::uint32_t> c_;
};

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
Poly poly_gcd(Poly a, Poly b);
Poly mul_mod(const Poly& a, const Poly& b, const Poly& m);
Poly pow_mod(const Poly& a, std::uint64_t e, const Poly& m);

/// Monic, degree >= 1, and passes the gcd criterion: x^(p^m) = x mod f and
/// gcd(x^(p^(m/r)) - x, f) = 1 for every prime r dividing m.
bool is_irreducible(const Poly& f);

/// First monic irreducible of degree m in ascending lexicographic order of
/// (c_{m-1}, ..., c_0).
Poly find_irreducible(std::uint32_t p, int m);

/// The ring F_p[x]/(f^2) for an irreducible f.
class ResidueRing {
 public:
  /// Throws InvalidArgument if f is not monic irreducible.
  static std::shared_ptr<const ResidueRing> create(Poly f);

  const Poly& f() const { return f_; }
  const Poly& f_squared() const { return f2_; }
  std::uint32_t characteristic() const { return f_.characteristic(); }
  /// m = deg f; the quotient G/G^p has rank m.
  int rank() const { return f_.degree(); }
  /// p^m - 1, the order of the cyclic factor of G.
  std::uint64_t cyclic_order() const { return cyclic_order_; }

 private:
  explicit ResidueRing(Poly f);

  Poly f_;
  Poly f2_;
  std::uint64_t cyclic_order_;
};

/// Element of F_p[x]/(f^2), reduced below degree 2 deg f.
class PolyResidue {
 public:
  PolyResidue(std::shared_ptr<const ResidueRing> ring, const Poly& value);

  static PolyResidue one(std::shared_ptr<const ResidueRing> ring);

  const Poly& value() const { return value_; }
  const std::shared_ptr<const ResidueRing>& ring() const { return ring_; }
  /// gcd(value, f) = 1
  bool is_unit() const;

  PolyResidue operator*(const PolyResidue& o) const;
  PolyResidue pow(std::uint64_t e) const;

  bool operator==(const PolyResidue& o) const;

 private:
  void check_same_ring(const PolyResidue& o) const;

  std::shared_ptr<const ResidueRing> ring_;
  Poly value_;
};

PolyResidue poly_mul_mod(const PolyResidue& a, const PolyResidue& b);
PolyResidue poly_pow_mod(const PolyResidue& a, std::uint64_t e);

/// Vector in F_p^m; identifies a class of G/G^p.
struct QuotientVector {
  std::uint32_t p = 0;
  std::vector<std::uint32_t> coords;

  QuotientVector operator+(const QuotientVector& o) const;
  bool is_zero() const;
  /// "v1,v2,...,vm"
  std::string to_string() const;
  static QuotientVector parse(std::uint32_t p, const std::string& text);

  /// Mixed-radix value sum coords[i] * p^i.
  std::uint64_t rank() const;

  auto operator<=>(const QuotientVector&) const = default;
  bool operator==(const QuotientVector&) const = default;
};

/// h -> g where h^(p^m - 1) = 1 + f g (mod f^2), deg g < m.
/// Surjective homomorphism (G, *) -> (F_p^m, +) with kernel G^p.
/// Throws InvalidArgument when h is not a unit.
QuotientVector quotient_map(const PolyResidue& h);

}  // namespace permcodes
