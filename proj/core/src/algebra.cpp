#include "permcodes/algebra.hpp"

#include <algorithm>
#include <cctype>
#include <limits>

namespace permcodes {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

std::uint64_t smallest_prime_geq(std::uint64_t n) {
  std::uint64_t p = std::max<std::uint64_t>(n, 2);
  while (!is_prime(p)) ++p;
  return p;
}

std::uint64_t smallest_prime_geq_half(std::uint64_t n) { return smallest_prime_geq(n / 2); }

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (!is_prime(p)) throw InvalidArgument(std::to_string(p) + " is not prime");
}

std::uint32_t PrimeField::pow(std::uint32_t a, std::uint64_t e) const {
  std::uint32_t result = 1 % p_;
  a %= p_;
  while (e) {
    if (e & 1) result = mul(result, a);
    a = mul(a, a);
    e >>= 1;
  }
  return result;
}

std::uint32_t PrimeField::inv(std::uint32_t a) const {
  if (a % p_ == 0) throw InvalidArgument("inverse of zero in F_" + std::to_string(p_));
  return pow(a, p_ - 2);
}

std::uint32_t PrimeField::reduce(long long v) const {
  long long r = v % static_cast<long long>(p_);
  if (r < 0) r += p_;
  return static_cast<std::uint32_t>(r);
}

Poly::Poly(std::uint32_t p) : p_(p) {}

Poly::Poly(std::uint32_t p, std::vector<std::uint32_t> coefficients) : p_(p), c_(std::move(coefficients)) {
  for (auto& c : c_) c %= p_;
  trim();
}

Poly Poly::constant(std::uint32_t p, std::uint32_t c) { return Poly(p, {c}); }

Poly Poly::monomial(std::uint32_t p, std::uint32_t c, int degree) {
  std::vector<std::uint32_t> v(static_cast<std::size_t>(degree) + 1, 0);
  v.back() = c;
  return Poly(p, std::move(v));
}

Poly Poly::x_minus(std::uint32_t p, std::uint32_t alpha) {
  return Poly(p, {(p - alpha % p) % p, 1});
}

Poly Poly::parse(std::uint32_t p, const std::string& text) {
  std::vector<std::uint32_t> coeffs;
  std::size_t i = 0;
  bool expect_number = true;
  while (i < text.size()) {
    const char ch = text[i];
    if (std::isspace(static_cast<unsigned char>(ch))) {
      ++i;
      continue;
    }
    if (ch == ',') {
      if (expect_number) throw ParseError("empty coefficient at column " + std::to_string(i + 1), i + 1);
      expect_number = true;
      ++i;
      continue;
    }
    if (!std::isdigit(static_cast<unsigned char>(ch)) || !expect_number) {
      throw ParseError("unexpected character '" + std::string(1, ch) + "' at column " + std::to_string(i + 1),
                       i + 1);
    }
    const std::size_t start = i;
    std::uint64_t v = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      v = v * 10 + static_cast<std::uint64_t>(text[i] - '0');
      if (v >= p) throw ParseError("coefficient not in {0.." + std::to_string(p - 1) + "} at column " +
                                       std::to_string(start + 1),
                                   start + 1);
      ++i;
    }
    coeffs.push_back(static_cast<std::uint32_t>(v));
    expect_number = false;
  }
  if (coeffs.empty() || expect_number) throw ParseError("missing coefficient", text.size() + 1);
  return Poly(p, std::move(coeffs));
}

std::uint32_t Poly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return 0;
  return c_[static_cast<std::size_t>(i)];
}

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

void Poly::check_same_field(const Poly& o) const {
  if (p_ != o.p_) throw InvalidArgument("polynomials over different fields");
}

Poly Poly::operator+(const Poly& o) const {
  check_same_field(o);
  std::vector<std::uint32_t> v(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t i = 0; i < v.size(); ++i) {
    v[i] = (coeff(static_cast<int>(i)) + o.coeff(static_cast<int>(i))) % p_;
  }
  return Poly(p_, std::move(v));
}

Poly Poly::operator-(const Poly& o) const {
  check_same_field(o);
  std::vector<std::uint32_t> v(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t i = 0; i < v.size(); ++i) {
    v[i] = (coeff(static_cast<int>(i)) + p_ - o.coeff(static_cast<int>(i))) % p_;
  }
  return Poly(p_, std::move(v));
}

Poly Poly::operator*(const Poly& o) const {
  check_same_field(o);
  if (is_zero() || o.is_zero()) return Poly(p_);
  std::vector<std::uint64_t> acc(c_.size() + o.c_.size() - 1, 0);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) {
      acc[i + j] = (acc[i + j] + static_cast<std::uint64_t>(c_[i]) * o.c_[j]) % p_;
    }
  }
  std::vector<std::uint32_t> v(acc.begin(), acc.end());
  return Poly(p_, std::move(v));
}

Poly Poly::scaled(std::uint32_t c) const {
  const PrimeField F(p_);
  std::vector<std::uint32_t> v(c_);
  for (auto& x : v) x = F.mul(x, c);
  return Poly(p_, std::move(v));
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  a.check_same_field(b);
  if (b.is_zero()) throw InvalidArgument("polynomial division by zero");
  const PrimeField F(a.p_);
  if (a.degree() < b.degree()) return {Poly(a.p_), a};
  std::vector<std::uint32_t> rem(a.c_);
  std::vector<std::uint32_t> quot(static_cast<std::size_t>(a.degree() - b.degree()) + 1, 0);
  const std::uint32_t lead_inv = F.inv(b.c_.back());
  const int db = b.degree();
  for (int k = a.degree(); k >= db; --k) {
    const std::uint32_t top = rem[static_cast<std::size_t>(k)];
    if (top == 0) continue;
    const std::uint32_t factor = F.mul(top, lead_inv);
    quot[static_cast<std::size_t>(k - db)] = factor;
    for (int j = 0; j <= db; ++j) {
      auto& r = rem[static_cast<std::size_t>(k - db + j)];
      r = F.sub(r, F.mul(factor, b.c_[static_cast<std::size_t>(j)]));
    }
  }
  return {Poly(a.p_, std::move(quot)), Poly(a.p_, std::move(rem))};
}

std::uint32_t Poly::evaluate(std::uint32_t x) const {
  const PrimeField F(p_);
  std::uint32_t acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = F.add(F.mul(acc, x), *it);
  return acc;
}

std::string Poly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    if (!out.empty()) out += " + ";
    out += std::to_string(c_[i]);
    if (i == 1) out += "*x";
    if (i > 1) out += "*x^" + std::to_string(i);
  }
  return out;
}

std::string Poly::to_coefficient_list() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(c_[i]);
  }
  return out;
}

Poly poly_gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return a.scaled(a.field().inv(a.coefficients().back()));
}

Poly mul_mod(const Poly& a, const Poly& b, const Poly& m) { return (a * b) % m; }

Poly pow_mod(const Poly& a, std::uint64_t e, const Poly& m) {
  Poly result = Poly::constant(a.characteristic(), 1) % m;
  Poly base = a % m;
  while (e) {
    if (e & 1) result = mul_mod(result, base, m);
    e >>= 1;
    if (e) base = mul_mod(base, base, m);
  }
  return result;
}

namespace {

std::vector<int> prime_divisors(int m) {
  std::vector<int> out;
  for (int r = 2; r * r <= m; ++r) {
    if (m % r == 0) {
      out.push_back(r);
      while (m % r == 0) m /= r;
    }
  }
  if (m > 1) out.push_back(m);
  return out;
}

// x^(p^k) mod f by k successive p-th powers.
Poly frobenius_power_of_x(const Poly& f, int k) {
  const std::uint32_t p = f.characteristic();
  Poly y = Poly::monomial(p, 1, 1) % f;
  for (int i = 0; i < k; ++i) y = pow_mod(y, p, f);
  return y;
}

std::uint64_t checked_pow(std::uint64_t base, int exp) {
  std::uint64_t r = 1;
  for (int i = 0; i < exp; ++i) {
    if (r > std::numeric_limits<std::uint64_t>::max() / base) throw InvalidArgument("p^m overflows 64 bits");
    r *= base;
  }
  return r;
}

}  // namespace

bool is_irreducible(const Poly& f) {
  const int m = f.degree();
  if (m < 1 || !f.is_monic()) return false;
  const std::uint32_t p = f.characteristic();
  const Poly x = Poly::monomial(p, 1, 1);
  if (frobenius_power_of_x(f, m) != x % f) return false;
  for (int r : prime_divisors(m)) {
    const Poly g = poly_gcd(frobenius_power_of_x(f, m / r) - x, f);
    if (g.degree() != 0) return false;
  }
  return true;
}

Poly find_irreducible(std::uint32_t p, int m) {
  if (m < 1) throw InvalidArgument("irreducible degree must be >= 1");
  PrimeField{p};
  const std::uint64_t total = checked_pow(p, m);
  for (std::uint64_t t = 0; t < total; ++t) {
    // t in base p, most significant digit = c_{m-1}
    std::vector<std::uint32_t> c(static_cast<std::size_t>(m) + 1, 0);
    c[static_cast<std::size_t>(m)] = 1;
    std::uint64_t rest = t;
    for (int i = 0; i < m; ++i) {
      c[static_cast<std::size_t>(i)] = static_cast<std::uint32_t>(rest % p);
      rest /= p;
    }
    Poly f(p, std::move(c));
    if (is_irreducible(f)) return f;
  }
  throw InvalidArgument("no irreducible polynomial found");  // unreachable for prime p
}

ResidueRing::ResidueRing(Poly f) : f_(std::move(f)), f2_(f_ * f_), cyclic_order_(checked_pow(f_.characteristic(), f_.degree()) - 1) {}

std::shared_ptr<const ResidueRing> ResidueRing::create(Poly f) {
  PrimeField{f.characteristic()};
  if (!is_irreducible(f)) throw InvalidArgument("modulus " + f.to_string() + " is not monic irreducible");
  return std::shared_ptr<const ResidueRing>(new ResidueRing(std::move(f)));
}

PolyResidue::PolyResidue(std::shared_ptr<const ResidueRing> ring, const Poly& value)
    : ring_(std::move(ring)), value_(value % ring_->f_squared()) {}

PolyResidue PolyResidue::one(std::shared_ptr<const ResidueRing> ring) {
  const auto p = ring->characteristic();
  return PolyResidue(std::move(ring), Poly::constant(p, 1));
}

bool PolyResidue::is_unit() const { return !(value_ % ring_->f()).is_zero(); }

void PolyResidue::check_same_ring(const PolyResidue& o) const {
  if (ring_ != o.ring_ && !(ring_->f() == o.ring_->f())) throw InvalidArgument("residue modulus mismatch");
}

PolyResidue PolyResidue::operator*(const PolyResidue& o) const {
  check_same_ring(o);
  return PolyResidue(ring_, value_ * o.value_);
}

PolyResidue PolyResidue::pow(std::uint64_t e) const {
  PolyResidue out(ring_, Poly::constant(ring_->characteristic(), 1));
  out.value_ = pow_mod(value_, e, ring_->f_squared());
  return out;
}

bool PolyResidue::operator==(const PolyResidue& o) const {
  return ring_->f() == o.ring_->f() && value_ == o.value_;
}

PolyResidue poly_mul_mod(const PolyResidue& a, const PolyResidue& b) { return a * b; }
PolyResidue poly_pow_mod(const PolyResidue& a, std::uint64_t e) { return a.pow(e); }

QuotientVector QuotientVector::operator+(const QuotientVector& o) const {
  if (p != o.p || coords.size() != o.coords.size()) throw InvalidArgument("quotient vector shape mismatch");
  QuotientVector out{p, coords};
  for (std::size_t i = 0; i < coords.size(); ++i) out.coords[i] = (coords[i] + o.coords[i]) % p;
  return out;
}

bool QuotientVector::is_zero() const {
  return std::all_of(coords.begin(), coords.end(), [](std::uint32_t c) { return c == 0; });
}

std::string QuotientVector::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(coords[i]);
  }
  return out;
}

QuotientVector QuotientVector::parse(std::uint32_t p, const std::string& text) {
  QuotientVector out{p, {}};
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = std::min(text.find(',', start), text.size());
    const std::string tok = text.substr(start, comma - start);
    if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
      throw ParseError("bad key digit '" + tok + "' at column " + std::to_string(start + 1), start + 1);
    }
    const auto v = std::stoull(tok);
    if (v >= p) throw ParseError("key digit " + tok + " not in F_" + std::to_string(p) + " at column " + std::to_string(start + 1), start + 1);
    out.coords.push_back(static_cast<std::uint32_t>(v));
    start = comma + 1;
  }
  return out;
}

std::uint64_t QuotientVector::rank() const {
  std::uint64_t r = 0;
  for (auto it = coords.rbegin(); it != coords.rend(); ++it) r = r * p + *it;
  return r;
}

QuotientVector quotient_map(const PolyResidue& h) {
  if (!h.is_unit()) throw InvalidArgument("quotient_map: " + h.value().to_string() + " is not a unit");
  const auto& ring = *h.ring();
  const std::uint32_t p = ring.characteristic();
  const int m = ring.rank();
  const Poly u = pow_mod(h.value(), ring.cyclic_order(), ring.f_squared());
  const auto [g, r] = divmod(u - Poly::constant(p, 1), ring.f());
  if (!r.is_zero()) throw InvalidArgument("quotient_map: h^(p^m-1) is not 1 mod f");
  QuotientVector out{p, std::vector<std::uint32_t>(static_cast<std::size_t>(m), 0)};
  for (int i = 0; i < m; ++i) out.coords[static_cast<std::size_t>(i)] = g.coeff(i);
  return out;
}

}  // namespace permcodes
