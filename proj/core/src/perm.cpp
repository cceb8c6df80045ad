#include "permcodes/perm.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <numeric>
#include <sstream>

namespace permcodes {

ZnElement::ZnElement(int value, int modulus) : value_(value), modulus_(modulus) {
  if (modulus < 1) throw InvalidArgument("Z_n modulus must be >= 1");
  if (value < 1 || value > modulus) {
    throw InvalidArgument("Z_n element " + std::to_string(value) + " outside {1.." +
                          std::to_string(modulus) + "}");
  }
}

ZnElement ZnElement::operator+(const ZnElement& other) const { return zn_add(*this, other); }
ZnElement ZnElement::operator-(const ZnElement& other) const { return zn_sub(*this, other); }

ZnElement zn_add(const ZnElement& a, const ZnElement& b) {
  if (a.modulus() != b.modulus()) throw InvalidArgument("Z_n modulus mismatch");
  return {zn_wrap(static_cast<long long>(a.value()) + b.value(), a.modulus()), a.modulus()};
}

ZnElement zn_sub(const ZnElement& a, const ZnElement& b) {
  if (a.modulus() != b.modulus()) throw InvalidArgument("Z_n modulus mismatch");
  return {zn_wrap(static_cast<long long>(a.value()) - b.value(), a.modulus()), a.modulus()};
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  const int n = size();
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    const int v = images_[i];
    if (v < 1 || v > n) {
      throw InvalidArgument("value " + std::to_string(v) + " at position " + std::to_string(i + 1) +
                            " outside {1.." + std::to_string(n) + "}");
    }
    if (seen[static_cast<std::size_t>(v)]) {
      throw InvalidArgument("value " + std::to_string(v) + " repeated at position " +
                            std::to_string(i + 1));
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  return {std::move(v), Unchecked{}};
}

Permutation Permutation::cycle(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) v[static_cast<std::size_t>(i - 1)] = zn_wrap(i + 1, n);
  return {std::move(v), Unchecked{}};
}

Permutation Permutation::parse(const std::string& text) {
  std::vector<int> values;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c)) || c == ',' || c == '(' || c == ')') {
      ++i;
      continue;
    }
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw ParseError("unexpected character '" + std::string(1, c) + "' at column " +
                           std::to_string(i + 1),
                       i + 1);
    }
    const std::size_t start = i;
    long long v = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      v = v * 10 + (text[i] - '0');
      if (v > std::numeric_limits<int>::max()) {
        throw ParseError("integer too large at column " + std::to_string(start + 1), start + 1);
      }
      ++i;
    }
    values.push_back(static_cast<int>(v));
  }
  if (values.empty()) throw ParseError("empty permutation", 1);
  return Permutation(std::move(values));
}

int Permutation::position_of(int v) const {
  const auto it = std::find(images_.begin(), images_.end(), v);
  if (it == images_.end()) throw InvalidArgument("value not in permutation");
  return static_cast<int>(it - images_.begin()) + 1;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) {
    inv[static_cast<std::size_t>(images_[i] - 1)] = static_cast<int>(i) + 1;
  }
  return {std::move(inv), Unchecked{}};
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != static_cast<int>(i) + 1) return false;
  }
  return true;
}

std::string Permutation::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(images_[i]);
  }
  return out;
}

Permutation compose(const Permutation& sigma, const Permutation& tau) {
  if (sigma.size() != tau.size()) throw InvalidArgument("permutation size mismatch");
  std::vector<int> out(sigma.images_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = sigma(tau.images_[i]);
  return {std::move(out), Permutation::Unchecked{}};
}

Permutation inverse(const Permutation& sigma) { return sigma.inverse(); }

EdgeSet::EdgeSet(int n) : succ_(static_cast<std::size_t>(n) + 1, 0) {}

void EdgeSet::insert(int a, int b) {
  const int n = universe();
  if (a < 1 || a > n || b < 1 || b > n) throw InvalidArgument("edge endpoint out of range");
  auto& slot = succ_[static_cast<std::size_t>(a)];
  if (slot == b) return;
  if (slot != 0) throw InvalidArgument("edge set already has an edge leaving " + std::to_string(a));
  slot = b;
  ++count_;
}

bool EdgeSet::contains(int a, int b) const {
  if (a < 1 || a > universe()) return false;
  return succ_[static_cast<std::size_t>(a)] == b && b != 0;
}

std::size_t EdgeSet::intersection_size(const EdgeSet& other) const {
  if (universe() != other.universe()) throw InvalidArgument("edge set universe mismatch");
  std::size_t common = 0;
  for (std::size_t a = 1; a < succ_.size(); ++a) {
    if (succ_[a] != 0 && succ_[a] == other.succ_[a]) ++common;
  }
  return common;
}

std::size_t EdgeSet::difference_size(const EdgeSet& other) const {
  return count_ - intersection_size(other);
}

std::vector<std::pair<int, int>> EdgeSet::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(count_);
  for (std::size_t a = 1; a < succ_.size(); ++a) {
    if (succ_[a] != 0) out.emplace_back(static_cast<int>(a), succ_[a]);
  }
  return out;
}

EdgeSet char_set(const Permutation& sigma) {
  const int n = sigma.size();
  if (n < 2) throw InvalidArgument("characteristic set needs n >= 2");
  EdgeSet out(n);
  for (int i = 1; i < n; ++i) out.insert(sigma(i), sigma(i + 1));
  return out;
}

EdgeSet cyclic_char_set(const Permutation& sigma) {
  const int n = sigma.size();
  if (n < 2) throw InvalidArgument("characteristic set needs n >= 2");
  EdgeSet out(n);
  for (int i = 1; i <= n; ++i) out.insert(sigma(i), sigma(zn_wrap(i + 1, n)));
  return out;
}

int d_block(const Permutation& sigma, const Permutation& tau) {
  if (sigma.size() != tau.size()) throw InvalidArgument("permutation size mismatch");
  if (sigma.size() < 2) return 0;
  return static_cast<int>(char_set(sigma).difference_size(char_set(tau)));
}

CyclicCoset CyclicCoset::from_canonical(Permutation canonical) {
  if (canonical.size() < 1 || canonical(1) != 1) {
    throw InvalidArgument("canonical coset representative must fix 1: " + canonical.to_string());
  }
  return CyclicCoset(std::move(canonical));
}

std::vector<Permutation> CyclicCoset::members() const {
  const int n = size();
  std::vector<Permutation> out;
  out.reserve(static_cast<std::size_t>(n));
  const auto& base = canonical_.images_;
  for (int k = 0; k < n; ++k) {
    // (canonical o omega^k)(i) = canonical(i (+) k)
    std::vector<int> v(base.size());
    for (int i = 1; i <= n; ++i) v[static_cast<std::size_t>(i - 1)] = base[static_cast<std::size_t>(zn_wrap(i + k, n) - 1)];
    out.emplace_back(Permutation(std::move(v), Permutation::Unchecked{}));
  }
  return out;
}

CyclicCoset canonical_rep(const Permutation& sigma) {
  const int n = sigma.size();
  const auto line = sigma.one_line();
  const auto pos = static_cast<std::size_t>(std::find(line.begin(), line.end(), 1) - line.begin());
  std::vector<int> v(line.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = line[(pos + i) % static_cast<std::size_t>(n)];
  return CyclicCoset(Permutation(std::move(v), Permutation::Unchecked{}));
}

int d_cyclic(const CyclicCoset& a, const CyclicCoset& b) {
  if (a.size() != b.size()) throw InvalidArgument("coset size mismatch");
  const int n = a.size();
  if (n < 2) return 0;
  // Successor tables of A_c, compared entrywise.
  const auto& x = a.canonical();
  const auto& y = b.canonical();
  std::vector<int> succ(static_cast<std::size_t>(n) + 1);
  for (int i = 1; i <= n; ++i) succ[static_cast<std::size_t>(x(i))] = x(zn_wrap(i + 1, n));
  int common = 0;
  for (int i = 1; i <= n; ++i) {
    if (succ[static_cast<std::size_t>(y(i))] == y(zn_wrap(i + 1, n))) ++common;
  }
  return n - common;
}

int cyclic_norm(const CyclicCoset& a) {
  const int n = a.size();
  if (n < 2) return 0;
  const auto& x = a.canonical();
  int common = 0;
  for (int i = 1; i <= n; ++i) {
    if (x(zn_wrap(i + 1, n)) == zn_wrap(x(i) + 1, n)) ++common;
  }
  return n - common;
}

int coset_slot(const Permutation& sigma) { return sigma.position_of(1); }

Permutation embed(const CyclicCoset& c, int slot) {
  const int n = c.size();
  if (slot < 1 || slot > n) {
    throw InvalidArgument("slot " + std::to_string(slot) + " outside {1.." + std::to_string(n) + "}");
  }
  // tau(slot + j) = canonical(1 + j)
  std::vector<int> v(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) v[static_cast<std::size_t>(zn_wrap(slot + j, n) - 1)] = c.canonical()(j + 1);
  return Permutation(std::move(v));
}

std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) {
    if (f > std::numeric_limits<std::uint64_t>::max() / static_cast<std::uint64_t>(i)) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    f *= static_cast<std::uint64_t>(i);
  }
  return f;
}

std::uint64_t coset_count(int n) { return n <= 1 ? 1 : factorial(n - 1); }

void check_coset_budget(int n, std::uint64_t budget) {
  if (n < 2) throw InvalidArgument("coset enumeration needs n >= 2");
  if (coset_count(n) > budget) {
    throw BudgetExceeded("(n-1)! = " + std::to_string(coset_count(n)) + " cosets for n=" +
                         std::to_string(n) + " exceeds enumeration budget " + std::to_string(budget));
  }
}

namespace {

// Lexicographic unranking of arrangements of `symbols` (sorted ascending).
std::vector<int> unrank_arrangement(std::vector<int> symbols, std::uint64_t index) {
  const int m = static_cast<int>(symbols.size());
  if (index >= factorial(m)) throw InvalidArgument("rank out of range");
  std::vector<int> out;
  out.reserve(symbols.size());
  for (int k = m; k >= 1; --k) {
    const std::uint64_t block = factorial(k - 1);
    const auto q = static_cast<std::size_t>(index / block);
    index %= block;
    out.push_back(symbols[q]);
    symbols.erase(symbols.begin() + static_cast<std::ptrdiff_t>(q));
  }
  return out;
}

}  // namespace

CyclicCoset unrank_coset(int n, std::uint64_t index) {
  std::vector<int> tail(static_cast<std::size_t>(n - 1));
  std::iota(tail.begin(), tail.end(), 2);
  auto rest = unrank_arrangement(std::move(tail), index);
  rest.insert(rest.begin(), 1);
  return CyclicCoset::from_canonical(Permutation(std::move(rest)));
}

Permutation unrank_permutation(int n, std::uint64_t index) {
  std::vector<int> all(static_cast<std::size_t>(n));
  std::iota(all.begin(), all.end(), 1);
  return Permutation(unrank_arrangement(std::move(all), index));
}

void for_each_coset(int n, std::uint64_t begin, std::uint64_t end,
                    const std::function<void(std::uint64_t, const CyclicCoset&)>& fn) {
  if (begin >= end) return;
  if (end > coset_count(n)) throw InvalidArgument("coset index range out of bounds");
  const auto first = unrank_coset(n, begin);
  std::vector<int> line(first.canonical().one_line().begin(), first.canonical().one_line().end());
  for (std::uint64_t idx = begin; idx < end; ++idx) {
    fn(idx, CyclicCoset::from_canonical(Permutation(line)));
    std::next_permutation(line.begin() + 1, line.end());
  }
}

void for_each_permutation(int n, std::uint64_t begin, std::uint64_t end,
                          const std::function<void(std::uint64_t, const Permutation&)>& fn) {
  if (begin >= end) return;
  if (end > factorial(n)) throw InvalidArgument("permutation index range out of bounds");
  const auto first = unrank_permutation(n, begin);
  std::vector<int> line(first.one_line().begin(), first.one_line().end());
  for (std::uint64_t idx = begin; idx < end; ++idx) {
    fn(idx, Permutation(line));
    std::next_permutation(line.begin(), line.end());
  }
}

std::vector<CyclicCoset> enumerate_cosets(int n, std::uint64_t budget) {
  check_coset_budget(n, budget);
  std::vector<CyclicCoset> out;
  out.reserve(static_cast<std::size_t>(coset_count(n)));
  for_each_coset(n, 0, coset_count(n), [&](std::uint64_t, const CyclicCoset& c) { out.push_back(c); });
  return out;
}

}  // namespace permcodes

std::size_t std::hash<permcodes::Permutation>::operator()(const permcodes::Permutation& p) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (int v : p.one_line()) {
    h ^= static_cast<std::size_t>(v);
    h *= 1099511628211ull;
  }
  return h;
}
