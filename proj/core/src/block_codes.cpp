#include "permcodes/block_codes.hpp"

#include <algorithm>
#include <limits>
#include <tuple>

#include "permcodes/parallel.hpp"
#include "permcodes/random.hpp"

namespace permcodes {

std::string NablaLabel::to_string() const { return key.to_string() + "/" + std::to_string(slot); }

NablaMap::NablaMap(int n, int d) : params_(make_params(n, d + 1)), d_(d) {}

NablaLabel NablaMap::operator()(const Permutation& sigma) const {
  return {delta_key(sigma, params_), coset_slot(sigma)};
}

NablaLabel nabla(const Permutation& sigma, int n, int d) {
  if (sigma.size() != n) throw InvalidArgument("permutation length does not match n");
  return NablaMap(n, d)(sigma);
}

std::map<NablaLabel, Codebook> partition_blocks(int n, int d, std::uint64_t budget, unsigned workers) {
  const NablaMap labels(n, d);
  if (factorial(n) > budget) {
    throw BudgetExceeded("n! = " + std::to_string(factorial(n)) + " permutations exceed enumeration budget " +
                         std::to_string(budget));
  }
  const std::uint64_t cosets = coset_count(n);
  const auto ranges = split_range(cosets, resolve_workers(workers));
  std::vector<std::vector<std::pair<QuotientVector, CyclicCoset>>> partial(ranges.size());
  run_sharded(cosets, workers, [&](IndexRange r, std::size_t shard) {
    for_each_coset(n, r.begin, r.end, [&](std::uint64_t, const CyclicCoset& c) {
      partial[shard].emplace_back(delta_key(c, labels.params()), c);
    });
  });

  std::map<NablaLabel, std::vector<Permutation>> classes;
  for (const auto& shard : partial) {
    for (const auto& [key, coset] : shard) {
      for (int s = 1; s <= n; ++s) classes[NablaLabel{key, s}].push_back(embed(coset, s));
    }
  }
  std::map<NablaLabel, Codebook> out;
  for (auto& [label, members] : classes) {
    std::sort(members.begin(), members.end());
    out.emplace(label, Codebook(Metric::block, n, d, "key=" + label.key.to_string() + ";slot=" + std::to_string(label.slot),
                                std::move(members)));
  }
  return out;
}

std::string ExtensionSequence::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(entries[i]);
  }
  return out;
}

Permutation extend(const Permutation& sigma, const ExtensionSequence& seq) {
  const int n = sigma.size();
  if (seq.base != n) {
    throw InvalidArgument("extension sequence base " + std::to_string(seq.base) + " does not match n=" +
                          std::to_string(n));
  }
  const int total = n + static_cast<int>(seq.length());
  // next[v] is the value following v; 0 marks the end.
  std::vector<int> next(static_cast<std::size_t>(total) + 1, 0);
  for (int i = 1; i < n; ++i) next[static_cast<std::size_t>(sigma(i))] = sigma(i + 1);
  for (std::size_t m = 0; m < seq.length(); ++m) {
    const int s = seq.entries[m];
    if (s < 1 || s > n) {
      throw InvalidArgument("extension entry " + std::to_string(s) + " at index " + std::to_string(m + 1) +
                            " outside {1.." + std::to_string(n) + "}");
    }
    const int fresh = n + static_cast<int>(m) + 1;
    next[static_cast<std::size_t>(fresh)] = next[static_cast<std::size_t>(s)];
    next[static_cast<std::size_t>(s)] = fresh;
  }
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(total));
  for (int v = n > 0 ? sigma(1) : 0; v != 0; v = next[static_cast<std::size_t>(v)]) out.push_back(v);
  return Permutation(std::move(out));
}

Permutation project_information(const Permutation& codeword, int n) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int v : codeword.one_line()) {
    if (v <= n) out.push_back(v);
  }
  return Permutation(std::move(out));
}

std::set<int> hamming_set(const ExtensionSequence& s1, const ExtensionSequence& s2) {
  if (s1.length() != s2.length()) throw InvalidArgument("hamming_set: sequence length mismatch");
  std::set<int> out;
  for (std::size_t m = 0; m < s1.length(); ++m) {
    if (s1.entries[m] != s2.entries[m]) out.insert(s1.entries[m]);
  }
  return out;
}

namespace {

std::uint64_t saturating_pow(std::uint64_t base, int exp) {
  std::uint64_t r = 1;
  for (int i = 0; i < exp; ++i) {
    if (base != 0 && r > std::numeric_limits<std::uint64_t>::max() / base) return std::numeric_limits<std::uint64_t>::max();
    r *= base;
  }
  return r;
}

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) return std::numeric_limits<std::uint64_t>::max();
  return a * b;
}

}  // namespace

AuxiliarySet::AuxiliarySet(std::uint32_t q, int length, int dimension, int base)
    : q_(q), length_(length), dimension_(dimension), base_(base), size_(saturating_pow(q, dimension)) {
  if (!is_prime(q)) throw InvalidArgument("auxiliary alphabet size q=" + std::to_string(q) + " is not prime");
  if (length < 1 || length > static_cast<int>(q)) {
    throw InvalidArgument("Reed-Solomon length must lie in [1, q]");
  }
  if (dimension < 1 || dimension > length) throw InvalidArgument("Reed-Solomon dimension must lie in [1, length]");
  if (static_cast<int>(q) > base) throw InvalidArgument("values {1..q} must fit in {1..base}");
}

std::vector<std::string> auxiliary_set_violations(int n, int d) {
  std::vector<std::string> v;
  if (n < 12) v.push_back("n >= 12 (n=" + std::to_string(n) + ")");
  if (d < 4) v.push_back("d >= 4 (d=" + std::to_string(d) + ")");
  if (n < 6 * d) v.push_back("n >= 6d (n=" + std::to_string(n) + ", 6d=" + std::to_string(6 * d) + ")");
  if (n < 4 || d < 4) return v;
  const auto p = smallest_prime_geq(static_cast<std::uint64_t>(n));
  const auto q = smallest_prime_geq_half(static_cast<std::uint64_t>(n));
  if (static_cast<std::uint64_t>(3 * d - 1) > q) {
    v.push_back("3d-1 <= q (3d-1=" + std::to_string(3 * d - 1) + ", q=" + std::to_string(q) + ")");
  }
  if (q > static_cast<std::uint64_t>(n)) v.push_back("q <= n (q=" + std::to_string(q) + ")");
  if (4 * q + 4 < p) v.push_back("4q+4 >= p (q=" + std::to_string(q) + ", p=" + std::to_string(p) + ")");
  const auto labels = saturating_mul(static_cast<std::uint64_t>(n), saturating_pow(p, d - 1));
  const auto members = saturating_pow(q, 2 * d);
  if (labels == std::numeric_limits<std::uint64_t>::max() || labels > members) {
    v.push_back("n p^(d-1) <= q^(2d) (n p^(d-1)=" + std::to_string(labels) + ", q^(2d)=" + std::to_string(members) + ")");
  }
  return v;
}

AuxiliarySet AuxiliarySet::for_code(int n, int d) {
  const auto violated = auxiliary_set_violations(n, d);
  if (!violated.empty()) throw InvalidArgument("auxiliary set hypothesis violated: " + violated.front());
  const auto q = static_cast<std::uint32_t>(smallest_prime_geq_half(static_cast<std::uint64_t>(n)));
  return AuxiliarySet(q, 3 * d - 1, 2 * d, n);
}

ExtensionSequence AuxiliarySet::member(std::uint64_t message) const {
  if (message >= size_) throw InvalidArgument("auxiliary message index " + std::to_string(message) + " out of range");
  std::vector<std::uint32_t> coeffs(static_cast<std::size_t>(dimension_));
  for (auto& c : coeffs) {
    c = static_cast<std::uint32_t>(message % q_);
    message /= q_;
  }
  const Poly poly(q_, std::move(coeffs));
  ExtensionSequence seq{base_, {}};
  seq.entries.reserve(static_cast<std::size_t>(length_));
  for (int point = 0; point < length_; ++point) {
    seq.entries.push_back(static_cast<int>(poly.evaluate(static_cast<std::uint32_t>(point))) + 1);
  }
  return seq;
}

ExtensionSequence rs_auxiliary_member(int n, int d, std::uint64_t message) {
  return AuxiliarySet::for_code(n, d).member(message);
}

SystematicEncoder::SystematicEncoder(int n, int d) : labels_(n, d), aux_(AuxiliarySet::for_code(n, d)) {}

std::uint64_t SystematicEncoder::message_index(const NablaLabel& label) const {
  return label.key.rank() * static_cast<std::uint64_t>(n()) + static_cast<std::uint64_t>(label.slot - 1);
}

Permutation SystematicEncoder::encode(const Permutation& sigma) const {
  if (sigma.size() != n()) throw InvalidArgument("permutation length does not match n=" + std::to_string(n()));
  return extend(sigma, aux_.member(message_index(labels_(sigma))));
}

Permutation encode_systematic(const Permutation& sigma, int n, int d) { return SystematicEncoder(n, d).encode(sigma); }

PairReport verify_pair(const Permutation& a, const Permutation& b, int d) {
  const int dist = d_block(a, b);
  return {dist, dist >= d};
}

SystematicSampleReport sample_systematic(const SystematicEncoder& encoder, std::uint64_t pairs, std::uint64_t seed,
                                         unsigned workers) {
  const int n = encoder.n();
  const int d = encoder.d();
  const std::uint64_t chunks = (pairs + kSampleChunk - 1) / kSampleChunk;

  struct Partial {
    int min_distance = std::numeric_limits<int>::max();
    std::uint64_t violations = 0;
    std::uint64_t projection_failures = 0;
    std::vector<std::pair<std::uint64_t, Permutation>> pool;
  };
  std::vector<Partial> partial(static_cast<std::size_t>(chunks));
  run_sharded(chunks, workers, [&](IndexRange r, std::size_t) {
    for (std::uint64_t c = r.begin; c < r.end; ++c) {
      auto& out = partial[static_cast<std::size_t>(c)];
      Rng rng(chunk_seed(seed, c));
      const std::uint64_t count = std::min(kSampleChunk, pairs - c * kSampleChunk);
      for (std::uint64_t k = 0; k < count; ++k) {
        const Permutation sigma = random_permutation(n, rng);
        Permutation tau = random_permutation(n, rng);
        while (tau == sigma) tau = random_permutation(n, rng);
        const auto ls = encoder.labels()(sigma);
        const auto lt = encoder.labels()(tau);
        const auto ws = extend(sigma, encoder.auxiliary().member(encoder.message_index(ls)));
        const auto wt = extend(tau, encoder.auxiliary().member(encoder.message_index(lt)));
        if (project_information(ws, n) != sigma) ++out.projection_failures;
        if (project_information(wt, n) != tau) ++out.projection_failures;
        const int dist = d_block(ws, wt);
        out.min_distance = std::min(out.min_distance, dist);
        if (dist < d) ++out.violations;
        out.pool.emplace_back(encoder.message_index(ls), sigma);
        out.pool.emplace_back(encoder.message_index(lt), tau);
      }
    }
  });

  SystematicSampleReport report;
  report.random_pairs = pairs;
  int min_random = std::numeric_limits<int>::max();
  std::vector<std::pair<std::uint64_t, Permutation>> pool;
  for (auto& part : partial) {
    min_random = std::min(min_random, part.min_distance);
    report.violations += part.violations;
    report.projection_failures += part.projection_failures;
    pool.insert(pool.end(), std::make_move_iterator(part.pool.begin()), std::make_move_iterator(part.pool.end()));
  }
  report.min_distance_random = pairs ? min_random : 0;

  std::sort(pool.begin(), pool.end());
  pool.erase(std::unique(pool.begin(), pool.end()), pool.end());
  int min_same = std::numeric_limits<int>::max();
  for (std::size_t i = 0; i < pool.size();) {
    std::size_t j = i;
    while (j < pool.size() && pool[j].first == pool[i].first) ++j;
    if (j - i >= 2) {
      const auto aux = encoder.auxiliary().member(pool[i].first);
      std::vector<Permutation> words;
      for (std::size_t k = i; k < j; ++k) words.push_back(extend(pool[k].second, aux));
      for (std::size_t a = 0; a < words.size(); ++a) {
        for (std::size_t b = a + 1; b < words.size(); ++b) {
          const int dist = d_block(words[a], words[b]);
          ++report.same_label_pairs;
          min_same = std::min(min_same, dist);
          if (dist < d) ++report.violations;
        }
      }
    }
    i = j;
  }
  report.min_distance_same_label = report.same_label_pairs ? min_same : 0;
  return report;
}

AuxiliarySampleReport sample_auxiliary(const AuxiliarySet& aux, int d, std::uint64_t pairs, std::uint64_t seed,
                                       unsigned workers) {
  const std::uint64_t chunks = (pairs + kSampleChunk - 1) / kSampleChunk;
  struct Partial {
    int min_distance = std::numeric_limits<int>::max();
    int min_set = std::numeric_limits<int>::max();
    std::uint64_t violations = 0;
  };
  std::vector<Partial> partial(static_cast<std::size_t>(chunks));
  run_sharded(chunks, workers, [&](IndexRange r, std::size_t) {
    for (std::uint64_t c = r.begin; c < r.end; ++c) {
      auto& out = partial[static_cast<std::size_t>(c)];
      Rng rng(chunk_seed(seed, c));
      const std::uint64_t count = std::min(kSampleChunk, pairs - c * kSampleChunk);
      for (std::uint64_t k = 0; k < count; ++k) {
        const std::uint64_t a = uniform_below(rng, aux.size());
        std::uint64_t b = uniform_below(rng, aux.size());
        while (b == a) b = uniform_below(rng, aux.size());
        const auto sa = aux.member(a);
        const auto sb = aux.member(b);
        int dist = 0;
        for (std::size_t m = 0; m < sa.length(); ++m) dist += sa.entries[m] != sb.entries[m];
        out.min_distance = std::min(out.min_distance, dist);
        out.min_set = std::min(out.min_set, static_cast<int>(hamming_set(sa, sb).size()));
        if (dist < d) ++out.violations;
      }
    }
  });
  AuxiliarySampleReport report;
  report.pairs = pairs;
  int min_d = std::numeric_limits<int>::max();
  int min_s = std::numeric_limits<int>::max();
  for (const auto& part : partial) {
    min_d = std::min(min_d, part.min_distance);
    min_s = std::min(min_s, part.min_set);
    report.violations += part.violations;
  }
  report.min_hamming_distance = pairs ? min_d : 0;
  report.min_hamming_set = pairs ? min_s : 0;
  return report;
}

ExtensionCheckReport check_extension_properties(int n, int max_k, std::uint64_t trials, std::uint64_t seed,
                                            unsigned workers) {
  if (n < 2 || max_k < 1) throw InvalidArgument("check_extension_properties: need n >= 2, max_k >= 1");
  const std::uint64_t chunks = (trials + kSampleChunk - 1) / kSampleChunk;
  std::vector<ExtensionCheckReport> partial(static_cast<std::size_t>(chunks));
  run_sharded(chunks, workers, [&](IndexRange r, std::size_t) {
    for (std::uint64_t c = r.begin; c < r.end; ++c) {
      auto& out = partial[static_cast<std::size_t>(c)];
      Rng rng(chunk_seed(seed, c));
      const std::uint64_t count = std::min(kSampleChunk, trials - c * kSampleChunk);
      auto random_sequence = [&](int k) {
        ExtensionSequence s{n, std::vector<int>(static_cast<std::size_t>(k))};
        for (auto& e : s.entries) e = static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(n))) + 1;
        return s;
      };
      for (std::uint64_t t = 0; t < count; ++t) {
        const auto sigma = random_permutation(n, rng);
        const auto tau = random_permutation(n, rng);
        const int k = static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(max_k))) + 1;
        const auto s = random_sequence(k);
        const auto s1 = random_sequence(k);
        const auto s2 = random_sequence(k);
        if (d_block(extend(sigma, s), extend(tau, s)) != d_block(sigma, tau)) ++out.equality_violations;
        if (d_block(extend(sigma, s1), extend(tau, s2)) < static_cast<int>(hamming_set(s1, s2).size())) {
          ++out.hamming_violations;
        }
        ++out.trials;
      }
    }
  });
  ExtensionCheckReport report;
  for (const auto& part : partial) {
    report.trials += part.trials;
    report.equality_violations += part.equality_violations;
    report.hamming_violations += part.hamming_violations;
  }
  return report;
}

}  // namespace permcodes
