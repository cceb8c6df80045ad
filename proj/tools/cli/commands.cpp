#include "commands.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "permcodes/block_codes.hpp"
#include "permcodes/bounds.hpp"
#include "permcodes/codebook.hpp"
#include "permcodes/cyclic_codes.hpp"
#include "permcodes/perm.hpp"
#include "report.hpp"

namespace permcodes::cli {

namespace {

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

struct Globals {
  unsigned workers = 1;
  std::uint64_t seed = kDefaultSeed;
  std::uint64_t budget = kDefaultEnumerationBudget;
  std::uint64_t pair_budget = kDefaultPairBudget;
  std::string format = "text";
  std::string out;

  Format fmt() const { return format == "structured" ? Format::structured : Format::text; }
};

/// Usage-level failure raised by a command; maps to exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void echo_globals(Report& r, const Globals& g, bool seeded) {
  if (seeded) r.config("seed", g.seed);
  r.config("budget", g.budget);
  r.config("pair_budget", g.pair_budget);
  r.config("format", g.format);
  if (!g.out.empty()) r.config("out", g.out);
}

Permutation parse_perm_option(const std::string& flag, const std::string& text) {
  try {
    return Permutation::parse(text);
  } catch (const ParseError& e) {
    throw UsageError(flag + ": " + e.what());
  } catch (const InvalidArgument& e) {
    throw UsageError(flag + ": not a permutation: " + e.what());
  }
}

std::string status_of(const Certification& c, int claimed) {
  if (c.vacuous()) return "vacuous";
  return *c.min_distance >= claimed ? "ok" : "VIOLATION";
}

json distance_or_null(const Certification& c) { return c.vacuous() ? json(nullptr) : json(*c.min_distance); }

std::string file_safe(std::string s) {
  for (auto& ch : s) {
    if (ch == ',') ch = '-';
    if (ch == '/' || ch == ';' || ch == '=') ch = '_';
  }
  return s;
}

void ensure_directory(const std::string& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw UsageError("cannot create directory " + dir + ": " + ec.message());
}

// "5", "5,6,9", "5-9" or mixtures such as "5-7,10".
std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    const auto dash = part.find('-');
    try {
      if (dash == std::string::npos) {
        out.push_back(std::stoi(part));
      } else {
        const int lo = std::stoi(part.substr(0, dash));
        const int hi = std::stoi(part.substr(dash + 1));
        if (hi < lo) throw UsageError("empty range '" + part + "'");
        for (int v = lo; v <= hi; ++v) out.push_back(v);
      }
    } catch (const std::logic_error&) {
      throw UsageError("bad integer list '" + text + "'");
    }
  }
  if (out.empty()) throw UsageError("empty integer list");
  return out;
}

// ---------------------------------------------------------------- distance

struct DistanceArgs {
  std::string a, b;
};

int cmd_distance(const Globals& g, const DistanceArgs& args, std::ostream& out) {
  const auto sigma = parse_perm_option("--a", args.a);
  const auto tau = parse_perm_option("--b", args.b);
  if (sigma.size() != tau.size()) {
    throw UsageError("length mismatch: --a has " + std::to_string(sigma.size()) + " entries, --b has " +
                     std::to_string(tau.size()));
  }
  Report r("distance");
  r.config("a", sigma.to_string());
  r.config("b", tau.to_string());
  r.config("format", g.format);
  const int db = d_block(sigma, tau);
  const int dc = d_cyclic(canonical_rep(sigma), canonical_rep(tau));
  r.result("d_B", db);
  r.result("d_C", dc);
  r.result("sandwich", (db + 1 >= dc && dc >= db - 1) ? "ok" : "VIOLATION");
  out << r.render(g.fmt());
  return kExitOk;
}

// -------------------------------------------------------- construct-cyclic

struct ConstructArgs {
  int n = 0, d = 0;
  std::string key;
  std::string poly;
  bool all_fibers = false;
};

int cmd_construct(const Globals& g, const ConstructArgs& args, std::ostream& out) {
  std::optional<Poly> f;
  const auto p = static_cast<std::uint32_t>(smallest_prime_geq(static_cast<std::uint64_t>(std::max(args.n, 2))));
  if (!args.poly.empty()) {
    try {
      f = Poly::parse(p, args.poly);
    } catch (const ParseError& e) {
      throw UsageError(std::string("--poly: ") + e.what());
    }
  }
  const auto params = make_params(args.n, args.d, f);
  const auto table = build_fibers(params, g.budget, g.workers);

  Report r("construct-cyclic");
  r.config("n", args.n);
  r.config("d", args.d);
  r.config("p", params.p);
  r.config("f", params.f.to_string());
  r.config("alphas", "0.." + std::to_string(args.n - 1));
  if (!args.key.empty()) r.config("key", args.key);
  r.config("all_fibers", args.all_fibers);
  echo_globals(r, g, false);

  r.result("cosets", table.total());
  r.result("nonempty_fibers", table.fibers.size());
  r.result("max_fiber_size", table.max_fiber_size());
  r.result("pigeonhole_bound", pigeonhole_fiber_bound(params));

  bool violated = false;
  if (args.all_fibers) {
    if (!g.out.empty()) ensure_directory(g.out);
    json rows = json::array();
    int worst = args.n + 1;
    for (const auto& [key, members] : table.fibers) {
      const auto book = Codebook::from_cosets(args.n, args.d, key.to_string(), members);
      const auto cert = certify_min_distance(book, g.pair_budget, g.workers);
      if (!cert.meets(args.d)) violated = true;
      if (!cert.vacuous()) worst = std::min(worst, *cert.min_distance);
      rows.push_back({{"key", key.to_string()}, {"size", book.size()}, {"min_distance", distance_or_null(cert)},
                      {"status", status_of(cert, args.d)}});
      if (!g.out.empty()) book.write_files(fs::path(g.out) / ("fiber_" + file_safe(key.to_string()) + ".txt"));
    }
    r.result("min_distance_over_fibers", worst <= args.n ? json(worst) : json(nullptr));
    r.result("status", violated ? "VIOLATION" : "ok");
    r.table("fibers", std::move(rows));
  } else {
    Codebook book = best_fiber(table);
    if (!args.key.empty()) {
      QuotientVector key;
      try {
        key = QuotientVector::parse(params.p, args.key);
      } catch (const ParseError& e) {
        throw UsageError(std::string("--key: ") + e.what());
      }
      if (static_cast<int>(key.coords.size()) != params.key_length()) {
        throw UsageError("--key needs " + std::to_string(params.key_length()) + " digits");
      }
      book = fiber_codebook(table, key);
    }
    const auto cert = certify_min_distance(book, g.pair_budget, g.workers);
    violated = !cert.meets(args.d);
    r.result("key", book.label());
    r.result("size", book.size());
    r.result("min_distance", distance_or_null(cert));
    r.result("status", status_of(cert, args.d));
    if (!g.out.empty()) {
      const fs::path path(g.out);
      if (path.has_parent_path()) ensure_directory(path.parent_path().string());
      book.write_files(path);
    } else {
      r.result("members", book.size());
    }
  }
  out << r.render(g.fmt());
  return violated ? kExitCertificationFailure : kExitOk;
}

// ---------------------------------------------------------------- partition

struct NdArgs {
  int n = 0, d = 0;
};

int cmd_partition(const Globals& g, const NdArgs& args, std::ostream& out) {
  const auto classes = partition_blocks(args.n, args.d, g.budget, g.workers);
  const NablaMap labels(args.n, args.d);

  Report r("partition");
  r.config("n", args.n);
  r.config("d", args.d);
  r.config("p", labels.p());
  r.config("f", labels.params().f.to_string());
  echo_globals(r, g, false);

  if (!g.out.empty()) ensure_directory(g.out);
  json rows = json::array();
  std::uint64_t total = 0;
  std::size_t largest = 0;
  int worst = args.n;
  bool violated = false;
  for (const auto& [label, book] : classes) {
    const auto cert = certify_min_distance(book, g.pair_budget, g.workers);
    total += book.size();
    largest = std::max(largest, book.size());
    if (!cert.vacuous()) worst = std::min(worst, *cert.min_distance);
    if (!cert.meets(args.d)) violated = true;
    rows.push_back({{"key", label.key.to_string()}, {"slot", label.slot}, {"size", book.size()},
                    {"min_distance", distance_or_null(cert)}, {"status", status_of(cert, args.d)}});
    if (!g.out.empty()) {
      book.write_files(fs::path(g.out) /
                       ("class_" + file_safe(label.key.to_string()) + "_s" + std::to_string(label.slot) + ".txt"));
    }
  }
  std::uint64_t cells = static_cast<std::uint64_t>(args.n);
  for (int i = 0; i < args.d - 1; ++i) cells *= labels.p();
  r.result("permutations", total);
  r.result("classes", classes.size());
  r.result("class_limit", cells);
  r.result("max_class_size", largest);
  r.result("min_distance_over_classes", worst);
  r.result("status", violated ? "VIOLATION" : "ok");
  r.table("classes", std::move(rows));
  out << r.render(g.fmt());
  return violated ? kExitCertificationFailure : kExitOk;
}

// --------------------------------------------------------------- encode-sys

struct EncodeArgs {
  int n = 0, d = 0;
  std::string perm;
};

int cmd_encode(const Globals& g, const EncodeArgs& args, std::ostream& out) {
  const auto sigma = parse_perm_option("--perm", args.perm);
  if (sigma.size() != args.n) throw UsageError("length mismatch: --perm has " + std::to_string(sigma.size()) + " entries, --n is " + std::to_string(args.n));
  const SystematicEncoder enc(args.n, args.d);
  const auto label = enc.labels()(sigma);
  const auto index = enc.message_index(label);
  const auto word = extend(sigma, enc.auxiliary().member(index));
  Report r("encode-sys");
  r.config("n", args.n);
  r.config("d", args.d);
  r.config("q", enc.auxiliary().q());
  r.config("perm", sigma.to_string());
  r.config("format", g.format);
  r.result("label", label.to_string());
  r.result("message", index);
  r.result("auxiliary", enc.auxiliary().member(index).to_string());
  r.result("codeword", word.to_string());
  out << r.render(g.fmt());
  return kExitOk;
}

// ------------------------------------------------------------------ aux-set

struct AuxArgs {
  int n = 0, d = 0;
  std::optional<std::uint64_t> index;
  std::optional<std::uint64_t> samples;
};

int cmd_aux(const Globals& g, const AuxArgs& args, std::ostream& out) {
  const auto aux = AuxiliarySet::for_code(args.n, args.d);
  Report r("aux-set");
  r.config("n", args.n);
  r.config("d", args.d);
  r.config("q", aux.q());
  r.config("length", aux.length());
  r.config("dimension", aux.dimension());
  int code = kExitOk;
  if (args.index) {
    r.config("index", *args.index);
    r.config("format", g.format);
    r.result("member", aux.member(*args.index).to_string());
  } else {
    const std::uint64_t samples = args.samples.value_or(100000);
    r.config("samples", samples);
    echo_globals(r, g, true);
    const auto rep = sample_auxiliary(aux, args.d, samples, g.seed, g.workers);
    r.result("pairs", rep.pairs);
    r.result("min_hamming_distance", rep.min_hamming_distance);
    r.result("min_hamming_set", rep.min_hamming_set);
    r.result("violations", rep.violations);
    r.result("status", rep.violations ? "VIOLATION" : "ok");
    if (rep.violations) code = kExitCertificationFailure;
  }
  out << r.render(g.fmt());
  return code;
}

// ------------------------------------------------------------------- verify

struct VerifyArgs {
  std::vector<std::string> files;
  bool systematic = false;
  int n = 0, d = 0;
  std::uint64_t samples = 100000;
};

int cmd_verify(const Globals& g, const VerifyArgs& args, std::ostream& out) {
  Report r("verify");
  if (args.systematic) {
    if (args.n == 0 || args.d == 0) throw UsageError("verify --systematic needs --n and --d");
    const SystematicEncoder enc(args.n, args.d);
    r.config("mode", "systematic");
    r.config("n", args.n);
    r.config("d", args.d);
    r.config("N", enc.codeword_length());
    r.config("q", enc.auxiliary().q());
    r.config("samples", args.samples);
    echo_globals(r, g, true);
    const auto rep = sample_systematic(enc, args.samples, g.seed, g.workers);
    r.result("random_pairs", rep.random_pairs);
    r.result("min_distance_random", rep.min_distance_random);
    r.result("same_label_pairs", rep.same_label_pairs);
    r.result("min_distance_same_label", rep.same_label_pairs ? json(rep.min_distance_same_label) : json(nullptr));
    r.result("violations", rep.violations);
    r.result("projection_failures", rep.projection_failures);
    const bool bad = rep.violations || rep.projection_failures;
    r.result("status", bad ? "VIOLATION" : "ok");
    out << r.render(g.fmt());
    return bad ? kExitCertificationFailure : kExitOk;
  }
  if (args.files.empty()) throw UsageError("verify needs codebook files or --systematic");
  r.config("mode", "codebooks");
  echo_globals(r, g, false);
  std::vector<std::string> files;
  for (const auto& f : args.files) {
    if (fs::is_directory(f)) {
      for (const auto& entry : fs::directory_iterator(f)) {
        if (entry.is_regular_file()) files.push_back(entry.path().string());
      }
    } else {
      files.push_back(f);
    }
  }
  std::sort(files.begin(), files.end());
  json rows = json::array();
  bool violated = false;
  for (const auto& f : files) {
    Codebook book = [&] {
      try {
        return Codebook::read_file(f);
      } catch (const ParseError& e) {
        throw UsageError(f + ": " + e.what());
      } catch (const InvalidArgument& e) {
        throw UsageError(f + ": " + e.what());
      }
    }();
    const auto cert = certify_min_distance(book, g.pair_budget, g.workers);
    if (!cert.meets(book.claimed_min_distance())) violated = true;
    rows.push_back({{"file", f}, {"metric", std::string(to_string(book.metric()))}, {"n", book.n()},
                    {"d", book.claimed_min_distance()}, {"size", book.size()},
                    {"min_distance", distance_or_null(cert)}, {"status", status_of(cert, book.claimed_min_distance())}});
  }
  r.result("books", files.size());
  r.result("status", violated ? "VIOLATION" : "ok");
  r.table("codebooks", std::move(rows));
  out << r.render(g.fmt());
  return violated ? kExitCertificationFailure : kExitOk;
}

// ------------------------------------------------------------------- sphere

int cmd_sphere(const Globals& g, int n, std::ostream& out) {
  const auto profile = sphere_profile(n, g.budget, g.workers);
  Report r("sphere");
  r.config("n", n);
  echo_globals(r, g, false);
  json rows = json::array();
  for (int rad = 0; rad <= n; ++rad) {
    rows.push_back({{"r", rad}, {"sphere", profile.sizes[static_cast<std::size_t>(rad)]}, {"ball", ball_size(profile, rad)}});
  }
  r.result("cosets", profile.total());
  r.table("profile", std::move(rows));
  out << r.render(g.fmt());
  return kExitOk;
}

// ---------------------------------------------------------------- witnesses

int cmd_witnesses(const Globals& g, const NdArgs& args, std::ostream& out) {
  const auto witnesses = sphere_witnesses(args.n, args.d);
  std::vector<CyclicCoset> cosets;
  for (const auto& w : witnesses) cosets.push_back(w.coset);
  std::sort(cosets.begin(), cosets.end());
  const auto distinct = static_cast<std::size_t>(std::unique(cosets.begin(), cosets.end()) - cosets.begin());
  cosets.resize(distinct);

  // The stored claim is the exact pairwise minimum, so the file verifies.
  const auto probe = Codebook::from_cosets(args.n, 0, "", cosets);
  const auto cert = certify_min_distance(probe, g.pair_budget, g.workers);
  const int claimed = cert.vacuous() ? 0 : *cert.min_distance;
  const auto book = Codebook::from_cosets(args.n, claimed, "sphere-witnesses r=" + std::to_string(args.d), cosets);

  Report r("witnesses");
  r.config("n", args.n);
  r.config("d", args.d);
  echo_globals(r, g, false);
  bool norms_ok = true;
  for (const auto& c : cosets) norms_ok = norms_ok && cyclic_norm(c) == args.d;
  r.result("witnesses", witnesses.size());
  r.result("binomial", static_cast<std::uint64_t>(binomial(args.n, args.d)));
  r.result("distinct_cosets", distinct);
  r.result("all_at_norm_d", norms_ok);
  r.result("min_pairwise_distance", distance_or_null(cert));
  if (!g.out.empty()) {
    const fs::path path(g.out);
    if (path.has_parent_path()) ensure_directory(path.parent_path().string());
    book.write_files(path);
  } else {
    json rows = json::array();
    for (const auto& w : witnesses) {
      rows.push_back({{"J", json(w.subset)}, {"sigma", w.sigma.to_string()}, {"canonical", w.coset.canonical().to_string()}});
    }
    r.table("members", std::move(rows));
  }
  out << r.render(g.fmt());
  return (distinct == witnesses.size() && norms_ok) ? kExitOk : kExitCertificationFailure;
}

// ------------------------------------------------------------------- bounds

struct BoundsArgs {
  std::string ns;
  int d = 0;
  bool exact = false;
  bool bound = false;
};

int cmd_bounds(const Globals& g, const BoundsArgs& args, std::ostream& out) {
  if (args.exact && args.bound) throw UsageError("--exact and --bound are exclusive");
  const auto ns = parse_int_list(args.ns);
  const RatioMode mode = args.exact ? RatioMode::exact : args.bound ? RatioMode::bound : RatioMode::automatic;
  const auto rows = ratio_report(args.d, ns, mode, g.budget, g.workers);

  Report r("bounds");
  r.config("n", args.ns);
  r.config("d", args.d);
  r.config("mode", args.exact ? "exact" : args.bound ? "bound" : "auto");
  echo_globals(r, g, false);
  json table = json::array();
  auto fixed = [](long double v, int digits) {
    std::ostringstream s;
    s.setf(std::ios::fixed);
    s.precision(digits);
    s << static_cast<double>(v);
    return s.str();
  };
  for (const auto& row : rows) {
    table.push_back({{"n", row.n},
                     {"p", row.p},
                     {"mode", row.exact ? "exact" : "bound"},
                     {"gv", row.exact ? json(row.gv_exact) : json(nullptr)},
                     {"log10_construction", fixed(row.log10_construction, 6)},
                     {"log10_gv", fixed(row.log10_gv, 6)},
                     {"ratio", fixed(row.ratio, 6)},
                     {"floor", fixed(row.floor, 6)},
                     {"meets_floor", row.meets_floor}});
  }
  r.table("rows", std::move(table));
  if (rows.size() == 1 && rows.front().exact) r.result("GV", rows.front().gv_exact);
  r.result("ratio_non_decreasing", ratio_non_decreasing(rows));
  r.result("gv_rounding", "ceil((n-1)!/V(d-1)); bound mode uses V(d-1) >= 1 + C(n,d-1) without rounding");
  out << r.render(g.fmt());
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"permcodes: cyclic block and block permutation codes", "permcodes"};
  app.fallthrough();
  app.require_subcommand(1);
  Globals g;
  app.add_option("--workers", g.workers, "Worker threads (0 = all cores)")->capture_default_str();
  app.add_option("--seed", g.seed, "Seed for sampled verification")->capture_default_str();
  app.add_option("--budget", g.budget, "Enumeration budget (items)")->capture_default_str();
  app.add_option("--pair-budget", g.pair_budget, "Pairwise distance budget")->capture_default_str();
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"text", "structured"}))->capture_default_str();
  app.add_option("--out", g.out, "Output file or directory");

  std::function<int()> action;

  DistanceArgs dist;
  auto* sub_distance = app.add_subcommand("distance", "d_B and d_C of two permutations");
  sub_distance->add_option("--a", dist.a, "First permutation, one-line notation")->required();
  sub_distance->add_option("--b", dist.b, "Second permutation, one-line notation")->required();
  sub_distance->callback([&] { action = [&] { return cmd_distance(g, dist, out); }; });

  ConstructArgs con;
  auto* sub_construct = app.add_subcommand("construct-cyclic", "Fibers of the cyclic key map");
  sub_construct->add_option("--n", con.n)->required();
  sub_construct->add_option("--d", con.d)->required();
  sub_construct->add_option("--key", con.key, "Fiber key v1,v2,... (default: largest fiber)");
  sub_construct->add_option("--poly", con.poly, "Override f by low-first coefficients, e.g. \"2,0,1\"");
  sub_construct->add_flag("--all-fibers", con.all_fibers, "Emit and certify every non-empty fiber");
  sub_construct->callback([&] { action = [&] { return cmd_construct(g, con, out); }; });

  NdArgs part;
  auto* sub_partition = app.add_subcommand("partition", "Partition S_n into block-metric classes");
  sub_partition->add_option("--n", part.n)->required();
  sub_partition->add_option("--d", part.d)->required();
  sub_partition->callback([&] { action = [&] { return cmd_partition(g, part, out); }; });

  EncodeArgs enc;
  auto* sub_encode = app.add_subcommand("encode-sys", "Systematic encoder");
  sub_encode->add_option("--n", enc.n)->required();
  sub_encode->add_option("--d", enc.d)->required();
  sub_encode->add_option("--perm", enc.perm, "Information permutation")->required();
  sub_encode->callback([&] { action = [&] { return cmd_encode(g, enc, out); }; });

  AuxArgs aux;
  auto* sub_aux = app.add_subcommand("aux-set", "Reed-Solomon auxiliary sequences");
  sub_aux->add_option("--n", aux.n)->required();
  sub_aux->add_option("--d", aux.d)->required();
  auto* aux_index = sub_aux->add_option("--index", aux.index, "Message index to print");
  sub_aux->add_option("--samples", aux.samples, "Sampled pair check")->excludes(aux_index);
  sub_aux->callback([&] { action = [&] { return cmd_aux(g, aux, out); }; });

  VerifyArgs ver;
  auto* sub_verify = app.add_subcommand("verify", "Certify codebook files or sample the systematic code");
  sub_verify->add_option("files", ver.files, "Codebook files or directories");
  sub_verify->add_flag("--systematic", ver.systematic);
  sub_verify->add_option("--n", ver.n);
  sub_verify->add_option("--d", ver.d);
  sub_verify->add_option("--samples", ver.samples)->capture_default_str();
  sub_verify->callback([&] { action = [&] { return cmd_verify(g, ver, out); }; });

  int sphere_n = 0;
  auto* sub_sphere = app.add_subcommand("sphere", "Exact sphere profile about the identity coset");
  sub_sphere->add_option("--n", sphere_n)->required();
  sub_sphere->callback([&] { action = [&] { return cmd_sphere(g, sphere_n, out); }; });

  NdArgs wit;
  auto* sub_witnesses = app.add_subcommand("witnesses", "Explicit cosets at cyclic norm d");
  sub_witnesses->add_option("--n", wit.n)->required();
  sub_witnesses->add_option("--d", wit.d)->required();
  sub_witnesses->callback([&] { action = [&] { return cmd_witnesses(g, wit, out); }; });

  BoundsArgs bnd;
  auto* sub_bounds = app.add_subcommand("bounds", "Construction size versus the GV bound");
  sub_bounds->add_option("--n", bnd.ns, "n, a list 5,6,9 or a range 5-9")->required();
  sub_bounds->add_option("--d", bnd.d)->required();
  sub_bounds->add_flag("--exact", bnd.exact, "Enumerate exact profiles");
  sub_bounds->add_flag("--bound", bnd.bound, "Use the binomial lower bound on the ball");
  sub_bounds->callback([&] { action = [&] { return cmd_bounds(g, bnd, out); }; });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  if (!action) {
    err << "error: no subcommand\n";
    return kExitUsage;
  }
  try {
    return action();
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << "\n";
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << "\n";
  }
  return kExitUsage;
}

}  // namespace permcodes::cli
