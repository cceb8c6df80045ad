#include "permcodes/codebook.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace permcodes {

std::string_view to_string(Metric m) { return m == Metric::cyclic ? "cyclic" : "block"; }

Metric parse_metric(std::string_view s) {
  if (s == "cyclic") return Metric::cyclic;
  if (s == "block") return Metric::block;
  throw InvalidArgument("unknown metric '" + std::string(s) + "'");
}

Codebook::Codebook(Metric metric, int n, int claimed_min_distance, std::string label,
                   std::vector<Permutation> members)
    : metric_(metric), n_(n), claimed_d_(claimed_min_distance), label_(std::move(label)), members_(std::move(members)) {
  if (n_ < 1) throw InvalidArgument("codebook n must be >= 1");
  if (label_.find('\n') != std::string::npos) throw InvalidArgument("codebook label contains a newline");
  std::set<Permutation> seen;
  for (const auto& m : members_) {
    if (m.size() != n_) {
      throw InvalidArgument("member " + m.to_string() + " has length " + std::to_string(m.size()) +
                            ", expected " + std::to_string(n_));
    }
    if (metric_ == Metric::cyclic && m(1) != 1) {
      throw InvalidArgument("cyclic codebook member " + m.to_string() + " is not a canonical representative");
    }
    if (!seen.insert(m).second) throw InvalidArgument("duplicate codebook member " + m.to_string());
  }
}

Codebook Codebook::from_cosets(int n, int claimed_min_distance, std::string label,
                               const std::vector<CyclicCoset>& cosets) {
  std::vector<Permutation> members;
  members.reserve(cosets.size());
  for (const auto& c : cosets) members.push_back(c.canonical());
  return Codebook(Metric::cyclic, n, claimed_min_distance, std::move(label), std::move(members));
}

std::vector<CyclicCoset> Codebook::cosets() const {
  if (metric_ != Metric::cyclic) throw InvalidArgument("block-metric codebook has no coset view");
  std::vector<CyclicCoset> out;
  out.reserve(members_.size());
  for (const auto& m : members_) out.push_back(CyclicCoset::from_canonical(m));
  return out;
}

std::string Codebook::to_text() const {
  std::string out;
  out += "# metric=" + std::string(to_string(metric_)) + "\n";
  out += "# n=" + std::to_string(n_) + "\n";
  out += "# d=" + std::to_string(claimed_d_) + "\n";
  out += "# label=" + label_ + "\n";
  for (const auto& m : members_) out += m.to_string() + "\n";
  return out;
}

std::string Codebook::to_json() const {
  nlohmann::ordered_json j;
  j["metric"] = std::string(to_string(metric_));
  j["n"] = n_;
  j["d"] = claimed_d_;
  j["label"] = label_;
  auto members = nlohmann::ordered_json::array();
  for (const auto& m : members_) members.push_back(std::vector<int>(m.one_line().begin(), m.one_line().end()));
  j["members"] = std::move(members);
  return j.dump(1) + "\n";
}

namespace {

Codebook parse_json(const std::string& content) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(content);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("codebook JSON: ") + e.what(), e.byte);
  }
  try {
    std::vector<Permutation> members;
    for (const auto& row : j.at("members")) members.emplace_back(row.get<std::vector<int>>());
    return Codebook(parse_metric(j.at("metric").get<std::string>()), j.at("n").get<int>(), j.at("d").get<int>(),
                    j.at("label").get<std::string>(), std::move(members));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("codebook JSON: ") + e.what(), 1);
  }
}

std::string header_value(const std::string& line, const std::string& key, std::size_t line_no) {
  const std::string prefix = "# " + key + "=";
  if (line.rfind(prefix, 0) != 0) {
    throw ParseError("line " + std::to_string(line_no) + ": expected '" + prefix + "...'", line_no);
  }
  return line.substr(prefix.size());
}

int header_int(const std::string& line, const std::string& key, std::size_t line_no) {
  const auto v = header_value(line, key, line_no);
  std::size_t used = 0;
  int out = 0;
  try {
    out = std::stoi(v, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != v.size()) {
    throw ParseError("line " + std::to_string(line_no) + ": '" + key + "' is not an integer", line_no);
  }
  return out;
}

}  // namespace

Codebook Codebook::parse(const std::string& content) {
  const auto first = content.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && content[first] == '{') return parse_json(content);

  std::istringstream in(content);
  std::string line;
  std::size_t line_no = 0;
  auto next_line = [&](const char* what) {
    if (!std::getline(in, line)) throw ParseError(std::string("missing header: ") + what, line_no + 1);
    ++line_no;
  };
  next_line("metric");
  Metric metric;
  try {
    metric = parse_metric(header_value(line, "metric", line_no));
  } catch (const InvalidArgument& e) {
    throw ParseError("line 1: " + std::string(e.what()), 1);
  }
  next_line("n");
  const int n = header_int(line, "n", line_no);
  next_line("d");
  const int d = header_int(line, "d", line_no);
  next_line("label");
  std::string label = header_value(line, "label", line_no);

  std::vector<Permutation> members;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    try {
      members.push_back(Permutation::parse(line));
    } catch (const std::exception& e) {
      throw ParseError("line " + std::to_string(line_no) + ": " + e.what(), line_no);
    }
  }
  try {
    return Codebook(metric, n, d, std::move(label), std::move(members));
  } catch (const InvalidArgument& e) {
    throw ParseError(std::string("codebook: ") + e.what(), line_no);
  }
}

Codebook Codebook::read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidArgument("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

void Codebook::write_files(const std::filesystem::path& path) const {
  {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InvalidArgument("cannot write " + path.string());
    out << to_text();
  }
  std::ofstream json(path.string() + ".json", std::ios::binary);
  if (!json) throw InvalidArgument("cannot write " + path.string() + ".json");
  json << to_json();
}

}  // namespace permcodes
