#include "report.hpp"

namespace permcodes::cli {

Report::Report(std::string command) : command_(std::move(command)) {}

void Report::config(const std::string& key, nlohmann::ordered_json value) { config_[key] = std::move(value); }

void Report::result(const std::string& key, nlohmann::ordered_json value) { results_[key] = std::move(value); }

void Report::table(const std::string& key, nlohmann::ordered_json rows) { results_[key] = std::move(rows); }

namespace {

std::string scalar(const nlohmann::ordered_json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "-";
  if (v.is_array()) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) out += ' ';
      out += scalar(v[i]);
    }
    return out;
  }
  return v.dump();
}

}  // namespace

std::string Report::render(Format format) const {
  if (format == Format::structured) {
    nlohmann::ordered_json doc;
    doc["command"] = command_;
    doc["config"] = config_;
    doc["results"] = results_;
    return doc.dump(2) + "\n";
  }
  std::string out = "# command=" + command_ + "\n";
  for (const auto& [k, v] : config_.items()) out += "# " + k + "=" + scalar(v) + "\n";
  for (const auto& [k, v] : results_.items()) {
    const bool is_table = v.is_array() && !v.empty() && v.front().is_object();
    if (!is_table) {
      out += k + "=" + scalar(v) + "\n";
      continue;
    }
    out += "[" + k + "]\n";
    std::string header;
    for (const auto& [col, unused] : v.front().items()) header += (header.empty() ? "" : " ") + col;
    out += header + "\n";
    for (const auto& row : v) {
      std::string line;
      for (const auto& [col, cell] : row.items()) line += (line.empty() ? "" : " ") + scalar(cell);
      out += line + "\n";
    }
  }
  return out;
}

}  // namespace permcodes::cli
