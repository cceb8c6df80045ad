#pragma once

// A run report: an ordered config echo followed by ordered results. Text
// rendering prints "# key=value" config lines, "key=value" scalar results,
// and arrays of objects as whitespace-separated tables.

#include <string>

#include <json.hpp>

namespace permcodes::cli {

enum class Format { text, structured };

class Report {
 public:
  explicit Report(std::string command);

  void config(const std::string& key, nlohmann::ordered_json value);
  void result(const std::string& key, nlohmann::ordered_json value);
  /// Rows must be objects sharing the same keys.
  void table(const std::string& key, nlohmann::ordered_json rows);

  std::string render(Format format) const;

 private:
  std::string command_;
  nlohmann::ordered_json config_ = nlohmann::ordered_json::object();
  nlohmann::ordered_json results_ = nlohmann::ordered_json::object();
};

}  // namespace permcodes::cli
