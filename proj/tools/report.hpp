#pragma once

// One self-describing document per CLI run: ordered "key: value" entries and
// row lists, rendered as text or JSON from the same data.

#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "json.hpp"

namespace thetalab::cli {

class Report {
 public:
  using Rows = std::vector<std::string>;

  explicit Report(std::string command) : command_(std::move(command)) {}

  void add(std::string key, std::string value) { entries_.emplace_back(std::move(key), std::move(value)); }
  void add(std::string key, const char* value) { add(std::move(key), std::string(value)); }
  void add(std::string key, bool value) { add(std::move(key), std::string(value ? "yes" : "no")); }
  template <class Int>
    requires std::is_integral_v<Int>
  void add(std::string key, Int value) {
    add(std::move(key), std::to_string(value));
  }
  void add_rows(std::string key, Rows rows) { entries_.emplace_back(std::move(key), std::move(rows)); }

  void set_exit_status(int s) noexcept { exit_status_ = s; }
  [[nodiscard]] int exit_status() const noexcept { return exit_status_; }

  [[nodiscard]] std::string text() const {
    std::string out = "command: " + command_ + "\n";
    for (const auto& [key, value] : entries_) {
      if (const auto* s = std::get_if<std::string>(&value)) {
        out += key + ": " + *s + "\n";
      } else {
        out += key + ":\n";
        for (const auto& row : std::get<Rows>(value)) out += "  " + row + "\n";
      }
    }
    out += "exit_status: " + std::to_string(exit_status_) + "\n";
    return out;
  }

  [[nodiscard]] std::string json() const {
    nlohmann::ordered_json j;
    j["command"] = command_;
    for (const auto& [key, value] : entries_) {
      if (const auto* s = std::get_if<std::string>(&value))
        j[key] = *s;
      else
        j[key] = std::get<Rows>(value);
    }
    j["exit_status"] = exit_status_;
    return j.dump(2) + "\n";
  }

 private:
  std::string command_;
  std::vector<std::pair<std::string, std::variant<std::string, Rows>>> entries_;
  int exit_status_ = 0;
};

}  // namespace thetalab::cli
