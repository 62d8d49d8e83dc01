#pragma once

#include <string>
#include <vector>

namespace ffgs {

struct CheckItem {
  std::string name;
  bool pass = false;
  std::string detail;  // first failing index, or extra info
};

struct CheckReport {
  std::vector<CheckItem> items;

  bool all_pass() const {
    for (const auto& it : items)
      if (!it.pass) return false;
    return true;
  }

  void add(std::string name, bool pass, std::string detail = "") {
    items.push_back({std::move(name), pass, std::move(detail)});
  }

  const CheckItem* find(const std::string& name) const {
    for (const auto& it : items)
      if (it.name == name) return &it;
    return nullptr;
  }

  std::string to_string() const {
    std::string out;
    for (const auto& it : items) {
      out += it.name;
      out += it.pass ? ": pass" : ": FAIL";
      if (!it.detail.empty()) {
        out += " ";
        out += it.detail;
      }
      out += "\n";
    }
    return out;
  }
};

}  // namespace ffgs
