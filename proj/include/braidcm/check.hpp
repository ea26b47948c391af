/**
 * @file check.hpp
 * @brief Named pass/fail records shared by every verification suite.
 */
#pragma once

#include "tensor.hpp"

#include <string>
#include <vector>

namespace braidcm {

/** \brief One verified equation: name, verdict and (on failure) where it broke. */
struct CheckItem {
  std::string name;
  bool pass = true;
  std::string detail;
};

/** \brief An ordered list of checks; passes iff every item passes. */
struct Report {
  std::vector<CheckItem> items;

  bool passed() const {
    for (const auto& i : items)
      if (!i.pass) return false;
    return true;
  }

  /** Records lhs == rhs as exact matrix equality. */
  bool expect_equal(const std::string& name, const Mor& lhs, const Mor& rhs) {
    std::string diff = describe_difference(lhs, rhs);
    items.push_back({name, diff.empty(), diff});
    return diff.empty();
  }

  void expect(const std::string& name, bool ok, const std::string& detail = "") {
    items.push_back({name, ok, ok ? "" : detail});
  }

  void append(const Report& other, const std::string& prefix = "") {
    for (const auto& i : other.items) items.push_back({prefix + i.name, i.pass, i.detail});
  }

  const CheckItem* first_failure() const {
    for (const auto& i : items)
      if (!i.pass) return &i;
    return nullptr;
  }
};

}  // namespace braidcm
