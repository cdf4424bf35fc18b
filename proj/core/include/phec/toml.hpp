// Minimal TOML subset: sections, arrays of tables, dotted keys, strings,
// integers, booleans, nested arrays, inline tables, # comments.
#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "phec/error.hpp"

namespace phec {

struct TomlValue {
  enum class Kind { Str, Int, Bool, Arr, Tab };
  Kind kind = Kind::Tab;  // fresh entries default to an empty table
  std::string s;
  std::int64_t i = 0;
  bool b = false;
  std::vector<TomlValue> arr;
  std::map<std::string, TomlValue> tab;

  bool has(const std::string& key) const;
  // dotted-path lookup from a table value
  const TomlValue& at(const std::string& path) const;
  std::string as_str() const;
  std::int64_t as_int() const;
  bool as_bool() const;
  std::vector<std::int64_t> as_ints() const;
  std::vector<std::vector<std::int64_t>> as_int_matrix() const;
  std::vector<std::string> as_strs() const;
};

TomlValue toml_parse(const std::string& text);
TomlValue toml_parse_file(const std::string& path);

}  // namespace phec
