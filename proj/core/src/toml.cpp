#include "phec/toml.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace phec {

namespace {

struct Cursor {
  const std::string& t;
  size_t p = 0;
  int line = 1;

  bool eof() const { return p >= t.size(); }
  char peek() const { return eof() ? '\0' : t[p]; }
  char get() {
    char c = t[p++];
    if (c == '\n') ++line;
    return c;
  }
  [[noreturn]] void err(const std::string& what) const {
    fail(msg("toml parse error at line ", line, ": ", what));
  }
  void skip_ws_inline() {
    while (!eof() && (peek() == ' ' || peek() == '\t')) get();
  }
  // whitespace, newlines, comments
  void skip_ws_all() {
    while (!eof()) {
      char c = peek();
      if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
        get();
      } else if (c == '#') {
        while (!eof() && peek() != '\n') get();
      } else {
        break;
      }
    }
  }
};

bool is_bare(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-';
}

std::string parse_key_part(Cursor& c) {
  c.skip_ws_inline();
  if (c.peek() == '"') {
    c.get();
    std::string out;
    while (!c.eof() && c.peek() != '"') out.push_back(c.get());
    if (c.eof()) c.err("unterminated quoted key");
    c.get();
    return out;
  }
  std::string out;
  while (!c.eof() && is_bare(c.peek())) out.push_back(c.get());
  if (out.empty()) c.err("expected key");
  return out;
}

std::vector<std::string> parse_dotted_key(Cursor& c) {
  std::vector<std::string> parts{parse_key_part(c)};
  c.skip_ws_inline();
  while (c.peek() == '.') {
    c.get();
    parts.push_back(parse_key_part(c));
    c.skip_ws_inline();
  }
  return parts;
}

TomlValue parse_value(Cursor& c);

TomlValue parse_string(Cursor& c) {
  c.get();  // opening quote
  TomlValue v;
  v.kind = TomlValue::Kind::Str;
  while (!c.eof() && c.peek() != '"') {
    char ch = c.get();
    if (ch == '\\') {
      if (c.eof()) c.err("bad escape");
      char e = c.get();
      switch (e) {
        case 'n': v.s.push_back('\n'); break;
        case 't': v.s.push_back('\t'); break;
        case '"': v.s.push_back('"'); break;
        case '\\': v.s.push_back('\\'); break;
        default: c.err("unsupported escape");
      }
    } else if (ch == '\n') {
      c.err("newline in string");
    } else {
      v.s.push_back(ch);
    }
  }
  if (c.eof()) c.err("unterminated string");
  c.get();
  return v;
}

TomlValue parse_array(Cursor& c) {
  c.get();  // [
  TomlValue v;
  v.kind = TomlValue::Kind::Arr;
  c.skip_ws_all();
  while (c.peek() != ']') {
    v.arr.push_back(parse_value(c));
    c.skip_ws_all();
    if (c.peek() == ',') {
      c.get();
      c.skip_ws_all();
    } else if (c.peek() != ']') {
      c.err("expected ',' or ']' in array");
    }
  }
  c.get();
  return v;
}

TomlValue parse_inline_table(Cursor& c) {
  c.get();  // {
  TomlValue v;
  v.kind = TomlValue::Kind::Tab;
  c.skip_ws_inline();
  if (c.peek() == '}') {
    c.get();
    return v;
  }
  while (true) {
    std::string key = parse_key_part(c);
    c.skip_ws_inline();
    if (c.peek() != '=') c.err("expected '=' in inline table");
    c.get();
    c.skip_ws_inline();
    if (v.tab.count(key)) c.err(msg("duplicate key '", key, "'"));
    v.tab[key] = parse_value(c);
    c.skip_ws_inline();
    if (c.peek() == ',') {
      c.get();
      c.skip_ws_inline();
      continue;
    }
    if (c.peek() == '}') {
      c.get();
      return v;
    }
    c.err("expected ',' or '}' in inline table");
  }
}

TomlValue parse_value(Cursor& c) {
  c.skip_ws_inline();
  char ch = c.peek();
  if (ch == '"') return parse_string(c);
  if (ch == '[') return parse_array(c);
  if (ch == '{') return parse_inline_table(c);
  std::string tok;
  while (!c.eof() && (is_bare(c.peek()) || c.peek() == '+')) tok.push_back(c.get());
  if (tok == "true" || tok == "false") {
    TomlValue v;
    v.kind = TomlValue::Kind::Bool;
    v.b = (tok == "true");
    return v;
  }
  if (tok.empty()) c.err("expected value");
  try {
    size_t used = 0;
    std::int64_t n = std::stoll(tok, &used);
    if (used != tok.size()) c.err(msg("bad integer '", tok, "'"));
    TomlValue v;
    v.kind = TomlValue::Kind::Int;
    v.i = n;
    return v;
  } catch (const std::invalid_argument&) {
    c.err(msg("unsupported value '", tok, "'"));
  } catch (const std::out_of_range&) {
    c.err(msg("integer out of range '", tok, "'"));
  }
}

TomlValue* descend(TomlValue* root, const std::vector<std::string>& path, Cursor& c,
                   bool through_arrays) {
  TomlValue* cur = root;
  for (const auto& part : path) {
    if (cur->kind != TomlValue::Kind::Tab) c.err("key path collides with a value");
    TomlValue& next = cur->tab[part];
    if (next.kind == TomlValue::Kind::Arr && through_arrays && !next.arr.empty()) {
      cur = &next.arr.back();  // [[x]] then [x.y]: y lives in the last element
      continue;
    }
    cur = &next;
  }
  return cur;
}

}  // namespace

TomlValue toml_parse(const std::string& text) {
  TomlValue root;
  root.kind = TomlValue::Kind::Tab;
  Cursor c{text};
  TomlValue* section = &root;
  c.skip_ws_all();
  while (!c.eof()) {
    if (c.peek() == '[') {
      c.get();
      bool array_of_tables = (c.peek() == '[');
      if (array_of_tables) c.get();
      auto path = parse_dotted_key(c);
      c.skip_ws_inline();
      if (c.peek() != ']') c.err("expected ']'");
      c.get();
      if (array_of_tables) {
        if (c.peek() != ']') c.err("expected ']]'");
        c.get();
        std::vector<std::string> parent(path.begin(), path.end() - 1);
        TomlValue* holder = descend(&root, parent, c, true);
        TomlValue& slot = holder->tab[path.back()];
        if (slot.kind != TomlValue::Kind::Arr) {
          if (slot.kind != TomlValue::Kind::Tab || !slot.tab.empty())
            c.err("array-of-tables name already used");
          slot.kind = TomlValue::Kind::Arr;
          slot.arr.clear();
        }
        TomlValue fresh;
        fresh.kind = TomlValue::Kind::Tab;
        slot.arr.push_back(fresh);
        section = &slot.arr.back();
      } else {
        section = descend(&root, path, c, true);
        if (section->kind != TomlValue::Kind::Tab) c.err("section name already used");
      }
    } else {
      auto path = parse_dotted_key(c);
      c.skip_ws_inline();
      if (c.peek() != '=') c.err("expected '='");
      c.get();
      TomlValue val = parse_value(c);
      std::vector<std::string> parent(path.begin(), path.end() - 1);
      TomlValue* holder = descend(section, parent, c, false);
      if (holder->kind != TomlValue::Kind::Tab) c.err("key path collides with a value");
      if (holder->tab.count(path.back()))
        c.err(msg("duplicate key '", path.back(), "'"));
      holder->tab[path.back()] = std::move(val);
    }
    c.skip_ws_inline();
    if (!c.eof() && c.peek() == '#')
      while (!c.eof() && c.peek() != '\n') c.get();
    if (!c.eof() && c.peek() != '\n' && c.peek() != '\r') c.err("trailing characters");
    c.skip_ws_all();
  }
  return root;
}

TomlValue toml_parse_file(const std::string& path) {
  std::ifstream in(path);
  check(in.good(), msg("cannot open '", path, "'"));
  std::ostringstream ss;
  ss << in.rdbuf();
  return toml_parse(ss.str());
}

bool TomlValue::has(const std::string& key) const {
  check(kind == Kind::Tab, "has() on a non-table value");
  const TomlValue* cur = this;
  size_t start = 0;
  while (true) {
    size_t dot = key.find('.', start);
    std::string part = key.substr(start, dot == std::string::npos ? dot : dot - start);
    auto it = cur->tab.find(part);
    if (it == cur->tab.end()) return false;
    if (dot == std::string::npos) return true;
    if (it->second.kind != Kind::Tab) return false;
    cur = &it->second;
    start = dot + 1;
  }
}

const TomlValue& TomlValue::at(const std::string& path) const {
  check(kind == Kind::Tab, "at() on a non-table value");
  const TomlValue* cur = this;
  size_t start = 0;
  while (true) {
    size_t dot = path.find('.', start);
    std::string part = path.substr(start, dot == std::string::npos ? dot : dot - start);
    auto it = cur->tab.find(part);
    check(it != cur->tab.end(), msg("missing key '", path, "'"));
    if (dot == std::string::npos) return it->second;
    check(it->second.kind == Kind::Tab, msg("'", part, "' is not a table"));
    cur = &it->second;
    start = dot + 1;
  }
}

std::string TomlValue::as_str() const {
  check(kind == Kind::Str, "expected a string value");
  return s;
}

std::int64_t TomlValue::as_int() const {
  check(kind == Kind::Int, "expected an integer value");
  return i;
}

bool TomlValue::as_bool() const {
  check(kind == Kind::Bool, "expected a boolean value");
  return b;
}

std::vector<std::int64_t> TomlValue::as_ints() const {
  check(kind == Kind::Arr, "expected an array value");
  std::vector<std::int64_t> out;
  for (const auto& v : arr) out.push_back(v.as_int());
  return out;
}

std::vector<std::vector<std::int64_t>> TomlValue::as_int_matrix() const {
  check(kind == Kind::Arr, "expected an array value");
  std::vector<std::vector<std::int64_t>> out;
  for (const auto& v : arr) out.push_back(v.as_ints());
  return out;
}

std::vector<std::string> TomlValue::as_strs() const {
  check(kind == Kind::Arr, "expected an array value");
  std::vector<std::string> out;
  for (const auto& v : arr) out.push_back(v.as_str());
  return out;
}

}  // namespace phec
