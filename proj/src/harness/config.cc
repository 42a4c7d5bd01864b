// Copyright 2026 The zvlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "zvlab/harness/config.h"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

#include "zvlab/errors.h"

namespace zvlab::harness {
namespace {

std::string trim(std::string_view s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

nlohmann::json scalar(const std::string& token) {
  if (token == "true") return true;
  if (token == "false") return false;
  if (token.size() >= 2 && token.front() == '"' && token.back() == '"') return token.substr(1, token.size() - 2);
  std::int64_t i = 0;
  auto [pi, ei] = std::from_chars(token.data(), token.data() + token.size(), i);
  if (ei == std::errc() && pi == token.data() + token.size()) return i;
  double d = 0.0;
  auto [pd, ed] = std::from_chars(token.data(), token.data() + token.size(), d);
  if (ed == std::errc() && pd == token.data() + token.size()) return d;
  return token;
}

void merge_into(nlohmann::json& target, const nlohmann::json& patch, const std::string& path) {
  for (auto it = patch.begin(); it != patch.end(); ++it) {
    const std::string here = path.empty() ? it.key() : path + "." + it.key();
    if (!target.contains(it.key())) throw ParseError("unknown config key '" + here + "'");
    auto& slot = target[it.key()];
    if (slot.is_object() && it.value().is_object()) {
      merge_into(slot, it.value(), here);
    } else if (slot.is_object() != it.value().is_object()) {
      throw ParseError("config key '" + here + "' has the wrong shape");
    } else {
      slot = it.value();
    }
  }
}

void flatten(const nlohmann::json& j, const std::string& prefix, std::ostringstream& out) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    const std::string key = prefix.empty() ? it.key() : prefix + "." + it.key();
    if (it.value().is_object()) {
      flatten(it.value(), key, out);
      continue;
    }
    out << key << " = ";
    auto emit = [&](const nlohmann::json& v) {
      if (v.is_string()) {
        out << v.get<std::string>();
      } else {
        out << v.dump();
      }
    };
    if (it.value().is_array()) {
      for (std::size_t i = 0; i < it.value().size(); ++i) {
        if (i) out << ", ";
        emit(it.value()[i]);
      }
    } else {
      emit(it.value());
    }
    out << "\n";
  }
}

}  // namespace

nlohmann::json parse_config(const std::string& text, const std::string& origin) {
  const std::string head = trim(text);
  if (!head.empty() && head.front() == '{') {
    try {
      return nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
      throw ParseError(origin + ": " + e.what());
    }
  }
  nlohmann::json root = nlohmann::json::object();
  std::istringstream in(text);
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    const auto hash = line.find('#');
    const std::string body = trim(hash == std::string::npos ? line : line.substr(0, hash));
    if (body.empty()) continue;
    const auto eq = body.find('=');
    const std::string where = origin + ":" + std::to_string(number);
    if (eq == std::string::npos) throw ParseError(where + ": expected 'key = value'");
    const std::string key = trim(body.substr(0, eq));
    std::string value = trim(body.substr(eq + 1));
    if (key.empty()) throw ParseError(where + ": empty key");

    nlohmann::json parsed;
    bool bracketed = value.size() >= 2 && value.front() == '[' && value.back() == ']';
    if (bracketed) value = trim(value.substr(1, value.size() - 2));
    if (bracketed || value.find(',') != std::string::npos) {
      parsed = nlohmann::json::array();
      std::istringstream items(value);
      std::string item;
      while (std::getline(items, item, ',')) {
        const std::string t = trim(item);
        if (t.empty()) throw ParseError(where + ": empty list element");
        parsed.push_back(scalar(t));
      }
    } else {
      if (value.empty()) throw ParseError(where + ": missing value for '" + key + "'");
      parsed = scalar(value);
    }

    nlohmann::json* node = &root;
    std::istringstream parts(key);
    std::string part;
    std::vector<std::string> path;
    while (std::getline(parts, part, '.')) path.push_back(trim(part));
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
      if (path[i].empty()) throw ParseError(where + ": malformed key '" + key + "'");
      auto& child = (*node)[path[i]];
      if (child.is_null()) child = nlohmann::json::object();
      if (!child.is_object()) throw ParseError(where + ": '" + key + "' conflicts with an earlier scalar");
      node = &child;
    }
    if (path.back().empty()) throw ParseError(where + ": malformed key '" + key + "'");
    if (node->contains(path.back())) throw ParseError(where + ": duplicate key '" + key + "'");
    (*node)[path.back()] = parsed;
  }
  return root;
}

nlohmann::json load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open config file " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str(), path.string());
}

std::string to_key_value(const nlohmann::json& config) {
  std::ostringstream out;
  flatten(config, "", out);
  return out.str();
}

nlohmann::json resolve(const nlohmann::json& defaults, const nlohmann::json& overrides) {
  nlohmann::json out = defaults;
  if (overrides.is_null()) return out;
  if (!overrides.is_object()) throw ParseError("config must be a key-value map");
  merge_into(out, overrides, "");
  return out;
}

}  // namespace zvlab::harness
