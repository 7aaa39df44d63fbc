#include "hopfcyc/free_module.hpp"

#include <sstream>

namespace hopfcyc {

void add_scaled(Vec& dst, const Vec& src, const Rat& c) {
  if (c == 0) return;
  for (const auto& [k, v] : src) {
    auto it = dst.find(k);
    if (it == dst.end()) {
      Rat cv = c * v;
      if (cv != 0) dst.emplace(k, std::move(cv));
    } else {
      it->second += c * v;
      if (it->second == 0) dst.erase(it);
    }
  }
}

Vec scaled(const Vec& v, const Rat& c) {
  Vec out;
  add_scaled(out, v, c);
  return out;
}

Vec sum(const Vec& a, const Vec& b) {
  Vec out = a;
  add_scaled(out, b, Rat(1));
  return out;
}

Vec diff(const Vec& a, const Vec& b) {
  Vec out = a;
  add_scaled(out, b, Rat(-1));
  return out;
}

bool is_zero(const Vec& v) { return v.empty(); }

void set_coeff(Vec& v, const std::string& key, const Rat& c) {
  if (c == 0)
    v.erase(key);
  else
    v[key] = c;
}

Rat coeff(const Vec& v, const std::string& key) {
  auto it = v.find(key);
  return it == v.end() ? Rat(0) : it->second;
}

Vec unit_vec(const std::string& key) { return Vec{{key, Rat(1)}}; }

std::string vec_str(const Vec& v) {
  if (v.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : v) {
    if (!first) os << " + ";
    first = false;
    if (c == 1)
      os << k;
    else
      os << rat_str(c) << "*" << k;
  }
  return os.str();
}

std::string word_key(const std::vector<std::string>& parts) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += '|';
    out += parts[i];
  }
  return out;
}

std::vector<std::string> word_split(const std::string& key) {
  std::vector<std::string> parts;
  if (key.empty()) return parts;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= key.size(); ++i) {
    if (i == key.size() || key[i] == '|') {
      parts.push_back(key.substr(start, i - start));
      start = i + 1;
    }
  }
  return parts;
}

FreeModule::FreeModule(std::vector<std::string> basis) : basis_(std::move(basis)) {
  index_.reserve(basis_.size());
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    auto [it, fresh] = index_.emplace(basis_[i], i);
    (void)it;
    if (!fresh) throw ShapeError("duplicate basis identifier '" + basis_[i] + "'");
  }
}

std::size_t FreeModule::index(const std::string& key) const {
  auto it = index_.find(key);
  if (it == index_.end()) throw ShapeError("basis identifier '" + key + "' not in module");
  return it->second;
}

bool FreeModule::contains_vec(const Vec& v) const {
  for (const auto& [k, c] : v) {
    (void)c;
    if (!contains(k)) return false;
  }
  return true;
}

void FreeModule::validate_name(const std::string& name) {
  if (name.empty()) throw ShapeError("empty basis name");
  // '|' joins tensor words, '.' PBW words, '^' wedge words, '#' column tags.
  for (char c : name) {
    if (c == '|' || c == '#' || c == '.' || c == '^' ||
        std::isspace(static_cast<unsigned char>(c)))
      throw ShapeError("basis name '" + name + "' contains a reserved character");
  }
}

}  // namespace hopfcyc
