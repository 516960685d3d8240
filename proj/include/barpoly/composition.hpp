#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace barpoly {

/// A vector in N^n, the index set for everything: exponents, shapes, game
/// positions. Length is the ambient dimension n and is fixed per value.
class Composition {
 public:
  Composition() = default;
  explicit Composition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int p : parts_)
      if (p < 0) throw std::invalid_argument("Composition: negative part");
  }
  Composition(std::initializer_list<int> parts) : Composition(std::vector<int>(parts)) {}

  static Composition zeros(int n) { return Composition(std::vector<int>(n, 0)); }

  int length() const { return static_cast<int>(parts_.size()); }
  /// |eta|, the sum of parts.
  int norm() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }
  bool is_zero() const { return norm() == 0; }

  /// 1-based row access.
  int operator[](int i) const { return parts_.at(i - 1); }
  int& operator[](int i) { return parts_.at(i - 1); }
  const std::vector<int>& parts() const { return parts_; }

  bool is_partition() const {
    return std::is_sorted(parts_.begin(), parts_.end(), std::greater<int>());
  }
  Composition sorted_decreasing() const {
    Composition out = *this;
    std::sort(out.parts_.begin(), out.parts_.end(), std::greater<int>());
    return out;
  }

  /// Swap parts i and i+1 (1-based).
  Composition s(int i) const {
    if (i < 1 || i >= length()) throw std::invalid_argument("Composition::s: index out of range");
    Composition out = *this;
    std::swap(out.parts_[i - 1], out.parts_[i]);
    return out;
  }

  /// Phi eta = (eta_2, ..., eta_n, eta_1 + 1).
  Composition phi() const {
    Composition out = *this;
    std::rotate(out.parts_.begin(), out.parts_.begin() + 1, out.parts_.end());
    out.parts_.back() += 1;
    return out;
  }

  /// Largest 1-based index with a nonzero part, 0 when eta = 0.
  int last_nonzero() const {
    for (int i = length(); i >= 1; --i)
      if ((*this)[i] != 0) return i;
    return 0;
  }

  friend bool operator==(const Composition& a, const Composition& b) {
    return a.parts_ == b.parts_;
  }
  friend bool operator!=(const Composition& a, const Composition& b) { return !(a == b); }
  friend bool operator<(const Composition& a, const Composition& b) {
    return a.parts_ < b.parts_;
  }

  std::string to_string() const {
    std::ostringstream os;
    for (int i = 0; i < length(); ++i) os << (i ? "," : "") << parts_[i];
    return os.str();
  }

  static Composition parse(const std::string& text) {
    std::vector<int> parts;
    std::string tok;
    std::istringstream is(text);
    while (std::getline(is, tok, ',')) {
      std::size_t pos = 0;
      int v;
      try {
        v = std::stoi(tok, &pos);
      } catch (const std::exception&) {
        throw std::invalid_argument("Composition: bad part '" + tok + "'");
      }
      if (pos != tok.size()) throw std::invalid_argument("Composition: bad part '" + tok + "'");
      if (v < 0) throw std::invalid_argument("Composition: negative part '" + tok + "'");
      parts.push_back(v);
    }
    if (parts.empty()) throw std::invalid_argument("Composition: empty text");
    return Composition(std::move(parts));
  }

 private:
  std::vector<int> parts_;
};

struct CompositionHash {
  std::size_t operator()(const Composition& c) const {
    std::size_t h = 0x9e3779b97f4a7c15ull ^ c.parts().size();
    for (int p : c.parts()) h = h * 1099511628211ull + static_cast<std::size_t>(p) + 0x9e37;
    return h;
  }
};

/// All compositions of length n with |gamma| <= max_norm, graded by norm and
/// lexicographically ascending within each grade.
inline std::vector<Composition> compositions_up_to(int n, int max_norm) {
  std::vector<Composition> out;
  std::vector<int> cur(n, 0);
  std::function<void(int, int)> rec = [&](int pos, int left) {
    if (pos == n - 1) {
      cur[pos] = left;
      out.emplace_back(cur);
      return;
    }
    for (int v = 0; v <= left; ++v) {
      cur[pos] = v;
      rec(pos + 1, left - v);
    }
  };
  for (int d = 0; d <= max_norm; ++d) {
    if (n == 0) break;
    rec(0, d);
  }
  return out;
}

}  // namespace barpoly
