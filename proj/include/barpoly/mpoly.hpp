#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "barpoly/rlaurent.hpp"

namespace barpoly {

/// Canonical term order: total x-degree descending, then exponent vector
/// lexicographically descending. Iterating a term map front-to-back yields
/// the canonical print order directly.
struct ExpOrder {
  bool operator()(const std::vector<int>& a, const std::vector<int>& b) const {
    int da = std::accumulate(a.begin(), a.end(), 0);
    int db = std::accumulate(b.begin(), b.end(), 0);
    if (da != db) return da > db;
    return a > b;
  }
};

/// Sparse multivariate polynomial in x_1..x_n over RLaurent. Values are
/// immutable in spirit: every operation returns a fresh canonical value (no
/// stored zero coefficients), so two polynomials are equal iff their term
/// maps are identical.
class MPoly {
 public:
  using TermMap = std::map<std::vector<int>, RLaurent, ExpOrder>;

  explicit MPoly(int n) : n_(n) {
    if (n < 0) throw std::invalid_argument("MPoly: negative dimension");
  }

  static MPoly zero(int n) { return MPoly(n); }
  static MPoly constant(int n, const RLaurent& c) {
    MPoly p(n);
    p.add_term(std::vector<int>(n, 0), c);
    return p;
  }
  static MPoly one(int n) { return constant(n, RLaurent(1)); }
  /// x_i, 1-based.
  static MPoly var(int n, int i) {
    MPoly p(n);
    std::vector<int> e(n, 0);
    p.check_var(i);
    e[i - 1] = 1;
    p.add_term(e, RLaurent(1));
    return p;
  }
  static MPoly monomial(int n, std::vector<int> exp, const RLaurent& c = RLaurent(1)) {
    MPoly p(n);
    p.add_term(std::move(exp), c);
    return p;
  }

  int n() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  /// Total degree; -1 for the zero polynomial.
  int total_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_)
      d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
    return d;
  }

  RLaurent coeff(const std::vector<int>& exp) const {
    auto it = terms_.find(exp);
    return it == terms_.end() ? RLaurent() : it->second;
  }

  void add_term(std::vector<int> exp, const RLaurent& c) {
    if (static_cast<int>(exp.size()) != n_)
      throw std::invalid_argument("MPoly: exponent vector length mismatch");
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.emplace(std::move(exp), c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  MPoly& operator+=(const MPoly& o) {
    check_dim(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  MPoly& operator-=(const MPoly& o) {
    check_dim(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator-(const MPoly& a) {
    MPoly out(a.n_);
    for (const auto& [e, c] : a.terms_) out.terms_.emplace(e, -c);
    return out;
  }
  friend MPoly operator*(const MPoly& a, const MPoly& b) {
    a.check_dim(b);
    MPoly out(a.n_);
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        std::vector<int> e(a.n_);
        for (int i = 0; i < a.n_; ++i) e[i] = ea[i] + eb[i];
        out.add_term(std::move(e), ca * cb);
      }
    }
    return out;
  }
  MPoly& operator*=(const MPoly& o) { return *this = *this * o; }

  friend MPoly operator*(const MPoly& a, const RLaurent& s) {
    MPoly out(a.n_);
    if (s.is_zero()) return out;
    for (const auto& [e, c] : a.terms_) out.terms_.emplace(e, c * s);
    return out;
  }
  friend MPoly operator*(const RLaurent& s, const MPoly& a) { return a * s; }

  friend bool operator==(const MPoly& a, const MPoly& b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const MPoly& a, const MPoly& b) { return !(a == b); }

  /// Exact substitution x_i := point[i-1].
  RLaurent eval(const std::vector<RLaurent>& point) const {
    if (static_cast<int>(point.size()) != n_)
      throw std::invalid_argument("MPoly::eval: point length mismatch");
    // power tables per coordinate
    std::vector<std::vector<RLaurent>> pows(n_);
    for (int i = 0; i < n_; ++i) pows[i].push_back(RLaurent(1));
    RLaurent out;
    for (const auto& [e, c] : terms_) {
      RLaurent t = c;
      for (int i = 0; i < n_; ++i) {
        auto& pi = pows[i];
        while (static_cast<int>(pi.size()) <= e[i]) pi.push_back(pi.back() * point[i]);
        if (e[i] > 0) t *= pi[e[i]];
      }
      out += t;
    }
    return out;
  }

  /// Exact quotient by (x_i - x_{i+1}); 1-based i < n. The remainder (the
  /// substitution x_i := x_{i+1}) must vanish.
  MPoly divide_exact_by_linear(int i) const {
    check_var(i);
    if (i >= n_) throw std::invalid_argument("divide_exact_by_linear: i out of range");
    MPoly quot(n_);
    MPoly rem(n_);
    for (const auto& [e, c] : terms_) {
      int k = e[i - 1];
      if (k == 0) {
        rem.add_term(e, c);
        continue;
      }
      // x_i^k * m  =  (x_i - x_{i+1}) * sum_{t<k} x_i^t x_{i+1}^{k-1-t} * m
      //               + x_{i+1}^k * m
      for (int t = 0; t < k; ++t) {
        std::vector<int> q = e;
        q[i - 1] = t;
        q[i] += k - 1 - t;
        quot.add_term(std::move(q), c);
      }
      std::vector<int> rexp = e;
      rexp[i - 1] = 0;
      rexp[i] += k;
      rem.add_term(std::move(rexp), c);
    }
    if (!rem.is_zero())
      throw InternalInvariantError("divide_exact_by_linear: nonzero remainder");
    return quot;
  }

  /// Relabel variables: old x_{i+1} becomes x_{perm[i]+1} (perm is 0-based).
  MPoly permute_vars(const std::vector<int>& perm) const {
    MPoly out(n_);
    for (const auto& [e, c] : terms_) {
      std::vector<int> ne(n_, 0);
      for (int i = 0; i < n_; ++i) ne[perm[i]] = e[i];
      out.add_term(std::move(ne), c);
    }
    return out;
  }

  std::string to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      std::string xs = exp_string(e);
      if (xs.empty()) {
        // constant term: inline the RLaurent; its internal " - " joins parse
        // identically at this level, so only the leading sign moves out
        std::string cs = c.to_string();
        if (first) {
          os << cs;
        } else if (cs[0] == '-') {
          os << " - " << cs.substr(1);
        } else {
          os << " + " << cs;
        }
        first = false;
        continue;
      }
      if (c.term_count() > 1) {
        os << (first ? "" : " + ") << "(" << c.to_string() << ")*" << xs;
        first = false;
        continue;
      }
      // single r-term coefficient: pull the sign to the join
      const auto& [re, rc] = *c.terms().begin();
      Rational mag = rc < 0 ? Rational(-rc) : rc;
      if (first) {
        if (rc < 0) os << "-";
        first = false;
      } else {
        os << (rc < 0 ? " - " : " + ");
      }
      if (re == 0) {
        if (mag != 1) os << rational_to_string(mag) << "*";
      } else {
        if (mag != 1) os << rational_to_string(mag) << "*";
        os << "r";
        if (re != 1) os << "^" << re;
        os << "*";
      }
      os << xs;
    }
    return os.str();
  }

  std::string to_latex() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      std::string xs = exp_latex(e);
      std::string cs;
      bool parens = c.term_count() > 1;
      if (xs.empty()) {
        cs = c.to_latex();
        if (first) os << cs;
        else if (cs[0] == '-') os << " - " << cs.substr(1);
        else os << " + " << cs;
      } else if (parens) {
        os << (first ? "" : " + ") << "(" << c.to_latex() << ")" << xs;
      } else {
        const auto& [re, rc] = *c.terms().begin();
        Rational mag = rc < 0 ? Rational(-rc) : rc;
        if (first) {
          if (rc < 0) os << "-";
        } else {
          os << (rc < 0 ? " - " : " + ");
        }
        if (re == 0) {
          if (mag != 1) os << rational_to_string(mag);
        } else {
          if (mag != 1) os << rational_to_string(mag);
          os << "r";
          if (re != 1) os << "^{" << re << "}";
        }
        os << xs;
      }
      first = false;
    }
    return os.str();
  }

 private:
  void check_dim(const MPoly& o) const {
    if (n_ != o.n_) throw std::invalid_argument("MPoly: dimension mismatch");
  }
  void check_var(int i) const {
    if (i < 1 || i > n_) throw std::invalid_argument("MPoly: variable index out of range");
  }
  static std::string exp_string(const std::vector<int>& e) {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!first) os << "*";
      os << "x" << (i + 1);
      if (e[i] != 1) os << "^" << e[i];
      first = false;
    }
    return os.str();
  }
  static std::string exp_latex(const std::vector<int>& e) {
    std::ostringstream os;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      os << "x_{" << (i + 1) << "}";
      if (e[i] != 1) os << "^{" << e[i] << "}";
    }
    return os.str();
  }

  int n_;
  TermMap terms_;
};

}  // namespace barpoly
