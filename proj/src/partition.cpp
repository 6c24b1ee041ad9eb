#include "klein/partition.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace klein {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
    if (i && parts_[i] > parts_[i - 1]) throw std::invalid_argument("partition parts must be weakly decreasing");
  }
  weight_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::from_multiplicities(const std::vector<int>& m) {
  std::vector<int> p;
  for (int i = static_cast<int>(m.size()); i >= 1; --i)
    for (int k = 0; k < m[i - 1]; ++k) p.push_back(i);
  return Partition(p);
}

Partition Partition::parse(const std::string& raw) {
  std::string s;
  for (char ch : raw)
    if (!std::isspace(static_cast<unsigned char>(ch)) || ch == ' ') s.push_back(ch);
  auto trim = [](std::string t) {
    while (!t.empty() && t.front() == ' ') t.erase(t.begin());
    while (!t.empty() && t.back() == ' ') t.pop_back();
    return t;
  };
  s = trim(s);
  if (s.find('^') != std::string::npos) {
    std::map<int, int> mult;
    std::istringstream is(s);
    std::string tok;
    while (is >> tok) {
      auto caret = tok.find('^');
      if (caret == std::string::npos) throw std::invalid_argument("malformed multiplicity token '" + tok + "'");
      int part = std::stoi(tok.substr(0, caret));
      int m = std::stoi(tok.substr(caret + 1));
      if (part <= 0 || m < 0) throw std::invalid_argument("malformed multiplicity token '" + tok + "'");
      mult[part] += m;
    }
    std::vector<int> p;
    for (auto it = mult.rbegin(); it != mult.rend(); ++it)
      for (int k = 0; k < it->second; ++k) p.push_back(it->first);
    return Partition(p);
  }
  if (!s.empty() && s.front() == '[') {
    if (s.back() != ']') throw std::invalid_argument("unbalanced brackets in '" + raw + "'");
    s = trim(s.substr(1, s.size() - 2));
  }
  std::vector<int> p;
  if (s.empty()) return Partition();
  std::istringstream is(s);
  std::string tok;
  while (std::getline(is, tok, ',')) {
    tok = trim(tok);
    if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
      throw std::invalid_argument("malformed partition '" + raw + "'");
    p.push_back(std::stoi(tok));
  }
  std::vector<int> sorted = p;
  std::sort(sorted.rbegin(), sorted.rend());
  if (sorted != p) throw std::invalid_argument("partition '" + raw + "' is not weakly decreasing");
  return Partition(p);
}

Partition Partition::gamma(int d) {
  if (d <= 1) return cycle(d);
  std::vector<int> p(d - 1, 1);
  p[0] = 2;
  return Partition(p);
}

Partition Partition::cycle(int d) { return d <= 0 ? Partition() : Partition(std::vector<int>{d}); }

Partition Partition::identity(int d) { return Partition(std::vector<int>(std::max(d, 0), 1)); }

Partition Partition::hook(int d, int r) {
  if (r < 0 || r >= d) throw std::domain_error("hook leg out of range");
  std::vector<int> p(r + 1, 1);
  p[0] = d - r;
  return Partition(p);
}

std::vector<int> Partition::multiplicities() const {
  std::vector<int> m(parts_.empty() ? 0 : parts_[0], 0);
  for (int x : parts_) ++m[x - 1];
  return m;
}

Partition Partition::conjugate() const {
  std::vector<int> c(parts_.empty() ? 0 : parts_[0], 0);
  for (int x : parts_)
    for (int j = 0; j < x; ++j) ++c[j];
  return Partition(c);
}

std::vector<int> Partition::contents() const {
  std::vector<int> c;
  c.reserve(weight_);
  for (int i = 0; i < length(); ++i)
    for (int j = 0; j < parts_[i]; ++j) c.push_back(j - i);
  return c;
}

int Partition::durfee() const {
  int k = 0;
  while (k < length() && parts_[k] > k) ++k;
  return k;
}

int Partition::arm(int i, int j) const { return parts_.at(i) - j - 1; }

int Partition::leg(int i, int j) const {
  int l = 0;
  for (int r = i + 1; r < length() && parts_[r] > j; ++r) ++l;
  return l;
}

int Partition::hook_length(int i, int j) const { return arm(i, j) + leg(i, j) + 1; }

Integer Partition::z() const {
  Integer r = 1;
  auto m = multiplicities();
  for (size_t i = 0; i < m.size(); ++i) {
    if (!m[i]) continue;
    Integer ip;
    mpz_ui_pow_ui(ip.get_mpz_t(), i + 1, m[i]);
    r *= ip * factorial(m[i]);
  }
  return r;
}

Integer Partition::class_size() const { return factorial(weight_) / z(); }

Integer Partition::aut() const {
  Integer r = 1;
  for (int x : multiplicities()) r *= factorial(x);
  return r;
}

bool Partition::dominates(const Partition& o) const {
  if (weight_ != o.weight_) return false;
  int a = 0, b = 0;
  for (int i = 0; i < std::max(length(), o.length()); ++i) {
    a += (*this)[i];
    b += o[i];
    if (a < b) return false;
  }
  return true;
}

std::string Partition::to_string() const {
  std::string s = "[";
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(parts_[i]);
  }
  return s + "]";
}

std::string Partition::to_multiplicity_string() const {
  auto m = multiplicities();
  std::string s;
  for (size_t i = 0; i < m.size(); ++i) {
    if (!m[i]) continue;
    if (!s.empty()) s += " ";
    s += std::to_string(i + 1) + "^" + std::to_string(m[i]);
  }
  return s;
}

FrobeniusCoords frobenius(const Partition& p) {
  FrobeniusCoords f;
  Partition c = p.conjugate();
  for (int i = 0; i < p.durfee(); ++i) {
    f.alphas.push_back(p[i] - i - 1);
    f.betas.push_back(c[i] - i - 1);
  }
  return f;
}

Partition from_frobenius(const FrobeniusCoords& f) {
  if (f.alphas.size() != f.betas.size()) throw std::invalid_argument("Frobenius coordinates of unequal length");
  for (size_t i = 1; i < f.alphas.size(); ++i)
    if (f.alphas[i] >= f.alphas[i - 1] || f.betas[i] >= f.betas[i - 1])
      throw std::invalid_argument("Frobenius coordinates must be strictly decreasing");
  int k = f.kappa();
  if (k == 0) return Partition();
  int rows = std::max(k, f.betas[0] + 1);
  std::vector<int> parts(rows, 0);
  for (int i = 0; i < k; ++i) {
    if (f.alphas[i] < 0 || f.betas[i] < 0) throw std::invalid_argument("negative Frobenius coordinate");
    parts[i] = f.alphas[i] + i + 1;
  }
  // below the diagonal the column lengths are β_j + j + 1
  for (int j = 0; j < k; ++j)
    for (int r = k; r < f.betas[j] + j + 1; ++r) parts[r] = std::max(parts[r], j + 1);
  return Partition(parts);
}

std::vector<Partition> partitions_of(int d, std::optional<int> max_length) {
  std::vector<Partition> out;
  if (d < 0) return out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int rest, int maxpart) {
    if (rest == 0) {
      out.emplace_back(cur);
      return;
    }
    if (max_length && static_cast<int>(cur.size()) >= *max_length) return;
    for (int k = std::min(rest, maxpart); k >= 1; --k) {
      cur.push_back(k);
      rec(rest - k, k);
      cur.pop_back();
    }
  };
  rec(d, d);
  return out;
}

std::vector<Partition> partitions_up_to(int d, std::optional<int> max_length) {
  std::vector<Partition> out;
  for (int k = 0; k <= d; ++k) {
    auto v = partitions_of(k, max_length);
    out.insert(out.end(), v.begin(), v.end());
  }
  return out;
}

bool graded_lex_before(const Partition& a, const Partition& b) {
  if (a.weight() != b.weight()) return a.weight() < b.weight();
  return a.parts() > b.parts();
}

}  // namespace klein
