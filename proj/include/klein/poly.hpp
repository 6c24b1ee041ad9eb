#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "klein/rational.hpp"

namespace klein {

// Generators live in grading groups; every generator has a positive weight in
// its group and each group carries a truncation bound.
struct GeneratorSet {
  std::vector<std::string> names;
  std::vector<int> group;
  std::vector<int> weight;
  std::vector<std::string> group_names;

  int find(const std::string& name) const;  // -1 when absent
  int index(const std::string& name) const; // throws when absent
  int group_index(const std::string& g) const;
  size_t size() const { return names.size(); }
};

class Ring {
 public:
  Ring(GeneratorSet gens, std::vector<int> bounds);

  const GeneratorSet& gens() const { return gens_; }
  const std::vector<int>& bounds() const { return bounds_; }
  size_t ngens() const { return gens_.size(); }
  int gen(const std::string& name) const { return gens_.index(name); }
  int bound(const std::string& group) const { return bounds_[gens_.group_index(group)]; }

  bool fits(const std::vector<int>& e) const;
  int group_weight(const std::vector<int>& e, int g) const;

 private:
  GeneratorSet gens_;
  std::vector<int> bounds_;
};

using RingPtr = std::shared_ptr<const Ring>;

// Incremental construction of a ring: groups first, then generators.
class RingBuilder {
 public:
  RingBuilder& group(const std::string& name, int bound);
  RingBuilder& gen(const std::string& name, const std::string& group, int weight = 1);
  // name1..nameK with weight m for name_m when graded, 1 otherwise.
  RingBuilder& family(const std::string& prefix, int count, const std::string& group, bool graded = true);
  RingPtr build() const;

 private:
  GeneratorSet gs_;
  std::vector<int> bounds_;
};

using Exponents = std::vector<int>;

class GradedPoly {
 public:
  using Terms = std::map<Exponents, Rational>;

  GradedPoly() = default;
  explicit GradedPoly(RingPtr ring);
  GradedPoly(RingPtr ring, const Rational& c);

  static GradedPoly generator(RingPtr ring, int idx);
  static GradedPoly generator(RingPtr ring, const std::string& name);
  static GradedPoly monomial(RingPtr ring, const Exponents& e, const Rational& c);

  const RingPtr& ring() const { return ring_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t size() const { return terms_.size(); }
  Rational coeff(const Exponents& e) const;
  Rational constant_term() const;
  Exponents zero_exponents() const { return Exponents(ring_->ngens(), 0); }

  // Adds c·x^e, dropping it if it exceeds the truncation.
  void add_term(const Exponents& e, const Rational& c);

  GradedPoly& operator+=(const GradedPoly& o);
  GradedPoly& operator-=(const GradedPoly& o);
  GradedPoly& operator*=(const Rational& c);
  GradedPoly operator-() const;
  friend GradedPoly operator+(GradedPoly a, const GradedPoly& b) { return a += b; }
  friend GradedPoly operator-(GradedPoly a, const GradedPoly& b) { return a -= b; }
  friend GradedPoly operator*(GradedPoly a, const Rational& c) { return a *= c; }
  friend GradedPoly operator*(const Rational& c, GradedPoly a) { return a *= c; }
  friend GradedPoly operator*(const GradedPoly& a, const GradedPoly& b);
  bool operator==(const GradedPoly& o) const;
  bool operator!=(const GradedPoly& o) const { return !(*this == o); }

  GradedPoly pow(unsigned k) const;
  // Requires zero constant term.
  GradedPoly exp() const;
  // Requires zero constant term; log(1 + a).
  GradedPoly log1p() const;
  // Requires a nonzero constant term.
  GradedPoly inverse() const;

  GradedPoly diff(int idx) const;
  GradedPoly diff(const std::string& name) const { return diff(ring_->gen(name)); }

  // Replace generator i by images[i] (a polynomial in `target`); unset entries
  // map to the generator of the same name in `target`.
  GradedPoly substitute(const RingPtr& target, const std::vector<std::optional<GradedPoly>>& images) const;
  GradedPoly substitute(const std::map<std::string, GradedPoly>& images) const;
  GradedPoly substitute(const std::map<std::string, Rational>& values) const;
  // Same generator names, other ring; terms not fitting are dropped.
  GradedPoly recast(const RingPtr& target) const;

  GradedPoly filter(const std::function<bool(const Exponents&)>& keep) const;
  // Keep terms of total weight <= bound in group g.
  GradedPoly truncate_group(int g, int bound) const;
  // Part of exact weight w in group g.
  GradedPoly homogeneous(int g, int w) const;
  // Coefficient of x_idx^k as a polynomial in the remaining generators.
  GradedPoly coefficient_of(int idx, int k) const;
  GradedPoly coefficient_of(const Exponents& partial, const std::vector<int>& which) const;

  Rational evaluate(const std::vector<Rational>& point) const;
  std::string to_string() const;

 private:
  void check_same(const GradedPoly& o) const;
  RingPtr ring_;
  Terms terms_;
};

std::ostream& operator<<(std::ostream& os, const GradedPoly& p);

// Formal Laurent series in z with GradedPoly coefficients, kept on [lo, hi].
class LaurentZ {
 public:
  LaurentZ(RingPtr ring, int lo, int hi);

  int lo() const { return lo_; }
  int hi() const { return hi_; }
  const RingPtr& ring() const { return ring_; }
  const GradedPoly& at(int k) const;
  void set(int k, GradedPoly v);
  void add(int k, const GradedPoly& v);

  LaurentZ operator*(const LaurentZ& o) const;
  LaurentZ operator+(const LaurentZ& o) const;
  LaurentZ scaled(const Rational& c) const;
  // Multiply by z^k, dropping terms that leave the retained range.
  LaurentZ shifted(int k) const;
  LaurentZ d_dz() const;
  GradedPoly residue() const;

 private:
  RingPtr ring_;
  int lo_, hi_;
  std::vector<GradedPoly> c_;
};

// f(p ± [z^{-1}]) with p_k ↦ p_k ± z^{-k}, where p_k is generator family[k-1].
LaurentZ miwa_shift(const GradedPoly& f, const std::vector<int>& family, int sign, int lo);

// exp(Σ_m (a_m − b_m) z^m / m) on z-exponents [0, hi]; a, b are generator
// families (b may be empty).
LaurentZ exp_V(const RingPtr& ring, const std::vector<int>& a, const std::vector<int>& b, int hi);

}  // namespace klein
