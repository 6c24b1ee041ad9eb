#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "klein/partition.hpp"
#include "klein/poly.hpp"

namespace klein {

// A symmetric function as its power-sum expansion Σ c_Δ p_Δ.
using SymFunc = std::map<Partition, Rational>;

SymFunc operator+(const SymFunc& a, const SymFunc& b);
SymFunc operator-(const SymFunc& a, const SymFunc& b);
SymFunc operator*(const SymFunc& a, const SymFunc& b);
SymFunc operator*(const Rational& c, const SymFunc& a);
bool is_zero(const SymFunc& f);
SymFunc power_sum(const Partition& delta);

GradedPoly to_poly(const SymFunc& f, const RingPtr& ring, const std::string& prefix = "p");
// Inverse of to_poly; throws if f involves generators outside the family.
SymFunc from_poly(const GradedPoly& f, const std::string& prefix = "p");

SymFunc complete_h(int k);
SymFunc elementary_e(int k);
SymFunc schur_char_map(const Partition& lambda);
// det(h_{λ_i−i+j}) or det(e_{λ'_i−i+j}), whichever matrix is smaller.
SymFunc schur_jacobi_trudi(const Partition& lambda);
// Both routes; throws std::logic_error if they differ.  Cached.
SymFunc schur(const Partition& lambda);
SymFunc monomial(const Partition& lambda);

// ⟨p_λ, p_μ⟩ = δ z_λ Π w(λ_i).
using PartWeight = std::function<Rational(int)>;
Rational scalar_product(const SymFunc& f, const SymFunc& g, const PartWeight& w);
PartWeight hall_weight();
PartWeight macdonald_weight(const Rational& q, const Rational& t);
PartWeight jack_weight(const Rational& alpha);

enum class EliminationOrder { reverse_lex, by_n_lambda };
// Monic dominance-triangular orthogonal family in the monomial basis.  Entry i
// belongs to partitions_of(d)[i].  Throws std::domain_error on a null norm.
std::vector<SymFunc> gram_schmidt(int d, const PartWeight& w, EliminationOrder order = EliminationOrder::reverse_lex);

// Throws std::domain_error when q^k = 1 or t^k = 1 for some k ≤ |μ|.
SymFunc macdonald_P(const Partition& mu, const Rational& q, const Rational& t);
SymFunc macdonald_Q(const Partition& mu, const Rational& q, const Rational& t);
// Π over cells (1 − q^a t^{l+1})/(1 − q^{a+1} t^l); Q = b P.
Rational macdonald_b(const Partition& mu, const Rational& q, const Rational& t);
SymFunc hall_littlewood_P(const Partition& mu, const Rational& t);
SymFunc hall_littlewood_Q(const Partition& mu, const Rational& t);
// α > 0.
SymFunc jack_P(const Partition& mu, const Rational& alpha);
SymFunc jack_Q(const Partition& mu, const Rational& alpha);

struct Specialization {
  enum class Kind { qt, infinity, constant, custom } kind = Kind::infinity;
  Rational q, t, a;
  std::vector<Rational> values;  // custom: p_1, p_2, …

  static Specialization p_qt(const Rational& q, const Rational& t) { return {Kind::qt, q, t, 0, {}}; }
  static Specialization p_infinity() { return {Kind::infinity, 0, 0, 0, {}}; }
  static Specialization p_const(const Rational& a) { return {Kind::constant, 0, 0, a, {}}; }
  static Specialization custom_values(std::vector<Rational> v) { return {Kind::custom, 0, 0, 0, std::move(v)}; }

  // Throws std::domain_error on a pole or a missing custom value.
  Rational p(int m) const;
};

Rational specialize(const SymFunc& f, const Specialization& s);
// Substitute p_m ↦ images[m-1] inside a GradedPoly ring.
GradedPoly specialize(const SymFunc& f, const std::vector<GradedPoly>& images, const RingPtr& ring);

std::string to_string(const SymFunc& f);

}  // namespace klein
