#pragma once

#include <map>
#include <vector>

#include "klein/partition.hpp"
#include "klein/poly.hpp"

namespace klein {

// Σ φ_λ(Δ) over classes of colength k.  0 ≤ k ≤ d−1, else std::domain_error.
Rational phi_k(const Partition& lambda, int k);
// e_k of the contents.
Rational phi_k_contents(const Partition& lambda, int k);

Rational Phi_direct(const Partition& lambda, int m);
// m Σ_{|μ|=m} (−1)^{ℓ*(μ)} (ℓ(μ)−1)! φ_μ(λ)/Aut μ, with φ_k = 0 for k ≥ d.
Rational Phi_newton(const Partition& lambda, int m);
// Both routes; throws std::logic_error when they differ.
Rational Phi(const Partition& lambda, int m);
// The explicit character expansions of Φ₂ and Φ₃; classes that do not exist
// at the given weight contribute zero.
Rational Phi2_in_characters(const Partition& lambda);
Rational Phi3_in_characters(const Partition& lambda);

struct ContentPolynomial {
  // Coefficients of a^{d−k}, k = 0..d.
  std::vector<Rational> product;
  std::vector<Rational> characters;
  bool agree() const { return product == characters; }
};
ContentPolynomial content_poly_identity(const Partition& lambda);
// Π (a + j − i).
Rational content_poly_at(const Partition& lambda, const Rational& a);

// Σ t^{m(j−i)} by the direct sum, the row formula and the logarithmic
// derivative of s_λ at p(0,t^m).  Throws on a pole (t^m = 1 where needed).
Rational T_direct(const Partition& lambda, const Rational& t, int m = 1);
Rational T_rows(const Partition& lambda, const Rational& t, int m = 1);
Rational T_log_derivative(const Partition& lambda, const Rational& t, int m = 1);
// (d + Σ' m₁(Δ) A_Δ)/(1 + Σ' A_Δ).
Rational T_character_ratio(const Partition& lambda, const Rational& t);
// All three routes; throws std::logic_error on disagreement.
Rational T_lambda(const Partition& lambda, const Rational& t, int m = 1);
// Coefficients of ε^k, k ≤ order, in T_λ(1 + ε).
std::vector<Rational> T_series_at_one(const Partition& lambda, int order);
// (t d/dt)^m T_λ(t) at t = 1, computed on the ε-series.
Rational Phi_from_T(const Partition& lambda, int m);

// ((1−t)/(1−q))^d Π (1−q^{d_i})/(1−t^{d_i}).
Rational ramification_weight(const Partition& delta, const Rational& q, const Rational& t);
// w(Δ, e^{ah}, e^h) as a truncated series in the generator h of `ring`.
GradedPoly ramification_weight_series(const Partition& delta, const Rational& a, const RingPtr& ring);

// Π (1 − q t^{j−i})/(1 − q̃ t^{j−i}).
Rational content_ratio_direct(const Partition& lambda, const Rational& q, const Rational& qt, const Rational& t);
// s_λ(p(q,t))/s_λ(p(q̃,t)); std::domain_error names a vanishing denominator.
Rational content_ratio_schur(const Partition& lambda, const Rational& q, const Rational& qt, const Rational& t);
// ((1−q)/(1−q̃))^d (1 + Σ' φ w(Δ,q,t))/(1 + Σ' φ w(Δ,q̃,t)).
Rational content_ratio_weights(const Partition& lambda, const Rational& q, const Rational& qt, const Rational& t);
Rational content_ratio_qt(const Partition& lambda, const Rational& q, const Rational& qt, const Rational& t);

// r(x) = exp Σ_{m>0} (1/m) ζ_m h^m x^m.  All entries share one ring.
struct WeightSpecI {
  std::vector<GradedPoly> zeta;
  GradedPoly h;
  GradedPoly r(long x) const;
};
GradedPoly content_product_I_nodes(const Partition& lambda, const WeightSpecI& spec, int n);
// exp Σ (1/m) h^m ζ_m Σ_k C(m,k) n^{m−k} Φ_k(λ).
GradedPoly content_product_I_exp(const Partition& lambda, const WeightSpecI& spec, int n);
// Row telescoping through the triangle transform.
GradedPoly content_product_I_rows(const Partition& lambda, const WeightSpecI& spec, int n);
GradedPoly content_product_I(const Partition& lambda, const WeightSpecI& spec, int n);

// V(ζ,x) = V(p*,x−1) − V(p*,x); the result has one more entry than ζ.
std::vector<GradedPoly> triangle_transform_I(const std::vector<GradedPoly>& zeta);
std::vector<Rational> triangle_transform_I(const std::vector<Rational>& zeta);

// r(x) = exp(x·L + Σ_{m≠0} (1/m) ξ_m t^{mx}) where L stands for ξ₀ log t.
struct WeightSpecII {
  Rational t;
  GradedPoly L;
  std::map<int, GradedPoly> xi;  // keys m ≠ 0
  GradedPoly r(long x) const;
};
GradedPoly content_product_II_nodes(const Partition& lambda, const WeightSpecII& spec, int x);
// exp(L(φ_λ(Γ) + d x) + Σ (1/m) ξ_m t^{mx} T_λ(t^m)).
GradedPoly content_product_II_exp(const Partition& lambda, const WeightSpecII& spec, int x);
// Row form with p*_m = ξ_m t^m/(t^m − 1).
GradedPoly content_product_II_rows(const Partition& lambda, const WeightSpecII& spec, int x);
GradedPoly content_product_II(const Partition& lambda, const WeightSpecII& spec, int x);

// p*_m = ξ_m t^m/(t^m − 1); std::domain_error when t^m = 1.
std::map<int, Rational> triangle_transform_II(const std::map<int, Rational>& xi, const Rational& t);

}  // namespace klein
