#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "klein/partition.hpp"
#include "klein/poly.hpp"

namespace klein {

using Profiles = std::vector<Partition>;

// Throws std::invalid_argument naming the first profile whose weight is not d.
void check_profiles(int d, const Profiles& profiles);

// Σ_λ (dim λ/d!)^E Π φ_λ(Δ⁽ⁱ⁾).
Rational hurwitz_character(int E, int d, const Profiles& profiles, bool parallel = true);
// Riemann–Hurwitz: E′ = dE − Σ ℓ*(Δ⁽ⁱ⁾).
int euler_cover(int E, int d, const Profiles& profiles);

// Closed surface: `handles` handles when orientable, `handles` crosscaps otherwise.
struct Surface {
  bool orientable = true;
  int handles = 0;

  int euler() const { return orientable ? 2 - 2 * handles : 2 - handles; }
  static Surface sphere() { return {true, 0}; }
  static Surface projective_plane() { return {false, 1}; }
  static Surface torus() { return {true, 1}; }
  static Surface klein_bottle() { return {false, 2}; }
  // Nonorientable whenever E is odd; `orientable` chooses for even E ≤ 0.
  static Surface from_euler(int E, bool orientable);
};

struct OracleOptions {
  bool transitive = false;
  bool parallel = true;
  double max_iterations = 1e9;
  int max_orientable_degree = 4;  // for surfaces with handles
};

class ResourceError : public std::runtime_error {
 public:
  ResourceError(const std::string& what, double estimate) : std::runtime_error(what), estimate_(estimate) {}
  double estimate() const { return estimate_; }

 private:
  double estimate_;
};

struct OracleResult {
  Integer solutions;
  Rational value;  // solutions / d!
  double iterations = 0;
};

// Upper bound on the enumeration size for the query.
double oracle_cost(const Surface& s, int d, const Profiles& profiles);
// Counts tuples with W·X₁⋯X_F = 1, W = R₁²⋯R_k² or Π[A_i,B_i], X_i ∈ C_{Δ⁽ⁱ⁾}.
OracleResult monodromy_oracle(const Surface& s, int d, const Profiles& profiles, const OracleOptions& opt = {});

// Coefficients of c^d in exp(c²/2 + c), d ≤ max_d.
std::vector<Rational> unbranched_gf(int max_d);

// Σ_Δ (d!/|C_Δ|) H^{E+1,F+1}(A…, Δ) H^{E₁+1,F₁+1}(Δ, B…).
Rational compose(int E, int E1, int d, const Profiles& a, const Profiles& b);
// Σ_Δ H^{E,F+1}(…, Δ) χ(Δ), with χ(Δ) = Σ_λ χ_λ(Δ) through the heat operator.
Rational reduce_euler(int E, int d, const Profiles& profiles);

struct Comparison {
  Rational lhs, rhs;
  bool holds() const { return lhs == rhs; }
};
// H^{E−2g,F+1}(…, (d)) against d^{2g} H^{E,F+2g+1}(…, (d), (d)^{2g}).
Comparison d_cycle_reduction(int E, int d, const Profiles& others, int g);

Rational weighted_C(const Partition& mu, const Partition& delta);
Rational weighted_J(const Partition& mu, const Partition& delta, const Rational& alpha);
Rational weighted_S(const Partition& mu, const Partition& delta);
// Σ over Δ¹…Δᵏ with ℓ*(Δˢ) = μ_s of H^{1,k+1}(Δ¹,…,Δᵏ,Δ).
Rational weighted_S_by_profiles(const Partition& mu, const Partition& delta);
Rational weighted_K(const Partition& mu, const Partition& delta, const Rational& t);
Rational weighted_J_t(const Partition& mu, const Partition& delta, const Rational& alpha, const Rational& t);
Rational weighted_M(const Partition& mu, const Partition& delta, const Rational& q, const Rational& t);

using QTPairs = std::vector<std::pair<Rational, Rational>>;
// Σ φ_λ((d)) φ_λ(Δ) (dim λ/d!) Π s_λ(p(q_s,t_s))/s_λ(p_∞).
Rational F_sum(const Partition& delta, const QTPairs& qt);
// The same through ramification weights, with the factor ((1−q)/(1−t))^d per pair.
Rational F_sum_weights(const Partition& delta, const QTPairs& qt);

// exp(u² Σ p_m²/2m + u Σ_{odd m} p_m/m) in p1..p_D (weight m) and u = 1/h.
GradedPoly single_branch_point_series(int max_d);
// Coefficient of u^{ℓ(Δ)} p_Δ in the series above.
Rational single_branch_point(const Partition& delta);

}  // namespace klein
