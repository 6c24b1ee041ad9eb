#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "klein/contentprod.hpp"
#include "klein/partition.hpp"
#include "klein/poly.hpp"

namespace klein {

// r(x) as an element of the ring the tau series lives in.
using RFunction = std::function<GradedPoly(long x)>;

RFunction r_constant(const RingPtr& ring, const Rational& v = 1);
// Values outside the table raise std::domain_error naming x.
RFunction r_table(const RingPtr& ring, std::map<long, Rational> values);
// Parameter-ring weights recast into `ring` by generator name.
RFunction r_weight_I(const RingPtr& ring, WeightSpecI spec);
RFunction r_weight_II(const RingPtr& ring, WeightSpecII spec);
RFunction r_product(std::vector<RFunction> factors);

// Ring with group "deg" bounded by D holding prefix1..prefixD (weight m) for
// each prefix, followed by the groups and generators of `params`.
RingPtr tau_ring(int D, const std::vector<std::string>& prefixes, const RingPtr& params = nullptr);
std::vector<int> prefix_family(const RingPtr& ring, const std::string& prefix);

// Σ_{ℓ(λ)≤N, |λ|≤D} c^{|λ|} r_λ(n) s_λ(p), D the bound of the group of `prefix`.
// N < 0 gives 0; `c` multiplies per box (defaults to 1).
GradedPoly build_tau(const RingPtr& ring, int N, int n, const RFunction& r, const std::string& prefix = "p",
                     const std::optional<GradedPoly>& c = std::nullopt);
// Σ c^{|λ|} r_λ(n) s_λ(p) s_λ(p̄).
GradedPoly tau_2kp(const RingPtr& ring, int N, int n, const RFunction& r, const std::string& prefix,
                   const std::string& bar_prefix);
// exp(Σ (i/2)∂²/∂x_i² + Σ_{odd i} ∂/∂x_i) then x = 0, x the `prefix` family.
GradedPoly heat_reduce(const GradedPoly& f, const std::string& prefix);
// Σ_{ℓ(λ)≤N, |λ|≤D} c^{|λ|} r_λ(n) computed directly.
GradedPoly e0_direct(const RingPtr& ring, int N, int n, const RFunction& r, int D,
                     const std::optional<GradedPoly>& c = std::nullopt);

// exp(Σ c^{2m} p_m²/2m + Σ_{odd m} c^m p_m/m) truncated at the ring bound.
GradedPoly tau_one_closed_form(const RingPtr& ring, const std::string& prefix = "p");

struct HurwitzCoefficient {
  int d;
  Partition delta;
  GradedPoly value;  // coefficient of p_Δ, a polynomial in the remaining generators
  bool hurwitz;      // d ≤ N
};
std::vector<HurwitzCoefficient> extract_hurwitz(const GradedPoly& tau, int N, const std::string& prefix = "p");
GradedPoly coefficient_of_pdelta(const GradedPoly& f, const Partition& delta, const std::string& prefix = "p");

// g(n) from e^{U_x} with U_{x−1} − U_x = log r(x), U_0 = 0.
GradedPoly g_factor(int n, const RFunction& r, const RingPtr& ring);

// τ(N, n, ·) in the generator family `prefix`.
using TauFamily = std::function<GradedPoly(int N, int n, const std::string& prefix)>;
// g(n)·τ_r(N, n, ·), cached; `with_g` false drops g(n).
TauFamily hypergeometric_family(const RingPtr& ring, RFunction r, bool with_g = true);

// ĥ(n,t)·f = t^n res (dz/z) e^{Σ(t^i−1)z^i p_i/i} e^{−Σ(t^{−i}−1)z^{−i}∂_i} f,
// with t^k supplied by t_pow for k ∈ ℤ.
GradedPoly vertex_h(const GradedPoly& f, const std::string& prefix, int n, const std::function<GradedPoly(int)>& t_pow);
GradedPoly vertex_h(const GradedPoly& f, const std::string& prefix, int n, const Rational& t);
// n³ + Σ_{i,j} ((i+j) p_i p_j ∂_{i+j} + ij p_{i+j} ∂_i ∂_j).
GradedPoly cut_and_join(const GradedPoly& f, const std::string& prefix, int n = 0);
// Eigenvalue ratio of the cut-and-join operator to φ_λ(Γ) over |λ| ≤ max_d;
// empty when some s_λ is not an eigenvector or the ratio is not global.
std::optional<Rational> cut_and_join_kappa(int max_d);

enum class HirotaForm { corrected, printed };

// Left minus right side, truncated at weight K in "deg"; derivatives in t_m = p_m/m.
GradedPoly hirota_elementary_1(const TauFamily& tau, int N, int n, int K);
// Second equation, corrected form: ½(F∂₂G−∂₂F·G) + ½(F∂₁²G−∂₁²F·G)
// = ∂₁τ(N+1,n+2)·τ(N,n) − ∂₁τ(N+2,n+2)·τ(N−1,n), F = τ(N,n+1), G = τ(N+1,n+1).
GradedPoly hirota_elementary_2(const TauFamily& tau, int N, int n, int K, HirotaForm form = HirotaForm::corrected);
// Bilinear residue identities in p ("p") and p′ ("pp"); the corrected forms
// shift n by N′ − N in the primed taus.
GradedPoly hirota_full_1(const TauFamily& tau, int N, int Np, int n, int K, HirotaForm form = HirotaForm::corrected);
GradedPoly hirota_full_2(const TauFamily& tau, int N, int Np, int n, int K, HirotaForm form = HirotaForm::corrected);
// ∂/∂p′_m at p′ = p.
GradedPoly linear_term(const GradedPoly& residual, int m);
// Weight bound of "deg" needed by the residue identities at truncation K.
int hirota_degree(int N, int Np, int K);

// Π_{(i,j)∈λ} r(n + j − i).
GradedPoly content_product(const Partition& lambda, int n, const RFunction& r, const RingPtr& ring);

// Example weights; parameters are elements of `ring`.
// exp Σ (1/m) ζ_m h^m x^m.
RFunction r_example_I(const RingPtr& ring, const std::vector<GradedPoly>& zeta, const GradedPoly& h);
// Π_s (1 + h x/a_s)^{−n_s}, n_s rational.
RFunction r_example_Ia(const RingPtr& ring, const GradedPoly& h, const std::vector<Rational>& a,
                       const std::vector<Rational>& n);
// Π_s (A_s + x).
RFunction r_linear(const RingPtr& ring, const std::vector<GradedPoly>& A);
// w^x, and e^{x ξ₀} for a formal ξ₀.
RFunction r_example_IIa(const RingPtr& ring, const Rational& w);
RFunction r_example_IIa(const RingPtr& ring, const GradedPoly& xi0);
struct TrigPochhammer {
  Rational q, t;
  int n;
};
// Π_s (1 − q_s t_s^x)^{−n_s}.
RFunction r_example_IIb(const RingPtr& ring, const std::vector<TrigPochhammer>& factors);
// exp Σ_{k≥1} (1/k)(1−t^k)/(1−q^k) t^{kx} Σ_i y_i^k, k up to the bound of the y group.
RFunction r_example_IId(const RingPtr& ring, const Rational& q, const Rational& t, const std::vector<GradedPoly>& y);
// (a+x) Π_s (1−q_s t_s^x)/(1−e^{ε_s} t_s^x)(a_s+x) at ε = 0, with the pole at x = 0
// replaced by its ε⁻¹ coefficient a Π a_s (q_s − 1); valid for n = 0.
RFunction r_example_III(const RingPtr& ring, const std::vector<std::pair<Rational, Rational>>& qt, const GradedPoly& a,
                        const std::vector<GradedPoly>& as);

// Σ_{|μ|≤order} h^{|μ|} P_μ^{(α)}(x) Q_μ^{(α)}(Φ(λ)) with x_s = −1/a_s, as a series in h.
GradedPoly jack_cauchy_side(const Partition& lambda, const std::vector<Rational>& x, const Rational& alpha,
                            const GradedPoly& h, int order);
// Σ_{|μ|≤order} t^{n|μ|} P_μ^{q,t}(Y) Q_μ^{q,t}(T_{λ,t}).
GradedPoly macdonald_cauchy_side(const Partition& lambda, int n, const Rational& q, const Rational& t,
                                 const std::vector<GradedPoly>& y, int order);

// b!·[β^b Π u_i^{d−1} p_Δ] of the series with r(x) = e^{βx} Π_{i≤m} (1 + u_i x).
Rational tau_hurwitz_themselves(int b, int m, const Partition& delta);

}  // namespace klein
