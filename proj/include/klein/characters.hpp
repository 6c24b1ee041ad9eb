#pragma once

#include <map>
#include <memory>
#include <vector>

#include "klein/partition.hpp"
#include "klein/poly.hpp"

namespace klein {

// χ_λ(Δ) by Murnaghan–Nakayama on beta-sets.  Throws on weight mismatch.
long character(const Partition& lambda, const Partition& delta);
// Hook-length formula.
Integer dim(const Partition& lambda);

class CharTable {
 public:
  explicit CharTable(int d, bool parallel = true);

  int degree() const { return d_; }
  const std::vector<Partition>& partitions() const { return parts_; }
  size_t index(const Partition& p) const;
  long operator()(size_t lambda, size_t delta) const { return values_[lambda * parts_.size() + delta]; }
  long at(const Partition& lambda, const Partition& delta) const { return (*this)(index(lambda), index(delta)); }
  long dim(size_t lambda) const { return (*this)(lambda, parts_.size() - 1); }

 private:
  int d_;
  std::vector<Partition> parts_;
  std::map<Partition, size_t> pos_;
  std::vector<long> values_;
};

// Cached, immutable after first construction.
const CharTable& char_table(int d);

// |C_Δ| χ_λ(Δ)/dim λ; zero when the weights differ.
Rational phi(const Partition& lambda, const Partition& delta);

// Ring with generators p1..pD (weight m) in group "deg" bounded by D.
RingPtr power_sum_ring(int D, const std::string& prefix = "p");
std::vector<int> family_indices(const RingPtr& ring, const std::string& prefix, int count);
GradedPoly p_delta(const RingPtr& ring, const Partition& delta, const std::string& prefix = "p");

// s_λ = (dim λ/d!)(p₁^d + Σ_{Δ≠1^d} φ_λ(Δ) p_Δ).
GradedPoly char_map_schur(const RingPtr& ring, const Partition& lambda, const std::string& prefix = "p");
// p_Δ = Σ_λ χ_λ(Δ) s_λ.
std::vector<std::pair<Partition, long>> pdelta_in_schur(const Partition& delta);

// exp(Σ_i (i/2)∂²/∂p_i² + Σ_{odd i} ∂/∂p_i) applied to f, then p = 0 on `family`.
GradedPoly heat_operator_at_zero(const GradedPoly& f, const std::vector<int>& family);

struct ChiSum {
  Rational direct;
  Rational heat;
};
// Σ_λ χ_λ(Δ) evaluated both directly and through the heat operator.
ChiSum chi_sum_both(const Partition& delta);
Rational chi_sum(const Partition& delta);  // throws when the two routes disagree

// (−1)^{ℓ+1}(d!/dim λ)(1/d) δ_{κ(λ),1}.
Rational phi_on_d_cycle(const Partition& lambda);
// χ_r(Δ) read off from Π(1−q^{d_i})/(1−q) = Σ (−1)^r q^r χ_r(Δ).
Integer zagier_chi(const Partition& delta, int r);

}  // namespace klein
