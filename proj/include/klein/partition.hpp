#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "klein/rational.hpp"

namespace klein {

class Partition {
 public:
  Partition() = default;
  // Sorts nothing: throws unless parts are positive and weakly decreasing.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  static Partition from_multiplicities(const std::vector<int>& m);  // m[i] = multiplicity of part i+1
  // "[3,2,1]", "3,2,1", "1^1 2^1 3^1", "" or "[]" for the empty partition.
  static Partition parse(const std::string& s);
  // Γ for weight d: (2,1^{d-2}) when d ≥ 2, (d) otherwise.
  static Partition gamma(int d);
  static Partition cycle(int d);     // (d)
  static Partition identity(int d);  // (1^d)
  static Partition hook(int d, int r);  // (d-r, 1^r)

  const std::vector<int>& parts() const { return parts_; }
  int operator[](size_t i) const { return i < parts_.size() ? parts_[i] : 0; }
  int weight() const { return weight_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int colength() const { return weight_ - length(); }
  bool empty() const { return parts_.empty(); }

  std::vector<int> multiplicities() const;  // index i ↔ part i+1
  Partition conjugate() const;
  std::vector<int> contents() const;
  int durfee() const;  // κ(λ), main-diagonal length
  bool is_hook() const { return durfee() <= 1; }
  int hook_length(int i, int j) const;  // 0-based cell (i,j)
  int arm(int i, int j) const;
  int leg(int i, int j) const;

  Integer z() const;           // Π i^{m_i} m_i!
  Integer class_size() const;  // |λ|!/z
  Integer aut() const;         // Π m_i!

  bool dominates(const Partition& o) const;  // same weight, partial sums ≥
  std::string to_string() const;             // "[3,2,1]"
  std::string to_multiplicity_string() const;

  auto operator<=>(const Partition& o) const = default;
  bool operator==(const Partition& o) const = default;

 private:
  std::vector<int> parts_;
  int weight_ = 0;
};

struct FrobeniusCoords {
  std::vector<int> alphas;
  std::vector<int> betas;
  int kappa() const { return static_cast<int>(alphas.size()); }
  bool operator==(const FrobeniusCoords&) const = default;
};

FrobeniusCoords frobenius(const Partition& p);
Partition from_frobenius(const FrobeniusCoords& f);

// Graded-lexicographic order: (d), ..., (1^d).
std::vector<Partition> partitions_of(int d, std::optional<int> max_length = std::nullopt);
std::vector<Partition> partitions_up_to(int d, std::optional<int> max_length = std::nullopt);

// Stable, deterministic order for comparing two partitions of equal weight.
bool graded_lex_before(const Partition& a, const Partition& b);

}  // namespace klein
