#include "klein/characters.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>
#include <unordered_map>

namespace klein {

namespace {

struct KeyHash {
  size_t operator()(const std::vector<int>& v) const {
    size_t h = v.size();
    for (int x : v) h = h * 1000003u + static_cast<size_t>(x + 7);
    return h;
  }
};

// Memo keyed by (parts, remaining cycles) packed into one vector with a -1 separator.
using Memo = std::unordered_map<std::vector<int>, long, KeyHash>;

long mn(const std::vector<int>& parts, const std::vector<int>& cycles, size_t k, Memo& memo) {
  if (k == cycles.size()) return parts.empty() ? 1 : 0;
  std::vector<int> key = parts;
  key.push_back(-1);
  key.insert(key.end(), cycles.begin() + static_cast<long>(k), cycles.end());
  if (auto it = memo.find(key); it != memo.end()) return it->second;

  int c = cycles[k];
  int L = static_cast<int>(parts.size());
  std::vector<int> beta(L);
  for (int i = 0; i < L; ++i) beta[i] = parts[i] + L - 1 - i;
  long total = 0;
  for (int i = 0; i < L; ++i) {
    int b = beta[i], t = b - c;
    if (t < 0 || std::find(beta.begin(), beta.end(), t) != beta.end()) continue;
    int between = 0;
    for (int x : beta)
      if (x > t && x < b) ++between;
    std::vector<int> nb = beta;
    nb[i] = t;
    std::sort(nb.rbegin(), nb.rend());
    std::vector<int> np;
    for (int j = 0; j < L; ++j) {
      int part = nb[j] - (L - 1 - j);
      if (part > 0) np.push_back(part);
    }
    long v = mn(np, cycles, k + 1, memo);
    total += (between % 2) ? -v : v;
  }
  memo.emplace(std::move(key), total);
  return total;
}

}  // namespace

long character(const Partition& lambda, const Partition& delta) {
  if (lambda.weight() != delta.weight()) throw std::domain_error("character: weights of lambda and delta differ");
  thread_local Memo memo;
  if (memo.size() > 2000000) memo.clear();
  return mn(lambda.parts(), delta.parts(), 0, memo);
}

Integer dim(const Partition& lambda) {
  Integer h = 1;
  for (int i = 0; i < lambda.length(); ++i)
    for (int j = 0; j < lambda[i]; ++j) h *= lambda.hook_length(i, j);
  return factorial(lambda.weight()) / h;
}

CharTable::CharTable(int d, bool parallel) : d_(d), parts_(partitions_of(d)) {
  for (size_t i = 0; i < parts_.size(); ++i) pos_.emplace(parts_[i], i);
  size_t n = parts_.size();
  values_.assign(n * n, 0);
  long rows = static_cast<long>(n);
  if (parallel) {
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < rows; ++i)
      for (size_t j = 0; j < n; ++j) values_[i * n + j] = character(parts_[i], parts_[j]);
  } else {
    for (long i = 0; i < rows; ++i)
      for (size_t j = 0; j < n; ++j) values_[i * n + j] = character(parts_[i], parts_[j]);
  }
}

size_t CharTable::index(const Partition& p) const {
  auto it = pos_.find(p);
  if (it == pos_.end()) throw std::domain_error("partition " + p.to_string() + " has the wrong weight for this table");
  return it->second;
}

const CharTable& char_table(int d) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<CharTable>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[d];
  if (!slot) slot = std::make_unique<CharTable>(d);
  return *slot;
}

Rational phi(const Partition& lambda, const Partition& delta) {
  if (lambda.weight() != delta.weight()) return 0;
  const CharTable& t = char_table(lambda.weight());
  size_t l = t.index(lambda);
  Rational r(Integer(delta.class_size() * t(l, t.index(delta))), Integer(t.dim(l)));
  r.canonicalize();
  return r;
}

RingPtr power_sum_ring(int D, const std::string& prefix) {
  return RingBuilder().group("deg", D).family(prefix, D, "deg").build();
}

std::vector<int> family_indices(const RingPtr& ring, const std::string& prefix, int count) {
  std::vector<int> out;
  for (int m = 1; m <= count; ++m) {
    int i = ring->gens().find(prefix + std::to_string(m));
    if (i < 0) break;
    out.push_back(i);
  }
  return out;
}

GradedPoly p_delta(const RingPtr& ring, const Partition& delta, const std::string& prefix) {
  Exponents e(ring->ngens(), 0);
  for (int part : delta.parts()) e[ring->gen(prefix + std::to_string(part))] += 1;
  return GradedPoly::monomial(ring, e, 1);
}

GradedPoly char_map_schur(const RingPtr& ring, const Partition& lambda, const std::string& prefix) {
  int d = lambda.weight();
  GradedPoly s(ring);
  if (d == 0) return GradedPoly(ring, 1);
  Rational pref(dim(lambda), factorial(d));
  pref.canonicalize();
  for (const Partition& delta : partitions_of(d)) {
    Rational f = phi(lambda, delta);
    if (f != 0) s += p_delta(ring, delta, prefix) * (pref * f);
  }
  return s;
}

std::vector<std::pair<Partition, long>> pdelta_in_schur(const Partition& delta) {
  std::vector<std::pair<Partition, long>> out;
  const CharTable& t = char_table(delta.weight());
  size_t j = t.index(delta);
  for (size_t i = 0; i < t.partitions().size(); ++i)
    if (t(i, j)) out.emplace_back(t.partitions()[i], t(i, j));
  return out;
}

GradedPoly heat_operator_at_zero(const GradedPoly& f, const std::vector<int>& family) {
  auto apply_L = [&](const GradedPoly& g) {
    GradedPoly r(g.ring());
    for (size_t k = 0; k < family.size(); ++k) {
      int i = static_cast<int>(k) + 1;
      GradedPoly d1 = g.diff(family[k]);
      if (d1.is_zero()) continue;
      r += d1.diff(family[k]) * frac(i, 2);
      if (i % 2) r += d1;
    }
    return r;
  };
  GradedPoly total = f;
  GradedPoly term = f;
  for (unsigned k = 1; !term.is_zero(); ++k) {
    term = apply_L(term) * frac(1, k);
    total += term;
  }
  return total.filter([&](const Exponents& e) {
    for (int idx : family)
      if (e[idx]) return false;
    return true;
  });
}

ChiSum chi_sum_both(const Partition& delta) {
  ChiSum out;
  int d = delta.weight();
  out.direct = 0;
  for (const Partition& lambda : partitions_of(d)) out.direct += character(lambda, delta);
  RingPtr ring = power_sum_ring(std::max(d, 1));
  out.heat = heat_operator_at_zero(p_delta(ring, delta), family_indices(ring, "p", d)).constant_term();
  return out;
}

Rational chi_sum(const Partition& delta) {
  ChiSum c = chi_sum_both(delta);
  if (c.direct != c.heat)
    throw std::logic_error("chi_sum: character sum " + to_string(c.direct) + " disagrees with heat operator " +
                           to_string(c.heat));
  return c.direct;
}

Rational phi_on_d_cycle(const Partition& lambda) {
  int d = lambda.weight();
  if (d == 0 || lambda.durfee() != 1) return 0;
  Rational r(factorial(d), dim(lambda) * d);
  r.canonicalize();
  return (lambda.length() + 1) % 2 ? -r : r;
}

Integer zagier_chi(const Partition& delta, int r) {
  int d = delta.weight();
  if (r < 0 || r > d - 1) throw std::domain_error("zagier_chi: r must lie in [0, d-1]");
  // Π_i (1 − q^{d_i}) divided once by (1 − q): multiply the other factors by
  // (1 + q + … + q^{d_0 − 1}).
  std::vector<Integer> poly(d + 1, 0);
  poly[0] = 1;
  auto mul = [&](const std::vector<Integer>& f, const std::vector<Integer>& g) {
    std::vector<Integer> h(d + 1, 0);
    for (size_t i = 0; i < f.size(); ++i)
      for (size_t j = 0; j < g.size() && i + j <= static_cast<size_t>(d); ++j) h[i + j] += f[i] * g[j];
    return h;
  };
  const auto& parts = delta.parts();
  for (size_t i = 0; i < parts.size(); ++i) {
    std::vector<Integer> f(parts[i] + 1, 0);
    if (i == 0) {
      for (int k = 0; k < parts[i]; ++k) f[k] = 1;
    } else {
      f[0] = 1;
      f[parts[i]] = -1;
    }
    poly = mul(poly, f);
  }
  return r % 2 ? Integer(-poly[r]) : poly[r];
}

}  // namespace klein
