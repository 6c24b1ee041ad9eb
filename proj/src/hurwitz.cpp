#include "klein/hurwitz.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>

#include "klein/characters.hpp"
#include "klein/contentprod.hpp"
#include "klein/symfun.hpp"

namespace klein {

void check_profiles(int d, const Profiles& profiles) {
  if (d < 0) throw std::invalid_argument("negative degree " + std::to_string(d));
  for (size_t i = 0; i < profiles.size(); ++i)
    if (profiles[i].weight() != d)
      throw std::invalid_argument("profile " + std::to_string(i + 1) + " " + profiles[i].to_string() + " has weight " +
                                  std::to_string(profiles[i].weight()) + ", expected " + std::to_string(d));
}

Rational hurwitz_character(int E, int d, const Profiles& profiles, bool parallel) {
  check_profiles(d, profiles);
  const CharTable& table = char_table(d);
  const auto& parts = table.partitions();
  std::vector<size_t> cols;
  std::vector<Rational> sizes;
  for (const auto& p : profiles) {
    cols.push_back(table.index(p));
    sizes.emplace_back(p.class_size());
  }
  Rational fact(factorial(d));
  std::vector<Rational> terms(parts.size());
  auto term = [&](size_t l) {
    Rational dl(table.dim(l));
    Rational t = pow(dl / fact, E);
    for (size_t i = 0; i < cols.size(); ++i) {
      long chi = table(l, cols[i]);
      if (chi == 0) return Rational(0);
      t *= sizes[i] * chi / dl;
    }
    return t;
  };
  const long n = static_cast<long>(parts.size());
#pragma omp parallel for schedule(dynamic) if (parallel)
  for (long l = 0; l < n; ++l) terms[l] = term(l);
  Rational sum = 0;
  for (const auto& t : terms) sum += t;
  return sum;
}

int euler_cover(int E, int d, const Profiles& profiles) {
  check_profiles(d, profiles);
  int e = d * E;
  for (const auto& p : profiles) e -= p.colength();
  return e;
}

Surface Surface::from_euler(int E, bool orientable) {
  if (E > 2) throw std::invalid_argument("Euler characteristic " + std::to_string(E) + " exceeds 2");
  if (E == 2) return sphere();
  if ((E % 2 != 0) || !orientable) return {false, 2 - E};
  return {true, (2 - E) / 2};
}

namespace {

constexpr int kMaxOracleDegree = 10;
using Perm = std::array<uint8_t, kMaxOracleDegree>;

struct Sym {
  int d;
  std::vector<Perm> all;

  explicit Sym(int deg) : d(deg) {
    Perm p{};
    std::iota(p.begin(), p.begin() + d, 0);
    do all.push_back(p);
    while (std::next_permutation(p.begin(), p.begin() + d));
  }
  Perm id() const { return all.front(); }
  // (a·b)(i) = a(b(i))
  Perm mul(const Perm& a, const Perm& b) const {
    Perm r{};
    for (int i = 0; i < d; ++i) r[i] = a[b[i]];
    return r;
  }
  Perm inv(const Perm& a) const {
    Perm r{};
    for (int i = 0; i < d; ++i) r[a[i]] = static_cast<uint8_t>(i);
    return r;
  }
  std::vector<int> type(const Perm& a) const {
    std::array<bool, kMaxOracleDegree> seen{};
    std::vector<int> lens;
    for (int i = 0; i < d; ++i) {
      if (seen[i]) continue;
      int len = 0;
      for (int j = i; !seen[j]; j = a[j]) {
        seen[j] = true;
        ++len;
      }
      lens.push_back(len);
    }
    std::sort(lens.rbegin(), lens.rend());
    return lens;
  }
};

enum class BlockKind { crosscap, handle, cls };

struct Block {
  BlockKind kind;
  std::vector<Perm> members;  // for cls
};

struct Enumerator {
  const Sym& S;
  std::vector<Block> blocks;
  std::vector<int> final_type;  // empty: the product must be the identity
  bool has_final = false;
  bool transitive = false;

  size_t options(size_t b) const {
    switch (blocks[b].kind) {
      case BlockKind::crosscap: return S.all.size();
      case BlockKind::handle: return S.all.size() * S.all.size();
      case BlockKind::cls: return blocks[b].members.size();
    }
    return 0;
  }

  Perm apply(size_t b, size_t k, const Perm& acc, std::vector<Perm>& gens) const {
    switch (blocks[b].kind) {
      case BlockKind::crosscap: {
        const Perm& r = S.all[k];
        gens.push_back(r);
        return S.mul(acc, S.mul(r, r));
      }
      case BlockKind::handle: {
        const Perm& a = S.all[k / S.all.size()];
        const Perm& c = S.all[k % S.all.size()];
        gens.push_back(a);
        gens.push_back(c);
        return S.mul(acc, S.mul(S.mul(a, c), S.mul(S.inv(a), S.inv(c))));
      }
      case BlockKind::cls: {
        const Perm& x = blocks[b].members[k];
        gens.push_back(x);
        return S.mul(acc, x);
      }
    }
    return acc;
  }

  bool connected(const std::vector<Perm>& gens) const {
    std::array<int, kMaxOracleDegree> parent{};
    std::iota(parent.begin(), parent.begin() + S.d, 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    int comps = S.d;
    for (const auto& g : gens)
      for (int i = 0; i < S.d; ++i) {
        int a = find(i), b = find(g[i]);
        if (a != b) {
          parent[a] = b;
          --comps;
        }
      }
    return comps == 1;
  }

  bool leaf(const Perm& acc, std::vector<Perm>& gens) const {
    if (has_final) {
      if (S.type(acc) != final_type) return false;
    } else if (acc != S.id()) {
      return false;
    }
    if (!transitive || S.d <= 1) return true;
    if (has_final) gens.push_back(S.inv(acc));
    bool ok = connected(gens);
    if (has_final) gens.pop_back();
    return ok;
  }

  unsigned long long count(size_t b, const Perm& acc, std::vector<Perm>& gens) const {
    if (b == blocks.size()) return leaf(acc, gens) ? 1 : 0;
    unsigned long long n = 0;
    const size_t m = options(b);
    for (size_t k = 0; k < m; ++k) {
      size_t mark = gens.size();
      Perm next = apply(b, k, acc, gens);
      n += count(b + 1, next, gens);
      gens.resize(mark);
    }
    return n;
  }

  unsigned long long run(bool parallel) const {
    std::vector<Perm> gens;
    if (blocks.empty()) return leaf(S.id(), gens) ? 1 : 0;
    const long m = static_cast<long>(options(0));
    unsigned long long total = 0;
#pragma omp parallel for schedule(dynamic) reduction(+ : total) if (parallel)
    for (long k = 0; k < m; ++k) {
      std::vector<Perm> local;
      Perm next = apply(0, static_cast<size_t>(k), S.id(), local);
      total += count(1, next, local);
    }
    return total;
  }
};

std::vector<Perm> class_members(const Sym& S, const Partition& p) {
  std::vector<Perm> out;
  for (const auto& g : S.all)
    if (S.type(g) == p.parts()) out.push_back(g);
  return out;
}

}  // namespace

double oracle_cost(const Surface& s, int d, const Profiles& profiles) {
  check_profiles(d, profiles);
  double n = std::tgamma(d + 1.0);
  double cost = std::pow(n, s.orientable ? 2.0 * s.handles : s.handles);
  for (size_t i = 0; i + 1 < profiles.size(); ++i) cost *= profiles[i].class_size().get_d();
  return cost;
}

OracleResult monodromy_oracle(const Surface& s, int d, const Profiles& profiles, const OracleOptions& opt) {
  check_profiles(d, profiles);
  if (s.handles < 0) throw std::invalid_argument("negative handle count");
  if (d > kMaxOracleDegree)
    throw ResourceError("degree " + std::to_string(d) + " exceeds the oracle limit " + std::to_string(kMaxOracleDegree),
                        oracle_cost(s, d, profiles));
  if (s.orientable && s.handles > 0 && d > opt.max_orientable_degree)
    throw ResourceError("orientable surfaces with handles are limited to d <= " +
                            std::to_string(opt.max_orientable_degree),
                        oracle_cost(s, d, profiles));
  double cost = oracle_cost(s, d, profiles);
  if (cost > opt.max_iterations)
    throw ResourceError("estimated " + std::to_string(cost) + " iterations exceed the limit", cost);

  Sym S(d);
  Enumerator en{S, {}, {}, false, opt.transitive};
  for (int i = 0; i < s.handles; ++i) en.blocks.push_back({s.orientable ? BlockKind::handle : BlockKind::crosscap, {}});
  for (size_t i = 0; i + 1 < profiles.size(); ++i) en.blocks.push_back({BlockKind::cls, class_members(S, profiles[i])});
  if (!profiles.empty()) {
    en.has_final = true;
    en.final_type = profiles.back().parts();
  }
  OracleResult r;
  r.solutions = Integer(std::to_string(en.run(opt.parallel)));
  r.value = Rational(r.solutions) / Rational(factorial(d));
  r.iterations = cost;
  return r;
}

std::vector<Rational> unbranched_gf(int max_d) {
  auto ring = RingBuilder().group("c", max_d).gen("c", "c").build();
  GradedPoly c = GradedPoly::generator(ring, "c");
  GradedPoly f = (c + c * c * frac(1, 2)).exp();
  std::vector<Rational> out;
  for (int k = 0; k <= max_d; ++k) out.push_back(f.coeff({k}));
  return out;
}

Rational compose(int E, int E1, int d, const Profiles& a, const Profiles& b) {
  check_profiles(d, a);
  check_profiles(d, b);
  Rational sum = 0;
  for (const auto& delta : partitions_of(d)) {
    Profiles left = a, right{delta};
    left.push_back(delta);
    right.insert(right.end(), b.begin(), b.end());
    Rational x = hurwitz_character(E + 1, d, left);
    if (x == 0) continue;
    sum += Rational(delta.z()) * x * hurwitz_character(E1 + 1, d, right);
  }
  return sum;
}

Rational reduce_euler(int E, int d, const Profiles& profiles) {
  check_profiles(d, profiles);
  Rational sum = 0;
  for (const auto& delta : partitions_of(d)) {
    Profiles p = profiles;
    p.push_back(delta);
    sum += hurwitz_character(E, d, p) * chi_sum(delta);
  }
  return sum;
}

Comparison d_cycle_reduction(int E, int d, const Profiles& others, int g) {
  if (g < 0) throw std::invalid_argument("negative genus");
  Profiles lhs = others, rhs = others;
  lhs.push_back(Partition::cycle(d));
  for (int i = 0; i <= 2 * g; ++i) rhs.push_back(Partition::cycle(d));
  return {hurwitz_character(E - 2 * g, d, lhs), pow(Rational(d), 2 * g) * hurwitz_character(E, d, rhs)};
}

namespace {

template <class F>
Rational weighted_sum(const Partition& delta, F&& weight) {
  const int d = delta.weight();
  Rational fact(factorial(d)), sum = 0;
  for (const auto& l : partitions_of(d)) {
    Rational f = phi(l, delta);
    if (f == 0) continue;
    Rational w = weight(l);
    if (w == 0) continue;
    sum += w * f * Rational(dim(l)) / fact;
  }
  return sum;
}

Specialization values(int n, const std::function<Rational(int)>& p) {
  std::vector<Rational> v;
  for (int m = 1; m <= n; ++m) v.push_back(p(m));
  return Specialization::custom_values(std::move(v));
}

}  // namespace

Rational weighted_C(const Partition& mu, const Partition& delta) {
  return weighted_sum(delta, [&](const Partition& l) -> Rational {
    Rational w = 1;
    for (int m : mu.parts()) w *= Phi_direct(l, m);
    return w;
  });
}

Rational weighted_J(const Partition& mu, const Partition& delta, const Rational& alpha) {
  SymFunc Q = jack_Q(mu, alpha);
  return weighted_sum(delta, [&](const Partition& l) -> Rational {
    return specialize(Q, values(mu.weight(), [&](int m) -> Rational { return Phi_direct(l, m); }));
  });
}

Rational weighted_S(const Partition& mu, const Partition& delta) {
  const int d = delta.weight();
  return weighted_sum(delta, [&](const Partition& l) -> Rational {
    Rational w = 1;
    for (int m : mu.parts()) {
      if (m > d - 1) return 0;
      w *= phi_k(l, m);
    }
    return w;
  });
}

Rational weighted_S_by_profiles(const Partition& mu, const Partition& delta) {
  const int d = delta.weight();
  std::vector<std::vector<Partition>> choices;
  for (int m : mu.parts()) {
    std::vector<Partition> c;
    for (const auto& p : partitions_of(d))
      if (p.colength() == m) c.push_back(p);
    if (c.empty()) return 0;
    choices.push_back(std::move(c));
  }
  std::vector<size_t> idx(choices.size(), 0);
  Rational sum = 0;
  for (;;) {
    Profiles prof;
    for (size_t s = 0; s < choices.size(); ++s) prof.push_back(choices[s][idx[s]]);
    prof.push_back(delta);
    sum += hurwitz_character(1, d, prof);
    size_t s = 0;
    while (s < idx.size() && ++idx[s] == choices[s].size()) idx[s++] = 0;
    if (s == idx.size()) break;
  }
  return sum;
}

Rational weighted_K(const Partition& mu, const Partition& delta, const Rational& t) {
  return weighted_sum(delta, [&](const Partition& l) -> Rational {
    Rational w = 1;
    for (int m : mu.parts()) w *= T_direct(l, t, m);
    return w;
  });
}

Rational weighted_J_t(const Partition& mu, const Partition& delta, const Rational& alpha, const Rational& t) {
  SymFunc Q = jack_Q(mu, alpha);
  return weighted_sum(delta, [&](const Partition& l) -> Rational {
    return specialize(Q, values(mu.weight(), [&](int m) -> Rational { return T_direct(l, t, m); }));
  });
}

Rational weighted_M(const Partition& mu, const Partition& delta, const Rational& q, const Rational& t) {
  SymFunc Q = macdonald_Q(mu, q, t);
  return weighted_sum(delta, [&](const Partition& l) -> Rational {
    return specialize(Q, values(mu.weight(), [&](int m) -> Rational { return T_direct(l, t, m); }));
  });
}

Rational F_sum(const Partition& delta, const QTPairs& qt) {
  const int d = delta.weight();
  Partition cyc = Partition::cycle(d);
  return weighted_sum(delta, [&](const Partition& l) -> Rational {
    Rational w = phi(l, cyc);
    if (w == 0) return 0;
    Rational s_inf = specialize(schur(l), Specialization::p_infinity());
    for (const auto& [q, t] : qt) w *= specialize(schur(l), Specialization::p_qt(q, t)) / s_inf;
    return w;
  });
}

Rational F_sum_weights(const Partition& delta, const QTPairs& qt) {
  const int d = delta.weight();
  Partition cyc = Partition::cycle(d), one = Partition::identity(d);
  return weighted_sum(delta, [&](const Partition& l) -> Rational {
    Rational w = phi(l, cyc);
    if (w == 0) return 0;
    for (const auto& [q, t] : qt) {
      Rational s = 1;
      for (const auto& mu : partitions_of(d))
        if (mu != one) s += phi(l, mu) * ramification_weight(mu, q, t);
      w *= pow(Rational((1 - q) / (1 - t)), d) * s;
    }
    return w;
  });
}

GradedPoly single_branch_point_series(int max_d) {
  auto ring = RingBuilder().group("deg", max_d).family("p", max_d, "deg").group("u", max_d).gen("u", "u").build();
  GradedPoly u = GradedPoly::generator(ring, "u"), x(ring);
  for (int m = 1; m <= max_d; ++m) {
    GradedPoly p = GradedPoly::generator(ring, "p" + std::to_string(m));
    x += u * u * p * p * frac(1, 2 * m);
    if (m % 2) x += u * p * frac(1, m);
  }
  return x.exp();
}

Rational single_branch_point(const Partition& delta) {
  const int d = delta.weight();
  GradedPoly f = single_branch_point_series(d);
  Exponents e = f.zero_exponents();
  for (int part : delta.parts()) ++e[f.ring()->gen("p" + std::to_string(part))];
  e[f.ring()->gen("u")] = delta.length();
  return f.coeff(e);
}

}  // namespace klein
