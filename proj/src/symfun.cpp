#include "klein/symfun.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <tuple>

#include "klein/characters.hpp"

namespace klein {

namespace {

void add_to(SymFunc& f, const Partition& p, const Rational& c) {
  if (c == 0) return;
  auto [it, fresh] = f.emplace(p, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) f.erase(it);
  }
}

Partition merge(const Partition& a, const Partition& b) {
  std::vector<int> v = a.parts();
  v.insert(v.end(), b.parts().begin(), b.parts().end());
  std::sort(v.rbegin(), v.rend());
  return Partition(v);
}

// Rows of the result solve M · X = I.
std::vector<std::vector<Rational>> invert(std::vector<std::vector<Rational>> m) {
  size_t n = m.size();
  std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n, 0));
  for (size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && m[piv][col] == 0) ++piv;
    if (piv == n) throw std::domain_error("singular transition matrix");
    std::swap(m[piv], m[col]);
    std::swap(inv[piv], inv[col]);
    Rational s = 1 / m[col][col];
    for (size_t j = 0; j < n; ++j) {
      m[col][j] *= s;
      inv[col][j] *= s;
    }
    for (size_t r = 0; r < n; ++r) {
      if (r == col || m[r][col] == 0) continue;
      Rational f = m[r][col];
      for (size_t j = 0; j < n; ++j) {
        m[r][j] -= f * m[col][j];
        inv[r][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

// Number of ways to drop the parts of ν into the rows of λ filling each row exactly.
long fillings(const Partition& nu, const Partition& lambda) {
  std::map<std::pair<size_t, std::vector<int>>, long> memo;
  std::function<long(size_t, std::vector<int>&)> go = [&](size_t k, std::vector<int>& room) -> long {
    if (k == nu.parts().size()) return 1;
    auto key = std::make_pair(k, room);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    long total = 0;
    for (size_t r = 0; r < room.size(); ++r) {
      if (room[r] < nu.parts()[k]) continue;
      room[r] -= nu.parts()[k];
      total += go(k + 1, room);
      room[r] += nu.parts()[k];
    }
    memo.emplace(key, total);
    return total;
  };
  std::vector<int> room = lambda.parts();
  return go(0, room);
}

const std::vector<SymFunc>& monomial_basis(int d) {
  static std::mutex mu;
  static std::map<int, std::vector<SymFunc>> cache;
  std::lock_guard<std::mutex> lock(mu);
  if (auto it = cache.find(d); it != cache.end()) return it->second;
  auto parts = partitions_of(d);
  size_t n = parts.size();
  // p_ν = Σ_λ R[ν][λ] m_λ, hence m = R⁻¹ p.
  std::vector<std::vector<Rational>> R(n, std::vector<Rational>(n, 0));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) R[i][j] = fillings(parts[i], parts[j]);
  auto inv = invert(R);
  std::vector<SymFunc> out(n);
  for (size_t l = 0; l < n; ++l)
    for (size_t v = 0; v < n; ++v) add_to(out[l], parts[v], inv[l][v]);
  return cache.emplace(d, std::move(out)).first->second;
}

using FamilyKey = std::tuple<int, int, Rational, Rational>;

struct FamilyKeyLess {
  bool operator()(const FamilyKey& a, const FamilyKey& b) const {
    if (std::get<0>(a) != std::get<0>(b)) return std::get<0>(a) < std::get<0>(b);
    if (std::get<1>(a) != std::get<1>(b)) return std::get<1>(a) < std::get<1>(b);
    if (std::get<2>(a) != std::get<2>(b)) return std::get<2>(a) < std::get<2>(b);
    return std::get<3>(a) < std::get<3>(b);
  }
};

const std::vector<SymFunc>& cached_family(int kind, int d, const Rational& x, const Rational& y, const PartWeight& w) {
  static std::mutex mu;
  static std::map<FamilyKey, std::vector<SymFunc>, FamilyKeyLess> cache;
  FamilyKey key{kind, d, x, y};
  {
    std::lock_guard<std::mutex> lock(mu);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  auto fam = gram_schmidt(d, w);
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(key, std::move(fam)).first->second;
}

const SymFunc& member(const std::vector<SymFunc>& fam, const Partition& mu) {
  auto parts = partitions_of(mu.weight());
  auto it = std::find(parts.begin(), parts.end(), mu);
  return fam[it - parts.begin()];
}

SymFunc dual(const SymFunc& P, const PartWeight& w) {
  Rational n = scalar_product(P, P, w);
  if (n == 0) throw std::domain_error("null norm in the dual basis");
  return Rational(1 / n) * P;
}

void check_macdonald_params(int d, const Rational& q, const Rational& t) {
  for (int k = 1; k <= d; ++k) {
    if (pow(t, k) == 1) throw std::domain_error("Macdonald parameter t is a root of unity of order ≤ " + std::to_string(d));
    if (pow(q, k) == 1) throw std::domain_error("Macdonald parameter q is a root of unity of order ≤ " + std::to_string(d));
  }
}

}  // namespace

SymFunc operator+(const SymFunc& a, const SymFunc& b) {
  SymFunc r = a;
  for (const auto& [p, c] : b) add_to(r, p, c);
  return r;
}

SymFunc operator-(const SymFunc& a, const SymFunc& b) {
  SymFunc r = a;
  for (const auto& [p, c] : b) add_to(r, p, -c);
  return r;
}

SymFunc operator*(const SymFunc& a, const SymFunc& b) {
  SymFunc r;
  for (const auto& [pa, ca] : a)
    for (const auto& [pb, cb] : b) add_to(r, merge(pa, pb), ca * cb);
  return r;
}

SymFunc operator*(const Rational& c, const SymFunc& a) {
  SymFunc r;
  if (c == 0) return r;
  for (const auto& [p, x] : a) r.emplace(p, c * x);
  return r;
}

bool is_zero(const SymFunc& f) { return f.empty(); }

SymFunc power_sum(const Partition& delta) { return SymFunc{{delta, Rational(1)}}; }

GradedPoly to_poly(const SymFunc& f, const RingPtr& ring, const std::string& prefix) {
  GradedPoly r(ring);
  for (const auto& [p, c] : f) r += p_delta(ring, p, prefix) * c;
  return r;
}

SymFunc from_poly(const GradedPoly& f, const std::string& prefix) {
  const auto& gens = f.ring()->gens();
  std::vector<int> part_of(gens.size(), 0);
  for (size_t i = 0; i < gens.size(); ++i) {
    const std::string& n = gens.names[i];
    if (n.size() > prefix.size() && n.compare(0, prefix.size(), prefix) == 0 &&
        n.find_first_not_of("0123456789", prefix.size()) == std::string::npos)
      part_of[i] = std::stoi(n.substr(prefix.size()));
  }
  SymFunc r;
  for (const auto& [e, c] : f.terms()) {
    std::vector<int> parts;
    for (size_t i = 0; i < e.size(); ++i) {
      if (!e[i]) continue;
      if (!part_of[i]) throw std::invalid_argument("from_poly: generator " + gens.names[i] + " is not a power sum");
      parts.insert(parts.end(), e[i], part_of[i]);
    }
    std::sort(parts.rbegin(), parts.rend());
    add_to(r, Partition(parts), c);
  }
  return r;
}

SymFunc complete_h(int k) {
  SymFunc r;
  if (k < 0) return r;
  for (const auto& mu : partitions_of(k)) add_to(r, mu, Rational(1) / Rational(mu.z()));
  return r;
}

SymFunc elementary_e(int k) {
  SymFunc r;
  if (k < 0) return r;
  for (const auto& mu : partitions_of(k)) {
    Rational c = Rational(1) / Rational(mu.z());
    add_to(r, mu, mu.colength() % 2 ? Rational(-c) : c);
  }
  return r;
}

SymFunc schur_char_map(const Partition& lambda) {
  SymFunc r;
  for (const auto& delta : partitions_of(lambda.weight()))
    add_to(r, delta, frac(character(lambda, delta), delta.z()));
  return r;
}

SymFunc schur_jacobi_trudi(const Partition& lambda) {
  Partition conj = lambda.conjugate();
  bool use_e = conj.length() < lambda.length();
  const Partition& shape = use_e ? conj : lambda;
  int n = shape.length();
  if (n == 0) return power_sum(Partition{});
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  SymFunc det;
  do {
    int inversions = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
    SymFunc term = power_sum(Partition{});
    for (int i = 0; i < n && !term.empty(); ++i) {
      int k = shape[i] - i + perm[i];
      term = term * (use_e ? elementary_e(k) : complete_h(k));
    }
    det = inversions % 2 ? det - term : det + term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

SymFunc schur(const Partition& lambda) {
  static std::mutex mu;
  static std::map<Partition, SymFunc> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    if (auto it = cache.find(lambda); it != cache.end()) return it->second;
  }
  SymFunc a = schur_char_map(lambda);
  if (a != schur_jacobi_trudi(lambda))
    throw std::logic_error("schur: characteristic map and Jacobi-Trudi disagree for " + lambda.to_string());
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(lambda, std::move(a)).first->second;
}

SymFunc monomial(const Partition& lambda) {
  auto parts = partitions_of(lambda.weight());
  auto it = std::find(parts.begin(), parts.end(), lambda);
  return monomial_basis(lambda.weight())[it - parts.begin()];
}

Rational scalar_product(const SymFunc& f, const SymFunc& g, const PartWeight& w) {
  Rational r = 0;
  for (const auto& [p, c] : f) {
    auto it = g.find(p);
    if (it == g.end()) continue;
    Rational x = c * it->second * Rational(p.z());
    for (int part : p.parts()) x *= w(part);
    r += x;
  }
  return r;
}

PartWeight hall_weight() {
  return [](int) -> Rational { return 1; };
}

PartWeight macdonald_weight(const Rational& q, const Rational& t) {
  return [q, t](int k) -> Rational {
    Rational den = 1 - pow(t, k);
    if (den == 0) throw std::domain_error("Macdonald pairing: t^k = 1");
    return (1 - pow(q, k)) / den;
  };
}

PartWeight jack_weight(const Rational& alpha) {
  return [alpha](int) -> Rational { return alpha; };
}

std::vector<SymFunc> gram_schmidt(int d, const PartWeight& w, EliminationOrder order) {
  auto parts = partitions_of(d);
  size_t n = parts.size();
  std::vector<size_t> seq(n);
  std::iota(seq.begin(), seq.end(), 0);
  if (order == EliminationOrder::reverse_lex) {
    std::reverse(seq.begin(), seq.end());
  } else {
    // n(λ) = Σ (i−1)λ_i strictly decreases up the dominance order.
    auto nl = [&](size_t i) {
      int s = 0;
      for (int r = 0; r < parts[i].length(); ++r) s += r * parts[i][r];
      return s;
    };
    std::stable_sort(seq.begin(), seq.end(), [&](size_t a, size_t b) { return nl(a) > nl(b); });
  }
  const auto& m = monomial_basis(d);
  std::vector<SymFunc> out(n);
  std::vector<Rational> norm(n);
  std::vector<size_t> done;
  for (size_t i : seq) {
    SymFunc P = m[i];
    for (size_t j : done) {
      Rational c = scalar_product(m[i], out[j], w);
      if (c != 0) P = P - Rational(c / norm[j]) * out[j];
    }
    norm[i] = scalar_product(P, P, w);
    if (norm[i] == 0) throw std::domain_error("gram_schmidt: null norm at " + parts[i].to_string());
    out[i] = std::move(P);
    done.push_back(i);
  }
  return out;
}

SymFunc macdonald_P(const Partition& mu, const Rational& q, const Rational& t) {
  check_macdonald_params(mu.weight(), q, t);
  return member(cached_family(0, mu.weight(), q, t, macdonald_weight(q, t)), mu);
}

SymFunc macdonald_Q(const Partition& mu, const Rational& q, const Rational& t) {
  return dual(macdonald_P(mu, q, t), macdonald_weight(q, t));
}

Rational macdonald_b(const Partition& mu, const Rational& q, const Rational& t) {
  Rational b = 1;
  for (int i = 0; i < mu.length(); ++i)
    for (int j = 0; j < mu[i]; ++j) {
      int a = mu.arm(i, j), l = mu.leg(i, j);
      Rational den = 1 - pow(q, a + 1) * pow(t, l);
      if (den == 0) throw std::domain_error("macdonald_b: pole");
      b *= (1 - pow(q, a) * pow(t, l + 1)) / den;
    }
  return b;
}

SymFunc hall_littlewood_P(const Partition& mu, const Rational& t) { return macdonald_P(mu, 0, t); }

SymFunc hall_littlewood_Q(const Partition& mu, const Rational& t) { return macdonald_Q(mu, 0, t); }

SymFunc jack_P(const Partition& mu, const Rational& alpha) {
  if (alpha <= 0) throw std::domain_error("jack_P: α must be positive");
  return member(cached_family(1, mu.weight(), alpha, 0, jack_weight(alpha)), mu);
}

SymFunc jack_Q(const Partition& mu, const Rational& alpha) { return dual(jack_P(mu, alpha), jack_weight(alpha)); }

Rational Specialization::p(int m) const {
  switch (kind) {
    case Kind::qt: {
      Rational den = 1 - pow(t, m);
      if (den == 0) throw std::domain_error("p(q,t): t^" + std::to_string(m) + " = 1");
      return (1 - pow(q, m)) / den;
    }
    case Kind::infinity:
      return m == 1 ? 1 : 0;
    case Kind::constant:
      return a;
    case Kind::custom:
      if (m < 1 || m > static_cast<int>(values.size()))
        throw std::domain_error("custom specialization lacks p_" + std::to_string(m));
      return values[m - 1];
  }
  return 0;
}

Rational specialize(const SymFunc& f, const Specialization& s) {
  std::map<int, Rational> pm;
  Rational r = 0;
  for (const auto& [p, c] : f) {
    Rational x = c;
    for (int part : p.parts()) {
      auto it = pm.find(part);
      if (it == pm.end()) it = pm.emplace(part, s.p(part)).first;
      x *= it->second;
    }
    r += x;
  }
  return r;
}

GradedPoly specialize(const SymFunc& f, const std::vector<GradedPoly>& images, const RingPtr& ring) {
  GradedPoly r(ring);
  for (const auto& [p, c] : f) {
    GradedPoly x(ring, c);
    for (int part : p.parts()) {
      if (part > static_cast<int>(images.size())) throw std::domain_error("specialize: missing image for a power sum");
      x = x * images[part - 1];
    }
    r += x;
  }
  return r;
}

std::string to_string(const SymFunc& f) {
  int D = 1;
  for (const auto& [p, c] : f) D = std::max(D, p.weight());
  return to_poly(f, power_sum_ring(D)).to_string();
}

}  // namespace klein
