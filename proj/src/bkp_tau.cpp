#include "klein/bkp_tau.hpp"

#include <memory>
#include <mutex>
#include <stdexcept>
#include <tuple>

#include "klein/characters.hpp"
#include "klein/symfun.hpp"

namespace klein {

RFunction r_constant(const RingPtr& ring, const Rational& v) {
  return [ring, v](long) { return GradedPoly(ring, v); };
}

RFunction r_table(const RingPtr& ring, std::map<long, Rational> values) {
  return [ring, values = std::move(values)](long x) {
    auto it = values.find(x);
    if (it == values.end()) throw std::domain_error("r-table has no value at x = " + std::to_string(x));
    return GradedPoly(ring, it->second);
  };
}

RFunction r_weight_I(const RingPtr& ring, WeightSpecI spec) {
  return [ring, spec = std::move(spec)](long x) { return spec.r(x).recast(ring); };
}

RFunction r_weight_II(const RingPtr& ring, WeightSpecII spec) {
  return [ring, spec = std::move(spec)](long x) { return spec.r(x).recast(ring); };
}

RFunction r_product(std::vector<RFunction> factors) {
  if (factors.empty()) throw std::invalid_argument("empty product of r-functions");
  return [factors = std::move(factors)](long x) {
    GradedPoly v = factors[0](x);
    for (size_t i = 1; i < factors.size(); ++i) v = v * factors[i](x);
    return v;
  };
}

RingPtr tau_ring(int D, const std::vector<std::string>& prefixes, const RingPtr& params) {
  RingBuilder b;
  b.group("deg", D);
  if (params) {
    const auto& gs = params->gens();
    for (size_t g = 0; g < gs.group_names.size(); ++g) b.group(gs.group_names[g], params->bounds()[g]);
  }
  for (const auto& p : prefixes) b.family(p, D, "deg");
  if (params) {
    const auto& gs = params->gens();
    for (size_t i = 0; i < gs.size(); ++i) b.gen(gs.names[i], gs.group_names[gs.group[i]], gs.weight[i]);
  }
  return b.build();
}

std::vector<int> prefix_family(const RingPtr& ring, const std::string& prefix) {
  std::vector<int> out;
  for (int m = 1;; ++m) {
    int idx = ring->gens().find(prefix + std::to_string(m));
    if (idx < 0) break;
    out.push_back(idx);
  }
  if (out.empty()) throw std::invalid_argument("ring has no generator family '" + prefix + "'");
  return out;
}

namespace {

int family_bound(const RingPtr& ring, const std::vector<int>& fam) {
  return ring->bounds()[ring->gens().group[fam.front()]];
}

std::vector<GradedPoly> family_images(const RingPtr& ring, const std::vector<int>& fam) {
  std::vector<GradedPoly> out;
  for (int idx : fam) out.push_back(GradedPoly::generator(ring, idx));
  return out;
}

// r(n + c) for every content c of a diagram with at most `rows` rows and D boxes.
std::map<long, GradedPoly> r_window(const RFunction& r, int n, int rows, int D) {
  std::map<long, GradedPoly> w;
  for (long c = -(rows - 1); c <= D - 1; ++c) w.emplace(c, r(n + c));
  return w;
}

GradedPoly content_product(const Partition& l, const std::map<long, GradedPoly>& w, const RingPtr& ring) {
  GradedPoly v(ring, 1);
  for (int c : l.contents()) v = v * w.at(c);
  return v;
}

template <class Term>
GradedPoly sum_over_diagrams(const RingPtr& ring, int N, int D, Term&& term) {
  std::vector<Partition> diagrams;
  for (const auto& l : partitions_up_to(D))
    if (l.length() <= N) {
      schur(l);
      diagrams.push_back(l);
    }
  std::vector<GradedPoly> terms(diagrams.size(), GradedPoly(ring));
  const long m = static_cast<long>(diagrams.size());
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < m; ++i) terms[i] = term(diagrams[i]);
  GradedPoly sum(ring);
  for (const auto& t : terms) sum += t;
  return sum;
}

}  // namespace

GradedPoly build_tau(const RingPtr& ring, int N, int n, const RFunction& r, const std::string& prefix,
                     const std::optional<GradedPoly>& c) {
  if (N < 0) return GradedPoly(ring);
  auto fam = prefix_family(ring, prefix);
  const int D = family_bound(ring, fam);
  auto images = family_images(ring, fam);
  auto w = r_window(r, n, std::min(N, D), D);
  return sum_over_diagrams(ring, N, D, [&](const Partition& l) {
    GradedPoly t = content_product(l, w, ring) * specialize(schur(l), images, ring);
    if (c) t = t * c->pow(l.weight());
    return t;
  });
}

GradedPoly tau_2kp(const RingPtr& ring, int N, int n, const RFunction& r, const std::string& prefix,
                   const std::string& bar_prefix) {
  if (N < 0) return GradedPoly(ring);
  auto fam = prefix_family(ring, prefix), bar = prefix_family(ring, bar_prefix);
  const int D = std::max(family_bound(ring, fam), family_bound(ring, bar));
  auto images = family_images(ring, fam), bar_images = family_images(ring, bar);
  auto w = r_window(r, n, std::min(N, D), D);
  return sum_over_diagrams(ring, N, D, [&](const Partition& l) {
    return content_product(l, w, ring) * specialize(schur(l), images, ring) * specialize(schur(l), bar_images, ring);
  });
}

GradedPoly heat_reduce(const GradedPoly& f, const std::string& prefix) {
  return heat_operator_at_zero(f, prefix_family(f.ring(), prefix));
}

GradedPoly e0_direct(const RingPtr& ring, int N, int n, const RFunction& r, int D, const std::optional<GradedPoly>& c) {
  if (N < 0) return GradedPoly(ring);
  auto w = r_window(r, n, std::min(N, D), D);
  GradedPoly sum(ring);
  for (const auto& l : partitions_up_to(D))
    if (l.length() <= N) {
      GradedPoly t = content_product(l, w, ring);
      if (c) t = t * c->pow(l.weight());
      sum += t;
    }
  return sum;
}

GradedPoly tau_one_closed_form(const RingPtr& ring, const std::string& prefix) {
  auto fam = prefix_family(ring, prefix);
  const int D = family_bound(ring, fam);
  GradedPoly x(ring);
  for (int m = 1; m <= std::min<int>(D, fam.size()); ++m) {
    GradedPoly p = GradedPoly::generator(ring, fam[m - 1]);
    x += p * p * frac(1, 2 * m);
    if (m % 2) x += p * frac(1, m);
  }
  return x.exp();
}

GradedPoly coefficient_of_pdelta(const GradedPoly& f, const Partition& delta, const std::string& prefix) {
  auto fam = prefix_family(f.ring(), prefix);
  Exponents e = f.zero_exponents();
  for (int part : delta.parts()) {
    if (part > static_cast<int>(fam.size())) return GradedPoly(f.ring());
    ++e[fam[part - 1]];
  }
  return f.coefficient_of(e, fam);
}

std::vector<HurwitzCoefficient> extract_hurwitz(const GradedPoly& tau, int N, const std::string& prefix) {
  auto fam = prefix_family(tau.ring(), prefix);
  const int D = family_bound(tau.ring(), fam);
  std::vector<HurwitzCoefficient> out;
  for (const auto& delta : partitions_up_to(D))
    out.push_back({delta.weight(), delta, coefficient_of_pdelta(tau, delta, prefix), delta.weight() <= N});
  return out;
}

GradedPoly g_factor(int n, const RFunction& r, const RingPtr& ring) {
  // e^{−U_k} = Π_{y=1}^k r(y) for k > 0; e^{U_k} = Π_{y=k+1}^0 r(y) for k < 0
  GradedPoly g(ring, 1);
  if (n > 0) {
    GradedPoly partial(ring, 1);
    for (int k = 1; k <= n - 1; ++k) {
      partial = partial * r(k);
      g = g * partial;
    }
  } else if (n < 0) {
    GradedPoly partial(ring, 1);
    for (int k = -1; k >= n; --k) {
      partial = partial * r(k + 1);
      g = g * partial;
    }
  }
  return g;
}

TauFamily hypergeometric_family(const RingPtr& ring, RFunction r, bool with_g) {
  struct State {
    std::mutex mu;
    std::map<std::tuple<int, int, std::string>, GradedPoly> cache;
  };
  auto state = std::make_shared<State>();
  return [ring, r = std::move(r), with_g, state](int N, int n, const std::string& prefix) {
    auto key = std::make_tuple(std::max(N, -1), n, prefix);
    {
      std::lock_guard<std::mutex> lock(state->mu);
      auto it = state->cache.find(key);
      if (it != state->cache.end()) return it->second;
    }
    GradedPoly t = build_tau(ring, N, n, r, prefix);
    if (with_g && !t.is_zero()) t = t * g_factor(n, r, ring);
    std::lock_guard<std::mutex> lock(state->mu);
    state->cache.emplace(key, t);
    return t;
  };
}

namespace {

// f(p_k + a_k z^{-k}) on z-exponents [lo, 0].
LaurentZ general_shift(const GradedPoly& f, const std::vector<int>& fam, const std::vector<GradedPoly>& a, int lo) {
  const RingPtr& ring = f.ring();
  LaurentZ out(ring, lo, 0);
  for (const auto& [e, c] : f.terms()) {
    LaurentZ term(ring, lo, 0);
    Exponents rest = e;
    for (int idx : fam) rest[idx] = 0;
    term.set(0, GradedPoly::monomial(ring, rest, c));
    for (size_t k = 0; k < fam.size(); ++k) {
      int ek = e[fam[k]];
      if (!ek) continue;
      int step = static_cast<int>(k) + 1;
      LaurentZ factor(ring, lo, 0);
      GradedPoly p = GradedPoly::generator(ring, fam[k]);
      for (int j = 0; j <= ek && -step * j >= lo; ++j)
        factor.set(-step * j, a[k].pow(j) * p.pow(ek - j) * Rational(binomial(ek, j)));
      term = term * factor;
    }
    out = out + term;
  }
  return out;
}

// exp(Σ_k c_k z^k) on [0, hi].
LaurentZ exp_series(const RingPtr& ring, const std::vector<GradedPoly>& c, int hi) {
  LaurentZ out(ring, 0, hi);
  std::vector<GradedPoly> E{GradedPoly(ring, 1)};
  for (int m = 1; m <= hi; ++m) {
    GradedPoly s(ring);
    for (int k = 1; k <= m && k <= static_cast<int>(c.size()); ++k) s += c[k - 1] * E[m - k] * Rational(k);
    E.push_back(s * frac(1, m));
  }
  for (int m = 0; m <= hi; ++m) out.set(m, E[m]);
  return out;
}

}  // namespace

GradedPoly vertex_h(const GradedPoly& f, const std::string& prefix, int n, const std::function<GradedPoly(int)>& t_pow) {
  const RingPtr& ring = f.ring();
  auto fam = prefix_family(ring, prefix);
  const int H = std::min<int>(family_bound(ring, fam), fam.size());
  std::vector<GradedPoly> a, c;
  GradedPoly one(ring, 1);
  for (int i = 1; i <= H; ++i) {
    a.push_back(one - t_pow(-i));
    c.push_back((t_pow(i) - one) * GradedPoly::generator(ring, fam[i - 1]) * frac(1, i));
  }
  LaurentZ prod = exp_series(ring, c, H) * general_shift(f, std::vector<int>(fam.begin(), fam.begin() + H), a, -H);
  return t_pow(n) * prod.at(0);
}

GradedPoly vertex_h(const GradedPoly& f, const std::string& prefix, int n, const Rational& t) {
  if (t == 0) throw std::domain_error("vertex operator at t = 0");
  const RingPtr& ring = f.ring();
  return vertex_h(f, prefix, n, [&](int k) { return GradedPoly(ring, pow(t, k)); });
}

GradedPoly cut_and_join(const GradedPoly& f, const std::string& prefix, int n) {
  const RingPtr& ring = f.ring();
  auto fam = prefix_family(ring, prefix);
  const int K = static_cast<int>(fam.size());
  auto p = [&](int i) { return GradedPoly::generator(ring, fam[i - 1]); };
  GradedPoly out = f * Rational(n * n * n);
  for (int i = 1; i < K; ++i)
    for (int j = 1; i + j <= K; ++j) {
      GradedPoly d = f.diff(fam[i + j - 1]);
      if (!d.is_zero()) out += p(i) * p(j) * d * Rational(i + j);
      GradedPoly dd = f.diff(fam[i - 1]).diff(fam[j - 1]);
      if (!dd.is_zero()) out += p(i + j) * dd * Rational(i * j);
    }
  return out;
}

std::optional<Rational> cut_and_join_kappa(int max_d) {
  auto ring = tau_ring(max_d, {"p"});
  std::optional<Rational> kappa;
  for (int d = 2; d <= max_d; ++d)
    for (const auto& l : partitions_of(d)) {
      GradedPoly s = to_poly(schur(l), ring);
      GradedPoly g = cut_and_join(s, "p");
      const auto& [e, c] = *s.terms().begin();
      Rational mu = g.coeff(e) / c;
      if (g != s * mu) return std::nullopt;
      Rational ph = phi(l, Partition::gamma(d));
      if (ph == 0) {
        if (mu != 0) return std::nullopt;
        continue;
      }
      Rational k = mu / ph;
      if (kappa && *kappa != k) return std::nullopt;
      kappa = k;
    }
  return kappa;
}

namespace {

GradedPoly dt(const GradedPoly& f, const std::vector<int>& fam, int m, int times = 1) {
  GradedPoly r = f;
  for (int i = 0; i < times; ++i) r = r.diff(fam[m - 1]) * Rational(m);
  return r;
}

int deg_group(const RingPtr& ring) { return ring->gens().group_index("deg"); }

GradedPoly truncate_deg(const GradedPoly& f, int K) { return f.truncate_group(deg_group(f.ring()), K); }

void require_degree(const RingPtr& ring, int need) {
  int have = ring->bounds()[deg_group(ring)];
  if (have < need)
    throw std::domain_error("tau series truncated at degree " + std::to_string(have) + ", need " + std::to_string(need));
}

struct Factor {
  int N, n;
  const char* prefix;
  int sign;  // Miwa shift direction
};

GradedPoly residue_term(const TauFamily& tau, int zp, int vsign, const Factor& a, const Factor& b) {
  GradedPoly ta = tau(a.N, a.n, a.prefix);
  if (ta.is_zero()) return ta;
  GradedPoly tb = tau(b.N, b.n, b.prefix);
  if (tb.is_zero()) return tb;
  const RingPtr& ring = ta.ring();
  const int Dt = ring->bounds()[deg_group(ring)];
  auto p = prefix_family(ring, "p"), pp = prefix_family(ring, "pp");
  int H = std::max(Dt - 1 - zp, 0);
  LaurentZ e = vsign > 0 ? exp_V(ring, pp, p, H) : exp_V(ring, p, pp, H);
  LaurentZ sa = miwa_shift(ta, std::string(a.prefix) == "pp" ? pp : p, a.sign, -Dt);
  LaurentZ sb = miwa_shift(tb, std::string(b.prefix) == "pp" ? pp : p, b.sign, -Dt);
  return ((e * sa) * sb).shifted(zp).residue();
}

Rational half_odd(int N, int Np) { return (N + Np) % 2 == 0 ? Rational(0) : Rational(1); }

}  // namespace

int hirota_degree(int N, int Np, int K) {
  int s = Np - N;
  return K + 1 + std::max({s - 1, -s - 2, 0});
}

GradedPoly hirota_elementary_1(const TauFamily& tau, int N, int n, int K) {
  GradedPoly F = tau(N, n, "p"), G = tau(N + 1, n + 1, "p");
  const RingPtr& ring = F.ring();
  require_degree(ring, K + 2);
  auto fam = prefix_family(ring, "p");
  GradedPoly lhs = (dt(F, fam, 2) * G - F * dt(G, fam, 2) + dt(F, fam, 1, 2) * G + F * dt(G, fam, 1, 2)) * frac(1, 2) -
                   dt(F, fam, 1) * dt(G, fam, 1);
  GradedPoly rhs = tau(N + 2, n + 2, "p") * tau(N - 1, n - 1, "p");
  return truncate_deg(lhs - rhs, K);
}

GradedPoly hirota_elementary_2(const TauFamily& tau, int N, int n, int K, HirotaForm form) {
  GradedPoly F = tau(N, n + 1, "p"), G = tau(N + 1, n + 1, "p");
  const RingPtr& ring = F.ring();
  require_degree(ring, K + 2);
  auto fam = prefix_family(ring, "p");
  GradedPoly lhs = (F * dt(G, fam, 1, 2) - dt(F, fam, 1, 2) * G) * frac(1, 2);
  GradedPoly a = dt(tau(N + 2, n + 2, "p"), fam, 1) * tau(N - 1, n, "p");
  GradedPoly b = dt(tau(N + 1, n + 2, "p"), fam, 1) * tau(N, n, "p");
  if (form == HirotaForm::printed) return truncate_deg(lhs - (a - b), K);
  lhs += (F * dt(G, fam, 2) - dt(F, fam, 2) * G) * frac(1, 2);
  return truncate_deg(lhs - (b - a), K);
}

GradedPoly hirota_full_1(const TauFamily& tau, int N, int Np, int n, int K, HirotaForm form) {
  const int s = form == HirotaForm::corrected ? Np - N : 0;
  const int z = Np - N;
  GradedPoly i1 = residue_term(tau, z - 2, +1, {Np - 1, n - 1 + s, "pp", -1}, {N + 1, n + 1, "p", +1});
  Factor last = form == HirotaForm::corrected ? Factor{N - 1, n - 1, "p", -1} : Factor{N - 1, n - 1, "pp", -1};
  GradedPoly i2 = residue_term(tau, -z - 2, -1, {Np + 1, n + 1 + s, "pp", +1}, last);
  GradedPoly rhs = tau(Np, n + s, "pp") * tau(N, n, "p") * half_odd(N, Np);
  require_degree(rhs.ring(), hirota_degree(N, Np, K));
  return truncate_deg(i1 + i2 - rhs, K);
}

GradedPoly hirota_full_2(const TauFamily& tau, int N, int Np, int n, int K, HirotaForm form) {
  const int s = form == HirotaForm::corrected ? Np - N : 0;
  const int z = Np - N;
  GradedPoly i1 = residue_term(tau, z - 1, +1, {Np - 1, n + s, "pp", -1}, {N + 1, n + 1, "p", +1});
  GradedPoly i2 = residue_term(tau, -z - 3, -1, {Np + 1, n + 2 + s, "pp", +1}, {N - 1, n - 1, "p", -1});
  GradedPoly rhs = tau(Np + 1, n + 1 + s, "pp") * tau(N - 1, n, "p") -
                   tau(Np, n + 1 + s, "pp") * tau(N, n, "p") * half_odd(N, Np);
  require_degree(rhs.ring(), hirota_degree(N, Np, K));
  if (form == HirotaForm::corrected && (N + Np) % 2) rhs = -rhs;
  return truncate_deg(i1 + i2 - rhs, K);
}

GradedPoly linear_term(const GradedPoly& residual, int m) {
  const RingPtr& ring = residual.ring();
  auto p = prefix_family(ring, "p"), pp = prefix_family(ring, "pp");
  std::map<std::string, GradedPoly> images;
  for (size_t k = 0; k < pp.size(); ++k) images.emplace(ring->gens().names[pp[k]], GradedPoly::generator(ring, p[k]));
  return residual.diff(pp[m - 1]).substitute(images);
}

}  // namespace klein
