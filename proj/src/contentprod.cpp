#include "klein/contentprod.hpp"

#include <stdexcept>

#include "klein/characters.hpp"
#include "klein/symfun.hpp"

namespace klein {

namespace {

// Class with the given non-unit parts padded by 1s to weight d, if it exists.
std::optional<Partition> padded(std::vector<int> parts, int d) {
  int w = 0;
  for (int p : parts) w += p;
  if (w > d) return std::nullopt;
  parts.insert(parts.end(), d - w, 1);
  return Partition(parts);
}

Rational phi_padded(const Partition& lambda, std::vector<int> parts) {
  auto delta = padded(std::move(parts), lambda.weight());
  return delta ? phi(lambda, *delta) : Rational(0);
}

Rational generalized_binomial(long c, int k) {
  Rational r = 1;
  for (int i = 0; i < k; ++i) r *= frac(c - i, i + 1);
  return r;
}

template <class T>
std::vector<T> triangle_solve(const std::vector<T>& zeta, const T& zero) {
  int K = static_cast<int>(zeta.size());
  if (K == 0) return {};
  std::vector<T> ps(K + 1, zero);  // ps[m-1] = p*_m
  for (int k = K; k >= 1; --k) {
    T rest = zeta[k - 1] * frac(1, k);
    for (int m = k + 2; m <= K + 1; ++m) {
      Rational c = frac(binomial(m, k), m);
      if ((m - k) % 2) c = -c;
      rest = rest - ps[m - 1] * c;
    }
    ps[k] = rest * Rational(-1);
  }
  T p1 = zero;
  for (int m = 2; m <= K + 1; ++m) p1 = p1 + ps[m - 1] * (m % 2 ? frac(-1, m) : frac(1, m));
  ps[0] = p1;
  return ps;
}

GradedPoly V_at(const std::vector<GradedPoly>& ps, long y, const RingPtr& ring) {
  GradedPoly v(ring);
  for (size_t k = 0; k < ps.size(); ++k) {
    long m = static_cast<long>(k) + 1;
    v += ps[k] * (pow(Rational(y), m) / m);
  }
  return v;
}

}  // namespace

Rational phi_k(const Partition& lambda, int k) {
  int d = lambda.weight();
  if (k < 0 || k > std::max(d - 1, 0)) throw std::domain_error("phi_k: k must lie in [0, d-1]");
  Rational s = 0;
  for (const auto& delta : partitions_of(d))
    if (delta.colength() == k) s += phi(lambda, delta);
  return s;
}

Rational phi_k_contents(const Partition& lambda, int k) {
  std::vector<Rational> e{1};
  for (int c : lambda.contents()) {
    e.push_back(0);
    for (size_t i = e.size() - 1; i > 0; --i) e[i] += e[i - 1] * c;
  }
  return k >= 0 && k < static_cast<int>(e.size()) ? e[k] : Rational(0);
}

Rational Phi_direct(const Partition& lambda, int m) {
  if (m < 0) throw std::domain_error("Phi: m must be nonnegative");
  Rational s = 0;
  for (int c : lambda.contents()) s += pow(Rational(c), m);
  return s;
}

Rational Phi_newton(const Partition& lambda, int m) {
  if (m < 0) throw std::domain_error("Phi: m must be nonnegative");
  int d = lambda.weight();
  if (m == 0) return d;
  std::vector<Rational> ph(m + 1, 0);
  for (int k = 1; k <= m && k < d; ++k) ph[k] = phi_k(lambda, k);
  Rational s = 0;
  for (const auto& mu : partitions_of(m)) {
    if (mu[0] >= d) continue;
    Rational term = Rational(factorial(mu.length() - 1)) / Rational(mu.aut());
    for (int part : mu.parts()) term *= ph[part];
    s += mu.colength() % 2 ? Rational(-term) : term;
  }
  return s * m;
}

Rational Phi(const Partition& lambda, int m) {
  Rational a = Phi_direct(lambda, m), b = Phi_newton(lambda, m);
  if (a != b)
    throw std::logic_error("Phi: content sum " + to_string(a) + " disagrees with the character formula " + to_string(b) +
                           " for " + lambda.to_string());
  return a;
}

Rational Phi2_in_characters(const Partition& lambda) {
  Rational g = phi_padded(lambda, {2});
  return g * g - 2 * phi_padded(lambda, {2, 2}) - 2 * phi_padded(lambda, {3});
}

Rational Phi3_in_characters(const Partition& lambda) {
  Rational g = phi_padded(lambda, {2});
  return g * g * g - 3 * g * (phi_padded(lambda, {2, 2}) + phi_padded(lambda, {3})) + 3 * phi_padded(lambda, {4}) +
         3 * phi_padded(lambda, {3, 2}) + 3 * phi_padded(lambda, {2, 2, 2});
}

ContentPolynomial content_poly_identity(const Partition& lambda) {
  int d = lambda.weight();
  ContentPolynomial out;
  for (int k = 0; k <= d; ++k) out.product.push_back(phi_k_contents(lambda, k));
  out.characters.push_back(1);
  for (int k = 1; k <= d - 1; ++k) out.characters.push_back(phi_k(lambda, k));
  if (d > 0) out.characters.push_back(0);
  return out;
}

Rational content_poly_at(const Partition& lambda, const Rational& a) {
  Rational r = 1;
  for (int c : lambda.contents()) r *= a + c;
  return r;
}

Rational T_direct(const Partition& lambda, const Rational& t, int m) {
  Rational s = 0;
  for (int c : lambda.contents()) s += pow(t, static_cast<long>(m) * c);
  return s;
}

Rational T_rows(const Partition& lambda, const Rational& t, int m) {
  Rational u = pow(t, m);
  if (u == 1) throw std::domain_error("T_lambda: t^m = 1 in the row formula");
  Rational s = 0;
  for (int i = 1; i <= lambda.length(); ++i) s += pow(u, 1 - i) * (1 - pow(u, lambda[i - 1])) / (1 - u);
  return s;
}

Rational T_log_derivative(const Partition& lambda, const Rational& t, int m) {
  auto spec = Specialization::p_qt(0, pow(t, m));
  SymFunc s = schur(lambda), num;
  for (const auto& [delta, c] : s) {
    int m1 = delta.multiplicities().empty() ? 0 : delta.multiplicities()[0];
    if (m1) num[delta] = c * m1;
  }
  Rational den = specialize(s, spec);
  if (den == 0) throw std::domain_error("T_lambda: s_lambda vanishes at p(0,t^m)");
  return specialize(num, spec) / den;
}

Rational T_character_ratio(const Partition& lambda, const Rational& t) {
  int d = lambda.weight();
  Rational num = d, den = 1;
  for (const auto& delta : partitions_of(d)) {
    if (delta == Partition::identity(d)) continue;
    Rational A = phi(lambda, delta) * pow(1 - t, d);
    for (int part : delta.parts()) {
      Rational f = 1 - pow(t, part);
      if (f == 0) throw std::domain_error("T_lambda: t^k = 1 in the character ratio");
      A /= f;
    }
    int m1 = delta.multiplicities()[0];
    num += m1 * A;
    den += A;
  }
  if (den == 0) throw std::domain_error("T_lambda: vanishing denominator in the character ratio");
  return num / den;
}

Rational T_lambda(const Partition& lambda, const Rational& t, int m) {
  Rational a = T_direct(lambda, t, m);
  Rational b = T_rows(lambda, t, m);
  Rational c = T_log_derivative(lambda, t, m);
  if (a != b || a != c)
    throw std::logic_error("T_lambda: routes disagree for " + lambda.to_string() + " (" + to_string(a) + ", " +
                           to_string(b) + ", " + to_string(c) + ")");
  return a;
}

std::vector<Rational> T_series_at_one(const Partition& lambda, int order) {
  std::vector<Rational> s(order + 1, 0);
  for (int c : lambda.contents())
    for (int k = 0; k <= order; ++k) s[k] += generalized_binomial(c, k);
  return s;
}

Rational Phi_from_T(const Partition& lambda, int m) {
  std::vector<Rational> f = T_series_at_one(lambda, m);
  for (int step = 0; step < m; ++step) {
    std::vector<Rational> g(f.size() - 1, 0);
    for (size_t k = 0; k < g.size(); ++k) g[k] = Rational(static_cast<long>(k) + 1) * f[k + 1] + Rational(static_cast<long>(k)) * f[k];
    f = std::move(g);
  }
  return f[0];
}

Rational ramification_weight(const Partition& delta, const Rational& q, const Rational& t) {
  if (q == 1) throw std::domain_error("ramification_weight: q = 1");
  Rational w = pow((1 - t) / (1 - q), delta.weight());
  for (int part : delta.parts()) {
    Rational den = 1 - pow(t, part);
    if (den == 0) throw std::domain_error("ramification_weight: t^" + std::to_string(part) + " = 1");
    w *= (1 - pow(q, part)) / den;
  }
  return w;
}

GradedPoly ramification_weight_series(const Partition& delta, const Rational& a, const RingPtr& ring) {
  if (a == 0) throw std::domain_error("ramification_weight_series: a = 0");
  int H = ring->bounds()[ring->gens().group[ring->gen("h")]];
  GradedPoly h = GradedPoly::generator(ring, "h");
  // (e^{xh} − 1)/h
  auto E = [&](const Rational& x) {
    GradedPoly s(ring);
    for (int n = 0; n <= H; ++n) s += h.pow(n) * (pow(x, n + 1) / Rational(factorial(n + 1)));
    return s;
  };
  GradedPoly ratio = E(1) * E(a).inverse();
  GradedPoly w = ratio.pow(delta.weight());
  for (int part : delta.parts()) w = w * E(a * part) * E(Rational(part)).inverse();
  return w;
}

Rational content_ratio_direct(const Partition& lambda, const Rational& q, const Rational& qt, const Rational& t) {
  Rational r = 1;
  for (int c : lambda.contents()) {
    Rational den = 1 - qt * pow(t, c);
    if (den == 0) throw std::domain_error("content_ratio: factor 1 - q~ t^c vanishes");
    r *= (1 - q * pow(t, c)) / den;
  }
  return r;
}

Rational content_ratio_schur(const Partition& lambda, const Rational& q, const Rational& qt, const Rational& t) {
  SymFunc s = schur(lambda);
  Rational den = specialize(s, Specialization::p_qt(qt, t));
  if (den == 0)
    throw std::domain_error("content_ratio: s_lambda(p(" + to_string(qt) + "," + to_string(t) + ")) vanishes");
  return specialize(s, Specialization::p_qt(q, t)) / den;
}

Rational content_ratio_weights(const Partition& lambda, const Rational& q, const Rational& qt, const Rational& t) {
  int d = lambda.weight();
  Rational num = 1, den = 1;
  for (const auto& delta : partitions_of(d)) {
    if (delta == Partition::identity(d)) continue;
    Rational f = phi(lambda, delta);
    if (f == 0) continue;
    num += f * ramification_weight(delta, q, t);
    den += f * ramification_weight(delta, qt, t);
  }
  if (den == 0) throw std::domain_error("content_ratio: vanishing weight sum for q~");
  return pow((1 - q) / (1 - qt), d) * num / den;
}

Rational content_ratio_qt(const Partition& lambda, const Rational& q, const Rational& qt, const Rational& t) {
  Rational a = content_ratio_direct(lambda, q, qt, t);
  Rational b = content_ratio_schur(lambda, q, qt, t);
  Rational c = content_ratio_weights(lambda, q, qt, t);
  if (a != b || a != c) throw std::logic_error("content_ratio_qt: routes disagree for " + lambda.to_string());
  return a;
}

GradedPoly WeightSpecI::r(long x) const {
  GradedPoly e(h.ring());
  GradedPoly hx = h * Rational(x);
  GradedPoly pw(h.ring(), 1);
  for (size_t k = 0; k < zeta.size(); ++k) {
    pw = pw * hx;
    e += zeta[k] * pw * frac(1, static_cast<long>(k) + 1);
  }
  return e.exp();
}

GradedPoly content_product_I_nodes(const Partition& lambda, const WeightSpecI& spec, int n) {
  GradedPoly r(spec.h.ring(), 1);
  for (int c : lambda.contents()) r = r * spec.r(n + c);
  return r;
}

GradedPoly content_product_I_exp(const Partition& lambda, const WeightSpecI& spec, int n) {
  GradedPoly e(spec.h.ring());
  for (size_t k = 0; k < spec.zeta.size(); ++k) {
    long m = static_cast<long>(k) + 1;
    Rational shifted = 0;
    for (long j = 0; j <= m; ++j) shifted += Rational(binomial(m, j)) * pow(Rational(n), m - j) * Phi(lambda, j);
    e += spec.zeta[k] * spec.h.pow(m) * (shifted / m);
  }
  return e.exp();
}

GradedPoly content_product_I_rows(const Partition& lambda, const WeightSpecI& spec, int n) {
  const RingPtr& ring = spec.h.ring();
  std::vector<GradedPoly> scaled;
  for (size_t k = 0; k < spec.zeta.size(); ++k) scaled.push_back(spec.zeta[k] * spec.h.pow(k + 1));
  auto ps = triangle_solve(scaled, GradedPoly(ring));
  GradedPoly e(ring);
  for (int i = 1; i <= lambda.length(); ++i) e += V_at(ps, n - i, ring) - V_at(ps, n + lambda[i - 1] - i, ring);
  return e.exp();
}

GradedPoly content_product_I(const Partition& lambda, const WeightSpecI& spec, int n) {
  GradedPoly a = content_product_I_nodes(lambda, spec, n);
  if (a != content_product_I_exp(lambda, spec, n) || a != content_product_I_rows(lambda, spec, n))
    throw std::logic_error("content_product_I: routes disagree for " + lambda.to_string());
  return a;
}

std::vector<GradedPoly> triangle_transform_I(const std::vector<GradedPoly>& zeta) {
  if (zeta.empty()) return {};
  return triangle_solve(zeta, GradedPoly(zeta[0].ring()));
}

std::vector<Rational> triangle_transform_I(const std::vector<Rational>& zeta) {
  return triangle_solve(zeta, Rational(0));
}

GradedPoly WeightSpecII::r(long x) const {
  GradedPoly e = L * Rational(x);
  for (const auto& [m, v] : xi) e += v * (pow(t, m * x) / m);
  return e.exp();
}

GradedPoly content_product_II_nodes(const Partition& lambda, const WeightSpecII& spec, int x) {
  GradedPoly r(spec.L.ring(), 1);
  for (int c : lambda.contents()) r = r * spec.r(x + c);
  return r;
}

GradedPoly content_product_II_exp(const Partition& lambda, const WeightSpecII& spec, int x) {
  int d = lambda.weight();
  GradedPoly e = spec.L * (Phi(lambda, 1) + d * x);
  for (const auto& [m, v] : spec.xi) e += v * (pow(spec.t, static_cast<long>(m) * x) * T_lambda(lambda, spec.t, m) / m);
  return e.exp();
}

GradedPoly content_product_II_rows(const Partition& lambda, const WeightSpecII& spec, int x) {
  std::map<int, GradedPoly> ps;
  for (const auto& [m, v] : spec.xi) {
    Rational tm = pow(spec.t, m);
    if (tm == 1) throw std::domain_error("content_product_II: t^m = 1");
    ps.emplace(m, v * (tm / (tm - 1)));
  }
  GradedPoly e(spec.L.ring());
  for (int i = 1; i <= lambda.length(); ++i) {
    long a = x + lambda[i - 1] - i, b = x - i;
    e += spec.L * frac(a * a + a - b * b - b, 2);
    for (const auto& [m, p] : ps) e += p * ((pow(spec.t, a * m) - pow(spec.t, b * m)) / m);
  }
  return e.exp();
}

GradedPoly content_product_II(const Partition& lambda, const WeightSpecII& spec, int x) {
  GradedPoly a = content_product_II_nodes(lambda, spec, x);
  if (a != content_product_II_exp(lambda, spec, x) || a != content_product_II_rows(lambda, spec, x))
    throw std::logic_error("content_product_II: routes disagree for " + lambda.to_string());
  return a;
}

std::map<int, Rational> triangle_transform_II(const std::map<int, Rational>& xi, const Rational& t) {
  std::map<int, Rational> ps;
  for (const auto& [m, v] : xi) {
    Rational tm = pow(t, m);
    if (tm == 1) throw std::domain_error("triangle_transform_II: t^" + std::to_string(m) + " = 1");
    ps.emplace(m, v * tm / (tm - 1));
  }
  return ps;
}

}  // namespace klein
