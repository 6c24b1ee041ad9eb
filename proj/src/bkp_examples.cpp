#include <stdexcept>

#include "klein/bkp_tau.hpp"
#include "klein/characters.hpp"
#include "klein/contentprod.hpp"
#include "klein/symfun.hpp"

namespace klein {

namespace {

int generator_index(const GradedPoly& g) {
  if (g.size() == 1) {
    const auto& [e, c] = *g.terms().begin();
    int idx = -1, total = 0;
    for (size_t i = 0; i < e.size(); ++i)
      if (e[i]) idx = static_cast<int>(i), total += e[i];
    if (total == 1 && c == 1) return idx;
  }
  throw std::invalid_argument("expected a generator, got " + g.to_string());
}

}  // namespace

GradedPoly content_product(const Partition& lambda, int n, const RFunction& r, const RingPtr& ring) {
  GradedPoly v(ring, 1);
  for (int c : lambda.contents()) v = v * r(n + c);
  return v;
}

RFunction r_example_I(const RingPtr& ring, const std::vector<GradedPoly>& zeta, const GradedPoly& h) {
  return r_weight_I(ring, WeightSpecI{zeta, h});
}

RFunction r_example_Ia(const RingPtr& ring, const GradedPoly& h, const std::vector<Rational>& a,
                       const std::vector<Rational>& n) {
  if (a.size() != n.size()) throw std::invalid_argument("Example Ia needs one exponent per parameter");
  for (const auto& as : a)
    if (as == 0) throw std::domain_error("Example Ia parameter a_s = 0");
  return [ring, h, a, n](long x) {
    GradedPoly log(ring);
    for (size_t s = 0; s < a.size(); ++s) log += (h * (Rational(x) / a[s])).log1p() * (-n[s]);
    return log.exp();
  };
}

RFunction r_linear(const RingPtr& ring, const std::vector<GradedPoly>& A) {
  return [ring, A](long x) {
    GradedPoly v(ring, 1);
    for (const auto& a : A) v = v * (a + GradedPoly(ring, Rational(x)));
    return v;
  };
}

RFunction r_example_IIa(const RingPtr& ring, const Rational& w) {
  if (w == 0) throw std::domain_error("Example IIa needs w ≠ 0");
  return [ring, w](long x) { return GradedPoly(ring, pow(w, x)); };
}

RFunction r_example_IIa(const RingPtr&, const GradedPoly& xi0) {
  return [xi0](long x) { return (xi0 * Rational(x)).exp(); };
}

RFunction r_example_IIb(const RingPtr& ring, const std::vector<TrigPochhammer>& factors) {
  for (const auto& f : factors)
    if (f.t == 0) throw std::domain_error("Example IIb needs t ≠ 0");
  return [ring, factors](long x) {
    Rational v = 1;
    for (const auto& f : factors) {
      Rational base = 1 - f.q * pow(f.t, x);
      if (base == 0 && f.n > 0) throw std::domain_error("Example IIb pole at x = " + std::to_string(x));
      v *= pow(base, -f.n);
    }
    return GradedPoly(ring, v);
  };
}

RFunction r_example_IId(const RingPtr& ring, const Rational& q, const Rational& t, const std::vector<GradedPoly>& y) {
  if (y.empty()) throw std::invalid_argument("Example IId needs at least one y variable");
  const int K = ring->bounds()[ring->gens().group[generator_index(y.front())]];
  for (int k = 1; k <= K; ++k)
    if (pow(q, k) == 1 || t == 0) throw std::domain_error("Example IId pole at q^" + std::to_string(k) + " = 1");
  return [ring, q, t, y, K](long x) {
    GradedPoly e(ring);
    for (int k = 1; k <= K; ++k) {
      GradedPoly pk(ring);
      for (const auto& yi : y) pk += yi.pow(k);
      e += pk * (Rational(1 - pow(t, k)) / Rational(1 - pow(q, k)) * pow(t, k * x) / k);
    }
    return e.exp();
  };
}

RFunction r_example_III(const RingPtr& ring, const std::vector<std::pair<Rational, Rational>>& qt, const GradedPoly& a,
                        const std::vector<GradedPoly>& as) {
  if (qt.size() != as.size()) throw std::invalid_argument("Example III needs one a_s per (q_s, t_s)");
  for (const auto& [q, t] : qt)
    if (t == 0 || t == 1 || t == -1) throw std::domain_error("Example III needs t_s ∉ {0, ±1}");
  return [ring, qt, a, as](long x) {
    if (x == 0) {
      GradedPoly v = a;
      for (size_t s = 0; s < qt.size(); ++s) v = v * as[s] * (qt[s].first - 1);
      return v;
    }
    GradedPoly X(ring, Rational(x));
    GradedPoly v = a + X;
    for (size_t s = 0; s < qt.size(); ++s) {
      const auto& [q, t] = qt[s];
      v = v * (as[s] + X) * (Rational(1 - q * pow(t, x)) / Rational(1 - pow(t, x)));
    }
    return v;
  };
}

GradedPoly jack_cauchy_side(const Partition& lambda, const std::vector<Rational>& x, const Rational& alpha,
                            const GradedPoly& h, int order) {
  std::vector<Rational> px, phi_l;
  for (int m = 1; m <= order; ++m) {
    Rational s = 0;
    for (const auto& xi : x) s += pow(xi, m);
    px.push_back(s);
    phi_l.push_back(Phi_direct(lambda, m));
  }
  GradedPoly sum(h.ring());
  for (const auto& mu : partitions_up_to(order)) {
    Rational c = specialize(jack_P(mu, alpha), Specialization::custom_values(px)) *
                 specialize(jack_Q(mu, alpha), Specialization::custom_values(phi_l));
    if (c != 0) sum += h.pow(mu.weight()) * c;
  }
  return sum;
}

GradedPoly macdonald_cauchy_side(const Partition& lambda, int n, const Rational& q, const Rational& t,
                                 const std::vector<GradedPoly>& y, int order) {
  const RingPtr& ring = y.front().ring();
  std::vector<GradedPoly> py;
  std::vector<Rational> T;
  for (int m = 1; m <= order; ++m) {
    GradedPoly s(ring);
    for (const auto& yi : y) s += yi.pow(m);
    py.push_back(s);
    T.push_back(T_direct(lambda, t, m));
  }
  GradedPoly sum(ring);
  for (const auto& mu : partitions_up_to(order)) {
    Rational c = pow(t, static_cast<long>(n) * mu.weight()) *
                 specialize(macdonald_Q(mu, q, t), Specialization::custom_values(T));
    if (c != 0) sum += specialize(macdonald_P(mu, q, t), py, ring) * c;
  }
  return sum;
}

Rational tau_hurwitz_themselves(int b, int m, const Partition& delta) {
  const int d = delta.weight();
  if (m > 0 && d < 2) throw std::domain_error("a d-cycle profile needs d ≥ 2");
  RingBuilder rb;
  rb.group("deg", d).family("p", d, "deg").group("beta", b).gen("beta", "beta");
  for (int i = 0; i < m; ++i) {
    std::string g = "u" + std::to_string(i + 1);
    rb.group(g, d - 1).gen(g, g);
  }
  auto ring = rb.build();
  GradedPoly beta = GradedPoly::generator(ring, "beta");
  std::vector<GradedPoly> u;
  for (int i = 0; i < m; ++i) u.push_back(GradedPoly::generator(ring, "u" + std::to_string(i + 1)));
  RFunction r = [ring, beta, u](long x) {
    GradedPoly v = (beta * Rational(x)).exp();
    for (const auto& ui : u) v = v * (GradedPoly(ring, 1) + ui * Rational(x));
    return v;
  };
  // only partitions of d contribute to p_Δ
  GradedPoly tau(ring);
  std::vector<GradedPoly> images;
  for (int k = 1; k <= d; ++k) images.push_back(GradedPoly::generator(ring, "p" + std::to_string(k)));
  for (const auto& l : partitions_of(d)) tau += content_product(l, 0, r, ring) * specialize(schur(l), images, ring);
  Exponents e = tau.zero_exponents();
  for (int part : delta.parts()) ++e[ring->gen("p" + std::to_string(part))];
  e[ring->gen("beta")] = b;
  for (int i = 0; i < m; ++i) e[ring->gen("u" + std::to_string(i + 1))] = d - 1;
  return tau.coeff(e) * Rational(factorial(b));
}

}  // namespace klein
