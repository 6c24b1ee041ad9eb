#include "klein/poly.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace klein {

int GeneratorSet::find(const std::string& name) const {
  for (size_t i = 0; i < names.size(); ++i)
    if (names[i] == name) return static_cast<int>(i);
  return -1;
}

int GeneratorSet::index(const std::string& name) const {
  int i = find(name);
  if (i < 0) throw std::invalid_argument("unknown generator '" + name + "'");
  return i;
}

int GeneratorSet::group_index(const std::string& g) const {
  for (size_t i = 0; i < group_names.size(); ++i)
    if (group_names[i] == g) return static_cast<int>(i);
  throw std::invalid_argument("unknown grading group '" + g + "'");
}

Ring::Ring(GeneratorSet gens, std::vector<int> bounds) : gens_(std::move(gens)), bounds_(std::move(bounds)) {
  if (bounds_.size() != gens_.group_names.size()) throw std::invalid_argument("one bound per grading group");
  for (size_t i = 0; i < gens_.size(); ++i) {
    if (gens_.weight[i] <= 0) throw std::invalid_argument("generator weights must be positive");
    for (size_t j = 0; j < i; ++j)
      if (gens_.names[i] == gens_.names[j]) throw std::invalid_argument("duplicate generator " + gens_.names[i]);
  }
}

int Ring::group_weight(const std::vector<int>& e, int g) const {
  int w = 0;
  for (size_t i = 0; i < e.size(); ++i)
    if (e[i] && gens_.group[i] == g) w += e[i] * gens_.weight[i];
  return w;
}

bool Ring::fits(const std::vector<int>& e) const {
  int ng = static_cast<int>(bounds_.size());
  int stack_w[16] = {0};
  std::vector<int> heap_w;
  int* w = stack_w;
  if (ng > 16) {
    heap_w.assign(ng, 0);
    w = heap_w.data();
  }
  for (size_t i = 0; i < e.size(); ++i) {
    if (!e[i]) continue;
    if (e[i] < 0) return false;
    int g = gens_.group[i];
    w[g] += e[i] * gens_.weight[i];
    if (w[g] > bounds_[g]) return false;
  }
  return true;
}

RingBuilder& RingBuilder::group(const std::string& name, int bound) {
  gs_.group_names.push_back(name);
  bounds_.push_back(bound);
  return *this;
}

RingBuilder& RingBuilder::gen(const std::string& name, const std::string& group, int weight) {
  gs_.names.push_back(name);
  gs_.group.push_back(gs_.group_index(group));
  gs_.weight.push_back(weight);
  return *this;
}

RingBuilder& RingBuilder::family(const std::string& prefix, int count, const std::string& group, bool graded) {
  for (int m = 1; m <= count; ++m) gen(prefix + std::to_string(m), group, graded ? m : 1);
  return *this;
}

RingPtr RingBuilder::build() const { return std::make_shared<const Ring>(gs_, bounds_); }

GradedPoly::GradedPoly(RingPtr ring) : ring_(std::move(ring)) {}

GradedPoly::GradedPoly(RingPtr ring, const Rational& c) : ring_(std::move(ring)) {
  if (c != 0) terms_.emplace(Exponents(ring_->ngens(), 0), c);
}

GradedPoly GradedPoly::generator(RingPtr ring, int idx) {
  Exponents e(ring->ngens(), 0);
  e.at(idx) = 1;
  return monomial(std::move(ring), e, 1);
}

GradedPoly GradedPoly::generator(RingPtr ring, const std::string& name) {
  int i = ring->gen(name);
  return generator(std::move(ring), i);
}

GradedPoly GradedPoly::monomial(RingPtr ring, const Exponents& e, const Rational& c) {
  GradedPoly p(std::move(ring));
  p.add_term(e, c);
  return p;
}

Rational GradedPoly::coeff(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational GradedPoly::constant_term() const { return coeff(zero_exponents()); }

void GradedPoly::add_term(const Exponents& e, const Rational& c) {
  if (c == 0 || !ring_->fits(e)) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void GradedPoly::check_same(const GradedPoly& o) const {
  if (ring_ != o.ring_) throw std::invalid_argument("polynomials live in different rings");
}

GradedPoly& GradedPoly::operator+=(const GradedPoly& o) {
  if (!ring_) {
    *this = o;
    return *this;
  }
  if (!o.ring_) return *this;
  check_same(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

GradedPoly& GradedPoly::operator-=(const GradedPoly& o) {
  if (!ring_) {
    *this = -o;
    return *this;
  }
  if (!o.ring_) return *this;
  check_same(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

GradedPoly& GradedPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

GradedPoly GradedPoly::operator-() const {
  GradedPoly r = *this;
  for (auto& [e, v] : r.terms_) v = -v;
  return r;
}

GradedPoly operator*(const GradedPoly& a, const GradedPoly& b) {
  a.check_same(b);
  GradedPoly r(a.ring_);
  const Ring& ring = *a.ring_;
  size_t n = ring.ngens();
  int ng = static_cast<int>(ring.bounds().size());
  std::vector<std::vector<int>> wa, wb;
  auto weights = [&](const GradedPoly& p, std::vector<std::vector<int>>& out) {
    out.reserve(p.terms_.size());
    for (const auto& [e, c] : p.terms_) {
      std::vector<int> w(ng, 0);
      for (size_t i = 0; i < n; ++i)
        if (e[i]) w[ring.gens().group[i]] += e[i] * ring.gens().weight[i];
      out.push_back(std::move(w));
    }
  };
  weights(a, wa);
  weights(b, wb);
  Exponents e(n);
  Rational prod;
  size_t i = 0;
  for (const auto& [ea, ca] : a.terms_) {
    size_t j = 0;
    for (const auto& [eb, cb] : b.terms_) {
      bool ok = true;
      for (int g = 0; g < ng && ok; ++g) ok = wa[i][g] + wb[j][g] <= ring.bounds()[g];
      if (ok) {
        for (size_t k = 0; k < n; ++k) e[k] = ea[k] + eb[k];
        prod = ca * cb;
        auto [it, inserted] = r.terms_.try_emplace(e, prod);
        if (!inserted) {
          it->second += prod;
          if (it->second == 0) r.terms_.erase(it);
        }
      }
      ++j;
    }
    ++i;
  }
  return r;
}

bool GradedPoly::operator==(const GradedPoly& o) const {
  if (ring_ && o.ring_) check_same(o);
  return terms_ == o.terms_;
}

GradedPoly GradedPoly::pow(unsigned k) const {
  GradedPoly r(ring_, 1);
  GradedPoly base = *this;
  while (k) {
    if (k & 1) r = r * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return r;
}

GradedPoly GradedPoly::exp() const {
  if (constant_term() != 0) throw std::domain_error("exp needs a zero constant term");
  GradedPoly r(ring_, 1);
  GradedPoly term(ring_, 1);
  for (unsigned k = 1; !term.is_zero(); ++k) {
    term = term * *this;
    term *= frac(1, k);
    r += term;
  }
  return r;
}

GradedPoly GradedPoly::log1p() const {
  if (constant_term() != 0) throw std::domain_error("log1p needs a zero constant term");
  GradedPoly r(ring_);
  GradedPoly power(ring_, 1);
  for (long k = 1;; ++k) {
    power = power * *this;
    if (power.is_zero()) break;
    r += power * frac(k % 2 ? 1 : -1, k);
  }
  return r;
}

GradedPoly GradedPoly::inverse() const {
  Rational c0 = constant_term();
  if (c0 == 0) throw std::domain_error("series with zero constant term is not invertible");
  GradedPoly b = *this * (Rational(1) / c0);
  b -= GradedPoly(ring_, 1);
  b = -b;
  GradedPoly r(ring_, 1);
  GradedPoly power(ring_, 1);
  for (;;) {
    power = power * b;
    if (power.is_zero()) break;
    r += power;
  }
  return r * (Rational(1) / c0);
}

GradedPoly GradedPoly::diff(int idx) const {
  if (idx < 0 || static_cast<size_t>(idx) >= ring_->ngens()) throw std::invalid_argument("unknown generator index");
  GradedPoly r(ring_);
  for (const auto& [e, c] : terms_) {
    if (!e[idx]) continue;
    Exponents f = e;
    f[idx] -= 1;
    r.terms_.emplace(std::move(f), c * e[idx]);
  }
  return r;
}

GradedPoly GradedPoly::substitute(const RingPtr& target, const std::vector<std::optional<GradedPoly>>& images) const {
  size_t n = ring_->ngens();
  if (images.size() != n) throw std::invalid_argument("substitute: one image slot per generator");
  std::vector<GradedPoly> img(n);
  for (size_t i = 0; i < n; ++i) {
    if (images[i]) {
      if (images[i]->ring() != target) throw std::invalid_argument("substitute: image in a foreign ring");
      img[i] = *images[i];
    } else {
      int j = target->gens().find(ring_->gens().names[i]);
      if (j < 0) throw std::invalid_argument("substitute: no image for " + ring_->gens().names[i]);
      img[i] = GradedPoly::generator(target, j);
    }
  }
  std::vector<std::vector<GradedPoly>> powers(n);
  auto power = [&](size_t i, int k) -> const GradedPoly& {
    auto& v = powers[i];
    if (v.empty()) v.emplace_back(target, 1);
    while (static_cast<int>(v.size()) <= k) v.push_back(v.back() * img[i]);
    return v[k];
  };
  GradedPoly r(target);
  for (const auto& [e, c] : terms_) {
    GradedPoly t(target, c);
    for (size_t i = 0; i < n && !t.is_zero(); ++i)
      if (e[i]) t = t * power(i, e[i]);
    r += t;
  }
  return r;
}

GradedPoly GradedPoly::substitute(const std::map<std::string, GradedPoly>& images) const {
  std::vector<std::optional<GradedPoly>> v(ring_->ngens());
  for (const auto& [name, p] : images) v[ring_->gen(name)] = p;
  return substitute(ring_, v);
}

GradedPoly GradedPoly::substitute(const std::map<std::string, Rational>& values) const {
  std::map<std::string, GradedPoly> images;
  for (const auto& [name, q] : values) images.emplace(name, GradedPoly(ring_, q));
  return substitute(images);
}

GradedPoly GradedPoly::recast(const RingPtr& target) const {
  size_t n = ring_->ngens();
  std::vector<int> map(n);
  for (size_t i = 0; i < n; ++i) map[i] = target->gens().find(ring_->gens().names[i]);
  GradedPoly r(target);
  Exponents f(target->ngens());
  for (const auto& [e, c] : terms_) {
    std::fill(f.begin(), f.end(), 0);
    for (size_t i = 0; i < n; ++i) {
      if (!e[i]) continue;
      if (map[i] < 0) throw std::invalid_argument("recast: generator " + ring_->gens().names[i] + " missing");
      f[map[i]] = e[i];
    }
    r.add_term(f, c);
  }
  return r;
}

GradedPoly GradedPoly::filter(const std::function<bool(const Exponents&)>& keep) const {
  GradedPoly r(ring_);
  for (const auto& [e, c] : terms_)
    if (keep(e)) r.terms_.emplace(e, c);
  return r;
}

GradedPoly GradedPoly::truncate_group(int g, int bound) const {
  return filter([&](const Exponents& e) { return ring_->group_weight(e, g) <= bound; });
}

GradedPoly GradedPoly::homogeneous(int g, int w) const {
  return filter([&](const Exponents& e) { return ring_->group_weight(e, g) == w; });
}

GradedPoly GradedPoly::coefficient_of(int idx, int k) const {
  GradedPoly r(ring_);
  for (const auto& [e, c] : terms_) {
    if (e[idx] != k) continue;
    Exponents f = e;
    f[idx] = 0;
    r.terms_.emplace(std::move(f), c);
  }
  return r;
}

GradedPoly GradedPoly::coefficient_of(const Exponents& partial, const std::vector<int>& which) const {
  GradedPoly r(ring_);
  for (const auto& [e, c] : terms_) {
    bool ok = true;
    for (int i : which)
      if (e[i] != partial[i]) {
        ok = false;
        break;
      }
    if (!ok) continue;
    Exponents f = e;
    for (int i : which) f[i] = 0;
    r.terms_.emplace(std::move(f), c);
  }
  return r;
}

Rational GradedPoly::evaluate(const std::vector<Rational>& point) const {
  if (point.size() != ring_->ngens()) throw std::invalid_argument("evaluate: point dimension mismatch");
  Rational r(0);
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (size_t i = 0; i < e.size(); ++i)
      if (e[i]) t *= klein::pow(point[i], e[i]);
    r += t;
  }
  return r;
}

std::string GradedPoly::to_string() const {
  if (terms_.empty()) return "0";
  const GeneratorSet& gs = ring_->gens();
  std::vector<std::pair<const Exponents*, const Rational*>> order;
  for (const auto& [e, c] : terms_) order.emplace_back(&e, &c);
  auto total = [&](const Exponents& e) {
    int w = 0;
    for (size_t i = 0; i < e.size(); ++i) w += e[i] * gs.weight[i];
    return w;
  };
  std::stable_sort(order.begin(), order.end(), [&](const auto& x, const auto& y) {
    int wx = total(*x.first), wy = total(*y.first);
    if (wx != wy) return wx < wy;
    return std::lexicographical_compare(x.first->rbegin(), x.first->rend(), y.first->rbegin(), y.first->rend());
  });
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : order) {
    if (!first) os << " + ";
    first = false;
    os << klein::to_string(*c);
    for (size_t i = 0; i < e->size(); ++i) {
      if (!(*e)[i]) continue;
      os << " * " << gs.names[i];
      if ((*e)[i] > 1) os << "^" << (*e)[i];
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const GradedPoly& p) { return os << p.to_string(); }

LaurentZ::LaurentZ(RingPtr ring, int lo, int hi) : ring_(std::move(ring)), lo_(lo), hi_(hi) {
  if (hi < lo) throw std::invalid_argument("empty z-range");
  c_.assign(hi - lo + 1, GradedPoly(ring_));
}

const GradedPoly& LaurentZ::at(int k) const {
  if (k < lo_ || k > hi_) throw std::out_of_range("z-exponent outside the retained range");
  return c_[k - lo_];
}

void LaurentZ::set(int k, GradedPoly v) {
  if (k < lo_ || k > hi_) throw std::out_of_range("z-exponent outside the retained range");
  c_[k - lo_] = std::move(v);
}

void LaurentZ::add(int k, const GradedPoly& v) {
  if (k < lo_ || k > hi_) return;
  c_[k - lo_] += v;
}

LaurentZ LaurentZ::operator*(const LaurentZ& o) const {
  if (ring_ != o.ring_) throw std::invalid_argument("Laurent series in different rings");
  int lo = std::max(lo_ + o.lo_, std::min(lo_, o.lo_));
  int hi = std::min(hi_ + o.hi_, std::max(hi_, o.hi_));
  LaurentZ r(ring_, std::min(lo, hi), hi);
  for (int i = lo_; i <= hi_; ++i) {
    if (at(i).is_zero()) continue;
    for (int j = o.lo_; j <= o.hi_; ++j) {
      int k = i + j;
      if (k < r.lo_ || k > r.hi_ || o.at(j).is_zero()) continue;
      r.c_[k - r.lo_] += at(i) * o.at(j);
    }
  }
  return r;
}

LaurentZ LaurentZ::operator+(const LaurentZ& o) const {
  LaurentZ r(ring_, std::min(lo_, o.lo_), std::max(hi_, o.hi_));
  for (int i = lo_; i <= hi_; ++i) r.add(i, at(i));
  for (int i = o.lo_; i <= o.hi_; ++i) r.add(i, o.at(i));
  return r;
}

LaurentZ LaurentZ::scaled(const Rational& c) const {
  LaurentZ r = *this;
  for (auto& v : r.c_) v *= c;
  return r;
}

LaurentZ LaurentZ::shifted(int k) const {
  LaurentZ r(ring_, lo_ + k, hi_ + k);
  for (int i = lo_; i <= hi_; ++i) r.set(i + k, at(i));
  return r;
}

LaurentZ LaurentZ::d_dz() const {
  LaurentZ r(ring_, lo_, hi_);
  for (int i = lo_; i <= hi_; ++i)
    if (i != 0) r.add(i - 1, at(i) * Rational(i));
  return r;
}

GradedPoly LaurentZ::residue() const {
  if (lo_ > -1 || hi_ < -1) throw std::domain_error("z-range does not cover the exponent -1");
  return at(-1);
}

LaurentZ miwa_shift(const GradedPoly& f, const std::vector<int>& family, int sign, int lo) {
  const RingPtr& ring = f.ring();
  LaurentZ out(ring, std::min(lo, 0), 0);
  size_t K = family.size();
  std::vector<GradedPoly> acc(-out.lo() + 1, GradedPoly(ring));
  for (const auto& [e, c] : f.terms()) {
    // expand Π_k (p_k + sign z^{-k})^{e_k}; pieces indexed by -z-exponent
    std::map<std::pair<int, Exponents>, Rational> pieces;
    pieces.emplace(std::make_pair(0, e), c);
    for (size_t k = 0; k < K; ++k) {
      int idx = family[k];
      int ek = e[idx];
      if (!ek) continue;
      int step = static_cast<int>(k) + 1;
      std::map<std::pair<int, Exponents>, Rational> next;
      for (const auto& [key, v] : pieces) {
        for (int j = 0; j <= ek; ++j) {
          int depth = key.first + step * j;
          if (-depth < out.lo()) break;
          Exponents g = key.second;
          g[idx] -= j;
          Rational w = v * Rational(binomial(ek, j));
          if (sign < 0 && j % 2) w = -w;
          next[{depth, std::move(g)}] += w;
        }
      }
      pieces = std::move(next);
    }
    for (const auto& [key, v] : pieces) acc[key.first].add_term(key.second, v);
  }
  for (size_t d = 0; d < acc.size(); ++d) out.set(-static_cast<int>(d), std::move(acc[d]));
  return out;
}

LaurentZ exp_V(const RingPtr& ring, const std::vector<int>& a, const std::vector<int>& b, int hi) {
  LaurentZ out(ring, 0, std::max(hi, 0));
  std::vector<GradedPoly> S;
  S.emplace_back(ring, 1);
  for (int m = 1; m <= hi; ++m) {
    GradedPoly s(ring);
    for (int k = 1; k <= m; ++k) {
      GradedPoly x(ring);
      if (k <= static_cast<int>(a.size())) x += GradedPoly::generator(ring, a[k - 1]);
      if (k <= static_cast<int>(b.size())) x -= GradedPoly::generator(ring, b[k - 1]);
      if (!x.is_zero()) s += x * S[m - k];
    }
    S.push_back(s * frac(1, m));
  }
  for (int m = 0; m <= hi; ++m) out.set(m, S[m]);
  return out;
}

}  // namespace klein
