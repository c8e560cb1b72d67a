#include "ywalls/series.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "ywalls/abacus.hpp"
#include "ywalls/coords.hpp"
#include "ywalls/parallel.hpp"
#include "ywalls/young_wall.hpp"

namespace ywalls {

Int Monomial::degree() const { return std::accumulate(e.begin(), e.end(), Int{0}); }

bool GradedLex::operator()(const Monomial& x, const Monomial& y) const {
  const Int dx = x.degree(), dy = y.degree();
  if (dx != dy) return dx < dy;
  if (x.e != y.e) return x.e < y.e;
  return x.lexp < y.lexp;
}

TruncatedSeries::TruncatedSeries(int vars, Int bound, bool motivic)
    : vars_(vars), bound_(bound), motivic_(motivic) {
  if (vars < 1) throw std::invalid_argument("TruncatedSeries: need at least one variable");
  if (bound < 0) throw std::invalid_argument("TruncatedSeries: negative bound");
}

TruncatedSeries TruncatedSeries::one(int vars, Int bound, bool motivic) {
  TruncatedSeries s(vars, bound, motivic);
  s.add_term(Monomial{std::vector<Int>(static_cast<std::size_t>(vars), 0), 0}, 1);
  return s;
}

TruncatedSeries TruncatedSeries::monomial(const Monomial& m, Int bound, const Coeff& c,
                                          bool motivic) {
  TruncatedSeries s(static_cast<int>(m.e.size()), bound, motivic || m.lexp != 0);
  s.add_term(m, c);
  return s;
}

Coeff TruncatedSeries::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Coeff{0} : it->second;
}

void TruncatedSeries::add_term(const Monomial& m, const Coeff& c) {
  if (m.e.size() != static_cast<std::size_t>(vars_))
    throw std::invalid_argument("add_term: wrong number of exponents");
  if (std::any_of(m.e.begin(), m.e.end(), [](Int v) { return v < 0; }) || m.lexp < 0)
    throw std::invalid_argument("add_term: negative exponent");
  if (m.lexp != 0 && !motivic_) throw std::invalid_argument("add_term: L in a non-motivic series");
  if (c == 0 || m.degree() > bound_) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void TruncatedSeries::check_compatible(const TruncatedSeries& other) const {
  if (vars_ != other.vars_) throw std::invalid_argument("series: variable count mismatch");
  if (bound_ != other.bound_) throw std::invalid_argument("series: truncation bound mismatch");
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& other) {
  check_compatible(other);
  motivic_ = motivic_ || other.motivic_;
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& other) {
  check_compatible(other);
  motivic_ = motivic_ || other.motivic_;
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(const TruncatedSeries& other) {
  *this = *this * other;
  return *this;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  a.check_compatible(b);
  TruncatedSeries out(a.vars_, a.bound_, a.motivic_ || b.motivic_);
  struct Entry {
    const Monomial* m;
    const Coeff* c;
    Int degree;
  };
  auto flatten = [](const TruncatedSeries& s) {
    std::vector<Entry> v;
    v.reserve(s.terms_.size());
    for (const auto& [m, c] : s.terms_) v.push_back({&m, &c, m.degree()});
    return v;
  };
  const auto fa = flatten(a), fb = flatten(b);
  Monomial prod{std::vector<Int>(static_cast<std::size_t>(a.vars_)), 0};
  for (const Entry& x : fa) {
    for (const Entry& y : fb) {
      // Terms are sorted by degree, so the rest of b is out of range too.
      if (x.degree + y.degree > a.bound_) break;
      for (std::size_t j = 0; j < prod.e.size(); ++j) prod.e[j] = x.m->e[j] + y.m->e[j];
      prod.lexp = x.m->lexp + y.m->lexp;
      out.terms_[prod] += *x.c * *y.c;
    }
  }
  std::erase_if(out.terms_, [](const auto& kv) { return kv.second == 0; });
  return out;
}

TruncatedSeries operator-(const TruncatedSeries& a) {
  TruncatedSeries out = a;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

TruncatedSeries series_add(const TruncatedSeries& a, const TruncatedSeries& b) { return a + b; }
TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b) { return a * b; }

TruncatedSeries specialize_L(const TruncatedSeries& s, Int value) {
  TruncatedSeries out(s.vars(), s.bound(), false);
  for (const auto& [m, c] : s.terms()) {
    Coeff scale = 1;
    for (Int k = 0; k < m.lexp; ++k) scale *= value;
    out.add_term(Monomial{m.e, 0}, c * scale);
  }
  return out;
}

Monomial power(const Monomial& mono, Int k) {
  Monomial out = mono;
  for (auto& v : out.e) v *= k;
  out.lexp *= k;
  return out;
}

TruncatedSeries geometric_inverse(const Monomial& mono, int power_, int vars, Int bound,
                                  bool motivic) {
  const Int d = mono.degree();
  if (d < 1) throw std::invalid_argument("geometric_inverse: monomial of degree 0");
  if (power_ < 1) throw std::invalid_argument("geometric_inverse: power must be >= 1");
  if (mono.e.size() != static_cast<std::size_t>(vars))
    throw std::invalid_argument("geometric_inverse: wrong number of exponents");
  TruncatedSeries out(vars, bound, motivic || mono.lexp != 0);
  // Coefficient of x^k in (1-x)^{-p} is C(k+p-1, p-1).
  Coeff binom = 1;
  for (Int k = 0; k * d <= bound; ++k) {
    if (k > 0) binom = binom * (k + power_ - 1) / k;
    out.add_term(power(mono, k), binom);
  }
  return out;
}

TruncatedSeries one_minus(const Monomial& mono, int vars, Int bound, bool motivic) {
  TruncatedSeries out = TruncatedSeries::one(vars, bound, motivic || mono.lexp != 0);
  out.add_term(mono, -1);
  return out;
}

TruncatedSeries lefschetz_product(const Monomial& q, Int bound, int lshift, int power_,
                                  bool motivic) {
  const int vars = static_cast<int>(q.e.size());
  TruncatedSeries out = TruncatedSeries::one(vars, bound, motivic);
  const Int d = q.degree();
  if (d < 1) throw std::invalid_argument("lefschetz_product: q has degree 0");
  for (Int m = 1; m * d <= bound; ++m) {
    Monomial qm = power(Monomial{q.e, 0}, m);
    if (motivic) {
      qm.lexp = m + lshift;
      if (qm.lexp < 0) throw std::invalid_argument("lefschetz_product: negative L exponent");
    }
    out *= geometric_inverse(qm, power_, vars, bound, motivic);
  }
  return out;
}

Monomial bar_monomial(RankD rank) { return Monomial{bar_weight(rank), 0}; }

TruncatedSeries eta_factor(RankD rank, Int bound) {
  return lefschetz_product(bar_monomial(rank), bound, 0, rank.n() + 1, false);
}

Rational sin_squared_lower_bound(int d) {
  if (d < 3) throw std::invalid_argument("sin_squared_lower_bound: d must be >= 3");
  // sin x >= x - x^3/6 on [0, sqrt 2], and that bound increases with x, so
  // any x <= pi/d gives a lower bound.
  const Rational x = Rational(314, 100) / d;
  const Rational s = x - x * x * x / 6;
  return 4 * s * s;
}

Int lattice_norm_bound(int dim, const Rational& kappa, Int bound) {
  if (kappa <= 0) throw std::invalid_argument("lattice_norm_bound: kappa must be positive");
  // g(t) = kappa*t - sqrt(dim*t) increases once 4 kappa^2 t > dim.
  for (Int t = 0;; ++t) {
    const Rational lead = kappa * t - bound;
    if (lead > 0 && lead * lead > Rational(dim) * t && 4 * kappa * kappa * t > dim) return t;
  }
}

namespace {

Int isqrt(Int v) {
  if (v <= 0) return 0;
  Int lo = 0, hi = 1;
  while (hi * hi <= v) hi *= 2;
  while (hi - lo > 1) {
    const Int mid = lo + (hi - lo) / 2;
    (mid * mid <= v ? lo : hi) = mid;
  }
  return lo;
}

}  // namespace

TruncatedSeries lattice_sum(const LatticeSpec& spec, Int bound, int extraShell) {
  const Int T = lattice_norm_bound(spec.dim, spec.kappa, bound);
  const Int radius = isqrt(T - 1) + extraShell;
  const Int budget = extraShell == 0 ? T - 1 : radius * radius;
  TruncatedSeries out(spec.vars, bound);
  std::vector<Int> m(static_cast<std::size_t>(spec.dim), 0);
  Monomial mono{std::vector<Int>(static_cast<std::size_t>(spec.vars)), 0};
  auto visit = [&](auto&& self, std::size_t i, Int left) -> void {
    if (i == m.size()) {
      mono.e = spec.exponents(m);
      if (mono.degree() > bound) return;
      if (std::any_of(mono.e.begin(), mono.e.end(), [](Int v) { return v < 0; }))
        throw std::logic_error("lattice_sum: negative exponent within the bound");
      out.add_term(mono, 1);
      return;
    }
    const Int r = isqrt(left);
    for (Int v = -r; v <= r; ++v) {
      m[i] = v;
      self(self, i + 1, left - v * v);
    }
  };
  visit(visit, 0, budget);
  return out;
}

TruncatedSeries theta_sum(RankD rank, Int bound, int extraShell) {
  const int n = rank.n();
  LatticeSpec spec{n, n + 1, (n - 1) * sin_squared_lower_bound(4 * n - 4),
                   [rank](const std::vector<Int>& m) { return theta_exponents(m, rank); }};
  return lattice_sum(spec, bound, extraShell);
}

namespace {

template <class Term>
TruncatedSeries sum_over_walls(RankD rank, Int bound, bool motivic, unsigned threads, Term term) {
  const int vars = rank.n() + 1;
  std::vector<TruncatedSeries> slices(static_cast<std::size_t>(std::max<Int>(bound, -1) + 1),
                                      TruncatedSeries(vars, bound, motivic));
  parallel_for(slices.size(), threads, [&](std::size_t first) {
    for_each_wall_with_first(rank, bound, static_cast<Int>(first), [&](const YoungWallD& w) {
      slices[first].add_term(term(w), 1);
    });
  });
  TruncatedSeries out(vars, bound, motivic);
  for (const auto& s : slices) out += s;
  return out;
}

}  // namespace

TruncatedSeries brute_force_euler(RankD rank, Int bound, unsigned threads) {
  return sum_over_walls(rank, bound, false, threads,
                        [](const YoungWallD& w) { return Monomial{multiweight(w), 0}; });
}

TruncatedSeries closed_form_euler(RankD rank, Int bound) {
  return eta_factor(rank, bound) * theta_sum(rank, bound);
}

TruncatedSeries motivic_closed_form(const Monomial& q, const TruncatedSeries& theta,
                                    MotivicKind kind) {
  const Int bound = theta.bound();
  const int n = static_cast<int>(q.e.size()) - 1;
  TruncatedSeries prod = TruncatedSeries::one(n + 1, bound, true);
  switch (kind) {
    case MotivicKind::Full:
      prod = lefschetz_product(q, bound, 1, 1, true) * lefschetz_product(q, bound, 0, n, true);
      break;
    case MotivicKind::Punctual:
      prod = lefschetz_product(q, bound, -1, 1, true) * lefschetz_product(q, bound, 0, n, true);
      break;
    case MotivicKind::Divisor:
      prod = lefschetz_product(q, bound, 0, n + 1, true);
      break;
  }
  return prod * theta;
}

TruncatedSeries motivic_full(RankD rank, Int bound) {
  return motivic_closed_form(bar_monomial(rank), theta_sum(rank, bound), MotivicKind::Full);
}

TruncatedSeries motivic_punctual(RankD rank, Int bound) {
  return motivic_closed_form(bar_monomial(rank), theta_sum(rank, bound), MotivicKind::Punctual);
}

TruncatedSeries motivic_divisor(RankD rank, Int bound) {
  return motivic_closed_form(bar_monomial(rank), theta_sum(rank, bound), MotivicKind::Divisor);
}

TruncatedSeries brute_force_motivic_divisor(RankD rank, Int bound, unsigned threads) {
  return sum_over_walls(rank, bound, true, threads, [](const YoungWallD& w) {
    return Monomial{multiweight(w), compute_core(wall_to_abacus(w)).barsRemoved};
  });
}

std::string format_monomial(const Monomial& m, bool motivic) {
  std::string out;
  for (std::size_t j = 0; j < m.e.size(); ++j) {
    if (j) out += ' ';
    out += std::to_string(m.e[j]);
  }
  if (motivic) out += " L^" + std::to_string(m.lexp);
  return out;
}

std::string to_text(const TruncatedSeries& s) {
  std::string out;
  for (const auto& [m, c] : s.terms()) out += format_monomial(m, s.motivic()) + " : " + c.str() + '\n';
  return out;
}

std::string to_csv(const TruncatedSeries& s) {
  std::string out;
  for (int j = 0; j < s.vars(); ++j) out += "e" + std::to_string(j) + ',';
  if (s.motivic()) out += "L,";
  out += "coeff\n";
  for (const auto& [m, c] : s.terms()) {
    for (Int v : m.e) out += std::to_string(v) + ',';
    if (s.motivic()) out += std::to_string(m.lexp) + ',';
    out += c.str() + '\n';
  }
  return out;
}

std::optional<std::string> first_mismatch(const TruncatedSeries& lhs, const TruncatedSeries& rhs,
                                          const std::string& lhsName, const std::string& rhsName) {
  if (lhs.vars() != rhs.vars() || lhs.bound() != rhs.bound()) {
    std::ostringstream msg;
    msg << "shape mismatch: " << lhsName << " has " << lhs.vars() << " variables, bound "
        << lhs.bound() << "; " << rhsName << " has " << rhs.vars() << " variables, bound "
        << rhs.bound();
    return msg.str();
  }
  const bool motivic = lhs.motivic() || rhs.motivic();
  GradedLex less;
  auto a = lhs.terms().begin(), b = rhs.terms().begin();
  const auto ae = lhs.terms().end(), be = rhs.terms().end();
  while (a != ae || b != be) {
    const Monomial* m;
    if (b == be || (a != ae && less(a->first, b->first)))
      m = &a->first;
    else
      m = &b->first;
    const Coeff ca = (a != ae && a->first == *m) ? a->second : Coeff{0};
    const Coeff cb = (b != be && b->first == *m) ? b->second : Coeff{0};
    if (ca != cb)
      return "first mismatch at " + format_monomial(*m, motivic) + ": " + lhsName + "=" + ca.str() +
             " " + rhsName + "=" + cb.str();
    if (a != ae && a->first == *m) ++a;
    if (b != be && b->first == *m) ++b;
  }
  return std::nullopt;
}

}  // namespace ywalls
