#ifndef YWALLS_SERIES_HPP
#define YWALLS_SERIES_HPP

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "ywalls/rank.hpp"

namespace ywalls {

using Coeff = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// q_0^{e_0} ... q_n^{e_n} L^{lexp}. Only the q-exponents count towards the
// truncation degree.
struct Monomial {
  std::vector<Int> e;
  Int lexp = 0;

  Int degree() const;
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

// Graded lexicographic: (degree, e_0, ..., e_n, lexp).
struct GradedLex {
  bool operator()(const Monomial& x, const Monomial& y) const;
};

/// Polynomial in q_0..q_{vars-1} (and L when motivic) truncated above total
/// q-degree `bound`, with exact coefficients. Zero coefficients are never stored.
class TruncatedSeries {
 public:
  using Terms = std::map<Monomial, Coeff, GradedLex>;

  TruncatedSeries(int vars, Int bound, bool motivic = false);

  static TruncatedSeries one(int vars, Int bound, bool motivic = false);
  static TruncatedSeries monomial(const Monomial& m, Int bound, const Coeff& c = 1,
                                  bool motivic = false);

  int vars() const noexcept { return vars_; }
  Int bound() const noexcept { return bound_; }
  bool motivic() const noexcept { return motivic_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  Coeff coeff(const Monomial& m) const;
  /// Adds c to the coefficient of m; monomials above the bound are dropped.
  void add_term(const Monomial& m, const Coeff& c);

  TruncatedSeries& operator+=(const TruncatedSeries& other);
  TruncatedSeries& operator-=(const TruncatedSeries& other);
  TruncatedSeries& operator*=(const TruncatedSeries& other);

  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator-(const TruncatedSeries& a);
  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

 private:
  void check_compatible(const TruncatedSeries& other) const;

  int vars_;
  Int bound_;
  bool motivic_;
  Terms terms_;
};

/// Throw std::invalid_argument on rank/bound mismatch.
TruncatedSeries series_add(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b);

/// Substitutes an integer for L; the result is not motivic.
TruncatedSeries specialize_L(const TruncatedSeries& s, Int value);

/// (1 - mono)^{-power}. Throws std::invalid_argument if mono has q-degree 0
/// or power < 1.
TruncatedSeries geometric_inverse(const Monomial& mono, int power, int vars, Int bound,
                                  bool motivic = false);

/// 1 - mono.
TruncatedSeries one_minus(const Monomial& mono, int vars, Int bound, bool motivic = false);

/// mono^k.
Monomial power(const Monomial& mono, Int k);

/// prod_{m >= 1} (1 - L^{m + lshift} q^m)^{-power}, for the given q.
/// lshift = 0 and a non-motivic series give prod (1 - q^m)^{-power}.
TruncatedSeries lefschetz_product(const Monomial& q, Int bound, int lshift, int power,
                                  bool motivic);

/// q = q_0 q_1 q_2^2 ... q_{n-2}^2 q_{n-1} q_n.
Monomial bar_monomial(RankD rank);

/// prod_{m >= 1} (1 - q^m)^{-(n+1)}.
TruncatedSeries eta_factor(RankD rank, Int bound);

/// Lower bound for 4 sin^2(pi / d), d >= 4, as an exact rational.
Rational sin_squared_lower_bound(int d);

/// Smallest T such that kappa*t - sqrt(dim*t) > bound for every integer t >= T.
Int lattice_norm_bound(int dim, const Rational& kappa, Int bound);

struct LatticeSpec {
  int dim;       // lattice rank
  int vars;      // q-variables in the result
  Rational kappa;  // degree(m) >= kappa*|m|^2 - |m|_1
  // Exponent vector of the monomial attached to m.
  std::function<std::vector<Int>(const std::vector<Int>&)> exponents;
};

/// Sums the lattice monomials of degree <= bound. Every m outside the ball
/// |m|^2 < lattice_norm_bound is excluded by the degree estimate;
/// extraShell widens the search box for soundness checks. Throws
/// std::logic_error if a retained monomial has a negative exponent.
TruncatedSeries lattice_sum(const LatticeSpec& spec, Int bound, int extraShell = 0);

/// Sum over m in Z^n of q_1^{m_1}...q_n^{m_n} q^{Q(m)} for the D_n form.
TruncatedSeries theta_sum(RankD rank, Int bound, int extraShell = 0);

/// Sum over walls of weight <= bound of q^{wt}.
TruncatedSeries brute_force_euler(RankD rank, Int bound, unsigned threads = 1);
TruncatedSeries closed_form_euler(RankD rank, Int bound);

enum class MotivicKind { Full, Punctual, Divisor };

/// Motivic closed form for a root system with the given bar monomial q,
/// n+1 = q.e.size() and theta series.
TruncatedSeries motivic_closed_form(const Monomial& q, const TruncatedSeries& theta,
                                    MotivicKind kind);

TruncatedSeries motivic_full(RankD rank, Int bound);
TruncatedSeries motivic_punctual(RankD rank, Int bound);
TruncatedSeries motivic_divisor(RankD rank, Int bound);

/// Sum over walls of L^{bars removed to reach the core} q^{wt}.
TruncatedSeries brute_force_motivic_divisor(RankD rank, Int bound, unsigned threads = 1);

/// One term per line: "e0 e1 ... en [L^k] : coeff", graded-lex order.
/// Motivic series always carry the L^k column.
std::string to_text(const TruncatedSeries& s);
/// Header "e0,...,en[,L],coeff" then one row per term.
std::string to_csv(const TruncatedSeries& s);
std::string format_monomial(const Monomial& m, bool motivic);

/// Human-readable description of the first monomial (graded-lex) where the
/// coefficients differ, or nullopt if the series are equal.
std::optional<std::string> first_mismatch(const TruncatedSeries& lhs, const TruncatedSeries& rhs,
                                          const std::string& lhsName = "lhs",
                                          const std::string& rhsName = "rhs");

}  // namespace ywalls

#endif
