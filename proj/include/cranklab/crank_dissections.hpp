#pragma once

#include "cranklab/series_products.hpp"
#include "cranklab/theta.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace cranklab {

/// F_a(q) = (q;q)_oo / ((aq;q)_oo (q/a;q)_oo) to order N, exact over Z[a, 1/a].
LaurentSeries crank_gf(int N);

/// F_a(q) with coefficients in any ring that can represent a: division by (1 - a q^k) and
/// (1 - q^k/a) applied in place to (q;q)_oo.
template <class Ring>
TruncatedSeries<Ring> crank_gf(const Ring& ring, int N) {
  auto s = lift_series(euler_function(1, N), ring);
  for (int k = 1; k <= N; ++k) {
    s.divide_by_binomial({1, 1, 0, k});
    s.divide_by_binomial({1, -1, 0, k});
  }
  return s;
}

ResidueSeries crank_gf_mod(const CyclotomicModulus& m, int N);

/// lambda_n a^m coefficients against enumerated M(m, n) for 2 <= n <= N, lambda_0 = 1 and
/// lambda_1 = a - 1 + 1/a (the generating-function convention at n = 1).
VerificationReport gf_matches_counts(int N);
VerificationReport gf_matches_counts(const LaurentSeries& F);

// Dissections -------------------------------------------------------------------------------

/// One a-free factor of a dissection term.
struct SeriesFactor {
  enum class Kind {
    theta,       // f(-q^e1, -q^e2)
    euler,       // (q^e1; q^e1)_oo
    pochhammer,  // (sign q^e1; q^e2)_oo
  };
  Kind kind = Kind::theta;
  int e1 = 1;
  int e2 = 2;
  int sign = -1;

  static SeriesFactor theta(int x, int y) { return {Kind::theta, x, y, -1}; }
  static SeriesFactor euler(int t) { return {Kind::euler, t, t, 1}; }
  static SeriesFactor poch(int sign, int e, int step) { return {Kind::pochhammer, e, step, sign}; }

  std::string to_string() const;
  auto operator<=>(const SeriesFactor&) const = default;
};

/// coefficient(a) * q^shift * prod factor^power.
struct DissectionTerm {
  LaurentPolynomial coefficient;
  int shift = 0;
  std::vector<std::pair<SeriesFactor, int>> factors;
};

struct DissectionForm {
  int m = 2;
  std::string modulus;
  std::vector<DissectionTerm> terms;
  /// Factors applied to every term (the common denominator, as negative powers).
  std::vector<std::pair<SeriesFactor, int>> common;
};

/// The right side of the m-dissection as printed (corrected = false), or with the documented
/// corrections (m = 3 and 7 only; other m return the printed form).
DissectionForm dissection_form(int which, bool corrected = false);
/// Short description of what the corrected form changes, empty if nothing.
std::string dissection_correction(int which);

/// Exact a-free expansion of prod factor^power to order N.
IntegerSeries factor_product(const std::vector<std::pair<SeriesFactor, int>>& factors, int N);
/// Right side of a dissection form reduced modulo its modulus.
ResidueSeries dissection_rhs(const DissectionForm& form, int N);
/// Compares F_a mod the form's modulus with dissection_rhs; a mismatch names the component.
VerificationReport check_dissection_form(const DissectionForm& form, int N,
                                         const std::string& name);

/// Default truncation budget per dissection: 500 for 2, 3, 5; 400 for 7; 300 for 11.
int default_dissection_budget(int which);

/// Literal-first check of the which-dissection. Throws std::out_of_range if N exceeds the
/// budget (default budget when none is given). On success, residue classes absent from the
/// form are also checked to vanish identically and the result is recorded in the notes.
VerificationReport verify_dissection(int which, int N, std::optional<int> budget = std::nullopt);

/// Residue classes j mod m for which the m-component of F_a vanishes modulo the modulus.
std::vector<int> vanishing_components(int which, int N);

// Residue congruences -----------------------------------------------------------------------

/// The a-free quotient stated for a modulus: f(-q)f(-q^2)/f(-q^4), f(-q^2)f(-q^3)/f(-q^6),
/// f(-q)^2/f(-q^3) for "a+1/a", "a-1+1/a", "a+1+1/a".
IntegerSeries residue_quotient(const std::string& modulus_name, int N);
/// F_a reduced modulo the modulus against an a-free series.
VerificationReport residue_check(const std::string& modulus_name, const IntegerSeries& quotient,
                                 int N);
/// residue_check with residue_quotient. For "a-1+1/a" the quotient is also checked against the
/// printed tag "a+1/a" and the outcome recorded in the notes.
VerificationReport residue_gf(const std::string& modulus_name, int N);

// Series identities -------------------------------------------------------------------------

/// 1 - sign * sum_{m>=1, n>=0} (-1)^m q^{m(m+1)/2 + mn} (A_{n+1} - A_n). sign = +1 is the identity.
LaurentSeries ram1_numerator(int N, int sign = 1);
VerificationReport verify_ram1(int N);

/// sum_k a_k (1-x)/(1-x q^k) with x = a, negative k rewritten as -(1-x) a_k sum_{i>=1} (q^{-k}/x)^i.
LaurentSeries kac_wakimoto_sum(int N, std::optional<int> omit_k = std::nullopt);
LaurentSeries kac_wakimoto_product(int N);
VerificationReport verify_kac_wakimoto(int N);

/// (1+a) S_1(a, q).
LaurentSeries s1_times_one_plus_a(int N);
/// S_2(a, q) with a_n = a^n + a^{-n} for n >= 1 and the given a_0.
LaurentSeries s2_series(int N, const LaurentPolynomial& a0);
/// F_{-a}(q) from crank_gf by a -> -a.
LaurentSeries crank_gf_negated(int N);
/// Printed (1+a)S_1 = S_2 [a_0 = 1] = F_{-a} first; then (1+a)S_1 = S_2 [a_0 = 2] = (q;q)_oo F_{-a}.
VerificationReport verify_s1_s2(int N);

/// F_a against (q;q)_oo (-aq;q)_oo (-q/a;q)_oo / (-q^4;q^4)_oo modulo the given modulus.
VerificationReport rationalization_residue(int N, const std::string& modulus_name = "A2");

}  // namespace cranklab
