#ifndef HURWITZ_COVER_CLASS_HPP
#define HURWITZ_COVER_CLASS_HPP

#include <utility>
#include <vector>

#include "hurwitz/splitting_type.hpp"

namespace hurwitz {

// The numerical class of a simply-branched degree-d cover of the line by a
// genus-g curve. Writing g = k(d-1) + s with 0 <= s <= d-2 fixes the derived
// invariants; simple branching gives b = 2g + 2d - 2 branch points (always
// even).
class CoverClass {
 public:
  // Requires 3 <= d <= g, the domain in which all stratification results
  // hold. Throws std::domain_error otherwise.
  static CoverClass decompose(int d, int g);

  // Exploration constructor: only requires 2 <= d <= g (d >= 2 is forced by
  // the range 0 <= s <= d-2). Results for d < 3 carry no divisor guarantees.
  static CoverClass decompose_relaxed(int d, int g);

  int d() const { return d_; }
  int g() const { return g_; }
  int k() const { return k_; }
  int s() const { return s_; }
  int b() const { return b_; }

  bool operator==(const CoverClass&) const = default;

 private:
  CoverClass(int d, int g);
  int d_, g_, k_, s_, b_;
};

// Splitting type of the pushforward of the structure sheaf for a general
// cover in the class: one zero exponent, d-1-s exponents -(k+1) and s
// exponents -(k+2). Its degree is 1 - g - d.
SplittingType generic_pushforward(const CoverClass& cc);

// (h0, h1) of the generic pushforward twisted by O(twist). At twist = k the
// result is (k+1, s).
std::pair<long, long> twisted_section_counts(const CoverClass& cc, int twist);

// Splitting type of the pushforward of O_C(D) for a general cover together
// with a general degree-s ramification divisor D: one zero exponent and d-1
// exponents -(k+1). Its degree is s + 1 - g - d.
SplittingType balanced_pushforward_with_divisor(const CoverClass& cc);

// Pushforward of the structure sheaf for a general cover inside the
// divisorial stratum, i.e. a cover whose splitting invariant is the
// maximizing tuple (k, (k+1)^(d-s-3), (k+2)^(s+1)). Exponents are
// {0, -k, (-(k+1)) x (d-s-3), (-(k+2)) x (s+1)}; its section counts at
// twist k are (k+2, s+1). Only defined for s <= d-4; throws
// std::domain_error otherwise (the remaining cases have no closed
// pushforward form here).
SplittingType divisorial_stratum_pushforward(const CoverClass& cc);

// The type of the dual of the cokernel of O -> (pushforward): negations of
// the nonzero exponents. Requires exactly one zero exponent and all others
// <= -1 (equivalently h0 = 1, so the trivial summand splits off); throws
// std::invalid_argument when that fails.
SplittingType cokernel_dual_type(const SplittingType& pushforward);

// Whether the cokernel dual of `pushforward`, twisted by -(k+1), has the
// unbalanced witness shape: minimum exponent exactly -1, every other
// exponent >= 0, and total degree 0. Preconditions as in cokernel_dual_type.
bool unbalanced_twisted_dual_check(const SplittingType& pushforward, int k);

// Whether (d, g) admits the non-empty divisor: 3 <= d <= g with g != 2d-3,
// g != 2d-4 and (d, g) != (3, 5). Pure predicate, never throws.
bool divisorial_gate(int d, int g);

// Reason string for a gate rejection, empty when the gate passes.
std::string divisorial_gate_reason(int d, int g);

// Dimension ledger of the greedy choice of the degree-s divisor D: the
// residual linear system starts at dimension s and drops by one for each
// ramification point chosen, which is possible at every step because the
// number of ramification points exceeds the residual degree.
struct GreedyTrajectory {
  std::vector<int> steps;  // s, s-1, ..., 0
  int residual_degree;     // 2g - 2 - kd
  int branch_count;        // b

  // The step-by-step feasibility certificate; identically true in domain
  // since branch_count - residual_degree = (k+2) d.
  bool feasible() const { return branch_count > residual_degree; }
};

GreedyTrajectory greedy_trajectory(const CoverClass& cc);

}  // namespace hurwitz

#endif
