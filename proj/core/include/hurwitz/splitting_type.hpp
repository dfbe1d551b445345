#ifndef HURWITZ_SPLITTING_TYPE_HPP
#define HURWITZ_SPLITTING_TYPE_HPP

#include <initializer_list>
#include <string>
#include <vector>

namespace hurwitz {

// A split vector bundle O(e_1) + ... + O(e_r) on the projective line,
// represented by its non-decreasing exponent tuple.
//
// Sign convention: exponents are actual line-bundle degrees. Pushforwards of
// structure sheaves therefore carry non-positive entries (one zero summand
// plus negative ones), while duals of cokernels carry positive entries. No
// implicit negation happens anywhere in this class.
class SplittingType {
 public:
  // Sorts the exponents; the list must be nonempty.
  explicit SplittingType(std::vector<int> exponents);
  SplittingType(std::initializer_list<int> exponents);

  const std::vector<int>& exponents() const { return exponents_; }
  int rank() const { return static_cast<int>(exponents_.size()); }
  long degree() const;

  int min_exponent() const { return exponents_.front(); }
  int max_exponent() const { return exponents_.back(); }

  // Number of independent sections, sum_i max(e_i + 1, 0).
  long h0() const;
  // First cohomology, sum_i max(-e_i - 1, 0). Always h0() - h1() ==
  // degree() + rank().
  long h1() const;

  // All exponents shifted by m (tensoring with O(m)).
  SplittingType twist(int m) const;
  // Exponents negated and re-sorted.
  SplittingType dual() const;

  // True iff every exponent is zero. For degree-zero bundles this is the
  // non-degeneracy condition of the global-to-local evaluation map.
  bool is_trivial() const;
  // True iff max exponent - min exponent <= 1.
  bool is_balanced() const;
  // True iff h0() meets the minimum possible for this rank and degree.
  bool has_minimal_sections() const;

  // Comma-joined exponents, e.g. "-3,-3,0".
  std::string str() const;

  bool operator==(const SplittingType&) const = default;

 private:
  std::vector<int> exponents_;
};

// Minimum section count over all split bundles of the given rank and degree:
// max(rank + degree, 0). Attained by any type with all exponents >= -1 when
// degree >= -rank, and by all-negative types otherwise. rank must be >= 1.
long minimal_h0(int rank, long degree);

}  // namespace hurwitz

#endif
