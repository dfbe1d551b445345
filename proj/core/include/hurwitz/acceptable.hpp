#ifndef HURWITZ_ACCEPTABLE_HPP
#define HURWITZ_ACCEPTABLE_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hurwitz/cover_class.hpp"

namespace hurwitz {

// The third acceptability condition has two readings. The published text
// bounds every later entry against twice the first one (Literal:
// a_{i+1} - a_1 <= a_1), but that contradicts the s = d-2 maximizing tuple,
// e.g. (2,4,5) for d=4, g=8. The Gap reading bounds consecutive gaps
// (a_{i+1} - a_i <= a_1) and is consistent with all three maximizer cases,
// so it is the default; Literal stays available for auditing the
// discrepancy.
enum class Condition3 { Gap, Literal };

struct AcceptabilityConfig {
  Condition3 condition3 = Condition3::Gap;
};

// An acceptable (d-1)-tuple is non-decreasing, sums to b/2, and satisfies
//   (1) a_1 >= b / (d(d-1)),
//   (2) a_{d-1} <= b / d,
//   (3) per AcceptabilityConfig.
// The rational bounds are compared by integer cross-multiplication, never by
// rounding. Throws std::invalid_argument when the tuple length is not d-1.
bool is_acceptable(const std::vector<int>& tuple, const CoverClass& cc,
                   const AcceptabilityConfig& cfg = {});

// Inclusive entry range allowed by conditions (1) and (2):
// [ceil(b/(d(d-1))), floor(b/d)].
std::pair<int, int> acceptable_entry_bounds(const CoverClass& cc);

// All acceptable tuples in lexicographic order, optionally restricted to a
// fixed first entry.
std::vector<std::vector<int>> enumerate_acceptable(
    const CoverClass& cc, const AcceptabilityConfig& cfg = {},
    std::optional<int> first_entry = std::nullopt);

// The objective sum_{i=1}^{d-1} (d-i) a_i maximized by the most balanced
// acceptable tuple.
long weighted_sum(const std::vector<int>& tuple, int d);

// The maximizer is asserted to be unique; a tie means the configuration sits
// outside the hypotheses and must not be broken silently.
class TieError : public std::runtime_error {
 public:
  explicit TieError(const std::string& what) : std::runtime_error(what) {}
};

// A closed-form case carries a hypothesis that the given (d, g) violates.
class ExclusionError : public std::domain_error {
 public:
  explicit ExclusionError(const std::string& what) : std::domain_error(what) {}
};

// The unique acceptable tuple with the given first entry maximizing
// weighted_sum, found by exhaustive enumeration. Throws std::domain_error
// when no acceptable tuple has that first entry, TieError when the argmax
// is not unique.
std::vector<int> maximize(const CoverClass& cc, int first_entry,
                          const AcceptabilityConfig& cfg = {});

// Closed form of the maximizer with first entry k:
//   s <= d-4:  (k, (k+1)^(d-s-3), (k+2)^(s+1))
//   s  = d-3:  (k, (k+2)^(d-2))          requires g != 2(d-2)
//   s  = d-2:  (k, (k+2)^(d-3), k+3)     requires g != 2d-3 and (d,g) != (3,5)
// Always sums to b/2. Throws ExclusionError naming the violated hypothesis.
std::vector<int> closed_form_maximizer(const CoverClass& cc);

}  // namespace hurwitz

#endif
