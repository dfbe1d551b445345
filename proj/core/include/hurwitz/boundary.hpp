#ifndef HURWITZ_BOUNDARY_HPP
#define HURWITZ_BOUNDARY_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "hurwitz/cover_class.hpp"
#include "hurwitz/partition.hpp"
#include "hurwitz/rational.hpp"

namespace hurwitz {

// Canonical label (j, mu) of a boundary stratum: j branch points on one
// target component, ramification profile mu over the node. Labels with j and
// b-j name the same stratum; the canonical representative has j <= b-j.
struct StratumLabel {
  // Validates 2 <= j <= b-2 and stores the canonical representative.
  StratumLabel(int j, Partition mu, int b);

  static int canonical_j(int j, int b) { return std::min(j, b - j); }

  int j;
  Partition mu;
  int b;

  // "j=2,mu=2,1", used in file lookups and error messages.
  std::string key() const;

  bool operator==(const StratumLabel&) const = default;
};

// All canonical labels for the class, ordered by j ascending and mu in
// reverse-lexicographic order. The count is (floor(b/2) - 1) * p(d).
std::vector<StratumLabel> enumerate_strata(const CoverClass& cc);

// The constant attached to a component of the stratum: d - n - 2(r - dotP2),
// where n is the number of points over the node, r the rank of the trivial
// pushforward on the open part, and dotP2 the intersection of the chosen
// divisor with the second target component. Requires 1 <= n <= d.
long chain_constant(int d, int n, long r, long dot_p2);

// Numerical data along the chain of rational components R_0, ..., R_m that
// the fibre over a boundary point breaks into. delta and e carry m+1 exact
// rationals each, indexed 0..m.
struct ChainData {
  int m = 1;
  long c = 0;
  std::vector<Rational> delta;
  std::vector<Rational> e;
};

// Coefficients of the correction divisor supported on R_0, ..., R_{m-1}:
// -(1/2) ((m-i) c - delta_i) for i = 0..m-1.
std::vector<Rational> correction_coefficients(const ChainData& chain);

// Default chain length m(mu) = lcm of the parts. A convention standing in
// for companion data; every consumer records when it was used.
int default_chain_length(const Partition& mu);

// Half-step sequence (m/2, (m-1)/2, ..., 0). Makes the e-term of sigma
// vanish, since sum of squared steps = m/4. Convention placeholder.
std::vector<Rational> default_e(int m);

// Chain data built entirely from conventions: m = lcm(mu), c = 0, delta
// constant zero, e the half-step sequence.
ChainData default_chain_data(const StratumLabel& label);

// The boundary coefficient of a stratum component, with m = chain.m and
// n = number of parts of mu:
//
//   m ( (1/12)(d - sum_v 1/m_v) + j(b-j)(d-2) / (8(b-1)(d-1)) )
//   - (1/(8(d-1))) sum_{i=1}^{m} (delta_{i-1} - delta_i)^2
//   - ((d-1)/2) ( m/4 - sum_{i=1}^{m} (e_{i-1} - e_i)^2 )
//
// in exact rational arithmetic. Invariant under j -> b-j. Throws
// std::invalid_argument on a j out of [2, b-2], a mu that is not a partition
// of d, or delta/e of length != m+1.
Rational sigma(const CoverClass& cc, int j, const Partition& mu,
               const ChainData& chain);

// Raised when a chain-data file lacks an entry for a canonical label.
class MissingChainDataError : public std::runtime_error {
 public:
  explicit MissingChainDataError(const std::string& what)
      : std::runtime_error(what) {}
};

// Chain data resolved for one stratum, with a per-slot record of where each
// of m, c, delta, e came from ("file" or "default").
struct SourcedChainData {
  ChainData data;
  std::string provenance;  // e.g. "m=default,c=default,delta=default,e=default"
};

// Supplies chain data per canonical label: either the documented default
// conventions or entries ingested from a file.
class ChainDataSource {
 public:
  virtual ~ChainDataSource() = default;
  virtual SourcedChainData get(const CoverClass& cc,
                               const StratumLabel& label) const = 0;
};

// The all-defaults source.
class DefaultChainSource final : public ChainDataSource {
 public:
  SourcedChainData get(const CoverClass& cc,
                       const StratumLabel& label) const override;
};

struct SigmaRow {
  StratumLabel label;
  int m;
  Rational sigma;
  std::string provenance;
};

// sigma over every canonical label of the class, in enumerate_strata order.
// Deterministic; missing file entries surface as MissingChainDataError.
std::vector<SigmaRow> sigma_table(const CoverClass& cc,
                                  const ChainDataSource& source);

}  // namespace hurwitz

#endif
