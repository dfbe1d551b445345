#ifndef HURWITZ_CHAIN_FILE_HPP
#define HURWITZ_CHAIN_FILE_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hurwitz/boundary.hpp"

namespace hurwitz {

// Chain data ingested from a JSON document of the form
//
//   {
//     "d": 3, "g": 4,                  // optional sanity check
//     "entries": [
//       {
//         "j": 2,
//         "mu": [2, 1],
//         "m": 2,                      // optional; default lcm(mu)
//         "c": 0,                      // optional; or give "r" and "dotP2"
//         "r": 1, "dotP2": 0,          //   then c = d - n - 2(r - dotP2)
//         "n": 2,                      // optional; must equal #parts of mu
//         "delta": ["0", "1/2", "0"],  // optional; m+1 rationals
//         "e": ["1", "1/2", "0"]       // optional; m+1 rationals
//       }
//     ]
//   }
//
// Rationals are "p/q" or integer strings (bare JSON integers are accepted
// too). Omitted fields fall back to the documented conventions and are
// flagged as such in the per-slot provenance. Every canonical label of the
// class must have an entry; a missing one raises MissingChainDataError.
class FileChainSource final : public ChainDataSource {
 public:
  static FileChainSource load(const std::string& path);
  static FileChainSource parse(const std::string& json_text);

  SourcedChainData get(const CoverClass& cc,
                       const StratumLabel& label) const override;

 private:
  struct Entry {
    int j = 0;
    std::vector<int> mu_parts;
    std::optional<int> m;
    std::optional<long> c;
    std::optional<long> r;
    std::optional<long> dot_p2;
    std::optional<std::vector<Rational>> delta;
    std::optional<std::vector<Rational>> e;
  };

  FileChainSource() = default;

  std::optional<int> d_, g_;
  // keyed by (j as written, non-increasing parts)
  std::map<std::pair<int, std::vector<int>>, Entry> entries_;
};

}  // namespace hurwitz

#endif
