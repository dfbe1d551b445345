#include "hurwitz/splitting_type.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace hurwitz {

SplittingType::SplittingType(std::vector<int> exponents)
    : exponents_(std::move(exponents)) {
  if (exponents_.empty())
    throw std::invalid_argument("SplittingType: rank must be at least 1");
  std::sort(exponents_.begin(), exponents_.end());
}

SplittingType::SplittingType(std::initializer_list<int> exponents)
    : SplittingType(std::vector<int>(exponents)) {}

long SplittingType::degree() const {
  return std::accumulate(exponents_.begin(), exponents_.end(), 0L);
}

long SplittingType::h0() const {
  long total = 0;
  for (int e : exponents_) total += std::max(e + 1, 0);
  return total;
}

long SplittingType::h1() const {
  long total = 0;
  for (int e : exponents_) total += std::max(-e - 1, 0);
  return total;
}

SplittingType SplittingType::twist(int m) const {
  std::vector<int> shifted(exponents_);
  for (int& e : shifted) e += m;
  return SplittingType(std::move(shifted));
}

SplittingType SplittingType::dual() const {
  std::vector<int> negated(exponents_);
  for (int& e : negated) e = -e;
  return SplittingType(std::move(negated));
}

bool SplittingType::is_trivial() const {
  return std::all_of(exponents_.begin(), exponents_.end(),
                     [](int e) { return e == 0; });
}

bool SplittingType::is_balanced() const {
  return max_exponent() - min_exponent() <= 1;
}

bool SplittingType::has_minimal_sections() const {
  return h0() == minimal_h0(rank(), degree());
}

std::string SplittingType::str() const {
  std::string out;
  for (std::size_t i = 0; i < exponents_.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(exponents_[i]);
  }
  return out;
}

long minimal_h0(int rank, long degree) {
  if (rank < 1) throw std::invalid_argument("minimal_h0: rank must be >= 1");
  return std::max(rank + degree, 0L);
}

}  // namespace hurwitz
