#include "hurwitz/acceptable.hpp"

#include <algorithm>
#include <numeric>

namespace hurwitz {

namespace {

bool condition3_holds(const std::vector<int>& t, const AcceptabilityConfig& cfg) {
  for (std::size_t i = 0; i + 1 < t.size(); ++i) {
    const int bound = t[0];
    const int excess = cfg.condition3 == Condition3::Gap ? t[i + 1] - t[i]
                                                         : t[i + 1] - t[0];
    if (excess > bound) return false;
  }
  return true;
}

void enumerate_rec(const CoverClass& cc, const AcceptabilityConfig& cfg,
                   int lo, int hi, long remaining, std::vector<int>& prefix,
                   std::vector<std::vector<int>>& out) {
  const int len = cc.d() - 1;
  const int pos = static_cast<int>(prefix.size());
  if (pos == len) {
    if (remaining == 0) out.push_back(prefix);
    return;
  }
  int from = prefix.empty() ? lo : std::max(lo, prefix.back());
  for (int a = from; a <= hi; ++a) {
    if (!prefix.empty()) {
      // prune by condition (3); both readings bound entries from above
      const int cap = cfg.condition3 == Condition3::Gap ? prefix.back() + prefix[0]
                                                        : 2 * prefix[0];
      if (a > cap) break;
    }
    const long rest = remaining - a;
    const int slots = len - pos - 1;
    // remaining entries are >= a and <= hi
    if (rest < static_cast<long>(slots) * a) break;
    if (rest > static_cast<long>(slots) * hi) continue;
    prefix.push_back(a);
    enumerate_rec(cc, cfg, lo, hi, rest, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::pair<int, int> acceptable_entry_bounds(const CoverClass& cc) {
  const long b = cc.b();
  const long d = cc.d();
  // exact ceil(b / (d(d-1))) and floor(b / d) for positive b
  const long lo = (b + d * (d - 1) - 1) / (d * (d - 1));
  const long hi = b / d;
  return {static_cast<int>(lo), static_cast<int>(hi)};
}

bool is_acceptable(const std::vector<int>& tuple, const CoverClass& cc,
                   const AcceptabilityConfig& cfg) {
  const std::size_t len = static_cast<std::size_t>(cc.d()) - 1;
  if (tuple.size() != len)
    throw std::invalid_argument("is_acceptable: expected a (d-1)-tuple of length " +
                                std::to_string(len) + ", got length " +
                                std::to_string(tuple.size()));
  if (!std::is_sorted(tuple.begin(), tuple.end())) return false;
  const long b = cc.b();
  const long d = cc.d();
  if (std::accumulate(tuple.begin(), tuple.end(), 0L) != b / 2) return false;
  // (1) a_1 >= b/(d(d-1)) and (2) a_{d-1} <= b/d, by cross-multiplication
  if (static_cast<long>(tuple.front()) * d * (d - 1) < b) return false;
  if (static_cast<long>(tuple.back()) * d > b) return false;
  return condition3_holds(tuple, cfg);
}

std::vector<std::vector<int>> enumerate_acceptable(
    const CoverClass& cc, const AcceptabilityConfig& cfg,
    std::optional<int> first_entry) {
  auto [lo, hi] = acceptable_entry_bounds(cc);
  if (first_entry) {
    if (*first_entry < lo || *first_entry > hi) return {};
    lo = hi = *first_entry;
  }
  std::vector<std::vector<int>> out;
  std::vector<int> prefix;
  const auto [entry_lo, entry_hi] = acceptable_entry_bounds(cc);
  for (int a1 = lo; a1 <= hi; ++a1) {
    prefix.assign(1, a1);
    enumerate_rec(cc, cfg, entry_lo, entry_hi, cc.b() / 2 - a1, prefix, out);
  }
  return out;
}

long weighted_sum(const std::vector<int>& tuple, int d) {
  long total = 0;
  for (std::size_t i = 0; i < tuple.size(); ++i)
    total += static_cast<long>(d - 1 - static_cast<int>(i)) * tuple[i];
  return total;
}

std::vector<int> maximize(const CoverClass& cc, int first_entry,
                          const AcceptabilityConfig& cfg) {
  const auto candidates = enumerate_acceptable(cc, cfg, first_entry);
  if (candidates.empty())
    throw std::domain_error("maximize: no acceptable tuple with first entry " +
                            std::to_string(first_entry) + " for (d,g)=(" +
                            std::to_string(cc.d()) + "," + std::to_string(cc.g()) + ")");
  const std::vector<int>* best = &candidates.front();
  long best_weight = weighted_sum(*best, cc.d());
  bool tie = false;
  for (std::size_t i = 1; i < candidates.size(); ++i) {
    const long w = weighted_sum(candidates[i], cc.d());
    if (w > best_weight) {
      best = &candidates[i];
      best_weight = w;
      tie = false;
    } else if (w == best_weight) {
      tie = true;
    }
  }
  if (tie)
    throw TieError("maximize: weighted sum " + std::to_string(best_weight) +
                   " attained by more than one acceptable tuple for (d,g)=(" +
                   std::to_string(cc.d()) + "," + std::to_string(cc.g()) + ")");
  return *best;
}

std::vector<int> closed_form_maximizer(const CoverClass& cc) {
  const int d = cc.d(), g = cc.g(), k = cc.k(), s = cc.s();
  std::vector<int> t;
  t.reserve(d - 1);
  if (s <= d - 4) {
    t.push_back(k);
    t.insert(t.end(), d - s - 3, k + 1);
    t.insert(t.end(), s + 1, k + 2);
  } else if (s == d - 3) {
    if (g == 2 * (d - 2))
      throw ExclusionError("closed_form_maximizer: case s = d-3 requires g != 2(d-2)");
    t.push_back(k);
    t.insert(t.end(), d - 2, k + 2);
  } else {  // s == d-2
    if (g == 2 * d - 3)
      throw ExclusionError("closed_form_maximizer: case s = d-2 requires g != 2d-3");
    if (d == 3 && g == 5)
      throw ExclusionError("closed_form_maximizer: case s = d-2 requires (d,g) != (3,5)");
    t.push_back(k);
    t.insert(t.end(), d - 3, k + 2);
    t.push_back(k + 3);
  }
  return t;
}

}  // namespace hurwitz
