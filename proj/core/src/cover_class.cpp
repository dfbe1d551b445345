#include "hurwitz/cover_class.hpp"

#include <cassert>
#include <numeric>
#include <stdexcept>
#include <string>

namespace hurwitz {

CoverClass::CoverClass(int d, int g)
    : d_(d), g_(g), k_(g / (d - 1)), s_(g % (d - 1)), b_(2 * g + 2 * d - 2) {}

CoverClass CoverClass::decompose(int d, int g) {
  if (d < 3)
    throw std::domain_error("CoverClass: degree must be at least 3, got d=" +
                            std::to_string(d));
  if (g < d)
    throw std::domain_error("CoverClass: genus must be at least the degree, got (d,g)=(" +
                            std::to_string(d) + "," + std::to_string(g) + ")");
  return CoverClass(d, g);
}

CoverClass CoverClass::decompose_relaxed(int d, int g) {
  if (d < 2)
    throw std::domain_error("CoverClass: relaxed constructor needs d >= 2, got d=" +
                            std::to_string(d));
  if (g < d)
    throw std::domain_error("CoverClass: genus must be at least the degree, got (d,g)=(" +
                            std::to_string(d) + "," + std::to_string(g) + ")");
  return CoverClass(d, g);
}

SplittingType generic_pushforward(const CoverClass& cc) {
  std::vector<int> exps;
  exps.reserve(cc.d());
  exps.push_back(0);
  for (int i = 0; i < cc.d() - 1 - cc.s(); ++i) exps.push_back(-(cc.k() + 1));
  for (int i = 0; i < cc.s(); ++i) exps.push_back(-(cc.k() + 2));
  return SplittingType(std::move(exps));
}

std::pair<long, long> twisted_section_counts(const CoverClass& cc, int twist) {
  const SplittingType t = generic_pushforward(cc).twist(twist);
  return {t.h0(), t.h1()};
}

SplittingType balanced_pushforward_with_divisor(const CoverClass& cc) {
  std::vector<int> exps;
  exps.reserve(cc.d());
  exps.push_back(0);
  for (int i = 0; i < cc.d() - 1; ++i) exps.push_back(-(cc.k() + 1));
  return SplittingType(std::move(exps));
}

SplittingType divisorial_stratum_pushforward(const CoverClass& cc) {
  if (cc.s() > cc.d() - 4)
    throw std::domain_error(
        "divisorial_stratum_pushforward: defined only for s <= d-4, got s=" +
        std::to_string(cc.s()) + ", d=" + std::to_string(cc.d()));
  std::vector<int> exps;
  exps.reserve(cc.d());
  exps.push_back(0);
  exps.push_back(-cc.k());
  for (int i = 0; i < cc.d() - cc.s() - 3; ++i) exps.push_back(-(cc.k() + 1));
  for (int i = 0; i < cc.s() + 1; ++i) exps.push_back(-(cc.k() + 2));
  return SplittingType(std::move(exps));
}

SplittingType cokernel_dual_type(const SplittingType& pushforward) {
  const auto& exps = pushforward.exponents();
  if (pushforward.rank() < 2)
    throw std::invalid_argument(
        "cokernel_dual_type: rank must be at least 2, got " + pushforward.str());
  // h0 = 1 exactly when one exponent is 0 and the rest are <= -1; then the
  // trivial summand splits off and the remaining exponents negate.
  if (exps.back() != 0 || exps[exps.size() - 2] > -1)
    throw std::invalid_argument(
        "cokernel_dual_type: needs exactly one zero exponent and the rest <= -1 "
        "(h0 must be 1), got " + pushforward.str());
  std::vector<int> negated;
  negated.reserve(exps.size() - 1);
  for (std::size_t i = 0; i + 1 < exps.size(); ++i) negated.push_back(-exps[i]);
  return SplittingType(std::move(negated));
}

bool unbalanced_twisted_dual_check(const SplittingType& pushforward, int k) {
  const SplittingType u = cokernel_dual_type(pushforward).twist(-(k + 1));
  const auto& e = u.exponents();
  if (u.degree() != 0) return false;
  if (e.front() != -1) return false;
  return u.rank() >= 2 && e[1] >= 0;
}

bool divisorial_gate(int d, int g) {
  return d >= 3 && g >= d && g != 2 * d - 3 && g != 2 * d - 4 &&
         !(d == 3 && g == 5);
}

std::string divisorial_gate_reason(int d, int g) {
  if (d < 3 || g < d) return "outside domain 3 <= d <= g";
  if (d == 3 && g == 5) return "(d,g) = (3,5) excluded";
  if (g == 2 * d - 3) return "g = 2d-3 excluded";
  if (g == 2 * d - 4) return "g = 2d-4 excluded";
  return "";
}

GreedyTrajectory greedy_trajectory(const CoverClass& cc) {
  GreedyTrajectory tr;
  tr.steps.reserve(cc.s() + 1);
  for (int h = cc.s(); h >= 0; --h) tr.steps.push_back(h);
  tr.residual_degree = 2 * cc.g() - 2 - cc.k() * cc.d();
  tr.branch_count = cc.b();
  assert(tr.feasible());
  return tr;
}

}  // namespace hurwitz
