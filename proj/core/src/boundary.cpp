#include "hurwitz/boundary.hpp"

#include <algorithm>

namespace hurwitz {

StratumLabel::StratumLabel(int j_in, Partition mu_in, int b_in)
    : j(canonical_j(j_in, b_in)), mu(std::move(mu_in)), b(b_in) {
  if (j_in < 2 || j_in > b_in - 2)
    throw std::invalid_argument("StratumLabel: j must satisfy 2 <= j <= b-2, got j=" +
                                std::to_string(j_in) + ", b=" + std::to_string(b_in));
}

std::string StratumLabel::key() const {
  return "j=" + std::to_string(j) + ",mu=" + mu.str();
}

std::vector<StratumLabel> enumerate_strata(const CoverClass& cc) {
  const auto mus = partitions(cc.d());
  std::vector<StratumLabel> out;
  out.reserve(static_cast<std::size_t>(cc.b() / 2 - 1) * mus.size());
  for (int j = 2; j <= cc.b() / 2; ++j)
    for (const auto& mu : mus) out.emplace_back(j, mu, cc.b());
  return out;
}

long chain_constant(int d, int n, long r, long dot_p2) {
  if (n < 1 || n > d)
    throw std::invalid_argument("chain_constant: n must satisfy 1 <= n <= d, got n=" +
                                std::to_string(n) + ", d=" + std::to_string(d));
  return d - n - 2 * (r - dot_p2);
}

std::vector<Rational> correction_coefficients(const ChainData& chain) {
  if (chain.m < 1)
    throw std::invalid_argument("correction_coefficients: chain length must be >= 1");
  if (chain.delta.size() != static_cast<std::size_t>(chain.m) + 1)
    throw std::invalid_argument("correction_coefficients: delta must have m+1 entries");
  std::vector<Rational> coeffs;
  coeffs.reserve(chain.m);
  const Rational minus_half = ratio(-1, 2);
  for (int i = 0; i < chain.m; ++i)
    coeffs.push_back(minus_half * (ratio(chain.m - i) * ratio(chain.c) - chain.delta[i]));
  return coeffs;
}

int default_chain_length(const Partition& mu) {
  return static_cast<int>(mu.lcm());
}

std::vector<Rational> default_e(int m) {
  if (m < 1) throw std::invalid_argument("default_e: m must be >= 1");
  std::vector<Rational> e;
  e.reserve(m + 1);
  for (int i = m; i >= 0; --i) e.push_back(ratio(i, 2));
  return e;
}

ChainData default_chain_data(const StratumLabel& label) {
  ChainData chain;
  chain.m = default_chain_length(label.mu);
  chain.c = 0;
  chain.delta.assign(chain.m + 1, Rational(0));
  chain.e = default_e(chain.m);
  return chain;
}

Rational sigma(const CoverClass& cc, int j, const Partition& mu,
               const ChainData& chain) {
  const long d = cc.d();
  const long b = cc.b();
  if (j < 2 || j > cc.b() - 2)
    throw std::invalid_argument("sigma: j must satisfy 2 <= j <= b-2, got j=" +
                                std::to_string(j) + ", b=" + std::to_string(cc.b()));
  if (mu.sum() != cc.d())
    throw std::invalid_argument("sigma: mu = " + mu.str() + " is not a partition of d=" +
                                std::to_string(cc.d()));
  const int m = chain.m;
  if (m < 1) throw std::invalid_argument("sigma: chain length must be >= 1");
  if (chain.delta.size() != static_cast<std::size_t>(m) + 1 ||
      chain.e.size() != static_cast<std::size_t>(m) + 1)
    throw std::invalid_argument("sigma: delta and e must each have m+1 = " +
                                std::to_string(m + 1) + " entries");

  Rational harmonic(0);
  for (int part : mu.parts()) harmonic += ratio(1, part);

  const Rational main_term =
      ratio(m) * (ratio(1, 12) * (ratio(d) - harmonic) +
                  ratio(static_cast<long>(j) * (b - j) * (d - 2),
                        8 * (b - 1) * (d - 1)));

  Rational delta_sq(0);
  for (int i = 1; i <= m; ++i) {
    const Rational step = chain.delta[i - 1] - chain.delta[i];
    delta_sq += step * step;
  }
  const Rational delta_term = ratio(1, 8 * (d - 1)) * delta_sq;

  Rational e_sq(0);
  for (int i = 1; i <= m; ++i) {
    const Rational step = chain.e[i - 1] - chain.e[i];
    e_sq += step * step;
  }
  const Rational e_term = ratio(d - 1, 2) * (ratio(m, 4) - e_sq);

  return main_term - delta_term - e_term;
}

SourcedChainData DefaultChainSource::get(const CoverClass&,
                                         const StratumLabel& label) const {
  return {default_chain_data(label),
          "m=default,c=default,delta=default,e=default"};
}

std::vector<SigmaRow> sigma_table(const CoverClass& cc,
                                  const ChainDataSource& source) {
  std::vector<SigmaRow> rows;
  for (const auto& label : enumerate_strata(cc)) {
    SourcedChainData sourced = source.get(cc, label);
    Rational value = sigma(cc, label.j, label.mu, sourced.data);
    rows.push_back({label, sourced.data.m, std::move(value),
                    std::move(sourced.provenance)});
  }
  return rows;
}

}  // namespace hurwitz
