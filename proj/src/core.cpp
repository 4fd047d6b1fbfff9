#include "edalab/core.hpp"

#include <algorithm>
#include <stdexcept>

namespace edalab {

double clamp_frequency(double v, double m) {
  return std::max(m, std::min(1.0 - m, v));
}

FrequencyVector FrequencyVector::uniform(int n, std::optional<double> margin) {
  if (n < 1) throw std::invalid_argument("FrequencyVector: n must be >= 1");
  FrequencyVector f;
  f.p.assign(static_cast<std::size_t>(n), 0.5);
  f.margin = margin;
  f.validate();
  return f;
}

BitString FrequencyVector::sample(RngStream& rng) const {
  BitString x(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    x[i] = static_cast<Bit>(rng.next_double() < p[i]);
  }
  return x;
}

void FrequencyVector::clamp_all() {
  if (!margin) return;
  const double m = *margin;
  for (double& v : p) v = clamp_frequency(v, m);
}

void FrequencyVector::validate() const {
  if (p.empty()) throw std::invalid_argument("FrequencyVector: empty");
  if (margin) {
    const double m = *margin;
    if (!(m > 0.0 && m <= 0.5))
      throw std::invalid_argument("FrequencyVector: margin must lie in (0, 1/2]");
    for (double v : p)
      if (v < m || v > 1.0 - m)
        throw std::invalid_argument("FrequencyVector: entry outside [m, 1-m]");
  } else {
    for (double v : p)
      if (v < 0.0 || v > 1.0)
        throw std::invalid_argument("FrequencyVector: entry outside [0, 1]");
  }
}

void ScoredPopulation::resize(std::size_t lambda, std::size_t n) {
  members.resize(lambda);
  for (auto& m : members) m.resize(n);
  scores.resize(lambda);
}

std::vector<std::size_t> select_best(const ScoredPopulation& pop,
                                     std::size_t mu, RngStream& rng) {
  if (mu == 0 || mu > pop.size())
    throw std::invalid_argument(
        "select_best: mu must satisfy 1 <= mu <= lambda");
  std::vector<std::size_t> idx(pop.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    return pop.scores[a] > pop.scores[b];
  });
  // Uniform random order inside each tie group, best group first.
  std::size_t g = 0;
  while (g < idx.size()) {
    std::size_t e = g + 1;
    while (e < idx.size() && pop.scores[idx[e]] == pop.scores[idx[g]]) ++e;
    if (e - g > 1) {
      for (std::size_t i = g; i + 1 < e; ++i) {
        const std::size_t j = i + rng.next_below(e - i);
        std::swap(idx[i], idx[j]);
      }
    }
    g = e;
  }
  idx.resize(mu);
  return idx;
}

std::string to_string(const BitString& x) {
  std::string s;
  s.reserve(x.size());
  for (Bit b : x) s.push_back(b ? '1' : '0');
  return s;
}

BitString parse_bitstring(const std::string& s) {
  BitString x;
  x.reserve(s.size());
  for (char c : s) {
    if (c == '0')
      x.push_back(0);
    else if (c == '1')
      x.push_back(1);
    else
      throw std::invalid_argument("bitstring: characters must be 0 or 1");
  }
  if (x.empty()) throw std::invalid_argument("bitstring: empty");
  return x;
}

}  // namespace edalab
