#include "edalab/fitness.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>
#include <utility>

namespace edalab {

namespace {

bool is_identity(const std::vector<int>& perm) {
  for (std::size_t i = 0; i < perm.size(); ++i)
    if (perm[i] != static_cast<int>(i)) return false;
  return true;
}

void check_perm(const std::vector<int>& perm, int n) {
  if (static_cast<int>(perm.size()) != n)
    throw std::invalid_argument("fitness: permutation length must equal n");
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  for (int v : perm) {
    if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)])
      throw std::invalid_argument("fitness: perm must be a bijection on 0..n-1");
    seen[static_cast<std::size_t>(v)] = 1;
  }
}

class OneMaxFn final : public Fitness {
 public:
  explicit OneMaxFn(BitString target) : target_(std::move(target)) {}
  Score evaluate(const BitString& x) override {
    long long c = 0;
    for (std::size_t i = 0; i < x.size(); ++i) c += (x[i] == target_[i]);
    return Score(c);
  }
  const BitString& optimum() const override { return target_; }
  std::string name() const override { return "onemax"; }
  int n() const override { return static_cast<int>(target_.size()); }

 private:
  BitString target_;
};

class LeadingOnesFn final : public Fitness {
 public:
  LeadingOnesFn(BitString target, std::vector<int> perm)
      : target_(std::move(target)), perm_(std::move(perm)) {}
  Score evaluate(const BitString& x) override {
    long long c = 0;
    if (perm_.empty()) {
      for (std::size_t i = 0; i < x.size() && x[i] == target_[i]; ++i) ++c;
    } else {
      for (std::size_t i = 0; i < x.size(); ++i) {
        const auto j = static_cast<std::size_t>(perm_[i]);
        if (x[j] != target_[j]) break;
        ++c;
      }
    }
    return Score(c);
  }
  const BitString& optimum() const override { return target_; }
  std::string name() const override { return "leadingones"; }
  int n() const override { return static_cast<int>(target_.size()); }

 private:
  BitString target_;
  std::vector<int> perm_;  // empty = identity
};

class BinValFn final : public Fitness {
 public:
  explicit BinValFn(BitString target) : target_(std::move(target)) {}
  Score evaluate(const BitString& x) override {
    // x is read left to right as a binary number: bit i carries 2^(n-1-i)
    // when it agrees with the target.
    BigInt v = 0;
    std::uint64_t word = 0;
    int filled = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
      word = (word << 1) | static_cast<std::uint64_t>(x[i] == target_[i]);
      if (++filled == 64) {
        v <<= 64;
        v |= word;
        word = 0;
        filled = 0;
      }
    }
    if (filled > 0) {
      v <<= filled;
      v |= word;
    }
    return Score(std::move(v));
  }
  const BitString& optimum() const override { return target_; }
  std::string name() const override { return "binval"; }
  int n() const override { return static_cast<int>(target_.size()); }

 private:
  BitString target_;
};

class NeedleFn final : public Fitness {
 public:
  explicit NeedleFn(BitString target) : target_(std::move(target)) {}
  Score evaluate(const BitString& x) override {
    return Score(x == target_ ? 1 : 0);
  }
  const BitString& optimum() const override { return target_; }
  std::string name() const override { return "needle"; }
  int n() const override { return static_cast<int>(target_.size()); }

 private:
  BitString target_;
};

class GaussianNoiseFn final : public Fitness {
 public:
  GaussianNoiseFn(FitnessPtr inner, double sigma, RngStream rng)
      : inner_(std::move(inner)), sigma_(sigma), rng_(rng) {}
  Score evaluate(const BitString& x) override {
    Score s = inner_->evaluate(x);
    s.offset += sigma_ * rng_.next_gaussian();
    return s;
  }
  const BitString& optimum() const override { return inner_->optimum(); }
  std::string name() const override { return inner_->name() + "+gauss"; }
  int n() const override { return inner_->n(); }

 private:
  FitnessPtr inner_;
  double sigma_;
  RngStream rng_;
};

class PriorNoiseFn final : public Fitness {
 public:
  PriorNoiseFn(FitnessPtr inner, double q, RngStream rng)
      : inner_(std::move(inner)), q_(q), rng_(rng) {}
  Score evaluate(const BitString& x) override {
    // Draw order per call: flip decision, then flip position.
    if (rng_.bernoulli(q_)) {
      buf_ = x;
      const auto pos = static_cast<std::size_t>(
          rng_.next_below(static_cast<std::uint64_t>(buf_.size())));
      buf_[pos] ^= 1;
      return inner_->evaluate(buf_);
    }
    return inner_->evaluate(x);
  }
  const BitString& optimum() const override { return inner_->optimum(); }
  std::string name() const override { return inner_->name() + "+prior"; }
  int n() const override { return inner_->n(); }

 private:
  FitnessPtr inner_;
  double q_;
  RngStream rng_;
  BitString buf_;
};

std::string base_name(FitnessSpec::Base b) {
  switch (b) {
    case FitnessSpec::Base::onemax: return "onemax";
    case FitnessSpec::Base::leadingones: return "leadingones";
    case FitnessSpec::Base::binval: return "binval";
    case FitnessSpec::Base::needle: return "needle";
  }
  return "?";
}

double parse_double(const std::string& s, const char* what) {
  std::size_t pos = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &pos);
  } catch (const std::exception&) {
    throw std::invalid_argument(std::string("fitness: bad number for ") + what);
  }
  if (pos != s.size())
    throw std::invalid_argument(std::string("fitness: bad number for ") + what);
  return v;
}

std::string format_param(double v) {
  char buf[32];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

}  // namespace

void FitnessSpec::validate(int n) const {
  if (n < 1) throw std::invalid_argument("fitness: n must be >= 1");
  if (target == TargetMode::bits && static_cast<int>(target_bits.size()) != n)
    throw std::invalid_argument("fitness: target length must equal n");
  if (perm == PermMode::random && base != Base::leadingones)
    throw std::invalid_argument(
        "fitness: a non-identity perm is only valid for leadingones");
  if (noise == NoiseKind::gauss && !(noise_param >= 0.0))
    throw std::invalid_argument("fitness: gauss noise needs sigma >= 0");
  if (noise == NoiseKind::prior &&
      !(noise_param >= 0.0 && noise_param <= 1.0))
    throw std::invalid_argument("fitness: prior noise needs q in [0, 1]");
}

std::string FitnessSpec::to_string() const {
  std::string s = base_name(base);
  if (target == TargetMode::random) s += "+target=random";
  if (target == TargetMode::bits) s += "+target=" + edalab::to_string(target_bits);
  if (perm == PermMode::random) s += "+perm=random";
  if (noise == NoiseKind::gauss) s += "+noise=gauss:" + format_param(noise_param);
  if (noise == NoiseKind::prior) s += "+noise=prior:" + format_param(noise_param);
  return s;
}

FitnessSpec FitnessSpec::parse(const std::string& text) {
  FitnessSpec spec;
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto end = text.find('+', start);
    parts.push_back(text.substr(start, end == std::string::npos
                                           ? std::string::npos
                                           : end - start));
    if (end == std::string::npos) break;
    start = end + 1;
  }
  if (parts.empty()) throw std::invalid_argument("fitness: empty spec");
  const std::string& b = parts[0];
  if (b == "onemax") spec.base = Base::onemax;
  else if (b == "leadingones") spec.base = Base::leadingones;
  else if (b == "binval") spec.base = Base::binval;
  else if (b == "needle") spec.base = Base::needle;
  else throw std::invalid_argument("fitness: unknown function '" + b + "'");
  for (std::size_t i = 1; i < parts.size(); ++i) {
    const std::string& part = parts[i];
    const auto eq = part.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("fitness: bad modifier '" + part + "'");
    const std::string key = part.substr(0, eq);
    const std::string val = part.substr(eq + 1);
    if (key == "target") {
      if (val == "random") spec.target = TargetMode::random;
      else if (val == "ones") spec.target = TargetMode::ones;
      else {
        spec.target = TargetMode::bits;
        spec.target_bits = parse_bitstring(val);
      }
    } else if (key == "perm") {
      if (val == "random") spec.perm = PermMode::random;
      else if (val == "identity") spec.perm = PermMode::identity;
      else throw std::invalid_argument("fitness: perm must be identity|random");
    } else if (key == "noise") {
      const auto colon = val.find(':');
      const std::string kind = val.substr(0, colon);
      if (kind == "gauss") spec.noise = NoiseKind::gauss;
      else if (kind == "prior") spec.noise = NoiseKind::prior;
      else if (kind == "none") { spec.noise = NoiseKind::none; continue; }
      else throw std::invalid_argument("fitness: noise must be gauss|prior|none");
      if (colon == std::string::npos) {
        // prior noise defaults to q = 1
        if (spec.noise != NoiseKind::prior)
          throw std::invalid_argument("fitness: gauss noise needs a sigma");
        spec.noise_param = 1.0;
      } else {
        spec.noise_param = parse_double(val.substr(colon + 1), "noise");
      }
    } else {
      throw std::invalid_argument("fitness: unknown modifier '" + key + "'");
    }
  }
  return spec;
}

FitnessPtr make_generalized(FitnessSpec::Base base, BitString target,
                            std::vector<int> perm) {
  const int n = static_cast<int>(target.size());
  if (n < 1) throw std::invalid_argument("fitness: empty target");
  if (!perm.empty()) {
    check_perm(perm, n);
    if (is_identity(perm)) perm.clear();
  }
  if (!perm.empty() && base != FitnessSpec::Base::leadingones)
    throw std::invalid_argument(
        "fitness: a non-identity perm is only valid for leadingones");
  switch (base) {
    case FitnessSpec::Base::onemax:
      return std::make_unique<OneMaxFn>(std::move(target));
    case FitnessSpec::Base::leadingones:
      return std::make_unique<LeadingOnesFn>(std::move(target), std::move(perm));
    case FitnessSpec::Base::binval:
      return std::make_unique<BinValFn>(std::move(target));
    case FitnessSpec::Base::needle:
      return std::make_unique<NeedleFn>(std::move(target));
  }
  throw std::logic_error("fitness: unreachable");
}

FitnessPtr wrap_gaussian_noise(FitnessPtr inner, double sigma, RngStream rng) {
  if (!(sigma >= 0.0))
    throw std::invalid_argument("fitness: gauss noise needs sigma >= 0");
  return std::make_unique<GaussianNoiseFn>(std::move(inner), sigma, rng);
}

FitnessPtr wrap_prior_noise(FitnessPtr inner, double q, RngStream rng) {
  if (!(q >= 0.0 && q <= 1.0))
    throw std::invalid_argument("fitness: prior noise needs q in [0, 1]");
  return std::make_unique<PriorNoiseFn>(std::move(inner), q, rng);
}

FitnessPtr make_fitness(const FitnessSpec& spec, int n, RngStream stream) {
  spec.validate(n);
  BitString target;
  switch (spec.target) {
    case FitnessSpec::TargetMode::ones:
      target.assign(static_cast<std::size_t>(n), 1);
      break;
    case FitnessSpec::TargetMode::random:
      target.resize(static_cast<std::size_t>(n));
      for (auto& b : target) b = static_cast<Bit>(stream.bernoulli(0.5));
      break;
    case FitnessSpec::TargetMode::bits:
      target = spec.target_bits;
      break;
  }
  std::vector<int> perm;
  if (spec.perm == FitnessSpec::PermMode::random) {
    perm.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
    for (std::size_t i = 0; i + 1 < perm.size(); ++i) {
      const std::size_t j =
          i + static_cast<std::size_t>(stream.next_below(perm.size() - i));
      std::swap(perm[i], perm[j]);
    }
  }
  FitnessPtr f = make_generalized(spec.base, std::move(target), std::move(perm));
  switch (spec.noise) {
    case FitnessSpec::NoiseKind::none:
      return f;
    case FitnessSpec::NoiseKind::gauss:
      return wrap_gaussian_noise(std::move(f), spec.noise_param, stream);
    case FitnessSpec::NoiseKind::prior:
      return wrap_prior_noise(std::move(f), spec.noise_param, stream);
  }
  throw std::logic_error("fitness: unreachable");
}

}  // namespace edalab
