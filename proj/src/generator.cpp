#include "qep/generator.hpp"

#include <string>

#include "qep/errors.hpp"
#include "qep/monotonicity.hpp"

namespace qep {

std::uint64_t splitmix64_next(std::uint64_t& state) noexcept {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

namespace {

constexpr std::uint64_t rotl(std::uint64_t x, int k) noexcept { return (x << k) | (x >> (64 - k)); }

}  // namespace

Xoshiro256StarStar::Xoshiro256StarStar(std::uint64_t seed) noexcept {
  for (auto& word : s_) word = splitmix64_next(seed);
}

Xoshiro256StarStar::result_type Xoshiro256StarStar::operator()() noexcept {
  const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
  const std::uint64_t t = s_[1] << 17;
  s_[2] ^= s_[0];
  s_[3] ^= s_[1];
  s_[1] ^= s_[2];
  s_[0] ^= s_[3];
  s_[2] ^= t;
  s_[3] = rotl(s_[3], 45);
  return result;
}

double Xoshiro256StarStar::uniform01() noexcept {
  return static_cast<double>((*this)() >> 11) * 0x1.0p-53;
}

void GeneratorConfig::validate() const {
  if (n < 1) throw ConfigError("generator: n must be at least 1");
  if (!(entry_low < entry_high)) throw ConfigError("generator: entry_low must be below entry_high");
  if (!(box_low < box_high)) throw ConfigError("generator: box_low must be below box_high");
}

namespace {

Matrix draw_matrix(Xoshiro256StarStar& rng, std::size_t n, double low, double high) {
  std::vector<double> entries(n * n);
  for (double& e : entries) e = rng.uniform(low, high);
  return Matrix(n, n, std::move(entries));
}

Vector draw_vector(Xoshiro256StarStar& rng, std::size_t n, double low, double high) {
  Vector v(n);
  for (double& e : v) e = rng.uniform(low, high);
  return v;
}

}  // namespace

std::vector<AffineFractionalInstance> generate_instances(const GeneratorConfig& config,
                                                         GenerationStats* stats) {
  config.validate();
  Xoshiro256StarStar rng(config.seed);
  const std::size_t n = config.n;
  const double lo = config.entry_low;
  const double hi = config.entry_high;

  std::vector<AffineFractionalInstance> out;
  out.reserve(config.count);
  std::size_t rejected = 0;

  auto reject = [&] {
    if (++rejected > config.max_rejections) {
      const double total = static_cast<double>(out.size() + rejected);
      throw GenerationError("generator: more than " + std::to_string(config.max_rejections) +
                                " rejected draws",
                            static_cast<double>(out.size()) / total);
    }
  };

  while (out.size() < config.count) {
    Matrix a = draw_matrix(rng, n, lo, hi);
    Vector b = draw_vector(rng, n, lo, hi);
    Matrix a1 = draw_matrix(rng, n, lo, hi);
    Vector b1 = draw_vector(rng, n, lo, hi);
    Vector c = draw_vector(rng, n, lo, hi);
    const double d = rng.uniform(lo, hi);

    try {
      AffineFractionalInstance inst(std::move(a), std::move(b), std::move(a1), std::move(b1),
                                    std::move(c), d, BoxSet::cube(n, config.box_low, config.box_high));
      if (config.require_paramonotone && !check_paramonotone(inst).verdict) {
        reject();
        continue;
      }
      out.push_back(std::move(inst));
    } catch (const DomainError&) {
      // Denominator not positive on the box (e.g. c = 0, d = 0).
      reject();
    }
  }

  if (stats != nullptr) *stats = {out.size(), rejected};
  return out;
}

}  // namespace qep
