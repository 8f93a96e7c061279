#pragma once

// Random instance generators shared by the property tests.

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>

namespace bitalign::testing {

inline std::string random_dna(std::mt19937_64& rng, std::size_t len) {
  static constexpr char kBases[] = "ACGT";
  std::string s(len, 'A');
  for (char& c : s) c = kBases[rng() & 3];
  return s;
}

inline std::size_t uniform(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

// Copy of `src` with roughly `rate` edits per base applied uniformly.
inline std::string mutate(std::mt19937_64& rng, const std::string& src, double rate) {
  static constexpr char kBases[] = "ACGT";
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::string out;
  for (char c : src) {
    const double x = u(rng);
    if (x < rate / 3) {
      out.push_back(kBases[rng() & 3]);
    } else if (x < 2 * rate / 3) {
      out.push_back(c);
      out.push_back(kBases[rng() & 3]);
    } else if (x < rate) {
      // deleted
    } else {
      out.push_back(c);
    }
  }
  return out;
}

}  // namespace bitalign::testing
