#pragma once

// Synthetic long-read workloads: uniform random references and reads with
// i.i.d. substitution / insertion / deletion errors plus ground truth.

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "bitalign/align_op.hpp"

namespace bitalign::sim {

struct ErrorProfile {
  double sub_rate = 0.0;
  double ins_rate = 0.0;
  double del_rate = 0.0;
  std::uint64_t seed = 0;

  // Each rate in [0, 1) and their sum < 1.
  void validate() const;
};

struct SimRecord {
  std::string read;
  std::string ref_id;
  std::size_t ref_start = 0;
  std::size_t ref_length = 0;  // reference bases covered by the read
  Cigar truth_cigar;           // read (pattern) against the reference slice
  std::size_t truth_cost = 0;
};

// splitmix64 step, used to derive independent per-stream seeds.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) noexcept;

std::string make_reference(std::size_t length, std::uint64_t seed);

// Walks reference[pos, pos + length) emitting one edit decision per step.
SimRecord simulate_read(std::string_view reference, std::size_t pos,
                        std::size_t length, const ErrorProfile& profile,
                        std::string ref_id = "ref");

struct SimulationParams {
  std::size_t ref_len = 0;
  std::size_t count = 0;
  std::size_t read_len = 0;
  ErrorProfile profile;
};

struct Simulation {
  std::string reference;
  std::vector<SimRecord> reads;
};

// Read r uses seed derive_seed(profile.seed, 2 + r); start positions and
// the reference have their own streams.
Simulation simulate(const SimulationParams& params);

}  // namespace bitalign::sim
