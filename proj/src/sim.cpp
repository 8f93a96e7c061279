#include "bitalign/sim.hpp"

#include <random>

#include "bitalign/errors.hpp"

namespace bitalign::sim {

namespace {

constexpr char kBases[] = "ACGT";

double unit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

char random_base(std::mt19937_64& rng) { return kBases[rng() >> 62]; }

bool is_base(char c) { return c == 'A' || c == 'C' || c == 'G' || c == 'T'; }

}  // namespace

void ErrorProfile::validate() const {
  for (double r : {sub_rate, ins_rate, del_rate}) {
    if (!(r >= 0.0 && r < 1.0)) {
      throw InvalidArgument("error rates must lie in [0, 1)");
    }
  }
  if (!(sub_rate + ins_rate + del_rate < 1.0)) {
    throw InvalidArgument("error rates must sum to less than 1");
  }
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) noexcept {
  std::uint64_t z = seed + (stream + 1) * 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::string make_reference(std::size_t length, std::uint64_t seed) {
  if (length == 0) throw InvalidArgument("reference length must be >= 1");
  std::mt19937_64 rng(seed);
  std::string out(length, 'A');
  for (char& c : out) c = random_base(rng);
  return out;
}

SimRecord simulate_read(std::string_view reference, std::size_t pos,
                        std::size_t length, const ErrorProfile& profile,
                        std::string ref_id) {
  profile.validate();
  if (pos > reference.size() || length > reference.size() - pos) {
    throw InvalidArgument("read slice [" + std::to_string(pos) + ", " +
                          std::to_string(pos + length) +
                          ") exceeds the reference");
  }
  std::mt19937_64 rng(profile.seed);
  const double sub_end = profile.sub_rate;
  const double ins_end = sub_end + profile.ins_rate;
  const double del_end = ins_end + profile.del_rate;

  SimRecord rec;
  rec.ref_id = std::move(ref_id);
  rec.ref_start = pos;
  rec.ref_length = length;
  rec.read.reserve(length + length / 8);
  auto push = [&rec](AlignOp op) {
    rec.truth_cigar.push_back(op);
    rec.truth_cost += op_cost(op);
  };

  std::size_t r = pos;
  const std::size_t end = pos + length;
  while (r < end) {
    const double u = unit(rng);
    const char base = reference[r];
    if (u < sub_end) {
      char alt = base;
      while (alt == base) alt = random_base(rng);
      rec.read.push_back(alt);
      push(AlignOp::kMismatch);
      ++r;
    } else if (u < ins_end) {
      rec.read.push_back(random_base(rng));
      push(AlignOp::kInsertion);
    } else if (u < del_end) {
      push(AlignOp::kDeletion);
      ++r;
    } else {
      rec.read.push_back(base);
      // Unknown reference symbols never match, not even themselves.
      push(is_base(base) ? AlignOp::kMatch : AlignOp::kMismatch);
      ++r;
    }
  }
  return rec;
}

Simulation simulate(const SimulationParams& params) {
  params.profile.validate();
  if (params.read_len == 0) throw InvalidArgument("read length must be >= 1");
  if (params.read_len > params.ref_len) {
    throw InvalidArgument("read length exceeds reference length");
  }
  const std::uint64_t seed = params.profile.seed;
  Simulation out;
  out.reference = make_reference(params.ref_len, derive_seed(seed, 0));
  std::mt19937_64 positions(derive_seed(seed, 1));
  const std::size_t span = params.ref_len - params.read_len + 1;
  out.reads.reserve(params.count);
  for (std::size_t r = 0; r < params.count; ++r) {
    ErrorProfile profile = params.profile;
    profile.seed = derive_seed(seed, 2 + r);
    const std::size_t pos = positions() % span;
    out.reads.push_back(
        simulate_read(out.reference, pos, params.read_len, profile, "ref"));
  }
  return out;
}

}  // namespace bitalign::sim
