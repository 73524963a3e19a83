#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>

#include "ccmo/archive.hpp"
#include "ccmo/instance.hpp"
#include "ccmo/objectives.hpp"
#include "ccmo/rng.hpp"

namespace ccmo {

// standard_bit: flip each bit independently with probability 1/n (the
// offspring may equal the parent). one_bit: flip exactly one uniformly chosen
// bit. mixed_1_2: fair coin between a 1-bit flip and a 2-bit flip of a
// uniformly chosen unordered pair of distinct positions; needs n >= 2.
enum class MutationKind { standard_bit, one_bit, mixed_1_2 };

std::string_view to_string(MutationKind);
MutationKind parse_mutation(std::string_view);

enum class InitKind { uniform_random, all_zeros };

std::string_view to_string(InitKind);
InitKind parse_init(std::string_view);

struct Formulation {
  enum class Kind { two_d, three_d };
  Kind kind = Kind::three_d;
  int k = 0;  // 2D constraint level; unused for 3D

  static Formulation two_d(int k) { return {Kind::two_d, k}; }
  static Formulation three_d() { return {Kind::three_d, 0}; }
};

struct AlgorithmConfig {
  Formulation formulation = Formulation::three_d();
  MutationKind mutation = MutationKind::standard_bit;
  std::uint64_t budget = 0;  // offspring evaluations; the initial solution is evaluation 0
  std::uint64_t seed = 0;
  InitKind init = InitKind::uniform_random;
};

// The four named study variants. 2D presets take k from the caller.
struct AlgorithmPreset {
  std::string_view name;
  Formulation::Kind formulation;
  MutationKind mutation;
};

std::span<const AlgorithmPreset> algorithm_presets();
const AlgorithmPreset* algorithm_preset(std::string_view name);  // nullptr if unknown

struct RunRecord {
  std::string algorithm;
  std::uint64_t seed = 0;
  std::uint64_t budget = 0;
  std::uint64_t evaluations_used = 0;
  int n = 0;
  Formulation formulation;
  MutationKind mutation = MutationKind::standard_bit;
  InitKind init = InitKind::uniform_random;
  ConstraintFunction::Kind constraint = ConstraintFunction::Kind::cardinality;
  std::vector<EvaluatedSolution> archive;  // canonical order, raw aggregates
  std::size_t max_population_size = 0;
  std::uint64_t max_population_evaluation = 0;  // evaluation index when the max was first seen
  double wall_seconds = 0.0;
};

// Mutation draws, in order: standard_bit consumes n uniform01 values (bit 0
// first); one_bit one index; mixed_1_2 one uniform01 coin then one or two
// indices (second drawn from the n-1 remaining positions).
Solution mutate(const Solution& parent, MutationKind, Rng&);
void mutate(const Solution& parent, MutationKind, Rng&, Solution& out);

// Algorithm 1. Per iteration the stream is consumed as: parent index, then
// mutation draws. The initial solution (drawn first under uniform_random
// init) is evaluated and inserted before iteration 1. Deterministic given
// (instance, constraint, config).
RunRecord run(const StochasticInstance&, const ConstraintFunction&, const AlgorithmConfig&,
              std::string_view algorithm_name = "custom");

// Line-oriented text format; archive rows are "mu v c hexbits".
void write_run_record(const RunRecord&, std::ostream&);
void save_run_record(const RunRecord&, const std::filesystem::path&);
RunRecord read_run_record(std::istream&);
RunRecord load_run_record(const std::filesystem::path&);

}  // namespace ccmo
