#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "pres/presentation.hpp"

namespace pres {

enum class Strategy { hlt_lookahead, felsch };

struct EnumOptions {
  Strategy strategy = Strategy::hlt_lookahead;
  size_t max_cosets = 2'000'000;
  std::ostream* replay = nullptr;  // one definition/coincidence per line
};

struct EnumResult {
  std::optional<long long> index;  // set iff the enumeration completed
  size_t high_water = 0;           // most cosets simultaneously defined
  size_t total_defined = 0;
  uint64_t replay_hash = 0;  // FNV-1a over the event stream
  bool completed = false;
};

// Deterministic Todd-Coxeter enumeration of the cosets of <subgroup> in the
// presented group.  Coincidences are processed by union-find with full
// deduction propagation.  Identical inputs and strategy produce identical
// definition sequences.
EnumResult todd_coxeter(const Presentation& p,
                        const std::vector<Word>& subgroup,
                        const EnumOptions& opts = EnumOptions());

}  // namespace pres
