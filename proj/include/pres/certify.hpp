#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pres/coset.hpp"
#include "pres/element.hpp"
#include "pres/presentation.hpp"
#include "pres/recognize.hpp"

namespace pres {

struct RelatorReport {
  bool all_pass = false;
  std::vector<size_t> failures;  // indices of failing relators
};

RelatorReport check_relators(const Presentation& p, const Assignment& phi);

enum class CertMode { none, relators_only, surjection, full_order };

// Enumeration over a subgroup whose order is independently justified: the
// subgroup generated by `words` in the presented group is isomorphic to a
// group of order `order` (the generator-image subgroup bound).
struct SubgroupSpec {
  std::vector<Word> words;
  long long order = 1;
  std::string justification;
};

struct Certificate {
  std::string presentation_id;
  CertMode mode = CertMode::none;
  bool relators_pass = false;
  std::string recognition;  // "", "contains_alt", "equals_sym", "closure"
  std::optional<long long> image_order;
  std::optional<long long> enumeration_index;
  std::optional<long long> subgroup_order;
  std::string subgroup_note;
  long long target_order = 0;
  uint64_t replay_hash = 0;
  bool inconclusive = false;
  std::string conclusion;  // "isomorphic", "surjection", "relators", ...
};

struct CertifyOptions {
  size_t max_cosets = 2'000'000;
  Strategy strategy = Strategy::hlt_lookahead;
  long long closure_limit = 2'000'000;
  bool attempt_enumeration = true;
};

// Certification pipeline: relator check (epimorphism exists), surjectivity
// (recognition or closure equal to target_order), and exact order via coset
// enumeration, either over the trivial subgroup or over a supplied subgroup
// with the index * subgroup-order sandwich.
Certificate certify_iso(const Presentation& p, const Assignment& phi,
                        long long target_order,
                        const std::optional<SubgroupSpec>& subgroup = {},
                        const CertifyOptions& opts = CertifyOptions());

const char* cert_mode_name(CertMode m);

}  // namespace pres
