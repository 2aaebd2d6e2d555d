#include "pres/certify.hpp"

#include <algorithm>
#include <set>

namespace pres {

const char* cert_mode_name(CertMode m) {
  switch (m) {
    case CertMode::none: return "none";
    case CertMode::relators_only: return "relators_only";
    case CertMode::surjection: return "surjection";
    case CertMode::full_order: return "full_order";
  }
  return "?";
}

RelatorReport check_relators(const Presentation& p, const Assignment& phi) {
  RelatorReport rep;
  rep.all_pass = true;
  for (size_t i = 0; i < p.relators.size(); i++) {
    if (!evaluate(p.relators[i], phi).is_identity()) {
      rep.all_pass = false;
      rep.failures.push_back(i);
    }
  }
  return rep;
}

namespace {

// Image order when it can be determined cheaply: recognition for
// permutation images, closure otherwise.
std::pair<std::optional<long long>, std::string> image_order(
    const Presentation& p, const Assignment& phi, long long target,
    long long closure_limit) {
  bool all_perm = true;
  std::vector<Permutation> perms;
  std::vector<ConcreteElement> elems;
  for (const auto& g : p.generators) {
    const ConcreteElement& e = phi.get(g);
    elems.push_back(e);
    if (e.is_perm())
      perms.push_back(e.perm());
    else
      all_perm = false;
  }
  if (all_perm) {
    std::set<int> dom;
    for (const auto& g : perms)
      for (int x : g.support()) dom.insert(x);
    std::vector<int> domain(dom.begin(), dom.end());
    long long n = (long long)domain.size();
    // try recognition first for natural alternating/symmetric images
    if (n >= 5) {
      auto r = recognize_alt_sym(perms, domain);
      long long fact = 1;
      for (long long i = 2; i <= n; i++) fact *= i;
      if (r == AltSymResult::equals_sym) return {fact, "equals_sym"};
      if (r == AltSymResult::contains_alt) return {fact / 2, "contains_alt"};
    }
  }
  if (target <= closure_limit) {
    auto o = group_order_closure(elems, target + 1);
    if (o) return {*o, "closure"};
  }
  return {std::nullopt, ""};
}

}  // namespace

Certificate certify_iso(const Presentation& p, const Assignment& phi,
                        long long target_order,
                        const std::optional<SubgroupSpec>& subgroup,
                        const CertifyOptions& opts) {
  Certificate c;
  c.presentation_id = p.family;
  c.target_order = target_order;

  auto rep = check_relators(p, phi);
  c.relators_pass = rep.all_pass;
  if (!rep.all_pass) {
    c.mode = CertMode::none;
    c.conclusion = "relator_failure";
    return c;
  }
  c.mode = CertMode::relators_only;
  c.conclusion = "relators";

  auto [ord, how] = image_order(p, phi, target_order, opts.closure_limit);
  if (ord) {
    c.image_order = ord;
    c.recognition = how;
    if (*ord == target_order) {
      c.mode = CertMode::surjection;
      c.conclusion = "surjection";
    }
  }

  if (!opts.attempt_enumeration || c.mode != CertMode::surjection) {
    c.inconclusive = c.mode != CertMode::surjection;
    return c;
  }

  EnumOptions eo;
  eo.strategy = opts.strategy;
  eo.max_cosets = opts.max_cosets;
  std::vector<Word> sub;
  long long sub_order = 1;
  if (subgroup) {
    sub = subgroup->words;
    sub_order = subgroup->order;
    c.subgroup_order = sub_order;
    c.subgroup_note = subgroup->justification;
  }
  auto res = todd_coxeter(p, sub, eo);
  c.replay_hash = res.replay_hash;
  if (!res.completed) {
    c.inconclusive = true;
    return c;
  }
  c.enumeration_index = res.index;
  // |J| <= index * |subgroup image bound| and |J| >= |image| = target.
  if (*res.index * sub_order == target_order) {
    c.mode = CertMode::full_order;
    c.conclusion = "isomorphic";
    c.inconclusive = false;
  } else {
    c.inconclusive = true;
    c.conclusion = "index_mismatch";
  }
  return c;
}

}  // namespace pres
