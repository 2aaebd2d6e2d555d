#pragma once

#include <optional>
#include <vector>

#include "pres/element.hpp"

namespace pres {

enum class AltSymResult { smaller, contains_alt, equals_sym };

// Jordan-style recognition of a permutation group on its support: checks
// transitivity by orbit computation, primitivity by minimal-block search,
// and hunts for a 3-cycle among bounded random subproducts.  Transitive +
// primitive + 3-cycle forces the group to contain Alt; generator parities
// then decide Alt vs Sym.  For n < 5 an exhaustive closure is used instead.
AltSymResult recognize_alt_sym(const std::vector<Permutation>& gens,
                               const std::vector<int>& domain,
                               uint64_t seed = 0x9e3779b97f4a7c15ull);

// Breadth-first closure under multiplication; exact order or nullopt once
// the limit is exceeded.
std::optional<long long> group_order_closure(
    const std::vector<ConcreteElement>& gens, long long limit);

// Orbit of a point under permutation generators.
std::vector<int> orbit(const std::vector<Permutation>& gens, int point);
bool is_transitive(const std::vector<Permutation>& gens,
                   const std::vector<int>& domain);
bool is_primitive(const std::vector<Permutation>& gens,
                  const std::vector<int>& domain);

}  // namespace pres
