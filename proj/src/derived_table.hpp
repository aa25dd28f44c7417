#pragma once

#include <vector>

#include "cayley/table.hpp"

namespace cayley {

// Tables carved out of an already validated group (subgroups, quotients)
// satisfy the group axioms by construction, so only the cached fields are
// filled in.
struct DerivedTable {
  static CayleyTable make(std::size_t order, std::vector<ElementId> products,
                          ElementId identity, bool abelian) {
    CayleyTable t;
    t.order_ = order;
    t.products_ = std::move(products);
    t.identity_ = identity;
    t.order_factors_ = factorize(order);
    t.abelian_ = abelian || is_abelian(t);
    return t;
  }
};

}  // namespace cayley
