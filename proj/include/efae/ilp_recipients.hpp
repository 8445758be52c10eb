#pragma once

#include "efae/ilp.hpp"
#include "efae/types.hpp"

namespace efae {

struct IlpRecipientOptions {
  IlpLimits limits;
  // Adds the constraint family protecting recipients from envying the fixed
  // bundles of non-recipients. Without it, a base assignment in which a
  // recipient already envies an outsider can be accepted wrongly; the switch
  // exists to demonstrate exactly that.
  bool guard_recipient_vs_outside = true;
};

// Groups the open items into types (identical columns restricted to the open
// items) and builds the count model: one variable per recipient and open item
// type, counting how many items of that type the recipient gets.
IlpModel build_ilp(const Instance& inst, const std::vector<int>& recipients,
                   bool guard_recipient_vs_outside = true);

// REFAE via the count model. Envy between two non-recipients is constant in
// the variables, so it is screened before the model is solved.
SolveOutcome solve_refae_ilp(const Instance& inst, const IlpRecipientOptions& opts = {});

// FEFAE: recipient sets of size p in rank order, first feasible one wins.
SolveOutcome solve_fefae_ilp(const Instance& inst, const IlpRecipientOptions& opts = {});

}  // namespace efae
