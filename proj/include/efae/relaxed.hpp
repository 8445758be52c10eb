#pragma once

#include <string>
#include <vector>

#include "efae/types.hpp"

namespace efae {

enum class Ef1Engine { RoundRobin, EnvyCycle };

// Completes an envy-free partial assignment to a full allocation that is
// envy-free up to one item. The default engine runs round-robin over the open
// items: agents take turns in index order, each picking its highest-valued
// remaining open item (ties by item index). The envy-cycle engine builds the
// open-item part by repeatedly giving the next item to an agent nobody envies
// (w.r.t. the open-item part alone), rotating bundles along envy cycles when
// no such agent exists. Throws GAMMA_NOT_EF when the fixed part is not
// envy-free.
Allocation extend_to_ef1(const Instance& inst, Ef1Engine engine = Ef1Engine::RoundRobin);

// Small fixed instances showing the limits of relaxed extensions; each is
// re-verified by brute force in verify_catalog.
struct CatalogEntry {
  std::string name;
  Instance instance;
};

const std::vector<CatalogEntry>& counterexample_catalog();

struct CatalogCheck {
  std::string name;
  bool pass;
};

// Re-derives every documented catalog property via the exhaustive solver.
std::vector<CatalogCheck> verify_catalog();

}  // namespace efae
