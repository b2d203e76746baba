#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "vnalg/algebra.hpp"
#include "vnalg/diagram.hpp"

namespace vnalg::fixtures {

/// The fully defined virtual Niebrzydowski algebra on three symbols.
VirtualNAlgebra n3_algebra();

/// N4: the four-symbol structure with a partially defined product.
VirtualNAlgebra n4_algebra();

/// A single closed loop with no nodes.
Diagram unknot();
/// A loop with one classical kink.
Diagram one_kink_unknot();
/// A single oriented strand between two legs.
Diagram strand_tangle();
/// Two concatenated trivalent vertices with four legs.
Diagram fig4_tangle();
/// Closed two-vertex graphs for `which` in 'A'..'D': the planar theta
/// graph, the handcuff graph, and the theta graph with one classical (C) or
/// virtual (D) crossing between two of its edges. See data/PROVENANCE.md.
Diagram fig5(char which);

/// Names accepted by diagram(): unknot, one_kink_unknot, strand_tangle,
/// fig4_tangle, fig5_A .. fig5_D.
std::vector<std::string> diagram_names();
/// Throws std::out_of_range for an unknown name.
Diagram diagram(std::string_view name);

}  // namespace vnalg::fixtures
