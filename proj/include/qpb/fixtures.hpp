#pragma once

#include "qpb/bundle.hpp"
#include "qpb/connection.hpp"
#include "qpb/gauge.hpp"

// The reference bundles used by the tests, the acceptance run and
// `qpb fixtures`.
namespace qpb::fixtures {

/// Z₂ on {0,1,2,3} with p◁g = p+2, φ = (e,e,g,g); base {0,2}, {1,3}.
bundle::Bundle z2();
/// S₃ acting on itself by right multiplication, φ = id.
bundle::Bundle s3();
/// B×Z₃ with |B| = 2 and the canonical trivialization.
bundle::Bundle prod();
/// Trivial Z₂ action on {0,1}; not free, no trivialization.
bundle::Bundle nonfree();
/// z2() with 0◁e = 1, breaking the unit law.
bundle::Bundle corrupted_z2();

/// ĝ on z2() with ĝ(x₀,x₁) = g and every other entry e.
connection::TransitionMap z2_transition();

}  // namespace qpb::fixtures
