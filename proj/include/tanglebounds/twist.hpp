#pragma once

#include <vector>

#include "tanglebounds/pd.hpp"

namespace tb {

// One step of a face walk: travelling along `arc` into (crossing, slot).
struct FaceStep {
    int arc;
    int crossing;
    int slot;
};

struct Face {
    std::vector<FaceStep> steps;
    bool is_bigon() const;  // two steps, two distinct crossings, two distinct arcs
};

struct FaceCensus {
    std::vector<Face> faces;   // faces meeting at least one crossing
    int loop_faces = 0;        // two per crossing-free loop
    int pieces = 0;            // connected pieces including free loops
};

// Rotation-system face trace. Assumes arc multiplicities already hold.
FaceCensus faces(const LinkDiagram& d);

// Euler-characteristic validation (V - E + F = 2 on each connected piece).
// Throws std::invalid_argument when the rotation system is not planar.
void check_planarity(const LinkDiagram& d);
void check_tangle_planarity(const TangleDiagram& t);

// True when no face meets the same crossing twice (no nugatory crossing).
bool is_reduced(const LinkDiagram& d);

// A twist region: a maximal chain of crossings joined through bigon faces.
// Singleton crossings form their own regions. Crossing indices are listed
// in chain order; regions are sorted by smallest crossing index.
struct TwistRegion {
    std::vector<int> crossings;
};

std::vector<TwistRegion> twist_regions(const LinkDiagram& d);
// Same, but bigons using any of the listed arcs never chain (closure seams).
std::vector<TwistRegion> twist_regions_avoiding(const LinkDiagram& d,
                                                const std::vector<int>& seam_arcs);

int twist_number(const LinkDiagram& d);

// Twist number of a tangle: regions of the numerator closure, with the
// closure seams barred from completing a bigon.
int tangle_twist_number(const TangleDiagram& t);

}  // namespace tb
