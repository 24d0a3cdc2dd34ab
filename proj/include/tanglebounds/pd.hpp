#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace tb {

// Parse failure with the byte offset of the offending token.
struct parse_error : std::runtime_error {
    std::size_t offset;
    parse_error(const std::string& what, std::size_t off);
};

// One crossing in planar-diagram notation: the four incident arc labels
// listed counterclockwise starting at the incoming under-strand. The
// under-strand occupies slots 0 and 2, the over-strand slots 1 and 3.
struct Crossing {
    std::array<int, 4> arcs{};
    int tangle_id = 0;  // 0 = not tagged as part of any tangle summand

    bool operator==(const Crossing& o) const {
        return arcs == o.arcs && tangle_id == o.tangle_id;
    }
};

// A link diagram: crossings plus crossing-free closed loops. Arc labels are
// positive integers; every label appears exactly twice.
struct LinkDiagram {
    std::vector<Crossing> crossings;
    int free_loops = 0;

    bool operator==(const LinkDiagram& o) const {
        return crossings == o.crossings && free_loops == o.free_loops;
    }
};

enum class Corner { NW, NE, SE, SW };

const char* corner_name(Corner c);

// A 2-string tangle in a box: an inner diagram plus the four boundary arcs.
// A crossing-free strand between two corners is one arc sitting on both.
struct TangleDiagram {
    LinkDiagram inner;
    std::map<Corner, int> boundary;

    int corner(Corner c) const { return boundary.at(c); }
};

// Text format:
//   X(a,b,c,d)                 crossing
//   L0(n)                      n crossing-free loops
//   T{nw=a,ne=b,se=c,sw=d}[…]  tangle wrapper (crossings and L0 inside)
//   # comment to end of line
LinkDiagram parse_pd(const std::string& text);
TangleDiagram parse_tangle(const std::string& text);

std::string serialize_pd(const LinkDiagram& d);
std::string serialize_tangle(const TangleDiagram& t);

// Structural validation. Checks arc multiplicity (every label exactly twice,
// counting tangle corners), positivity, and that the rotation-system face
// census satisfies V - E + F = 2 on every connected piece (planarity).
// Throws std::invalid_argument naming the violated invariant.
void validate(const LinkDiagram& d);
void validate(const TangleDiagram& t);

}  // namespace tb
