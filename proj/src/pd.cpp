#include "tanglebounds/pd.hpp"

#include <cctype>
#include <sstream>

#include "tanglebounds/twist.hpp"

namespace tb {

parse_error::parse_error(const std::string& what, std::size_t off)
    : std::runtime_error(what + " (byte " + std::to_string(off) + ")"),
      offset(off) {}

const char* corner_name(Corner c) {
    switch (c) {
        case Corner::NW: return "nw";
        case Corner::NE: return "ne";
        case Corner::SE: return "se";
        case Corner::SW: return "sw";
    }
    return "?";
}

namespace {

struct Scanner {
    const std::string& s;
    std::size_t pos = 0;

    void skip_space() {
        while (pos < s.size()) {
            if (std::isspace(static_cast<unsigned char>(s[pos]))) {
                ++pos;
            } else if (s[pos] == '#') {
                while (pos < s.size() && s[pos] != '\n') ++pos;
            } else {
                break;
            }
        }
    }

    bool done() {
        skip_space();
        return pos >= s.size();
    }

    char peek() {
        skip_space();
        return pos < s.size() ? s[pos] : '\0';
    }

    void expect(char c) {
        skip_space();
        if (pos >= s.size() || s[pos] != c)
            throw parse_error(std::string("expected '") + c + "'", pos);
        ++pos;
    }

    bool accept(char c) {
        skip_space();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    int integer() {
        skip_space();
        std::size_t start = pos;
        if (pos < s.size() && s[pos] == '-') ++pos;
        std::size_t digits = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == digits) throw parse_error("expected integer", start);
        try {
            return std::stoi(s.substr(start, pos - start));
        } catch (const std::exception&) {
            throw parse_error("integer out of range", start);
        }
    }

    std::string word() {
        skip_space();
        std::size_t start = pos;
        while (pos < s.size() && std::isalpha(static_cast<unsigned char>(s[pos]))) ++pos;
        return s.substr(start, pos - start);
    }
};

Crossing parse_crossing(Scanner& sc) {
    // "X" already consumed.
    sc.expect('(');
    Crossing c;
    for (int i = 0; i < 4; ++i) {
        if (i > 0) sc.expect(',');
        std::size_t at = sc.pos;
        sc.skip_space();
        at = sc.pos;
        c.arcs[i] = sc.integer();
        if (c.arcs[i] <= 0) throw parse_error("arc labels must be positive", at);
    }
    sc.expect(')');
    return c;
}

int parse_loops(Scanner& sc) {
    // "L0" already consumed.
    sc.expect('(');
    sc.skip_space();
    std::size_t at = sc.pos;
    int n = sc.integer();
    if (n < 0) throw parse_error("loop count must be nonnegative", at);
    sc.expect(')');
    return n;
}

LinkDiagram parse_terms(Scanner& sc, bool inside_tangle) {
    LinkDiagram d;
    bool saw_term = false;
    while (!sc.done()) {
        if (inside_tangle && sc.peek() == ']') break;
        std::size_t at = sc.pos;
        sc.skip_space();
        at = sc.pos;
        std::string w = sc.word();
        if (w == "X") {
            d.crossings.push_back(parse_crossing(sc));
        } else if (w == "L") {
            if (!sc.accept('0')) throw parse_error("unknown term (did you mean L0?)", at);
            d.free_loops += parse_loops(sc);
        } else if (w == "T") {
            throw parse_error(inside_tangle ? "nested tangles are not supported"
                                            : "tangle term in link context; use parse_tangle",
                              at);
        } else {
            throw parse_error("unknown term '" + (w.empty() ? std::string(1, sc.peek()) : w) + "'", at);
        }
        saw_term = true;
    }
    if (!saw_term && !inside_tangle)
        throw parse_error("empty input", sc.pos);
    return d;
}

}  // namespace

LinkDiagram parse_pd(const std::string& text) {
    Scanner sc{text};
    LinkDiagram d = parse_terms(sc, false);
    validate(d);
    return d;
}

TangleDiagram parse_tangle(const std::string& text) {
    Scanner sc{text};
    sc.skip_space();
    std::size_t at = sc.pos;
    std::string w = sc.word();
    if (w != "T") throw parse_error("expected tangle term T{...}[...]", at);
    sc.expect('{');
    TangleDiagram t;
    for (int i = 0; i < 4; ++i) {
        if (i > 0) sc.expect(',');
        sc.skip_space();
        std::size_t key_at = sc.pos;
        std::string key = sc.word();
        Corner corner;
        if (key == "nw") corner = Corner::NW;
        else if (key == "ne") corner = Corner::NE;
        else if (key == "se") corner = Corner::SE;
        else if (key == "sw") corner = Corner::SW;
        else throw parse_error("expected corner key nw/ne/se/sw", key_at);
        sc.expect('=');
        sc.skip_space();
        std::size_t val_at = sc.pos;
        int arc = sc.integer();
        if (arc <= 0) throw parse_error("arc labels must be positive", val_at);
        if (t.boundary.count(corner))
            throw parse_error(std::string("duplicate corner ") + corner_name(corner), key_at);
        t.boundary[corner] = arc;
    }
    sc.expect('}');
    sc.expect('[');
    t.inner = parse_terms(sc, true);
    sc.expect(']');
    if (!sc.done()) throw parse_error("trailing input after tangle", sc.pos);
    validate(t);
    return t;
}

std::string serialize_pd(const LinkDiagram& d) {
    std::ostringstream out;
    bool first = true;
    for (const Crossing& c : d.crossings) {
        if (!first) out << ' ';
        first = false;
        out << "X(" << c.arcs[0] << ',' << c.arcs[1] << ',' << c.arcs[2] << ','
            << c.arcs[3] << ')';
    }
    if (d.free_loops > 0 || d.crossings.empty()) {
        if (!first) out << ' ';
        out << "L0(" << d.free_loops << ')';
    }
    return out.str();
}

std::string serialize_tangle(const TangleDiagram& t) {
    std::ostringstream out;
    out << "T{nw=" << t.corner(Corner::NW) << ",ne=" << t.corner(Corner::NE)
        << ",se=" << t.corner(Corner::SE) << ",sw=" << t.corner(Corner::SW)
        << "}[" << serialize_pd(t.inner) << ']';
    return out.str();
}

namespace {

// Multiset check over crossing slots plus any extra (corner) occurrences.
void check_arc_multiset(const LinkDiagram& d, const std::vector<int>& extra) {
    std::map<int, int> count;
    for (const Crossing& c : d.crossings)
        for (int a : c.arcs) {
            if (a <= 0) throw std::invalid_argument("arc labels must be positive");
            ++count[a];
        }
    for (int a : extra) {
        if (a <= 0) throw std::invalid_argument("arc labels must be positive");
        ++count[a];
    }
    for (const auto& [a, n] : count) {
        if (n == 1)
            throw std::invalid_argument("dangling arc " + std::to_string(a));
        if (n != 2)
            throw std::invalid_argument("arc " + std::to_string(a) + " appears " +
                                        std::to_string(n) + " times (expected 2)");
    }
    if (d.free_loops < 0) throw std::invalid_argument("negative free loop count");
}

}  // namespace

void validate(const LinkDiagram& d) {
    check_arc_multiset(d, {});
    check_planarity(d);  // face census Euler check, see twist module
}

void validate(const TangleDiagram& t) {
    std::vector<int> corners;
    for (Corner c : {Corner::NW, Corner::NE, Corner::SE, Corner::SW}) {
        auto it = t.boundary.find(c);
        if (it == t.boundary.end())
            throw std::invalid_argument(std::string("missing corner ") + corner_name(c));
        corners.push_back(it->second);
    }
    check_arc_multiset(t.inner, corners);
    check_tangle_planarity(t);
}

}  // namespace tb
