#include "ffs/family.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace ffsg {

namespace {

struct Token {
    char kind;  // 'C', 'K', 'Q', 'R' (cycle range)
    int a = 0, b = 0;
};

Token parse_token(const std::string& s) {
    Token t{};
    if (s.size() >= 2 && s[0] == 'C') {
        auto dash = s.find("-C");
        if (dash != std::string::npos) {
            t.kind = 'R';
            t.a = std::stoi(s.substr(1, dash - 1));
            t.b = std::stoi(s.substr(dash + 2));
            if (t.a < 3 || t.b < t.a) throw std::invalid_argument("bad cycle range: " + s);
        } else {
            t.kind = 'C';
            t.a = std::stoi(s.substr(1));
            if (t.a < 3) throw std::invalid_argument("cycle too short: " + s);
        }
        return t;
    }
    if (s.size() >= 2 && s[0] == 'K') {
        auto comma = s.find(',');
        if (comma == std::string::npos)
            throw std::invalid_argument("complete bipartite patterns are written Ka,b: " + s);
        t.kind = 'K';
        t.a = std::stoi(s.substr(1, comma - 1));
        t.b = std::stoi(s.substr(comma + 1));
        if (t.a < 1 || t.b < 1) throw std::invalid_argument("bad K_{a,b}: " + s);
        if (t.a > t.b) std::swap(t.a, t.b);
        return t;
    }
    if (s == "Q3") {
        t.kind = 'Q';
        return t;
    }
    throw std::invalid_argument("unknown pattern token: " + s +
                                " (supported: C<k>, C<j>-C<k>, K<a>,<b>, Q3)");
}

void add_cycle(FamilySpec& f, int k) {
    f.patterns.push_back(cycle_graph(k));
    f.pattern_names.push_back("C" + std::to_string(k));
}

}  // namespace

FamilySpec parse_family(const std::string& name) {
    FamilySpec f;
    f.name = name;

    std::vector<Token> tokens;
    std::stringstream ss(name);
    std::string part;
    while (std::getline(ss, part, '+')) {
        if (!part.empty()) tokens.push_back(parse_token(part));
    }
    if (tokens.empty()) throw std::invalid_argument("empty family name");

    for (const Token& t : tokens) {
        switch (t.kind) {
            case 'C':
                add_cycle(f, t.a);
                break;
            case 'R':
                for (int k = t.a; k <= t.b; ++k) add_cycle(f, k);
                break;
            case 'K':
                f.patterns.push_back(complete_bipartite(t.a, t.b));
                f.pattern_names.push_back("K" + std::to_string(t.a) + "," + std::to_string(t.b));
                break;
            case 'Q':
                f.patterns.push_back(hypercube3());
                f.pattern_names.push_back("Q3");
                break;
        }
    }

    // Classify: a full cycle range starting at C3 is the classical girth
    // family; a lone K_{a,b} and Q3 are the diameter-2-style closed
    // families. C4 alone equals K_{2,2}.
    if (tokens.size() == 1) {
        const Token& t = tokens[0];
        if (t.kind == 'R' && t.a == 3) {
            f.hint = DetectionHint::CycleList;
            f.girth_target = t.b + 1;
            f.closed = true;  // {C3,...,C_{g-1}} is closed
        } else if (t.kind == 'K') {
            f.hint = DetectionHint::CompleteBipartite;
            f.kab_a = t.a;
            f.kab_b = t.b;
            f.closed = true;  // diameter 2: locally injective => injective
        } else if (t.kind == 'C' && t.a == 4) {
            f.hint = DetectionHint::CompleteBipartite;
            f.kab_a = 2;
            f.kab_b = 2;
            f.closed = true;
        } else if (t.kind == 'C' && t.a == 3) {
            f.hint = DetectionHint::CycleList;
            f.girth_target = 4;
            f.closed = true;
        } else if (t.kind == 'Q') {
            f.hint = DetectionHint::Hypercube3;
            f.closed = true;
        }
    } else {
        bool all_kab = std::all_of(tokens.begin(), tokens.end(),
                                   [](const Token& t) { return t.kind == 'K'; });
        if (all_kab) {
            // any union of complete bipartite patterns stays closed
            f.closed = true;
            f.hint = DetectionHint::CompleteBipartite;
        }
    }
    return f;
}

FamilySpec family_from_pattern_file(const std::string& path) {
    FamilySpec f;
    f.name = path;
    f.patterns.push_back(Graph::load_edge_list(path));
    f.pattern_names.push_back(path);
    f.closed = false;
    return f;
}

bool family_admissible(const FamilySpec& f, std::string* why) {
    if (f.patterns.empty()) {
        if (why) *why = "family has no patterns";
        return false;
    }
    bool some_bipartite = false;
    for (size_t i = 0; i < f.patterns.size(); ++i) {
        if (is_forest(f.patterns[i])) {
            if (why) *why = "pattern " + f.pattern_names[i] + " is a forest";
            return false;
        }
        if (is_bipartite(f.patterns[i])) some_bipartite = true;
    }
    if (!some_bipartite) {
        if (why) *why = "no bipartite pattern in the family (chromatic number >= 3)";
        return false;
    }
    return true;
}

bool family_free(const Graph& g, const FamilySpec& f) {
    for (const Graph& p : f.patterns)
        if (contains_pattern(g, p)) return false;
    return true;
}

}  // namespace ffsg
