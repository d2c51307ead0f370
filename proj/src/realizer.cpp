#include "bowtie/realizer.hpp"

#include <algorithm>
#include <map>

#include "bowtie/characterize.hpp"
#include "bowtie/errors.hpp"

namespace bowtie {

std::string family_name(Family family) {
    switch (family) {
    case Family::F1_433: return "F1_433";
    case Family::F2_43: return "F2_43";
    case Family::F3_4: return "F3_4";
    case Family::F4_432: return "F4_432";
    case Family::F7_432: return "F7_432";
    case Family::F11_4321: return "F11_4321";
    case Family::F18_431: return "F18_431";
    case Family::C3_TAIL: return "C3_TAIL";
    case Family::SQ_42: return "SQ_42";
    case Family::S_42: return "S_42";
    case Family::S_4221: return "S_4221";
    }
    return "unknown";
}

namespace {

[[noreturn]] void bad(const FamilyPattern& p, const std::string& why) {
    throw BadParams(family_name(p.id) + " (n=" + std::to_string(p.n) + ", a=" + std::to_string(p.a) +
                    ", b=" + std::to_string(p.b) + ", c=" + std::to_string(p.c) + "): " + why);
}

void require(bool ok, const FamilyPattern& p, const char* why) {
    if (!ok) bad(p, why);
}

bool even(int x) { return x % 2 == 0; }

std::vector<int> runs(std::initializer_list<std::pair<int, int>> rs) {
    std::vector<int> out;
    for (const auto& [value, count] : rs) out.insert(out.end(), static_cast<std::size_t>(count), value);
    return out;
}

} // namespace

void validate(const FamilyPattern& p) {
    const int n = p.n;
    const bool no_abc = p.a == 0 && p.b == 0 && p.c == 0;
    switch (p.id) {
    case Family::F1_433:
    case Family::F3_4:
        require(no_abc, p, "takes only n");
        require(n >= 5 && !even(n), p, "needs n odd, n >= 5");
        break;
    case Family::F2_43:
        require(no_abc, p, "takes only n");
        require(n >= 6 && even(n), p, "needs n even, n >= 6");
        break;
    case Family::F4_432:
        require(p.c == 0, p, "has no 1s");
        require(p.a >= 2 && even(p.a) && p.b >= 1, p, "needs a even >= 2, b >= 1");
        require(n == 2 + p.a + p.b, p, "needs n = 2 + a + b");
        break;
    case Family::F7_432:
        require(p.c == 0, p, "has no 1s");
        require(p.a >= 2 && even(p.a) && p.b >= 1, p, "needs a even >= 2, b >= 1");
        require(n == 1 + p.a + p.b && n >= 5, p, "needs n = 1 + a + b >= 5");
        break;
    case Family::F11_4321:
        require(p.a >= 1 && p.b >= 1 && p.c >= 1, p, "needs a, b, c >= 1");
        require(p.a + p.b >= 4, p, "needs a + b >= 4");
        require(even(p.a + p.c), p, "needs a + c even");
        require(n == 1 + p.a + p.b + p.c, p, "needs n = 1 + a + b + c");
        break;
    case Family::F18_431:
        require(p.b == 0, p, "has no 2s");
        require(p.a >= 4 && p.c >= 1 && even(p.a + p.c), p, "needs a >= 4, c >= 1, a + c even");
        require(n == 1 + p.a + p.c, p, "needs n = 1 + a + c");
        break;
    case Family::C3_TAIL:
        require(no_abc, p, "takes only n");
        require(n >= 6, p, "needs n >= 6");
        break;
    case Family::SQ_42:
        require(no_abc, p, "takes only n");
        require(n >= 7, p, "needs n >= 7");
        break;
    case Family::S_42:
        require(no_abc, p, "takes only n");
        require(n == 5 || n >= 8, p, "needs n == 5 or n >= 8");
        break;
    case Family::S_4221:
        require(p.b == 0, p, "uses a for the 2s and c for the 1s");
        require(p.a >= 4 && p.c >= 2 && even(p.c), p, "needs a >= 4, c even >= 2");
        require(n == 1 + p.a + p.c, p, "needs n = 1 + a + c");
        break;
    }
}

DegreeSequence family_sequence(const FamilyPattern& p) {
    validate(p);
    const int n = p.n;
    switch (p.id) {
    case Family::F1_433: return DegreeSequence(runs({{4, 3}, {3, n - 3}}));
    case Family::F2_43: return DegreeSequence(runs({{4, 2}, {3, n - 2}}));
    case Family::F3_4: return DegreeSequence(runs({{4, 1}, {3, n - 1}}));
    case Family::F4_432: return DegreeSequence(runs({{4, 2}, {3, p.a}, {2, p.b}}));
    case Family::F7_432: return DegreeSequence(runs({{4, 1}, {3, p.a}, {2, p.b}}));
    case Family::F11_4321:
    case Family::F18_431: return DegreeSequence(runs({{4, 1}, {3, p.a}, {2, p.b}, {1, p.c}}));
    case Family::C3_TAIL: return DegreeSequence(runs({{n - 2, 1}, {n - 3, 1}, {2, n - 3}, {1, 1}}));
    case Family::SQ_42: return DegreeSequence(runs({{4, 2}, {2, n - 2}}));
    case Family::S_42: return DegreeSequence(runs({{4, 1}, {2, n - 1}}));
    case Family::S_4221: return DegreeSequence(runs({{4, 1}, {2, p.a}, {1, p.c}}));
    }
    bad(p, "unknown family");
}

std::optional<FamilyPattern> match_family(const DegreeSequence& seq) {
    const int n = static_cast<int>(seq.size());
    const auto accept = [&](FamilyPattern p) -> std::optional<FamilyPattern> {
        try {
            if (family_sequence(p) == seq) return p;
        } catch (const BadParams&) {
        }
        return std::nullopt;
    };

    if (n >= 6) {
        if (auto p = accept({Family::C3_TAIL, n})) return p;
    }
    if (n < 5 || seq[0] != 4) return std::nullopt;

    std::map<int, int> count;
    for (int d : seq) ++count[d];
    const int fours = count[4], threes = count[3], twos = count[2], ones = count[1];
    if (fours + threes + twos + ones != n) return std::nullopt;

    if (fours == 3 && twos == 0 && ones == 0) return accept({Family::F1_433, n});
    if (fours == 2 && ones == 0) {
        if (twos == 0) return accept({Family::F2_43, n});
        if (threes == 0) return accept({Family::SQ_42, n});
        return accept({Family::F4_432, n, threes, twos});
    }
    if (fours == 1) {
        if (ones == 0) {
            if (twos == 0) return accept({Family::F3_4, n});
            if (threes == 0) return accept({Family::S_42, n});
            return accept({Family::F7_432, n, threes, twos});
        }
        if (threes == 0) return accept({Family::S_4221, n, twos, 0, ones});
        if (twos == 0) return accept({Family::F18_431, n, threes, 0, ones});
        return accept({Family::F11_4321, n, threes, twos, ones});
    }
    return std::nullopt;
}

namespace {

// Grows a graph around the bowtie 0-{1,2}, 0-{3,4}. Every completion edge is
// recorded so a non-bowtie edge can later be subdivided.
class FamilyBuilder {
public:
    FamilyBuilder() : g_(5) {
        for (Vertex w = 1; w <= 4; ++w) g_.add_edge(0, w);
        g_.add_edge(1, 2);
        g_.add_edge(3, 4);
    }

    SimpleGraph& graph() { return g_; }

    void edge(Vertex u, Vertex v) {
        g_.add_edge(u, v);
        added_.emplace_back(u, v);
    }

    Vertex fresh() { return g_.add_vertex(); }

    std::vector<Vertex> fresh(int count) {
        std::vector<Vertex> out;
        for (int i = 0; i < count; ++i) out.push_back(fresh());
        return out;
    }

    void cycle(const std::vector<Vertex>& vs) {
        if (vs.size() < 3) fail("cycle needs at least 3 vertices");
        for (std::size_t i = 0; i < vs.size(); ++i) edge(vs[i], vs[(i + 1) % vs.size()]);
    }

    // Matches the leaves pairwise, skipping pairs that are already adjacent.
    void pair_up(const std::vector<Vertex>& leaves) {
        std::vector<bool> used(leaves.size(), false);
        for (std::size_t i = 0; i < leaves.size(); ++i) {
            if (used[i]) continue;
            used[i] = true;
            std::size_t j = i + 1;
            while (j < leaves.size() && (used[j] || g_.has_edge(leaves[i], leaves[j]))) ++j;
            if (j == leaves.size()) fail("cannot pair leaves");
            used[j] = true;
            edge(leaves[i], leaves[j]);
        }
    }

    // Attaches `threes` new degree-3 vertices and `ones` new degree-1 vertices,
    // and gives each stub exactly one more edge.
    void attach(const std::vector<Vertex>& stubs, int threes, int ones) {
        std::vector<Vertex> leaves = stubs;
        for (Vertex v : fresh(ones)) leaves.push_back(v);
        const int m = threes;
        const int l = static_cast<int>(leaves.size());
        if ((m + l) % 2 != 0) fail("odd number of stubs");

        if (m == 0) {
            pair_up(leaves);
            return;
        }
        const auto t = fresh(m);
        std::size_t next_leaf = 0;
        const auto hang = [&](Vertex v, int count) {
            for (int k = 0; k < count; ++k) edge(v, leaves[next_leaf++]);
        };

        if (l >= m + 2) {
            // caterpillar: spine t0..t(m-1), leaves fill the missing degree
            for (int i = 0; i + 1 < m; ++i) edge(t[i], t[i + 1]);
            if (m == 1) {
                hang(t[0], 3);
            } else {
                hang(t[0], 2);
                for (int i = 1; i + 1 < m; ++i) hang(t[i], 1);
                hang(t[m - 1], 2);
            }
            pair_up(std::vector<Vertex>(leaves.begin() + static_cast<std::ptrdiff_t>(next_leaf), leaves.end()));
            return;
        }

        // Fewer leaves than threes: cycle through the threes, one leaf per
        // cycle vertex, chords for the rest.
        const int r = m - l;
        if (m < 3 || r < 0) fail("too few leaves for the degree-3 vertices");
        cycle(t);
        if (r == 0) {
            for (int i = 0; i < m; ++i) hang(t[i], 1);
        } else if (r == 2) {
            if (m < 4) fail("chord would duplicate a cycle edge");
            edge(t[0], t[2]);
            for (int i = 1; i < m; ++i) {
                if (i != 2) hang(t[i], 1);
            }
        } else {
            for (int i = 0; i < l; ++i) hang(t[i], 1);
            for (int j = 0; j < r / 2; ++j) edge(t[l + j], t[l + j + r / 2]);
        }
    }

    // Replaces the first completion edge by a path through `twos` new vertices.
    void subdivide(int twos) {
        if (twos == 0) return;
        if (added_.empty()) {
            cycle(fresh(twos));
            return;
        }
        const auto [u, v] = added_.front();
        added_.erase(added_.begin());
        g_.remove_edge(u, v);
        Vertex prev = u;
        for (int i = 0; i < twos; ++i) {
            const Vertex s = fresh();
            edge(prev, s);
            prev = s;
        }
        edge(prev, v);
    }

    [[noreturn]] static void fail(const std::string& why) {
        throw InternalExhaustion("family construction failed: " + why);
    }

private:
    SimpleGraph g_;
    std::vector<Edge> added_;
};

SimpleGraph build_family(const FamilyPattern& p) {
    const int n = p.n;
    FamilyBuilder fb;
    switch (p.id) {
    case Family::F1_433:
        // 1 and 3 reach degree 4 through 1-3
        fb.edge(1, 3);
        fb.attach({1, 3, 2, 4}, n - 5, 0);
        break;
    case Family::F2_43:
        fb.edge(1, 3);
        fb.attach({1, 2, 4}, n - 5, 0);
        break;
    case Family::F3_4: fb.attach({1, 3, 2, 4}, n - 5, 0); break;
    case Family::F4_432:
        if (p.a == 2) {
            fb.edge(1, 3);
            fb.edge(1, 4);
            fb.subdivide(p.b - 1);
        } else {
            fb.edge(1, 3);
            fb.attach({1, 2, 4}, p.a - 3, 0);
            fb.subdivide(p.b);
        }
        break;
    case Family::F7_432:
        if (p.a == 2) {
            fb.attach({1, 3}, 0, 0);
            fb.subdivide(p.b - 2);
        } else {
            fb.attach({1, 3, 2, 4}, p.a - 4, 0);
            fb.subdivide(p.b);
        }
        break;
    case Family::F11_4321:
    case Family::F18_431: {
        // wings take the 3s first, in the order 1, 3, 2, 4, so two stubs
        // never come from the same wing edge
        const int wing_threes = std::min(p.a, 4);
        const std::vector<Vertex> order = {1, 3, 2, 4};
        const std::vector<Vertex> stubs(order.begin(), order.begin() + wing_threes);
        fb.attach(stubs, p.a - wing_threes, p.c);
        fb.subdivide(p.b - (4 - wing_threes));
        break;
    }
    case Family::C3_TAIL: {
        // 0 has degree n-2, 1 has degree n-3
        for (Vertex u : fb.fresh(n - 6)) {
            fb.edge(0, u);
            fb.edge(1, u);
        }
        fb.edge(1, fb.fresh());
        break;
    }
    case Family::SQ_42: {
        std::vector<Vertex> ring = {1};
        for (Vertex v : fb.fresh(n - 5)) ring.push_back(v);
        fb.cycle(ring);
        break;
    }
    case Family::S_42:
        if (n > 5) fb.cycle(fb.fresh(n - 5));
        break;
    case Family::S_4221:
        fb.attach({}, 0, p.c);
        fb.subdivide(p.a - 4);
        break;
    }
    return fb.graph();
}

} // namespace

SimpleGraph construct_family(const FamilyPattern& p) {
    const DegreeSequence expected = family_sequence(p);
    SimpleGraph g = build_family(p);
    if (g.vertex_count() != p.n || degree_sequence(g) != expected)
        throw InternalExhaustion("construction for " + family_name(p.id) + " produced the wrong degree sequence");
    if (!contains_bowtie(g))
        throw InternalExhaustion("construction for " + family_name(p.id) + " has no bowtie");
    return g;
}

SimpleGraph reattach(const SimpleGraph& g, const LayoffTrace& trace) {
    DegreeSequence have;
    try {
        have = degree_sequence(g);
    } catch (const ZeroDegreeVertex&) {
        throw TraceMismatch("graph has isolated vertices");
    }
    if (have != trace.child)
        throw TraceMismatch("graph realizes " + format_sequence(have) + ", trace child is " +
                            format_sequence(trace.child));

    SimpleGraph out = g;
    std::vector<bool> used(static_cast<std::size_t>(g.vertex_count()), false);
    std::vector<Vertex> targets;
    for (std::size_t pos : trace.decremented_positions) {
        const int required = trace.parent[pos] - 1;
        if (required == 0) {
            // the decremented 1 vanished from the child; bring it back
            targets.push_back(out.add_vertex());
            used.push_back(true);
            continue;
        }
        Vertex pick = -1;
        for (Vertex v = 0; v < g.vertex_count(); ++v) {
            if (!used[static_cast<std::size_t>(v)] && g.degree(v) == required) {
                pick = v;
                break;
            }
        }
        if (pick < 0) throw TraceMismatch("no unused vertex of degree " + std::to_string(required));
        used[static_cast<std::size_t>(pick)] = true;
        targets.push_back(pick);
    }
    const Vertex fresh = out.add_vertex();
    for (Vertex v : targets) out.add_edge(fresh, v);

    if (degree_sequence(out) != trace.parent) throw TraceMismatch("reattached graph does not realize the parent");
    return out;
}

namespace {

Realization realize_rec(const DegreeSequence& seq, const RealizeOptions& options) {
    const int n = static_cast<int>(seq.size());
    Realization result;
    if (n <= options.oracle_max_n) {
        auto g = oracle_bowtie_realization(seq);
        if (!g) throw InternalExhaustion("no realization of " + format_sequence(seq) + " contains a bowtie");
        result.graph = std::move(*g);
        result.route = Route::Oracle;
        return result;
    }

    const LayoffTrace trace = lay_off(seq);
    if (check_potentially(trace.child).potentially) {
        Realization inner = realize_rec(trace.child, options);
        result.graph = reattach(inner.graph, trace);
        result.route = Route::Recursion;
        result.depth = inner.depth + 1;
        result.family = inner.family;
        return result;
    }

    if (auto family = match_family(seq)) {
        result.graph = construct_family(*family);
        result.route = Route::Family;
        result.family = family;
        return result;
    }
    throw InternalExhaustion("no construction route applies to " + format_sequence(seq));
}

} // namespace

Realization realize_with_bowtie_traced(const DegreeSequence& seq, const RealizeOptions& options) {
    if (options.oracle_max_n > kMaxEnumerationVertices)
        throw TooLarge("oracle threshold above " + std::to_string(kMaxEnumerationVertices));
    const auto report = check_potentially(seq);
    if (!report.potentially)
        throw NotPotentially(format_sequence(seq) + " is not potentially (K5 - C4)-graphic (" +
                             failure_name(report.failure) + ")");

    Realization result = realize_rec(seq, options);
    if (degree_sequence(result.graph) != seq)
        throw InternalExhaustion("realization of " + format_sequence(seq) + " has the wrong degrees");
    auto witness = contains_bowtie(result.graph);
    if (!witness) throw InternalExhaustion("realization of " + format_sequence(seq) + " lost its bowtie");
    result.witness = *witness;
    return result;
}

SimpleGraph realize_with_bowtie(const DegreeSequence& seq, const RealizeOptions& options) {
    return realize_with_bowtie_traced(seq, options).graph;
}

} // namespace bowtie
