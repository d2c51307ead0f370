#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "bowtie/sequence.hpp"

namespace bowtie {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

/// Labeled simple graph on vertices 0..n-1, stored as a dense adjacency
/// matrix. Graphs here stay small (tens of vertices) so the matrix is fine.
class SimpleGraph {
public:
    SimpleGraph() = default;
    explicit SimpleGraph(int vertex_count);
    SimpleGraph(int vertex_count, std::span<const Edge> edges);

    int vertex_count() const noexcept { return n_; }
    std::size_t edge_count() const noexcept { return edge_count_; }

    bool has_edge(Vertex u, Vertex v) const;
    int degree(Vertex v) const { return degree_.at(static_cast<std::size_t>(v)); }

    // Throws std::invalid_argument on loops, duplicates or out-of-range ids.
    void add_edge(Vertex u, Vertex v);
    void remove_edge(Vertex u, Vertex v);
    Vertex add_vertex();

    std::vector<Vertex> neighbors(Vertex v) const;
    /// All edges (u, v) with u < v, in lexicographic order.
    std::vector<Edge> edges() const;

    friend bool operator==(const SimpleGraph&, const SimpleGraph&) = default;

private:
    void check_vertex(Vertex v) const;
    std::size_t index(Vertex u, Vertex v) const {
        return static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(v);
    }

    int n_ = 0;
    std::size_t edge_count_ = 0;
    std::vector<std::uint8_t> adj_;
    std::vector<int> degree_;
};

/// K5 - C4: a center joined to both ends of two disjoint wing edges.
struct BowtieWitness {
    Vertex center = 0;
    Edge wing1;
    Edge wing2;
    friend bool operator==(const BowtieWitness&, const BowtieWitness&) = default;
};

/// Sorted degree multiset. Throws ZeroDegreeVertex on isolated vertices.
DegreeSequence degree_sequence(const SimpleGraph& g);

/// Lexicographically least (center, wing1, wing2) witness with wing1 < wing2,
/// or nullopt when g has no K5 - C4 subgraph.
std::optional<BowtieWitness> contains_bowtie(const SimpleGraph& g);

/// True iff w is a valid embedding of K5 - C4 in g.
bool is_valid_witness(const SimpleGraph& g, const BowtieWitness& w);

/// Erdős–Gallai test on an arbitrary nonnegative multiset (zeros allowed).
/// Independent of the lay-off route in is_graphic().
bool erdos_gallai_graphic(std::vector<int> degrees);

/// Realizes seq by laying off the smallest residual vertex onto the largest
/// ones; vertex i gets degree seq[i]. Throws NotGraphic.
SimpleGraph havel_hakimi_realize(const DegreeSequence& seq);

constexpr int kMaxEnumerationVertices = 10;

/// Visits every labeled realization of seq exactly once, vertex i having
/// degree seq[i]. Vertices are completed in order 0..n-1, each choosing its
/// later neighbors in lexicographic order. The visitor returns false to stop.
/// budget caps the number of graphs visited (0 = unlimited). Returns the
/// number of graphs visited. Throws TooLarge (n > 10) or NotGraphic.
std::size_t enumerate_realizations(const DegreeSequence& seq, std::size_t budget,
                                   const std::function<bool(const SimpleGraph&)>& visit);

/// Convenience overload collecting the stream.
std::vector<SimpleGraph> enumerate_realizations(const DegreeSequence& seq, std::size_t budget = 0);

/// First realization (in enumeration order) containing a bowtie, if any.
std::optional<SimpleGraph> oracle_bowtie_realization(const DegreeSequence& seq);

/// Brute-force definition of "potentially (K5 - C4)-graphic".
bool oracle_has_bowtie_realization(const DegreeSequence& seq);

/// One "u v" line per edge, 0-based, u < v, lexicographic order.
void write_edge_list(std::ostream& out, const SimpleGraph& g);

/// Reads "u v" lines, skipping blank lines and lines starting with '#'.
/// vertex_count defaults to max id + 1. Throws ParseError.
SimpleGraph read_edge_list(std::istream& in, std::optional<int> vertex_count = std::nullopt);

/// Undirected `graph { ... }` with plain integer node ids.
void write_dot(std::ostream& out, const SimpleGraph& g);

} // namespace bowtie
