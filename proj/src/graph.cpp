#include "bowtie/graph.hpp"

#include <algorithm>
#include <functional>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "bowtie/errors.hpp"

namespace bowtie {

SimpleGraph::SimpleGraph(int vertex_count)
    : n_(vertex_count),
      adj_(static_cast<std::size_t>(vertex_count) * static_cast<std::size_t>(vertex_count), 0),
      degree_(static_cast<std::size_t>(vertex_count), 0) {
    if (vertex_count < 0) throw std::invalid_argument("negative vertex count");
}

SimpleGraph::SimpleGraph(int vertex_count, std::span<const Edge> edges) : SimpleGraph(vertex_count) {
    for (const auto& [u, v] : edges) add_edge(u, v);
}

void SimpleGraph::check_vertex(Vertex v) const {
    if (v < 0 || v >= n_) throw std::invalid_argument("vertex " + std::to_string(v) + " out of range");
}

bool SimpleGraph::has_edge(Vertex u, Vertex v) const {
    check_vertex(u);
    check_vertex(v);
    return adj_[index(u, v)] != 0;
}

void SimpleGraph::add_edge(Vertex u, Vertex v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("self-loop at " + std::to_string(u));
    if (adj_[index(u, v)])
        throw std::invalid_argument("duplicate edge " + std::to_string(u) + "-" + std::to_string(v));
    adj_[index(u, v)] = adj_[index(v, u)] = 1;
    ++degree_[static_cast<std::size_t>(u)];
    ++degree_[static_cast<std::size_t>(v)];
    ++edge_count_;
}

void SimpleGraph::remove_edge(Vertex u, Vertex v) {
    if (!has_edge(u, v))
        throw std::invalid_argument("no edge " + std::to_string(u) + "-" + std::to_string(v));
    adj_[index(u, v)] = adj_[index(v, u)] = 0;
    --degree_[static_cast<std::size_t>(u)];
    --degree_[static_cast<std::size_t>(v)];
    --edge_count_;
}

Vertex SimpleGraph::add_vertex() {
    const int m = n_ + 1;
    std::vector<std::uint8_t> grown(static_cast<std::size_t>(m) * static_cast<std::size_t>(m), 0);
    for (int u = 0; u < n_; ++u) {
        std::copy_n(adj_.begin() + static_cast<std::ptrdiff_t>(index(u, 0)), n_,
                    grown.begin() + static_cast<std::ptrdiff_t>(u) * m);
    }
    adj_ = std::move(grown);
    degree_.push_back(0);
    n_ = m;
    return m - 1;
}

std::vector<Vertex> SimpleGraph::neighbors(Vertex v) const {
    check_vertex(v);
    std::vector<Vertex> out;
    out.reserve(static_cast<std::size_t>(degree(v)));
    for (Vertex u = 0; u < n_; ++u) {
        if (adj_[index(v, u)]) out.push_back(u);
    }
    return out;
}

std::vector<Edge> SimpleGraph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (Vertex u = 0; u < n_; ++u) {
        for (Vertex v = u + 1; v < n_; ++v) {
            if (adj_[index(u, v)]) out.emplace_back(u, v);
        }
    }
    return out;
}

DegreeSequence degree_sequence(const SimpleGraph& g) {
    std::vector<int> degrees;
    degrees.reserve(static_cast<std::size_t>(g.vertex_count()));
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        if (g.degree(v) == 0) throw ZeroDegreeVertex("vertex " + std::to_string(v) + " is isolated");
        degrees.push_back(g.degree(v));
    }
    return DegreeSequence(std::move(degrees));
}

std::optional<BowtieWitness> contains_bowtie(const SimpleGraph& g) {
    for (Vertex c = 0; c < g.vertex_count(); ++c) {
        if (g.degree(c) < 4) continue;
        const auto nbrs = g.neighbors(c);

        // edges inside N(c), already in lexicographic order
        std::vector<Edge> inner;
        for (std::size_t i = 0; i < nbrs.size(); ++i) {
            for (std::size_t j = i + 1; j < nbrs.size(); ++j) {
                if (g.has_edge(nbrs[i], nbrs[j])) inner.emplace_back(nbrs[i], nbrs[j]);
            }
        }
        for (std::size_t p = 0; p < inner.size(); ++p) {
            const auto [a, b] = inner[p];
            for (std::size_t q = p + 1; q < inner.size(); ++q) {
                const auto [x, y] = inner[q];
                if (x != a && x != b && y != a && y != b) return BowtieWitness{c, inner[p], inner[q]};
            }
        }
    }
    return std::nullopt;
}

bool is_valid_witness(const SimpleGraph& g, const BowtieWitness& w) {
    const Vertex vs[5] = {w.center, w.wing1.first, w.wing1.second, w.wing2.first, w.wing2.second};
    for (Vertex v : vs) {
        if (v < 0 || v >= g.vertex_count()) return false;
    }
    for (int i = 0; i < 5; ++i) {
        for (int j = i + 1; j < 5; ++j) {
            if (vs[i] == vs[j]) return false;
        }
    }
    for (int i = 1; i < 5; ++i) {
        if (!g.has_edge(w.center, vs[i])) return false;
    }
    return g.has_edge(w.wing1.first, w.wing1.second) && g.has_edge(w.wing2.first, w.wing2.second);
}

bool erdos_gallai_graphic(std::vector<int> degrees) {
    std::sort(degrees.begin(), degrees.end(), std::greater<>());
    const auto n = static_cast<std::int64_t>(degrees.size());
    std::int64_t total = 0;
    for (int d : degrees) {
        if (d < 0) return false;
        total += d;
    }
    if (total % 2 != 0) return false;

    std::int64_t prefix = 0;
    for (std::int64_t k = 1; k <= n; ++k) {
        prefix += degrees[static_cast<std::size_t>(k - 1)];
        std::int64_t rhs = k * (k - 1);
        for (std::int64_t i = k; i < n; ++i) rhs += std::min<std::int64_t>(degrees[static_cast<std::size_t>(i)], k);
        if (prefix > rhs) return false;
    }
    return true;
}

SimpleGraph havel_hakimi_realize(const DegreeSequence& seq) {
    const int n = static_cast<int>(seq.size());
    SimpleGraph g(n);

    struct Slot {
        int residual;
        Vertex vertex;
    };
    std::vector<Slot> active;
    for (Vertex v = 0; v < n; ++v) active.push_back({seq[static_cast<std::size_t>(v)], v});

    while (!active.empty()) {
        std::stable_sort(active.begin(), active.end(),
                         [](const Slot& a, const Slot& b) { return a.residual > b.residual; });
        const Slot last = active.back();
        active.pop_back();
        if (static_cast<std::size_t>(last.residual) > active.size())
            throw NotGraphic("sequence " + format_sequence(seq) + " is not graphic");
        for (int j = 0; j < last.residual; ++j) {
            auto& slot = active[static_cast<std::size_t>(j)];
            g.add_edge(last.vertex, slot.vertex);
            --slot.residual;
        }
        std::erase_if(active, [](const Slot& s) { return s.residual == 0; });
    }
    return g;
}

namespace {

class RealizationSearch {
public:
    RealizationSearch(const DegreeSequence& seq, std::size_t budget,
                      const std::function<bool(const SimpleGraph&)>& visit)
        : n_(static_cast<int>(seq.size())), residual_(seq.begin(), seq.end()), graph_(n_), budget_(budget),
          visit_(visit) {}

    std::size_t run() {
        complete_vertex(0);
        return emitted_;
    }

private:
    // Fills the remaining demand of vertex v from vertices v+1..n-1, then
    // recurses on v+1.
    void complete_vertex(Vertex v) {
        if (stopped_) return;
        if (v == n_) {
            ++emitted_;
            if (!visit_(graph_) || (budget_ != 0 && emitted_ >= budget_)) stopped_ = true;
            return;
        }
        std::vector<Vertex> candidates;
        for (Vertex u = v + 1; u < n_; ++u) {
            if (residual_[static_cast<std::size_t>(u)] > 0) candidates.push_back(u);
        }
        const int need = residual_[static_cast<std::size_t>(v)];
        if (need > static_cast<int>(candidates.size())) return;
        choose(v, candidates, 0, need);
    }

    void choose(Vertex v, const std::vector<Vertex>& candidates, std::size_t from, int need) {
        if (stopped_) return;
        if (need == 0) {
            if (tail_graphic(v + 1)) complete_vertex(v + 1);
            return;
        }
        for (std::size_t idx = from; idx + static_cast<std::size_t>(need) <= candidates.size(); ++idx) {
            const Vertex u = candidates[idx];
            graph_.add_edge(v, u);
            --residual_[static_cast<std::size_t>(u)];
            choose(v, candidates, idx + 1, need - 1);
            ++residual_[static_cast<std::size_t>(u)];
            graph_.remove_edge(v, u);
            if (stopped_) return;
        }
    }

    // Edges among vertices >= first are all still undecided, so a completion
    // exists iff their residual demands are graphic on their own.
    bool tail_graphic(Vertex first) const {
        return erdos_gallai_graphic(std::vector<int>(residual_.begin() + first, residual_.end()));
    }

    int n_;
    std::vector<int> residual_;
    SimpleGraph graph_;
    std::size_t budget_;
    const std::function<bool(const SimpleGraph&)>& visit_;
    std::size_t emitted_ = 0;
    bool stopped_ = false;
};

void check_enumerable(const DegreeSequence& seq) {
    if (seq.size() > static_cast<std::size_t>(kMaxEnumerationVertices))
        throw TooLarge("realization enumeration is limited to n <= " + std::to_string(kMaxEnumerationVertices) +
                       ", got n = " + std::to_string(seq.size()));
    if (!erdos_gallai_graphic(std::vector<int>(seq.begin(), seq.end())))
        throw NotGraphic("sequence " + format_sequence(seq) + " is not graphic");
}

} // namespace

std::size_t enumerate_realizations(const DegreeSequence& seq, std::size_t budget,
                                   const std::function<bool(const SimpleGraph&)>& visit) {
    check_enumerable(seq);
    return RealizationSearch(seq, budget, visit).run();
}

std::vector<SimpleGraph> enumerate_realizations(const DegreeSequence& seq, std::size_t budget) {
    std::vector<SimpleGraph> out;
    enumerate_realizations(seq, budget, [&](const SimpleGraph& g) {
        out.push_back(g);
        return true;
    });
    return out;
}

std::optional<SimpleGraph> oracle_bowtie_realization(const DegreeSequence& seq) {
    std::optional<SimpleGraph> found;
    enumerate_realizations(seq, 0, [&](const SimpleGraph& g) {
        if (contains_bowtie(g)) {
            found = g;
            return false;
        }
        return true;
    });
    return found;
}

bool oracle_has_bowtie_realization(const DegreeSequence& seq) {
    return oracle_bowtie_realization(seq).has_value();
}

void write_edge_list(std::ostream& out, const SimpleGraph& g) {
    for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

SimpleGraph read_edge_list(std::istream& in, std::optional<int> vertex_count) {
    std::vector<Edge> edges;
    std::string line;
    int max_id = -1;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream fields(line);
        long long u = -1, v = -1;
        std::string extra;
        if (!(fields >> u >> v) || (fields >> extra) || u < 0 || v < 0 || u > 1'000'000 || v > 1'000'000)
            throw ParseError("edge list line " + std::to_string(line_no) + ": expected 'u v', got '" + line + "'");
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
        max_id = std::max({max_id, static_cast<int>(u), static_cast<int>(v)});
    }
    const int n = vertex_count.value_or(max_id + 1);
    if (max_id >= n) throw ParseError("edge list references vertex " + std::to_string(max_id) + " >= n");
    SimpleGraph g(n);
    for (const auto& [u, v] : edges) {
        if (u == v) throw ParseError("edge list contains a self-loop at " + std::to_string(u));
        if (g.has_edge(u, v))
            throw ParseError("edge list repeats edge " + std::to_string(u) + " " + std::to_string(v));
        g.add_edge(u, v);
    }
    return g;
}

void write_dot(std::ostream& out, const SimpleGraph& g) {
    out << "graph {\n";
    for (Vertex v = 0; v < g.vertex_count(); ++v) out << "  " << v << ";\n";
    for (const auto& [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
    out << "}\n";
}

} // namespace bowtie
