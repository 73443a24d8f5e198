// Simplicial complexes on vertex sets {1..n} (n <= 30, faces as bitmasks),
// simplicial graphs (complexes of dimension <= 1), and the combinatorial
// invariants used throughout: genus, girth, 2-connectedness, the smoothing
// reduction, the independence invariant s, cycle enumeration and fundamental
// cycles.

#ifndef SQFM_SIMPLICIAL_HPP
#define SQFM_SIMPLICIAL_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <deque>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "sqfm/matrix.hpp"

namespace sqfm {

/** A face is a subset of {1..n}; vertex i is bit i-1. */
using Face = std::uint32_t;

constexpr int kMaxVertices = 30;

namespace faces {

inline Face empty() { return 0; }
inline Face singleton(int v) { return Face{1} << (v - 1); }
inline Face pair(int v, int w) { return singleton(v) | singleton(w); }
inline int size(Face f) { return std::popcount(f); }
inline bool contains(Face f, int v) { return (f >> (v - 1)) & 1; }
inline bool subset(Face a, Face b) { return (a & ~b) == 0; }

inline std::vector<int> vertices(Face f) {
    std::vector<int> vs;
    for (int v = 1; f; ++v, f >>= 1)
        if (f & 1) vs.push_back(v);
    return vs;
}

inline Face from_vertices(const std::vector<int>& vs) {
    Face f = 0;
    for (int v : vs) {
        if (v < 1 || v > kMaxVertices)
            throw std::invalid_argument("face: vertex label out of range 1..30");
        f |= singleton(v);
    }
    return f;
}

inline std::string str(Face f) {
    std::string s = "[";
    bool first = true;
    for (int v : vertices(f)) {
        if (!first) s += ",";
        s += std::to_string(v);
        first = false;
    }
    return s + "]";
}

}  // namespace faces

/**
 * A finite simplicial complex: a downward-closed set of faces.  The empty
 * face belongs to every nonvoid complex.  Vertex labels live in {1..n};
 * subcomplexes (deletions, links, restrictions) may omit some singletons.
 */
class SimplicialComplex {
public:
    SimplicialComplex() : n_(0) {}

    /** Builds the downward closure of the given generators. */
    SimplicialComplex(int n, const std::vector<Face>& generators) : n_(n) {
        if (n < 0 || n > kMaxVertices)
            throw std::invalid_argument("SimplicialComplex: vertex count must be in 0..30");
        std::set<Face> all;
        for (Face g : generators) {
            if (g >> n)
                throw std::invalid_argument("SimplicialComplex: face uses a vertex above n");
            close_down(g, all);
        }
        faces_.assign(all.begin(), all.end());
        sort_faces();
    }

    static SimplicialComplex with_all_vertices(int n, const std::vector<Face>& generators) {
        std::vector<Face> gen = generators;
        for (int v = 1; v <= n; ++v) gen.push_back(faces::singleton(v));
        return SimplicialComplex(n, gen);
    }

    int vertex_count() const { return n_; }
    const std::vector<Face>& faces() const { return faces_; }
    bool has_face(Face f) const { return std::binary_search(faces_.begin(), faces_.end(), f, order); }

    bool is_void() const { return faces_.empty(); }

    /** -2 for the void complex, -1 for {∅}, |F|-1 otherwise. */
    int dim() const {
        if (faces_.empty()) return -2;
        return faces::size(faces_.back()) - 1;
    }

    std::vector<Face> faces_of_size(int k) const {
        std::vector<Face> out;
        for (Face f : faces_)
            if (faces::size(f) == k) out.push_back(f);
        return out;
    }

    /** True iff every label in 1..n occurs as a vertex. */
    bool has_all_vertices() const {
        for (int v = 1; v <= n_; ++v)
            if (!has_face(faces::singleton(v))) return false;
        return true;
    }

    /** Δ − F: the complex of faces not containing F (Δ minus the open star). */
    SimplicialComplex deletion(Face f) const {
        SimplicialComplex out;
        out.n_ = n_;
        for (Face g : faces_)
            if (!faces::subset(f, g)) out.faces_.push_back(g);
        out.sort_faces();
        return out;
    }

    /** lk_Δ F = {G : G ∩ F = ∅, G ∪ F ∈ Δ}. */
    SimplicialComplex link(Face f) const {
        if (!has_face(f))
            throw std::invalid_argument("link: " + faces::str(f) + " is not a face");
        SimplicialComplex out;
        out.n_ = n_;
        for (Face g : faces_)
            if ((g & f) == 0 && has_face(g | f)) out.faces_.push_back(g);
        out.sort_faces();
        return out;
    }

    /** Δ|_W: faces contained in the vertex set W. */
    SimplicialComplex restriction(Face w) const {
        SimplicialComplex out;
        out.n_ = n_;
        for (Face g : faces_)
            if (faces::subset(g, w)) out.faces_.push_back(g);
        out.sort_faces();
        return out;
    }

    friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
        return a.n_ == b.n_ && a.faces_ == b.faces_;
    }

private:
    int n_;
    std::vector<Face> faces_;  // sorted by (size, value)

    static bool order(Face a, Face b) {
        int sa = faces::size(a), sb = faces::size(b);
        return sa != sb ? sa < sb : a < b;
    }
    void sort_faces() { std::sort(faces_.begin(), faces_.end(), order); }

    static void close_down(Face g, std::set<Face>& out) {
        if (out.count(g)) return;
        out.insert(g);
        for (int v : faces::vertices(g)) close_down(g & ~faces::singleton(v), out);
    }
};

/**
 * A simplicial graph: a complex of dimension <= 1 containing every singleton,
 * with adjacency structure and a fixed global edge order (sorted pairs).
 * Edges are oriented tail -> head with tail < head.
 */
class SimplicialGraph {
public:
    SimplicialGraph() = default;

    SimplicialGraph(int n, std::vector<std::pair<int, int>> edges) {
        std::set<std::pair<int, int>> seen;
        std::vector<Face> gen;
        for (auto& [a, b] : edges) {
            if (a < 1 || b < 1 || a > n || b > n)
                throw std::invalid_argument("graph: edge endpoint out of range");
            if (a == b) throw std::invalid_argument("graph: loop edges are not allowed");
            if (a > b) std::swap(a, b);
            if (!seen.insert({a, b}).second)
                throw std::invalid_argument("graph: duplicate edge [" + std::to_string(a) + "," +
                                            std::to_string(b) + "]");
            gen.push_back(faces::pair(a, b));
        }
        cx_ = SimplicialComplex::with_all_vertices(n, gen);
        edges_.assign(seen.begin(), seen.end());
        build_adjacency();
    }

    /** Views a complex of dimension <= 1 as a graph. */
    explicit SimplicialGraph(const SimplicialComplex& cx) : cx_(cx) {
        if (cx.dim() > 1)
            throw std::invalid_argument("graph: complex has dimension > 1");
        if (!cx.has_all_vertices())
            throw std::invalid_argument("graph: every label 1..n must be a vertex");
        for (Face f : cx.faces_of_size(2)) {
            auto vs = faces::vertices(f);
            edges_.emplace_back(vs[0], vs[1]);
        }
        std::sort(edges_.begin(), edges_.end());
        build_adjacency();
    }

    const SimplicialComplex& complex() const { return cx_; }
    int vertex_count() const { return cx_.vertex_count(); }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    int valency(int v) const { return static_cast<int>(adj_[v].size()); }

    int edge_index(int a, int b) const {
        if (a > b) std::swap(a, b);
        auto it = std::lower_bound(edges_.begin(), edges_.end(), std::make_pair(a, b));
        if (it == edges_.end() || *it != std::make_pair(a, b))
            throw std::invalid_argument("graph: no edge [" + std::to_string(a) + "," +
                                        std::to_string(b) + "]");
        return static_cast<int>(it - edges_.begin());
    }
    bool has_edge(int a, int b) const {
        if (a > b) std::swap(a, b);
        return std::binary_search(edges_.begin(), edges_.end(), std::make_pair(a, b));
    }

    /** Indices of the edges at v, in global edge order. */
    std::vector<int> star_edges(int v) const {
        std::vector<int> out;
        for (int i = 0; i < edge_count(); ++i)
            if (edges_[i].first == v || edges_[i].second == v) out.push_back(i);
        return out;
    }

    bool is_connected() const {
        int n = vertex_count();
        if (n == 0) return false;
        std::vector<bool> seen(n + 1, false);
        std::deque<int> q{1};
        seen[1] = true;
        int count = 0;
        while (!q.empty()) {
            int v = q.front();
            q.pop_front();
            ++count;
            for (int w : adj_[v])
                if (!seen[w]) {
                    seen[w] = true;
                    q.push_back(w);
                }
        }
        return count == n;
    }

    friend bool operator==(const SimplicialGraph& a, const SimplicialGraph& b) {
        return a.cx_ == b.cx_;
    }

private:
    SimplicialComplex cx_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> adj_;

    void build_adjacency() {
        adj_.assign(vertex_count() + 1, {});
        for (auto [a, b] : edges_) {
            adj_[a].push_back(b);
            adj_[b].push_back(a);
        }
        for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
    }
};

// ---------------------------------------------------------------------------
// Named builders
// ---------------------------------------------------------------------------

namespace builders {

inline SimplicialGraph cycle(int k) {
    if (k < 3) throw std::invalid_argument("cycle: need at least 3 vertices");
    std::vector<std::pair<int, int>> e;
    for (int i = 1; i < k; ++i) e.emplace_back(i, i + 1);
    e.emplace_back(1, k);
    return SimplicialGraph(k, e);
}

inline SimplicialGraph path(int k) {
    if (k < 1) throw std::invalid_argument("path: need at least 1 vertex");
    std::vector<std::pair<int, int>> e;
    for (int i = 1; i < k; ++i) e.emplace_back(i, i + 1);
    return SimplicialGraph(k, e);
}

inline SimplicialGraph complete(int k) {
    if (k < 1) throw std::invalid_argument("complete: need at least 1 vertex");
    std::vector<std::pair<int, int>> e;
    for (int i = 1; i <= k; ++i)
        for (int j = i + 1; j <= k; ++j) e.emplace_back(i, j);
    return SimplicialGraph(k, e);
}

/** K_{3,3} on parts {1,2,3} and {4,5,6}. */
inline SimplicialGraph k33() {
    std::vector<std::pair<int, int>> e;
    for (int i = 1; i <= 3; ++i)
        for (int j = 4; j <= 6; ++j) e.emplace_back(i, j);
    return SimplicialGraph(6, e);
}

/** Petersen graph: outer 5-cycle 1..5, spokes, inner pentagram 6..10. */
inline SimplicialGraph petersen() {
    std::vector<std::pair<int, int>> e = {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 5},
                                          {1, 6}, {2, 7}, {3, 8}, {4, 9}, {5, 10},
                                          {6, 8}, {8, 10}, {7, 10}, {7, 9}, {6, 9}};
    return SimplicialGraph(10, e);
}

/** Heawood graph from LCF notation [5,-5]^7 on a 14-cycle. */
inline SimplicialGraph heawood() {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < 14; ++i) e.emplace_back(i + 1, (i + 1) % 14 + 1);
    for (int i = 0; i < 14; i += 2) e.emplace_back(i + 1, (i + 5) % 14 + 1);
    return SimplicialGraph(14, e);
}

/** Theta graph: vertices 1,2 joined by the paths 1-3-2, 1-4-2, 1-5-2. */
inline SimplicialGraph theta() {
    return SimplicialGraph(5, {{1, 3}, {2, 3}, {1, 4}, {2, 4}, {1, 5}, {2, 5}});
}

/** Dispatch for the CLI builder names: "cycle:k", "k33", ... */
inline SimplicialGraph by_name(const std::string& name) {
    auto colon = name.find(':');
    std::string head = name.substr(0, colon);
    int arg = 0;
    if (colon != std::string::npos) arg = std::stoi(name.substr(colon + 1));
    if (head == "cycle") return cycle(arg);
    if (head == "path") return path(arg);
    if (head == "complete") return complete(arg);
    if (head == "k33") return k33();
    if (head == "petersen") return petersen();
    if (head == "heawood") return heawood();
    if (head == "theta") return theta();
    throw std::invalid_argument("builder: unknown graph name \"" + name + "\"");
}

}  // namespace builders

// ---------------------------------------------------------------------------
// Combinatorial invariants
// ---------------------------------------------------------------------------

/** g = 1 - v + e for a connected graph. */
inline int genus(const SimplicialGraph& g) {
    if (!g.is_connected())
        throw std::domain_error("genus: graph is not connected");
    return 1 - g.vertex_count() + g.edge_count();
}

/** Length of the shortest cycle; nullopt for forests. */
inline std::optional<int> girth(const SimplicialGraph& g) {
    int best = -1;
    int n = g.vertex_count();
    for (int s = 1; s <= n; ++s) {
        // BFS from s; a non-tree edge closes a cycle through its endpoints.
        std::vector<int> dist(n + 1, -1), parent(n + 1, 0);
        std::deque<int> q{s};
        dist[s] = 0;
        while (!q.empty()) {
            int v = q.front();
            q.pop_front();
            for (int w : g.neighbors(v)) {
                if (dist[w] == -1) {
                    dist[w] = dist[v] + 1;
                    parent[w] = v;
                    q.push_back(w);
                } else if (w != parent[v]) {
                    int len = dist[v] + dist[w] + 1;
                    if (best == -1 || len < best) best = len;
                }
            }
        }
    }
    if (best == -1) return std::nullopt;
    return best;
}

namespace detail {

/** Connectivity of the subgraph induced on the vertex set `keep`. */
inline bool connected_on(const SimplicialGraph& g, Face keep) {
    auto vs = faces::vertices(keep);
    if (vs.empty()) return false;
    std::set<int> todo(vs.begin(), vs.end());
    std::deque<int> q{vs[0]};
    todo.erase(vs[0]);
    while (!q.empty()) {
        int v = q.front();
        q.pop_front();
        for (int w : g.neighbors(v))
            if (todo.count(w) && faces::contains(keep, w)) {
                todo.erase(w);
                q.push_back(w);
            }
    }
    return todo.empty();
}

}  // namespace detail

/** Connected, at least 3 vertices, and no cut vertex. */
inline bool is_two_connected(const SimplicialGraph& g) {
    int n = g.vertex_count();
    if (n < 3 || !g.is_connected()) return false;
    Face all = (n == kMaxVertices) ? ~Face{0} >> (32 - kMaxVertices) : (Face{1} << n) - 1;
    for (int v = 1; v <= n; ++v)
        if (!detail::connected_on(g, all & ~faces::singleton(v))) return false;
    return true;
}

struct ReduceResult {
    SimplicialGraph graph;
    // relabel[old vertex] = new label, or 0 if the vertex was smoothed away
    std::vector<int> relabel;
};

/**
 * Iterated smoothing: while some valency-2 vertex has non-adjacent neighbors,
 * remove the smallest such vertex and join its neighbors.  Vertices are
 * renumbered to a dense range at the end.
 */
inline ReduceResult reduce(const SimplicialGraph& g) {
    int n = g.vertex_count();
    std::set<std::pair<int, int>> edges(g.edges().begin(), g.edges().end());
    std::vector<bool> alive(n + 1, true);
    auto neighbors_of = [&](int v) {
        std::vector<int> nb;
        for (auto [a, b] : edges) {
            if (a == v) nb.push_back(b);
            if (b == v) nb.push_back(a);
        }
        return nb;
    };
    for (;;) {
        int pick = 0;
        std::pair<int, int> repl;
        for (int v = 1; v <= n && !pick; ++v) {
            if (!alive[v]) continue;
            auto nb = neighbors_of(v);
            if (nb.size() != 2) continue;
            int w1 = std::min(nb[0], nb[1]), w2 = std::max(nb[0], nb[1]);
            if (edges.count({w1, w2})) continue;  // triangle: not smoothable
            pick = v;
            repl = {w1, w2};
        }
        if (!pick) break;
        alive[pick] = false;
        auto nb = neighbors_of(pick);
        for (int w : nb) edges.erase({std::min(pick, w), std::max(pick, w)});
        edges.insert(repl);
    }
    std::vector<int> relabel(n + 1, 0);
    int next = 0;
    for (int v = 1; v <= n; ++v)
        if (alive[v]) relabel[v] = ++next;
    std::vector<std::pair<int, int>> new_edges;
    for (auto [a, b] : edges) new_edges.emplace_back(relabel[a], relabel[b]);
    return ReduceResult{SimplicialGraph(next, new_edges), relabel};
}

/**
 * s = max{|σ| : Δ|_σ is edgeless and Δ|_{σ^c} is connected}, by exhaustive
 * subset enumeration over independent sets.
 */
inline int max_independent_connected_complement(const SimplicialGraph& g) {
    if (!g.is_connected())
        throw std::domain_error("max_independent_connected_complement: graph is not connected");
    int n = g.vertex_count();
    Face all = (Face{1} << n) - 1;
    int best = 0;
    // enumerate independent sets by recursive extension with largest vertex last
    std::vector<Face> stack{0};
    while (!stack.empty()) {
        Face sigma = stack.back();
        stack.pop_back();
        if (sigma != 0) {
            int sz = faces::size(sigma);
            if (sz > best && detail::connected_on(g, all & ~sigma)) best = sz;
        }
        int top = sigma == 0 ? 0 : 32 - std::countl_zero(sigma);  // 1-based index of highest vertex
        for (int v = top + 1; v <= n; ++v) {
            bool independent = true;
            for (int w : g.neighbors(v))
                if (faces::contains(sigma, w)) {
                    independent = false;
                    break;
                }
            if (independent) stack.push_back(sigma | faces::singleton(v));
        }
    }
    return best;
}

/** A simple cycle: its vertices in traversal order, plus support masks. */
struct SimpleCycle {
    std::vector<int> vertices;   // v_0, v_1, ..., v_{k-1}; edges close cyclically
    Face vertex_mask = 0;
    std::uint64_t edge_mask = 0;  // bit i = global edge index i
};

/**
 * All simple cycles, each reported once, by rooted DFS: the root is the
 * smallest vertex of the cycle and the traversal direction is fixed by
 * requiring the second vertex to be smaller than the last.  Throws if more
 * than `cap` cycles exist.
 */
inline std::vector<SimpleCycle> simple_cycles(const SimplicialGraph& g,
                                              std::size_t cap = 1000000) {
    if (g.edge_count() > 64)
        throw std::domain_error("simple_cycles: more than 64 edges is unsupported");
    std::vector<SimpleCycle> out;
    int n = g.vertex_count();
    std::vector<int> path;
    std::vector<bool> on_path(n + 1, false);

    auto emit = [&](const std::vector<int>& cyc) {
        if (out.size() >= cap)
            throw std::domain_error("simple_cycles: cycle cap exceeded");
        SimpleCycle c;
        c.vertices = cyc;
        for (std::size_t i = 0; i < cyc.size(); ++i) {
            c.vertex_mask |= faces::singleton(cyc[i]);
            int a = cyc[i], b = cyc[(i + 1) % cyc.size()];
            c.edge_mask |= std::uint64_t{1} << g.edge_index(a, b);
        }
        out.push_back(std::move(c));
    };

    std::function<void(int, int)> dfs = [&](int root, int v) {
        for (int w : g.neighbors(v)) {
            if (w == root && path.size() >= 3) {
                if (path[1] < path.back()) emit(path);  // canonical direction
            } else if (w > root && !on_path[w]) {
                path.push_back(w);
                on_path[w] = true;
                dfs(root, w);
                on_path[w] = false;
                path.pop_back();
            }
        }
    };

    for (int root = 1; root <= n; ++root) {
        path = {root};
        on_path.assign(n + 1, false);
        on_path[root] = true;
        dfs(root, root);
    }
    return out;
}

/** BFS spanning tree from vertex 1; deterministic (neighbors ascending). */
struct SpanningTree {
    std::vector<int> parent;       // parent[v], 0 for the root and unreached
    std::vector<int> order;        // BFS discovery order
    std::vector<int> bfs_index;    // position of v in `order`
    std::vector<int> tree_edges;   // global edge indices
    std::vector<int> chord_edges;  // global edge indices, ascending
};

inline SpanningTree bfs_tree(const SimplicialGraph& g) {
    if (!g.is_connected())
        throw std::domain_error("bfs_tree: graph is not connected");
    int n = g.vertex_count();
    SpanningTree t;
    t.parent.assign(n + 1, 0);
    t.bfs_index.assign(n + 1, -1);
    std::vector<bool> seen(n + 1, false);
    std::deque<int> q{1};
    seen[1] = true;
    std::set<int> tree;
    while (!q.empty()) {
        int v = q.front();
        q.pop_front();
        t.bfs_index[v] = static_cast<int>(t.order.size());
        t.order.push_back(v);
        for (int w : g.neighbors(v))
            if (!seen[w]) {
                seen[w] = true;
                t.parent[w] = v;
                tree.insert(g.edge_index(v, w));
                q.push_back(w);
            }
    }
    for (int i = 0; i < g.edge_count(); ++i)
        (tree.count(i) ? t.tree_edges : t.chord_edges).push_back(i);
    return t;
}

/**
 * Fundamental cycle basis: one signed cycle per chord, as an edge-coefficient
 * vector.  The chord gets coefficient +1 in its global orientation
 * (tail < head); the tree path closes the cycle.
 */
struct FundamentalCycles {
    SpanningTree tree;
    std::vector<Vec<Rational>> cycles;  // length = edge_count each
};

inline FundamentalCycles fundamental_cycles(const SimplicialGraph& g) {
    FundamentalCycles fc;
    fc.tree = bfs_tree(g);
    int e = g.edge_count();
    auto add_path = [&](Vec<Rational>& c, int from, int to, const Rational& sgn) {
        // walk `from` up to the root, recording depth; then lift both to LCA
        auto depth = [&](int v) {
            int d = 0;
            while (fc.tree.parent[v]) {
                v = fc.tree.parent[v];
                ++d;
            }
            return d;
        };
        int dv = depth(from), dw = depth(to);
        int v = from, w = to;
        auto step = [&](int x, const Rational& s) {
            int p = fc.tree.parent[x];
            int idx = g.edge_index(x, p);
            // traversing x -> p adds the edge with +1 if x is the tail (x < p)
            c[idx] += (x < p) ? s : -s;
            return p;
        };
        while (dv > dw) { v = step(v, sgn); --dv; }
        while (dw > dv) { w = step(w, -sgn); --dw; }
        while (v != w) { v = step(v, sgn); w = step(w, -sgn); }
    };
    for (int chord : fc.tree.chord_edges) {
        auto [a, b] = g.edges()[chord];
        Vec<Rational> c(e);
        c[chord] = Rational(1);  // oriented a -> b with a < b
        add_path(c, b, a, Rational(1));  // close up b -> ... -> a
        fc.cycles.push_back(std::move(c));
    }
    return fc;
}

/** Signed edge-coefficient vector of a simple cycle (traversal orientation). */
inline Vec<Rational> cycle_vector(const SimplicialGraph& g, const SimpleCycle& c) {
    Vec<Rational> v(g.edge_count());
    for (std::size_t i = 0; i < c.vertices.size(); ++i) {
        int a = c.vertices[i], b = c.vertices[(i + 1) % c.vertices.size()];
        v[g.edge_index(a, b)] = (a < b) ? Rational(1) : Rational(-1);
    }
    return v;
}

/** The boundary of an edge-coefficient chain; zero iff the chain is a cycle. */
template <FieldScalar F>
Vec<F> chain_boundary(const SimplicialGraph& g, const Vec<F>& chain) {
    Vec<F> b(g.vertex_count());
    for (int i = 0; i < g.edge_count(); ++i) {
        auto [t, h] = g.edges()[i];
        b[h - 1] += chain[i];
        b[t - 1] -= chain[i];
    }
    return b;
}

}  // namespace sqfm

#endif  // SQFM_SIMPLICIAL_HPP
