#include "loopfloer/algebra.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace loopfloer {

namespace {

// Nonzero products of two non-idempotent basis elements.
Alg rho_product(Alg a, Alg b) {
    if (a == Alg::Rho1 && b == Alg::Rho2) return Alg::Rho12;
    if (a == Alg::Rho2 && b == Alg::Rho3) return Alg::Rho23;
    if (a == Alg::Rho1 && b == Alg::Rho23) return Alg::Rho123;
    if (a == Alg::Rho12 && b == Alg::Rho3) return Alg::Rho123;
    return Alg::Zero;
}

} // namespace

bool is_idempotent(Alg a) { return a == Alg::Iota0 || a == Alg::Iota1; }

Alg idempotent_of(Idem i) { return i == Idem::Bullet ? Alg::Iota0 : Alg::Iota1; }

Idem left_idem(Alg a) {
    switch (a) {
    case Alg::Iota0: case Alg::Rho1: case Alg::Rho3: case Alg::Rho12: case Alg::Rho123:
        return Idem::Bullet;
    case Alg::Iota1: case Alg::Rho2: case Alg::Rho23:
        return Idem::Circle;
    case Alg::Zero: break;
    }
    throw std::invalid_argument("zero has no idempotent");
}

Idem right_idem(Alg a) {
    switch (a) {
    case Alg::Iota0: case Alg::Rho2: case Alg::Rho12:
        return Idem::Bullet;
    case Alg::Iota1: case Alg::Rho1: case Alg::Rho3: case Alg::Rho23: case Alg::Rho123:
        return Idem::Circle;
    case Alg::Zero: break;
    }
    throw std::invalid_argument("zero has no idempotent");
}

int grading(Alg a) {
    switch (a) {
    case Alg::Rho1: case Alg::Rho3: case Alg::Iota0: case Alg::Iota1:
        return 0;
    case Alg::Rho2: case Alg::Rho12: case Alg::Rho23: case Alg::Rho123:
        return 1;
    case Alg::Zero: break;
    }
    throw std::invalid_argument("zero has no grading");
}

Alg multiply(Alg a, Alg b) {
    if (a == Alg::Zero || b == Alg::Zero) return Alg::Zero;
    if (right_idem(a) != left_idem(b)) return Alg::Zero;
    if (is_idempotent(a)) return b;
    if (is_idempotent(b)) return a;
    return rho_product(a, b);
}

std::string to_string(Alg a) {
    switch (a) {
    case Alg::Zero: return "0";
    case Alg::Iota0: return "iota0";
    case Alg::Iota1: return "iota1";
    case Alg::Rho1: return "rho1";
    case Alg::Rho2: return "rho2";
    case Alg::Rho3: return "rho3";
    case Alg::Rho12: return "rho12";
    case Alg::Rho23: return "rho23";
    case Alg::Rho123: return "rho123";
    }
    return "?";
}

const std::array<Alg, 8>& algebra_basis() {
    static const std::array<Alg, 8> basis{Alg::Iota0, Alg::Iota1, Alg::Rho1, Alg::Rho2,
                                          Alg::Rho3, Alg::Rho12, Alg::Rho23, Alg::Rho123};
    return basis;
}

int DecoratedGraph::add_vertex(Idem idem) {
    vertices_.push_back(Vertex{idem, std::nullopt});
    return static_cast<int>(vertices_.size()) - 1;
}

void DecoratedGraph::add_edge(int source, int target, Alg label) {
    edges_.push_back(Edge{source, target, label});
}

void DecoratedGraph::toggle_edge(int source, int target, Alg label) {
    Edge e{source, target, label};
    auto it = std::find(edges_.begin(), edges_.end(), e);
    if (it != edges_.end()) {
        edges_.erase(it);
    } else {
        edges_.push_back(e);
    }
}

void DecoratedGraph::validate() const {
    const int n = vertex_count();
    for (const Edge& e : edges_) {
        if (e.source < 0 || e.source >= n || e.target < 0 || e.target >= n) {
            throw std::invalid_argument("edge endpoint out of range");
        }
        if (e.label == Alg::Zero) throw std::invalid_argument("zero edge label");
        if (left_idem(e.label) != vertices_[e.source].idem ||
            right_idem(e.label) != vertices_[e.target].idem) {
            throw std::invalid_argument("edge label " + to_string(e.label) +
                                        " incompatible with endpoint idempotents");
        }
    }
}

bool DecoratedGraph::has_identity_edges() const {
    return std::any_of(edges_.begin(), edges_.end(),
                       [](const Edge& e) { return is_idempotent(e.label); });
}

bool DecoratedGraph::has_directed_cycle() const {
    const int n = vertex_count();
    std::vector<int> indegree(n, 0);
    std::vector<std::vector<int>> out(n);
    for (const Edge& e : edges_) {
        out[e.source].push_back(e.target);
        ++indegree[e.target];
    }
    std::vector<int> stack;
    for (int v = 0; v < n; ++v) {
        if (indegree[v] == 0) stack.push_back(v);
    }
    int seen = 0;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        ++seen;
        for (int w : out[v]) {
            if (--indegree[w] == 0) stack.push_back(w);
        }
    }
    return seen != n;
}

int DecoratedGraph::longest_path() const {
    const int n = vertex_count();
    std::vector<int> indegree(n, 0);
    std::vector<std::vector<int>> out(n);
    for (const Edge& e : edges_) {
        out[e.source].push_back(e.target);
        ++indegree[e.target];
    }
    std::vector<int> order;
    for (int v = 0; v < n; ++v) {
        if (indegree[v] == 0) order.push_back(v);
    }
    for (std::size_t i = 0; i < order.size(); ++i) {
        for (int w : out[order[i]]) {
            if (--indegree[w] == 0) order.push_back(w);
        }
    }
    if (static_cast<int>(order.size()) != n) {
        throw std::logic_error("longest_path called on a graph with a directed cycle");
    }
    std::vector<int> depth(n, 0);
    int best = 0;
    for (int v : order) {
        for (int w : out[v]) {
            depth[w] = std::max(depth[w], depth[v] + 1);
            best = std::max(best, depth[w]);
        }
    }
    return best;
}

void DecoratedGraph::assign_gradings() {
    const int n = vertex_count();
    std::vector<std::vector<std::pair<int, int>>> adj(n);
    for (const Edge& e : edges_) {
        int flip = (1 + grading(e.label)) % 2;
        adj[e.source].push_back({e.target, flip});
        adj[e.target].push_back({e.source, flip});
    }
    std::vector<int> gr(n, -1);
    for (int start = 0; start < n; ++start) {
        if (gr[start] >= 0) continue;
        gr[start] = 0;
        std::queue<int> q;
        q.push(start);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (auto [w, flip] : adj[v]) {
                int expect = gr[v] ^ flip;
                if (gr[w] < 0) {
                    gr[w] = expect;
                    q.push(w);
                } else if (gr[w] != expect) {
                    throw std::logic_error("inconsistent grading on decorated graph");
                }
            }
        }
    }
    for (int v = 0; v < n; ++v) vertices_[v].grading = gr[v];
}

std::string DecoratedGraph::canonical_form() const {
    // Colour refinement: a vertex colour is refined by the multiset of
    // (direction, label, neighbour colour) triples until it stabilises.
    const int n = vertex_count();
    std::vector<std::string> colour(n);
    for (int v = 0; v < n; ++v) colour[v] = vertices_[v].idem == Idem::Bullet ? "b" : "c";
    for (int round = 0; round <= n; ++round) {
        std::vector<std::vector<std::string>> parts(n);
        for (const Edge& e : edges_) {
            parts[e.source].push_back(">" + to_string(e.label) + ":" + colour[e.target]);
            parts[e.target].push_back("<" + to_string(e.label) + ":" + colour[e.source]);
        }
        std::vector<std::string> next(n);
        for (int v = 0; v < n; ++v) {
            std::sort(parts[v].begin(), parts[v].end());
            std::string s = colour[v] + "(";
            for (const auto& p : parts[v]) s += p + ",";
            next[v] = s + ")";
        }
        std::vector<std::string> sorted = next;
        std::sort(sorted.begin(), sorted.end());
        sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
        for (int v = 0; v < n; ++v) {
            next[v] = std::to_string(
                std::lower_bound(sorted.begin(), sorted.end(), next[v]) - sorted.begin());
        }
        std::vector<std::string> old_sorted = colour;
        std::sort(old_sorted.begin(), old_sorted.end());
        old_sorted.erase(std::unique(old_sorted.begin(), old_sorted.end()), old_sorted.end());
        bool stable = old_sorted.size() == sorted.size() && round > 0;
        colour = next;
        if (stable) break;
    }
    std::vector<std::string> vs(colour.begin(), colour.end());
    for (int v = 0; v < n; ++v) vs[v] += vertices_[v].idem == Idem::Bullet ? "b" : "c";
    std::sort(vs.begin(), vs.end());
    std::vector<std::string> es;
    for (const Edge& e : edges_) {
        es.push_back(colour[e.source] + "-" + to_string(e.label) + "->" + colour[e.target]);
    }
    std::sort(es.begin(), es.end());
    std::ostringstream os;
    os << "V";
    for (const auto& v : vs) os << " " << v;
    os << " E";
    for (const auto& e : es) os << " " << e;
    return os.str();
}

DecoratedGraph reduce_graph(const DecoratedGraph& g, bool reverse_order) {
    const int n = g.vertex_count();
    std::vector<bool> alive(n, true);
    std::map<std::tuple<int, int, Alg>, int> edges;
    for (const Edge& e : g.edges()) {
        auto& c = edges[{e.source, e.target, e.label}];
        c ^= 1;
    }
    auto prune = [&] {
        for (auto it = edges.begin(); it != edges.end();) {
            it = it->second == 0 ? edges.erase(it) : std::next(it);
        }
    };
    prune();
    while (true) {
        std::optional<std::tuple<int, int, Alg>> pick;
        auto consider = [&](const std::tuple<int, int, Alg>& key) {
            auto [s, t, label] = key;
            return is_idempotent(label) && s != t && alive[s] && alive[t];
        };
        if (reverse_order) {
            for (auto it = edges.rbegin(); it != edges.rend(); ++it) {
                if (consider(it->first)) { pick = it->first; break; }
            }
        } else {
            for (const auto& [key, c] : edges) {
                if (consider(key)) { pick = key; break; }
            }
        }
        if (!pick) break;
        auto [y, x, unused] = *pick;
        std::vector<std::pair<int, Alg>> into_x;
        std::vector<std::pair<int, Alg>> out_of_y;
        for (const auto& [key, c] : edges) {
            auto [s, t, label] = key;
            if (t == x && s != y && s != x) into_x.push_back({s, label});
            if (s == y && t != x && t != y) out_of_y.push_back({t, label});
        }
        alive[x] = false;
        alive[y] = false;
        for (auto it = edges.begin(); it != edges.end();) {
            auto [s, t, label] = it->first;
            it = (!alive[s] || !alive[t]) ? edges.erase(it) : std::next(it);
        }
        for (const auto& [u, a] : into_x) {
            for (const auto& [v, b] : out_of_y) {
                Alg ab = multiply(a, b);
                if (ab == Alg::Zero) continue;
                edges[{u, v, ab}] ^= 1;
            }
        }
        prune();
    }
    DecoratedGraph out;
    std::vector<int> index(n, -1);
    for (int v = 0; v < n; ++v) {
        if (alive[v]) {
            index[v] = out.add_vertex(g.vertices()[v].idem);
            out.mutable_vertices()[index[v]].grading = g.vertices()[v].grading;
        }
    }
    for (const auto& [key, c] : edges) {
        auto [s, t, label] = key;
        out.add_edge(index[s], index[t], label);
    }
    return out;
}

int ChainComplexF2::add_generator(int grading, int component) {
    generators.push_back(ComplexGenerator{grading & 1, component});
    return static_cast<int>(generators.size()) - 1;
}

void ChainComplexF2::toggle(int source, int target) {
    differential.push_back({source, target});
}

int ChainComplexF2::component_count() const {
    int m = declared_components;
    for (const auto& g : generators) m = std::max(m, g.component + 1);
    return m;
}

namespace {

// Differential with toggled duplicates cancelled, as adjacency lists.
std::vector<std::vector<int>> reduced_differential(const ChainComplexF2& c) {
    std::vector<std::pair<int, int>> d = c.differential;
    std::sort(d.begin(), d.end());
    std::vector<std::vector<int>> out(c.generators.size());
    for (std::size_t i = 0; i < d.size();) {
        std::size_t j = i;
        while (j < d.size() && d[j] == d[i]) ++j;
        if ((j - i) % 2 == 1) out[d[i].first].push_back(d[i].second);
        i = j;
    }
    return out;
}

} // namespace

void ChainComplexF2::check() const {
    auto out = reduced_differential(*this);
    const int n = static_cast<int>(generators.size());
    std::vector<char> seen(n, 0);
    std::vector<char> parity(n, 0);
    for (int x = 0; x < n; ++x) {
        for (int y : out[x]) {
            if (generators[x].grading == generators[y].grading) {
                throw std::logic_error("differential preserves grading");
            }
            if (generators[x].component != generators[y].component) {
                throw std::logic_error("differential crosses components");
            }
        }
        std::vector<int> touched;
        for (int y : out[x]) {
            for (int z : out[y]) {
                if (!seen[z]) {
                    seen[z] = 1;
                    touched.push_back(z);
                }
                parity[z] ^= 1;
            }
        }
        for (int z : touched) {
            if (parity[z]) throw std::logic_error("differential does not square to zero");
            seen[z] = 0;
        }
    }
}

int rank_f2(std::vector<std::vector<std::uint64_t>> rows) {
    int rank = 0;
    if (rows.empty()) return 0;
    const std::size_t words = rows.front().size();
    std::size_t next = 0;
    for (std::size_t w = 0; w < words && next < rows.size(); ++w) {
        for (int bit = 0; bit < 64 && next < rows.size(); ++bit) {
            const std::uint64_t mask = std::uint64_t{1} << bit;
            std::size_t pivot = next;
            while (pivot < rows.size() && !(rows[pivot][w] & mask)) ++pivot;
            if (pivot == rows.size()) continue;
            std::swap(rows[pivot], rows[next]);
            for (std::size_t r = next + 1; r < rows.size(); ++r) {
                if (rows[r][w] & mask) {
                    for (std::size_t k = w; k < words; ++k) rows[r][k] ^= rows[next][k];
                }
            }
            ++next;
            ++rank;
        }
    }
    return rank;
}

Homology homology(const ChainComplexF2& c) {
    auto out = reduced_differential(c);
    const int n = static_cast<int>(c.generators.size());
    const int m = c.component_count();
    std::vector<std::array<std::vector<int>, 2>> members(m);
    std::vector<int> local(n, 0);
    for (int x = 0; x < n; ++x) {
        auto& bucket = members[c.generators[x].component][c.generators[x].grading];
        local[x] = static_cast<int>(bucket.size());
        bucket.push_back(x);
    }
    Homology h;
    h.components.resize(m);
    for (int comp = 0; comp < m; ++comp) {
        int ranks[2] = {0, 0};
        for (int g = 0; g < 2; ++g) {
            const auto& src = members[comp][g];
            const auto& dst = members[comp][1 - g];
            if (src.empty() || dst.empty()) continue;
            const std::size_t words = (dst.size() + 63) / 64;
            std::vector<std::vector<std::uint64_t>> rows;
            rows.reserve(src.size());
            for (int x : src) {
                std::vector<std::uint64_t> row(words, 0);
                bool any = false;
                for (int y : out[x]) {
                    int j = local[y];
                    row[j / 64] ^= std::uint64_t{1} << (j % 64);
                    any = true;
                }
                if (any) rows.push_back(std::move(row));
            }
            ranks[g] = rank_f2(std::move(rows));
        }
        ComponentHomology& ch = h.components[comp];
        for (int g = 0; g < 2; ++g) {
            ch.dims_by_grading[g] =
                static_cast<int>(members[comp][g].size()) - ranks[0] - ranks[1];
        }
        ch.dim = ch.dims_by_grading[0] + ch.dims_by_grading[1];
        ch.chi = ch.dims_by_grading[0] - ch.dims_by_grading[1];
        h.dim += ch.dim;
        h.dims_by_grading[0] += ch.dims_by_grading[0];
        h.dims_by_grading[1] += ch.dims_by_grading[1];
    }
    return h;
}

bool is_lspace_homology(const Homology& h) {
    if (h.components.empty()) return false;
    return std::all_of(h.components.begin(), h.components.end(), [](const ComponentHomology& c) {
        return c.dim != 0 && c.dim == std::abs(c.chi);
    });
}

bool is_lspace_complex(const ChainComplexF2& c) { return is_lspace_homology(homology(c)); }

} // namespace loopfloer
