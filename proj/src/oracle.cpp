#include "loopfloer/oracle.hpp"

#include "loopfloer/errors.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace loopfloer {

namespace {

std::vector<Alg> relabel(Alg label) {
    switch (label) {
    case Alg::Rho1: return {Alg::Rho3};
    case Alg::Rho2: return {Alg::Rho2};
    case Alg::Rho3: return {Alg::Rho1};
    case Alg::Rho12: return {Alg::Rho3, Alg::Rho2};
    case Alg::Rho23: return {Alg::Rho2, Alg::Rho1};
    case Alg::Rho123: return {Alg::Rho3, Alg::Rho2, Alg::Rho1};
    default: break;
    }
    throw std::invalid_argument("cannot relabel " + to_string(label));
}

struct Trie {
    struct Node {
        std::map<Alg, int> child;
        std::vector<int> targets;
    };
    std::vector<Node> nodes{Node{}};

    void insert(const std::vector<Alg>& seq, int target) {
        int cur = 0;
        for (Alg a : seq) {
            auto it = nodes[cur].child.find(a);
            if (it == nodes[cur].child.end()) {
                nodes.push_back(Node{});
                int id = static_cast<int>(nodes.size()) - 1;
                nodes[cur].child[a] = id;
                cur = id;
            } else {
                cur = it->second;
            }
        }
        nodes[cur].targets.push_back(target);
    }
};

} // namespace

TypeAStructure to_type_a(const DecoratedGraph& g, int max_len) {
    if (g.has_identity_edges()) throw std::invalid_argument("to_type_a needs a reduced graph");
    DecoratedGraph graded = g;
    graded.assign_gradings();
    TypeAStructure a;
    const int n = g.vertex_count();
    for (int v = 0; v < n; ++v) {
        const Vertex& vx = graded.vertices()[v];
        int shift = vx.idem == Idem::Circle ? 1 : 0;
        a.generators.push_back(AGenerator{vx.idem, (*vx.grading + shift) & 1});
    }
    std::vector<std::vector<const Edge*>> out(n);
    for (const Edge& e : g.edges()) out[e.source].push_back(&e);

    struct Frame {
        int vertex;
        std::vector<Alg> seq;
    };
    for (int start = 0; start < n; ++start) {
        std::vector<Frame> stack{{start, {}}};
        while (!stack.empty()) {
            Frame f = std::move(stack.back());
            stack.pop_back();
            for (const Edge* e : out[f.vertex]) {
                std::vector<Alg> piece = relabel(e->label);
                std::vector<Alg> seq = f.seq;
                if (seq.empty()) {
                    seq = piece;
                } else {
                    Alg joined = multiply(seq.back(), piece.front());
                    if (joined == Alg::Zero) continue;
                    seq.back() = joined;
                    seq.insert(seq.end(), piece.begin() + 1, piece.end());
                }
                if (static_cast<int>(seq.size()) > max_len) continue;
                a.operations.push_back(AOperation{start, seq, e->target});
                stack.push_back(Frame{e->target, std::move(seq)});
            }
        }
    }
    for (const AOperation& op : a.operations) {
        int expect = a.generators[op.source].grading + static_cast<int>(op.inputs.size()) + 1;
        for (Alg x : op.inputs) expect += grading(x);
        if ((expect & 1) != a.generators[op.target].grading) {
            throw std::logic_error("type A grading rule fails");
        }
    }
    return a;
}

namespace {

// Edge indices of some directed cycle, or empty if none.
std::vector<int> find_cycle(const DecoratedGraph& g) {
    const int n = g.vertex_count();
    std::vector<std::vector<int>> out(n);
    for (int e = 0; e < static_cast<int>(g.edges().size()); ++e) out[g.edges()[e].source].push_back(e);
    std::vector<int> colour(n, 0);
    std::vector<int> via(n, -1);
    for (int root = 0; root < n; ++root) {
        if (colour[root]) continue;
        std::vector<std::pair<int, std::size_t>> stack{{root, 0}};
        colour[root] = 1;
        while (!stack.empty()) {
            auto& [v, idx] = stack.back();
            if (idx == out[v].size()) {
                colour[v] = 2;
                stack.pop_back();
                continue;
            }
            int e = out[v][idx++];
            int w = g.edges()[e].target;
            if (colour[w] == 0) {
                colour[w] = 1;
                via[w] = e;
                stack.push_back({w, 0});
            } else if (colour[w] == 1) {
                std::vector<int> cycle{e};
                int cur = v;
                while (cur != w) {
                    cycle.push_back(via[cur]);
                    cur = g.edges()[via[cur]].source;
                }
                return cycle;
            }
        }
    }
    return {};
}

} // namespace

DecoratedGraph make_bounded(const DecoratedGraph& g, int choice) {
    DecoratedGraph cur = g;
    bool has_bullet = false;
    for (const Vertex& v : g.vertices()) has_bullet = has_bullet || v.idem == Idem::Bullet;
    while (true) {
        std::vector<int> cycle = find_cycle(cur);
        if (cycle.empty()) return cur;
        std::vector<int> eligible;
        for (int e : cycle) {
            Alg l = cur.edges()[e].label;
            if (l == Alg::Rho12 || l == Alg::Rho123) eligible.push_back(e);
        }
        if (eligible.empty() && !has_bullet) {
            for (int e : cycle) {
                if (cur.edges()[e].label == Alg::Rho23) eligible.push_back(e);
            }
        }
        if (eligible.empty()) throw std::logic_error("cannot bound: cycle without splittable edge");
        int pick = choice == 0 ? eligible.front() : eligible.back();
        Edge e = cur.edges()[pick];
        DecoratedGraph next;
        for (const Vertex& v : cur.vertices()) next.add_vertex(v.idem);
        for (int i = 0; i < static_cast<int>(cur.edges().size()); ++i) {
            if (i != pick) {
                const Edge& x = cur.edges()[i];
                next.add_edge(x.source, x.target, x.label);
            }
        }
        if (e.label == Alg::Rho23) {
            int n1 = next.add_vertex(Idem::Bullet);
            int n2 = next.add_vertex(Idem::Bullet);
            next.add_edge(e.source, n1, Alg::Rho2);
            next.add_edge(n2, n1, Alg::Iota0);
            next.add_edge(n2, e.target, Alg::Rho3);
        } else {
            int n1 = next.add_vertex(Idem::Circle);
            int n2 = next.add_vertex(Idem::Circle);
            next.add_edge(e.source, n1, Alg::Rho1);
            next.add_edge(n2, n1, Alg::Iota1);
            next.add_edge(n2, e.target, e.label == Alg::Rho12 ? Alg::Rho2 : Alg::Rho23);
        }
        cur = std::move(next);
    }
}

void box_tensor_into(const TypeAStructure& a, const DecoratedGraph& d, int component,
                     ChainComplexF2& out) {
    DecoratedGraph graded = d;
    graded.assign_gradings();
    out.declared_components = std::max(out.declared_components, component + 1);
    const int na = static_cast<int>(a.generators.size());
    const int nd = d.vertex_count();
    std::vector<int> index(static_cast<std::size_t>(na) * nd, -1);
    for (int x = 0; x < na; ++x) {
        for (int y = 0; y < nd; ++y) {
            if (a.generators[x].idem != d.vertices()[y].idem) continue;
            int gr = a.generators[x].grading + *graded.vertices()[y].grading;
            index[static_cast<std::size_t>(x) * nd + y] = out.add_generator(gr, component);
        }
    }
    std::vector<Trie> tries(na);
    for (const AOperation& op : a.operations) tries[op.source].insert(op.inputs, op.target);
    std::vector<std::vector<const Edge*>> edges_out(nd);
    for (const Edge& e : d.edges()) edges_out[e.source].push_back(&e);

    for (int x = 0; x < na; ++x) {
        const Trie& trie = tries[x];
        for (int y = 0; y < nd; ++y) {
            int src = index[static_cast<std::size_t>(x) * nd + y];
            if (src < 0) continue;
            for (const Edge* e : edges_out[y]) {
                if (is_idempotent(e->label)) {
                    out.toggle(src, index[static_cast<std::size_t>(x) * nd + e->target]);
                }
            }
            std::vector<std::pair<int, int>> stack{{y, 0}};
            while (!stack.empty()) {
                auto [v, node] = stack.back();
                stack.pop_back();
                for (const Edge* e : edges_out[v]) {
                    if (is_idempotent(e->label)) continue;
                    auto it = trie.nodes[node].child.find(e->label);
                    if (it == trie.nodes[node].child.end()) continue;
                    for (int t : trie.nodes[it->second].targets) {
                        int dst = index[static_cast<std::size_t>(t) * nd + e->target];
                        if (dst < 0) throw std::logic_error("box tensor idempotent mismatch");
                        out.toggle(src, dst);
                    }
                    stack.push_back({e->target, it->second});
                }
            }
        }
    }
}

ChainComplexF2 box_tensor(const TypeAStructure& a, const DecoratedGraph& d) {
    ChainComplexF2 c;
    box_tensor_into(a, d, 0, c);
    c.check();
    return c;
}

ChainComplexF2 pair_complex(const std::vector<Loop>& loops1, const std::vector<Loop>& loops2,
                            int bounding_choice) {
    ChainComplexF2 c;
    int component = 0;
    for (const Loop& l2 : loops2) {
        DecoratedGraph d = make_bounded(l2.graph(), bounding_choice);
        int max_len = d.longest_path();
        for (const Loop& l1 : loops1) {
            TypeAStructure a = to_type_a(l1.graph(), max_len);
            box_tensor_into(a, d, component++, c);
        }
    }
    c.check();
    return c;
}

FillingResult pair_result(const std::vector<Loop>& loops1, const std::vector<Loop>& loops2) {
    Homology h = homology(pair_complex(loops1, loops2));
    std::vector<LoopFilling> per;
    for (const ComponentHomology& ch : h.components) per.push_back(LoopFilling{ch.dim, ch.chi});
    return make_filling_result(std::move(per));
}

bool pair_is_lspace(const std::vector<Loop>& loops1, const std::vector<Loop>& loops2) {
    return pair_result(loops1, loops2).is_lspace;
}

FillingResult fill_oracle(const std::vector<Loop>& loops, const Slope& s) {
    static const Loop solid_torus = Loop::parse("d0");
    std::vector<LoopFilling> per;
    for (const Loop& l : loops) {
        FillingResult r = pair_result({solid_torus}, {reparametrize(l, s)});
        per.push_back(r.per_loop.front());
    }
    return make_filling_result(std::move(per));
}

} // namespace loopfloer
