#include "layerforge/exact.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <map>
#include <numeric>

#include "layerforge/methods.hpp"
#include "layerforge/network_simplex.hpp"

namespace layerforge {

namespace {

using Clock = std::chrono::steady_clock;

// Larger than any reachable objective; sums of a few stay far from overflow.
constexpr std::int64_t kInf = 1'000'000'000'000'000LL;
constexpr std::int64_t kNoIncumbent = std::numeric_limits<std::int64_t>::max() / 4;

std::size_t at(NodeId v) { return static_cast<std::size_t>(v); }

// All edges between two nodes u and v, priced by d = L(v) - L(u).
struct Bundle {
    std::int64_t forward = 0;   // weight of u -> v edges
    std::int64_t backward = 0;  // weight of v -> u edges

    std::int64_t cost(std::int64_t d, std::int64_t wl, std::int64_t wr) const {
        if (d == 0) return kInf;
        const std::int64_t len = wl * (forward + backward) * (d < 0 ? -d : d);
        return len + wr * (d > 0 ? backward : forward);
    }
};

// Cost as a function of a span delta in [-reach, reach]; infinite outside.
struct SpanTable {
    std::int64_t reach = 0;
    std::vector<std::int64_t> cost;

    explicit SpanTable(std::int64_t r = 0) : reach(r), cost(static_cast<std::size_t>(2 * r + 1), kInf) {}

    std::int64_t at(std::int64_t delta) const {
        if (delta < -reach || delta > reach) return kInf;
        return cost[static_cast<std::size_t>(delta + reach)];
    }
    std::int64_t& slot(std::int64_t delta) { return cost[static_cast<std::size_t>(delta + reach)]; }
    std::int64_t min() const { return *std::min_element(cost.begin(), cost.end()); }
};

struct Pendant {
    NodeId node;
    NodeId anchor;
    Layer offset;  // L(node) = L(anchor) + offset
};

struct PairCost {
    int a;
    int b;
    SpanTable table;  // priced by pos[b] - pos[a]
    std::int64_t min = 0;
};

// Depth-first branch and bound over node positions in [lo, hi].
class PositionSearch {
public:
    PositionSearch(int node_count, std::vector<PairCost> edges, Layer lo, Layer hi, Clock::time_point deadline)
        : k_(node_count),
          edges_(std::move(edges)),
          lo_(lo),
          hi_(hi),
          deadline_(deadline),
          adj_(static_cast<std::size_t>(k_)),
          acc_(static_cast<std::size_t>(k_), std::vector<std::int64_t>(static_cast<std::size_t>(hi - lo + 1), 0)),
          acc_min_(static_cast<std::size_t>(k_), 0),
          assigned_(static_cast<std::size_t>(k_), false),
          pos_(static_cast<std::size_t>(k_), 0) {
        for (std::size_t e = 0; e < edges_.size(); ++e) {
            adj_[static_cast<std::size_t>(edges_[e].a)].push_back(e);
            adj_[static_cast<std::size_t>(edges_[e].b)].push_back(e);
            free_edge_min_ += edges_[e].min;
        }
        order_ = branching_order();
    }

    bool trivially_infeasible() const {
        return std::any_of(edges_.begin(), edges_.end(), [](const PairCost& e) { return e.min >= kInf; });
    }

    // Finds an assignment cheaper than `threshold`; returns whether one was found.
    bool run(std::int64_t threshold) {
        best_ = threshold;
        dfs(0);
        return found_;
    }

    bool aborted() const { return aborted_; }
    long nodes() const { return nodes_; }
    std::int64_t best() const { return best_; }
    const std::vector<Layer>& best_positions() const { return best_pos_; }

private:
    // Highest degree first, then always the node with most placed neighbours.
    std::vector<int> branching_order() const {
        std::vector<int> order;
        std::vector<bool> taken(static_cast<std::size_t>(k_), false);
        std::vector<int> placed_nbrs(static_cast<std::size_t>(k_), 0);
        for (int step = 0; step < k_; ++step) {
            int pick = -1;
            for (int v = 0; v < k_; ++v) {
                if (taken[static_cast<std::size_t>(v)]) continue;
                if (pick < 0) {
                    pick = v;
                    continue;
                }
                const auto key = [&](int u) {
                    return std::make_pair(placed_nbrs[static_cast<std::size_t>(u)],
                                          adj_[static_cast<std::size_t>(u)].size());
                };
                if (key(v) > key(pick)) pick = v;
            }
            taken[static_cast<std::size_t>(pick)] = true;
            order.push_back(pick);
            for (std::size_t e : adj_[static_cast<std::size_t>(pick)]) {
                const int w = edges_[e].a == pick ? edges_[e].b : edges_[e].a;
                ++placed_nbrs[static_cast<std::size_t>(w)];
            }
        }
        return order;
    }

    std::int64_t edge_cost(const PairCost& e, int placed, Layer placed_at, Layer other_at) const {
        return e.a == placed ? e.table.at(other_at - placed_at) : e.table.at(placed_at - other_at);
    }

    void dfs(std::size_t depth) {
        if ((++nodes_ & 1023) == 0 && Clock::now() > deadline_) aborted_ = true;
        if (aborted_) return;
        if (depth == order_.size()) {
            if (cost_ < best_) {
                best_ = cost_;
                best_pos_ = pos_;
                found_ = true;
            }
            return;
        }
        const int u = order_[depth];
        const auto uu = static_cast<std::size_t>(u);
        const auto& row = acc_[uu];

        std::vector<Layer> candidates;
        for (Layer x = lo_; x <= hi_; ++x)
            if (row[static_cast<std::size_t>(x - lo_)] < kInf) candidates.push_back(x);
        std::stable_sort(candidates.begin(), candidates.end(), [&](Layer x, Layer y) {
            return row[static_cast<std::size_t>(x - lo_)] < row[static_cast<std::size_t>(y - lo_)];
        });

        std::int64_t free_at_u = 0;
        for (std::size_t e : adj_[uu]) {
            const int w = edges_[e].a == u ? edges_[e].b : edges_[e].a;
            if (!assigned_[static_cast<std::size_t>(w)]) free_at_u += edges_[e].min;
        }
        const std::int64_t rest = acc_min_total_ - acc_min_[uu] + free_edge_min_ - free_at_u;

        struct Saved {
            int node;
            std::int64_t min;
        };
        std::vector<Saved> saved;
        for (Layer x : candidates) {
            const std::int64_t here = row[static_cast<std::size_t>(x - lo_)];
            if (cost_ + here + rest >= best_) break;

            pos_[uu] = x;
            assigned_[uu] = true;
            cost_ += here;
            acc_min_total_ -= acc_min_[uu];
            free_edge_min_ -= free_at_u;
            saved.clear();
            for (std::size_t e : adj_[uu]) {
                const PairCost& ke = edges_[e];
                const int w = ke.a == u ? ke.b : ke.a;
                const auto uw = static_cast<std::size_t>(w);
                if (assigned_[uw]) continue;
                auto& acc = acc_[uw];
                std::int64_t lowest = kInf * 64;
                for (Layer y = lo_; y <= hi_; ++y) {
                    auto& slot = acc[static_cast<std::size_t>(y - lo_)];
                    slot += edge_cost(ke, u, x, y);
                    lowest = std::min(lowest, slot);
                }
                saved.push_back({w, acc_min_[uw]});
                acc_min_total_ += lowest - acc_min_[uw];
                acc_min_[uw] = lowest;
            }

            if (cost_ + acc_min_total_ + free_edge_min_ < best_) dfs(depth + 1);

            for (std::size_t e : adj_[uu]) {
                const PairCost& ke = edges_[e];
                const int w = ke.a == u ? ke.b : ke.a;
                const auto uw = static_cast<std::size_t>(w);
                if (assigned_[uw]) continue;
                auto& acc = acc_[uw];
                for (Layer y = lo_; y <= hi_; ++y) acc[static_cast<std::size_t>(y - lo_)] -= edge_cost(ke, u, x, y);
            }
            for (auto it = saved.rbegin(); it != saved.rend(); ++it) {
                const auto uw = static_cast<std::size_t>(it->node);
                acc_min_total_ += it->min - acc_min_[uw];
                acc_min_[uw] = it->min;
            }
            free_edge_min_ += free_at_u;
            acc_min_total_ += acc_min_[uu];
            cost_ -= here;
            assigned_[uu] = false;
            if (aborted_) return;
        }
    }

    int k_;
    std::vector<PairCost> edges_;
    Layer lo_;
    Layer hi_;
    Clock::time_point deadline_;
    std::vector<std::vector<std::size_t>> adj_;
    std::vector<int> order_;
    std::vector<std::vector<std::int64_t>> acc_;  // cost of edges to placed neighbours, per position
    std::vector<std::int64_t> acc_min_;
    std::int64_t acc_min_total_ = 0;
    std::int64_t free_edge_min_ = 0;  // sum of minima over edges with no endpoint placed
    std::vector<bool> assigned_;
    std::vector<Layer> pos_;
    std::int64_t cost_ = 0;
    std::int64_t best_ = kNoIncumbent;
    std::vector<Layer> best_pos_;
    bool found_ = false;
    bool aborted_ = false;
    long nodes_ = 0;
};

// Node pair carrying edges in either direction.
struct Link {
    int a;
    int b;
    std::int64_t fw;  // weight of a -> b edges
    std::int64_t bw;  // weight of b -> a edges

    std::int64_t weight() const { return fw + bw; }
    // +1 puts a below b, -1 puts b below a
    std::int64_t reversed(int dir) const { return dir > 0 ? bw : fw; }
    int preferred() const { return bw <= fw ? 1 : -1; }
};

// Depth-first branch and bound over link directions. Once every link has a
// direction the cheapest layering is a minimum-length layering of the
// resulting acyclic graph. The bound adds the minimum length of the fixed
// links, one unit per free link and a packing of directed cycles that force
// a free link against its cheaper direction.
class OrientationSearch {
public:
    OrientationSearch(int n, std::vector<Link> links, std::int64_t wl, std::int64_t wr, Clock::time_point deadline)
        : n_(n), words_((static_cast<std::size_t>(n) + 63) / 64), links_(std::move(links)), wl_(wl), wr_(wr),
          deadline_(deadline), arcs_(static_cast<std::size_t>(n)) {}

    bool run(std::int64_t threshold) {
        best_ = threshold;
        State root;
        root.dir.assign(links_.size(), 0);
        root.reach.assign(static_cast<std::size_t>(n_) * words_, 0);
        for (const Link& l : links_) {
            root.free_len += l.weight();
            root.free_rev += wr_ * std::min(l.fw, l.bw);
        }
        dfs(root);
        return found_;
    }

    bool aborted() const { return aborted_; }
    long nodes() const { return nodes_; }
    std::int64_t best() const { return best_; }
    const std::vector<Layer>& best_positions() const { return best_pos_; }

private:
    struct State {
        std::vector<std::int8_t> dir;
        std::vector<std::uint64_t> reach;  // reach[v]: nodes above v through fixed links
        std::int64_t fixed_rev = 0;        // reversal cost of fixed links
        std::int64_t free_len = 0;         // weight of free links
        std::int64_t free_rev = 0;         // unavoidable reversal cost of free links
        std::int64_t fixed_len = 0;        // lower bound on the length of fixed links
        bool fixed_len_exact = true;
    };

    bool reaches(const State& s, int from, int to) const {
        return (s.reach[static_cast<std::size_t>(from) * words_ + static_cast<std::size_t>(to) / 64] >> (to % 64)) & 1;
    }

    // Gives link i direction d and every link it implies; false on a cycle.
    bool fix(State& s, std::size_t i, int d) const {
        std::vector<std::pair<std::size_t, int>> todo{{i, d}};
        while (!todo.empty()) {
            const auto [li, ld] = todo.back();
            todo.pop_back();
            if (s.dir[li] != 0) {
                if (s.dir[li] != ld) return false;
                continue;
            }
            const Link& l = links_[li];
            const int lo = ld > 0 ? l.a : l.b, hi = ld > 0 ? l.b : l.a;
            if (reaches(s, hi, lo)) return false;
            s.dir[li] = static_cast<std::int8_t>(ld);
            s.fixed_rev += wr_ * l.reversed(ld);
            s.free_len -= l.weight();
            s.free_rev -= wr_ * std::min(l.fw, l.bw);
            s.fixed_len += l.weight();
            s.fixed_len_exact = false;
            const std::uint64_t* up = &s.reach[static_cast<std::size_t>(hi) * words_];
            for (int p = 0; p < n_; ++p) {
                if (p != lo && !reaches(s, p, lo)) continue;
                std::uint64_t* row = &s.reach[static_cast<std::size_t>(p) * words_];
                for (std::size_t w = 0; w < words_; ++w) row[w] |= up[w];
                row[static_cast<std::size_t>(hi) / 64] |= std::uint64_t{1} << (hi % 64);
            }
            for (std::size_t j = 0; j < links_.size(); ++j) {
                if (s.dir[j] != 0) continue;
                if (reaches(s, links_[j].a, links_[j].b)) todo.push_back({j, 1});
                else if (reaches(s, links_[j].b, links_[j].a)) todo.push_back({j, -1});
            }
        }
        return true;
    }

    int direction(const State& s, std::size_t i) const { return s.dir[i] != 0 ? s.dir[i] : links_[i].preferred(); }

    Graph oriented(const State& s, bool with_free) const {
        Graph g(n_);
        for (std::size_t i = 0; i < links_.size(); ++i) {
            if (s.dir[i] == 0 && !with_free) continue;
            const Link& l = links_[i];
            if (direction(s, i) > 0) g.add_edge(l.a, l.b, l.weight());
            else g.add_edge(l.b, l.a, l.weight());
        }
        return g;
    }

    std::int64_t flip_cost(std::size_t i) const {
        const Link& l = links_[i];
        return wr_ * (l.fw > l.bw ? l.fw - l.bw : l.bw - l.fw);
    }

    // Greedy packing of directed cycles through free links of the graph with
    // free links in their cheaper direction. Each cycle forces a flip; cycles
    // share no free link. Returns the added cost; `first` gets the free links
    // of the first cycle found (empty when that graph is acyclic).
    std::int64_t pack(const State& s, std::vector<std::size_t>& first) {
        for (auto& a : arcs_) a.clear();
        for (std::size_t i = 0; i < links_.size(); ++i) {
            const Link& l = links_[i];
            if (direction(s, i) > 0) arcs_[static_cast<std::size_t>(l.a)].push_back(i);
            else arcs_[static_cast<std::size_t>(l.b)].push_back(i);
        }
        std::vector<bool> used(links_.size(), false);
        std::vector<std::size_t> via(static_cast<std::size_t>(n_));
        std::vector<int> seen(static_cast<std::size_t>(n_), -1);
        std::vector<int> queue;
        std::int64_t total = 0;
        first.clear();
        bool any = false;
        for (std::size_t e = 0; e < links_.size(); ++e) {
            if (s.dir[e] != 0 || used[e]) continue;
            const int d = direction(s, e);
            const int from = d > 0 ? links_[e].b : links_[e].a;
            const int to = d > 0 ? links_[e].a : links_[e].b;
            // shortest path from -> to avoiding used free links and e itself
            queue.assign(1, from);
            seen[static_cast<std::size_t>(from)] = static_cast<int>(e);
            bool hit = false;
            for (std::size_t h = 0; h < queue.size() && !hit; ++h) {
                const int v = queue[h];
                for (std::size_t li : arcs_[static_cast<std::size_t>(v)]) {
                    if (li == e || (s.dir[li] == 0 && used[li])) continue;
                    const Link& l = links_[li];
                    const int w = l.a == v ? l.b : l.a;
                    if (seen[static_cast<std::size_t>(w)] == static_cast<int>(e)) continue;
                    seen[static_cast<std::size_t>(w)] = static_cast<int>(e);
                    via[static_cast<std::size_t>(w)] = li;
                    if (w == to) {
                        hit = true;
                        break;
                    }
                    queue.push_back(w);
                }
            }
            if (!hit) continue;
            std::vector<std::size_t> frees{e};
            std::int64_t k = 1;
            for (int v = to; v != from;) {
                const std::size_t li = via[static_cast<std::size_t>(v)];
                if (s.dir[li] == 0) frees.push_back(li);
                ++k;
                v = links_[li].a == v ? links_[li].b : links_[li].a;
            }
            std::int64_t single = kInf, lowest = kInf, second = kInf;
            for (std::size_t f : frees) {
                used[f] = true;
                const std::int64_t c = flip_cost(f);
                single = std::min(single, c + wl_ * links_[f].weight() * (k - 2));
                if (c < lowest) {
                    second = lowest;
                    lowest = c;
                } else {
                    second = std::min(second, c);
                }
            }
            total += std::min(single, frees.size() >= 2 ? lowest + second : kInf);
            if (!any) first = frees;
            any = true;
            for (int& x : seen) x = -1;
        }
        return total;
    }

    std::int64_t bound(const State& s, std::int64_t packed) const {
        return s.fixed_rev + s.free_rev + wl_ * (s.fixed_len + s.free_len) + packed;
    }

    void consider(const Graph& g, const Layering& L, std::int64_t rev) {
        const std::int64_t cost = rev + wl_ * total_edge_length(g, L);
        if (cost < best_) {
            best_ = cost;
            best_pos_.assign(L.values().begin(), L.values().end());
            found_ = true;
        }
    }

    void dfs(State s) {
        for (;;) {
            if ((++nodes_ & 63) == 0 && Clock::now() > deadline_) aborted_ = true;
            if (aborted_) return;
            std::vector<std::size_t> cycle;
            const std::int64_t packed = pack(s, cycle);
            if (bound(s, packed) >= best_) return;

            if (!s.fixed_len_exact) {
                const Graph fixed = oriented(s, false);
                s.fixed_len = total_edge_length(fixed, min_length_layering(fixed));
                s.fixed_len_exact = true;
                if (bound(s, packed) >= best_) return;
            }
            if (!cycle.empty()) {
                // some free link on the cycle turns; branch on the first one that does
                for (std::size_t i = 0; i < cycle.size(); ++i) {
                    State child = s;
                    bool ok = true;
                    for (std::size_t j = 0; j < i && ok; ++j) ok = fix(child, cycle[j], links_[cycle[j]].preferred());
                    if (ok && fix(child, cycle[i], -links_[cycle[i]].preferred())) dfs(std::move(child));
                    if (aborted_) return;
                }
                return;
            }

            // every free link in its cheaper direction is acyclic: a candidate
            const Graph all = oriented(s, true);
            const Layering L = min_length_layering(all);
            std::int64_t rev = s.fixed_rev;
            for (std::size_t i = 0; i < links_.size(); ++i)
                if (s.dir[i] == 0) rev += wr_ * links_[i].reversed(links_[i].preferred());
            consider(all, L, rev);

            const std::int64_t lb = bound(s, 0);
            std::size_t pick = links_.size();
            std::int64_t longest = 0;
            bool changed = false;
            for (std::size_t i = 0; i < links_.size(); ++i) {
                if (s.dir[i] != 0) continue;
                if (lb + flip_cost(i) >= best_) {
                    if (!fix(s, i, links_[i].preferred())) return;
                    changed = true;
                    continue;
                }
                const Link& l = links_[i];
                const std::int64_t span = std::abs(static_cast<std::int64_t>(L[l.b]) - L[l.a]) * l.weight();
                if (pick == links_.size() || span > longest) {
                    pick = i;
                    longest = span;
                }
            }
            if (pick == links_.size()) return;  // every link fixed along the candidate
            if (changed) continue;
            State turned = s;
            const int pref = links_[pick].preferred();
            if (fix(s, pick, pref)) {
                if (fix(turned, pick, -pref)) dfs(std::move(turned));
                if (aborted_) return;
                continue;
            }
            if (fix(turned, pick, -pref)) {
                s = std::move(turned);
                continue;
            }
            return;
        }
    }

    int n_;
    std::size_t words_;
    std::vector<Link> links_;
    std::int64_t wl_;
    std::int64_t wr_;
    Clock::time_point deadline_;
    std::vector<std::vector<std::size_t>> arcs_;
    std::int64_t best_ = kNoIncumbent;
    std::vector<Layer> best_pos_;
    bool found_ = false;
    bool aborted_ = false;
    long nodes_ = 0;
};

struct ComponentOutcome {
    ExactStatus status = ExactStatus::kOptimal;
    std::optional<Layering> layering;
    long nodes = 0;
};

// Exact solve of one weakly connected component under finite weights.
class ComponentSolver {
public:
    ComponentSolver(const Graph& g, std::int64_t wl, std::int64_t wr, std::optional<int> bound,
                    Clock::time_point deadline)
        : g_(g), wl_(wl), wr_(wr), bound_(bound), deadline_(deadline), nbrs_(at(g.node_count())) {
        for (const Edge& e : g.edges()) {
            nbrs_[at(e.source)][e.target].forward += e.weight;
            nbrs_[at(e.target)][e.source].backward += e.weight;
        }
    }

    ComponentOutcome solve(const std::optional<Layering>& incumbent) {
        const std::int64_t threshold = incumbent ? price(*incumbent) : kNoIncumbent;
        return bound_ ? solve_bounded(incumbent, threshold) : solve_free(incumbent, threshold);
    }

    std::int64_t price(const Layering& L) const {
        std::int64_t total = 0;
        for (const Edge& e : g_.edges()) {
            const std::int64_t d = static_cast<std::int64_t>(L[e.target]) - L[e.source];
            if (d == 0) return kNoIncumbent;
            total += e.weight * (wl_ * (d < 0 ? -d : d) + (d < 0 ? wr_ : 0));
        }
        return total;
    }

private:
    ComponentOutcome solve_bounded(const std::optional<Layering>& incumbent, std::int64_t threshold) {
        const NodeId n = g_.node_count();
        std::vector<NodeId> nodes(at(n));
        std::iota(nodes.begin(), nodes.end(), 0);
        const std::int64_t reach = *bound_ - 1;
        std::vector<PairCost> pairs;
        for (NodeId u = 0; u < n; ++u) {
            for (const auto& [v, bundle] : nbrs_[at(u)]) {
                if (v < u) continue;
                PairCost pc{u, v, SpanTable(reach), 0};
                for (std::int64_t d = -reach; d <= reach; ++d) pc.table.slot(d) = bundle.cost(d, wl_, wr_);
                pc.min = pc.table.min();
                pairs.push_back(std::move(pc));
            }
        }

        PositionSearch search(static_cast<int>(n), std::move(pairs), 1, static_cast<Layer>(*bound_), deadline_);
        ComponentOutcome out;
        if (search.trivially_infeasible()) {
            out.status = ExactStatus::kInfeasible;
            return out;
        }
        const bool improved = search.run(threshold);
        finish(out, search, nodes, 0, improved, incumbent);
        if (!out.layering && !search.aborted()) out.status = ExactStatus::kInfeasible;
        return out;
    }

    ComponentOutcome solve_free(const std::optional<Layering>& incumbent, std::int64_t threshold) {
        const NodeId n = g_.node_count();
        const std::int64_t base = peel_pendants();
        std::vector<NodeId> core;
        for (NodeId v = 0; v < n; ++v)
            if (alive_[at(v)]) core.push_back(v);
        std::vector<int> index(at(n), -1);
        for (std::size_t i = 0; i < core.size(); ++i) index[at(core[i])] = static_cast<int>(i);
        std::vector<Link> links;
        for (NodeId a : core)
            for (const auto& [c, bundle] : nbrs_[at(a)])
                if (a < c) links.push_back({index[at(a)], index[at(c)], bundle.forward, bundle.backward});

        ComponentOutcome out;
        if (links.empty()) {
            out.layering = rebuild(core, std::vector<Layer>(core.size(), 0));
            return out;
        }
        OrientationSearch search(static_cast<int>(core.size()), std::move(links), wl_, wr_, deadline_);
        const bool improved = search.run(threshold == kNoIncumbent ? kNoIncumbent : threshold - base);
        finish(out, search, core, base, improved, incumbent);
        return out;
    }

    template <typename Search>
    void finish(ComponentOutcome& out, const Search& search, const std::vector<NodeId>& nodes, std::int64_t base,
                bool improved, const std::optional<Layering>& incumbent) const {
        out.nodes = search.nodes();
        out.status = search.aborted() ? ExactStatus::kTimeout : ExactStatus::kOptimal;
        if (improved) {
            Layering L = rebuild(nodes, search.best_positions());
            if (price(L) > base + search.best())
                throw std::logic_error("exact solver: reconstructed layering disagrees with its search cost");
            out.layering = std::move(L);
        } else if (incumbent) {
            out.layering = *incumbent;
        }
    }

    // Fixes nodes with a single neighbour next to it, cheapest side first.
    std::int64_t peel_pendants() {
        const NodeId n = g_.node_count();
        alive_.assign(at(n), true);
        NodeId alive_count = n;
        std::deque<NodeId> queue;
        for (NodeId v = 0; v < n; ++v)
            if (nbrs_[at(v)].size() <= 1) queue.push_back(v);
        std::int64_t base = 0;
        while (!queue.empty() && alive_count > 1) {
            const NodeId p = queue.front();
            queue.pop_front();
            if (!alive_[at(p)] || nbrs_[at(p)].size() != 1) continue;
            const auto [q, bundle] = *nbrs_[at(p)].begin();
            // d = L(q) - L(p) = -offset
            const std::int64_t below = bundle.cost(-1, wl_, wr_);
            const std::int64_t above = bundle.cost(1, wl_, wr_);
            const Layer offset = below <= above ? 1 : -1;
            base += std::min(below, above);
            pendants_.push_back({p, q, offset});
            alive_[at(p)] = false;
            --alive_count;
            nbrs_[at(p)].clear();
            nbrs_[at(q)].erase(p);
            if (nbrs_[at(q)].size() <= 1) queue.push_back(q);
        }
        return base;
    }

    Layering rebuild(const std::vector<NodeId>& placed, const std::vector<Layer>& positions) const {
        Layering L(at(g_.node_count()), 0);
        for (std::size_t i = 0; i < placed.size(); ++i) L[placed[i]] = positions[i];
        for (auto it = pendants_.rbegin(); it != pendants_.rend(); ++it) L[it->node] = L[it->anchor] + it->offset;
        return L.canonical();
    }

    const Graph& g_;
    std::int64_t wl_;
    std::int64_t wr_;
    std::optional<int> bound_;
    Clock::time_point deadline_;
    std::vector<std::map<NodeId, Bundle>> nbrs_;  // nbrs_[u][v] oriented u -> v
    std::vector<bool> alive_;
    std::vector<Pendant> pendants_;
};

Layering restrict(const Layering& L, const std::vector<NodeId>& members) {
    std::vector<Layer> out;
    out.reserve(members.size());
    for (NodeId v : members) out.push_back(L[v]);
    return Layering(std::move(out)).canonical();
}

}  // namespace

ExactResult solve_exact(const Graph& input, const GlpWeights& w, const ExactOptions& options) {
    const Graph g = is_normalized(input) ? input : normalize(input).graph;
    w.validate(g);
    const GlpWeights finite = w.finite_surrogate(g);
    const auto deadline =
        Clock::now() + std::chrono::duration_cast<Clock::duration>(options.time_limit);

    std::vector<Layering> warm;
    if (options.warm_start && g.node_count() > 0) {
        warm.push_back(solve_glp_heuristic(g, {options.seed, false}, finite).solution.layering);
        warm.push_back(solve_eaga(g, finite).layering);
    }

    ExactResult result;
    Layering full(at(g.node_count()), 1);
    const Components comps = weak_components(g);
    bool have_all = true;
    for (const auto& members : comps.members) {
        const Graph sub = induced_subgraph(g, members);
        ComponentSolver solver(sub, finite.len, finite.rev, w.max_layers, deadline);

        std::optional<Layering> incumbent;
        std::int64_t incumbent_cost = kNoIncumbent;
        for (const Layering& candidate : warm) {
            Layering local = restrict(candidate, members);
            if (w.max_layers && local.max_layer() > *w.max_layers) continue;
            const std::int64_t c = solver.price(local);
            if (c < incumbent_cost) {
                incumbent_cost = c;
                incumbent = std::move(local);
            }
        }

        ComponentOutcome out = solver.solve(incumbent);
        result.search_nodes += out.nodes;
        if (out.status == ExactStatus::kInfeasible) {
            result.status = ExactStatus::kInfeasible;
            result.solution.reset();
            return result;
        }
        if (out.status == ExactStatus::kTimeout) result.status = ExactStatus::kTimeout;
        if (!out.layering) {
            have_all = false;
            continue;
        }
        for (std::size_t i = 0; i < members.size(); ++i) full[members[i]] = (*out.layering)[static_cast<NodeId>(i)];
    }
    if (have_all) result.solution = objective(g, full, w);
    return result;
}

std::optional<GlpSolution> brute_force_oracle(const Graph& input, const GlpWeights& w) {
    const Graph g = is_normalized(input) ? input : normalize(input).graph;
    const NodeId n = g.node_count();
    if (n > kOracleMaxNodes) throw OracleSizeError("brute-force oracle is limited to 8 nodes");
    w.validate(g);
    if (n == 0) return objective(g, Layering{}, w);
    const Layer top = w.max_layers ? *w.max_layers : n;

    // edges checked once both endpoints are placed, i.e. at the later endpoint
    std::vector<std::vector<EdgeId>> closing(at(n));
    for (EdgeId e = 0; e < g.edge_count(); ++e)
        closing[at(std::max(g.edge(e).source, g.edge(e).target))].push_back(e);

    Layering L(at(n), 1);
    std::optional<Cost> best;
    Layering best_layering;
    std::vector<std::int64_t> length(at(n) + 1, 0), reversed(at(n) + 1, 0);

    // iterative odometer over node 0..n-1, partial sums per depth
    NodeId depth = 0;
    L[0] = 0;
    while (depth >= 0) {
        if (++L[depth] > top) {
            --depth;
            continue;
        }
        std::int64_t len = length[at(depth)];
        std::int64_t rev = reversed[at(depth)];
        bool ok = true;
        for (EdgeId e : closing[at(depth)]) {
            const Edge& ed = g.edge(e);
            const std::int64_t d = static_cast<std::int64_t>(L[ed.target]) - L[ed.source];
            if (d == 0) {
                ok = false;
                break;
            }
            len += ed.weight * (d < 0 ? -d : d);
            if (d < 0) rev += ed.weight;
        }
        if (!ok) continue;
        if (depth + 1 == n) {
            const Cost c(len, rev, w);
            if (!best || c < *best) {
                best = c;
                best_layering = L;
            }
            continue;
        }
        length[at(depth) + 1] = len;
        reversed[at(depth) + 1] = rev;
        ++depth;
        L[depth] = 0;
    }
    if (!best) return std::nullopt;
    return objective(g, best_layering, w);
}

}  // namespace layerforge
