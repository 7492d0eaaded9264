#include "dynkin/transforms.hpp"

#include "dynkin/recognize.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <mutex>
#include <numeric>

namespace dynkin {

namespace {

using Vertex = DecoratedGraph::Vertex;

Vertex lowest(VertexMask m) { return static_cast<Vertex>(std::countr_zero(m)); }

template <typename Key, typename Value, typename Compute>
const Value& memoized(std::map<Key, Value>& cache, std::mutex& mutex, const Key& key, Compute compute)
{
    {
        std::lock_guard lock(mutex);
        if (auto it = cache.find(key); it != cache.end())
            return it->second;
    }
    Value value = compute();
    std::lock_guard lock(mutex);
    return cache.try_emplace(key, std::move(value)).first->second;
}

// ---------------------------------------------------------------------------
// Elementary transformation, one component at a time.

CombinationSet elementary_options(ComponentKind kind)
{
    auto ext = extend_component(kind);
    CombinationSet out;
    const VertexMask full = ext.graph.all_vertices();
    for (VertexMask removed = 1; removed <= full; ++removed) {
        auto rest = classify(ext.graph, full & ~removed);
        if (!rest)
            throw InvariantViolation("elementary transformation of " + kind.name() +
                                     " left a non-Dynkin remainder");
        out.insert(std::move(*rest));
    }
    return out;
}

const CombinationSet& cached_elementary_options(ComponentKind kind)
{
    static std::map<ComponentKind, CombinationSet> cache;
    static std::mutex mutex;
    return memoized(cache, mutex, kind, [&] { return elementary_options(kind); });
}

CombinationSet combine(const CombinationSet& acc, const CombinationSet& options)
{
    CombinationSet out;
    for (const auto& a : acc)
        for (const auto& o : options)
            out.insert(a + o);
    return out;
}

// ---------------------------------------------------------------------------
// Tie transformation, factorized per component.
//
// Deleting A from an extended component leaves a forest of Dynkin trees. A tree
// that contains a B vertex hangs off the new vertex by that vertex; two B
// vertices in one tree would close a cycle, which no Dynkin graph has. So a
// per-component choice reduces to: the Combination of untouched trees, plus a
// list of rooted trees ("branches") to attach to the new vertex.

struct Branch {
    DecoratedGraph graph;
    Vertex root = 0;
};

std::string rooted_key(const DecoratedGraph& g, VertexMask within, Vertex v, Vertex parent)
{
    std::vector<std::string> children;
    for (VertexMask nb = g.neighbours(v) & within; nb; nb &= nb - 1) {
        Vertex w = lowest(nb);
        if (w != parent)
            children.push_back(rooted_key(g, within, w, v));
    }
    std::sort(children.begin(), children.end());
    std::string key(1, norm_symbol(g.norm(v)));
    key += '(';
    for (const auto& c : children)
        key += c;
    key += ')';
    return key;
}

std::map<std::string, Branch>& branch_registry()
{
    static std::map<std::string, Branch> registry;
    return registry;
}

std::mutex& branch_mutex()
{
    static std::mutex mutex;
    return mutex;
}

std::string register_branch(const DecoratedGraph& g, VertexMask tree, Vertex root)
{
    std::string key = rooted_key(g, tree, root, root);
    std::lock_guard lock(branch_mutex());
    auto& registry = branch_registry();
    if (!registry.contains(key)) {
        Branch b;
        b.graph = g.induced(tree);
        b.root = static_cast<Vertex>(std::popcount(tree & (bit(root) - 1)));
        registry.emplace(key, std::move(b));
    }
    return key;
}

using BranchKeys = std::vector<std::string>;  // sorted

/// Kind of the component formed by a new Long vertex joined to the roots of the
/// given branches, or nullopt when that component is not in the catalog.
std::optional<ComponentKind> attachment_kind(const BranchKeys& keys)
{
    static std::map<BranchKeys, std::optional<ComponentKind>> cache;
    static std::mutex mutex;
    return memoized(cache, mutex, keys, [&] {
        DecoratedGraph g;
        Vertex hub = g.add_vertex(RootNorm::Long);
        for (const auto& key : keys) {
            Branch b;
            {
                std::lock_guard lock(branch_mutex());
                b = branch_registry().at(key);
            }
            Vertex offset = g.append(b.graph);
            g.add_edge(hub, offset + b.root);
        }
        return recognize_component(g);
    });
}

struct TieState {
    Combination free;
    BranchKeys branches;
    friend auto operator<=>(const TieState&, const TieState&) = default;
};

using TieStates = std::set<TieState>;

bool merge_branches(const BranchKeys& lhs, const BranchKeys& rhs, BranchKeys& out)
{
    if (lhs.size() + rhs.size() > 3)
        return false;
    out.clear();
    std::merge(lhs.begin(), lhs.end(), rhs.begin(), rhs.end(), std::back_inserter(out));
    return out.empty() || attachment_kind(out).has_value();
}

TieStates tie_options(ComponentKind kind)
{
    auto ext = extend_component(kind);
    const auto& g = ext.graph;
    const VertexMask full = g.all_vertices();
    const std::size_t n = g.size();

    TieStates out;
    for (VertexMask removed = 1; removed <= full; ++removed) {
        int gcd_a = 0;
        for (VertexMask m = removed; m; m &= m - 1)
            gcd_a = std::gcd(gcd_a, ext.coeff[lowest(m)]);

        const VertexMask rest = full & ~removed;
        auto trees = g.components(rest);
        std::vector<ComponentKind> kinds;
        std::vector<std::size_t> tree_of(n, 0);
        for (std::size_t t = 0; t < trees.size(); ++t) {
            auto k = classify(g, trees[t]);
            if (!k || k->component_count() != 1)
                throw InvariantViolation("tie transformation of " + kind.name() +
                                         " left a non-Dynkin remainder");
            kinds.push_back(k->components().front());
            for (VertexMask m = trees[t]; m; m &= m - 1)
                tree_of[lowest(m)] = t;
        }

        if (gcd_a == 1)
            out.insert({Combination(kinds), {}});

        std::vector<Vertex> candidates;
        for (VertexMask m = rest; m; m &= m - 1)
            candidates.push_back(lowest(m));

        // B = chosen[0..depth) with strictly increasing vertex ids.
        std::vector<Vertex> chosen;
        auto emit = [&] {
            int sum = 0;
            std::vector<bool> touched(trees.size(), false);
            for (Vertex b : chosen) {
                sum += ext.coeff[b];
                touched[tree_of[b]] = true;
            }
            if (std::gcd(gcd_a, sum) != 1)
                return;
            TieState state;
            std::vector<ComponentKind> free;
            for (std::size_t t = 0; t < trees.size(); ++t)
                if (!touched[t])
                    free.push_back(kinds[t]);
            state.free = Combination(std::move(free));
            for (Vertex b : chosen)
                state.branches.push_back(register_branch(g, trees[tree_of[b]], b));
            std::sort(state.branches.begin(), state.branches.end());
            if (attachment_kind(state.branches))
                out.insert(std::move(state));
        };
        auto recurse = [&](auto&& self, std::size_t from) -> void {
            if (!chosen.empty())
                emit();
            if (chosen.size() == 3)
                return;
            for (std::size_t i = from; i < candidates.size(); ++i) {
                Vertex v = candidates[i];
                bool clash = std::any_of(chosen.begin(), chosen.end(),
                                         [&](Vertex c) { return tree_of[c] == tree_of[v]; });
                if (clash)
                    continue;
                chosen.push_back(v);
                self(self, i + 1);
                chosen.pop_back();
            }
        };
        recurse(recurse, 0);
    }
    return out;
}

const TieStates& cached_tie_options(ComponentKind kind)
{
    static std::map<ComponentKind, TieStates> cache;
    static std::mutex mutex;
    return memoized(cache, mutex, kind, [&] { return tie_options(kind); });
}

void add_path(DecoratedGraph& g, std::vector<int>& coeff, Vertex from, std::initializer_list<int> path)
{
    Vertex prev = from;
    for (int c : path) {
        Vertex v = g.add_vertex(RootNorm::Long);
        coeff.push_back(c);
        g.add_edge(prev, v);
        prev = v;
    }
}

}  // namespace

ExtendedComponent extend_component(ComponentKind kind)
{
    ExtendedComponent ext{kind, {}, 0, {}};
    auto& g = ext.graph;
    auto& coeff = ext.coeff;
    const int n = kind.vertex_count();
    switch (kind.family()) {
    case Family::A: {
        g.add_vertex(RootNorm::Long);
        coeff.push_back(1);
        Vertex prev = 0;
        for (int i = 1; i <= n; ++i) {
            Vertex v = g.add_vertex(RootNorm::Long);
            coeff.push_back(1);
            g.add_edge(prev, v);
            prev = v;
        }
        // Path 0..n with the added vertex n; close the cycle for n >= 2.
        if (n >= 2)
            g.add_edge(0, static_cast<Vertex>(n));
        break;
    }
    case Family::D:
        // Long arm 0..n-4 ends at 0; the added vertex forks at vertex 1.
        g = build_component(kind);
        coeff.assign(static_cast<std::size_t>(n), 2);
        coeff[0] = 1;
        coeff[static_cast<std::size_t>(n - 2)] = 1;
        coeff[static_cast<std::size_t>(n - 1)] = 1;
        g.add_edge(1, g.add_vertex(RootNorm::Long));
        coeff.push_back(1);
        break;
    case Family::E:
        g.add_vertex(RootNorm::Long);
        if (n == 6) {
            coeff = {3};
            add_path(g, coeff, 0, {2});
            add_path(g, coeff, 0, {2, 1});
            add_path(g, coeff, 0, {2, 1});
            g.add_edge(1, g.add_vertex(RootNorm::Long));
        } else if (n == 7) {
            coeff = {4};
            add_path(g, coeff, 0, {2});
            add_path(g, coeff, 0, {3, 2});
            add_path(g, coeff, 0, {3, 2, 1});
            g.add_edge(3, g.add_vertex(RootNorm::Long));
        } else {
            coeff = {6};
            add_path(g, coeff, 0, {3});
            add_path(g, coeff, 0, {4, 2});
            add_path(g, coeff, 0, {5, 4, 3, 2});
            g.add_edge(7, g.add_vertex(RootNorm::Long));
        }
        coeff.push_back(1);
        break;
    case Family::BC1:
        g.add_vertex(RootNorm::Half);
        g.add_edge(0, g.add_vertex(RootNorm::Long));
        coeff = {2, 1};
        break;
    case Family::G1:
        g.add_vertex(RootNorm::TwoThirds);
        g.add_edge(0, g.add_vertex(RootNorm::TwoThirds));
        coeff = {1, 1};
        break;
    case Family::G2:
        g = build_component(kind);
        g.add_edge(0, g.add_vertex(RootNorm::Long));
        coeff = {2, 3, 1};
        break;
    }
    ext.added_vertex = g.size() - 1;
    return ext;
}

std::string_view transform_name(Transform op)
{
    return op == Transform::Elementary ? "elem" : "tie";
}

Transform parse_transform(std::string_view name)
{
    if (name == "elem")
        return Transform::Elementary;
    if (name == "tie")
        return Transform::Tie;
    throw std::invalid_argument("unknown transformation '" + std::string(name) + "'");
}

CombinationSet elementary_results(const Combination& c)
{
    CombinationSet acc{Combination{}};
    for (const auto& kind : c.components())
        acc = combine(acc, cached_elementary_options(kind));
    return acc;
}

bool gcd_condition(std::span<const int> coeffs_in_a, int n)
{
    if (coeffs_in_a.empty())
        throw ContractViolation("gcd_condition: A meets every component, so the list is nonempty");
    int g = n;
    for (int c : coeffs_in_a)
        g = std::gcd(g, c);
    return g == 1;
}

ExtendedCombination extend_combination(const Combination& c)
{
    ExtendedCombination out;
    for (const auto& kind : c.components()) {
        auto ext = extend_component(kind);
        Vertex offset = out.graph.append(ext.graph);
        out.coeff.insert(out.coeff.end(), ext.coeff.begin(), ext.coeff.end());
        out.component_vertices.push_back((bit(ext.graph.size()) - 1) << offset);
    }
    return out;
}

bool is_admissible(const ExtendedCombination& ext, const TieChoice& choice)
{
    if (choice.removed & choice.joined)
        return false;
    if (std::popcount(choice.joined) > 3)
        return false;
    for (VertexMask v : ext.component_vertices) {
        std::vector<int> in_a;
        for (VertexMask m = v & choice.removed; m; m &= m - 1)
            in_a.push_back(ext.coeff[lowest(m)]);
        if (in_a.empty())
            return false;
        int n = 0;
        for (VertexMask m = v & choice.joined; m; m &= m - 1)
            n += ext.coeff[lowest(m)];
        if (!gcd_condition(in_a, n))
            return false;
    }
    return true;
}

DecoratedGraph apply_tie(const ExtendedCombination& ext, const TieChoice& choice)
{
    const VertexMask kept = ext.graph.all_vertices() & ~choice.removed;
    DecoratedGraph out = ext.graph.induced(kept);
    Vertex hub = out.add_vertex(RootNorm::Long);
    for (VertexMask m = choice.joined; m; m &= m - 1) {
        Vertex v = lowest(m);
        out.add_edge(hub, static_cast<Vertex>(std::popcount(kept & (bit(v) - 1))));
    }
    return out;
}

CombinationSet tie_results(const Combination& c)
{
    TieStates states{TieState{}};
    for (const auto& kind : c.components()) {
        const auto& options = cached_tie_options(kind);
        TieStates next;
        BranchKeys merged;
        for (const auto& s : states)
            for (const auto& o : options)
                if (merge_branches(s.branches, o.branches, merged))
                    next.insert({s.free + o.free, merged});
        states = std::move(next);
    }
    CombinationSet out;
    for (const auto& s : states)
        if (auto kind = attachment_kind(s.branches))
            out.insert(s.free.with(*kind));
    return out;
}

CombinationSet step_results(const Combination& c, Transform op)
{
    return op == Transform::Elementary ? elementary_results(c) : tie_results(c);
}

CombinationSet step_results(const CombinationSet& from, Transform op)
{
    CombinationSet out;
    for (const auto& c : from)
        out.merge(step_results(c, op));
    return out;
}

CombinationSet two_step_closure(const Combination& seed, std::span<const TransformPair> pairs)
{
    std::map<Transform, CombinationSet> first;
    CombinationSet out;
    for (auto [op1, op2] : pairs) {
        if (!first.contains(op1))
            first.emplace(op1, step_results(seed, op1));
        out.merge(step_results(first.at(op1), op2));
    }
    return out;
}

}  // namespace dynkin
