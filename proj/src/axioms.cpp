#include "homrel/axioms.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>

#include "homrel/modules.hpp"
#include "homrel/oracle.hpp"

namespace homrel {

bool is_weakly_graphic(const HomogeneousRelation& h, TripleWitness* witness) {
    int n = h.size();
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            if (y == x) continue;
            for (int z = y + 1; z < n; ++z) {
                if (z == x) continue;
                if (h.same(y, x, z) && h.same(z, x, y) && !h.same(x, y, z)) {
                    if (witness) *witness = {x, y, z};
                    return false;
                }
            }
        }
    return true;
}

bool is_weakly_digraphic(const HomogeneousRelation& h, QuadWitness* witness) {
    int n = h.size();
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            if (y == x) continue;
            for (int s = 0; s < n; ++s) {
                if (s == x || s == y) continue;
                if (!h.same(s, x, y) || !h.same(y, s, x)) continue;
                for (int t = s + 1; t < n; ++t) {
                    if (t == x || t == y) continue;
                    if (h.same(t, x, y) && h.same(y, t, x) && !h.same(x, s, t)) {
                        if (witness) *witness = {x, y, s, t};
                        return false;
                    }
                }
            }
        }
    return true;
}

namespace {

// Do rows x0 and y induce the same partition on `outside`?  Label maps must
// be mutually functional; on a clash the concrete disagreeing pair is found
// by a direct scan.
std::optional<std::pair<int, int>> partition_mismatch(const HomogeneousRelation& h,
        int x0, int y, const std::vector<int>& outside) {
    std::unordered_map<int, int> fwd, bwd;
    bool clash = false;
    for (int s : outside) {
        int a = h.cls(x0, s), b = h.cls(y, s);
        auto [fi, finserted] = fwd.try_emplace(a, b);
        auto [bi, binserted] = bwd.try_emplace(b, a);
        (void)finserted;
        (void)binserted;
        if (fi->second != b || bi->second != a) { clash = true; break; }
    }
    if (!clash) return std::nullopt;
    for (size_t i = 0; i < outside.size(); ++i)
        for (size_t j = i + 1; j < outside.size(); ++j)
            if (h.same(x0, outside[i], outside[j]) != h.same(y, outside[i], outside[j]))
                return std::make_pair(outside[i], outside[j]);
    return std::nullopt;
}

} // namespace

QuotientCheck is_modular_quotient(const HomogeneousRelation& h) {
    QuotientCheck out;
    int n = h.size();
    if (n < 4) return out; // needs |M| >= 2 and two outside elements

    auto report_violation = [&](const std::vector<int>& module, int y,
                                std::pair<int, int> st) {
        out.ok = false;
        QuotientWitness w;
        w.module = module;
        w.x = module.front();
        w.y = y;
        w.s = st.first;
        w.t = st.second;
        out.witness = std::move(w);
    };

    auto check_module = [&](const std::vector<int>& module) {
        std::vector<char> in(n, 0);
        for (int e : module) in[e] = 1;
        std::vector<int> outside;
        for (int e = 0; e < n; ++e)
            if (!in[e]) outside.push_back(e);
        int x0 = module.front();
        for (size_t i = 1; i < module.size(); ++i) {
            auto bad = partition_mismatch(h, x0, module[i], outside);
            if (bad) {
                report_violation(module, module[i], *bad);
                return false;
            }
        }
        return true;
    };

    if (n <= oracle::kMaxGroundSize) {
        auto rep = oracle::all_modules(h);
        for (uint32_t m : rep.modules) {
            int sz = std::popcount(m);
            if (sz < 2 || sz > n - 2) continue;
            if (!check_module(oracle::mask_to_set(m))) return out;
        }
        return out;
    }

    // above the oracle cap: test the smallest module of each pair only
    out.exact = false;
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y) {
            auto m = smallest_module(h, {x, y});
            if (static_cast<int>(m.size()) > n - 2) continue;
            if (!check_module(m)) {
                out.exact = true; // a violation is definitive
                return out;
            }
        }
    return out;
}

namespace {

// Every 3-element restriction must contain 0 or 2 elements of congruence 2
// for graphs, 1 or 3 for tournaments.  In H[{a,b,c}] the congruence of a is
// 2 exactly when a's row separates b from c.
bool triple_profile_ok(const HomogeneousRelation& h, bool graphic) {
    int n = h.size();
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c) {
                int deg2 = static_cast<int>(!h.same(a, b, c)) +
                           static_cast<int>(!h.same(b, a, c)) +
                           static_cast<int>(!h.same(c, a, b));
                bool ok = graphic ? (deg2 == 0 || deg2 == 2)
                                  : (deg2 == 1 || deg2 == 3);
                if (!ok) return false;
            }
    return true;
}

// Class of H_u containing element `pivot`, as a membership vector.
std::vector<char> class_containing(const HomogeneousRelation& h, int u, int pivot) {
    int n = h.size();
    std::vector<char> in(n, 0);
    int id = h.cls(u, pivot);
    for (int v = 0; v < n; ++v)
        if (v != u && h.cls(u, v) == id) in[v] = 1;
    return in;
}

std::optional<Digraph> build_graph(const HomogeneousRelation& h, bool flip0) {
    int n = h.size();
    auto nb0 = class_containing(h, 0, 1);
    if (flip0)
        for (int v = 1; v < n; ++v) nb0[v] = !nb0[v];

    std::vector<std::vector<char>> want(n, std::vector<char>(n, 0));
    want[0] = nb0;
    for (int u = 1; u < n; ++u) {
        auto du = class_containing(h, u, 0);
        if (!nb0[u]) // u not adjacent to 0: the class holding 0 is the non-neighbourhood
            for (int v = 0; v < n; ++v)
                if (v != u) du[v] = !du[v];
        want[u] = du;
    }
    Digraph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            if (want[u][v] != want[v][u]) return std::nullopt;
            if (want[u][v]) g.add_edge(u, v);
        }
    if (from_digraph(g) == h) return g;
    return std::nullopt;
}

std::optional<Digraph> build_tournament(const HomogeneousRelation& h, bool flip0) {
    int n = h.size();
    auto out0 = class_containing(h, 0, 1);
    if (flip0)
        for (int v = 1; v < n; ++v) out0[v] = !out0[v];

    std::vector<std::vector<char>> want(n, std::vector<char>(n, 0));
    want[0] = out0;
    for (int u = 1; u < n; ++u) {
        auto du = class_containing(h, u, 0);
        // 0 -> u puts 0 among u's in-neighbours, so du is N-(u); invert it
        if (out0[u])
            for (int v = 0; v < n; ++v)
                if (v != u) du[v] = !du[v];
        want[u] = du;
    }
    Digraph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            if (want[u][v] == want[v][u]) return std::nullopt; // not a tournament
            if (want[u][v]) g.add_arc(u, v);
            else g.add_arc(v, u);
        }
    if (from_digraph(g) == h) return g;
    return std::nullopt;
}

} // namespace

std::optional<Digraph> recognize_graphic(const HomogeneousRelation& h) {
    int n = h.size();
    if (n <= 1) return Digraph(n);
    if (local_congruence(h) > 2) return std::nullopt;
    if (!triple_profile_ok(h, true)) return std::nullopt;
    if (auto g = build_graph(h, false)) return g;
    return build_graph(h, true);
}

std::optional<Digraph> recognize_tournamental(const HomogeneousRelation& h) {
    int n = h.size();
    if (n <= 1) return Digraph(n);
    if (n == 2) {
        Digraph g(2);
        g.add_arc(0, 1);
        return g;
    }
    if (local_congruence(h) > 2) return std::nullopt;
    if (!triple_profile_ok(h, false)) return std::nullopt;
    if (auto g = build_tournament(h, false)) return g;
    return build_tournament(h, true);
}

} // namespace homrel
