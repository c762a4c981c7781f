#include "homrel/strong.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "homrel/modules.hpp"

namespace homrel {

SetFamily z_family(const HomogeneousRelation& h) {
    int n = h.size();
    if (n < 2) throw std::invalid_argument("z_family: need n >= 2");
    SetFamily f;
    f.ground = n;
    for (int y = 0; y < n; ++y) {
        auto maxm = max_modules_excluding(h, y);
        for (auto& part : maxm.members) f.members.push_back(std::move(part));
    }
    std::sort(f.members.begin(), f.members.end());
    f.members.erase(std::unique(f.members.begin(), f.members.end()), f.members.end());
    return f;
}

namespace {

struct Dsu {
    std::vector<int> parent;
    explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int v) { return parent[v] == v ? v : parent[v] = find(parent[v]); }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

} // namespace

std::vector<OverlapClass> overlap_classes(const SetFamily& f) {
    std::vector<std::vector<int>> members = f.members;
    for (auto& m : members) std::sort(m.begin(), m.end());
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    int m = static_cast<int>(members.size());

    // candidate pairs share an element; pairs already in one component are
    // skipped, which keeps the scan near-linear on laminar inputs
    std::vector<std::vector<int>> incident(f.ground);
    for (int i = 0; i < m; ++i)
        for (int e : members[i]) incident[e].push_back(i);
    Dsu dsu(m);
    for (int e = 0; e < f.ground; ++e) {
        const auto& list = incident[e];
        for (size_t i = 0; i < list.size(); ++i)
            for (size_t j = i + 1; j < list.size(); ++j) {
                if (dsu.find(list[i]) == dsu.find(list[j])) continue;
                if (overlaps(members[list[i]], members[list[j]]))
                    dsu.unite(list[i], list[j]);
            }
    }

    std::map<int, std::vector<int>> groups;
    for (int i = 0; i < m; ++i) groups[dsu.find(i)].push_back(i);
    std::vector<OverlapClass> out;
    for (auto& [root, idxs] : groups) {
        OverlapClass c;
        c.members = idxs;
        for (int i : idxs)
            c.support.insert(c.support.end(), members[i].begin(), members[i].end());
        std::sort(c.support.begin(), c.support.end());
        c.support.erase(std::unique(c.support.begin(), c.support.end()), c.support.end());
        // signature = the set of class members containing the element
        std::map<std::vector<int>, std::vector<int>> by_signature;
        for (int e : c.support) {
            std::vector<int> sig;
            for (int i : idxs)
                if (std::binary_search(members[i].begin(), members[i].end(), e))
                    sig.push_back(i);
            by_signature[sig].push_back(e);
        }
        for (auto& [sig, elems] : by_signature) c.atoms.push_back(elems);
        std::sort(c.atoms.begin(), c.atoms.end(),
                  [](const auto& a, const auto& b) { return a.front() < b.front(); });
        out.push_back(std::move(c));
    }
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.support < b.support; });
    return out;
}

Tree strong_modules(const HomogeneousRelation& h) {
    int n = h.size();
    if (n < 1) throw std::invalid_argument("strong_modules: need n >= 1");
    if (n == 1) return tree_from_sets(1, {});

    auto f = z_family(h);
    auto classes = overlap_classes(f);

    std::vector<std::vector<int>> candidates;
    for (const auto& c : classes) {
        candidates.push_back(c.support);
        for (const auto& a : c.atoms) candidates.push_back(a);
    }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

    std::vector<std::vector<int>> modules;
    for (auto& c : candidates)
        if (is_module(h, c)) modules.push_back(std::move(c));
    // by the support/atom theorem none of these overlaps another module;
    // the filter below is a cheap guard on that invariant
    std::vector<std::vector<int>> strong;
    for (size_t i = 0; i < modules.size(); ++i) {
        bool ok = true;
        for (size_t j = 0; j < modules.size() && ok; ++j)
            if (j != i && overlaps(modules[i], modules[j])) ok = false;
        if (ok) strong.push_back(modules[i]);
    }
    return tree_from_sets(n, std::move(strong));
}

} // namespace homrel
