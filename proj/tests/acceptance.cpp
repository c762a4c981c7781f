// End-to-end acceptance suite.  One pass/fail line per criterion; exits
// nonzero when any criterion fails.

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdio>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "homrel/axioms.hpp"
#include "homrel/factperm.hpp"
#include "homrel/generators.hpp"
#include "homrel/good.hpp"
#include "homrel/modules.hpp"
#include "homrel/oracle.hpp"
#include "homrel/strong.hpp"

using namespace homrel;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(int num, const char* name, bool ok, const std::string& detail = "") {
    std::printf("criterion %d %-28s %s%s%s\n", num, name, ok ? "PASS" : "FAIL",
                detail.empty() ? "" : "  ", detail.c_str());
    if (!ok) ++failures;
}

// mixed corpus of 500 relations, n in 3..8
std::vector<HomogeneousRelation> mixed_corpus() {
    std::vector<HomogeneousRelation> out;
    const double ps[3] = {0.2, 0.5, 0.8};
    uint64_t seed = 1;
    while (out.size() < 500) {
        int n = 3 + static_cast<int>(seed % 6);
        switch (seed % 5) {
            case 0: out.push_back(from_digraph(random_graph(n, ps[0], seed))); break;
            case 1: out.push_back(from_digraph(random_graph(n, ps[1], seed))); break;
            case 2: out.push_back(from_digraph(random_graph(n, ps[2], seed))); break;
            case 3: out.push_back(from_digraph(random_tournament(n, seed))); break;
            default: out.push_back(random_relation(n, 1 + static_cast<int>(seed % 4), seed));
        }
        ++seed;
    }
    return out;
}

// good corpus of 500 relations, n in 3..9
std::vector<HomogeneousRelation> good_corpus() {
    std::vector<HomogeneousRelation> out;
    uint64_t seed = 1;
    while (out.size() < 500) {
        int n = 3 + static_cast<int>(seed % 7);
        switch (seed % 3) {
            case 0: out.push_back(from_digraph(random_graph(n, 0.2 + 0.3 * (seed % 2), seed))); break;
            case 1: out.push_back(from_digraph(random_tournament(n, seed))); break;
            default: out.push_back(from_two_structure(random_two_structure(n, 2 + static_cast<int>(seed % 3), seed)));
        }
        ++seed;
    }
    return out;
}

void criterion_1_and_2(const std::vector<HomogeneousRelation>& corpus) {
    auto t0 = Clock::now();
    bool ok1 = true, ok2 = true;
    std::string why1, why2;
    for (size_t idx = 0; idx < corpus.size() && (ok1 || ok2); ++idx) {
        const auto& h = corpus[idx];
        int n = h.size();
        auto rep = oracle::all_modules(h);

        if (ok1) {
            for (uint32_t mask = 1; mask < (1u << n) && ok1; ++mask) {
                bool expect =
                    std::binary_search(rep.modules.begin(), rep.modules.end(), mask);
                if (is_module(h, oracle::mask_to_set(mask)) != expect) {
                    ok1 = false;
                    why1 = "is_module mismatch at relation " + std::to_string(idx);
                }
            }
            for (int a = 0; a < n && ok1; ++a)
                for (int b = a + 1; b < n && ok1; ++b) {
                    uint32_t want = 0;
                    int best = n + 1;
                    uint32_t pair = (1u << a) | (1u << b);
                    for (uint32_t m : rep.modules)
                        if ((m & pair) == pair && std::popcount(m) < best) {
                            want = m;
                            best = std::popcount(m);
                        }
                    if (oracle::set_to_mask(smallest_module(h, {a, b})) != want) {
                        ok1 = false;
                        why1 = "smallest_module mismatch at relation " + std::to_string(idx);
                    }
                }
            for (int x = 0; x < n && ok1; ++x) {
                auto mine = max_modules_excluding(h, x).members;
                auto want = oracle::oracle_maxm(h, x).members;
                std::sort(mine.begin(), mine.end());
                std::sort(want.begin(), want.end());
                if (mine != want) {
                    ok1 = false;
                    why1 = "max_modules_excluding mismatch at relation " + std::to_string(idx);
                }
            }
            if (ok1) {
                bool prime = true;
                for (uint32_t m : rep.modules) {
                    int pop = std::popcount(m);
                    if (pop > 1 && pop < n) prime = false;
                }
                if (is_prime(h) != prime) {
                    ok1 = false;
                    why1 = "is_prime mismatch at relation " + std::to_string(idx);
                }
            }
        }

        if (ok2) {
            auto tree = strong_modules(h);
            std::vector<std::vector<int>> want;
            for (uint32_t m : rep.strong) want.push_back(oracle::mask_to_set(m));
            std::sort(want.begin(), want.end());
            if (tree.node_sets() != want) {
                ok2 = false;
                why2 = "strong set mismatch at relation " + std::to_string(idx);
            } else if (tree.size() > 2 * n - 1) {
                ok2 = false;
                why2 = "node count bound violated at relation " + std::to_string(idx);
            }
        }
    }
    double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    if (ok1 && secs >= 60.0) {
        ok1 = false;
        why1 = "runtime " + std::to_string(secs) + " s";
    }
    report(1, "oracle equivalence", ok1, why1);
    report(2, "strong enumeration", ok2, why2);
}

void criterion_3_and_4(const std::vector<HomogeneousRelation>& corpus) {
    bool ok3 = true, ok4 = true;
    std::string why3, why4;
    for (size_t idx = 0; idx < corpus.size() && (ok3 || ok4); ++idx) {
        const auto& h = corpus[idx];
        auto rep = oracle::all_modules(h);
        auto want_sets = rep.tree.node_sets();

        if (ok3) {
            auto t = decompose(h, GoodOptions{true});
            if (t.node_sets() != want_sets) {
                ok3 = false;
                why3 = "node sets differ at relation " + std::to_string(idx);
            } else {
                std::map<std::vector<int>, NodeKind> kinds;
                for (const auto& node : rep.tree.nodes)
                    if (!node.children.empty()) kinds[node.elements] = node.kind;
                for (const auto& node : t.nodes)
                    if (node.children.size() >= 3 &&
                        kinds[node.elements] != node.kind) {
                        ok3 = false;
                        why3 = "kind mismatch at relation " + std::to_string(idx);
                        break;
                    }
            }
        }

        if (ok4) {
            auto sigma = rep.tree.dfs_leaf_order();
            FactPermOptions opts;
            opts.check_invariant = true;
            auto t = tree_from_permutation(h, sigma, opts);
            auto strong = strong_modules(h);
            if (t.node_sets() != strong.node_sets()) {
                ok4 = false;
                why4 = "interval tree differs at relation " + std::to_string(idx);
            }
        }
    }
    report(3, "good-relation tree", ok3, why3);
    report(4, "factoring permutation", ok4, why4);
}

void criterion_5() {
    bool ok = true;
    std::string why;
    for (uint64_t seed = 1; seed <= 50 && ok; ++seed) {
        int n = 4 + static_cast<int>(seed % 4); // 4..7
        auto h = random_relation(n, 1 + static_cast<int>(seed % 3), seed * 31);
        std::vector<int> s(1u << n, 0);
        for (uint32_t m = 1; m < (1u << n); ++m)
            s[m] = splitters(h, oracle::mask_to_set(m)).count;
        for (uint32_t a = 1; a < (1u << n) && ok; ++a)
            for (uint32_t b = 1; b < (1u << n); ++b) {
                if (!(a & b)) continue;
                if (s[a] + s[b] < s[a | b] + s[a & b]) {
                    ok = false;
                    why = "violated at seed " + std::to_string(seed);
                    break;
                }
            }
    }
    report(5, "submodularity", ok, why);
}

void criterion_6() {
    bool ok = true;
    std::string why;

    auto k = fixtures::relation_k();
    if (!is_weakly_graphic(k)) { ok = false; why = "K not weakly graphic"; }
    if (ok && is_modular_quotient(k).ok) { ok = false; why = "K passes quotient check"; }
    if (ok) {
        auto rep = oracle::all_modules(k);
        std::vector<uint32_t> nontrivial;
        for (uint32_t m : rep.modules)
            if (std::popcount(m) > 1 && std::popcount(m) < 4) nontrivial.push_back(m);
        if (nontrivial != std::vector<uint32_t>{0b0011u}) {
            ok = false;
            why = "K nontrivial modules differ from {x,y}";
        }
    }

    if (ok) {
        auto l = fixtures::relation_l();
        if (!is_prime(l)) { ok = false; why = "L not prime"; }
        else if (!is_modular_quotient(l).ok) { ok = false; why = "L fails quotient check"; }
        else if (is_weakly_digraphic(l)) { ok = false; why = "L weakly digraphic"; }
    }

    if (ok) {
        auto z = z_family(fixtures::three_element());
        std::set<std::vector<int>> zs(z.members.begin(), z.members.end());
        if (!zs.count({0, 1}) || !zs.count({0, 2}) || zs.count({0, 1, 2})) {
            ok = false;
            why = "three-element Z family wrong";
        }
    }
    report(6, "paper fixtures", ok, why);
}

void criterion_7() {
    bool ok = true;
    std::string why;
    std::mt19937_64 pick(7);
    for (int trial = 0; trial < 200 && ok; ++trial) {
        int n = 2 + static_cast<int>(pick() % 49); // 2..50
        double p = 0.1 + 0.8 * ((pick() >> 11) * 0x1.0p-53);
        auto g = random_graph(n, p, 1000 + trial);
        auto h = from_digraph(g);
        auto back = recognize_graphic(h);
        if (!back || from_digraph(*back) != h) {
            ok = false;
            why = "graph round trip failed at trial " + std::to_string(trial);
        }
    }
    for (int trial = 0; trial < 200 && ok; ++trial) {
        int n = 2 + static_cast<int>(pick() % 49);
        auto t = random_tournament(n, 2000 + trial);
        auto h = from_digraph(t);
        auto back = recognize_tournamental(h);
        if (!back || from_digraph(*back) != h) {
            ok = false;
            why = "tournament round trip failed at trial " + std::to_string(trial);
        }
    }
    if (ok) {
        auto k = fixtures::relation_k();
        if (recognize_graphic(k) || recognize_tournamental(k)) {
            ok = false;
            why = "K accepted by a recognizer";
        }
    }
    report(7, "recognition round trip", ok, why);
}

void criterion_8(const std::vector<HomogeneousRelation>& mixed) {
    bool ok = true;
    std::string why;
    for (size_t idx = 0; idx < mixed.size() && ok; ++idx) {
        const auto& h = mixed[idx];
        auto rep = oracle::all_modules(h);
        bool good = is_modular_quotient(h).ok;
        bool wgraphic = is_weakly_graphic(h);
        for (size_t i = 0; i < rep.modules.size() && ok; ++i)
            for (size_t j = i + 1; j < rep.modules.size(); ++j) {
                uint32_t a = rep.modules[i], b = rep.modules[j];
                if (!(a & b) || (a & b) == a || (a & b) == b) continue; // need overlap
                auto has = [&](uint32_t m) {
                    return m == 0 ||
                           std::binary_search(rep.modules.begin(), rep.modules.end(), m);
                };
                if (!has(a & b) || !has(a | b)) {
                    ok = false;
                    why = "cap/cup closure failed at relation " + std::to_string(idx);
                    break;
                }
                if (good && (!has(a & ~b) || !has(b & ~a))) {
                    ok = false;
                    why = "difference closure failed at relation " + std::to_string(idx);
                    break;
                }
                if (wgraphic && !has(a ^ b)) {
                    ok = false;
                    why = "symmetric difference closure failed at relation " +
                          std::to_string(idx);
                    break;
                }
            }
    }
    report(8, "module closure", ok, why);
}

double time_decompose(int n, uint64_t seed) {
    auto h = from_digraph(random_tournament(n, seed));
    double best = 1e18;
    for (int rep = 0; rep < 3; ++rep) {
        auto t0 = Clock::now();
        auto tree = decompose(h);
        double secs = std::chrono::duration<double>(Clock::now() - t0).count();
        if (tree.size() < n) return -1.0; // tree must at least hold the leaves
        best = std::min(best, secs);
    }
    return best;
}

void criterion_9() {
    double t1000 = time_decompose(1000, 42);
    double t2000 = time_decompose(2000, 42);
    bool ok = t1000 > 0 && t2000 > 0;
    std::string why;
    if (!ok) {
        why = "decompose produced a malformed tree";
    } else {
        double ratio = t2000 / std::max(t1000, 1e-6);
        char buf[128];
        std::snprintf(buf, sizeof buf, "t(1000)=%.3fs t(2000)=%.3fs ratio=%.2f",
                      t1000, t2000, ratio);
        why = buf;
        if (ratio > 5.5) ok = false;
    }
    report(9, "complexity smoke", ok, why);
}

} // namespace

int main() {
    auto mixed = mixed_corpus();
    auto good = good_corpus();
    criterion_1_and_2(mixed);
    criterion_3_and_4(good);
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8(mixed);
    criterion_9();
    std::printf("%s (%d failure%s)\n", failures ? "ACCEPTANCE FAIL" : "ACCEPTANCE PASS",
                failures, failures == 1 ? "" : "s");
    return failures ? 1 : 0;
}
