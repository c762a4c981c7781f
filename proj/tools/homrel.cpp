#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "homrel/axioms.hpp"
#include "homrel/factperm.hpp"
#include "homrel/generators.hpp"
#include "homrel/good.hpp"
#include "homrel/io.hpp"
#include "homrel/modules.hpp"
#include "homrel/oracle.hpp"
#include "homrel/strong.hpp"

using namespace homrel;

namespace {

std::string slurp(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream f(path);
    if (!f) throw InputError("cannot open " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

HomogeneousRelation load_relation(const std::string& text, const std::string& format) {
    std::istringstream in(text);
    if (format == "relation") return read_relation(in);
    if (format == "graph") return from_digraph(read_digraph(in, true));
    if (format == "digraph") return from_digraph(read_digraph(in, false));
    if (format == "tournament") {
        auto g = read_digraph(in, false);
        if (!g.is_tournament()) throw InputError("input digraph is not a tournament");
        return from_digraph(g);
    }
    if (format == "2structure") return from_two_structure(read_two_structure(in));
    throw InputError("unknown input format: " + format);
}

std::vector<int> parse_csv_ints(const std::string& csv) {
    std::vector<int> out;
    std::istringstream in(csv);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        if (tok.empty()) continue;
        out.push_back(std::stoi(tok));
    }
    return out;
}

std::string set_to_string(const std::vector<int>& s) {
    std::string out = "{";
    for (size_t i = 0; i < s.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(s[i]);
    }
    return out + "}";
}

int run_decompose(const std::string& input, const std::string& format,
                  const std::string& algo, const std::string& perm_csv,
                  bool defensive, bool timings) {
    std::string text = slurp(input);
    HomogeneousRelation h = load_relation(text, format);

    auto t0 = std::chrono::steady_clock::now();
    Tree tree;
    if (algo == "good") {
        tree = decompose(h, GoodOptions{defensive});
    } else if (algo == "strong-enum") {
        tree = strong_modules(h);
    } else if (algo == "factperm") {
        std::vector<int> sigma;
        if (!perm_csv.empty()) {
            sigma = parse_csv_ints(perm_csv);
        } else if (format == "tournament") {
            std::istringstream in(text);
            sigma = tournament_factoring_permutation(read_digraph(in, false));
        } else {
            throw InputError("--algo factperm needs --perm (or a tournament input)");
        }
        FactPermOptions fopts;
        fopts.check_invariant = defensive;
        fopts.validate_modules = defensive;
        tree = tree_from_permutation(h, sigma, fopts);
    } else {
        throw InputError("unknown algorithm: " + algo);
    }
    auto t1 = std::chrono::steady_clock::now();

    TreeDocument doc;
    doc.algo = algo;
    doc.input_hash = fnv1a64(text);
    doc.names = default_names(h.size());
    doc.tree = std::move(tree);
    if (timings)
        doc.elapsed_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    std::cout << serialize_tree(doc);
    return 0;
}

int run_check(const std::string& input, const std::string& format) {
    HomogeneousRelation h = load_relation(slurp(input), format);
    std::cout << "n " << h.size() << "\n";
    std::cout << "local-congruence " << (h.size() >= 2 ? local_congruence(h) : 0) << "\n";

    TripleWitness tw;
    bool wg = is_weakly_graphic(h, &tw);
    std::cout << "weakly-graphic " << (wg ? "true" : "false");
    if (!wg) std::cout << "  witness x=" << tw.x << " y=" << tw.y << " z=" << tw.z;
    std::cout << "\n";

    QuadWitness qw;
    bool wd = is_weakly_digraphic(h, &qw);
    std::cout << "weakly-digraphic " << (wd ? "true" : "false");
    if (!wd)
        std::cout << "  witness x=" << qw.x << " y=" << qw.y << " s=" << qw.s
                  << " t=" << qw.t;
    std::cout << "\n";

    auto mq = is_modular_quotient(h);
    std::cout << "modular-quotient " << (mq.ok ? "true" : "false")
              << (mq.exact ? "" : "  (approximate: only smallest modules checked)");
    if (mq.witness)
        std::cout << "  witness module=" << set_to_string(mq.witness->module)
                  << " x=" << mq.witness->x << " y=" << mq.witness->y
                  << " s=" << mq.witness->s << " t=" << mq.witness->t;
    std::cout << "\n";
    return 0;
}

int run_recognize(const std::string& input, const std::string& format,
                  const std::string& out_path) {
    HomogeneousRelation h = load_relation(slurp(input), format);
    auto g = recognize_graphic(h);
    auto t = recognize_tournamental(h);
    std::cout << "graphic " << (g ? "true" : "false") << "\n";
    std::cout << "tournamental " << (t ? "true" : "false") << "\n";
    if (!out_path.empty()) {
        if (!g && !t) throw InputError("nothing to write: relation is neither kind");
        std::ofstream out(out_path);
        if (!out) throw InputError("cannot write " + out_path);
        if (g) write_digraph(out, *g, true);
        else write_digraph(out, *t, false);
    }
    return 0;
}

int run_oracle(const std::string& input, const std::string& format) {
    std::string text = slurp(input);
    HomogeneousRelation h = load_relation(text, format);
    if (h.size() > oracle::kMaxGroundSize)
        throw InputError("oracle refuses ground sets larger than " +
                         std::to_string(oracle::kMaxGroundSize));
    auto rep = oracle::all_modules(h);
    std::cout << "n " << rep.n << "\n";
    std::cout << "modules " << rep.modules.size() << "\n";
    for (uint32_t m : rep.modules)
        std::cout << "  " << set_to_string(oracle::mask_to_set(m)) << "\n";
    std::cout << "strong " << rep.strong.size() << "\n";
    for (uint32_t m : rep.strong)
        std::cout << "  " << set_to_string(oracle::mask_to_set(m)) << "\n";
    TreeDocument doc;
    doc.algo = "oracle";
    doc.input_hash = fnv1a64(text);
    doc.names = default_names(h.size());
    doc.tree = rep.tree;
    std::cout << serialize_tree(doc);
    return 0;
}

int run_gen(const std::string& type, int n, double p, int classes, int colors,
            uint64_t seed) {
    if (type == "graph") {
        write_digraph(std::cout, random_graph(n, p, seed), true);
    } else if (type == "tournament") {
        write_digraph(std::cout, random_tournament(n, seed), false);
    } else if (type == "relation") {
        write_relation(std::cout, random_relation(n, classes, seed));
    } else if (type == "2structure") {
        write_two_structure(std::cout, random_two_structure(n, colors, seed));
    } else {
        throw InputError("unknown generator type: " + type);
    }
    return 0;
}

int run_splitters(const std::string& input, const std::string& format,
                  const std::string& set_csv) {
    HomogeneousRelation h = load_relation(slurp(input), format);
    auto subset = parse_csv_ints(set_csv);
    if (subset.empty()) throw InputError("--set must list at least one element");
    for (int e : subset)
        if (e < 0 || e >= h.size()) throw InputError("--set element out of range");
    auto rep = splitters(h, subset);
    std::cout << "subset " << set_to_string(rep.subset) << "\n";
    std::cout << "splitters " << rep.count << " " << set_to_string(rep.splitters) << "\n";
    std::cout << "module " << (rep.count == 0 ? "true" : "false") << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"modular decomposition toolkit for homogeneous relations"};
    app.require_subcommand(1);

    std::string input = "-";
    std::string format = "relation";
    const std::vector<std::string> formats{"relation", "graph", "digraph", "tournament",
                                           "2structure"};

    auto add_io = [&](CLI::App* sub) {
        sub->add_option("-i,--input", input, "input file, - for stdin");
        sub->add_option("-f,--format", format, "input format")
            ->check(CLI::IsMember(formats));
    };

    auto* dec = app.add_subcommand("decompose", "compute a decomposition tree");
    std::string algo = "good", perm_csv;
    bool defensive = false, timings = false;
    add_io(dec);
    dec->add_option("-a,--algo", algo, "good | strong-enum | factperm")
        ->check(CLI::IsMember({"good", "strong-enum", "factperm"}));
    dec->add_option("--perm", perm_csv, "factoring permutation, comma-separated");
    dec->add_flag("--defensive", defensive, "re-verify internal assumptions");
    dec->add_flag("--timings", timings, "include elapsed time in the output");

    auto* chk = app.add_subcommand("check", "axiom report");
    add_io(chk);

    auto* rec = app.add_subcommand("recognize", "graphic / tournamental recognition");
    std::string out_path;
    add_io(rec);
    rec->add_option("-o,--out", out_path, "write the reconstructed graph here");

    auto* orc = app.add_subcommand("oracle", "brute-force module report (small n)");
    add_io(orc);

    auto* gen = app.add_subcommand("gen", "seeded random test inputs");
    std::string gen_type = "graph";
    int gen_n = 10, gen_classes = 3, gen_colors = 3;
    double gen_p = 0.5;
    uint64_t seed = 1;
    gen->add_option("-t,--type", gen_type, "graph | tournament | relation | 2structure")
        ->check(CLI::IsMember({"graph", "tournament", "relation", "2structure"}));
    gen->add_option("-n", gen_n, "size")->check(CLI::PositiveNumber);
    gen->add_option("-p", gen_p, "edge probability (graph)");
    gen->add_option("--classes", gen_classes, "max classes per row (relation)");
    gen->add_option("--colors", gen_colors, "color count (2structure)");
    gen->add_option("--seed", seed, "random seed");

    auto* spl = app.add_subcommand("splitters", "splitter set of a subset");
    std::string set_csv;
    add_io(spl);
    spl->add_option("--set", set_csv, "subset, comma-separated")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (dec->parsed())
            return run_decompose(input, format, algo, perm_csv, defensive, timings);
        if (chk->parsed()) return run_check(input, format);
        if (rec->parsed()) return run_recognize(input, format, out_path);
        if (orc->parsed()) return run_oracle(input, format);
        if (gen->parsed())
            return run_gen(gen_type, gen_n, gen_p, gen_classes, gen_colors, seed);
        if (spl->parsed()) return run_splitters(input, format, set_csv);
    } catch (const DefensiveCheckError& e) {
        std::cerr << "defensive check failed: " << e.what() << "\n";
        return 3;
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 1;
}
