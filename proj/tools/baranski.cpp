#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "acceptance.hpp"
#include "baranski/automaton.hpp"
#include "baranski/carpet.hpp"
#include "baranski/cross.hpp"
#include "baranski/equivalence.hpp"
#include "baranski/error.hpp"
#include "baranski/geometry.hpp"
#include "baranski/gmap.hpp"
#include "baranski/metric.hpp"
#include "baranski/simplify.hpp"

namespace {

using namespace baranski;
using nlohmann::json;

constexpr int kUsageError = 2;
constexpr int kInputError = 3;
constexpr int kSelftestFailure = 1;

/// One input document: a carpet, a cross automaton or a Σ-automaton.
struct Input {
    std::optional<CarpetSpec> carpet;
    std::optional<CrossAutomaton> cross;
    std::optional<SigmaAutomaton> machine;
};

std::string read_text(const std::string& path) {
    if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
    std::ifstream in(path);
    if (!in) throw Error(Errc::Parse, "cannot read " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

Input load(const std::string& path) {
    const std::string text = read_text(path);
    const auto first = text.find_first_not_of(" \t\r\n");
    Input in;
    if (first != std::string::npos && text[first] == '{') {
        json doc;
        try {
            doc = json::parse(text);
        } catch (const json::exception& e) {
            throw Error(Errc::Parse, path + ": " + e.what());
        }
        if (doc.contains("PH"))
            in.cross = cross_from_json(doc);
        else if (doc.contains("delta"))
            in.machine = automaton_from_json(doc);
        else
            in.carpet = parse_carpet_json(doc);
    } else {
        in.carpet = parse_carpet_grid(text);
    }
    return in;
}

SigmaAutomaton machine_of(const Input& in) {
    if (in.carpet) return build_topology_automaton(*in.carpet, build_oracle(*in.carpet));
    if (in.cross) return in.cross->induced();
    return *in.machine;
}

CrossAutomaton cross_of(const Input& in) {
    if (in.cross) return *in.cross;
    return from_topology_automaton(machine_of(in));
}

CarpetSpec carpet_of(const Input& in, const std::string& path) {
    if (!in.carpet) throw Error(Errc::InvalidArgument, path + " is not a carpet");
    return *in.carpet;
}

void print(const json& doc) { std::cout << doc.dump(2) << '\n'; }

json validation_json(const CrossValidation& v) {
    json doc{{"wellDefined", v.wellDefined},
             {"unique", v.unique},
             {"tripleCodingFree", v.tripleCodingFree},
             {"problems", v.problems}};
    if (v.witness) doc["witness"] = to_json(*v.witness);
    return doc;
}

/// Classification of the automaton read off a carpet or a Σ-automaton; a
/// table that is not of cross shape is reported, not raised.
json class_json(const Input& in) {
    try {
        const auto cross = cross_of(in);
        json doc{{"cross", cross_to_json(cross)}, {"validation", validation_json(validate(cross))}};
        doc["class"] = to_json(classify(cross, in.carpet ? &*in.carpet : nullptr));
        return doc;
    } catch (const Error& e) {
        if (e.code() != Errc::DiagonalStatePresent && e.code() != Errc::InvalidCrossAutomaton) throw;
        return {{"class", {{"class", cross_class_name(CrossClass::Unclassified)},
                           {"reason", e.code() == Errc::DiagonalStatePresent ? "diagonal-state-present"
                                                                              : "not-a-cross-automaton"},
                           {"detail", e.what()}}}};
    }
}

int analyze(const std::string& path) {
    const auto in = load(path);
    json doc;
    if (in.carpet) {
        const auto& spec = *in.carpet;
        json survivors = json::array();
        const auto oracle = build_oracle(spec);
        for (int i = 0; i < OffsetVector::kCount; ++i)
            if (oracle.survives(OffsetVector::from_index(i))) survivors.push_back(OffsetVector::from_index(i).name());
        json blocks = json::array();
        for (const auto& b : h_blocks(spec))
            blocks.push_back({{"row", b.row},
                              {"firstColumn", b.firstColumn},
                              {"lastColumn", b.lastColumn},
                              {"kind", block_kind_name(b.kind)},
                              {"letters", b.letters}});
        doc = {{"carpet", carpet_to_json(spec)},
               {"conditions", to_json(check_conditions(spec))},
               {"profile", to_json(profile(spec))},
               {"blocks", std::move(blocks)},
               {"intersectingOffsets", std::move(survivors)},
               {"holderScale", to_json(holder_scale(spec))}};
        doc.update(class_json(in));
    } else if (in.cross) {
        doc = {{"cross", cross_to_json(*in.cross)},
               {"validation", validation_json(validate(*in.cross))},
               {"class", to_json(classify(*in.cross))}};
    } else {
        json states = json::array();
        for (const auto& s : in.machine->states()) states.push_back(s.name());
        doc = {{"states", std::move(states)}, {"mirrorSymmetric", mirror_check(*in.machine)}};
        doc.update(class_json(in));
    }
    print(doc);
    return 0;
}

int automaton(const std::string& path, const std::string& format, bool show_exit) {
    const auto machine = machine_of(load(path));
    if (format == "json")
        print(automaton_to_json(machine));
    else
        std::cout << to_dot(machine, {show_exit});
    return 0;
}

int simplify(const std::string& path) {
    print(to_json(final_chain(cross_of(load(path)))));
    return 0;
}

int equiv(const std::string& left, const std::string& right, int stem) {
    const auto e = carpet_of(load(left), left), f = carpet_of(load(right), right);
    EquivalenceOptions options;
    options.isometryStemLength = stem;
    print(to_json(decide_equivalence(e, f, options)));
    return 0;
}

int survive(const std::string& path, const std::string& xs, const std::string& ys, std::optional<double> xi) {
    const auto in = load(path);
    const auto machine = machine_of(in);
    const auto x = PeriodicWord::parse(xs), y = PeriodicWord::parse(ys);
    // ξ = r_*^s for a carpet; 1/2 for an automaton given on its own.
    const double scale = xi ? *xi : in.carpet ? holder_scale(*in.carpet).xi : 0.5;
    const auto d = rho(machine, scale, x, y);
    json t = d.derivation.is_infinite() ? json("inf") : json(d.derivation.value());
    print({{"x", x.str()}, {"y", y.str()}, {"T", std::move(t)}, {"xi", scale}, {"rho", d.value}});
    return 0;
}

int gmap(const std::string& ctx_text, const std::string& word) {
    std::vector<Letter> letters;
    std::stringstream ss(ctx_text);
    for (std::string part; std::getline(ss, part, ',');) {
        try {
            letters.push_back(std::stoi(part));
        } catch (const std::exception&) {
            throw Error(Errc::Parse, "bad context letter '" + part + "'");
        }
    }
    if (letters.size() != 4) throw Error(Errc::Parse, "--ctx needs four letters: gamma,lambda,kappa,tau");
    const auto ctx = GContext::make(letters[0], letters[1], letters[2], letters[3]);
    const auto x = OmegaWord::from_periodic(PeriodicWord::parse(word), ctx.kappa);
    print({{"context", {{"gamma", ctx.gamma}, {"lambda", ctx.lambda}, {"kappa", ctx.kappa}, {"tau", ctx.tau}}},
           {"x", x.str()},
           {"g", g_apply(ctx, x).str()},
           {"h", h_apply(ctx, x).str()},
           {"mDecomposition", to_json(m_decompose(ctx, x))},
           {"mPrimeDecomposition", to_json(m_prime_decompose(ctx, x))}});
    return 0;
}

int render(const std::string& path, int depth, const std::string& out, const SvgOptions& options) {
    const auto svg = render_svg(carpet_of(load(path), path), depth, options);
    if (out.empty() || out == "-") {
        std::cout << svg;
    } else {
        std::ofstream file(out);
        if (!file) throw Error(Errc::InvalidArgument, "cannot write " + out);
        file << svg;
    }
    return 0;
}

int selftest(std::uint64_t seed, const std::vector<int>& only) {
    bool ok = true;
    for (int id = 1; id <= 11; ++id) {
        if (!only.empty() && std::find(only.begin(), only.end(), id) == only.end()) continue;
        const auto r = testing::run_criterion(id, seed);
        std::cout << testing::format_result(r) << std::endl;
        ok = ok && r.pass;
    }
    return ok ? 0 : kSelftestFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Topology automata, simplification and equivalence certificates for Baranski carpets"};
    app.require_subcommand(1);

    std::string input, second, xs, ys, format = "dot", ctx, word, out;
    bool show_exit = false;
    int stem = 5, depth = 3;
    std::optional<double> xi;
    std::uint64_t seed = testing::kDefaultSeed;
    std::vector<int> only;
    SvgOptions svg;

    const char* input_help = "carpet JSON/grid, cross JSON or automaton JSON file ('-' for stdin)";
    auto* cmd_analyze = app.add_subcommand("analyze", "conditions, H-block profile and classification");
    cmd_analyze->add_option("input", input, input_help)->required();

    auto* cmd_automaton = app.add_subcommand("automaton", "topology or induced automaton as DOT or JSON");
    cmd_automaton->add_option("input", input, input_help)->required();
    cmd_automaton->add_option("--format", format, "dot or json")->check(CLI::IsMember({"dot", "json"}));
    cmd_automaton->add_flag("--show-exit", show_exit, "draw transitions into Exit");

    auto* cmd_simplify = app.add_subcommand("simplify", "final simplification chain as JSON");
    cmd_simplify->add_option("input", input, input_help)->required();

    auto* cmd_equiv = app.add_subcommand("equiv", "equivalence verdict for two carpets");
    cmd_equiv->add_option("left", input, "first carpet")->required();
    cmd_equiv->add_option("right", second, "second carpet")->required();
    cmd_equiv->add_option("--stem", stem, "stem length of the exhaustive isometry check")
        ->check(CLI::Range(0, 12));

    auto* cmd_survive = app.add_subcommand("survive", "surviving time and pseudo-distance of two words");
    cmd_survive->add_option("input", input, input_help)->required();
    cmd_survive->add_option("x", xs, "word, e.g. 1.2(3)")->required();
    cmd_survive->add_option("y", ys, "word")->required();
    cmd_survive->add_option("--xi", xi, "base of the pseudo-distance, 0 < xi < 1");

    auto* cmd_gmap = app.add_subcommand("gmap", "symbolic map g, its inverse and the decompositions");
    cmd_gmap->add_option("--ctx", ctx, "gamma,lambda,kappa,tau")->required();
    cmd_gmap->add_option("word", word, "word ending in kappa^inf, e.g. 4.1.1(3)")->required();

    auto* cmd_render = app.add_subcommand("render", "SVG of the level-k cylinders");
    cmd_render->add_option("input", input, "carpet JSON or grid")->required();
    cmd_render->add_option("--depth", depth, "level")->check(CLI::Range(0, 16));
    cmd_render->add_option("--out", out, "output file (stdout if omitted)");
    cmd_render->add_option("--fill", svg.fill, "fill colour");
    cmd_render->add_option("--pixels", svg.pixels, "image size")->check(CLI::Range(1, 100000));
    cmd_render->add_option("--cap", svg.cap, "maximum number of rectangles");

    auto* cmd_selftest = app.add_subcommand("selftest", "run the acceptance criteria");
    cmd_selftest->add_option("--seed", seed, "seed of the randomized criteria");
    cmd_selftest->add_option("--criterion", only, "run only these criteria (1-11)")->check(CLI::Range(1, 11));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kUsageError;
    }

    try {
        if (*cmd_analyze) return analyze(input);
        if (*cmd_automaton) return automaton(input, format, show_exit);
        if (*cmd_simplify) return simplify(input);
        if (*cmd_equiv) return equiv(input, second, stem);
        if (*cmd_survive) return survive(input, xs, ys, xi);
        if (*cmd_gmap) return gmap(ctx, word);
        if (*cmd_render) return render(input, depth, out, svg);
        if (*cmd_selftest) return selftest(seed, only);
    } catch (const Error& e) {
        std::cerr << "error [" << errc_name(e.code()) << "]: " << e.what() << '\n';
        return kInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInputError;
    }
    return kUsageError;
}
