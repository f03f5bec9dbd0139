#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sp/codec.hpp"
#include "sp/json_io.hpp"
#include "sp/render.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitQueryFailure = 1;
constexpr int kExitUsage = 2;

struct Options {
    std::string kb_path;
    std::string new_symbols;
    std::string new_file;
    std::string msa_file;
    std::string costs = "uniform";
    sp::SearchParams params;
    int top = 1;
    unsigned seed = 0;
    bool json = false;
};

std::vector<std::string> split_symbols(const std::string& text) {
    std::istringstream in(text);
    std::vector<std::string> out;
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

void add_search_flags(CLI::App* cmd, Options& opt) {
    cmd->add_option("--costs", opt.costs, "Cost mode: uniform or frequency")
        ->check(CLI::IsMember({"uniform", "frequency"}))
        ->capture_default_str();
    cmd->add_option("--beam", opt.params.beam_width, "Beam width")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd->add_option("--iters", opt.params.max_iterations, "Maximum search iterations")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd->add_option("--kpair", opt.params.k_pairwise,
                    "Matchings kept per pattern and driving sequence")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd->add_flag("--exhaustive", opt.params.exhaustive,
                  "Disable beam trimming and matchset truncation (small inputs only)");
    cmd->add_option("--workers", opt.params.workers, "Worker threads")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd->add_option("--seed", opt.seed,
                    "Reserved; all current algorithms are deterministic");
    cmd->add_flag("--json", opt.json, "Machine-readable output");
}

void add_query_flags(CLI::App* cmd, Options& opt) {
    cmd->add_option("--kb", opt.kb_path, "Knowledge-base file")->required();
    cmd->add_option("--new", opt.new_symbols, "New pattern as quoted symbols");
    cmd->add_option("--new-file", opt.new_file,
                    "File containing a NEW line with the New pattern");
    add_search_flags(cmd, opt);
}

sp::Pattern resolve_new(const Options& opt, const sp::KbFile& kb_file) {
    if (!opt.new_symbols.empty())
        return sp::make_new_pattern(split_symbols(opt.new_symbols));
    if (!opt.new_file.empty()) {
        auto file = sp::load_kb_file(opt.new_file);
        if (!file.new_pattern)
            throw std::invalid_argument("'" + opt.new_file + "' has no NEW line");
        return *file.new_pattern;
    }
    if (kb_file.new_pattern) return *kb_file.new_pattern;
    throw std::invalid_argument("a New pattern is required (--new or --new-file)");
}

sp::CostMode cost_mode(const Options& opt) {
    return opt.costs == "frequency" ? sp::CostMode::Frequency : sp::CostMode::Uniform;
}

std::string fmt_bits(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

void print_candidate_text(std::size_t index, const sp::Candidate& cand,
                          double probability) {
    std::cout << "candidate " << index + 1 << ": cd=" << fmt_bits(cand.score.cd)
              << " b_new=" << fmt_bits(cand.score.b_new)
              << " b_code=" << fmt_bits(cand.score.b_code)
              << " p=" << fmt_bits(probability) << "\n";
    std::cout << sp::render(cand.alignment).text();
    const auto code = sp::extract_code(cand.alignment);
    if (!code.symbols.empty()) {
        std::cout << "code:";
        for (const auto& s : code.symbols) std::cout << ' ' << s;
        std::cout << "\n";
    }
}

std::vector<sp::Candidate> trim_top(std::vector<sp::Candidate> candidates, int top) {
    if (candidates.size() > static_cast<std::size_t>(top))
        candidates.resize(static_cast<std::size_t>(top));
    return candidates;
}

int run_align(const Options& opt) {
    const auto kb_file = sp::load_kb_file(opt.kb_path);
    const auto new_pattern = resolve_new(opt, kb_file);
    const auto costs = sp::derive_costs(kb_file.kb, cost_mode(opt));
    auto candidates = sp::build_alignments(new_pattern, kb_file.kb, costs, opt.params);

    const bool baseline_only = candidates.front().alignment.rows.size() < 2;
    auto shown = trim_top(std::move(candidates), opt.top);

    if (opt.json) {
        nlohmann::ordered_json j;
        j["params"] = sp::params_json("align", opt.kb_path, opt.new_symbols,
                                      opt.costs, opt.params, opt.top, opt.seed);
        j["candidates"] = sp::candidates_json(shown);
        std::cout << sp::dump_json(j);
    } else {
        std::vector<sp::ScoreBreakdown> breakdowns;
        for (const auto& c : shown) breakdowns.push_back(c.score);
        const auto probabilities = sp::relative_probabilities(breakdowns);
        std::cout << "probabilities normalized over the " << shown.size()
                  << " candidate(s) listed\n";
        for (std::size_t i = 0; i < shown.size(); ++i)
            print_candidate_text(i, shown[i], probabilities[i]);
    }
    if (baseline_only) {
        std::cerr << "no compression achieved: only the New-only baseline\n";
        return kExitQueryFailure;
    }
    return kExitOk;
}

int run_encode(const Options& opt) {
    const auto kb_file = sp::load_kb_file(opt.kb_path);
    const auto new_pattern = resolve_new(opt, kb_file);
    const auto costs = sp::derive_costs(kb_file.kb, cost_mode(opt));
    const auto result = sp::encode(new_pattern, kb_file.kb, costs, opt.params);

    if (opt.json) {
        nlohmann::ordered_json j;
        j["params"] = sp::params_json("encode", opt.kb_path, opt.new_symbols,
                                      opt.costs, opt.params, opt.top, opt.seed);
        j["candidates"] = sp::candidates_json({{result.alignment, result.score}});
        j["residue"] = result.residue;
        j["compressed"] = result.compressed;
        std::cout << sp::dump_json(j);
    } else {
        std::cout << "code:";
        for (const auto& s : result.code.symbols) std::cout << ' ' << s;
        std::cout << "\nsource:";
        for (const auto& s : result.code.source) std::cout << ' ' << s;
        std::cout << "\n";
        if (!result.residue.empty()) {
            std::cout << "residue:";
            for (const auto& s : result.residue) std::cout << ' ' << s;
            std::cout << "\n";
        }
        std::cout << "cd=" << fmt_bits(result.score.cd)
                  << " b_new=" << fmt_bits(result.score.b_new)
                  << " b_code=" << fmt_bits(result.score.b_code) << "\n";
    }
    if (!result.compressed) {
        std::cerr << "no compression achieved\n";
        return kExitQueryFailure;
    }
    return kExitOk;
}

int run_decode(const Options& opt) {
    const auto kb_file = sp::load_kb_file(opt.kb_path);
    std::vector<std::string> code;
    if (!opt.new_symbols.empty()) {
        code = split_symbols(opt.new_symbols);
    } else {
        const auto pattern = resolve_new(opt, kb_file);
        code = pattern.names();
    }
    const auto costs = sp::derive_costs(kb_file.kb, cost_mode(opt));
    const auto result = sp::decode(code, kb_file.kb, costs, opt.params);

    if (opt.json) {
        nlohmann::ordered_json j;
        j["params"] = sp::params_json("decode", opt.kb_path, opt.new_symbols,
                                      opt.costs, opt.params, opt.top, opt.seed);
        j["candidates"] = result.matched
                              ? sp::candidates_json({{result.alignment, result.score}})
                              : nlohmann::ordered_json::array();
        j["decoded"] = result.symbols;
        j["matched"] = result.matched;
        std::cout << sp::dump_json(j);
    } else {
        for (std::size_t i = 0; i < result.symbols.size(); ++i)
            std::cout << (i ? " " : "") << result.symbols[i];
        std::cout << "\n";
    }
    if (!result.matched) {
        std::cerr << "code matched nothing\n";
        return kExitQueryFailure;
    }
    return kExitOk;
}

int run_recognize(const Options& opt) {
    const auto kb_file = sp::load_kb_file(opt.kb_path);
    const auto new_pattern = resolve_new(opt, kb_file);
    const auto costs = sp::derive_costs(kb_file.kb, cost_mode(opt));
    const auto recognitions =
        sp::recognize(new_pattern, kb_file.kb, costs, opt.params,
                      static_cast<std::size_t>(opt.top));

    if (opt.json) {
        nlohmann::ordered_json j;
        j["params"] = sp::params_json("recognize", opt.kb_path, opt.new_symbols,
                                      opt.costs, opt.params, opt.top, opt.seed);
        std::vector<sp::Candidate> cands;
        for (const auto& r : recognitions) cands.push_back({r.alignment, r.score});
        j["candidates"] = sp::candidates_json(cands);
        j["recognitions"] = nlohmann::ordered_json::array();
        for (const auto& r : recognitions) {
            nlohmann::ordered_json rec;
            rec["pattern_ids"] = r.pattern_ids;
            rec["cd"] = r.cd;
            rec["probability"] = r.probability;
            j["recognitions"].push_back(std::move(rec));
        }
        std::cout << sp::dump_json(j);
    } else {
        std::cout << "probabilities normalized over the " << recognitions.size()
                  << " recognition(s) listed\n";
        for (std::size_t i = 0; i < recognitions.size(); ++i) {
            const auto& r = recognitions[i];
            std::cout << i + 1 << ". [";
            for (std::size_t k = 0; k < r.pattern_ids.size(); ++k)
                std::cout << (k ? " " : "") << r.pattern_ids[k];
            std::cout << "] cd=" << fmt_bits(r.cd) << " p=" << fmt_bits(r.probability)
                      << "\n";
        }
    }
    if (recognitions.empty()) {
        std::cerr << "nothing recognized beyond the baseline\n";
        return kExitQueryFailure;
    }
    return kExitOk;
}

int run_complete(const Options& opt) {
    const auto kb_file = sp::load_kb_file(opt.kb_path);
    const auto new_pattern = resolve_new(opt, kb_file);
    const auto costs = sp::derive_costs(kb_file.kb, cost_mode(opt));
    auto completions = sp::complete(new_pattern, kb_file.kb, costs, opt.params);
    if (completions.size() > static_cast<std::size_t>(opt.top))
        completions.resize(static_cast<std::size_t>(opt.top));

    // Renormalize over the displayed set.
    std::vector<sp::ScoreBreakdown> breakdowns;
    for (const auto& c : completions) breakdowns.push_back(c.score);
    const auto probabilities = sp::relative_probabilities(breakdowns);

    if (opt.json) {
        nlohmann::ordered_json j;
        j["params"] = sp::params_json("complete", opt.kb_path, opt.new_symbols,
                                      opt.costs, opt.params, opt.top, opt.seed);
        std::vector<sp::Candidate> cands;
        for (const auto& c : completions) cands.push_back({c.alignment, c.score});
        j["candidates"] = sp::candidates_json(cands);
        j["completions"] = nlohmann::ordered_json::array();
        for (std::size_t i = 0; i < completions.size(); ++i) {
            nlohmann::ordered_json comp;
            comp["projected"] = completions[i].projected;
            comp["inferred"] = completions[i].inferred;
            comp["probability"] = probabilities[i];
            j["completions"].push_back(std::move(comp));
        }
        std::cout << sp::dump_json(j);
    } else {
        std::cout << "probabilities normalized over the " << completions.size()
                  << " completion(s) listed\n";
        for (std::size_t i = 0; i < completions.size(); ++i) {
            const auto& c = completions[i];
            std::cout << "completion " << i + 1 << ": cd=" << fmt_bits(c.score.cd)
                      << " p=" << fmt_bits(probabilities[i]) << "\n";
            std::cout << "projection:";
            for (const auto& s : c.projected) std::cout << ' ' << s;
            std::cout << "\ninferred:";
            for (const auto& s : c.inferred) std::cout << ' ' << s;
            std::cout << "\n";
        }
    }
    return kExitOk;
}

int run_msa(const Options& opt) {
    const auto file = sp::load_kb_file(opt.msa_file);
    const auto& sequences = file.kb.patterns();
    const auto costs = sp::derive_costs(file.kb, cost_mode(opt));
    const auto result =
        sp::msa(std::vector<sp::Pattern>(sequences.begin(), sequences.end()), costs,
                opt.params);

    if (opt.json) {
        nlohmann::ordered_json j;
        j["params"] = sp::params_json("msa", opt.msa_file, "", opt.costs, opt.params,
                                      opt.top, opt.seed);
        const auto sb = sp::compression_difference(result.alignment, costs);
        j["candidates"] = sp::candidates_json({{result.alignment, sb}});
        j["msa_score"] = result.score;
        std::cout << sp::dump_json(j);
    } else {
        std::cout << sp::render(result.alignment).text();
        std::cout << "score: " << fmt_bits(result.score) << "\n";
    }
    return kExitOk;
}

int run_validate(const Options& opt) {
    try {
        const auto file = sp::load_kb_file(opt.kb_path);
        std::cout << "ok: " << file.kb.size() << " pattern(s), "
                  << file.kb.alphabet().size() << " distinct symbol(s)";
        if (file.new_pattern)
            std::cout << ", NEW pattern of " << file.new_pattern->symbols.size()
                      << " symbol(s)";
        std::cout << "\n";
        return kExitOk;
    } catch (const sp::ParseError& e) {
        std::cerr << opt.kb_path << ": " << e.what() << "\n";
        return kExitQueryFailure;
    } catch (const std::invalid_argument& e) {
        std::cerr << opt.kb_path << ": " << e.what() << "\n";
        return kExitQueryFailure;
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"SP multiple-alignment tool: parse, recognize, infer, and "
                 "encode/decode with pattern knowledge bases"};
    app.require_subcommand(1);

    Options opt;
    auto* align = app.add_subcommand("align", "Build and rank multiple alignments");
    add_query_flags(align, opt);
    align->add_option("--top", opt.top, "Candidates to list")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();

    auto* encode = app.add_subcommand("encode", "Encode New as a compact code");
    add_query_flags(encode, opt);

    auto* decode = app.add_subcommand("decode", "Decode a code back to contents");
    add_query_flags(decode, opt);

    auto* recognize = app.add_subcommand("recognize", "Rank matching pattern sets");
    add_query_flags(recognize, opt);
    recognize->add_option("--top", opt.top, "Recognitions to list")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();

    auto* complete = app.add_subcommand("complete", "Infer missing symbols");
    add_query_flags(complete, opt);
    complete->add_option("--top", opt.top, "Completions to list")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();

    auto* msa = app.add_subcommand("msa", "Align plain sequences from a file");
    msa->add_option("--file", opt.msa_file, "File of sequences (pattern lines)")
        ->required();
    add_search_flags(msa, opt);

    auto* validate = app.add_subcommand("validate", "Check a knowledge-base file");
    validate->add_option("--kb", opt.kb_path, "Knowledge-base file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (app.got_subcommand(align)) return run_align(opt);
        if (app.got_subcommand(encode)) return run_encode(opt);
        if (app.got_subcommand(decode)) return run_decode(opt);
        if (app.got_subcommand(recognize)) return run_recognize(opt);
        if (app.got_subcommand(complete)) return run_complete(opt);
        if (app.got_subcommand(msa)) return run_msa(opt);
        if (app.got_subcommand(validate)) return run_validate(opt);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
