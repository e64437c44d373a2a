#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "rado/characterizations.hpp"
#include "rado/equations.hpp"
#include "rado/harness.hpp"
#include "rado/json_io.hpp"
#include "rado/mtsystems.hpp"
#include "rado/solver.hpp"
#include "rado/strings.hpp"

namespace {

using namespace rado;

constexpr int kExitOk = 0;
constexpr int kExitDisagreement = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIndeterminate = 3;

void emit(const Json& j) { std::cout << j.dump() << "\n"; }

ZString parse_zstring_arg(const std::string& text) {
    Json j = Json::parse(text, nullptr, /*allow_exceptions=*/false);
    if (j.is_discarded()) throw ParseError("malformed JSON string: " + text);
    return zstring_from_json(j);
}

// The CLI is lenient about non-reduced sigma: it reduces and says so on
// stderr. The library layer itself is strict.
ReducedString sigma_arg(const std::string& text) {
    ZString raw = parse_zstring_arg(text);
    if (!is_reduced(raw)) {
        ReducedString r = reduce(raw);
        std::cerr << "note: sigma was not reduced; using " << zstring_to_json(r.entries()).dump()
                  << "\n";
        return r;
    }
    return ReducedString(std::move(raw));
}

SignPolicy sign_policy_arg(const std::string& name) {
    if (name == "positive") return SignPolicy::AllPositive;
    if (name == "alternating") return SignPolicy::Alternating;
    if (name == "random") return SignPolicy::SeededRandom;
    throw ParseError("unknown sign policy: " + name);
}

Coloring coloring_arg(const std::string& spec, Int N) {
    if (spec.rfind("random:", 0) == 0) {
        auto rest = spec.substr(7);
        auto colon = rest.find(':');
        if (colon == std::string::npos) throw ParseError("expected random:<r>:<seed>");
        int r = std::stoi(rest.substr(0, colon));
        std::uint64_t seed = std::stoull(rest.substr(colon + 1));
        return Coloring::random(N, r, seed);
    }
    std::ifstream in(spec);
    if (!in) throw ParseError("cannot open coloring file: " + spec);
    Json j = Json::parse(in, nullptr, /*allow_exceptions=*/false);
    if (j.is_discarded()) throw ParseError("malformed coloring file: " + spec);
    Coloring c;
    c.N = j.at("N").get<Int>();
    c.r = j.at("r").get<int>();
    for (auto& [key, val] : j.at("colors").items()) c.colors[std::stoll(key)] = val.get<int>();
    for (Int v = -c.N; v <= c.N; ++v)
        if (v != 0 && !c.colors.count(v))
            throw ParseError("coloring file missing value " + std::to_string(v));
    return c;
}

int run_fastpath(const LinearEquation& eq, const ReducedString& sigma) {
    const ReducedString one(ZString{1});
    Json out;
    if (sigma == one) {
        out["method"] = "fastpath-sigma1";
        out["question"] = "solution in class of (1)";
        out["solvable"] = sigma_one_criterion(eq);
        emit(out);
        return kExitOk;
    }
    if (eq.arity() == 3) {
        auto cls = classify_three_var(eq);
        if (cls.kind == ThreeVarKind::TripleSumZero) {
            out["method"] = "fastpath-3var";
            out["question"] = "injective solution (constant solutions always exist)";
            out["solvable"] = three_var_sum_zero_injective(eq, sigma);
            if (auto h = reduce_to_adjacent_pair(eq, sigma)) out["adjacent_pair_index"] = *h;
            emit(out);
            return kExitOk;
        }
        if (cls.kind == ThreeVarKind::PairSumZero) {
            // canonicalize to c(x1 - x2) + d*x3
            std::size_t p = cls.detail[0] - 1, q = cls.detail[1] - 1;
            std::size_t rest = 3 - p - q;
            Int c = eq.at(p), d = eq.at(rest);
            Int g = gcd_abs(c, d);
            out["method"] = "fastpath-schur";
            out["question"] = "solvable in every nonempty reduced class (true) or none (false)";
            out["permutation"] = {p + 1, q + 1, rest + 1};
            out["normalized"] = {{"c", c / g}, {"d", d / g}, {"gcd", g}};
            out["solvable"] = schur_only_test(c / g, d / g);
            emit(out);
            return kExitOk;
        }
    }
    std::cerr << "error: no fast path applies to this equation/sigma\n";
    return kExitUsage;
}

int main_impl(int argc, char** argv) {
    CLI::App app{"Decision engine for solvability of Rado equations in string coherence classes"};
    app.require_subcommand(1);

    std::string arg_s, arg_t, arg_eq, arg_sigma, arg_colors, arg_seq, arg_rows, arg_signs = "positive";
    bool injective = false, oracle_check = false;
    std::uint64_t max_states = SolverLimits{}.max_states;
    std::uint64_t seed = 0, trials = 200;
    Int mt_M = 1, color_N = 0;
    std::size_t mt_len = 1, mt_max_index = 0, mt_max_block = 1;

    auto* cmd_reduce = app.add_subcommand("reduce", "Canonical form of a string");
    cmd_reduce->add_option("string", arg_s, "JSON array of integers")->required();

    auto* cmd_equiv = app.add_subcommand("equiv", "Are two strings coherent?");
    cmd_equiv->add_option("s", arg_s)->required();
    cmd_equiv->add_option("t", arg_t)->required();

    auto* cmd_classify = app.add_subcommand("classify", "Rado classification of an equation");
    cmd_classify->add_option("equation", arg_eq)->required();

    auto* cmd_solve = app.add_subcommand("solve", "Decide solvability in the class of sigma");
    cmd_solve->add_option("equation", arg_eq)->required();
    cmd_solve->add_option("sigma", arg_sigma)->required();
    cmd_solve->add_flag("--injective", injective);
    cmd_solve->add_option("--max-states", max_states);
    cmd_solve->add_flag("--oracle-check", oracle_check);

    auto* cmd_fastpath = app.add_subcommand("fastpath", "Closed-form verdict where one applies");
    cmd_fastpath->add_option("equation", arg_eq)->required();
    cmd_fastpath->add_option("sigma", arg_sigma)->required();

    auto* cmd_mt = app.add_subcommand("mt", "Milliken-Taylor system operations");
    cmd_mt->require_subcommand(1);
    auto* mt_gen = cmd_mt->add_subcommand("gen", "Generate a sparse sequence");
    mt_gen->add_option("--M", mt_M, "Sparsity constant")->required();
    mt_gen->add_option("--length", mt_len)->required();
    mt_gen->add_option("--seed", seed)->required();
    mt_gen->add_option("--signs", arg_signs, "positive|alternating|random");
    auto* mt_enum = cmd_mt->add_subcommand("enum", "Enumerate MT elements");
    mt_enum->add_option("sigma", arg_sigma)->required();
    mt_enum->add_option("seq", arg_seq, "Sequence JSON {\"M\":..,\"values\":[..]}")->required();
    mt_enum->add_option("--max-index", mt_max_index)->required();
    mt_enum->add_option("--max-block-size", mt_max_block)->required();
    auto* mt_inst = cmd_mt->add_subcommand("instantiate", "Instantiate a witness into integers");
    mt_inst->add_option("rows", arg_rows, "Witness rows as JSON array of arrays")->required();
    mt_inst->add_option("equation", arg_eq)->required();
    mt_inst->add_option("sigma", arg_sigma)->required();
    mt_inst->add_option("seq", arg_seq)->required();

    auto* cmd_color = app.add_subcommand("color-check", "Monochromatic solution evidence");
    cmd_color->add_option("equation", arg_eq)->required();
    cmd_color->add_option("--N", color_N)->required();
    cmd_color->add_option("--colors", arg_colors, "file or random:<r>:<seed>")->required();

    auto* cmd_xval = app.add_subcommand("cross-validate", "Randomized agreement suites");
    cmd_xval->add_option("--trials", trials);
    cmd_xval->add_option("--seed", seed)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    if (cmd_reduce->parsed()) {
        emit(zstring_to_json(reduce(parse_zstring_arg(arg_s)).entries()));
        return kExitOk;
    }
    if (cmd_equiv->parsed()) {
        emit(Json{{"equivalent", are_equivalent(parse_zstring_arg(arg_s), parse_zstring_arg(arg_t))}});
        return kExitOk;
    }
    if (cmd_classify->parsed()) {
        auto eq = equation_from_text_or_json(arg_eq);
        auto rado = is_rado(eq);
        Json out{{"coefficients", eq.coefficients()}, {"rado", rado.regular}};
        if (rado.regular) out["witness"] = rado.witness;
        if (eq.arity() == 3) {
            auto cls = classify_three_var(eq);
            const char* kind = cls.kind == ThreeVarKind::TripleSumZero ? "TRIPLE_SUM_ZERO"
                               : cls.kind == ThreeVarKind::PairSumZero ? "PAIR_SUM_ZERO"
                                                                       : "NOT_RADO";
            out["three_var"] = Json{{"kind", kind}, {"detail", cls.detail}};
        }
        emit(out);
        return kExitOk;
    }
    if (cmd_solve->parsed()) {
        auto eq = equation_from_text_or_json(arg_eq);
        auto sigma = sigma_arg(arg_sigma);
        auto verdict = solve_in_class(eq, sigma, injective, SolverLimits{max_states});
        Json out = verdict_to_json(verdict);
        bool disagreement = false;
        if (oracle_check) {
            bool small = eq.arity() <= 4 && sigma.size() <= 2 &&
                         (verdict.status != SolveStatus::Sat || verdict.witness->row_count() <= 4);
            if (small && verdict.status != SolveStatus::Indeterminate) {
                int bound = verdict.status == SolveStatus::Sat
                                ? static_cast<int>(verdict.witness->row_count())
                                : 3;
                auto oracle = brute_force_oracle(eq, sigma, injective, bound);
                bool agree = (oracle.status == OracleStatus::Sat) ==
                             (verdict.status == SolveStatus::Sat);
                out["oracle"] = Json{
                    {"status", oracle.status == OracleStatus::Sat ? "sat" : "unsat-up-to-bound"},
                    {"max_rows", bound},
                    {"agrees", agree}};
                disagreement = !agree;
            } else {
                out["oracle"] = "skipped (instance too large)";
            }
        }
        emit(out);
        if (verdict.status == SolveStatus::Indeterminate) return kExitIndeterminate;
        return disagreement ? kExitDisagreement : kExitOk;
    }
    if (cmd_fastpath->parsed())
        return run_fastpath(equation_from_text_or_json(arg_eq), sigma_arg(arg_sigma));
    if (mt_gen->parsed()) {
        emit(sequence_to_json(gen_sparse_sequence(mt_M, mt_len, seed, sign_policy_arg(arg_signs))));
        return kExitOk;
    }
    if (mt_enum->parsed()) {
        auto sigma = sigma_arg(arg_sigma);
        auto seq = sequence_from_json(Json::parse(arg_seq));
        Json out = Json::array();
        for (const auto& e : mt_enumerate(sigma, seq, mt_max_index, mt_max_block))
            out.push_back(mt_element_to_json(e));
        emit(out);
        return kExitOk;
    }
    if (mt_inst->parsed()) {
        auto M = witness_from_json(Json::parse(arg_rows));
        auto eq = equation_from_text_or_json(arg_eq);
        auto sigma = sigma_arg(arg_sigma);
        auto seq = sequence_from_json(Json::parse(arg_seq));
        emit(Json{{"values", instantiate_witness(M, eq, sigma, seq)}});
        return kExitOk;
    }
    if (cmd_color->parsed()) {
        auto eq = equation_from_text_or_json(arg_eq);
        auto coloring = coloring_arg(arg_colors, color_N);
        auto found = color_check(eq, coloring);
        Json out{{"N", coloring.N}, {"r", coloring.r}, {"found", found.has_value()}};
        if (found) out["solution"] = *found;
        emit(out);
        return kExitOk;
    }
    if (cmd_xval->parsed()) {
        auto report = cross_validate(trials, seed);
        Json out{{"trials_per_suite", trials},
                 {"trials_run", report.trials_run},
                 {"disagreements", report.disagreements},
                 {"failures", report.failures}};
        emit(out);
        return report.disagreements == 0 ? kExitOk : kExitDisagreement;
    }
    return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return main_impl(argc, argv);
    } catch (const rado::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
