// Command-line front end: parse term sets, run the analyses, render
// diagrams, emit machine-readable reports.
//
// Exit codes: 0 success / positive answer, 1 negative mathematical
// answer (incomplete set, no ordering), 2 parse or usage error,
// 3 admissibility error, 4 resource cap exceeded, 5 internal invariant
// violation.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "barcode/barcode.hpp"
#include "barcode/errors.hpp"
#include "barcode/generate.hpp"
#include "barcode/janet.hpp"
#include "barcode/json_io.hpp"
#include "barcode/render.hpp"
#include "barcode/search.hpp"
#include "barcode/term.hpp"
#include "barcode/text.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitParse = 2;
constexpr int kExitAdmissibility = 3;
constexpr int kExitCap = 4;
constexpr int kExitInvariant = 5;

struct InputOptions {
    std::string path;
    std::string inline_terms;
    int vars = 0;  // 0 = infer
    std::string order = "identity";
    std::string format = "text";
    std::string output;
};

void add_input_options(CLI::App* cmd, InputOptions& opt, bool with_order = true) {
    cmd->add_option("input", opt.path, "term file, one term per line ('-' for stdin)");
    cmd->add_option("--inline", opt.inline_terms,
                    "terms inline, separated by commas or semicolons");
    cmd->add_option("--vars", opt.vars, "ambient variable count (default: inferred)");
    if (with_order)
        cmd->add_option("--order", opt.order,
                        "variable ordering, 'identity' or e.g. x1<x2<x4<x3");
}

std::string read_input_text(const InputOptions& opt) {
    if (!opt.inline_terms.empty()) {
        std::string text = opt.inline_terms;
        for (char& c : text)
            if (c == ',' || c == ';') c = '\n';
        return text;
    }
    if (opt.path.empty())
        throw barcode::ParseError("no input: pass a file path or --inline");
    if (opt.path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(opt.path);
    if (!in) throw barcode::ParseError("cannot open " + opt.path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

barcode::TermSet load_terms(const InputOptions& opt) {
    std::optional<int> vars;
    if (opt.vars > 0) vars = opt.vars;
    return barcode::parse_term_set(read_input_text(opt), vars);
}

barcode::VariableOrdering load_ordering(const InputOptions& opt, int vars) {
    return barcode::parse_ordering(opt.order, vars);
}

void emit(const InputOptions& opt, const std::string& text) {
    if (opt.output.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(opt.output);
    if (!out) throw barcode::Error("cannot write " + opt.output);
    out << text;
}

std::string witness_table(const barcode::CompletenessReport& rep) {
    std::string out;
    for (const auto& w : rep.witnesses) {
        out += barcode::to_string(w.term) + " * " + barcode::var_name(w.var) + " -> ";
        out += w.divisor ? barcode::to_string(*w.divisor) : "NONE";
        out += "\n";
    }
    return out;
}

int run_render(const InputOptions& opt) {
    const barcode::TermSet M = load_terms(opt);
    const barcode::BarCode b = barcode::BarCode::build(M, load_ordering(opt, M.vars()));
    if (opt.format == "svg")
        emit(opt, barcode::svg_diagram(b));
    else if (opt.format == "json")
        emit(opt, barcode::to_json(b).dump(2) + "\n");
    else
        emit(opt, barcode::ascii_diagram(b));
    return kExitOk;
}

int run_check(const InputOptions& opt, bool verify) {
    const barcode::TermSet M = load_terms(opt);
    const barcode::VariableOrdering ord = load_ordering(opt, M.vars());
    const barcode::CompletenessReport rep = barcode::is_complete_barcode(M, ord);
    if (verify) {
        const barcode::CompletenessReport oracle = barcode::is_complete_definition(M, ord);
        if (oracle.complete != rep.complete || oracle.witnesses.size() != rep.witnesses.size())
            throw barcode::InvariantViolation(
                "bar code completeness disagrees with the definition");
        for (size_t i = 0; i < rep.witnesses.size(); ++i) {
            const auto& a = rep.witnesses[i];
            const auto& b = oracle.witnesses[i];
            if (!(a.term == b.term) || a.var != b.var || a.divisor != b.divisor)
                throw barcode::InvariantViolation(
                    "bar code witness table disagrees with the definition");
        }
    }
    if (opt.format == "json") {
        emit(opt, barcode::to_json(rep).dump(2) + "\n");
    } else {
        std::string out = rep.complete ? "complete\n" : "incomplete\n";
        out += witness_table(rep);
        if (rep.first_failure)
            out += "first failure: (" + barcode::to_string(rep.first_failure->first) + ", " +
                   barcode::var_name(rep.first_failure->second) + ")\n";
        emit(opt, out);
    }
    return rep.complete ? kExitOk : kExitNegative;
}

int run_decompose(const InputOptions& opt) {
    const barcode::TermSet M = load_terms(opt);
    const barcode::JanetDecomposition dec =
        barcode::mult_vars_barcode(M, load_ordering(opt, M.vars()));
    if (opt.format == "json") {
        emit(opt, barcode::to_json(dec).dump(2) + "\n");
        return kExitOk;
    }
    std::string out;
    auto list = [](const std::vector<int>& vs) {
        std::string s = "{";
        for (size_t i = 0; i < vs.size(); ++i) {
            if (i) s += ", ";
            s += barcode::var_name(vs[i]);
        }
        return s + "}";
    };
    for (size_t i = 0; i < dec.terms.size(); ++i)
        out += barcode::to_string(dec.terms[i]) + ": mult = " + list(dec.mult[i]) +
               ", nonmult = " + list(dec.nonmult[i]) + "\n";
    emit(opt, out);
    return kExitOk;
}

int run_star_set(const InputOptions& opt) {
    const barcode::TermSet M = load_terms(opt);
    const barcode::VariableOrdering ord = load_ordering(opt, M.vars());
    const barcode::BarCode b = barcode::BarCode::build(M, ord);
    if (!barcode::is_admissible(b)) {
        // Name a violating divisor pair for the error message.
        for (const barcode::Term& t : M.terms())
            for (int v : t.support()) {
                barcode::Exponents e = t.exponents();
                --e[static_cast<size_t>(v)];
                if (!M.contains(barcode::Term(e)))
                    throw barcode::AdmissibilityError(
                        "not an order ideal: " + barcode::to_string(t) + " is in the set but " +
                        barcode::to_string(barcode::Term(e)) + " is not");
            }
        throw barcode::AdmissibilityError("not an order ideal");
    }
    const barcode::TermSet F = barcode::star_set(b);
    if (opt.format == "json") {
        emit(opt, barcode::to_json(F).dump(2) + "\n");
        return kExitOk;
    }
    std::string out;
    for (const barcode::Term& t : F.terms()) out += barcode::to_string(t) + "\n";
    emit(opt, out);
    return kExitOk;
}

int run_find_order(const InputOptions& opt, bool all, bool brute, bool trace, int cap) {
    const barcode::TermSet M = load_terms(opt);
    const barcode::SearchResult res = barcode::find_ordering(M);

    if (opt.format == "json") {
        nlohmann::json out = barcode::to_json(res);
        if (!trace) out.erase("trace");
        if (all && brute) {
            nlohmann::json arr = nlohmann::json::array();
            for (const auto& ord : barcode::brute_force_orderings(M, cap))
                arr.push_back(barcode::to_json(ord));
            out["all_orderings"] = std::move(arr);
        }
        emit(opt, out.dump(2) + "\n");
        return res.ordering ? kExitOk : kExitNegative;
    }

    std::string out;
    out += res.ordering ? barcode::to_string(*res.ordering) + "\n" : "none\n";
    if (trace) {
        for (const auto& e : res.trace) {
            switch (e.kind) {
                case barcode::TraceEvent::Kind::choose:
                    out += "choose " + barcode::var_name(e.var) + "\n";
                    break;
                case barcode::TraceEvent::Kind::friends_failed:
                    out += "friends failed for " + barcode::var_name(e.var) + ", revoked\n";
                    break;
                case barcode::TraceEvent::Kind::revoked:
                    out += "revoked " + barcode::var_name(e.var) + "\n";
                    break;
                case barcode::TraceEvent::Kind::no_candidates:
                    out += "no candidate variables\n";
                    break;
                case barcode::TraceEvent::Kind::unitary:
                    out += "unitary case reached\n";
                    break;
                case barcode::TraceEvent::Kind::success:
                    out += "verified complete\n";
                    break;
            }
        }
    }
    if (all && brute) {
        out += "all complete orderings:\n";
        for (const auto& ord : barcode::brute_force_orderings(M, cap))
            out += "  " + barcode::to_string(ord) + "\n";
    }
    emit(opt, out);
    return res.ordering ? kExitOk : kExitNegative;
}

int run_gen(int vars, int count, int max_exp, std::uint64_t seed, bool ideal,
            const InputOptions& opt) {
    const barcode::TermSet M = ideal
                                   ? barcode::random_order_ideal(seed, vars, count, max_exp)
                                   : barcode::random_term_set(seed, vars, count, max_exp);
    std::string out;
    for (const barcode::Term& t : M.terms()) out += barcode::to_string(t) + "\n";
    emit(opt, out);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Bar codes, Janet decompositions and complete-set ordering search "
                 "for finite sets of monomial terms"};
    app.require_subcommand(1);

    InputOptions render_opt, check_opt, dec_opt, star_opt, find_opt, gen_opt;
    bool verify = false, all = false, brute = false, trace = false, ideal = false;
    int cap = 8;
    int gen_vars = 3, gen_count = 8, gen_max_exp = 4;
    std::uint64_t gen_seed = 1;

    CLI::App* render = app.add_subcommand("render", "draw the bar code of a term set");
    add_input_options(render, render_opt);
    render->add_option("--format", render_opt.format, "text | svg | json")
        ->check(CLI::IsMember({"text", "svg", "json"}));
    render->add_option("-o,--output", render_opt.output, "write to a file instead of stdout");

    CLI::App* check = app.add_subcommand("check", "decide completeness under an ordering");
    add_input_options(check, check_opt);
    check->add_flag("--verify", verify, "cross-check the bar code result against the definition");
    check->add_option("--format", check_opt.format)->check(CLI::IsMember({"text", "json"}));
    check->add_option("-o,--output", check_opt.output);

    CLI::App* decompose =
        app.add_subcommand("decompose", "multiplicative variables of every term");
    add_input_options(decompose, dec_opt);
    decompose->add_option("--format", dec_opt.format)->check(CLI::IsMember({"text", "json"}));
    decompose->add_option("-o,--output", dec_opt.output);

    CLI::App* star = app.add_subcommand("star-set", "star set of an order ideal");
    add_input_options(star, star_opt);
    star->add_option("--format", star_opt.format)->check(CLI::IsMember({"text", "json"}));
    star->add_option("-o,--output", star_opt.output);

    CLI::App* find =
        app.add_subcommand("find-order", "search for an ordering making the set complete");
    add_input_options(find, find_opt, /*with_order=*/false);
    CLI::Option* all_flag = find->add_flag("--all", all, "also list every complete ordering");
    CLI::Option* brute_flag =
        find->add_flag("--brute-force", brute, "enumerate all n! orderings (needed by --all)");
    all_flag->needs(brute_flag);
    find->add_flag("--trace", trace, "print the decision/revocation log");
    find->add_option("--cap", cap, "variable-count cap for brute force (default 8)");
    find->add_option("--format", find_opt.format)->check(CLI::IsMember({"text", "json"}));
    find->add_option("-o,--output", find_opt.output);

    CLI::App* gen = app.add_subcommand("gen", "emit a seeded random term set");
    gen->add_option("--vars", gen_vars, "variable count")->required();
    gen->add_option("--count", gen_count, "number of terms (corner count with --ideal)");
    gen->add_option("--max-exp", gen_max_exp, "exponent bound");
    gen->add_option("--seed", gen_seed, "RNG seed");
    gen->add_flag("--ideal", ideal, "generate a random order ideal instead");
    gen->add_option("-o,--output", gen_opt.output);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitParse;
    }

    try {
        if (render->parsed()) return run_render(render_opt);
        if (check->parsed()) return run_check(check_opt, verify);
        if (decompose->parsed()) return run_decompose(dec_opt);
        if (star->parsed()) return run_star_set(star_opt);
        if (find->parsed()) return run_find_order(find_opt, all, brute, trace, cap);
        if (gen->parsed()) return run_gen(gen_vars, gen_count, gen_max_exp, gen_seed, ideal, gen_opt);
    } catch (const barcode::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const barcode::AdmissibilityError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitAdmissibility;
    } catch (const barcode::CapExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCap;
    } catch (const barcode::InvariantViolation& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInvariant;
    } catch (const barcode::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    }
    return kExitOk;
}
