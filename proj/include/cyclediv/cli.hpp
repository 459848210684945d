#pragma once

#include <cstdlib>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "bench.hpp"
#include "cyclediv.hpp"
#include "json.hpp"

namespace cyclediv::cli {

// exit codes: 0 yes/success, 1 no, 2 usage or parse error, 3 capacity refusal
inline constexpr int kExitYes = 0;
inline constexpr int kExitNo = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitCapacity = 3;

namespace detail_cli {

inline u64 resolve_cap(bool flag_given, u64 flag_value) {
    if (flag_given) {
        if (flag_value == 0) throw std::invalid_argument("cap must be at least 1");
        return flag_value;
    }
    if (const char* env = std::getenv("CYCLEDIV_CAP")) {
        std::string s(env);
        if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
            throw std::invalid_argument("CYCLEDIV_CAP must be a positive integer");
        u64 v = 0;
        for (char c : s) {
            u64 d = static_cast<u64>(c - '0');
            if (v > (UINT64_MAX - d) / 10)
                throw std::invalid_argument("CYCLEDIV_CAP out of range");
            v = v * 10 + d;
        }
        if (v == 0) throw std::invalid_argument("CYCLEDIV_CAP must be a positive integer");
        return v;
    }
    return kDefaultSolutionCap;
}

inline SolverKind solver_from(const std::string& name) {
    if (name == "auto") return SolverKind::automatic;
    if (name == "brute") return SolverKind::brute;
    if (name == "support") return SolverKind::support;
    if (name == "principal") return SolverKind::principal;
    if (name == "decompose") return SolverKind::decompose;
    throw std::invalid_argument("unknown solver: " + name);
}

} // namespace detail_cli

/// Run one CLI invocation (no program name in `args`); output goes to `out`,
/// diagnostics to `err`.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact division and factorization for sums of directed cycles", "cyclediv"};
    app.require_subcommand(1);

    std::string a_text, b_text, x_text;
    std::string format = "text", solver_name = "auto", family;
    u64 n_value = 0, cap_value = 0, from_value = 0, to_value = 0;
    bool no_fast_paths = false;

    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"text", "json"}));
    };
    auto add_ab = [&](CLI::App* cmd) {
        cmd->add_option("--a", a_text, "left factor (sum of cycles)")->required();
        cmd->add_option("--b", b_text, "product (sum of cycles)")->required();
        add_format(cmd);
    };

    CLI::App* c_support = app.add_subcommand("support", "admissible solution lengths");
    add_ab(c_support);
    CLI::App* c_consistent = app.add_subcommand("consistent", "support equation check");
    add_ab(c_consistent);
    CLI::App* c_basic = app.add_subcommand("basic", "divisor-closure check");
    add_ab(c_basic);
    CLI::App* c_decompose = app.add_subcommand("decompose", "basic compact triples");
    add_ab(c_decompose);
    CLI::App* c_divides = app.add_subcommand("divides", "does any X solve a*X = b");
    add_ab(c_divides);
    CLI::App* c_count = app.add_subcommand("count", "exact number of solutions");
    add_ab(c_count);

    CLI::App* c_solve = app.add_subcommand("solve", "list all solutions of a*X = b");
    add_ab(c_solve);
    c_solve->add_option("--solver", solver_name, "strategy")
        ->check(CLI::IsMember({"auto", "brute", "support", "principal", "decompose"}));
    auto* solve_cap = c_solve->add_option("--cap", cap_value, "enumeration cap");
    c_solve->add_flag("--no-fast-paths", no_fast_paths, "disable structural fast paths");

    CLI::App* c_factorize = app.add_subcommand("factorize", "irreducible factorizations");
    c_factorize->add_option("--x", x_text, "value to factor")->required();
    auto* fact_cap = c_factorize->add_option("--cap", cap_value, "enumeration cap");
    add_format(c_factorize);

    CLI::App* c_irreducible = app.add_subcommand("irreducible", "irreducibility check");
    c_irreducible->add_option("--x", x_text, "value to test")->required();
    add_format(c_irreducible);

    CLI::App* c_census = app.add_subcommand("census", "irreducible/reducible counts");
    c_census->add_option("--n", n_value, "vertex count")->required();
    add_format(c_census);

    CLI::App* c_witnesses = app.add_subcommand("witnesses", "irreducible solution family");
    c_witnesses->add_option("--n", n_value, "primorial vertex count")->required();
    add_format(c_witnesses);

    CLI::App* c_bench = app.add_subcommand("bench", "solver comparison, CSV");
    c_bench->add_option("--family", family, "instance family")
        ->required()
        ->check(CLI::IsMember({"paper-C6", "primorial", "prime-antichain"}));
    c_bench->add_option("--from", from_value, "first parameter")->required();
    c_bench->add_option("--to", to_value, "last parameter")->required();
    add_format(c_bench);

    std::vector<const char*> argv;
    argv.push_back("cyclediv");
    for (const auto& s : args) argv.push_back(s.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitYes;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    bool json_mode = (format == "json");
    auto emit = [&](const nlohmann::json& j) { out << j.dump() << "\n"; };

    try {
        if (app.got_subcommand(c_support)) {
            Instance inst(parse_sum_of_cycles(a_text), parse_sum_of_cycles(b_text));
            auto sup = instance_support(inst);
            if (json_mode) {
                emit({{"support", sup}});
            } else {
                for (std::size_t i = 0; i < sup.size(); ++i)
                    out << (i ? " " : "") << sup[i];
                out << "\n";
            }
            return kExitYes;
        }
        if (app.got_subcommand(c_consistent) || app.got_subcommand(c_basic)) {
            Instance inst(parse_sum_of_cycles(a_text), parse_sum_of_cycles(b_text));
            bool consistent_cmd = app.got_subcommand(c_consistent);
            bool value = consistent_cmd ? is_consistent(inst) : is_basic(inst);
            if (json_mode)
                emit({{consistent_cmd ? "consistent" : "basic", value}});
            else
                out << (value ? "yes" : "no") << "\n";
            return value ? kExitYes : kExitNo;
        }
        if (app.got_subcommand(c_decompose)) {
            Instance inst(parse_sum_of_cycles(a_text), parse_sum_of_cycles(b_text));
            if (!is_consistent(inst)) {
                err << "error: instance is not consistent\n";
                return kExitUsage;
            }
            auto triples = decompose(inst);
            if (json_mode) {
                nlohmann::json arr = nlohmann::json::array();
                for (const auto& t : triples)
                    arr.push_back({{"a", t.a}, {"b", t.b}, {"scale", t.scale}});
                emit({{"triples", std::move(arr)}});
            } else {
                for (std::size_t i = 0; i < triples.size(); ++i) {
                    if (i) out << "; ";
                    out << "(" << to_string(triples[i].a) << ", " << to_string(triples[i].b)
                        << ", " << triples[i].scale << ")";
                }
                out << "\n";
            }
            return kExitYes;
        }
        if (app.got_subcommand(c_divides)) {
            Instance inst(parse_sum_of_cycles(a_text), parse_sum_of_cycles(b_text));
            bool yes = divides(inst);
            NoSolutionReason reason = yes ? NoSolutionReason::none : precheck(inst);
            if (json_mode) {
                emit({{"divides", yes}, {"reason", to_string(reason)}});
            } else if (yes) {
                out << "yes\n";
            } else if (reason == NoSolutionReason::none) {
                out << "no\n";
            } else {
                out << "no (" << to_string(reason) << ")\n";
            }
            return yes ? kExitYes : kExitNo;
        }
        if (app.got_subcommand(c_count)) {
            Instance inst(parse_sum_of_cycles(a_text), parse_sum_of_cycles(b_text));
            BigInt c = count_solutions(inst);
            if (json_mode)
                emit({{"count", c.str()}});
            else
                out << c.str() << "\n";
            return kExitYes;
        }
        if (app.got_subcommand(c_solve)) {
            Instance inst(parse_sum_of_cycles(a_text), parse_sum_of_cycles(b_text));
            SolveOptions opts;
            opts.solver = detail_cli::solver_from(solver_name);
            opts.cap = detail_cli::resolve_cap(solve_cap->count() > 0, cap_value);
            opts.fast_paths = !no_fast_paths;
            SolutionSet s = solve(inst, opts);
            if (json_mode) {
                nlohmann::json sols = nlohmann::json::array();
                for (const auto& x : s.solutions) sols.push_back(x);
                emit({{"count", s.count.str()},
                      {"solutions", std::move(sols)},
                      {"truncated", s.truncated},
                      {"reason", to_string(s.reason)}});
            } else if (s.truncated) {
                out << "truncated " << s.count.str() << "\n";
            } else {
                for (const auto& x : s.solutions) out << to_string(x) << "\n";
            }
            return kExitYes;
        }
        if (app.got_subcommand(c_factorize)) {
            SumOfCycles x = parse_sum_of_cycles(x_text);
            u64 cap = detail_cli::resolve_cap(fact_cap->count() > 0, cap_value);
            FactorizationList fl = enumerate_irreducible_factorizations(x, cap);
            if (json_mode) {
                nlohmann::json arr = nlohmann::json::array();
                for (const auto& f : fl.factorizations) {
                    nlohmann::json one = nlohmann::json::array();
                    for (const auto& v : f) one.push_back(v);
                    arr.push_back(std::move(one));
                }
                emit({{"count", std::to_string(fl.factorizations.size())},
                      {"factorizations", std::move(arr)},
                      {"truncated", fl.truncated}});
            } else {
                for (const auto& f : fl.factorizations) {
                    for (std::size_t i = 0; i < f.size(); ++i)
                        out << (i ? " * " : "") << to_string(f[i]);
                    out << "\n";
                }
                if (fl.truncated) out << "truncated\n";
            }
            return kExitYes;
        }
        if (app.got_subcommand(c_irreducible)) {
            bool r = is_irreducible(parse_sum_of_cycles(x_text));
            if (json_mode)
                emit({{"irreducible", r}});
            else
                out << (r ? "yes" : "no") << "\n";
            return r ? kExitYes : kExitNo;
        }
        if (app.got_subcommand(c_census)) {
            auto [irred, red] = irreducible_census(n_value);
            if (json_mode)
                emit({{"n", n_value},
                      {"irreducible", irred.str()},
                      {"reducible", red.str()}});
            else
                out << "irreducible " << irred.str() << "\n"
                    << "reducible " << red.str() << "\n";
            return kExitYes;
        }
        if (app.got_subcommand(c_witnesses)) {
            auto fam = irreducible_witness_family(n_value);
            if (json_mode) {
                nlohmann::json arr = nlohmann::json::array();
                for (const auto& v : fam) arr.push_back(v);
                emit({{"n", n_value},
                      {"count", std::to_string(fam.size())},
                      {"witnesses", std::move(arr)}});
            } else {
                for (const auto& v : fam) out << to_string(v) << "\n";
            }
            return kExitYes;
        }
        if (app.got_subcommand(c_bench)) {
            auto rows = bench::run(family, from_value, to_value);
            if (json_mode) {
                nlohmann::json arr = nlohmann::json::array();
                for (const auto& r : rows) {
                    nlohmann::json row{{"family", r.family},
                                       {"param", r.param},
                                       {"solver", r.solver},
                                       {"candidates", r.candidates.str()}};
                    row["wall_ms"] = r.wall_ms ? nlohmann::json(*r.wall_ms)
                                               : nlohmann::json(nullptr);
                    row["count"] = r.count ? nlohmann::json(r.count->str())
                                           : nlohmann::json(nullptr);
                    arr.push_back(std::move(row));
                }
                emit({{"rows", std::move(arr)}});
            } else {
                out << bench::csv_header() << "\n";
                for (const auto& r : rows) out << bench::to_csv(r) << "\n";
            }
            return kExitYes;
        }
    } catch (const parse_error& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const capacity_error& e) {
        err << "error: " << e.what() << "\n";
        return kExitCapacity;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    err << "error: no command\n";
    return kExitUsage;
}

} // namespace cyclediv::cli
