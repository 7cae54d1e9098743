// SPDX-License-Identifier: Apache-2.0
// Command-line driver: computes certificates and prints versioned JSON reports.
#include "bim/report.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <regex>

using namespace bim;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitFalsified = 3;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// "5" or "0..8" (inclusive).
std::pair<long, long> parse_range(const std::string& s) {
    static const std::regex re(R"(\s*(\d+)\s*(?:\.\.\s*(\d+)\s*)?)");
    std::smatch m;
    if (!std::regex_match(s, m, re)) throw UsageError("--n expects INT or A..B, got '" + s + "'");
    const long a = std::stol(m[1].str());
    const long b = m[2].matched ? std::stol(m[2].str()) : a;
    if (b < a) throw UsageError("--n range is empty: '" + s + "'");
    return {a, b};
}

Multiplicity parse_k(const std::string& s) {
    try {
        return parse_multiplicity(s);
    } catch (const std::exception& e) {
        throw UsageError("--k: " + std::string(e.what()));
    }
}

LadderSpec parse_ladder_spec(const std::string& s) {
    LadderSpec spec{s, 0};
    const auto at = s.find("@rot");
    if (at != std::string::npos) {
        spec.case_id = s.substr(0, at);
        const std::string r = s.substr(at + 4);
        if (r != "0" && r != "1" && r != "2") throw UsageError("rotation must be 0, 1 or 2");
        spec.rotation = r[0] - '0';
    }
    try {
        ladder_case(spec.case_id);
    } catch (const std::exception&) {
        std::string ids;
        for (const auto& c : ladder_cases()) ids += " " + c.id;
        throw UsageError("unknown ladder case '" + spec.case_id + "'; known:" + ids);
    }
    return spec;
}

struct Options {
    std::string n = "0";
    std::string k = "0,0,0";
    std::string json_path;
    bool verify = false;
    std::string case_id;
    std::string family = "O";
    long d = 0;
    std::string params = "0,0,0";
    std::string twist = "id";
    bool no_matrices = false;
};

int emit(const Json& doc, const std::string& path) {
    const std::string text = doc.dump(2) + "\n";
    if (path.empty() || path == "-") {
        std::cout << text;
    } else {
        std::ofstream out(path, std::ios::binary);
        if (!out) {
            std::cerr << "cannot write " << path << "\n";
            return kExitUsage;
        }
        out << text;
    }
    return doc["ok"].get<bool>() ? kExitOk : kExitFalsified;
}

template <class F>
std::vector<Result> over_range(const Options& o, F&& f) {
    const auto [a, b] = parse_range(o.n);
    const Multiplicity k = parse_k(o.k);
    std::vector<Result> out;
    for (long n = a; n <= b; ++n) out.push_back(f(n, k));
    return out;
}

Json grid_args(const Options& o) { return {{"n", o.n}, {"k", o.k}}; }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Dunkl monogenics and Bannai-Ito modules: exact certificates as JSON"};
    app.require_subcommand(1);
    Options o;

    auto grid = [&](CLI::App* sub) {
        sub->add_option("--n", o.n, "degree: INT or A..B")->required();
        sub->add_option("--k", o.k, "multiplicities k1,k2,k3 (rationals)")->required();
        sub->add_option("--json", o.json_path, "write the report here instead of stdout");
    };

    auto* dim = app.add_subcommand("dim", "brute-force dim M_n against 2(n+1)");
    grid(dim);
    auto* subm = app.add_subcommand("submodules", "named submodule dimensions and direct sums");
    grid(subm);

    auto* verify = app.add_subcommand("verify", "module-level certificates");
    verify->require_subcommand(1);
    auto* v_bi = verify->add_subcommand("bi", "BI relations and central scalars on M_n");
    auto* v_rank = verify->add_subcommand("rank-lemma", "rank of N_n and the D(x3) factorization");
    auto* v_lad = verify->add_subcommand("ladders", "every applicable ladder family");
    auto* v_all = verify->add_subcommand("all", "bi, rank-lemma and ladders");
    for (auto* s : {v_bi, v_rank, v_lad, v_all}) grid(s);

    auto* irrep = app.add_subcommand("irrep", "build E_d or O_d with an optional twist");
    irrep->add_option("--family", o.family, "E or O")->check(CLI::IsMember({"E", "O"}));
    irrep->add_option("--d", o.d, "d (module dimension d+1)")->required();
    irrep->add_option("--params", o.params, "a,b,c")->required();
    irrep->add_option("--twist", o.twist, "e.g. id, (1 2 3), ((-1,1),(1 3))");
    irrep->add_flag("--no-matrices", o.no_matrices, "omit X, Y, Z");
    irrep->add_option("--json", o.json_path, "write the report here instead of stdout");

    auto* ladder = app.add_subcommand("ladder", "build and certify one ladder family");
    ladder->add_option("--case", o.case_id, "case id, optionally with @rot1 or @rot2")->required();
    grid(ladder);

    auto* cls = app.add_subcommand("classify", "composition factors predicted for (n, k)");
    grid(cls);
    cls->add_flag("--verify", o.verify, "check every predicted factor");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*dim) return emit(envelope("dim", grid_args(o), over_range(o, report_dim)), o.json_path);
        if (*subm) return emit(envelope("submodules", grid_args(o), over_range(o, report_submodules)), o.json_path);
        if (*v_bi) return emit(envelope("verify bi", grid_args(o), over_range(o, report_bi)), o.json_path);
        if (*v_rank)
            return emit(envelope("verify rank-lemma", grid_args(o), over_range(o, report_rank_lemma)), o.json_path);
        if (*v_lad) return emit(envelope("verify ladders", grid_args(o), over_range(o, report_ladders)), o.json_path);
        if (*v_all) {
            auto rows = over_range(o, [](long n, const Multiplicity& k) {
                Result r{{{"n", n}, {"k", to_json(k)}}};
                const std::pair<const char*, Result> parts[] = {
                    {"bi", report_bi(n, k)}, {"rank_lemma", report_rank_lemma(n, k)}, {"ladders", report_ladders(n, k)}};
                for (const auto& [name, x] : parts) {
                    r.doc[name] = x.doc;
                    r.ok = r.ok && x.ok;
                }
                r.doc["ok"] = r.ok;
                return r;
            });
            return emit(envelope("verify all", grid_args(o), rows), o.json_path);
        }
        if (*irrep) {
            std::vector<std::string> p;
            std::stringstream ss(o.params);
            for (std::string item; std::getline(ss, item, ',');) p.push_back(item);
            if (p.size() != 3) throw UsageError("--params needs a,b,c");
            IrrepSpec s;
            try {
                s = make_spec(o.family == "E" ? Family::E : Family::O, o.d, parse_rational(p[0]), parse_rational(p[1]),
                              parse_rational(p[2]), TwistElement::parse(o.twist));
            } catch (const std::invalid_argument& e) {
                throw UsageError(e.what());
            }
            Json args{{"family", o.family}, {"d", o.d}, {"params", o.params}, {"twist", o.twist}};
            return emit(envelope("irrep", args, {report_irrep(s, !o.no_matrices)}), o.json_path);
        }
        if (*ladder) {
            const LadderSpec spec = parse_ladder_spec(o.case_id);
            Json args = grid_args(o);
            args["case"] = spec.str();
            return emit(envelope("ladder", args,
                                 over_range(o, [&](long n, const Multiplicity& k) { return report_ladder(spec, n, k); })),
                        o.json_path);
        }
        if (*cls) {
            Json args = grid_args(o);
            args["verify"] = o.verify;
            return emit(envelope("classify", args,
                                 over_range(o, [&](long n, const Multiplicity& k) {
                                     return report_classify(n, k, o.verify);
                                 })),
                        o.json_path);
        }
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n\n" << app.help();
        return kExitUsage;
    }
    return kExitUsage;
}
