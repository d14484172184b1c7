#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "superquant/superquant.hpp"

namespace {

using namespace superquant;

std::vector<Rational> parse_lambdas(const std::string& csv) {
    std::vector<Rational> out;
    std::string item;
    std::istringstream in(csv);
    while (std::getline(in, item, ',')) out.push_back(Rational::parse(item));
    return out;
}

std::uint64_t default_seed() {
    if (const char* env = std::getenv("SUPERQUANT_SEED")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw std::invalid_argument("SUPERQUANT_SEED is not a non-negative integer");
        }
    }
    return 20240917;
}

void write_out(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out << content;
}

std::string table_as_text(const CoefficientTable& t) {
    std::ostringstream os;
    os << "# kind = " << to_string(t.kind) << "\n";
    os << "# n = " << t.arity << ", order2 = " << t.order2 << "\n";
    os << "# lambdas =";
    for (const auto& l : t.lambdas) os << " " << l.to_string();
    os << "\n";
    os << "# mu = " << t.mu().to_string() << ", delta = " << t.delta.to_string() << "\n";
    for (const auto& [key, value] : t.entries)
        os << "s=" << key.first.to_string() << " i=" << key.second.to_string()
           << " value=" << value.to_string() << "\n";
    return os.str();
}

std::string report_as_text(const std::vector<CheckResult>& results, const std::string& header) {
    std::ostringstream os;
    os << header;
    bool all_ok = true;
    for (const auto& r : results) {
        if (r.skipped)
            os << "[SKIP] ";
        else if (r.passed)
            os << "[PASS] ";
        else {
            os << "[FAIL] ";
            all_ok = false;
        }
        os << r.name << " (" << r.cases << " cases)";
        if (!r.detail.empty()) os << " :: " << r.detail;
        os << "\n";
    }
    os << (all_ok ? "all checks passed\n" : "some checks FAILED\n");
    return os.str();
}

std::string report_as_json(const std::vector<CheckResult>& results, ordered_json header) {
    header["checks"] = ordered_json::array();
    for (const auto& r : results) {
        ordered_json c;
        c["name"] = r.name;
        c["status"] = r.skipped ? "skip" : (r.passed ? "pass" : "fail");
        c["cases"] = r.cases;
        c["detail"] = r.detail;
        header["checks"].push_back(std::move(c));
    }
    return header.dump(2) + "\n";
}

bool any_failed(const std::vector<CheckResult>& results) {
    for (const auto& r : results)
        if (!r.skipped && !r.passed) return true;
    return false;
}

struct GammaArgs {
    int n = 1;
    int order2 = 0;
    std::string lambdas_csv;
    std::string mu = "0";
    std::string method = "closed";
    std::string format = "json";
    std::string output;
    bool allow_partial = false;
};

int cmd_gamma_table(const GammaArgs& a) {
    std::vector<Rational> lambdas = parse_lambdas(a.lambdas_csv);
    if (static_cast<int>(lambdas.size()) != a.n) {
        std::cerr << "error: expected " << a.n << " lambdas, got " << lambdas.size() << "\n";
        return 2;
    }
    Rational mu = Rational::parse(a.mu);
    Rational delta = mu;
    for (const auto& l : lambdas) delta -= l;

    CoefficientTable table{TableKind::gamma, a.n, a.order2, lambdas, delta, {}};
    try {
        if (a.method == "recursion") {
            if (a.allow_partial) {
                std::cerr << "error: --allow-partial requires --method closed\n";
                return 2;
            }
            table = solve_varpi(a.n, a.order2, lambdas, delta);
        } else {
            table = build_gamma_table(a.n, a.order2, lambdas, delta, a.allow_partial);
        }
    } catch (const ResonantDelta& e) {
        std::cerr << "error: resonant delta = " << delta.to_string()
                  << ", pivot degenerates at (l,p) = (" << e.level() << "," << e.degree() << ")\n";
        return 2;
    }

    if (a.format == "text")
        write_out(a.output, table_as_text(table));
    else
        write_out(a.output, table_to_json(table).dump(2) + "\n");
    return 0;
}

struct VerifyArgs {
    std::uint64_t seed = 0;
    bool seed_given = false;
    int max_n = 2;
    int max_order2 = 2;
    int reps = 8;
    int n = 0;
    std::string lambdas_csv;
    std::string mu;
    int order2 = -1;
    std::string format = "text";
    std::string output;
    bool mutate_sign = false;
};

int cmd_verify(const VerifyArgs& a) {
    std::uint64_t seed = a.seed_given ? a.seed : default_seed();
    bool fixed = !a.lambdas_csv.empty() || !a.mu.empty() || a.n > 0 || a.order2 >= 0;

    std::vector<CheckResult> results;
    std::string text_header;
    ordered_json json_header;

    if (fixed) {
        if (a.lambdas_csv.empty() || a.mu.empty() || a.n <= 0 || a.order2 < 0) {
            std::cerr << "error: fixed-weight mode needs -n, --order2, --lambdas and --mu together\n";
            return 2;
        }
        std::vector<Rational> lambdas = parse_lambdas(a.lambdas_csv);
        if (static_cast<int>(lambdas.size()) != a.n) {
            std::cerr << "error: expected " << a.n << " lambdas, got " << lambdas.size() << "\n";
            return 2;
        }
        Rational mu = Rational::parse(a.mu);
        Rational delta = mu;
        for (const auto& l : lambdas) delta -= l;
        results = run_fixed_checks(a.n, a.order2, lambdas, mu, seed, a.reps, a.mutate_sign);

        std::ostringstream hdr;
        hdr << "# verify: n = " << a.n << ", order2 = " << a.order2 << ", lambdas =";
        for (const auto& l : lambdas) hdr << " " << l.to_string();
        hdr << ", mu = " << mu.to_string() << ", delta = " << delta.to_string() << ", seed = " << seed
            << "\n";
        text_header = hdr.str();
        json_header["mode"] = "fixed";
        json_header["n"] = a.n;
        json_header["order2"] = a.order2;
        json_header["lambdas"] = lambdas_to_json(lambdas);
        json_header["mu"] = rational_to_json(mu);
        json_header["delta"] = rational_to_json(delta);
        json_header["seed"] = seed;
    } else {
        VerifyOptions opt;
        opt.seed = seed;
        opt.max_arity = a.max_n;
        opt.max_order2 = a.max_order2;
        opt.ops_per_shape = a.reps;
        opt.weights_per_shape = std::max(2, a.reps / 2);
        opt.mutate_sign = a.mutate_sign;
        results = run_all_checks(opt);

        std::ostringstream hdr;
        hdr << "# verify: sweep up to n = " << opt.max_arity << ", order2 = " << opt.max_order2
            << ", delta = seeded per case, seed = " << seed << "\n";
        text_header = hdr.str();
        json_header["mode"] = "sweep";
        json_header["max_n"] = opt.max_arity;
        json_header["max_order2"] = opt.max_order2;
        json_header["delta"] = "seeded per case";
        json_header["seed"] = seed;
    }

    if (a.format == "json")
        write_out(a.output, report_as_json(results, std::move(json_header)));
    else
        write_out(a.output, report_as_text(results, text_header));
    return any_failed(results) ? 1 : 0;
}

struct RoundtripArgs {
    std::uint64_t seed = 0;
    bool seed_given = false;
    int n = 1;
    int order2 = 0;
    std::string lambdas_csv;
    std::string mu = "0";
};

int cmd_roundtrip(const RoundtripArgs& a) {
    std::uint64_t seed = a.seed_given ? a.seed : default_seed();
    std::vector<Rational> lambdas = parse_lambdas(a.lambdas_csv);
    if (static_cast<int>(lambdas.size()) != a.n) {
        std::cerr << "error: expected " << a.n << " lambdas, got " << lambdas.size() << "\n";
        return 2;
    }
    Rational mu = Rational::parse(a.mu);
    Rational delta = mu;
    for (const auto& l : lambdas) delta -= l;
    std::cout << "# roundtrip: n = " << a.n << ", order2 = " << a.order2
              << ", delta = " << delta.to_string() << ", seed = " << seed << "\n";

    if (is_resonant(delta, a.order2)) {
        std::cerr << "error: resonant delta = " << delta.to_string() << " (2*delta in [1, "
                  << a.order2 << "])\n";
        return 2;
    }

    Rng rng(seed);
    NaryOperator A = random_operator(rng, a.n, a.order2, lambdas, mu, 3);
    CoefficientTable g = build_gamma_table(a.n, a.order2, lambdas, delta);
    NaryOperator back = quantize(symbol_map(A, g), lambdas, mu, invert_gamma(g));

    if (back == A) {
        std::cout << "operator with " << A.coefficients().size()
                  << " coefficients reconstructed exactly\n";
        return 0;
    }
    for (const auto& idx : multi_indices_up_to(a.n, a.order2)) {
        if (!(back.coefficient(idx) == A.coefficient(idx))) {
            std::cout << "first differing coefficient at " << idx.to_string() << ": got "
                      << back.coefficient(idx).to_string() << ", expected "
                      << A.coefficient(idx).to_string() << "\n";
            break;
        }
    }
    return 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact equivariant symbol calculus for n-ary differential operators on the supercircle"};
    app.require_subcommand(1);

    GammaArgs ga;
    CLI::App* gamma_cmd = app.add_subcommand("gamma-table", "emit a symbol-map coefficient table");
    gamma_cmd->add_option("-n,--arity", ga.n, "number of arguments")->required();
    gamma_cmd->add_option("--order2", ga.order2, "doubled order of the operators")->required();
    gamma_cmd->add_option("--lambdas", ga.lambdas_csv, "comma-separated source weights")->required();
    gamma_cmd->add_option("--mu", ga.mu, "target weight")->required();
    gamma_cmd->add_option("--method", ga.method, "closed | recursion")
        ->check(CLI::IsMember({"closed", "recursion"}));
    gamma_cmd->add_option("--format", ga.format, "json | text")->check(CLI::IsMember({"json", "text"}));
    gamma_cmd->add_option("-o,--output", ga.output, "output path (default stdout)");
    gamma_cmd->add_flag("--allow-partial", ga.allow_partial,
                        "keep the entries that survive a resonant delta");

    VerifyArgs va;
    CLI::App* verify_cmd = app.add_subcommand("verify", "run the identity suites");
    auto* vseed = verify_cmd->add_option("--seed", va.seed, "sweep seed (SUPERQUANT_SEED as fallback)");
    verify_cmd->add_option("--max-n", va.max_n, "largest arity in sweep mode");
    verify_cmd->add_option("--max-order2", va.max_order2, "largest doubled order in sweep mode");
    verify_cmd->add_option("--reps", va.reps, "sampled cases per shape");
    verify_cmd->add_option("-n,--arity", va.n, "fixed arity (enables fixed-weight mode)");
    verify_cmd->add_option("--order2", va.order2, "fixed doubled order");
    verify_cmd->add_option("--lambdas", va.lambdas_csv, "fixed comma-separated source weights");
    verify_cmd->add_option("--mu", va.mu, "fixed target weight");
    verify_cmd->add_option("--format", va.format, "json | text")->check(CLI::IsMember({"json", "text"}));
    verify_cmd->add_option("-o,--output", va.output, "output path (default stdout)");
    verify_cmd->add_flag("--mutate-sign", va.mutate_sign)->group("");

    RoundtripArgs ra;
    CLI::App* round_cmd = app.add_subcommand("roundtrip", "symbol-then-quantize a seeded operator");
    auto* rseed = round_cmd->add_option("--seed", ra.seed, "seed (SUPERQUANT_SEED as fallback)");
    round_cmd->add_option("-n,--arity", ra.n, "number of arguments")->required();
    round_cmd->add_option("--order2", ra.order2, "doubled order")->required();
    round_cmd->add_option("--lambdas", ra.lambdas_csv, "comma-separated source weights")->required();
    round_cmd->add_option("--mu", ra.mu, "target weight")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    va.seed_given = vseed->count() > 0;
    ra.seed_given = rseed->count() > 0;

    try {
        if (gamma_cmd->parsed()) return cmd_gamma_table(ga);
        if (verify_cmd->parsed()) return cmd_verify(va);
        if (round_cmd->parsed()) return cmd_roundtrip(ra);
    } catch (const ResonantDelta& e) {
        std::cerr << "error: resonant pivot at (l,p) = (" << e.level() << "," << e.degree() << ")\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
