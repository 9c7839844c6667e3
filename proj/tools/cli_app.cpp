#include "cli_app.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "apcoprime/crt.hpp"
#include "apcoprime/decomposition.hpp"
#include "apcoprime/errors.hpp"
#include "apcoprime/json_io.hpp"
#include "apcoprime/pillai.hpp"

namespace apcoprime::cli {

namespace {

using apcoprime::json;

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::vector<long> parse_long_list(const std::string& value) {
    std::vector<long> out;
    std::stringstream ss(value);
    for (std::string item; std::getline(ss, item, ',');) {
        item = trim(item);
        if (!item.empty()) out.push_back(to_long(parse_integer(item)));
    }
    return out;
}

OutputFormat parse_format(const std::string& s) {
    if (s == "text") return OutputFormat::Text;
    if (s == "json") return OutputFormat::Json;
    throw ParseError("output format must be 'text' or 'json', got '" + s + "'");
}

std::string delta_text(const DeltaResult& r) {
    if (r.prime) return std::to_string(*r.prime);
    return r.bound > 0 ? "infinite (no split prime <= " + std::to_string(r.bound) + ")" : "infinite";
}

/// Shared state for one invocation.
struct Context {
    CliConfig config;
    std::istream& in;
    std::ostream& out;
    std::ostream& err;

    bool json_output() const { return config.format == OutputFormat::Json; }
    void emit(const json& j) const { out << j.dump(2) << "\n"; }
    RingDescriptor ring(const std::string& text) const { return parse_ring(text, config.allowlist); }
};

int cmd_delta(const Context& ctx, const std::string& ring_text, long cyclotomic, long bound) {
    json j;
    bool disagree = false;
    if (cyclotomic > 0) {
        const DeltaResult closed = delta_cyclotomic(cyclotomic);
        const bool known_ufd = cyclotomic_is_known_ufd(cyclotomic);
        if (!known_ufd) {
            ctx.err << "warning: Z[zeta_" << cyclotomic
                    << "] is not a unique factorization domain; the value is formal\n";
        }
        j["ring"] = "Z[zeta_" + std::to_string(cyclotomic) + "]";
        j["known_ufd"] = known_ufd;
        j["results"] = json::array({to_json(closed)});
        // Z[zeta_4] = Z[i] and Z[zeta_3] = Z[zeta_6] = O_{Q(sqrt -3)}.
        std::optional<long> quadratic_m;
        if (cyclotomic == 4) quadratic_m = -1;
        if (cyclotomic == 3 || cyclotomic == 6) quadratic_m = -3;
        if (quadratic_m) {
            const DeltaResult oracle =
                delta_oracle(ctx.ring("Q(sqrt " + std::to_string(*quadratic_m) + ")"),
                             std::max(bound, closed.prime.value_or(bound)));
            j["results"].push_back(to_json(oracle));
            disagree = oracle.prime != closed.prime;
        }
        j["delta"] = closed.prime ? json(*closed.prime) : json(nullptr);
    } else {
        const RingDescriptor ring = ctx.ring(ring_text);
        j["ring"] = ring.tag();
        j["results"] = json::array();
        std::optional<long> value;
        if (!ring.is_integers()) {
            const DeltaResult closed = delta_quadratic(ring.m(), ctx.config.allowlist);
            j["results"].push_back(to_json(closed));
            const DeltaResult oracle = delta_oracle(ring, bound);
            j["results"].push_back(to_json(oracle));
            // The oracle can only see primes up to its bound.
            const bool visible = *closed.prime <= bound;
            disagree = visible ? oracle.prime != closed.prime : oracle.prime.has_value();
            value = closed.prime;
        } else {
            const DeltaResult oracle = delta_oracle(ring, bound);
            j["results"].push_back(to_json(oracle));
            value = oracle.prime;
        }
        j["delta"] = value ? json(*value) : json(nullptr);
        const auto capped = delta_capped(ring);
        j["delta_capped"] = capped ? json(*capped) : json(nullptr);
        j["max_guaranteed_length"] = max_guaranteed_length(ring);
    }
    j["agree"] = !disagree;
    if (ctx.json_output()) {
        ctx.emit(j);
    } else {
        ctx.out << "ring: " << j["ring"].get<std::string>() << "\n";
        for (const auto& r : j["results"])
            ctx.out << "  " << r["method"].get<std::string>() << ": "
                    << delta_text(delta_result_from_json(r)) << "\n";
        ctx.out << "delta = " << (j["delta"].is_null() ? "infinite" : j["delta"].dump()) << "\n";
    }
    if (disagree) {
        ctx.err << "error: closed form and splitting oracle disagree\n";
        return kInternalError;
    }
    return kOk;
}

int cmd_find_coprime(const Context& ctx, const std::string& ring_text, const std::string& a,
                     const std::string& d, long n) {
    const RingDescriptor ring = ctx.ring(ring_text);
    const ArithmeticProgression ap(parse_element(a, ring), parse_element(d, ring), n);
    const CoprimeReport report = find_coprime_term(ap);
    if (ctx.json_output()) {
        ctx.emit({{"progression", to_json(ap)}, {"report", to_json(report)}});
    } else {
        ctx.out << "progression: ";
        for (const auto& t : ap.terms()) ctx.out << format_element(t) << " ";
        ctx.out << "(" << ring.tag() << ")\n";
        if (report.witness) {
            ctx.out << "witness: term " << *report.witness << " = "
                    << format_element(ap.term(*report.witness)) << " is coprime to all others\n";
        } else {
            ctx.out << "no term is coprime to all others\n";
        }
        for (const auto& [i, j] : report.offenders)
            ctx.out << "  term " << i << " shares a factor with term " << j << "\n";
    }
    return report.witness ? kOk : kNegativeResult;
}

int cmd_verify(const Context& ctx, const std::string& ring_text, long bound, long n_max) {
    const RingDescriptor ring = ctx.ring(ring_text);
    if (n_max <= 0) n_max = max_guaranteed_length(ring);
    const SweepReport report = verify_bound_sweep(ring, bound, n_max, ctx.config.jobs);
    if (ctx.json_output()) {
        ctx.emit(to_json(report));
    } else {
        ctx.out << ring.tag() << ", coordinates in [-" << bound << ", " << bound << "], 2 <= n <= "
                << n_max << ": " << report.pairs_checked << " coprime pairs, "
                << report.progressions_checked << " progressions\n";
        ctx.out << report.violations.size() << " violations\n";
        for (const auto& v : report.violations)
            ctx.out << "  a = " << format_element(v.first) << ", d = " << format_element(v.difference)
                    << ", n = " << v.length << "\n";
    }
    return report.ok() ? kOk : kInternalError;
}

int cmd_counterexample(const Context& ctx, const std::string& ring_text, long n, bool consecutive,
                       long limit) {
    const RingDescriptor ring = ctx.ring(ring_text);
    if (consecutive || (ring.is_integers() && n > kPillaiBound)) {
        if (!ring.is_integers()) throw PreconditionError("--consecutive works over Z");
        const auto start = search_counterexample_consecutive(n, limit);
        if (ctx.json_output()) {
            ctx.emit({{"n", n},
                      {"scan_limit", std::to_string(limit)},
                      {"start", start ? json(start->get_str()) : json(nullptr)}});
        } else if (start) {
            ctx.out << "block " << start->get_str() << " .. " << Integer(*start + (n - 1)).get_str()
                    << " has no element coprime to the rest\n";
        } else {
            ctx.out << "no block of " << n << " consecutive integers starting in [1, " << limit
                    << "] lacks a coprime element\n";
        }
        return start ? kOk : kNegativeResult;
    }
    const RingCounterexample ce = construct_counterexample_ring(ring, n);
    if (ctx.json_output()) {
        ctx.emit(to_json(ce));
    } else {
        ctx.out << ring.tag() << ", delta = " << ce.delta << ", P = " << format_element(ce.p_prime)
                << ", Q = " << format_element(ce.q_prime) << "\n";
        ctx.out << "progression z, z+1, ..., z+" << n - 1
                << " with z = " << format_element(ce.progression.first()) << "\n";
        ctx.out << "self-check passed: no term is coprime to all others\n";
    }
    return kOk;
}

int cmd_crt_solve(const Context& ctx, const std::string& ring_text, const std::string& input) {
    const RingDescriptor ring = ctx.ring(ring_text);
    std::ifstream file;
    if (!input.empty() && input != "-") {
        file.open(input);
        if (!file) throw ParseError("cannot open '" + input + "'");
    }
    std::istream& src = file.is_open() ? static_cast<std::istream&>(file) : ctx.in;
    CongruenceSystem sys;
    for (std::string line; std::getline(src, line);) {
        line = trim(line);
        if (line.empty() || line[0] == '#') continue;
        json j;
        try {
            j = json::parse(line);
        } catch (const json::exception& e) {
            throw ParseError(std::string("bad JSON line: ") + e.what());
        }
        sys.push_back(congruence_from_json(j, ring));
    }
    const CrtOutcome outcome = solve(sys);
    if (ctx.json_output()) {
        ctx.emit(to_json(outcome, ring));
    } else if (outcome.solution) {
        ctx.out << "z = " << format_element(outcome.solution->value) << " (mod "
                << format_element(outcome.solution->modulus) << ")\n";
    } else {
        ctx.out << "no solution: congruences " << outcome.witness->i << " and " << outcome.witness->j
                << " are incompatible\n";
    }
    return outcome.solved() ? kOk : kNegativeResult;
}

int cmd_transfer(const Context& ctx, const std::string& a, const std::string& d, long n) {
    const RingDescriptor z_ring = RingDescriptor::integers();
    const ArithmeticProgression ap(parse_element(a, z_ring), parse_element(d, z_ring), n);
    const Integer z = transfer_ap_to_consecutive(ap);
    if (ctx.json_output()) {
        ctx.emit({{"progression", to_json(ap)}, {"z", z.get_str()}});
    } else {
        ctx.out << "z = " << z.get_str() << " satisfies term(i) | z - i for i = 1.." << n << "\n";
    }
    return kOk;
}

int cmd_squares(const Context& ctx, long count) {
    const auto triples = squares_ap_triples(count);
    if (ctx.json_output()) {
        ctx.emit(to_json(triples));
    } else {
        for (const auto& t : triples)
            ctx.out << t.s1.get_str() << ", " << t.s2.get_str() << ", " << t.s3.get_str() << "\n";
    }
    return kOk;
}

int cmd_power_check(const Context& ctx, const std::string& a, const std::string& d, long n) {
    const RingDescriptor z_ring = RingDescriptor::integers();
    const ArithmeticProgression ap(parse_element(a, z_ring), parse_element(d, z_ring), n);
    const PowerCheckReport r = product_power_check(ap);
    if (ctx.json_output()) {
        ctx.emit(to_json(r));
    } else {
        ctx.out << "product = " << r.product.get_str() << "\n";
        if (!r.hypotheses_hold()) {
            ctx.out << "hypotheses fail (";
            if (!r.first_coprime_to_difference) ctx.out << "gcd(a, d) != 1; ";
            if (!r.length_within_bound) ctx.out << "n > 16; ";
            if (!r.perfect_power_terms.empty()) ctx.out << "a term is a perfect power; ";
            if (!r.unit_terms.empty()) ctx.out << "a term is a unit; ";
            ctx.out << "no claim)\n";
        }
        ctx.out << "product is " << (r.product_is_perfect_power ? "" : "not ") << "a perfect power\n";
    }
    return kOk;
}

}  // namespace

CliConfig parse_config(const std::string& text, CliConfig base) {
    std::stringstream ss(text);
    int line_no = 0;
    for (std::string line; std::getline(ss, line);) {
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ParseError("config line " + std::to_string(line_no) + ": expected key = value");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key == "imaginary_allowlist") {
            base.allowlist.imaginary = parse_long_list(value);
        } else if (key == "real_allowlist") {
            base.allowlist.real = parse_long_list(value);
        } else if (key == "format") {
            base.format = parse_format(value);
        } else if (key == "delta_bound") {
            base.delta_bound = to_long(parse_integer(value));
        } else if (key == "sweep_bound") {
            base.sweep_bound = to_long(parse_integer(value));
        } else if (key == "scan_limit") {
            base.scan_limit = to_long(parse_integer(value));
        } else if (key == "jobs") {
            base.jobs = static_cast<unsigned>(std::max(1L, to_long(parse_integer(value))));
        } else {
            throw ParseError("config line " + std::to_string(line_no) + ": unknown key '" + key + "'");
        }
    }
    return base;
}

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err, const std::string& env_format) {
    CLI::App app{"Coprime terms in arithmetic progressions over Z and quadratic rings",
                 "apcoprime"};
    app.require_subcommand(1);

    std::string format_flag, config_path;
    app.add_option("--format", format_flag, "Output format: text or json");
    app.add_option("--config", config_path, "Key-value config file");
    unsigned jobs = 0;
    app.add_option("--jobs", jobs, "Worker threads for sweeps");

    std::string ring = "Z", a, d, input;
    long n = 0, bound = 0, n_max = 0, cyclotomic = 0, limit = 0, count = 3;
    bool consecutive = false;

    auto* delta = app.add_subcommand("delta", "Decomposition number of a ring");
    delta->add_option("--ring", ring, "Z, gauss, eisenstein or \"Q(sqrt m)\"");
    delta->add_option("--cyclotomic", cyclotomic, "Conductor m of Z[zeta_m]")->check(CLI::PositiveNumber);
    auto* delta_bound = delta->add_option("--bound", bound, "Oracle search bound");

    auto add_progression = [&](CLI::App* sub) {
        sub->add_option("-a,--first", a, "First term")->required();
        sub->add_option("-d,--difference", d, "Common difference")->required();
        sub->add_option("-n,--length", n, "Number of terms")->required();
    };

    auto* find = app.add_subcommand("find-coprime", "Find a term coprime to all others");
    find->add_option("--ring", ring, "Ring");
    add_progression(find);

    auto* verify = app.add_subcommand("verify", "Exhaustive sweep of the min{16, 1+delta} bound");
    verify->add_option("--ring", ring, "Ring");
    auto* verify_bound = verify->add_option("--bound", bound, "Coordinate bound");
    verify->add_option("--nmax", n_max, "Largest length (default: the guaranteed maximum)");

    auto* counter = app.add_subcommand("counterexample", "Progressions without a coprime term");
    counter->add_option("--ring", ring, "Ring");
    counter->add_option("-n,--length", n, "Number of terms")->required();
    counter->add_flag("--consecutive", consecutive, "Search blocks of consecutive integers");
    auto* counter_limit = counter->add_option("--limit", limit, "Largest start for --consecutive");

    auto* crt = app.add_subcommand("crt-solve", "Solve z = u_i (mod v_i) read as JSON lines");
    crt->add_option("--ring", ring, "Ring");
    crt->add_option("--input", input, "File of JSON lines (default: stdin)");

    auto* transfer = app.add_subcommand("transfer", "z with term(i) | z - i for a progression over Z");
    add_progression(transfer);

    auto* squares = app.add_subcommand("squares", "Coprime three-term progressions of squares");
    squares->add_option("--count", count, "Number of triples")->check(CLI::PositiveNumber);

    auto* power = app.add_subcommand("power-check", "Is the product of a progression a perfect power?");
    add_progression(power);

    std::vector<std::string> argv_storage{"apcoprime"};
    argv_storage.insert(argv_storage.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& s : argv_storage) argv.push_back(s.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsageError;
    }

    try {
        CliConfig config;
        if (!config_path.empty()) {
            std::ifstream f(config_path);
            if (!f) throw ParseError("cannot open config file '" + config_path + "'");
            std::stringstream buf;
            buf << f.rdbuf();
            config = parse_config(buf.str(), config);
        }
        if (!env_format.empty()) config.format = parse_format(env_format);
        if (!format_flag.empty()) config.format = parse_format(format_flag);
        if (jobs > 0) config.jobs = jobs;
        const Context ctx{config, in, out, err};

        if (*delta) {
            if (cyclotomic > 0 && delta->count("--ring") > 0)
                throw PreconditionError("give either --ring or --cyclotomic");
            return cmd_delta(ctx, ring, cyclotomic, delta_bound->count() ? bound : config.delta_bound);
        }
        if (*find) return cmd_find_coprime(ctx, ring, a, d, n);
        if (*verify) return cmd_verify(ctx, ring, verify_bound->count() ? bound : config.sweep_bound, n_max);
        if (*counter)
            return cmd_counterexample(ctx, ring, n, consecutive,
                                      counter_limit->count() ? limit : config.scan_limit);
        if (*crt) return cmd_crt_solve(ctx, ring, input);
        if (*transfer) return cmd_transfer(ctx, a, d, n);
        if (*squares) return cmd_squares(ctx, count);
        if (*power) return cmd_power_check(ctx, a, d, n);
    } catch (const InvariantViolation& e) {
        err << "internal error: " << e.what() << "\n";
        return kInternalError;
    } catch (const PreconditionError& e) {
        err << "error: " << e.what() << "\n";
        return kUsageError;
    } catch (const json::exception& e) {
        err << "error: " << e.what() << "\n";
        return kUsageError;
    }
    return kUsageError;
}

}  // namespace apcoprime::cli
