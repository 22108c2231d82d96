#include "pdaw/cli/commands.hpp"

#include "pdaw/bound/orderings.hpp"
#include "pdaw/bound/search.hpp"
#include "pdaw/bound/theorem1.hpp"
#include "pdaw/closed_forms.hpp"
#include "pdaw/combinatorics.hpp"
#include "pdaw/constructions.hpp"
#include "pdaw/core/text_format.hpp"
#include "pdaw/core/verify.hpp"
#include "pdaw/error.hpp"
#include "pdaw/filler.hpp"
#include "pdaw/io/json.hpp"
#include "pdaw/simulator.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

namespace pdaw::cli {

namespace {

using io::Json;

/// Signals a budget-limited result so the caller exits with kExitBudget.
struct BudgetExceeded {};

struct RunConfig {
    std::uint64_t seed = 1;
    std::uint64_t budget = 100'000'000;
    std::string format = "text";
    unsigned threads = 1;
};

unsigned default_threads()
{
    if (const char* env = std::getenv(kThreadsEnv)) {
        char* end = nullptr;
        const unsigned long v = std::strtoul(env, &end, 10);
        if (end != env && *end == '\0')
            return static_cast<unsigned>(v);
    }
    return 1;
}

std::string read_input(const std::string& path, std::istream& in)
{
    std::ostringstream buf;
    if (path == "-") {
        buf << in.rdbuf();
        return buf.str();
    }
    std::ifstream f(path);
    if (!f)
        throw ParameterError("cannot open '" + path + "'");
    buf << f.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& text)
{
    std::ofstream f(path);
    if (!f)
        throw ParameterError("cannot write '" + path + "'");
    f << text;
}

std::string join(const std::vector<int>& v, const char* sep = " ")
{
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i)
        out += (i ? sep : "") + std::to_string(v[i]);
    return out;
}

std::string join(const std::vector<std::size_t>& v)
{
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i)
        out += (i ? " " : "") + std::to_string(v[i]);
    return out;
}

std::vector<int> parse_int_list(const std::string& text)
{
    std::vector<int> out;
    std::stringstream ss(text);
    for (std::string item; std::getline(ss, item, ',');) {
        std::size_t pos = 0;
        int v = 0;
        try {
            v = std::stoi(item, &pos);
        } catch (const std::exception&) {
            pos = 0;
        }
        if (pos == 0 || pos != item.size())
            throw ParameterError("expected a comma-separated integer list, got '" + text + "'");
        out.push_back(v);
    }
    return out;
}

std::string params_line(const PdaParams& p)
{
    return "(K,F,Z,S) = (" + std::to_string(p.users) + "," + std::to_string(p.rows) + "," +
           std::to_string(p.stars) + "," + std::to_string(p.symbols) + ")";
}

Json grid_rows_json(const PdaGrid& g)
{
    Json rows = Json::array();
    for (std::size_t r = 0; r < g.rows(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < g.cols(); ++c)
            row.push_back(g.is_star(r, c) ? Json("*") : Json(g.at(r, c)));
        rows.push_back(row);
    }
    return rows;
}

void print_json(std::ostream& out, const Json& body)
{
    out << io::with_schema(body).dump(2) << '\n';
}

// ---- construct ------------------------------------------------------------

struct ConstructArgs {
    std::string family;
    int q = 0, m = 0, a = 0, b = 0, h = 1, k = 0, t = 0;
    std::string output;
};

int cmd_construct(const ConstructArgs& a, const RunConfig& cfg, std::ostream& out, std::ostream& err)
{
    auto need = [](int v, const char* flag) {
        if (v <= 0)
            throw ParameterError(std::string("missing or non-positive ") + flag);
    };
    PdaGrid g;
    std::string label;
    if (a.family == "partition") {
        need(a.q, "--q");
        need(a.m, "--m");
        g = partition_pda({a.q, a.m});
        label = "partition q=" + std::to_string(a.q) + " m=" + std::to_string(a.m);
    } else if (a.family == "bipartite") {
        need(a.m, "--m");
        need(a.a, "--a");
        need(a.b, "--b");
        g = bipartite_pda({a.m, a.a, a.b, 1});
        label = "bipartite m=" + std::to_string(a.m) + " a=" + std::to_string(a.a) + " b=" + std::to_string(a.b);
    } else if (a.family == "grouping") {
        need(a.m, "--m");
        need(a.a, "--a");
        need(a.b, "--b");
        need(a.h, "--h");
        g = grouping_pda({a.m, a.a, a.b, a.h});
        label = "grouping m=" + std::to_string(a.m) + " a=" + std::to_string(a.a) + " b=" + std::to_string(a.b) +
                " h=" + std::to_string(a.h);
    } else if (a.family == "mn") {
        need(a.k, "--k");
        need(a.t, "--t");
        g = mn_pda(a.k, a.t);
        label = "mn K=" + std::to_string(a.k) + " t=" + std::to_string(a.t);
    } else {
        throw ParameterError("unknown family '" + a.family + "'");
    }
    const auto params = pda_params(g);
    if (cfg.format == "json") {
        print_json(out, {{"family", a.family}, {"label", label}, {"params", io::to_json(params)}, {"rows", grid_rows_json(g)}});
        if (!a.output.empty())
            write_file(a.output, write_pda_text(g));
        return kExitOk;
    }
    const std::string summary = "# " + label + ": " + params_line(params) + "\n";
    if (a.output.empty()) {
        out << write_pda_text(g);
        err << summary;
    } else {
        write_file(a.output, write_pda_text(g));
        out << summary;
    }
    return kExitOk;
}

// ---- verify ---------------------------------------------------------------

int cmd_verify(const std::string& path, const RunConfig& cfg, std::istream& in, std::ostream& out)
{
    const auto g = read_pda_text(read_input(path, in));
    const auto r = verify_pda(g);
    if (cfg.format == "json") {
        Json body = io::to_json(r);
        if (r.valid())
            body["params"] = io::to_json(pda_params(g));
        print_json(out, body);
        return r.valid() ? kExitOk : kExitFailure;
    }
    if (r.valid()) {
        const auto p = pda_params(g);
        out << "valid " << params_line(p) << ", rate " << to_string(p.rate()) << ", memory ratio "
            << to_string(p.memory_ratio()) << '\n';
        return kExitOk;
    }
    out << "invalid: " << r.violations.size() << " violation(s)\n";
    for (const auto& v : r.violations) {
        out << "  " << to_string(v.axiom);
        for (const auto& c : v.cells)
            out << " (" << c.row + 1 << "," << c.col + 1 << ")";
        if (!v.detail.empty())
            out << ": " << v.detail;
        out << '\n';
    }
    return kExitFailure;
}

// ---- bound ----------------------------------------------------------------

struct BoundArgs {
    std::string path;
    std::string method = "exact";
    std::string order;
    int q = 0, m = 0, a = 0, b = 0, h = 1;
};

// (q, m) with (m+1)q = K and q^m = F, smallest q first.
std::pair<int, int> infer_partition(std::size_t K, std::size_t F)
{
    for (int q = 2; static_cast<std::size_t>(q) <= K; ++q) {
        if (K % static_cast<std::size_t>(q) != 0)
            continue;
        const int m = static_cast<int>(K / static_cast<std::size_t>(q)) - 1;
        if (m < 1)
            continue;
        try {
            if (comb::checked_pow(static_cast<std::uint64_t>(q), static_cast<unsigned>(m)) == F)
                return {q, m};
        } catch (const CapacityError&) {
        }
    }
    throw ParameterError("cannot infer partition (q, m) from K=" + std::to_string(K) + ", F=" + std::to_string(F) +
                         "; pass --q and --m");
}

int cmd_bound(const BoundArgs& a, const RunConfig& cfg, std::istream& in, std::ostream& out)
{
    const auto parsed = read_any_text(read_input(a.path, in));
    std::optional<std::size_t> pda_symbols;
    StarPattern pattern;
    if (const auto* g = std::get_if<PdaGrid>(&parsed)) {
        const auto grid = g->normalized();
        pattern = to_star_pattern(grid);
        pda_symbols = static_cast<std::size_t>(grid.max_symbol());
    } else {
        pattern = std::get<StarPattern>(parsed);
    }

    BoundOptions opts;
    opts.node_budget = cfg.budget;
    opts.threads = cfg.threads;

    BoundCertificate cert;
    bool wanted_exact = false;
    if (a.method == "exact") {
        wanted_exact = true;
        cert = theorem1_auto(pattern, opts);
    } else if (a.method == "enumerate") {
        wanted_exact = true;
        cert = theorem1_enumerate(pattern);
    } else if (a.method == "greedy") {
        cert = theorem1_greedy(pattern);
    } else if (a.method == "order") {
        if (a.order.empty())
            throw ParameterError("--method order needs --order");
        cert = eval_ordering(pattern, UserOrdering::from_one_based(parse_int_list(a.order)));
    } else if (a.method == "ordered:partition") {
        auto [q, m] = a.q > 0 && a.m > 0 ? std::pair{a.q, a.m} : infer_partition(pattern.users(), pattern.rows());
        cert = eval_ordering(pattern, partition_ordering(q, m));
    } else if (a.method == "ordered:bipartite") {
        cert = eval_ordering(pattern, bipartite_ordering(a.m, a.a, a.b));
    } else if (a.method == "ordered:grouping") {
        cert = eval_ordering(pattern, grouping_ordering(a.m, a.a, a.b, a.h));
    } else {
        throw ParameterError("unknown method '" + a.method + "'");
    }

    const bool certified = pda_symbols && cert.value == *pda_symbols;
    if (cfg.format == "json") {
        Json body = io::to_json(cert);
        if (pda_symbols) {
            body["pda_symbols"] = *pda_symbols;
            body["optimality_certified"] = certified;
        }
        print_json(out, body);
    } else {
        out << "method: " << to_string(cert.method) << (cert.exact ? " (exact)" : " (lower bound)") << '\n';
        out << "value: " << cert.value << '\n';
        out << "rate bound: " << to_string(cert.rate_bound()) << '\n';
        out << "witness: " << join(cert.witness.one_based()) << '\n';
        out << "steps: " << join(cert.step_sizes) << '\n';
        if (cert.nodes)
            out << "nodes: " << cert.nodes << '\n';
        if (pda_symbols) {
            out << "PDA symbols: " << *pda_symbols;
            out << (certified ? ", optimality certified" : "") << '\n';
        }
    }
    if (pda_symbols && cert.value > *pda_symbols)
        return kExitFailure;  // cannot happen for a valid PDA
    if (wanted_exact && !cert.exact)
        return kExitBudget;
    return kExitOk;
}

// ---- search ---------------------------------------------------------------

struct SearchArgs {
    std::size_t k = 0, f = 0, z = 0;
    std::string mode = "canonical";
    std::string output;
};

int cmd_search(const SearchArgs& a, const RunConfig& cfg, std::ostream& out)
{
    SearchOptions opts;
    if (a.mode == "exhaustive")
        opts.mode = SearchMode::exhaustive;
    else if (a.mode != "canonical")
        throw ParameterError("unknown mode '" + a.mode + "'");
    opts.node_budget = cfg.budget;
    opts.inner.node_budget = cfg.budget;
    opts.inner.threads = 1;
    const auto r = theorem3_search(a.k, a.f, a.z, opts);
    if (!a.output.empty())
        write_file(a.output, write_placement_text(r.best_pattern));
    if (cfg.format == "json") {
        print_json(out, io::to_json(r));
    } else {
        out << "mode: " << to_string(r.mode) << '\n';
        out << "value: " << r.best_value << '\n';
        out << "rate bound: " << to_string(r.rate_bound()) << '\n';
        out << "complete: " << (r.exhaustive ? "yes" : "no") << '\n';
        out << "nodes: " << r.nodes_explored << ", dedup hits: " << r.dedup_hits << ", pruned: " << r.pruned << '\n';
        out << "witness:\n";
        for (std::size_t k = 0; k < r.best_pattern.users(); ++k)
            out << "  A_" << k + 1 << " = {" << join(r.best_pattern.uncached(k).one_based(), ",") << "}\n";
    }
    return r.exhaustive ? kExitOk : kExitBudget;
}

// ---- simulate -------------------------------------------------------------

struct SimulateArgs {
    std::string path;
    std::size_t files = 0;
    std::string demand;
    bool sweep = false;
    std::size_t sample = 0;
    std::size_t packet_len = kDefaultPacketLen;
    std::string transcript;
};

int cmd_simulate(const SimulateArgs& a, const RunConfig& cfg, std::istream& in, std::ostream& out)
{
    const auto grid = read_pda_text(read_input(a.path, in)).normalized();
    if (!verify_pda(grid).valid())
        throw StructuralError("input is not a valid PDA; run 'verify' for details");
    const std::size_t N = a.files ? a.files : grid.cols();
    const auto lib = FileLibrary::generate(N, grid.rows(), a.packet_len, cfg.seed);

    std::vector<DemandVector> demands;
    const int chosen = (!a.demand.empty()) + a.sweep + (a.sample > 0);
    if (chosen > 1)
        throw ParameterError("choose one of --demand, --sweep, --sample");
    if (!a.demand.empty())
        demands.push_back(DemandVector::parse(a.demand));
    else if (a.sweep)
        demands = all_demands(N, grid.cols());
    else if (a.sample > 0)
        demands = sample_demands(N, grid.cols(), a.sample, cfg.seed);
    else {
        // Worst case: distinct files when N >= K, else round robin.
        DemandVector d;
        for (std::size_t k = 0; k < grid.cols(); ++k)
            d.files.push_back(k % N);
        demands.push_back(d);
    }
    for (const auto& d : demands)
        if (d.files.size() != grid.cols())
            throw ParameterError("demand needs " + std::to_string(grid.cols()) + " entries");

    const auto summary = simulate_sweep(grid, lib, demands, cfg.threads);
    const bool ok = summary.decoded == summary.demands;

    Json transcript_json;
    if (!a.transcript.empty() || (cfg.format == "json" && demands.size() == 1)) {
        const auto t = deliver(grid, lib, demands.front());
        const auto r = decode(grid, t, place(grid, lib), lib);
        transcript_json = io::to_json(t, &r);
        if (!a.transcript.empty())
            write_file(a.transcript, io::with_schema(transcript_json).dump(2) + "\n");
    }

    if (cfg.format == "json") {
        Json body{{"params", io::to_json(pda_params(grid))},
                  {"files", N},
                  {"packet_len", a.packet_len},
                  {"seed", cfg.seed},
                  {"demands", summary.demands},
                  {"decoded", summary.decoded},
                  {"rate", io::rational_to_json(summary.rate)},
                  {"verified", ok}};
        if (summary.first_failure) {
            const auto& f = *summary.first_failure;
            body["first_failure"] = {{"signal", f.signal}, {"user", f.user + 1}, {"row", f.row + 1}, {"reason", f.reason}};
        }
        if (!transcript_json.is_null() && a.transcript.empty())
            body["transcript"] = transcript_json;
        print_json(out, body);
    } else {
        out << "PDA " << params_line(pda_params(grid)) << ", N=" << N << ", packet " << a.packet_len << " bytes\n";
        if (demands.size() == 1) {
            const auto t = deliver(grid, lib, demands.front());
            out << "demand: " << join(demands.front().one_based(), ",") << '\n';
            for (const auto& s : t.signals) {
                out << "  signal " << s.symbol << ":";
                for (std::size_t i = 0; i < s.terms.size(); ++i)
                    out << (i ? " +" : "") << " W[" << demands.front().files[s.terms[i].user] + 1 << ","
                        << s.terms[i].row + 1 << "]";
                out << '\n';
            }
        }
        out << "demands: " << summary.demands << ", decoded: " << summary.decoded << '\n';
        out << "rate: " << to_string(summary.rate) << '\n';
        if (summary.first_failure) {
            const auto& f = *summary.first_failure;
            out << "first failure: signal " << f.signal << ", user " << f.user + 1 << ", row " << f.row + 1 << ": "
                << f.reason << '\n';
        }
        out << "verdict: " << (ok ? "all users decoded" : "DECODE FAILURE") << '\n';
    }
    return ok ? kExitOk : kExitFailure;
}

// ---- fill -----------------------------------------------------------------

struct FillArgs {
    std::string path;
    std::string method = "exact";
    std::string order = "degree_desc";
    std::string output;
};

int cmd_fill(const FillArgs& a, const RunConfig& cfg, std::istream& in, std::ostream& out, std::ostream& err)
{
    const auto pattern = read_pattern_text(read_input(a.path, in));
    PdaGrid g;
    bool optimal = false;
    std::size_t lower = 0;
    if (a.method == "exact") {
        const auto r = fill_exact(pattern, cfg.budget);
        g = r.grid;
        optimal = r.optimal;
        lower = r.lower_bound;
    } else if (a.method == "greedy") {
        VertexOrder order = VertexOrder::degree_desc;
        if (a.order == "row_major")
            order = VertexOrder::row_major;
        else if (a.order != "degree_desc")
            throw ParameterError("unknown vertex order '" + a.order + "'");
        g = fill_greedy(pattern, order);
    } else {
        throw ParameterError("unknown method '" + a.method + "'");
    }
    if (!verify_pda(g).valid())
        throw std::logic_error("filler produced an invalid array");
    const auto params = pda_params(g);
    if (!a.output.empty())
        write_file(a.output, write_pda_text(g));
    if (cfg.format == "json") {
        Json body{{"method", a.method}, {"params", io::to_json(params)}, {"rows", grid_rows_json(g)}};
        if (a.method == "exact") {
            body["optimal"] = optimal;
            body["lower_bound"] = lower;
        }
        print_json(out, body);
    } else {
        std::ostringstream summary;
        summary << "# " << a.method << " fill: " << params_line(params);
        if (a.method == "exact")
            summary << (optimal ? ", optimal" : ", not proven optimal") << ", lower bound " << lower;
        summary << '\n';
        if (a.output.empty()) {
            out << write_pda_text(g);
            err << summary.str();
        } else {
            out << summary.str();
        }
    }
    return a.method == "exact" && !optimal ? kExitBudget : kExitOk;
}

// ---- table ----------------------------------------------------------------

struct TableArgs {
    std::string family = "partition";
    std::string q_list = "2,3,4,5";
    int m_min = 2;
    int m_max = 5;
    std::size_t exact_cap = 12;
};

int cmd_table(const TableArgs& a, const RunConfig& cfg, std::ostream& out)
{
    if (a.family != "partition")
        throw ParameterError("table supports --family partition only");
    BoundOptions opts;
    opts.node_budget = cfg.budget;
    opts.threads = cfg.threads;
    opts.max_exact_users = a.exact_cap;
    Json rows = Json::array();
    if (cfg.format != "json")
        out << ratio_csv_header() << '\n';
    bool ordered = true;
    for (int q : parse_int_list(a.q_list))
        for (int m = a.m_min; m <= a.m_max; ++m) {
            std::uint64_t F = 0;
            try {
                F = comb::checked_pow(static_cast<std::uint64_t>(q), static_cast<unsigned>(m));
            } catch (const CapacityError&) {
                F = kMaxRows + 1;
            }
            if (F > kMaxRows)
                continue;  // F beyond the row-set capacity
            const auto r = ratio_report(q, m, true, opts);
            if (r.s_exact && !(r.s_derived <= *r.s_exact && *r.s_exact <= r.s_pda))
                ordered = false;
            if (cfg.format == "json")
                rows.push_back(io::to_json(r));
            else
                out << ratio_csv_row(r) << '\n';
        }
    if (cfg.format == "json")
        print_json(out, {{"family", a.family}, {"rows", rows}});
    return ordered ? kExitOk : kExitFailure;
}

// ---- formulas -------------------------------------------------------------

int cmd_formulas(const RunConfig& cfg, std::ostream& out)
{
    struct Check {
        std::string name;
        std::function<bool()> run;
    };
    const std::vector<Check> checks{
        {"phi < 1 and non-increasing, q in [3,64]",
         [] {
             for (int q = 3; q <= 64; ++q)
                 for (int z = 2; z <= q; ++z)
                     if (!(phi(q, z) < 1) || (z < q && phi(q, z + 1) > phi(q, z)))
                         return false;
             return true;
         }},
        {"|C_v| counts match closed form, q in [2,6], m in [2,8]",
         [] {
             for (int q = 3; q <= 6; ++q)
                 for (int m = 2; m <= 8; ++m) {
                     const auto c = partition_counts(q, m);
                     const auto [common, odd] = prop2_values(q, m);
                     const int ex = exceptional_residue(q, m);
                     for (int v = 1; v <= q; ++v)
                         if (c.c_sizes[static_cast<std::size_t>(v - 1)] != (v == ex ? odd : common))
                             return false;
                 }
             for (int m = 2; m <= 8; ++m)
                 if (partition_counts(2, m).c_sizes[0] + partition_counts(2, m).c_sizes[1] != 1)
                     return false;
             return true;
         }},
        {"lemma 3 intersection sizes, q in [2,5], m in [2,4]",
         [] {
             for (int q = 2; q <= 5; ++q)
                 for (int m = 2; m <= 4; ++m)
                     for (int l = 1; l <= q - 1; ++l)
                         for (const auto& res : comb::subsets_lex(q, l)) {
                             std::vector<int> tail(static_cast<std::size_t>(m - 1), 1);
                             for (;;) {
                                 if (lemma3_intersection(q, m, res, tail) != lemma3_brute(q, res, tail))
                                     return false;
                                 std::size_t i = 0;
                                 while (i < tail.size() && ++tail[i] == q)
                                     tail[i++] = 1;
                                 if (i == tail.size())
                                     break;
                             }
                         }
             return true;
         }},
        {"geometric sum closed form, q in [2,10], m in [1,12]",
         [] {
             // geometric_sum throws when the direct sum and closed form disagree.
             for (int q = 2; q <= 10; ++q)
                 for (int m = 1; m <= 12; ++m)
                     geometric_sum(q, m);
             return true;
         }},
        {"even-m partition bound equals ordered evaluation, q in [2,5], m in {2,4}",
         [] {
             for (int q = 2; q <= 5; ++q)
                 for (int m : {2, 4})
                     if (partition_bound_closed(q, m).value != partition_ordered_value(q, m))
                         return false;
             return true;
         }},
        {"odd-m partition bound (3,3) = 47 by ordered evaluation",
         [] { return partition_bound_closed(3, 3).value == 47; }},
        {"binomial identity, a+b < m <= 16",
         [] {
             for (int m = 3; m <= 16; ++m)
                 for (int a = 1; a < m; ++a)
                     for (int b = 1; a + b < m; ++b)
                         binomial_identity_check(m, a, b);
             return true;
         }},
    };
    Json results = Json::array();
    bool all = true;
    for (const auto& c : checks) {
        bool ok = false;
        std::string error;
        try {
            ok = c.run();
        } catch (const std::exception& e) {
            error = e.what();
        }
        all = all && ok;
        if (cfg.format == "json")
            results.push_back({{"check", c.name}, {"pass", ok}, {"error", error}});
        else
            out << (ok ? "PASS " : "FAIL ") << c.name << (error.empty() ? "" : ": " + error) << '\n';
    }
    if (cfg.format == "json")
        print_json(out, {{"checks", results}, {"all_pass", all}});
    return all ? kExitOk : kExitFailure;
}

} // namespace

int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Placement delivery array workbench"};
    app.name("pdaw");
    // Help is --help only so that grouping can take --h.
    app.set_help_flag("--help", "Print this help message and exit");
    app.require_subcommand(1);
    app.fallthrough();

    RunConfig cfg;
    cfg.threads = default_threads();
    app.add_option("--seed", cfg.seed, "Seed for payloads and demand sampling")->capture_default_str();
    app.add_option("--budget", cfg.budget, "Search node budget")->capture_default_str();
    app.add_option("--format", cfg.format, "Output format")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->capture_default_str();
    app.add_option("--threads", cfg.threads, std::string("Worker threads, 0 = all cores (default from ") +
                                                 kThreadsEnv + ")")
        ->capture_default_str();

    ConstructArgs ca;
    auto* construct = app.add_subcommand("construct", "Generate a PDA family member");
    construct->add_option("family", ca.family, "partition | bipartite | grouping | mn")
        ->required()
        ->check(CLI::IsMember({"partition", "bipartite", "grouping", "mn"}));
    construct->add_option("--q", ca.q, "Alphabet size (partition)");
    construct->add_option("--m", ca.m, "Vector length (partition) or ground set size (bipartite, grouping)");
    construct->add_option("--a", ca.a, "User subset size");
    construct->add_option("--b", ca.b, "Row subset size");
    construct->add_option("--h,--copies", ca.h, "Copies (grouping)");
    construct->add_option("--k", ca.k, "Users (mn)");
    construct->add_option("--t", ca.t, "Cache parameter (mn)");
    construct->add_option("-o,--output", ca.output, "Write the array to a file");

    std::string verify_path;
    auto* verify = app.add_subcommand("verify", "Check the PDA axioms");
    verify->add_option("file", verify_path, "PDA file, or - for stdin")->required();

    BoundArgs ba;
    auto* bound = app.add_subcommand("bound", "Lower bound on S for a placement");
    bound->add_option("file", ba.path, "PDA or placement file, or - for stdin")->required();
    bound->add_option("--method", ba.method,
                      "exact | enumerate | greedy | order | ordered:partition | ordered:bipartite | ordered:grouping")
        ->capture_default_str();
    bound->add_option("--order", ba.order, "Comma-separated user ordering for --method order");
    bound->add_option("--q", ba.q);
    bound->add_option("--m", ba.m);
    bound->add_option("--a", ba.a);
    bound->add_option("--b", ba.b);
    bound->add_option("--h,--copies", ba.h);

    SearchArgs sa;
    auto* search = app.add_subcommand("search", "Min-max bound over all placements");
    search->add_option("--k", sa.k, "Users")->required();
    search->add_option("--f", sa.f, "Subpacketization")->required();
    search->add_option("--z", sa.z, "Stars per column")->required();
    search->add_option("--mode", sa.mode, "canonical | exhaustive")
        ->check(CLI::IsMember({"canonical", "exhaustive"}))
        ->capture_default_str();
    search->add_option("-o,--output", sa.output, "Write the witness placement to a file");

    SimulateArgs ma;
    auto* simulate = app.add_subcommand("simulate", "Run placement, delivery and decoding");
    simulate->add_option("file", ma.path, "PDA file, or - for stdin")->required();
    simulate->add_option("--files", ma.files, "Library size N (default K)");
    simulate->add_option("--demand", ma.demand, "Comma-separated demand, e.g. 1,2,3");
    simulate->add_flag("--sweep", ma.sweep, "Every demand vector");
    simulate->add_option("--sample", ma.sample, "Random demand vectors");
    simulate->add_option("--packet-len", ma.packet_len, "Bytes per packet")->capture_default_str();
    simulate->add_option("--transcript", ma.transcript, "Write the first demand's transcript as JSON");

    FillArgs fa;
    auto* fill = app.add_subcommand("fill", "Assign symbols to a placement");
    fill->add_option("file", fa.path, "Placement or PDA file, or - for stdin")->required();
    fill->add_option("--method", fa.method, "exact | greedy")->capture_default_str();
    fill->add_option("--order", fa.order, "Greedy vertex order: row_major | degree_desc")->capture_default_str();
    fill->add_option("-o,--output", fa.output, "Write the array to a file");

    TableArgs ta;
    auto* table = app.add_subcommand("table", "Partition bound ratios as CSV");
    table->add_option("--family", ta.family)->capture_default_str();
    table->add_option("--q-list", ta.q_list)->capture_default_str();
    table->add_option("--m-min", ta.m_min)->capture_default_str();
    table->add_option("--m-max", ta.m_max)->capture_default_str();
    table->add_option("--exact-cap", ta.exact_cap, "Largest K for the exact search")->capture_default_str();

    auto* formulas = app.add_subcommand("formulas", "Check the closed forms against direct evaluation");

    try {
        std::vector<std::string> args;
        for (int i = argc - 1; i > 0; --i)
            args.emplace_back(argv[i]);
        app.parse(args);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "pdaw: " << e.what() << '\n';
        return kExitUsage;
    }

    try {
        if (*construct)
            return cmd_construct(ca, cfg, out, err);
        if (*verify)
            return cmd_verify(verify_path, cfg, in, out);
        if (*bound)
            return cmd_bound(ba, cfg, in, out);
        if (*search)
            return cmd_search(sa, cfg, out);
        if (*simulate)
            return cmd_simulate(ma, cfg, in, out);
        if (*fill)
            return cmd_fill(fa, cfg, in, out, err);
        if (*table)
            return cmd_table(ta, cfg, out);
        if (*formulas)
            return cmd_formulas(cfg, out);
    } catch (const ParameterError& e) {
        err << "pdaw: " << e.what() << '\n';
        return kExitUsage;
    } catch (const CapacityError& e) {
        err << "pdaw: " << e.what() << '\n';
        return kExitUsage;
    } catch (const StructuralError& e) {
        err << "pdaw: " << e.what() << '\n';
        return kExitFailure;
    } catch (const std::exception& e) {
        err << "pdaw: internal error: " << e.what() << '\n';
        return kExitFailure;
    }
    return kExitUsage;
}

} // namespace pdaw::cli
