// Command-line front end: enumerate interval partitions, evaluate exact
// finite-N trace moments and their limits, run verification sweeps, and
// inspect entry-permutation diagnostics.

#include "brmt/json_io.hpp"
#include "brmt/matrix_moments.hpp"
#include "brmt/verify.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <memory>
#include <sstream>

namespace {

using namespace brmt;

std::uint64_t budget_from_env() {
    if (const char* v = std::getenv("BOOLEAN_RMT_BUDGET")) {
        const long long parsed = std::atoll(v);
        if (parsed > 0) return std::uint64_t(parsed);
    }
    return kDefaultBudget;
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, sep))
        if (!tok.empty()) out.push_back(tok);
    return out;
}

std::vector<Rational> parse_rational_list(const std::string& text) {
    std::vector<Rational> out;
    for (const auto& tok : split(text, ',')) out.push_back(rational_from_string(tok));
    return out;
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    for (const auto& tok : split(text, ',')) out.push_back(std::stoi(tok));
    return out;
}

std::string format_float(double v) {
    std::ostringstream os;
    os << std::setprecision(12) << v;
    return os.str();
}

// Writes the selected representation to --out or stdout.
struct Sink {
    std::string format = "text";
    std::string path;

    void write(const std::string& text, const Json& json, const std::string& csv) const {
        std::string payload;
        if (format == "json")
            payload = json.dump(2) + "\n";
        else if (format == "csv")
            payload = csv;
        else
            payload = text;
        if (path.empty()) {
            std::cout << payload;
        } else {
            std::ofstream out(path);
            if (!out) throw std::runtime_error("cannot open output file " + path);
            out << payload;
        }
    }
};

// Instantiates a named permutation at grid size N.  Recognized names:
// e | identity, t | transpose, partial:m,n | pt:m,n (requires N == m*n),
// partial-m:m (n = N/m), csv:path.
PermutationSpec instantiate_perm(const std::string& name, int N) {
    if (name == "e" || name == "id" || name == "identity") return PermutationSpec::identity(N);
    if (name == "t" || name == "transpose") return PermutationSpec::transpose(N);
    const auto colon = name.find(':');
    const std::string head = name.substr(0, colon);
    if (head == "partial" || head == "pt") {
        if (colon == std::string::npos)
            throw std::invalid_argument("partial transpose needs parameters, e.g. partial:2,3");
        const auto parts = parse_int_list(name.substr(colon + 1));
        if (parts.size() == 1) {  // m fixed, n from N
            const int m = parts[0];
            if (m < 1 || N % m != 0)
                throw std::invalid_argument("partial transpose: N must be divisible by m");
            return PermutationSpec::partial_transpose(m, N / m);
        }
        if (parts.size() != 2) throw std::invalid_argument("partial transpose: expected m,n");
        if (parts[0] * parts[1] != N)
            throw std::invalid_argument("partial transpose: N must equal m*n");
        return PermutationSpec::partial_transpose(parts[0], parts[1]);
    }
    if (head == "csv") {
        std::ifstream in(name.substr(colon + 1));
        if (!in) throw std::runtime_error("cannot open permutation csv " + name.substr(colon + 1));
        std::vector<std::array<int, 4>> rows;
        std::string line;
        while (std::getline(in, line)) {
            if (line.empty()) continue;
            const auto cells = parse_int_list(line);
            if (cells.size() != 4)
                throw std::invalid_argument("permutation csv rows must be i,j,i',j'");
            rows.push_back({cells[0], cells[1], cells[2], cells[3]});
        }
        return PermutationSpec::from_pairs(N, rows, name);
    }
    throw std::invalid_argument("unknown permutation \"" + name + "\"");
}

struct ModelOptions {
    std::string xi_text;
    std::string labels_text;
    std::string alpha_text, beta_text;
    std::string model_path;
    std::vector<std::string> perm_names;

    SignPattern xi() const { return SignPattern::parse(xi_text); }

    LabelTuple labels(std::size_t n) const {
        if (labels_text.empty()) return LabelTuple(std::vector<int>(n, 1));
        auto ls = parse_int_list(labels_text);
        if (ls.size() != n)
            throw std::invalid_argument("--labels length must match the word length");
        return LabelTuple(std::move(ls));
    }

    std::map<int, BDiagonalLaw> laws(const LabelTuple& lt) const {
        std::map<int, BDiagonalLaw> out;
        if (!model_path.empty()) {
            const Json j = load_json_file(model_path);
            if (j.contains("laws")) {
                for (const auto& [key, value] : j["laws"].items())
                    out.emplace(std::stoi(key), law_from_json(value));
            } else {
                const BDiagonalLaw law = law_from_json(j);
                for (std::size_t s = 0; s < lt.size(); ++s) out.emplace(lt[s], law);
            }
        } else {
            const BDiagonalLaw law(parse_rational_list(alpha_text),
                                   parse_rational_list(beta_text));
            for (std::size_t s = 0; s < lt.size(); ++s) out.emplace(lt[s], law);
        }
        return out;
    }

    std::map<int, EntryModel> entry_models(const LabelTuple& lt) const {
        std::map<int, EntryModel> out;
        for (const auto& [label, law] : laws(lt))
            out.emplace(label, EntryModel::bdiag_family(law.alpha_sequence(),
                                                        law.beta_sequence()));
        return out;
    }
};

int cmd_partitions(int n, const std::string& xi_text, const Sink& sink) {
    std::vector<IntervalPartition> list;
    if (xi_text.empty()) {
        list = enumerate_partitions(n);
    } else {
        const SignPattern xi = SignPattern::parse(xi_text);
        if (int(xi.size()) != n)
            throw std::invalid_argument("--xi length must equal n");
        list = enumerate_alt(xi);
    }
    std::string text, csv = "partition\n";
    Json jlist = Json::array();
    for (const auto& p : list) {
        text += p.str() + "\n";
        csv += "\"" + p.str() + "\"\n";
        jlist.push_back(partition_to_json(p));
    }
    text += std::to_string(list.size()) + " partition" + (list.size() == 1 ? "" : "s") + "\n";
    sink.write(text, Json{{"command", "partitions"},
                          {"n", n},
                          {"xi", xi_text},
                          {"count", list.size()},
                          {"partitions", jlist}},
               csv);
    return 0;
}

int cmd_limit(const ModelOptions& opts, bool selfadjoint, int sa_n, const Sink& sink) {
    Rational value;
    std::string word;
    if (selfadjoint) {
        const Rational alpha = rational_from_string(opts.alpha_text);
        const Rational beta = rational_from_string(opts.beta_text);
        value = limit_selfadjoint(alpha, beta, sa_n);
        word = "B^" + std::to_string(sa_n);
    } else {
        const SignPattern xi = opts.xi();
        const LabelTuple lt = opts.labels(xi.size());
        const auto laws = opts.laws(lt);
        if (!opts.perm_names.empty()) {
            if (opts.perm_names.size() != xi.size())
                throw std::invalid_argument("--perm must be given once per word position");
            std::vector<int> plabels;
            std::vector<std::string> seen;
            for (const auto& nm : opts.perm_names) {
                if (nm == "e" || nm == "id" || nm == "identity") {
                    plabels.push_back(0);
                } else {
                    auto it = std::find(seen.begin(), seen.end(), nm);
                    if (it == seen.end()) {
                        seen.push_back(nm);
                        it = std::prev(seen.end());
                    }
                    plabels.push_back(int(it - seen.begin()) + 1);
                }
            }
            value = limit_permuted(LabelTuple(plabels), xi, laws.begin()->second);
        } else if (omega_of_labels(lt).block_count() > 1) {
            value = limit_mixed(lt, xi, laws);
        } else {
            value = limit_bdiag(xi, laws.at(lt[0]));
        }
        word = xi.str();
    }
    const std::string text = "limit(" + word + ") = " + to_fraction_string(value) + " (" +
                             format_float(to_double(value)) + ")\n";
    sink.write(text,
               Json{{"command", "limit"},
                    {"word", word},
                    {"value", rational_to_json(value)},
                    {"value_float", to_double(value)}},
               "word,value,value_float\n\"" + word + "\"," + to_fraction_string(value) + "," +
                   format_float(to_double(value)) + "\n");
    return 0;
}

int cmd_converge(const ModelOptions& opts, bool selfadjoint, int sa_n,
                 const std::string& sweep_text, const std::string& method, std::uint64_t budget,
                 const Sink& sink) {
    const std::vector<int> sweep = parse_int_list(sweep_text);
    if (sweep.empty()) throw std::invalid_argument("--N sweep must not be empty");
    for (std::size_t k = 0; k + 1 < sweep.size(); ++k)
        if (sweep[k + 1] <= sweep[k])
            throw std::invalid_argument("--N sweep must be strictly increasing");

    Rational limit;
    std::string word;
    struct Row {
        int N;
        Rational exact;
        Rational err;
    };
    std::vector<Row> rows;

    if (selfadjoint) {
        const Rational alpha = rational_from_string(opts.alpha_text);
        const Rational beta = rational_from_string(opts.beta_text);
        const auto model = EntryModel::selfadjoint_family(alpha, beta);
        limit = limit_selfadjoint(alpha, beta, sa_n);
        word = "B^" + std::to_string(sa_n);
        for (int N : sweep) {
            Rational exact;
            if (method == "brute")
                exact = trace_moment_selfadjoint_exact(model, sa_n, N, TraceMethod::brute, budget);
            else if (method == "both") {
                exact = trace_moment_selfadjoint_exact(model, sa_n, N, TraceMethod::brute, budget);
                if (exact !=
                    trace_moment_selfadjoint_exact(model, sa_n, N, TraceMethod::partition))
                    throw std::runtime_error("method disagreement at N=" + std::to_string(N));
            } else {
                exact = trace_moment_selfadjoint_exact(model, sa_n, N, TraceMethod::partition);
            }
            Rational err = exact - limit;
            if (err < 0) err = -err;
            rows.push_back({N, exact, err});
        }
    } else {
        const SignPattern xi = opts.xi();
        const LabelTuple lt = opts.labels(xi.size());
        const auto models = opts.entry_models(lt);
        const auto laws = opts.laws(lt);
        word = xi.str();

        for (int N : sweep) {
            std::vector<std::unique_ptr<PermutationSpec>> owned;
            std::vector<const PermutationSpec*> perms;
            if (!opts.perm_names.empty()) {
                if (opts.perm_names.size() != xi.size())
                    throw std::invalid_argument("--perm must be given once per word position");
                for (const auto& nm : opts.perm_names) {
                    if (nm == "e" || nm == "id" || nm == "identity") {
                        perms.push_back(nullptr);
                    } else {
                        owned.push_back(
                            std::make_unique<PermutationSpec>(instantiate_perm(nm, N)));
                        perms.push_back(owned.back().get());
                    }
                }
            }
            const MixedWordSpec spec(lt, xi, models, perms);
            Rational exact;
            if (method == "brute")
                exact = trace_moment_exact(spec, N, TraceMethod::brute, budget);
            else if (method == "both") {
                exact = trace_moment_exact(spec, N, TraceMethod::brute, budget);
                if (exact != trace_moment_exact(spec, N, TraceMethod::partition, budget))
                    throw std::runtime_error("method disagreement at N=" + std::to_string(N));
            } else {
                exact = trace_moment_exact(spec, N, TraceMethod::partition, budget);
            }
            if (rows.empty()) {  // limit is N-independent; compute once
                if (!opts.perm_names.empty()) {
                    MixedWordSpec lspec(lt, xi, models, perms);
                    limit = limit_permuted(lspec);
                } else if (omega_of_labels(lt).block_count() > 1) {
                    limit = limit_mixed(lt, xi, laws);
                } else {
                    limit = limit_bdiag(xi, laws.at(lt[0]));
                }
            }
            Rational err = exact - limit;
            if (err < 0) err = -err;
            rows.push_back({N, exact, err});
        }
    }

    std::ostringstream text;
    text << "word " << word << ", limit = " << to_fraction_string(limit) << " ("
         << format_float(to_double(limit)) << ")\n";
    text << std::left << std::setw(8) << "N" << std::setw(24) << "exact" << std::setw(18)
         << "float" << std::setw(16) << "abs_error" << "N*error\n";
    std::string csv = "word,N,exact,limit,abs_error\n";
    Json jrows = Json::array();
    for (const auto& r : rows) {
        text << std::left << std::setw(8) << r.N << std::setw(24) << to_fraction_string(r.exact)
             << std::setw(18) << format_float(to_double(r.exact)) << std::setw(16)
             << format_float(to_double(r.err)) << format_float(to_double(r.err) * r.N) << "\n";
        csv += "\"" + word + "\"," + std::to_string(r.N) + "," + to_fraction_string(r.exact) +
               "," + to_fraction_string(limit) + "," + to_fraction_string(r.err) + "\n";
        jrows.push_back(Json{{"word", word},
                             {"N", r.N},
                             {"exact", rational_to_json(r.exact)},
                             {"exact_float", to_double(r.exact)},
                             {"limit", rational_to_json(limit)},
                             {"abs_error", rational_to_json(r.err)},
                             {"abs_error_float", to_double(r.err)}});
    }
    sink.write(text.str(),
               Json{{"command", "converge"},
                    {"word", word},
                    {"limit", rational_to_json(limit)},
                    {"rows", jrows}},
               csv);
    return 0;
}

int cmd_verify(const std::string& suite, int n_max, int N_max, int order, int cases,
               std::uint64_t seed, const Sink& sink) {
    const auto results = verify::run_suite(suite, n_max, N_max, order, cases, seed);
    bool all = true;
    std::string text, csv = "check,pass,detail\n";
    Json jrows = Json::array();
    for (const auto& r : results) {
        all = all && r.pass;
        text += std::string(r.pass ? "[PASS] " : "[FAIL] ") + r.name + ": " + r.detail + "\n";
        csv += r.name + "," + (r.pass ? "1" : "0") + ",\"" + r.detail + "\"\n";
        jrows.push_back(Json{{"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
    }
    text += all ? "all checks passed\n" : "some checks FAILED\n";
    sink.write(text, Json{{"command", "verify"}, {"suite", suite}, {"pass", all},
                          {"checks", jrows}},
               csv);
    return all ? 0 : 1;
}

int cmd_theta(const std::string& perm_name, const std::string& sweep_text, double theta,
              const Sink& sink) {
    const auto sweep = parse_int_list(sweep_text);
    if (sweep.empty()) throw std::invalid_argument("--N sweep must not be empty");
    std::ostringstream text;
    text << "permutation " << perm_name << ", theta = " << theta << "\n";
    text << std::left << std::setw(8) << "N" << std::setw(16) << "count" << std::setw(18)
         << "count/N^theta" << std::setw(14) << "chain_pairs" << "pairs/N^2\n";
    std::string csv = "N,count,count_ratio,chain_pairs,pairs_ratio\n";
    Json jrows = Json::array();
    for (int N : sweep) {
        const PermutationSpec perm = instantiate_perm(perm_name, N);
        const BigInt count = theta_condition_count(perm);
        const auto pairs = chain_fixed_pairs(perm);
        const double ratio = theta_ratio(count, N, theta);
        const double pratio = double(pairs.size()) / (double(N) * N);
        text << std::left << std::setw(8) << N << std::setw(16) << count.str() << std::setw(18)
             << format_float(ratio) << std::setw(14) << pairs.size() << format_float(pratio)
             << "\n";
        csv += std::to_string(N) + "," + count.str() + "," + format_float(ratio) + "," +
               std::to_string(pairs.size()) + "," + format_float(pratio) + "\n";
        jrows.push_back(Json{{"N", N},
                             {"count", count.str()},
                             {"count_ratio", ratio},
                             {"chain_pairs", pairs.size()},
                             {"pairs_ratio", pratio}});
    }
    sink.write(text.str(),
               Json{{"command", "theta"}, {"perm", perm_name}, {"theta", theta}, {"rows", jrows}},
               csv);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"boolean-rmt: interval-partition combinatorics and exact trace moments of "
                 "matrices with Boolean independent entries"};
    app.require_subcommand(1);

    Sink sink;
    app.add_option("--format", sink.format, "Output format")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->capture_default_str();
    app.add_option("--out", sink.path, "Write output to a file instead of stdout");
    std::uint64_t budget = budget_from_env();
    app.add_option("--budget", budget, "Brute-force tuple budget (env BOOLEAN_RMT_BUDGET)");

    // partitions
    auto* parts = app.add_subcommand("partitions", "List I(n), optionally filtered to alt(xi)");
    int part_n = 0;
    std::string part_xi;
    parts->add_option("n", part_n, "Ground set size")->required()->check(CLI::PositiveNumber);
    parts->add_option("--xi", part_xi, "Sign pattern, e.g. \"xx*xx*\"");

    // limit
    auto* lim = app.add_subcommand("limit", "Asymptotic trace moment");
    ModelOptions lim_opts;
    bool lim_sa = false;
    int lim_sa_n = 2;
    lim->add_option("--xi", lim_opts.xi_text, "Sign pattern of the word");
    lim->add_option("--labels", lim_opts.labels_text, "Matrix label per position, e.g. 1,1,2,2");
    lim->add_option("--alpha", lim_opts.alpha_text,
                    "alpha sequence (comma rationals); scalar in selfadjoint mode");
    lim->add_option("--beta", lim_opts.beta_text, "beta sequence; scalar in selfadjoint mode");
    lim->add_option("--model", lim_opts.model_path, "JSON law file (single law or per-label)");
    lim->add_option("--perm", lim_opts.perm_names,
                    "Permutation decoration per position (repeatable): e, t, partial:m,n");
    lim->add_flag("--selfadjoint", lim_sa, "Self-adjoint model limit");
    lim->add_option("--n", lim_sa_n, "Moment order in selfadjoint mode");

    // converge
    auto* conv = app.add_subcommand("converge", "Exact finite-N sweep against the limit");
    ModelOptions conv_opts;
    bool conv_sa = false;
    int conv_sa_n = 2;
    std::string conv_sweep, conv_method = "partition";
    conv->add_option("--xi", conv_opts.xi_text, "Sign pattern of the word");
    conv->add_option("--labels", conv_opts.labels_text, "Matrix label per position");
    conv->add_option("--alpha", conv_opts.alpha_text, "alpha sequence / scalar");
    conv->add_option("--beta", conv_opts.beta_text, "beta sequence / scalar");
    conv->add_option("--model", conv_opts.model_path, "JSON law file");
    conv->add_option("--perm", conv_opts.perm_names, "Permutation decoration per position");
    conv->add_flag("--selfadjoint", conv_sa, "Self-adjoint model");
    conv->add_option("--n", conv_sa_n, "Moment order in selfadjoint mode");
    conv->add_option("--N", conv_sweep, "Strictly increasing N sweep, e.g. 4,8,16,32")
        ->required();
    conv->add_option("--method", conv_method, "Evaluation method")
        ->check(CLI::IsMember({"brute", "partition", "both"}))
        ->capture_default_str();

    // verify
    auto* ver = app.add_subcommand("verify", "Run a verification suite");
    std::string ver_suite;
    int ver_nmax = 8, ver_Nmax = 5, ver_order = 8, ver_cases = 200;
    std::uint64_t ver_seed = 12345;
    ver->add_option("suite", ver_suite, "Suite name (or \"all\")")->required();
    ver->add_option("--n-max", ver_nmax, "Max ground-set size")->capture_default_str();
    ver->add_option("--N-max", ver_Nmax, "Max matrix size")->capture_default_str();
    ver->add_option("--order", ver_order, "Max word order")->capture_default_str();
    ver->add_option("--cases", ver_cases, "Randomized cases")->capture_default_str();
    ver->add_option("--seed", ver_seed, "RNG seed")->capture_default_str();

    // theta
    auto* th = app.add_subcommand("theta", "Entry-permutation condition diagnostics");
    std::string th_perm, th_sweep;
    double th_theta = 2.0;
    th->add_option("--perm", th_perm, "identity | transpose | partial:m,n | partial:m | csv:file")
        ->required();
    th->add_option("--N", th_sweep, "N sweep")->required();
    th->add_option("--theta", th_theta, "Exponent in count/N^theta")->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    try {
        if (parts->parsed()) return cmd_partitions(part_n, part_xi, sink);
        if (lim->parsed()) return cmd_limit(lim_opts, lim_sa, lim_sa_n, sink);
        if (conv->parsed())
            return cmd_converge(conv_opts, conv_sa, conv_sa_n, conv_sweep, conv_method, budget,
                                sink);
        if (ver->parsed())
            return cmd_verify(ver_suite, ver_nmax, ver_Nmax, ver_order, ver_cases, ver_seed, sink);
        if (th->parsed()) return cmd_theta(th_perm, th_sweep, th_theta, sink);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
