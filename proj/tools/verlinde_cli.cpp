// verlinde: exact TQFT dimension calculator for SU(N) at level K.
//
// Exit codes: 0 success, 2 inadmissible or malformed input, 3 precision
// ceiling reached before the result could be certified.
#include "CLI11.hpp"
#include "json.hpp"

#include "verlinde/core.hpp"
#include "verlinde/oracle.hpp"
#include "verlinde/surgery.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

using json = nlohmann::json;
using namespace verlinde;

namespace {

constexpr const char* kVersion = "1.0.0";
constexpr int kExitBadInput = 2;
constexpr int kExitPrecision = 3;

struct GlobalFlags {
    long prec = 128;
    long max_prec = 8192;
    int jobs = 1;
    bool as_json = false;

    ComputeOptions options() const {
        ComputeOptions o;
        o.policy.initial_bits = prec;
        o.policy.max_bits = max_prec;
        o.jobs = jobs;
        o.policy.validate();
        return o;
    }
};

struct BadInput : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// "a1,b1;a2,b2;..." or a JSON list of pairs; genus is the pair count
SpinStructure parse_sigma(const std::string& text, int modulus) {
    SpinStructure s;
    s.modulus = modulus;
    if (text.find('[') != std::string::npos) {
        json parsed = json::parse(text, nullptr, false);
        if (!parsed.is_array()) throw BadInput("sigma: malformed JSON list");
        for (const auto& pair : parsed) {
            if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_integer() ||
                !pair[1].is_number_integer())
                throw BadInput("sigma: JSON entries must be [a, b] integer pairs");
            s.pairs.emplace_back(pair[0].get<int>(), pair[1].get<int>());
        }
        if (s.pairs.empty()) throw BadInput("sigma: empty specification");
        return s;
    }
    std::stringstream outer(text);
    std::string pair;
    while (std::getline(outer, pair, ';')) {
        auto comma = pair.find(',');
        if (comma == std::string::npos) throw BadInput("sigma: expected \"a,b\" pairs");
        try {
            int a = std::stoi(pair.substr(0, comma));
            int b = std::stoi(pair.substr(comma + 1));
            s.pairs.emplace_back(a, b);
        } catch (const std::exception&) {
            throw BadInput("sigma: non-integer entry in \"" + pair + "\"");
        }
    }
    if (s.pairs.empty()) throw BadInput("sigma: empty specification");
    return s;
}

std::string sigma_text(const SpinStructure& s) {
    std::string out;
    for (size_t i = 0; i < s.pairs.size(); ++i) {
        if (i) out += ";";
        out += std::to_string(s.pairs[i].first) + "," + std::to_string(s.pairs[i].second);
    }
    return out;
}

void emit(const GlobalFlags& flags, const std::string& command, const json& parameters,
          const json& value, double elapsed) {
    if (flags.as_json) {
        json record = {{"command", command},
                       {"parameters", parameters},
                       {"value", value},
                       {"precision_bits", {{"initial", flags.prec}, {"max", flags.max_prec}}},
                       {"elapsed_seconds", elapsed},
                       {"version", kVersion}};
        std::cout << record.dump() << "\n";
    } else if (value.is_array() || value.is_object()) {
        std::cout << value.dump() << "\n";
    } else {
        std::cout << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
    }
}

class Timer {
public:
    Timer() : start_(std::chrono::steady_clock::now()) {}
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_)
            .count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

// ---------------------------------------------------------------- table cache

std::string cache_path() {
    if (const char* env = std::getenv("VERLINDE_CACHE")) return env;
    return ".verlinde_cache.json";
}

json load_cache() {
    std::ifstream in(cache_path());
    if (!in) return json::object();
    json cache = json::parse(in, nullptr, false);
    if (!cache.is_object() || cache.value("version", "") != kVersion) return json::object();
    return cache;
}

void store_cache(json cache) {
    cache["version"] = kVersion;
    std::ofstream out(cache_path());
    out << cache.dump();
}

// "a..b" or a single number
std::pair<int, int> parse_range(const std::string& text) {
    auto dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            int v = std::stoi(text);
            return {v, v};
        }
        return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
    } catch (const std::exception&) {
        throw BadInput("range: expected \"a..b\" or a single integer, got \"" + text + "\"");
    }
}

// ----------------------------------------------------------------- subcommands

int run_verlinde(const GlobalFlags& flags, int N, int K, int g, bool pu, bool oracle) {
    Timer timer;
    AlcoveContext ctx(N, K);
    ComputeOptions opts = flags.options();
    mpz_class value = pu ? pu_verlinde_number(ctx, g, opts) : verlinde_number(ctx, g, opts);
    if (oracle) {
        if (g < 1) throw BadInput("--oracle requires g >= 1");
        mpz_class check = handle_trace_dimension(ctx, g, opts);
        if (pu) {
            mpz_class scale;
            mpz_ui_pow_ui(scale.get_mpz_t(), ctx.N_red, g);
            check /= scale;
        }
        if (check != value)
            throw std::runtime_error("oracle disagrees: " + check.get_str() + " vs " +
                                     value.get_str());
    }
    emit(flags, pu ? "verlinde --pu" : "verlinde",
         {{"N", N}, {"K", K}, {"g", g}, {"oracle", oracle}}, value.get_str(),
         timer.seconds());
    return 0;
}

int run_refined(const GlobalFlags& flags, const std::string& command, int N, int K,
                const std::string& sigma_spec, bool all, bool split, int genus, int j) {
    Timer timer;
    AlcoveContext ctx(N, K);
    ComputeOptions opts = flags.options();

    RefinedFlavor flavor;
    if (command == "spin")
        flavor = RefinedFlavor::Spin;
    else if (command == "coho")
        flavor = RefinedFlavor::Coho;
    else
        flavor = RefinedFlavor::PuSpin;

    if (flavor == RefinedFlavor::Spin && !spin_admissible_su(N, K).admissible)
        throw BadInput("SU(" + std::to_string(N) + ") level " + std::to_string(K) +
                       " admits no spin refinement");
    if (flavor == RefinedFlavor::Coho) {
        if (j < 1 || N % j != 0) throw BadInput("coho: j must divide N");
        if (j == 1 && !coho_admissible_su(N, K))
            throw BadInput("SU(" + std::to_string(N) + ") level " + std::to_string(K) +
                           " admits no modulo-N cohomological refinement");
    }
    if (flavor == RefinedFlavor::PuSpin && !pu_spin_admissible(ctx))
        throw BadInput("PU(" + std::to_string(N) + ") level " + std::to_string(K) +
                       " admits no spin refinement");

    int modulus = flavor == RefinedFlavor::Coho ? N / j : refinement_modulus(ctx, flavor);

    auto value_of = [&](const SpinStructure& s) {
        switch (flavor) {
            case RefinedFlavor::Spin:
                return spin_verlinde_number(ctx, s, opts);
            case RefinedFlavor::Coho:
                return coho_verlinde_number(ctx, j, s, opts);
            default:
                return pu_spin_verlinde_number(ctx, s, opts);
        }
    };

    json params = {{"N", N}, {"K", K}};
    if (flavor == RefinedFlavor::Coho) params["j"] = j;

    if (!all) {
        if (sigma_spec.empty()) throw BadInput("either --sigma or --all is required");
        SpinStructure s = parse_sigma(sigma_spec, modulus);
        params["sigma"] = sigma_text(s);
        emit(flags, command, params, value_of(s).get_str(), timer.seconds());
        return 0;
    }

    params["g"] = genus;
    params["all"] = true;
    json table = json::array();
    mpz_class total = 0;
    std::vector<int> digits(2 * genus, 0);
    while (true) {
        SpinStructure s;
        s.modulus = modulus;
        for (int i = 0; i < genus; ++i) s.pairs.emplace_back(digits[2 * i], digits[2 * i + 1]);
        mpz_class v = value_of(s);
        total += v;
        table.push_back({{"sigma", sigma_text(s)}, {"value", v.get_str()}});
        int i = 0;
        while (i < 2 * genus && ++digits[i] == modulus) digits[i++] = 0;
        if (i == 2 * genus) break;
    }
    json out = {{"table", table}, {"sum", total.get_str()}};
    if (split) {
        mpz_class plain = flavor == RefinedFlavor::PuSpin ? pu_verlinde_number(ctx, genus, opts)
                                                          : verlinde_number(ctx, genus, opts);
        out["total"] = plain.get_str();
        out["split_ok"] = (total == plain);
        if (total != plain) {
            emit(flags, command, params, out, timer.seconds());
            throw std::runtime_error("splitting identity failed");
        }
    }
    emit(flags, command, params, out, timer.seconds());
    return 0;
}

int run_duality(const GlobalFlags& flags, int N, int K, int gmax) {
    Timer timer;
    auto report = level_rank_check(N, K, gmax, flags.options());
    json rows = json::array();
    for (const auto& row : report.rows)
        rows.push_back({row[0].get_str(), row[1].get_str()});
    emit(flags, "duality", {{"N", N}, {"K", K}, {"gmax", gmax}},
         {{"rows", rows}, {"ok", report.ok}}, timer.seconds());
    return report.ok ? 0 : 1;
}

int run_surgery(const GlobalFlags& flags, const std::string& matrix_text, long d) {
    Timer timer;
    if (d < 2 || d % 2 != 0) throw BadInput("surgery: d must be even and >= 2");
    json parsed = json::parse(matrix_text, nullptr, false);
    json matrix_json;
    if (parsed.is_object() && parsed.contains("matrix")) {
        matrix_json = parsed["matrix"];
        if (parsed.contains("d")) d = parsed["d"].get<long>();
    } else {
        matrix_json = parsed;
    }
    if (!matrix_json.is_array()) throw BadInput("surgery: matrix must be a JSON array of rows");
    IntMatrix m;
    for (const auto& row : matrix_json) {
        if (!row.is_array()) throw BadInput("surgery: matrix rows must be arrays");
        std::vector<mpz_class> r;
        for (const auto& e : row) {
            if (!e.is_number_integer()) throw BadInput("surgery: non-integer matrix entry");
            r.emplace_back(e.get<long>());
        }
        m.push_back(std::move(r));
    }
    LinkingMatrix b = [&] {
        try {
            return LinkingMatrix(std::move(m));
        } catch (const std::invalid_argument& e) {
            throw BadInput(e.what());
        }
    }();
    auto sol = solve_characteristic(b, d);
    json out = {{"count", sol.count.get_str()},
                {"particular", sol.particular},
                {"kernel_basis", sol.kernel_basis}};
    emit(flags, "surgery", {{"matrix", matrix_json}, {"d", d}}, out, timer.seconds());
    return 0;
}

int run_table(const GlobalFlags& flags, const std::string& n_range, const std::string& k_range,
              const std::string& g_range, const std::string& format) {
    auto [n0, n1] = parse_range(n_range);
    auto [k0, k1] = parse_range(k_range);
    auto [g0, g1] = parse_range(g_range);
    if (n0 < 2 || k0 < 2 || g0 < 0 || n1 < n0 || k1 < k0 || g1 < g0)
        throw BadInput("table: invalid range");
    if (format != "csv" && format != "jsonl") throw BadInput("table: format must be csv|jsonl");

    ComputeOptions opts = flags.options();
    json cache = load_cache();
    bool dirty = false;
    if (format == "csv") std::cout << "N,K,g,value\n";
    for (int n = n0; n <= n1; ++n)
        for (int k = k0; k <= k1; ++k)
            for (int g = g0; g <= g1; ++g) {
                std::string key = "verlinde|" + std::to_string(n) + "|" + std::to_string(k) +
                                  "|" + std::to_string(g) + "|" + std::to_string(flags.prec) +
                                  "|" + std::to_string(flags.max_prec);
                std::string value;
                if (cache.contains(key)) {
                    value = cache[key].get<std::string>();
                } else {
                    value = verlinde_number(AlcoveContext(n, k), g, opts).get_str();
                    cache[key] = value;
                    dirty = true;
                }
                if (format == "csv")
                    std::cout << n << "," << k << "," << g << "," << value << "\n";
                else
                    std::cout << json{{"N", n}, {"K", k}, {"g", g}, {"value", value}}.dump()
                              << "\n";
            }
    if (dirty) store_cache(std::move(cache));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Verlinde numbers, spin/cohomological refinements, and modulo-d "
                 "spin structure counting"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    GlobalFlags flags;
    app.add_option("--prec", flags.prec, "initial working precision in bits");
    app.add_option("--max-prec", flags.max_prec, "precision escalation ceiling in bits");
    app.add_option("--jobs", flags.jobs, "worker threads for alcove sums");
    app.add_flag("--json", flags.as_json, "emit a full JSON record per result");

    int N = 0, K = 0, g = 1, gmax = 2, jstep = 1;
    bool pu = false, oracle = false, all = false, split = false;
    std::string sigma_spec, matrix_text, format = "csv";
    std::string n_range, k_range, g_range = "1..1";
    long d = 2;

    auto* c_verl = app.add_subcommand("verlinde", "d_{N,K}(g)");
    c_verl->add_option("N", N)->required();
    c_verl->add_option("K", K)->required();
    c_verl->add_option("g", g)->required();
    c_verl->add_flag("--pu", pu, "projective (PU) normalization d/N'^g");
    c_verl->add_flag("--oracle", oracle, "cross-check against the fusion-ring trace");

    auto add_refined = [&](const char* name, const char* what) {
        auto* c = app.add_subcommand(name, what);
        c->add_option("N", N)->required();
        c->add_option("K", K)->required();
        c->add_option("--sigma", sigma_spec, "structure as \"a1,b1;a2,b2;...\"");
        c->add_flag("--all", all, "every structure at genus --g");
        c->add_flag("--split", split, "verify the splitting sum (with --all)");
        c->add_option("--g", g, "genus for --all (default 1)");
        return c;
    };
    auto* c_spin = add_refined("spin", "spin-refined d_{N,K}(g,sigma), modulus N");
    auto* c_coho = add_refined("coho", "cohomological refinement, modulus N/j");
    c_coho->add_option("--j", jstep, "acting-group step power (default 1)");
    auto* c_pu_spin = add_refined("pu-spin", "PU spin refinement, modulus gcd(N,K)");

    auto* c_dual = app.add_subcommand("duality", "level-rank check for g = 0..gmax");
    c_dual->add_option("N", N)->required();
    c_dual->add_option("K", K)->required();
    c_dual->add_option("--gmax", gmax);

    auto* c_surg = app.add_subcommand("surgery", "Z/d characteristic equation for a linking matrix");
    c_surg->add_option("--matrix", matrix_text, "JSON rows, e.g. \"[[1]]\"")->required();
    c_surg->add_option("--d", d, "even modulus");

    auto* c_table = app.add_subcommand("table", "batch d_{N,K}(g) over ranges");
    c_table->add_option("--N", n_range, "range a..b")->required();
    c_table->add_option("--K", k_range, "range a..b")->required();
    c_table->add_option("--g", g_range, "range a..b (default 1..1)");
    c_table->add_option("--format", format, "csv | jsonl");

    CLI11_PARSE(app, argc, argv);

    try {
        if (c_verl->parsed()) return run_verlinde(flags, N, K, g, pu, oracle);
        if (c_spin->parsed()) return run_refined(flags, "spin", N, K, sigma_spec, all, split, g, 1);
        if (c_coho->parsed())
            return run_refined(flags, "coho", N, K, sigma_spec, all, split, g, jstep);
        if (c_pu_spin->parsed())
            return run_refined(flags, "pu-spin", N, K, sigma_spec, all, split, g, 1);
        if (c_dual->parsed()) return run_duality(flags, N, K, gmax);
        if (c_surg->parsed()) return run_surgery(flags, matrix_text, d);
        if (c_table->parsed()) return run_table(flags, n_range, k_range, g_range, format);
    } catch (const BadInput& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const PrecisionExhausted& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitPrecision;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
