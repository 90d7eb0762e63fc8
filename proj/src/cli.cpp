#include "fqgamma/cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "fqgamma/cache.hpp"
#include "fqgamma/errors.hpp"
#include "fqgamma/json_io.hpp"

namespace fqgamma {
namespace {

constexpr int kOk = 0;
constexpr int kDomain = 2;  // also usage and precision failures
constexpr int kGuard = 3;
constexpr int kInconclusive = 4;

// dump() that replaces invalid UTF-8 instead of throwing; manifest-supplied
// strings can end up echoed inside error messages.
std::string dumps(const json& j) {
    return j.dump(-1, ' ', false, nlohmann::json::error_handler_t::replace);
}

struct Opts {
    std::uint64_t q = 0;
    std::string field_modulus;
    std::string arg, f, g, a, b, vec, rel, manifest;
    long prec = 32;   // gamma/pi: absolute series precision
    long cprec = 80;  // certify: relative eta precision
    int dmax = 8;
    std::string cache_dir;
    bool no_cache = false;
    bool explain = false;
};

struct Outcome {
    json body;                        // stdout payload unless text is set
    std::optional<std::string> text;  // help/version text
    int code = kOk;
    std::string cache_status = "off";
};

// One CLI11 application wired to an Opts. Built fresh per invocation so the
// batch runner can dry-parse task argv vectors with identical semantics.
class AppBundle {
  public:
    Opts o;
    CLI::App app;

    AppBundle()
        : app("Thakur Gamma values over F_q[t]: series evaluation, bracket "
              "relations, CM classification, certification",
              "fqgamma") {
        app.require_subcommand(1);
        app.set_version_flag("--version", std::string(kToolVersion));
        app.add_option("--cache-dir", o.cache_dir,
                       "result cache directory (default: FQGAMMA_CACHE_DIR, else ~/.cache/fqgamma)");
        app.add_flag("--no-cache", o.no_cache, "disable the result cache");
        app.add_flag("--explain", o.explain,
                     "emit {\"cache\",\"elapsed_ms\"} JSON on stderr");

        auto field_opts = [this](CLI::App* sc) {
            sc->add_option("--q", o.q, "field size (prime power)")->required();
            sc->add_option("--field-modulus", o.field_modulus,
                           "irreducible modulus over F_p in g, e.g. \"g^2+g+1\" "
                           "(non-prime q beyond the built-in table)");
            sc->fallthrough();
        };

        auto* gamma = app.add_subcommand("gamma", "evaluate Gamma(a/f) as a 1/theta series");
        field_opts(gamma);
        gamma->add_option("--arg", o.arg,
                          "argument a/f; everything after the single '/' is the denominator")
            ->required();
        gamma->add_option("--prec", o.prec, "absolute series precision")
            ->check(CLI::PositiveNumber);

        auto* pi = app.add_subcommand("pi", "Carlitz period as a 1/eta series, eta^(q-1) = -theta");
        field_opts(pi);
        pi->add_option("--prec", o.prec, "absolute series precision")
            ->check(CLI::PositiveNumber);

        auto* bracket = app.add_subcommand("bracket", "decide a bracket relation combinatorially");
        field_opts(bracket);
        bracket->add_option("--f", o.f, "modulus polynomial (monic, nonconstant)")->required();
        bracket->add_option("--vec", o.vec, "exponent vector \"rep:exp,rep:exp,...\"")->required();

        auto* classify = app.add_subcommand("classify", "CM structure of the soliton t-module of f");
        field_opts(classify);
        classify->add_option("--f", o.f, "conductor polynomial (monic, nonconstant)")->required();

        auto* isogeny = app.add_subcommand("isogeny", "isogeny test between the CM modules of f and g");
        field_opts(isogeny);
        isogeny->add_option("--f", o.f, "first conductor")->required();
        isogeny->add_option("--g", o.g, "second conductor")->required();

        auto* equiv = app.add_subcommand("equiv", "whether Gamma(a/f) ~ Gamma(b/g) up to an algebraic multiple");
        field_opts(equiv);
        equiv->add_option("--a", o.a, "first numerator")->required();
        equiv->add_option("--f", o.f, "first denominator")->required();
        equiv->add_option("--b", o.b, "second numerator")->required();
        equiv->add_option("--g", o.g, "second denominator")->required();

        auto* certify = app.add_subcommand("certify", "numerically certify a bracket relation by rational recognition");
        field_opts(certify);
        certify->add_option("--f", o.f, "modulus polynomial (monic, nonconstant)")->required();
        certify->add_option("--vec", o.vec, "exponent vector \"rep:exp,rep:exp,...\"")->required();
        certify->add_option("--prec", o.cprec, "relative eta precision (doubled internally for stability)")
            ->check(CLI::PositiveNumber);
        certify->add_option("--dmax", o.dmax, "degree bound for the recognized rational function")
            ->check(CLI::NonNegativeNumber);

        auto* verify = app.add_subcommand("verify", "check that a functional-equation family yields the expected relation");
        field_opts(verify);
        verify->add_option("--rel", o.rel, "relation family")
            ->required()
            ->check(CLI::IsMember({"translation", "reflection", "gauss"}));
        verify->add_option("--a", o.a, "numerator of the base argument a/f")->required();
        verify->add_option("--f", o.f, "denominator of the base argument")->required();
        verify->add_option("--b", o.b, "translation amount (translation only)");
        verify->add_option("--g", o.g, "Gauss multiplier, monic nonconstant (gauss only)");

        auto* batch = app.add_subcommand("batch", "run a manifest of tasks sequentially");
        batch->add_option("--manifest", o.manifest, "manifest JSON path")
            ->required()
            ->check(CLI::ExistingFile);
        batch->fallthrough();
    }

    // CLI11 consumes the argv vector in reverse order.
    std::string parse(std::vector<std::string> args) {
        std::reverse(args.begin(), args.end());
        app.parse(args);
        auto subs = app.get_subcommands();
        return subs.empty() ? std::string() : subs.back()->get_name();
    }
};

FqPtr field_of(const Opts& o) {
    return o.field_modulus.empty() ? Fq::make(o.q) : Fq::make(o.q, o.field_modulus);
}

// "a/f" with the polynomial grammar on both sides of a single '/';
// a bare "a" denotes the integral argument a/1.
std::pair<Poly, Poly> split_fraction(const FqPtr& F, const std::string& text) {
    const auto slash = text.find('/');
    if (slash == std::string::npos) return {Poly::parse(F, text), Poly::one(F)};
    if (text.find('/', slash + 1) != std::string::npos)
        throw domain_error("argument must be a single fraction a/f: " + text);
    return {Poly::parse(F, text.substr(0, slash)), Poly::parse(F, text.substr(slash + 1))};
}

Outcome exec_gamma(const Opts& o) {
    auto F = field_of(o);
    auto [num, den] = split_fraction(F, o.arg);
    RationalArg z = RationalArg::make(std::move(num), std::move(den));
    ResultCache cache = ResultCache::resolve(o.cache_dir, o.no_cache);

    Outcome oc;
    oc.cache_status = cache.enabled() ? "miss" : "off";
    const std::string key = "gamma|" + F->key() + "|arg=" + z.to_string() +
                            "|prec=" + std::to_string(o.prec);
    if (cache.enabled()) {
        if (auto hit = cache.get(key)) {
            json parsed = json::parse(*hit, nullptr, false);
            if (!parsed.is_discarded()) {
                oc.body = std::move(parsed);
                oc.cache_status = "hit";
                return oc;
            }
        }
    }
    oc.body = gamma_json(gamma(z, o.prec));
    if (cache.enabled()) cache.put(key, dumps(oc.body));
    return oc;
}

Outcome exec_pi(const Opts& o) {
    auto F = field_of(o);
    ResultCache cache = ResultCache::resolve(o.cache_dir, o.no_cache);

    Outcome oc;
    oc.cache_status = cache.enabled() ? "miss" : "off";
    const std::string key = "pi|" + F->key() + "|prec=" + std::to_string(o.prec);
    if (cache.enabled()) {
        if (auto hit = cache.get(key)) {
            json parsed = json::parse(*hit, nullptr, false);
            if (!parsed.is_discarded()) {
                oc.body = std::move(parsed);
                oc.cache_status = "hit";
                return oc;
            }
        }
    }
    oc.body = series_json(carlitz_period(F, o.prec));
    if (cache.enabled()) cache.put(key, dumps(oc.body));
    return oc;
}

Outcome exec_bracket(const Opts& o) {
    auto F = field_of(o);
    Poly f = Poly::parse(F, o.f);
    ExponentVector m = ExponentVector::parse(F, f, o.vec);
    Outcome oc;
    oc.body = bracket_json(is_bracket_relation(m));
    return oc;
}

Outcome exec_classify(const Opts& o) {
    auto F = field_of(o);
    Outcome oc;
    oc.body = classification_json(classify(Poly::parse(F, o.f)));
    return oc;
}

Outcome exec_isogeny(const Opts& o) {
    auto F = field_of(o);
    Outcome oc;
    oc.body = isogeny_json(isogenous(Poly::parse(F, o.f), Poly::parse(F, o.g)));
    return oc;
}

Outcome exec_equiv(const Opts& o) {
    auto F = field_of(o);
    Outcome oc;
    oc.body = equiv_json(approx_equiv(Poly::parse(F, o.a), Poly::parse(F, o.f),
                                      Poly::parse(F, o.b), Poly::parse(F, o.g)));
    return oc;
}

Outcome exec_certify(const Opts& o) {
    auto F = field_of(o);
    Poly f = Poly::parse(F, o.f);
    ExponentVector m = ExponentVector::parse(F, f, o.vec);
    ResultCache cache = ResultCache::resolve(o.cache_dir, o.no_cache);

    Outcome oc;
    oc.cache_status = cache.enabled() ? "miss" : "off";
    const std::string key = "certify|" + F->key() + "|f=" + f.to_string() +
                            "|vec=" + m.to_string() + "|prec=" + std::to_string(o.cprec) +
                            "|dmax=" + std::to_string(o.dmax);
    if (cache.enabled()) {
        if (auto hit = cache.get(key)) {
            json parsed = json::parse(*hit, nullptr, false);
            if (!parsed.is_discarded() && parsed.is_object()) {
                oc.body = std::move(parsed);
                oc.cache_status = "hit";
                oc.code = (oc.body.value("recognized", false) && oc.body.value("stable", false))
                              ? kOk
                              : kInconclusive;
                return oc;
            }
        }
    }
    CertReport r = certify_relation(m, o.cprec, o.dmax);
    oc.body = cert_json(r);
    if (cache.enabled()) cache.put(key, dumps(oc.body));
    oc.code = (r.recognized && r.stable) ? kOk : kInconclusive;
    return oc;
}

Outcome exec_verify(const Opts& o) {
    auto F = field_of(o);
    Poly f = Poly::parse(F, o.f);
    Poly a = Poly::parse(F, o.a);

    ExponentVector v(f);
    long long expected = 0;
    if (o.rel == "translation") {
        if (o.b.empty()) throw domain_error("verify --rel translation needs --b");
        v = translation_vector(a, Poly::parse(F, o.b), f);
        expected = 0;
    } else if (o.rel == "reflection") {
        v = reflection_vector(a, f);
        expected = 1;
    } else {  // gauss
        if (o.g.empty()) throw domain_error("verify --rel gauss needs --g");
        Poly g = Poly::parse(F, o.g);
        v = gauss_vector(a, f, g);
        // (q^d - 1)/(q - 1) = 1 + q + ... + q^(d-1), the number of monic
        // residues among the a + alpha f.
        long long p = 1;
        for (int i = 0; i < g.deg(); ++i) {
            expected += p;
            p *= static_cast<long long>(F->q());
        }
    }

    BracketCheck chk = is_bracket_relation(v);
    const bool ok = chk.is_relation && chk.sigma_plus == expected;

    Outcome oc;
    oc.body = json::object();
    oc.body["rel"] = o.rel;
    oc.body["vector"] = v.to_string();
    oc.body["is_relation"] = chk.is_relation;
    oc.body["sigma_plus"] = chk.sigma_plus;
    oc.body["expected_sigma_plus"] = expected;
    oc.body["ok"] = ok;
    if (chk.witness) oc.body["witness"] = chk.witness->to_string();
    return oc;
}

Outcome run_single(const std::vector<std::string>& args, std::ostream& err, int depth);

std::string normalize_key(std::string k) {
    std::replace(k.begin(), k.end(), '_', '-');
    return k;
}

const std::set<std::string>& task_commands() {
    static const std::set<std::string> kCommands{"gamma",  "pi",    "bracket", "classify",
                                                 "isogeny", "equiv", "certify", "verify"};
    return kCommands;
}

bool accepts_prec(const std::string& cmd) {
    return cmd == "gamma" || cmd == "pi" || cmd == "certify";
}

std::string scalar_to_arg(const json& v, const std::string& key) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_number_integer()) return std::to_string(v.get<long long>());
    if (v.is_number_unsigned()) return std::to_string(v.get<unsigned long long>());
    throw domain_error("manifest parameter '" + key + "' must be a string, integer or boolean");
}

// Builds the argv for one manifest task: the task's own parameters first
// (flag spelling, underscores allowed), then applicable global defaults,
// then the batch invocation's cache flags. Skipped keys never override.
std::vector<std::string> task_argv(const json& task, const json& global, const Opts& batch) {
    if (!task.is_object()) throw domain_error("every task must be a JSON object");
    if (!task.contains("command") || !task.at("command").is_string())
        throw domain_error("every task needs a \"command\" string");
    const std::string cmd = task.at("command").get<std::string>();
    if (cmd == "batch") throw domain_error("batch tasks cannot themselves be batch commands");
    if (!task_commands().count(cmd)) throw domain_error("unknown task command: " + cmd);

    std::vector<std::string> argv{cmd};
    std::set<std::string> have;
    auto push = [&argv](const std::string& k, const json& v, const std::string& raw) {
        if (v.is_boolean()) {
            if (v.get<bool>()) argv.push_back("--" + k);
        } else {
            argv.push_back("--" + k);
            argv.push_back(scalar_to_arg(v, raw));
        }
    };

    for (const auto& [raw, v] : task.items()) {
        if (raw == "command") continue;
        const std::string k = normalize_key(raw);
        if (k == "help" || k == "help-all" || k == "version")
            throw domain_error("'" + raw + "' is not a task parameter");
        have.insert(k);
        push(k, v, raw);
    }
    for (const auto& [raw, v] : global.items()) {
        const std::string k = normalize_key(raw);
        if (have.count(k)) continue;
        if (k == "prec" && !accepts_prec(cmd)) continue;
        have.insert(k);  // an explicit false still counts as decided
        push(k, v, raw);
    }
    if (!batch.cache_dir.empty() && !have.count("cache-dir")) {
        argv.push_back("--cache-dir");
        argv.push_back(batch.cache_dir);
    }
    if (batch.no_cache && !have.count("no-cache")) argv.push_back("--no-cache");
    return argv;
}

Outcome exec_batch(const Opts& o, std::ostream& err, int depth) {
    if (depth > 0) throw domain_error("batch tasks cannot themselves be batch commands");

    std::ifstream in(o.manifest);
    if (!in) throw domain_error("cannot read manifest: " + o.manifest);
    json doc = json::parse(in, nullptr, false);
    if (doc.is_discarded()) throw domain_error("manifest is not valid JSON: " + o.manifest);
    if (!doc.is_object() || !doc.contains("tasks") || !doc.at("tasks").is_array())
        throw domain_error("manifest must be a JSON object with a \"tasks\" array");
    for (const auto& [k, v] : doc.items()) {
        (void)v;
        if (k != "tasks" && k != "global") throw domain_error("unknown manifest key: " + k);
    }

    json global = json::object();
    if (doc.contains("global")) {
        if (!doc.at("global").is_object()) throw domain_error("manifest \"global\" must be an object");
        global = doc.at("global");
        static const std::set<std::string> kGlobalKeys{"q", "field-modulus", "prec",
                                                       "cache-dir", "no-cache"};
        for (const auto& [k, v] : global.items()) {
            (void)v;
            if (!kGlobalKeys.count(normalize_key(k)))
                throw domain_error("unknown manifest global key: " + k);
        }
    }

    // Every task must validate against its command's parameter schema
    // before any task runs.
    const json& tasks = doc.at("tasks");
    std::vector<std::vector<std::string>> argvs;
    argvs.reserve(tasks.size());
    for (std::size_t i = 0; i < tasks.size(); ++i) {
        try {
            argvs.push_back(task_argv(tasks[i], global, o));
            AppBundle dry;
            dry.parse(argvs.back());
        } catch (const CLI::ParseError& e) {
            throw domain_error("task " + std::to_string(i + 1) + ": " + e.what());
        } catch (const domain_error& e) {
            throw domain_error("task " + std::to_string(i + 1) + ": " + e.what());
        }
    }

    Outcome oc;
    json results = json::array();
    for (const auto& argv : argvs) {
        Outcome task = run_single(argv, err, depth + 1);
        results.push_back(std::move(task.body));
        if (oc.code == kOk && task.code != kOk) oc.code = task.code;
    }
    oc.body = json::object();
    oc.body["results"] = std::move(results);
    return oc;
}

Outcome dispatch(const std::string& cmd, const Opts& o, std::ostream& err, int depth) {
    if (cmd == "gamma") return exec_gamma(o);
    if (cmd == "pi") return exec_pi(o);
    if (cmd == "bracket") return exec_bracket(o);
    if (cmd == "classify") return exec_classify(o);
    if (cmd == "isogeny") return exec_isogeny(o);
    if (cmd == "equiv") return exec_equiv(o);
    if (cmd == "certify") return exec_certify(o);
    if (cmd == "verify") return exec_verify(o);
    if (cmd == "batch") return exec_batch(o, err, depth);
    throw domain_error("unknown command: " + cmd);
}

Outcome run_single(const std::vector<std::string>& args, std::ostream& err, int depth) {
    const auto t0 = std::chrono::steady_clock::now();
    AppBundle b;
    Outcome oc;

    std::string cmd;
    try {
        cmd = b.parse(args);
    } catch (const CLI::CallForHelp&) {
        oc.text = b.app.help();
        return oc;
    } catch (const CLI::CallForAllHelp&) {
        oc.text = b.app.help("", CLI::AppFormatMode::All);
        return oc;
    } catch (const CLI::CallForVersion&) {
        oc.text = std::string(kToolVersion) + "\n";
        return oc;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        oc.body = error_json("usage", e.what());
        oc.code = kDomain;
        return oc;
    }

    try {
        oc = dispatch(cmd, b.o, err, depth);
    } catch (const guard_error& e) {
        err << "error: " << e.what() << "\n";
        oc.body = error_json("guard", e.what());
        oc.code = kGuard;
    } catch (const precision_error& e) {
        err << "error: " << e.what() << "\n";
        oc.body = error_json("precision", e.what());
        oc.code = kDomain;
    } catch (const domain_error& e) {
        err << "error: " << e.what() << "\n";
        oc.body = error_json("domain", e.what());
        oc.code = kDomain;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        oc.body = error_json("internal", e.what());
        oc.code = kDomain;
    }

    if (b.o.explain) {
        const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - t0)
                            .count();
        json ex = json::object();
        ex["cache"] = oc.cache_status;
        ex["elapsed_ms"] = ms;
        err << dumps(ex) << "\n";
    }
    return oc;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    try {
        Outcome oc = run_single(args, err, 0);
        if (oc.text)
            out << *oc.text;
        else
            out << dumps(oc.body) << "\n";
        return oc.code;
    } catch (const std::exception& e) {
        // Belt and braces: run_single maps everything it expects.
        err << "error: " << e.what() << "\n";
        out << dumps(error_json("internal", e.what())) << "\n";
        return kDomain;
    }
}

}  // namespace fqgamma
