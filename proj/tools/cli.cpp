#include "cli.hpp"

#include <algorithm>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"
#include "qtmoments/cards.hpp"
#include "qtmoments/cfrac.hpp"
#include "qtmoments/json_io.hpp"
#include "qtmoments/orthopoly.hpp"
#include "qtmoments/parallel.hpp"
#include "qtmoments/partitions.hpp"
#include "qtmoments/verify.hpp"

namespace qtmoments::cli {

namespace {

using Json = nlohmann::ordered_json;

constexpr int kMaxMomentOrder = 12;
constexpr int kMaxListingOrder = 12;
constexpr int kMaxCardOrder = 10;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class Mismatch : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Config {
    int n = -1;
    int n_max = -1;
    std::string mode;
    std::string gauge;
    bool allow_mismatch = false;
    std::string method = "partitions";
    std::string q, t, lambda, p, m;
    std::string output;
    unsigned jobs = 1;
    std::string word;
    int order = 6;
    int depth = -1;
    std::string preset;
    std::vector<std::string> suites{"all"};
};

struct Pairing {
    NestingMode mode = NestingMode::Strict;
    ScalarGauge gauge = ScalarGauge::Identity;
};

Pairing resolve_pairing(const Config& c, std::ostream& err)
{
    Pairing out;
    const bool has_mode = !c.mode.empty();
    const bool has_gauge = !c.gauge.empty();
    if (has_mode) out.mode = c.mode == "covered" ? NestingMode::CoveredSingleton : NestingMode::Strict;
    if (has_gauge) out.gauge = c.gauge == "tpower" ? ScalarGauge::TPowerN : ScalarGauge::Identity;
    if (has_mode && !has_gauge) {
        out.gauge = out.mode == NestingMode::Strict ? ScalarGauge::Identity : ScalarGauge::TPowerN;
    } else if (has_gauge && !has_mode) {
        out.mode = out.gauge == ScalarGauge::Identity ? NestingMode::Strict : NestingMode::CoveredSingleton;
    } else if (has_mode && has_gauge) {
        const bool linked = (out.mode == NestingMode::Strict) == (out.gauge == ScalarGauge::Identity);
        if (!linked) {
            if (!c.allow_mismatch) {
                throw UsageError(std::string("mode ") + to_string(out.mode) + " pairs with the other gauge; pass --allow-mismatch to combine it with " +
                                 to_string(out.gauge));
            }
            err << "warning: mode " << to_string(out.mode) << " with gauge " << to_string(out.gauge)
                << " does not give matching moments\n";
        }
    }
    return out;
}

std::optional<Rational> optional_rational(const std::string& text, const char* flag)
{
    if (text.empty()) return std::nullopt;
    try {
        return parse_rational(text);
    } catch (const ParseError& e) {
        throw UsageError(std::string("invalid rational for --") + flag + ": \"" + text + "\"");
    }
}

Rational required_rational(const std::string& text, const char* flag)
{
    auto r = optional_rational(text, flag);
    if (!r) throw UsageError(std::string("--") + flag + " is required");
    return *r;
}

// q, t and lambda together, or none of them.
std::optional<Assignment> point(const Config& c)
{
    auto q = optional_rational(c.q, "q");
    auto t = optional_rational(c.t, "t");
    auto lambda = optional_rational(c.lambda, "lambda");
    const int given = int(q.has_value()) + int(t.has_value()) + int(lambda.has_value());
    if (given == 0) return std::nullopt;
    if (given != 3) throw UsageError("--q, --t and --lambda must be given together");
    return Assignment{{Var::Q, *q}, {Var::T, *t}, {Var::Lambda, *lambda}};
}

void check_range(int n, int lo, int hi, const char* flag)
{
    if (n < lo || n > hi) {
        throw UsageError(std::string("--") + flag + " must lie in " + std::to_string(lo) + ".." + std::to_string(hi));
    }
}

std::string output_or(const Config& c, const char* fallback, std::initializer_list<const char*> allowed)
{
    const std::string out = c.output.empty() ? fallback : c.output;
    for (const char* a : allowed) {
        if (out == a) return out;
    }
    throw UsageError("--output " + out + " is not available for this command");
}

std::string blocks_text(const SetPartition& p)
{
    std::string s;
    for (const auto& b : p.blocks()) {
        s += '{';
        for (std::size_t i = 0; i < b.size(); ++i) s += (i ? "," : "") + std::to_string(b[i]);
        s += '}';
    }
    return s;
}

// Polynomial in x with rational coefficients, c[k] the coefficient of x^k.
std::string render_in_x(const std::vector<Rational>& c)
{
    std::string s;
    for (std::size_t k = c.size(); k-- > 0;) {
        if (c[k] == 0) continue;
        Rational a = abs(c[k]);
        if (s.empty()) {
            if (c[k] < 0) s += "-";
        } else {
            s += c[k] < 0 ? " - " : " + ";
        }
        const bool unit = a == 1;
        if (!unit || k == 0) s += to_string(a);
        if (k > 0) {
            if (!unit) s += "*";
            s += "x";
            if (k > 1) s += "^" + std::to_string(k);
        }
    }
    return s.empty() ? "0" : s;
}

JacobiParams preset_by_name(const std::string& name, const Pairing& pairing)
{
    if (name.empty()) return charlier_for(pairing.gauge);
    if (name == "charlier-strict") return charlier_strict();
    if (name == "charlier-tgauge") return charlier_tgauge();
    if (name == "q-charlier") return q_charlier();
    if (name == "ejsmont") return ejsmont();
    throw UsageError("unknown preset \"" + name + "\"");
}

Method method_by_name(const std::string& name)
{
    for (Method m : all_methods()) {
        if (name == to_string(m)) return m;
    }
    throw UsageError("unknown method \"" + name + "\"");
}

int cmd_moments(const Config& c, std::ostream& out, std::ostream& err)
{
    const Pairing pairing = resolve_pairing(c, err);
    if (c.n >= 0 && c.n_max >= 0) throw UsageError("give either --n or --n-max");
    if (c.n < 0 && c.n_max < 0) throw UsageError("--n or --n-max is required");
    const int first = c.n >= 0 ? c.n : 0;
    const int last = c.n >= 0 ? c.n : c.n_max;
    check_range(last, 0, kMaxMomentOrder, c.n >= 0 ? "n" : "n-max");
    const auto at = point(c);
    const std::string fmt = output_or(c, "json", {"json", "csv", "pretty"});
    if (fmt == "csv" && !at) throw UsageError("csv output needs --q, --t and --lambda");

    std::vector<Method> methods;
    if (c.method == "all") {
        methods = all_methods();
    } else {
        methods.push_back(method_by_name(c.method));
    }

    std::vector<int> ns;
    std::vector<std::vector<Polynomial>> rows;
    for (int n = first; n <= last; ++n) {
        std::vector<Polynomial> row;
        for (Method m : methods) row.push_back(moment_via(m, n, pairing.mode, pairing.gauge, c.jobs));
        for (std::size_t i = 1; i < row.size(); ++i) {
            if (row[i] != row[0]) {
                throw Mismatch("m_" + std::to_string(n) + ": " + to_string(methods[i]) + " gives " + row[i].to_string() +
                               " but " + to_string(methods[0]) + " gives " + row[0].to_string());
            }
        }
        ns.push_back(n);
        rows.push_back(std::move(row));
    }
    auto value = [&](const Polynomial& p) { return at ? to_string(p.evaluate(*at)) : p.to_string(); };

    if (fmt == "json") {
        Json doc;
        doc["schema"] = kSchemaTag;
        doc["command"] = "moments";
        doc["mode"] = to_string(pairing.mode);
        doc["gauge"] = to_string(pairing.gauge);
        Json names = Json::array();
        for (Method m : methods) names.push_back(to_string(m));
        doc["methods"] = names;
        if (at) {
            doc["q"] = to_string(at->at(Var::Q));
            doc["t"] = to_string(at->at(Var::T));
            doc["lambda"] = to_string(at->at(Var::Lambda));
        }
        doc["n"] = ns;
        Json values = Json::array();
        for (const auto& row : rows) values.push_back(value(row[0]));
        doc["moments"] = values;
        out << doc.dump() << '\n';
    } else if (fmt == "csv") {
        out << "n,q,t,lambda,moment\n";
        for (std::size_t i = 0; i < ns.size(); ++i) {
            out << ns[i] << ',' << to_string(at->at(Var::Q)) << ',' << to_string(at->at(Var::T)) << ','
                << to_string(at->at(Var::Lambda)) << ',' << value(rows[i][0]) << '\n';
        }
    } else {
        for (std::size_t i = 0; i < ns.size(); ++i) {
            for (std::size_t k = 0; k < methods.size(); ++k) {
                out << "m_" << ns[i] << " via " << to_string(methods[k]) << ": " << value(rows[i][k]) << '\n';
            }
            out << value(rows[i][0]) << '\n';
        }
    }
    return 0;
}

int cmd_partitions(const Config& c, std::ostream& out)
{
    if (c.n < 0) throw UsageError("--n is required");
    check_range(c.n, 1, kMaxListingOrder, "n");
    const std::string fmt = output_or(c, "json", {"json", "csv", "pretty"});
    if (fmt == "csv") out << "rgs,blocks,rc,rn_strict,rn_covered\n";
    enumerate_partitions(c.n, [&](const SetPartition& p) {
        const int rc = restricted_crossings(p);
        const int strict = restricted_nestings(p, NestingMode::Strict);
        const int covered = restricted_nestings(p, NestingMode::CoveredSingleton);
        if (fmt == "json") {
            Json line;
            line["rgs"] = p.rgs();
            line["blocks"] = p.block_count();
            line["rc"] = rc;
            line["rn_strict"] = strict;
            line["rn_covered"] = covered;
            out << line.dump() << '\n';
        } else {
            std::string rgs;
            for (int v : p.rgs()) rgs += std::to_string(v);
            if (fmt == "csv") {
                out << rgs << ',' << p.block_count() << ',' << rc << ',' << strict << ',' << covered << '\n';
            } else {
                out << rgs << "  " << blocks_text(p) << "  blocks=" << p.block_count() << " rc=" << rc
                    << " rn_strict=" << strict << " rn_covered=" << covered << '\n';
            }
        }
    });
    return 0;
}

int cmd_charlier(const Config& c, std::ostream& out, std::ostream& err)
{
    const Pairing pairing = resolve_pairing(c, err);
    const int n_max = c.n_max >= 0 ? c.n_max : 3;
    check_range(n_max, 0, kMaxMomentOrder, "n-max");
    const auto at = point(c);
    const std::string fmt = output_or(c, "json", {"json", "pretty"});
    const JacobiParams j = preset_by_name(c.preset, pairing);
    const auto seq = three_term_polys(j, n_max);
    std::vector<std::string> rendered;
    for (const auto& p : seq.polys) {
        if (!at) {
            rendered.push_back(p.to_string());
            continue;
        }
        std::vector<Rational> coeffs;
        for (unsigned k = 0; k <= p.degree_in(Var::X); ++k) coeffs.push_back(p.coefficient_of(Var::X, k).evaluate(*at));
        rendered.push_back(render_in_x(coeffs));
    }
    if (fmt == "json") {
        Json doc;
        doc["schema"] = kSchemaTag;
        doc["command"] = "charlier";
        doc["preset"] = j.name;
        doc["polys"] = rendered;
        out << doc.dump() << '\n';
    } else {
        for (std::size_t k = 0; k < rendered.size(); ++k) out << "P_" << k << "(x) = " << rendered[k] << '\n';
    }
    return 0;
}

void emit_arrangement(const CardArrangement& a, const std::string& fmt, std::ostream& out)
{
    std::vector<std::string> labels;
    for (const auto& card : a.cards) labels.push_back(card.label());
    if (fmt == "json") {
        Json line;
        line["word"] = a.word.to_string();
        line["cards"] = labels;
        line["weight"] = a.weight.to_string();
        line["partition"] = a.partition.blocks();
        out << line.dump() << '\n';
        return;
    }
    out << a.word.to_string() << ':';
    for (const auto& l : labels) out << ' ' << l;
    out << "  weight=" << a.weight.to_string() << "  partition=" << blocks_text(a.partition) << '\n';
}

int cmd_cards(const Config& c, std::ostream& out, std::ostream& err)
{
    const Pairing pairing = resolve_pairing(c, err);
    const std::string fmt = output_or(c, "json", {"json", "pretty"});
    std::vector<OperatorWord> words;
    if (!c.word.empty() && c.n >= 0) throw UsageError("give either --word or --n");
    if (!c.word.empty()) {
        try {
            words.push_back(OperatorWord::parse(c.word));
        } catch (const Error& e) {
            throw UsageError(e.what());
        }
        check_range(static_cast<int>(words.back().length()), 1, kMaxCardOrder, "word length");
        if (!words.back().is_contributor()) throw UsageError("\"" + c.word + "\" is not a contributor");
    } else if (c.n >= 0) {
        check_range(c.n, 1, kMaxCardOrder, "n");
        words = contributors(c.n);
    } else {
        throw UsageError("--word or --n is required");
    }
    for (const auto& w : words) {
        for (const auto& a : expand_arrangements(w, pairing.gauge)) emit_arrangement(a, fmt, out);
    }
    return 0;
}

int cmd_cfrac(const Config& c, std::ostream& out, std::ostream& err)
{
    const Pairing pairing = resolve_pairing(c, err);
    check_range(c.order, 0, 2 * kMaxMomentOrder, "order");
    const int depth = c.depth >= 0 ? c.depth : default_depth(c.order);
    check_range(depth, 1, 2 * kMaxMomentOrder, "depth");
    const std::string fmt = output_or(c, "pretty", {"json", "pretty"});
    const JacobiParams j = preset_by_name(c.preset, pairing);
    const ContinuedFractionSpec spec = cf_spec(j, depth);
    std::vector<Polynomial> series;
    try {
        series = cf_series(spec, c.order);
    } catch (const InsufficientDepth& e) {
        throw UsageError(e.what());
    }
    if (fmt == "json") {
        auto strings = [](const std::vector<Polynomial>& ps) {
            std::vector<std::string> s;
            for (const auto& p : ps) s.push_back(p.to_string());
            return s;
        };
        Json doc;
        doc["schema"] = kSchemaTag;
        doc["command"] = "cfrac";
        doc["preset"] = j.name;
        doc["depth"] = depth;
        doc["b"] = strings(spec.b);
        doc["lam"] = strings(spec.lam);
        doc["series"] = strings(series);
        out << doc.dump() << '\n';
    } else {
        out << render_cf(spec) << '\n';
        for (std::size_t k = 0; k < series.size(); ++k) out << "z^" << k << ": " << series[k].to_string() << '\n';
    }
    return 0;
}

int cmd_binomial(const Config& c, std::ostream& out)
{
    const Rational m_value = required_rational(c.m, "m");
    if (m_value.get_den() != 1 || m_value < 1 || !m_value.get_num().fits_slong_p()) {
        throw UsageError("--m must be a positive integer");
    }
    const long m = m_value.get_num().get_si();
    const Rational q = required_rational(c.q, "q");
    const Rational t = required_rational(c.t, "t");
    const auto lambda = optional_rational(c.lambda, "lambda");
    auto p = optional_rational(c.p, "p");
    if (!p && !lambda) throw UsageError("--p or --lambda is required");
    if (!p) p = *lambda / m;
    const int n_max = c.n_max >= 0 ? c.n_max : 6;
    check_range(n_max, 0, 2 * kMaxMomentOrder, "n-max");
    const std::string fmt = output_or(c, "json", {"json", "csv", "pretty"});

    const RationalJacobi j = binomial_specialized(m, *p, q, t, n_max / 2 + 1);
    const auto moments = motzkin_moment_sequence(j, n_max);
    std::vector<Rational> poisson;
    if (lambda) poisson = motzkin_moment_sequence(specialize(charlier_strict(), {{Var::Q, q}, {Var::T, t}, {Var::Lambda, *lambda}}, n_max / 2 + 1), n_max);

    auto strings = [](const std::vector<Rational>& v, std::size_t from = 0) {
        std::vector<std::string> s;
        for (std::size_t i = from; i < v.size(); ++i) s.push_back(to_string(v[i]));
        return s;
    };
    if (fmt == "json") {
        Json doc;
        doc["schema"] = kSchemaTag;
        doc["command"] = "binomial";
        doc["m"] = m;
        doc["p"] = to_string(*p);
        doc["q"] = to_string(q);
        doc["t"] = to_string(t);
        doc["alpha"] = strings(j.alpha);
        doc["omega"] = strings(j.omega, 1);
        doc["moments"] = strings(moments);
        if (lambda) {
            doc["lambda"] = to_string(*lambda);
            doc["charlier"] = strings(poisson);
        }
        out << doc.dump() << '\n';
    } else if (fmt == "csv") {
        out << "n,q,t,m,p,moment" << (lambda ? ",charlier" : "") << '\n';
        for (int n = 0; n <= n_max; ++n) {
            out << n << ',' << to_string(q) << ',' << to_string(t) << ',' << m << ',' << to_string(*p) << ','
                << to_string(moments[n]);
            if (lambda) out << ',' << to_string(poisson[n]);
            out << '\n';
        }
    } else {
        for (int n = 0; n <= n_max; ++n) {
            out << "m_" << n << " = " << to_string(moments[n]);
            if (lambda) out << "  (charlier " << to_string(poisson[n]) << ")";
            out << '\n';
        }
    }
    return 0;
}

int cmd_verify(const Config& c, std::ostream& out)
{
    VerifyOptions options;
    options.suites = c.suites;
    options.n_max = c.n_max >= 0 ? c.n_max : 8;
    check_range(options.n_max, 1, kMaxMomentOrder, "n-max");
    options.workers = c.jobs;
    const std::string fmt = output_or(c, "pretty", {"json", "pretty"});
    const auto reports = run_verification(options);
    const bool ok = std::all_of(reports.begin(), reports.end(), [](const CheckReport& r) { return r.ok(); });
    if (fmt == "json") {
        Json doc;
        doc["schema"] = kSchemaTag;
        doc["command"] = "verify";
        doc["n_max"] = options.n_max;
        Json list = Json::array();
        for (const auto& r : reports) {
            list.push_back(Json{{"name", r.name}, {"checked", r.checked}, {"failures", r.failures}});
        }
        doc["reports"] = list;
        doc["ok"] = ok;
        out << doc.dump() << '\n';
    } else {
        for (const auto& r : reports) {
            out << (r.ok() ? "PASS  " : "FAIL  ") << r.name << "  (" << r.checked << " checks";
            if (!r.ok()) out << ", " << r.failures.size() << " failed";
            out << ")\n";
            for (std::size_t i = 0; i < std::min<std::size_t>(r.failures.size(), 5); ++i) out << "    " << r.failures[i] << '\n';
        }
        out << (ok ? "all checks passed" : "verification FAILED") << '\n';
    }
    return ok ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err)
{
    Config c;
    c.jobs = default_workers();
    CLI::App app{"Moments of the (q,t)-Poisson model and the objects behind them", "qtmoments"};
    app.require_subcommand(1);

    const std::vector<std::string> methods{"partitions", "operator", "cards", "motzkin", "cfrac", "all"};
    const std::vector<std::string> presets{"charlier-strict", "charlier-tgauge", "q-charlier", "ejsmont"};
    auto pairing_flags = [&](CLI::App* sub) {
        sub->add_option("--mode", c.mode, "nesting statistic")->check(CLI::IsMember({"strict", "covered"}));
        sub->add_option("--gauge", c.gauge, "scalar part of the Poisson operator")->check(CLI::IsMember({"identity", "tpower"}));
        sub->add_flag("--allow-mismatch", c.allow_mismatch, "combine a mode with the other gauge");
    };
    auto point_flags = [&](CLI::App* sub) {
        sub->add_option("--q", c.q, "rational a/b");
        sub->add_option("--t", c.t, "rational a/b");
        sub->add_option("--lambda", c.lambda, "rational a/b");
    };
    auto common = [&](CLI::App* sub, std::initializer_list<const char*> formats) {
        std::vector<std::string> f(formats.begin(), formats.end());
        sub->add_option("--output", c.output, "output format")->check(CLI::IsMember(f));
        sub->add_option("--jobs", c.jobs, "worker threads (default from QTMOMENTS_JOBS)")->check(CLI::PositiveNumber);
    };

    auto* moments = app.add_subcommand("moments", "moment polynomials through one or all routes");
    moments->add_option("--n", c.n, "single moment order");
    moments->add_option("--n-max", c.n_max, "table of m_0..m_n-max");
    moments->add_option("--method", c.method, "route")->check(CLI::IsMember(methods));
    pairing_flags(moments);
    point_flags(moments);
    common(moments, {"json", "csv", "pretty"});

    auto* partitions = app.add_subcommand("partitions", "set partitions with crossing and nesting counts");
    partitions->add_option("--n", c.n, "ground set size")->required();
    common(partitions, {"json", "csv", "pretty"});

    auto* charlier = app.add_subcommand("charlier", "orthogonal polynomials from a Jacobi preset");
    charlier->add_option("--n-max", c.n_max, "highest degree");
    charlier->add_option("--preset", c.preset, "Jacobi preset")->check(CLI::IsMember(presets));
    pairing_flags(charlier);
    point_flags(charlier);
    common(charlier, {"json", "pretty"});

    auto* cards = app.add_subcommand("cards", "card arrangements of contributor words");
    cards->add_option("--word", c.word, "word over C, A, N, S, leftmost applied last");
    cards->add_option("--n", c.n, "all contributors of this length");
    pairing_flags(cards);
    common(cards, {"json", "pretty"});

    auto* cfrac = app.add_subcommand("cfrac", "J-fraction of a Jacobi preset");
    cfrac->add_option("--order", c.order, "series order");
    cfrac->add_option("--depth", c.depth, "fraction depth");
    cfrac->add_option("--preset", c.preset, "Jacobi preset")->check(CLI::IsMember(presets));
    pairing_flags(cfrac);
    common(cfrac, {"json", "pretty"});

    auto* binomial = app.add_subcommand("binomial", "binomial moments at a rational point");
    binomial->add_option("--m", c.m, "number of trials");
    binomial->add_option("--p", c.p, "success parameter a/b");
    binomial->add_option("--n-max", c.n_max, "highest moment");
    point_flags(binomial);
    common(binomial, {"json", "csv", "pretty"});

    auto* verify = app.add_subcommand("verify", "run the cross-check suites");
    verify->add_option("--suite", c.suites, "suite names or all");
    verify->add_option("--n-max", c.n_max, "highest moment order checked");
    common(verify, {"json", "pretty"});

    try {
        std::vector<std::string> reversed(argv.rbegin(), argv.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }

    try {
        std::ostringstream buffer;
        int code = 0;
        if (moments->parsed()) code = cmd_moments(c, buffer, err);
        else if (partitions->parsed()) code = cmd_partitions(c, buffer);
        else if (charlier->parsed()) code = cmd_charlier(c, buffer, err);
        else if (cards->parsed()) code = cmd_cards(c, buffer, err);
        else if (cfrac->parsed()) code = cmd_cfrac(c, buffer, err);
        else if (binomial->parsed()) code = cmd_binomial(c, buffer);
        else code = cmd_verify(c, buffer);
        out << buffer.str();
        return code;
    } catch (const Mismatch& e) {
        err << "mismatch: " << e.what() << '\n';
        return 1;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
}

}  // namespace qtmoments::cli
