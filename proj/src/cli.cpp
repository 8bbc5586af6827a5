#include "bellconv/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "bellconv/bell.hpp"
#include "bellconv/egf.hpp"
#include "bellconv/errors.hpp"
#include "bellconv/identities.hpp"
#include "bellconv/transforms.hpp"

namespace bellconv::cli {

namespace {

using json = nlohmann::ordered_json;

struct Options {
    std::optional<unsigned> n, k, r, k0, n_max, n1, n2;
    std::optional<long> a, b, b1, b2;
    std::optional<std::string> tau, lambda, lambda1, lambda2, alpha, x, v, xyz, poly, z, rexp;
    std::optional<std::uint64_t> seed;
    std::string format = "json";
    std::string kind = "second";
    std::string variant;
    std::string method = "recurrence";
    bool symbolic = false;
};

template <typename T>
T need(const std::optional<T>& value, const char* flag)
{
    if (!value)
        throw UsageError(std::string("missing required flag ") + flag);
    return *value;
}

Rational rational_flag(const std::optional<std::string>& value, const char* flag)
{
    try {
        return Rational::parse(need(value, flag));
    } catch (const std::invalid_argument& e) {
        throw UsageError(std::string(flag) + ": " + e.what());
    }
}

std::vector<Rational> rational_list(const std::string& text, const char* flag)
{
    std::vector<Rational> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            out.push_back(Rational::parse(item));
        } catch (const std::invalid_argument& e) {
            throw UsageError(std::string(flag) + ": " + e.what());
        }
    }
    if (out.empty())
        throw UsageError(std::string(flag) + ": empty list");
    return out;
}

IndexVector index_vector_flag(const std::optional<std::string>& value)
{
    std::vector<unsigned> entries;
    for (const Rational& e : rational_list(need(value, "--v"), "--v")) {
        if (!e.is_integer() || e.sign() < 0 || !e.num().fits_uint_p())
            throw UsageError("--v: entries must be nonnegative integers");
        entries.push_back(static_cast<unsigned>(e.num().get_ui()));
    }
    return IndexVector(std::move(entries));
}

AffineForm alpha_flag(const std::optional<std::string>& value)
{
    try {
        return AffineForm::parse(need(value, "--alpha"));
    } catch (const std::invalid_argument& e) {
        throw UsageError(std::string("--alpha: ") + e.what());
    }
}

TransformParams transform_params(const Options& o)
{
    return {need(o.a, "--a"), need(o.b, "--b")};
}

// The sequence for --x, with `length` entries when produced from a keyword.
Sequence sequence_flag(const Options& o, std::size_t length)
{
    return load_sequence(need(o.x, "--x"), length, o.n_max, o.seed);
}

bool csv(const Options& o)
{
    return o.format == "csv";
}

void emit_sequence(std::ostream& out, const Options& o, const char* key, const Sequence& s, json head)
{
    if (csv(o)) {
        out << "n,value\n";
        for (std::size_t j = 1; j <= s.size(); ++j)
            out << j << ',' << s[j] << '\n';
        return;
    }
    std::vector<Rational> v(s.values().begin(), s.values().end());
    head[key] = to_json(v);
    out << head.dump() << '\n';
}

void emit_series(std::ostream& out, const Options& o, const TruncatedEGF& series, json head)
{
    if (csv(o)) {
        out << "n,coeff\n";
        for (unsigned j = 0; j <= series.order(); ++j)
            out << j << ',' << series[j] << '\n';
        return;
    }
    head["series"] = series.to_json();
    out << head.dump() << '\n';
}

// JSON Lines: one record per report, then the summary record.
int emit_reports(std::ostream& out, const Options& o, const std::vector<IdentityReport>& reports,
                 const std::string& name, std::optional<json> summary = std::nullopt)
{
    const bool ok = std::all_of(reports.begin(), reports.end(), [](const IdentityReport& r) { return r.pass; });
    if (csv(o)) {
        out << reports_to_csv(reports);
    } else {
        for (const auto& r : reports)
            out << r.to_json().dump() << '\n';
        if (!summary) {
            json s;
            s["identity"] = name;
            s["samples"] = reports.size();
            s["passed"] = std::count_if(reports.begin(), reports.end(), [](const IdentityReport& r) { return r.pass; });
            s["pass"] = ok;
            summary = json::object();
            (*summary)["summary"] = std::move(s);
        }
        out << summary->dump() << '\n';
    }
    return ok ? 0 : 1;
}

int emit_certificate(std::ostream& out, const Options& o, const Certificate& cert)
{
    emit_reports(out, o, cert.samples, cert.identity, cert.summary_json());
    return cert.certified() ? 0 : 1;
}

std::size_t default_length(const Options& o)
{
    std::size_t len = 1;
    for (const auto& v : {o.n, o.n_max, o.n1, o.n2})
        if (v)
            len = std::max<std::size_t>(len, *v);
    return len;
}

// ---------------------------------------------------------------- commands

int cmd_bell(const Options& o, std::ostream& out)
{
    const unsigned n = need(o.n, "--n");
    const unsigned k = need(o.k, "--k");
    json head;
    head["n"] = n;
    head["k"] = k;
    if (o.symbolic) {
        const SparsePoly p = bell_symbolic(n, k);
        if (csv(o)) {
            out << "coeff,exps\n";
            for (const auto& [e, c] : p.terms()) {
                std::string exps;
                for (std::size_t i = 0; i < e.size(); ++i)
                    exps += (i ? ";" : "") + std::to_string(e[i]);
                out << c << ',' << exps << '\n';
            }
            return 0;
        }
        head["polynomial"] = p.to_json();
        out << head.dump() << '\n';
        return 0;
    }
    const Sequence x = sequence_flag(o, std::max<std::size_t>(default_length(o), n));
    Rational value;
    if (o.method == "definition" || k == 0 || k > n)
        value = bell_eval(n, k, x);
    else
        value = bell_recursive(n, k, x);
    head["method"] = o.method;
    head["value"] = value.to_string();
    if (csv(o))
        out << "n,k,value\n" << n << ',' << k << ',' << value << '\n';
    else
        out << head.dump() << '\n';
    return 0;
}

int cmd_stirling(const Options& o, std::ostream& out)
{
    const unsigned n = need(o.n, "--n");
    const unsigned k = need(o.k, "--k");
    if (o.kind != "first" && o.kind != "second")
        throw UsageError("--kind must be 'first' or 'second'");
    const BigInt value = o.kind == "first" ? stirling1_unsigned(n, k) : stirling2(n, k);
    if (csv(o)) {
        out << "n,k,kind,value\n" << n << ',' << k << ',' << o.kind << ',' << value.get_str() << '\n';
        return 0;
    }
    json j;
    j["n"] = n;
    j["k"] = k;
    j["kind"] = o.kind;
    j["value"] = value.get_str();
    out << j.dump() << '\n';
    return 0;
}

int cmd_q(const Options& o, std::ostream& out)
{
    const unsigned n = need(o.n, "--n");
    const long b = need(o.b, "--b");
    const Rational lambda = rational_flag(o.lambda, "--lambda");
    const Rational value = q_function(n, b, lambda, sequence_flag(o, default_length(o)));
    if (csv(o)) {
        out << "n,b,lambda,value\n" << n << ',' << b << ',' << lambda << ',' << value << '\n';
        return 0;
    }
    json j;
    j["n"] = n;
    j["b"] = b;
    j["lambda"] = lambda.to_string();
    j["value"] = value.to_string();
    out << j.dump() << '\n';
    return 0;
}

json ab_head(const TransformParams& p)
{
    json h;
    h["a"] = p.a;
    h["b"] = p.b;
    return h;
}

int cmd_transform(const std::string& which, const Options& o, std::ostream& out)
{
    const TransformParams p = transform_params(o);
    if (which == "forward" || which == "inverse") {
        const unsigned n_max = need(o.n_max, "--n-max");
        const Sequence in = sequence_flag(o, n_max);
        if (which == "forward")
            emit_sequence(out, o, "y", forward_transform(in, p, n_max), ab_head(p));
        else
            emit_sequence(out, o, "x", inverse_transform(in, p, n_max), ab_head(p));
        return 0;
    }
    if (which == "roundtrip") {
        const unsigned n_max = need(o.n_max, "--n-max");
        if (p.a == 0 && p.b == 0)
            throw UsageError("roundtrip needs (a,b) != (0,0)");
        const Sequence x = sequence_flag(o, n_max);
        std::vector<IdentityReport> reports;
        // inverse(forward(x)) = x, entry by entry where a n + b != 0.
        const Sequence y = forward_transform(x, p, n_max);
        for (unsigned n = 1; n <= n_max; ++n) {
            if (p.denominator(n) == 0)
                continue;
            reports.emplace_back("inverse-of-forward",
                                 std::vector<std::pair<std::string, std::string>>{{"n", std::to_string(n)}},
                                 inverse_transform_entry(y, p, n), x[n]);
        }
        // forward(inverse(x)) = x on the prefix where every inverse entry is defined.
        unsigned defined = 0;
        while (defined < n_max && p.denominator(defined + 1) != 0)
            ++defined;
        if (defined > 0) {
            const Sequence fi = forward_transform(inverse_transform(x, p, defined), p, defined);
            for (unsigned n = 1; n <= defined; ++n)
                reports.emplace_back("forward-of-inverse",
                                     std::vector<std::pair<std::string, std::string>>{{"n", std::to_string(n)}},
                                     fi[n], x[n]);
        }
        return emit_reports(out, o, reports, "roundtrip");
    }
    if (which == "lambda") {
        const unsigned n = need(o.n, "--n");
        const unsigned k0 = o.k0.value_or(1);
        const Sequence x = sequence_flag(o, default_length(o));
        if (o.lambda)
            return emit_reports(out, o, {lambda_identity_check(x, p, n, rational_flag(o.lambda, "--lambda"), k0)},
                                "lambda-identity");
        return emit_certificate(out, o, certify_lambda(x, p, n, k0, n + 1));
    }
    throw UsageError("unknown transform subcommand '" + which + "'");
}

int cmd_series(const std::string& which, const Options& o, std::ostream& out)
{
    const unsigned n_max = need(o.n_max, "--n-max");
    if (which == "log" || which == "pow") {
        const Sequence z = sequence_flag(o, n_max);
        const TruncatedEGF zs = TruncatedEGF::one_plus(z.prefix(n_max));
        TruncatedEGF series(n_max);
        Sequence bell_route;
        json head;
        if (which == "log") {
            series = egf_log(zs);
            bell_route = log_polynomials(z, n_max);
        } else {
            const Rational r = rational_flag(o.rexp, "--r-exp");
            series = egf_pow(zs, r);
            bell_route = potential_polynomials(r, z, n_max);
            head["r"] = r.to_string();
        }
        bool agree = true;
        for (unsigned n = 1; n <= n_max; ++n)
            agree = agree && series[n] == bell_route[n];
        head["agrees_with_bell_route"] = agree;
        emit_series(out, o, series, head);
        return agree ? 0 : 1;
    }
    if (which == "apply-poly") {
        const TransformParams p = transform_params(o);
        const std::vector<Rational> f = rational_list(need(o.poly, "--poly"), "--poly");
        const Sequence x = sequence_flag(o, n_max);
        const TruncatedEGF y = TruncatedEGF::one_plus(forward_transform(x, p, n_max));
        const TruncatedEGF via_q = egf_apply_poly(y, f, p, x);
        const TruncatedEGF horner = egf_eval_poly(y, f);
        json head = ab_head(p);
        head["agrees_with_horner"] = via_q == horner;
        emit_series(out, o, via_q, head);
        return via_q == horner ? 0 : 1;
    }
    throw UsageError("unknown series subcommand '" + which + "'");
}

// Monomials of total degree < k in d variables.
std::vector<SparsePoly> monomial_basis(unsigned d, unsigned k)
{
    std::vector<SparsePoly> out;
    std::vector<unsigned> e(d, 0);
    std::function<void(unsigned, unsigned)> rec = [&](unsigned pos, unsigned left) {
        if (pos == d) {
            out.push_back(SparsePoly::monomial(Rational(1), e));
            return;
        }
        for (unsigned c = 0; c <= left; ++c) {
            e[pos] = c;
            rec(pos + 1, left - c);
        }
        e[pos] = 0;
    };
    if (k > 0)
        rec(0, k - 1);
    return out;
}

int cmd_verify(const std::string& which, const Options& o, std::ostream& out)
{
    if (which == "th1a" || which == "th1b" || which == "th1c") {
        const IndexVector v = index_vector_flag(o.v);
        const AffineForm alpha = alpha_flag(o.alpha);
        if (o.tau) {
            const Rational tau = rational_flag(o.tau, "--tau");
            IdentityReport r = which == "th1a"   ? check_th1(Th1Variant::A, v, alpha, tau)
                               : which == "th1b" ? check_th1(Th1Variant::B, v, alpha, tau)
                                                 : check_th1c(v, alpha, tau);
            return emit_reports(out, o, {r}, which);
        }
        const BinomialIdentity id = which == "th1a"   ? BinomialIdentity::th1a
                                    : which == "th1b" ? BinomialIdentity::th1b
                                                      : BinomialIdentity::th1c;
        return emit_certificate(out, o, certify_binomial(id, v, alpha, 2 * v.part_count() + 2));
    }
    if (which == "hagen-rothe" || which == "chu-vandermonde") {
        const std::vector<Rational> xyz = rational_list(need(o.xyz, "--xyz"), "--xyz");
        if (xyz.size() < 2 || xyz.size() > 3)
            throw UsageError("--xyz takes x,y or x,y,z");
        const Rational z = xyz.size() == 3 ? xyz[2] : Rational(0);
        const unsigned k = need(o.k, "--k");
        std::vector<IdentityReport> reports;
        if (which == "chu-vandermonde") {
            reports.push_back(check_hagen_rothe(HagenRotheVariant::chu_vandermonde, xyz[0], xyz[1], z, k));
        } else {
            if (o.variant.empty() || o.variant == "symmetric")
                reports.push_back(check_hagen_rothe(HagenRotheVariant::symmetric, xyz[0], xyz[1], z, k));
            if (o.variant.empty() || o.variant == "asymmetric")
                reports.push_back(check_hagen_rothe(HagenRotheVariant::asymmetric, xyz[0], xyz[1], z, k));
            if (reports.empty())
                throw UsageError("--variant must be 'symmetric' or 'asymmetric'");
        }
        return emit_reports(out, o, reports, which);
    }
    if (which == "negative-one") {
        std::vector<IdentityReport> reports;
        if (o.v)
            reports.push_back(check_negative_one(index_vector_flag(o.v), alpha_flag(o.alpha)));
        if (o.z)
            reports.push_back(check_reciprocal_binomial(rational_flag(o.z, "--z"), need(o.k, "--k")));
        if (reports.empty())
            throw UsageError("negative-one needs --v/--alpha, or --z/--k");
        return emit_reports(out, o, reports, which);
    }
    if (which == "vanishing-sum") {
        const IndexVector v = index_vector_flag(o.v);
        std::vector<IdentityReport> reports;
        for (const SparsePoly& p : monomial_basis(static_cast<unsigned>(v.size()), v.part_count()))
            reports.push_back(check_vanishing_sum(v, p));
        return emit_reports(out, o, reports, which);
    }
    if (which == "bell-conv") {
        const unsigned n = need(o.n, "--n");
        const unsigned k = need(o.k, "--k");
        const AffineForm alpha = alpha_flag(o.alpha);
        const Rational tau = rational_flag(o.tau, "--tau");
        const Sequence x = sequence_flag(o, default_length(o));
        std::vector<IdentityReport> reports;
        const std::pair<const char*, BellConvolution> variants[] = {{"cor33-first", BellConvolution::cor33_first},
                                                                    {"cor33-second", BellConvolution::cor33_second},
                                                                    {"cor34", BellConvolution::cor34}};
        for (const auto& [name, variant] : variants)
            if (o.variant.empty() || o.variant == name)
                reports.push_back(check_bell_convolution(variant, n, k, alpha, tau, x));
        if (reports.empty())
            throw UsageError("--variant must be cor33-first, cor33-second or cor34");
        return emit_reports(out, o, reports, which);
    }
    if (which == "alpha-constant") {
        const unsigned n = need(o.n, "--n");
        return emit_reports(
            out, o, {check_alpha_constant(n, need(o.k, "--k"), need(o.r, "--r"), sequence_flag(o, default_length(o)))},
            which);
    }
    if (which == "zerosum") {
        const unsigned n = need(o.n, "--n");
        return emit_reports(out, o, {check_zerosum(n, need(o.k, "--k"), sequence_flag(o, default_length(o)))}, which);
    }
    if (which == "stirling-rec") {
        if (o.kind != "first" && o.kind != "second")
            throw UsageError("--kind must be 'first' or 'second'");
        const StirlingKind kind = o.kind == "first" ? StirlingKind::first : StirlingKind::second;
        return emit_reports(out, o,
                            {check_stirling_recurrence(need(o.n, "--n"), need(o.k, "--k"), need(o.r, "--r"), kind)},
                            which);
    }
    if (which == "q-recurrence") {
        const Rational lambda = rational_flag(o.lambda, "--lambda");
        if (!lambda.is_integer() || lambda.sign() < 0 || !lambda.num().fits_uint_p())
            throw UsageError("--lambda must be a nonnegative integer for q-recurrence");
        const unsigned n = need(o.n, "--n");
        return emit_reports(out, o,
                            {q_recurrence_check(n, static_cast<unsigned>(lambda.num().get_ui()),
                                                sequence_flag(o, default_length(o)))},
                            which);
    }
    if (which == "q-product") {
        return emit_reports(out, o,
                            {q_product_check(need(o.n1, "--n1"), need(o.n2, "--n2"), need(o.b1, "--b1"),
                                             need(o.b2, "--b2"), rational_flag(o.lambda1, "--lambda1"),
                                             rational_flag(o.lambda2, "--lambda2"),
                                             sequence_flag(o, default_length(o)))},
                            which);
    }
    if (which == "general-binomial-demo") {
        const IndexVector v = index_vector_flag(o.v);
        const AffineForm alpha = alpha_flag(o.alpha);
        const Rational tau = rational_flag(o.tau, "--tau");
        IdentityReport general = check_general_binomial(v, th1a_kernel(v, alpha), Rational(1), tau);
        IdentityReport direct = check_th1(Th1Variant::A, v, alpha, tau);
        // The two routes must also agree with each other.
        IdentityReport same("general-vs-th1a", {{"tau", tau.to_string()}}, general.lhs, direct.lhs);
        return emit_reports(out, o, {general, direct, same}, which);
    }
    throw UsageError("unknown verify subcommand '" + which + "'");
}

void add_flags(CLI::App* app, Options& o)
{
    app->add_option("--n", o.n, "index n");
    app->add_option("--k", o.k, "index k");
    app->add_option("--r", o.r, "block count r");
    app->add_option("--k0", o.k0, "lower summation index k0");
    app->add_option("--n-max", o.n_max, "sequence length");
    app->add_option("--n1", o.n1);
    app->add_option("--n2", o.n2);
    app->add_option("--a", o.a, "transform parameter a");
    app->add_option("--b", o.b, "transform parameter b");
    app->add_option("--b1", o.b1);
    app->add_option("--b2", o.b2);
    app->add_option("--tau", o.tau, "rational tau");
    app->add_option("--lambda", o.lambda, "rational lambda");
    app->add_option("--lambda1", o.lambda1);
    app->add_option("--lambda2", o.lambda2);
    app->add_option("--alpha", o.alpha, "affine form c0,c1,c2 meaning c0 + c1*l + c2*m");
    app->add_option("--x", o.x, "ones | factorials | identity-j | random | path to JSON array");
    app->add_option("--v", o.v, "index vector, e.g. 2,1");
    app->add_option("--xyz", o.xyz, "x,y[,z] for the Hagen-Rothe family");
    app->add_option("--z", o.z, "z for the reciprocal binomial formula");
    app->add_option("--r-exp", o.rexp, "rational exponent for series pow");
    app->add_option("--poly", o.poly, "polynomial coefficients c0,c1,...");
    app->add_option("--seed", o.seed, "seed for --x random");
    app->add_option("--kind", o.kind, "first | second");
    app->add_option("--variant", o.variant, "identity variant");
    app->add_option("--method", o.method, "definition | recurrence");
    app->add_flag("--symbolic", o.symbolic, "print the polynomial instead of a value");
    app->add_option("--format", o.format, "json | csv")->check(CLI::IsMember({"json", "csv"}));
}

} // namespace

Sequence load_sequence(const std::string& source, std::size_t length, std::optional<unsigned> n_max,
                       std::optional<std::uint64_t> seed)
{
    const std::size_t len = n_max ? *n_max : length;
    if (source == "ones")
        return ones(len);
    if (source == "factorials")
        return factorials(len);
    if (source == "identity-j" || source == "identity")
        return identity_sequence(len);
    if (source == "random") {
        if (!seed || !n_max)
            throw UsageError("--x random requires --seed and --n-max");
        return random_sequence(*n_max, *seed);
    }

    std::ifstream in(source);
    if (!in)
        throw UsageError("cannot read sequence file '" + source + "'");
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw UsageError("sequence file '" + source + "' is not valid JSON");
    }
    // A single wrapped array is accepted as well.
    if (doc.is_array() && doc.size() == 1 && doc[0].is_array())
        doc = doc[0];
    if (!doc.is_array())
        throw UsageError("sequence file '" + source + "' must hold a JSON array");
    std::vector<Rational> values;
    for (const auto& e : doc) {
        try {
            if (e.is_string())
                values.push_back(Rational::parse(e.get<std::string>()));
            else if (e.is_number_integer())
                values.push_back(Rational(e.get<long>()));
            else
                throw std::invalid_argument("entry is neither a string nor an integer");
        } catch (const std::invalid_argument& err) {
            throw UsageError("sequence file '" + source + "': " + err.what());
        }
    }
    return Sequence(std::move(values));
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact partial Bell polynomials, convolution identities and inverse transforms", "bellconv"};
    app.require_subcommand(1);
    Options o;

    auto* bell = app.add_subcommand("bell", "evaluate or expand B_{n,k}");
    auto* stirling = app.add_subcommand("stirling", "Stirling numbers");
    auto* q = app.add_subcommand("q", "evaluate Q_{n,b}(lambda, x)");
    auto* transform = app.add_subcommand("transform", "forward/inverse sequence transforms");
    auto* series = app.add_subcommand("series", "truncated EGF operations");
    auto* verify = app.add_subcommand("verify", "certify identity instances");
    for (auto* s : {bell, stirling, q})
        add_flags(s, o);

    std::vector<std::pair<std::string, CLI::App*>> leaves;
    auto add_leaves = [&](CLI::App* parent, std::initializer_list<const char*> names) {
        parent->require_subcommand(1);
        for (const char* name : names) {
            auto* leaf = parent->add_subcommand(name);
            add_flags(leaf, o);
            leaves.emplace_back(name, leaf);
        }
    };
    add_leaves(transform, {"forward", "inverse", "roundtrip", "lambda"});
    add_leaves(series, {"log", "pow", "apply-poly"});
    add_leaves(verify, {"th1a", "th1b", "th1c", "hagen-rothe", "chu-vandermonde", "negative-one", "vanishing-sum",
                        "bell-conv", "alpha-constant", "zerosum", "stirling-rec", "q-recurrence", "q-product",
                        "general-binomial-demo"});

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "bellconv: " << e.what() << '\n';
        return 2;
    }

    auto leaf_name = [&](CLI::App* parent) -> std::string {
        for (const auto& [name, leaf] : leaves)
            if (leaf->parsed() && leaf->get_parent() == parent)
                return name;
        return {};
    };

    try {
        if (bell->parsed())
            return cmd_bell(o, out);
        if (stirling->parsed())
            return cmd_stirling(o, out);
        if (q->parsed())
            return cmd_q(o, out);
        if (transform->parsed())
            return cmd_transform(leaf_name(transform), o, out);
        if (series->parsed())
            return cmd_series(leaf_name(series), o, out);
        if (verify->parsed())
            return cmd_verify(leaf_name(verify), o, out);
    } catch (const std::exception& e) {
        // Usage, parse, range, pole and short-sequence errors alike.
        err << "bellconv: " << e.what() << '\n';
        return 2;
    }
    err << "bellconv: no command given\n";
    return 2;
}

} // namespace bellconv::cli
