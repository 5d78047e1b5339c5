// tropdiff: command-line front end for the tropical differential algebra library.
//
// Exit codes: 0 success (or "is a solution"), 1 "not a solution" / failed fixture,
// 2 usage, parse or input error.

#include "tropdiff/diff_algebra.hpp"
#include "tropdiff/error.hpp"
#include "tropdiff/fixtures.hpp"
#include "tropdiff/json_io.hpp"
#include "tropdiff/textio.hpp"
#include "tropdiff/trop_poly.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace tropdiff;

namespace {

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kUsage = 2;

struct Common {
    std::size_t m = 1;
    std::size_t n = 1;
    std::string field = "rational";
    std::string format = "text";
    std::string poly;
    std::string system;
};

Field parse_field(const std::string& text)
{
    if (text == "rational" || text == "Q")
        return Field::rationals();
    if (text.rfind("sqrt:", 0) == 0) {
        const std::string digits = text.substr(5);
        std::size_t used = 0;
        long long d = 0;
        try {
            d = std::stoll(digits, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != digits.size())
            throw InvalidInput("bad --field value '" + text + "'");
        return Field::quadratic(d);
    }
    throw InvalidInput("bad --field value '" + text + "' (expected rational or sqrt:<d>)");
}

ParseContext context(const Common& c)
{
    ParseContext ctx{c.m, c.n, parse_field(c.field)};
    ctx.validate();
    return ctx;
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw InvalidInput("cannot read file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

DiffSystem load_system(const Common& c, const ParseContext& ctx)
{
    if (!c.poly.empty() && !c.system.empty())
        throw InvalidInput("give either --poly or --system, not both");
    if (!c.poly.empty())
        return DiffSystem({parse_diff_poly(c.poly, ctx)});
    if (!c.system.empty())
        return parse_system(read_file(c.system), ctx);
    throw InvalidInput("one of --poly or --system is required");
}

bool json(const Common& c) { return c.format == "json"; }

void add_shape(CLI::App* sub, Common& c)
{
    sub->add_option("--m", c.m, "number of independent variables t1..tm")->capture_default_str();
    sub->add_option("--n", c.n, "number of differential indeterminates x1..xn")
        ->capture_default_str();
    sub->add_option("--field", c.field, "coefficient field: rational or sqrt:<d>")
        ->capture_default_str();
}

void add_format(CLI::App* sub, Common& c)
{
    sub->add_option("--format", c.format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
}

void add_input(CLI::App* sub, Common& c)
{
    sub->add_option("--poly", c.poly, "a single differential polynomial");
    sub->add_option("--system", c.system, "file with one differential polynomial per line");
}

std::vector<TropPolynomial> tropical_sample(const DiffSystem& system, std::int64_t bound,
                                            std::vector<std::string>* labels = nullptr)
{
    std::vector<TropPolynomial> h;
    std::size_t ell = 0;
    for (const auto& p : system) {
        ++ell;
        for (const auto& order : orders_up_to(p.arity(), bound)) {
            h.push_back(tropicalize(theta_poly(order, p)));
            if (labels)
                labels->push_back("P" + std::to_string(ell) + " I=" + to_string(order));
        }
    }
    return h;
}

std::string witness_text(const SolutionReport& r)
{
    std::string s;
    for (const auto& [v, hits] : r.witnesses) {
        if (!s.empty())
            s += ' ';
        s += to_string(v) + "<-[";
        for (std::size_t i = 0; i < hits.size(); ++i)
            s += (i ? "," : "") + std::to_string(hits[i]);
        s += ']';
    }
    return s.empty() ? "none" : s;
}

int cmd_vertices(const Common& c, const std::string& set, bool m_given)
{
    std::size_t m = c.m;
    if (!m_given)
        m = std::max<std::size_t>(1, infer_arity(set));
    const ParseContext ctx{m, 1, Field::rationals()};
    const VertexSet v = vertices(parse_support(set, ctx));
    if (json(c))
        std::cout << Json{{"vertices", to_json(v)}, {"text", to_string(v)}}.dump(2) << '\n';
    else
        std::cout << to_string(v) << '\n';
    return kOk;
}

int cmd_trop(const Common& c)
{
    const ParseContext ctx = context(c);
    const DiffSystem system = load_system(c, ctx);
    Json out = Json::array();
    for (const auto& p : system) {
        const TropPolynomial t = tropicalize(p);
        if (json(c))
            out.push_back(to_json(t));
        else
            std::cout << to_string(t) << '\n';
    }
    if (json(c))
        std::cout << Json{{"polynomials", out}}.dump(2) << '\n';
    return kOk;
}

int cmd_check(const Common& c, const std::string& supports, std::int64_t bound)
{
    const ParseContext ctx = context(c);
    const DiffSystem system = load_system(c, ctx);
    const std::vector<SupportSet> s = parse_support_tuple(supports, ctx);
    std::vector<std::string> labels;
    const auto h = tropical_sample(system, bound, &labels);
    const SystemReport report = is_solution_system(h, s);

    if (json(c)) {
        Json reports = Json::array();
        for (std::size_t i = 0; i < h.size(); ++i) {
            Json r = to_json(report.reports[i]);
            r["label"] = labels[i];
            r["polynomial"] = to_string(h[i]);
            reports.push_back(std::move(r));
        }
        std::cout << Json{{"reports", reports}, {"solution", report.solution}}.dump(2) << '\n';
    } else {
        for (std::size_t i = 0; i < h.size(); ++i) {
            const auto& r = report.reports[i];
            std::cout << labels[i] << ": " << to_string(h[i]) << '\n'
                      << "  p(S) = " << to_string(r.evaluation) << "  witnesses: "
                      << witness_text(r) << "  solution: " << (r.solution ? "true" : "false")
                      << '\n';
        }
        std::cout << "solution: " << (report.solution ? "true" : "false") << '\n';
    }
    return report.solution ? kOk : kNegative;
}

int cmd_eval(const Common& c, const std::string& at)
{
    const ParseContext ctx = context(c);
    const DiffSystem system = load_system(c, ctx);
    const std::vector<PowerSeries> phi = parse_series_tuple(at, ctx);
    Json out = Json::array();
    for (const auto& p : system) {
        const PowerSeries v = evaluate(p, phi);
        if (json(c))
            out.push_back(to_json(v));
        else
            std::cout << to_string(v) << '\n';
    }
    if (json(c))
        std::cout << Json{{"values", out}}.dump(2) << '\n';
    return kOk;
}

int cmd_derive(const Common& c, const std::string& series, const std::string& order_text)
{
    const ParseContext ctx = context(c);
    const Point order = parse_point(order_text, c.m);
    if (!series.empty()) {
        if (!c.poly.empty() || !c.system.empty())
            throw InvalidInput("give either --series or --poly/--system");
        const PowerSeries d = theta(order, parse_series(series, ctx));
        if (json(c))
            std::cout << to_json(d).dump(2) << '\n';
        else
            std::cout << to_string(d) << '\n';
        return kOk;
    }
    const DiffSystem system = load_system(c, ctx);
    Json out = Json::array();
    for (const auto& p : system) {
        const DiffPolynomial d = theta_poly(order, p);
        if (json(c))
            out.push_back(to_json(d));
        else
            std::cout << to_string(d) << '\n';
    }
    if (json(c))
        std::cout << Json{{"polynomials", out}}.dump(2) << '\n';
    return kOk;
}

int cmd_enumerate(const Common& c, const std::string& box, std::size_t max_points,
                  std::int64_t bound, unsigned threads)
{
    const ParseContext ctx = context(c);
    const DiffSystem system = load_system(c, ctx);
    const auto h = tropical_sample(system, bound);

    EnumerationRequest req;
    req.m = c.m;
    req.n = c.n;
    req.box = parse_point(box, c.m);
    req.max_points = max_points;
    req.threads = threads;
    if (const char* cap = std::getenv("TROPDIFF_MAX_CANDIDATES")) {
        try {
            req.max_candidates = std::stoull(cap);
        } catch (const std::exception&) {
            throw InvalidInput("TROPDIFF_MAX_CANDIDATES is not a number");
        }
    }
    const auto solutions = enumerate_solutions(h, req);

    if (json(c)) {
        Json list = Json::array();
        for (const auto& tuple : solutions) {
            Json t = Json::array();
            for (const auto& s : tuple)
                t.push_back(to_json(s));
            list.push_back(std::move(t));
        }
        std::cout << Json{{"candidates", candidate_count(req)}, {"solutions", list}}.dump(2)
                  << '\n';
    } else {
        for (const auto& tuple : solutions) {
            for (std::size_t i = 0; i < tuple.size(); ++i)
                std::cout << (i ? "; " : "") << to_string(tuple[i]);
            std::cout << '\n';
        }
        std::cerr << solutions.size() << " solution(s) among " << candidate_count(req)
                  << " candidates\n";
    }
    return kOk;
}

int cmd_examples(const Common& c)
{
    const auto results = fixtures::replay_examples();
    bool all = true;
    Json out = Json::array();
    for (const auto& r : results) {
        all = all && r.passed;
        if (json(c))
            out.push_back({{"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
        else
            std::cout << (r.passed ? "PASS " : "FAIL ") << r.name << ": " << r.detail << '\n';
    }
    if (json(c))
        std::cout << Json{{"examples", out}, {"passed", all}}.dump(2) << '\n';
    return all ? kOk : kNegative;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Tropical differential algebra toolkit"};
    app.require_subcommand(1);

    Common c;
    std::string set, supports, at, series, order, box;
    std::int64_t bound = 0;
    std::size_t max_points = static_cast<std::size_t>(-1);
    unsigned threads = 0;

    auto* vert = app.add_subcommand("vertices", "vertex set of a support set");
    vert->add_option("--set", set, "support set, e.g. {(1,4),(2,3)} + cone{(0,5)}")->required();
    auto* vert_m = vert->add_option("--m", c.m, "arity (inferred from the first point if omitted)");
    add_format(vert, c);

    auto* trop_cmd = app.add_subcommand("trop", "tropicalize differential polynomials");
    add_shape(trop_cmd, c);
    add_input(trop_cmd, c);
    add_format(trop_cmd, c);

    auto* check = app.add_subcommand("check", "test a support tuple against a sampled system");
    add_shape(check, c);
    add_input(check, c);
    check->add_option("--supports", supports, "support tuple S1;S2;...")->required();
    check->add_option("--derive-bound", bound, "use Theta(I)P for ||I||_inf <= k")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    add_format(check, c);

    auto* eval_cmd = app.add_subcommand("eval", "evaluate polynomials at a series tuple");
    add_shape(eval_cmd, c);
    add_input(eval_cmd, c);
    eval_cmd->add_option("--at", at, "series tuple phi1;phi2;...")->required();
    add_format(eval_cmd, c);

    auto* derive_cmd = app.add_subcommand("derive", "apply Theta(I) to a polynomial or series");
    add_shape(derive_cmd, c);
    add_input(derive_cmd, c);
    derive_cmd->add_option("--series", series, "a power series instead of a polynomial");
    derive_cmd->add_option("--order", order, "derivative order I, e.g. (1,0)")->required();
    add_format(derive_cmd, c);

    auto* enumerate = app.add_subcommand("enumerate", "search finite supports in a box");
    add_shape(enumerate, c);
    add_input(enumerate, c);
    enumerate->add_option("--box", box, "upper corner of the search box, e.g. (2,2)")->required();
    enumerate->add_option("--max-points", max_points, "max points per support component");
    enumerate->add_option("--derive-bound", bound, "use Theta(I)P for ||I||_inf <= k")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    enumerate->add_option("--threads", threads, "worker threads (0 = hardware)");
    add_format(enumerate, c);

    auto* examples = app.add_subcommand("examples", "replay the built-in worked examples");
    add_format(examples, c);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (*vert)
            return cmd_vertices(c, set, vert_m->count() > 0);
        if (*trop_cmd)
            return cmd_trop(c);
        if (*check)
            return cmd_check(c, supports, bound);
        if (*eval_cmd)
            return cmd_eval(c, at);
        if (*derive_cmd)
            return cmd_derive(c, series, order);
        if (*enumerate)
            return cmd_enumerate(c, box, max_points, bound, threads);
        if (*examples)
            return cmd_examples(c);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}
