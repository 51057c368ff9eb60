// rroot: command-line front end.
//
// Exit codes: 0 success, 1 negative answer (NoRoot, no solution, Composite),
// 2 usage or input error, 3 inconclusive.

#include <atomic>
#include <chrono>
#include <csignal>
#include <cstdio>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <unistd.h>

#include "CLI11.hpp"
#include "json.hpp"

#include "rroot/ecroot.hpp"
#include "rroot/oracle.hpp"
#include "rroot/polysolve.hpp"
#include "rroot/primality.hpp"
#include "rroot/rthroot.hpp"

using namespace rroot;
using json = nlohmann::ordered_json;

namespace {

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kUsage = 2;
constexpr int kInconclusive = 3;

// q - 1 below this is factored completely; above it only small primes are split off.
const Natural kCompleteFactorLimit = Natural("1000000000000");
constexpr std::uint64_t kPartialFactorBound = 1000000;

std::atomic<std::uint64_t> g_progress{0};
std::atomic<bool> g_progress_overflow{false};

extern "C" void on_sigint(int)
{
    // Only async-signal-safe calls here.
    char buf[64];
    const char prefix[] = "\ninterrupted; last base tried: ";
    std::size_t n = 0;
    for (char c : prefix)
        if (c)
            buf[n++] = c;
    if (g_progress_overflow.load()) {
        for (char c : std::string_view(">2^64"))
            buf[n++] = c;
    } else {
        char digits[24];
        std::size_t k = 0;
        std::uint64_t v = g_progress.load();
        do {
            digits[k++] = static_cast<char>('0' + v % 10);
            v /= 10;
        } while (v > 0);
        while (k > 0)
            buf[n++] = digits[--k];
    }
    buf[n++] = '\n';
    ssize_t ignored = ::write(STDERR_FILENO, buf, n);
    (void)ignored;
    ::_exit(130);
}

struct Record {
    bool json_mode = false;
    json out = json::object();
    std::vector<std::string> lines;

    void emit(double ms)
    {
        if (json_mode) {
            out["timing_ms"] = ms;
            std::cout << out.dump() << '\n';
        } else {
            for (const auto& l : lines)
                std::cout << l << '\n';
        }
    }
};

Modulus prime_modulus(const std::string& text)
{
    const Natural q = parse_natural(text);
    if (q < 2 || mpz_probab_prime_p(q.get_mpz_t(), 30) == 0)
        throw std::invalid_argument("modulus " + text + " is not prime");
    return Modulus(q);
}

FieldProfile profile_for(const Modulus& q)
{
    if (q.value() - 1 <= kCompleteFactorLimit)
        return complete_profile(q);
    return factor_group_order(q, kPartialFactorBound);
}

std::string point_text(const Point& p)
{
    if (p.infinity)
        return "inf";
    return "(" + to_string(p.x) + ", " + to_string(p.y) + ")";
}

json point_json(const Point& p)
{
    if (p.infinity)
        return "inf";
    return json::array({to_string(p.x), to_string(p.y)});
}

json numbers(const std::vector<std::uint64_t>& v)
{
    json a = json::array();
    for (auto x : v)
        a.push_back(std::to_string(x));
    return a;
}

std::string joined(const std::vector<std::string>& v)
{
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i)
        s += (i ? " " : "") + v[i];
    return s;
}

std::vector<std::string> as_text(const std::vector<std::uint64_t>& v)
{
    std::vector<std::string> s;
    for (auto x : v)
        s.push_back(std::to_string(x));
    return s;
}

struct PointArgs {
    std::string qx, qy;
    bool infinity = false;

    void attach(CLI::App* cmd)
    {
        auto* ox = cmd->add_option("--qx", qx, "x-coordinate of Q");
        auto* oy = cmd->add_option("--qy", qy, "y-coordinate of Q");
        auto* oi = cmd->add_flag("--q-infinity", infinity, "Q is the point at infinity");
        ox->needs(oy);
        oy->needs(ox);
        oi->excludes(ox)->excludes(oy);
    }

    Point point(const Modulus& p) const
    {
        if (infinity)
            return Point::at_infinity();
        if (qx.empty())
            throw std::invalid_argument("give --qx and --qy, or --q-infinity");
        return Point::affine(p(parse_natural(qx)).value(), p(parse_natural(qy)).value());
    }
};

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Deterministic r-th roots and applications over finite fields"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all");

    Record rec;
    int code = kOk;
    std::function<void()> action;

    std::string modulus, beta, n_text, r_text, e_text, t_text, poly, a4, a6;
    std::uint64_t r = 0, n_small = 0;
    std::string scan_text = to_string(kDefaultPrimalityScanBound);
    std::uint64_t zeta_bound = kDefaultZetaScanBound;
    bool trace = false;
    PointArgs qarg;

    auto json_flag = [&](CLI::App* cmd) { cmd->add_flag("--json", rec.json_mode, "emit one JSON object"); };

    // rth-root
    auto* cmd_root = app.add_subcommand("rth-root", "x with x^r = beta in F_q");
    cmd_root->add_option("--modulus", modulus, "prime q")->required();
    cmd_root->add_option("--r", r, "prime r")->required();
    cmd_root->add_option("--beta", beta, "beta")->required();
    cmd_root->add_flag("--trace", trace, "print the splitting steps");
    json_flag(cmd_root);
    cmd_root->callback([&] {
        action = [&] {
            const Modulus q = prime_modulus(modulus);
            const Residue b = q(parse_natural(beta));
            SplitTrace steps;
            const auto root = rth_root(profile_for(q), r, b, trace ? &steps : nullptr);
            rec.out["command"] = "rth-root";
            rec.out["inputs"] = {{"modulus", to_string(q.value())}, {"r", std::to_string(r)},
                                 {"beta", to_string(b.value())}};
            rec.out["result"] = root ? json(to_string(root->value())) : json("NoRoot");
            if (trace) {
                json t = json::array();
                for (const auto& ev : steps) {
                    t.push_back({{"depth", ev.depth}, {"stage", ev.stage}, {"value", ev.value}});
                    rec.lines.push_back(std::string(2 * ev.depth, ' ') + ev.stage + ": " + ev.value);
                }
                rec.out["trace"] = t;
            }
            rec.lines.push_back(root ? to_string(root->value()) : "NoRoot");
            code = root ? kOk : kNegative;
        };
    });

    // nonresidue
    auto* cmd_nr = app.add_subcommand("nonresidue", "an r-th nonresidue of F_q");
    cmd_nr->add_option("--modulus", modulus, "prime q")->required();
    cmd_nr->add_option("--r", r, "prime r dividing q - 1")->required();
    json_flag(cmd_nr);
    cmd_nr->callback([&] {
        action = [&] {
            const Modulus q = prime_modulus(modulus);
            const Residue x = nonresidue(profile_for(q), r);
            rec.out["command"] = "nonresidue";
            rec.out["inputs"] = {{"modulus", to_string(q.value())}, {"r", std::to_string(r)}};
            rec.out["result"] = to_string(x.value());
            rec.lines.push_back(to_string(x.value()));
        };
    });

    // primitive
    auto* cmd_prim = app.add_subcommand("primitive", "a generator of F_q^*");
    cmd_prim->add_option("--modulus", modulus, "prime q")->required();
    json_flag(cmd_prim);
    cmd_prim->callback([&] {
        action = [&] {
            const Modulus q = prime_modulus(modulus);
            const Residue g = primitive_element(complete_profile(q));
            rec.out["command"] = "primitive";
            rec.out["inputs"] = {{"modulus", to_string(q.value())}};
            rec.out["result"] = to_string(g.value());
            rec.lines.push_back(to_string(g.value()));
        };
    });

    // solve
    auto* cmd_solve = app.add_subcommand("solve", "roots of a polynomial over F_q");
    cmd_solve->add_option("--modulus", modulus, "prime q")->required();
    cmd_solve->add_option("--poly", poly, "coefficients c0,c1,..., constant term first")->required();
    json_flag(cmd_solve);
    cmd_solve->callback([&] {
        action = [&] {
            const Modulus q = prime_modulus(modulus);
            const Poly f = parse_poly(poly, q);
            const auto rts = roots(f, complete_profile(q));
            std::vector<std::string> text;
            for (const auto& x : rts)
                text.push_back(to_string(x.value()));
            rec.out["command"] = "solve";
            rec.out["inputs"] = {{"modulus", to_string(q.value())}, {"poly", format_coefficients(f)}};
            rec.out["result"] = text;
            rec.lines.push_back(text.empty() ? "no roots" : joined(text));
            code = rts.empty() ? kNegative : kOk;
        };
    });

    // is-prime
    auto* cmd_prime = app.add_subcommand("is-prime", "primality of a generalized Proth number");
    cmd_prime->add_option("--n", n_text, "N = r^e * t + 1")->required();
    auto* opt_r = cmd_prime->add_option("--r", r_text, "prime r");
    auto* opt_e = cmd_prime->add_option("--e", e_text, "exponent e");
    auto* opt_t = cmd_prime->add_option("--t", t_text, "cofactor t");
    opt_r->needs(opt_e)->needs(opt_t);
    opt_e->needs(opt_r);
    opt_t->needs(opt_r);
    cmd_prime->add_option("--scan-bound", scan_text, "bases tried before the root-of-unity phase");
    cmd_prime->add_option("--zeta-scan-bound", zeta_bound, "candidates tried when building roots of unity");
    json_flag(cmd_prime);
    cmd_prime->callback([&] {
        action = [&] {
            const Natural n = parse_natural(n_text);
            std::optional<ProthForm> form;
            if (!r_text.empty())
                form = make_proth_form(n, to_u64(parse_natural(r_text)),
                                       static_cast<unsigned>(to_u64(parse_natural(e_text))),
                                       parse_natural(t_text));
            else if (n >= 3)
                form = decompose(n);
            if (!form)
                throw NotProth(n_text + " is not a generalized Proth number");

            IsPrimeOptions opts;
            opts.scan_bound = parse_natural(scan_text);
            opts.zeta_scan_bound = zeta_bound;
            opts.on_base = [](const Natural& a) {
                if (a.fits_ulong_p())
                    g_progress.store(a.get_ui());
                else
                    g_progress_overflow.store(true);
            };
            std::signal(SIGINT, on_sigint);
            const PrimalityVerdict v = is_prime(n, form, opts);
            std::signal(SIGINT, SIG_DFL);

            json verdict = {{"verdict", ""}, {"witness_kind", nullptr}, {"witness_value", nullptr},
                            {"r", std::to_string(form->r)}, {"e", std::to_string(form->e)},
                            {"t", to_string(form->t)}};
            std::string line;
            if (const auto* p = std::get_if<Prime>(&v)) {
                verdict["verdict"] = "Prime";
                verdict["witness_kind"] = "ProthBase";
                verdict["witness_value"] = to_string(p->witness_a);
                line = "Prime (witness a = " + to_string(p->witness_a) + ")";
                code = kOk;
            } else if (const auto* c = std::get_if<Composite>(&v)) {
                verdict["verdict"] = "Composite";
                verdict["witness_kind"] = to_string(c->kind);
                verdict["witness_value"] = to_string(c->witness);
                line = "Composite (" + to_string(c->kind) + " " + to_string(c->witness) + ")";
                code = kNegative;
            } else {
                verdict["verdict"] = "Inconclusive";
                line = "Inconclusive (scan bound " + to_string(std::get<Inconclusive>(v).scan_bound) + ")";
                code = kInconclusive;
            }
            rec.out["command"] = "is-prime";
            rec.out["inputs"] = {{"n", to_string(n)}, {"scan_bound", to_string(opts.scan_bound)}};
            rec.out["result"] = verdict["verdict"];
            rec.out["verdict"] = verdict;
            rec.lines.push_back(line);
            rec.lines.push_back("N = " + std::to_string(form->r) + "^" + std::to_string(form->e) + " * " +
                                to_string(form->t) + " + 1");
        };
    });

    // ec-root
    auto* cmd_ec = app.add_subcommand("ec-root", "all P with n*P = Q on y^2 = x^3 + a4*x + a6");
    cmd_ec->add_option("--modulus", modulus, "prime p > 3")->required();
    cmd_ec->add_option("--a4", a4, "a4")->required();
    cmd_ec->add_option("--a6", a6, "a6")->required();
    cmd_ec->add_option("--n", n_small, "n >= 1, not divisible by p")->required();
    qarg.attach(cmd_ec);
    json_flag(cmd_ec);
    cmd_ec->callback([&] {
        action = [&] {
            const Modulus p = prime_modulus(modulus);
            const Curve curve(p, parse_natural(a4), parse_natural(a6));
            const Point q = qarg.point(p);
            const auto pts = ec_nth_root(curve, q, n_small);
            json list = json::array();
            std::vector<std::string> text;
            for (const auto& pt : pts) {
                list.push_back(point_json(pt));
                text.push_back(point_text(pt));
            }
            rec.out["command"] = "ec-root";
            rec.out["inputs"] = {{"modulus", to_string(p.value())},
                                 {"a4", to_string(curve.a4().value())},
                                 {"a6", to_string(curve.a6().value())},
                                 {"n", std::to_string(n_small)},
                                 {"Q", point_json(q)}};
            rec.out["result"] = list;
            rec.lines.push_back(text.empty() ? "no solution" : joined(text));
            code = pts.empty() ? kNegative : kOk;
        };
    });

    // oracle
    auto* cmd_or = app.add_subcommand("oracle", "brute-force reference enumerations (small inputs only)");
    cmd_or->require_subcommand(1);
    auto oracle_record = [&](const std::string& sub, json inputs, const std::vector<std::string>& text,
                             json result) {
        rec.out["command"] = "oracle " + sub;
        rec.out["inputs"] = std::move(inputs);
        rec.out["result"] = std::move(result);
        rec.lines.push_back(text.empty() ? "(empty)" : joined(text));
    };
    std::uint64_t q_small = 0, beta_small = 0;

    auto* or_roots = cmd_or->add_subcommand("rth-roots", "all x with x^r = beta");
    or_roots->add_option("--modulus", q_small)->required();
    or_roots->add_option("--r", r)->required();
    or_roots->add_option("--beta", beta_small)->required();
    json_flag(or_roots);
    or_roots->callback([&] {
        action = [&] {
            const auto v = oracle::all_rth_roots(q_small, r, beta_small);
            oracle_record("rth-roots", {{"modulus", q_small}, {"r", r}, {"beta", beta_small}}, as_text(v),
                          numbers(v));
        };
    });

    auto* or_nr = cmd_or->add_subcommand("nonresidues", "all r-th nonresidues");
    or_nr->add_option("--modulus", q_small)->required();
    or_nr->add_option("--r", r)->required();
    json_flag(or_nr);
    or_nr->callback([&] {
        action = [&] {
            const auto v = oracle::all_nonresidues(q_small, r);
            oracle_record("nonresidues", {{"modulus", q_small}, {"r", r}}, as_text(v), numbers(v));
        };
    });

    auto* or_ord = cmd_or->add_subcommand("orders", "multiplicative order of every element");
    or_ord->add_option("--modulus", q_small)->required();
    json_flag(or_ord);
    or_ord->callback([&] {
        action = [&] {
            json m = json::object();
            std::vector<std::string> text;
            for (const auto& [x, k] : oracle::element_orders(q_small)) {
                m[std::to_string(x)] = std::to_string(k);
                text.push_back(std::to_string(x) + ":" + std::to_string(k));
            }
            oracle_record("orders", {{"modulus", q_small}}, text, m);
        };
    });

    auto* or_poly = cmd_or->add_subcommand("poly-roots", "roots of a polynomial by evaluation");
    or_poly->add_option("--modulus", q_small)->required();
    or_poly->add_option("--poly", poly)->required();
    json_flag(or_poly);
    or_poly->callback([&] {
        action = [&] {
            const Modulus q(q_small);
            const Poly f = parse_poly(poly, q);
            const auto v = oracle::poly_roots_bruteforce(f);
            oracle_record("poly-roots", {{"modulus", q_small}, {"poly", format_coefficients(f)}}, as_text(v),
                          numbers(v));
        };
    });

    auto* or_pts = cmd_or->add_subcommand("curve-points", "affine points of a curve");
    or_pts->add_option("--modulus", q_small)->required();
    or_pts->add_option("--a4", a4)->required();
    or_pts->add_option("--a6", a6)->required();
    json_flag(or_pts);
    or_pts->callback([&] {
        action = [&] {
            const Curve curve(Modulus(q_small), parse_natural(a4), parse_natural(a6));
            json list = json::array();
            std::vector<std::string> text;
            for (const auto& pt : oracle::curve_points(curve)) {
                list.push_back(point_json(pt));
                text.push_back(point_text(pt));
            }
            oracle_record("curve-points", {{"modulus", q_small}, {"a4", a4}, {"a6", a6}}, text, list);
        };
    });

    auto* or_ec = cmd_or->add_subcommand("ec-preimages", "all P with n*P = Q by enumeration");
    or_ec->add_option("--modulus", q_small)->required();
    or_ec->add_option("--a4", a4)->required();
    or_ec->add_option("--a6", a6)->required();
    or_ec->add_option("--n", n_small)->required();
    PointArgs oq;
    oq.attach(or_ec);
    json_flag(or_ec);
    or_ec->callback([&] {
        action = [&] {
            const Modulus p(q_small);
            const Curve curve(p, parse_natural(a4), parse_natural(a6));
            const Point q = oq.point(p);
            if (!on_curve(curve, q))
                throw std::invalid_argument("Q is not on the curve");
            json list = json::array();
            std::vector<std::string> text;
            for (const auto& pt : oracle::nth_root_preimages(curve, q, n_small)) {
                list.push_back(point_json(pt));
                text.push_back(point_text(pt));
            }
            oracle_record("ec-preimages", {{"modulus", q_small}, {"n", n_small}, {"Q", point_json(q)}}, text,
                          list);
        };
    });

    auto* or_td = cmd_or->add_subcommand("trial-division", "smallest prime factor");
    or_td->add_option("--n", n_small)->required();
    json_flag(or_td);
    or_td->callback([&] {
        action = [&] {
            const auto f = oracle::trial_division(n_small);
            oracle_record("trial-division", {{"n", n_small}}, {std::to_string(f)}, std::to_string(f));
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    const auto start = std::chrono::steady_clock::now();
    try {
        action();
    } catch (const ScanExhausted& e) {
        std::cerr << "inconclusive: " << e.what() << '\n';
        return kInconclusive;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::overflow_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 4;
    }
    const auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    rec.emit(ms);
    return code;
}
