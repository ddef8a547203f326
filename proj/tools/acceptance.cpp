// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.
#include "p4/cli.hpp"
#include "p4/hamilton.hpp"
#include "p4/io.hpp"
#include "p4/weyl.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <random>
#include <sstream>

using namespace p4;
using p4::io::json;
namespace fs = std::filesystem;

namespace {

/// Outcome of one criterion: failures plus informational details.
struct Outcome {
    long cases = 0;
    std::vector<std::string> failures;
    std::vector<std::string> details;

    void expect(bool ok, const std::string &what) {
        ++cases;
        if (!ok)
            failures.push_back(what);
    }
    void report(const std::string &what, const Report &r) {
        ++cases;
        for (const auto &c : r.checks)
            if (!c.ok()) {
                failures.push_back(what + ": " + c.name);
                return;
            }
    }
};

std::string tag(long k, long n) { return "(k=" + std::to_string(k) + ",n=" + std::to_string(n) + ")"; }

RhoSolution rho0() { return {RatFun(Poly::monomial(BigRat(8, 27), 3)), BigRat(4, 9), 0}; }

BigRat sq(const BigRat &q) { return q * q; }

// ---------------------------------------------------------------------------

Outcome crit1() {
    Outcome o;
    for (long n = 1; n <= 6; ++n)
        for (long k = 1; k <= n; ++k)
            for (bool hat : {false, true}) {
                std::string t = (hat ? "hat" : "") + tag(k, n);
                Generated g = gen_2x(k, n, hat);
                o.report("rho" + t, verify_rho(g.rho));
                o.report("p4" + t, verify_p4(g.y));
                // hatted twins sit at the reflected point nu = 2k - n - 1
                long nu = hat ? 2 * k - n - 1 : n - 2 * k + 1;
                o.expect(g.rho.mu_sq == (n + 1) * (n + 1) && g.rho.nu == nu, "rho parameters " + t);
                o.expect(g.y.a == (n + 1) * (n + 1) && g.y.b == nu - 1, "p4 parameters " + t);
            }
    return o;
}

Outcome crit2() {
    Outcome o;
    for (long n = 1; n <= 4; ++n)
        for (long k = 1; k <= n; ++k) {
            std::string t = tag(k, n);
            auto [a1, b1] = forms::y1kn(k, n);
            o.expect(a1 == b1, "first representation pair " + t);
            o.report("first representation" + t, verify_p4({a1, sq(BigRat(n - k + 1)), BigRat(n + k + 1) + 1}));
            auto [a2, b2] = forms::y2kn(k, n);
            auto [c2, d2] = forms::hwiiiq(k, n);
            o.expect(a2 == b2 && c2 == d2 && a2 == c2, "second representation quadruple " + t);
            o.report("second representation" + t, verify_p4({a2, sq(BigRat(k)), BigRat(-2 * n + k - 2) + 1}));
            // the re-indexed parameters name the same point
            long kp = n - k, np = n - 1;
            o.expect(BigRat(-np - kp - 3) == BigRat(-2 * n + k - 2) && sq(BigRat(np - kp + 1)) == sq(BigRat(k)),
                     "re-indexed parameters " + t);
            o.expect(gen_1x(k, n, 1, false).y.y == a1 && gen_1x(k, n, 2, false).y.y == a2, "generator agreement " + t);
        }
    return o;
}

Outcome crit3() {
    Outcome o;
    const BigRat third(1, 3);
    for (long n = 0; n <= 3; ++n)
        for (long k = 0; k <= 3; ++k) {
            for (int var : {1, 2})
                for (Sign dir : {Sign::plus, Sign::minus}) {
                    bool plus = dir == Sign::plus;
                    std::string t = "(" + std::to_string(var) + (plus ? ",+" : ",-") + std::to_string(n) + "," +
                                    std::to_string(k) + ")";
                    Generated g = gen_2x3(var, n, k, dir);
                    o.report("rho" + t, verify_rho(g.rho));
                    o.report("p4" + t, verify_p4(g.y));
                    // printed parameter lines
                    BigRat mu = (var == 1) == plus ? BigRat(third + n) : BigRat(n - third);
                    long nu = plus ? (var == 1 ? 2 * k - n + 1 : 2 * k - n - 1) : (var == 1 ? n - 2 * k + 1 : n - 2 * k - 1);
                    o.expect(g.rho.mu_sq == sq(mu) && g.rho.nu == nu, "parameter line " + t);
                    o.expect(g.y.a == sq(mu) && g.y.b == BigRat(nu) + (plus ? 1 : -1), "p4 parameters " + t);
                    o.expect(g.y.y == forms::y2x3(var, n, k, dir), "Wronskian ratio " + t);
                }
            if (k <= n + 1)
                o.expect(gen_2x3(2, n, k, Sign::plus).rho.rho == gen_2x3(1, n, 1 + n - k, Sign::minus).rho.rho,
                         "duplication (2,n,k) " + tag(k, n));
            if (k <= n - 1)
                o.expect(gen_2x3(1, n, k, Sign::plus).rho.rho == gen_2x3(2, n, n - 1 - k, Sign::minus).rho.rho,
                         "duplication (1,n,k) " + tag(k, n));
        }
    return o;
}

Outcome crit4() {
    Outcome o;
    RhoSolution r = rho0();
    o.report("seed", verify_rho(r));
    o.report("seed third order", verify_rho_third_order(r));
    RatFun cubic(Poly::monomial(BigRat(8, 27), 3));
    RatFun lin(Poly::monomial(BigRat(4, 3), 1));
    RhoSolution i = rho_shift(r, Branch::i), j = rho_shift(r, Branch::j);
    o.expect(i.rho == cubic - lin && i.mu_sq == BigRat(1, 9) && i.nu == 1, "first shift");
    o.expect(j.rho == cubic + lin && j.mu_sq == BigRat(1, 9) && j.nu == -1, "second shift");
    o.report("first shift", verify_rho(i));
    o.report("second shift", verify_rho(j));
    return o;
}

Outcome crit5() {
    Outcome o;
    std::mt19937_64 g(5);
    std::uniform_int_distribution<long> num(-20, 20), den(1, 12);
    for (int t = 0; t < 100; ++t) {
        BigRat a(num(g), den(g)), b(num(g), den(g));
        a.canonicalize();
        b.canonicalize();
        o.report("random v #" + std::to_string(t), check_param_relations(VTriple(a, b, -a - b)));
    }
    const std::pair<const char *, RhoSolution> seeds[] = {
        {"rho0", rho0()}, {"rho11", gen_2x(1, 1, false).rho}, {"rho22", gen_2x(2, 2, false).rho}};
    for (const auto &[name, r] : seeds)
        for (Sign sg : {Sign::plus, Sign::minus}) {
            std::string t = std::string(name) + (sg == Sign::plus ? "+" : "-");
            SymMultiplet m = build_multiplet(r, sg);
            VTriple v = multiplet_vtriple(r, sg);
            auto degenerate = degenerate_relations(m, v);
            Boundary b = degenerate.empty() ? Boundary::strict : Boundary::symmetric_limit;
            if (!degenerate.empty())
                o.details.push_back(t + ": " + std::to_string(degenerate.size()) +
                                    " relations pass through f_n = 0 (alpha_n = 0), checked with the limit rule");
            try {
                o.report(t, check_relations(m, v, Realization::standard(), b));
            } catch (const DegenerateStep &e) {
                o.expect(false, t + ": " + e.what());
            }
        }
    return o;
}

Outcome crit6() {
    Outcome o;
    SymMultiplet m0 = build_multiplet(rho0());
    VTriple v0 = multiplet_vtriple(rho0());
    std::vector<Letter> letters;
    for (int l = 0; l <= static_cast<int>(Letter::s2); ++l)
        letters.push_back(static_cast<Letter>(l));
    constexpr std::size_t max_len = 4;
    // A multiplet already expanded at the same or a smaller depth has had all
    // its continuations checked, so its subtree is skipped (every word is
    // still covered: its endpoint equals a verified one).
    std::map<std::string, std::size_t> expanded;
    long distinct = 0, boundary = 0;
    Word w;
    std::function<void(const SymMultiplet &, const VTriple &)> walk = [&](const SymMultiplet &m, const VTriple &v) {
        std::string key = io::record(m, v).dump();
        auto it = expanded.find(key);
        if (it != expanded.end() && it->second <= w.size())
            return;
        if (it == expanded.end()) {
            ++distinct;
            Report r = verify_symmetric(m);
            o.expect(r.passed() && m.f[0] + m.f[1] + m.f[2] == RatFun(Poly::monomial(-2, 1)) &&
                         m.alpha[0] + m.alpha[1] + m.alpha[2] == -2,
                     "[" + word_to_string(w) + "]");
        }
        expanded[key] = w.size();
        if (w.size() == max_len)
            return;
        for (Letter l : letters) {
            w.push_back(l);
            try {
                auto next = act_multiplet(l, m, v);
                walk(next.first, next.second);
            } catch (const ZeroFunction &e) {
                ++boundary;
                o.expect(false, "[" + word_to_string(w) + "] " + e.what());
            }
            w.pop_back();
        }
    };
    walk(m0, v0);
    long words = 0;
    for (std::size_t len = 0, c = 1; len <= max_len; ++len, c *= letters.size())
        words += static_cast<long>(c);
    o.details.push_back(std::to_string(words) + " words over all " + std::to_string(letters.size()) + " letters, " +
                        std::to_string(distinct) + " distinct multiplets, " + std::to_string(boundary) +
                        " degenerate");
    return o;
}

Outcome crit7() {
    Outcome o;
    for (long n = 1; n <= 4; ++n)
        for (long k = 1; k <= n; ++k)
            for (bool hat : {false, true})
                for (int eps : {1, -1}) {
                    std::string t = (hat ? "hat" : "") + tag(k, n) + (eps > 0 ? "e+" : "e-");
                    Report r = verify_hamilton(frame_from_rho(gen_2x(k, n, hat).rho, eps));
                    o.expect(r.find("hvv") != nullptr, "cross-check present " + t);
                    o.report(t, r);
                }
    return o;
}

Outcome crit8() {
    Outcome o;
    std::mt19937_64 g(8);
    std::uniform_int_distribution<long> num(-9, 9), den(1, 9), deg(0, 3);
    auto poly = [&] {
        std::vector<BigRat> c;
        for (long d = deg(g); d >= 0; --d) {
            BigRat q(num(g), den(g));
            q.canonicalize();
            c.push_back(q);
        }
        return Poly(std::move(c));
    };
    long skipped = 0;
    while (o.cases < 50) {
        LittleJPair lj{RatFun(poly()), RatFun(poly())};
        JPair lhs, rhs;
        try {
            lhs = db_on_J(miura(lj), 1);
            rhs = miura(g_on_littlej(g_on_littlej(lj, 1), 1));
        } catch (const ZeroFunction &) {
            ++skipped;
            continue;
        }
        o.expect(lhs == rhs, "seed #" + std::to_string(o.cases));
    }
    o.details.push_back(std::to_string(skipped) + " seeds rejected by the nonzero guards");
    return o;
}

Outcome crit9() {
    Outcome o;
    const std::pair<const char *, RhoSolution> seeds[] = {
        {"rho0", rho0()}, {"rho22", gen_2x(2, 2, false).rho}, {"2x3(1,+1,1)", gen_2x3(1, 1, 1, Sign::plus).rho}};
    for (const auto &[name, r] : seeds) {
        Report rep = verify_dressing_chain(build_multiplet(r));
        o.expect(rep.find("rhojeq") != nullptr, std::string(name) + ": sigma-level rho equation present");
        o.report(name, rep);
    }
    return o;
}

Outcome crit10() {
    Outcome o;
    fs::path dir = fs::temp_directory_path() / "p4_acceptance";
    fs::create_directories(dir);
    std::ostringstream sink, err;
    auto cli = [&](std::vector<std::string> args) { return p4::cli::run(args, sink, err); };
    const std::pair<const char *, const char *> runs[] = {
        {"2x", "6"}, {"2x-hat", "6"}, {"1x", "4"}, {"1x-hat", "4"}, {"2x3", "3"}};
    for (const auto &[h, upto] : runs) {
        std::string gen = (dir / (std::string(h) + ".jsonl")).string();
        std::string canon = (dir / (std::string(h) + ".canon.jsonl")).string();
        o.expect(cli({"generate", "--hierarchy", h, "--upto", upto, "--out", gen}) == 0, std::string(h) + ": generate");
        o.expect(cli({"export", "--input", gen, "--out", canon}) == 0, std::string(h) + ": export");
        o.expect(cli({"export", "--input", canon, "--format", "latex", "--out", canon + ".tex"}) == 0,
                 std::string(h) + ": latex export");
        o.expect(cli({"verify", "--input", canon}) == 0, std::string(h) + ": verify");

        // perturb a single coefficient of the first record
        std::ifstream in(canon);
        std::string first;
        std::getline(in, first);
        json rec = json::parse(first);
        for (auto &c : rec["y"]["num"])
            if (c != "0") {
                c = io::to_json(io::rat_from_json(c) + BigRat(1, 7));
                break;
            }
        std::string mut = (dir / (std::string(h) + ".mut.json")).string();
        std::ofstream(mut) << rec.dump() << '\n';
        o.expect(cli({"verify", "--input", mut}) == 1, std::string(h) + ": mutation detected");
    }
    return o;
}

} // namespace

int main() {
    const std::pair<const char *, std::function<Outcome()>> criteria[] = {
        {"-2x hierarchy soundness", crit1},       {"-1/x hierarchy representations", crit2},
        {"-2x/3 hierarchy soundness", crit3},     {"seed and rho_shift values", crit4},
        {"group relations", crit5},               {"orbit closure to length 4", crit6},
        {"Hamiltonian frames", crit7},            {"Miura square-root intertwining", crit8},
        {"dressing chain", crit9},                {"CLI round trip and mutation", crit10},
    };
    bool all = true;
    int id = 0;
    for (const auto &[name, fn] : criteria) {
        ++id;
        auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = fn();
        } catch (const std::exception &e) {
            o.failures.push_back(std::string("exception: ") + e.what());
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        bool ok = o.failures.empty();
        all = all && ok;
        std::cout << (ok ? "PASS" : "FAIL") << " criterion " << id << ": " << name << " (" << o.cases << " cases, "
                  << std::fixed << std::setprecision(2) << secs << " s)";
        if (!ok)
            std::cout << " first failure: " << o.failures.front() << " [" << o.failures.size() << " total]";
        std::cout << '\n';
        for (const auto &d : o.details)
            std::cout << "    " << d << '\n';
    }
    return all ? 0 : 1;
}
