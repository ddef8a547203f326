#include "p4/cli.hpp"

#include "CLI11.hpp"

#include "p4/io.hpp"

#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>

namespace p4::cli {

namespace {

using io::json;

struct Options {
    // generate
    std::string hierarchy;
    std::optional<long> k, n, upto;
    std::optional<int> variant;
    std::string dir;
    std::string emit = "solution";
    int epsilon = 1;
    // shared
    std::string input, out, kind, word, format = "json", boundary = "strict", v;
    int length = 2;
    std::string letters = "g1 g2 g3 pi";
};

/// Output sink: the --out file or the given stream.
class Sink {
public:
    Sink(const std::string &path, std::ostream &fallback) : os_(&fallback) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_)
                throw ParseError("cannot open '" + path + "' for writing");
            os_ = &file_;
        }
    }
    void line(const json &j) { *os_ << j.dump() << '\n'; }
    std::ostream &stream() { return *os_; }

private:
    std::ofstream file_;
    std::ostream *os_;
};

std::vector<json> read_records(const std::string &path) {
    if (path.empty())
        throw ParseError("--input is required");
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot read '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    const std::string text = buf.str();
    // a single (possibly pretty-printed) document, or JSON-lines
    if (json whole = json::parse(text, nullptr, false); !whole.is_discarded()) {
        if (whole.is_array())
            return {whole.begin(), whole.end()};
        return {whole};
    }
    std::vector<json> out;
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line))
        if (line.find_first_not_of(" \t\r") != std::string::npos)
            out.push_back(io::parse(line));
    if (out.empty())
        throw ParseError("no records in '" + path + "'");
    return out;
}

Boundary boundary_of(const std::string &s) {
    if (s == "strict")
        return Boundary::strict;
    if (s == "limit")
        return Boundary::symmetric_limit;
    throw DomainError("--boundary in {strict, limit} required");
}

Sign sign_of(const std::string &s) {
    if (s == "+" || s == "plus")
        return Sign::plus;
    if (s == "-" || s == "minus")
        return Sign::minus;
    throw DomainError("--dir in {+, -} required");
}

/// First nonzero residual of a report (the zero polynomial when it passed).
Poly first_residual(const Report &r) {
    for (const auto &c : r.checks)
        if (!c.ok())
            return c.residual;
    return {};
}

// ---------------------------------------------------------------------------
// generate

struct Case {
    long k = 0, n = 0;
    int variant = 0;
    std::string dir;
};

std::vector<Case> generate_cases(const Options &o) {
    const std::string &h = o.hierarchy;
    const bool is2x3 = h == "2x3";
    if (h != "2x" && h != "2x-hat" && h != "1x" && h != "1x-hat" && !is2x3)
        throw DomainError("--hierarchy in {2x, 2x-hat, 1x, 1x-hat, 2x3} required");
    std::vector<int> variants;
    if (o.variant)
        variants = {*o.variant};
    else if (h == "2x" || h == "2x-hat")
        variants = {0};
    else
        variants = {1, 2};
    std::vector<std::string> dirs = {""};
    if (is2x3)
        dirs = o.dir.empty() ? std::vector<std::string>{"+", "-"} : std::vector<std::string>{o.dir};
    std::vector<Case> out;
    auto push = [&](long k, long n) {
        for (int var : variants)
            for (const auto &d : dirs)
                out.push_back({k, n, var, d});
    };
    if (o.upto) {
        if (*o.upto < 0)
            throw DomainError("--upto >= 0 required");
        for (long n = is2x3 ? 0 : 1; n <= *o.upto; ++n)
            for (long k = is2x3 ? 0 : 1; k <= (is2x3 ? *o.upto : n); ++k)
                push(k, n);
        return out;
    }
    if (!o.k || !o.n)
        throw DomainError("--k and --n (or --upto) required");
    push(*o.k, *o.n);
    return out;
}

Generated generate_one(const std::string &h, const Case &c) {
    if (h == "2x" || h == "2x-hat") {
        if (c.k < 1)
            throw DomainError("k >= 1 required");
        if (c.n < c.k - 1)
            throw DomainError("n >= k - 1 required");
        return gen_2x(c.k, c.n, h == "2x-hat");
    }
    if (h == "1x" || h == "1x-hat")
        return gen_1x(c.k, c.n, c.variant, h == "1x-hat");
    return gen_2x3(c.variant, c.n, c.k, sign_of(c.dir));
}

int cmd_generate(const Options &o, std::ostream &out) {
    if (o.emit != "solution" && o.emit != "multiplet" && o.emit != "frame")
        throw DomainError("--emit in {solution, multiplet, frame} required");
    if (o.format != "json" && o.format != "latex")
        throw DomainError("--format in {json, latex} required");
    Sink sink(o.out, out);
    bool all_ok = true;
    for (const Case &c : generate_cases(o)) {
        Generated g = generate_one(o.hierarchy, c);
        json rec;
        Report rep;
        if (o.emit == "solution") {
            rep.merge("rho.", verify_rho(g.rho));
            rep.merge("p4.", verify_p4(g.y));
            rec = {{"kind", "generated"},
                   {"rho", io::to_json(g.rho.rho)},
                   {"y", io::to_json(g.y.y)},
                   {"parameters",
                    {{"mu_sq", to_string(g.rho.mu_sq)}, {"nu", to_string(g.rho.nu)},
                     {"a", to_string(g.y.a)}, {"b", to_string(g.y.b)}}}};
        } else if (o.emit == "multiplet") {
            SymMultiplet m = build_multiplet(g.rho);
            VTriple v = multiplet_vtriple(g.rho);
            rep = verify_symmetric(m);
            rec = io::record(m, v);
        } else {
            HamiltonianFrame f = frame_from_rho(g.rho, o.epsilon);
            rep = verify_hamilton(f);
            rec = io::record(f);
        }
        rec["hierarchy"] = o.hierarchy;
        rec["k"] = c.k;
        rec["n"] = c.n;
        if (c.variant != 0)
            rec["variant"] = c.variant;
        if (!c.dir.empty())
            rec["dir"] = c.dir;
        rec["residual"] = io::to_json(first_residual(rep));
        rec["ok"] = rep.passed();
        if (!g.notes.empty())
            rec["notes"] = g.notes;
        all_ok = all_ok && rep.passed();
        if (o.format == "latex") {
            sink.stream() << "% " << o.hierarchy << " k=" << c.k << " n=" << c.n << '\n'
                          << "\\rho(x) = " << io::latex(g.rho.rho) << '\n'
                          << "y(x) = " << io::latex(g.y.y) << '\n';
        } else {
            sink.line(rec);
        }
    }
    return all_ok ? Exit::ok : Exit::residual_nonzero;
}

// ---------------------------------------------------------------------------
// verify / export

Report verify_record(const json &rec, std::string kind) {
    if (kind.empty())
        kind = rec.value("kind", "");
    if (kind == "p4")
        return verify_p4(io::p4_from_json(rec));
    if (kind == "rho")
        return verify_rho(io::rho_from_json(rec));
    if (kind == "multiplet")
        return verify_symmetric(io::multiplet_from_json(rec).first);
    if (kind == "frame")
        return verify_hamilton(io::frame_from_json(rec));
    if (kind == "generated") {
        Report rep;
        rep.merge("rho.", verify_rho(io::rho_from_json(rec)));
        rep.merge("p4.", verify_p4(io::p4_from_json(rec)));
        return rep;
    }
    throw ParseError("unknown record kind '" + kind + "'");
}

int cmd_verify(const Options &o, std::ostream &out) {
    if (!o.kind.empty() && o.kind != "p4" && o.kind != "rho" && o.kind != "multiplet" && o.kind != "frame")
        throw DomainError("--kind in {p4, rho, multiplet, frame} required");
    auto records = read_records(o.input);
    // parse everything first so malformed input never yields partial verdicts
    Sink sink(o.out, out);
    bool all_ok = true;
    std::vector<Report> reports;
    for (const auto &rec : records)
        reports.push_back(verify_record(rec, o.kind));
    for (std::size_t i = 0; i < reports.size(); ++i) {
        json j = io::to_json(reports[i]);
        j["record"] = i;
        sink.line(j);
        all_ok = all_ok && reports[i].passed();
    }
    return all_ok ? Exit::ok : Exit::residual_nonzero;
}

json canonical(const json &rec) {
    json out = rec;
    for (const char *f : {"rho", "y", "H", "Q", "P"})
        if (rec.contains(f))
            out[f] = io::to_json(io::ratfun_from_json(rec.at(f)));
    if (rec.contains("f")) {
        out["f"] = json::array();
        for (const auto &e : rec.at("f"))
            out["f"].push_back(io::to_json(io::ratfun_from_json(e)));
    }
    if (rec.contains("parameters"))
        for (auto &[k, v] : out["parameters"].items())
            v = io::to_json(io::rat_from_json(v));
    return out;
}

int cmd_export(const Options &o, std::ostream &out) {
    if (o.format != "json" && o.format != "latex")
        throw DomainError("--format in {json, latex} required");
    auto records = read_records(o.input);
    std::vector<json> canon;
    for (const auto &rec : records)
        canon.push_back(canonical(rec));
    Sink sink(o.out, out);
    for (std::size_t i = 0; i < canon.size(); ++i) {
        const json &rec = canon[i];
        if (o.format == "json") {
            sink.line(rec);
            continue;
        }
        std::ostream &os = sink.stream();
        os << "% record " << i << " (" << rec.value("kind", "?") << ")\n";
        const std::pair<const char *, const char *> names[] = {
            {"rho", "\\rho(x)"}, {"y", "y(x)"}, {"H", "H(x)"}, {"Q", "Q(x)"}, {"P", "P(x)"}};
        for (const auto &[f, tex] : names)
            if (rec.contains(f))
                os << tex << " = " << io::latex(io::ratfun_from_json(rec.at(f))) << '\n';
        if (rec.contains("f"))
            for (std::size_t n = 0; n < rec.at("f").size(); ++n)
                os << "f_" << n << "(x) = " << io::latex(io::ratfun_from_json(rec.at("f")[n])) << '\n';
        if (rec.contains("parameters"))
            for (const auto &[k, v] : rec.at("parameters").items())
                os << "% " << k << " = " << io::latex(io::rat_from_json(v)) << '\n';
    }
    return Exit::ok;
}

// ---------------------------------------------------------------------------
// transform / orbit / relations

json step_record(const OrbitStep &s) {
    json j = io::record(s.m, s.v);
    j["step"] = s.index;
    if (!s.letter.empty())
        j["letter"] = s.letter;
    j["residual"] = io::to_json(first_residual(s.check));
    j["ok"] = s.check.passed();
    return j;
}

int cmd_transform(const Options &o, std::ostream &out, std::ostream &err) {
    Word w = parse_word(o.word);
    Boundary b = boundary_of(o.boundary);
    auto [m, v] = io::multiplet_from_json(read_records(o.input).front());
    if (alphas_from_v(v) != m.alpha)
        throw DomainError("multiplet alphas do not match its v-triple");
    Sink sink(o.out, out);
    bool all_ok = true;
    try {
        orbit_each(m, v, w, [&](const OrbitStep &s) {
            sink.line(step_record(s));
            all_ok = all_ok && s.check.passed();
        }, b);
    } catch (const DegenerateStep &e) {
        err << "degenerate step " << e.position() << ": " << e.what() << '\n';
        return Exit::degenerate_step;
    }
    return all_ok ? Exit::ok : Exit::residual_nonzero;
}

int cmd_orbit(const Options &o, std::ostream &out) {
    Word alphabet = parse_word(o.letters);
    if (o.length < 0)
        throw DomainError("--length >= 0 required");
    Boundary b = boundary_of(o.boundary);
    auto [m, v] = io::multiplet_from_json(read_records(o.input).front());
    if (alphas_from_v(v) != m.alpha)
        throw DomainError("multiplet alphas do not match its v-triple");
    Sink sink(o.out, out);
    bool all_ok = true;
    Word w;
    std::function<void(const SymMultiplet &, const VTriple &)> walk = [&](const SymMultiplet &cm, const VTriple &cv) {
        Report rep = verify_symmetric(cm);
        json j = io::record(cm, cv);
        j["word"] = word_to_string(w);
        j["ok"] = rep.passed();
        j["residual"] = io::to_json(first_residual(rep));
        sink.line(j);
        all_ok = all_ok && rep.passed();
        if (static_cast<int>(w.size()) == o.length)
            return;
        for (Letter l : alphabet) {
            w.push_back(l);
            try {
                auto next = act_multiplet(l, cm, cv, Realization::standard(), b);
                walk(next.first, next.second);
            } catch (const ZeroFunction &e) {
                // orbit boundaries are data
                sink.line({{"word", word_to_string(w)}, {"degenerate", {{"position", w.size() - 1}, {"message", e.what()}}}});
            }
            w.pop_back();
        }
    };
    walk(m, v);
    return all_ok ? Exit::ok : Exit::residual_nonzero;
}

int cmd_relations(const Options &o, std::ostream &out, std::ostream &err) {
    Boundary b = boundary_of(o.boundary);
    Report rep;
    if (!o.v.empty()) {
        std::istringstream in(o.v);
        std::string a, c, d;
        if (!(in >> a >> c >> d))
            throw ParseError("--v expects three rationals");
        rep = check_param_relations(VTriple(parse_rat(a), parse_rat(c), parse_rat(d)));
    } else {
        auto [m, v] = io::multiplet_from_json(read_records(o.input).front());
        try {
            rep = check_relations(m, v, Realization::standard(), b);
        } catch (const DegenerateStep &e) {
            err << "degenerate step " << e.position() << ": " << e.what() << '\n';
            return Exit::degenerate_step;
        }
    }
    Sink sink(o.out, out);
    sink.line(io::to_json(rep));
    return rep.passed() ? Exit::ok : Exit::residual_nonzero;
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Exact rational solutions of Painleve IV"};
    app.require_subcommand(1);
    Options o;

    auto *gen = app.add_subcommand("generate", "Generate hierarchy solutions as JSON-lines");
    gen->add_option("--hierarchy", o.hierarchy, "2x, 2x-hat, 1x, 1x-hat or 2x3")->required();
    gen->add_option("--k", o.k);
    gen->add_option("--n", o.n);
    gen->add_option("--upto", o.upto, "all valid (k, n) with n <= N");
    gen->add_option("--variant", o.variant, "1 or 2 (1x, 1x-hat, 2x3)");
    gen->add_option("--dir", o.dir, "+ or - (2x3)");
    gen->add_option("--emit", o.emit, "solution, multiplet or frame");
    gen->add_option("--epsilon", o.epsilon, "frame epsilon, 1 or -1");
    gen->add_option("--out", o.out);
    gen->add_option("--format", o.format, "json or latex");

    auto *ver = app.add_subcommand("verify", "Verify records exactly");
    ver->add_option("--input", o.input)->required();
    ver->add_option("--kind", o.kind, "p4, rho, multiplet or frame (default: the record's kind)");
    ver->add_option("--out", o.out);

    auto *tr = app.add_subcommand("transform", "Apply a word to a multiplet, streaming every step");
    tr->add_option("--input", o.input)->required();
    tr->add_option("--word", o.word)->required();
    tr->add_option("--boundary", o.boundary, "strict or limit");
    tr->add_option("--out", o.out);

    auto *orb = app.add_subcommand("orbit", "Enumerate words up to a length from a multiplet");
    orb->add_option("--input", o.input)->required();
    orb->add_option("--length", o.length);
    orb->add_option("--letters", o.letters);
    orb->add_option("--boundary", o.boundary, "strict or limit");
    orb->add_option("--out", o.out);

    auto *rel = app.add_subcommand("relations", "Check the group relations");
    rel->add_option("--input", o.input, "multiplet record");
    rel->add_option("--v", o.v, "parameter-only check on \"v1 v2 v3\"");
    rel->add_option("--boundary", o.boundary, "strict or limit");
    rel->add_option("--out", o.out);

    auto *exp = app.add_subcommand("export", "Re-emit records as canonical JSON or LaTeX");
    exp->add_option("--input", o.input)->required();
    exp->add_option("--format", o.format, "json or latex");
    exp->add_option("--out", o.out);

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e, out, err);
        return code == 0 ? Exit::ok : Exit::parse_error;
    }

    try {
        if (gen->parsed())
            return cmd_generate(o, out);
        if (ver->parsed())
            return cmd_verify(o, out);
        if (tr->parsed())
            return cmd_transform(o, out, err);
        if (orb->parsed())
            return cmd_orbit(o, out);
        if (rel->parsed())
            return cmd_relations(o, out, err);
        return cmd_export(o, out);
    } catch (const ParseError &e) {
        err << "parse error: " << e.what() << '\n';
        return Exit::parse_error;
    } catch (const DegenerateStep &e) {
        err << "degenerate step " << e.position() << ": " << e.what() << '\n';
        return Exit::degenerate_step;
    } catch (const Error &e) {
        // DomainError, SingularFamily, DegenerateRho, IrrationalMu,
        // DegenerateDenominator, ZeroFunction and other precondition failures
        err << "error: " << e.what() << '\n';
        return Exit::domain_error;
    } catch (const std::exception &e) {
        err << "internal error: " << e.what() << '\n';
        return Exit::internal_error;
    }
}

} // namespace p4::cli
