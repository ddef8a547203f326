#include "p4/io.hpp"

namespace p4::io {

namespace {

const json &field(const json &j, const char *name) {
    if (!j.is_object() || !j.contains(name))
        throw ParseError(std::string("missing field '") + name + "'");
    return j.at(name);
}

json params(std::initializer_list<std::pair<const char *, const BigRat *>> kv) {
    json p = json::object();
    for (const auto &[k, v] : kv)
        p[k] = to_json(*v);
    return p;
}

} // namespace

json to_json(const BigRat &q) { return to_string(q); }

json to_json(const Poly &p) {
    json a = json::array();
    for (const auto &c : p.coeffs())
        a.push_back(to_string(c));
    return a;
}

json to_json(const RatFun &f) { return {{"num", to_json(f.num())}, {"den", to_json(f.den())}}; }

json to_json(const VTriple &v) { return json::array({to_string(v.v1), to_string(v.v2), to_string(v.v3)}); }

json to_json(const Report &r) {
    json checks = json::array();
    for (const auto &c : r.checks)
        checks.push_back({{"name", c.name}, {"ok", c.ok()}, {"residual", to_json(c.residual)}});
    return {{"ok", r.passed()}, {"checks", checks}, {"notes", r.notes}};
}

BigRat rat_from_json(const json &j) {
    if (!j.is_string())
        throw ParseError("rational must be a \"p/q\" string, got " + j.dump());
    return parse_rat(j.get<std::string>());
}

Poly poly_from_json(const json &j) {
    if (!j.is_array())
        throw ParseError("polynomial must be an array of rationals");
    std::vector<BigRat> c;
    c.reserve(j.size());
    for (const auto &e : j)
        c.push_back(rat_from_json(e));
    return Poly(std::move(c));
}

RatFun ratfun_from_json(const json &j) {
    Poly num = poly_from_json(field(j, "num"));
    Poly den = poly_from_json(field(j, "den"));
    if (den.is_zero())
        throw ParseError("zero denominator");
    return RatFun(std::move(num), std::move(den));
}

VTriple vtriple_from_json(const json &j) {
    if (!j.is_array() || j.size() != 3)
        throw ParseError("v must be an array of three rationals");
    BigRat a = rat_from_json(j[0]), b = rat_from_json(j[1]), c = rat_from_json(j[2]);
    if (sgn(a + b + c) != 0)
        throw ParseError("v entries must sum to zero");
    return {a, b, c};
}

json record(const P4Solution &s) {
    return {{"kind", "p4"}, {"y", to_json(s.y)}, {"parameters", params({{"a", &s.a}, {"b", &s.b}})}};
}

json record(const RhoSolution &r) {
    return {{"kind", "rho"}, {"rho", to_json(r.rho)}, {"parameters", params({{"mu_sq", &r.mu_sq}, {"nu", &r.nu}})}};
}

json record(const SymMultiplet &m, const VTriple &v) {
    json f = json::array();
    json alpha = json::array();
    for (int n = 0; n < 3; ++n) {
        f.push_back(to_json(m.f[n]));
        alpha.push_back(to_string(m.alpha[n]));
    }
    return {{"kind", "multiplet"}, {"f", f}, {"alpha", alpha}, {"v", to_json(v)}};
}

json record(const HamiltonianFrame &f) {
    return {{"kind", "frame"}, {"epsilon", f.epsilon}, {"v", to_json(f.v)},
            {"H", to_json(f.H)}, {"Q", to_json(f.Q)}, {"P", to_json(f.P)}};
}

P4Solution p4_from_json(const json &j) {
    const json &p = field(j, "parameters");
    return {ratfun_from_json(field(j, "y")), rat_from_json(field(p, "a")), rat_from_json(field(p, "b"))};
}

RhoSolution rho_from_json(const json &j) {
    const json &p = field(j, "parameters");
    return {ratfun_from_json(field(j, "rho")), rat_from_json(field(p, "mu_sq")), rat_from_json(field(p, "nu"))};
}

std::pair<SymMultiplet, VTriple> multiplet_from_json(const json &j) {
    const json &f = field(j, "f");
    const json &a = field(j, "alpha");
    if (!f.is_array() || f.size() != 3 || !a.is_array() || a.size() != 3)
        throw ParseError("multiplet needs three f's and three alphas");
    SymMultiplet m;
    for (int n = 0; n < 3; ++n) {
        m.f[n] = ratfun_from_json(f[n]);
        m.alpha[n] = rat_from_json(a[n]);
    }
    if (m.alpha[0] + m.alpha[1] + m.alpha[2] != -2)
        throw ParseError("alphas must sum to -2");
    VTriple v = j.contains("v") ? vtriple_from_json(j.at("v")) : v_from_alphas(m.alpha);
    return {m, v};
}

HamiltonianFrame frame_from_json(const json &j) {
    const json &e = field(j, "epsilon");
    if (!e.is_number_integer() || (e.get<int>() != 1 && e.get<int>() != -1))
        throw ParseError("epsilon must be 1 or -1");
    return {e.get<int>(), vtriple_from_json(field(j, "v")), ratfun_from_json(field(j, "H")),
            ratfun_from_json(field(j, "Q")), ratfun_from_json(field(j, "P"))};
}

json parse(const std::string &text) {
    try {
        return json::parse(text);
    } catch (const json::exception &e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
}

std::string latex(const BigRat &q) {
    if (q.get_den() == 1)
        return q.get_num().get_str();
    std::string sign = sgn(q) < 0 ? "-" : "";
    mpz_class n = abs(q.get_num());
    return sign + "\\frac{" + n.get_str() + "}{" + q.get_den().get_str() + "}";
}

std::string latex(const Poly &p) {
    if (p.is_zero())
        return "0";
    std::string out;
    for (long d = p.degree(); d >= 0; --d) {
        const BigRat &c = p.coeffs()[static_cast<std::size_t>(d)];
        if (sgn(c) == 0)
            continue;
        BigRat mag = abs(c);
        if (out.empty())
            out += sgn(c) < 0 ? "-" : "";
        else
            out += sgn(c) < 0 ? " - " : " + ";
        if (d == 0 || mag != 1)
            out += latex(mag);
        if (d >= 1)
            out += "x";
        if (d >= 2)
            out += "^{" + std::to_string(d) + "}";
    }
    return out;
}

std::string latex(const RatFun &f) {
    if (f.is_poly())
        return latex(f.num() * (1 / f.den().lead()));
    return "\\frac{" + latex(f.num()) + "}{" + latex(f.den()) + "}";
}

} // namespace p4::io
