#include "p4/weyl.hpp"

#include <sstream>
#include <unordered_map>

namespace p4 {

namespace {

using F3 = std::array<RatFun, 3>;
using LogD = Realization::LogD;

const BigRat third(1, 3);
const BigRat two_thirds(2, 3);

VTriple roles(const BigRat &vi, const BigRat &vj, const BigRat &vk) { return VTriple::from_roles(vi, vj, vk); }

Realization make_standard() {
    Realization re;
    // role 0 = i, 1 = j, 2 = k
    re.g[2] = {[](const F3 &f, const LogD &L) { RatFun l = L(0); return F3{f[2] + l, f[1] - l, f[0]}; },
               [](const VTriple &v) { return roles(v.vj() + two_thirds, v.vi() - third, v.vk() - third); }};
    re.g[0] = {[](const F3 &f, const LogD &L) { RatFun l = L(2); return F3{f[0] - l, f[2], f[1] + l}; },
               [](const VTriple &v) { return roles(v.vi() - third, v.vk() - third, v.vj() + two_thirds); }};
    re.g[1] = {[](const F3 &f, const LogD &L) { RatFun l = L(1); return F3{f[1], f[0] + l, f[2] - l}; },
               [](const VTriple &v) { return roles(v.vk() - third, v.vj() - third, v.vi() + two_thirds); }};

    re.ginv[2] = {[](const F3 &f, const LogD &L) { RatFun l = L(2); return F3{f[2], f[1] + l, f[0] - l}; },
                  [](const VTriple &v) { return roles(v.vj() + third, v.vi() - two_thirds, v.vk() + third); }};
    re.ginv[0] = {[](const F3 &f, const LogD &L) { RatFun l = L(1); return F3{f[0] + l, f[2] - l, f[1]}; },
                  [](const VTriple &v) { return roles(v.vi() + third, v.vk() - two_thirds, v.vj() + third); }};
    re.ginv[1] = {[](const F3 &f, const LogD &L) { RatFun l = L(0); return F3{f[1] - l, f[0], f[2] + l}; },
                  [](const VTriple &v) { return roles(v.vk() - two_thirds, v.vj() + third, v.vi() + third); }};

    re.pi = {[](const F3 &f, const LogD &) { return F3{f[1], f[2], f[0]}; },
             [](const VTriple &v) { return roles(v.vk() - third, v.vi() - third, v.vj() + two_thirds); }};
    re.piinv = {[](const F3 &f, const LogD &) { return F3{f[2], f[0], f[1]}; },
                [](const VTriple &v) { return roles(v.vj() + third, v.vk() - two_thirds, v.vi() + third); }};

    re.s0 = {[](const F3 &f, const LogD &L) { RatFun l = L(0); return F3{f[0], f[2] + l, f[1] - l}; },
             [](const VTriple &v) { return roles(v.vi(), v.vk() - 1, v.vj() + 1); }};
    re.s1 = {[](const F3 &f, const LogD &L) { RatFun l = L(1); return F3{f[2] - l, f[1], f[0] + l}; },
             [](const VTriple &v) { return roles(v.vj(), v.vi(), v.vk()); }};
    re.s2 = {[](const F3 &f, const LogD &L) { RatFun l = L(2); return F3{f[1] + l, f[0] - l, f[2]}; },
             [](const VTriple &v) { return roles(v.vk(), v.vj(), v.vi()); }};

    for (int n = 0; n < 3; ++n) {
        auto shift = [n](const VTriple &v, const BigRat &s, const BigRat &d) {
            std::array<BigRat, 3> r{v.vi() + s, v.vj() + s, v.vk() + s};
            r[n] += d;
            return roles(r[0], r[1], r[2]);
        };
        re.G[n] = [shift](const VTriple &v) { return shift(v, third, BigRat(-1)); };
        re.Ginv[n] = [shift](const VTriple &v) { return shift(v, -third, BigRat(1)); };
    }
    return re;
}

// role index of a numbered letter: 1 -> j, 2 -> i, 3 -> k
int role_of(int number) { return number == 1 ? 1 : number == 2 ? 0 : 2; }

struct LetterInfo {
    const char *name;
    Letter inv;
};

const LetterInfo &info(Letter l) {
    static const std::array<LetterInfo, 20> table{{
        {"g1", Letter::g1inv}, {"g2", Letter::g2inv}, {"g3", Letter::g3inv},
        {"g1^-1", Letter::g1}, {"g2^-1", Letter::g2}, {"g3^-1", Letter::g3},
        {"G1", Letter::G1inv}, {"G2", Letter::G2inv}, {"G3", Letter::G3inv},
        {"G1^-1", Letter::G1}, {"G2^-1", Letter::G2}, {"G3^-1", Letter::G3},
        {"pi", Letter::piinv}, {"pi^-1", Letter::pi},
        {"pi12", Letter::pi12}, {"pi13", Letter::pi13}, {"pi23", Letter::pi23},
        {"s0", Letter::s0}, {"s1", Letter::s1}, {"s2", Letter::s2},
    }};
    return table.at(static_cast<std::size_t>(l));
}

// A letter as a sequence of primitive rules; G_n carries its own parameter
// rule, which replaces the composite of its steps.
struct Expansion {
    std::vector<const Realization::Rule *> steps;
    const Realization::PRule *v = nullptr;
};

Expansion expand(Letter l, const Realization &re) {
    auto g = [&](int number, bool inv) { return inv ? &re.ginv[role_of(number)] : &re.g[role_of(number)]; };
    switch (l) {
    case Letter::g1: case Letter::g2: case Letter::g3:
        return {{g(static_cast<int>(l) + 1, false)}};
    case Letter::g1inv: case Letter::g2inv: case Letter::g3inv:
        return {{g(static_cast<int>(l) - 2, true)}};
    case Letter::G1: case Letter::G2: case Letter::G3: {
        int num = static_cast<int>(l) - 5;
        return {{g(num, false), g(num, false)}, &re.G[role_of(num)]};
    }
    case Letter::G1inv: case Letter::G2inv: case Letter::G3inv: {
        int num = static_cast<int>(l) - 8;
        return {{g(num, true), g(num, true)}, &re.Ginv[role_of(num)]};
    }
    case Letter::pi: return {{&re.pi}};
    case Letter::piinv: return {{&re.piinv}};
    case Letter::pi12: case Letter::s1: return {{&re.s1}};
    case Letter::pi23: case Letter::s2: return {{&re.s2}};
    case Letter::pi13: return {{&re.s1, &re.s2, &re.s1}};
    case Letter::s0: return {{&re.s0}};
    }
    throw Error("unknown letter");
}

} // namespace

const Realization &Realization::standard() {
    static const Realization re = make_standard();
    return re;
}

std::string letter_name(Letter l) { return info(l).name; }
Letter inverse(Letter l) { return info(l).inv; }

Word parse_word(std::string_view text) {
    static const std::unordered_map<std::string, Letter> names = [] {
        std::unordered_map<std::string, Letter> m;
        for (int i = 0; i < 20; ++i)
            m.emplace(info(static_cast<Letter>(i)).name, static_cast<Letter>(i));
        const char *role[3] = {"j", "i", "k"};
        for (int n = 0; n < 3; ++n) {
            m.emplace(std::string("g") + role[n], static_cast<Letter>(n));
            m.emplace(std::string("g") + role[n] + "^-1", static_cast<Letter>(3 + n));
            m.emplace(std::string("G") + role[n], static_cast<Letter>(6 + n));
            m.emplace(std::string("G") + role[n] + "^-1", static_cast<Letter>(9 + n));
        }
        m.emplace("pi_ij", Letter::pi12);
        m.emplace("pi_jk", Letter::pi13);
        m.emplace("pi_ik", Letter::pi23);
        return m;
    }();
    Word w;
    std::istringstream in{std::string(text)};
    std::string tok;
    while (in >> tok) {
        auto it = names.find(tok);
        if (it == names.end())
            throw ParseError("unknown letter '" + tok + "'");
        w.push_back(it->second);
    }
    return w;
}

std::string word_to_string(const Word &w) {
    std::string out;
    for (Letter l : w) {
        if (!out.empty())
            out += ' ';
        out += letter_name(l);
    }
    return out;
}

VTriple act_params(Letter l, const VTriple &v, const Realization &re) {
    Expansion e = expand(l, re);
    if (e.v != nullptr)
        return (*e.v)(v);
    VTriple out = v;
    for (const auto *r : e.steps)
        out = r->v(out);
    return out;
}

VTriple act_params(const Word &w, const VTriple &v, const Realization &re) {
    VTriple out = v;
    for (Letter l : w)
        out = act_params(l, out, re);
    return out;
}

std::pair<SymMultiplet, VTriple> act_multiplet(Letter l, const SymMultiplet &m, const VTriple &v,
                                               const Realization &re, Boundary b) {
    if (alphas_from_v(v) != m.alpha)
        throw DomainError("multiplet alphas do not match the v-triple");
    Expansion e = expand(l, re);
    F3 f = m.f;
    VTriple cur = v;
    for (const auto *rule : e.steps) {
        const auto alpha = alphas_from_v(cur);
        LogD logd = [&](int n) -> RatFun {
            if (!f[n].is_zero())
                return log_derivative(f[n]);
            if (b == Boundary::symmetric_limit && sgn(alpha[n]) == 0)
                return f[(n + 1) % 3] - f[(n + 2) % 3];
            throw ZeroFunction("logarithmic derivative of f" + std::to_string(n) + " = 0");
        };
        f = rule->f(f, logd);
        cur = rule->v(cur);
    }
    if (e.v != nullptr)
        cur = (*e.v)(v);
    return {SymMultiplet{f, alphas_from_v(cur)}, cur};
}

std::pair<SymMultiplet, VTriple> act_multiplet(const Word &w, const SymMultiplet &m, const VTriple &v,
                                               const Realization &re, Boundary b) {
    std::pair<SymMultiplet, VTriple> cur{m, v};
    for (std::size_t i = 0; i < w.size(); ++i) {
        try {
            cur = act_multiplet(w[i], cur.first, cur.second, re, b);
        } catch (const ZeroFunction &e) {
            throw DegenerateStep(i, "step " + std::to_string(i) + " (" + letter_name(w[i]) + "): " + e.what());
        }
    }
    return cur;
}

P4Solution G_on_y(const P4Solution &s, const BigRat &nu, int direction) {
    const RatFun &y = s.y;
    RatFun x = RatFun::x();
    RatFun quad = y * y + RatFun(2) * x * y;
    if (direction > 0) {
        RatFun arg = y.derivative() + quad + RatFun(2 * nu + 4);
        if (arg.is_zero())
            throw ZeroFunction("G: y' + y^2 + 2xy + 2nu + 4 vanishes");
        return {y - log_derivative(arg), s.a, s.b + 2};
    }
    RatFun arg = y.derivative() - quad - RatFun(2 * nu);
    if (arg.is_zero())
        throw ZeroFunction("G^-1: y' - y^2 - 2xy - 2nu vanishes");
    return {y + log_derivative(arg), s.a, s.b - 2};
}

JPair miura(const LittleJPair &lj) {
    if (lj.j.is_zero())
        throw ZeroFunction("miura: j vanishes");
    return {-lj.j - lj.jbar + log_derivative(lj.j), lj.jbar * lj.j};
}

JPair db_on_J(const JPair &p, int direction) {
    RatFun jx = p.J.derivative();
    if (direction > 0) {
        RatFun arg = p.Jbar + jx;
        if (arg.is_zero())
            throw ZeroFunction("G: Jbar + J_x vanishes");
        return {p.J + log_derivative(arg), arg};
    }
    if (p.Jbar.is_zero())
        throw ZeroFunction("G^-1: Jbar vanishes");
    RatFun l = log_derivative(p.Jbar);
    return {p.J - l, p.Jbar + l.derivative() - jx};
}

LittleJPair g_on_littlej(const LittleJPair &lj, int direction) {
    if (direction > 0) {
        if (lj.j.is_zero())
            throw ZeroFunction("g: j vanishes");
        return {lj.jbar - log_derivative(lj.j), lj.j};
    }
    if (lj.jbar.is_zero())
        throw ZeroFunction("g^-1: jbar vanishes");
    return {lj.jbar, lj.j + log_derivative(lj.jbar)};
}

const std::vector<Relation> &relation_suite() {
    static const std::vector<Relation> suite = [] {
        using enum Letter;
        std::vector<Relation> r;
        const Letter g[4] = {g1, g1, g2, g3}; // 1-based
        const Letter G[4] = {G1, G1, G2, G3};
        const Letter Gi[4] = {G1inv, G1inv, G2inv, G3inv};
        const Letter ginv[4] = {g1inv, g1inv, g2inv, g3inv};
        auto tag = [](int n, int m) { return "[" + std::to_string(n) + "," + std::to_string(m) + "]"; };
        for (int n = 1; n <= 3; ++n) {
            for (int m = 1; m <= 3; ++m) {
                if (n == m)
                    continue;
                if (n < m)
                    r.push_back({"braid" + tag(n, m), {g[n], g[m], g[n]}, {g[m], g[n], g[m]}});
                r.push_back({"braid_square" + tag(n, m), {g[n], g[m], g[n], g[n], g[m], g[n]}, {}});
                r.push_back({"left_square" + tag(n, m), {g[n], g[n], g[m], g[n], g[n], g[m]}, {}});
                r.push_back({"right_square" + tag(n, m), {g[m], g[n], g[n], g[m], g[n], g[n]}, {}});
            }
        }
        r.push_back({"pi_squared[gk gi]", {g3, g2}, {pi, pi}});
        r.push_back({"pi_squared[gi gj]", {g2, g1}, {pi, pi}});
        r.push_back({"pi_squared[gj gk]", {g1, g3}, {pi, pi}});
        for (int n = 1; n <= 3; ++n) {
            std::string s = std::to_string(n);
            r.push_back({"g_squared[" + s + "]", {g[n], g[n]}, {G[n]}});
            r.push_back({"g_inverse[" + s + "]", {g[n], ginv[n]}, {}});
            r.push_back({"g_inverse_left[" + s + "]", {ginv[n], g[n]}, {}});
            r.push_back({"G_inverse[" + s + "]", {G[n], Gi[n]}, {}});
        }
        r.push_back({"s_squared[0]", {s0, s0}, {}});
        r.push_back({"s_squared[1]", {s1, s1}, {}});
        r.push_back({"s_squared[2]", {s2, s2}, {}});
        r.push_back({"pi_cubed", {pi, pi, pi}, {}});
        r.push_back({"pi_inverse", {pi, piinv}, {}});
        r.push_back({"pi13_involution", {pi13, pi13}, {}});
        r.push_back({"composite[gj]", {g1}, {G2inv, pi23}});
        r.push_back({"composite[gi]", {g2}, {G1inv, pi13}});
        r.push_back({"composite[gk]", {g3}, {G1inv, pi12}});
        r.push_back({"pi_G[i]", {pi, G2}, {G3, pi}});
        r.push_back({"pi_G[k]", {pi, G3}, {G1, pi}});
        r.push_back({"pi_G[j]", {pi, G1}, {G2, pi}});
        r.push_back({"G_conjugate[j]", {G1inv}, {g3, G1, g3}});
        r.push_back({"G_conjugate[i]", {G2inv}, {g1, G2, g1}});
        r.push_back({"G_conjugate[k]", {G3inv}, {g2, G3, g2}});
        r.push_back({"s_from_g[0]", {s0}, {g3, pi, pi}});
        r.push_back({"s_from_g[1]", {s1}, {g1, pi, pi}});
        r.push_back({"s_from_g[2]", {s2}, {g2, pi, pi}});
        return r;
    }();
    return suite;
}

namespace {

Poly triple_residual(const VTriple &a, const VTriple &b) {
    for (auto [x, y] : {std::pair{a.v1, b.v1}, std::pair{a.v2, b.v2}, std::pair{a.v3, b.v3}})
        if (x != y)
            return Poly::constant(x - y);
    return {};
}

Poly multiplet_residual(const SymMultiplet &a, const SymMultiplet &b) {
    for (int n = 0; n < 3; ++n) {
        Poly r = (a.f[n] - b.f[n]).num();
        if (!r.is_zero())
            return r;
    }
    for (int n = 0; n < 3; ++n)
        if (a.alpha[n] != b.alpha[n])
            return Poly::constant(a.alpha[n] - b.alpha[n]);
    return {};
}

} // namespace

Report check_param_relations(const VTriple &v, const Realization &re) {
    Report rep;
    for (const auto &rel : relation_suite())
        rep.add("param:" + rel.name, triple_residual(act_params(rel.lhs, v, re), act_params(rel.rhs, v, re)));
    return rep;
}

Report check_relations(const SymMultiplet &seed, const VTriple &v, const Realization &re, Boundary b) {
    Report rep = check_param_relations(v, re);
    auto run = [&](const Relation &rel, const Word &w, const char *side) {
        try {
            return act_multiplet(w, seed, v, re, b);
        } catch (const DegenerateStep &e) {
            throw DegenerateStep(e.position(), rel.name + " " + side + " '" + word_to_string(w) + "' at " + e.what());
        }
    };
    for (const auto &rel : relation_suite()) {
        auto lhs = run(rel, rel.lhs, "lhs");
        auto rhs = run(rel, rel.rhs, "rhs");
        rep.add("func:" + rel.name, multiplet_residual(lhs.first, rhs.first));
        rep.merge("func:" + rel.name + ":lhs:", verify_symmetric(lhs.first));
    }
    // G_k against the Darboux-Backlund shift of y^(k)_+ = f1, nu = -3 v_k.
    const BigRat nu = -3 * v.vk();
    P4Solution f1{seed.f[1], 0, nu + 1};
    for (int dir : {+1, -1}) {
        const std::string name = dir > 0 ? "func:G_on_y[+]" : "func:G_on_y[-]";
        P4Solution shifted;
        try {
            shifted = G_on_y(f1, nu, dir);
        } catch (const ZeroFunction &e) {
            rep.notes.push_back(name + " not evaluated: " + e.what());
            continue;
        }
        auto moved = act_multiplet(Word{dir > 0 ? Letter::G3 : Letter::G3inv}, seed, v, re, b);
        rep.add_identity(name, moved.first.f[1], shifted.y);
    }
    return rep;
}

std::vector<std::string> degenerate_relations(const SymMultiplet &seed, const VTriple &v) {
    std::vector<std::string> out;
    for (const auto &rel : relation_suite()) {
        for (const Word *w : {&rel.lhs, &rel.rhs}) {
            try {
                act_multiplet(*w, seed, v);
            } catch (const DegenerateStep &e) {
                out.push_back(rel.name + ": '" + word_to_string(*w) + "' " + e.what());
                break;
            }
        }
    }
    return out;
}

void orbit_each(const SymMultiplet &seed, const VTriple &v, const Word &w,
                const std::function<void(const OrbitStep &)> &emit, Boundary b) {
    OrbitStep step{0, "", seed, v, verify_symmetric(seed)};
    emit(step);
    for (std::size_t i = 0; i < w.size(); ++i) {
        try {
            auto next = act_multiplet(w[i], step.m, step.v, Realization::standard(), b);
            step = {i + 1, letter_name(w[i]), std::move(next.first), next.second, {}};
        } catch (const ZeroFunction &e) {
            throw DegenerateStep(i, "step " + std::to_string(i) + " (" + letter_name(w[i]) + "): " + e.what());
        }
        step.check = verify_symmetric(step.m);
        emit(step);
    }
}

std::vector<OrbitStep> orbit(const SymMultiplet &seed, const VTriple &v, const Word &w, Boundary b) {
    std::vector<OrbitStep> out;
    orbit_each(seed, v, w, [&](const OrbitStep &s) { out.push_back(s); }, b);
    return out;
}

} // namespace p4
