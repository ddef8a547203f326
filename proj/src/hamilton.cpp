#include "p4/hamilton.hpp"

namespace p4 {

namespace {

RatFun lin(const BigRat &c) { return RatFun(Poly::monomial(c, 1)); }

} // namespace

HamiltonianFrame frame_from_H(const RatFun &H, const VTriple &v, int epsilon) {
    if (epsilon != 1 && epsilon != -1)
        throw DomainError("epsilon in {+1, -1} required");
    const RatFun x = RatFun::x();
    const RatFun eps(epsilon);
    RatFun h1 = H.derivative();
    RatFun h2 = h1.derivative();
    RatFun two = RatFun(2) * (x * h1 - H);
    RatFun dk = h1 + RatFun(2 * v.vk());
    RatFun dj = h1 + RatFun(2 * v.vj());
    if (dk.is_zero())
        throw DegenerateDenominator("H_x + 2 v_k vanishes identically");
    if (dj.is_zero())
        throw DegenerateDenominator("H_x + 2 v_j vanishes identically");
    RatFun Q = (two - eps * h2) / (RatFun(-2) * dk);
    RatFun P = (two + eps * h2) / (RatFun(4) * eps * dj);
    return {epsilon, v, H, Q, P};
}

HamiltonianFrame frame_from_rho(const RhoSolution &r, int epsilon, Sign mu_sign) {
    VTriple v = multiplet_vtriple(r, mu_sign);
    RatFun H = (r.rho - lin(4 * v.vk())) * RatFun(BigRat(1, 2));
    return frame_from_H(H, v, epsilon);
}

std::pair<BigRat, BigRat> frame_parameters(const HamiltonianFrame &f) {
    BigRat d = f.v.vj() - f.v.vi();
    return {d * d, -f.epsilon - 3 * f.v.vk()};
}

Report verify_hamilton(const HamiltonianFrame &f) {
    const RatFun x = RatFun::x();
    const RatFun eps(f.epsilon);
    const RatFun &Q = f.Q, &P = f.P, &H = f.H;
    const BigRat &vi = f.v.vi(), &vj = f.v.vj(), &vk = f.v.vk();
    RatFun h1 = H.derivative();
    RatFun h2 = h1.derivative();
    RatFun quad = Q * Q + RatFun(2) * x * Q + RatFun(2 * (vj - vi));
    Report rep;
    rep.add_identity("qx", Q.derivative(), RatFun(4) * Q * P - eps * quad);
    rep.add_identity("px", P.derivative(),
                     RatFun(-2) * P * P + eps * (RatFun(2) * Q * P + RatFun(2) * x * P) - RatFun(vk - vi));
    rep.add_identity("hamiltonian", H,
                     RatFun(2) * P * P * Q - eps * quad * P + RatFun(vk - vi) * Q - lin(2 * vi));
    rep.add_identity("hx", h1, RatFun(-2) * eps * Q * P - RatFun(2 * vi));
    rep.add_identity("two_qp", RatFun(2) * Q * P, -eps * (h1 + RatFun(2 * vi)));
    RatFun two = RatFun(2) * (x * h1 - H);
    rep.add_identity("xhh", two,
                     -Q * (h1 + RatFun(2 * vk)) + RatFun(2) * eps * P * (h1 + RatFun(2 * vj)));
    rep.add_identity("hvv", (two - h2) * (two + h2),
                     RatFun(4) * (h1 + RatFun(2 * f.v.v1)) * (h1 + RatFun(2 * f.v.v2)) * (h1 + RatFun(2 * f.v.v3)));
    // the same identity in rho-form: rho = 2H + 4 v_k x, mu = v_j - v_i, nu = -3 v_k
    BigRat mu = vj - vi;
    rep.merge("rho.", verify_rho({RatFun(2) * H + lin(4 * vk), mu * mu, -3 * vk}));
    auto [a, b] = frame_parameters(f);
    if (Q.is_zero())
        rep.notes.push_back("Q vanishes identically; Painleve IV check skipped");
    else
        rep.merge("q.", verify_p4({Q, a, b}));
    return rep;
}

HamiltonianFrame pi_on_frame(Perm p, const HamiltonianFrame &f) {
    VTriple v = f.v;
    switch (p) {
    case Perm::pi12: std::swap(v.v1, v.v2); break;
    case Perm::pi13: std::swap(v.v1, v.v3); break;
    case Perm::pi23: std::swap(v.v2, v.v3); break;
    }
    return frame_from_H(f.H, v, f.epsilon);
}

std::optional<int> lukashevich_eta(const HamiltonianFrame &before, const HamiltonianFrame &after) {
    auto [a, b] = frame_parameters(before);
    auto [a2, b2] = frame_parameters(after);
    auto root = rational_sqrt(a);
    if (!root)
        return std::nullopt;
    const BigRat eps(before.epsilon);
    for (int eta : {1, -1}) {
        BigRat s = eta * *root;
        BigRat bn = BigRat(-3, 2) * eps - b / 2 + BigRat(3, 2) * s;
        BigRat t = b + eps + s;
        BigRat an = t * t / 4;
        if (bn == b2 && an == a2)
            return eta;
    }
    return std::nullopt;
}

} // namespace p4
