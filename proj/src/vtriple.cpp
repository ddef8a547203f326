#include "p4/vtriple.hpp"

namespace p4 {

VTriple::VTriple(BigRat a, BigRat b, BigRat c) : v1(std::move(a)), v2(std::move(b)), v3(std::move(c)) {
    if (sgn(v1 + v2 + v3) != 0)
        throw Error("VTriple entries must sum to zero, got " + to_string(v1 + v2 + v3));
}

std::array<BigRat, 3> alphas_from_v(const VTriple &v) {
    return {2 * (v.vk() - v.vj()) - 2, 2 * (v.vj() - v.vi()), 2 * (v.vi() - v.vk())};
}

VTriple v_from_alphas(const std::array<BigRat, 3> &alpha) {
    if (alpha[0] + alpha[1] + alpha[2] != -2)
        throw Error("alpha0 + alpha1 + alpha2 must equal -2");
    BigRat vi = (alpha[2] - alpha[1]) / 6;
    BigRat vj = vi + alpha[1] / 2;
    BigRat vk = vi - alpha[2] / 2;
    return VTriple::from_roles(vi, vj, vk);
}

VTriple v_from_mu_nu(const BigRat &mu, const BigRat &nu) {
    BigRat vk = -nu / 3;
    BigRat vi = (nu / 3 - mu) / 2;
    BigRat vj = (nu / 3 + mu) / 2;
    return VTriple::from_roles(vi, vj, vk);
}

} // namespace p4
