#pragma once

#include "p4/report.hpp"
#include "p4/solutions.hpp"
#include "p4/vtriple.hpp"

#include <array>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace p4 {

/// Letters of the extended affine Weyl group words. Numbered letters follow
/// the v-index: g1 = g_j, g2 = g_i, g3 = g_k, likewise for G; pi12 = pi_ij,
/// pi13 = pi_jk, pi23 = pi_ik.
enum class Letter {
    g1, g2, g3, g1inv, g2inv, g3inv,
    G1, G2, G3, G1inv, G2inv, G3inv,
    pi, piinv, pi12, pi13, pi23,
    s0, s1, s2,
};

using Word = std::vector<Letter>;

std::string letter_name(Letter l);
Letter inverse(Letter l);

/// Whitespace-separated words, e.g. "gk gk pi s1 Gi^-1". Accepts numbered
/// (g1, G3^-1, pi13) and role (gj, Gk^-1, pi_jk) spellings. Throws ParseError.
Word parse_word(std::string_view text);
std::string word_to_string(const Word &w);

/// A degenerate step: a logarithmic derivative of the zero function.
class DegenerateStep : public ZeroFunction {
public:
    DegenerateStep(std::size_t position, const std::string &what)
        : ZeroFunction(what), position_(position) {}
    /// 0-based index of the failing letter within its word.
    [[nodiscard]] std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

/// How (ln f_n)_x is evaluated when f_n vanishes identically.
///  strict:          ZeroFunction (the step is an orbit boundary).
///  symmetric_limit: f_n = 0 solves the symmetric system only if alpha_n = 0;
///                   then (ln f_n)_x is replaced by its value from that system,
///                   f_{n+1} - f_{n+2} + alpha_n / f_n, with alpha_n / f_n = 0.
///                   A vanishing f_n with alpha_n != 0 still throws.
enum class Boundary { strict, symmetric_limit };

/// Function-level and parameter-level rules of the primitive letters. The
/// default realization is the one derived from the rho-function; tests swap
/// entries to make sure the relation checker notices.
struct Realization {
    /// L(n) = (ln f_n)_x of the tuple being transformed.
    using LogD = std::function<RatFun(int)>;
    using FRule = std::function<std::array<RatFun, 3>(const std::array<RatFun, 3> &, const LogD &)>;
    using PRule = std::function<VTriple(const VTriple &)>;
    struct Rule {
        FRule f;
        PRule v;
    };
    // indexed by role: 0 = i, 1 = j, 2 = k
    std::array<Rule, 3> g, ginv;
    Rule pi, piinv, s0, s1, s2;
    // parameter-only shift operators G_n (role-indexed)
    std::array<PRule, 3> G, Ginv;

    static const Realization &standard();
};

/// Parameter action of a single letter.
VTriple act_params(Letter l, const VTriple &v, const Realization &re = Realization::standard());

/// Function-level action; alphas are recomputed from the new v-triple.
/// Requires alphas_from_v(v) == m.alpha (DomainError otherwise); throws
/// ZeroFunction on a vanishing log argument.
std::pair<SymMultiplet, VTriple> act_multiplet(Letter l, const SymMultiplet &m, const VTriple &v,
                                               const Realization &re = Realization::standard(),
                                               Boundary b = Boundary::strict);

VTriple act_params(const Word &w, const VTriple &v, const Realization &re = Realization::standard());
/// Letters are applied left to right. Throws DegenerateStep.
std::pair<SymMultiplet, VTriple> act_multiplet(const Word &w, const SymMultiplet &m, const VTriple &v,
                                               const Realization &re = Realization::standard(),
                                               Boundary b = Boundary::strict);

/// Darboux-Backlund shift of y = y_+ with (a, b = nu + 1): direction +1 maps
/// nu -> nu + 2, direction -1 maps nu -> nu - 2; b shifts along.
/// Throws ZeroFunction when the logarithm's argument vanishes.
P4Solution G_on_y(const P4Solution &y, const BigRat &nu, int direction);

struct JPair {
    RatFun J, Jbar;
    friend bool operator==(const JPair &, const JPair &) = default;
};
struct LittleJPair {
    RatFun j, jbar;
    friend bool operator==(const LittleJPair &, const LittleJPair &) = default;
};

/// J = -j - jbar + j'/j, Jbar = jbar j. Throws ZeroFunction when j = 0.
JPair miura(const LittleJPair &lj);
/// G (direction +1) or G^-1 (-1) on (J, Jbar). Throws ZeroFunction.
JPair db_on_J(const JPair &p, int direction);
/// g (+1) or g^-1 (-1) on (j, jbar). Throws ZeroFunction.
LittleJPair g_on_littlej(const LittleJPair &lj, int direction);

/// A named relation: two words that must act identically.
struct Relation {
    std::string name;
    Word lhs, rhs;
};
const std::vector<Relation> &relation_suite();

/// Every relation of relation_suite on the v-triple ("param:" checks).
Report check_param_relations(const VTriple &v, const Realization &re = Realization::standard());
/// Parameter checks plus the same relations on the multiplet ("func:"), the
/// symmetric system at every word endpoint, and G_k against G_on_y.
/// Throws DegenerateStep naming the word and position.
Report check_relations(const SymMultiplet &seed, const VTriple &v, const Realization &re = Realization::standard(),
                       Boundary b = Boundary::strict);

/// Relations whose words hit a vanishing log argument under the strict rule,
/// as "name: message" lines (empty when every word is regular).
std::vector<std::string> degenerate_relations(const SymMultiplet &seed, const VTriple &v);

struct OrbitStep {
    std::size_t index; // 0 = seed
    std::string letter;
    SymMultiplet m;
    VTriple v;
    Report check;
};

/// Applies the word letter by letter, verifying the symmetric system after
/// each step; the callback sees every step as it is produced.
void orbit_each(const SymMultiplet &seed, const VTriple &v, const Word &w,
                const std::function<void(const OrbitStep &)> &emit, Boundary b = Boundary::strict);
std::vector<OrbitStep> orbit(const SymMultiplet &seed, const VTriple &v, const Word &w,
                             Boundary b = Boundary::strict);

} // namespace p4
