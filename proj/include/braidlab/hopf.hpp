#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "braidlab/nichols.hpp"

namespace braidlab {

// Commutative cocommutative Cartan part: group-likes g with characters
// gamma_i(g) and primitives H with weights gamma_i(H).
struct GroupLikeGen {
    std::string name;
    int64_t order = 0;          // 0 for infinite order (Laurent)
    std::vector<CycNum> chi;    // chi[i] = gamma_i(g)
};
struct PrimitiveGen {
    std::string name;
    std::vector<Rational> weight; // weight[i] = gamma_i(H), i.e. [H, x_i] = weight[i] x_i
};
struct CartanSpec {
    std::vector<GroupLikeGen> grouplikes;
    std::vector<PrimitiveGen> primitives;
};

using GroupMono = std::vector<int64_t>; // exponents of the group-like generators

enum class SymKind { GroupLike, Primitive, X, XStar };
struct Symbol {
    std::string name;
    SymKind kind;
    int index;
    int exponent = 1; // +-1 for group-likes
};

using NcMono = std::vector<int>; // symbol ids
using NcPoly = std::map<NcMono, CycNum>;

struct Relation {
    std::string kind; // cartan | commutation | nichols | linking
    std::string name;
    NcPoly lhs, rhs;
    int degree = 0;   // x-degree minus x*-degree of the leading word, for reports
};

// a x_i* x_i + b x_i x_i* = c0 + c1 gbar_i g_i
struct LinkingData {
    CycNum a{1}, b, c0{1}, c1{-1};
};

// PBW-ordered monomial: basis word of B(X), Cartan monomial, basis word of B(X*).
struct PbwKey {
    Word x;
    GroupMono g;
    std::vector<int> h;
    Word xs;
    friend bool operator<(const PbwKey& a, const PbwKey& b);
    friend bool operator==(const PbwKey& a, const PbwKey& b) = default;
};
using PbwElem = std::map<PbwKey, CycNum>;
using PbwTensor = std::map<std::pair<PbwKey, PbwKey>, CycNum>;

class HopfPresentation {
public:
    std::string name;
    CartanSpec cartan;
    BraidMatrix q;                    // q[i][j] = sigma(gamma_i, gamma_j)
    std::vector<GroupMono> g, gbar;   // realizing group-likes of each x_i
    bool has_dual = true;             // false for a biproduct B(X) # C
    std::vector<LinkingData> linking; // diagonal linking constants
    std::vector<Symbol> symbols;
    std::vector<Relation> relations;
    std::vector<TensorVec> nichols_relations; // minimal generators of the Nichols ideal
    GradedQuotient nichols;           // normal forms in B(X) and B(X*)
    int nichols_top = -1;             // words longer than this vanish; -1 if not finite
    int nichols_max_degree = 12;      // degree cutoff for the Nichols computation

    size_t rank() const { return q.size(); }
    int symbol(const std::string& name) const; // throws on unknown names
    std::string mono_str(const NcMono& m) const;
    std::string poly_str(const NcPoly& p) const;

    // Normal ordering into x-words . Cartan . x*-words.
    PbwElem normal_form(const NcPoly& p) const;
    PbwElem multiply(const PbwElem& a, const PbwElem& b) const;
    std::string pbw_str(const PbwElem& e) const;

    PbwTensor coproduct(const NcPoly& p) const;
    PbwElem antipode(int sym) const;
    CycNum counit(const NcPoly& p) const;

    int sym_group(size_t k, int exponent) const { return (int)(2 * k) + (exponent < 0); }
    int sym_prim(size_t k) const { return (int)(2 * cartan.grouplikes.size() + k); }
    int sym_x(size_t i) const { return (int)(2 * cartan.grouplikes.size() + cartan.primitives.size() + i); }
    int sym_xs(size_t i) const { return sym_x(rank() + i); }
    NcMono group_letters(const GroupMono& m) const;

    // Finishes construction from name, cartan, q, g, gbar, has_dual and linking:
    // symbol table, Nichols quotient (computed when d is null) and relation list.
    void build(const NicholsData* d = nullptr);

    struct Cache;
    std::shared_ptr<Cache> cache;
};

struct HopfReport {
    bool ok = true;
    std::vector<std::string> lines; // one per checked item: "<relation>: ok|FAIL"
    std::optional<std::string> witness;
};

// U = B(X) (x) B(X*) (x) C. Realizing group-likes are
// searched in a box when not supplied; missing ones raise InvalidInput naming
// the degree.
HopfPresentation build_uq(const BraidedObject& x, const CartanSpec& cartan, const NicholsConfig& cfg = {16, 5000});
// Same with explicit realizing group-likes (validated).
HopfPresentation build_uq(const BraidedObject& x, const CartanSpec& cartan, const std::vector<GroupMono>& g,
                          const std::vector<GroupMono>& gbar, const NicholsConfig& cfg = {16, 5000});
HopfPresentation build_uq_sl2(int64_t p);   // Gamma = Z_p, K of order p, q = zeta_{2p}
HopfPresentation build_uqh_sl2(int64_t p);  // unrolled: K of infinite order plus H
HopfPresentation build_usp(int64_t p, bool reversed_linking_order = false);
HopfPresentation build_ugl11(const Rational& hbar);
HopfPresentation radford_biproduct(const NicholsData& d, const BraidedObject& x, const CartanSpec& cartan);
HopfPresentation cartan_only(const CartanSpec& cartan);

// Same presentation with the diagonal linking constants replaced.
HopfPresentation with_linking(const HopfPresentation& p, const LinkingData& l);

// Action of the presentation's symbols on a finite-dimensional module.
struct PresentationModule {
    std::string name;
    std::map<std::string, Matrix> action;
    size_t dim() const;
};
Matrix evaluate(const HopfPresentation& p, const NcPoly& poly, const PresentationModule& m);

HopfReport check_relations_on_modules(const HopfPresentation& p, const std::vector<PresentationModule>& family);
HopfReport check_coproduct_symbolic(const HopfPresentation& p);
// Delta(r) acting on M (x) N through the coproduct of the generators.
HopfReport check_coproduct_on_modules(const HopfPresentation& p, const std::vector<PresentationModule>& family);
HopfReport check_relation_consistency(const HopfPresentation& p, const std::vector<PresentationModule>& family);
HopfReport check_antipode(const HopfPresentation& p);
HopfReport check_counit(const HopfPresentation& p);

// Biproduct splitting: projection to C after inclusion of C is the identity on
// the Cartan generators, and the projection kills every x_i.
bool check_biproduct_splitting(const HopfPresentation& p);

// E = x, F = K^-1 x* / (q - q^-1), g = gbar = K: [E, F] = (K - K^-1)/(q - q^-1)
// symbolically in the unrolled presentation, and numerically on weight modules of
// dimension <= 2p. linking_sign = -1 flips the linking constant.
bool check_sl2_substitution(int64_t p, int linking_sign = 1);

struct Gl11Report {
    bool step_product = false;  // XY + YX = K^-1 (q^-1 - q)(x x* + x* x)
    bool step_unscaled = false;  // ... = (K - K^-1)/(q - q^-1) already for Y = x*(q^-1 - q)
    bool step_rescaled = false;  // same identity for Y = x*/(q^-1 - q)
    bool coproduct_x = false;    // Delta(X) = (-1)^F (x) X + X (x) K^-1
    bool coproduct_y = false;    // Delta(Y) = (-1)^F K (x) Y + Y (x) 1
    bool x_squared = false;      // Delta(x)^2 has no x (x) x term
};
Gl11Report check_gl11_change_of_variables(const Rational& hbar);

// Rank-1 presentations: the module spanned by w_k = x^k w_0 over a Cartan
// character (group-like values, primitive values), x* coefficients from the
// linking relation, truncated at the first vanishing coefficient or at the
// Nichols top degree. Names follow the presentation's symbols.
PresentationModule chain_module(const HopfPresentation& p, const std::vector<CycNum>& group_values,
                                const std::vector<Rational>& prim_values, bool truncate_at_zero = true);
// M (x) N with the generators acting through the coproduct.
PresentationModule tensor_modules(const HopfPresentation& p, const PresentationModule& m, const PresentationModule& n);

std::string presentation_to_json(const HopfPresentation& p);
HopfPresentation presentation_from_json(const std::string& s);

} // namespace braidlab
