#pragma once

#include <map>
#include <string>
#include <vector>

#include "braidlab/hopf.hpp"
#include "braidlab/linalg.hpp"

namespace braidlab {

// Conventions: q = exp(pi i / p); weights are H-eigenvalues h (rationals in
// alpha_-/2 units), K = q^h, E raises h by 2, F lowers it by 2,
// [E, F] = (K - K^-1)/(q - q^-1), E^p = F^p = 0.
CycNum q_power(int64_t p, const Rational& h); // q^h
CycNum q_number(int64_t p, const Rational& x); // [x] = (q^x - q^-x)/(q - q^-1)

// Indecomposables named by their singlet-side labels:
//   Simple M(r,s)      highest weight (s-1) + (r-1)p, dimension s
//   Verma F(r,s)       lowest weight (r-1)p - (s-1), head M(r+1,p-s), socle M(r,s)
//   DualVerma Fbar(r,s) same weights as F(r,s), head and socle exchanged
//   Projective P(r,s)  s != p, Loewy layers M(r,s) | M(r-1,p-s) + M(r+1,p-s) | M(r,s)
//   Typical F(a)       lowest weight 2a with 2a not an integer, simple and projective
struct IndecLabel {
    enum Kind { Simple, Verma, DualVerma, Projective, Typical };
    Kind kind = Simple;
    int64_t r = 1, s = 1;
    Rational a; // Typical only
    std::string str() const; // "M:r,s", "F:r,s", "Fbar:r,s", "P:r,s", "F:a"
    // Name inside the atypical block s0 in {1..p-1}: "L_n", "E+_n", "E-_n", "P_n";
    // typicals and the simple projectives M(r,p) are their own blocks.
    std::string block_name(int64_t p) const;
    friend bool operator<(const IndecLabel& x, const IndecLabel& y);
    friend bool operator==(const IndecLabel& x, const IndecLabel& y);
};
// Canonical form: F(r,p) and P(r,p) are M(r,p); Fbar(r,p) likewise.
IndecLabel canonical(const IndecLabel& l, int64_t p);
IndecLabel simple_label(int64_t r, int64_t s);
IndecLabel verma_label(int64_t r, int64_t s);
IndecLabel dual_verma_label(int64_t r, int64_t s);
IndecLabel projective_label(int64_t r, int64_t s);
IndecLabel typical_label(const Rational& a);
// The simple module with the given highest weight.
IndecLabel simple_with_highest_weight(const Rational& h, int64_t p);

using Multiset = std::map<IndecLabel, int>;
std::string multiset_str(const Multiset& m);

struct WeightModule {
    int64_t p = 2;
    std::vector<Rational> weights;
    Matrix E, F;
    std::string label;
    size_t dim() const { return weights.size(); }
    Matrix K() const;
    Matrix Kinv() const;
    Matrix H() const;
};

WeightModule verma_highest(const Rational& lambda, int64_t p);   // basis v_i of weight lambda - 2i
WeightModule dual_verma_lowest(const Rational& mu, int64_t p);   // basis w_i of weight mu + 2i
WeightModule simple_module(int64_t r, int64_t s, int64_t p);
WeightModule projective_module(int64_t r, int64_t s, int64_t p); // s != p
WeightModule module_of(const IndecLabel& l, int64_t p);
WeightModule trivial_module(int64_t p);
WeightModule direct_sum(const WeightModule& a, const WeightModule& b);
// Delta(E) = K (x) E + E (x) 1, Delta(F) = 1 (x) F + F (x) K^-1, weights add.
WeightModule tensor(const WeightModule& a, const WeightModule& b);

// E^p = F^p = 0, K E K^-1 = q^2 E, K F K^-1 = q^-2 F, [E,F] = (K - K^-1)/(q - q^-1).
// Returns an empty string when all hold, otherwise the first failing relation.
std::string check_module_relations(const WeightModule& m);

std::vector<Matrix> hom_space(const WeightModule& m, const WeightModule& n); // dim N x dim M matrices
size_t hom_dim(const WeightModule& m, const WeightModule& n);

Multiset composition_factors(const WeightModule& m);
std::vector<Multiset> socle_filtration(const WeightModule& m);
WeightModule radical(const WeightModule& m);
WeightModule quotient(const WeightModule& m, const std::vector<std::vector<CycNum>>& sub);
WeightModule submodule(const WeightModule& m, const std::vector<std::vector<CycNum>>& sub);
size_t ext1_dim(const IndecLabel& l, const IndecLabel& lp, int64_t p); // both simple

// Krull-Schmidt multiplicities by the rank of the trace pairing
// Hom(X, M) x Hom(M, X) -> End(X)/rad = C over candidate indecomposables X.
// Throws CheckFailure listing the unexplained composition factors if the
// found summands do not exhaust M.
Multiset decompose(const WeightModule& m);

// x = E, x* = K F (q - q^-1), K, K^-1, H: a module of the presentation built
// by build_uqh_sl2 / build_uq_sl2.
PresentationModule to_presentation_module(const WeightModule& m);
// Simples, Vermas, dual Vermas, projectives and a few typicals around weight 0;
// with even_weights_only the members on which K^p = 1.
std::vector<WeightModule> sl2_test_family(int64_t p, bool even_weights_only);
std::vector<PresentationModule> sl2_presentation_family(int64_t p, bool even_weights_only);

// Modules over the Borel part B(X) # C for X of degree 1 with sigma(1,1) = q^2:
// a graded space (degrees in units of the generator degree) with x raising by 1.
struct BorelModule {
    int64_t p = 2;
    std::vector<Rational> degrees;
    Matrix x;
    size_t dim() const { return degrees.size(); }
};
BorelModule borel_chain(const Rational& lambda, int l, int64_t p); // C_{lambda,l}
// x (m (x) n) = x m (x) n + sigma(1, |m|) m (x) x n
BorelModule tensor(const BorelModule& a, const BorelModule& b);
// chains C_{lambda,l} with multiplicities, keyed (lambda, l)
std::map<std::pair<Rational, int>, int> decompose(const BorelModule& m);
bool is_projective(const BorelModule& m); // every chain has length p
bool is_simple(const BorelModule& m);

} // namespace braidlab
