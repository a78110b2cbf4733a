#pragma once

#include <optional>
#include <string>
#include <vector>

#include "braidlab/graded.hpp"
#include "braidlab/linalg.hpp"

namespace braidlab {

// Yetter-Drinfeld modules over the rank-1 Nichols algebra N = C[x]/x^n of a
// braided line X (x in degree gamma, q = sigma(gamma, gamma) of order n).
// The coaction is m -> sum_j x^j (x) delta[j] m; delta[j] lowers degrees by j gamma.
struct YDModule {
    BraidedObject x;            // rank 1
    std::vector<Degree> degrees; // one per basis vector
    Matrix action;              // x acting, raises degrees by gamma
    std::vector<Matrix> delta;  // delta[0] = id, ..., delta[n-1]
    std::string name;
    size_t dim() const { return degrees.size(); }
};

int64_t nichols_height(const BraidedObject& x); // n; throws when q is not a nontrivial root of unity

// Coaction from its first component D: delta[j] = D^j / [j]_q!.
YDModule make_yd(const BraidedObject& x, std::vector<Degree> degrees, Matrix action, const Matrix& d,
                 std::string name = "");
YDModule trivial_yd(const BraidedObject& x, const Degree& lambda); // epsilon action, unit coaction
YDModule verma_yd(const BraidedObject& x);                          // N, adjoint action, regular coaction
// C_{lambda,l}: x w_k = w_{k+1}; D solved from the linking relation, if the chain admits it.
std::optional<YDModule> chain_yd(const BraidedObject& x, const Degree& lambda, int l);

struct YDReport {
    bool ok = true;
    std::vector<std::string> lines;
    std::optional<std::string> witness;
};

// Module, comodule and degree axioms, then the compatibility condition on
// x^k (x) m for every k and basis vector m.
YDReport yd_check(const YDModule& m);

// c(m (x) n) = sum_j sigma(|m| - j gamma, |n|) x^j n (x) delta[j] m, as a matrix M (x) N -> N (x) M.
Matrix yd_braiding(const YDModule& m, const YDModule& n);
// Inverse built from the antipode of the Nichols algebra, N (x) M -> M (x) N.
Matrix yd_braiding_inverse(const YDModule& m, const YDModule& n);

// For rank 1 at q of order p: on every chain with an induced structure, the YD
// condition and x* x - q x x* = 1 - gbar g (x* acting as the first coaction
// component) both hold; after perturbing the coaction both fail.
YDReport linking_from_yd(int64_t p);

// lambda is local over L iff (lambda, alpha) is an integer for every basis alpha.
bool is_local_over(const Lattice& l, const RatVec& lambda);
// Representative of lambda + L: lattice coordinates reduced into [0, 1), solved on pivot columns.
RatVec induce_over(const Lattice& l, const RatVec& lambda);
// Even sublattice (index 1 or 2); the lattice must be integral.
Lattice even_sublattice(const Lattice& l);

enum class UprollTarget { Local, All };

struct UprollGenerator {
    RatVec degree;                   // original, ambient coordinates
    RatVec induced;                  // representative modulo the even sublattice of R
    std::optional<int64_t> discriminant; // element of Z_n when Lambda*/Lambda is cyclic
    bool local = false;
    CycNum self_braiding_before, self_braiding_after;
};

struct UprollSpec {
    std::string name;
    BraidedObject x;
    Lattice r;
    UprollTarget target = UprollTarget::Local;
    std::string group;               // "Z4", or "Q^3 / R" when R is not of full rank
    std::vector<UprollGenerator> generators;
    bool monodromies_preserved = false;
    bool self_braidings_preserved = false;
};

// Precondition monodromy(gamma_i, alpha) = 1 for all generators and basis
// vectors of R; failure raises CheckFailure naming the pair. The bicharacter
// of X must be the lattice form (sigma(x, y) = exp(pi i (x, y))).
UprollSpec uproll(const BraidedObject& x, const Lattice& r, UprollTarget target = UprollTarget::Local);

// Braid matrix of the induced generators, from the induced representatives.
BraidMatrix induced_braid_matrix(const UprollSpec& s);

UprollSpec uproll_triplet(int64_t p);       // x in degree alpha_- = -1/p over R = sqrt(2p) Z
UprollSpec uproll_sp(int64_t p);            // (eps, gamma) coordinates, x in degree (-1, 1)
UprollSpec uproll_gl11(const Rational& hbar); // (eps, B, A) coordinates, x in degree (-1, 0, -1)
// Same line as the triplet over (alpha_+/4) Z, where the monodromy is -1.
void uproll_rejected_example(int64_t p);

std::string uproll_json(const UprollSpec& s);

} // namespace braidlab
