#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "braidlab/graded.hpp"
#include "braidlab/linalg.hpp"

namespace braidlab {

// A tensor word: letter k stands for the generator x_k.
using Word = std::string;
using Multidegree = std::vector<int>;
// Sparse element of the tensor algebra.
using TensorVec = std::map<Word, CycNum>;

std::string word_str(const Word& w); // "x0x1x1"; "1" for the empty word
Multidegree multidegree_of(const Word& w, size_t rank);
// All words of the given multidegree, in lexicographic order.
std::vector<Word> words_of(const Multidegree& d);

struct NicholsConfig {
    int max_degree = 8;       // total-degree cutoff
    size_t max_words = 5000;  // largest admissible component (rows of S)
};

// Full quantum symmetrizer sum_w T_w on X^{(x)n}, words in lexicographic order,
// each T_w evaluated along the lexicographically least reduced word of w.
Matrix quantum_symmetrizer(const BraidMatrix& q, int n, const NicholsConfig& cfg = {});
// Same operator restricted to one multidegree (a block of the full matrix).
Matrix symmetrizer_block_permutations(const BraidMatrix& q, const Multidegree& d, const NicholsConfig& cfg = {});
// Block computed from S_n = (sum_k c_k ... c_1)(1 (x) S_{n-1}), i.e. column u
// is x_{u_1} inserted into S(u_2 ... u_n) with braiding factors.
Matrix symmetrizer_block_factorized(const BraidMatrix& q, const Multidegree& d, const NicholsConfig& cfg = {});

// Lexicographically least reduced word (letters 1..n-1 for s_i) of a
// permutation given in one-line notation on {0..n-1}.
std::vector<int> lex_least_reduced_word(const std::vector<int>& perm);

// Quantum shuffle products on sparse tensors.
TensorVec shuffle_letter_left(const BraidMatrix& q, int a, const TensorVec& v);
TensorVec shuffle_letter_right(const BraidMatrix& q, const TensorVec& v, int a);
TensorVec shuffle(const BraidMatrix& q, const TensorVec& u, const TensorVec& v);

struct NicholsComponent {
    Multidegree degree;
    std::vector<Word> words;         // row/column order of the block
    size_t dim = 0;
    std::vector<Word> basis;         // pivot words; their images span B_d
    std::vector<TensorVec> images;   // S(b) for b in basis (shuffle picture)
    std::vector<TensorVec> relations; // kernel basis of the block, as word combinations
    Matrix projection;               // words -> basis coordinates (dim x #words)
};

struct NicholsData {
    BraidMatrix q;
    int max_degree = 0;
    std::map<Multidegree, NicholsComponent> components; // only multidegrees that were computed
    std::vector<size_t> hilbert;     // total-degree dimensions 0..max_degree
    bool finite = false;             // gap criterion fired inside the range
    int gap_start = -1;              // first of the three zero degrees

    size_t rank() const { return q.size(); }
    size_t dim(const Multidegree& d) const;
    size_t total() const;            // sum of hilbert (lower bound unless finite)
    const NicholsComponent& component(const Multidegree& d) const;
};

// Dimensions, bases and relations through the given total degree.
NicholsData nichols_dimensions(const BraidMatrix& q, int max_total_degree, const NicholsConfig& cfg = {});

// Second oracle: dims from the span of right shuffle multiplication B_{n-1} (x) X -> Sh_n.
std::map<Multidegree, size_t> shuffle_dimensions(const BraidMatrix& q, int max_total_degree,
                                                 const NicholsConfig& cfg = {});

struct TotalDimension {
    bool finite = false;
    size_t value = 0;     // exact when finite, otherwise a lower bound
    int degrees_scanned = 0;
    std::string str() const; // "27" or ">= 27"
};
TotalDimension total_dimension(const BraidMatrix& q, int bound, const NicholsConfig& cfg = {});

struct CoproductTerm {
    Word left, right;
    CycNum coeff;
};
// Delta(b) for a basis word b of D, component of bidegree (k, n-k), expressed on
// the bases of B_k and B_{n-k}.
std::vector<CoproductTerm> braided_coproduct(const NicholsData& d, const Word& basis_word, int k);

// A graded quotient T(X)/I given by its relation spaces per multidegree, with
// normal forms on a chosen basis of words. Built either from Nichols data or
// from explicit relations (ideal closure computed degreewise).
struct GradedQuotient {
    BraidMatrix q;
    int max_degree = 0;
    std::map<Multidegree, NicholsComponent> components;
    // coordinates of a tensor on the basis words of its multidegree
    std::vector<CycNum> reduce(const Multidegree& d, const TensorVec& v) const;
    bool is_zero_mod(const TensorVec& v) const;
};
GradedQuotient quotient_of(const NicholsData& d);
GradedQuotient quotient_by_relations(const BraidMatrix& q, const std::vector<TensorVec>& relations, int max_degree);

struct BialgebraReport {
    bool ok = true;
    std::optional<std::pair<Word, Word>> witness;
};
// Delta(m(a,b)) = (m (x) m)(id (x) c (x) id)(Delta a (x) Delta b) for basis words
// with deg a + deg b <= max_degree, computed in the quotient.
BialgebraReport check_bialgebra_axiom(const GradedQuotient& a, int max_degree);
BialgebraReport check_bialgebra_axiom(const NicholsData& d, int max_degree);

struct UnrolledReport {
    bool ok = true;
    bool truncated = false; // support may continue past the computed range
    int up_to_degree = 0;
    std::optional<std::array<Multidegree, 3>> witness; // alpha, beta, gamma
};
UnrolledReport is_sufficiently_unrolled(const BraidedObject& x, const NicholsData& d);

// Preset braidings used by the CLI and the acceptance suite.
BraidedObject preset_rank1(int64_t order, int64_t k = 1);           // q_11 = zeta_order^k
BraidedObject preset_cartan_a2(int64_t p);                          // q = zeta_{2p}, q_ii = q^2, q_12 = q_21 = q^-1
BraidedObject preset_parabolic2(int64_t p);                         // [[q^2, q^-1], [q^-1, -1]]
BraidedObject preset_two_fermions();                                // q_ii = -1, q_12 q_21 = 1
BraidedObject preset_rank1_torsion(int64_t m, int64_t a_num, int64_t a_den); // Z_m, exponent a

} // namespace braidlab
