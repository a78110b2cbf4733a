#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "braidlab/cyclotomic.hpp"
#include "braidlab/linalg.hpp"

namespace braidlab {

using RatVec = std::vector<Rational>;
using RatMat = std::vector<RatVec>;

// Element of Z^r (+) Z_{m_1} (+) ... with rational free coordinates.
struct Degree {
    RatVec free_part;
    std::vector<int64_t> torsion_part;

    friend bool operator==(const Degree& a, const Degree& b) = default;
    friend bool operator<(const Degree& a, const Degree& b);
    std::string str() const;
};

struct GradingGroup {
    int free_rank = 0;
    std::vector<int64_t> torsion_orders;

    GradingGroup() = default;
    GradingGroup(int r, std::vector<int64_t> torsion);

    size_t ngens() const { return (size_t)free_rank + torsion_orders.size(); }
    bool is_finite() const { return free_rank == 0; }
    Degree zero() const;
    Degree make(RatVec free_part, std::vector<int64_t> torsion = {}) const; // reduces torsion
    void check(const Degree& d) const; // throws InvalidInput when d is not in this group
    Degree add(const Degree& a, const Degree& b) const;
    Degree neg(const Degree& a) const;
    Degree scale(const Degree& a, int64_t k) const;
    // all elements of a finite group, residues in lexicographic order
    std::vector<Degree> elements() const;
    std::string str() const; // "Z^2 x Z4 x Z2", "Z4", "0"
    friend bool operator==(const GradingGroup& a, const GradingGroup& b) = default;
};

// sigma(e_i, e_j) = exp(pi i a_ij), extended bimultiplicatively. The
// generator order is free generators first, then torsion generators.
class Bicharacter {
public:
    Bicharacter(GradingGroup g, RatMat exponents);

    const GradingGroup& group() const { return group_; }
    const RatMat& exponents() const { return a_; }

    // Rational t with sigma(l, m) = exp(pi i t); t is well defined mod 2.
    Rational exponent(const Degree& l, const Degree& m) const;
    CycNum value(const Degree& l, const Degree& m) const;

private:
    GradingGroup group_;
    RatMat a_;
};

CycNum braiding_value(const Bicharacter& b, const Degree& l, const Degree& m);
CycNum quadratic_form(const Bicharacter& b, const Degree& l);
CycNum monodromy(const Bicharacter& b, const Degree& l, const Degree& m);

using BraidMatrix = std::vector<std::vector<CycNum>>;

struct BraidedObject {
    Bicharacter bichar;
    std::vector<Degree> degrees;

    size_t rank() const { return degrees.size(); }
};

BraidMatrix braid_matrix(const BraidedObject& x);

// Lattice spanned by the rows of `basis` inside Q^r with symmetric form `form`.
struct Lattice {
    RatMat form;
    RatMat basis;

    size_t ambient_dim() const { return form.size(); }
    size_t rank() const { return basis.size(); }
    RatMat gram() const; // (b_i, b_j)
    Rational pair(const RatVec& x, const RatVec& y) const;
};

Lattice make_lattice(RatMat form, RatMat basis); // validates shapes and independence
Lattice dual_lattice(const Lattice& l);
bool is_even(const Lattice& l);
// Throws InvalidInput naming the first basis vector that breaks evenness/integrality.
void require_even(const Lattice& l);
Rational gram_determinant(const Lattice& l);

// Smith normal form U A V = D of an integer matrix, with pivot chosen as the
// entry of smallest absolute value (leftmost column, then topmost row, on ties).
struct SmithForm {
    std::vector<std::vector<int64_t>> U, V, D;
    std::vector<int64_t> diagonal() const;
};
SmithForm smith_normal_form(const std::vector<std::vector<int64_t>>& a);

struct DiscriminantForm {
    GradingGroup group;       // Lambda*/Lambda, torsion only
    RatMat generators;        // dual-lattice representatives (ambient coords), one per cyclic factor
    RatMat pairing;           // (g_i, g_j) as rationals

    // exp(pi i (x, y)) on the representatives sum_i k_i g_i; well defined as a
    // quadratic form, but only a genuine bicharacter when it is bimultiplicative.
    CycNum braiding(const Degree& x, const Degree& y) const;
    CycNum Q(const Degree& x) const;
    CycNum monodromy(const Degree& x, const Degree& y) const;
    RatVec representative(const Degree& x) const;
};

DiscriminantForm discriminant_form(const Lattice& l);

// The lattice sqrt(2p) Z in coordinates where the generator has square 2p.
Lattice triplet_lattice(int64_t p);

} // namespace braidlab
