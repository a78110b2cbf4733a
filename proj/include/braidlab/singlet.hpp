#pragma once

#include <optional>
#include <string>
#include <vector>

#include "braidlab/repcat.hpp"

namespace braidlab {

// Singlet labels share the representation-side label type: M:r,s, F:r,s,
// Fbar:r,s, P:r,s and F:c with c rational in alpha_- units. The dictionary to
// quantum group modules is module_of.
using SingletLabel = IndecLabel;

// Parses "M:r,s", "F:c", "F:r,s", "Fbar:r,s", "P:r,s" (also "A" for F:1,1) and
// canonicalizes: F:c on the atypical grid becomes F:r,s, and every label with
// s = p becomes M:r,p.
SingletLabel parse_label(const std::string& text, int64_t p);

// alpha_{r,s} = ((r-1)p + 1 - s)/2 in alpha_- units
Rational alpha_rs(int64_t r, int64_t s, int64_t p);

enum class FusionLevel { Module, K0 };

struct Fusion {
    Multiset terms;       // indecomposables, or simple classes when level is K0
    FusionLevel level = FusionLevel::Module;
    std::string rule;     // which formula produced it
};

// Module level: M x M, M x F:r,s, M x Fbar, M x typical, A x F_mu, A x F:r,s,
// A x Fbar, and anything times a typical whose product stays in typical blocks.
// Everything else is a Grothendieck class.
Fusion fuse(const SingletLabel& a, const SingletLabel& b, int64_t p);

// Class in the Grothendieck group, over simple labels.
Multiset groth_class(const SingletLabel& l, int64_t p);
Multiset groth_class(const Multiset& m, int64_t p);
// Bilinear product of classes from the simple-by-simple products.
Multiset groth_product(const Multiset& a, const Multiset& b, int64_t p);

struct FusionReport {
    bool ok = true;
    size_t checked = 0;
    std::vector<std::string> lines;
    std::optional<std::string> witness;
};

// Labels M, F, Fbar, P with |r| <= window plus a few typicals.
std::vector<SingletLabel> label_window(int64_t p, int64_t window);

// Commutativity and unit of fuse, Grothendieck-level associativity over simples,
// and exactness: groth(fuse(a, b)) = groth(a) * groth(b).
FusionReport check_ring_laws(int64_t p, int64_t window);

using LabelPair = std::pair<SingletLabel, SingletLabel>;
std::vector<LabelPair> default_cross_sample(int64_t p);
// fuse against the decomposition of the tensor product of the dictionary images.
FusionReport cross_check(int64_t p, const std::vector<LabelPair>& sample);

std::string fusion_json(const Fusion& f);

} // namespace braidlab
