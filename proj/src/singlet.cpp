#include "braidlab/singlet.hpp"

#include <map>
#include <nlohmann/json.hpp>

#include "braidlab/errors.hpp"

namespace braidlab {

using json = nlohmann::json;

namespace {

void check_p(int64_t p)
{
    if (p < 2) throw InvalidInput("p must be >= 2");
}

int64_t parse_int(const std::string& s, const std::string& text)
{
    size_t used = 0;
    int64_t v = 0;
    try {
        v = std::stoll(s, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (s.empty() || used != s.size()) throw InvalidInput("bad label '" + text + "'");
    return v;
}

void add(Multiset& m, const IndecLabel& l, int c, int64_t p)
{
    if (c == 0) return;
    auto k = canonical(l, p);
    if ((m[k] += c) == 0) m.erase(k);
}

void add_all(Multiset& m, const Multiset& n, int c, int64_t p)
{
    for (const auto& [l, k] : n) add(m, l, k * c, p);
}

// P_{r',s',r,s}: projectives P(r+r'-1, l) for 2p+1-s-s' <= l <= p, l+s+s' odd
Multiset p_block(int64_t rp, int64_t sp, int64_t r, int64_t s, int64_t p)
{
    Multiset m;
    for (int64_t l = 2 * p + 1 - s - sp; l <= p; ++l)
        if (l >= 1 && (l + s + sp) % 2 != 0) add(m, projective_label(r + rp - 1, l), 1, p);
    return m;
}

// l from |s-s'|+1 to min(s+s'-1, 2p-1-s-s'), l+s+s' odd
std::vector<int64_t> chain_range(int64_t sp, int64_t s, int64_t p)
{
    std::vector<int64_t> out;
    int64_t hi = std::min(s + sp - 1, 2 * p - 1 - s - sp);
    for (int64_t l = std::abs(s - sp) + 1; l <= hi; ++l)
        if ((l + s + sp) % 2 != 0) out.push_back(l);
    return out;
}

bool is_simple(const IndecLabel& l) { return l.kind == IndecLabel::Simple || l.kind == IndecLabel::Typical; }
bool is_A(const IndecLabel& l) { return l.kind == IndecLabel::Verma && l.r == 1 && l.s == 1; }

bool all_typical(const Multiset& m)
{
    for (const auto& [l, c] : m)
        if (l.kind != IndecLabel::Typical) return false;
    return true;
}

Fusion fuse_m(const IndecLabel& m, const IndecLabel& b, int64_t p)
{
    Fusion f;
    int64_t rp = m.r, sp = m.s;
    switch (b.kind) {
    case IndecLabel::Simple:
        f.terms = p_block(rp, sp, b.r, b.s, p);
        for (int64_t l : chain_range(sp, b.s, p)) add(f.terms, simple_label(b.r + rp - 1, l), 1, p);
        f.rule = "M x M";
        break;
    case IndecLabel::Verma:
        f.terms = p_block(rp, sp, b.r, b.s, p);
        add_all(f.terms, p_block(rp, sp, b.r + 1, p - b.s, p), 1, p);
        for (int64_t l : chain_range(sp, b.s, p)) add(f.terms, verma_label(b.r + rp - 1, l), 1, p);
        f.rule = "M x F";
        break;
    case IndecLabel::DualVerma:
        f.terms = p_block(rp, sp, b.r + 1, p - b.s, p);
        add_all(f.terms, p_block(rp, sp, b.r, b.s, p), 1, p);
        // chain index r + r' - 1 as for F; r + r' would move Fbar:r,s under the unit
        for (int64_t l : chain_range(sp, b.s, p)) add(f.terms, dual_verma_label(b.r + rp - 1, l), 1, p);
        f.rule = "M x Fbar";
        break;
    case IndecLabel::Typical:
        for (int64_t l = 0; l < sp; ++l) add(f.terms, typical_label(b.a + alpha_rs(rp, sp, p) + Rational(l)), 1, p);
        f.rule = "M x F_lambda";
        break;
    case IndecLabel::Projective:
        f.terms = groth_product(groth_class(m, p), groth_class(b, p), p);
        f.level = FusionLevel::K0;
        f.rule = "Grothendieck";
        break;
    }
    return f;
}

Fusion fuse_a(const IndecLabel& b, int64_t p)
{
    Fusion f;
    switch (b.kind) {
    case IndecLabel::Typical:
        for (int64_t l = 0; l < p; ++l) add(f.terms, typical_label(b.a + Rational(l)), 1, p);
        f.rule = "A x F_mu";
        break;
    case IndecLabel::Verma:
        f.terms = p_block(2, p - 1, b.r, b.s, p);
        add_all(f.terms, p_block(2, p - 1, b.r + 1, p - b.s, p), 1, p);
        add(f.terms, verma_label(b.r + 1, p - b.s), 1, p);
        add(f.terms, verma_label(b.r, b.s), 1, p);
        f.rule = "A x F";
        break;
    case IndecLabel::DualVerma:
        f.terms = p_block(2, p - 1, b.r, b.s, p);
        add_all(f.terms, p_block(2, p - 1, b.r + 1, p - b.s, p), 1, p);
        add(f.terms, projective_label(b.r + 1, p - b.s), 1, p);
        f.rule = "A x Fbar";
        break;
    default:
        throw InvalidInput("no A-fusion rule for " + b.str());
    }
    return f;
}

} // namespace

Rational alpha_rs(int64_t r, int64_t s, int64_t p) { return Rational((r - 1) * p + 1 - s, 2); }

SingletLabel parse_label(const std::string& text, int64_t p)
{
    check_p(p);
    if (text == "A") return verma_label(1, 1);
    auto colon = text.find(':');
    if (colon == std::string::npos) throw InvalidInput("bad label '" + text + "' (expected kind:args)");
    std::string kind = text.substr(0, colon), args = text.substr(colon + 1);
    auto comma = args.find(',');
    if (kind == "F" && comma == std::string::npos) {
        Rational c;
        try {
            c = Rational::parse(args);
        } catch (const std::exception&) {
            throw InvalidInput("bad label '" + text + "'");
        }
        return canonical(typical_label(c), p);
    }
    if (comma == std::string::npos) throw InvalidInput("bad label '" + text + "' (expected r,s)");
    int64_t r = parse_int(args.substr(0, comma), text), s = parse_int(args.substr(comma + 1), text);
    if (s < 1 || s > p) throw InvalidInput("label '" + text + "': s must lie in 1.." + std::to_string(p));
    IndecLabel l;
    if (kind == "M")
        l = simple_label(r, s);
    else if (kind == "F")
        l = verma_label(r, s);
    else if (kind == "Fbar")
        l = dual_verma_label(r, s);
    else if (kind == "P")
        l = projective_label(r, s);
    else
        throw InvalidInput("unknown label kind '" + kind + "'");
    return canonical(l, p);
}

Multiset groth_class(const SingletLabel& l0, int64_t p)
{
    auto l = canonical(l0, p);
    Multiset m;
    switch (l.kind) {
    case IndecLabel::Simple:
    case IndecLabel::Typical:
        add(m, l, 1, p);
        break;
    case IndecLabel::Verma:
    case IndecLabel::DualVerma:
        add(m, simple_label(l.r, l.s), 1, p);
        add(m, simple_label(l.r + 1, p - l.s), 1, p);
        break;
    case IndecLabel::Projective:
        add(m, simple_label(l.r, l.s), 2, p);
        add(m, simple_label(l.r - 1, p - l.s), 1, p);
        add(m, simple_label(l.r + 1, p - l.s), 1, p);
        break;
    }
    return m;
}

Multiset groth_class(const Multiset& m, int64_t p)
{
    Multiset out;
    for (const auto& [l, c] : m) add_all(out, groth_class(l, p), c, p);
    return out;
}

namespace {

Multiset simple_product(const IndecLabel& a, const IndecLabel& b, int64_t p)
{
    if (a.kind == IndecLabel::Simple) return groth_class(fuse_m(a, b, p).terms, p);
    if (b.kind == IndecLabel::Simple) return groth_class(fuse_m(b, a, p).terms, p);
    Multiset m;
    for (int64_t l = 0; l < p; ++l) add_all(m, groth_class(typical_label(a.a + b.a + Rational(l)), p), 1, p);
    return m;
}

} // namespace

Multiset groth_product(const Multiset& a, const Multiset& b, int64_t p)
{
    static thread_local std::map<std::tuple<int64_t, IndecLabel, IndecLabel>, Multiset> memo;
    Multiset out;
    for (const auto& [x, cx] : a)
        for (const auto& [y, cy] : b) {
            if (!is_simple(x) || !is_simple(y)) throw InvalidInput("groth_product takes classes of simples");
            auto key = std::make_tuple(p, x, y);
            auto it = memo.find(key);
            if (it == memo.end()) it = memo.emplace(key, simple_product(x, y, p)).first;
            add_all(out, it->second, cx * cy, p);
        }
    return out;
}

Fusion fuse(const SingletLabel& a0, const SingletLabel& b0, int64_t p)
{
    check_p(p);
    auto a = canonical(a0, p), b = canonical(b0, p);
    // the unit against projectives, which the fusion formulas do not cover
    if ((a == simple_label(1, 1) && b.kind == IndecLabel::Projective) ||
        (b == simple_label(1, 1) && a.kind == IndecLabel::Projective)) {
        Fusion f;
        add(f.terms, a.kind == IndecLabel::Projective ? a : b, 1, p);
        f.rule = "unit";
        return f;
    }
    if (a.kind == IndecLabel::Simple) return fuse_m(a, b, p);
    if (b.kind == IndecLabel::Simple) return fuse_m(b, a, p);
    if (is_A(a) && b.kind != IndecLabel::Projective) return fuse_a(b, p);
    if (is_A(b) && a.kind != IndecLabel::Projective) return fuse_a(a, p);
    Fusion f;
    f.terms = groth_product(groth_class(a, p), groth_class(b, p), p);
    // typical blocks are semisimple, so a class supported there is the module
    if (all_typical(f.terms)) {
        f.rule = "typical block";
    } else {
        f.level = FusionLevel::K0;
        f.rule = "Grothendieck";
    }
    return f;
}

std::vector<SingletLabel> label_window(int64_t p, int64_t window)
{
    std::vector<SingletLabel> out;
    for (int64_t r = -window; r <= window; ++r)
        for (int64_t s = 1; s <= p; ++s) {
            out.push_back(simple_label(r, s));
            if (s == p) continue;
            out.push_back(verma_label(r, s));
            out.push_back(dual_verma_label(r, s));
            out.push_back(projective_label(r, s));
        }
    for (auto c : {Rational(1, 3), Rational(1, 6), Rational(-2, 5)}) out.push_back(typical_label(c));
    return out;
}

FusionReport check_ring_laws(int64_t p, int64_t window)
{
    check_p(p);
    FusionReport rep;
    auto fail = [&](const std::string& what) {
        if (rep.ok) rep.witness = what;
        rep.ok = false;
    };
    auto labels = label_window(p, window);
    std::vector<SingletLabel> simples;
    for (const auto& l : labels)
        if (is_simple(l)) simples.push_back(l);

    size_t n = 0;
    for (const auto& x : labels) {
        auto u = fuse(simple_label(1, 1), x, p);
        ++n;
        if (u.level != FusionLevel::Module || u.terms != Multiset{{x, 1}}) fail("unit: M:1,1 x " + x.str());
    }
    rep.lines.push_back("unit: " + std::to_string(n) + " labels " + (rep.ok ? "ok" : "FAIL"));

    bool ok = true;
    n = 0;
    for (size_t i = 0; i < labels.size(); ++i)
        for (size_t j = i; j < labels.size(); ++j) {
            auto f = fuse(labels[i], labels[j], p), g = fuse(labels[j], labels[i], p);
            ++n;
            if (f.terms != g.terms || f.level != g.level) {
                ok = false;
                fail("commutativity: " + labels[i].str() + " x " + labels[j].str());
            }
            auto prod = groth_product(groth_class(labels[i], p), groth_class(labels[j], p), p);
            if (groth_class(f.terms, p) != prod) {
                ok = false;
                fail("exactness: " + labels[i].str() + " x " + labels[j].str());
            }
        }
    rep.lines.push_back("commutativity and exactness: " + std::to_string(n) + " pairs " + (ok ? "ok" : "FAIL"));

    ok = true;
    n = 0;
    for (const auto& x : simples)
        for (const auto& y : simples)
            for (const auto& z : simples) {
                Multiset cx{{x, 1}}, cy{{y, 1}}, cz{{z, 1}};
                ++n;
                if (groth_product(groth_product(cx, cy, p), cz, p) != groth_product(cx, groth_product(cy, cz, p), p)) {
                    ok = false;
                    fail("associativity: " + x.str() + ", " + y.str() + ", " + z.str());
                }
            }
    rep.lines.push_back("associativity: " + std::to_string(n) + " triples " + (ok ? "ok" : "FAIL"));
    rep.checked = labels.size();
    return rep;
}

std::vector<LabelPair> default_cross_sample(int64_t p)
{
    auto M = simple_label;
    auto F = verma_label;
    auto Fb = dual_verma_label;
    auto T = [](int64_t n, int64_t d) { return typical_label(Rational(n, d)); };
    std::vector<LabelPair> s = {
        {M(0, 1), M(0, 1)},       {M(2, 1), M(1, 2)},       {M(1, 2), M(1, 2)},     {M(1, p - 1), M(2, p - 1)},
        {M(0, p), M(1, 1)},       {M(2, 2), M(0, p)},       {M(1, 2), F(1, 1)},     {M(0, 1), F(0, p - 1)},
        {M(1, 2), Fb(1, 1)},      {M(1, 2), T(1, 3)},       {M(2, 1), T(-1, 5)},    {M(0, p), T(1, 3)},
        {F(1, 1), T(1, 3)},       {F(1, 1), T(2, 7)},       {F(1, 1), F(0, 1)},     {F(1, 1), Fb(1, 1)},
        {F(1, 1), F(1, 1)},       {Fb(0, 1), F(1, p - 1)},  {projective_label(1, 1), M(1, 2)},
        {T(1, 3), T(1, 5)},       {T(1, 3), T(1, 6)},
    };
    return s;
}

FusionReport cross_check(int64_t p, const std::vector<LabelPair>& sample)
{
    check_p(p);
    FusionReport rep;
    for (const auto& [a0, b0] : sample) {
        auto a = canonical(a0, p), b = canonical(b0, p);
        std::string head = a.str() + " x " + b.str() + ": ";
        Fusion f = fuse(a, b, p);
        WeightModule t;
        try {
            t = tensor(module_of(a, p), module_of(b, p));
        } catch (const std::exception& e) {
            rep.ok = false;
            rep.lines.push_back(head + "dictionary miss (" + e.what() + ")");
            if (!rep.witness) rep.witness = head + "dictionary miss";
            continue;
        }
        Multiset other;
        std::string level = f.level == FusionLevel::Module ? "module" : "K0";
        try {
            if (f.level == FusionLevel::Module)
                for (const auto& [l, c] : decompose(t)) add(other, l, c, p);
            else
                for (const auto& [l, c] : composition_factors(t)) add(other, l, c, p);
        } catch (const CheckFailure& e) {
            rep.ok = false;
            rep.lines.push_back(head + "decomposition failed (" + e.what() + ")");
            if (!rep.witness) rep.witness = head + "decomposition failed";
            continue;
        }
        ++rep.checked;
        bool match = other == f.terms;
        rep.lines.push_back(head + (match ? "match" : "MISMATCH") + " (" + level + ") " + multiset_str(f.terms) +
                            (match ? "" : " vs " + multiset_str(other)));
        if (!match) {
            if (rep.ok) rep.witness = head + multiset_str(f.terms) + " vs " + multiset_str(other);
            rep.ok = false;
        }
    }
    return rep;
}

std::string fusion_json(const Fusion& f)
{
    json terms = json::array();
    for (const auto& [l, c] : f.terms) terms.push_back(json{{l.str(), c}});
    json j = {{"level", f.level == FusionLevel::Module ? "module" : "K0"}, {"rule", f.rule}, {"result", terms}};
    return j.dump();
}

} // namespace braidlab
