#include "braidlab/repcat.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "braidlab/errors.hpp"

namespace braidlab {

CycNum q_power(int64_t p, const Rational& h) { return CycNum::exp_pi_i(h / Rational(p)); }

CycNum q_number(int64_t p, const Rational& x)
{
    CycNum q = q_power(p, Rational(1));
    return (q_power(p, x) - q_power(p, -x)) / (q - q.inv());
}

namespace {

void check_p(int64_t p)
{
    if (p < 2) throw InvalidInput("p must be >= 2");
}

void check_s(int64_t s, int64_t p, bool allow_p)
{
    if (s < 1 || s > p || (!allow_p && s == p))
        throw InvalidInput("s = " + std::to_string(s) + " out of range for p = " + std::to_string(p));
}

// h = (s-1) + (r-1)p with 1 <= s <= p
std::pair<int64_t, int64_t> rs_of_highest(int64_t h, int64_t p)
{
    int64_t s = mod64(h, p) + 1;
    int64_t r = (h - (s - 1)) / p + 1;
    return {r, s};
}

// lowest weight (r-1)p - (s-1) with 1 <= s <= p
std::pair<int64_t, int64_t> rs_of_lowest(int64_t m, int64_t p)
{
    int64_t s = mod64(-m, p) + 1;
    int64_t r = (m + s - 1) / p + 1;
    return {r, s};
}

} // namespace

std::string IndecLabel::str() const
{
    std::string rs = std::to_string(r) + "," + std::to_string(s);
    switch (kind) {
    case Simple:
        return "M:" + rs;
    case Verma:
        return "F:" + rs;
    case DualVerma:
        return "Fbar:" + rs;
    case Projective:
        return "P:" + rs;
    case Typical:
        return "F:" + a.str();
    }
    return "?";
}

std::string IndecLabel::block_name(int64_t p) const
{
    if (kind == Typical) return "F_" + a.str();
    if (s == p && kind == Simple) return "M_" + std::to_string(r) + "," + std::to_string(p);
    // the block index s0 is the value of s at even n
    auto even = [](int64_t n) { return mod64(n, 2) == 0; };
    std::string n, name;
    int64_t s0 = 0;
    switch (kind) {
    case Simple:
    case Projective:
    case Verma:
        s0 = even(r) ? s : p - s;
        name = kind == Simple ? "L_" : kind == Projective ? "P_" : "E+_";
        n = std::to_string(r);
        break;
    case DualVerma:
        // E-_n = Fbar(n-1, p-s0) for n even, Fbar(n-1, s0) for n odd
        s0 = even(r + 1) ? p - s : s;
        name = "E-_";
        n = std::to_string(r + 1);
        break;
    default:
        break;
    }
    return name + n + "[s=" + std::to_string(s0) + "]";
}

bool operator<(const IndecLabel& x, const IndecLabel& y)
{
    if (x.kind != y.kind) return x.kind < y.kind;
    if (x.r != y.r) return x.r < y.r;
    if (x.s != y.s) return x.s < y.s;
    return x.a < y.a;
}

bool operator==(const IndecLabel& x, const IndecLabel& y)
{
    return x.kind == y.kind && x.r == y.r && x.s == y.s && x.a == y.a;
}

IndecLabel simple_label(int64_t r, int64_t s) { return IndecLabel{IndecLabel::Simple, r, s, {}}; }
IndecLabel verma_label(int64_t r, int64_t s) { return IndecLabel{IndecLabel::Verma, r, s, {}}; }
IndecLabel dual_verma_label(int64_t r, int64_t s) { return IndecLabel{IndecLabel::DualVerma, r, s, {}}; }
IndecLabel projective_label(int64_t r, int64_t s) { return IndecLabel{IndecLabel::Projective, r, s, {}}; }
IndecLabel typical_label(const Rational& a) { return IndecLabel{IndecLabel::Typical, 0, 0, a}; }

IndecLabel canonical(const IndecLabel& l, int64_t p)
{
    if (l.kind == IndecLabel::Typical) {
        Rational m = l.a * Rational(2);
        if (m.is_integer()) {
            auto [r, s] = rs_of_lowest(m.num(), p);
            return canonical(verma_label(r, s), p);
        }
        return l;
    }
    check_s(l.s, p, true);
    if (l.s == p) return simple_label(l.r, p);
    return l;
}

IndecLabel simple_with_highest_weight(const Rational& h, int64_t p)
{
    if (!h.is_integer()) return typical_label((h - Rational(2 * p - 2)) / Rational(2));
    auto [r, s] = rs_of_highest(h.num(), p);
    return simple_label(r, s);
}

std::string multiset_str(const Multiset& m)
{
    std::string s = "{";
    bool first = true;
    for (const auto& [l, c] : m) {
        s += (first ? "" : ", ") + l.str() + (c == 1 ? "" : " x" + std::to_string(c));
        first = false;
    }
    return s + "}";
}

Matrix WeightModule::K() const
{
    Matrix k(dim(), dim());
    for (size_t i = 0; i < dim(); ++i) k(i, i) = q_power(p, weights[i]);
    return k;
}

Matrix WeightModule::Kinv() const
{
    Matrix k(dim(), dim());
    for (size_t i = 0; i < dim(); ++i) k(i, i) = q_power(p, -weights[i]);
    return k;
}

Matrix WeightModule::H() const
{
    Matrix k(dim(), dim());
    for (size_t i = 0; i < dim(); ++i) k(i, i) = CycNum(weights[i]);
    return k;
}

namespace {

// highest-weight chain of length len: F v_i = v_{i+1}, E v_i = [i][lambda - i + 1] v_{i-1}
WeightModule hw_chain(const Rational& lambda, int64_t len, int64_t p)
{
    WeightModule m;
    m.p = p;
    for (int64_t i = 0; i < len; ++i) m.weights.push_back(lambda - Rational(2 * i));
    m.E = Matrix(len, len);
    m.F = Matrix(len, len);
    for (int64_t i = 0; i < len; ++i) {
        if (i + 1 < len) m.F(i + 1, i) = CycNum(1);
        if (i > 0) m.E(i - 1, i) = q_number(p, Rational(i)) * q_number(p, lambda - Rational(i - 1));
    }
    return m;
}

} // namespace

WeightModule verma_highest(const Rational& lambda, int64_t p)
{
    check_p(p);
    WeightModule m = hw_chain(lambda, p, p);
    m.label = "V(" + lambda.str() + ")";
    return m;
}

WeightModule dual_verma_lowest(const Rational& mu, int64_t p)
{
    check_p(p);
    WeightModule m;
    m.p = p;
    for (int64_t i = 0; i < p; ++i) m.weights.push_back(mu + Rational(2 * i));
    m.E = Matrix(p, p);
    m.F = Matrix(p, p);
    for (int64_t i = 0; i < p; ++i) {
        if (i + 1 < p) m.E(i + 1, i) = CycNum(1);
        if (i > 0) m.F(i - 1, i) = -(q_number(p, Rational(i)) * q_number(p, mu + Rational(i - 1)));
    }
    m.label = "Vbar(" + mu.str() + ")";
    return m;
}

WeightModule simple_module(int64_t r, int64_t s, int64_t p)
{
    check_p(p);
    check_s(s, p, true);
    WeightModule m = hw_chain(Rational((s - 1) + (r - 1) * p), s, p);
    m.label = simple_label(r, s).str();
    return m;
}

WeightModule projective_module(int64_t r, int64_t s, int64_t p)
{
    check_p(p);
    check_s(s, p, true);
    if (s == p) return simple_module(r, s, p);
    const int64_t n = s - 1;
    const Rational lambda((s - 1) + (r - 1) * p);
    const Rational mu = lambda + Rational(2 * p - 2 * n - 2);
    // basis: u_0..u_{p-1} (Verma of highest weight mu), then lifts v_0..v_{p-1}
    WeightModule u = hw_chain(mu, p, p), v = hw_chain(lambda, p, p);
    WeightModule m;
    m.p = p;
    m.weights = u.weights;
    m.weights.insert(m.weights.end(), v.weights.begin(), v.weights.end());
    m.E = direct_sum(u.E, v.E);
    m.F = direct_sum(u.F, v.F);
    // E v_i picks up u_{p-n-2+i} for i <= n+1
    for (int64_t i = 0; i <= n + 1; ++i) m.E(p - n - 2 + i, p + i) = CycNum(1);
    m.label = projective_label(r, s).str();
    return m;
}

WeightModule module_of(const IndecLabel& l0, int64_t p)
{
    check_p(p);
    IndecLabel l = canonical(l0, p);
    WeightModule m;
    switch (l.kind) {
    case IndecLabel::Simple:
        return simple_module(l.r, l.s, p);
    case IndecLabel::Projective:
        return projective_module(l.r, l.s, p);
    case IndecLabel::Verma:
        m = verma_highest(Rational((l.r - 1) * p - (l.s - 1) + 2 * p - 2), p);
        break;
    case IndecLabel::DualVerma:
        m = dual_verma_lowest(Rational((l.r - 1) * p - (l.s - 1)), p);
        break;
    case IndecLabel::Typical:
        m = verma_highest(l.a * Rational(2) + Rational(2 * p - 2), p);
        break;
    }
    m.label = l.str();
    return m;
}

WeightModule trivial_module(int64_t p) { return simple_module(1, 1, p); }

WeightModule direct_sum(const WeightModule& a, const WeightModule& b)
{
    if (a.p != b.p) throw InvalidInput("modules at different p");
    WeightModule m;
    m.p = a.p;
    m.weights = a.weights;
    m.weights.insert(m.weights.end(), b.weights.begin(), b.weights.end());
    m.E = direct_sum(a.E, b.E);
    m.F = direct_sum(a.F, b.F);
    m.label = a.label + " + " + b.label;
    return m;
}

WeightModule tensor(const WeightModule& a, const WeightModule& b)
{
    if (a.p != b.p) throw InvalidInput("modules at different p");
    WeightModule m;
    m.p = a.p;
    for (const auto& x : a.weights)
        for (const auto& y : b.weights) m.weights.push_back(x + y);
    const Matrix ia = Matrix::identity(a.dim()), ib = Matrix::identity(b.dim());
    m.E = kron(a.K(), b.E) + kron(a.E, ib);
    m.F = kron(ia, b.F) + kron(a.F, b.Kinv());
    m.label = "(" + a.label + ") (x) (" + b.label + ")";
    return m;
}

std::string check_module_relations(const WeightModule& m)
{
    const size_t n = m.dim();
    if (m.E.rows() != n || m.E.cols() != n || m.F.rows() != n || m.F.cols() != n) return "matrix sizes";
    Matrix ep = Matrix::identity(n), fp = Matrix::identity(n);
    for (int64_t k = 0; k < m.p; ++k) {
        ep = ep * m.E;
        fp = fp * m.F;
    }
    if (!ep.is_zero()) return "E^p = 0";
    if (!fp.is_zero()) return "F^p = 0";
    const CycNum q2 = q_power(m.p, Rational(2));
    if (m.K() * m.E * m.Kinv() != q2 * m.E) return "K E K^-1 = q^2 E";
    if (m.K() * m.F * m.Kinv() != q2.inv() * m.F) return "K F K^-1 = q^-2 F";
    // weight steps: E raises by 2 exactly
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            if (!m.E(i, j).is_zero() && m.weights[i] != m.weights[j] + Rational(2)) return "E raises weights by 2";
            if (!m.F(i, j).is_zero() && m.weights[i] != m.weights[j] - Rational(2)) return "F lowers weights by 2";
        }
    const CycNum q = q_power(m.p, Rational(1));
    if (m.E * m.F - m.F * m.E != (q - q.inv()).inv() * (m.K() - m.Kinv())) return "[E,F] = (K - K^-1)/(q - q^-1)";
    return "";
}

std::vector<Matrix> hom_space(const WeightModule& m, const WeightModule& n)
{
    if (m.p != n.p) throw InvalidInput("modules at different p");
    // unknowns f(a, b) for a in N, b in M of equal weight
    std::map<std::pair<size_t, size_t>, size_t> var;
    std::vector<std::pair<size_t, size_t>> vars;
    std::map<Rational, std::vector<size_t>> nw;
    for (size_t a = 0; a < n.dim(); ++a) nw[n.weights[a]].push_back(a);
    for (size_t b = 0; b < m.dim(); ++b) {
        auto it = nw.find(m.weights[b]);
        if (it == nw.end()) continue;
        for (size_t a : it->second) {
            var[{a, b}] = vars.size();
            vars.emplace_back(a, b);
        }
    }
    if (vars.empty()) return {};
    // f X_M - X_N f = 0 for X in {E, F}, entrywise (a, b)
    std::vector<std::vector<std::pair<size_t, CycNum>>> rows;
    for (int which = 0; which < 2; ++which) {
        const Matrix& XM = which ? m.F : m.E;
        const Matrix& XN = which ? n.F : n.E;
        std::map<std::pair<size_t, size_t>, std::map<size_t, CycNum>> eq;
        // (f XM)(a, b) = sum_c f(a, c) XM(c, b)
        for (const auto& [ac, idx] : var) {
            auto [a, c] = ac;
            for (size_t b = 0; b < m.dim(); ++b)
                if (!XM(c, b).is_zero()) eq[{a, b}][idx] += XM(c, b);
        }
        // (XN f)(a, b) = sum_c XN(a, c) f(c, b)
        for (const auto& [cb, idx] : var) {
            auto [c, b] = cb;
            for (size_t a = 0; a < n.dim(); ++a)
                if (!XN(a, c).is_zero()) eq[{a, b}][idx] -= XN(a, c);
        }
        for (auto& [k, row] : eq) {
            std::vector<std::pair<size_t, CycNum>> r;
            for (auto& [i, c] : row)
                if (!c.is_zero()) r.emplace_back(i, c);
            if (!r.empty()) rows.push_back(std::move(r));
        }
    }
    Matrix sys(std::max<size_t>(rows.size(), 1), vars.size());
    for (size_t i = 0; i < rows.size(); ++i)
        for (const auto& [j, c] : rows[i]) sys(i, j) = c;
    std::vector<Matrix> out;
    for (const auto& v : kernel(sys)) {
        Matrix f(n.dim(), m.dim());
        for (size_t k = 0; k < vars.size(); ++k) f(vars[k].first, vars[k].second) = v[k];
        out.push_back(std::move(f));
    }
    return out;
}

size_t hom_dim(const WeightModule& m, const WeightModule& n) { return hom_space(m, n).size(); }

namespace {

std::map<Rational, int> character(const WeightModule& m)
{
    std::map<Rational, int> ch;
    for (const auto& w : m.weights) ++ch[w];
    return ch;
}

std::map<Rational, int> character_of_simple(const IndecLabel& l, int64_t p)
{
    return character(module_of(l, p));
}

Multiset factors_of_character(std::map<Rational, int> ch, int64_t p)
{
    Multiset out;
    while (!ch.empty()) {
        Rational top = ch.rbegin()->first;
        IndecLabel l = simple_with_highest_weight(top, p);
        for (const auto& [w, c] : character_of_simple(l, p)) {
            auto it = ch.find(w);
            if (it == ch.end() || it->second < c) throw CheckFailure("character is not a sum of simple characters");
            it->second -= c;
            if (it->second == 0) ch.erase(it);
        }
        ++out[l];
    }
    return out;
}

std::vector<IndecLabel> simple_candidates(const WeightModule& m)
{
    std::set<IndecLabel> s;
    for (const auto& w : m.weights) s.insert(simple_with_highest_weight(w, m.p));
    return {s.begin(), s.end()};
}

std::vector<std::vector<CycNum>> columns(const Matrix& f)
{
    std::vector<std::vector<CycNum>> out;
    for (size_t j = 0; j < f.cols(); ++j) out.push_back(f.column(j));
    return out;
}

// Basis (fully reduced) of the span of homogeneous vectors.
SpanBuilder span_of(size_t dim, const std::vector<std::vector<CycNum>>& vs)
{
    SpanBuilder sb(dim);
    for (const auto& v : vs) sb.insert(v);
    return sb;
}

std::vector<std::vector<CycNum>> socle_vectors(const WeightModule& m)
{
    std::vector<std::vector<CycNum>> vs;
    for (const auto& l : simple_candidates(m)) {
        WeightModule L = module_of(l, m.p);
        for (const auto& f : hom_space(L, m))
            for (auto& c : columns(f)) vs.push_back(std::move(c));
    }
    SpanBuilder sb = span_of(m.dim(), vs);
    return sb.basis();
}

} // namespace

Multiset composition_factors(const WeightModule& m) { return factors_of_character(character(m), m.p); }

WeightModule submodule(const WeightModule& m, const std::vector<std::vector<CycNum>>& sub)
{
    SpanBuilder sb = span_of(m.dim(), sub);
    const auto& basis = sb.basis();
    const auto& piv = sb.pivots();
    const size_t k = basis.size();
    WeightModule s;
    s.p = m.p;
    for (size_t i = 0; i < k; ++i) s.weights.push_back(m.weights[piv[i]]);
    s.E = Matrix(k, k);
    s.F = Matrix(k, k);
    for (size_t j = 0; j < k; ++j) {
        auto e = mat_vec(m.E, basis[j]), f = mat_vec(m.F, basis[j]);
        if (!sb.contains(e) || !sb.contains(f)) throw CheckFailure("subspace is not a submodule");
        for (size_t i = 0; i < k; ++i) {
            s.E(i, j) = e[piv[i]];
            s.F(i, j) = f[piv[i]];
        }
    }
    s.label = "sub(" + m.label + ")";
    return s;
}

WeightModule quotient(const WeightModule& m, const std::vector<std::vector<CycNum>>& sub)
{
    SpanBuilder sb = span_of(m.dim(), sub);
    std::vector<bool> is_piv(m.dim(), false);
    for (size_t pv : sb.pivots()) is_piv[pv] = true;
    std::vector<size_t> keep;
    for (size_t i = 0; i < m.dim(); ++i)
        if (!is_piv[i]) keep.push_back(i);
    const size_t k = keep.size();
    WeightModule q;
    q.p = m.p;
    for (size_t i : keep) q.weights.push_back(m.weights[i]);
    q.E = Matrix(k, k);
    q.F = Matrix(k, k);
    for (size_t j = 0; j < k; ++j) {
        std::vector<CycNum> e(m.dim());
        for (int which = 0; which < 2; ++which) {
            const Matrix& X = which ? m.F : m.E;
            std::vector<CycNum> v(m.dim());
            for (size_t i = 0; i < m.dim(); ++i) v[i] = X(i, keep[j]);
            sb.reduce(v);
            for (size_t i = 0; i < k; ++i) (which ? q.F : q.E)(i, j) = v[keep[i]];
        }
    }
    q.label = "quot(" + m.label + ")";
    return q;
}

std::vector<Multiset> socle_filtration(const WeightModule& m0)
{
    std::vector<Multiset> layers;
    WeightModule m = m0;
    while (m.dim() > 0) {
        auto soc = socle_vectors(m);
        if (soc.empty()) throw CheckFailure("nonzero module with zero socle");
        layers.push_back(composition_factors(submodule(m, soc)));
        m = quotient(m, soc);
    }
    return layers;
}

namespace {

// Homogeneous spanning vectors of the intersection of kernels of all maps to simples.
std::vector<std::vector<CycNum>> radical_vectors(const WeightModule& m)
{
    std::vector<std::vector<CycNum>> rows;
    for (const auto& l : simple_candidates(m)) {
        WeightModule L = module_of(l, m.p);
        for (const auto& f : hom_space(m, L))
            for (size_t i = 0; i < f.rows(); ++i) rows.push_back(f.row(i));
    }
    Matrix stack(std::max<size_t>(rows.size(), 1), m.dim());
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < m.dim(); ++j) stack(i, j) = rows[i][j];
    std::vector<std::vector<CycNum>> homog;
    for (const auto& v : kernel(stack)) {
        std::map<Rational, std::vector<CycNum>> parts;
        for (size_t i = 0; i < v.size(); ++i)
            if (!v[i].is_zero()) {
                auto& part = parts[m.weights[i]];
                if (part.empty()) part.assign(v.size(), CycNum());
                part[i] = v[i];
            }
        for (auto& [w, part] : parts) homog.push_back(std::move(part));
    }
    return homog;
}

} // namespace

WeightModule radical(const WeightModule& m) { return submodule(m, radical_vectors(m)); }

size_t ext1_dim(const IndecLabel& l0, const IndecLabel& lp0, int64_t p)
{
    IndecLabel l = canonical(l0, p), lp = canonical(lp0, p);
    if ((l.kind != IndecLabel::Simple && l.kind != IndecLabel::Typical) ||
        (lp.kind != IndecLabel::Simple && lp.kind != IndecLabel::Typical))
        throw InvalidInput("ext1_dim takes simple labels");
    // typicals and M(r,p) are projective
    if (l.kind == IndecLabel::Typical || l.s == p) return 0;
    WeightModule r1 = radical(projective_module(l.r, l.s, p));
    WeightModule top2 = quotient(r1, radical_vectors(r1));
    return hom_dim(top2, module_of(lp, p));
}

namespace {

std::vector<IndecLabel> indecomposable_candidates(const WeightModule& m)
{
    const int64_t p = m.p;
    std::set<IndecLabel> s;
    for (const auto& w : m.weights) {
        if (!w.is_integer()) {
            s.insert(canonical(typical_label((w - Rational(2 * p - 2)) / Rational(2)), p));
            continue;
        }
        int64_t h = w.num();
        auto [r, sx] = rs_of_highest(h, p);
        s.insert(simple_label(r, sx));
        if (sx != p) s.insert(projective_label(r, sx));
        // Verma with highest weight h and dual Verma with lowest weight h
        auto [vr, vs] = rs_of_lowest(h - 2 * p + 2, p);
        s.insert(canonical(verma_label(vr, vs), p));
        auto [dr, ds] = rs_of_lowest(h, p);
        s.insert(canonical(dual_verma_label(dr, ds), p));
    }
    std::vector<IndecLabel> out(s.begin(), s.end());
    std::stable_sort(out.begin(), out.end(), [&](const IndecLabel& a, const IndecLabel& b) {
        return module_of(a, p).dim() > module_of(b, p).dim();
    });
    return out;
}

CycNum trace(const Matrix& a)
{
    CycNum t;
    for (size_t i = 0; i < a.rows(); ++i) t += a(i, i);
    return t;
}

} // namespace

Multiset decompose(const WeightModule& m)
{
    Multiset out;
    size_t covered = 0;
    std::map<Rational, int> ch = character(m);
    for (const auto& l : indecomposable_candidates(m)) {
        WeightModule X = module_of(l, m.p);
        auto into = hom_space(X, m);
        if (into.empty()) continue;
        auto from = hom_space(m, X);
        if (from.empty()) continue;
        Matrix B(from.size(), into.size());
        for (size_t i = 0; i < from.size(); ++i)
            for (size_t j = 0; j < into.size(); ++j) B(i, j) = trace(from[i] * into[j]);
        size_t mult = rank(B);
        if (mult == 0) continue;
        out[l] += (int)mult;
        covered += mult * X.dim();
        for (const auto& w : X.weights) ch[w] -= (int)mult;
    }
    if (covered != m.dim()) {
        std::map<Rational, int> rest;
        for (const auto& [w, c] : ch)
            if (c != 0) rest[w] = c;
        std::string why = "decomposition stalled: found " + multiset_str(out) + ", unexplained composition factors ";
        try {
            why += multiset_str(factors_of_character(rest, m.p));
        } catch (const CheckFailure&) {
            why += "(not a character)";
        }
        throw CheckFailure(why);
    }
    return out;
}

PresentationModule to_presentation_module(const WeightModule& m)
{
    PresentationModule pm;
    pm.name = m.label.empty() ? "module" : m.label;
    const CycNum q = q_power(m.p, Rational(1));
    pm.action["K"] = m.K();
    pm.action["K^-1"] = m.Kinv();
    pm.action["H"] = m.H();
    pm.action["x"] = m.E;
    pm.action["x*"] = (q - q.inv()) * (m.K() * m.F);
    return pm;
}

std::vector<WeightModule> sl2_test_family(int64_t p, bool even_weights_only)
{
    check_p(p);
    std::vector<WeightModule> all;
    for (int64_t r = -1; r <= 2; ++r)
        for (int64_t s = 1; s <= p; ++s) {
            all.push_back(module_of(simple_label(r, s), p));
            all.push_back(module_of(verma_label(r, s), p));
            if (s != p) {
                all.push_back(module_of(dual_verma_label(r, s), p));
                all.push_back(module_of(projective_label(r, s), p));
            }
        }
    for (const auto& a : {Rational(1, 3), Rational(-3, 4), Rational(5, 7)}) all.push_back(module_of(typical_label(a), p));
    if (!even_weights_only) return all;
    std::vector<WeightModule> out;
    for (auto& m : all) {
        bool ok = true;
        for (const auto& w : m.weights) ok = ok && w.is_integer() && mod64(w.num(), 2) == 0;
        if (ok) out.push_back(std::move(m));
    }
    return out;
}

std::vector<PresentationModule> sl2_presentation_family(int64_t p, bool even_weights_only)
{
    std::vector<PresentationModule> out;
    for (const auto& m : sl2_test_family(p, even_weights_only)) {
        auto pm = to_presentation_module(m);
        if (even_weights_only) pm.action.erase("H");
        out.push_back(std::move(pm));
    }
    return out;
}

BorelModule borel_chain(const Rational& lambda, int l, int64_t p)
{
    check_p(p);
    if (l < 1 || l > p) throw InvalidInput("chain length must be in 1..p");
    BorelModule m;
    m.p = p;
    for (int k = 0; k < l; ++k) m.degrees.push_back(lambda + Rational(k));
    m.x = Matrix(l, l);
    for (int k = 0; k + 1 < l; ++k) m.x(k + 1, k) = CycNum(1);
    return m;
}

BorelModule tensor(const BorelModule& a, const BorelModule& b)
{
    if (a.p != b.p) throw InvalidInput("modules at different p");
    BorelModule m;
    m.p = a.p;
    for (const auto& x : a.degrees)
        for (const auto& y : b.degrees) m.degrees.push_back(x + y);
    // sigma(1, d) = q^{2d}
    Matrix g(a.dim(), a.dim());
    for (size_t i = 0; i < a.dim(); ++i) g(i, i) = q_power(a.p, Rational(2) * a.degrees[i]);
    m.x = kron(g, b.x) + kron(a.x, Matrix::identity(b.dim()));
    return m;
}

namespace {

// rank of x^k restricted to degree d (source) inside m
size_t rank_power_on(const BorelModule& m, const Rational& d, int k)
{
    std::vector<size_t> src;
    for (size_t i = 0; i < m.dim(); ++i)
        if (m.degrees[i] == d) src.push_back(i);
    if (src.empty()) return 0;
    Matrix xk = Matrix::identity(m.dim());
    for (int t = 0; t < k; ++t) xk = xk * m.x;
    Matrix sub(m.dim(), src.size());
    for (size_t j = 0; j < src.size(); ++j)
        for (size_t i = 0; i < m.dim(); ++i) sub(i, j) = xk(i, src[j]);
    return rank(sub);
}

} // namespace

std::map<std::pair<Rational, int>, int> decompose(const BorelModule& m)
{
    std::map<std::pair<Rational, int>, int> out;
    std::set<Rational> degs(m.degrees.begin(), m.degrees.end());
    auto at_least = [&](const Rational& d, int k) {
        // chains with bottom in degree d and length >= k
        return (int)rank_power_on(m, d, k - 1) - (int)rank_power_on(m, d - Rational(1), k);
    };
    for (const auto& d : degs)
        for (int k = 1; k <= (int)m.dim(); ++k) {
            int n = at_least(d, k) - at_least(d, k + 1);
            if (n > 0) out[{d, k}] = n;
        }
    return out;
}

bool is_projective(const BorelModule& m)
{
    for (const auto& [k, c] : decompose(m))
        if (k.second != m.p) return false;
    return true;
}

bool is_simple(const BorelModule& m) { return m.dim() == 1; }

} // namespace braidlab
