#include "braidlab/yd.hpp"

#include <nlohmann/json.hpp>

#include "braidlab/cyclotomic.hpp"
#include "braidlab/errors.hpp"
#include "braidlab/nichols.hpp"

namespace braidlab {

using json = nlohmann::json;

namespace {

Degree gen_degree(const BraidedObject& x)
{
    if (x.rank() != 1) throw InvalidInput("Yetter-Drinfeld modules are implemented over rank-1 Nichols algebras");
    return x.degrees[0];
}

CycNum self_braiding(const BraidedObject& x) { return x.bichar.value(x.degrees[0], x.degrees[0]); }

Degree shift(const BraidedObject& x, const Degree& d, int64_t k)
{
    const auto& g = x.bichar.group();
    return g.add(d, g.scale(gen_degree(x), k));
}

Matrix mat_pow(const Matrix& a, int64_t k)
{
    Matrix r = Matrix::identity(a.rows());
    for (int64_t i = 0; i < k; ++i) r = r * a;
    return r;
}

std::vector<CycNum> col(const Matrix& a, size_t j) { return a.column(j); }

std::string vec_str(const RatVec& v)
{
    std::string s = "(";
    for (size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].str();
    return s + ")";
}

bool degree_compatible(const YDModule& m, const Matrix& a, int64_t shift_by)
{
    for (size_t i = 0; i < m.dim(); ++i)
        for (size_t j = 0; j < m.dim(); ++j)
            if (!a(i, j).is_zero() && !(m.degrees[i] == shift(m.x, m.degrees[j], shift_by))) return false;
    return true;
}

} // namespace

int64_t nichols_height(const BraidedObject& x)
{
    gen_degree(x);
    CycNum q = self_braiding(x);
    if (q.is_one()) throw InvalidInput("q = 1: the Nichols algebra is infinite-dimensional");
    int64_t bound = 2 * q.order() + 2;
    CycNum pw = q;
    for (int64_t n = 1; n <= bound; ++n) {
        if (pw.is_one()) return n;
        pw = pw * q;
    }
    throw InvalidInput("self-braiding " + q.str() + " is not a root of unity");
}

YDModule make_yd(const BraidedObject& x, std::vector<Degree> degrees, Matrix action, const Matrix& d, std::string name)
{
    int64_t n = nichols_height(x);
    CycNum q = self_braiding(x);
    YDModule m{x, std::move(degrees), std::move(action), {}, std::move(name)};
    if (m.action.rows() != m.dim() || m.action.cols() != m.dim() || d.rows() != m.dim() || d.cols() != m.dim())
        throw InvalidInput("action and coaction must be square of the module dimension");
    Matrix dj = Matrix::identity(m.dim());
    for (int64_t j = 0; j < n; ++j) {
        m.delta.push_back(q_factorial(j, q).inv() * dj);
        dj = d * dj;
    }
    return m;
}

YDModule trivial_yd(const BraidedObject& x, const Degree& lambda)
{
    return make_yd(x, {lambda}, Matrix(1, 1), Matrix(1, 1), "C_" + lambda.str());
}

YDModule verma_yd(const BraidedObject& x)
{
    int64_t n = nichols_height(x);
    CycNum q = self_braiding(x);
    std::vector<Degree> deg;
    Matrix act(n, n), d(n, n);
    for (int64_t k = 0; k < n; ++k) {
        deg.push_back(shift(x, x.bichar.group().zero(), k));
        // ad(x) x^k = x x^k - sigma(gamma, k gamma) x^k x, and Delta(x^k) = sum [k, j] x^j (x) x^{k-j}
        if (k + 1 < n) act(k + 1, k) = CycNum(1) - q.pow(k);
        if (k > 0) d(k - 1, k) = q_factorial(k, q) / q_factorial(k - 1, q);
    }
    return make_yd(x, deg, act, d, "V_0");
}

std::optional<YDModule> chain_yd(const BraidedObject& x, const Degree& lambda, int l)
{
    int64_t n = nichols_height(x);
    if (l < 1 || l > n) throw InvalidInput("chain length must lie in 1.." + std::to_string(n));
    CycNum q = self_braiding(x);
    Degree g = gen_degree(x);
    std::vector<Degree> deg;
    Matrix act(l, l), d(l, l);
    CycNum c; // D w_k = c_k w_{k-1}, c_0 = 0
    for (int k = 0; k < l; ++k) {
        deg.push_back(shift(x, lambda, k));
        if (k > 0) d(k - 1, k) = c;
        if (k + 1 < l) act(k + 1, k) = CycNum(1);
        c = q * c + CycNum(1) - monodromy(x.bichar, deg.back(), g);
    }
    if (!c.is_zero()) return std::nullopt; // x w_{l-1} = 0 forces c_l = 0
    return make_yd(x, deg, act, d, "C_{" + lambda.str() + "," + std::to_string(l) + "}");
}

YDReport yd_check(const YDModule& m)
{
    YDReport rep;
    auto fail = [&](const std::string& w) {
        rep.ok = false;
        rep.lines.push_back(w + ": FAIL");
        if (!rep.witness) rep.witness = w;
    };
    int64_t n = nichols_height(m.x);
    CycNum q = self_braiding(m.x);
    Degree gamma = gen_degree(m.x);
    const auto& sig = m.x.bichar;
    size_t dim = m.dim();

    if ((int64_t)m.delta.size() != n) throw InvalidInput("coaction needs " + std::to_string(n) + " components");
    if (!degree_compatible(m, m.action, 1)) fail("action is not homogeneous of degree gamma");
    if (!mat_pow(m.action, n).is_zero()) fail("x^" + std::to_string(n) + " does not act by zero");
    if (m.delta[0] != Matrix::identity(dim)) fail("counit: delta[0] is not the identity");
    for (int64_t j = 0; j < n; ++j)
        if (!degree_compatible(m, m.delta[j], -j)) fail("delta[" + std::to_string(j) + "] is not homogeneous");
    for (int64_t a = 0; a < n; ++a)
        for (int64_t b = 0; b < n; ++b) {
            Matrix want = a + b < n ? gauss_binomial(a + b, a, q) * m.delta[a + b] : Matrix(dim, dim);
            if (m.delta[b] * m.delta[a] != want)
                fail("coassociativity at (" + std::to_string(a) + ", " + std::to_string(b) + ")");
        }
    if (!rep.ok) return rep;

    std::vector<Matrix> xp;
    for (int64_t k = 0; k <= n; ++k) xp.push_back(mat_pow(m.action, k));
    size_t checked = 0;
    for (int64_t a = 0; a < n && rep.ok; ++a)
        for (size_t i = 0; i < dim && rep.ok; ++i) {
            const Degree& lam = m.degrees[i];
            for (int64_t t = 0; t < n && rep.ok; ++t) {
                std::vector<CycNum> lhs(dim), rhs(dim);
                // (mult (x) act)(id (x) c (x) id)(Delta x^a (x) delta m)
                for (int64_t k = 0; k <= a; ++k) {
                    int64_t j = t - k;
                    if (j < 0 || j >= n) continue;
                    CycNum s = gauss_binomial(a, k, q) * q.pow((a - k) * j);
                    auto v = col(xp[a - k] * m.delta[j], i);
                    for (size_t r = 0; r < dim; ++r) lhs[r] += s * v[r];
                }
                // (mult (x) id)(id (x) c)(delta (x) id)(act (x) id)(id (x) c)(Delta x^a (x) m)
                for (int64_t k = 0; k <= a; ++k) {
                    int64_t j = t - (a - k);
                    if (j < 0 || j >= n) continue;
                    Degree rest = sig.group().scale(gamma, a - k);
                    CycNum s = gauss_binomial(a, k, q) * sig.value(rest, lam) *
                               sig.value(shift(m.x, lam, k - j), rest);
                    auto v = col(m.delta[j] * xp[k], i);
                    for (size_t r = 0; r < dim; ++r) rhs[r] += s * v[r];
                }
                ++checked;
                if (lhs != rhs)
                    fail("compatibility on x^" + std::to_string(a) + " (x) m_" + std::to_string(i) + " at x^" +
                         std::to_string(t));
            }
        }
    if (rep.ok) rep.lines.push_back("compatibility: " + std::to_string(checked) + " components ok");
    return rep;
}

Matrix yd_braiding(const YDModule& m, const YDModule& n)
{
    int64_t h = nichols_height(m.x);
    const auto& sig = m.x.bichar;
    size_t dm = m.dim(), dn = n.dim();
    Matrix c(dn * dm, dm * dn);
    for (int64_t j = 0; j < h; ++j) {
        Matrix xn = mat_pow(n.action, j);
        for (size_t i = 0; i < dm; ++i)
            for (size_t k = 0; k < dn; ++k)
                for (size_t a = 0; a < dn; ++a) {
                    if (xn(a, k).is_zero()) continue;
                    for (size_t b = 0; b < dm; ++b) {
                        if (m.delta[j](b, i).is_zero()) continue;
                        c(a * dm + b, i * dn + k) += sig.value(m.degrees[b], n.degrees[k]) * xn(a, k) * m.delta[j](b, i);
                    }
                }
    }
    return c;
}

Matrix yd_braiding_inverse(const YDModule& m, const YDModule& n)
{
    int64_t h = nichols_height(m.x);
    const auto& sig = m.x.bichar;
    CycNum q = self_braiding(m.x);
    Degree gamma = gen_degree(m.x);
    size_t dm = m.dim(), dn = n.dim();
    Matrix c(dm * dn, dn * dm);
    for (int64_t j = 0; j < h; ++j) {
        Matrix xn = mat_pow(n.action, j);
        // S(x^j) = (-1)^j q^{j(j-1)/2} x^j
        CycNum s_inv = (j % 2 ? CycNum(-1) : CycNum(1)) * q.pow(-(j * (j - 1)) / 2);
        Degree jg = sig.group().scale(gamma, j);
        for (size_t k = 0; k < dn; ++k)
            for (size_t i = 0; i < dm; ++i)
                for (size_t a = 0; a < dn; ++a) {
                    if (xn(a, k).is_zero()) continue;
                    for (size_t b = 0; b < dm; ++b) {
                        if (m.delta[j](b, i).is_zero()) continue;
                        CycNum f = s_inv * sig.value(jg, n.degrees[k]).inv() *
                                   sig.value(m.degrees[b], n.degrees[a]).inv();
                        c(b * dn + a, k * dm + i) += f * m.delta[j](b, i) * xn(a, k);
                    }
                }
    }
    return c;
}

YDReport linking_from_yd(int64_t p)
{
    if (p < 2) throw InvalidInput("p must be >= 2");
    BraidedObject x = preset_rank1(p);
    CycNum q = self_braiding(x);
    Degree gamma = gen_degree(x);
    const auto& grp = x.bichar.group();
    YDReport rep;
    auto linking_holds = [&](const YDModule& m) {
        const Matrix& d = m.delta[1];
        Matrix rhs = Matrix::identity(m.dim());
        for (size_t i = 0; i < m.dim(); ++i) rhs(i, i) -= monodromy(x.bichar, m.degrees[i], gamma);
        return d * m.action - q * (m.action * d) == rhs;
    };
    auto record = [&](const YDModule& m, bool expect) {
        bool yd = yd_check(m).ok, lk = linking_holds(m);
        bool good = yd == expect && lk == expect;
        rep.lines.push_back(m.name + ": yd " + (yd ? "holds" : "fails") + ", linking " + (lk ? "holds" : "fails") +
                            (good ? "" : "  FAIL"));
        if (!good) {
            rep.ok = false;
            if (!rep.witness) rep.witness = m.name;
        }
    };
    std::vector<Rational> lambdas;
    for (int64_t k = -p; k <= p; ++k) lambdas.push_back(Rational(k, 2));
    for (auto r : {Rational(1, 3), Rational(-2, 5), Rational(1, 4)}) lambdas.push_back(r);
    for (const auto& lam : lambdas) {
        Degree d = grp.make({lam});
        for (int l = 1; l <= p; ++l) {
            auto m = chain_yd(x, d, l);
            if (!m) continue;
            record(*m, true);
            Matrix d2 = CycNum(2) * m->delta[1];
            bool trivial_rhs = true;
            for (const auto& deg : m->degrees) trivial_rhs = trivial_rhs && monodromy(x.bichar, deg, gamma).is_one();
            if (trivial_rhs) continue; // doubling a zero coaction changes nothing
            auto bad = make_yd(x, m->degrees, m->action, d2, m->name + " with doubled coaction");
            record(bad, false);
        }
        auto t = trivial_yd(x, d);
        record(t, monodromy(x.bichar, d, gamma).is_one());
    }
    return rep;
}

bool is_local_over(const Lattice& l, const RatVec& lambda)
{
    if (lambda.size() != l.ambient_dim()) throw InvalidInput("degree has the wrong dimension");
    for (const auto& b : l.basis)
        if (!l.pair(lambda, b).is_integer()) return false;
    return true;
}

RatVec induce_over(const Lattice& l, const RatVec& lambda)
{
    if (lambda.size() != l.ambient_dim()) throw InvalidInput("degree has the wrong dimension");
    size_t k = l.rank(), n = l.ambient_dim();
    Matrix b(k, n);
    for (size_t i = 0; i < k; ++i)
        for (size_t j = 0; j < n; ++j) b(i, j) = CycNum(l.basis[i][j]);
    auto piv = row_reduce(b).pivots;
    Matrix bp(k, k);
    std::vector<CycNum> rhs(k);
    for (size_t r = 0; r < k; ++r) {
        for (size_t i = 0; i < k; ++i) bp(r, i) = b(i, piv[r]);
        rhs[r] = CycNum(lambda[piv[r]]);
    }
    std::vector<CycNum> c;
    if (!solve(bp, rhs, c)) throw InvalidInput("lattice basis is degenerate");
    RatVec out = lambda;
    for (size_t i = 0; i < k; ++i) {
        int64_t f = c[i].rational_value().floor();
        for (size_t j = 0; j < n; ++j) out[j] -= Rational(f) * l.basis[i][j];
    }
    return out;
}

Lattice even_sublattice(const Lattice& l)
{
    RatMat g = l.gram();
    for (const auto& row : g)
        for (const auto& v : row)
            if (!v.is_integer()) throw InvalidInput("even_sublattice needs an integral lattice");
    RatMat basis = l.basis;
    std::optional<size_t> odd;
    for (size_t i = 0; i < basis.size(); ++i) {
        if (l.pair(basis[i], basis[i]).num() % 2 == 0) continue;
        if (!odd) {
            odd = i;
            continue;
        }
        for (size_t j = 0; j < basis[i].size(); ++j) basis[i][j] -= basis[*odd][j];
    }
    if (odd)
        for (auto& v : basis[*odd]) v *= Rational(2);
    return make_lattice(l.form, basis);
}

UprollSpec uproll(const BraidedObject& x, const Lattice& r, UprollTarget target)
{
    const auto& grp = x.bichar.group();
    if (!grp.torsion_orders.empty() || (size_t)grp.free_rank != r.ambient_dim())
        throw InvalidInput("uproll needs a torsion-free grading of the lattice's dimension");
    if (x.bichar.exponents() != r.form)
        throw InvalidInput("the bicharacter exponents must equal the lattice form");
    UprollSpec s{"", x, r, target, "", {}, false, false};
    for (size_t i = 0; i < x.rank(); ++i)
        for (const auto& a : r.basis) {
            Rational t = r.pair(x.degrees[i].free_part, a);
            if (!t.is_integer())
                throw CheckFailure("monodromy(gamma_" + std::to_string(i) + " = " + vec_str(x.degrees[i].free_part) +
                                   ", alpha = " + vec_str(a) + ") = " + CycNum::exp_2pi_i(t).root_str() + " != 1");
        }
    bool full = r.rank() == r.ambient_dim();
    bool even = is_even(r);
    Lattice quot = target == UprollTarget::Local ? even_sublattice(r) : r;
    std::optional<DiscriminantForm> df;
    if (target == UprollTarget::Local && full && even) {
        df = discriminant_form(r);
        s.group = df->group.str();
    } else {
        s.group = "Q^" + std::to_string(r.ambient_dim()) + " / " + (quot.basis == r.basis ? "R" : "R_even");
    }
    for (const auto& d : x.degrees) {
        UprollGenerator g;
        g.degree = d.free_part;
        g.local = is_local_over(r, g.degree);
        g.induced = induce_over(quot, g.degree);
        if (df && df->group.torsion_orders.size() == 1) {
            int64_t order = df->group.torsion_orders[0];
            for (int64_t k = 0; k < order; ++k) {
                RatVec v = df->representative(df->group.make({}, {k}));
                for (size_t j = 0; j < v.size(); ++j) v[j] -= g.degree[j];
                bool in_lattice = true;
                for (const auto& e : induce_over(r, v)) in_lattice = in_lattice && e.is_zero();
                if (in_lattice) {
                    g.discriminant = k;
                    break;
                }
            }
        }
        g.self_braiding_before = x.bichar.value(d, d);
        g.self_braiding_after = CycNum::exp_pi_i(r.pair(g.induced, g.induced));
        s.generators.push_back(g);
    }
    s.self_braidings_preserved = true;
    s.monodromies_preserved = true;
    for (size_t i = 0; i < s.generators.size(); ++i) {
        const auto& gi = s.generators[i];
        s.self_braidings_preserved = s.self_braidings_preserved && gi.self_braiding_before == gi.self_braiding_after;
        for (size_t j = 0; j < s.generators.size(); ++j) {
            CycNum before = monodromy(x.bichar, x.degrees[i], x.degrees[j]);
            CycNum after = CycNum::exp_2pi_i(r.pair(gi.induced, s.generators[j].induced));
            s.monodromies_preserved = s.monodromies_preserved && before == after;
        }
    }
    return s;
}

BraidMatrix induced_braid_matrix(const UprollSpec& s)
{
    BraidMatrix q(s.generators.size(), std::vector<CycNum>(s.generators.size()));
    for (size_t i = 0; i < q.size(); ++i)
        for (size_t j = 0; j < q.size(); ++j)
            q[i][j] = CycNum::exp_pi_i(s.r.pair(s.generators[i].induced, s.generators[j].induced));
    return q;
}

UprollSpec uproll_triplet(int64_t p)
{
    if (p < 2) throw InvalidInput("p must be >= 2");
    Bicharacter b(GradingGroup(1, {}), {{Rational(2 * p)}});
    BraidedObject x{b, {b.group().make({Rational(-1, p)})}};
    auto s = uproll(x, triplet_lattice(p));
    s.name = "triplet p=" + std::to_string(p);
    return s;
}

UprollSpec uproll_sp(int64_t p)
{
    if (p < 3) throw InvalidInput("S(p) needs p >= 3");
    RatMat form = {{Rational(1), Rational(0)}, {Rational(0), Rational(2 - p, p)}};
    Bicharacter b(GradingGroup(2, {}), form);
    BraidedObject x{b, {b.group().make({Rational(-1), Rational(1)})}};
    auto s = uproll(x, make_lattice(form, {{Rational(1), Rational(0)}}));
    s.name = "S(p) p=" + std::to_string(p);
    return s;
}

UprollSpec uproll_gl11(const Rational& hbar)
{
    if (hbar.is_zero()) throw InvalidInput("hbar must be nonzero");
    // (-1)^{fg} q^{-b a' - a b' - hbar b b'} with q = exp(pi i hbar)
    RatMat form = {{Rational(1), Rational(0), Rational(0)},
                   {Rational(0), -hbar * hbar, -hbar},
                   {Rational(0), -hbar, Rational(0)}};
    Bicharacter b(GradingGroup(3, {}), form);
    BraidedObject x{b, {b.group().make({Rational(-1), Rational(0), Rational(-1)})}};
    auto s = uproll(x, make_lattice(form, {{Rational(1), Rational(0), Rational(0)}}));
    s.name = "gl(1|1) hbar=" + hbar.str();
    return s;
}

void uproll_rejected_example(int64_t p)
{
    Bicharacter b(GradingGroup(1, {}), {{Rational(2 * p)}});
    BraidedObject x{b, {b.group().make({Rational(-1, p)})}};
    uproll(x, make_lattice({{Rational(2 * p)}}, {{Rational(1, 4)}}));
}

std::string uproll_json(const UprollSpec& s)
{
    auto vec = [](const RatVec& v) {
        json a = json::array();
        for (const auto& e : v) a.push_back(e.str());
        return a;
    };
    json gens = json::array();
    for (const auto& g : s.generators) {
        json o = {{"degree", vec(g.degree)},
                  {"induced", vec(g.induced)},
                  {"local", g.local},
                  {"self_braiding", g.self_braiding_before.root_str()},
                  {"induced_self_braiding", g.self_braiding_after.root_str()}};
        if (g.discriminant) o["discriminant"] = *g.discriminant;
        gens.push_back(o);
    }
    json j = {{"name", s.name},
              {"target", s.target == UprollTarget::Local ? "local" : "all"},
              {"group", s.group},
              {"generators", gens},
              {"monodromies_preserved", s.monodromies_preserved},
              {"self_braidings_preserved", s.self_braidings_preserved}};
    return j.dump();
}

} // namespace braidlab
