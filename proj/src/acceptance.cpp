#include "braidlab/acceptance.hpp"

#include <chrono>
#include <cstdio>
#include <random>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "braidlab/errors.hpp"
#include "braidlab/hopf.hpp"
#include "braidlab/nichols.hpp"
#include "braidlab/repcat.hpp"
#include "braidlab/singlet.hpp"
#include "braidlab/yd.hpp"

namespace braidlab {

using json = nlohmann::json;

namespace {

// X = x K^-1, Y = x*(q^-1 - q) does not give the sl2-type gl(1|1) commutator.
const std::set<int> kExpectedFailures = {6};

struct Tally {
    bool ok = true;
    size_t checked = 0;
    std::vector<std::string> failures;
    void check(bool cond, const std::string& what)
    {
        ++checked;
        if (!cond) {
            ok = false;
            if (failures.size() < 5) failures.push_back(what);
        }
    }
    std::string detail(const std::string& summary) const
    {
        std::string s = summary + ", " + std::to_string(checked) + " checks";
        for (const auto& f : failures) s += "; failed: " + f;
        return s;
    }
};

std::string ps(int64_t p) { return "p=" + std::to_string(p); }

CriterionResult c1()
{
    Tally t;
    for (int64_t p = 2; p <= 12; ++p)
        for (int64_t k = 1; k < p; ++k)
            t.check(gauss_binomial(p, k, CycNum::root_of_unity(p, 1)).is_zero(),
                    "[" + std::to_string(p) + "," + std::to_string(k) + "]");
    return {1, "Gauss binomials vanish at zeta_p", t.ok, false, t.detail("p <= 12, 0 < k < p")};
}

CriterionResult c2()
{
    Tally t;
    for (int64_t p = 2; p <= 8; ++p) {
        int deg = (int)p + 3;
        auto h = nichols_dimensions(braid_matrix(preset_rank1(p)), deg, NicholsConfig{deg, 5000}).hilbert;
        std::vector<size_t> want(deg + 1, 0);
        for (int64_t n = 0; n < p; ++n) want[n] = 1;
        t.check(h == want, ps(p));
    }
    auto h1 = nichols_dimensions(braid_matrix(preset_rank1(1)), 8).hilbert;
    t.check(h1 == std::vector<size_t>(9, 1), "q = 1");
    return {2, "rank-1 Hilbert series", t.ok, false, t.detail("p = 2..8 and q = 1 to degree 8")};
}

std::vector<std::pair<std::string, BraidMatrix>> shipped_rank2()
{
    std::vector<std::pair<std::string, BraidMatrix>> out;
    for (int64_t p = 1; p <= 8; ++p) out.push_back({"rank1 " + ps(p), braid_matrix(preset_rank1(p))});
    out.push_back({"rank1 Z2", braid_matrix(preset_rank1_torsion(2, 1, 1))});
    for (int64_t p = 2; p <= 3; ++p) out.push_back({"cartan-a2 " + ps(p), braid_matrix(preset_cartan_a2(p))});
    out.push_back({"parabolic p=3", braid_matrix(preset_parabolic2(3))});
    out.push_back({"two-fermions", braid_matrix(preset_two_fermions())});
    return out;
}

CriterionResult c3()
{
    Tally t;
    size_t comps = 0;
    for (const auto& [name, q] : shipped_rank2()) {
        auto d = nichols_dimensions(q, 6);
        auto s = shuffle_dimensions(q, 6);
        for (const auto& [md, c] : d.components) {
            ++comps;
            auto it = s.find(md);
            t.check(it != s.end() && it->second == c.dim, name);
        }
    }
    return {3, "two-oracle Nichols agreement", t.ok, false,
            t.detail(std::to_string(shipped_rank2().size()) + " braidings, " + std::to_string(comps) + " multidegrees")};
}

CriterionResult c4()
{
    Tally t;
    std::string dims;
    for (int64_t p = 2; p <= 3; ++p) {
        int bound = (int)(5 * p - 1);
        auto d = total_dimension(braid_matrix(preset_cartan_a2(p)), bound, NicholsConfig{bound, 5000});
        t.check(d.finite && d.value == (size_t)(p * p * p), "A2 " + ps(p) + " gave " + d.str());
        dims += (dims.empty() ? "" : ", ") + d.str();
    }
    return {4, "Cartan A2 dimensions", t.ok, false, t.detail("totals " + dims)};
}

CriterionResult c5()
{
    Tally t;
    for (int64_t p = 2; p <= 4; ++p)
        t.check(check_bialgebra_axiom(nichols_dimensions(braid_matrix(preset_rank1(p)), 6), 6).ok, "rank1 " + ps(p));
    t.check(check_bialgebra_axiom(nichols_dimensions(braid_matrix(preset_parabolic2(3)), 6), 6).ok, "parabolic");
    return {5, "bialgebra axiom", t.ok, false, t.detail("degree 6")};
}

CriterionResult c6()
{
    Tally t;
    for (int64_t p = 2; p <= 4; ++p) {
        auto uh = build_uqh_sl2(p);
        t.check(check_relations_on_modules(uh, sl2_presentation_family(p, false)).ok, "unrolled relations " + ps(p));
        t.check(check_antipode(uh).ok, "unrolled antipode " + ps(p));
        auto u = build_uq_sl2(p);
        t.check(check_relations_on_modules(u, sl2_presentation_family(p, true)).ok, "small relations " + ps(p));
        t.check(check_antipode(u).ok, "small antipode " + ps(p));
        t.check(check_sl2_substitution(p), "substitution " + ps(p));
    }
    auto g = check_gl11_change_of_variables(Rational(1, 3));
    t.check(g.step_product, "gl(1|1) XY + YX product");
    t.check(g.step_unscaled, "gl(1|1) XY + YX = (K - K^-1)/(q - q^-1) for Y = x*(q^-1 - q) (holds only for Y = x*/(q^-1 - q))");
    t.check(g.coproduct_x && g.coproduct_y && g.x_squared, "gl(1|1) coproducts");
    return {6, "quantum group consistency", t.ok, false, t.detail("p = 2..4 and gl(1|1)")};
}

CriterionResult c7()
{
    Tally t;
    for (int64_t p = 2; p <= 3; ++p) {
        for (int64_t s0 = 1; s0 < p; ++s0) {
            auto L = [&](int64_t n) { return simple_label(n, n % 2 == 0 ? s0 : p - s0); };
            for (int64_t n = -2; n <= 3; ++n)
                for (int64_t m = -2; m <= 3; ++m) {
                    size_t want = (n - m == 1 || m - n == 1) ? 1 : 0;
                    t.check(ext1_dim(L(n), L(m), p) == want,
                            "Ext(" + L(n).str() + ", " + L(m).str() + ") " + ps(p));
                }
        }
        for (int64_t r = -1; r <= 2; ++r)
            for (int64_t s = 1; s < p; ++s) {
                auto layers = socle_filtration(projective_module(r, s, p));
                std::vector<Multiset> want = {{{simple_label(r, s), 1}},
                                              {{simple_label(r - 1, p - s), 1}, {simple_label(r + 1, p - s), 1}},
                                              {{simple_label(r, s), 1}}};
                t.check(layers == want, "Loewy diamond of P:" + std::to_string(r) + "," + std::to_string(s));
            }
    }
    return {7, "Ext pattern and Loewy diamonds", t.ok, false, t.detail("p = 2, 3")};
}

CriterionResult c8()
{
    Tally t;
    size_t n = 0;
    for (int64_t p = 2; p <= 4; ++p) {
        auto r = check_ring_laws(p, 3);
        n += r.checked;
        t.check(r.ok, ps(p) + (r.witness ? ": " + *r.witness : ""));
    }
    return {8, "fusion ring laws", t.ok, false, t.detail("p = 2..4, |r| <= 3, " + std::to_string(n) + " identities")};
}

CriterionResult c9()
{
    Tally t;
    size_t pairs = 0;
    for (int64_t p = 2; p <= 3; ++p) {
        auto sample = default_cross_sample(p);
        pairs += sample.size();
        t.check(sample.size() >= 12, "sample size " + ps(p));
        bool mm = false, mt = false, at = false;
        for (const auto& [a, b] : sample) {
            mm |= a.kind == IndecLabel::Simple && b.kind == IndecLabel::Simple;
            mt |= a.kind == IndecLabel::Simple && b.kind == IndecLabel::Typical;
            at |= a == verma_label(1, 1) && b.kind == IndecLabel::Typical;
        }
        t.check(mm && mt && at, "sample coverage " + ps(p));
        auto r = cross_check(p, sample);
        t.check(r.ok, ps(p) + (r.witness ? ": " + *r.witness : ""));
    }
    return {9, "fusion against tensor decompositions", t.ok, false, t.detail(std::to_string(pairs) + " pairs")};
}

CriterionResult c10(uint64_t seed)
{
    Tally t;
    for (int64_t p = 2; p <= 6; ++p) {
        auto df = discriminant_form(triplet_lattice(p));
        t.check(df.group.torsion_orders == std::vector<int64_t>{2 * p}, "group " + ps(p));
        auto els = df.group.elements();
        for (size_t k = 0; k < els.size(); ++k)
            t.check(df.Q(els[k]) == CycNum::exp_pi_i(Rational((int64_t)(k * k), 2 * p)),
                    "Q(" + std::to_string(k) + ") " + ps(p));
    }
    // raw engine output only, so the draws do not depend on the standard library
    std::mt19937_64 rng(seed);
    size_t local = 0;
    for (int i = 0; i < 100; ++i) {
        int64_t p = 2 + (int64_t)(rng() % 5);
        int64_t den = 1 + (int64_t)(rng() % (4 * p));
        int64_t num = (int64_t)(rng() % 201) - 100;
        Rational lam(num, den);
        Lattice l = triplet_lattice(p);
        // Lambda* is spanned by its single basis vector; membership is divisibility
        bool in_dual = (lam / dual_lattice(l).basis[0][0]).is_integer();
        local += in_dual;
        t.check(is_local_over(l, {lam}) == in_dual, "lambda " + lam.str() + " " + ps(p));
    }
    return {10, "discriminant forms and locality", t.ok, false,
            t.detail("p = 2..6, 100 random lambdas (" + std::to_string(local) + " local)")};
}

CriterionResult c11()
{
    Tally t;
    for (int64_t p = 2; p <= 4; ++p) {
        auto r = linking_from_yd(p);
        t.check(r.ok, "linking " + ps(p) + (r.witness ? ": " + *r.witness : ""));
    }
    for (int64_t p = 2; p <= 6; ++p) {
        auto s = uproll_triplet(p);
        const auto& g = s.generators.at(0);
        t.check(g.discriminant && *g.discriminant == 2 * p - 2, "triplet degree " + ps(p));
        t.check(s.monodromies_preserved && s.self_braidings_preserved, "triplet braiding " + ps(p));
    }
    for (auto h : {Rational(1, 2), Rational(1, 3)}) {
        auto s = uproll_gl11(h);
        const auto& g = s.generators.at(0);
        t.check(g.degree == RatVec{Rational(-1), Rational(0), Rational(-1)} && g.self_braiding_after == CycNum(-1) &&
                    s.self_braidings_preserved,
                "gl(1|1) hbar=" + h.str());
    }
    for (int64_t p = 2; p <= 4; ++p) {
        bool rejected = false;
        try {
            uproll_rejected_example(p);
        } catch (const CheckFailure&) {
            rejected = true;
        }
        t.check(rejected, "rejection " + ps(p));
    }
    return {11, "YD linking and uprolling", t.ok, false, t.detail("p = 2..4 linking, triplet p = 2..6, gl(1|1)")};
}

template <class F>
CriterionResult timed(int id, F f, const AcceptanceOptions& opt)
{
    auto start = std::chrono::steady_clock::now();
    CriterionResult r;
    try {
        r = f();
    } catch (const std::exception& e) {
        r.name = "criterion " + std::to_string(id);
        r.pass = false;
        r.detail = std::string("exception: ") + e.what();
    }
    r.id = id;
    r.expected_failure = !r.pass && kExpectedFailures.count(r.id);
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (opt.on_result) opt.on_result(r);
    return r;
}

} // namespace

std::vector<CriterionResult> run_criteria(const AcceptanceOptions& opt)
{
    std::vector<std::function<CriterionResult()>> fs = {c1, c2, c3, c4, c5, c6, c7, c8, c9,
                                                       [&] { return c10(opt.seed); }, c11};
    std::vector<CriterionResult> out;
    for (size_t i = 0; i < fs.size(); ++i) out.push_back(timed((int)i + 1, fs[i], opt));
    return out;
}

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opt)
{
    auto out = run_criteria(opt);
    if (!opt.determinism) return out;
    auto r12 = timed(
        12,
        [&] {
            AcceptanceOptions quiet = opt;
            quiet.on_result = nullptr;
            std::string first = acceptance_json(out);
            std::string second = acceptance_json(run_criteria(quiet));
            bool same = first == second;
            return CriterionResult{12, "determinism", same, false,
                                   std::string("second run JSON ") + (same ? "byte-identical" : "differs") + " (" +
                                       std::to_string(first.size()) + " bytes)"};
        },
        opt);
    out.push_back(r12);
    return out;
}

std::string acceptance_json(const std::vector<CriterionResult>& results)
{
    json crit = json::array();
    for (const auto& r : results)
        crit.push_back({{"id", r.id},
                        {"name", r.name},
                        {"status", r.pass ? "pass" : (r.expected_failure ? "expected-fail" : "fail")},
                        {"detail", r.detail}});
    json j = {{"schema_version", 1}, {"criteria", crit}, {"unexpected_failures", unexpected_failures(results)}};
    return j.dump();
}

std::string acceptance_table(const std::vector<CriterionResult>& results)
{
    std::ostringstream os;
    for (const auto& r : results) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%7.2fs", r.seconds);
        os << "[" << (r.id < 10 ? " " : "") << r.id << "] " << (r.pass ? "PASS" : "FAIL")
           << (r.expected_failure ? " (expected)" : "") << "  " << buf << "  " << r.name << ": " << r.detail << "\n";
    }
    return os.str();
}

int unexpected_failures(const std::vector<CriterionResult>& results)
{
    int n = 0;
    for (const auto& r : results) n += !r.pass && !r.expected_failure;
    return n;
}

} // namespace braidlab
