#include <cstdio>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "braidlab/acceptance.hpp"
#include "braidlab/errors.hpp"
#include "braidlab/hopf.hpp"
#include "braidlab/io.hpp"
#include "braidlab/nichols.hpp"
#include "braidlab/repcat.hpp"
#include "braidlab/singlet.hpp"
#include "braidlab/yd.hpp"

using namespace braidlab;
using json = nlohmann::ordered_json;

namespace {

constexpr int kSchemaVersion = 1;

struct Globals {
    std::string format = "json";
    bool numeric_shadow = false;
    uint64_t seed = 12345;
};

// Check failures leave through here so the report is still printed.
struct ReportedFailure {
    json report;
};

std::string numeric(const CycNum& c)
{
    auto z = c.numeric();
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f%+.6fi", z.real() == 0 ? 0.0 : z.real(), z.imag() == 0 ? 0.0 : z.imag());
    return buf;
}

RatVec parse_ratvec(const std::string& s)
{
    RatVec v;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) v.push_back(Rational::parse(item));
    if (v.empty()) throw InvalidInput("empty rational vector");
    return v;
}

json ratvec_json(const RatVec& v)
{
    json a = json::array();
    for (const auto& r : v) a.push_back(r.str());
    return a;
}

void render_text(const json& j, const std::string& prefix, std::ostream& os)
{
    if (j.is_object()) {
        for (const auto& [k, v] : j.items()) render_text(v, prefix.empty() ? k : prefix + "." + k, os);
    } else if (j.is_array() && std::any_of(j.begin(), j.end(), [](const json& e) { return e.is_structured(); })) {
        for (size_t i = 0; i < j.size(); ++i) render_text(j[i], prefix + "[" + std::to_string(i) + "]", os);
    } else {
        os << prefix << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
    }
}

void emit(const Globals& g, const std::string& command, json body)
{
    json out = {{"schema_version", kSchemaVersion}, {"command", command}};
    for (auto& [k, v] : body.items()) out[k] = v;
    if (g.format == "text")
        render_text(out, "", std::cout);
    else
        std::cout << out.dump() << "\n";
}

json report_json(const HopfReport& r)
{
    json items = json::array();
    for (const auto& line : r.lines) {
        auto pos = line.rfind(": ");
        if (pos == std::string::npos)
            items.push_back({{"relation", line}, {"status", "ok"}});
        else
            items.push_back({{"relation", line.substr(0, pos)}, {"status", line.substr(pos + 2)}});
    }
    json j = {{"ok", r.ok}, {"items", items}};
    if (r.witness) j["witness"] = *r.witness;
    return j;
}

std::string tensor_str(const TensorVec& v)
{
    std::string s;
    for (const auto& [w, c] : v) {
        if (!s.empty()) s += " + ";
        s += (c.is_one() ? "" : "(" + c.str() + ")*") + word_str(w);
    }
    return s.empty() ? "0" : s;
}

std::string md_key(const Multidegree& d)
{
    std::string s;
    for (size_t i = 0; i < d.size(); ++i) s += (i ? "," : "") + std::to_string(d[i]);
    return s;
}

// ---- nichols

struct NicholsArgs {
    std::string preset = "rank1", braiding;
    int64_t p = 3, k = 1;
    int max_degree = 8;
    size_t max_words = 5000;
    bool relations = false;
};

BraidMatrix nichols_input(const NicholsArgs& a)
{
    if (!a.braiding.empty()) return braid_matrix_from_json(read_file(a.braiding));
    if (a.preset == "rank1") return braid_matrix(preset_rank1(a.p, a.k));
    if (a.preset == "rank1-torsion") return braid_matrix(preset_rank1_torsion(a.p, a.k, a.p));
    if (a.preset == "cartan-a2") return braid_matrix(preset_cartan_a2(a.p));
    if (a.preset == "parabolic") return braid_matrix(preset_parabolic2(a.p));
    if (a.preset == "two-fermions") return braid_matrix(preset_two_fermions());
    throw InvalidInput("unknown nichols preset " + a.preset);
}

json run_nichols(const NicholsArgs& a, const Globals& g)
{
    if (a.max_degree < 0) throw InvalidInput("--max-degree must be >= 0");
    BraidMatrix q = nichols_input(a);
    NicholsConfig cfg{a.max_degree, a.max_words};
    auto d = nichols_dimensions(q, a.max_degree, cfg);
    json dims = json::object(), rels = json::object();
    for (const auto& [md, c] : d.components) {
        dims[md_key(md)] = c.dim;
        if (a.relations && !c.relations.empty()) {
            json list = json::array();
            for (const auto& r : c.relations) list.push_back(tensor_str(r));
            rels[md_key(md)] = list;
        }
    }
    json braid = json::array();
    for (const auto& row : q) {
        json r = json::array();
        for (const auto& v : row) r.push_back(v.str());
        braid.push_back(r);
    }
    json out = {{"braiding", braid},
                {"max_degree", a.max_degree},
                {"hilbert", d.hilbert},
                {"dimensions", dims},
                {"finite", d.finite},
                {"total", d.finite ? std::to_string(d.total()) : ">= " + std::to_string(d.total())}};
    if (a.relations) out["relations"] = rels;
    if (g.numeric_shadow) {
        json n = json::array();
        for (const auto& row : q) {
            json r = json::array();
            for (const auto& v : row) r.push_back(numeric(v));
            n.push_back(r);
        }
        out["braiding_numeric"] = n;
    }
    return out;
}

// ---- hopf

struct HopfArgs {
    std::string preset;
    int64_t p = 2;
    std::string hbar = "1/2";
    std::vector<std::string> checks;
    bool dump = false;
};

std::vector<PresentationModule> chain_family(const HopfPresentation& u, const std::vector<std::vector<CycNum>>& gv,
                                             const std::vector<std::vector<Rational>>& hv)
{
    std::vector<PresentationModule> fam;
    for (const auto& g : gv)
        for (const auto& h : hv) fam.push_back(chain_module(u, g, h));
    return fam;
}

json run_hopf(const HopfArgs& a, const Globals&)
{
    HopfPresentation u;
    std::vector<PresentationModule> family;
    if (a.preset == "uq-sl2") {
        u = build_uq_sl2(a.p);
        family = sl2_presentation_family(a.p, true);
    } else if (a.preset == "uq-h-sl2") {
        u = build_uqh_sl2(a.p);
        family = sl2_presentation_family(a.p, false);
    } else if (a.preset == "usp") {
        u = build_usp(a.p);
        CycNum z = CycNum::root_of_unity(2 * a.p, 1);
        family = chain_family(u, {{CycNum(1), CycNum(1)}, {CycNum(-1), z}, {CycNum(1), CycNum::root_of_unity(3, 1)}},
                              {{Rational(0)}, {Rational(1, 3)}});
    } else if (a.preset == "ugl11") {
        u = build_ugl11(Rational::parse(a.hbar));
        family = chain_family(u, {{CycNum(1), CycNum(1)}, {CycNum(-1), CycNum::root_of_unity(8, 1)}},
                              {{Rational(0), Rational(0)}, {Rational(1, 2), Rational(1, 3)}});
    } else {
        throw InvalidInput("unknown hopf preset " + a.preset + " (uq-sl2, uq-h-sl2, usp, ugl11)");
    }
    std::vector<std::string> checks = a.checks;
    if (checks.empty() || std::find(checks.begin(), checks.end(), "all") != checks.end())
        checks = {"relations", "coproduct", "antipode", "counit"};
    json res = json::object();
    bool ok = true;
    for (const auto& c : checks) {
        HopfReport r;
        if (c == "relations")
            r = check_relation_consistency(u, family);
        else if (c == "coproduct")
            r = check_coproduct_symbolic(u);
        else if (c == "antipode")
            r = check_antipode(u);
        else if (c == "counit")
            r = check_counit(u);
        else
            throw InvalidInput("unknown check " + c);
        ok = ok && r.ok;
        res[c] = report_json(r);
    }
    json rel = json::array();
    for (const auto& r : u.relations) rel.push_back(r.name);
    json out = {{"presentation", u.name}, {"relations", rel}, {"module_family_size", family.size()},
                {"checks", res}, {"ok", ok}};
    if (a.dump) out["presentation_data"] = json::parse(presentation_to_json(u));
    if (!ok) throw ReportedFailure{out};
    return out;
}

// ---- tensor and fusion

json multiset_json(const Multiset& m)
{
    json a = json::array();
    for (const auto& [l, n] : m) a.push_back({{"label", l.str()}, {"multiplicity", n}});
    return a;
}

json run_tensor(int64_t p, const std::string& left, const std::string& right)
{
    auto l = parse_label(left, p), r = parse_label(right, p);
    auto m = tensor(module_of(l, p), module_of(r, p));
    return {{"p", p}, {"left", l.str()}, {"right", r.str()}, {"dimension", m.dim()}, {"decomposition", multiset_json(decompose(m))}};
}

json run_fusion(int64_t p, const std::string& a, const std::string& b)
{
    auto f = fuse(parse_label(a, p), parse_label(b, p), p);
    json j = json::parse(fusion_json(f));
    return {{"p", p}, {"left", parse_label(a, p).str()}, {"right", parse_label(b, p).str()},
            {"level", j["level"]}, {"rule", j["rule"]}, {"result", j["result"]}};
}

// ---- lattice

struct LatticeArgs {
    std::string preset = "triplet", file, action = "discriminant", lambda;
    int64_t p = 2;
};

Lattice lattice_input(const std::string& preset, const std::string& file, int64_t p)
{
    if (!file.empty()) return lattice_from_json(read_file(file));
    if (preset == "triplet") return triplet_lattice(p);
    throw InvalidInput("unknown lattice preset " + preset);
}

json lattice_json(const Lattice& l)
{
    json j = json::parse(lattice_to_json(l));
    return j;
}

json run_lattice(const LatticeArgs& a, const Globals& g)
{
    Lattice l = lattice_input(a.preset, a.file, a.p);
    if (a.action == "discriminant") {
        auto df = discriminant_form(l);
        json q = json::array(), qn = json::array(), els = json::array();
        for (const auto& e : df.group.elements()) {
            q.push_back(df.Q(e).root_str());
            qn.push_back(numeric(df.Q(e)));
            els.push_back(e.torsion_part);
        }
        json gens = json::array();
        for (const auto& v : df.generators) gens.push_back(ratvec_json(v));
        json out = {{"group", df.group.str()}, {"Q", q}, {"elements", els}, {"generators", gens}};
        if (g.numeric_shadow) out["Q_numeric"] = qn;
        return out;
    }
    if (a.action == "dual") return {{"lattice", lattice_json(l)}, {"dual", lattice_json(dual_lattice(l))}};
    if (a.action == "even") return {{"lattice", lattice_json(l)}, {"even", is_even(l)}, {"even_sublattice", lattice_json(even_sublattice(l))}};
    if (a.action == "local" || a.action == "induce") {
        if (a.lambda.empty()) throw InvalidInput("--lambda is required for " + a.action);
        RatVec lam = parse_ratvec(a.lambda);
        json out = {{"lambda", ratvec_json(lam)}, {"local", is_local_over(l, lam)}};
        if (a.action == "induce") out["coset_representative"] = ratvec_json(induce_over(l, lam));
        if (g.numeric_shadow) {
            json m = json::array();
            for (const auto& b : l.basis) m.push_back(numeric(CycNum::exp_2pi_i(l.pair(lam, b))));
            out["monodromy_numeric"] = m;
        }
        return out;
    }
    throw InvalidInput("unknown lattice action " + a.action + " (discriminant, dual, even, local, induce)");
}

// ---- uproll

struct UprollArgs {
    std::string preset, braiding, lattice, target = "local", hbar = "1/2";
    int64_t p = 2;
};

json run_uproll(const UprollArgs& a, const Globals& g)
{
    UprollTarget t = a.target == "all" ? UprollTarget::All : UprollTarget::Local;
    if (a.target != "all" && a.target != "local") throw InvalidInput("--target is local or all");
    auto build = [&]() -> UprollSpec {
        if (!a.braiding.empty() || !a.lattice.empty()) {
            if (a.braiding.empty() || a.lattice.empty()) throw InvalidInput("--braiding and --lattice go together");
            auto s = uproll(braided_object_from_json(read_file(a.braiding)), lattice_from_json(read_file(a.lattice)), t);
            s.name = a.braiding;
            return s;
        }
        if (a.preset == "rejected") {
            uproll_rejected_example(a.p);
            throw ReportedFailure{{{"status", "accepted"}, {"ok", false}}};
        }
        std::optional<UprollSpec> s;
        if (a.preset == "triplet")
            s = uproll_triplet(a.p);
        else if (a.preset == "sp")
            s = uproll_sp(a.p);
        else if (a.preset == "gl11")
            s = uproll_gl11(Rational::parse(a.hbar));
        else
            throw InvalidInput("give --preset triplet|sp|gl11|rejected or --braiding and --lattice");
        if (t == UprollTarget::Local) return *s;
        auto all = uproll(s->x, s->r, t);
        all.name = s->name;
        return all;
    };
    std::optional<UprollSpec> spec;
    try {
        spec = build();
    } catch (const CheckFailure& e) {
        throw ReportedFailure{{{"status", "rejected"}, {"ok", false}, {"reason", e.what()}}};
    }
    const UprollSpec& s = *spec;
    json j = json::parse(uproll_json(s));
    json out = {{"status", "ok"}};
    for (auto& [k, v] : j.items()) out[k] = v;
    if (g.numeric_shadow) {
        json n = json::array();
        for (const auto& gen : s.generators) n.push_back(numeric(gen.self_braiding_after));
        out["induced_self_braiding_numeric"] = n;
    }
    return out;
}

// ---- yd-check

struct YdArgs {
    std::string preset = "verma", module, lambda = "0";
    int64_t p = 2;
    int length = 0;
};

json run_yd(const YdArgs& a, const Globals&)
{
    if (a.preset == "linking" && a.module.empty()) {
        auto r = linking_from_yd(a.p);
        json out = {{"p", a.p}, {"lines", r.lines}, {"ok", r.ok}};
        if (r.witness) out["witness"] = *r.witness;
        if (!r.ok) throw ReportedFailure{out};
        return out;
    }
    std::optional<YDModule> m;
    if (!a.module.empty()) {
        m = yd_module_from_json(read_file(a.module));
    } else {
        auto x = preset_rank1(a.p);
        Degree lam = x.bichar.group().make({Rational::parse(a.lambda)});
        if (a.preset == "verma")
            m = verma_yd(x);
        else if (a.preset == "trivial")
            m = trivial_yd(x, lam);
        else if (a.preset == "chain") {
            m = chain_yd(x, lam, a.length ? a.length : (int)a.p);
            if (!m) throw ReportedFailure{{{"ok", false}, {"reason", "the chain admits no induced coaction"}}};
        } else
            throw InvalidInput("unknown yd preset " + a.preset + " (verma, trivial, chain, linking)");
    }
    auto r = yd_check(*m);
    json out = {{"module", m->name}, {"dim", m->dim()}, {"lines", r.lines}, {"ok", r.ok}};
    if (r.witness) out["witness"] = *r.witness;
    if (!r.ok) throw ReportedFailure{out};
    return out;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Nichols algebras, quantum groups and singlet fusion with exact cyclotomic arithmetic", "braidlab"};
    app.set_config("--config", "", "TOML file mirroring the flags; [subcommand] sections for subcommand flags");
    app.require_subcommand(1);
    app.fallthrough();
    Globals g;
    app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"json", "text"}));
    app.add_flag("--numeric-shadow", g.numeric_shadow, "Add floating-point diagnostic columns");
    app.add_option("--seed", g.seed, "Seed for randomized checks");

    NicholsArgs na;
    auto* nic = app.add_subcommand("nichols", "Nichols algebra dimensions of a diagonal braiding");
    nic->add_option("--preset", na.preset, "rank1, rank1-torsion, cartan-a2, parabolic, two-fermions");
    nic->add_option("--braiding", na.braiding, "Braiding JSON file")->check(CLI::ExistingFile);
    nic->add_option("--p", na.p, "Order parameter");
    nic->add_option("--k", na.k, "Exponent for rank1 (q = zeta_p^k) and rank1-torsion");
    nic->add_option("--max-degree", na.max_degree, "Total degree cutoff");
    nic->add_option("--max-words", na.max_words, "Largest component size");
    nic->add_flag("--relations", na.relations, "Dump kernel bases");

    HopfArgs ha;
    auto* hop = app.add_subcommand("hopf", "Quantum group presentations and their consistency checks");
    hop->add_option("--preset", ha.preset, "uq-sl2, uq-h-sl2, usp, ugl11")->required();
    hop->add_option("--p", ha.p, "Order parameter");
    hop->add_option("--hbar", ha.hbar, "hbar for ugl11");
    hop->add_option("--check", ha.checks, "relations, coproduct, antipode, counit, all");
    hop->add_flag("--dump", ha.dump, "Include the full presentation");

    int64_t tp = 2;
    std::string tl, tr;
    auto* ten = app.add_subcommand("tensor", "Decompose a tensor product of weight modules");
    ten->add_option("--p", tp, "Order parameter");
    ten->add_option("--left", tl, "Label, e.g. M:1,2 or F:1/3")->required();
    ten->add_option("--right", tr, "Label")->required();

    int64_t fp = 2;
    std::string fa, fb;
    auto* fus = app.add_subcommand("fusion", "Singlet fusion rules");
    fus->add_option("--p", fp, "Order parameter");
    fus->add_option("a", fa, "Label: M:r,s  F:c  F:r,s  Fbar:r,s  P:r,s  A")->required();
    fus->add_option("b", fb, "Label")->required();

    LatticeArgs la;
    auto* lat = app.add_subcommand("lattice", "Lattice duals, discriminant forms, locality");
    lat->add_option("--preset", la.preset, "triplet");
    lat->add_option("--lattice", la.file, "Lattice JSON file")->check(CLI::ExistingFile);
    lat->add_option("--p", la.p, "Order parameter");
    lat->add_option("--lambda", la.lambda, "Comma-separated rational coordinates");
    lat->add_option("action", la.action, "discriminant, dual, even, local, induce");

    UprollArgs ua;
    auto* upr = app.add_subcommand("uproll", "Induced gradings over a simple-current lattice");
    upr->add_option("--preset", ua.preset, "triplet, sp, gl11, rejected");
    upr->add_option("--braiding", ua.braiding, "Braiding JSON file")->check(CLI::ExistingFile);
    upr->add_option("--lattice", ua.lattice, "Lattice JSON file")->check(CLI::ExistingFile);
    upr->add_option("--p", ua.p, "Order parameter");
    upr->add_option("--hbar", ua.hbar, "hbar for gl11");
    upr->add_option("--target", ua.target, "local (Lambda*/Lambda) or all (Gamma/Lambda)");

    YdArgs ya;
    auto* ydc = app.add_subcommand("yd-check", "Yetter-Drinfeld axioms over a rank-1 Nichols algebra");
    ydc->add_option("--preset", ya.preset, "verma, trivial, chain, linking");
    ydc->add_option("--module", ya.module, "YD module JSON file")->check(CLI::ExistingFile);
    ydc->add_option("--p", ya.p, "Order of q");
    ydc->add_option("--lambda", ya.lambda, "Degree of the first basis vector");
    ydc->add_option("--length", ya.length, "Chain length (default p)");

    bool no_det = false;
    auto* acc = app.add_subcommand("acceptance", "Run the acceptance suite");
    acc->add_flag("--no-determinism", no_det, "Skip the repeated run");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    std::string cmd = app.get_subcommands().front()->get_name();
    try {
        if (cmd == "nichols") emit(g, cmd, run_nichols(na, g));
        if (cmd == "hopf") emit(g, cmd, run_hopf(ha, g));
        if (cmd == "tensor") emit(g, cmd, run_tensor(tp, tl, tr));
        if (cmd == "fusion") emit(g, cmd, run_fusion(fp, fa, fb));
        if (cmd == "lattice") emit(g, cmd, run_lattice(la, g));
        if (cmd == "uproll") emit(g, cmd, run_uproll(ua, g));
        if (cmd == "yd-check") emit(g, cmd, run_yd(ya, g));
        if (cmd == "acceptance") {
            AcceptanceOptions opt;
            opt.seed = g.seed;
            opt.determinism = !no_det;
            if (g.format == "text") opt.on_result = [](const CriterionResult& r) { std::cout << acceptance_table({r}) << std::flush; };
            auto res = run_acceptance(opt);
            if (g.format == "json") std::cout << acceptance_json(res) << "\n";
            return unexpected_failures(res) ? 1 : 0;
        }
    } catch (const ReportedFailure& f) {
        emit(g, cmd, f.report);
        return 1;
    } catch (const InvalidInput& e) {
        std::cerr << "braidlab " << cmd << ": invalid input: " << e.what() << "\n";
        return 2;
    } catch (const CheckFailure& e) {
        std::cerr << "braidlab " << cmd << ": check failed: " << e.what() << "\n";
        return 1;
    } catch (const ResourceError& e) {
        std::cerr << "braidlab " << cmd << ": resource limit: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
