#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "galdef/brauer_recipe.hpp"
#include "galdef/cohomology.hpp"
#include "galdef/congruence.hpp"
#include "galdef/defring.hpp"
#include "galdef/errors.hpp"
#include "galdef/lifting.hpp"
#include "galdef/obstruction.hpp"
#include "galdef/version.hpp"

using json = nlohmann::ordered_json;
using namespace galdef;

namespace {

struct Report {
    json doc;

    Report(const std::string& command, const std::string& anchor) {
        doc["command"] = command;
        doc["params"] = json::object();
        doc["result"] = json::object();
        doc["checks"] = json::array();
        doc["paper_anchor"] = anchor;
        doc["version"] = kVersion;
    }

    void param(const std::string& k, const json& v) { doc["params"][k] = v; }
    void check(const std::string& name, bool pass, const std::string& detail) {
        doc["checks"].push_back({{"name", name}, {"pass", pass}, {"detail", detail}});
    }

    int emit(const std::string& out_path) const {
        for (const auto& c : doc["checks"])
            std::cout << "check " << c["name"].get<std::string>() << ": "
                      << (c["pass"].get<bool>() ? "pass" : "FAIL") << " ("
                      << c["detail"].get<std::string>() << ")\n";
        std::string text = doc.dump(2) + "\n";
        if (out_path.empty()) {
            std::cout << text;
        } else {
            std::ofstream out(out_path, std::ios::binary);
            if (!out)
                throw data_error("cannot write report to " + out_path);
            out << text;
            std::cout << "report written to " << out_path << "\n";
        }
        return 0;
    }
};

std::string element_name(const TameGroup& g, const TameElement& e) {
    if (e.i == 0 && e.ip == 0)
        return "e";
    std::string out;
    if (e.i == 1)
        out = "F";
    else if (e.i > 1)
        out = "F^" + std::to_string(e.i);
    if (e.ip >= 1) {
        if (!out.empty())
            out += "*";
        out += e.ip == 1 ? "tau" : "tau^" + std::to_string(e.ip);
    }
    (void)g;
    return out;
}

std::string join(const std::vector<std::string>& parts) {
    std::string out;
    for (const auto& p : parts) {
        if (!out.empty())
            out += "; ";
        out += p;
    }
    return out.empty() ? "none" : out;
}

json poly_json(const TruncPoly& f) {
    json out = json::object();
    for (const auto& [name, coeff] : f.monomial_map())
        out[name] = coeff;
    return out;
}

std::string resolve_data_path(const std::string& path) {
    namespace fs = std::filesystem;
    if (fs::exists(path))
        return path;
    if (const char* dir = std::getenv("GALDEF_DATA_DIR")) {
        fs::path candidate = fs::path(dir) / path;
        if (fs::exists(candidate))
            return candidate.string();
    }
    throw data_error("cannot find data file " + path +
                     " (also tried GALDEF_DATA_DIR when set)");
}

std::shared_ptr<const GaloisModule> module_by_name(const std::string& name,
                                                   std::shared_ptr<const TameGroup> group,
                                                   std::uint32_t alpha, std::uint32_t beta) {
    if (name == "trivial")
        return trivial_module(group);
    if (name == "mu")
        return mu_module(group);
    bool needs_frob = name == "ad0" || name == "ad0-twisted" || name == "ad" || name == "ad-twisted";
    if (!needs_frob)
        throw invalid_parameters("unknown module " + name +
                                 " (trivial, mu, ad0, ad0-twisted, ad, ad-twisted)");
    ResidualFrobenius frob(group->ell(), alpha, beta);
    if (name == "ad0")
        return build_adjoint(group, frob, false);
    if (name == "ad0-twisted")
        return build_adjoint(group, frob, true);
    if (name == "ad")
        return build_ad(group, frob, false);
    return build_ad(group, frob, true);
}

int run_invariants(std::uint32_t ell, std::uint64_t q, std::uint32_t alpha, std::uint32_t beta,
                   const std::string& out) {
    Report rep("invariants", "levelraise-invariant-line");
    rep.param("ell", ell);
    rep.param("q", q);
    rep.param("alpha", alpha);
    rep.param("beta", beta);
    auto h = levelraise_h0(ell, q, alpha, beta);
    auto group = make_group(ell, q % ell);
    rep.doc["result"]["m"] = group->m();
    rep.doc["result"]["group_order"] = group->order();
    rep.doc["result"]["h0_dim"] = h.dim;
    rep.doc["result"]["generator_tags"] = h.generator_tags;
    rep.check("ratio-condition", true, "alpha/beta = q mod ell holds");
    std::cout << "invariants ell=" << ell << " q=" << q << ": h0 dim " << h.dim << "\n";
    return rep.emit(out);
}

int run_cocycle(std::uint32_t ell, std::uint64_t q, bool exhaustive, std::uint64_t seed,
                const std::string& out) {
    Report rep("cocycle", "explicit-exponent-cocycle");
    rep.param("ell", ell);
    rep.param("q", q);
    rep.param("exhaustive", exhaustive);
    rep.param("seed", seed);
    auto group = make_group(ell, q % ell);
    auto view = GroupView::full(group);
    Cochain c = explicit_b_cochain(view);
    std::uint64_t n = view->size();
    std::uint64_t budget = exhaustive ? n * n * n : 30000000;
    CocycleCheck chk = is_cocycle(c, budget, seed);
    auto pre = is_coboundary(c, budget, seed);
    TameElement ftau = group->mul(group->frobenius(), group->tau());
    std::uint32_t sample = explicit_b(*group, ftau, group->frobenius());
    rep.doc["result"]["group_order"] = group->order();
    rep.doc["result"]["cocycle_ok"] = chk.ok;
    rep.doc["result"]["exhaustive"] = chk.exhaustive;
    rep.doc["result"]["triples_checked"] = chk.checked;
    rep.doc["result"]["is_coboundary"] = pre.has_value();
    rep.doc["result"]["sample"] = {{"g", element_name(*group, ftau)},
                                   {"h", element_name(*group, group->frobenius())},
                                   {"value", sample}};
    rep.check("cocycle-identity", chk.ok,
              (chk.exhaustive ? "exhaustive over " : "sampled ") + std::to_string(chk.checked) +
                  " triples");
    rep.check("not-a-coboundary", !pre.has_value(), "class is nonzero");
    std::cout << "cocycle ell=" << ell << " q=" << q << ": identity "
              << (chk.ok ? "holds" : "FAILS") << ", coboundary " << (pre ? "yes" : "no") << "\n";
    return rep.emit(out);
}

int run_recipe_cmd(std::uint32_t ell, std::uint64_t q, const std::string& out) {
    Report rep("recipe", "brauer-recipe-exponent");
    rep.param("ell", ell);
    rep.param("q", q);
    RecipeTrace trace = run_recipe(ell, q);
    RecipeComparison cmp = compare_recipe_to_formula(ell, q);
    rep.doc["result"]["a_coordinate_zero"] = trace.a_coordinate_zero;
    rep.doc["result"]["uniform"] = cmp.uniform;
    rep.doc["result"]["lambda"] = cmp.lambda;
    rep.doc["result"]["pairs_checked"] = cmp.pairs_checked;
    rep.check("a-coordinate-vanishes", trace.a_coordinate_zero,
              "lattice values stay in the root-of-unity line");
    rep.check("uniform-scalar", cmp.uniform,
              cmp.uniform ? "recipe = " + std::to_string(cmp.lambda) + " * closed form"
                          : "no single scalar fits");
    std::cout << "recipe ell=" << ell << " q=" << q << ": lambda=" << cmp.lambda << " over "
              << cmp.pairs_checked << " pairs\n";
    return rep.emit(out);
}

int run_cohomology(std::uint32_t ell, std::uint64_t q, const std::string& module_name,
                   std::uint32_t degree, std::uint32_t alpha, std::uint32_t beta,
                   const std::string& view_name, std::uint64_t budget, const std::string& out) {
    Report rep("cohomology", "tame-cochain-dimensions");
    rep.param("ell", ell);
    rep.param("q", q);
    rep.param("module", module_name);
    rep.param("degree", degree);
    rep.param("view", view_name);
    auto group = make_group(ell, q % ell);
    auto view = view_name == "tau" ? GroupView::tau_cyclic(group) : GroupView::full(group);
    auto module = module_by_name(module_name, group, alpha, beta);
    std::uint32_t dim = cohomology_dim(*view, *module, degree, budget);
    rep.doc["result"]["dim"] = dim;
    rep.check("dimension-computed", true,
              "h^" + std::to_string(degree) + " = " + std::to_string(dim));
    std::cout << "cohomology ell=" << ell << " q=" << q << " " << module_name << ": h^" << degree
              << " = " << dim << "\n";
    return rep.emit(out);
}

int run_lift(std::uint32_t ell, std::uint64_t q, std::uint32_t alpha, std::uint32_t beta,
             std::uint64_t seed, const std::string& out) {
    Report rep("lift", "dual-number-obstruction");
    rep.param("ell", ell);
    rep.param("q", q);
    rep.param("alpha", alpha);
    rep.param("beta", beta);
    rep.param("seed", seed);
    auto group = make_group(ell, q % ell);
    auto view = GroupView::full(group);
    ResidualFrobenius frob(ell, alpha, beta);
    SetLift base = teichmuller_lift(view, frob);
    Cochain base_obs = obstruction_cocycle(base);
    bool base_zero = base_obs.is_zero();

    auto ad = build_ad(group, frob, false);
    SplitMix64 rng{seed};
    Cochain x = Cochain::random(view, ad, 1, rng);
    SetLift pert = perturb_lift(base, x);
    Cochain d = obstruction_cocycle(pert);
    CocycleCheck chk = is_cocycle(d);
    AdjustResult adj = adjust_lift(pert);

    rep.doc["result"]["teichmuller_multiplicative"] = base_zero;
    rep.doc["result"]["perturbed_obstruction_is_cocycle"] = chk.ok;
    rep.doc["result"]["obstruction_vanishes_in_h2"] = adj.corrected.has_value();
    rep.check("teichmuller-multiplicative", base_zero, "canonical lift has zero defect");
    rep.check("obstruction-cocycle", chk.ok,
              std::to_string(chk.checked) + " triples" + (chk.exhaustive ? " (exhaustive)" : ""));
    rep.check("adjustment", adj.corrected.has_value(),
              adj.corrected ? "lift corrected to a homomorphism mod ell^2"
                            : "obstruction class is nonzero");
    std::cout << "lift ell=" << ell << " q=" << q << ": obstruction "
              << (adj.corrected ? "removed" : "persists") << "\n";
    return rep.emit(out);
}

int run_classify(const ProblemInstance& inst, TriState sha1, const std::string& out,
                 const json& params) {
    Report rep("classify", "obstruction-classification");
    rep.doc["params"] = params;
    ObstructionReport r = classify(inst, sha1);
    json local = json::object();
    for (const auto& [p, h] : r.local_h0) {
        json entry;
        if (h.dim.has_value())
            entry["dim"] = *h.dim;
        else
            entry["dim"] = nullptr;
        entry["known_nonzero"] = h.known_nonzero;
        entry["note"] = h.note;
        local[std::to_string(p)] = entry;
    }
    const char* cls = r.classification == Classification::Unobstructed        ? "unobstructed"
                      : r.classification == Classification::LocallyObstructed ? "locally-obstructed"
                      : r.classification == Classification::GloballyObstructed
                          ? "globally-obstructed"
                          : "unknown";
    const char* sha = sha1 == TriState::Yes ? "yes" : sha1 == TriState::No ? "no" : "unknown";
    rep.doc["result"]["standing_ok"] = r.standing.ok;
    rep.doc["result"]["standing_violations"] = r.standing.violations;
    rep.doc["result"]["local_h0"] = local;
    rep.doc["result"]["sha1_nonzero"] = sha;
    rep.doc["result"]["classification"] = cls;
    rep.doc["result"]["obstructed_primes"] = r.obstructed_primes;
    rep.doc["result"]["hom_h2_dim_lower_bound"] = r.hom_h2_dim_lower_bound;
    rep.doc["result"]["ring_descriptor"] = r.ring_descriptor;
    rep.doc["result"]["generator_tags"] = r.generator_tags;
    rep.doc["result"]["module"] = r.module_note;
    rep.check("standing-hypotheses", r.standing.ok, join(r.standing.violations));
    std::cout << "classify: " << cls << ", h2 bound " << r.hom_h2_dim_lower_bound << "\n";
    return rep.emit(out);
}

ProblemInstance instance_from_file(const std::string& path, TriState& sha1) {
    std::ifstream in(resolve_data_path(path));
    json doc;
    try {
        in >> doc;
    } catch (const json::exception& e) {
        throw data_error("instance file " + path + ": " + e.what());
    }
    if (!doc.is_object())
        throw data_error("instance file: top level must be an object");
    ProblemInstance inst;
    auto want = [&](const char* field) -> const json& {
        auto it = doc.find(field);
        if (it == doc.end())
            throw data_error(std::string("instance file: missing ") + field);
        return *it;
    };
    inst.N = want("N").get<std::uint64_t>();
    inst.ell = want("ell").get<std::uint32_t>();
    for (const auto& v : want("s_primes"))
        inst.s_primes.push_back(v.get<std::uint64_t>());
    if (auto it = doc.find("assume_global_h2_zero"); it != doc.end())
        inst.assume_global_h2_zero = it->get<bool>();
    if (auto it = doc.find("sha1_nonzero"); it != doc.end()) {
        std::string s = it->get<std::string>();
        sha1 = s == "yes" ? TriState::Yes : s == "no" ? TriState::No : TriState::Unknown;
    }
    for (const auto& jl : want("local")) {
        LocalType lt;
        std::string type = jl.at("type").get<std::string>();
        if (type == "steinberg")
            lt.kind = LocalTypeKind::Steinberg;
        else if (type == "supercuspidal")
            lt.kind = LocalTypeKind::Supercuspidal;
        else if (type == "principal-series")
            lt.kind = LocalTypeKind::PrincipalSeries;
        else if (type == "at-ell")
            lt.kind = LocalTypeKind::AtEll;
        else if (type == "levelraise")
            lt.kind = LocalTypeKind::LevelRaiseQ;
        else
            throw data_error("instance file: unknown local type " + type);
        lt.p = jl.at("p").get<std::uint64_t>();
        if (auto it = jl.find("alpha"); it != jl.end())
            lt.alpha = it->get<std::uint32_t>();
        if (auto it = jl.find("beta"); it != jl.end())
            lt.beta = it->get<std::uint32_t>();
        if (auto it = jl.find("a_ell_mod"); it != jl.end())
            lt.a_ell_mod = it->get<std::uint32_t>();
        if (auto it = jl.find("m_deg"); it != jl.end())
            lt.m_deg = it->get<std::uint64_t>();
        if (auto it = jl.find("is_congruence"); it != jl.end())
            lt.is_congruence = it->get<bool>();
        inst.local_types.push_back(lt);
    }
    return inst;
}

int run_congruence(const std::string& data, const std::string& label, std::uint32_t ell_max,
                   const std::string& out) {
    Report rep("congruence", "congruence-prime-scan");
    rep.param("data", data);
    rep.param("label", label);
    rep.param("ell_max", ell_max);
    LoadResult loaded = load_newforms(resolve_data_path(data));
    const Newform* f = nullptr;
    for (const auto& g : loaded.forms)
        if (g.label == label)
            f = &g;
    if (!f)
        throw data_error("no form labeled " + label + " in " + data);
    auto findings = strict_congruence_primes(*f, loaded.forms, ell_max);
    json jf = json::array();
    std::vector<std::uint32_t> primes;
    for (const auto& fd : findings) {
        jf.push_back({{"ell", fd.ell},
                      {"partner", fd.g_label},
                      {"checked_up_to", fd.checked_up_to}});
        if (primes.empty() || primes.back() != fd.ell)
            primes.push_back(fd.ell);
    }
    rep.doc["result"]["level"] = f->level;
    rep.doc["result"]["sturm_bound"] = sturm_bound(f->level, f->weight);
    rep.doc["result"]["findings"] = jf;
    rep.doc["result"]["strict_primes"] = primes;
    rep.doc["result"]["warnings"] = loaded.warnings;
    rep.check("data-loaded", true,
              std::to_string(loaded.forms.size()) + " forms, " +
                  std::to_string(loaded.warnings.size()) + " warnings");
    std::cout << "congruence " << label << ": " << findings.size() << " strict findings up to "
              << ell_max << "\n";
    return rep.emit(out);
}

int run_ars(std::uint64_t N, std::uint64_t m_deg, const std::string& out) {
    Report rep("ars", "degree-level-primes");
    rep.param("N", N);
    rep.param("m_deg", m_deg);
    ArsPrimes a = ars_congruence_primes(N, m_deg);
    rep.doc["result"]["full"] = a.full;
    rep.doc["result"]["refined"] = a.refined;
    rep.check("computed", true,
              std::to_string(a.full.size()) + " candidates, " + std::to_string(a.refined.size()) +
                  " after the degree refinement");
    std::cout << "ars N=" << N << " m_deg=" << m_deg << ": " << a.full.size() << " candidates\n";
    return rep.emit(out);
}

int run_defring(std::uint32_t ell, std::uint32_t K, std::uint64_t p, std::uint32_t degree,
                const std::string& out) {
    Report rep("defring", "one-relation-presentation");
    rep.param("ell", ell);
    rep.param("K", K);
    rep.param("p", p);
    rep.param("degree", degree);
    auto ring = TruncRing::make(ell, K, 4, degree);
    TruncPoly target = steinberg_target(ring, p);
    UnitMatch self = match_up_to_unit(target, target);

    MatrixOverTrunc adjF(ring), adjT(ring);
    adjF.e[0] = TruncPoly::constant(ring, p);
    adjF.e[1] = TruncPoly::variable(ring, 3);
    adjF.e[3] = TruncPoly::constant(ring, 1);
    adjT.e[0] = TruncPoly::constant(ring, 1);
    adjT.e[1] = TruncPoly::variable(ring, 1);
    adjT.e[3] = TruncPoly::constant(ring, 1);
    RelationIdeal adjusted = tame_relation_ideal(adjF, adjT, p);

    json jc = json::array();
    bool any_matched = false;
    for (const auto& cand : steinberg_candidates(ring, p)) {
        MatchReport m = steinberg_match(cand.rhoF, cand.rhoTau, p, {}, cand.description);
        json jg = json::array();
        for (const auto& g : m.generators)
            jg.push_back(poly_json(g));
        jc.push_back({{"candidate", m.candidate},
                      {"generators", jg},
                      {"matched", m.matched},
                      {"matched_forward", m.matched_forward},
                      {"matched_backward", m.matched_backward},
                      {"relabeling", m.relabeling}});
        any_matched = any_matched || m.matched;
    }
    rep.doc["result"]["target"] = poly_json(target);
    rep.doc["result"]["self_match"] = self.forward && self.backward;
    rep.doc["result"]["adjusted_pair_generators"] = adjusted.generators.size();
    rep.doc["result"]["candidates"] = jc;
    rep.doc["result"]["any_candidate_matched"] = any_matched;
    rep.check("target-self-match", self.forward && self.backward, "unit = 1 both ways");
    rep.check("adjusted-pair-relation", adjusted.generators.empty(),
              "matching-diagonal pair satisfies the tame relation exactly");
    std::cout << "defring ell=" << ell << " p=" << p << " D=" << degree << ": "
              << (any_matched ? "a candidate matched" : "no candidate matched") << "\n";
    return rep.emit(out);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"galdef: finite tame-quotient deformation obstruction calculator"};
    app.require_subcommand(1);

    std::string out;
    std::uint32_t ell = 5, alpha = 1, beta = 1, degree_opt = 1, K = 2, ell_max = 13;
    std::uint32_t a_ell = 0;
    std::uint64_t q = 2, p = 7, N = 11, m_deg = 1, seed = 1, budget = 40000000;
    std::uint32_t trunc_degree = 2;
    bool exhaustive = false, congruence_flag = false, levelraise = false, assume_h2 = false;
    std::string module_name = "trivial", view_name = "full", data_path, label, instance_path;
    std::string sha1_str = "unknown";

    auto add_out = [&](CLI::App* sub) { sub->add_option("--out", out, "write the JSON report here"); };

    auto* inv = app.add_subcommand("invariants", "level-raise invariant line of the twisted adjoint");
    inv->add_option("--ell", ell)->required();
    inv->add_option("--q", q)->required();
    inv->add_option("--alpha", alpha)->required();
    inv->add_option("--beta", beta)->required();
    add_out(inv);

    auto* coc = app.add_subcommand("cocycle", "closed-form exponent table and its cocycle identity");
    coc->add_option("--ell", ell)->required();
    coc->add_option("--q", q)->required();
    coc->add_flag("--exhaustive", exhaustive, "force exhaustive triple scan");
    coc->add_option("--seed", seed);
    add_out(coc);

    auto* rec = app.add_subcommand("recipe", "lattice construction of the twisted class");
    rec->add_option("--ell", ell)->required();
    rec->add_option("--q", q)->required();
    add_out(rec);

    auto* coh = app.add_subcommand("cohomology", "cochain complex dimensions");
    coh->add_option("--ell", ell)->required();
    coh->add_option("--q", q)->required();
    coh->add_option("--module", module_name, "trivial|mu|ad0|ad0-twisted|ad|ad-twisted");
    coh->add_option("--degree", degree_opt)->required();
    coh->add_option("--alpha", alpha);
    coh->add_option("--beta", beta);
    coh->add_option("--view", view_name, "full|tau");
    coh->add_option("--budget", budget, "dense entry budget");
    add_out(coh);

    auto* lif = app.add_subcommand("lift", "mod ell^2 lifting demo");
    lif->add_option("--ell", ell)->required();
    lif->add_option("--q", q)->required();
    lif->add_option("--alpha", alpha)->required();
    lif->add_option("--beta", beta)->required();
    lif->add_option("--seed", seed);
    add_out(lif);

    auto* cri = app.add_subcommand("criteria", "local vanishing criteria");
    cri->require_subcommand(1);
    auto* sc = cri->add_subcommand("supercuspidal", "H0 vanishing away from ell");
    sc->add_option("--p", p)->required();
    sc->add_option("--ell", ell)->required();
    add_out(sc);
    auto* ps = cri->add_subcommand("principal-series", "H0 nonvanishing test");
    ps->add_option("--p", p)->required();
    ps->add_option("--ell", ell)->required();
    add_out(ps);
    auto* st = cri->add_subcommand("steinberg", "H0 dimension at a Steinberg place");
    st->add_option("--p", p)->required();
    st->add_option("--ell", ell)->required();
    add_out(st);
    auto* ae = cri->add_subcommand("at-ell", "vanishing criterion at ell");
    ae->add_option("--ell", ell)->required();
    ae->add_option("--a-ell", a_ell)->required();
    ae->add_option("--m-deg", m_deg)->required();
    ae->add_flag("--congruence", congruence_flag, "ell is a congruence prime");
    add_out(ae);
    auto* sd = cri->add_subcommand("standing", "standing hypotheses on (N, ell)");
    sd->add_option("--N", N)->required();
    sd->add_option("--ell", ell)->required();
    add_out(sd);

    auto* cls = app.add_subcommand("classify", "assemble local criteria into a classification");
    cls->add_option("--instance", instance_path, "problem instance JSON file");
    cls->add_flag("--levelraise", levelraise, "build a level-raise instance from flags");
    cls->add_option("--ell", ell);
    cls->add_option("--q", q);
    cls->add_option("--alpha", alpha);
    cls->add_option("--beta", beta);
    cls->add_option("--N", N);
    cls->add_flag("--assume-h2-vanishing", assume_h2, "assert the unaugmented global H2 is zero");
    cls->add_option("--sha1", sha1_str, "yes|no|unknown");
    add_out(cls);

    auto* con = app.add_subcommand("congruence", "strict congruence prime scan");
    con->add_option("--data", data_path)->required();
    con->add_option("--label", label)->required();
    con->add_option("--ell-max", ell_max);
    add_out(con);

    auto* ars = app.add_subcommand("ars", "congruence-prime candidates from level and degree");
    ars->add_option("--N", N)->required();
    ars->add_option("--m-deg", m_deg)->required();
    add_out(ars);

    auto* dfr = app.add_subcommand("defring", "one-relation presentation experiments");
    dfr->add_option("--ell", ell);
    dfr->add_option("--K", K, "coefficient precision ell^K");
    dfr->add_option("--p", p)->required();
    dfr->add_option("--degree", trunc_degree, "truncation degree");
    add_out(dfr);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (inv->parsed())
            return run_invariants(ell, q, alpha, beta, out);
        if (coc->parsed())
            return run_cocycle(ell, q, exhaustive, seed, out);
        if (rec->parsed())
            return run_recipe_cmd(ell, q, out);
        if (coh->parsed())
            return run_cohomology(ell, q, module_name, degree_opt, alpha, beta, view_name, budget,
                                  out);
        if (lif->parsed())
            return run_lift(ell, q, alpha, beta, seed, out);
        if (cri->parsed()) {
            if (sc->parsed()) {
                Report rep("criteria-supercuspidal", "local-vanishing-criteria");
                rep.param("p", p);
                rep.param("ell", ell);
                rep.doc["result"]["vanishes"] = supercuspidal_vanishes(p, ell);
                std::cout << "supercuspidal p=" << p << " ell=" << ell << ": vanishes="
                          << (supercuspidal_vanishes(p, ell) ? "yes" : "no") << "\n";
                return rep.emit(out);
            }
            if (ps->parsed()) {
                Report rep("criteria-principal-series", "local-vanishing-criteria");
                rep.param("p", p);
                rep.param("ell", ell);
                rep.doc["result"]["nonzero"] = principal_series_nonzero(p, ell);
                std::cout << "principal series p=" << p << " ell=" << ell << ": nonzero="
                          << (principal_series_nonzero(p, ell) ? "yes" : "no") << "\n";
                return rep.emit(out);
            }
            if (st->parsed()) {
                Report rep("criteria-steinberg", "local-vanishing-criteria");
                rep.param("p", p);
                rep.param("ell", ell);
                rep.doc["result"]["h0_dim"] = steinberg_h0(ell, p);
                std::cout << "steinberg p=" << p << " ell=" << ell << ": h0="
                          << steinberg_h0(ell, p) << "\n";
                return rep.emit(out);
            }
            if (ae->parsed()) {
                Report rep("criteria-at-ell", "local-vanishing-criteria");
                rep.param("ell", ell);
                rep.param("a_ell", a_ell);
                rep.param("m_deg", m_deg);
                rep.param("congruence", congruence_flag);
                bool v = ell_invariant_vanishes(a_ell, m_deg, ell, congruence_flag) ==
                         EllInvariant::Vanishes;
                rep.doc["result"]["conclusion"] = v ? "vanishes" : "inapplicable";
                std::cout << "at-ell: " << (v ? "vanishes" : "inapplicable") << "\n";
                return rep.emit(out);
            }
            Report rep("criteria-standing", "local-vanishing-criteria");
            rep.param("N", N);
            rep.param("ell", ell);
            StandingCheck s = check_standing(N, ell);
            rep.doc["result"]["ok"] = s.ok;
            rep.doc["result"]["violations"] = s.violations;
            rep.check("standing-hypotheses", s.ok, join(s.violations));
            std::cout << "standing N=" << N << " ell=" << ell << ": " << (s.ok ? "ok" : "violated")
                      << "\n";
            return rep.emit(out);
        }
        if (cls->parsed()) {
            TriState sha1 = sha1_str == "yes" ? TriState::Yes
                            : sha1_str == "no" ? TriState::No
                                               : TriState::Unknown;
            json params;
            ProblemInstance inst;
            if (!instance_path.empty()) {
                inst = instance_from_file(instance_path, sha1);
                params["instance"] = instance_path;
            } else if (levelraise) {
                inst.N = N;
                inst.ell = ell;
                inst.s_primes = prime_divisors(N);
                inst.s_primes.push_back(ell);
                inst.s_primes.push_back(q);
                inst.assume_global_h2_zero = assume_h2;
                LocalType lt;
                lt.kind = LocalTypeKind::LevelRaiseQ;
                lt.p = q;
                lt.alpha = alpha;
                lt.beta = beta;
                inst.local_types.push_back(lt);
                params = {{"N", N},     {"ell", ell},     {"q", q},
                          {"alpha", alpha}, {"beta", beta}, {"assume_h2_vanishing", assume_h2},
                          {"sha1", sha1_str}};
            } else {
                throw invalid_parameters("classify needs --instance or --levelraise");
            }
            return run_classify(inst, sha1, out, params);
        }
        if (con->parsed())
            return run_congruence(data_path, label, ell_max, out);
        if (ars->parsed())
            return run_ars(N, m_deg, out);
        if (dfr->parsed())
            return run_defring(ell, K, p, trunc_degree, out);
        std::cerr << "error: no subcommand\n";
        return 2;
    } catch (const invalid_parameters& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const too_large& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const data_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
