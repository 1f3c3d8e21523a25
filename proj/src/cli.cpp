#include "parhiggs/cli.hpp"

#include "parhiggs/error.hpp"
#include "parhiggs/json_io.hpp"

#include <CLI11.hpp>
#include <openssl/evp.h>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

namespace parhiggs::cli {

namespace {

using io::json;
using io::to_json;

struct Context {
    std::string material;  // hashed into the input digest
    std::string current_input;
    bool stdin_used = false;
};

struct Outcome {
    bool verdict = false;
    json result;
};

// Tags an InputError with the option it came from.
struct OptionError : InputError {
    OptionError(const InputError& e, std::string opt) : InputError(e.what(), e.where()), option(std::move(opt)) {}
    std::string option;
};

std::string sha256_hex(const std::string& s) {
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(s.data(), s.size(), md, &len, EVP_sha256(), nullptr) != 1)
        throw std::runtime_error("SHA-256 failed");
    std::ostringstream os;
    for (unsigned int i = 0; i < len; ++i) os << std::hex << std::setw(2) << std::setfill('0') << int(md[i]);
    return os.str();
}

std::string read_text(Context& ctx, const std::string& path, const std::string& option) {
    std::string text;
    if (path == "-") {
        if (ctx.stdin_used) throw OptionError(InputError("standard input can only be read once"), option);
        ctx.stdin_used = true;
        text.assign(std::istreambuf_iterator<char>(std::cin), {});
    } else {
        std::ifstream f(path, std::ios::binary);
        if (!f) throw OptionError(InputError("cannot read " + path), option);
        text.assign(std::istreambuf_iterator<char>(f), {});
    }
    ctx.material += option;
    ctx.material.push_back('\0');
    ctx.material += text;
    ctx.material.push_back('\0');
    return text;
}

json parse_json(const std::string& text, const std::string& option) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw OptionError(InputError(std::string("malformed JSON: ") + e.what()), option);
    }
}

// Runs a parser, attributing InputErrors to `option`.
template <class F>
auto from_option(const std::string& option, F&& f) -> decltype(f()) {
    try {
        return f();
    } catch (const OptionError&) {
        throw;
    } catch (const InputError& e) {
        throw OptionError(e, option);
    }
}

json load(Context& ctx, const std::string& path, const std::string& option) {
    return parse_json(read_text(ctx, path, option), option);
}

Rational rational_arg(const std::string& s, const std::string& option) {
    return from_option(option, [&] { return Rational::parse(s); });
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else if (c != ' ') {
            cur.push_back(c);
        }
    }
    out.push_back(cur);
    return out;
}

std::vector<long> long_list(const std::string& s, const std::string& option) {
    std::vector<long> out;
    if (s.empty()) return out;
    for (const auto& t : split(s, ',')) {
        try {
            size_t used = 0;
            long v = std::stol(t, &used);
            if (used != t.size()) throw std::invalid_argument(t);
            out.push_back(v);
        } catch (const std::exception&) {
            throw OptionError(InputError("expected a comma-separated list of integers"), option);
        }
    }
    return out;
}

std::vector<Rational> rational_list(const std::string& s, const std::string& option) {
    std::vector<Rational> out;
    for (const auto& t : split(s, ',')) out.push_back(rational_arg(t, option));
    return out;
}

json bool_map(const std::vector<BoundReport>& bs, bool& all) {
    json a = json::array();
    for (const auto& b : bs) {
        all = all && b.holds;
        a.push_back(to_json(b));
    }
    return a;
}

// ---- subcommands ----

struct PardegArgs {
    std::string bundle, hom;
};

Outcome cmd_pardeg(Context& ctx, const PardegArgs& a) {
    auto e = from_option("--bundle", [&] { return io::bundle_from(load(ctx, a.bundle, "--bundle")); });
    json r;
    r["bundle"] = to_json(e);
    r["rank"] = e.rank();
    r["degree"] = e.degree();
    r["par_deg"] = to_json(par_deg(e));
    if (e.rank() > 0) r["par_slope"] = to_json(par_slope(e));
    r["weights"] = to_json(e.weight_system());
    r["underlying"] = to_json(e.underlying());
    r["cohomology"] = to_json(cohomology(e.underlying()));
    auto tw = twist_log(e, e.punctures());
    r["twist_log"] = {{"underlying", to_json(tw.underlying())}, {"cohomology", to_json(cohomology(tw.underlying()))}};
    bool ok = pardeg_bounds_check(e);
    r["bounds_check"] = ok;
    if (!a.hom.empty()) {
        auto f = from_option("--hom", [&] { return io::bundle_from(load(ctx, a.hom, "--hom")); });
        if (f.punctures() != e.punctures()) throw OptionError(InputError("puncture counts differ", "/punctures"), "--hom");
        json h;
        h["par_deg_hom"] = to_json(par_deg_hom(e, f));
        std::string regime = hom_split_regime(e, f);
        h["regime"] = regime.empty() ? json(nullptr) : json(regime);
        if (!regime.empty()) {
            auto hs = hom_split(e, f);
            h["split"] = to_json(hs);
            h["split_par_deg"] = to_json(par_deg(hs));
            h["cohomology"] = to_json(cohomology(hs.underlying()));
        }
        r["hom"] = h;
    }
    return {ok, r};
}

struct GenericityArgs {
    std::string weights, classes, criterion = "selection";
};

Outcome cmd_genericity(Context& ctx, const GenericityArgs& a) {
    if (a.weights.empty() == a.classes.empty())
        throw OptionError(InputError("give exactly one of --weights and --classes"), "--weights");
    WeightSystem w = a.weights.empty()
        ? from_option("--classes", [&] {
              auto cs = io::classes_from(load(ctx, a.classes, "--classes"));
              std::vector<std::vector<WeightEntry>> ps;
              for (const auto& c : cs) ps.push_back(class_to_weights(c));
              return WeightSystem(cs.front().n(), ps);
          })
        : from_option("--weights", [&] { return io::weights_from(load(ctx, a.weights, "--weights")); });
    json r;
    r["weights"] = to_json(w);
    bool distinct = check_distinct(w);
    r["distinct"] = distinct;
    auto ss = check_generic_subset_sum(w);
    r["subset_sum"] = to_json(ss);
    if (a.criterion != "selection" && a.criterion != "subset-sum")
        throw OptionError(InputError("--criterion must be selection or subset-sum"), "--criterion");
    r["criterion"] = a.criterion;
    bool verdict = ss.generic;
    if (distinct) {
        auto sel = check_generic_selection(w);
        r["selection"] = to_json(sel);
        if (a.criterion == "selection") verdict = sel.generic;
    } else {
        r["selection"] = nullptr;
        if (a.criterion == "selection") verdict = false;
    }
    return {verdict, r};
}

struct ExampleArgs {
    std::string example;
    int n = 0;
    long a = -1;
    std::string eps, eps_vec;
};

Example62Params params_62(const ExampleArgs& x) {
    if (x.n == 0) throw OptionError(InputError("--n is required"), "--n");
    if (x.a < 0) throw OptionError(InputError("--a is required and must be non-negative"), "--a");
    Example62Params p = from_option("--n", [&] { return suggest_example62_params(x.n, x.a); });
    if (!x.eps.empty()) p.eps = rational_arg(x.eps, "--eps");
    if (!x.eps_vec.empty()) p.eps_vec = rational_list(x.eps_vec, "--eps-vec");
    from_option("--eps", [&] { validate(p); });
    return p;
}

Rational eps_69(const ExampleArgs& x) {
    if (x.eps.empty()) throw OptionError(InputError("--eps is required"), "--eps");
    return rational_arg(x.eps, "--eps");
}

bool is_o_minus_one(const SplitBundle& b, long rank) {
    return b == SplitBundle(std::vector<long>(rank, -1));
}

Outcome construct(Context&, const ExampleArgs& x, bool stability_only) {
    json r;
    if (x.example == "6.2") {
        auto p = params_62(x);
        auto ex = from_option("--eps", [&] { return build_example_62(p); });
        auto c = certify_example_62(ex);
        r["params"] = to_json(p);
        r["lemma"] = lemma_6_1_check(p.n, p.a, p.eps);
        r["punctures"] = ex.d;
        r["stability"] = to_json(c.stability);
        if (stability_only) return {c.stability.stable, r};
        r["model"] = to_json(ex.model);
        r["weights"] = to_json(ex.weights);
        r["genericity"] = {{"distinct", check_distinct(ex.weights)}};
        if (check_distinct(ex.weights)) r["genericity"]["selection"] = to_json(check_generic_selection(ex.weights));
        r["certificate"] = to_json(c);
        bool hom_ok = is_o_minus_one(c.hom_underlying, p.n - 1);
        r["hom_is_O(-1)^(n-1)"] = hom_ok;
        bool v = c.total_par_deg == 0 && c.stability.stable && c.minimal_energy.minimal_energy && hom_ok;
        return {v, r};
    }
    if (x.example == "6.9") {
        Rational eps = eps_69(x);
        auto m = from_option("--eps", [&] { return build_example_69(eps); });
        auto c = certify_example_69(m, eps);
        r["eps"] = to_json(eps);
        r["stability"] = to_json(c.stability);
        if (stability_only) return {c.stability.stable, r};
        r["model"] = to_json(m);
        r["certificate"] = to_json(c);
        r["gw_certificate"] = to_json(gw_certificate(m));
        return {c.stability.stable && c.minimal_energy.minimal_energy, r};
    }
    throw OptionError(InputError("unknown example \"" + x.example + "\" (expected 6.2 or 6.9)"), "--example");
}

struct StabilityArgs {
    std::string bundle;
    ExampleArgs ex;
};

Outcome cmd_stability(Context& ctx, const StabilityArgs& a) {
    if (a.bundle.empty() == a.ex.example.empty())
        throw OptionError(InputError("give exactly one of --bundle and --example"), "--bundle");
    if (!a.ex.example.empty()) return construct(ctx, a.ex, true);
    auto e = from_option("--bundle", [&] { return io::bundle_from(load(ctx, a.bundle, "--bundle")); });
    if (e.rank() == 0) throw OptionError(InputError("bundle has rank zero", "/summands"), "--bundle");
    json r, es = json::array();
    Rational mu = par_slope(e);
    bool stable = true;
    for (int k = 1; k < e.rank(); ++k) {
        Rational bound = max_subbundle_pardeg(e, k);
        std::string kind = "upper_bound";
        if (k == 1 && e.flag_mode() == FlagMode::generic) {
            bound = min(bound, max_line_subbundle_pardeg_generic(e));
            kind = "exact";
        }
        Rational margin = bound - Rational(k) * mu;
        stable = stable && margin < 0;
        es.push_back({{"rank", k}, {"max_par_deg", to_json(bound)}, {"kind", kind}, {"margin", to_json(margin)}});
    }
    r["par_slope"] = to_json(mu);
    r["subbundles"] = es;
    r["stable"] = stable;
    return {stable, r};
}

struct ModelArgs {
    std::string model;
};

Outcome cmd_minimal_energy(Context& ctx, const ModelArgs& a) {
    auto m = from_option("--model", [&] { return io::model_from(load(ctx, a.model, "--model")); });
    auto rep = minimal_energy_check(m);
    json r, ap = json::array();
    for (const auto& p : adjoint_pieces(m)) ap.push_back(to_json(p));
    r["report"] = to_json(rep);
    r["adjoint_pieces"] = ap;
    return {rep.minimal_energy, r};
}

struct BoundsArgs {
    bool theorem = false, main = false, slack = false, v1 = false, genus = false;
    std::string model;
    int n = 0, r = 0, g = -1;
    long d = -1, hom_deg = 0, hom_rank = 1;
    std::string rank_v, coker, ranks, hom_par_deg;
};

void need(bool ok, const std::string& opt) {
    if (!ok) throw OptionError(InputError(opt + " is required for this bound"), opt);
}

Outcome cmd_bounds(Context& ctx, const BoundsArgs& a) {
    int modes = a.theorem + a.main + a.slack + a.v1 + a.genus + !a.model.empty();
    if (modes != 1)
        throw OptionError(InputError("choose exactly one of --theorem, --main, --slack, --v1, --genus, --model"),
                          "--theorem");
    json r;
    if (a.theorem) {
        need(a.n > 0, "--n");
        need(a.r > 0, "--r");
        auto t = from_option("--r", [&] { return theorem_bound(a.n, a.r); });
        r["theorem"] = to_json(t);
        return {t.holds, r};
    }
    if (a.main || a.slack) {
        need(a.r > 0, "--r");
        need(a.d >= 0, "--d");
        auto rv = long_list(a.rank_v, "--rank-v");
        BoundReport b = a.main ? from_option("--coker", [&] {
            return main_bound(rv, long_list(a.coker, "--coker"), a.r, a.d);
        })
                               : from_option("--rank-v", [&] { return main_bound_at_slack(rv, a.r, a.d); });
        r["bound"] = to_json(b);
        return {b.holds, r};
    }
    if (a.v1) {
        need(a.r > 0, "--r");
        need(a.d >= 0, "--d");
        auto ranks = long_list(a.ranks, "--ranks");
        auto v = from_option("--ranks", [&] { return pardeg_V1_lower_bound(ranks, a.r, a.d); });
        r["pardeg_v1_lower"] = to_json(v.pardeg_v1_lower);
        r["deg_top"] = v.deg_top;
        return {true, r};
    }
    if (a.genus) {
        need(a.g >= 0, "--g");
        need(!a.hom_par_deg.empty(), "--hom-par-deg");
        Rational h = rational_arg(a.hom_par_deg, "--hom-par-deg");
        auto v = from_option("--g", [&] { return positive_genus_obstruction(a.g, h, a.hom_deg, a.hom_rank); });
        r["obstructed"] = v.obstructed;
        r["reason"] = v.reason;
        return {v.obstructed, r};
    }
    auto m = from_option("--model", [&] { return io::model_from(load(ctx, a.model, "--model")); });
    bool all = true;
    r["coker_degree_bounds"] = bool_map(from_option("--model", [&] { return coker_degree_bounds(m); }), all);
    r["rank_defect_bounds"] = bool_map(from_option("--model", [&] { return rank_defect_bound(m); }), all);
    return {all, r};
}

struct DsArgs {
    int n = 0;
    std::string classes, rhs = "degree";
    bool diagnostic = false;
};

Outcome cmd_ds_exists(Context& ctx, const DsArgs& a) {
    auto cs = from_option("--classes", [&] { return io::classes_from(load(ctx, a.classes, "--classes")); });
    if (cs.empty()) throw OptionError(InputError("need at least one conjugacy class", "/classes"), "--classes");
    if (a.n != 0 && cs.front().n() != a.n)
        throw OptionError(InputError("classes have rank " + std::to_string(cs.front().n())), "--n");
    ExistenceOptions opt;
    if (a.rhs == "punctures") opt.rhs = InequalityRhs::puncture_count;
    else if (a.rhs != "degree") throw OptionError(InputError("--rhs must be degree or punctures"), "--rhs");
    opt.diagnostic = a.diagnostic;
    auto v = from_option("--classes", [&] { return su_existence(cs, opt); });
    json r;
    r["classes"] = to_json(cs)["classes"];
    r["rhs"] = a.rhs;
    r["verdict"] = to_json(v);
    return {v.exists, r};
}

struct GwArgs {
    int k = 0, n = 0, degree = 0;
    std::string classes;
};

Outcome cmd_gw(Context& ctx, const GwArgs& a) {
    json j;
    auto first = a.classes.find_first_not_of(' ');
    if (first != std::string::npos && a.classes[first] == '[') {
        ctx.material += "--classes";
        ctx.material.push_back('\0');
        ctx.material += a.classes;
        j = parse_json("[" + a.classes + "]", "--classes");
        if (j.size() == 1 && !j[0].empty() && j[0][0].is_array()) j = j[0];
    } else {
        j = load(ctx, a.classes, "--classes");
        if (j.is_object() && j.contains("classes")) j = j["classes"];
    }
    GWQuery q;
    q.k = a.k;
    q.n = a.n;
    q.degree = a.degree;
    if (!j.is_array()) throw OptionError(InputError("expected a list of partitions"), "--classes");
    for (size_t i = 0; i < j.size(); ++i)
        q.classes.push_back(from_option("--classes", [&] { return io::partition_from(j[i], "/" + std::to_string(i)); }));
    auto res = from_option("--classes", [&] { return gw_invariant(q); });
    json r;
    r["query"] = to_json(q);
    r["value"] = res.value;
    r["dimension_ok"] = res.dimension_ok;
    return {true, r};
}

struct GwCertArgs {
    std::string model, rotation;
    ExampleArgs ex;
};

Outcome cmd_gw_cert(Context& ctx, const GwCertArgs& a) {
    if (a.model.empty() == a.ex.example.empty())
        throw OptionError(InputError("give exactly one of --model and --example"), "--model");
    std::optional<GradedHiggsModel> m;
    if (!a.model.empty()) {
        m = from_option("--model", [&] { return io::model_from(load(ctx, a.model, "--model")); });
    } else {
        if (a.ex.example != "6.9") throw OptionError(InputError("only example 6.9 has a GW certificate"), "--example");
        Rational eps = eps_69(a.ex);
        m = from_option("--eps", [&] { return build_example_69(eps); });
    }
    std::optional<std::vector<long>> rot;
    if (!a.rotation.empty()) rot = long_list(a.rotation, "--rotation");
    auto c = from_option(a.model.empty() ? "--example" : "--model", [&] { return gw_certificate(*m, rot); });
    json r;
    r["certificate"] = to_json(c);
    return {c.invariant != 0 && c.inequality_violated, r};
}

struct RigidityArgs {
    int n = 0;
    std::string dims, multiplicities;
};

Outcome cmd_rigidity(Context&, const RigidityArgs& a) {
    if (a.dims.empty() == a.multiplicities.empty())
        throw OptionError(InputError("give exactly one of --dims and --multiplicities"), "--dims");
    std::vector<long> dims;
    if (!a.dims.empty()) {
        dims = long_list(a.dims, "--dims");
    } else {
        for (const auto& block : split(a.multiplicities, ';')) {
            auto mult = long_list(block, "--multiplicities");
            long total = 0;
            for (long m : mult) total += m;
            if (total != a.n)
                throw OptionError(InputError("multiplicities must sum to the rank"), "--multiplicities");
            dims.push_back(from_option("--multiplicities", [&] { return centralizer_dim(mult); }));
        }
    }
    bool rigid = from_option("--n", [&] { return katz_rigidity(a.n, dims); });
    json r;
    r["n"] = a.n;
    r["centralizer_dims"] = dims;
    r["lhs"] = katz_lhs(a.n, dims);
    r["rigid"] = rigid;
    return {rigid, r};
}

int run_batch(const std::vector<std::string>& argv, const std::string& manifest, Context& ctx, json& report,
              std::ostream& err) {
    json m = load(ctx, manifest, "--manifest");
    from_option("--manifest", [&] { io::check_schema(m); });
    if (!m.is_object() || !m.contains("commands") || !m["commands"].is_array())
        throw OptionError(InputError("manifest needs a \"commands\" list", "/commands"), "--manifest");
    json results = json::array();
    int worst = 0;
    long counts[3] = {0, 0, 0};
    for (size_t i = 0; i < m["commands"].size(); ++i) {
        const json& c = m["commands"][i];
        json entry;
        int code = 2;
        std::vector<std::string> sub;
        bool ok = c.is_array() && !c.empty();
        if (ok)
            for (const auto& s : c) ok = ok && s.is_string();
        if (ok)
            for (const auto& s : c) sub.push_back(s.get<std::string>());
        if (!ok) {
            entry["argv"] = c;
            entry["report"] = {{"error", {{"message", "command must be a non-empty list of strings"},
                                          {"pointer", "/commands/" + std::to_string(i)}}}};
        } else if (sub.front() == "batch") {
            entry["argv"] = sub;
            entry["report"] = {{"error", {{"message", "batch manifests cannot nest"},
                                          {"pointer", "/commands/" + std::to_string(i) + "/0"}}}};
        } else {
            std::ostringstream os;
            code = run(sub, os, err);
            entry["argv"] = sub;
            entry["report"] = json::parse(os.str());
        }
        entry["exit"] = code;
        counts[code]++;
        worst = code == 2 ? 2 : std::max(worst, code);
        results.push_back(entry);
    }
    (void)argv;
    report["results"] = results;
    report["summary"] = {{"total", results.size()}, {"true", counts[0]}, {"false", counts[1]}, {"error", counts[2]}};
    return worst;
}

}  // namespace

int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
    auto t0 = std::chrono::steady_clock::now();
    CLI::App app{"Exact computations for parabolic Higgs bundles on the projective line", "parhiggs"};
    app.require_subcommand(1);
    app.fallthrough();
    bool timing = false;
    app.add_flag("--timing", timing, "Add wall time to the report");

    PardegArgs pa;
    auto* s_pardeg = app.add_subcommand("pardeg", "Parabolic degree, slope, cohomology and Hom of split bundles");
    s_pardeg->add_option("--bundle", pa.bundle, "Bundle JSON file or - for stdin")->required();
    s_pardeg->add_option("--hom", pa.hom, "Second bundle F for Hom(E, F)");

    GenericityArgs ga;
    auto* s_gen = app.add_subcommand("genericity", "Distinctness and genericity of parabolic weights");
    s_gen->add_option("--weights", ga.weights, "Weight system JSON");
    s_gen->add_option("--classes", ga.classes, "SU(n) conjugacy classes JSON");
    s_gen->add_option("--criterion", ga.criterion, "selection (default, needs distinct weights) or subset-sum");

    auto add_example = [](CLI::App* s, ExampleArgs& x) {
        s->add_option("--example", x.example, "6.2 or 6.9");
        s->add_option("--n", x.n, "Rank");
        s->add_option("--a", x.a, "Degree parameter a >= 0");
        s->add_option("--eps", x.eps, "Rational eps");
        s->add_option("--eps-vec", x.eps_vec, "Comma-separated eps_i, strictly increasing, sum zero");
    };

    StabilityArgs sa;
    auto* s_stab = app.add_subcommand("stability", "Stability certificate");
    s_stab->add_option("--bundle", sa.bundle, "Split bundle JSON (no Higgs field)");
    add_example(s_stab, sa.ex);

    ModelArgs ma;
    auto* s_me = app.add_subcommand("minimal-energy", "Minimal-energy check of a graded Higgs model");
    s_me->add_option("--model", ma.model, "Model JSON")->required();

    BoundsArgs ba;
    auto* s_b = app.add_subcommand("bounds", "Rank and degree bounds");
    s_b->add_flag("--theorem", ba.theorem, "Rank bound chain for (n, r)");
    s_b->add_flag("--main", ba.main, "Main bound from ranks of V^k and coker");
    s_b->add_flag("--slack", ba.slack, "Main bound at the rank-defect slack");
    s_b->add_flag("--v1", ba.v1, "Lower bound for par_deg V^1");
    s_b->add_flag("--genus", ba.genus, "Positive-genus obstruction");
    s_b->add_option("--model", ba.model, "Model JSON: coker degree and rank defect bounds");
    s_b->add_option("--n", ba.n, "Rank");
    s_b->add_option("--r", ba.r, "Number of graded pieces");
    s_b->add_option("--d", ba.d, "Number of punctures");
    s_b->add_option("--g", ba.g, "Genus");
    s_b->add_option("--rank-v", ba.rank_v, "Ranks of V^1..V^{r-1}");
    s_b->add_option("--coker", ba.coker, "Ranks of coker θ_k, k = 2..r-1");
    s_b->add_option("--ranks", ba.ranks, "Ranks of V^2..V^{r-1}");
    s_b->add_option("--hom-par-deg", ba.hom_par_deg, "par_deg Hom(E^r, E^1)");
    s_b->add_option("--hom-deg", ba.hom_deg, "deg Hom(E^r, E^1)");
    s_b->add_option("--hom-rank", ba.hom_rank, "rank Hom(E^r, E^1)");

    ExampleArgs ca;
    auto* s_con = app.add_subcommand("construct", "Build and certify a named example");
    add_example(s_con, ca);
    s_con->get_option("--example")->required();

    DsArgs da;
    auto* s_ds = app.add_subcommand("ds-exists", "Multiplicative Deligne-Simpson existence for SU(n)");
    s_ds->add_option("--n", da.n, "Rank");
    s_ds->add_option("--classes", da.classes, "Conjugacy classes JSON")->required();
    s_ds->add_option("--rhs", da.rhs, "degree (default) or punctures");
    s_ds->add_flag("--diagnostic", da.diagnostic, "Also report failing tuples with invariant > 1");

    GwArgs wa;
    auto* s_gw = app.add_subcommand("gw", "Gromov-Witten invariant of Gr(k, n)");
    s_gw->add_option("--k", wa.k, "k")->required();
    s_gw->add_option("--n", wa.n, "n")->required();
    s_gw->add_option("--classes", wa.classes, "Partitions, e.g. \"[1],[1],[1],[1]\", or a JSON file")->required();
    s_gw->add_option("--degree", wa.degree, "Curve degree");

    GwCertArgs wc;
    auto* s_gwc = app.add_subcommand("gw-cert", "GW certificate for a destabilizing subsheaf");
    s_gwc->add_option("--model", wc.model, "Two-step model JSON");
    s_gwc->add_option("--rotation", wc.rotation, "Rotation per puncture");
    s_gwc->add_option("--example", wc.ex.example, "6.9");
    s_gwc->add_option("--eps", wc.ex.eps, "Rational eps");

    RigidityArgs ra;
    auto* s_rig = app.add_subcommand("rigidity", "Katz rigidity count");
    s_rig->add_option("--n", ra.n, "Rank")->required();
    s_rig->add_option("--dims", ra.dims, "Centralizer dimensions");
    s_rig->add_option("--multiplicities", ra.multiplicities, "Eigenvalue multiplicities, e.g. \"1,1;1,1;1,1\"");

    std::string manifest;
    auto* s_batch = app.add_subcommand("batch", "Run a manifest of commands");
    s_batch->add_option("--manifest", manifest, "Manifest JSON")->required();

    json report;
    report["schema"] = io::kSchema;
    report["command"] = argv;
    Context ctx;
    for (const auto& s : argv) {
        ctx.material += s;
        ctx.material.push_back('\0');
    }

    int code = 2;
    try {
        std::vector<std::string> rev(argv.rbegin(), argv.rend());
        app.parse(rev);
    } catch (const CLI::Success& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        report["error"] = {{"message", e.what()}, {"pointer", ""}, {"input", "argv"}};
        report["exit"] = 2;
        report["input_digest"] = sha256_hex(ctx.material);
        out << report.dump(2) << '\n';
        err << "parhiggs: " << e.what() << '\n';
        return 2;
    }

    try {
        Outcome o;
        std::string name = app.get_subcommands().front()->get_name();
        report["subcommand"] = name;
        if (name == "batch") {
            code = run_batch(argv, manifest, ctx, report, err);
        } else {
            if (name == "pardeg") o = cmd_pardeg(ctx, pa);
            else if (name == "genericity") o = cmd_genericity(ctx, ga);
            else if (name == "stability") o = cmd_stability(ctx, sa);
            else if (name == "minimal-energy") o = cmd_minimal_energy(ctx, ma);
            else if (name == "bounds") o = cmd_bounds(ctx, ba);
            else if (name == "construct") o = construct(ctx, ca, false);
            else if (name == "ds-exists") o = cmd_ds_exists(ctx, da);
            else if (name == "gw") o = cmd_gw(ctx, wa);
            else if (name == "gw-cert") o = cmd_gw_cert(ctx, wc);
            else if (name == "rigidity") o = cmd_rigidity(ctx, ra);
            report["verdict"] = o.verdict;
            report["result"] = o.result;
            code = o.verdict ? 0 : 1;
        }
    } catch (const OptionError& e) {
        report["error"] = {{"message", e.what()}, {"pointer", e.where()}, {"input", e.option}};
        err << "parhiggs: " << e.option << (e.where().empty() ? "" : " " + e.where()) << ": " << e.what() << '\n';
        code = 2;
    } catch (const InputError& e) {
        report["error"] = {{"message", e.what()}, {"pointer", e.where()}, {"input", ""}};
        err << "parhiggs: " << e.what() << '\n';
        code = 2;
    }
    report["exit"] = code;
    report["input_digest"] = sha256_hex(ctx.material);
    if (timing) {
        auto dt = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
        report["wall_time_ms"] = dt;
    }
    out << report.dump(2) << '\n';
    return code;
}

}  // namespace parhiggs::cli
