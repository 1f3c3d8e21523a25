#include "parhiggs/json_io.hpp"

#include "parhiggs/error.hpp"

namespace parhiggs::io {

namespace {

[[noreturn]] void fail(const std::string& msg, const std::string& ptr) {
    throw InputError(msg, ptr.empty() ? "/" : ptr);
}

// Re-throws a constructor failure at the pointer of the value being built.
template <class F>
auto located(const std::string& ptr, F&& f) -> decltype(f()) {
    try {
        return f();
    } catch (const InputError& e) {
        if (!e.where().empty()) throw;
        throw InputError(e.what(), ptr.empty() ? "/" : ptr);
    }
}

const json& member(const json& j, const char* key, const std::string& ptr) {
    if (!j.is_object()) fail("expected an object", ptr);
    auto it = j.find(key);
    if (it == j.end()) fail(std::string("missing field \"") + key + "\"", ptr);
    return *it;
}

long integer_from(const json& j, const std::string& ptr) {
    if (!j.is_number_integer()) fail("expected an integer", ptr);
    return j.get<long>();
}

std::vector<long> integers_from(const json& j, const std::string& ptr) {
    if (!j.is_array()) fail("expected an array of integers", ptr);
    std::vector<long> out;
    for (size_t i = 0; i < j.size(); ++i) out.push_back(integer_from(j[i], ptr + "/" + std::to_string(i)));
    return out;
}

json chain_json(const std::vector<ChainEntry>& c) {
    json a = json::array();
    for (const auto& e : c) a.push_back(to_json(e));
    return a;
}

json subsets_json(const std::vector<std::vector<int>>& s) {
    json a = json::array();
    for (const auto& I : s) a.push_back(I);
    return a;
}

}  // namespace

void check_schema(const json& j, const std::string& ptr) {
    if (j.is_object() && j.contains("schema") && j["schema"] != kSchema)
        fail("unsupported schema version", ptr + "/schema");
}

Rational rational_from(const json& j, const std::string& ptr) {
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (!j.is_string()) fail("expected a rational string \"p/q\"", ptr);
    return located(ptr, [&] { return Rational::parse(j.get<std::string>()); });
}

WeightSystem weights_from(const json& j, const std::string& ptr) {
    check_schema(j, ptr);
    int rank = static_cast<int>(integer_from(member(j, "rank", ptr), ptr + "/rank"));
    const json& ws = member(j, "weights", ptr);
    if (!ws.is_array()) fail("expected per-puncture weight lists", ptr + "/weights");
    std::vector<std::vector<Rational>> vals;
    for (size_t p = 0; p < ws.size(); ++p) {
        std::string pp = ptr + "/weights/" + std::to_string(p);
        if (!ws[p].is_array()) fail("expected a list of weights", pp);
        vals.emplace_back();
        for (size_t i = 0; i < ws[p].size(); ++i)
            vals.back().push_back(rational_from(ws[p][i], pp + "/" + std::to_string(i)));
    }
    return located(ptr, [&] { return WeightSystem::from_values(rank, vals); });
}

SplitBundle split_bundle_from(const json& j, const std::string& ptr) {
    return SplitBundle(integers_from(j, ptr));
}

SplitParabolicBundle bundle_from(const json& j, const std::string& ptr) {
    check_schema(j, ptr);
    int d = static_cast<int>(integer_from(member(j, "punctures", ptr), ptr + "/punctures"));
    FlagMode mode = FlagMode::adapted;
    if (j.contains("flag_mode")) {
        const json& f = j["flag_mode"];
        if (!f.is_string()) fail("expected \"adapted\" or \"generic\"", ptr + "/flag_mode");
        mode = located(ptr + "/flag_mode", [&] { return flag_mode_from_string(f.get<std::string>()); });
    }
    const json& ss = member(j, "summands", ptr);
    if (!ss.is_array()) fail("expected a list of summands", ptr + "/summands");
    std::vector<LineSummand> out;
    for (size_t i = 0; i < ss.size(); ++i) {
        std::string sp = ptr + "/summands/" + std::to_string(i);
        LineSummand s;
        s.degree = integer_from(member(ss[i], "deg", sp), sp + "/deg");
        const json& w = member(ss[i], "weights", sp);
        if (!w.is_array()) fail("expected a list of weights", sp + "/weights");
        if (static_cast<int>(w.size()) != d) fail("expected one weight per puncture", sp + "/weights");
        for (size_t k = 0; k < w.size(); ++k) {
            std::string wp = sp + "/weights/" + std::to_string(k);
            s.weights.push_back(rational_from(w[k], wp));
            if (s.weights.back() < 0 || s.weights.back() >= 1) fail("weight outside [0,1)", wp);
        }
        out.push_back(std::move(s));
    }
    return located(ptr, [&] { return SplitParabolicBundle(d, std::move(out), mode); });
}

GradedHiggsModel model_from(const json& j, const std::string& ptr) {
    check_schema(j, ptr);
    const json& ps = member(j, "pieces", ptr);
    if (!ps.is_array()) fail("expected a list of graded pieces", ptr + "/pieces");
    std::vector<SplitParabolicBundle> pieces;
    for (size_t i = 0; i < ps.size(); ++i) pieces.push_back(bundle_from(ps[i], ptr + "/pieces/" + std::to_string(i)));
    std::vector<long> hr = j.contains("higgs_rank") ? integers_from(j["higgs_rank"], ptr + "/higgs_rank")
                                                    : std::vector<long>{};
    if (j.contains("higgs_rank") && hr.size() + 1 != pieces.size())
        fail("expected one Higgs rank per step", ptr + "/higgs_rank");
    std::vector<std::optional<StepSplit>> steps;
    if (j.contains("ker_split") || j.contains("coker_split")) {
        const json& ks = member(j, "ker_split", ptr);
        const json& cs = member(j, "coker_split", ptr);
        if (!ks.is_array() || !cs.is_array() || ks.size() != cs.size())
            fail("ker_split and coker_split must be lists of equal length", ptr + "/ker_split");
        for (size_t i = 0; i < ks.size(); ++i) {
            std::string kp = ptr + "/ker_split/" + std::to_string(i);
            if (ks[i].is_null() != cs[i].is_null()) fail("ker and coker data must be given together", kp);
            if (ks[i].is_null()) steps.emplace_back();
            else steps.push_back(StepSplit{split_bundle_from(ks[i], kp),
                                           split_bundle_from(cs[i], ptr + "/coker_split/" + std::to_string(i))});
        }
    }
    std::map<int, StepSplit> adj;
    if (j.contains("adjoint_steps")) {
        const json& a = j["adjoint_steps"];
        if (!a.is_object()) fail("expected an object keyed by k", ptr + "/adjoint_steps");
        for (const auto& [key, val] : a.items()) {
            std::string ap = ptr + "/adjoint_steps/" + key;
            int k = 0;
            try {
                size_t used = 0;
                k = std::stoi(key, &used);
                if (used != key.size()) throw std::invalid_argument(key);
            } catch (const std::exception&) {
                fail("adjoint step key must be an integer", ap);
            }
            adj[k] = StepSplit{split_bundle_from(member(val, "ker", ap), ap + "/ker"),
                               split_bundle_from(member(val, "coker", ap), ap + "/coker")};
        }
    }
    return located(ptr, [&] { return GradedHiggsModel(std::move(pieces), hr, std::move(steps), std::move(adj)); });
}

std::vector<SUnClass> classes_from(const json& j, const std::string& ptr) {
    check_schema(j, ptr);
    const json* arr = &j;
    std::string base = ptr;
    if (j.is_object()) {
        arr = &member(j, "classes", ptr);
        base += "/classes";
    }
    if (!arr->is_array()) fail("expected a list of conjugacy classes", base);
    std::vector<SUnClass> out;
    for (size_t i = 0; i < arr->size(); ++i) {
        std::string cp = base + "/" + std::to_string(i);
        const json& c = (*arr)[i];
        if (!c.is_array()) fail("expected a list of eigenvalue logarithms", cp);
        std::vector<Rational> th;
        for (size_t k = 0; k < c.size(); ++k) th.push_back(rational_from(c[k], cp + "/" + std::to_string(k)));
        out.push_back(located(cp, [&] { return SUnClass(th); }));
    }
    return out;
}

Partition partition_from(const json& j, const std::string& ptr) {
    auto v = integers_from(j, ptr);
    for (size_t i = 0; i < v.size(); ++i)
        if (v[i] < 0 || (i > 0 && v[i] > v[i - 1])) fail("expected a non-increasing list of nonnegative parts", ptr + "/" + std::to_string(i));
    return Partition(v.begin(), v.end());
}

json to_json(const Rational& r) { return r.str(); }

json to_json(const WeightSystem& w) {
    json ps = json::array();
    for (int j = 0; j < w.puncture_count(); ++j) {
        json a = json::array();
        for (const auto& v : w.expanded(j)) a.push_back(v.str());
        ps.push_back(a);
    }
    return {{"rank", w.rank()}, {"weights", ps}};
}

json to_json(const SplitBundle& b) { return b.degrees(); }

json to_json(const SplitParabolicBundle& b) {
    json ss = json::array();
    for (const auto& s : b.summands()) {
        json w = json::array();
        for (const auto& x : s.weights) w.push_back(x.str());
        ss.push_back({{"deg", s.degree}, {"weights", w}});
    }
    return {{"flag_mode", to_string(b.flag_mode())}, {"punctures", b.punctures()}, {"summands", ss}};
}

json to_json(const GradedHiggsModel& m) {
    json ps = json::array();
    for (const auto& p : m.pieces()) ps.push_back(to_json(p));
    json out = {{"pieces", ps}, {"higgs_rank", m.higgs_ranks()}};
    if (!m.steps().empty()) {
        json ks = json::array(), cs = json::array();
        for (const auto& s : m.steps()) {
            ks.push_back(s ? to_json(s->ker) : json(nullptr));
            cs.push_back(s ? to_json(s->coker) : json(nullptr));
        }
        out["ker_split"] = ks;
        out["coker_split"] = cs;
    }
    if (!m.adjoint().empty()) {
        json a = json::object();
        for (const auto& [k, s] : m.adjoint()) a[std::to_string(k)] = {{"ker", to_json(s.ker)}, {"coker", to_json(s.coker)}};
        out["adjoint_steps"] = a;
    }
    return out;
}

json to_json(const std::vector<SUnClass>& cs) {
    json a = json::array();
    for (const auto& c : cs) {
        json t = json::array();
        for (const auto& x : c.theta()) t.push_back(x.str());
        a.push_back(t);
    }
    return {{"classes", a}};
}

json to_json(const Partition& p) { return json(std::vector<int>(p)); }

json to_json(const Cohomology& c) { return {{"h0", c.h0}, {"h1", c.h1}}; }

json to_json(const ChainEntry& c) { return {{"label", c.label}, {"value", c.value.str()}}; }

json to_json(const BoundReport& b) {
    return {{"name", b.name},         {"lhs", b.lhs.str()}, {"rhs", b.rhs.str()},
            {"relation", b.relation}, {"holds", b.holds},   {"chain", chain_json(b.chain)}};
}

json to_json(const TheoremChain& t) {
    json links = json::array();
    for (const auto& l : t.links) links.push_back(to_json(l));
    return {{"n", t.n}, {"r", t.r}, {"first_link", t.first_link.str()}, {"links", links}, {"holds", t.holds}};
}

json to_json(const MinimalEnergyReport& r) {
    json out = {{"minimal_energy", r.minimal_energy}, {"reason", r.reason}};
    if (r.top_hom) {
        out["top_hom"] = to_json(*r.top_hom);
        out["top_hom_underlying"] = to_json(r.top_hom->underlying());
        out["top_hom_cohomology"] = to_json(r.top_cohomology);
    }
    json in = json::array();
    for (const auto& s : r.interior) in.push_back({{"k", s.k}, {"hyper_h1", s.dim}});
    out["interior"] = in;
    if (r.top_degree) out["top_degree"] = to_json(*r.top_degree);
    return out;
}

json to_json(const AdjointPiece& a) {
    json out = {{"k", a.k}, {"rank", a.rank}, {"par_deg", a.par_deg.str()}};
    if (a.split) out["split"] = to_json(*a.split);
    return out;
}

json to_json(const SubsetSumResult& r) {
    json w = json::array();
    for (const auto& x : r.witness) w.push_back({{"puncture", x.puncture}, {"weight", x.value.str()}});
    json out = {{"generic", r.generic}};
    if (!r.generic) {
        out["witness"] = w;
        out["witness_sum"] = r.witness_sum.str();
    }
    return out;
}

json to_json(const SelectionResult& r) {
    json out = {{"generic", r.generic}};
    if (!r.generic) {
        json w = json::array();
        for (const auto& c : r.witness) {
            json a = json::array();
            for (const auto& v : c) a.push_back(v.str());
            w.push_back(a);
        }
        out["witness_rank"] = r.witness_rank;
        out["witness"] = w;
        out["witness_sum"] = r.witness_sum.str();
    }
    return out;
}

json to_json(const Example62Params& p) {
    json ev = json::array();
    for (const auto& e : p.eps_vec) ev.push_back(e.str());
    return {{"n", p.n}, {"a", p.a}, {"eps", p.eps.str()}, {"eps_vec", ev}};
}

json to_json(const StabilityCertificate& c) {
    json es = json::array();
    for (const auto& e : c.entries)
        es.push_back({{"family", e.family},
                      {"value", e.value.str()},
                      {"kind", e.kind},
                      {"negative", e.value < 0},
                      {"detail", chain_json(e.detail)}});
    return {{"entries", es}, {"stable", c.stable}, {"notes", c.notes}};
}

json to_json(const ExampleCertificate& c) {
    return {{"stability", to_json(c.stability)},
            {"minimal_energy", to_json(c.minimal_energy)},
            {"higgs_field_nonzero", c.higgs_field_nonzero},
            {"hom_underlying", to_json(c.hom_underlying)},
            {"par_deg", c.total_par_deg.str()},
            {"distinct_weights", c.distinct},
            {"values", chain_json(c.values)},
            {"closed_forms_agree", c.formulas_agree}};
}

json to_json(const Violation& v) {
    return {{"s", v.s},
            {"subsets", subsets_json(v.subsets)},
            {"degree", v.degree},
            {"invariant", v.invariant},
            {"lambda_sum", v.lhs.str()},
            {"rhs", v.rhs.str()}};
}

json to_json(const ExistenceVerdict& v) {
    json vs = json::array(), ds = json::array();
    for (const auto& x : v.violations) vs.push_back(to_json(x));
    for (const auto& x : v.diagnostic) ds.push_back(to_json(x));
    json out = {{"exists", v.exists}, {"violations", vs}, {"inequalities_checked", v.inequalities_checked}};
    if (!ds.empty()) out["diagnostic"] = ds;
    return out;
}

json to_json(const ModifiedBundle& m) {
    json ws = json::array();
    for (const auto& p : m.weights) {
        json a = json::array();
        for (const auto& w : p) a.push_back({{"label", w.label}, {"weight", w.value.str()}});
        ws.push_back(a);
    }
    return {{"rotation", m.rotation},
            {"weights", ws},
            {"degrees", m.degrees},
            {"ledger", m.ledger},
            {"par_deg_before", m.par_deg_before.str()},
            {"par_deg_after", m.par_deg_after.str()}};
}

json to_json(const GWQuery& q) {
    json cs = json::array();
    for (const auto& c : q.classes) cs.push_back(to_json(c));
    return {{"k", q.k}, {"n", q.n}, {"classes", cs}, {"degree", q.degree}};
}

json to_json(const GWCertificate& c) {
    return {{"query", to_json(c.query)},
            {"subsets", subsets_json(c.subsets)},
            {"unmodified_subsets", subsets_json(c.unmodified_subsets)},
            {"invariant", c.invariant},
            {"dimension_ok", c.dimension_ok},
            {"claim", c.claim},
            {"lambda_sum", c.lambda_sum.str()},
            {"inequality_violated", c.inequality_violated},
            {"modified", to_json(c.modified)}};
}

}  // namespace parhiggs::io
