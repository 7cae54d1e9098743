// SPDX-License-Identifier: Apache-2.0
#include "bim/report.hpp"

#include "bim/structured.hpp"
#include "bim/submodules.hpp"

namespace bim {

namespace {

Json rationals(const std::array<Rational, 3>& a) { return {to_string(a[0]), to_string(a[1]), to_string(a[2])}; }
Json gauss3(const std::array<GaussRational, 3>& a) { return {to_string(a[0]), to_string(a[1]), to_string(a[2])}; }

Json head(long n, const Multiplicity& k) {
    Json j;
    j["n"] = n;
    j["k"] = to_json(k);
    j["t"] = thresholds_json(k);
    return j;
}

Subspace span_of(const NamedSubmodule& s, long n, const Multiplicity& k) {
    std::vector<SubmoduleFilter> f;
    for (int a : s.axes) f.push_back(high(a));
    return s.axes.empty() ? compute_Mn(static_cast<int>(n), k).space
                          : compute_submodule(static_cast<int>(n), k, f).space;
}

}  // namespace

Json to_json(const Multiplicity& k) { return rationals(k.k); }

Json thresholds_json(const Multiplicity& k) { return {k.t(1).str(), k.t(2).str(), k.t(3).str()}; }

Json to_json(const IrrepSpec& s) {
    Json j;
    j["label"] = s.str();
    j["family"] = s.family == Family::E ? "E" : "O";
    j["d"] = s.d;
    j["params"] = rationals({s.a, s.b, s.c});
    j["twist"] = s.twist.str();
    return j;
}

Json to_json(const Matrix& m) {
    Json rows = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_string(m(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

Json to_json(const ClassificationReport& r) {
    Json j = head(r.n, r.k);
    j["type"] = to_string(r.info.type);
    j["subcase"] = r.subcase;
    j["hypothesis"] = r.hypothesis;
    j["dim_M"] = r.dim_M;
    j["dim_formula_applies"] = r.dim_formula_applies;
    Json sub;
    for (const auto& [name, d] : r.submodule_dims) sub[name] = d;
    j["submodule_dims"] = sub;
    if (!r.has_prediction()) {
        j["warning"] = "no classification theorem applies at this point; dimensions are brute-force only";
        return j;
    }
    j["nonnegativity_clause"] = r.nonneg_clause;
    j["nonnegativity_holds"] = r.nonneg_holds;
    Json fs = Json::array();
    for (const auto& f : r.factors) {
        Json x;
        x["subquotient"] = f.name();
        x["multiplicity"] = f.multiplicity;
        x["spec"] = to_json(f.spec);
        x["isomorph"] = to_json(f.isomorph);
        Json frame = Json::array();
        for (const auto& p : f.frame) frame.push_back({{"ladder", p.ladder.str()}, {"from", p.from}, {"to", p.to}});
        x["frame"] = frame;
        fs.push_back(std::move(x));
    }
    j["factors"] = fs;
    Json cs = Json::array();
    for (const auto& c : r.composites) {
        Json parts = Json::array();
        for (std::size_t i : c.parts) parts.push_back(r.factors[i].name());
        cs.push_back({{"subquotient", c.name()}, {"sum_of", parts}});
    }
    j["composites"] = cs;
    Json chains = Json::array();
    for (const auto& ch : r.filtrations) {
        Json c = Json::array();
        for (const auto& s : ch) c.push_back(s.str());
        chains.push_back(c);
    }
    j["filtrations"] = chains;
    return j;
}

Json to_json(const ClassificationCertificate& c) {
    Json j;
    j["ok"] = c.ok();
    Json fs = Json::array();
    for (const auto& f : c.factors) {
        Json x;
        x["subquotient"] = f.name;
        x["ok"] = f.ok();
        x["dimension"] = {{"expected", f.expected_dim}, {"computed", f.computed_dim}, {"ok", f.dimension}};
        x["frame"] = f.frame_ok;
        x["copies_identical"] = f.copies_identical;
        x["traces"] = f.traces;
        x["central"] = f.central;
        x["word_traces"] = f.word_traces;
        if (f.hypothesis) {
            Json h;
            h["criterion"] = f.criterion;
            h["isomorph"] = f.isomorph;
            h["burnside"] = f.burnside ? Json(*f.burnside) : Json("skipped");
            h["identify"] = f.identify_ok ? Json(*f.identify_ok) : Json("skipped");
            x["irreducibility"] = h;
        }
        x["alternate_cycle_convention"] = {{"differs", f.alternate_differs},
                                           {"also_matches", f.alternate_matches},
                                           {"ambiguous", f.ambiguous()}};
        x["failures"] = f.failures;
        fs.push_back(std::move(x));
    }
    j["factors"] = fs;
    Json cs = Json::array();
    for (const auto& x : c.composites)
        cs.push_back({{"subquotient", x.name},
                      {"ok", x.ok()},
                      {"dimension", x.dimension},
                      {"frame", x.frame_ok},
                      {"copies_identical", x.copies_identical},
                      {"traces", x.traces},
                      {"central", x.central},
                      {"failures", x.failures}});
    j["composites"] = cs;
    Json fl = Json::array();
    for (const auto& f : c.filtrations)
        fl.push_back({{"chain", f.chain},
                      {"computed_sum", f.computed_sum},
                      {"predicted_sum", f.predicted_sum},
                      {"dim_M", f.dim_M},
                      {"ok", f.ok()}});
    j["filtrations"] = fl;
    return j;
}

Result report_dim(long n, const Multiplicity& k) {
    Result r{head(n, k)};
    const auto st = dim_formula_status(n, k);
    const auto dim = static_cast<long>(compute_Mn(static_cast<int>(n), k).dim());
    r.doc["dim"] = dim;
    r.doc["case"] = to_string(st.info.type);
    r.doc["formula_applies"] = st.applies;
    if (st.applies) {
        r.doc["predicted"] = st.predicted;
        r.ok = dim == st.predicted;
    }
    r.doc["ok"] = r.ok;
    return r;
}

Result report_submodules(long n, const Multiplicity& k) {
    Result r{head(n, k)};
    const int ni = static_cast<int>(n);
    const long dim_M = static_cast<long>(compute_Mn(ni, k).dim());
    Json rows = Json::array();
    auto add = [&](const std::string& name, long computed, long predicted) {
        rows.push_back({{"name", name}, {"computed", computed}, {"predicted", predicted}, {"ok", computed == predicted}});
        r.ok = r.ok && computed == predicted;
    };
    const std::vector<std::vector<int>> sets = {{1}, {2}, {3}, {1, 2}, {1, 3}, {2, 3}, {1, 2, 3}};
    for (const auto& axes : sets) {
        std::vector<SubmoduleFilter> f;
        for (int a : axes) f.push_back(high(a));
        add(NamedSubmodule::of(axes).str(), static_cast<long>(compute_submodule(ni, k, f).dim()),
            predicted_dim_high(ni, k, axes));
    }
    Json decomp = Json::array();
    for (int a = 1; a <= 3; ++a) {
        const long low_dim = static_cast<long>(compute_submodule(ni, k, {low(a)}).dim());
        add("N" + std::to_string(a), low_dim, predicted_dim_low(ni, k, a));
        // dim M_n = dim M_n(x_a) + dim N_n(x_a)
        add("M via axis " + std::to_string(a), dim_M, predicted_dim_high(ni, k, {a}) + predicted_dim_low(ni, k, a));
        const auto c = verify_decomposition(ni, k, a);
        decomp.push_back({{"axis", a}, {"dim_M", c.dim_M}, {"dim_high", c.dim_high}, {"dim_low", c.dim_low},
                          {"dim_sum", c.dim_sum}, {"ok", c.ok}});
        r.ok = r.ok && c.ok;
    }
    r.doc["dims"] = rows;
    r.doc["direct_sums"] = decomp;
    r.doc["ok"] = r.ok;
    return r;
}

Result report_bi(long n, const Multiplicity& k) {
    Result r{head(n, k)};
    const auto M = compute_Mn(static_cast<int>(n), k);
    const auto m = matrices_on(static_cast<int>(n), k, M.space, Subspace(M.space.ambient()), "M_n");
    const auto predicted = predicted_central_scalars(n, k);
    const auto cert = verify_bi_relations(m, predicted);
    Json sc = Json::array();
    const char* names[3] = {"kappa", "lambda", "mu"};
    for (int i = 0; i < 3; ++i)
        sc.push_back({{"name", names[i]},
                      {"predicted", to_string(cert.scalars[i].predicted)},
                      {"computed", cert.scalars[i].computed ? Json(to_string(*cert.scalars[i].computed)) : Json()},
                      {"ok", cert.scalars[i].matches}});
    r.doc["dim"] = m.dim();
    r.doc["commutators_vanish"] = cert.commute_ok;
    r.doc["central"] = sc;
    r.ok = cert.ok();
    r.doc["ok"] = r.ok;
    return r;
}

Result report_rank_lemma(long n, const Multiplicity& k) {
    Result r{head(n, k)};
    if (n >= 1) {
        const long computed = static_cast<long>(rank(build_Nn(n, k)));
        const long expected = rank_Nn_expected(n, k);
        r.doc["rank_N"] = {{"computed", computed}, {"expected", expected}};
        r.ok = computed == expected;
    }
    Json powers = Json::array();
    for (long p = 1; p <= n; ++p) {
        const bool eq = dirac_x3_power_matrix(n, k, p) == dirac_x3_power_direct(n, k, p);
        powers.push_back({{"power", p}, {"factorization_matches", eq}});
        r.ok = r.ok && eq;
    }
    r.doc["dirac_x3_powers"] = powers;
    r.doc["ok"] = r.ok;
    return r;
}

NamedSubmodule ladder_span_target(const LadderSpec& spec) {
    const LadderCase& c = ladder_case(spec.case_id);
    if (spec.case_id.rfind("I.", 0) == 0) return NamedSubmodule::whole();
    const int lead = rotate_axis(c.brackets[0].axis, spec.rotation);
    if (spec.case_id.rfind("III.", 0) == 0) return NamedSubmodule::of({lead});
    return NamedSubmodule::of({lead, rotate_axis(c.brackets[2].axis, spec.rotation)});
}

Result report_ladder(const LadderSpec& spec, long n, const Multiplicity& k) {
    Result r{head(n, k)};
    r.doc["ladder"] = spec.str();
    if (!ladder_applies(spec, n, k)) {
        r.doc["applies"] = false;
        r.doc["ok"] = true;
        return r;
    }
    r.doc["applies"] = true;
    const Ladder L = build_ladder(spec, n, k);
    const auto cert = verify_ladder(L);
    r.doc["length"] = L.elements.size();
    r.doc["generators"] = {L.raise, L.lower};
    Json th = Json::array(), ths = Json::array(), ph = Json::array();
    for (std::size_t i = 0; i < L.elements.size(); ++i) {
        th.push_back(to_string(L.theta[i]));
        ths.push_back(to_string(L.theta_star[i]));
        if (i) ph.push_back(to_string(L.phi[i]));
    }
    r.doc["theta"] = th;
    r.doc["theta_star"] = ths;
    r.doc["phi"] = ph;
    r.doc["annihilated"] = cert.annihilated;
    r.doc["raise_ok"] = cert.raise_ok;
    r.doc["lower_ok"] = cert.lower_ok;
    r.doc["independent"] = cert.independent;
    r.doc["failures"] = cert.failures;

    // Both column families together span the named submodule.
    const NamedSubmodule target = ladder_span_target(spec);
    const Subspace T = span_of(target, n, k);
    std::vector<Vec> cols;
    GradedBasis amb(static_cast<int>(n), kAllVars);
    for (const auto& side : column_split(L))
        for (const auto& f : side) cols.push_back(amb.coordinates(f));
    const Subspace S = Subspace::span(amb.size(), cols);
    const bool spans = S == T && S.dim() == cols.size();
    r.doc["span"] = {{"target", target.str()}, {"target_dim", T.dim()}, {"columns", cols.size()}, {"ok", spans}};
    r.ok = cert.ok() && spans;
    r.doc["ok"] = r.ok;
    return r;
}

Result report_ladders(long n, const Multiplicity& k) {
    Result r{head(n, k)};
    Json rows = Json::array();
    for (const auto& c : ladder_cases())
        for (int rot = 0; rot < 3; ++rot) {
            const LadderSpec spec{c.id, rot};
            if (!ladder_applies(spec, n, k)) continue;
            Result x = report_ladder(spec, n, k);
            rows.push_back({{"ladder", spec.str()}, {"length", x.doc["length"]}, {"ok", x.ok}});
            r.ok = r.ok && x.ok;
        }
    r.doc["ladders"] = rows;
    r.doc["ok"] = r.ok;
    return r;
}

Result report_classify(long n, const Multiplicity& k, bool verify) {
    const auto rep = classify(n, k);
    Result r{to_json(rep)};
    if (verify && rep.has_prediction()) {
        const auto cert = verify_classification(rep);
        r.doc["verification"] = to_json(cert);
        r.ok = cert.ok();
    }
    r.doc["ok"] = r.ok;
    return r;
}

Result report_irrep(const IrrepSpec& s, bool with_matrices, std::size_t cap) {
    Result r;
    r.doc["spec"] = to_json(s);
    const auto m = build_irrep(s);
    const std::array<GaussRational, 3> tr{m.X().trace(), m.Y().trace(), m.Z().trace()};
    const auto central = spec_central(s);
    std::array<Rational, 3> central_re;
    bool real = true;
    for (int i = 0; i < 3; ++i) {
        real = real && central[i].im() == 0;
        central_re[i] = central[i].re();
    }
    const auto rel = verify_bi_relations(m, central_re);
    const bool criterion = is_irreducible_by_criterion(s);
    r.doc["dim"] = s.dim();
    r.doc["traces"] = gauss3(tr);
    r.doc["central"] = gauss3(central);
    r.doc["traces_match_spec"] = tr == spec_traces(s);
    r.doc["relations_ok"] = real && rel.ok();
    r.doc["criterion_irreducible"] = criterion;
    r.ok = tr == spec_traces(s) && real && rel.ok();
    if (s.dim() <= cap) {
        const bool b = is_irreducible_burnside(m, cap);
        r.doc["burnside_irreducible"] = b;
        r.ok = r.ok && b == criterion;
    } else {
        r.doc["burnside_irreducible"] = "skipped";
    }
    if (with_matrices) r.doc["matrices"] = {{"X", to_json(m.X())}, {"Y", to_json(m.Y())}, {"Z", to_json(m.Z())}};
    r.doc["ok"] = r.ok;
    return r;
}

Json envelope(const std::string& command, const Json& args, const std::vector<Result>& results) {
    Json j;
    j["schema"] = kReportSchema;
    j["version"] = kReportVersion;
    j["command"] = command;
    j["args"] = args;
    bool ok = true;
    Json rs = Json::array();
    for (const auto& r : results) {
        ok = ok && r.ok;
        rs.push_back(r.doc);
    }
    j["ok"] = ok;
    j["results"] = rs;
    return j;
}

}  // namespace bim
