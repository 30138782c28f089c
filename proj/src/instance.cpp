#include "scpkit/report.hpp"

#include <json.hpp>

#include <set>
#include <sstream>

#include "scpkit/errors.hpp"
#include "scpkit/scp1d.hpp"

namespace scpkit {

using nlohmann::json;

namespace {

Rat rat_from_json(const json& j, const std::string& where) {
    if (j.is_number_integer()) return Rat(BigInt(std::to_string(j.get<long long>()), 10));
    if (j.is_string()) {
        if (auto r = Rat::parse(j.get<std::string>())) return *r;
        throw ValidationError(where + ": malformed rational '" + j.get<std::string>() + "'");
    }
    if (j.is_number_float()) throw ValidationError(where + ": floating-point numbers are not accepted");
    throw ValidationError(where + ": expected a rational as \"p/q\" string or integer");
}

void reject_unknown(const json& j, const std::set<std::string>& allowed, const std::string& where) {
    for (const auto& [key, value] : j.items())
        if (allowed.find(key) == allowed.end())
            throw ValidationError(where + ": unknown field '" + key + "'");
}

std::pair<int, int> index_from_key(const std::string& key, const std::string& where) {
    const auto comma = key.find(',');
    if (comma == std::string::npos) throw ValidationError(where + ": index key must be \"k1,k2\"");
    try {
        const int k1 = std::stoi(key.substr(0, comma));
        const int k2 = std::stoi(key.substr(comma + 1));
        if (k1 < 0 || k2 < 0) throw ValidationError(where + ": negative index");
        return {k1, k2};
    } catch (const std::invalid_argument&) {
        throw ValidationError(where + ": malformed index key '" + key + "'");
    } catch (const std::out_of_range&) {
        throw ValidationError(where + ": index key out of range '" + key + "'");
    }
}

MomentSeq2 moments_from_json(const json& j, const std::string& where) {
    if (!j.contains("degree") || !j["degree"].is_number_integer())
        throw ValidationError(where + ": needs an integer 'degree'");
    const int degree = j["degree"].get<int>();
    if (degree < 0) throw ValidationError(where + ": negative degree");
    if (!j.contains("rows") || !j["rows"].is_array())
        throw ValidationError(where + ": needs 'rows', the triangular table");
    const auto& rows = j["rows"];
    if (static_cast<int>(rows.size()) != degree + 1)
        throw ValidationError(where + ": expected " + std::to_string(degree + 1) + " rows");
    std::vector<Rat> flat;
    for (int d = 0; d <= degree; ++d) {
        const auto& row = rows[static_cast<size_t>(d)];
        if (!row.is_array() || static_cast<int>(row.size()) != d + 1)
            throw ValidationError(where + ": row " + std::to_string(d) + " must hold " +
                                  std::to_string(d + 1) + " entries");
        for (const auto& v : row) flat.push_back(rat_from_json(v, where));
    }
    try {
        return MomentSeq2(degree, std::move(flat));
    } catch (const ShapeError& e) {
        throw ValidationError(where + ": " + e.what());
    }
}

json moments_to_json(const MomentSeq2& seq) {
    json rows = json::array();
    size_t pos = 0;
    for (int d = 0; d <= seq.degree_bound(); ++d) {
        json row = json::array();
        for (int i = 0; i <= d; ++i) row.push_back(seq.values()[pos++].fraction_str());
        rows.push_back(std::move(row));
    }
    return json{{"degree", seq.degree_bound()}, {"rows", std::move(rows)}};
}

json quadext_to_json(const QuadExt& x) {
    if (x.is_rational()) return x.rat_part().fraction_str();
    return json{{"p", x.rat_part().fraction_str()},
                {"q", x.surd_coeff().fraction_str()},
                {"radicand", x.radicand().fraction_str()}};
}

QuadExt quadext_from_json(const json& j, const std::string& where) {
    if (j.is_string() || j.is_number_integer()) return QuadExt(rat_from_json(j, where));
    if (!j.is_object()) throw ValidationError(where + ": expected a rational or a {p,q,radicand} surd");
    reject_unknown(j, {"p", "q", "radicand"}, where);
    return QuadExt(rat_from_json(j.at("p"), where), rat_from_json(j.at("q"), where),
                   rat_from_json(j.at("radicand"), where));
}

json affine_to_json(const AffineForm& f) {
    if (f.is_constant()) return f.c0.fraction_str();
    return json{{"c", f.c0.fraction_str()}, {"x5", f.cx5.fraction_str()}, {"y5", f.cy5.fraction_str()}};
}

AffineForm affine_from_json(const json& j, const std::string& where) {
    if (j.is_string() || j.is_number_integer())
        return AffineForm{rat_from_json(j, where), Rat::zero(), Rat::zero()};
    if (!j.is_object()) throw ValidationError(where + ": expected an affine form");
    reject_unknown(j, {"c", "x5", "y5"}, where);
    return AffineForm{rat_from_json(j.at("c"), where), rat_from_json(j.at("x5"), where),
                      rat_from_json(j.at("y5"), where)};
}

json mat_to_json(const Mat& m) {
    json rows = json::array();
    for (size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).fraction_str());
        rows.push_back(std::move(row));
    }
    return rows;
}

Mat mat_from_json(const json& j, const std::string& where) {
    if (!j.is_array() || j.empty()) throw ValidationError(where + ": expected a matrix");
    Mat m(j.size(), j[0].size());
    for (size_t i = 0; i < j.size(); ++i) {
        if (!j[i].is_array() || j[i].size() != m.cols()) throw ValidationError(where + ": ragged matrix");
        for (size_t c = 0; c < m.cols(); ++c) m(i, c) = rat_from_json(j[i][c], where);
    }
    return m;
}

json measure_to_json(const AtomicMeasure2& mu) {
    json atoms = json::array();
    for (const auto& [x, y] : mu.atoms) atoms.push_back(json{{"x", quadext_to_json(x)}, {"y", quadext_to_json(y)}});
    json densities = json::array();
    for (const auto& d : mu.densities) densities.push_back(quadext_to_json(d));
    return json{{"atoms", std::move(atoms)}, {"densities", std::move(densities)}};
}

AtomicMeasure2 measure_from_json(const json& j, const std::string& where) {
    reject_unknown(j, {"atoms", "densities"}, where);
    AtomicMeasure2 mu;
    for (const auto& a : j.at("atoms")) {
        reject_unknown(a, {"x", "y"}, where);
        mu.atoms.emplace_back(quadext_from_json(a.at("x"), where), quadext_from_json(a.at("y"), where));
    }
    for (const auto& d : j.at("densities")) mu.densities.push_back(quadext_from_json(d, where));
    return mu;
}

json measure1_to_json(const AtomicMeasure1& mu) {
    json atoms = json::array();
    for (const auto& t : mu.atoms) atoms.push_back(quadext_to_json(t));
    json densities = json::array();
    for (const auto& d : mu.densities) densities.push_back(quadext_to_json(d));
    return json{{"atoms", std::move(atoms)}, {"densities", std::move(densities)}};
}

AtomicMeasure1 measure1_from_json(const json& j, const std::string& where) {
    reject_unknown(j, {"atoms", "densities"}, where);
    AtomicMeasure1 mu;
    for (const auto& t : j.at("atoms")) mu.atoms.push_back(quadext_from_json(t, where));
    for (const auto& d : j.at("densities")) mu.densities.push_back(quadext_from_json(d, where));
    return mu;
}

WeightFamily2 family_from_json(const json& j) {
    if (!j.contains("m") || !j["m"].is_number_integer())
        throw ValidationError("scp2d-family: needs an integer 'm'");
    const int m = j["m"].get<int>();
    const auto table = [&](const char* name) {
        std::map<ShiftIndex, Rat> t;
        if (!j.contains(name) || !j[name].is_object())
            throw ValidationError(std::string("scp2d-family: needs object '") + name + "'");
        for (const auto& [key, value] : j[name].items())
            t[index_from_key(key, name)] = rat_from_json(value, name);
        return t;
    };
    try {
        return WeightFamily2(m, table("alpha_sq"), table("beta_sq"));
    } catch (const ShapeError& e) {
        throw ValidationError(std::string("scp2d-family: ") + e.what());
    }
}

} // namespace

int exit_code_for(const std::string& status) {
    if (status == "solved" || status == "feasible" || status == "flat-feasible" || status == "ok") return 0;
    if (status == "no-completion" || status == "obstructed") return 1;
    if (status == "input-error" || status == "unsupported") return 2;
    return 3;
}

Instance parse_instance(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("instance: ") + e.what());
    }
    if (!j.is_object()) throw ParseError("instance: top level must be a JSON object");
    if (!j.contains("kind") || !j["kind"].is_string()) throw ValidationError("instance: missing 'kind'");
    const std::string kind = j["kind"].get<std::string>();

    Instance inst;
    std::set<std::string> allowed{"kind", "depth", "translate"};
    if (kind == "scp2d-quadratic") {
        inst.kind = InstanceKind::scp2d_quadratic;
        allowed.insert({"a", "b", "c", "d", "e"});
        reject_unknown(j, allowed, "scp2d-quadratic");
        for (const char* f : {"a", "b", "c", "d", "e"})
            if (!j.contains(f)) throw ValidationError(std::string("scp2d-quadratic: missing '") + f + "'");
        inst.quadratic.emplace(rat_from_json(j["a"], "a"), rat_from_json(j["b"], "b"),
                               rat_from_json(j["c"], "c"), rat_from_json(j["d"], "d"),
                               rat_from_json(j["e"], "e"));
    } else if (kind == "scp2d-family") {
        inst.kind = InstanceKind::scp2d_family;
        allowed.insert({"m", "alpha_sq", "beta_sq"});
        reject_unknown(j, allowed, "scp2d-family");
        inst.family = family_from_json(j);
    } else if (kind == "scp1d") {
        inst.kind = InstanceKind::scp1d;
        allowed.insert("alpha_sq");
        reject_unknown(j, allowed, "scp1d");
        if (!j.contains("alpha_sq") || !j["alpha_sq"].is_array() || j["alpha_sq"].empty())
            throw ValidationError("scp1d: needs a nonempty 'alpha_sq' array");
        WeightSeq1 w;
        for (const auto& v : j["alpha_sq"]) {
            Rat r = rat_from_json(v, "alpha_sq");
            if (r.sign() <= 0) throw ValidationError("scp1d: squared weights must be positive");
            w.alpha_sq.push_back(std::move(r));
        }
        inst.weights1 = std::move(w);
    } else if (kind == "moments" || kind == "obstruction") {
        inst.kind = kind == "moments" ? InstanceKind::moments : InstanceKind::obstruction;
        allowed.insert({"degree", "rows"});
        reject_unknown(j, allowed, kind);
        inst.moment_table = moments_from_json(j, kind);
    } else {
        throw ValidationError("instance: unknown kind '" + kind + "'");
    }

    if (j.contains("depth")) {
        if (!j["depth"].is_number_integer() || j["depth"].get<int>() < 1)
            throw ValidationError("instance: 'depth' must be a positive integer");
        inst.depth = j["depth"].get<int>();
    }
    if (j.contains("translate")) {
        const auto& t = j["translate"];
        if (!t.is_array() || t.size() != 2) throw ValidationError("instance: 'translate' must be [h, k]");
        inst.translate_by = {rat_from_json(t[0], "translate"), rat_from_json(t[1], "translate")};
    }
    return inst;
}

namespace {

std::string relation_string(const PolyRelation& rel) { return rel.str(); }

void fill_completion(Report& rep, const CompletionResult& res) {
    rep.status = "solved";
    rep.case_tag = case_name(res.case_tag, res.swapped);
    rep.rank = res.rank_m1;
    rep.new_weights = {res.p, res.q, res.r, res.s};
    rep.measure = res.measure;
    rep.matrices.emplace("m2", res.m2.mat);
    rep.matrices.emplace("mx", res.mx.mat);
    rep.matrices.emplace("my", res.my.mat);
    // The solver asserts these before returning; surface them as checks.
    rep.checks = {{"flat_rank", true},      {"m2_psd", true},
                  {"mx_psd", true},         {"my_psd", true},
                  {"moment_structure", true}, {"interpolation", true},
                  {"atom_bookkeeping", true}};
}

Report dispatch(const std::string& command, const Instance& instance) {
    Report rep;
    // Optional degree-one translation applies to moment payloads up front.
    std::optional<MomentSeq2> table = instance.moment_table;
    if (table && instance.translate_by)
        table = translate(*table, instance.translate_by->first, instance.translate_by->second);

    if (command == "check") {
        if (instance.kind == InstanceKind::scp1d) {
            const SCCVerdict v = scc_check(*instance.weights1);
            rep.status = v.admits_completion ? "feasible" : "no-completion";
            rep.case_tag = "m=" + std::to_string(v.m);
            rep.checks = {{"psd_hk", v.psd_hk}, {"psd_hx", v.psd_hx}, {"range_ok", v.range_ok}};
            rep.matrices.emplace("hk", v.hk);
            rep.matrices.emplace("hx", v.hx);
        } else if (instance.kind == InstanceKind::scp2d_quadratic) {
            const MomentMat m1 = instance.quadratic->m1();
            const bool psd = is_psd(m1.mat);
            rep.status = psd ? "feasible" : "no-completion";
            rep.rank = static_cast<int>(rank(m1.mat));
            rep.checks = {{"m1_psd", psd}};
            rep.matrices.emplace("m1", m1.mat);
        } else if (instance.kind == InstanceKind::scp2d_family) {
            const WeightFamily2& w = *instance.family;
            const bool comm = check_commutative(w);
            bool psd_m = comm, psd_x = comm, psd_y = comm;
            if (comm) {
                const MomentSeq2 seq = moments_from_weights(w);
                const int deg = seq.degree_bound();
                psd_m = is_psd(moment_matrix(seq, deg / 2).mat);
                psd_x = is_psd(localizing_matrix(seq, (deg - 1) / 2, Axis::x).mat);
                psd_y = is_psd(localizing_matrix(seq, (deg - 1) / 2, Axis::y).mat);
            }
            rep.status = comm && psd_m && psd_x && psd_y ? "feasible" : "no-completion";
            rep.checks = {{"commutative", comm}, {"m_psd", psd_m}, {"mx_psd", psd_x}, {"my_psd", psd_y}};
        } else {
            throw ValidationError("check: expects scp1d, scp2d-quadratic or scp2d-family input");
        }
    } else if (command == "complete") {
        if (instance.kind == InstanceKind::scp1d) {
            AtomicMeasure1 mu = scc_complete(*instance.weights1);
            rep.status = "solved";
            rep.case_tag = "m=" + std::to_string(instance.weights1->alpha_sq.size() - 1);
            rep.rank = static_cast<int>(mu.size());
            rep.measure1 = std::move(mu);
        } else if (instance.kind == InstanceKind::scp2d_quadratic) {
            fill_completion(rep, quadratic_scp(*instance.quadratic, instance.depth));
        } else if (instance.kind == InstanceKind::scp2d_family) {
            if (instance.family->m() != 2)
                throw ValidationError("complete: the scp2d-family solver handles m = 2");
            fill_completion(rep, singular_m2(*instance.family, instance.depth));
        } else {
            throw ValidationError("complete: expects scp1d, scp2d-quadratic or scp2d-family input");
        }
    } else if (command == "translate") {
        if (!table) throw ValidationError("translate: expects a moments input");
        if (!instance.translate_by) throw ValidationError("translate: needs the 'translate' option [h, k]");
        rep.status = "ok";
        rep.moments_out = *table;
    } else if (command == "relations") {
        if (!table) throw ValidationError("relations: expects a moments input");
        const MomentMat m = moment_matrix(*table, table->degree_bound() / 2);
        rep.status = "ok";
        rep.rank = static_cast<int>(rank(m.mat));
        for (const auto& rel : column_relations(m)) rep.relations.push_back(relation_string(rel));
    } else if (command == "obstruct") {
        if (!table) throw ValidationError("obstruct: expects a moments input");
        const ObstructionReport ob = flat_obstruction_check(*table);
        switch (ob.status) {
            case ObstructionStatus::obstructed: rep.status = "obstructed"; break;
            case ObstructionStatus::flat_feasible: rep.status = "flat-feasible"; break;
            case ObstructionStatus::unsupported:
                rep.status = "unsupported";
                rep.detail = ob.unsupported_reason;
                break;
        }
        if (ob.status != ObstructionStatus::unsupported) {
            rep.rank = ob.rank_m2;
            rep.relation_poly = relation_string(*ob.relation);
            rep.relation_hk = {ob.h, ob.k};
            rep.coefficients = ob.coefficients;
            for (const auto& [idx, form] : ob.propagated)
                rep.propagated.emplace(std::to_string(idx.first) + "," + std::to_string(idx.second), form);
            rep.witness = ob.witness;
        }
    } else if (command == "hypo") {
        if (!table) throw ValidationError("hypo: expects a moments input");
        const int deg = table->degree_bound();
        bool all = true;
        for (int ell = 1; 2 * ell <= deg; ++ell)
            for (int us = 0; us + 2 * ell <= deg; ++us)
                for (int uy = 0; uy <= us; ++uy) {
                    const int ux = us - uy;
                    const bool ok = is_psd(hyponormality_matrix(*table, {uy, ux}, ell).mat);
                    all = all && ok;
                    rep.checks.emplace("M(" + std::to_string(uy) + "," + std::to_string(ux) + ")(" +
                                           std::to_string(ell) + ")",
                                       ok);
                }
        rep.status = all ? "feasible" : "no-completion";
    } else {
        throw ValidationError("unknown command '" + command + "'");
    }
    return rep;
}

} // namespace

std::pair<Report, int> run(const std::string& command, const Instance& instance) {
    Report rep;
    try {
        rep = dispatch(command, instance);
    } catch (const NoCompletionError& e) {
        rep = Report{};
        rep.status = "no-completion";
        rep.detail = e.what();
    } catch (const ParseError& e) {
        rep = Report{};
        rep.status = "input-error";
        rep.detail = e.what();
    } catch (const ValidationError& e) {
        rep = Report{};
        rep.status = "input-error";
        rep.detail = e.what();
    } catch (const NotSingularError& e) {
        rep = Report{};
        rep.status = "input-error";
        rep.detail = e.what();
    } catch (const UnsupportedDegreeError& e) {
        rep = Report{};
        rep.status = "unsupported";
        rep.detail = e.what();
    } catch (const DegreeError& e) {
        rep = Report{};
        rep.status = "input-error";
        rep.detail = e.what();
    } catch (const OrderError& e) {
        rep = Report{};
        rep.status = "input-error";
        rep.detail = e.what();
    } catch (const PositivityError& e) {
        rep = Report{};
        rep.status = "input-error";
        rep.detail = e.what();
    } catch (const std::exception& e) {
        rep = Report{};
        rep.status = "internal-error";
        rep.detail = e.what();
    }
    return {rep, exit_code_for(rep.status)};
}

namespace {

json report_to_json(const Report& r) {
    json j;
    j["status"] = r.status;
    if (r.case_tag) j["case"] = *r.case_tag;
    if (r.rank) j["rank"] = *r.rank;
    if (r.new_weights) {
        const auto& w = *r.new_weights;
        j["new_weights"] = json{{"p", w[0].fraction_str()},
                                {"q", w[1].fraction_str()},
                                {"r", w[2].fraction_str()},
                                {"s", w[3].fraction_str()}};
    }
    if (r.measure) j["measure"] = measure_to_json(*r.measure);
    if (r.measure1) j["measure1"] = measure1_to_json(*r.measure1);
    if (!r.matrices.empty()) {
        json m;
        for (const auto& [name, mat] : r.matrices) m[name] = mat_to_json(mat);
        j["matrices"] = std::move(m);
    }
    if (!r.checks.empty()) j["checks"] = r.checks;
    if (r.witness) j["witness"] = json::array({r.witness->first.fraction_str(), r.witness->second.fraction_str()});
    if (r.detail) j["detail"] = *r.detail;
    if (r.relation_poly) j["relation"] = *r.relation_poly;
    if (r.relation_hk)
        j["relation_hk"] = json::array({r.relation_hk->first.fraction_str(), r.relation_hk->second.fraction_str()});
    if (!r.coefficients.empty()) {
        json c;
        for (const auto& [name, form] : r.coefficients) c[name] = affine_to_json(form);
        j["coefficients"] = std::move(c);
    }
    if (!r.propagated.empty()) {
        json p;
        for (const auto& [name, form] : r.propagated) p[name] = affine_to_json(form);
        j["propagated"] = std::move(p);
    }
    if (r.moments_out) j["moments"] = moments_to_json(*r.moments_out);
    if (!r.relations.empty()) j["relations"] = r.relations;
    return j;
}

std::string text_rat(const Rat& r) { return r.str(); }

std::string text_density(const QuadExt& d) { return d.is_rational() ? d.rat_part().str() : d.str(); }

std::string measure_delta_notation(const AtomicMeasure2& mu) {
    std::string s = "μ = ";
    for (size_t i = 0; i < mu.atoms.size(); ++i) {
        if (i) s += " + ";
        const QuadExt& d = mu.densities[i];
        if (!(d == QuadExt(Rat::one()))) s += "(" + text_density(d) + ")";
        s += "δ_{(" + mu.atoms[i].first.str() + "," + mu.atoms[i].second.str() + ")}";
    }
    return s;
}

std::string measure1_delta_notation(const AtomicMeasure1& mu) {
    std::string s = "μ = ";
    for (size_t i = 0; i < mu.atoms.size(); ++i) {
        if (i) s += " + ";
        const QuadExt& d = mu.densities[i];
        if (!(d == QuadExt(Rat::one()))) s += "(" + text_density(d) + ")";
        s += "δ_{" + mu.atoms[i].str() + "}";
    }
    return s;
}

std::string report_to_text(const Report& r) {
    std::ostringstream os;
    os << "status: " << r.status << "\n";
    if (r.case_tag) os << "case: " << *r.case_tag << "\n";
    if (r.rank) os << "rank: " << *r.rank << "\n";
    if (r.detail) os << "detail: " << *r.detail << "\n";
    if (r.new_weights) {
        const auto& w = *r.new_weights;
        os << "new weights: p = " << text_rat(w[0]) << ", q = " << text_rat(w[1])
           << ", r = " << text_rat(w[2]) << ", s = " << text_rat(w[3]) << "\n";
    }
    if (r.relation_poly) os << "relation: " << *r.relation_poly << " (h = "
                            << (r.relation_hk ? text_rat(r.relation_hk->first) : std::string("?")) << ", k = "
                            << (r.relation_hk ? text_rat(r.relation_hk->second) : std::string("?")) << ")\n";
    if (r.measure) os << measure_delta_notation(*r.measure) << "\n";
    if (r.measure1) os << measure1_delta_notation(*r.measure1) << "\n";
    if (!r.propagated.empty()) {
        os << "propagated:";
        for (const auto& [name, form] : r.propagated) os << " g" << name << " = " << form.str() << ";";
        os << "\n";
    }
    if (!r.coefficients.empty()) {
        os << "coefficients:";
        for (const auto& [name, form] : r.coefficients) os << " " << name << " = " << form.str() << ";";
        os << "\n";
    }
    if (r.witness)
        os << "witness: " << text_rat(r.witness->first) << " vs " << text_rat(r.witness->second) << "\n";
    if (r.moments_out) {
        os << "moments:\n";
        size_t pos = 0;
        for (int d = 0; d <= r.moments_out->degree_bound(); ++d) {
            os << " ";
            for (int i = 0; i <= d; ++i) os << " " << text_rat(r.moments_out->values()[pos++]);
            os << "\n";
        }
    }
    if (!r.relations.empty()) {
        os << "relations:\n";
        for (const auto& rel : r.relations) os << "  " << rel << "\n";
    }
    if (!r.checks.empty()) {
        os << "checks:";
        for (const auto& [name, ok] : r.checks) os << " " << name << (ok ? " ok;" : " FAIL;");
        os << "\n";
    }
    return os.str();
}

} // namespace

std::string format_report(const Report& r, ReportFormat mode) {
    if (mode == ReportFormat::json) return report_to_json(r).dump();
    return report_to_text(r);
}

Report parse_report(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("report: ") + e.what());
    }
    reject_unknown(j,
                   {"status", "case", "rank", "new_weights", "measure", "measure1", "matrices", "checks",
                    "witness", "detail", "relation", "relation_hk", "coefficients", "propagated",
                    "moments", "relations"},
                   "report");
    Report r;
    r.status = j.at("status").get<std::string>();
    if (j.contains("case")) r.case_tag = j["case"].get<std::string>();
    if (j.contains("rank")) r.rank = j["rank"].get<int>();
    if (j.contains("new_weights")) {
        const auto& w = j["new_weights"];
        reject_unknown(w, {"p", "q", "r", "s"}, "new_weights");
        r.new_weights = {rat_from_json(w.at("p"), "p"), rat_from_json(w.at("q"), "q"),
                         rat_from_json(w.at("r"), "r"), rat_from_json(w.at("s"), "s")};
    }
    if (j.contains("measure")) r.measure = measure_from_json(j["measure"], "measure");
    if (j.contains("measure1")) r.measure1 = measure1_from_json(j["measure1"], "measure1");
    if (j.contains("matrices"))
        for (const auto& [name, mat] : j["matrices"].items()) r.matrices.emplace(name, mat_from_json(mat, name));
    if (j.contains("checks"))
        for (const auto& [name, ok] : j["checks"].items()) r.checks.emplace(name, ok.get<bool>());
    if (j.contains("witness"))
        r.witness = {rat_from_json(j["witness"][0], "witness"), rat_from_json(j["witness"][1], "witness")};
    if (j.contains("detail")) r.detail = j["detail"].get<std::string>();
    if (j.contains("relation")) r.relation_poly = j["relation"].get<std::string>();
    if (j.contains("relation_hk"))
        r.relation_hk = {rat_from_json(j["relation_hk"][0], "relation_hk"),
                         rat_from_json(j["relation_hk"][1], "relation_hk")};
    if (j.contains("coefficients"))
        for (const auto& [name, form] : j["coefficients"].items())
            r.coefficients.emplace(name, affine_from_json(form, name));
    if (j.contains("propagated"))
        for (const auto& [name, form] : j["propagated"].items())
            r.propagated.emplace(name, affine_from_json(form, name));
    if (j.contains("moments")) r.moments_out = moments_from_json(j["moments"], "moments");
    if (j.contains("relations"))
        for (const auto& rel : j["relations"]) r.relations.push_back(rel.get<std::string>());
    return r;
}

} // namespace scpkit
