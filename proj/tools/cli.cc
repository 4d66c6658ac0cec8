// Copyright 2026 The stabdisj Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "cli.h"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <json.hpp>
#include <optional>
#include <ostream>
#include <sstream>

#include "stabdisj/disjointness.h"
#include "stabdisj/errors.h"
#include "stabdisj/families.h"
#include "stabdisj/hierarchy.h"
#include "stabdisj/io.h"
#include "stabdisj/logical.h"
#include "stabdisj/reduction.h"

namespace stabdisj {

namespace {

using Json = nlohmann::ordered_json;

struct Config {
    std::string output = "text";
    std::size_t coset_cap = kDefaultCosetCapLog2;
    std::size_t qubit_cap = kDefaultQubitCap;
    std::size_t graph_cap = kDefaultGraphCap;
    std::size_t threads = 1;
};

Json rational(const Rational &q) {
    return to_string(q);
}

Json label_json(const ClassLabel &l) {
    return Json{{"label", l.str()}, {"name", l.logical_name()}};
}

Json paulis(const std::vector<PauliOperator> &ops) {
    Json arr = Json::array();
    for (const auto &p : ops) {
        arr.push_back(p.str());
    }
    return arr;
}

std::string scalar_text(const Json &v) {
    if (v.is_string()) {
        std::string s = v.get<std::string>();
        if (s.size() > 2 && s.compare(s.size() - 2, 2, "/1") == 0 &&
            s.find_first_not_of("-0123456789") == s.size() - 2) {
            return s.substr(0, s.size() - 2);
        }
        return s;
    }
    if (v.is_null()) {
        return "none";
    }
    return v.dump();
}

void render_text(std::ostream &out, const Json &j, const std::string &indent) {
    for (const auto &[key, v] : j.items()) {
        if (v.is_object()) {
            out << indent << key << ":\n";
            render_text(out, v, indent + "  ");
        } else if (v.is_array()) {
            bool flat = std::all_of(v.begin(), v.end(), [](const Json &e) { return !e.is_structured(); });
            if (flat) {
                out << indent << key << ":";
                for (const auto &e : v) {
                    out << " " << scalar_text(e);
                }
                out << "\n";
                continue;
            }
            out << indent << key << ":\n";
            for (const auto &e : v) {
                out << indent << "  -";
                if (e.is_object()) {
                    for (const auto &[k2, v2] : e.items()) {
                        if (v2.is_array()) {
                            out << " " << k2 << "=[";
                            bool first = true;
                            for (const auto &x : v2) {
                                out << (first ? "" : " ") << scalar_text(x);
                                first = false;
                            }
                            out << "]";
                        } else {
                            out << " " << k2 << "=" << scalar_text(v2);
                        }
                    }
                } else {
                    out << " " << scalar_text(e);
                }
                out << "\n";
            }
        } else {
            out << indent << key << ": " << scalar_text(v) << "\n";
        }
    }
}

void emit(std::ostream &out, const Config &cfg, const Json &j) {
    if (cfg.output == "json") {
        out << j.dump(2) << "\n";
    } else {
        render_text(out, j, "");
    }
}

LogicalClass parse_class(const StabilizerCode &code, const std::string &pauli) {
    PauliOperator rep = parse_pauli_string(pauli);
    if (rep.num_qubits() != code.n()) {
        throw DimensionError("class representative has " + std::to_string(rep.num_qubits()) +
                             " qubits, code has " + std::to_string(code.n()));
    }
    return LogicalClass(code, rep);
}

void write_file(const std::string &path, const std::string &content) {
    std::ofstream f(path);
    if (!f) {
        throw InputError("cannot write " + path);
    }
    f << content;
}

std::string code_text(const StabilizerCode &code) {
    std::ostringstream ss;
    write_code(ss, code);
    return ss.str();
}

DisjointnessOptions disjointness_options(const Config &cfg) {
    DisjointnessOptions o;
    o.coset_cap_log2 = cfg.coset_cap;
    o.threads = cfg.threads;
    return o;
}

EnumerationOptions enumeration_options(const Config &cfg) {
    return EnumerationOptions{cfg.coset_cap, cfg.threads};
}

int cmd_validate(const Config &cfg, const std::string &file, std::ostream &out) {
    StabilizerCode code = read_code_file(file);
    Json j{{"valid", true}, {"n", code.n()}, {"k", code.k()}, {"css", is_css(code)}};
    j["generators"] = paulis(code.generators());
    emit(out, cfg, j);
    return kExitOk;
}

int cmd_logicals(const Config &cfg, const std::string &file, std::ostream &out) {
    StabilizerCode code = read_code_file(file);
    LogicalBasis basis = logical_basis(code);
    Json j{{"n", code.n()}, {"k", code.k()}};
    j["x_ops"] = paulis(basis.x_ops);
    j["z_ops"] = paulis(basis.z_ops);
    emit(out, cfg, j);
    return kExitOk;
}

int cmd_distance(const Config &cfg, const std::string &file, std::ostream &out) {
    StabilizerCode code = read_code_file(file);
    LogicalBasis basis = logical_basis(code);
    DistanceReport r = distance_report(code, basis, enumeration_options(cfg));
    Json j{{"n", code.n()}, {"k", code.k()}, {"d_down", r.d_min}, {"d_up", r.d_max}};
    j["class_count"] = r.per_class.size();
    Json classes = Json::array();
    for (const auto &c : r.per_class) {
        Json e = label_json(c.label);
        e["distance"] = c.distance;
        e["witness"] = c.witness.str();
        classes.push_back(e);
    }
    j["classes"] = classes;
    emit(out, cfg, j);
    return kExitOk;
}

int cmd_disjointness(
    const Config &cfg, const std::string &file, const std::optional<std::string> &cls_text,
    const std::optional<std::size_t> &c, const std::optional<std::size_t> &a, std::ostream &out) {
    StabilizerCode code = read_code_file(file);
    LogicalBasis basis = logical_basis(code);
    std::vector<LogicalClass> targets;
    if (cls_text) {
        targets.push_back(parse_class(code, *cls_text));
    } else {
        for (const auto &l : nontrivial_labels(basis.k())) {
            targets.push_back(class_from_label(code, basis, l));
        }
    }
    DisjointnessOptions dopt = disjointness_options(cfg);
    CDisjointnessOptions copt;
    copt.coset_cap_log2 = cfg.coset_cap;
    bool decision_all = true;
    Json classes = Json::array();
    for (const auto &cls : targets) {
        Json e = label_json(label_of(basis, cls.rep()));
        e["representative"] = cls.rep().str();
        DeltaStar ds = delta_star(cls, dopt);
        e["delta_star"] = rational(ds.value);
        e["c_star"] = witness_c(ds.witness).get_str();
        if (c) {
            CDisjointness cd = c_disjointness_detail(cls, *c, copt);
            e["c"] = *c;
            e["delta_c"] = rational(cd.value);
            e["collection_size"] = cd.collection.members.size();
            e["collection"] = paulis(cd.collection.members);
            if (a) {
                bool yes = cd.collection.members.size() >= *a;
                e["at_least"] = *a;
                e["decision"] = yes;
                decision_all = decision_all && yes;
            }
        }
        classes.push_back(e);
    }
    Json j{{"n", code.n()}, {"k", code.k()}, {"classes", classes}};
    emit(out, cfg, j);
    return decision_all ? kExitOk : kExitFalse;
}

int cmd_code_disjointness(const Config &cfg, const std::string &file, std::ostream &out) {
    StabilizerCode code = read_code_file(file);
    LogicalBasis basis = logical_basis(code);
    DisjointnessReport r = code_disjointness(code, basis, disjointness_options(cfg));
    Json j{{"n", code.n()}, {"k", code.k()}};
    j["class_count"] = r.per_class.size();
    j["coset_size"] = uint64_t{1} << code.num_checks();
    j["delta"] = r.per_class.empty() ? Json(nullptr) : rational(r.code_delta);
    j["argmin_count"] = r.argmin_classes.size();
    Json argmin = Json::array();
    for (const auto &l : r.argmin_classes) {
        argmin.push_back(label_json(l));
    }
    j["argmin"] = argmin;
    Json classes = Json::array();
    for (const auto &e : r.per_class) {
        Json x = label_json(e.label);
        x["delta_star"] = rational(e.delta_star);
        x["c_star"] = e.c_star.get_str();
        classes.push_back(x);
    }
    j["classes"] = classes;
    emit(out, cfg, j);
    return kExitOk;
}

int cmd_bound(const Config &cfg, const std::string &file, std::ostream &out, std::ostream &err) {
    StabilizerCode code = read_code_file(file);
    LogicalBasis basis = logical_basis(code);
    DistanceReport dr = distance_report(code, basis, enumeration_options(cfg));
    DisjointnessReport djr = code_disjointness(code, basis, disjointness_options(cfg));
    Json j{{"n", code.n()}, {"k", code.k()}, {"d_down", dr.d_min}, {"d_up", dr.d_max}};
    j["delta"] = rational(djr.code_delta);
    int status = kExitOk;
    try {
        j["level_bound"] = level_bound(dr.d_min, dr.d_max, djr.code_delta).m_max;
    } catch (const BoundInapplicable &e) {
        j["level_bound"] = nullptr;
        j["reason"] = e.what();
        err << "bound inapplicable: " << e.what() << "\n";
        status = kExitFalse;
    }
    emit(out, cfg, j);
    return status;
}

int cmd_omega(
    const Config &cfg, const std::string &file, std::size_t m, bool prune, uint64_t max_tuples, std::ostream &out) {
    StabilizerCode code = read_code_file(file);
    LogicalBasis basis = logical_basis(code);
    OmegaOptions opt;
    opt.coset_cap_log2 = cfg.coset_cap;
    opt.prune = prune;
    opt.max_tuples = max_tuples;
    TransversalCertificate cert = transversal_level_certificate(code, basis, m, opt);
    Json j{{"n", code.n()}, {"k", code.k()}, {"m", m}, {"omega", cert.omega}, {"d_down", cert.d_down}};
    j["certified"] = cert.certified;
    Json witness = Json::array();
    for (std::size_t i = 0; i < cert.report.witness_labels.size(); i++) {
        Json e = label_json(cert.report.witness_labels[i]);
        e["representative"] = cert.report.witness_reps[i].str();
        witness.push_back(e);
    }
    j["witness"] = witness;
    j["tuples"] = cert.report.tuples;
    j["pruned"] = cert.report.pruned;
    emit(out, cfg, j);
    return kExitOk;
}

Json label_map(const GraphCode &gc) {
    Json qubits = Json::array();
    for (std::size_t i = 0; i < gc.labels.size(); i++) {
        const QubitLabel &l = gc.labels[i];
        const char *kind = l.kind == QubitLabel::Kind::kVertexSubset ? "vertex"
                           : l.kind == QubitLabel::Kind::kEdgeSubset ? "edge"
                                                                     : "extra";
        Json e{{"qubit", i}, {"kind", kind}, {"index", l.index}, {"nu", l.nu}, {"extra", l.extra}};
        e["label"] = l.str();
        qubits.push_back(e);
    }
    return Json{{"c", gc.c}, {"num_vertices", gc.graph.num_vertices()}, {"qubits", qubits}};
}

int cmd_reduce(
    const Config &cfg, const std::string &file, std::size_t c, bool twice, const std::optional<std::string> &out_path,
    std::ostream &out) {
    Graph g = read_graph_file(file);
    if (g.num_vertices() > cfg.graph_cap) {
        throw TooLarge("graph has " + std::to_string(g.num_vertices()) + " vertices, above the cap " +
                       std::to_string(cfg.graph_cap));
    }
    if (twice) {
        g = double_graph(g);
    }
    GraphCode gc = build_graph_code(g, c, cfg.qubit_cap);
    Json j{{"vertices", g.num_vertices()}, {"edges", g.edges().size()}, {"c", c}};
    j["n"] = gc.code.n();
    j["k"] = gc.code.k();
    j["logical"] = gc.logical.rep().str();
    if (out_path) {
        write_file(*out_path, code_text(gc.code));
        write_file(*out_path + ".labels.json", label_map(gc).dump(2) + "\n");
        j["code_file"] = *out_path;
        j["label_file"] = *out_path + ".labels.json";
    } else {
        j["generators"] = paulis(gc.code.generators());
        if (cfg.output == "json") {
            j["labels"] = label_map(gc)["qubits"];
        }
    }
    emit(out, cfg, j);
    return kExitOk;
}

int emit_code(
    const Config &cfg, const StabilizerCode &code, Json j, const std::optional<std::string> &out_path,
    std::ostream &out) {
    j["n"] = code.n();
    j["k"] = code.k();
    if (out_path) {
        write_file(*out_path, code_text(code));
        j["code_file"] = *out_path;
    } else {
        j["generators"] = paulis(code.generators());
    }
    emit(out, cfg, j);
    return kExitOk;
}

int cmd_concat(
    const Config &cfg, const std::string &outer_file, const std::string &inner_file,
    const std::optional<std::string> &out_path, std::ostream &out) {
    StabilizerCode outer = read_code_file(outer_file);
    StabilizerCode inner = read_code_file(inner_file);
    if (inner.k() != 1) {
        throw InnerNotK1(inner_file + ": inner code must encode one qubit, got k = " + std::to_string(inner.k()));
    }
    LogicalBasis inner_basis = logical_basis(inner);
    StabilizerCode cat = concatenate(outer, inner, inner_basis);
    Json j{{"inner_x", inner_basis.x_ops[0].str()}, {"inner_z", inner_basis.z_ops[0].str()}};
    return emit_code(cfg, cat, j, out_path, out);
}

int cmd_hgp(
    const Config &cfg, const std::string &h1_file, const std::string &h2_file, bool full_rank,
    const std::optional<std::string> &out_path, std::ostream &out) {
    BitMatrix h1 = read_matrix_file(h1_file);
    BitMatrix h2 = read_matrix_file(h2_file);
    HypergraphProduct hp = hypergraph_product(h1, h2, full_rank);
    Json j{{"raw_rows", hp.raw.nrows()}, {"removed_rows", hp.removed_rows}};
    j["x_checks"] = hp.css.hx.nrows();
    j["z_checks"] = hp.css.hz.nrows();
    return emit_code(cfg, hp.css.code, j, out_path, out);
}

int cmd_verify_lemma3(const Config &cfg, const std::string &file, std::size_t c, bool strict, std::ostream &out) {
    Graph g = read_graph_file(file);
    Lemma3Options opt;
    opt.strict = strict;
    opt.qubit_cap = cfg.qubit_cap;
    opt.vertex_cap = cfg.graph_cap;
    opt.ilp.coset_cap_log2 = cfg.coset_cap;
    Lemma3Record rec = verify_lemma3(g, c, opt);
    Json j{{"c", c}, {"alpha", rec.alpha}, {"b", rec.b}};
    j["lhs"] = rational(rec.lhs);
    j["rhs"] = rational(rec.rhs);
    j["equal"] = rec.equal;
    j["no_isolated_vertices"] = rec.no_isolated_vertices;
    j["alpha_large_enough"] = rec.alpha_large_enough;
    j["hypothesis_met"] = rec.hypothesis_met;
    j["binding"] = rec.hypothesis_met;
    j["collection"] = paulis(rec.collection.members);
    emit(out, cfg, j);
    return rec.equal && rec.hypothesis_met ? kExitOk : kExitFalse;
}

int cmd_verify_collection(
    const Config &cfg, const std::string &file, const std::string &cls_text, std::size_t c,
    const std::string &collection_file, const std::optional<std::size_t> &min_size, std::ostream &out) {
    StabilizerCode code = read_code_file(file);
    LogicalClass cls = parse_class(code, cls_text);
    DisjointCollection col{read_paulis_file(collection_file), c};
    CollectionVerdict v = verify_collection(col, cls, min_size);
    Json j{{"valid", v.valid}, {"size", col.members.size()}, {"c", c}};
    j["non_members"] = v.non_members;
    Json over = Json::array();
    for (const auto &o : v.overloaded) {
        over.push_back(Json{{"qubit", o.qubit}, {"multiplicity", o.multiplicity}});
    }
    j["overloaded"] = over;
    if (v.size_ok) {
        j["size_ok"] = *v.size_ok;
    }
    emit(out, cfg, j);
    return v.valid ? kExitOk : kExitFalse;
}

}  // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Distance, disjointness and transversality analysis of stabilizer codes", "stabdisj"};
    app.require_subcommand(1);
    Config cfg;
    app.add_option("--output", cfg.output, "Report format")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--coset-cap", cfg.coset_cap, "Largest n - k whose cosets may be enumerated")
        ->envname("STABDISJ_COSET_CAP")
        ->check(CLI::PositiveNumber);
    app.add_option("--qubit-cap", cfg.qubit_cap, "Largest qubit count for graph codes")
        ->envname("STABDISJ_QUBIT_CAP")
        ->check(CLI::PositiveNumber);
    app.add_option("--graph-cap", cfg.graph_cap, "Largest vertex count for graph searches")
        ->envname("STABDISJ_GRAPH_CAP")
        ->check(CLI::PositiveNumber);
    app.add_option("--threads", cfg.threads, "Worker threads for per-class solves")->check(CLI::PositiveNumber);

    std::string file;
    std::string file2;
    std::optional<std::string> cls_text;
    std::string cls_required;
    std::optional<std::size_t> c_opt;
    std::size_t c = 1;
    std::optional<std::size_t> a_opt;
    std::size_t m = 2;
    bool prune = false;
    uint64_t max_tuples = OmegaOptions{}.max_tuples;
    bool twice = false;
    bool strict = false;
    bool full_rank = false;
    std::optional<std::string> out_path;
    std::string collection_file;

    auto *validate_cmd = app.add_subcommand("validate", "Check a code file");
    validate_cmd->add_option("FILE", file)->required();
    auto *logicals_cmd = app.add_subcommand("logicals", "Print a logical basis");
    logicals_cmd->add_option("FILE", file)->required();
    auto *distance_cmd = app.add_subcommand("distance", "Min and max distance over logical classes");
    distance_cmd->add_option("FILE", file)->required();
    auto *disj_cmd = app.add_subcommand("disjointness", "Per-class LP optimum, witness c, and optional c-disjointness");
    disj_cmd->add_option("FILE", file)->required();
    disj_cmd->add_option("--class", cls_text, "Representative of the class as a Pauli string");
    disj_cmd->add_option("--c", c_opt, "Solve the integer program at this c")->check(CLI::PositiveNumber);
    disj_cmd->add_option("--a", a_opt, "Decide whether a collection of this size exists (needs --c)");
    auto *code_disj_cmd = app.add_subcommand("code-disjointness", "Disjointness of the code");
    code_disj_cmd->add_option("FILE", file)->required();
    auto *bound_cmd = app.add_subcommand("bound", "Level bound from distances and disjointness");
    bound_cmd->add_option("FILE", file)->required();
    auto *omega_cmd = app.add_subcommand("omega", "Omega_M and the transversal level certificate");
    omega_cmd->add_option("FILE", file)->required();
    omega_cmd->add_option("--m", m, "Tuple size M")->required()->check(CLI::PositiveNumber);
    omega_cmd->add_flag("--prune", prune, "Skip tuples excluded by the overlap bound");
    omega_cmd->add_option("--max-tuples", max_tuples, "Cap on class tuples")->check(CLI::PositiveNumber);
    auto *reduce_cmd = app.add_subcommand("reduce", "Build the graph code and its logical class");
    reduce_cmd->add_option("GRAPH", file)->required();
    reduce_cmd->add_option("--c", c, "Disjointness constant c")->required();
    reduce_cmd->add_flag("--double", twice, "Double every vertex first");
    reduce_cmd->add_option("--out", out_path, "Write the code here and the label map next to it");
    auto *concat_cmd = app.add_subcommand("concat", "Concatenate OUTER with a one-qubit INNER code");
    concat_cmd->add_option("OUTER", file)->required();
    concat_cmd->add_option("INNER", file2)->required();
    concat_cmd->add_option("--out", out_path, "Write the code here");
    auto *hgp_cmd = app.add_subcommand("hgp", "Hypergraph product of two parity-check matrices");
    hgp_cmd->add_option("H1", file)->required();
    hgp_cmd->add_option("H2", file2)->required();
    hgp_cmd->add_flag("--require-full-rank", full_rank, "Reject rank-deficient inputs");
    hgp_cmd->add_option("--out", out_path, "Write the code here");
    auto *lemma3_cmd = app.add_subcommand("verify-lemma3", "Compare c Delta_c of the graph code with alpha + b");
    lemma3_cmd->add_option("GRAPH", file)->required();
    lemma3_cmd->add_option("--c", c, "Disjointness constant c")->required();
    lemma3_cmd->add_flag("--strict", strict, "Fail instead of reporting when the hypothesis is not met");
    auto *verify_cmd = app.add_subcommand("verify-collection", "Check a c-disjoint collection");
    verify_cmd->add_option("FILE", file)->required();
    verify_cmd->add_option("--class", cls_required, "Representative of the class")->required();
    verify_cmd->add_option("--c", c, "Allowed multiplicity per qubit")->required();
    verify_cmd->add_option("--collection", collection_file, "One Pauli string per line")->required();
    verify_cmd->add_option("--min-size", a_opt, "Also require at least this many members");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << "\n";
        return kExitInput;
    }

    try {
        if (validate_cmd->parsed()) {
            return cmd_validate(cfg, file, out);
        }
        if (logicals_cmd->parsed()) {
            return cmd_logicals(cfg, file, out);
        }
        if (distance_cmd->parsed()) {
            return cmd_distance(cfg, file, out);
        }
        if (disj_cmd->parsed()) {
            if (a_opt && !c_opt) {
                throw InvalidC("--a needs --c");
            }
            return cmd_disjointness(cfg, file, cls_text, c_opt, a_opt, out);
        }
        if (code_disj_cmd->parsed()) {
            return cmd_code_disjointness(cfg, file, out);
        }
        if (bound_cmd->parsed()) {
            return cmd_bound(cfg, file, out, err);
        }
        if (omega_cmd->parsed()) {
            return cmd_omega(cfg, file, m, prune, max_tuples, out);
        }
        if (reduce_cmd->parsed()) {
            return cmd_reduce(cfg, file, c, twice, out_path, out);
        }
        if (concat_cmd->parsed()) {
            return cmd_concat(cfg, file, file2, out_path, out);
        }
        if (hgp_cmd->parsed()) {
            return cmd_hgp(cfg, file, file2, full_rank, out_path, out);
        }
        if (lemma3_cmd->parsed()) {
            return cmd_verify_lemma3(cfg, file, c, strict, out);
        }
        if (verify_cmd->parsed()) {
            return cmd_verify_collection(cfg, file, cls_required, c, collection_file, a_opt, out);
        }
    } catch (const InputError &e) {
        err << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const ResourceError &e) {
        err << "resource limit: " << e.what() << "\n";
        return kExitResource;
    } catch (const InapplicableError &e) {
        err << "inapplicable: " << e.what() << "\n";
        return kExitFalse;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitInput;
}

}  // namespace stabdisj
