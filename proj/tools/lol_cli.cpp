// lol: compute logical-order operations on JSON inputs and run axiom suites.
//
//   lol compute <op> <inputs...> [--bound c.json]
//   lol verify <matrix|rv|pf|poset-file|builtin> [suite[,suite...]|all]
//   lol poset validate <file>
//
// Exit codes: 0 success, 1 bad input or failed verification, 2 undefined
// partial operation.

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lol/lol.hpp"

namespace {

using lol::HermitianOperator;
using lol::ordered_json;
using Pf = lol::PartialFunction<std::string, std::string>;
using Rv = lol::RandomVariable<double>;

struct ComputeArgs {
    std::string op;
    std::vector<std::string> inputs;
    std::string bound;
};

void emit(const std::string& text, const lol::RunConfig& rc) {
    if (rc.output.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(rc.output);
    if (!out) throw lol::InputError("cannot write '" + rc.output + "'");
    out << text;
}

std::string render(const ordered_json& doc, const lol::RunConfig& rc) {
    if (rc.format == "json") return doc.dump(2) + "\n";
    std::string s;
    for (const auto& [k, v] : doc.items()) s += k + ": " + (v.is_string() ? v.get<std::string>() : v.dump()) + "\n";
    return s;
}

void require_inputs(const ComputeArgs& a, std::size_t n) {
    if (a.inputs.size() != n)
        throw lol::InputError("'" + a.op + "' takes " + std::to_string(n) + " input file(s), got " +
                              std::to_string(a.inputs.size()));
}

std::vector<HermitianOperator> load_operators(const std::vector<std::string>& paths) {
    std::vector<HermitianOperator> out;
    for (const auto& p : paths) out.push_back(lol::operator_from_json(lol::load_json_file(p)));
    for (std::size_t i = 1; i < out.size(); ++i) HermitianOperator::require_same_dim(out[0].dim(), out[i].dim());
    return out;
}

ordered_json compute_operator(const ComputeArgs& a, const lol::RunConfig& rc) {
    const auto& tol = rc.tol;
    ordered_json doc;
    doc["op"] = a.op;
    ordered_json ver;
    auto sensitive = [&](const std::vector<HermitianOperator>& ops) {
        for (const auto& x : ops)
            if (lol::rank_tolerance_sensitive(x, tol)) return true;
        return false;
    };

    if (a.op == "join" || (a.op == "meet" && !a.bound.empty())) {
        if (a.bound.empty()) throw lol::InputError("'join' needs an upper bound: pass --bound c.json");
        if (a.inputs.empty()) throw lol::InputError("'" + a.op + "' needs at least one input");
        auto family = load_operators(a.inputs);
        const auto c = lol::operator_from_json(lol::load_json_file(a.bound));
        HermitianOperator::require_same_dim(family[0].dim(), c.dim());
        const bool is_join = a.op == "join";
        const auto r = is_join ? lol::join_bounded(family, c, tol) : lol::meet_bounded(family, c, tol);
        bool all = true;
        for (const auto& x : family) all = all && (is_join ? lol::logical_le(x, r, tol) : lol::logical_le(r, x, tol));
        doc["result"] = lol::operator_to_json(r);
        ver[is_join ? "upper_bound_of_all" : "lower_bound_of_all"] = all;
        ver["below_bound"] = lol::logical_le(r, c, tol);
        family.push_back(c);
        ver["tolerance_sensitive"] = sensitive(family);
        doc["verification"] = ver;
        return doc;
    }

    require_inputs(a, 2);
    const auto ops = load_operators(a.inputs);
    const HermitianOperator &x = ops[0], &y = ops[1];
    ver["tolerance_sensitive"] = sensitive(ops);
    if (a.op == "le") {
        doc["result"] = lol::logical_le(x, y, tol);
    } else if (a.op == "perp") {
        doc["result"] = lol::orthogonal(x, y, tol);
    } else if (a.op == "overridden") {
        doc["result"] = lol::overridden(x, y, tol);
    } else if (a.op == "osum") {
        const auto r = lol::osum(x, y, tol);
        doc["result"] = lol::operator_to_json(r);
        ver["a_le_result"] = lol::logical_le(x, r, tol);
        ver["b_le_result"] = lol::logical_le(y, r, tol);
    } else if (a.op == "meet") {
        const auto r = lol::meet(x, y, tol);
        doc["result"] = lol::operator_to_json(r);
        ver["le_a"] = lol::logical_le(r, x, tol);
        ver["le_b"] = lol::logical_le(r, y, tol);
    } else if (a.op == "bck") {
        const auto r = lol::bck_subtract(x, y, tol);
        doc["result"] = lol::operator_to_json(r);
        ver["le_b"] = lol::logical_le(r, x, tol);
    } else if (a.op == "complement") {
        const auto r = lol::segment_complement(x, y, tol);
        doc["result"] = lol::operator_to_json(r);
        ver["le_b"] = lol::logical_le(r, y, tol);
        ver["orthogonal_to_a"] = lol::orthogonal(r, x, tol);
        ver["a_osum_result_is_b"] = lol::op_equal(x + r, y, tol);
    } else if (a.op == "skew") {
        const auto r = lol::skew_meet(x, y, tol);
        doc["result"] = lol::operator_to_json(r);
        ver["le_b"] = lol::logical_le(r, y, tol);
        ver["overridden_by_a"] = lol::overridden(r, x, tol);
    } else {
        throw lol::InputError("unknown operation '" + a.op + "'");
    }
    doc["verification"] = ver;
    return doc;
}

ordered_json compute_pf(const ComputeArgs& a) {
    std::vector<Pf> f;
    for (const auto& p : a.inputs) f.push_back(lol::pf_from_json(lol::load_json_file(p)));
    require_inputs(a, 2);
    ordered_json doc;
    doc["op"] = a.op;
    const std::string op = a.op.substr(3);
    if (op == "union") doc["result"] = lol::pf_to_json(lol::pf_union(f[0], f[1]));
    else if (op == "intersect") doc["result"] = lol::pf_to_json(lol::pf_intersect(f[0], f[1]));
    else if (op == "skew") doc["result"] = lol::pf_to_json(lol::pf_skew_intersect(f[0], f[1]));
    else if (op == "difference") doc["result"] = lol::pf_to_json(lol::pf_difference(f[0], f[1]));
    else if (op == "osum") {
        if (!lol::pf_perp(f[0], f[1])) throw lol::NotOrthogonal();
        doc["result"] = lol::pf_to_json(lol::pf_union(f[0], f[1]));
    } else if (op == "perp") doc["result"] = lol::pf_perp(f[0], f[1]);
    else if (op == "le") doc["result"] = lol::pf_le(f[0], f[1]);
    else if (op == "overridden") doc["result"] = lol::pf_overridden(f[0], f[1]);
    else throw lol::InputError("unknown operation '" + a.op + "'");
    return doc;
}

ordered_json compute_rv(const ComputeArgs& a) {
    std::vector<Rv> f;
    for (const auto& p : a.inputs) f.push_back(lol::rv_from_json(lol::load_json_file(p)));
    ordered_json doc;
    doc["op"] = a.op;
    const std::string op = a.op.substr(3);
    if (op == "join") {
        require_inputs(a, 2);
        if (a.bound.empty()) throw lol::InputError("'rv-join' needs an upper bound: pass --bound h.json");
        const Rv h = lol::rv_from_json(lol::load_json_file(a.bound));
        doc["result"] = lol::rv_to_json(lol::rv_join_bounded(f[0], f[1], h));
        return doc;
    }
    require_inputs(a, 2);
    if (op == "meet") doc["result"] = lol::rv_to_json(lol::rv_meet(f[0], f[1]));
    else if (op == "osum") doc["result"] = lol::rv_to_json(lol::rv_osum(f[0], f[1]));
    else if (op == "bck") doc["result"] = lol::rv_to_json(lol::rv_bck(f[0], f[1]));
    else if (op == "skew") doc["result"] = lol::rv_to_json(lol::rv_skew_meet(f[0], f[1]));
    else if (op == "perp") doc["result"] = lol::rv_perp(f[0], f[1]);
    else if (op == "le") doc["result"] = lol::rv_le(f[0], f[1]);
    else if (op == "overridden") doc["result"] = lol::rv_overridden(f[0], f[1]);
    else throw lol::InputError("unknown operation '" + a.op + "'");
    return doc;
}

int run_compute(const ComputeArgs& a, const lol::RunConfig& rc) {
    rc.validate();
    ordered_json doc;
    if (a.op.rfind("pf-", 0) == 0) doc = compute_pf(a);
    else if (a.op.rfind("rv-", 0) == 0) doc = compute_rv(a);
    else doc = compute_operator(a, rc);
    emit(render(doc, rc), rc);
    return 0;
}

int verify_command(const std::string& target, const std::string& suite, const lol::RunConfig& rc) {
    const auto result = lol::run_verify(target, suite, rc);
    emit(rc.format == "json" ? result.reports.dump(2) + "\n" : lol::reports_table(result.reports), rc);
    return result.ok ? 0 : 1;
}

int run_poset_validate(const std::string& path, const lol::RunConfig& rc) {
    const auto p = lol::poset_from_json(lol::load_json_file(path));
    const auto ubp = lol::has_ubp(p);
    ordered_json doc;
    doc["valid"] = true;
    doc["elements"] = p.size();
    doc["orthogonality"] = p.has_ortho();
    doc["upper_bound_property"] = ubp.holds;
    if (ubp.witness) doc["ubp_witness"] = {ubp.witness->first, ubp.witness->second};
    emit(render(doc, rc), rc);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Logical order on self-adjoint operators: operations and axiom checks"};
    app.require_subcommand(1);

    lol::RunConfig rc;
    std::optional<std::uint64_t> seed;
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--seed", seed, "RNG seed (default: $LOL_SEED, else 0)");
        sub->add_option("--samples", rc.samples, "sampled tuples per law")->capture_default_str();
        sub->add_option("--dim", rc.dim, "matrix dimension")->capture_default_str();
        sub->add_option("--rank-tol", rc.tol.rank_rel_tol, "relative eigenvalue cutoff")->capture_default_str();
        sub->add_option("--eq-tol", rc.tol.eq_abs_tol, "operator equality threshold")->capture_default_str();
        sub->add_option("--format", rc.format, "json or table")->capture_default_str();
        sub->add_option("--out", rc.output, "write to file instead of stdout");
    };

    ComputeArgs compute;
    auto* c = app.add_subcommand("compute", "compute one operation on JSON inputs");
    c->add_option("op", compute.op, "le perp osum meet join bck complement overridden skew pf-* rv-*")->required();
    c->add_option("inputs", compute.inputs, "input files")->required();
    c->add_option("--bound", compute.bound, "upper bound for join / bounded meet");
    add_common(c);

    std::string target, suite = "all";
    auto* v = app.add_subcommand("verify", "run axiom suites on a model or poset");
    v->add_option("target", target, "matrix, rv, pf, a poset file or a built-in poset")->required();
    v->add_option("suite", suite, "nearsemilattice absorption ortho qom goa riesz bck skew oml, comma-separated, or all")
        ->capture_default_str();
    add_common(v);

    std::string poset_path;
    auto* p = app.add_subcommand("poset", "poset utilities");
    p->require_subcommand(1);
    auto* pv = p->add_subcommand("validate", "load and validate a poset file");
    pv->add_option("file", poset_path, "poset JSON")->required();
    add_common(pv);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    if (seed) {
        rc.seed = *seed;
    } else if (const char* env = std::getenv("LOL_SEED")) {
        try {
            rc.seed = std::stoull(env);
        } catch (const std::exception&) {
            std::cerr << "error: InputError: LOL_SEED is not an unsigned integer\n";
            return 1;
        }
    }

    try {
        if (c->parsed()) return run_compute(compute, rc);
        if (v->parsed()) return verify_command(target, suite, rc);
        if (pv->parsed()) return run_poset_validate(poset_path, rc);
    } catch (const lol::Undefined& e) {
        std::cerr << "undefined: " << e.kind() << ": " << e.what() << "\n";
        return 2;
    } catch (const lol::Error& e) {
        std::cerr << "error: " << e.kind() << ": " << e.what() << "\n";
        return 1;
    }
    return 1;
}
