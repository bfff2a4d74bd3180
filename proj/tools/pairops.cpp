// Command-line front end: scripted example reproductions, property suites,
// and ad-hoc monomial / semigroup / duality computations.
//
// Exit codes: 0 all assertions or properties hold, 1 a counterexample or a
// failed assertion, 2 input error.

#include <CLI11.hpp>
#include <json.hpp>

#include <pairops/examples.hpp>

#include <iostream>

using nlohmann::json;
using namespace pairops;

namespace {

json report_to_json(const ExampleReport& r) {
    json out;
    out["id"] = r.id;
    out["seed"] = r.seed;
    out["ok"] = r.ok();
    out["assertions"] = json::array();
    for (const auto& a : r.assertions)
        out["assertions"].push_back({{"label", a.label},
                                     {"computed", a.computed},
                                     {"expected", a.expected},
                                     {"tag", a.tag},
                                     {"pass", a.pass}});
    return out;
}

void print_report(const ExampleReport& r) {
    std::cout << "example " << r.id << " (seed " << r.seed << ")\n";
    for (const auto& a : r.assertions) {
        std::cout << "  [" << (a.pass ? "PASS" : "FAIL") << "] " << a.label << ": "
                  << a.computed;
        if (!a.pass) std::cout << "  (expected " << a.expected << ")";
        std::cout << "  {" << a.tag << "}\n";
    }
    std::cout << (r.ok() ? "all assertions pass" : "ASSERTION FAILURES") << "\n";
}

json property_to_json(const PropertyReport& rep, unsigned seed) {
    json out = {{"property", rep.property}, {"op", rep.op},
                {"context", rep.context},   {"samples", rep.samples},
                {"seed", seed},             {"verdict", rep.holds ? "holds" : "fails"}};
    if (!rep.holds) out["witness"] = {{"description", rep.witness}};
    return out;
}

// Build the named operation over A; J is a generator list or "m".
PairOpHandle build_op(const std::string& name, const std::string& J,
                      const AlgebraPtr& A) {
    SubspaceModule Jmod = J == "m" ? maximal_ideal(A) : parse_ideal_in(A, J);
    std::string jname = J == "m" ? "m" : "(" + J + ")";
    if (name == "identity") return op_identity();
    if (name == "jbf") return op_jbf(Jmod, jname);
    if (name == "jbe") return op_jbe(Jmod, jname);
    throw std::invalid_argument("unknown op '" + name + "' (identity, jbf, jbe)");
}

PairOpHandle apply_variant(PairOpHandle op, const std::string& variant,
                           const AlgebraPtr& A) {
    if (variant.empty()) return op;
    if (variant == "residual") return residual_version(op);
    if (variant == "hereditary") return hereditary_version(op);
    if (variant == "smile") {
        if (!structure_invariants(A).is_gorenstein)
            throw std::invalid_argument("smile dual needs a Gorenstein context");
        return smile_dual(op);
    }
    throw std::invalid_argument("unknown variant '" + variant +
                                "' (residual, hereditary, smile)");
}

std::vector<std::string> split_csv(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == ',') {
            if (!cur.empty()) out.push_back(cur);
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
            cur += c;
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact pair-operation workbench"};
    app.require_subcommand(1);

    // ---- example -----------------------------------------------------------
    std::string example_id;
    bool as_json = false;
    auto* ex = app.add_subcommand("example", "run a registry example");
    ex->add_option("id", example_id, "registry id")->required();
    ex->add_flag("--json", as_json, "JSON output");

    // ---- suite -------------------------------------------------------------
    std::string op_name = "identity", op_J = "m", op_variant, ctx_spec, props_csv;
    unsigned seed = 2024;
    int max_samples = 600;
    bool exhaustive = false;
    auto* suite = app.add_subcommand("suite", "property checks for an operation");
    suite->add_option("--op", op_name, "identity | jbf | jbe")->required();
    suite->add_option("--J", op_J, "ideal generators, or m");
    suite->add_option("--variant", op_variant, "residual | hereditary | smile");
    suite->add_option("--ctx", ctx_spec,
                      "algebra spec, e.g. 'artinian p=2 vars=x,y trunc=8'")
        ->required();
    suite->add_option("--props", props_csv, "comma-separated property names")->required();
    suite->add_option("--seed", seed, "sample seed");
    suite->add_option("--samples", max_samples, "max sampled pairs");
    suite->add_flag("--exhaustive", exhaustive, "no sample cap");
    suite->add_flag("--json", as_json, "JSON output");

    // ---- monomial ----------------------------------------------------------
    std::string mon_verb, mon_a, mon_b;
    auto* mon = app.add_subcommand("monomial", "monomial ideal arithmetic");
    mon->add_option("verb", mon_verb, "colon | closure | rr")->required();
    mon->add_option("I", mon_a, "first ideal")->required();
    mon->add_option("J", mon_b, "second ideal (colon only)");

    // ---- semigroup ---------------------------------------------------------
    std::string sg_gens, sg_verb, sg_J = "m", sg_ideal, sg_mode = "relative";
    auto* sg = app.add_subcommand("semigroup", "value ideal computations");
    sg->add_option("gens", sg_gens, "semigroup generators, e.g. 2,5")->required();
    sg->add_option("verb", sg_verb, "interior | colon")->required();
    sg->add_option("--J", sg_J, "value ideal generators, or m");
    sg->add_option("--ideal", sg_ideal, "target value ideal")->required();
    sg->add_option("--mode", sg_mode, "relative | absolute");

    // ---- dualize -----------------------------------------------------------
    std::string du_op = "jbf", du_J = "m", du_ctx;
    auto* du = app.add_subcommand("dualize", "smile dual over a Gorenstein context");
    du->add_option("--op", du_op, "identity | jbf | jbe")->required();
    du->add_option("--J", du_J, "ideal generators, or m");
    du->add_option("--ctx", du_ctx, "algebra spec")->required();
    du->add_flag("--json", as_json, "JSON output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*ex) {
            ExampleReport r = run_example(example_id);
            if (as_json)
                std::cout << report_to_json(r).dump(2) << "\n";
            else
                print_report(r);
            return r.ok() ? 0 : 1;
        }

        if (*suite) {
            AlgebraPtr A = parse_algebra_spec(ctx_spec);
            PairOpHandle op =
                apply_variant(build_op(op_name, op_J, A), op_variant, A);
            auto ideals = enumerate_ideals(A, 2);
            std::size_t cap = exhaustive ? ideals.size() * ideals.size() + 1
                                         : static_cast<std::size_t>(max_samples);
            PairContext ctx = make_context(A, 1, ideals, ctx_spec, seed, cap);
            bool all_hold = true;
            json arr = json::array();
            for (const auto& prop : split_csv(props_csv)) {
                PropertyReport rep = check_property(prop, op, ctx);
                all_hold = all_hold && rep.holds;
                if (as_json) {
                    arr.push_back(property_to_json(rep, seed));
                } else {
                    std::cout << rep.property << " for " << rep.op << " over "
                              << rep.context << ": "
                              << (rep.holds ? "holds" : "fails") << " ("
                              << rep.samples << " samples)\n";
                    if (!rep.holds) std::cout << "  witness: " << rep.witness << "\n";
                }
            }
            if (as_json) std::cout << arr.dump(2) << "\n";
            return all_hold ? 0 : 1;
        }

        if (*mon) {
            MonomialIdeal I = parse_ideal(mon_a);
            if (mon_verb == "colon") {
                if (mon_b.empty())
                    throw std::invalid_argument("monomial colon needs two ideals");
                MonomialIdeal J = parse_ideal(mon_b, I.n);
                std::cout << to_string(ideal_colon(I, J)) << "\n";
            } else if (mon_verb == "closure") {
                ClosureResult c = newton_closure(I);
                std::cout << to_string(c.ideal)
                          << (c.certified ? "" : "  (uncertified)") << "\n";
            } else if (mon_verb == "rr") {
                RatliffRushResult c = ratliff_rush(I, 8);
                std::cout << to_string(c.ideal)
                          << (c.stabilized ? "" : "  (not stabilized)") << "\n";
            } else {
                throw std::invalid_argument("unknown monomial verb '" + mon_verb + "'");
            }
            return 0;
        }

        if (*sg) {
            std::vector<int> gens;
            for (const auto& s : split_csv(sg_gens)) gens.push_back(std::stoi(s));
            auto S = semigroup_invariants(gens);
            ValueIdeal J = sg_J == "m" ? value_ideal_from_gens(S, S.gens)
                                       : parse_value_ideal(S, sg_J);
            ValueIdeal I = parse_value_ideal(S, sg_ideal);
            if (sg_verb == "interior") {
                InteriorMode mode = sg_mode == "absolute" ? InteriorMode::absolute
                                                          : InteriorMode::relative;
                auto result = interior_pair(mode, J, I);
                std::cout << to_string(result) << "\n";
            } else if (sg_verb == "colon") {
                ColonMode mode =
                    sg_mode == "absolute" ? ColonMode::in_Q : ColonMode::in_R;
                std::cout << to_string(value_colon(mode, I, J)) << "\n";
            } else {
                throw std::invalid_argument("unknown semigroup verb '" + sg_verb + "'");
            }
            return 0;
        }

        if (*du) {
            AlgebraPtr A = parse_algebra_spec(du_ctx);
            if (!structure_invariants(A).is_gorenstein)
                throw std::invalid_argument("dualize needs a Gorenstein context");
            PairOpHandle op = build_op(du_op, du_J, A);
            PairOpHandle dual = smile_dual(op);
            PairOpHandle partner = du_op == "jbf"   ? build_op("jbe", du_J, A)
                                   : du_op == "jbe" ? build_op("jbf", du_J, A)
                                                    : op_identity();
            auto ideals = enumerate_ideals(A, 2);
            json rows = json::array();
            bool matches = true;
            for (const auto& I : ideals) {
                PairTriple T = make_triple(A, 1, zero_subspace(A->p, A->dim), I.space);
                Subspace value = evaluate(dual, T);
                matches = matches && value == evaluate(partner, T);
                if (as_json)
                    rows.push_back({{"ideal", to_string(A, I.space, 1)},
                                    {"dual_value", to_string(A, value, 1)}});
                else
                    std::cout << to_string(A, I.space, 1) << "  ->  "
                              << to_string(A, value, 1) << "\n";
            }
            std::string verdict = "dual of " + op.name + " agrees with " + partner.name +
                                  " on all " + std::to_string(ideals.size()) + " ideals: " +
                                  (matches ? "yes" : "no");
            if (as_json)
                std::cout << json{{"op", op.name},
                                  {"dual_of", partner.name},
                                  {"agrees", matches},
                                  {"values", rows}}
                                 .dump(2)
                          << "\n";
            else
                std::cout << verdict << "\n";
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
