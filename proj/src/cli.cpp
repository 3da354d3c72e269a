#include "schurkit/cli.hpp"

#include <cstdlib>
#include <ostream>

#include "CLI11.hpp"
#include "acceptance/selftest.hpp"
#include "schurkit/branching.hpp"
#include "schurkit/clifford.hpp"
#include "schurkit/cohomology.hpp"
#include "schurkit/expr.hpp"
#include "schurkit/inner_alg.hpp"
#include "schurkit/json_io.hpp"
#include "schurkit/outer_hopf.hpp"
#include "schurkit/series.hpp"

namespace schurkit {

namespace {

using nlohmann::json;

struct Options {
    int max_weight = 10;
    bool as_json = false;
    char out_basis = 's';
    std::vector<std::string> warnings;
};

SymFunc parse_arg(Options& opt, const std::string& text) {
    bool warned = false;
    SymFunc f = parse_expression(text, &warned);
    if (warned)
        opt.warnings.push_back("partition in '" + text + "' was not non-increasing; canonicalized");
    return f;
}

Partition parse_partition_arg(Options& opt, const std::string& text) {
    bool warned = false;
    Partition p = parse_partition(text, &warned);
    if (warned)
        opt.warnings.push_back("partition '" + text + "' was not non-increasing; canonicalized");
    return p;
}

void attach_warnings(const Options& opt, json& j) {
    if (!opt.warnings.empty()) j["warnings"] = opt.warnings;
}

void flush_warnings(const Options& opt, std::ostream& err) {
    for (const auto& w : opt.warnings) err << "warning: " << w << "\n";
}

void emit_symfunc(const Options& opt, const SymFunc& f, std::ostream& out,
                  std::ostream& err) {
    SymFunc shown = convert(f, basis_from_letter(opt.out_basis));
    if (opt.as_json) {
        json j = to_json(shown);
        attach_warnings(opt, j);
        out << j.dump() << "\n";
    } else {
        flush_warnings(opt, err);
        out << to_string(shown) << "\n";
    }
}

void emit_tensor(const Options& opt, const TensorExp& t, std::ostream& out,
                 std::ostream& err) {
    std::vector<Basis> slots(static_cast<size_t>(t.arity()),
                             basis_from_letter(opt.out_basis));
    TensorExp shown = t.converted(slots);
    if (opt.as_json) {
        json j = to_json(shown);
        attach_warnings(opt, j);
        out << j.dump() << "\n";
    } else {
        flush_warnings(opt, err);
        out << to_string(shown) << "\n";
    }
}

void emit_value(const Options& opt, const Rat& v, std::ostream& out,
                std::ostream& err) {
    if (opt.as_json) {
        json j;
        j["value"] = rat_to_string(v);
        attach_warnings(opt, j);
        out << j.dump() << "\n";
    } else {
        flush_warnings(opt, err);
        out << rat_to_string(v) << "\n";
    }
}

void emit_report(const Options& opt, bool ok, const std::vector<std::string>& lines,
                 std::ostream& out, std::ostream& err) {
    if (opt.as_json) {
        json j;
        j["ok"] = ok;
        j["lines"] = lines;
        attach_warnings(opt, j);
        out << j.dump() << "\n";
    } else {
        flush_warnings(opt, err);
        out << (ok ? "pass" : "fail") << "\n";
        for (const auto& line : lines) out << "  " << line << "\n";
    }
}

// Cochain definition mini-language: counit | series:X | schur | schur-inv |
// d(<spec>) | table:{[2,1]:1,[1]:1/2}
Cochain parse_cochain_spec(const std::string& spec, int arity, int max_weight) {
    auto strip = [](std::string s) {
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
            s.erase(s.begin());
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
            s.pop_back();
        return s;
    };
    std::string t = strip(spec);
    if (t == "counit" || t == "trivial") return Cochain::counit(arity);
    if (t.rfind("series:", 0) == 0) {
        if (arity != 1) throw domain_error("series cochains have arity 1");
        return characteristic_cochain(series_from_name(t.substr(7)), max_weight);
    }
    if (t == "schur") {
        if (arity != 2) throw domain_error("schur pairing has arity 2");
        return schur_pairing();
    }
    if (t == "schur-inv") {
        if (arity != 2) throw domain_error("schur-inv pairing has arity 2");
        return schur_pairing_inverse();
    }
    if (t.rfind("d(", 0) == 0 && t.back() == ')') {
        if (arity != 2) throw domain_error("a coboundary d(...) has arity 2");
        Cochain inner = parse_cochain_spec(t.substr(2, t.size() - 3), 1, max_weight);
        return coboundary(inner);
    }
    if (t.rfind("table:{", 0) == 0 && t.back() == '}') {
        if (arity != 1) throw domain_error("table cochains have arity 1");
        std::string body = t.substr(7, t.size() - 8);
        Cochain::Table table;
        size_t pos = 0;
        while (pos < body.size()) {
            size_t close = body.find(']', pos);
            if (close == std::string::npos)
                throw domain_error("malformed table cochain: " + spec);
            Partition p = parse_partition(body.substr(pos, close - pos + 1));
            size_t colon = body.find(':', close);
            if (colon == std::string::npos)
                throw domain_error("expected ':' in table cochain: " + spec);
            size_t comma = body.find(",[", colon);
            size_t end = comma == std::string::npos ? body.size() : comma;
            Rat v = rat_from_string(body.substr(colon + 1, end - colon - 1));
            if (p.empty()) {
                if (v != 1) throw domain_error("a cochain is normalized: value on [] must be 1");
            } else {
                table[{p}] = v;
            }
            pos = end == body.size() ? end : end + 1;
        }
        return Cochain::table(1, std::move(table));
    }
    throw domain_error("unknown cochain definition: " + spec);
}

int dispatch(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err) {
    Options opt;
    if (const char* env = std::getenv("SCHURKIT_MAX_WEIGHT")) {
        try {
            opt.max_weight = std::stoi(env);
        } catch (...) {
            throw domain_error("SCHURKIT_MAX_WEIGHT is not an integer");
        }
    }

    CLI::App app{"exact computer algebra for symmetric functions"};
    app.name("schurkit");
    app.set_help_all_flag("--help-all");
    app.require_subcommand(1);
    app.add_option("--max-weight", opt.max_weight,
                   "weight cap for series and classification bounds")
        ->capture_default_str();
    app.add_flag("--json", opt.as_json, "emit JSON instead of text");
    app.add_option("--basis", opt.out_basis, "output basis: s, h, e, m or p")
        ->check(CLI::IsMember({'s', 'h', 'e', 'm', 'p'}))
        ->capture_default_str();

    std::string left, right, input, by, series_id_name, pairing_name = "schur";
    std::string cochain_def, case_name, flavor = "sp", from_basis, to_basis;
    std::string mu_text, lambda_text;
    int cap = -1, variant = 1, arity = 1, weight = 0;
    bool inverse = false;

    auto* prod = app.add_subcommand("prod", "outer product of two expressions");
    prod->add_option("left", left)->required();
    prod->add_option("right", right)->required();

    auto* inner = app.add_subcommand("inner", "inner (Kronecker) product");
    inner->add_option("left", left)->required();
    inner->add_option("right", right)->required();

    auto* coprod = app.add_subcommand("coprod", "outer coproduct");
    coprod->add_option("input", input)->required();

    auto* icoprod = app.add_subcommand("icoprod", "inner coproduct");
    icoprod->add_option("input", input)->required();

    auto* skew_cmd = app.add_subcommand("skew", "skew: input / by");
    skew_cmd->add_option("input", input)->required();
    skew_cmd->add_option("by", by)->required();

    auto* antipode_cmd = app.add_subcommand("antipode", "Hopf antipode");
    antipode_cmd->add_option("input", input)->required();

    auto* scalar = app.add_subcommand("scalar", "Schur scalar product");
    scalar->add_option("left", left)->required();
    scalar->add_option("right", right)->required();

    auto* kostka_cmd = app.add_subcommand("kostka", "Kostka number K_{mu,lambda}");
    kostka_cmd->add_option("mu", mu_text)->required();
    kostka_cmd->add_option("lambda", lambda_text)->required();

    auto* char_cmd = app.add_subcommand("char", "symmetric group character chi^lambda_mu");
    char_cmd->add_option("lambda", lambda_text)->required();
    char_cmd->add_option("mu", mu_text)->required();

    auto* transition = app.add_subcommand("transition", "transition matrix block");
    transition->add_option("from", from_basis)->required();
    transition->add_option("to", to_basis)->required();
    transition->add_option("weight", weight)->required();

    auto* series_cmd = app.add_subcommand("series", "S-function series expansion");
    series_cmd->add_option("--id", series_id_name, "one of L M P Q A B C D E F G H R S V W")
        ->required();
    series_cmd->add_option("--cap", cap, "weight cap (defaults to --max-weight)");

    auto* branch = app.add_subcommand("branch", "apply a series branching operator");
    branch->add_option("--series", series_id_name)->required();
    branch->add_option("--input", input)->required();
    branch->add_flag("--inverse", inverse, "apply the inverse operator");

    auto* dprod = app.add_subcommand("dprod", "series-deformed outer product");
    dprod->add_option("--series", series_id_name)->required();
    dprod->add_option("--left", left)->required();
    dprod->add_option("--right", right)->required();

    auto* circle = app.add_subcommand("circle", "cliffordized circle product");
    circle->add_option("--pairing", pairing_name, "schur | schur-inv")
        ->check(CLI::IsMember({"schur", "schur-inv"}))
        ->capture_default_str();
    circle->add_option("--variant", variant, "coproduct/product combination 1..8")
        ->check(CLI::Range(1, 8))
        ->capture_default_str();
    circle->add_option("--gauge", series_id_name,
                       "gauge the pairing by the coboundary of a series cochain");
    circle->add_option("--left", left)->required();
    circle->add_option("--right", right)->required();

    auto* nl = app.add_subcommand("nl", "Newell-Littlewood product of universal characters");
    nl->add_option("--flavor", flavor, "sp | o")
        ->check(CLI::IsMember({"sp", "o"}))
        ->capture_default_str();
    nl->add_option("--left", left)->required();
    nl->add_option("--right", right)->required();

    auto* classify = app.add_subcommand("classify-cochain", "Sweedler cohomology class");
    classify->add_option("--arity", arity)->check(CLI::Range(1, 2))->required();
    classify->add_option("--def", cochain_def, "counit | series:X | schur | schur-inv | d(...) | table:{...}")
        ->required();

    auto* check = app.add_subcommand("check-case", "product/coproduct pairing laws");
    check->add_option("case", case_name, "I, II, III or IV")->required();

    auto* selftest_cmd = app.add_subcommand("selftest", "run the acceptance suite");
    (void)selftest_cmd;

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == static_cast<int>(CLI::ExitCodes::Success)) {
            out << app.help();
            return 0;
        }
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    if (prod->parsed()) {
        emit_symfunc(opt, outer_product(parse_arg(opt, left), parse_arg(opt, right)),
                     out, err);
    } else if (inner->parsed()) {
        emit_symfunc(opt, inner_product(parse_arg(opt, left), parse_arg(opt, right)),
                     out, err);
    } else if (coprod->parsed()) {
        emit_tensor(opt, outer_coproduct(parse_arg(opt, input)), out, err);
    } else if (icoprod->parsed()) {
        emit_tensor(opt, inner_coproduct(parse_arg(opt, input)), out, err);
    } else if (skew_cmd->parsed()) {
        emit_symfunc(opt, skew(parse_arg(opt, input), parse_arg(opt, by)), out, err);
    } else if (antipode_cmd->parsed()) {
        emit_symfunc(opt, antipode(parse_arg(opt, input)), out, err);
    } else if (scalar->parsed()) {
        emit_value(opt, schur_scalar(parse_arg(opt, left), parse_arg(opt, right)), out,
                   err);
    } else if (kostka_cmd->parsed()) {
        long long k = kostka(parse_partition_arg(opt, mu_text),
                             parse_partition_arg(opt, lambda_text));
        emit_value(opt, to_rat(k), out, err);
    } else if (char_cmd->parsed()) {
        long long chi = sn_character(parse_partition_arg(opt, lambda_text),
                                     parse_partition_arg(opt, mu_text));
        emit_value(opt, to_rat(chi), out, err);
    } else if (transition->parsed()) {
        if (from_basis.size() != 1 || to_basis.size() != 1)
            throw domain_error("bases are single letters s, h, e, m, p");
        TransitionMatrix tm = transition_matrix(basis_from_letter(from_basis[0]),
                                                basis_from_letter(to_basis[0]), weight);
        if (opt.as_json) {
            json j;
            j["from"] = from_basis;
            j["to"] = to_basis;
            j["weight"] = weight;
            json idx = json::array();
            for (const auto& p : tm.index) idx.push_back(p.parts());
            j["index"] = std::move(idx);
            json rows = json::array();
            for (const auto& row : tm.entries) {
                json r = json::array();
                for (const auto& v : row) r.push_back(rat_to_string(v));
                rows.push_back(std::move(r));
            }
            j["entries"] = std::move(rows);
            attach_warnings(opt, j);
            out << j.dump() << "\n";
        } else {
            flush_warnings(opt, err);
            out << "index:";
            for (const auto& p : tm.index) out << " " << to_string(p);
            out << "\n";
            for (size_t i = 0; i < tm.entries.size(); ++i) {
                out << to_string(tm.index[i]) << ":";
                for (const auto& v : tm.entries[i]) out << " " << rat_to_string(v);
                out << "\n";
            }
        }
    } else if (series_cmd->parsed()) {
        int use_cap = cap >= 0 ? cap : opt.max_weight;
        TruncatedSeries ts = series(series_from_name(series_id_name), use_cap);
        emit_symfunc(opt, ts.expansion, out, err);
    } else if (branch->parsed()) {
        BranchingOperator op =
            series_branch(series_from_name(series_id_name), opt.max_weight);
        if (inverse) op = inverse_branch(op);
        emit_symfunc(opt, apply_branch(op, parse_arg(opt, input)), out, err);
    } else if (dprod->parsed()) {
        Cochain phi =
            characteristic_cochain(series_from_name(series_id_name), opt.max_weight);
        emit_symfunc(opt,
                     deformed_product(phi, parse_arg(opt, left), parse_arg(opt, right)),
                     out, err);
    } else if (circle->parsed()) {
        Cochain pairing =
            pairing_name == "schur" ? schur_pairing() : schur_pairing_inverse();
        if (!series_id_name.empty()) {
            Cochain phi =
                characteristic_cochain(series_from_name(series_id_name), opt.max_weight);
            pairing = convolve(pairing, coboundary(phi));
        }
        emit_symfunc(opt,
                     variant_product(variant, parse_arg(opt, left),
                                     parse_arg(opt, right), pairing),
                     out, err);
    } else if (nl->parsed()) {
        SymFunc r = nl_product(parse_partition_arg(opt, left),
                               parse_partition_arg(opt, right));
        if (opt.as_json) {
            json j = to_json(r);
            j["flavor"] = flavor;
            attach_warnings(opt, j);
            out << j.dump() << "\n";
        } else {
            flush_warnings(opt, err);
            out << to_universal_string(r, flavor == "sp") << "\n";
        }
    } else if (classify->parsed()) {
        Cochain c = parse_cochain_spec(cochain_def, arity, opt.max_weight);
        if (arity == 1) {
            Classify1Result res = classify1(c, opt.max_weight);
            std::vector<std::string> lines{"verdict: " + to_string(res.verdict) +
                                           " up to weight " +
                                           std::to_string(res.max_weight)};
            if (res.witness)
                lines.push_back("witness: " + to_string(res.witness->first) + " * " +
                                to_string(res.witness->second));
            if (opt.as_json) {
                json j;
                j["verdict"] = to_string(res.verdict);
                j["max_weight"] = res.max_weight;
                if (res.witness)
                    j["witness"] = {res.witness->first.parts(), res.witness->second.parts()};
                attach_warnings(opt, j);
                out << j.dump() << "\n";
            } else {
                flush_warnings(opt, err);
                for (const auto& line : lines) out << line << "\n";
            }
        } else {
            Classify2Result res = classify2(c, opt.max_weight);
            if (opt.as_json) {
                json j;
                j["verdict"] = to_string(res.verdict);
                j["max_weight"] = res.max_weight;
                j["is_cocycle"] = res.is_cocycle;
                if (res.coboundary_obstruction)
                    j["obstruction"] = {res.coboundary_obstruction->first.parts(),
                                        res.coboundary_obstruction->second.parts()};
                if (res.preimage) {
                    json pre = json::array();
                    for (const auto& [p, v] : *res.preimage) {
                        json e;
                        e["partition"] = p.parts();
                        e["coeff"] = rat_to_string(v);
                        pre.push_back(std::move(e));
                    }
                    j["preimage"] = std::move(pre);
                }
                attach_warnings(opt, j);
                out << j.dump() << "\n";
            } else {
                flush_warnings(opt, err);
                out << "verdict: " << to_string(res.verdict) << " up to weight "
                    << res.max_weight << "\n";
                out << "cocycle test: " << (res.is_cocycle ? "passes" : "fails") << "\n";
                if (res.coboundary_obstruction)
                    out << "coboundary obstruction at: "
                        << to_string(res.coboundary_obstruction->first) << " , "
                        << to_string(res.coboundary_obstruction->second) << "\n";
            }
        }
    } else if (check->parsed()) {
        CaseReport rep = check_case(hopf_case_from_name(case_name), opt.max_weight);
        emit_report(opt, rep.verified, rep.lines, out, err);
    } else if (selftest_cmd->parsed()) {
        auto results = selftest::run_acceptance(opt.max_weight);
        bool ok = true;
        for (const auto& r : results) ok = ok && r.passed;
        if (opt.as_json) {
            json j;
            json arr = json::array();
            for (const auto& r : results) {
                json e;
                e["number"] = r.number;
                e["name"] = r.name;
                e["passed"] = r.passed;
                e["detail"] = r.detail;
                e["seconds"] = r.seconds;
                arr.push_back(std::move(e));
            }
            j["results"] = std::move(arr);
            j["ok"] = ok;
            out << j.dump() << "\n";
        } else {
            for (const auto& r : results) out << selftest::format_result_line(r) << "\n";
            out << (ok ? "all criteria passed" : "SOME CRITERIA FAILED") << "\n";
        }
        return ok ? 0 : 1;
    }
    return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
    try {
        return dispatch(args, out, err);
    } catch (const domain_error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace schurkit
