#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "springerlab/gensupport.hpp"
#include "springerlab/hasse.hpp"
#include "springerlab/marked.hpp"
#include "springerlab/textio.hpp"

using json = nlohmann::ordered_json;
using namespace springerlab;

namespace {

json to_json(const Partition& p)
{
    return json(p.parts());
}

json to_json(const UnipotentClass& cls)
{
    return json{{"type", std::string(1, letter_char(cls.group.letter))},
                {"rank", cls.group.rank},
                {"partition", cls.lambda.parts()}};
}

json to_json(const Bipartition& e)
{
    return json{{"alpha", e.alpha.parts()}, {"beta", e.beta.parts()}};
}

json to_json(const USymbol& u)
{
    return json{{"type", std::string(1, letter_char(u.group.letter))},
                {"top", u.top},
                {"bottom", u.bottom},
                {"defect", u.defect()}};
}

json to_json(const VirtualRep& v)
{
    json components = json::array();
    for (const auto& [e, m] : v.mult)
        components.push_back(json{{"alpha", e.alpha.parts()},
                                  {"beta", e.beta.parts()},
                                  {"multiplicity", m},
                                  {"split", e.split()}});
    return components;
}

json to_json(const SupportReport& r)
{
    json support = json::array();
    for (const auto& cls : r.support)
        support.push_back(to_json(cls));
    json out{{"well_supported", r.well_supported},
             {"specially", r.specially},
             {"support", support},
             {"split_components", r.split_components},
             {"failures", r.failures}};
    if (r.o0)
        out["o0"] = to_json(*r.o0);
    return out;
}

json to_json(const HarnessReport& r)
{
    return json{{"label", r.label},
                {"checked", r.checked},
                {"passed", r.passed},
                {"skipped_degenerate", r.skipped_degenerate},
                {"failures", r.failures},
                {"ok", r.ok()}};
}

struct Output {
    std::string path;

    void write(const std::string& text) const
    {
        if (path.empty()) {
            std::cout << text;
            if (text.empty() || text.back() != '\n')
                std::cout << '\n';
            return;
        }
        std::ofstream out(path, std::ios::binary);
        if (!out)
            throw domain_error("cannot open output file '" + path + "'");
        out << text;
    }

    void write(const json& j) const { write(j.dump(2)); }
};

GroupType group_from(const std::string& type, int rank)
{
    if (type.size() != 1)
        throw parse_error("--type expects a single letter B, C or D");
    try {
        return GroupType(letter_from_char(type[0]), rank);
    } catch (const domain_error& e) {
        throw parse_error(e.what());
    }
}

std::vector<int> parse_increasing_values(const std::string& text, const char* what)
{
    Partition p = parse_partition(text);
    std::vector<int> vals(p.parts().rbegin(), p.parts().rend());
    for (size_t i = 1; i < vals.size(); ++i)
        if (vals[i] <= vals[i - 1])
            throw parse_error(std::string(what) + " must hold distinct values");
    return vals;
}

// "(rep) + 2*(rep) + ..." over a fixed ambient group.
VirtualRep parse_rep_sum(const GroupType& g, const std::string& text)
{
    VirtualRep v;
    v.group = g;
    size_t pos = 0;
    while (pos < text.size()) {
        size_t next = text.find('+', pos);
        std::string piece = text.substr(pos, next == std::string::npos ? next : next - pos);
        pos = next == std::string::npos ? text.size() : next + 1;
        size_t star = piece.find('*');
        long long mult = 1;
        std::string body = piece;
        if (star != std::string::npos) {
            try {
                mult = std::stoll(piece.substr(0, star));
            } catch (const std::exception&) {
                throw parse_error("bad multiplicity in '" + piece + "'");
            }
            body = piece.substr(star + 1);
        }
        if (mult <= 0)
            throw parse_error("component multiplicities must be positive");
        v.mult[parse_bipartition(g, body)] += mult;
    }
    if (v.mult.empty())
        throw parse_error("empty representation");
    return v;
}

CuspidalDatum datum_from(const std::string& type, int rank, int t, const std::string& sign)
{
    int s = +1;
    if (sign == "-" || sign == "-1" || sign == "minus")
        s = -1;
    else if (!(sign.empty() || sign == "+" || sign == "+1" || sign == "plus"))
        throw parse_error("--defect-sign expects + or -");
    return CuspidalDatum(group_from(type, rank), t, s);
}

std::vector<FactorRep> e1_reps(const SubgroupSpec& wls, const std::string& text)
{
    if (text == "trivial" || text == "sign") {
        const bool sign = text == "sign";
        std::vector<FactorRep> reps;
        for (const auto& f : wls.factors) {
            if (f.letter == Letter::A) {
                const size_t k = static_cast<size_t>(f.weyl_rank());
                reps.emplace_back(sign ? Partition(std::vector<int>(k, 1))
                                       : Partition(std::vector<int>{static_cast<int>(k)}));
            } else if (sign) {
                reps.emplace_back(Bipartition(
                    f, Partition{}, Partition(std::vector<int>(static_cast<size_t>(f.rank), 1))));
            } else {
                reps.emplace_back(f.rank == 0
                                      ? Bipartition(f, Partition{}, Partition{})
                                      : Bipartition(f, Partition(std::vector<int>{f.rank}),
                                                    Partition{}));
            }
        }
        return reps;
    }
    return parse_factor_reps(wls, text);
}

GroupType marked_group(const std::string& type)
{
    Letter l = letter_from_char(type.empty() ? 'B' : type[0]);
    return GroupType(l, l == Letter::D ? 2 : 1);
}

SubgroupSpec full_subgroup(const GroupType& g)
{
    return SubgroupSpec(g, {g},
                        g.letter == Letter::D ? Embedding::DInDPseudo
                                              : Embedding::SameLetterPseudo);
}

int run_verify_all(const Output& out, bool as_json)
{
    json items = json::array();
    std::string text;
    bool ok = true;
    auto record = [&](const HarnessReport& r) {
        items.push_back(to_json(r));
        text += r.label + ": " + (r.ok() ? "pass" : "FAIL") + " (" + std::to_string(r.passed)
            + "/" + std::to_string(r.checked) + ")\n";
        ok &= r.ok();
    };

    for (char c : {'B', 'C'})
        for (int n = 1; n <= 4; ++n)
            record(verify_theorem_bs(GroupType(letter_from_char(c), n)));
    record(verify_theorem_bs(GroupType(Letter::D, 4)));
    for (char c : {'B', 'C'})
        for (int n = 1; n <= 3; ++n)
            record(verify_prop_ind_supp(GroupType(letter_from_char(c), n)));
    record(verify_prop_ind_supp(GroupType(Letter::D, 4)));

    HarnessReport round;
    round.label = "round-trip rank <= 8";
    for (char c : {'B', 'C', 'D'})
        for (int n = c == 'D' ? 2 : 1; n <= 8; ++n) {
            GroupType g(letter_from_char(c), n);
            for (const auto& cls : enumerate_classes(g)) {
                ++round.checked;
                if (class_of_usymbol(usymbol_of_class(cls)) == cls)
                    ++round.passed;
                else
                    round.failures.push_back("round trip failed at " + format_class(cls));
            }
        }
    record(round);

    if (as_json)
        out.write(items);
    else
        out.write(text);
    return ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Unipotent classes, u-symbols and Springer combinatorics for types B/C/D"};
    app.require_subcommand(1);

    std::string type = "B", sub_text, partition_text, bipartition_text, reps_text,
                usymbol_text, e1_text = "trivial", sign_text, lambda_text, markable_text,
                nu_text, nu2_text, rep_text, out_path;
    int rank = 1, t = 0;
    bool as_json = false, as_dot = false;

    auto add_common = [&](CLI::App* cmd, bool group_flags = true) {
        if (group_flags) {
            cmd->add_option("--type", type, "group type letter (B, C or D)");
            cmd->add_option("--rank", rank, "group rank")->required();
        }
        cmd->add_flag("--json", as_json, "emit JSON");
        cmd->add_option("--out", out_path, "write output to a file instead of stdout");
    };

    auto* classes = app.add_subcommand("classes", "enumerate unipotent classes");
    add_common(classes);
    classes->add_flag("--dot", as_dot, "emit the Hasse diagram of the closure order as DOT");

    auto* usymbol = app.add_subcommand("usymbol", "u-symbol and symbol of a class");
    add_common(usymbol);
    usymbol->add_option("--partition", partition_text, "class partition, e.g. [5,3,1]")
        ->required();

    auto* springer = app.add_subcommand("springer", "Springer data of a bipartition");
    add_common(springer);
    springer->add_option("--bipartition", bipartition_text, "e.g. ([3],[2])")->required();

    auto* induce_cmd = app.add_subcommand("induce", "decompose an induced representation");
    add_common(induce_cmd, false);
    induce_cmd->add_option("--sub", sub_text, "subgroup, e.g. 'B5 <= C2xC3'")->required();
    induce_cmd->add_option("--reps", reps_text, "factor representations, ';' separated")
        ->required();

    auto* j_induce_cmd = app.add_subcommand("j-induce", "truncated induction");
    add_common(j_induce_cmd, false);
    j_induce_cmd->add_option("--sub", sub_text, "subgroup")->required();
    j_induce_cmd->add_option("--reps", reps_text, "factor representations")->required();

    auto* check_ws = app.add_subcommand("check-ws", "well-supportedness report");
    add_common(check_ws);
    check_ws->add_option("--rep", rep_text, "sum of bipartitions, e.g. '([1],[1])+2*([2],[])'");
    check_ws->add_option("--sub", sub_text, "induce from this subgroup instead");
    check_ws->add_option("--reps", reps_text, "factor representations for --sub");

    auto* verify_bs = app.add_subcommand("verify-bs", "well-supported induction sweep");
    add_common(verify_bs);

    auto* verify_indsupp = app.add_subcommand("verify-indsupp", "induction support sweep");
    add_common(verify_indsupp);

    auto* gamma_cmd = app.add_subcommand("gamma", "generalized-block embedding of a u-symbol");
    add_common(gamma_cmd);
    gamma_cmd->add_option("--t", t, "cuspidal datum parameter")->required();
    gamma_cmd->add_option("--defect-sign", sign_text, "+ or - (type C)");
    gamma_cmd->add_option("--usymbol", usymbol_text, "relative u-symbol, e.g. 'B:(1 / )'")
        ->required();

    auto* charsheaf = app.add_subcommand("charsheaf-support",
                                         "unipotent support of a character sheaf");
    add_common(charsheaf);
    charsheaf->add_option("--t", t, "cuspidal datum parameter")->required();
    charsheaf->add_option("--defect-sign", sign_text, "+ or - (type C)");
    charsheaf->add_option("--sub", sub_text,
                          "subgroup of the relative Weyl group (default: the whole group)");
    charsheaf->add_option("--e1", e1_text, "'trivial', 'sign' or explicit factor reps");

    auto* osc = app.add_subcommand("osc", "class attached to a cell of a block");
    add_common(osc);
    osc->add_option("--t", t, "cuspidal datum parameter")->required();
    osc->add_option("--defect-sign", sign_text, "+ or - (type C)");
    osc->add_option("--sub", sub_text, "subgroup of the relative Weyl group");
    osc->add_option("--e1", e1_text, "'trivial', 'sign' or explicit factor reps");

    auto* mark_order = app.add_subcommand("mark-order", "compare two markings");
    mark_order->add_option("--type", type, "group type letter");
    mark_order->add_option("--lambda", lambda_text, "class partition")->required();
    mark_order->add_option("--markable", markable_text, "markable part values")->required();
    mark_order->add_option("--nu", nu_text, "first marking")->required();
    mark_order->add_option("--nu2", nu2_text, "second marking")->required();
    mark_order->add_flag("--json", as_json, "emit JSON");
    mark_order->add_option("--out", out_path, "write output to a file");

    auto* superminimal = app.add_subcommand("superminimal", "superminimal markings");
    superminimal->add_option("--type", type, "group type letter");
    superminimal->add_option("--lambda", lambda_text, "class partition")->required();
    superminimal->add_option("--markable", markable_text, "markable part values")->required();
    superminimal->add_flag("--json", as_json, "emit JSON");
    superminimal->add_option("--out", out_path, "write output to a file");

    auto* verify_all = app.add_subcommand("verify-all", "run the whole verification battery");
    verify_all->add_flag("--json", as_json, "emit JSON");
    verify_all->add_option("--out", out_path, "write output to a file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    Output out{out_path};
    try {
        if (*classes) {
            GroupType g = group_from(type, rank);
            auto all = enumerate_classes(g);
            if (as_dot) {
                std::vector<std::string> labels;
                for (const auto& cls : all)
                    labels.push_back(format_partition(cls.lambda));
                out.write(render_hasse(labels, [&](size_t i, size_t j) {
                    return dominates(all[j].lambda, all[i].lambda);
                }));
            } else if (as_json) {
                json items = json::array();
                for (const auto& cls : all)
                    items.push_back(json{{"partition", cls.lambda.parts()},
                                         {"special", is_special_class(cls)}});
                out.write(json{{"group", format_group(g)}, {"classes", items}});
            } else {
                std::string text;
                for (const auto& cls : all)
                    text += format_partition(cls.lambda)
                        + (is_special_class(cls) ? "  special\n" : "\n");
                out.write(text);
            }
        } else if (*usymbol) {
            UnipotentClass cls(group_from(type, rank), parse_partition(partition_text));
            USymbol u = usymbol_of_class(cls);
            Symbol s = symbol_of_class(cls);
            if (as_json) {
                out.write(json{{"class", to_json(cls)},
                               {"usymbol", to_json(u)},
                               {"symbol", json{{"xi", s.xi}, {"eta", s.eta}}},
                               {"special", is_special_class(cls)},
                               {"distinguished", is_distinguished(u)}});
            } else {
                out.write("u-symbol: " + format_usymbol(u) + "\nsymbol:   "
                          + format_usymbol(USymbol{s.group, s.xi, s.eta})
                          + (is_special_class(cls) ? "\nspecial class" : "\nnot special"));
            }
        } else if (*springer) {
            Bipartition e = parse_bipartition(group_from(type, rank), bipartition_text);
            UnipotentClass cls = springer_class(e);
            USymbol u = usymbol_of_bipartition(e);
            if (as_json) {
                out.write(json{{"bipartition", to_json(e)},
                               {"class", to_json(cls)},
                               {"usymbol", to_json(u)},
                               {"special", is_special_rep(e)},
                               {"cell_special_class", to_json(cell_of(e).special_class)}});
            } else {
                out.write("class:    " + format_class(cls) + "\nu-symbol: " + format_usymbol(u)
                          + (is_special_rep(e) ? "\nspecial representation"
                                               : "\nnot special"));
            }
        } else if (*induce_cmd) {
            SubgroupSpec sub = parse_subgroup(sub_text);
            VirtualRep v = induce(sub, parse_factor_reps(sub, reps_text));
            if (as_json)
                out.write(json{{"subgroup", format_subgroup(sub)},
                               {"components", to_json(v)}});
            else
                out.write(format_virtual_rep(v));
        } else if (*j_induce_cmd) {
            SubgroupSpec sub = parse_subgroup(sub_text);
            Bipartition e = j_induce(sub, parse_factor_reps(sub, reps_text));
            UnipotentClass cls = springer_class(e);
            if (as_json)
                out.write(json{{"bipartition", to_json(e)}, {"class", to_json(cls)}});
            else
                out.write(format_bipartition(e) + "  class " + format_class(cls));
        } else if (*check_ws) {
            VirtualRep v;
            if (!sub_text.empty()) {
                SubgroupSpec sub = parse_subgroup(sub_text);
                v = induce(sub, parse_factor_reps(sub, reps_text));
            } else if (!rep_text.empty()) {
                v = parse_rep_sum(group_from(type, rank), rep_text);
            } else {
                throw parse_error("check-ws needs --rep or --sub/--reps");
            }
            SupportReport r = check_well_supported(v);
            if (as_json)
                out.write(to_json(r));
            else {
                std::string text = r.well_supported
                    ? std::string("well supported") + (r.specially ? " (specially)" : "")
                    : "not well supported";
                if (r.o0)
                    text += "\no0: " + format_class(*r.o0);
                for (const auto& f : r.failures)
                    text += "\n" + f;
                out.write(text);
            }
        } else if (*verify_bs || *verify_indsupp) {
            HarnessReport r = *verify_bs ? verify_theorem_bs(group_from(type, rank))
                                         : verify_prop_ind_supp(group_from(type, rank));
            if (as_json)
                out.write(to_json(r));
            else {
                std::string text = r.label + ": " + (r.ok() ? "pass" : "FAIL") + " ("
                    + std::to_string(r.passed) + "/" + std::to_string(r.checked)
                    + " checked, " + std::to_string(r.skipped_degenerate) + " degenerate)";
                for (const auto& f : r.failures)
                    text += "\n" + f;
                out.write(text);
            }
            if (!r.ok())
                return 1;
        } else if (*gamma_cmd) {
            CuspidalDatum datum = datum_from(type, rank, t, sign_text);
            USymbol u = parse_usymbol(usymbol_text, datum.relative_weyl().rank);
            GenPair g = gamma(datum, u);
            if (as_json)
                out.write(json{{"usymbol", to_json(g.usym)}, {"class", to_json(g.cls)}});
            else
                out.write(format_usymbol(g.usym) + "  class " + format_class(g.cls));
        } else if (*charsheaf || *osc) {
            CuspidalDatum datum = datum_from(type, rank, t, sign_text);
            SubgroupSpec wls = sub_text.empty() ? full_subgroup(datum.relative_weyl())
                                                : parse_subgroup(sub_text);
            auto reps = e1_reps(wls, e1_text);
            if (*osc) {
                UnipotentClass cls = osc_class(datum, wls, reps);
                if (as_json)
                    out.write(json{{"o_sc", to_json(cls)}});
                else
                    out.write(format_class(cls));
            } else {
                CharsheafSupport cs = charsheaf_support(datum, wls, reps);
                if (as_json) {
                    json mults = json::array();
                    for (const auto& [u, m] : cs.multiplicities)
                        mults.push_back(json{{"usymbol", to_json(u)},
                                             {"class", to_json(class_of_usymbol(u))},
                                             {"multiplicity", m}});
                    json ng = json::array();
                    for (const auto& p : cs.ng)
                        ng.push_back(to_json(p.usym));
                    out.write(json{{"o_A", cs.o_a.lambda.parts()},
                                   {"o_sc", cs.o_sc.lambda.parts()},
                                   {"equals_osc", cs.equals_osc},
                                   {"multiplicities", mults},
                                   {"ng", ng}});
                } else {
                    std::string text = "O_A:  " + format_class(cs.o_a) + "\nO_sc: "
                        + format_class(cs.o_sc)
                        + (cs.equals_osc ? "\nequal; members supported on O_sc: "
                                             + std::to_string(cs.ng.size())
                                         : "\ndistinct; no member supported on O_sc");
                    out.write(text);
                }
            }
        } else if (*mark_order) {
            MarkableContext ctx(marked_group(type), parse_partition(lambda_text),
                                parse_increasing_values(markable_text, "--markable"));
            Marking a = parse_increasing_values(nu_text, "--nu");
            Marking b = parse_increasing_values(nu2_text, "--nu2");
            bool le = marking_leq(ctx, a, b), ge = marking_leq(ctx, b, a);
            std::string rel = le && ge ? "equal" : le ? "<" : ge ? ">" : "incomparable";
            if (as_json)
                out.write(json{{"relation", rel}, {"leq", le}, {"geq", ge}});
            else
                out.write(rel);
        } else if (*superminimal) {
            MarkableContext ctx(marked_group(type), parse_partition(lambda_text),
                                parse_increasing_values(markable_text, "--markable"));
            auto sm = superminimal_markings(ctx);
            if (as_json) {
                json items = json::array();
                for (const auto& m : sm)
                    items.push_back(m.nu);
                out.write(json{{"superminimal", items},
                               {"coxeter_rank", coxeter_generators(ctx).rank}});
            } else {
                std::string text;
                for (const auto& m : sm) {
                    text += "[";
                    for (size_t i = 0; i < m.nu.size(); ++i)
                        text += (i ? "," : "") + std::to_string(m.nu[i]);
                    text += "]\n";
                }
                text += "rank " + std::to_string(coxeter_generators(ctx).rank);
                out.write(text);
            }
        } else if (*verify_all) {
            return run_verify_all(out, as_json);
        }
    } catch (const parse_error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
