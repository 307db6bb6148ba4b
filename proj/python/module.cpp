#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "springerlab/gensupport.hpp"
#include "springerlab/hasse.hpp"
#include "springerlab/marked.hpp"
#include "springerlab/textio.hpp"

namespace py = pybind11;
using namespace springerlab;

namespace {

GroupType group_of(const std::string& type, int rank)
{
    if (type.size() != 1)
        throw domain_error("type expects a single letter B, C or D");
    return GroupType(letter_from_char(type[0]), rank);
}

Partition partition_of(const std::vector<int>& parts)
{
    return Partition(parts);
}

py::dict usymbol_dict(const USymbol& u)
{
    py::dict d;
    d["type"] = std::string(1, letter_char(u.group.letter));
    d["top"] = u.top;
    d["bottom"] = u.bottom;
    d["defect"] = u.defect();
    d["text"] = format_usymbol(u);
    return d;
}

py::dict class_dict(const UnipotentClass& cls)
{
    py::dict d;
    d["type"] = std::string(1, letter_char(cls.group.letter));
    d["rank"] = cls.group.rank;
    d["partition"] = cls.lambda.parts();
    return d;
}

py::dict report_dict(const HarnessReport& r)
{
    py::dict d;
    d["label"] = r.label;
    d["checked"] = r.checked;
    d["passed"] = r.passed;
    d["skipped_degenerate"] = r.skipped_degenerate;
    d["failures"] = r.failures;
    d["ok"] = r.ok();
    return d;
}

CuspidalDatum datum_of(const std::string& type, int rank, int t, const std::string& sign)
{
    return CuspidalDatum(group_of(type, rank), t, sign == "-" ? -1 : +1);
}

SubgroupSpec subgroup_of(const CuspidalDatum& datum, const std::string& sub)
{
    if (!sub.empty())
        return parse_subgroup(sub);
    GroupType rel = datum.relative_weyl();
    return SubgroupSpec(rel, {rel},
                        rel.letter == Letter::D ? Embedding::DInDPseudo
                                                : Embedding::SameLetterPseudo);
}

std::vector<FactorRep> reps_of(const SubgroupSpec& sub, const std::string& text)
{
    if (text == "trivial") {
        std::vector<FactorRep> reps;
        for (const auto& f : sub.factors) {
            if (f.letter == Letter::A)
                reps.emplace_back(Partition(std::vector<int>{f.weyl_rank()}));
            else if (f.rank == 0)
                reps.emplace_back(Bipartition(f, Partition{}, Partition{}));
            else
                reps.emplace_back(Bipartition(f, Partition(std::vector<int>{f.rank}),
                                              Partition{}));
        }
        return reps;
    }
    return parse_factor_reps(sub, text);
}

} // namespace

PYBIND11_MODULE(_springerlab, m)
{
    m.doc() = "Unipotent classes, u-symbols and Springer combinatorics for types B/C/D";

    py::register_exception<domain_error>(m, "DomainError");
    py::register_exception<parse_error>(m, "ParseError");

    m.def(
        "enumerate_classes",
        [](const std::string& type, int rank) {
            std::vector<std::vector<int>> out;
            for (const auto& cls : enumerate_classes(group_of(type, rank)))
                out.push_back(cls.lambda.parts());
            return out;
        },
        py::arg("type"), py::arg("rank"));

    m.def(
        "valid_unipotent",
        [](const std::string& type, int rank, const std::vector<int>& parts) {
            return valid_unipotent(group_of(type, rank), partition_of(parts));
        },
        py::arg("type"), py::arg("rank"), py::arg("partition"));

    m.def(
        "is_special_class",
        [](const std::string& type, int rank, const std::vector<int>& parts) {
            return is_special_class(
                UnipotentClass(group_of(type, rank), partition_of(parts)));
        },
        py::arg("type"), py::arg("rank"), py::arg("partition"));

    m.def(
        "dominates",
        [](const std::vector<int>& a, const std::vector<int>& b) {
            return dominates(partition_of(a), partition_of(b));
        },
        py::arg("lam"), py::arg("mu"));

    m.def(
        "join",
        [](const std::vector<int>& a, const std::vector<int>& b) {
            return join(partition_of(a), partition_of(b)).parts();
        },
        py::arg("lam"), py::arg("mu"));

    m.def(
        "usymbol_of_class",
        [](const std::string& type, int rank, const std::vector<int>& parts) {
            return usymbol_dict(usymbol_of_class(
                UnipotentClass(group_of(type, rank), partition_of(parts))));
        },
        py::arg("type"), py::arg("rank"), py::arg("partition"));

    m.def(
        "class_of_usymbol",
        [](const std::string& type, int rank, const std::vector<int>& top,
           const std::vector<int>& bottom) {
            USymbol u;
            u.group = group_of(type, rank);
            u.top = top;
            u.bottom = bottom;
            return class_of_usymbol(u).lambda.parts();
        },
        py::arg("type"), py::arg("rank"), py::arg("top"), py::arg("bottom"));

    m.def(
        "springer",
        [](const std::string& type, int rank, const std::vector<int>& alpha,
           const std::vector<int>& beta) {
            Bipartition e(group_of(type, rank), partition_of(alpha), partition_of(beta));
            py::dict d;
            d["class"] = springer_class(e).lambda.parts();
            d["usymbol"] = usymbol_dict(usymbol_of_bipartition(e));
            d["special"] = is_special_rep(e);
            d["cell_special_class"] = cell_of(e).special_class.lambda.parts();
            return d;
        },
        py::arg("type"), py::arg("rank"), py::arg("alpha"), py::arg("beta"));

    m.def(
        "lr_coefficient",
        [](const std::vector<int>& a, const std::vector<int>& b, const std::vector<int>& c) {
            return lr_coefficient(partition_of(a), partition_of(b), partition_of(c));
        },
        py::arg("alpha"), py::arg("beta"), py::arg("gamma"));

    m.def(
        "induce",
        [](const std::string& sub, const std::string& reps) {
            SubgroupSpec s = parse_subgroup(sub);
            std::vector<py::dict> out;
            for (const auto& [e, mult] : induce(s, parse_factor_reps(s, reps)).mult) {
                py::dict d;
                d["alpha"] = e.alpha.parts();
                d["beta"] = e.beta.parts();
                d["multiplicity"] = mult;
                d["split"] = e.split();
                out.push_back(d);
            }
            return out;
        },
        py::arg("subgroup"), py::arg("reps"));

    m.def(
        "j_induce",
        [](const std::string& sub, const std::string& reps) {
            SubgroupSpec s = parse_subgroup(sub);
            Bipartition e = j_induce(s, parse_factor_reps(s, reps));
            py::dict d;
            d["alpha"] = e.alpha.parts();
            d["beta"] = e.beta.parts();
            d["class"] = springer_class(e).lambda.parts();
            return d;
        },
        py::arg("subgroup"), py::arg("reps"));

    m.def(
        "check_well_supported",
        [](const std::string& sub, const std::string& reps) {
            SubgroupSpec s = parse_subgroup(sub);
            SupportReport r = check_well_supported(induce(s, parse_factor_reps(s, reps)));
            py::dict d;
            d["well_supported"] = r.well_supported;
            d["specially"] = r.specially;
            if (r.o0)
                d["o0"] = r.o0->lambda.parts();
            d["failures"] = r.failures;
            return d;
        },
        py::arg("subgroup"), py::arg("reps"));

    m.def(
        "verify_theorem_bs",
        [](const std::string& type, int rank) {
            return report_dict(verify_theorem_bs(group_of(type, rank)));
        },
        py::arg("type"), py::arg("rank"));

    m.def(
        "verify_prop_ind_supp",
        [](const std::string& type, int rank) {
            return report_dict(verify_prop_ind_supp(group_of(type, rank)));
        },
        py::arg("type"), py::arg("rank"));

    m.def(
        "gamma",
        [](const std::string& type, int rank, int t, const std::string& sign,
           const std::string& usymbol) {
            CuspidalDatum datum = datum_of(type, rank, t, sign);
            GenPair g = gamma(datum, parse_usymbol(usymbol, datum.relative_weyl().rank));
            py::dict d;
            d["usymbol"] = usymbol_dict(g.usym);
            d["class"] = g.cls.lambda.parts();
            return d;
        },
        py::arg("type"), py::arg("rank"), py::arg("t"), py::arg("sign") = "+",
        py::arg("usymbol"));

    m.def(
        "charsheaf_support",
        [](const std::string& type, int rank, int t, const std::string& sign,
           const std::string& sub, const std::string& e1) {
            CuspidalDatum datum = datum_of(type, rank, t, sign);
            SubgroupSpec wls = subgroup_of(datum, sub);
            CharsheafSupport cs = charsheaf_support(datum, wls, reps_of(wls, e1));
            py::dict d;
            d["o_A"] = cs.o_a.lambda.parts();
            d["o_sc"] = cs.o_sc.lambda.parts();
            d["equals_osc"] = cs.equals_osc;
            d["ng_size"] = cs.ng.size();
            return d;
        },
        py::arg("type"), py::arg("rank"), py::arg("t"), py::arg("sign") = "+",
        py::arg("sub") = "", py::arg("e1") = "trivial");

    m.def(
        "superminimal_markings",
        [](const std::string& type, const std::vector<int>& lambda,
           const std::vector<int>& markable) {
            Letter l = letter_from_char(type.at(0));
            MarkableContext ctx(GroupType(l, l == Letter::D ? 2 : 1), partition_of(lambda),
                                markable);
            std::vector<std::vector<int>> out;
            for (const auto& mk : superminimal_markings(ctx))
                out.push_back(mk.nu);
            return out;
        },
        py::arg("type"), py::arg("lam"), py::arg("markable"));

    m.def(
        "marking_leq",
        [](const std::string& type, const std::vector<int>& lambda,
           const std::vector<int>& markable, const std::vector<int>& a,
           const std::vector<int>& b) {
            Letter l = letter_from_char(type.at(0));
            MarkableContext ctx(GroupType(l, l == Letter::D ? 2 : 1), partition_of(lambda),
                                markable);
            return marking_leq(ctx, a, b);
        },
        py::arg("type"), py::arg("lam"), py::arg("markable"), py::arg("nu"), py::arg("nu2"));

    m.def(
        "hasse_dot",
        [](const std::string& type, int rank) {
            auto classes = enumerate_classes(group_of(type, rank));
            std::vector<std::string> labels;
            for (const auto& cls : classes)
                labels.push_back(format_partition(cls.lambda));
            return render_hasse(labels, [&](size_t i, size_t j) {
                return dominates(classes[j].lambda, classes[i].lambda);
            });
        },
        py::arg("type"), py::arg("rank"));
}
