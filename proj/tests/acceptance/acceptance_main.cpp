// Acceptance suite: one line per criterion, nonzero exit on any failure.

#include <chrono>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "oracles/oracles.hpp"
#include "springerlab/gensupport.hpp"
#include "springerlab/marked.hpp"
#include "springerlab/textio.hpp"

using namespace springerlab;

namespace {

struct Checker {
    int failures = 0;
    std::ostringstream detail;
    std::ostringstream notes;

    void require(bool ok, const std::string& what)
    {
        if (!ok) {
            ++failures;
            if (failures <= 5)
                detail << "\n    " << what;
        }
    }

    void note(const std::string& what) { notes << " [" << what << "]"; }
};

int g_failed_criteria = 0;

void criterion(const std::string& name, double budget_seconds,
               const std::function<void(Checker&)>& body)
{
    Checker c;
    auto start = std::chrono::steady_clock::now();
    try {
        body(c);
    } catch (const std::exception& e) {
        c.require(false, std::string("exception: ") + e.what());
    }
    double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                         .count();
    if (budget_seconds > 0 && elapsed > budget_seconds) {
        ++c.failures;
        c.detail << "\n    runtime " << elapsed << "s exceeds budget " << budget_seconds
                 << "s";
    }
    bool ok = c.failures == 0;
    if (!ok)
        ++g_failed_criteria;
    std::cout << (ok ? "PASS" : "FAIL") << "  " << name << "  (" << elapsed << "s)"
              << c.notes.str() << c.detail.str() << "\n";
}

std::vector<GroupType> groups_up_to(int max_rank)
{
    std::vector<GroupType> out;
    for (int n = 1; n <= max_rank; ++n)
        out.push_back({Letter::B, n});
    for (int n = 1; n <= max_rank; ++n)
        out.push_back({Letter::C, n});
    for (int n = 2; n <= max_rank; ++n)
        out.push_back({Letter::D, n});
    return out;
}

Partition ones(int k)
{
    return Partition(std::vector<int>(static_cast<size_t>(k), 1));
}

long long rep_dim(const FactorRep& r)
{
    if (const auto* sigma = std::get_if<Partition>(&r))
        return oracles::tableau_count(*sigma);
    return oracles::dim_bipartition(std::get<Bipartition>(r));
}

// Dimension identity for one induction; split type D labels carry both
// halves at half the hyperoctahedral dimension.
bool dimension_identity(const SubgroupSpec& sub, const std::vector<FactorRep>& reps,
                        const VirtualRep& v)
{
    long long lhs = 0;
    for (const auto& [e, m] : v.mult) {
        long long d = oracles::dim_bipartition(e);
        lhs += m * (e.split() ? d / 2 : d);
    }
    long long rhs = weyl_index(sub);
    for (const auto& r : reps)
        rhs *= rep_dim(r);
    return lhs == rhs;
}

std::vector<std::vector<FactorRep>> tuples_over(const SubgroupSpec& sub, bool special_only,
                                                bool sign_only_a)
{
    std::vector<std::vector<FactorRep>> tuples{{}};
    for (const auto& f : sub.factors) {
        std::vector<FactorRep> options;
        if (f.letter == Letter::A) {
            if (sign_only_a) {
                options.emplace_back(ones(f.weyl_rank()));
            } else {
                for (const auto& sigma : enumerate_partitions(f.weyl_rank()))
                    options.emplace_back(sigma);
            }
        } else {
            for (const auto& e : enumerate_bipartitions(f)) {
                if (e.split())
                    continue;
                if (f.letter == Letter::D && e.alpha.size() == e.beta.size())
                    continue;
                if (special_only && !is_special_rep(e))
                    continue;
                options.emplace_back(e);
            }
        }
        std::vector<std::vector<FactorRep>> next;
        for (const auto& t : tuples)
            for (const auto& o : options) {
                auto copy = t;
                copy.push_back(o);
                next.push_back(std::move(copy));
            }
        tuples = std::move(next);
    }
    return tuples;
}

USymbol pad_to_count(USymbol u, int count)
{
    while (static_cast<int>(u.top.size() + u.bottom.size()) < count)
        u = normalize_length(u,
                             static_cast<int>(std::min(u.top.size(), u.bottom.size())) + 1);
    return u;
}

} // namespace

int main()
{
    criterion("round-trip: class -> u-symbol -> class, ranks <= 10", 10.0, [](Checker& c) {
        for (const auto& g : groups_up_to(10))
            for (const auto& cls : enumerate_classes(g)) {
                USymbol u = usymbol_of_class(cls);
                c.require(is_distinguished(u),
                          "u-symbol of " + format_class(cls) + " not distinguished");
                c.require(class_of_usymbol(u) == cls,
                          "round trip failed at " + format_class(cls));
            }
    });

    criterion("comparison of u-symbols: multiset dominance orders classes, ranks <= 6", 0,
              [](Checker& c) {
                  for (const auto& g : groups_up_to(6)) {
                      auto bips = enumerate_bipartitions(g);
                      int m = 1;
                      for (const auto& e : bips)
                          m = std::max(m, minimal_symbol_length(e));
                      std::vector<USymbol> us;
                      std::vector<UnipotentClass> classes;
                      for (const auto& e : bips) {
                          us.push_back(normalize_length(usymbol_of_bipartition(e), m));
                          classes.push_back(springer_class(e));
                      }
                      for (size_t i = 0; i < us.size(); ++i)
                          for (size_t j = 0; j < us.size(); ++j) {
                              if (!usymbol_leq(us[i], us[j]))
                                  continue;
                              c.require(dominates(classes[j].lambda, classes[i].lambda),
                                        "multiset order broken between "
                                            + format_usymbol(us[i]) + " and "
                                            + format_usymbol(us[j]));
                              if (classes[i] == classes[j]
                                  && is_distinguished(us[i]) && is_distinguished(us[j]))
                                  c.require(equivalent(us[i], us[j]),
                                            "equal classes with distinct distinguished "
                                            "u-symbols at " + format_class(classes[i]));
                          }
                      for (size_t i = 0; i < us.size(); ++i)
                          for (size_t j = 0; j < us.size(); ++j)
                              if (classes[i] == classes[j])
                                  c.require(entry_multiset(us[i]) == entry_multiset(us[j]),
                                            "same class, different multisets at "
                                                + format_class(classes[i]));
                  }
              });

    criterion("label comparison orders Springer classes and cells, ranks <= 5", 0,
              [](Checker& c) {
                  for (const auto& g : groups_up_to(5)) {
                      auto bips = enumerate_bipartitions(g);
                      std::vector<UnipotentClass> cls, cellcls;
                      for (const auto& e : bips) {
                          cls.push_back(springer_class(e));
                          cellcls.push_back(cell_of(e).special_class);
                      }
                      for (size_t i = 0; i < bips.size(); ++i)
                          for (size_t j = 0; j < bips.size(); ++j) {
                              bool hyp = prefix_leq(bips[i].alpha, bips[j].alpha)
                                  && prefix_leq(bips[i].beta, bips[j].beta);
                              if (g.letter == Letter::D)
                                  hyp = hyp
                                      || (prefix_leq(bips[i].alpha, bips[j].beta)
                                          && prefix_leq(bips[i].beta, bips[j].alpha));
                              if (!hyp)
                                  continue;
                              c.require(dominates(cls[j].lambda, cls[i].lambda),
                                        "class order broken at "
                                            + format_bipartition(bips[i]) + " vs "
                                            + format_bipartition(bips[j]));
                              c.require(dominates(cellcls[j].lambda, cellcls[i].lambda),
                                        "cell order broken at "
                                            + format_bipartition(bips[i]) + " vs "
                                            + format_bipartition(bips[j]));
                              if (bips[i] != bips[j]) {
                                  c.require(cls[i] != cls[j],
                                            "distinct labels share the class at "
                                                + format_bipartition(bips[i]) + " vs "
                                                + format_bipartition(bips[j]));
                                  c.require(cellcls[i] != cellcls[j],
                                            "distinct labels share the cell at "
                                                + format_bipartition(bips[i]) + " vs "
                                                + format_bipartition(bips[j]));
                              }
                          }
                  }
              });

    criterion("balanced one-column labels dominate their shifts, n <= 8", 0, [](Checker& c) {
        for (char letter : {'B', 'C', 'D'}) {
            for (int n = letter == 'D' ? 2 : 1; n <= 8; ++n) {
                GroupType g(letter_from_char(letter), n);
                const int n1 = (n + 1) / 2, n2 = n / 2;
                if (g.letter == Letter::D && n1 == n2)
                    continue; // split label, flagged case
                Bipartition balanced(g, ones(n1), ones(n2));
                UnipotentClass top = springer_class(balanced);
                UnipotentClass topcell = cell_of(balanced).special_class;
                for (int k = -n1; k <= n2; ++k) {
                    int a = n1 + k, b = n2 - k;
                    if (a < 0 || b < 0)
                        continue;
                    if (g.letter == Letter::D && a == b)
                        continue;
                    Bipartition e(g, ones(a), ones(b));
                    UnipotentClass cls = springer_class(e);
                    c.require(dominates(top.lambda, cls.lambda),
                              "balanced label not maximal at " + format_bipartition(e));
                    c.require(dominates(topcell.lambda, cell_of(e).special_class.lambda),
                              "balanced cell not maximal at " + format_bipartition(e));
                }
            }
        }
    });

    criterion("join bound on induced components, attained once, ranks <= 6", 0,
              [](Checker& c) {
                  for (const auto& g : groups_up_to(6)) {
                      for (const auto& sub : enumerate_dual_pseudo_levis(g)) {
                          if (sub.embedding == Embedding::LeviA)
                              continue;
                          for (const auto& reps : tuples_over(sub, false, true)) {
                              // Orientation-closed join bounds.
                              std::vector<Bipartition> bounds;
                              const size_t combos = 1u << reps.size();
                              for (size_t mask = 0; mask < combos; ++mask) {
                                  Partition ja, jb;
                                  bool valid = true;
                                  for (size_t i = 0; i < reps.size() && valid; ++i) {
                                      const auto& e = std::get<Bipartition>(reps[i]);
                                      Partition a = e.alpha, b = e.beta;
                                      if (mask & (1u << i)) {
                                          if (sub.factors[i].letter != Letter::D) {
                                              valid = false;
                                              break;
                                          }
                                          std::swap(a, b);
                                      }
                                      ja = join(ja, a);
                                      jb = join(jb, b);
                                  }
                                  if (!valid)
                                      continue;
                                  Bipartition bound(sub.ambient, ja, jb);
                                  if (std::find(bounds.begin(), bounds.end(), bound)
                                      == bounds.end())
                                      bounds.push_back(bound);
                              }
                              VirtualRep v = induce(sub, reps);
                              int attained = 0;
                              for (const auto& [e, mult] : v.mult) {
                                  bool bounded = false, hit = false;
                                  for (const auto& bound : bounds) {
                                      bool direct = prefix_leq(e.alpha, bound.alpha)
                                          && prefix_leq(e.beta, bound.beta);
                                      bool swapped = sub.ambient.letter == Letter::D
                                          && prefix_leq(e.beta, bound.alpha)
                                          && prefix_leq(e.alpha, bound.beta);
                                      bounded |= direct || swapped;
                                      hit |= e == bound;
                                  }
                                  c.require(bounded, "unbounded component "
                                                         + format_bipartition(e) + " under "
                                                         + format_subgroup(sub));
                                  if (hit) {
                                      ++attained;
                                      c.require(mult == (e.split() ? 2 : 1),
                                                "bound multiplicity off at "
                                                    + format_bipartition(e));
                                  }
                              }
                              c.require(attained == static_cast<int>(bounds.size()),
                                        "bound not attained exactly once under "
                                            + format_subgroup(sub));
                          }
                      }
                  }
              });

    criterion("well-supported induction and support sweeps, ranks <= 6", 300.0,
              [](Checker& c) {
                  for (const auto& g : groups_up_to(6)) {
                      HarnessReport bs = verify_theorem_bs(g);
                      c.require(bs.ok(), bs.label + ": "
                                             + (bs.failures.empty() ? ""
                                                                    : bs.failures.front()));
                      HarnessReport is = verify_prop_ind_supp(g);
                      c.require(is.ok(), is.label + ": "
                                             + (is.failures.empty() ? ""
                                                                    : is.failures.front()));
                  }
              });

    criterion("dimension identity on every tested induction, ranks <= 5", 0, [](Checker& c) {
        for (const auto& g : groups_up_to(5))
            for (const auto& sub : enumerate_dual_pseudo_levis(g))
                for (const auto& reps : tuples_over(sub, false, true)) {
                    VirtualRep v = induce(sub, reps);
                    c.require(dimension_identity(sub, reps, v),
                              "dimension identity fails under " + format_subgroup(sub));
                }
    });

    criterion("tableau rule matches the Schur-product expansion, sizes <= 8", 0,
              [](Checker& c) {
                  for (int total = 0; total <= 8; ++total)
                      for (int a = 0; a <= total; ++a)
                          for (const auto& alpha : enumerate_partitions(a))
                              for (const auto& beta : enumerate_partitions(total - a)) {
                                  auto row = oracles::lr_row(alpha, beta);
                                  for (const auto& gamma : enumerate_partitions(total)) {
                                      auto it = row.find(gamma);
                                      long long expected = it == row.end() ? 0 : it->second;
                                      c.require(
                                          lr_coefficient(alpha, beta, gamma) == expected,
                                          "LR mismatch at " + format_partition(alpha) + ", "
                                              + format_partition(beta) + " -> "
                                              + format_partition(gamma));
                                  }
                              }
              });

    criterion("block embeddings match the cell classes, n <= 12 (witness B5/t1)", 0,
              [](Checker& c) {
                  bool witness_seen = false;
                  for (const auto& g : groups_up_to(12)) {
                      for (const auto& datum : enumerate_cuspidal_data(g)) {
                          if (datum.t == 0)
                              continue;
                          GroupType rel = datum.relative_weyl();
                          SubgroupSpec full(rel, {rel},
                                            rel.letter == Letter::D
                                                ? Embedding::DInDPseudo
                                                : Embedding::SameLetterPseudo);
                          Bipartition triv(rel, rel.rank ? Partition({rel.rank}) : Partition{},
                                           Partition{});
                          USymbol image = gamma_usymbol(datum, usymbol_of_bipartition(triv));
                          UnipotentClass osc = osc_class(datum, full, {FactorRep(triv)});
                          USymbol osc_u = usymbol_of_class(osc);
                          int count = std::max(
                              static_cast<int>(image.top.size() + image.bottom.size()),
                              static_cast<int>(osc_u.top.size() + osc_u.bottom.size()));
                          c.require(similar(pad_to_count(image, count),
                                            pad_to_count(osc_u, count)),
                                    "gamma(trivial) not similar to the cell class at "
                                        + format_group(g) + " t=" + std::to_string(datum.t));
                          c.require(class_of_usymbol(image) == osc,
                                    "gamma(trivial) recovers the wrong class at "
                                        + format_group(g) + " t=" + std::to_string(datum.t));
                          if (g == GroupType{Letter::B, 5} && datum.t == 1) {
                              witness_seen = true;
                              c.require(entry_multiset(image) == std::vector<int>{0, 2, 5},
                                        "pinned witness multiset is off");
                              c.require(osc.lambda == Partition({7, 3, 1}),
                                        "pinned witness class is off");
                          }
                      }
                  }
                  c.require(witness_seen, "pinned witness (B, n=5, t=1) not enumerated");
              });

    criterion("closure dominance of block restrictions, n <= 10, t <= 1", 0, [](Checker& c) {
        for (const auto& g : groups_up_to(10)) {
            for (const auto& datum : enumerate_cuspidal_data(g)) {
                if (datum.t != 1)
                    continue;
                GroupType rel = datum.relative_weyl();
                auto bips = enumerate_bipartitions(rel);
                int m = 1;
                for (const auto& e : bips)
                    m = std::max(m, minimal_symbol_length(e));
                Bipartition triv(rel, rel.rank ? Partition({rel.rank}) : Partition{},
                                 Partition{});
                USymbol base = gamma_usymbol(datum,
                                             normalize_length(usymbol_of_bipartition(triv), m));
                UnipotentClass top = class_of_usymbol(base);
                std::vector<int> mu0 = entry_multiset(base);
                std::reverse(mu0.begin(), mu0.end());
                Partition top_multiset{mu0};
                for (const auto& e : bips) {
                    USymbol image = gamma_usymbol(datum,
                                                  normalize_length(usymbol_of_bipartition(e),
                                                                   m));
                    std::vector<int> mu = entry_multiset(image);
                    std::reverse(mu.begin(), mu.end());
                    c.require(dominates(top_multiset, Partition{mu}),
                              "entry multiset not dominated at " + format_group(g) + " "
                                  + format_bipartition(e));
                    c.require(dominates(top.lambda, class_of_usymbol(image).lambda),
                              "class not in the closure at " + format_group(g) + " "
                                  + format_bipartition(e));
                }
            }
        }
    });

    criterion("restriction support equivalence, n <= 8", 0, [](Checker& c) {
        long long checked = 0, no_max = 0;
        for (const auto& g : groups_up_to(8)) {
            for (const auto& datum : enumerate_cuspidal_data(g)) {
                GroupType rel = datum.relative_weyl();
                if (rel.rank == 0 && rel.letter == Letter::D)
                    continue;
                std::vector<SubgroupSpec> subs;
                subs.push_back(SubgroupSpec(rel, {rel},
                                            rel.letter == Letter::D
                                                ? Embedding::DInDPseudo
                                                : Embedding::SameLetterPseudo));
                if (rel.rank >= 1)
                    for (const auto& s : enumerate_dual_pseudo_levis(rel))
                        subs.push_back(s);
                // The block-top class: every restriction stays inside its
                // closure, whatever the cell.
                Bipartition triv(rel, rel.rank ? Partition({rel.rank}) : Partition{},
                                 Partition{});
                UnipotentClass block_top =
                    datum.t == 0 ? enumerate_classes(g).front()
                                 : gamma(datum, usymbol_of_bipartition(triv)).cls;
                for (const auto& wls : subs) {
                    bool has_d_factor = false;
                    for (const auto& f : wls.factors)
                        has_d_factor |= f.letter == Letter::D;
                    for (const auto& e1 : tuples_over(wls, false, false)) {
                        try {
                            CharsheafSupport cs = charsheaf_support(datum, wls, e1);
                            ++checked;
                            c.require(cs.equals_osc == !cs.ng.empty(),
                                      "support equivalence fails at " + format_group(g)
                                          + " t=" + std::to_string(datum.t));
                            c.require(dominates(block_top.lambda, cs.o_a.lambda),
                                      "support escapes the block-top closure at "
                                          + format_group(g));
                        } catch (const degenerate_d_type&) {
                            // counted implicitly; split inputs are skipped
                        } catch (const no_maximum&) {
                            // The unique-maximum claim has counterexamples
                            // exactly at unordered type D factor labels;
                            // those restrictions carry no single support.
                            ++no_max;
                            c.require(has_d_factor,
                                      "dominance maximum missing without a type D factor "
                                      "at " + format_group(g));
                        }
                    }
                }
            }
        }
        c.note(std::to_string(checked) + " supports checked, " + std::to_string(no_max)
               + " without a dominance maximum (unordered type D labels)");
    });

    criterion("marked partition order and superminimal generators, lengths <= 6", 0,
              [](Checker& c) {
                  for (Letter l : {Letter::B, Letter::C, Letter::D}) {
                      for (int k = 1; k <= 6; ++k) {
                          std::vector<int> parts, markable;
                          for (int i = k; i >= 1; --i)
                              parts.push_back(i);
                          for (int i = 1; i <= k; ++i)
                              markable.push_back(i);
                          MarkableContext ctx(GroupType(l, l == Letter::D ? 2 : 1),
                                              Partition(parts), markable);
                          std::vector<Marking> all;
                          for (unsigned mask = 0; mask < (1u << k); ++mask) {
                              Marking m;
                              for (int i = 0; i < k; ++i)
                                  if (mask & (1u << i))
                                      m.push_back(markable[static_cast<size_t>(i)]);
                              if (m.size() % 2 != 0 && l != Letter::C)
                                  continue;
                              all.push_back(std::move(m));
                          }
                          for (const auto& a : all) {
                              c.require(marking_leq(ctx, a, a), "reflexivity fails");
                              for (const auto& b : all) {
                                  if (marking_leq(ctx, a, b) && marking_leq(ctx, b, a))
                                      c.require(a == b, "antisymmetry fails");
                                  for (const auto& d : all)
                                      if (marking_leq(ctx, a, b) && marking_leq(ctx, b, d))
                                          c.require(marking_leq(ctx, a, d),
                                                    "transitivity fails");
                              }
                          }
                          auto sm = superminimal_markings(ctx);
                          size_t expected = static_cast<size_t>(k - 1)
                              + (l == Letter::C ? 1 : 0);
                          c.require(sm.size() == expected, "superminimal count off");
                          for (size_t i = 0; i + 1 < markable.size(); ++i) {
                              Marking pair{markable[i], markable[i + 1]};
                              bool found = false;
                              for (const auto& m : sm)
                                  found |= m.nu == pair;
                              c.require(found, "consecutive pair missing");
                          }
                          if (l == Letter::C) {
                              bool found = false;
                              for (const auto& m : sm)
                                  found |= m.nu == Marking{markable.front()};
                              c.require(found, "type C extra generator missing");
                          }
                          std::vector<Marking> smset;
                          for (const auto& m : sm)
                              smset.push_back(m.nu);
                          for (const auto& m : all) {
                              if (m.empty())
                                  continue;
                              bool is_sm = std::find(smset.begin(), smset.end(), m)
                                  != smset.end();
                              if (is_sm) {
                                  for (const auto& lower : all)
                                      if (lower != m && marking_leq(ctx, lower, m))
                                          c.require(lower.empty(),
                                                    "superminimal has nontrivial floor");
                              } else {
                                  bool above = false;
                                  for (const auto& s : smset)
                                      above |= s != m && marking_leq(ctx, s, m);
                                  c.require(above, "marking misses every generator");
                              }
                          }
                      }
                  }
              });

    criterion("counting sanity in rank two", 0, [](Checker& c) {
        c.require(enumerate_classes({Letter::B, 2}).size() == 4, "class count off");
        auto bips = enumerate_bipartitions({Letter::B, 2});
        c.require(bips.size() == 5, "representation count off");
        long long total = 0;
        for (const auto& e : bips) {
            long long d = oracles::dim_bipartition(e);
            total += d * d;
        }
        c.require(total == 8, "group order identity off");
    });

    if (g_failed_criteria) {
        std::cout << g_failed_criteria << " criterion(s) failed\n";
        return 1;
    }
    std::cout << "all criteria passed\n";
    return 0;
}
