#include "ballq/presentation.hpp"

#include <string>
#include <vector>

#include "ballq/weights.hpp"
#include "json.hpp"

namespace ballq::presentation {

namespace {

using exact::Rational;
using refdata::Word;
using symbolic::RatFunc;

/// The alternating braid word abab... with `length` letters.
Word alternating(int a, int b, int length) {
  Word w;
  for (int i = 0; i < length; ++i) w.push_back(i % 2 == 0 ? a : b);
  return w;
}

/// Like word_str, but parenthesized when the word has several letters, so
/// braid relations between words stay readable.
std::string factor_str(const Word& w) {
  if (w.size() == 1) return refdata::word_str(w);
  return "(" + refdata::word_str(w) + ")";
}

/// Concatenation of alternating word factors: a b a b... with `length`
/// factors drawn from two words.
std::string alternating_words(const Word& a, const Word& b, int length) {
  std::string out;
  for (int i = 0; i < length; ++i) {
    if (!out.empty()) out += ' ';
    out += factor_str(i % 2 == 0 ? a : b);
  }
  return out;
}

/// "r3" -> "r_{3}" for LaTeX output; words become products.
std::string latex_word(const Word& w) {
  std::string out;
  for (int g : w) {
    if (!out.empty()) out += ' ';
    out += "r_{" + std::to_string(g < 0 ? -g : g) + "}";
    if (g < 0) out += "^{-1}";
  }
  return out;
}

long integer_or_throw(const Rational& value, const std::string& what) {
  if (!value.is_integer() || value <= Rational(0))
    throw PresentationError(what + " is " + value.str() +
                            ", not a positive integer");
  return value.to_long();
}

const refdata::Stratum& slot_stratum(const refdata::GroupData& data,
                                     const refdata::CentralPower& slot) {
  const refdata::Stratum* s = data.find_point(slot.stratum);
  if (s == nullptr)
    throw PresentationError(data.id + ": central power slot names unknown point orbit " +
                            slot.stratum);
  if (!s->irreducible || !s->kappa || !s->center)
    throw PresentationError(data.id + ": central power stratum " + slot.stratum +
                            " is not an irreducible point orbit with local data");
  return *s;
}

}  // namespace

std::vector<int> generator_classes(const refdata::GroupData& data) {
  const int n = static_cast<int>(data.num_generators());
  std::vector<int> cls(static_cast<size_t>(n), 0);

  // Connected components of the odd-braid graph, by index fill.
  std::vector<int> comp(static_cast<size_t>(n), -1);
  int ncomp = 0;
  for (int start = 0; start < n; ++start) {
    if (comp[static_cast<size_t>(start)] >= 0) continue;
    comp[static_cast<size_t>(start)] = ncomp;
    std::vector<int> frontier = {start};
    while (!frontier.empty()) {
      const int v = frontier.back();
      frontier.pop_back();
      for (const refdata::BraidRelation& b : data.braids) {
        if (b.length % 2 == 0) continue;
        const int other = b.a - 1 == v ? b.b - 1 : (b.b - 1 == v ? b.a - 1 : -1);
        if (other < 0 || comp[static_cast<size_t>(other)] >= 0) continue;
        comp[static_cast<size_t>(other)] = ncomp;
        frontier.push_back(other);
      }
    }
    ++ncomp;
  }

  // Seed each component from the curated order relations.
  std::vector<int> comp_class(static_cast<size_t>(ncomp), 0);
  for (const refdata::OrderRelation& r : data.presentation.order_relations) {
    if (r.generator < 1 || r.generator > n)
      throw PresentationError(data.id + ": order relation names generator " +
                              std::to_string(r.generator));
    int& slot = comp_class[static_cast<size_t>(comp[static_cast<size_t>(r.generator - 1)])];
    if (slot != 0 && slot != r.weight_index)
      throw PresentationError(data.id + ": conjugate generators r" +
                              std::to_string(r.generator) +
                              "... carry conflicting weight classes");
    slot = r.weight_index;
  }
  for (int v = 0; v < n; ++v) {
    const int c = comp_class[static_cast<size_t>(comp[static_cast<size_t>(v)])];
    if (c == 0)
      throw PresentationError(data.id + ": generator r" + std::to_string(v + 1) +
                              " is not reachable from any order relation");
    cls[static_cast<size_t>(v)] = c;
  }

  // The mirror orbit anchors give an independent reading of the classes.
  for (const refdata::MirrorOrbit& o : data.mirror_orbits) {
    if (o.anchor < 1 || o.anchor > n) continue;
    if (cls[static_cast<size_t>(o.anchor - 1)] != o.weight_index)
      throw PresentationError(data.id + ": anchor generator r" +
                              std::to_string(o.anchor) + " of orbit " + o.label +
                              " disagrees with the braid-propagated class");
  }
  return cls;
}

Presentation build_presentation(const refdata::GroupData& data,
                                const std::vector<long>& weights) {
  const weights::WeightCheck wc = weights::check(data, weights);
  if (wc.holonomy != weights::Holonomy::kHyperbolic)
    throw PresentationError(data.id + ": the assignment is " +
                            weights::holonomy_name(wc.holonomy) +
                            "; the lattice presentation needs a hyperbolic one");
  if (!wc.admissible) {
    std::string what = data.id + ": assignment fails the stratum conditions at";
    for (const std::string& label : wc.failures) what += " " + label;
    throw PresentationError(what);
  }

  Presentation p;
  p.group_id = data.id;
  p.weights = weights;
  p.generators = data.generator_names;

  const std::vector<int> cls = generator_classes(data);
  for (size_t i = 0; i < cls.size(); ++i)
    p.orders.push_back({static_cast<int>(i) + 1,
                        weights[static_cast<size_t>(cls[i]) - 1]});

  p.braids = data.braids;
  p.commuting = data.commuting;
  p.cycles = data.cycles;
  p.word_braids = data.word_braids;

  for (const refdata::CentralPower& slot : data.presentation.central_powers) {
    const refdata::Stratum& s = slot_stratum(data, slot);
    const Rational kappa = refdata::eval_weights(*s.kappa, weights);
    if (kappa < Rational(1)) continue;
    if (kappa == Rational(1)) {
      p.cusps.push_back({slot.word, slot.stratum});
      continue;
    }

    const weights::StratumCheck* sc = nullptr;
    for (const auto& c : wc.strata)
      if (c.label == slot.stratum) sc = &c;
    if (sc == nullptr || !sc->n)
      throw PresentationError(data.id + ": deep stratum " + slot.stratum +
                              " has no branching order despite admissibility");

    CentralPowerRelation rel;
    rel.word = slot.word;
    rel.stratum = slot.stratum;
    rel.base = integer_or_throw(refdata::eval_weights(slot.base, weights),
                                data.id + ": base of " + slot.stratum);
    rel.n = *sc->n;
    rel.exponent = rel.base * rel.n;
    if (!slot.exponent)
      throw PresentationError(data.id + ": stratum " + slot.stratum +
                              " is deep at an admissible assignment but carries "
                              "no closed-form exponent");
    const Rational closed = refdata::eval_weights(*slot.exponent, weights);
    if (closed != Rational(rel.exponent))
      throw PresentationError(data.id + ": exponent " +
                              std::to_string(rel.exponent) + " at " + slot.stratum +
                              " contradicts the closed form " + closed.str());
    p.central_powers.push_back(std::move(rel));
  }

  // Every deep irreducible point orbit must contribute a relation; a gap
  // here means the curated slot list is incomplete.
  for (const refdata::Stratum& s : data.points) {
    if (!s.irreducible || !s.kappa) continue;
    if (refdata::eval_weights(*s.kappa, weights) <= Rational(1)) continue;
    bool covered = false;
    for (const auto& rel : p.central_powers) covered |= rel.stratum == s.label;
    if (!covered)
      throw PresentationError(data.id + ": deep point orbit " + s.label +
                              " has no central power slot");
  }
  return p;
}

std::vector<std::string> verify_exponent_formulas(const refdata::GroupData& data) {
  std::vector<std::string> problems;
  auto problem = [&](const std::string& what) {
    problems.push_back(data.id + ": " + what);
  };

  for (const refdata::CentralPower& slot : data.presentation.central_powers) {
    const refdata::Stratum* s = data.find_point(slot.stratum);
    if (s == nullptr || !s->irreducible || !s->kappa || !s->center) {
      problem("slot " + slot.stratum + " does not name an irreducible point orbit");
      continue;
    }
    if (slot.exponent) {
      // exponent = base * |Z_L| / (kappa_L - 1), as rational functions.
      const RatFunc expected = slot.base * RatFunc::constant(Rational(*s->center)) /
                               (*s->kappa - RatFunc::constant(Rational(1)));
      if (*slot.exponent != expected)
        problem("closed form at " + slot.stratum +
                " is not base * center / (kappa - 1)");
    } else {
      // No closed form: the stratum must never go deep while admissible.
      std::vector<std::vector<long>> assignments = data.classification.admissible;
      if (data.classification.swap_symmetry)
        for (const auto& w : data.classification.admissible)
          assignments.push_back({w[1], w[0]});
      for (const auto& w : assignments)
        if (refdata::eval_weights(*s->kappa, w) > Rational(1))
          problem("slot " + slot.stratum + " lacks a closed form but is deep at an "
                  "admissible assignment");
    }
  }
  return problems;
}

std::string to_text(const Presentation& p) {
  std::string out = p.group_id + " at (";
  for (size_t i = 0; i < p.weights.size(); ++i)
    out += (i ? ", " : "") + std::to_string(p.weights[i]);
  out += ")\ngenerators:";
  for (const std::string& g : p.generators) out += " " + g;
  out += '\n';
  for (const OrderRelation& r : p.orders)
    out += "r" + std::to_string(r.generator) + "^" + std::to_string(r.exponent) +
           " = 1\n";
  for (const refdata::BraidRelation& b : p.braids)
    out += refdata::word_str(alternating(b.a, b.b, b.length)) + " = " +
           refdata::word_str(alternating(b.b, b.a, b.length)) + "\n";
  for (const auto& [a, b] : p.commuting)
    out += refdata::word_str({a, b}) + " = " + refdata::word_str({b, a}) + "\n";
  for (const std::vector<int>& cycle : p.cycles) {
    for (size_t off = 0; off < cycle.size(); ++off) {
      Word w;
      for (size_t i = 0; i < cycle.size(); ++i)
        w.push_back(cycle[(off + i) % cycle.size()]);
      out += (off ? " = " : "") + refdata::word_str(w);
    }
    out += '\n';
  }
  for (const refdata::WordBraid& wb : p.word_braids)
    out += alternating_words(wb.a, wb.b, wb.length) + " = " +
           alternating_words(wb.b, wb.a, wb.length) + "\n";
  for (const CentralPowerRelation& r : p.central_powers)
    out += "(" + refdata::word_str(r.word) + ")^" + std::to_string(r.exponent) +
           " = 1   [" + r.stratum + ": base " + std::to_string(r.base) + ", n = " +
           std::to_string(r.n) + "]\n";
  for (const CuspSlot& c : p.cusps)
    out += "cusp at " + c.stratum + ": no relation for (" +
           refdata::word_str(c.word) + ")\n";
  return out;
}

std::string to_json(const Presentation& p) {
  nlohmann::json j;
  j["group"] = p.group_id;
  j["weights"] = p.weights;
  j["generators"] = p.generators;
  nlohmann::json orders = nlohmann::json::array();
  for (const OrderRelation& r : p.orders)
    orders.push_back({{"generator", r.generator}, {"exponent", r.exponent}});
  j["orders"] = orders;
  nlohmann::json braids = nlohmann::json::array();
  for (const refdata::BraidRelation& b : p.braids)
    braids.push_back({{"a", b.a}, {"b", b.b}, {"length", b.length}});
  j["braids"] = braids;
  nlohmann::json commuting = nlohmann::json::array();
  for (const auto& [a, b] : p.commuting) commuting.push_back({a, b});
  j["commuting"] = commuting;
  j["cycles"] = p.cycles;
  nlohmann::json word_braids = nlohmann::json::array();
  for (const refdata::WordBraid& wb : p.word_braids)
    word_braids.push_back({{"a", wb.a}, {"b", wb.b}, {"length", wb.length}});
  j["word_braids"] = word_braids;
  nlohmann::json central = nlohmann::json::array();
  for (const CentralPowerRelation& r : p.central_powers)
    central.push_back({{"word", r.word},
                       {"stratum", r.stratum},
                       {"base", r.base},
                       {"n", r.n},
                       {"exponent", r.exponent}});
  j["central_powers"] = central;
  nlohmann::json cusps = nlohmann::json::array();
  for (const CuspSlot& c : p.cusps)
    cusps.push_back({{"word", c.word}, {"stratum", c.stratum}});
  j["cusps"] = cusps;
  return j.dump(2);
}

std::string to_latex(const Presentation& p) {
  std::vector<std::string> rels;
  for (const OrderRelation& r : p.orders)
    rels.push_back("r_{" + std::to_string(r.generator) + "}^{" +
                   std::to_string(r.exponent) + "} = 1");
  for (const refdata::BraidRelation& b : p.braids)
    rels.push_back(latex_word(alternating(b.a, b.b, b.length)) + " = " +
                   latex_word(alternating(b.b, b.a, b.length)));
  for (const auto& [a, b] : p.commuting)
    rels.push_back(latex_word({a, b}) + " = " + latex_word({b, a}));
  for (const std::vector<int>& cycle : p.cycles) {
    std::string rel;
    for (size_t off = 0; off < cycle.size(); ++off) {
      Word w;
      for (size_t i = 0; i < cycle.size(); ++i)
        w.push_back(cycle[(off + i) % cycle.size()]);
      rel += (off ? " = " : "") + latex_word(w);
    }
    rels.push_back(rel);
  }
  for (const refdata::WordBraid& wb : p.word_braids) {
    auto side = [&](const Word& x, const Word& y) {
      std::string out;
      for (int i = 0; i < wb.length; ++i) {
        const Word& w = i % 2 == 0 ? x : y;
        if (!out.empty()) out += ' ';
        out += w.size() == 1 ? latex_word(w) : "(" + latex_word(w) + ")";
      }
      return out;
    };
    rels.push_back(side(wb.a, wb.b) + " = " + side(wb.b, wb.a));
  }
  for (const CentralPowerRelation& r : p.central_powers)
    rels.push_back("(" + latex_word(r.word) + ")^{" + std::to_string(r.exponent) +
                   "} = 1");

  std::string out = "\\left\\langle ";
  for (size_t i = 0; i < p.generators.size(); ++i)
    out += (i ? ", " : "") + latex_word({static_cast<int>(i) + 1});
  out += " \\;\\middle|\\; ";
  for (size_t i = 0; i < rels.size(); ++i) out += (i ? ",\\ " : "") + rels[i];
  out += " \\right\\rangle";
  return out;
}

}  // namespace ballq::presentation
