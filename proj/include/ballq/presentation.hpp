#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ballq/refdata.hpp"

namespace ballq::presentation {

/// Thrown when a presentation is requested for an assignment outside the
/// admissible range, or when the curated relation data is inconsistent.
class PresentationError : public std::runtime_error {
 public:
  explicit PresentationError(const std::string& what)
      : std::runtime_error(what) {}
};

/// One generator order relation r_g^e = 1 (e is the weight carried by the
/// generator's mirror class).
struct OrderRelation {
  int generator = 0;  ///< 1-based
  long exponent = 0;
};

/// One central power relation (word)^exponent = 1 attached to a deep point
/// stratum; exponent = base * n with n the integer from the half-weight
/// condition at that stratum.
struct CentralPowerRelation {
  refdata::Word word;
  std::string stratum;
  long base = 0;
  long n = 0;
  long exponent = 0;
};

/// A relation slot whose stratum sits exactly at the parabolic threshold:
/// the power degenerates, the relation is omitted, and the quotient keeps a
/// cusp there.
struct CuspSlot {
  refdata::Word word;
  std::string stratum;
};

/// A finished presentation of the lattice at one weight assignment: the
/// generators with their orders, the weight-independent diagram relations,
/// and the weight-dependent central power relations.
struct Presentation {
  std::string group_id;
  std::vector<long> weights;
  std::vector<std::string> generators;
  std::vector<OrderRelation> orders;
  std::vector<refdata::BraidRelation> braids;
  std::vector<std::pair<int, int>> commuting;
  std::vector<std::vector<int>> cycles;
  std::vector<refdata::WordBraid> word_braids;
  std::vector<CentralPowerRelation> central_powers;
  std::vector<CuspSlot> cusps;
};

/// Weight class (1-based) of each generator, indexed 0-based by generator.
/// Seeded by the curated order relations and propagated along odd-length
/// braid relations: an odd braid makes the two generators conjugate, so
/// their mirrors lie in one orbit and carry the same weight.  Checked
/// against the mirror orbit anchors; throws PresentationError on conflict
/// or uncovered generators.
std::vector<int> generator_classes(const refdata::GroupData& data);

/// Assembles the presentation at an admissible weight assignment; throws
/// PresentationError (naming the obstruction) for non-hyperbolic or failing
/// assignments, and when a computed exponent contradicts the curated
/// closed form.
Presentation build_presentation(const refdata::GroupData& data,
                                const std::vector<long>& weights);

/// Symbolic audit of the curated central power slots: every closed-form
/// exponent must equal base * |Z_L| / (kappa_L - 1) as an identity of
/// rational functions, and every slot without a closed form must stay at or
/// below the parabolic threshold on all admissible assignments.  Returns
/// human-readable problems; empty means the table checks out.
std::vector<std::string> verify_exponent_formulas(const refdata::GroupData& data);

/// Renderers: plain text (one relation per line), JSON, LaTeX.
std::string to_text(const Presentation& p);
std::string to_json(const Presentation& p);
std::string to_latex(const Presentation& p);

}  // namespace ballq::presentation
