#pragma once

#include <memory>
#include <vector>

#include "peiffer/presentation.hpp"
#include "peiffer/words.hpp"

namespace peiffer {

/// One term of an identity sequence: a relator occurrence raised to +-1 and
/// conjugated, i.e. the word (relator^exponent)^conjugator.
struct ConjugatedRelator {
  RelatorRef relator;
  int exponent = +1;  // +1 or -1
  Word conjugator;

  friend bool operator==(const ConjugatedRelator&, const ConjugatedRelator&) = default;
};

/// An ordered list of conjugated relators whose realized product is trivial
/// in the free group; a certificate for a second-homotopy class.
class IdentitySequence {
public:
  IdentitySequence() = default;
  IdentitySequence(std::shared_ptr<const ColoredPresentation> presentation,
                   std::vector<ConjugatedRelator> items);

  const ColoredPresentation& presentation() const { return *presentation_; }
  const std::shared_ptr<const ColoredPresentation>& presentation_ptr() const {
    return presentation_;
  }
  const std::vector<ConjugatedRelator>& items() const { return items_; }
  std::size_t size() const { return items_.size(); }

private:
  std::shared_ptr<const ColoredPresentation> presentation_;
  std::vector<ConjugatedRelator> items_;
};

/// The conjugated word (relator^exponent)^conjugator, reduced.
Word realize(const ColoredPresentation& pres, const ConjugatedRelator& item);

/// Product of the realized items, in order.
Word realized_product(const IdentitySequence& seq);

/// True iff the realized product is the empty word. Never throws on a
/// non-identity sequence; structural problems (bad indices) do throw.
bool validate(const IdentitySequence& seq);

/// The five elementary rewritings of identity sequences.
struct PeifferMove {
  enum class Kind {
    respell,      // (i)   replace a conjugator by a freely equal word
    delete_pair,  // (ii)  delete consecutive exactly-inverse terms
    insert_pair,  // (iii) insert consecutive exactly-inverse terms
    exchange,     // (iv)  (c_i, c_{i+1}) -> (c_{i+1}, c_i^{c_{i+1}})
    coexchange,   // (v)   (c_i, c_{i+1}) -> (c_{i+1}^{c_i^{-1}}, c_i)
  };
  Kind kind = Kind::exchange;
  std::size_t pos = 0;
  Word respelling;                // (i): the replacement conjugator
  ConjugatedRelator insert_first;   // (iii)
  ConjugatedRelator insert_second;  // (iii)
};

/// Applies one Peiffer move; the result validates true again. Under the
/// reduced-word representation move (i) is a no-op and returns the input.
IdentitySequence peiffer_apply(const IdentitySequence& seq, const PeifferMove& move);

/// Group law of the identity-sequence module: concatenation of item lists.
IdentitySequence juxtapose(const IdentitySequence& a, const IdentitySequence& b);

/// (c_1,...,c_m) -> (c_m^{-1},...,c_1^{-1}): items reversed, exponents
/// negated, conjugators preserved.
IdentitySequence inverse_sequence(const IdentitySequence& c);

/// c^f: every conjugator w_i becomes w_i * f.
IdentitySequence conjugate_sequence(const IdentitySequence& c, const Word& f);

/// Result of reordering a 2- or 3-class identity sequence into class blocks
/// via exchange moves. r * s * t is trivial in F (t empty for 2 classes).
struct BlockDecomposition {
  std::vector<ConjugatedRelator> reordered;
  Word r, s, t;
};

/// Deterministic block decomposition; requires a 2- or 3-class presentation
/// and a valid sequence.
BlockDecomposition block_decompose(const IdentitySequence& c);

}  // namespace peiffer
