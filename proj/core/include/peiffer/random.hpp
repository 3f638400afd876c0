#pragma once

#include <cstdint>
#include <memory>
#include <random>

#include "peiffer/sequences.hpp"

namespace peiffer {

/// Per-case seed derived from a master seed by a fixed splittable scheme:
/// one splitmix64 step of master + index * golden-gamma.
std::uint64_t case_seed(std::uint64_t master, std::uint64_t index);

class Rng {
public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next() { return eng_(); }
  /// Uniform integer in [lo, hi].
  int uniform(int lo, int hi);
  bool coin() { return (next() & 1) != 0; }

private:
  std::mt19937_64 eng_;
};

Word random_word(Rng& rng, int alphabet_size, int max_len);

/// A valid identity sequence assembled from inverse-pair atoms, commutator
/// atoms [a,b][b,a] over two classes, and (when the ordered product of the
/// first relators of all classes is trivial, as in the sphere presentations)
/// full-cycle atoms; then scrambled by random exchange moves.
IdentitySequence random_identity_sequence(
    Rng& rng, std::shared_ptr<const ColoredPresentation> pres, int atoms,
    int scramble_moves, int conjugator_len = 3);

/// Same, but every item stays within the two given classes.
IdentitySequence random_two_class_sequence(
    Rng& rng, std::shared_ptr<const ColoredPresentation> pres, int cls_a,
    int cls_b, int atoms, int conjugator_len = 3);

/// A random applicable Peiffer move for the sequence.
PeifferMove random_move(Rng& rng, const IdentitySequence& seq);

/// The canonical cycle sequence ((1,+,w),...,(n+1,+,w)) over a sphere-style
/// presentation whose ordered first relators multiply to the identity.
IdentitySequence cycle_sequence(std::shared_ptr<const ColoredPresentation> pres,
                                const Word& conjugator, bool inverted = false);

}  // namespace peiffer
