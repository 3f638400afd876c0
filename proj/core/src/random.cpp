#include "peiffer/random.hpp"

namespace peiffer {

std::uint64_t case_seed(std::uint64_t master, std::uint64_t index) {
  std::uint64_t z = master + index * 0x9E3779B97F4A7C15ull;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

int Rng::uniform(int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(eng_);
}

Word random_word(Rng& rng, int alphabet_size, int max_len) {
  int len = rng.uniform(0, max_len);
  std::vector<Letter> letters;
  for (int i = 0; i < len; ++i)
    letters.push_back(Letter{rng.uniform(0, alphabet_size - 1), rng.coin() ? 1 : -1});
  return Word(std::move(letters));
}

namespace {

std::vector<ConjugatedRelator> inverse_pair_atom(Rng& rng,
                                                 const ColoredPresentation& pres,
                                                 int cls, int conj_len) {
  int idx = rng.uniform(0, static_cast<int>(pres.classes()[static_cast<std::size_t>(cls)].size()) - 1);
  int exp = rng.coin() ? 1 : -1;
  Word w = random_word(rng, pres.alphabet().size(), conj_len);
  return {ConjugatedRelator{{cls, idx}, exp, w},
          ConjugatedRelator{{cls, idx}, -exp, w}};
}

// ((a^-1)^w, a^{bw}, (b^-1)^w, b^{aw}) realizes [a,b][b,a] = 1
std::vector<ConjugatedRelator> commutator_atom(Rng& rng,
                                               const ColoredPresentation& pres,
                                               int cls_a, int cls_b, int conj_len) {
  int ia = rng.uniform(0, static_cast<int>(pres.classes()[static_cast<std::size_t>(cls_a)].size()) - 1);
  int ib = rng.uniform(0, static_cast<int>(pres.classes()[static_cast<std::size_t>(cls_b)].size()) - 1);
  const Word& a = pres.relator({cls_a, ia});
  const Word& b = pres.relator({cls_b, ib});
  Word w = random_word(rng, pres.alphabet().size(), conj_len);
  return {ConjugatedRelator{{cls_a, ia}, -1, w},
          ConjugatedRelator{{cls_a, ia}, +1, multiply(b, w)},
          ConjugatedRelator{{cls_b, ib}, -1, w},
          ConjugatedRelator{{cls_b, ib}, +1, multiply(a, w)}};
}

bool has_trivial_cycle(const ColoredPresentation& pres) {
  Word prod;
  for (int c = 0; c < pres.num_classes(); ++c)
    prod = multiply(prod, pres.relator({c, 0}));
  return prod.empty();
}

IdentitySequence scramble(Rng& rng, IdentitySequence seq, int moves) {
  for (int i = 0; i < moves && seq.size() >= 2; ++i) {
    PeifferMove m;
    m.kind = rng.coin() ? PeifferMove::Kind::exchange : PeifferMove::Kind::coexchange;
    m.pos = static_cast<std::size_t>(rng.uniform(0, static_cast<int>(seq.size()) - 2));
    seq = peiffer_apply(seq, m);
  }
  return seq;
}

}  // namespace

IdentitySequence cycle_sequence(std::shared_ptr<const ColoredPresentation> pres,
                                const Word& conjugator, bool inverted) {
  std::vector<ConjugatedRelator> items;
  for (int c = 0; c < pres->num_classes(); ++c)
    items.push_back(ConjugatedRelator{{c, 0}, +1, conjugator});
  IdentitySequence seq(std::move(pres), std::move(items));
  if (!validate(seq)) throw Error("presentation has no trivial relator cycle");
  return inverted ? inverse_sequence(seq) : seq;
}

IdentitySequence random_identity_sequence(
    Rng& rng, std::shared_ptr<const ColoredPresentation> pres, int atoms,
    int scramble_moves, int conjugator_len) {
  const int n = pres->num_classes();
  const bool cycle_ok = has_trivial_cycle(*pres);
  std::vector<ConjugatedRelator> items;
  for (int i = 0; i < atoms; ++i) {
    int kind = rng.uniform(0, cycle_ok ? 2 : 1);
    std::vector<ConjugatedRelator> atom;
    switch (kind) {
      case 0:
        atom = inverse_pair_atom(rng, *pres, rng.uniform(0, n - 1), conjugator_len);
        break;
      case 1: {
        int a = rng.uniform(0, n - 1);
        int b = rng.uniform(0, n - 2);
        if (b >= a) ++b;
        atom = commutator_atom(rng, *pres, a, b, conjugator_len);
        break;
      }
      default: {
        Word w = random_word(rng, pres->alphabet().size(), conjugator_len);
        IdentitySequence cyc = cycle_sequence(pres, w, rng.coin());
        atom = cyc.items();
        break;
      }
    }
    items.insert(items.end(), atom.begin(), atom.end());
  }
  return scramble(rng, IdentitySequence(std::move(pres), std::move(items)),
                  scramble_moves);
}

IdentitySequence random_two_class_sequence(
    Rng& rng, std::shared_ptr<const ColoredPresentation> pres, int cls_a,
    int cls_b, int atoms, int conjugator_len) {
  std::vector<ConjugatedRelator> items;
  for (int i = 0; i < atoms; ++i) {
    std::vector<ConjugatedRelator> atom =
        rng.coin() ? inverse_pair_atom(rng, *pres, rng.coin() ? cls_a : cls_b,
                                       conjugator_len)
                   : commutator_atom(rng, *pres, cls_a, cls_b, conjugator_len);
    items.insert(items.end(), atom.begin(), atom.end());
  }
  return scramble(rng, IdentitySequence(std::move(pres), std::move(items)),
                  atoms);
}

PeifferMove random_move(Rng& rng, const IdentitySequence& seq) {
  const ColoredPresentation& pres = seq.presentation();
  const int n = static_cast<int>(seq.size());
  for (int attempt = 0; attempt < 16; ++attempt) {
    int kind = rng.uniform(0, 4);
    PeifferMove m;
    switch (kind) {
      case 0: {  // respell: pick an item and hand back its own conjugator
        if (n == 0) continue;
        m.kind = PeifferMove::Kind::respell;
        m.pos = static_cast<std::size_t>(rng.uniform(0, n - 1));
        m.respelling = seq.items()[m.pos].conjugator;
        return m;
      }
      case 1: {  // delete an adjacent formal inverse pair, if any
        for (int i = 0; i + 1 < n; ++i) {
          const ConjugatedRelator& a = seq.items()[static_cast<std::size_t>(i)];
          const ConjugatedRelator& b = seq.items()[static_cast<std::size_t>(i) + 1];
          if (a.relator == b.relator && a.exponent == -b.exponent &&
              a.conjugator == b.conjugator) {
            m.kind = PeifferMove::Kind::delete_pair;
            m.pos = static_cast<std::size_t>(i);
            return m;
          }
        }
        continue;
      }
      case 2: {
        m.kind = PeifferMove::Kind::insert_pair;
        m.pos = static_cast<std::size_t>(rng.uniform(0, n));
        int cls = rng.uniform(0, pres.num_classes() - 1);
        int idx = rng.uniform(0, static_cast<int>(pres.classes()[static_cast<std::size_t>(cls)].size()) - 1);
        int exp = rng.coin() ? 1 : -1;
        Word w = random_word(rng, pres.alphabet().size(), 3);
        m.insert_first = ConjugatedRelator{{cls, idx}, exp, w};
        m.insert_second = ConjugatedRelator{{cls, idx}, -exp, w};
        return m;
      }
      default: {
        if (n < 2) continue;
        m.kind = kind == 3 ? PeifferMove::Kind::exchange : PeifferMove::Kind::coexchange;
        m.pos = static_cast<std::size_t>(rng.uniform(0, n - 2));
        return m;
      }
    }
  }
  // fall back to an always-applicable insertion at the front
  PeifferMove m;
  m.kind = PeifferMove::Kind::insert_pair;
  m.pos = 0;
  m.insert_first = ConjugatedRelator{{0, 0}, +1, Word()};
  m.insert_second = ConjugatedRelator{{0, 0}, -1, Word()};
  return m;
}

}  // namespace peiffer
