#include "peiffer/sequences.hpp"

#include <algorithm>

namespace peiffer {

IdentitySequence::IdentitySequence(
    std::shared_ptr<const ColoredPresentation> presentation,
    std::vector<ConjugatedRelator> items)
    : presentation_(std::move(presentation)), items_(std::move(items)) {
  if (!presentation_) throw Error("identity sequence needs a presentation");
  for (const ConjugatedRelator& it : items_) {
    presentation_->relator(it.relator);  // bounds check
    if (it.exponent != 1 && it.exponent != -1)
      throw Error("relator exponent must be +1 or -1");
    if (it.conjugator.max_generator() >= presentation_->alphabet().size())
      throw Error("conjugator uses generator outside the alphabet");
  }
}

Word realize(const ColoredPresentation& pres, const ConjugatedRelator& item) {
  const Word& r = pres.relator(item.relator);
  return conjugate(item.exponent == 1 ? r : invert(r), item.conjugator);
}

Word realized_product(const IdentitySequence& seq) {
  Word acc;
  for (const ConjugatedRelator& it : seq.items())
    acc = multiply(acc, realize(seq.presentation(), it));
  return acc;
}

bool validate(const IdentitySequence& seq) { return realized_product(seq).empty(); }

IdentitySequence peiffer_apply(const IdentitySequence& seq, const PeifferMove& move) {
  const ColoredPresentation& pres = seq.presentation();
  std::vector<ConjugatedRelator> items = seq.items();
  const std::size_t n = items.size();

  switch (move.kind) {
    case PeifferMove::Kind::respell: {
      if (move.pos >= n) throw Error("peiffer move position out of range");
      if (!(move.respelling == items[move.pos].conjugator))
        throw Error("respelling is not freely equal to the conjugator");
      return seq;  // reduced conjugators make (i) a no-op
    }
    case PeifferMove::Kind::delete_pair: {
      // Deletion needs a formal inverse pair (same relator occurrence,
      // opposite exponent, same conjugator), not merely inverse realized
      // words: collapsing e.g. a class-1 term against a class-2 term would
      // change the class blocks and break invariance of the lambda maps.
      if (move.pos + 1 >= n) throw Error("peiffer move position out of range");
      const ConjugatedRelator& a = items[move.pos];
      const ConjugatedRelator& b = items[move.pos + 1];
      if (!(a.relator == b.relator) || a.exponent != -b.exponent ||
          !(a.conjugator == b.conjugator))
        throw Error("terms at position are not a formal inverse pair");
      items.erase(items.begin() + static_cast<long>(move.pos),
                  items.begin() + static_cast<long>(move.pos) + 2);
      break;
    }
    case PeifferMove::Kind::insert_pair: {
      if (move.pos > n) throw Error("peiffer move position out of range");
      const ConjugatedRelator& a = move.insert_first;
      const ConjugatedRelator& b = move.insert_second;
      if (!(a.relator == b.relator) || a.exponent != -b.exponent ||
          !(a.conjugator == b.conjugator))
        throw Error("inserted pair is not a formal inverse pair");
      items.insert(items.begin() + static_cast<long>(move.pos),
                   {move.insert_first, move.insert_second});
      break;
    }
    case PeifferMove::Kind::exchange: {
      if (move.pos + 1 >= n) throw Error("peiffer move position out of range");
      ConjugatedRelator a = items[move.pos];
      ConjugatedRelator b = items[move.pos + 1];
      a.conjugator = multiply(a.conjugator, realize(pres, b));
      items[move.pos] = b;
      items[move.pos + 1] = a;
      break;
    }
    case PeifferMove::Kind::coexchange: {
      if (move.pos + 1 >= n) throw Error("peiffer move position out of range");
      ConjugatedRelator a = items[move.pos];
      ConjugatedRelator b = items[move.pos + 1];
      b.conjugator = multiply(b.conjugator, invert(realize(pres, a)));
      items[move.pos] = b;
      items[move.pos + 1] = a;
      break;
    }
  }
  return IdentitySequence(seq.presentation_ptr(), std::move(items));
}

IdentitySequence juxtapose(const IdentitySequence& a, const IdentitySequence& b) {
  if (!(a.presentation() == b.presentation()))
    throw Error("juxtapose: presentation mismatch");
  std::vector<ConjugatedRelator> items = a.items();
  items.insert(items.end(), b.items().begin(), b.items().end());
  return IdentitySequence(a.presentation_ptr(), std::move(items));
}

IdentitySequence inverse_sequence(const IdentitySequence& c) {
  std::vector<ConjugatedRelator> items(c.items().rbegin(), c.items().rend());
  for (ConjugatedRelator& it : items) it.exponent = -it.exponent;
  return IdentitySequence(c.presentation_ptr(), std::move(items));
}

IdentitySequence conjugate_sequence(const IdentitySequence& c, const Word& f) {
  if (f.max_generator() >= c.presentation().alphabet().size())
    throw Error("conjugating word uses generator outside the alphabet");
  std::vector<ConjugatedRelator> items = c.items();
  for (ConjugatedRelator& it : items) it.conjugator = multiply(it.conjugator, f);
  return IdentitySequence(c.presentation_ptr(), std::move(items));
}

BlockDecomposition block_decompose(const IdentitySequence& c) {
  const ColoredPresentation& pres = c.presentation();
  const int n = pres.num_classes();
  if (n != 2 && n != 3)
    throw Error("block decomposition needs a 2- or 3-class presentation");
  if (!validate(c)) throw Error("block decomposition of a non-identity sequence");

  const auto& items = c.items();
  std::vector<std::size_t> pos_of[3];
  for (std::size_t i = 0; i < items.size(); ++i)
    pos_of[items[i].relator.cls].push_back(i);

  // Class-1 items move left unchanged; class-2 items pick up conjugation by
  // the class-1 terms they passed over; class-3 items pick up both the
  // class-1 terms and the already-conjugated class-2 terms after them.
  std::vector<ConjugatedRelator> cls2_items;
  std::vector<Word> cls2_realized;
  for (std::size_t p : pos_of[1]) {
    Word tail;
    for (std::size_t r : pos_of[0])
      if (r > p) tail = multiply(tail, realize(pres, items[r]));
    ConjugatedRelator it = items[p];
    it.conjugator = multiply(it.conjugator, tail);
    cls2_realized.push_back(realize(pres, it));
    cls2_items.push_back(std::move(it));
  }

  std::vector<ConjugatedRelator> cls3_items;
  if (n == 3) {
    for (std::size_t p : pos_of[2]) {
      Word tail;
      for (std::size_t r : pos_of[0])
        if (r > p) tail = multiply(tail, realize(pres, items[r]));
      for (std::size_t j = 0; j < pos_of[1].size(); ++j)
        if (pos_of[1][j] > p) tail = multiply(tail, cls2_realized[j]);
      ConjugatedRelator it = items[p];
      it.conjugator = multiply(it.conjugator, tail);
      cls3_items.push_back(std::move(it));
    }
  }

  BlockDecomposition out;
  for (std::size_t p : pos_of[0]) {
    out.reordered.push_back(items[p]);
    out.r = multiply(out.r, realize(pres, items[p]));
  }
  for (std::size_t i = 0; i < cls2_items.size(); ++i) {
    out.s = multiply(out.s, cls2_realized[i]);
    out.reordered.push_back(std::move(cls2_items[i]));
  }
  for (ConjugatedRelator& it : cls3_items) {
    out.t = multiply(out.t, realize(pres, it));
    out.reordered.push_back(std::move(it));
  }

  if (!multiply(out.r, multiply(out.s, out.t)).empty())
    throw Error("block decomposition lost the identity product");
  return out;
}

}  // namespace peiffer
