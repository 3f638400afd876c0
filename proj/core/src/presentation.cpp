#include "peiffer/presentation.hpp"

#include <cctype>
#include <unordered_set>

namespace peiffer {

namespace {

bool valid_name(const std::string& s) {
  if (s.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') return false;
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

}  // namespace

Alphabet::Alphabet(std::vector<std::string> names) {
  std::unordered_set<std::string> seen;
  gens_.reserve(names.size());
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (!valid_name(names[i]))
      throw Error("invalid generator name '" + names[i] + "'");
    if (!seen.insert(names[i]).second)
      throw Error("duplicate generator name '" + names[i] + "'");
    gens_.push_back(Generator{static_cast<int>(i), std::move(names[i])});
  }
}

const Generator& Alphabet::at(int id) const {
  if (id < 0 || id >= size()) throw Error("generator id out of range");
  return gens_[static_cast<std::size_t>(id)];
}

int Alphabet::index_of(const std::string& name) const {
  for (const Generator& g : gens_)
    if (g.name == name) return g.id;
  return -1;
}

bool operator==(const Alphabet& a, const Alphabet& b) {
  if (a.size() != b.size()) return false;
  for (int i = 0; i < a.size(); ++i)
    if (a.gens_[i].name != b.gens_[i].name) return false;
  return true;
}

ColoredPresentation::ColoredPresentation(Alphabet alphabet,
                                         std::vector<std::vector<Word>> classes)
    : alphabet_(std::move(alphabet)), classes_(std::move(classes)) {
  if (classes_.size() < 2) throw Error("presentation needs at least 2 relator classes");
  for (const auto& cls : classes_) {
    if (cls.empty()) throw Error("empty relator class");
    for (const Word& r : cls) {
      if (r.empty()) throw Error("relators must be nonempty reduced words");
      if (r.max_generator() >= alphabet_.size())
        throw Error("relator uses generator outside the alphabet");
    }
  }
}

const Word& ColoredPresentation::relator(RelatorRef ref) const {
  if (ref.cls < 0 || ref.cls >= num_classes())
    throw Error("relator class index out of range");
  const auto& cls = classes_[static_cast<std::size_t>(ref.cls)];
  if (ref.idx < 0 || ref.idx >= static_cast<int>(cls.size()))
    throw Error("relator index out of range");
  return cls[static_cast<std::size_t>(ref.idx)];
}

bool operator==(const ColoredPresentation& a, const ColoredPresentation& b) {
  return a.alphabet_ == b.alphabet_ && a.classes_ == b.classes_;
}

std::string to_string(const Word& w, const Alphabet& alphabet) {
  if (w.empty()) return "e";
  std::string out;
  std::size_t i = 0;
  const auto& ls = w.letters();
  while (i < ls.size()) {
    std::size_t j = i;
    while (j < ls.size() && ls[j] == ls[i]) ++j;
    long exp = static_cast<long>(j - i) * ls[i].sign;
    if (!out.empty()) out += ' ';
    out += alphabet.at(ls[i].gen).name;
    if (exp != 1) out += "^" + std::to_string(exp);
    i = j;
  }
  return out;
}

}  // namespace peiffer
