#include "peiffer/io.hpp"

#include <fstream>
#include <sstream>

#include "peiffer/parse.hpp"

namespace peiffer {

namespace {

[[noreturn]] void line_error(int line, const std::string& msg) {
  throw Error("line " + std::to_string(line) + ": " + msg);
}

std::string strip(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

std::string strip_comment(const std::string& s) {
  std::size_t h = s.find('#');
  return h == std::string::npos ? s : s.substr(0, h);
}

}  // namespace

ColoredPresentation parse_presentation(std::istream& in) {
  std::string line;
  int lineno = 0;
  bool have_gens = false;
  Alphabet alphabet;
  std::vector<std::vector<Word>> classes;

  while (std::getline(in, line)) {
    ++lineno;
    std::string body = strip(strip_comment(line));
    if (body.empty()) continue;
    if (body.rfind("gens:", 0) == 0) {
      if (have_gens) line_error(lineno, "duplicate gens: line");
      std::istringstream names(body.substr(5));
      std::vector<std::string> gens;
      for (std::string n; names >> n;) gens.push_back(n);
      if (gens.empty()) line_error(lineno, "gens: line declares no generators");
      try {
        alphabet = Alphabet(std::move(gens));
      } catch (const Error& e) {
        line_error(lineno, e.what());
      }
      have_gens = true;
    } else if (body.rfind("class:", 0) == 0) {
      if (!have_gens) line_error(lineno, "class: before gens:");
      std::vector<Word> relators;
      std::string rest = body.substr(6);
      std::size_t start = 0;
      while (start <= rest.size()) {
        std::size_t semi = rest.find(';', start);
        std::string chunk = strip(semi == std::string::npos ? rest.substr(start)
                                                            : rest.substr(start, semi - start));
        if (!chunk.empty()) {
          try {
            Word r = parse_word(chunk, alphabet);
            if (r.empty()) line_error(lineno, "relator reduces to the empty word");
            relators.push_back(std::move(r));
          } catch (const ParseError& e) {
            line_error(lineno, e.what());
          }
        }
        if (semi == std::string::npos) break;
        start = semi + 1;
      }
      if (relators.empty()) line_error(lineno, "class: line declares no relators");
      classes.push_back(std::move(relators));
    } else {
      line_error(lineno, "expected 'gens:' or 'class:' line");
    }
  }
  if (!have_gens) throw Error("presentation file has no gens: line");
  return ColoredPresentation(std::move(alphabet), std::move(classes));
}

ColoredPresentation parse_presentation_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  return parse_presentation(in);
}

IdentitySequence parse_sequence(std::istream& in,
                                std::shared_ptr<const ColoredPresentation> pres) {
  if (!pres) throw Error("sequence parsing needs a presentation");
  std::string line;
  int lineno = 0;
  bool open = false, closed = false;
  std::vector<ConjugatedRelator> items;

  while (std::getline(in, line)) {
    ++lineno;
    std::string body = strip(strip_comment(line));
    if (body.empty()) continue;
    if (!open) {
      if (body != "seq {") line_error(lineno, "expected 'seq {'");
      open = true;
      continue;
    }
    if (body == "}") {
      closed = true;
      continue;
    }
    if (closed) line_error(lineno, "content after closing '}'");
    if (body.front() != '(' || body.back() != ')')
      line_error(lineno, "expected '(<class>:<index> <+|-> @ <word>)'");
    std::string inner = body.substr(1, body.size() - 2);
    std::size_t colon = inner.find(':');
    std::size_t at = inner.find('@');
    if (colon == std::string::npos || at == std::string::npos || at < colon)
      line_error(lineno, "malformed sequence item");
    ConjugatedRelator item;
    try {
      std::string mid = strip(inner.substr(colon + 1, at - colon - 1));
      std::size_t sp = mid.find_last_of(" \t");
      if (sp == std::string::npos) line_error(lineno, "missing sign");
      std::string sign = strip(mid.substr(sp));
      item.relator.cls = std::stoi(strip(inner.substr(0, colon))) - 1;
      item.relator.idx = std::stoi(strip(mid.substr(0, sp))) - 1;
      if (sign == "+")
        item.exponent = 1;
      else if (sign == "-")
        item.exponent = -1;
      else
        line_error(lineno, "sign must be '+' or '-'");
      item.conjugator = parse_word(strip(inner.substr(at + 1)), pres->alphabet());
    } catch (const std::invalid_argument&) {
      line_error(lineno, "malformed index");
    } catch (const ParseError& e) {
      line_error(lineno, e.what());
    }
    items.push_back(std::move(item));
  }
  if (!open || !closed) throw Error("sequence file missing 'seq { ... }' block");
  try {
    return IdentitySequence(std::move(pres), std::move(items));
  } catch (const Error& e) {
    throw Error(std::string("invalid sequence: ") + e.what());
  }
}

IdentitySequence parse_sequence_file(const std::string& path,
                                     std::shared_ptr<const ColoredPresentation> pres) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  return parse_sequence(in, std::move(pres));
}

std::string format_sequence(const IdentitySequence& seq) {
  std::ostringstream out;
  out << "seq {\n";
  for (const ConjugatedRelator& it : seq.items()) {
    out << "(" << it.relator.cls + 1 << ":" << it.relator.idx + 1 << " "
        << (it.exponent == 1 ? '+' : '-') << " @ "
        << to_string(it.conjugator, seq.presentation().alphabet()) << ")\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace peiffer
