// Command-line front end. Every subcommand is a thin adapter over the core
// library; no mathematical logic lives here.

#include <algorithm>
#include <cctype>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "peiffer/functors.hpp"
#include "peiffer/io.hpp"
#include "peiffer/lambda.hpp"
#include "peiffer/magnus.hpp"
#include "peiffer/parse.hpp"
#include "peiffer/random.hpp"
#include "peiffer/sequences.hpp"
#include "peiffer/shadow.hpp"
#include "peiffer/wu.hpp"

using json = nlohmann::ordered_json;
using namespace peiffer;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitPropertyFail = 1;
constexpr int kExitUsage = 2;

json json_header() { return json{{"schema", 1}}; }

std::shared_ptr<const ColoredPresentation> load_pres(const std::string& path) {
  return std::make_shared<const ColoredPresentation>(parse_presentation_file(path));
}

/// Alphabet for bare-word commands: identifiers in order of first occurrence.
Alphabet infer_alphabet(const std::string& text) {
  std::vector<std::string> names;
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_'))
        ++j;
      std::string name = text.substr(i, j - i);
      if (name != "e" &&
          std::find(names.begin(), names.end(), name) == names.end())
        names.push_back(name);
      i = j;
    } else {
      ++i;
    }
  }
  if (names.empty()) names.push_back("x1");
  return Alphabet(std::move(names));
}

std::string series_to_string(const TruncatedSeries& s, const Alphabet& alphabet) {
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : s.terms()) {
    if (!first) out << (c < 0 ? " - " : " + ");
    if (first && c < 0) out << "-";
    first = false;
    Coeff ac = abs(c);
    std::string mono;
    for (std::uint8_t v : m) {
      if (!mono.empty()) mono += ".";
      mono += "X" + std::to_string(v + 1);
    }
    if (mono.empty()) {
      out << ac.str();
    } else {
      if (ac != 1) out << ac.str() << " ";
      out << mono;
    }
  }
  if (first) out << "0";
  return out.str();
}

json shadow_report_json(const ShadowReport& r) {
  json j = json_header();
  j["p"] = r.p;
  j["d"] = r.d;
  j["image_order"] = r.image_order;
  j["class_orders"] = r.class_orders;
  j["intersection_order"] = r.intersection_order;
  json factors = json::array();
  for (std::size_t i = 0; i < r.factor_names.size(); ++i)
    factors.push_back({{"name", r.factor_names[i]}, {"order", r.factor_orders[i]}});
  j["denominator_factors"] = factors;
  j["denominator_order"] = r.denominator_order;
  j["denominator_normal"] = r.denominator_normal;
  j["quotient_order"] = r.quotient_order;
  return j;
}

std::string elem_key(const QElem& e) {
  std::string s;
  for (std::int32_t v : e) {
    if (!s.empty()) s += ",";
    s += std::to_string(v);
  }
  return s;
}

struct FuzzOptions {
  long long p = 2;
  int deg = 3;
  std::uint64_t seed = 0;
  int count = 100;
  int moves = 10;
  std::size_t budget = QuotientGroup::kDefaultBudget;
};

int run_fuzz_peiffer(const std::string& pres_path, const FuzzOptions& opt, bool json_out) {
  auto pres = load_pres(pres_path);
  const int n = pres->num_classes();
  if (n != 2 && n != 3)
    throw Error("fuzz-peiffer needs a 2- or 3-class presentation");
  Shadow shadow(*pres, opt.p, opt.deg, opt.budget);

  auto lambda_rep = [&](const IdentitySequence& s) {
    return n == 3 ? lambda3(s).representative : lambda2(s).representative;
  };

  int failures = 0;
  json cases = json::array();
  for (int i = 0; i < opt.count; ++i) {
    Rng rng(case_seed(opt.seed, static_cast<std::uint64_t>(i)));
    IdentitySequence seq =
        random_identity_sequence(rng, pres, rng.uniform(1, 3), rng.uniform(0, 4));
    IdentitySequence mutated = seq;
    int nmoves = rng.uniform(1, opt.moves);
    for (int m = 0; m < nmoves; ++m)
      mutated = peiffer_apply(mutated, random_move(rng, mutated));
    bool ok = shadow.congruent(lambda_rep(seq), lambda_rep(mutated));
    if (!ok) ++failures;
    if (json_out)
      cases.push_back({{"case", i}, {"moves", nmoves}, {"pass", ok}});
  }

  if (json_out) {
    json j = json_header();
    j["command"] = "fuzz-peiffer";
    j["p"] = opt.p;
    j["deg"] = opt.deg;
    j["seed"] = opt.seed;
    j["count"] = opt.count;
    j["failures"] = failures;
    j["cases"] = cases;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "fuzz-peiffer: " << opt.count - failures << "/" << opt.count
              << " cases passed\n";
  }
  return failures == 0 ? kExitOk : kExitPropertyFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"identity-sequence calculus for free-group presentations"};
  app.require_subcommand(1);
  app.fallthrough();

  bool json_out = false;
  app.add_flag("--json", json_out, "machine-readable JSON output");

  std::string pres_path, seq_path, seq_path_b, word_text, word_text_b;
  long long p = 2;
  long long magnus_p = 0;
  int deg = 3;
  std::uint64_t seed = 0;
  int count = 100, moves = 10, rank = 2, n = 2, max_len = 3, k = 3;
  std::size_t budget = QuotientGroup::kDefaultBudget;
  std::vector<std::string> label_words;

  auto* reduce = app.add_subcommand("reduce", "parse and freely reduce a word");
  reduce->add_option("word", word_text)->required();
  reduce->add_option("--pres", pres_path, "presentation file supplying the alphabet");

  auto* check = app.add_subcommand("check-seq", "validate an identity sequence");
  check->add_option("pres", pres_path)->required();
  check->add_option("seq", seq_path)->required();

  auto* blocks = app.add_subcommand("blocks", "block decomposition r_c, s_c, t_c");
  blocks->add_option("pres", pres_path)->required();
  blocks->add_option("seq", seq_path)->required();

  auto* l2 = app.add_subcommand("lambda2", "2-class lambda representative");
  l2->add_option("pres", pres_path)->required();
  l2->add_option("seq", seq_path)->required();

  auto* l3 = app.add_subcommand("lambda3", "3-class lambda representative");
  l3->add_option("pres", pres_path)->required();
  l3->add_option("seq", seq_path)->required();

  auto* ce = app.add_subcommand("cross-effect", "cross-effect representative");
  ce->add_option("pres", pres_path)->required();
  ce->add_option("seq_a", seq_path)->required();
  ce->add_option("seq_b", seq_path_b)->required();

  auto* fuzz = app.add_subcommand("fuzz-peiffer",
                                  "lambda invariance under random Peiffer moves");
  fuzz->add_option("pres", pres_path)->required();
  fuzz->add_option("--p", p);
  fuzz->add_option("--deg", deg);
  fuzz->add_option("--seed", seed);
  fuzz->add_option("--count", count);
  fuzz->add_option("--moves", moves);
  fuzz->add_option("--budget", budget);

  auto* magnus = app.add_subcommand("magnus", "truncated Magnus expansion");
  magnus->add_option("word", word_text)->required();
  magnus->add_option("--deg", deg);
  magnus->add_option("--p", magnus_p, "optional prime modulus, 0 for exact");
  magnus->add_option("--pres", pres_path);

  auto* gdeg = app.add_subcommand("gamma-degree", "lower-central-series degree");
  gdeg->add_option("word", word_text)->required();
  gdeg->add_option("--deg", deg);
  gdeg->add_option("--pres", pres_path);

  auto* shadow_cmd = app.add_subcommand("shadow", "finite shadow report");
  shadow_cmd->add_option("pres", pres_path)->required();
  shadow_cmd->add_option("--p", p);
  shadow_cmd->add_option("--deg", deg);
  shadow_cmd->add_option("--budget", budget);
  shadow_cmd->add_option("--label", label_words, "words to assign coset labels")
      ->allow_extra_args(false);

  auto* congruent_cmd =
      app.add_subcommand("congruent", "shadow congruence of two words");
  congruent_cmd->add_option("pres", pres_path)->required();
  congruent_cmd->add_option("u", word_text)->required();
  congruent_cmd->add_option("v", word_text_b)->required();
  congruent_cmd->add_option("--p", p);
  congruent_cmd->add_option("--deg", deg);
  congruent_cmd->add_option("--budget", budget);

  auto* wu_gens = app.add_subcommand("wu-gens", "bracket generating words");
  wu_gens->add_option("n", n)->required();
  wu_gens->add_option("max_len", max_len)->required();

  auto* wu_pres = app.add_subcommand("wu-presentation", "sphere presentation");
  wu_pres->add_option("n", n)->required();

  auto* sphere = app.add_subcommand("sphere-gen", "homotopy generator word");
  sphere->add_option("k", k)->required();

  auto* functors_cmd = app.add_subcommand("functors", "quadratic functor sequences");
  functors_cmd->add_option("--rank", rank)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (reduce->parsed()) {
      Alphabet alphabet = pres_path.empty() ? infer_alphabet(word_text)
                                            : load_pres(pres_path)->alphabet();
      Word w = parse_word(word_text, alphabet);
      if (json_out) {
        json j = json_header();
        j["word"] = to_string(w, alphabet);
        j["length"] = w.size();
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << to_string(w, alphabet) << "\n";
      }
      return kExitOk;
    }

    if (check->parsed()) {
      auto pres = load_pres(pres_path);
      IdentitySequence seq = parse_sequence_file(seq_path, pres);
      bool ok = validate(seq);
      if (json_out) {
        json j = json_header();
        j["valid"] = ok;
        j["product"] = to_string(realized_product(seq), pres->alphabet());
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << (ok ? "valid identity sequence" : "product is not trivial")
                  << "\n";
      }
      return ok ? kExitOk : kExitPropertyFail;
    }

    if (blocks->parsed()) {
      auto pres = load_pres(pres_path);
      IdentitySequence seq = parse_sequence_file(seq_path, pres);
      BlockDecomposition bd = block_decompose(seq);
      if (json_out) {
        json j = json_header();
        j["r"] = to_string(bd.r, pres->alphabet());
        j["s"] = to_string(bd.s, pres->alphabet());
        if (pres->num_classes() == 3) j["t"] = to_string(bd.t, pres->alphabet());
        j["reordered"] =
            format_sequence(IdentitySequence(pres, bd.reordered));
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << "r_c = " << to_string(bd.r, pres->alphabet()) << "\n"
                  << "s_c = " << to_string(bd.s, pres->alphabet()) << "\n";
        if (pres->num_classes() == 3)
          std::cout << "t_c = " << to_string(bd.t, pres->alphabet()) << "\n";
      }
      return kExitOk;
    }

    if (l2->parsed() || l3->parsed()) {
      auto pres = load_pres(pres_path);
      IdentitySequence seq = parse_sequence_file(seq_path, pres);
      LambdaValue lv = l3->parsed() ? lambda3(seq) : lambda2(seq);
      if (json_out) {
        json j = json_header();
        j["representative"] = to_string(lv.representative, pres->alphabet());
        json den = json::array();
        for (const DenominatorFactor& f : lv.denominator) {
          if (f.meet_b < 0)
            den.push_back("[R" + std::to_string(f.cls_a + 1) + ",R" +
                          std::to_string(f.meet_a + 1) + "]");
          else
            den.push_back("[R" + std::to_string(f.cls_a + 1) + ",R" +
                          std::to_string(f.meet_a + 1) + "&R" +
                          std::to_string(f.meet_b + 1) + "]");
        }
        j["denominator"] = den;
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << to_string(lv.representative, pres->alphabet()) << "\n";
      }
      return kExitOk;
    }

    if (ce->parsed()) {
      auto pres = load_pres(pres_path);
      IdentitySequence a = parse_sequence_file(seq_path, pres);
      IdentitySequence b = parse_sequence_file(seq_path_b, pres);
      Word w = cross_effect3(a, b);
      if (json_out) {
        json j = json_header();
        j["representative"] = to_string(w, pres->alphabet());
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << to_string(w, pres->alphabet()) << "\n";
      }
      return kExitOk;
    }

    if (fuzz->parsed()) {
      FuzzOptions opt{p, deg, seed, count, moves, budget};
      return run_fuzz_peiffer(pres_path, opt, json_out);
    }

    if (magnus->parsed()) {
      Alphabet alphabet = pres_path.empty() ? infer_alphabet(word_text)
                                            : load_pres(pres_path)->alphabet();
      Word w = parse_word(word_text, alphabet);
      TruncatedSeries s = magnus_expand(w, deg, magnus_p);
      if (json_out) {
        json j = json_header();
        j["deg"] = deg;
        j["p"] = magnus_p;
        j["series"] = series_to_string(s, alphabet);
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << series_to_string(s, alphabet) << "\n";
      }
      return kExitOk;
    }

    if (gdeg->parsed()) {
      Alphabet alphabet = pres_path.empty() ? infer_alphabet(word_text)
                                            : load_pres(pres_path)->alphabet();
      Word w = parse_word(word_text, alphabet);
      std::optional<int> d = lcs_degree(w, deg);
      if (json_out) {
        json j = json_header();
        j["deg_bound"] = deg;
        if (d)
          j["degree"] = *d;
        else
          j["degree"] = "exceeds " + std::to_string(deg);
        std::cout << j.dump(2) << "\n";
      } else {
        if (d)
          std::cout << *d << "\n";
        else
          std::cout << "exceeds " << deg << "\n";
      }
      return kExitOk;
    }

    if (shadow_cmd->parsed()) {
      auto pres = load_pres(pres_path);
      Shadow shadow(*pres, p, deg, budget);
      json j = shadow_report_json(shadow.report());
      json labels = json::object();
      for (const std::string& text : label_words) {
        Word w = parse_word(text, pres->alphabet());
        labels[text] = elem_key(shadow.coset_label(w));
      }
      if (!label_words.empty()) j["coset_labels"] = labels;
      if (json_out) {
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << "image order:        " << j["image_order"] << "\n";
        std::cout << "class orders:       " << j["class_orders"].dump() << "\n";
        std::cout << "intersection order: " << j["intersection_order"] << "\n";
        for (const auto& f : j["denominator_factors"])
          std::cout << "factor " << f["name"].get<std::string>() << ": order "
                    << f["order"] << "\n";
        std::cout << "denominator order:  " << j["denominator_order"] << "\n";
        std::cout << "quotient order:     " << j["quotient_order"] << "\n";
        for (auto& [k2, v] : labels.items())
          std::cout << "label(" << k2 << ") = " << v.get<std::string>() << "\n";
      }
      return kExitOk;
    }

    if (congruent_cmd->parsed()) {
      auto pres = load_pres(pres_path);
      Shadow shadow(*pres, p, deg, budget);
      Word u = parse_word(word_text, pres->alphabet());
      Word v = parse_word(word_text_b, pres->alphabet());
      bool ok = shadow.congruent(u, v);
      if (json_out) {
        json j = json_header();
        j["congruent"] = ok;
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << (ok ? "congruent in shadow" : "not congruent") << "\n";
      }
      return ok ? kExitOk : kExitPropertyFail;
    }

    if (wu_gens->parsed()) {
      WuInstance wu = wu_presentation(n);
      std::vector<Word> words = wu_bracket_generators(n, max_len);
      const Alphabet& alphabet = wu.presentation.alphabet();
      if (json_out) {
        json j = json_header();
        json arr = json::array();
        for (const Word& w : words) arr.push_back(to_string(w, alphabet));
        j["count"] = words.size();
        j["words"] = arr;
        std::cout << j.dump(2) << "\n";
      } else {
        for (const Word& w : words) std::cout << to_string(w, alphabet) << "\n";
      }
      return kExitOk;
    }

    if (wu_pres->parsed()) {
      WuInstance wu = wu_presentation(n);
      const Alphabet& alphabet = wu.presentation.alphabet();
      std::ostringstream out;
      out << "gens:";
      for (const Generator& g : alphabet.generators()) out << " " << g.name;
      out << "\n";
      for (const auto& cls : wu.presentation.classes()) {
        out << "class:";
        for (std::size_t i = 0; i < cls.size(); ++i)
          out << (i ? " ; " : " ") << to_string(cls[i], alphabet);
        out << "\n";
      }
      if (json_out) {
        json j = json_header();
        j["n"] = n;
        j["presentation"] = out.str();
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << out.str();
      }
      return kExitOk;
    }

    if (sphere->parsed()) {
      Word w = sphere_generator_word(k);
      int gens_needed = w.max_generator() + 1;
      std::vector<std::string> names;
      if (k == 3) {
        names = {"x1", "x2"};
      } else {
        for (int i = 0; i < gens_needed; ++i) names.push_back("y" + std::to_string(i));
      }
      Alphabet alphabet(std::move(names));
      if (json_out) {
        json j = json_header();
        j["k"] = k;
        j["word"] = to_string(w, alphabet);
        j["length"] = w.size();
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << to_string(w, alphabet) << "\n";
      }
      return kExitOk;
    }

    if (functors_cmd->parsed()) {
      FunctorSequenceReport r = verify_sequences(FreeAbelian::of_rank(rank));
      if (json_out) {
        json j = json_header();
        j["rank"] = r.rank;
        j["sp2_rank"] = r.sp2_rank;
        j["gamma_rank"] = r.gamma_rank;
        j["p2_rank"] = r.p2_rank;
        j["o1_exact"] =
            r.o1_left_injective && r.o1_middle_exact && r.o1_right_surjective;
        j["o2_exact"] =
            r.o2_left_injective && r.o2_middle_exact && r.o2_right_surjective;
        j["sp2_to_gamma_cokernel_order"] = r.sp2_to_gamma_cokernel_order.str();
        j["all_exact"] = r.all_exact;
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << "rank " << r.rank << ": SP2 rank " << r.sp2_rank
                  << ", Gamma rank " << r.gamma_rank << ", P2 rank " << r.p2_rank
                  << "\n"
                  << "0 -> SP2 -> P2 -> A -> 0: "
                  << (r.o1_left_injective && r.o1_middle_exact &&
                              r.o1_right_surjective
                          ? "exact"
                          : "NOT exact")
                  << "\n"
                  << "0 -> SP2 -> Gamma -> A(x)Z2 -> 0: "
                  << (r.o2_left_injective && r.o2_middle_exact &&
                              r.o2_right_surjective
                          ? "exact"
                          : "NOT exact")
                  << " (cokernel order " << r.sp2_to_gamma_cokernel_order.str()
                  << ")\n";
      }
      return r.all_exact ? kExitOk : kExitPropertyFail;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  return kExitUsage;
}
