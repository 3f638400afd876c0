#pragma once

#include <vector>

#include "peiffer/presentation.hpp"

namespace peiffer {

/// The (n+1)-class presentation of the trivial group whose classes are the
/// single generators plus the inverse of their ordered product:
/// <g_0,...,g_{n-1} | g_0; ...; g_{n-1}; (g_0...g_{n-1})^-1>.
struct WuInstance {
  int n = 0;
  ColoredPresentation presentation;
};

WuInstance wu_presentation(int n);

/// All left-normed commutators of length n+1..max_len in the symbols
/// {y_-1, g_0, ..., g_{n-1}} with signs +-1 in which every symbol occurs at
/// least once; y_-1 expands to (g_0...g_{n-1})^-1 before reduction. Emitted
/// as reduced words, empty words dropped, duplicates dropped, in the order:
/// by length, then lexicographic on (symbol index, sign) tuples with +1
/// ordered before -1.
std::vector<Word> wu_bracket_generators(int n, int max_len);

/// The explicit low-degree homotopy generator words:
/// k=3: [x1,x2];  k=4: [[y0,y1],[y0,y1 y2]];
/// k=5: [[[y0,y1],[y0,y1 y2]],[[y0,y1],[y0,y1 y2 y3]]].
Word sphere_generator_word(int k);

}  // namespace peiffer
