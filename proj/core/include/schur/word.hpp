#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace schur {

/// A word in the free group on generators x_1..x_n: letter j means x_j,
/// letter -j means x_j^{-1}.  Text format: whitespace-separated signed
/// nonzero integers, e.g. "1 2 -1 -2" = x1 x2 x1^-1 x2^-1; words are
/// separated by ';' where lists are expected.
struct FreeWord {
  std::vector<int> letters;

  /// Throws std::invalid_argument on malformed integers or a zero index.
  static FreeWord parse(std::string_view text);
  static std::vector<FreeWord> parse_list(std::string_view text);

  std::string str() const;
  FreeWord inverse() const;
  /// Image under sigma: every generator is odd, so each letter flips sign.
  FreeWord sigma_word() const;
  int max_index() const;
};

}  // namespace schur
