#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "hopf/permutation.hpp"
#include "hopf/planar_binary_tree.hpp"

namespace hopf {

/// Words over a graded alphabet are written letter1\letter2\...\letterk; the
/// empty word is "e". '\' never occurs inside a letter of any alphabet here.
std::string word_key(const std::vector<std::string>& letters);
std::vector<std::string> word_letters(std::string_view key);

/// A graded set of letters. Weights are >= 1; letters are canonical strings.
class Alphabet {
 public:
  virtual ~Alphabet() = default;
  virtual std::string name() const = 0;
  /// Canonical form of one letter; throws std::invalid_argument otherwise.
  virtual std::string canonical_letter(std::string_view raw) const = 0;
  /// Weight of a canonical letter.
  virtual int letter_weight(const std::string& letter) const = 0;
  /// Sorted canonical letters of one weight. May throw ResourceError.
  virtual std::vector<std::string> letters_of_weight(int weight) const = 0;
};

/// Three abstract letters a, b, c, each of weight 1.
const Alphabet& abc_alphabet();
/// Planar binary trees whose right subtree is a leaf, weighted by degree.
const Alphabet& irreducible_pbt_alphabet();
/// Permutations without global descents, weighted by degree.
const Alphabet& irreducible_perm_alphabet();

/// Factorization transport between basis objects and words of irreducibles.
std::vector<std::string> pbt_to_word(const PlanarBinaryTree& t);
PlanarBinaryTree word_to_pbt(const std::vector<std::string>& letters);
std::vector<std::string> perm_to_word(const Permutation& w);
Permutation word_to_perm(const std::vector<std::string>& letters);

}  // namespace hopf
