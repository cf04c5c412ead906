#include "hopf/word.hpp"

#include <stdexcept>

#include "hopf/enumeration.hpp"

namespace hopf {

std::string word_key(const std::vector<std::string>& letters) {
  if (letters.empty()) return "e";
  std::string out;
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (i > 0) out += "\\";
    out += letters[i];
  }
  return out;
}

std::vector<std::string> word_letters(std::string_view key) {
  if (key == "e") return {};
  if (key.empty()) throw std::invalid_argument("empty word must be written \"e\"");
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    std::size_t sep = key.find('\\', start);
    if (sep == std::string_view::npos) {
      out.emplace_back(key.substr(start));
      break;
    }
    out.emplace_back(key.substr(start, sep - start));
    start = sep + 1;
  }
  for (const auto& letter : out) {
    if (letter.empty()) throw std::invalid_argument("empty letter in word");
  }
  return out;
}

namespace {

class AbcAlphabet final : public Alphabet {
 public:
  std::string name() const override { return "letters a,b,c"; }

  std::string canonical_letter(std::string_view raw) const override {
    if (raw == "a" || raw == "b" || raw == "c") return std::string(raw);
    throw std::invalid_argument("letter must be one of a, b, c: \"" + std::string(raw) + "\"");
  }

  int letter_weight(const std::string&) const override { return 1; }

  std::vector<std::string> letters_of_weight(int weight) const override {
    if (weight == 1) return {"a", "b", "c"};
    return {};
  }
};

class IrreduciblePbtAlphabet final : public Alphabet {
 public:
  std::string name() const override { return "irreducible planar binary trees"; }

  std::string canonical_letter(std::string_view raw) const override {
    PlanarBinaryTree t = PlanarBinaryTree::parse(raw);
    if (!t.is_irreducible()) {
      throw std::invalid_argument("letter is not irreducible: \"" + std::string(raw) + "\"");
    }
    return t.str();
  }

  int letter_weight(const std::string& letter) const override {
    return PlanarBinaryTree::parse(letter).degree();
  }

  std::vector<std::string> letters_of_weight(int weight) const override {
    std::vector<std::string> out;
    for (const auto& t : enumerate_irreducible_pbt(weight)) out.push_back(t.str());
    return out;
  }
};

class IrreduciblePermAlphabet final : public Alphabet {
 public:
  std::string name() const override { return "irreducible permutations"; }

  std::string canonical_letter(std::string_view raw) const override {
    Permutation w = Permutation::parse(raw);
    if (!perm_is_irreducible(w)) {
      throw std::invalid_argument("letter is not irreducible: \"" + std::string(raw) + "\"");
    }
    return w.str();
  }

  int letter_weight(const std::string& letter) const override {
    return Permutation::parse(letter).degree();
  }

  std::vector<std::string> letters_of_weight(int weight) const override {
    std::vector<std::string> out;
    for (const auto& w : enumerate_irreducible_perm(weight)) out.push_back(w.str());
    return out;
  }
};

}  // namespace

const Alphabet& abc_alphabet() {
  static AbcAlphabet a;
  return a;
}

const Alphabet& irreducible_pbt_alphabet() {
  static IrreduciblePbtAlphabet a;
  return a;
}

const Alphabet& irreducible_perm_alphabet() {
  static IrreduciblePermAlphabet a;
  return a;
}

std::vector<std::string> pbt_to_word(const PlanarBinaryTree& t) {
  std::vector<std::string> out;
  for (const auto& f : t.irreducible_components()) out.push_back(f.str());
  return out;
}

PlanarBinaryTree word_to_pbt(const std::vector<std::string>& letters) {
  PlanarBinaryTree acc;
  for (const auto& s : letters) {
    PlanarBinaryTree t = PlanarBinaryTree::parse(s);
    if (!t.is_irreducible()) {
      throw std::invalid_argument("word letter is not irreducible: \"" + s + "\"");
    }
    acc = pbt_backslash(acc, t);
  }
  return acc;
}

std::vector<std::string> perm_to_word(const Permutation& w) {
  std::vector<std::string> out;
  for (const auto& f : perm_irreducible_components(w)) out.push_back(f.str());
  return out;
}

Permutation word_to_perm(const std::vector<std::string>& letters) {
  Permutation acc;
  for (const auto& s : letters) {
    Permutation w = Permutation::parse(s);
    if (!perm_is_irreducible(w)) {
      throw std::invalid_argument("word letter is not irreducible: \"" + s + "\"");
    }
    acc = perm_backslash(acc, w);
  }
  return acc;
}

}  // namespace hopf
