#include <algorithm>

#include "hopf/enumeration.hpp"
#include "hopf/word.hpp"

#include "algebra_impl.hpp"

namespace hopf {

namespace {

void shuffle_rec(const std::vector<std::string>& u, std::size_t iu,
                 const std::vector<std::string>& v, std::size_t iv,
                 std::vector<std::string>& acc, Lin& out) {
  if (iu == u.size() && iv == v.size()) {
    out.add(word_key(acc), Rational(1));
    return;
  }
  if (iu < u.size()) {
    acc.push_back(u[iu]);
    shuffle_rec(u, iu + 1, v, iv, acc, out);
    acc.pop_back();
  }
  if (iv < v.size()) {
    acc.push_back(v[iv]);
    shuffle_rec(u, iu, v, iv + 1, acc, out);
    acc.pop_back();
  }
}

}  // namespace

Lin shuffle_words(const BasisKey& u, const BasisKey& v) {
  auto lu = word_letters(u);
  auto lv = word_letters(v);
  std::vector<std::string> acc;
  acc.reserve(lu.size() + lv.size());
  Lin out;
  shuffle_rec(lu, 0, lv, 0, acc, out);
  return out;
}

Pair2 deshuffle_word(const BasisKey& w) {
  auto letters = word_letters(w);
  int k = static_cast<int>(letters.size());
  Pair2 out;
  for (unsigned mask = 0; mask < (1u << k); ++mask) {
    std::vector<std::string> s, sc;
    for (int i = 0; i < k; ++i) {
      if (mask & (1u << i)) {
        s.push_back(letters[static_cast<std::size_t>(i)]);
      } else {
        sc.push_back(letters[static_cast<std::size_t>(i)]);
      }
    }
    out.add({word_key(s), word_key(sc)}, Rational(1));
  }
  return out;
}

Pair2 deconcat_word(const BasisKey& w) {
  auto letters = word_letters(w);
  Pair2 out;
  for (std::size_t cut = 0; cut <= letters.size(); ++cut) {
    std::vector<std::string> left(letters.begin(), letters.begin() + static_cast<std::ptrdiff_t>(cut));
    std::vector<std::string> right(letters.begin() + static_cast<std::ptrdiff_t>(cut), letters.end());
    out.add({word_key(left), word_key(right)}, Rational(1));
  }
  return out;
}

namespace detail {

namespace {

const Alphabet& alphabet_for(AlgebraId id) {
  switch (id) {
    case AlgebraId::GR_YSYM:
    case AlgebraId::GR_YSYM_DUAL:
      return irreducible_pbt_alphabet();
    case AlgebraId::GR_SSYM:
    case AlgebraId::GR_SSYM_DUAL:
      return irreducible_perm_alphabet();
    default:
      return abc_alphabet();
  }
}

class WordAlgebra : public HopfAlgebra {
 public:
  WordAlgebra(AlgebraId id, const Alphabet& alpha) : id_(id), alpha_(alpha) {}

  AlgebraId id() const override { return id_; }
  BasisKey unit() const override { return "e"; }

  BasisKey canonical(std::string_view raw) const override {
    auto letters = word_letters(raw);
    for (auto& l : letters) l = alpha_.canonical_letter(l);
    return word_key(letters);
  }

  int degree(const BasisKey& a) const override {
    int d = 0;
    for (const auto& l : word_letters(a)) d += alpha_.letter_weight(l);
    return d;
  }

  std::vector<BasisKey> basis(int degree) const override {
    if (degree < 0) throw std::invalid_argument("degree must be nonnegative");
    int cap = algebra_degree_cap(id_);
    if (degree > cap) {
      throw ResourceError("basis at degree " + std::to_string(degree) +
                          " exceeds the configured cap " + std::to_string(cap) + " for " +
                          algebra_name(id_));
    }
    std::vector<std::vector<std::string>> letters_by_weight(static_cast<std::size_t>(degree) + 1);
    for (int d = 1; d <= degree; ++d) {
      letters_by_weight[static_cast<std::size_t>(d)] = alpha_.letters_of_weight(d);
    }
    std::vector<BasisKey> out;
    std::vector<std::string> acc;
    build_words(degree, letters_by_weight, acc, out);
    std::sort(out.begin(), out.end());
    return out;
  }

 protected:
  AlgebraId id_;
  const Alphabet& alpha_;

 private:
  static void build_words(int remaining,
                          const std::vector<std::vector<std::string>>& letters_by_weight,
                          std::vector<std::string>& acc, std::vector<BasisKey>& out) {
    if (remaining == 0) {
      out.push_back(word_key(acc));
      return;
    }
    for (int d = 1; d <= remaining; ++d) {
      for (const auto& l : letters_by_weight[static_cast<std::size_t>(d)]) {
        acc.push_back(l);
        build_words(remaining - d, letters_by_weight, acc, out);
        acc.pop_back();
      }
    }
  }
};

class ShuffleWordAlgebra final : public WordAlgebra {
 public:
  using WordAlgebra::WordAlgebra;

  Lin product(const BasisKey& a, const BasisKey& b) const override {
    return shuffle_words(a, b);
  }

  Pair2 coproduct(const BasisKey& a) const override { return deconcat_word(a); }

  bool expected_commutative() const override { return true; }
  bool expected_cocommutative() const override { return false; }
};

class TensorWordAlgebra final : public WordAlgebra {
 public:
  using WordAlgebra::WordAlgebra;

  Lin product(const BasisKey& a, const BasisKey& b) const override {
    auto letters = word_letters(a);
    auto more = word_letters(b);
    letters.insert(letters.end(), more.begin(), more.end());
    return Lin::basis(word_key(letters));
  }

  Pair2 coproduct(const BasisKey& a) const override { return deshuffle_word(a); }

  bool expected_commutative() const override { return false; }
  bool expected_cocommutative() const override { return true; }
};

}  // namespace

const HopfAlgebra& shuffle_algebra(AlgebraId id) {
  static ShuffleWordAlgebra gr_ysym(AlgebraId::GR_YSYM, alphabet_for(AlgebraId::GR_YSYM));
  static ShuffleWordAlgebra gr_ssym(AlgebraId::GR_SSYM, alphabet_for(AlgebraId::GR_SSYM));
  static ShuffleWordAlgebra sh(AlgebraId::SH, alphabet_for(AlgebraId::SH));
  switch (id) {
    case AlgebraId::GR_YSYM: return gr_ysym;
    case AlgebraId::GR_SSYM: return gr_ssym;
    case AlgebraId::SH: return sh;
    default: throw std::logic_error("not a shuffle algebra id");
  }
}

const HopfAlgebra& tensor_algebra(AlgebraId id) {
  static TensorWordAlgebra ysym_dual(AlgebraId::GR_YSYM_DUAL, alphabet_for(AlgebraId::GR_YSYM_DUAL));
  static TensorWordAlgebra ssym_dual(AlgebraId::GR_SSYM_DUAL, alphabet_for(AlgebraId::GR_SSYM_DUAL));
  static TensorWordAlgebra tensor(AlgebraId::TENSOR, alphabet_for(AlgebraId::TENSOR));
  switch (id) {
    case AlgebraId::GR_YSYM_DUAL: return ysym_dual;
    case AlgebraId::GR_SSYM_DUAL: return ssym_dual;
    case AlgebraId::TENSOR: return tensor;
    default: throw std::logic_error("not a tensor algebra id");
  }
}

}  // namespace detail

}  // namespace hopf
