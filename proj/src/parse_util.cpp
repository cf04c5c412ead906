#include "hopf/parse_util.hpp"

#include <stdexcept>

namespace hopf::detail {

char Cursor::peek() const {
  if (eof()) fail("unexpected end of input");
  return text_[pos_];
}

char Cursor::take() {
  char c = peek();
  ++pos_;
  return c;
}

void Cursor::expect(char c) {
  if (eof() || text_[pos_] != c) {
    fail(std::string("expected '") + c + "'");
  }
  ++pos_;
}

bool Cursor::try_take(char c) {
  if (!eof() && text_[pos_] == c) {
    ++pos_;
    return true;
  }
  return false;
}

int Cursor::take_int() {
  if (eof() || text_[pos_] < '0' || text_[pos_] > '9') fail("expected digit");
  long v = 0;
  while (!eof() && text_[pos_] >= '0' && text_[pos_] <= '9') {
    v = v * 10 + (text_[pos_] - '0');
    if (v > 1'000'000) fail("number too large");
    ++pos_;
  }
  return static_cast<int>(v);
}

void Cursor::fail(const std::string& what) const {
  throw std::invalid_argument(what + " at position " + std::to_string(pos_) + " in \"" +
                              std::string(text_) + "\"");
}

void Cursor::expect_eof() {
  if (!eof()) fail("trailing input");
}

}  // namespace hopf::detail
