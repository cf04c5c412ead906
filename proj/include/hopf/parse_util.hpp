#pragma once

#include <cstddef>
#include <string>
#include <string_view>

namespace hopf::detail {

/// Minimal recursive-descent cursor. All errors are std::invalid_argument with
/// the offending 0-based position in the message.
class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  bool eof() const { return pos_ >= text_.size(); }
  std::size_t pos() const { return pos_; }

  char peek() const;
  char take();
  void expect(char c);
  bool try_take(char c);

  /// Consumes a nonempty run of decimal digits, returns its value.
  int take_int();

  /// Throws std::invalid_argument("<what> at position <pos>").
  [[noreturn]] void fail(const std::string& what) const;

  /// Call once the grammar is fully consumed; trailing input is an error.
  void expect_eof();

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace hopf::detail
