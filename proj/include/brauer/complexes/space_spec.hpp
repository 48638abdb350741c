#pragma once

#include <charconv>
#include <cstddef>
#include <fstream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "brauer/complexes/generators.hpp"
#include "brauer/complexes/simplicial_set.hpp"
#include "brauer/complexes/sset_io.hpp"
#include "brauer/errors.hpp"

namespace brauer::complexes {

// Space expressions:
//   point | two-points | circle | triangle | torus | moore:N | em2:N:D | wbar:N:D
//   susp(X) | skel(X,D) | prod(X,Y) | prod(X,Y,D) | <path to an sset file>
class SpaceSpecParser {
 public:
  SpaceSpecParser(std::string_view text, std::size_t budget) : text_(text), budget_(budget) {}

  SpacePtr parse() {
    SpacePtr s = expression();
    if (pos_ != text_.size()) fail("trailing input");
    return s;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("space '" + std::string(text_) + "': " + what + " at offset " +
                     std::to_string(pos_));
  }

  std::string_view word() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && text_[pos_] != '(' && text_[pos_] != ')' &&
           text_[pos_] != ',') {
      ++pos_;
    }
    return text_.substr(start, pos_ - start);
  }

  void expect(char c) {
    if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  static std::optional<unsigned long> number(std::string_view s) {
    unsigned long v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) return std::nullopt;
    return v;
  }

  unsigned long number_arg() {
    const auto w = word();
    const auto v = number(w);
    if (!v) fail("expected a number, got '" + std::string(w) + "'");
    return *v;
  }

  std::vector<std::string_view> split_colon(std::string_view w) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= w.size(); ++i) {
      if (i == w.size() || w[i] == ':') {
        parts.push_back(w.substr(start, i - start));
        start = i + 1;
      }
    }
    return parts;
  }

  SpacePtr expression() {
    const std::size_t start = pos_;
    const std::string_view head = word();
    if (pos_ < text_.size() && text_[pos_] == '(') {
      ++pos_;
      if (head == "susp") {
        SpacePtr x = expression();
        expect(')');
        return suspension(x);
      }
      if (head == "skel") {
        SpacePtr x = expression();
        expect(',');
        const auto d = number_arg();
        expect(')');
        return skeleton(x, d);
      }
      if (head == "prod") {
        SpacePtr x = expression();
        expect(',');
        SpacePtr y = expression();
        std::optional<std::size_t> cut;
        if (pos_ < text_.size() && text_[pos_] == ',') {
          ++pos_;
          cut = number_arg();
        }
        expect(')');
        return product(x, y, cut, budget_);
      }
      pos_ = start;
      fail("unknown constructor '" + std::string(head) + "'");
    }
    if (head == "point") return point();
    if (head == "two-points") return two_points();
    if (head == "circle") return minimal_circle();
    if (head == "triangle") return triangle_circle();
    if (head == "torus") return torus();
    const auto parts = split_colon(head);
    auto arg = [&](std::size_t i) {
      const auto v = number(parts[i]);
      if (!v) fail("bad parameter '" + std::string(parts[i]) + "'");
      return *v;
    };
    if (parts[0] == "moore" && parts.size() == 2) {
      const auto n = arg(1);
      if (n < 2) fail("moore needs n >= 2");
      return moore_polygon(static_cast<unsigned>(n));
    }
    if ((parts[0] == "em2" || parts[0] == "wbar") && parts.size() == 3) {
      const auto n = arg(1), d = arg(2);
      if (n < 2) fail(std::string(parts[0]) + " needs n >= 2");
      return parts[0] == "em2" ? em_space_2(static_cast<unsigned>(n), d, budget_)
                               : wbar_cyclic(static_cast<unsigned>(n), d, budget_);
    }
    std::ifstream in{std::string(head)};
    if (!in) fail("unknown space or unreadable file '" + std::string(head) + "'");
    return read_sset(in, std::string(head));
  }

  std::string_view text_;
  std::size_t budget_;
  std::size_t pos_ = 0;
};

inline SpacePtr parse_space(std::string_view text, std::size_t budget = kDefaultSimplexBudget) {
  return SpaceSpecParser(text, budget).parse();
}

}  // namespace brauer::complexes
