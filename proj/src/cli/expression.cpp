#include "typeec/cli/expression.hpp"

#include <cctype>
#include <vector>

#include "typeec/errors.hpp"
#include "typeec/exactfield/default_tower.hpp"

namespace typeec::cli {

namespace {

// Noncommutative polynomial: word over {0,1,2} -> coefficient.
using Word = std::vector<int>;
using NcPoly = std::map<Word, FieldElement>;

NcPoly constant(const FieldElement& c) {
  NcPoly p;
  if (!c.is_zero()) p[{}] = c;
  return p;
}

NcPoly add(NcPoly a, const NcPoly& b, int sign) {
  for (const auto& [w, c] : b) {
    FieldElement sum = a[w] + (sign > 0 ? c : -c);
    if (sum.is_zero())
      a.erase(w);
    else
      a[w] = sum;
  }
  return a;
}

NcPoly mul(const NcPoly& a, const NcPoly& b) {
  NcPoly out;
  for (const auto& [u, c] : a)
    for (const auto& [v, d] : b) {
      Word w = u;
      w.insert(w.end(), v.begin(), v.end());
      out = add(std::move(out), NcPoly{{w, c * d}}, 1);
    }
  return out;
}

class Parser {
 public:
  Parser(std::string_view text, const Tower& tower, const Bindings& bindings, bool variables)
      : text_(text), variables_(variables) {
    const auto& dt = exactfield::default_tower();
    symbols_ = {{"eps", dt.eps}, {"eta", dt.eta}, {"sqrt3", dt.sqrt3}, {"qrt3", dt.qrt3}, {"cbrt2", dt.cbrt2}};
    for (const exactfield::TowerLevel* l = tower.get(); l; l = l->base().get()) {
      Tower handle = tower;
      while (handle.get() != l) handle = handle->base();
      symbols_.emplace(l->name(), FieldElement::generator(handle));
    }
    for (const auto& [name, value] : bindings) symbols_.insert_or_assign(name, value);
  }

  NcPoly parse() {
    NcPoly p = sum();
    skip_space();
    if (pos_ != text_.size()) throw ParseError(std::string("unexpected '") + text_[pos_] + "'", pos_);
    return p;
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_space();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  bool starts_factor() {
    skip_space();
    if (pos_ >= text_.size()) return false;
    const char c = text_[pos_];
    return std::isalnum(static_cast<unsigned char>(c)) || c == '(';
  }

  NcPoly sum() {
    NcPoly acc;
    int sign = 1;
    if (peek('+') || peek('-')) sign = text_[pos_++] == '-' ? -1 : 1;
    acc = add(std::move(acc), product(), sign);
    while (peek('+') || peek('-')) {
      sign = text_[pos_++] == '-' ? -1 : 1;
      acc = add(std::move(acc), product(), sign);
    }
    return acc;
  }

  NcPoly product() {
    NcPoly acc = power();
    for (;;) {
      if (peek('*')) {
        ++pos_;
        acc = mul(acc, power());
      } else if (peek('/')) {
        const std::size_t at = pos_++;
        const NcPoly d = power();
        if (d.empty()) throw ParseError("division by zero", at);
        if (d.size() != 1 || !d.begin()->first.empty()) throw ParseError("division by a non-constant", at);
        acc = mul(acc, constant(d.begin()->second.inverse()));
      } else if (starts_factor()) {
        acc = mul(acc, power());
      } else {
        return acc;
      }
    }
  }

  NcPoly power() {
    const NcPoly base = atom();
    if (!peek('^')) return base;
    ++pos_;
    skip_space();
    const std::size_t at = pos_;
    bool negative = false;
    if (pos_ < text_.size() && text_[pos_] == '-') {
      negative = true;
      ++pos_;
    }
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      throw ParseError("expected an integer exponent", at);
    long e = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      e = 10 * e + (text_[pos_++] - '0');
      if (e > 1000) throw ParseError("exponent too large", at);
    }
    if (negative) {
      if (base.empty()) throw ParseError("negative power of zero", at);
      if (base.size() != 1 || !base.begin()->first.empty()) throw ParseError("negative power of a non-constant", at);
      return constant(base.begin()->second.pow(-e));
    }
    NcPoly out = constant(FieldElement(1));
    for (long k = 0; k < e; ++k) out = mul(out, base);
    return out;
  }

  NcPoly atom() {
    skip_space();
    if (pos_ >= text_.size()) throw ParseError("unexpected end of input", pos_);
    const char c = text_[pos_];
    if (c == '(') {
      const std::size_t open = pos_++;
      NcPoly inner = sum();
      if (!peek(')')) throw ParseError("unbalanced parenthesis", open);
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return constant(FieldElement(exactfield::Rational::parse(std::string(text_.substr(start, pos_ - start)))));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) return symbol();
    throw ParseError(std::string("unexpected '") + c + "'", pos_);
  }

  // Longest known name first, then a single variable letter.
  NcPoly symbol() {
    const std::size_t start = pos_;
    std::size_t end = start;
    while (end < text_.size() && std::isalnum(static_cast<unsigned char>(text_[end]))) ++end;
    for (std::size_t len = end - start; len > 0; --len) {
      auto it = symbols_.find(text_.substr(start, len));
      if (it != symbols_.end()) {
        pos_ += len;
        return constant(it->second);
      }
    }
    if (variables_ && (text_[start] == 'x' || text_[start] == 'y' || text_[start] == 'z')) {
      ++pos_;
      return NcPoly{{Word{text_[start] - 'x'}, FieldElement(1)}};
    }
    throw UnknownSymbol(std::string(text_.substr(start, end - start)), start);
  }

  std::string_view text_;
  bool variables_;
  std::size_t pos_ = 0;
  std::map<std::string, FieldElement, std::less<>> symbols_;
};

}  // namespace

FieldElement parse_scalar(std::string_view expr, const Tower& tower, const Bindings& bindings) {
  const NcPoly p = Parser(expr, tower, bindings, false).parse();
  if (p.empty()) return FieldElement(0);
  return p.begin()->second;
}

tensor::Tensor3 parse_potential(std::string_view expr, const Tower& tower, const Bindings& bindings) {
  const NcPoly p = Parser(expr, tower, bindings, true).parse();
  tensor::Tensor3 w;
  for (const auto& [word, c] : p) {
    if (word.size() != 3) throw ParseError("term of degree " + std::to_string(word.size()) + " in a cubic potential", 0);
    w(word[0], word[1], word[2]) = c;
  }
  return w;
}

hesse::ProjPoint parse_point(std::string_view expr, const Tower& tower) {
  std::vector<FieldElement> coords;
  std::size_t start = 0;
  for (;;) {
    const std::size_t colon = expr.find(':', start);
    const auto part = expr.substr(start, colon == std::string_view::npos ? std::string_view::npos : colon - start);
    try {
      coords.push_back(parse_scalar(part, tower));
    } catch (const UnknownSymbol& e) {
      throw UnknownSymbol(e.name(), start + e.position());
    } catch (const ParseError& e) {
      throw ParseError("invalid coordinate", start + e.position());
    }
    if (colon == std::string_view::npos) break;
    start = colon + 1;
  }
  if (coords.size() != 3) throw ParseError("a point needs three coordinates A:B:C", 0);
  return hesse::ProjPoint(coords[0], coords[1], coords[2]);
}

}  // namespace typeec::cli
