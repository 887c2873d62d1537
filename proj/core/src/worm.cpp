#include "glpwb/worm.hpp"

#include <algorithm>
#include <cctype>

namespace glpwb {

Worm diamond_concat(const Worm& v, const Worm& w) {
  Worm out = v;
  out.push_back(Ordinal());
  out.insert(out.end(), w.begin(), w.end());
  return out;
}

Worm uparrow(const Ordinal& alpha, const Worm& w) {
  Worm out;
  out.reserve(w.size());
  for (const Ordinal& x : w) out.push_back(add(alpha, x));
  return out;
}

Ordinal order_type(const Worm& w) {
  if (w.empty()) return Ordinal();
  const Ordinal m = *std::min_element(w.begin(), w.end());
  std::vector<Worm> blocks(1);
  for (const Ordinal& x : w) {
    Ordinal d = left_subtract(m, x);
    if (d.is_zero())
      blocks.emplace_back();
    else
      blocks.back().push_back(std::move(d));
  }
  // v = u_0 <> u_1 <> ... <> u_k has o(v) = o(u_k) + 1 + ... + 1 + o(u_0).
  Ordinal o = order_type(blocks.back());
  for (std::size_t i = blocks.size() - 1; i-- > 0;)
    o = add(add(o, Ordinal::nat(1)), order_type(blocks[i]));
  return hyper_exp(m, o);
}

OrdCompare worm_compare(const Worm& v, const Worm& w) {
  return compare(order_type(v), order_type(w));
}

Worm parse_worm(std::string_view text) {
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  Worm w;
  for (;;) {
    skip();
    if (pos >= text.size()) throw ParseError("worm must end with T", pos);
    if (text[pos] == 'T') {
      ++pos;
      break;
    }
    if (text[pos] != '<') throw ParseError("expected '<' or 'T'", pos);
    ++pos;
    w.push_back(OrdinalParser(text, pos).expression());
    skip();
    if (pos >= text.size() || text[pos] != '>') throw ParseError("expected '>'", pos);
    ++pos;
  }
  skip();
  if (pos != text.size()) throw ParseError("unexpected trailing input", pos);
  return w;
}

std::string render(const Worm& w) {
  std::string out;
  for (const Ordinal& x : w) out += "<" + render(x) + ">";
  return out + "T";
}

}  // namespace glpwb
