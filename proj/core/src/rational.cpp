#include "cubeslice/rational.hpp"

#include <cctype>

namespace cubeslice {

std::optional<Rational> parse_rational(std::string_view text) {
  if (text.empty()) return std::nullopt;
  auto valid_int = [](std::string_view s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
  };
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  if (!valid_int(num)) return std::nullopt;
  if (slash == std::string_view::npos) {
    BigInt n{std::string(num)};
    Rational q(n, 1);
    q.canonicalize();
    return q;
  }
  std::string_view den = text.substr(slash + 1);
  if (!valid_int(den) || den[0] == '-' || den[0] == '+') return std::nullopt;
  BigInt d{std::string(den)};
  if (d == 0) return std::nullopt;
  BigInt n{std::string(num)};
  Rational q(n, d);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace cubeslice
