#include "tmsv/catalog.hpp"

#include <regex>

#include "tmsv/errors.hpp"
#include "tmsv/wedge.hpp"

namespace tmsv {

namespace {

std::vector<std::string> numbered_labels(int n) {
  std::vector<std::string> labels;
  for (int i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
  return labels;
}

}  // namespace

Matroid uniform(int r, int n) {
  if (r < 0 || n < 0 || r > n || n > 31)
    throw ParseError("uniform matroid needs 0 <= r <= n <= 31");
  std::vector<Mask> bases;
  for (const auto& s : increasing_subsets(n, r))
    bases.push_back(mask_from_elements(s));
  return from_bases(numbered_labels(n), std::move(bases));
}

Matroid boolean_matroid(int n) { return uniform(n, n); }

Matroid vamos() {
  const Mask ab = 0b00001111, ac = 0b00110011, bc = 0b00111100,
             ad = 0b11000011, bd = 0b11001100;
  std::vector<Mask> bases;
  for (const auto& s : increasing_subsets(8, 4)) {
    Mask m = mask_from_elements(s);
    if (m == ab || m == ac || m == bc || m == ad || m == bd) continue;
    bases.push_back(m);
  }
  return from_bases(numbered_labels(8), std::move(bases));
}

Matroid catalog_matroid(const std::string& name) {
  static const std::regex uniform_re(R"(^U\((\d{1,2}),(\d{1,2})\)$)");
  static const std::regex boolean_re(R"(^boolean\((\d{1,2})\)$)");
  static const std::regex parallel_re(R"(^parallel\((\d{1,2})\)$)");
  std::smatch m;
  if (std::regex_match(name, m, uniform_re))
    return uniform(std::stoi(m[1]), std::stoi(m[2]));
  if (std::regex_match(name, m, boolean_re))
    return boolean_matroid(std::stoi(m[1]));
  if (std::regex_match(name, m, parallel_re)) {
    int k = std::stoi(m[1]);
    if (k < 1) throw ParseError("parallel(k) needs k >= 1");
    return uniform(1, k);
  }
  if (name == "ex81") return boolean_matroid(2);
  if (name == "ex82")
    return from_bases(numbered_labels(3), {{"1", "3"}, {"2", "3"}});
  if (name == "parallel2_coloop")
    return from_bases(numbered_labels(3), {{"1", "3"}, {"2", "3"}});
  if (name == "coloop_parallel2")
    return from_bases(numbered_labels(3), {{"1", "2"}, {"1", "3"}});
  if (name == "triangle")
    return from_bases({"12", "13", "23"},
                      {{"12", "13"}, {"12", "23"}, {"13", "23"}});
  if (name == "vamos") return vamos();
  throw ParseError("unknown catalog entry: " + name);
}

std::vector<std::string> catalog_names() {
  return {"U(r,n)",
          "boolean(n)",
          "parallel(k)",
          "ex81",
          "ex82",
          "parallel2_coloop",
          "coloop_parallel2",
          "triangle",
          "vamos"};
}

std::vector<std::string> verification_names() {
  return {"U(1,1)", "U(1,2)", "U(2,2)", "U(2,3)",
          "U(3,3)", "U(2,4)", "U(3,4)", "ex82",
          "parallel2_coloop", "coloop_parallel2", "triangle"};
}

}  // namespace tmsv
