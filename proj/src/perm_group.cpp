#include "hocfg/perm_group.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>
#include <sstream>

#include "hocfg/error.hpp"

namespace hocfg {

Permutation::Permutation(int degree) : images_(degree) {
  std::iota(images_.begin(), images_.end(), 1);
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<char> seen(images_.size() + 1, 0);
  for (int x : images_) {
    if (x < 1 || x > degree() || seen[x]) throw Error(ErrorCode::invalid_argument, "not a permutation");
    seen[x] = 1;
  }
}

bool Permutation::is_identity() const {
  for (int i = 0; i < degree(); ++i) {
    if (images_[i] != i + 1) return false;
  }
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (int i = 0; i < degree(); ++i) inv[images_[i] - 1] = i + 1;
  return Permutation(std::move(inv));
}

std::uint64_t Permutation::order() const {
  std::uint64_t result = 1;
  std::vector<char> seen(images_.size(), 0);
  for (int i = 0; i < degree(); ++i) {
    if (seen[i]) continue;
    std::uint64_t length = 0;
    for (int j = i; !seen[j]; j = images_[j] - 1) {
      seen[j] = 1;
      ++length;
    }
    result = std::lcm(result, length);
  }
  return result;
}

std::string Permutation::cycles() const {
  std::string out;
  std::vector<char> seen(images_.size(), 0);
  for (int i = 0; i < degree(); ++i) {
    if (seen[i] || images_[i] == i + 1) continue;
    out += '(';
    for (int j = i; !seen[j]; j = images_[j] - 1) {
      seen[j] = 1;
      if (j != i) out += ' ';
      out += std::to_string(j + 1);
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

Permutation compose(const Permutation& first, const Permutation& second) {
  if (first.degree() != second.degree()) throw Error(ErrorCode::invalid_argument, "degree mismatch");
  std::vector<int> images(first.degree());
  for (int p = 1; p <= first.degree(); ++p) images[p - 1] = second(first(p));
  return Permutation(std::move(images));
}

Permutation parse_cycles(std::string_view text, int degree) {
  std::vector<int> images(degree);
  std::iota(images.begin(), images.end(), 1);
  std::vector<char> used(degree + 1, 0);
  std::size_t i = 0;
  auto skip_space = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_space();
  while (i < text.size()) {
    if (text[i] != '(') throw Error(ErrorCode::parse, "expected '(' in cycle notation");
    ++i;
    std::vector<int> cycle;
    for (;;) {
      skip_space();
      if (i >= text.size()) throw Error(ErrorCode::parse, "unterminated cycle");
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (text[i] == ',') {
        ++i;
        continue;
      }
      int value = 0;
      std::size_t start = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) value = value * 10 + (text[i++] - '0');
      if (i == start) throw Error(ErrorCode::parse, "expected a point in cycle notation");
      if (value < 1 || value > degree || used[value]) {
        throw Error(ErrorCode::parse, "bad or repeated point " + std::to_string(value) + " in cycle notation");
      }
      used[value] = 1;
      cycle.push_back(value);
    }
    for (std::size_t c = 0; c < cycle.size(); ++c) images[cycle[c] - 1] = cycle[(c + 1) % cycle.size()];
    skip_space();
  }
  return Permutation(std::move(images));
}

bool PermGroup::is_abelian() const {
  for (std::size_t i = 0; i < generators.size(); ++i) {
    for (std::size_t j = i + 1; j < generators.size(); ++j) {
      if (compose(generators[i], generators[j]) != compose(generators[j], generators[i])) return false;
    }
  }
  return true;
}

std::string to_string(const GroupFingerprint& fp) {
  std::ostringstream out;
  out << "order " << fp.order << (fp.abelian ? ", abelian" : ", non-abelian") << ", element orders {";
  bool first = true;
  for (auto [order, count] : fp.element_orders) {
    out << (first ? "" : ", ") << order << "x" << count;
    first = false;
  }
  out << "}";
  return out.str();
}

GroupFingerprint group_fingerprint(const PermGroup& group, std::uint64_t max_elements) {
  const Permutation identity(group.degree);
  std::set<Permutation> elements{identity};
  std::vector<Permutation> frontier{identity};
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const auto& g : frontier) {
      for (const auto& gen : group.generators) {
        Permutation h = compose(g, gen);
        if (elements.insert(h).second) {
          if (elements.size() > max_elements) {
            throw Error(ErrorCode::budget_exceeded, "group has more than " + std::to_string(max_elements) + " elements");
          }
          next.push_back(std::move(h));
        }
      }
    }
    frontier = std::move(next);
  }
  GroupFingerprint fp;
  fp.order = elements.size();
  fp.abelian = group.is_abelian();
  for (const auto& g : elements) ++fp.element_orders[g.order()];
  return fp;
}

const std::vector<NamedGroup>& named_groups() {
  static const std::vector<NamedGroup> groups = {
      {"trivial", 1, {}},
      {"Z2", 2, {"(1 2)"}},
      {"Z3", 3, {"(1 2 3)"}},
      {"Z4", 4, {"(1 2 3 4)"}},
      {"Z2×Z2", 4, {"(1 2)", "(3 4)"}},
      {"Z2×Z2×Z2", 6, {"(1 2)", "(3 4)", "(5 6)"}},
      {"S3", 3, {"(1 2 3)", "(1 2)"}},
      {"S4", 4, {"(1 2 3 4)", "(1 2)"}},
      {"D4", 4, {"(1 2 3 4)", "(1 4)(2 3)"}},
      {"D5", 5, {"(1 2 3 4 5)", "(1 5)(2 4)"}},
      {"D6", 6, {"(1 2 3 4 5 6)", "(1 6)(2 5)(3 4)"}},
      {"D7", 7, {"(1 2 3 4 5 6 7)", "(1 7)(2 6)(3 5)"}},
      {"D8", 8, {"(1 2 3 4 5 6 7 8)", "(1 8)(2 7)(3 6)(4 5)"}},
      {"Z2×A4", 6, {"(1 2 3)", "(2 3 4)", "(5 6)"}},
      {"Z2×D4", 6, {"(1 2 3 4)", "(1 4)(2 3)", "(5 6)"}},
      {"D4×S3", 7, {"(1 2 3 4)", "(1 4)(2 3)", "(5 6 7)", "(5 6)"}},
      {"Z2×Z2×S3", 7, {"(1 2)", "(3 4)", "(5 6 7)", "(5 6)"}},
      // Z2 wreath Z4: four swappable pairs permuted cyclically.
      {"((Z2×Z2×Z2):Z4):Z2", 8, {"(1 2)", "(3 4)", "(5 6)", "(7 8)", "(1 7 3 5)(2 8 4 6)"}},
  };
  return groups;
}

const std::vector<std::pair<std::string, GroupFingerprint>>& named_group_fingerprints() {
  static const auto table = [] {
    std::vector<std::pair<std::string, GroupFingerprint>> out;
    for (const auto& named : named_groups()) {
      PermGroup g;
      g.degree = named.degree;
      for (const auto& cycles : named.generators) g.generators.push_back(parse_cycles(cycles, named.degree));
      out.emplace_back(named.name, group_fingerprint(g));
    }
    return out;
  }();
  return table;
}

std::optional<std::string> match_named_group(const GroupFingerprint& fp) {
  for (const auto& [name, named] : named_group_fingerprints()) {
    if (named == fp) return name;
  }
  return std::nullopt;
}

}  // namespace hocfg
