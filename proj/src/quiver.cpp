#include "fp/quiver.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace fp::quiv {

namespace {

bool valid_name(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

struct Token {
  std::string text;
  int col;  // 1-based
};

std::vector<Token> tokenize(const std::string& line) {
  std::vector<Token> out;
  size_t pos = 0;
  while (pos < line.size()) {
    size_t start = line.find_first_not_of(" \t\r", pos);
    if (start == std::string::npos) break;
    size_t end = line.find_first_of(" \t\r", start);
    if (end == std::string::npos) end = line.size();
    out.push_back({line.substr(start, end - start), int(start) + 1});
    pos = end;
  }
  return out;
}

}  // namespace

Quiver parse_quiver(std::string_view text) {
  Quiver q;
  std::map<std::string, int> index;
  bool seen_vertices = false;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;

  while (std::getline(in, line)) {
    lineno++;
    auto toks = tokenize(line);
    if (toks.empty() || toks[0].text[0] == '#') continue;

    if (toks[0].text == "vertices:") {
      if (seen_vertices)
        throw ParseError("duplicate vertices line", lineno, toks[0].col);
      seen_vertices = true;
      for (size_t k = 1; k < toks.size(); k++) {
        const auto& t = toks[k];
        if (!valid_name(t.text))
          throw ParseError("bad vertex name '" + t.text + "'", lineno, t.col);
        if (index.count(t.text))
          throw ParseError("duplicate vertex '" + t.text + "'", lineno, t.col);
        index[t.text] = int(q.vertices.size());
        q.vertices.push_back(t.text);
      }
      if (q.vertices.empty())
        throw ParseError("empty vertex list", lineno, toks[0].col);
    } else if (toks[0].text == "arrows:") {
      if (!seen_vertices)
        throw ParseError("arrows before vertices", lineno, toks[0].col);
      for (size_t k = 1; k < toks.size(); k++) {
        const auto& t = toks[k];
        auto sep = t.text.find("->");
        if (sep == std::string::npos)
          throw ParseError("arrow must look like a->b", lineno, t.col);
        std::string from = t.text.substr(0, sep), to = t.text.substr(sep + 2);
        auto fi = index.find(from);
        if (fi == index.end())
          throw ParseError("unknown vertex '" + from + "'", lineno, t.col);
        auto ti = index.find(to);
        if (ti == index.end())
          throw ParseError("unknown vertex '" + to + "'", lineno,
                           int(t.col + sep + 2));
        q.arrows.push_back({fi->second, ti->second});
      }
    } else {
      throw ParseError("expected 'vertices:' or 'arrows:'", lineno, toks[0].col);
    }
  }
  if (!seen_vertices) throw ParseError("missing vertices line", lineno ? lineno : 1, 1);
  return q;
}

Mat adjacency(const Quiver& q) {
  int n = int(q.vertices.size());
  std::vector<std::vector<long>> counts(n, std::vector<long>(n, 0));
  for (auto [a, b] : q.arrows) counts[a][b]++;
  return from_ints(counts);
}

Bounds fpdim_quiver(const Quiver& q, const Rat& tol) {
  return spectral_radius(adjacency(q), tol);
}

DynkinType dynkin(char family, int rank) {
  bool ok = (family == 'A' && rank >= 1) || (family == 'D' && rank >= 4) ||
            (family == 'E' && rank >= 6 && rank <= 8);
  if (!ok)
    throw DomainError(std::string("not a Dynkin type: ") + family +
                      std::to_string(rank));
  return {family, rank};
}

int coxeter_number(const DynkinType& t) {
  switch (t.family) {
    case 'A':
      return t.rank + 1;
    case 'D':
      return 2 * t.rank - 2;
    default:
      return t.rank == 6 ? 12 : t.rank == 7 ? 18 : 30;
  }
}

std::vector<long> normalize_weights(std::vector<long> weights) {
  if (weights.empty()) throw DomainError("empty weight sequence");
  for (long w : weights)
    if (w < 1) throw DomainError("weights must be >= 1");
  std::erase(weights, 1L);
  std::sort(weights.begin(), weights.end());
  return weights;
}

WeightClass classify_weights(const std::vector<long>& weights) {
  auto w = normalize_weights(weights);
  if (w.size() <= 2) return WeightClass::domestic;
  if (w.size() == 3) {
    if (w[0] == 2 && w[1] == 2) return WeightClass::domestic;
    if (w[0] == 2 && w[1] == 3 && w[2] >= 3 && w[2] <= 5) return WeightClass::domestic;
    if ((w[0] == 2 && w[1] == 3 && w[2] == 6) ||
        (w[0] == 2 && w[1] == 4 && w[2] == 4) ||
        (w[0] == 3 && w[1] == 3 && w[2] == 3))
      return WeightClass::tubular;
    return WeightClass::wild;
  }
  if (w == std::vector<long>{2, 2, 2, 2}) return WeightClass::tubular;
  return WeightClass::wild;
}

const char* to_string(WeightClass c) {
  switch (c) {
    case WeightClass::domestic:
      return "domestic";
    case WeightClass::tubular:
      return "tubular";
    default:
      return "wild";
  }
}

}  // namespace fp::quiv
