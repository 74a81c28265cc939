#include "ultrapar/word.hpp"

#include <algorithm>
#include <cctype>
#include <functional>

namespace ultrapar {

Orders orders_of(const TriangleConfig& c) {
  return {c.type.n1, c.type.n2, c.type.n3};
}

Word reduce_word(const Word& w, const Orders& orders) {
  Word out;
  for (const Syllable& s : w) {
    if (s.gen < 1 || s.gen > 3)
      throw Error(ErrorKind::Parse, "generator index must be 1, 2 or 3");
    const int n = orders[s.gen - 1];
    int e = ((s.exp % n) + n) % n;
    if (!out.empty() && out.back().gen == s.gen) {
      e = (out.back().exp + e) % n;
      out.pop_back();
    }
    if (e != 0) out.push_back({s.gen, e});
  }
  return out;
}

Word concat(const Word& a, const Word& b) {
  Word out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

Word power(const Word& w, int k) {
  Word base = w;
  if (k < 0) {
    base.assign(w.rbegin(), w.rend());
    for (auto& s : base) s.exp = -s.exp;
    k = -k;
  }
  Word out;
  for (int i = 0; i < k; ++i) out = concat(out, base);
  return out;
}

int word_length(const Word& w) { return static_cast<int>(w.size()); }

HMatrix<long double> eval_word_x(const Word& w, const TriangleConfig& c) {
  HMatrix<long double> m = HMatrix<long double>::Identity();
  for (const Syllable& s : w) {
    const int n = c.order(s.gen);
    m = m * proj_power(c.generator_x(s.gen), ((s.exp % n) + n) % n);
  }
  return m;
}

HMatrixd eval_word(const Word& w, const TriangleConfig& c) { return eval_word_x(w, c).cast<cd>(); }

std::vector<Word> enumerate_words(const std::vector<int>& gens, int max_len,
                                  const Orders& orders) {
  std::vector<int> sorted = gens;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<Word> out{Word{}};
  Word cur;
  // depth-first per length keeps the (generator, exponent) lexicographic order
  std::function<void(int)> extend = [&](int remaining) {
    if (remaining == 0) {
      out.push_back(cur);
      return;
    }
    for (int g : sorted) {
      if (!cur.empty() && cur.back().gen == g) continue;
      for (int e = 1; e < orders[g - 1]; ++e) {
        cur.push_back({g, e});
        extend(remaining - 1);
        cur.pop_back();
      }
    }
  };
  for (int len = 1; len <= max_len; ++len) {
    const std::size_t before = out.size();
    extend(len);
    if (out.size() == before) break;
  }
  return out;
}

Word parse_word(const std::string& text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch)) || ch == ' ') s += ch;
  if (s == "Id" || s == "id") return {};
  Word w;
  std::size_t i = 0;
  while (i < s.size()) {
    const char ch = s[i];
    if (ch == ' ') {
      ++i;
      continue;
    }
    if (ch < '1' || ch > '3')
      throw Error(ErrorKind::Parse, std::string("bad generator '") + ch + "' in word");
    int exp = 1;
    ++i;
    if (i < s.size() && s[i] == '^') {
      ++i;
      const std::size_t start = i;
      if (i < s.size() && s[i] == '-') ++i;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      const std::string num = s.substr(start, i - start);
      if (num.empty() || num == "-")
        throw Error(ErrorKind::Parse, "missing exponent after '^'");
      exp = std::stoi(num);
    }
    w.push_back({ch - '0', exp});
  }
  return w;
}

std::string format_word(const Word& w) {
  if (w.empty()) return "Id";
  std::string out;
  for (const Syllable& s : w) {
    if (s.exp > 0)
      out.append(static_cast<std::size_t>(s.exp), static_cast<char>('0' + s.gen));
    else
      out += (out.empty() || out.back() == ' ' ? "" : " ") + std::to_string(s.gen) +
             "^" + std::to_string(s.exp) + " ";
  }
  while (!out.empty() && out.back() == ' ') out.pop_back();
  return out;
}

}  // namespace ultrapar
