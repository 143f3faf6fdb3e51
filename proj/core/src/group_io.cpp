#include "pclose/group_io.hpp"

#include <fstream>
#include <sstream>

#include "pclose/errors.hpp"

namespace cgt {

namespace {

std::string strip(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

std::string drop_comment(const std::string& s) {
  size_t h = s.find('#');
  return h == std::string::npos ? s : s.substr(0, h);
}

std::vector<int> parse_int_list(const std::string& s, const char* what) {
  std::vector<int> out;
  std::istringstream is(s);
  std::string tok;
  while (is >> tok) {
    try {
      out.push_back(std::stoi(tok));
    } catch (...) {
      throw ParseError(std::string(what) + ": bad integer '" + tok + "'");
    }
  }
  return out;
}

}  // namespace

Permutation parse_cycles(const std::string& text, int degree) {
  std::vector<Point> img(static_cast<size_t>(degree));
  for (Point i = 0; i < degree; ++i) img[size_t(i)] = i;
  size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && (isspace((unsigned char)text[i]) || text[i] == ',')) ++i;
  };
  skip_ws();
  bool any = false;
  while (i < text.size()) {
    if (text[i] != '(') throw ParseError("cycle notation: expected '(' in '" + text + "'");
    ++i;
    std::vector<Point> cycle;
    skip_ws();
    while (i < text.size() && text[i] != ')') {
      size_t j = i;
      while (j < text.size() && isdigit((unsigned char)text[j])) ++j;
      if (j == i) throw ParseError("cycle notation: expected point number in '" + text + "'");
      int val = std::stoi(text.substr(i, j - i));
      if (val < 1 || val > degree)
        throw ParseError("cycle notation: point " + std::to_string(val) + " out of range 1.." +
                         std::to_string(degree));
      cycle.push_back(val - 1);
      i = j;
      skip_ws();
    }
    if (i >= text.size()) throw ParseError("cycle notation: unterminated cycle in '" + text + "'");
    ++i;  // ')'
    skip_ws();
    any = true;
    for (size_t k = 0; k + 1 < cycle.size(); ++k) {
      if (img[size_t(cycle[k])] != cycle[k])
        throw ParseError("cycle notation: point repeated in '" + text + "'");
      img[size_t(cycle[k])] = cycle[k + 1];
    }
    if (cycle.size() >= 2) {
      if (img[size_t(cycle.back())] != cycle.back())
        throw ParseError("cycle notation: point repeated in '" + text + "'");
      img[size_t(cycle.back())] = cycle.front();
    }
  }
  if (!any && strip(text) != "()" && !strip(text).empty())
    throw ParseError("cycle notation: cannot parse '" + text + "'");
  return Permutation(std::move(img));
}

PermGroup parse_group_spec(std::istream& in) {
  std::string line;
  int degree = -1;
  std::vector<Permutation> gens;
  while (std::getline(in, line)) {
    line = strip(drop_comment(line));
    if (line.empty()) continue;
    if (degree < 0) {
      std::istringstream is(line);
      std::string kw;
      is >> kw;
      if (kw != "degree") throw ParseError("group spec: first line must be 'degree N'");
      if (!(is >> degree) || degree < 1) throw ParseError("group spec: bad degree");
      continue;
    }
    gens.push_back(parse_cycles(line, degree));
  }
  if (degree < 0) throw ParseError("group spec: missing 'degree N' line");
  return PermGroup(degree, std::move(gens));
}

PermGroup parse_group_spec_string(const std::string& text) {
  std::istringstream is(text);
  return parse_group_spec(is);
}

PermGroup load_group_spec(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ParseError("cannot open group spec file: " + path);
  return parse_group_spec(f);
}

std::string format_group_spec(const PermGroup& g) {
  std::string out = "degree " + std::to_string(g.degree()) + "\n";
  for (const auto& p : g.generators()) out += p.to_cycles() + "\n";
  return out;
}

ActionSpec parse_action_spec(std::istream& in) {
  ActionSpec spec;
  std::string line;
  bool saw_group = false, saw_actors = false, saw_prime = false;
  while (std::getline(in, line)) {
    line = strip(drop_comment(line));
    if (line.empty()) continue;
    if (spec.degree == 0) {
      std::istringstream is(line);
      std::string kw;
      is >> kw;
      if (kw != "degree") throw ParseError("action spec: first line must be 'degree N'");
      if (!(is >> spec.degree) || spec.degree < 1) throw ParseError("action spec: bad degree");
      continue;
    }
    if (line.rfind("group:", 0) == 0) {
      for (int v : parse_int_list(line.substr(6), "action spec group indices")) {
        if (v < 1 || size_t(v) > spec.wrapper_gens.size())
          throw ParseError("action spec: group generator index out of range");
        spec.group_idx.push_back(v - 1);
      }
      saw_group = true;
    } else if (line.rfind("actors:", 0) == 0) {
      for (int v : parse_int_list(line.substr(7), "action spec actor indices")) {
        if (v < 1 || size_t(v) > spec.wrapper_gens.size())
          throw ParseError("action spec: actor generator index out of range");
        spec.actors_idx.push_back(v - 1);
      }
      saw_actors = true;
    } else if (line.rfind("prime:", 0) == 0) {
      spec.prime = std::stol(strip(line.substr(6)));
      saw_prime = true;
    } else {
      if (saw_group || saw_actors || saw_prime)
        throw ParseError("action spec: generators must precede group:/actors:/prime: lines");
      spec.wrapper_gens.push_back(parse_cycles(line, spec.degree));
    }
  }
  if (spec.degree == 0) throw ParseError("action spec: missing 'degree N'");
  if (!saw_group || !saw_actors || !saw_prime)
    throw ParseError("action spec: need group:, actors: and prime: lines");
  std::vector<char> used(spec.wrapper_gens.size(), 0);
  for (int i : spec.group_idx) used[size_t(i)] ^= 1;
  for (int i : spec.actors_idx) used[size_t(i)] ^= 1;
  for (char u : used)
    if (!u) throw ParseError("action spec: group:/actors: must partition the generator list");
  return spec;
}

ActionSpec parse_action_spec_string(const std::string& text) {
  std::istringstream is(text);
  return parse_action_spec(is);
}

ActionSpec load_action_spec(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ParseError("cannot open action spec file: " + path);
  return parse_action_spec(f);
}

FunctorSpec parse_functor_spec(std::istream& in) {
  // Split off "theta" lines, feed the rest through the action-spec parser.
  std::string action_text;
  FunctorSpec spec;
  std::string line;
  while (std::getline(in, line)) {
    std::string s = strip(drop_comment(line));
    if (s.rfind("theta", 0) == 0) {
      size_t colon = s.find(':');
      if (colon == std::string::npos) throw ParseError("functor spec: theta line missing ':'");
      std::string word = strip(s.substr(5, colon - 5));
      std::string rest = strip(s.substr(colon + 1));
      std::vector<std::string> gens;
      if (rest != "-") {
        std::string cur;
        int depth = 0;
        for (char c : rest) {
          if (c == '(') ++depth;
          if (c == ')') --depth;
          if (c == ',' && depth == 0) {
            if (!strip(cur).empty()) gens.push_back(strip(cur));
            cur.clear();
          } else {
            cur.push_back(c);
          }
        }
        if (!strip(cur).empty()) gens.push_back(strip(cur));
      }
      spec.theta_lines.emplace_back(word, std::move(gens));
    } else {
      action_text += line + "\n";
    }
  }
  std::istringstream is(action_text);
  spec.action = parse_action_spec(is);
  return spec;
}

FunctorSpec parse_functor_spec_string(const std::string& text) {
  std::istringstream is(text);
  return parse_functor_spec(is);
}

FunctorSpec load_functor_spec(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ParseError("cannot open functor spec file: " + path);
  return parse_functor_spec(f);
}

Permutation eval_actor_word(const std::string& word, const std::vector<Permutation>& actor_gens) {
  if (actor_gens.empty()) throw ParseError("actor word: no actor generators");
  Permutation result(actor_gens[0].degree());
  std::istringstream is(word);
  std::string tok;
  bool any = false;
  while (is >> tok) {
    if (tok[0] != 'a') throw ParseError("actor word: token '" + tok + "' must look like aK or aK^E");
    size_t caret = tok.find('^');
    int idx = 0, exp = 1;
    try {
      idx = std::stoi(tok.substr(1, caret == std::string::npos ? std::string::npos : caret - 1));
      if (caret != std::string::npos) exp = std::stoi(tok.substr(caret + 1));
    } catch (...) {
      throw ParseError("actor word: bad token '" + tok + "'");
    }
    if (idx < 1 || size_t(idx) > actor_gens.size())
      throw ParseError("actor word: generator index out of range in '" + tok + "'");
    const Permutation& g = actor_gens[size_t(idx - 1)];
    Permutation pow = g;
    if (exp < 0) {
      pow = g.inverse();
      exp = -exp;
    }
    for (int i = 0; i < exp; ++i) result = result * pow;
    if (exp == 0) result = result * Permutation(g.degree());
    any = true;
  }
  if (!any) throw ParseError("actor word: empty word");
  return result;
}

}  // namespace cgt
