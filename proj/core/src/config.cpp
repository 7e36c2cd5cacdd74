#include "rankone/config.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace rankone {

ConfigError::ConfigError(int line, const std::string& msg)
    : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + msg : msg),
      line_(line) {}

namespace {

std::string trim(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(trim(cur));
  return out;
}

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

unsigned long parse_ulong(const std::string& s, int line, const char* what) {
  if (!all_digits(s)) throw ConfigError(line, std::string(what) + ": expected a number, got '" + s + "'");
  try {
    return std::stoul(s);
  } catch (const std::exception&) {
    throw ConfigError(line, std::string(what) + ": number out of range '" + s + "'");
  }
}

struct KeyVal {
  int line = 0;
  std::string value;
};

struct Document {
  std::map<std::string, std::map<std::string, KeyVal>> sections;
  std::map<std::string, int> section_lines;
};

Document parse_document(const std::string& text) {
  Document doc;
  std::istringstream in(text);
  std::string raw, section;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    const std::size_t hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    const std::string line = trim(raw);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') throw ConfigError(lineno, "unterminated section header");
      section = trim(line.substr(1, line.size() - 2));
      if (section != "group" && section != "characters" && section != "irreps" &&
          section != "datum")
        throw ConfigError(lineno, "unknown section [" + section + "]");
      if (!doc.section_lines.emplace(section, lineno).second)
        throw ConfigError(lineno, "duplicate section [" + section + "]");
      continue;
    }
    const std::size_t eq = line.find('=');
    if (eq == std::string::npos) throw ConfigError(lineno, "expected key = value");
    if (section.empty()) throw ConfigError(lineno, "key before any section header");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty()) throw ConfigError(lineno, "empty key");
    if (!doc.sections[section].emplace(key, KeyVal{lineno, value}).second)
      throw ConfigError(lineno, "duplicate key '" + key + "'");
  }
  return doc;
}

const KeyVal* find_key(const Document& doc, const std::string& section, const std::string& key) {
  auto s = doc.sections.find(section);
  if (s == doc.sections.end()) return nullptr;
  auto k = s->second.find(key);
  return k == s->second.end() ? nullptr : &k->second;
}

const KeyVal& need_key(const Document& doc, const std::string& section, const std::string& key) {
  const KeyVal* kv = find_key(doc, section, key);
  if (!kv) {
    auto sl = doc.section_lines.find(section);
    throw ConfigError(sl == doc.section_lines.end() ? 0 : sl->second,
                      "missing key '" + key + "' in section [" + section + "]");
  }
  return *kv;
}

FiniteGroup build_group(const Document& doc) {
  auto sec = doc.sections.find("group");
  if (sec == doc.sections.end()) throw ConfigError(0, "missing [group] section");
  const auto& keys = sec->second;

  for (const auto& [key, kv] : keys)
    if (key != "abelian" && key != "order" && key != "labels" && key.rfind("row", 0) != 0)
      throw ConfigError(kv.line, "unknown key '" + key + "' in [group]");

  FiniteGroup group = [&] {
    if (const KeyVal* ab = find_key(doc, "group", "abelian")) {
      if (find_key(doc, "group", "order"))
        throw ConfigError(ab->line, "give either 'abelian' or 'order', not both");
      std::vector<unsigned> factors;
      for (const std::string& f : split(ab->value, ','))
        factors.push_back(static_cast<unsigned>(parse_ulong(f, ab->line, "abelian factor")));
      try {
        return FiniteGroup::abelian(factors);
      } catch (const std::invalid_argument& e) {
        throw ConfigError(ab->line, e.what());
      }
    }
    const KeyVal& order = need_key(doc, "group", "order");
    const int n = static_cast<int>(parse_ulong(order.value, order.line, "order"));
    if (n <= 0) throw ConfigError(order.line, "order must be positive");
    std::vector<std::vector<int>> table(n);
    for (int r = 0; r < n; ++r) {
      const KeyVal& row = need_key(doc, "group", "row" + std::to_string(r));
      for (const std::string& cell : split(row.value, ','))
        table[r].push_back(static_cast<int>(parse_ulong(cell, row.line, "table entry")));
      if (static_cast<int>(table[r].size()) != n)
        throw ConfigError(row.line, "row must list " + std::to_string(n) + " entries");
    }
    try {
      return FiniteGroup::from_table(std::move(table));
    } catch (const std::invalid_argument& e) {
      throw ConfigError(order.line, e.what());
    }
  }();

  if (const KeyVal* lab = find_key(doc, "group", "labels")) {
    std::vector<std::string> labels = split(lab->value, ',');
    try {
      group = group.with_labels(std::move(labels));
    } catch (const std::invalid_argument& e) {
      throw ConfigError(lab->line, e.what());
    }
  }
  return group;
}

CharacterTable build_table(const Document& doc, const FiniteGroup& group) {
  auto sec = doc.sections.find("characters");
  const bool have_rows = sec != doc.sections.end() && !sec->second.empty();
  if (!have_rows) {
    if (group.abelian_factors().empty())
      throw ConfigError(0, "a [characters] section is required for table-defined groups");
    return CharacterTable::for_abelian(group);
  }
  const std::size_t count = sec->second.size();
  std::vector<std::vector<Cyclotomic>> rows(count);
  for (const auto& [key, kv] : sec->second) {
    if (key.rfind("char", 0) != 0)
      throw ConfigError(kv.line, "unknown key '" + key + "' in [characters]");
    const unsigned long idx = parse_ulong(key.substr(4), kv.line, "character index");
    if (idx >= count)
      throw ConfigError(kv.line, "character rows must be char0..char" + std::to_string(count - 1));
    for (const std::string& lit : split(kv.value, ',')) {
      try {
        rows[idx].push_back(parse_cyclotomic(lit));
      } catch (const std::invalid_argument& e) {
        throw ConfigError(kv.line, e.what());
      }
    }
    if (rows[idx].size() != static_cast<std::size_t>(group.size()))
      throw ConfigError(kv.line,
                        "character row must list " + std::to_string(group.size()) + " values");
  }
  try {
    return CharacterTable(group, std::move(rows));
  } catch (const std::invalid_argument& e) {
    throw ConfigError(doc.section_lines.at("characters"), e.what());
  }
}

std::map<std::size_t, std::vector<Matrix>> build_irreps(const Document& doc,
                                                        const FiniteGroup& group) {
  std::map<std::size_t, std::vector<Matrix>> out;
  auto sec = doc.sections.find("irreps");
  if (sec == doc.sections.end()) return out;

  std::map<std::size_t, std::map<int, std::pair<int, Matrix>>> parts;  // row -> element -> matrix
  for (const auto& [key, kv] : sec->second) {
    if (key.rfind("irrep", 0) != 0)
      throw ConfigError(kv.line, "unknown key '" + key + "' in [irreps]");
    const std::size_t us = key.find('_');
    if (us == std::string::npos || us == 5 || us + 1 == key.size())
      throw ConfigError(kv.line, "irrep keys look like irrep<row>_<element>");
    const unsigned long row = parse_ulong(key.substr(5, us - 5), kv.line, "irrep row");
    const unsigned long elt = parse_ulong(key.substr(us + 1), kv.line, "irrep element");
    if (elt >= static_cast<unsigned long>(group.size()))
      throw ConfigError(kv.line, "irrep element index out of range");

    std::vector<std::vector<Cyclotomic>> mrows;
    for (const std::string& rowtext : split(kv.value, ';')) {
      mrows.emplace_back();
      for (const std::string& lit : split(rowtext, ',')) {
        try {
          mrows.back().push_back(parse_cyclotomic(lit));
        } catch (const std::invalid_argument& e) {
          throw ConfigError(kv.line, e.what());
        }
      }
    }
    const std::size_t d = mrows.size();
    Matrix m(d, d);
    for (std::size_t r = 0; r < d; ++r) {
      if (mrows[r].size() != d) throw ConfigError(kv.line, "irrep matrix must be square");
      for (std::size_t c = 0; c < d; ++c) m.at(r, c) = std::move(mrows[r][c]);
    }
    parts[row][static_cast<int>(elt)] = {kv.line, std::move(m)};
  }

  for (auto& [row, byelt] : parts) {
    std::vector<Matrix> mats;
    for (int e = 0; e < group.size(); ++e) {
      auto it = byelt.find(e);
      if (it == byelt.end())
        throw ConfigError(byelt.begin()->second.first,
                          "irrep" + std::to_string(row) + " is missing element " +
                              std::to_string(e));
      mats.push_back(std::move(it->second.second));
    }
    out.emplace(row, std::move(mats));
  }
  return out;
}

}  // namespace

Cyclotomic parse_cyclotomic(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw std::invalid_argument("cyclotomic literal: empty");

  std::size_t pos = 0;
  auto fail = [&](const std::string& why) {
    throw std::invalid_argument("cyclotomic literal '" + text + "': " + why);
  };
  auto digits = [&]() -> std::string {
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) fail("expected digits at position " + std::to_string(start));
    return s.substr(start, pos - start);
  };
  auto parse_factor = [&]() -> Cyclotomic {
    if (s.compare(pos, 5, "zeta(") == 0) {
      pos += 5;
      const unsigned long n = std::stoul(digits());
      if (n == 0) fail("zeta(0) is undefined");
      if (pos >= s.size() || s[pos] != ')') fail("expected ')'");
      ++pos;
      long k = 1;
      if (pos < s.size() && s[pos] == '^') {
        ++pos;
        bool neg = false;
        if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) neg = s[pos++] == '-';
        k = std::stol(digits());
        if (neg) k = -k;
      }
      return Cyclotomic::root_of_unity(n, k);
    }
    Int num(digits());
    Int den(1);
    if (pos < s.size() && s[pos] == '/') {
      ++pos;
      den = Int(digits());
    }
    return Cyclotomic(make_rational(num, den));
  };

  Cyclotomic out = Cyclotomic::zero();
  bool neg = false;
  if (s[pos] == '+' || s[pos] == '-') neg = s[pos++] == '-';
  while (true) {
    Cyclotomic term = parse_factor();
    while (pos < s.size() && s[pos] == '*') {
      ++pos;
      term *= parse_factor();
    }
    out += neg ? -term : term;
    if (pos == s.size()) break;
    if (s[pos] == '+')
      neg = false;
    else if (s[pos] == '-')
      neg = true;
    else
      fail(std::string("unexpected character '") + s[pos] + "'");
    ++pos;
  }
  return out;
}

DatumPtr load_datum_text(const std::string& text) {
  const Document doc = parse_document(text);
  const FiniteGroup group = build_group(doc);
  const CharacterTable table = build_table(doc, group);
  std::map<std::size_t, std::vector<Matrix>> irreps = build_irreps(doc, group);

  if (doc.sections.find("datum") == doc.sections.end())
    throw ConfigError(0, "missing [datum] section");
  for (const auto& [key, kv] : doc.sections.at("datum"))
    if (key != "chi" && key != "g" && key != "alpha")
      throw ConfigError(kv.line, "unknown key '" + key + "' in [datum]");

  const KeyVal& chi = need_key(doc, "datum", "chi");
  const unsigned long chi_index = parse_ulong(chi.value, chi.line, "chi");
  if (chi_index >= table.count()) throw ConfigError(chi.line, "chi index out of range");

  const KeyVal& gkey = need_key(doc, "datum", "g");
  int g = -1;
  if (all_digits(gkey.value)) {
    const unsigned long idx = parse_ulong(gkey.value, gkey.line, "g");
    if (idx >= static_cast<unsigned long>(group.size()))
      throw ConfigError(gkey.line, "g index out of range");
    g = static_cast<int>(idx);
  } else {
    g = group.index_of_label(gkey.value);
    if (g < 0) throw ConfigError(gkey.line, "unknown element label '" + gkey.value + "'");
  }

  const KeyVal& alpha = need_key(doc, "datum", "alpha");
  if (alpha.value != "0" && alpha.value != "1")
    throw ConfigError(alpha.line, "alpha must be 0 or 1");

  return GroupDatum::validate(group, table, static_cast<int>(chi_index), g,
                              alpha.value == "1" ? 1 : 0, std::move(irreps));
}

DatumPtr load_datum_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open config file: " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return load_datum_text(os.str());
}

}  // namespace rankone
