#include "depthlab/instance_file.hpp"

#include <cctype>
#include <cstdint>
#include <limits>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "depthlab/errors.hpp"
#include "depthlab/poly_text.hpp"

namespace depthlab {

namespace {

struct Piece {
  std::string text;
  int col = 1;  // 1-based column of the first character
};

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

std::vector<std::string> split_words(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  std::string w;
  while (in >> w) out.push_back(w);
  return out;
}

// Splits a comma-separated list, remembering where each piece starts so
// polynomial errors can point into the original line.
std::vector<Piece> split_commas(const std::string& line, int from_col) {
  std::vector<Piece> out;
  std::size_t start = static_cast<std::size_t>(from_col - 1);
  for (std::size_t i = start; i <= line.size(); ++i) {
    if (i == line.size() || line[i] == ',') {
      std::size_t a = start;
      while (a < i && std::isspace(static_cast<unsigned char>(line[a]))) ++a;
      std::size_t b = i;
      while (b > a && std::isspace(static_cast<unsigned char>(line[b - 1]))) --b;
      Piece p;
      p.text = line.substr(a, b - a);
      p.col = static_cast<int>(a) + 1;
      out.push_back(std::move(p));
      start = i + 1;
    }
  }
  return out;
}

int parse_int(const std::string& word, int line, int col) {
  std::size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(word, &used);
  } catch (const std::exception&) {
    throw ParseError("expected an integer, got '" + word + "'", line, col);
  }
  if (used != word.size())
    throw ParseError("expected an integer, got '" + word + "'", line, col);
  if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max())
    throw ParseError("integer out of range: '" + word + "'", line, col);
  return static_cast<int>(v);
}

std::uint64_t parse_u64(const std::string& word, int line, int col) {
  std::size_t used = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(word, &used);
  } catch (const std::exception&) {
    throw ParseError("expected a nonnegative integer, got '" + word + "'",
                     line, col);
  }
  if (used != word.size())
    throw ParseError("expected a nonnegative integer, got '" + word + "'",
                     line, col);
  return static_cast<std::uint64_t>(v);
}

bool parse_bool(const std::string& word, int line, int col) {
  if (word == "true") return true;
  if (word == "false") return false;
  throw ParseError("expected 'true' or 'false', got '" + word + "'", line, col);
}

bool valid_name(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return !std::isdigit(static_cast<unsigned char>(s[0]));
}

// Column (1-based) of the first character after the leading keyword.
int after_keyword_col(const std::string& line, const std::string& keyword) {
  std::size_t pos = line.find(keyword);
  std::size_t at = (pos == std::string::npos) ? 0 : pos + keyword.size();
  while (at < line.size() && std::isspace(static_cast<unsigned char>(line[at])))
    ++at;
  return static_cast<int>(at) + 1;
}

struct RawRing {
  int header_line = 0;
  std::optional<std::uint64_t> characteristic;
  std::vector<std::string> vars;
  std::vector<Piece> relations;
  int relations_line = 0;
};

struct RawModule {
  std::string name;
  int header_line = 0;
  std::optional<std::vector<int>> twists;
  std::vector<std::vector<Piece>> rows;
  std::vector<int> row_lines;
};

}  // namespace

const FPModule* InstanceFile::find_module(const std::string& name) const {
  for (const auto& [n, m] : modules)
    if (n == name) return &m;
  return nullptr;
}

InstanceFile parse_instance_file(const std::string& text) {
  InstanceFile out;
  enum class Section { Top, Ring, Module, Options, Family };
  Section section = Section::Top;

  bool ring_seen = false;
  RawRing raw_ring;
  RawModule raw_module;
  InstanceFamily raw_family;
  std::vector<int> pair_lines;

  const auto finish_ring = [&]() {
    if (!raw_ring.characteristic)
      throw ParseError("ring block needs a 'char' line", raw_ring.header_line, 1);
    if (raw_ring.vars.empty())
      throw ParseError("ring block needs a 'vars' line", raw_ring.header_line, 1);
    if (*raw_ring.characteristic > 0x7FFFFFFFULL)
      throw ParseError("char out of range", raw_ring.header_line, 1);
    const auto p = static_cast<std::uint32_t>(*raw_ring.characteristic);
    try {
      PrimeField field(p);
      std::vector<Poly> rels;
      rels.reserve(raw_ring.relations.size());
      for (const Piece& piece : raw_ring.relations)
        rels.push_back(parse_poly(field, piece.text, raw_ring.vars,
                                  raw_ring.relations_line, piece.col));
      out.ring = rels.empty()
                     ? Ring::polynomial_ring(p, raw_ring.vars)
                     : Ring::quotient_ring(p, raw_ring.vars, std::move(rels));
    } catch (const GradingError& e) {
      throw GradingError(std::string("ring block: ") + e.what());
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      throw ParseError(std::string("ring block: ") + e.what(),
                       raw_ring.header_line, 1);
    }
    ring_seen = true;
  };

  const auto finish_module = [&]() {
    if (!raw_module.twists)
      throw ParseError("module block needs a 'twists' line",
                       raw_module.header_line, 1);
    const int rank = static_cast<int>(raw_module.twists->size());
    std::vector<Vec> rows;
    rows.reserve(raw_module.rows.size());
    for (std::size_t r = 0; r < raw_module.rows.size(); ++r) {
      const auto& pieces = raw_module.rows[r];
      const int line = raw_module.row_lines[r];
      if (static_cast<int>(pieces.size()) != rank)
        throw ParseError("relation row has " + std::to_string(pieces.size()) +
                             " entries; the twists line fixes rank " +
                             std::to_string(rank),
                         line, pieces.empty() ? 1 : pieces[0].col);
      Vec row;
      row.reserve(pieces.size());
      for (const Piece& piece : pieces)
        row.push_back(out.ring->nf(parse_poly(out.ring->field(), piece.text,
                                              out.ring->var_names(), line,
                                              piece.col)));
      rows.push_back(std::move(row));
    }
    try {
      out.modules.emplace_back(
          raw_module.name,
          FPModule(out.ring, FreeModule(*raw_module.twists), std::move(rows)));
    } catch (const GradingError& e) {
      throw GradingError("module " + raw_module.name + ": " + e.what());
    }
  };

  const auto finish_family = [&]() {
    raw_family.ring = out.ring;
    out.families.push_back(raw_family);
  };

  std::istringstream in(text);
  std::string rawline;
  int lineno = 0;
  while (std::getline(in, rawline)) {
    ++lineno;
    std::string line = rawline;
    if (std::size_t hash = line.find('#'); hash != std::string::npos)
      line = line.substr(0, hash);
    const std::string body = trim(line);
    if (body.empty()) continue;
    const std::vector<std::string> words = split_words(body);
    const std::string& head = words[0];

    if (section == Section::Top) {
      if (head == "ring") {
        if (ring_seen) throw ParseError("duplicate ring block", lineno, 1);
        if (words.size() != 2 || words[1] != "{")
          throw ParseError("expected 'ring {'", lineno, 1);
        raw_ring = RawRing{};
        raw_ring.header_line = lineno;
        section = Section::Ring;
      } else if (head == "module") {
        if (!ring_seen)
          throw ParseError("module block before the ring block", lineno, 1);
        if (words.size() != 3 || words[2] != "{" || !valid_name(words[1]))
          throw ParseError("expected 'module <name> {'", lineno, 1);
        if (out.find_module(words[1]))
          throw ParseError("duplicate module name '" + words[1] + "'", lineno, 1);
        raw_module = RawModule{};
        raw_module.name = words[1];
        raw_module.header_line = lineno;
        section = Section::Module;
      } else if (head == "pair") {
        if (words.size() != 3 || !valid_name(words[1]) || !valid_name(words[2]))
          throw ParseError("expected 'pair <module> <module>'", lineno, 1);
        out.pairs.emplace_back(words[1], words[2]);
        pair_lines.push_back(lineno);
      } else if (head == "options") {
        if (words.size() != 2 || words[1] != "{")
          throw ParseError("expected 'options {'", lineno, 1);
        section = Section::Options;
      } else if (head == "family") {
        if (!ring_seen)
          throw ParseError("family block before the ring block", lineno, 1);
        if (words.size() != 3 || words[2] != "{" || !valid_name(words[1]))
          throw ParseError("expected 'family <name> {'", lineno, 1);
        raw_family = InstanceFamily{};
        raw_family.name = words[1];
        section = Section::Family;
      } else {
        throw ParseError("unknown directive '" + head + "'", lineno, 1);
      }
      continue;
    }

    if (body == "}") {
      switch (section) {
        case Section::Ring: finish_ring(); break;
        case Section::Module: finish_module(); break;
        case Section::Family: finish_family(); break;
        default: break;
      }
      section = Section::Top;
      continue;
    }

    const int value_col = after_keyword_col(line, head);
    if (section == Section::Ring) {
      if (head == "char") {
        if (raw_ring.characteristic)
          throw ParseError("duplicate 'char' line", lineno, 1);
        if (words.size() != 2)
          throw ParseError("expected 'char <prime>'", lineno, value_col);
        raw_ring.characteristic = parse_u64(words[1], lineno, value_col);
      } else if (head == "vars") {
        if (!raw_ring.vars.empty())
          throw ParseError("duplicate 'vars' line", lineno, 1);
        if (words.size() < 2)
          throw ParseError("expected 'vars <name>...'", lineno, value_col);
        for (std::size_t i = 1; i < words.size(); ++i) {
          if (!valid_name(words[i]))
            throw ParseError("invalid variable name '" + words[i] + "'",
                             lineno, value_col);
          raw_ring.vars.push_back(words[i]);
        }
      } else if (head == "relations") {
        if (!raw_ring.relations.empty())
          throw ParseError("duplicate 'relations' line", lineno, 1);
        raw_ring.relations = split_commas(line, value_col);
        raw_ring.relations_line = lineno;
        for (const Piece& piece : raw_ring.relations)
          if (piece.text.empty())
            throw ParseError("empty relation entry", lineno, piece.col);
      } else {
        throw ParseError("unknown ring directive '" + head + "'", lineno, 1);
      }
    } else if (section == Section::Module) {
      if (head == "twists") {
        if (raw_module.twists)
          throw ParseError("duplicate 'twists' line", lineno, 1);
        if (words.size() < 2)
          throw ParseError("expected 'twists <int>...'", lineno, value_col);
        std::vector<int> tw;
        for (std::size_t i = 1; i < words.size(); ++i)
          tw.push_back(parse_int(words[i], lineno, value_col));
        raw_module.twists = std::move(tw);
      } else if (head == "relation") {
        auto pieces = split_commas(line, value_col);
        for (const Piece& piece : pieces)
          if (piece.text.empty())
            throw ParseError("empty relation entry", lineno, piece.col);
        raw_module.rows.push_back(std::move(pieces));
        raw_module.row_lines.push_back(lineno);
      } else {
        throw ParseError("unknown module directive '" + head + "'", lineno, 1);
      }
    } else if (section == Section::Options) {
      if (words.size() != 2)
        throw ParseError("expected '<option> <value>'", lineno, 1);
      if (head == "bound") {
        if (out.options.bound)
          throw ParseError("duplicate 'bound' option", lineno, 1);
        const int v = parse_int(words[1], lineno, value_col);
        if (v < 0) throw ParseError("bound must be >= 0", lineno, value_col);
        out.options.bound = v;
      } else if (head == "d_max") {
        if (out.options.d_max)
          throw ParseError("duplicate 'd_max' option", lineno, 1);
        const int v = parse_int(words[1], lineno, value_col);
        if (v < 0) throw ParseError("d_max must be >= 0", lineno, value_col);
        out.options.d_max = v;
      } else if (head == "seed") {
        if (out.options.seed)
          throw ParseError("duplicate 'seed' option", lineno, 1);
        out.options.seed = parse_u64(words[1], lineno, value_col);
      } else if (head == "max_degree") {
        if (out.options.max_degree)
          throw ParseError("duplicate 'max_degree' option", lineno, 1);
        const int v = parse_int(words[1], lineno, value_col);
        if (v < 1)
          throw ParseError("max_degree must be >= 1", lineno, value_col);
        out.options.max_degree = v;
      } else {
        throw ParseError("unknown option '" + head + "'", lineno, 1);
      }
    } else if (section == Section::Family) {
      if (words.size() != 2)
        throw ParseError("expected '<field> <value>'", lineno, 1);
      if (head == "count") {
        raw_family.count = parse_int(words[1], lineno, value_col);
        if (raw_family.count < 0)
          throw ParseError("count must be >= 0", lineno, value_col);
      } else if (head == "seed") {
        raw_family.seed = parse_u64(words[1], lineno, value_col);
      } else if (head == "gens") {
        raw_family.gens = parse_int(words[1], lineno, value_col);
        if (raw_family.gens < 1)
          throw ParseError("gens must be >= 1", lineno, value_col);
      } else if (head == "rels") {
        raw_family.rels = parse_int(words[1], lineno, value_col);
        if (raw_family.rels < 0)
          throw ParseError("rels must be >= 0", lineno, value_col);
      } else if (head == "max_deg") {
        raw_family.max_deg = parse_int(words[1], lineno, value_col);
        if (raw_family.max_deg < 1)
          throw ParseError("max_deg must be >= 1", lineno, value_col);
      } else if (head == "positive_depth") {
        raw_family.positive_depth = parse_bool(words[1], lineno, value_col);
      } else if (head == "known") {
        raw_family.use_known_examples = parse_bool(words[1], lineno, value_col);
      } else {
        throw ParseError("unknown family field '" + head + "'", lineno, 1);
      }
    }
  }

  if (section != Section::Top)
    throw ParseError("unterminated block at end of file", lineno, 1);
  if (!ring_seen) throw ParseError("missing ring block", 1, 1);
  for (std::size_t i = 0; i < out.pairs.size(); ++i) {
    const auto& [a, b] = out.pairs[i];
    const int at = pair_lines[i];
    if (!out.find_module(a))
      throw ParseError("pair references unknown module '" + a + "'", at, 1);
    if (!out.find_module(b))
      throw ParseError("pair references unknown module '" + b + "'", at, 1);
  }
  return out;
}

std::string serialize_instance_file(const InstanceFile& file) {
  if (!file.ring) throw InputError("cannot serialize a file without a ring");
  const Ring& ring = *file.ring;
  const auto& vars = ring.var_names();
  std::ostringstream out;

  out << "ring {\n";
  out << "  char " << ring.field().characteristic() << "\n";
  out << "  vars";
  for (const auto& v : vars) out << " " << v;
  out << "\n";
  if (!ring.relations().empty()) {
    out << "  relations ";
    for (std::size_t i = 0; i < ring.relations().size(); ++i) {
      if (i) out << ", ";
      out << poly_to_string(ring.relations()[i], vars);
    }
    out << "\n";
  }
  out << "}\n";

  for (const auto& [name, m] : file.modules) {
    out << "\nmodule " << name << " {\n";
    out << "  twists";
    for (int t : m.cover().twists) out << " " << t;
    out << "\n";
    for (const Vec& row : m.relations()) {
      out << "  relation ";
      for (std::size_t i = 0; i < row.size(); ++i) {
        if (i) out << ", ";
        out << poly_to_string(row[i], vars);
      }
      out << "\n";
    }
    out << "}\n";
  }

  for (const auto& [a, b] : file.pairs) out << "\npair " << a << " " << b << "\n";

  const FileOptions& opt = file.options;
  if (opt.bound || opt.d_max || opt.seed || opt.max_degree) {
    out << "\noptions {\n";
    if (opt.bound) out << "  bound " << *opt.bound << "\n";
    if (opt.d_max) out << "  d_max " << *opt.d_max << "\n";
    if (opt.seed) out << "  seed " << *opt.seed << "\n";
    if (opt.max_degree) out << "  max_degree " << *opt.max_degree << "\n";
    out << "}\n";
  }

  for (const InstanceFamily& fam : file.families) {
    out << "\nfamily " << fam.name << " {\n";
    out << "  count " << fam.count << "\n";
    out << "  seed " << fam.seed << "\n";
    out << "  gens " << fam.gens << "\n";
    out << "  rels " << fam.rels << "\n";
    out << "  max_deg " << fam.max_deg << "\n";
    out << "  positive_depth " << (fam.positive_depth ? "true" : "false") << "\n";
    out << "  known " << (fam.use_known_examples ? "true" : "false") << "\n";
    out << "}\n";
  }

  return out.str();
}

}  // namespace depthlab
