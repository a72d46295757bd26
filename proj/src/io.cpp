#include "trainbench/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace trainbench {

namespace {

std::vector<std::string_view> tokenize(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && line[pos] == ' ') ++pos;
    std::size_t end = pos;
    while (end < line.size() && line[end] != ' ') ++end;
    if (end > pos) tokens.push_back(line.substr(pos, end - pos));
    pos = end;
  }
  return tokens;
}

std::optional<Nat> try_parse_nat(std::string_view text) {
  Nat value = 0;
  auto [ptr, ec] =
      std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size())
    return std::nullopt;
  return value;
}

Nat parse_nat(std::string_view text, std::string_view what) {
  if (auto v = try_parse_nat(text)) return *v;
  throw ParseError("bad " + std::string(what) + " '" + std::string(text) +
                   "'");
}

}  // namespace

void write_coloring_dump(const PairColoring& c, std::ostream& out) {
  for (Nat b = 1; b < c.bound(); ++b) {
    for (Nat a = 0; a < b; ++a)
      out << a << ' ' << b << ' ' << color_char(c.color(a, b)) << '\n';
  }
}

std::string coloring_dump_string(const PairColoring& c) {
  std::ostringstream out;
  write_coloring_dump(c, out);
  return out.str();
}

PairColoring parse_coloring_dump(std::istream& in) {
  PairColoring c;
  c.append_column({});  // column 0 has no pairs

  std::vector<Color> column;
  std::string line;
  Nat b = 1;
  Nat a = 0;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto tokens = tokenize(line);
    if (tokens.size() != 3)
      throw ParseError("dump line needs three fields: '" + line + "'");
    const Nat la = parse_nat(tokens[0], "pair element");
    const Nat lb = parse_nat(tokens[1], "pair element");
    if (tokens[2].size() != 1)
      throw ParseError("bad color '" + std::string(tokens[2]) + "'");
    const Color col = parse_color(tokens[2][0]);

    if (a == b) {  // column b complete, expect next column
      c.append_column(column);
      column.clear();
      ++b;
      a = 0;
    }
    if (la != a || lb != b)
      throw ParseError("dump out of order: expected pair " +
                       std::to_string(a) + " " + std::to_string(b) +
                       ", got '" + line + "'");
    column.push_back(col);
    ++a;
  }
  if (a != b && a != 0)
    throw ParseError("dump ends inside column " + std::to_string(b));
  if (a == b) c.append_column(column);
  return c;
}

NatSet parse_set_line(std::string_view line) {
  std::vector<Nat> xs;
  for (auto token : tokenize(line)) xs.push_back(parse_nat(token, "element"));
  if (xs.empty()) throw ParseError("empty set line");
  try {
    return NatSet::from_elements(std::move(xs));
  } catch (const ContractViolation& e) {
    throw ParseError(e.what());
  }
}

LemmaInstance parse_lemma_instance(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw ParseError("empty instance");
  auto tokens = tokenize(line);
  if (tokens.size() != 2 || tokens[0] != "lemma")
    throw ParseError("instance must open with 'lemma <n>'");
  const Nat n = parse_nat(tokens[1], "train count");
  if (n == 0) throw ParseError("instance needs at least one train");

  LemmaInstance inst;
  std::vector<NatSet> sets;
  Nat set_size = 0;
  bool in_train = false;
  auto flush_train = [&]() {
    if (!in_train) return;
    if (sets.empty()) throw ParseError("train block without sets");
    try {
      inst.trains.push_back(Train::make(set_size, std::move(sets)));
    } catch (const ContractViolation& e) {
      throw ParseError(e.what());
    }
    sets.clear();
    in_train = false;
  };

  while (std::getline(in, line)) {
    if (line.empty()) continue;
    tokens = tokenize(line);
    if (tokens[0] == "train") {
      if (tokens.size() != 2) throw ParseError("bad train header: '" + line + "'");
      flush_train();
      set_size = parse_nat(tokens[1], "set size");
      in_train = true;
      continue;
    }
    // A pair line is `a b C`; anything all-numeric is a set of the open
    // train block.
    if (tokens.size() == 3 && tokens[2].size() == 1 &&
        try_parse_color(tokens[2][0])) {
      flush_train();
      const Nat a = parse_nat(tokens[0], "pair element");
      const Nat b = parse_nat(tokens[1], "pair element");
      if (a >= b) throw ParseError("pair needs a < b: '" + line + "'");
      try {
        inst.pairs.set(a, b, parse_color(tokens[2][0]));
      } catch (const ContractViolation& e) {
        throw ParseError(e.what());
      }
      continue;
    }
    if (!in_train)
      throw ParseError("set line outside a train block: '" + line + "'");
    sets.push_back(parse_set_line(line));
  }
  flush_train();

  if (inst.trains.size() != n)
    throw ParseError("instance declares " + std::to_string(n) +
                     " trains but defines " +
                     std::to_string(inst.trains.size()));
  return inst;
}

std::uint64_t fnv1a64(std::string_view bytes) noexcept {
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (unsigned char ch : bytes) {
    hash ^= ch;
    hash *= 0x100000001b3ULL;
  }
  return hash;
}

std::string fnv1a64_hex(std::string_view bytes) {
  static const char* digits = "0123456789abcdef";
  std::uint64_t h = fnv1a64(bytes);
  std::string out(16, '0');
  for (std::size_t i = 16; i-- > 0;) {
    out[i] = digits[h & 0xf];
    h >>= 4;
  }
  return out;
}

std::string read_stream(std::istream& in) {
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path.string());
  return read_stream(in);
}

void atomic_write_file(const std::filesystem::path& path,
                       std::string_view content) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw ParseError("cannot write " + tmp.string());
    out.write(content.data(),
              static_cast<std::streamsize>(content.size()));
    if (!out) throw ParseError("short write to " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace trainbench
