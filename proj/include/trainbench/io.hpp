#ifndef TRAINBENCH_IO_HPP
#define TRAINBENCH_IO_HPP

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "trainbench/core.hpp"

namespace trainbench {

// Coloring dumps: one line `a b C` per colored pair, sorted by (b, a).
void write_coloring_dump(const PairColoring& c, std::ostream& out);
std::string coloring_dump_string(const PairColoring& c);

/// Strict parse of a canonical dump (complete sorted columns); anything
/// else is a ParseError.
PairColoring parse_coloring_dump(std::istream& in);

/// Standalone lemma instance:
///   lemma <n>
///   n train blocks (`train <m>` then one set per line)
///   pair lines `a b C` for at least every pair inside a train set
struct LemmaInstance {
  std::vector<Train> trains;
  SparseColoring pairs;
};
LemmaInstance parse_lemma_instance(std::istream& in);

NatSet parse_set_line(std::string_view line);

std::uint64_t fnv1a64(std::string_view bytes) noexcept;
std::string fnv1a64_hex(std::string_view bytes);

std::string read_stream(std::istream& in);
std::string read_file(const std::filesystem::path& path);

/// Writes to a sibling temp file, then renames over the target.
void atomic_write_file(const std::filesystem::path& path,
                       std::string_view content);

}  // namespace trainbench

#endif  // TRAINBENCH_IO_HPP
