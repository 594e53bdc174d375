#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "fluid/term.hpp"
#include "fluid/vocab.hpp"

namespace fluid {

struct ParseError {
  std::uint64_t line = 0;
  std::string reason;

  friend bool operator==(const ParseError&, const ParseError&) = default;
};

struct ParseOptions {
  // Context assigned to statements without a graph label.
  std::string default_source = std::string(vocab::kDefaultSource);
  // Prepended to every blank-node label; scopes labels to one input file.
  std::string blank_prefix;
};

// Blank lines and comment-only lines.
struct SkippedLine {};

using LineResult = std::variant<SkippedLine, Quad, ParseError>;

LineResult parse_line(std::string_view line, std::uint64_t line_number,
                      const ParseOptions& options);

// Parses exactly one N-Triples term (e.g. "<http://a>", "_:b", "\"x\"@en").
std::optional<Term> parse_term(std::string_view text);

// N-Quads line for `q`, without trailing newline. The graph label is always
// written.
std::string to_nquads(const Quad& q);

class LineSource {
 public:
  virtual ~LineSource() = default;
  // Reads the next line without its terminator. Returns false at end of
  // input; throws StreamAborted on read failure.
  virtual bool next_line(std::string& line) = 0;
};

// Opens a plain or gzip-compressed (".gz" extension) file.
std::unique_ptr<LineSource> open_line_source(const std::filesystem::path& path);
std::unique_ptr<LineSource> istream_line_source(std::istream& in);

struct ReaderCounters {
  std::uint64_t lines = 0;
  std::uint64_t quads = 0;
  std::uint64_t errors = 0;
  std::uint64_t skipped = 0;
};

using Statement = std::variant<Quad, ParseError>;

// Pull-style N-Quads reader. Malformed lines come back as ParseError values
// and never stop the stream.
class QuadReader {
 public:
  QuadReader(std::unique_ptr<LineSource> source, ParseOptions options);

  std::optional<Statement> next();

  const ReaderCounters& counters() const { return counters_; }

 private:
  std::unique_ptr<LineSource> source_;
  ParseOptions options_;
  ReaderCounters counters_;
  std::string buffer_;
};

}  // namespace fluid
