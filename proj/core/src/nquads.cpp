#include "fluid/nquads.hpp"

#include <zlib.h>

#include <array>
#include <cerrno>
#include <cstring>
#include <fstream>
#include <istream>
#include <utility>

#include "fluid/errors.hpp"

namespace fluid {
namespace {

struct Failure {
  std::string reason;
};

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  char peek(std::size_t ahead) const {
    return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0';
  }
  void advance(std::size_t n = 1) { pos_ += n; }

  void skip_ws() {
    while (!at_end() && (text_[pos_] == ' ' || text_[pos_] == '\t')) ++pos_;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

bool is_alpha(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
}
bool is_digit(char c) { return c >= '0' && c <= '9'; }
bool is_hex(char c) {
  return is_digit(c) || (c >= 'a' && c <= 'f') || (c >= 'A' && c <= 'F');
}
int hex_value(char c) {
  if (is_digit(c)) return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  return c - 'A' + 10;
}

void append_utf8(std::string& out, char32_t cp) {
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

// Consumes a \uXXXX or \UXXXXXXXX escape; the cursor sits on 'u' or 'U'.
void read_unicode_escape(Cursor& cur, std::string& out) {
  const std::size_t digits = cur.peek() == 'u' ? 4 : 8;
  cur.advance();
  char32_t cp = 0;
  for (std::size_t i = 0; i < digits; ++i) {
    if (!is_hex(cur.peek())) throw Failure{"invalid unicode escape"};
    cp = (cp << 4) | static_cast<char32_t>(hex_value(cur.peek()));
    cur.advance();
  }
  if (cp > 0x10FFFF) throw Failure{"invalid unicode escape"};
  append_utf8(out, cp);
}

std::string read_iri(Cursor& cur) {
  if (cur.peek() != '<') throw Failure{"IRI expected"};
  cur.advance();
  std::string iri;
  while (true) {
    if (cur.at_end()) throw Failure{"unterminated IRI"};
    char c = cur.peek();
    if (c == '>') {
      cur.advance();
      break;
    }
    if (c == '\\') {
      cur.advance();
      if (cur.peek() != 'u' && cur.peek() != 'U') {
        throw Failure{"invalid escape in IRI"};
      }
      read_unicode_escape(cur, iri);
      continue;
    }
    iri.push_back(c);
    cur.advance();
  }
  if (!is_absolute_iri(iri)) {
    bool has_scheme = !iri.empty() && is_alpha(iri.front()) &&
                      iri.find(':') != std::string::npos;
    throw Failure{has_scheme ? "invalid character in IRI" : "relative IRI"};
  }
  return iri;
}

bool blank_char(char c) {
  return is_alpha(c) || is_digit(c) || c == '_' || c == '-' || c == '.' ||
         static_cast<unsigned char>(c) >= 0x80;
}

std::string read_blank_label(Cursor& cur) {
  // cursor on '_'
  cur.advance();
  if (cur.peek() != ':') throw Failure{"invalid blank node label"};
  cur.advance();
  std::string label;
  while (!cur.at_end() && blank_char(cur.peek())) {
    label.push_back(cur.peek());
    cur.advance();
  }
  if (label.empty() || label.front() == '-' || label.front() == '.' ||
      label.back() == '.') {
    throw Failure{"invalid blank node label"};
  }
  return label;
}

std::string read_string(Cursor& cur) {
  // cursor on '"'
  cur.advance();
  std::string out;
  while (true) {
    if (cur.at_end()) throw Failure{"unterminated string"};
    char c = cur.peek();
    if (c == '"') {
      cur.advance();
      return out;
    }
    if (c == '\\') {
      cur.advance();
      char e = cur.peek();
      switch (e) {
        case 't':
          out.push_back('\t');
          break;
        case 'b':
          out.push_back('\b');
          break;
        case 'n':
          out.push_back('\n');
          break;
        case 'r':
          out.push_back('\r');
          break;
        case 'f':
          out.push_back('\f');
          break;
        case '"':
          out.push_back('"');
          break;
        case '\'':
          out.push_back('\'');
          break;
        case '\\':
          out.push_back('\\');
          break;
        case 'u':
        case 'U':
          read_unicode_escape(cur, out);
          continue;
        default:
          throw Failure{"invalid escape in string"};
      }
      cur.advance();
      continue;
    }
    if (c == '\n' || c == '\r') throw Failure{"unterminated string"};
    out.push_back(c);
    cur.advance();
  }
}

std::string read_langtag(Cursor& cur) {
  // cursor on '@'
  cur.advance();
  std::string tag;
  if (!is_alpha(cur.peek())) throw Failure{"invalid language tag"};
  while (is_alpha(cur.peek())) {
    tag.push_back(cur.peek());
    cur.advance();
  }
  while (cur.peek() == '-') {
    tag.push_back('-');
    cur.advance();
    if (!is_alpha(cur.peek()) && !is_digit(cur.peek())) {
      throw Failure{"invalid language tag"};
    }
    while (is_alpha(cur.peek()) || is_digit(cur.peek())) {
      tag.push_back(cur.peek());
      cur.advance();
    }
  }
  return tag;
}

Term read_term(Cursor& cur, const std::string& blank_prefix) {
  switch (cur.peek()) {
    case '<':
      return Term::iri(read_iri(cur));
    case '_':
      return Term::blank(blank_prefix + read_blank_label(cur));
    case '"': {
      std::string lexical = read_string(cur);
      if (cur.peek() == '@') return Term::literal(std::move(lexical), {}, read_langtag(cur));
      if (cur.peek() == '^') {
        if (cur.peek(1) != '^') throw Failure{"datatype expected"};
        cur.advance(2);
        return Term::literal(std::move(lexical), read_iri(cur));
      }
      return Term::literal(std::move(lexical));
    }
    default:
      throw Failure{"term expected"};
  }
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' ||
                        s.back() == '\r' || s.back() == '\n')) {
    s.remove_suffix(1);
  }
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
    s.remove_prefix(1);
  }
  return s;
}

// Returns the statement body without the terminating '.' and any trailing
// comment. Blank-node labels may contain '.', so the terminator is the last
// dot outside IRIs and strings.
std::string_view statement_body(std::string_view line) {
  // Find the final '.' that is outside IRIs and strings.
  bool in_iri = false;
  bool in_string = false;
  std::size_t last_dot = std::string_view::npos;
  for (std::size_t i = 0; i < line.size(); ++i) {
    char c = line[i];
    if (in_string) {
      if (c == '\\') {
        ++i;
      } else if (c == '"') {
        in_string = false;
      }
      continue;
    }
    if (in_iri) {
      if (c == '>') in_iri = false;
      continue;
    }
    if (c == '"') {
      in_string = true;
    } else if (c == '<') {
      in_iri = true;
    } else if (c == '#') {
      // A comment starts only after the terminator.
      if (last_dot != std::string_view::npos &&
          trim(line.substr(last_dot + 1, i - last_dot - 1)).empty()) {
        break;
      }
    } else if (c == '.') {
      last_dot = i;
    }
  }
  if (in_string) throw Failure{"unterminated string"};
  if (last_dot == std::string_view::npos) throw Failure{"'.' expected"};
  std::string_view rest = line.substr(last_dot + 1);
  std::size_t hash = rest.find('#');
  std::string_view after = trim(hash == std::string_view::npos ? rest : rest.substr(0, hash));
  if (!after.empty()) throw Failure{"'.' expected"};
  return line.substr(0, last_dot);
}

}  // namespace

LineResult parse_line(std::string_view line, std::uint64_t line_number,
                      const ParseOptions& options) {
  std::string_view text = trim(line);
  if (text.empty() || text.front() == '#') return SkippedLine{};
  try {
    Cursor cur(statement_body(text));
    cur.skip_ws();
    if (cur.peek() == '"') throw Failure{"literal subject"};
    Term subject = read_term(cur, options.blank_prefix);
    cur.skip_ws();
    if (cur.peek() != '<') {
      throw Failure{cur.at_end() ? "term expected" : "predicate must be an IRI"};
    }
    Term predicate = read_term(cur, options.blank_prefix);
    cur.skip_ws();
    Term object = read_term(cur, options.blank_prefix);
    cur.skip_ws();
    Term context;
    if (cur.at_end()) {
      context = Term::iri(options.default_source);
    } else {
      if (cur.peek() != '<') throw Failure{"graph label must be an IRI"};
      context = read_term(cur, options.blank_prefix);
      cur.skip_ws();
      if (!cur.at_end()) throw Failure{"'.' expected"};
    }
    return Quad{std::move(subject), std::move(predicate), std::move(object),
                std::move(context)};
  } catch (const Failure& f) {
    return ParseError{line_number, f.reason};
  }
}

std::optional<Term> parse_term(std::string_view text) {
  try {
    Cursor cur(trim(text));
    if (cur.at_end()) return std::nullopt;
    Term t = read_term(cur, {});
    cur.skip_ws();
    if (!cur.at_end()) return std::nullopt;
    return t;
  } catch (const Failure&) {
    return std::nullopt;
  }
}

std::string to_nquads(const Quad& q) {
  std::string out = q.subject.to_ntriples();
  out.push_back(' ');
  out += q.predicate.to_ntriples();
  out.push_back(' ');
  out += q.object.to_ntriples();
  out.push_back(' ');
  out += q.context.to_ntriples();
  out += " .";
  return out;
}

namespace {

void strip_cr(std::string& line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
}

class IstreamLineSource : public LineSource {
 public:
  explicit IstreamLineSource(std::istream& in) : in_(in) {}

  bool next_line(std::string& line) override {
    if (!std::getline(in_, line)) {
      if (in_.bad()) throw StreamAborted("read failure on input stream");
      return false;
    }
    strip_cr(line);
    return true;
  }

 private:
  std::istream& in_;
};

class FileLineSource : public LineSource {
 public:
  explicit FileLineSource(const std::filesystem::path& path)
      : file_(path, std::ios::binary), source_(file_) {
    if (!file_) {
      throw StreamAborted("cannot open " + path.string() + ": " +
                          std::strerror(errno));
    }
  }

  bool next_line(std::string& line) override { return source_.next_line(line); }

 private:
  std::ifstream file_;
  IstreamLineSource source_;
};

class GzipLineSource : public LineSource {
 public:
  explicit GzipLineSource(const std::filesystem::path& path)
      : name_(path.string()), file_(gzopen(name_.c_str(), "rb")) {
    if (file_ == nullptr) throw StreamAborted("cannot open " + name_);
    gzbuffer(file_, 1 << 17);
  }
  ~GzipLineSource() override {
    if (file_ != nullptr) gzclose(file_);
  }
  GzipLineSource(const GzipLineSource&) = delete;
  GzipLineSource& operator=(const GzipLineSource&) = delete;

  bool next_line(std::string& line) override {
    line.clear();
    bool got_any = false;
    while (true) {
      if (gzgets(file_, chunk_.data(), static_cast<int>(chunk_.size())) == nullptr) {
        int err = 0;
        const char* msg = gzerror(file_, &err);
        if (err != Z_OK && err != Z_STREAM_END) {
          throw StreamAborted(name_ + ": " + msg);
        }
        if (!got_any) return false;
        break;
      }
      got_any = true;
      std::size_t len = std::strlen(chunk_.data());
      line.append(chunk_.data(), len);
      if (len > 0 && chunk_[len - 1] == '\n') {
        line.pop_back();
        break;
      }
    }
    strip_cr(line);
    return true;
  }

 private:
  std::string name_;
  gzFile file_;
  std::array<char, 1 << 16> chunk_{};
};

}  // namespace

std::unique_ptr<LineSource> open_line_source(const std::filesystem::path& path) {
  if (path.extension() == ".gz") return std::make_unique<GzipLineSource>(path);
  return std::make_unique<FileLineSource>(path);
}

std::unique_ptr<LineSource> istream_line_source(std::istream& in) {
  return std::make_unique<IstreamLineSource>(in);
}

QuadReader::QuadReader(std::unique_ptr<LineSource> source, ParseOptions options)
    : source_(std::move(source)), options_(std::move(options)) {}

std::optional<Statement> QuadReader::next() {
  while (source_->next_line(buffer_)) {
    ++counters_.lines;
    LineResult result = parse_line(buffer_, counters_.lines, options_);
    if (auto* q = std::get_if<Quad>(&result)) {
      ++counters_.quads;
      return Statement{std::move(*q)};
    }
    if (auto* e = std::get_if<ParseError>(&result)) {
      ++counters_.errors;
      return Statement{std::move(*e)};
    }
    ++counters_.skipped;
  }
  return std::nullopt;
}

}  // namespace fluid
