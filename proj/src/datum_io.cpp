#include "horo/datum_io.hpp"

#include "horo/errors.hpp"

#include <fstream>
#include <sstream>
#include <vector>

namespace horo {

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  for (std::string tok; in >> tok;) out.push_back(tok);
  return out;
}

enum class Section { None, Meta, Gram, Roots, Simple, SigmaPlus };

struct Parser {
  const std::string& source;
  int line = 0;

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(source, line, what); }

  Rational rational(const std::string& tok) const {
    auto q = parse_rational(tok);
    if (!q) fail("expected a rational number (p or p/q), got '" + tok + "'");
    return *q;
  }

  long integer(const std::string& tok, long lo) const {
    std::size_t used = 0;
    long v = 0;
    try {
      v = std::stol(tok, &used);
    } catch (const std::exception&) {
      fail("expected an integer, got '" + tok + "'");
    }
    if (used != tok.size()) fail("expected an integer, got '" + tok + "'");
    if (v < lo) fail("integer '" + tok + "' must be >= " + std::to_string(lo));
    return v;
  }

  QVector vec(const std::vector<std::string>& toks, std::size_t from, std::size_t count) const {
    QVector v(static_cast<Eigen::Index>(count));
    for (std::size_t i = 0; i < count; ++i) v(static_cast<Eigen::Index>(i)) = rational(toks[from + i]);
    return v;
  }
};

}  // namespace

RootDatum parse_datum(std::string_view text, const std::string& source) {
  Parser p{source};
  RootDatum d;
  Section sec = Section::None;
  bool seen_meta = false, seen_gram = false, seen_roots = false, seen_simple = false;
  std::vector<QVector> gram_rows;
  std::vector<int> seen_sections;

  std::istringstream in{std::string(text)};
  for (std::string raw; std::getline(in, raw);) {
    ++p.line;
    const auto hash = raw.find('#');
    const std::string body = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
    if (body.empty()) continue;

    if (body.front() == '[') {
      if (body.back() != ']') p.fail("unterminated section header");
      const std::string name = trim(std::string_view(body).substr(1, body.size() - 2));
      Section next;
      if (name == "meta") next = Section::Meta;
      else if (name == "gram") next = Section::Gram;
      else if (name == "roots") next = Section::Roots;
      else if (name == "simple") next = Section::Simple;
      else if (name == "sigma_plus") next = Section::SigmaPlus;
      else p.fail("unknown section [" + name + "]");
      for (int s : seen_sections)
        if (s == static_cast<int>(next)) p.fail("section [" + name + "] repeated");
      seen_sections.push_back(static_cast<int>(next));
      if (next != Section::Meta && !seen_meta) p.fail("[meta] must come first");
      if (next == Section::SigmaPlus) d.sigma_plus.emplace();
      sec = next;
      continue;
    }

    switch (sec) {
      case Section::None:
        p.fail("content outside any section");
      case Section::Meta: {
        const auto eq = body.find('=');
        if (eq == std::string::npos) p.fail("expected 'key = value'");
        const std::string key = trim(std::string_view(body).substr(0, eq));
        const std::string value = trim(std::string_view(body).substr(eq + 1));
        if (key == "name") {
          if (value.empty()) p.fail("empty name");
          d.name = value;
        } else if (key == "rank") {
          d.rank = static_cast<int>(p.integer(value, 1));
        } else {
          p.fail("unknown key '" + key + "' in [meta]");
        }
        seen_meta = true;
        break;
      }
      case Section::Gram: {
        if (d.rank < 1) p.fail("rank must be set in [meta] before [gram]");
        const auto toks = split(body);
        if (toks.size() != static_cast<std::size_t>(d.rank))
          p.fail("gram row needs " + std::to_string(d.rank) + " entries, got " +
                 std::to_string(toks.size()));
        if (gram_rows.size() == static_cast<std::size_t>(d.rank)) p.fail("too many gram rows");
        gram_rows.push_back(p.vec(toks, 0, toks.size()));
        seen_gram = true;
        break;
      }
      case Section::Roots: {
        if (d.rank < 1) p.fail("rank must be set in [meta] before [roots]");
        const auto toks = split(body);
        const auto m = static_cast<std::size_t>(d.rank);
        if (toks.size() != m + 3)
          p.fail("root line needs " + std::to_string(m) + " coordinates, kind, multiplicity, sign");
        Root r;
        r.coords = p.vec(toks, 0, m);
        const std::string& kind = toks[m];
        if (kind == "k") r.kind = RootKind::Compact;
        else if (kind == "n") r.kind = RootKind::Noncompact;
        else p.fail("root kind must be 'k' or 'n', got '" + kind + "'");
        r.multiplicity = static_cast<int>(p.integer(toks[m + 1], 1));
        const std::string& sign = toks[m + 2];
        if (sign == "+") r.positive = true;
        else if (sign == "-" || sign == "−") r.positive = false;
        else p.fail("root sign must be '+' or '-', got '" + sign + "'");
        d.roots.push_back(std::move(r));
        seen_roots = true;
        break;
      }
      case Section::Simple: {
        for (const auto& tok : split(body)) d.simple.push_back(static_cast<std::size_t>(p.integer(tok, 0)));
        seen_simple = true;
        break;
      }
      case Section::SigmaPlus: {
        const auto toks = split(body);
        if (toks.size() != static_cast<std::size_t>(d.rank))
          p.fail("sigma_plus entry needs " + std::to_string(d.rank) + " coordinates");
        d.sigma_plus->push_back(p.vec(toks, 0, toks.size()));
        break;
      }
    }
  }
  p.line = 0;
  if (!seen_meta || d.rank < 1) p.fail("missing [meta] rank");
  if (d.name.empty()) p.fail("missing [meta] name");
  if (!seen_gram || gram_rows.size() != static_cast<std::size_t>(d.rank))
    p.fail("[gram] needs exactly " + std::to_string(d.rank) + " rows");
  if (!seen_roots) p.fail("missing [roots]");
  if (!seen_simple) p.fail("missing [simple]");

  d.gram.resize(d.rank, d.rank);
  for (int i = 0; i < d.rank; ++i) d.gram.row(i) = gram_rows[static_cast<std::size_t>(i)].transpose();
  validate(d);
  return d;
}

RootDatum load_datum(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw ParseError(path, 0, "cannot open file");
  std::ostringstream buf;
  buf << f.rdbuf();
  return parse_datum(buf.str(), path);
}

std::string format_datum(const RootDatum& d) {
  std::ostringstream out;
  out << "[meta]\nname = " << d.name << "\nrank = " << d.rank << "\n\n[gram]\n";
  for (int i = 0; i < d.rank; ++i) {
    for (int j = 0; j < d.rank; ++j) out << (j ? " " : "") << to_string(d.gram(i, j));
    out << "\n";
  }
  out << "\n[roots]\n";
  for (const auto& r : d.roots) {
    for (Eigen::Index i = 0; i < r.coords.size(); ++i) out << to_string(r.coords(i)) << " ";
    out << (r.kind == RootKind::Compact ? "k" : "n") << " " << r.multiplicity << " "
        << (r.positive ? "+" : "-") << "\n";
  }
  out << "\n[simple]\n";
  for (std::size_t i = 0; i < d.simple.size(); ++i) out << (i ? " " : "") << d.simple[i];
  out << "\n";
  if (d.sigma_plus) {
    out << "\n[sigma_plus]\n";
    for (const auto& v : *d.sigma_plus) {
      for (Eigen::Index i = 0; i < v.size(); ++i) out << (i ? " " : "") << to_string(v(i));
      out << "\n";
    }
  }
  return out.str();
}

}  // namespace horo
