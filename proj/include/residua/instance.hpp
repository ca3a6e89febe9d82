#pragma once

// Instance files (line-oriented `key = value`, documents separated by a
// `---` line) and JSON report documents.

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <cstdint>
#include <cstdio>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "residua/errors.hpp"
#include "residua/field.hpp"
#include "residua/poly_io.hpp"
#include "residua/residual.hpp"

namespace residua {

inline constexpr std::string_view kVersion = "0.1.0";

/// A value together with where it appeared, for error positions.
struct SourceText {
  std::string text;
  std::size_t line = 0;
  std::size_t column = 0;  // 0-based offset of the value within its line

  friend bool operator==(const SourceText& a, const SourceText& b) { return a.text == b.text; }
};

struct InstanceFile {
  FieldSpec field = FieldSpec::prime(32003);
  std::vector<std::string> vars;
  std::string order = "grevlex";
  SourceText ideal;
  std::optional<SourceText> a;
  std::optional<int> s;
  std::optional<std::uint64_t> seed;
  std::string family;

  bool operator==(const InstanceFile&) const = default;
};

inline MonomialOrder parse_order(std::string_view text) {
  if (text == "grevlex") return MonomialOrder::grevlex();
  if (text == "lex") return MonomialOrder::lex();
  if (text.size() > 7 && text.substr(0, 6) == "block(" && text.back() == ')') {
    auto digits = text.substr(6, text.size() - 7);
    if (!digits.empty() && digits.size() < 3 &&
        std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
      return MonomialOrder::block_elimination(static_cast<std::size_t>(std::stoi(std::string(digits))));
    }
  }
  throw InvalidArgument("unknown monomial order '" + std::string(text) + "'");
}

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

inline bool is_identifier(std::string_view s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(),
                     [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

inline std::uint64_t parse_unsigned(std::string_view v, std::size_t line, std::size_t col,
                                    const char* what) {
  if (v.empty() || v.size() > 20 ||
      !std::all_of(v.begin(), v.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
    throw ParseError(std::string("expected a non-negative integer for ") + what, line, col + 1);
  }
  try {
    return std::stoull(std::string(v));
  } catch (const std::out_of_range&) {
    throw ParseError(std::string(what) + " out of range", line, col + 1);
  }
}

class InstanceReader {
 public:
  void feed(std::string_view raw, std::size_t line) {
    std::string_view content = raw;
    if (auto hash = content.find('#'); hash != std::string_view::npos) content = content.substr(0, hash);
    if (trim(content).empty()) return;
    auto eq = content.find('=');
    if (eq == std::string_view::npos) {
      std::size_t col = content.find_first_not_of(" \t") + 1;
      throw ParseError("expected 'key = value'", line, col);
    }
    std::string_view key = trim(content.substr(0, eq));
    std::size_t key_col = content.find_first_not_of(" \t") + 1;
    std::size_t value_start = eq + 1;
    while (value_start < content.size() && std::isspace(static_cast<unsigned char>(content[value_start]))) {
      ++value_start;
    }
    std::string_view value = trim(content.substr(std::min(value_start, content.size())));
    if (key.empty()) throw ParseError("missing key before '='", line, eq + 1);
    if (!seen_.insert(std::string(key)).second) {
      throw ParseError("duplicate key '" + std::string(key) + "'", line, key_col);
    }
    any_ = true;
    if (key == "field") {
      try {
        file_.field = FieldSpec::parse(value);
      } catch (const InvalidArgument& e) {
        throw ParseError(e.what(), line, value_start + 1);
      }
    } else if (key == "vars") {
      std::size_t pos = 0;
      std::string_view rest = value;
      while (true) {
        auto comma = rest.find(',');
        auto piece = rest.substr(0, comma);
        auto name = trim(piece);
        auto lead = piece.find_first_not_of(" \t");
        const std::size_t col = value_start + pos + (lead == std::string_view::npos ? 0 : lead) + 1;
        if (!is_identifier(name)) throw ParseError("invalid variable name '" + std::string(name) + "'", line, col);
        if (std::find(file_.vars.begin(), file_.vars.end(), name) != file_.vars.end()) {
          throw ParseError("repeated variable '" + std::string(name) + "'", line, col);
        }
        file_.vars.emplace_back(name);
        if (comma == std::string_view::npos) break;
        rest = rest.substr(comma + 1);
        pos += comma + 1;
      }
      if (file_.vars.size() > kMaxVariables) {
        throw ParseError("at most " + std::to_string(kMaxVariables) + " variables are supported", line,
                         value_start + 1);
      }
    } else if (key == "order") {
      try {
        parse_order(value);
      } catch (const InvalidArgument& e) {
        throw ParseError(e.what(), line, value_start + 1);
      }
      file_.order = std::string(value);
    } else if (key == "I") {
      file_.ideal = {std::string(value), line, value_start};
    } else if (key == "a") {
      file_.a = SourceText{std::string(value), line, value_start};
    } else if (key == "s") {
      auto v = parse_unsigned(value, line, value_start, "s");
      if (v > 64) throw ParseError("s too large", line, value_start + 1);
      file_.s = static_cast<int>(v);
    } else if (key == "seed") {
      file_.seed = parse_unsigned(value, line, value_start, "seed");
    } else if (key == "family") {
      if (!value.empty() && !is_identifier(value)) throw ParseError("invalid family tag", line, value_start + 1);
      file_.family = std::string(value);
    } else {
      throw ParseError("unknown key '" + std::string(key) + "'", line, key_col);
    }
  }

  bool empty() const { return !any_; }

  InstanceFile finish(std::size_t line) {
    if (!seen_.count("vars")) throw ParseError("missing key 'vars'", line, 1);
    if (!seen_.count("I")) throw ParseError("missing key 'I'", line, 1);
    if (!file_.a && !file_.s) throw ParseError("instance needs 'a' or 's'", line, 1);
    return std::move(file_);
  }

 private:
  InstanceFile file_;
  std::set<std::string> seen_;
  bool any_ = false;
};

}  // namespace detail

/// Parses every document in `text`; blank documents are skipped.
inline std::vector<InstanceFile> parse_instance_documents(std::string_view text) {
  std::vector<InstanceFile> docs;
  detail::InstanceReader reader;
  std::size_t line = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto nl = text.find('\n', pos);
    auto raw = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
    ++line;
    if (detail::trim(raw) == "---") {
      if (!reader.empty()) docs.push_back(reader.finish(line));
      reader = detail::InstanceReader();
    } else {
      reader.feed(raw, line);
    }
    if (nl == std::string_view::npos) break;
    pos = nl + 1;
  }
  if (!reader.empty()) docs.push_back(reader.finish(line));
  return docs;
}

inline InstanceFile parse_instance_file(std::string_view text) {
  auto docs = parse_instance_documents(text);
  if (docs.size() != 1) {
    throw ParseError("expected exactly one instance, found " + std::to_string(docs.size()), 1, 1);
  }
  return std::move(docs.front());
}

inline std::string join_names(const std::vector<std::string>& names, const char* sep = ", ") {
  std::string out;
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (i) out += sep;
    out += names[i];
  }
  return out;
}

inline std::string format_instance(const InstanceFile& f) {
  std::ostringstream out;
  out << "field = " << f.field.to_string() << '\n';
  out << "vars = " << join_names(f.vars) << '\n';
  out << "order = " << f.order << '\n';
  out << "I = " << f.ideal.text << '\n';
  if (f.a) out << "a = " << f.a->text << '\n';
  if (f.s) out << "s = " << *f.s << '\n';
  if (!f.family.empty()) out << "family = " << f.family << '\n';
  if (f.seed) out << "seed = " << *f.seed << '\n';
  return out.str();
}

inline std::string format_instance_documents(const std::vector<InstanceFile>& docs) {
  std::string out;
  for (std::size_t i = 0; i < docs.size(); ++i) {
    if (i) out += "---\n";
    out += format_instance(docs[i]);
  }
  return out;
}

/// Parses the polynomials of an instance file over `field`, validates it,
/// and selects general generators when only s is given. `seed_override`
/// replaces the file's seed.
template <class F>
ResidualInstance<F> build_instance(const InstanceFile& file, const F& field,
                                   std::optional<std::uint64_t> seed_override = std::nullopt) {
  auto ring = make_ring(field, file.vars, parse_order(file.order));
  auto igens = parse_polynomial_list(ring, file.ideal.text, file.ideal.line, file.ideal.column);
  Ideal<F> i(ring, igens);
  if (!i.is_homogeneous()) throw ValidationError("I is not homogeneous");
  if (i.is_zero()) throw ValidationError("I is the zero ideal");
  const std::uint64_t seed = seed_override ? *seed_override : file.seed.value_or(0);
  PolyList<F> a;
  if (file.a) {
    a = parse_polynomial_list(ring, file.a->text, file.a->line, file.a->column);
    for (const auto& g : a) {
      if (g.is_zero()) throw ValidationError("a has a zero generator");
      if (!g.is_homogeneous()) throw ValidationError("a is not homogeneous");
    }
    if (file.s && *file.s != static_cast<int>(a.size())) {
      throw ValidationError("s does not match the number of a generators");
    }
    if (!i.contains(Ideal<F>(ring, a))) throw ValidationError("a not contained in I");
  } else {
    a = generic_generators(i, *file.s, seed);
  }
  return ResidualInstance<F>{std::move(i), std::move(a), seed, file.family};
}

/// Canonical instance file for an instance: generators in canonical text,
/// both a and s present.
template <class F>
InstanceFile to_instance_file(const ResidualInstance<F>& inst) {
  const auto& ring = inst.ring();
  InstanceFile f;
  f.field = ring->field().spec();
  f.vars = ring->variables();
  f.order = ring->order().name();
  f.ideal.text = join(inst.I.generators());
  f.a = SourceText{join(inst.a_gens), 0, 0};
  f.s = inst.s();
  f.seed = inst.seed;
  f.family = inst.family;
  return f;
}

/// 64-bit FNV-1a, printed as 16 hex digits.
inline std::string input_hash(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

struct InstanceSummary {
  std::string field;
  std::vector<std::string> vars;
  std::string order;
  std::vector<std::string> I;
  std::vector<std::string> a;
  int s = 0;
  std::string family;
  std::uint64_t seed = 0;

  bool operator==(const InstanceSummary&) const = default;
};

struct LinkSummary {
  std::vector<std::size_t> indices;
  std::string status;
  std::vector<std::string> colon;

  bool operator==(const LinkSummary&) const = default;
};

/// Field-independent rendering of a command result. Commands other than
/// verify leave theorem, rhs and verdict empty and put their result in lhs.
struct ReportDocument {
  std::string version{kVersion};
  std::string command;
  std::string input_hash;
  std::uint64_t seed = 0;
  InstanceSummary instance;
  std::optional<std::string> theorem;
  std::vector<std::string> lhs;
  std::optional<std::vector<std::string>> rhs;
  std::optional<std::string> verdict;
  std::optional<bool> rhs_subset_lhs;
  std::vector<HypothesisCheck> hypotheses;
  std::vector<LinkSummary> links;

  bool operator==(const ReportDocument&) const = default;
};

template <class F>
InstanceSummary summarize(const ResidualInstance<F>& inst) {
  const auto& ring = inst.ring();
  return InstanceSummary{ring->field().spec().to_string(),
                         ring->variables(),
                         ring->order().name(),
                         to_strings(inst.I.generators()),
                         to_strings(inst.a_gens),
                         inst.s(),
                         inst.family,
                         inst.seed};
}

template <class F>
std::vector<std::string> basis_strings(const Ideal<F>& ideal) {
  return to_strings(ideal.groebner().elements());
}

template <class F>
ReportDocument make_report(const ResidualInstance<F>& inst, const VerificationReport<F>& r) {
  ReportDocument doc;
  doc.command = "verify";
  doc.seed = inst.seed;
  doc.instance = summarize(inst);
  doc.theorem = std::string(theorem_name(r.theorem));
  doc.lhs = basis_strings(r.lhs);
  doc.rhs = basis_strings(r.rhs);
  doc.verdict = std::string(verdict_name(r.verdict));
  doc.rhs_subset_lhs = r.rhs_subset_lhs;
  doc.hypotheses = r.hypotheses;
  for (const auto& l : r.links) {
    doc.links.push_back({l.indices, std::string(link_status_name(l.status)), basis_strings(l.colon)});
  }
  return doc;
}

inline CheckStatus parse_check_status(std::string_view s) {
  for (auto c : {CheckStatus::pass, CheckStatus::fail, CheckStatus::asserted, CheckStatus::unchecked}) {
    if (check_status_name(c) == s) return c;
  }
  throw InvalidArgument("unknown hypothesis status '" + std::string(s) + "'");
}

inline nlohmann::ordered_json to_json(const ReportDocument& d) {
  using nlohmann::ordered_json;
  auto opt = [](const auto& v) -> ordered_json { return v ? ordered_json(*v) : ordered_json(nullptr); };
  ordered_json inst = {{"field", d.instance.field}, {"vars", d.instance.vars},   {"order", d.instance.order},
                       {"I", d.instance.I},         {"a", d.instance.a},         {"s", d.instance.s},
                       {"family", d.instance.family}, {"seed", d.instance.seed}};
  ordered_json hyps = ordered_json::array();
  for (const auto& h : d.hypotheses) {
    hyps.push_back({{"name", h.name}, {"status", std::string(check_status_name(h.status))}});
  }
  ordered_json links = ordered_json::array();
  for (const auto& l : d.links) {
    links.push_back({{"indices", l.indices}, {"status", l.status}, {"colon", l.colon}});
  }
  return ordered_json{{"version", d.version},
                      {"command", d.command},
                      {"input_hash", d.input_hash},
                      {"seed", d.seed},
                      {"instance", inst},
                      {"theorem", opt(d.theorem)},
                      {"lhs", d.lhs},
                      {"rhs", opt(d.rhs)},
                      {"verdict", opt(d.verdict)},
                      {"rhs_subset_lhs", opt(d.rhs_subset_lhs)},
                      {"hypotheses", hyps},
                      {"links", links}};
}

inline ReportDocument report_from_json(const nlohmann::ordered_json& j) {
  ReportDocument d;
  try {
    d.version = j.at("version").get<std::string>();
    d.command = j.at("command").get<std::string>();
    d.input_hash = j.at("input_hash").get<std::string>();
    d.seed = j.at("seed").get<std::uint64_t>();
    const auto& inst = j.at("instance");
    d.instance.field = inst.at("field").get<std::string>();
    d.instance.vars = inst.at("vars").get<std::vector<std::string>>();
    d.instance.order = inst.at("order").get<std::string>();
    d.instance.I = inst.at("I").get<std::vector<std::string>>();
    d.instance.a = inst.at("a").get<std::vector<std::string>>();
    d.instance.s = inst.at("s").get<int>();
    d.instance.family = inst.at("family").get<std::string>();
    d.instance.seed = inst.at("seed").get<std::uint64_t>();
    if (!j.at("theorem").is_null()) d.theorem = j.at("theorem").get<std::string>();
    d.lhs = j.at("lhs").get<std::vector<std::string>>();
    if (!j.at("rhs").is_null()) d.rhs = j.at("rhs").get<std::vector<std::string>>();
    if (!j.at("verdict").is_null()) d.verdict = j.at("verdict").get<std::string>();
    if (!j.at("rhs_subset_lhs").is_null()) d.rhs_subset_lhs = j.at("rhs_subset_lhs").get<bool>();
    for (const auto& h : j.at("hypotheses")) {
      d.hypotheses.push_back({h.at("name").get<std::string>(), parse_check_status(h.at("status").get<std::string>())});
    }
    for (const auto& l : j.at("links")) {
      d.links.push_back({l.at("indices").get<std::vector<std::size_t>>(), l.at("status").get<std::string>(),
                         l.at("colon").get<std::vector<std::string>>()});
    }
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(std::string("malformed report document: ") + e.what());
  }
  return d;
}

}  // namespace residua
