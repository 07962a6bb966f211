#include "laurexp/spec_file.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

#include "laurexp/errors.hpp"
#include "laurexp/field.hpp"

namespace laurexp {

namespace {

struct Value {
  bool is_list = false;
  std::string scalar;
  std::vector<Value> items;
};

std::string trim(const std::string& s) {
  std::size_t a = 0;
  std::size_t b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

class ValueParser {
 public:
  ValueParser(const std::string& text, std::size_t line) : text_(text), line_(line) {}

  Value parse() {
    Value v = value();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw SpecError(line_, what); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  Value value() {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == '[') return list();
    Value v;
    const std::size_t begin = pos_;
    while (pos_ < text_.size() && text_[pos_] != ',' && text_[pos_] != ']' && text_[pos_] != '[') ++pos_;
    v.scalar = trim(text_.substr(begin, pos_ - begin));
    if (v.scalar.size() >= 2 && v.scalar.front() == '"' && v.scalar.back() == '"')
      v.scalar = v.scalar.substr(1, v.scalar.size() - 2);
    return v;
  }

  Value list() {
    Value v;
    v.is_list = true;
    ++pos_;
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == ']') {
      ++pos_;
      return v;
    }
    for (;;) {
      v.items.push_back(value());
      skip_space();
      if (pos_ >= text_.size()) fail("unterminated '['");
      if (text_[pos_] == ']') {
        ++pos_;
        return v;
      }
      if (text_[pos_] != ',') fail("expected ',' or ']'");
      ++pos_;
    }
  }

  const std::string& text_;
  std::size_t line_;
  std::size_t pos_ = 0;
};

std::int64_t to_int(const Value& v, std::size_t line, const std::string& key) {
  if (v.is_list) throw SpecError(line, key + ": expected an integer, got a list");
  const std::string& s = v.scalar;
  std::size_t i = (s.size() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (i == s.size()) throw SpecError(line, key + ": expected an integer, got '" + s + "'");
  for (std::size_t j = i; j < s.size(); ++j)
    if (!std::isdigit(static_cast<unsigned char>(s[j])))
      throw SpecError(line, key + ": expected an integer, got '" + s + "'");
  if (s.size() > 18) throw SpecError(line, key + ": integer out of range");
  return std::stoll(s);
}

std::uint64_t to_positive(const Value& v, std::size_t line, const std::string& key) {
  const std::int64_t x = to_int(v, line, key);
  if (x < 1) throw SpecError(line, key + " must be positive");
  return static_cast<std::uint64_t>(x);
}

Word to_word(const Value& v, std::size_t line, const std::string& key) {
  try {
    if (!v.is_list) return parse_word(v.scalar);
    Word w;
    for (const auto& item : v.items) {
      const std::int64_t x = to_int(item, line, key);
      if (x < 0) throw SpecError(line, key + ": negative letter");
      w.push_back(static_cast<Letter>(x));
    }
    return w;
  } catch (const std::invalid_argument& e) {
    throw SpecError(line, key + ": " + e.what());
  }
}

std::vector<std::int64_t> to_int_list(const Value& v, std::size_t line, const std::string& key) {
  if (!v.is_list) throw SpecError(line, key + ": expected a list");
  std::vector<std::int64_t> out;
  for (const auto& item : v.items) out.push_back(to_int(item, line, key));
  return out;
}

const std::set<std::string> kKeys = {"name",      "p",         "b",        "m",        "images",
                                     "coding",    "seed",      "witness",  "witness_u", "witness_v",
                                     "witness_omega", "search_k", "search_l", "n_check", "depth",
                                     "equation"};

}  // namespace

std::size_t ProblemSpec::line_of(const std::string& key) const {
  const auto it = lines.find(key);
  return it == lines.end() ? 0 : it->second;
}

Word parse_word(const std::string& text) {
  const std::string s = trim(text);
  Word w;
  if (s.find(',') != std::string::npos) {
    std::stringstream ss(s);
    std::string part;
    while (std::getline(ss, part, ',')) {
      part = trim(part);
      if (part.empty() || part.find_first_not_of("0123456789") != std::string::npos || part.size() > 9)
        throw std::invalid_argument("bad letter '" + part + "'");
      w.push_back(static_cast<Letter>(std::stoul(part)));
    }
    return w;
  }
  for (const char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw std::invalid_argument("bad letter '" + std::string(1, c) + "' in word '" + s + "'");
    w.push_back(static_cast<Letter>(c - '0'));
  }
  return w;
}

ProblemSpec parse_spec(const std::string& text) {
  ProblemSpec spec;
  std::map<std::string, Value> values;
  std::istringstream in(text);
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const auto hash = raw.find('#');
    const std::string content = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
    if (content.empty()) continue;
    const auto eq = content.find('=');
    if (eq == std::string::npos) throw SpecError(line, "expected 'key = value'");
    const std::string key = trim(content.substr(0, eq));
    if (!kKeys.count(key)) throw SpecError(line, "unknown key '" + key + "'");
    if (spec.lines.count(key)) throw SpecError(line, "duplicate key '" + key + "'");
    spec.lines[key] = line;
    values[key] = ValueParser(content.substr(eq + 1), line).parse();
  }

  for (const char* key : {"p", "b", "images", "coding"})
    if (!values.count(key)) throw SpecError(0, std::string("missing required key '") + key + "'");

  auto ln = [&](const std::string& k) { return spec.line_of(k); };

  if (values.count("name")) spec.name = values["name"].scalar;
  const std::uint64_t p = to_positive(values["p"], ln("p"), "p");
  if (!is_prime(p) || p >= (1u << 16)) throw SpecError(ln("p"), "p = " + std::to_string(p) + " is not a supported prime");
  spec.p = static_cast<std::uint32_t>(p);
  spec.b = to_positive(values["b"], ln("b"), "b");
  if (!is_power_of(spec.b, p))
    throw SpecError(ln("b"), "b = " + std::to_string(spec.b) + " is not a power of p = " + std::to_string(p));

  const Value& imgs = values["images"];
  if (!imgs.is_list || imgs.items.empty()) throw SpecError(ln("images"), "images: expected a nonempty list");
  for (const auto& item : imgs.items) spec.images.push_back(to_word(item, ln("images"), "images"));
  spec.m = values.count("m") ? to_positive(values["m"], ln("m"), "m") : spec.images.size();
  if (spec.images.size() != spec.m)
    throw SpecError(ln("images"), "expected " + std::to_string(spec.m) + " images, got " +
                                      std::to_string(spec.images.size()));
  for (std::size_t i = 0; i < spec.m; ++i) {
    if (spec.images[i].size() != spec.b)
      throw SpecError(ln("images"), "image of " + std::to_string(i) + " has length " +
                                        std::to_string(spec.images[i].size()) + ", expected b = " +
                                        std::to_string(spec.b));
    for (const Letter c : spec.images[i])
      if (c >= spec.m)
        throw SpecError(ln("images"), "image of " + std::to_string(i) + " uses letter " +
                                          std::to_string(c) + " outside the alphabet of size " +
                                          std::to_string(spec.m));
  }

  spec.coding = to_int_list(values["coding"], ln("coding"), "coding");
  if (spec.coding.size() != spec.m)
    throw SpecError(ln("coding"), "coding has " + std::to_string(spec.coding.size()) +
                                      " entries, expected m = " + std::to_string(spec.m));
  for (auto& c : spec.coding) c = ((c % static_cast<std::int64_t>(p)) + static_cast<std::int64_t>(p)) % static_cast<std::int64_t>(p);

  if (values.count("seed")) {
    const std::int64_t s = to_int(values["seed"], ln("seed"), "seed");
    if (s < 0 || static_cast<std::size_t>(s) >= spec.m) throw SpecError(ln("seed"), "seed outside the alphabet");
    spec.seed = static_cast<Letter>(s);
  }
  const Word& img = spec.images[spec.seed];
  if (img.size() < 2 || img[0] != spec.seed)
    throw SpecError(ln("seed") ? ln("seed") : ln("images"),
                    "seed " + std::to_string(spec.seed) + " is not prolongable: sigma(" +
                        std::to_string(spec.seed) + ") = " + format_word(img));

  const int witness_keys = static_cast<int>(values.count("witness_u") + values.count("witness_v") +
                                            values.count("witness_omega"));
  if (witness_keys != 0 && witness_keys != 3)
    throw SpecError(std::max({ln("witness_u"), ln("witness_v"), ln("witness_omega")}),
                    "witness_u, witness_v and witness_omega must be given together");
  if (witness_keys == 3) {
    spec.witness_u = to_word(values["witness_u"], ln("witness_u"), "witness_u");
    spec.witness_v = to_word(values["witness_v"], ln("witness_v"), "witness_v");
    if (spec.witness_v->empty()) throw SpecError(ln("witness_v"), "witness_v must be nonempty");
    for (const Word* w : {&*spec.witness_u, &*spec.witness_v})
      for (const Letter c : *w)
        if (c >= spec.m) throw SpecError(ln(w == &*spec.witness_u ? "witness_u" : "witness_v"), "letter outside the alphabet");
    try {
      spec.witness_omega = parse_rational(values["witness_omega"].scalar);
    } catch (const std::invalid_argument& e) {
      throw SpecError(ln("witness_omega"), e.what());
    }
    if (*spec.witness_omega <= 1) throw SpecError(ln("witness_omega"), "witness_omega must exceed 1");
  }
  if (values.count("witness")) {
    const std::string& s = values["witness"].scalar;
    if (s == "search") spec.witness_source = WitnessSource::search;
    else if (s == "pigeonhole") spec.witness_source = WitnessSource::pigeonhole;
    else throw SpecError(ln("witness"), "witness must be 'search' or 'pigeonhole'");
  }
  if (values.count("search_k")) spec.search_k = to_positive(values["search_k"], ln("search_k"), "search_k");
  if (values.count("search_l")) spec.search_l = to_positive(values["search_l"], ln("search_l"), "search_l");
  if (values.count("n_check")) {
    const std::int64_t n = to_int(values["n_check"], ln("n_check"), "n_check");
    if (n < 0 || n > 40) throw SpecError(ln("n_check"), "n_check must be in [0, 40]");
    spec.n_check = static_cast<std::uint32_t>(n);
  }
  if (values.count("depth")) spec.depth = static_cast<std::int64_t>(to_positive(values["depth"], ln("depth"), "depth"));
  if (values.count("equation")) {
    const Value& eq = values["equation"];
    if (!eq.is_list || eq.items.size() < 2)
      throw SpecError(ln("equation"), "equation: expected a list of at least two coefficient lists");
    std::vector<std::vector<std::int64_t>> coeffs;
    for (const auto& c : eq.items) coeffs.push_back(to_int_list(c, ln("equation"), "equation"));
    spec.equation = std::move(coeffs);
  }
  return spec;
}

ProblemSpec load_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SpecError(0, "cannot open spec file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_spec(ss.str());
}

}  // namespace laurexp
