#include "augrule/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <sstream>

#include "json.hpp"

#include "augrule/errors.hpp"

namespace augrule {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Syntax: return "SyntaxError";
    case ErrorKind::Range: return "RangeError";
    case ErrorKind::NotAKnot: return "NotAKnot";
    case ErrorKind::Index: return "IndexError";
    case ErrorKind::ResourceLimit: return "ResourceLimit";
    case ErrorKind::RhoIncompatible: return "RhoIncompatible";
    case ErrorKind::EvenRhoUnsupported: return "EvenRhoUnsupported";
    case ErrorKind::NotAnAugmentation: return "NotAnAugmentation";
    case ErrorKind::ReportFailure: return "ReportFailure";
    case ErrorKind::GiveUp: return "GiveUp";
  }
  return "Error";
}

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(int n) : parent_(static_cast<std::size_t>(n)) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(int a, int b) { parent_[find(a)] = find(b); }

 private:
  std::vector<int> parent_;
};

// Final row of every strand after all crossings.
std::vector<int> end_rows(int cusps, std::span<const int> word) {
  std::vector<int> at_row(static_cast<std::size_t>(2 * cusps));
  std::iota(at_row.begin(), at_row.end(), 0);
  for (int p : word) std::swap(at_row[p - 1], at_row[p]);
  std::vector<int> end(at_row.size());
  for (std::size_t row = 0; row < at_row.size(); ++row) end[at_row[row]] = static_cast<int>(row);
  return end;
}

std::int64_t floor_mod(std::int64_t v, std::int64_t m) {
  std::int64_t r = v % m;
  return r < 0 ? r + m : r;
}

int parse_int(std::string_view tok) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size())
    throw SyntaxError("expected an integer, got '" + std::string(tok) + "'");
  return value;
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    std::size_t j = i;
    while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

PlatDiagram parse_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw SyntaxError(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("cusps") || !doc.contains("word"))
    throw SyntaxError("JSON plat needs \"cusps\" and \"word\"");
  const auto& cusps = doc["cusps"];
  const auto& word = doc["word"];
  if (!cusps.is_number_integer() || !word.is_array())
    throw SyntaxError("\"cusps\" must be an integer and \"word\" an array");
  std::vector<int> letters;
  for (const auto& p : word) {
    if (!p.is_number_integer()) throw SyntaxError("word entries must be integers");
    letters.push_back(p.get<int>());
  }
  return make_plat(cusps.get<int>(), std::move(letters));
}

PlatDiagram parse_grammar(std::string_view text) {
  // Drop '#' comments.
  std::string cleaned;
  std::istringstream lines{std::string(text)};
  for (std::string line; std::getline(lines, line);) {
    cleaned += line.substr(0, line.find('#'));
    cleaned += ' ';
  }
  auto tokens = split_ws(cleaned);
  if (tokens.size() < 2 || tokens[0] != "plat")
    throw SyntaxError("expected 'plat <n> : <p_1> ... <p_m>'");
  // Accept "2:" and "2 :" alike.
  std::string_view count = tokens[1];
  std::size_t next = 2;
  if (!count.empty() && count.back() == ':') {
    count.remove_suffix(1);
  } else {
    if (tokens.size() < 3 || tokens[2] != ":") throw SyntaxError("missing ':' after cusp count");
    next = 3;
  }
  int cusps = parse_int(count);
  std::vector<int> word;
  for (std::size_t i = next; i < tokens.size(); ++i) word.push_back(parse_int(tokens[i]));
  return make_plat(cusps, std::move(word));
}

}  // namespace

int count_components(int cusps, std::span<const int> word) {
  const int rows = 2 * cusps;
  DisjointSets sets(2 * rows);
  auto end = end_rows(cusps, word);
  for (int s = 0; s < rows; ++s) sets.unite(s, rows + end[s]);
  for (int k = 0; k < cusps; ++k) {
    sets.unite(2 * k, 2 * k + 1);
    sets.unite(rows + 2 * k, rows + 2 * k + 1);
  }
  int components = 0;
  for (int x = 0; x < 2 * rows; ++x)
    if (sets.find(x) == x) ++components;
  return components;
}

PlatDiagram make_plat(int cusps, std::vector<int> word) {
  if (cusps < 1) throw RangeError("cusp count must be positive");
  for (int p : word)
    if (p < 1 || p > 2 * cusps - 2)
      throw RangeError("crossing position " + std::to_string(p) + " outside [1, " +
                       std::to_string(2 * cusps - 2) + "]");
  int components = count_components(cusps, word);
  if (components != 1)
    throw NotAKnot("diagram closes up into " + std::to_string(components) + " components");
  return PlatDiagram{cusps, std::move(word)};
}

PlatDiagram parse_plat(std::string_view text) {
  auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) throw SyntaxError("empty input");
  if (text[first] == '{') return parse_json(text);
  return parse_grammar(text);
}

std::string to_text(const PlatDiagram& d) {
  std::string out = "plat " + std::to_string(d.cusps) + " :";
  for (int p : d.word) out += " " + std::to_string(p);
  return out;
}

std::string to_json_text(const PlatDiagram& d) {
  nlohmann::json j = {{"cusps", d.cusps}, {"word", d.word}};
  return j.dump();
}

std::vector<std::vector<int>> row_strands(const PlatDiagram& d) {
  std::vector<std::vector<int>> slices;
  slices.reserve(d.word.size() + 1);
  std::vector<int> at_row(static_cast<std::size_t>(d.rows()));
  std::iota(at_row.begin(), at_row.end(), 0);
  slices.push_back(at_row);
  for (int p : d.word) {
    std::swap(at_row[p - 1], at_row[p]);
    slices.push_back(at_row);
  }
  return slices;
}

Grading::Grading(std::int64_t value, std::int64_t modulus)
    : value_(modulus > 0 ? floor_mod(value, modulus) : value), modulus_(modulus) {}

std::int64_t Grading::reduce(int rho) const {
  if (rho < 0) throw RhoIncompatible("rho must be non-negative");
  if (rho == 0) {
    if (modulus_ != 0) throw RhoIncompatible("rho = 0 needs rotation number 0");
    return value_;
  }
  if (modulus_ % rho != 0)
    throw RhoIncompatible("rho = " + std::to_string(rho) + " does not divide " +
                          std::to_string(modulus_));
  return floor_mod(value_, rho);
}

Grading Grading::operator+(const Grading& o) const { return Grading(value_ + o.value_, modulus_); }
Grading Grading::operator-(const Grading& o) const { return Grading(value_ - o.value_, modulus_); }

std::string to_string(const Grading& g) {
  if (g.modulus() == 0) return std::to_string(g.value());
  return std::to_string(g.value()) + " mod " + std::to_string(g.modulus());
}

MaslovData maslov(const PlatDiagram& d, Orientation orientation) {
  const int rows = d.rows();
  auto end = end_rows(d.cusps, d.word);
  std::vector<int> strand_ending_at(static_cast<std::size_t>(rows));
  for (int s = 0; s < rows; ++s) strand_ending_at[end[s]] = s;

  MaslovData m;
  m.potential.assign(static_cast<std::size_t>(rows), 0);
  m.direction.assign(static_cast<std::size_t>(rows), 0);

  int strand = 0;
  int dir = orientation == Orientation::Default ? 1 : -1;
  std::int64_t mu = 0;
  std::int64_t ups = 0;
  std::int64_t downs = 0;
  for (int steps = 0; steps < rows; ++steps) {
    m.potential[strand] = mu;
    m.direction[strand] = dir;
    // Cusp at the far end of this strand, then the strand on its other branch.
    int here = dir > 0 ? end[strand] : strand;
    int there = here ^ 1;
    if (there < here) {
      ++mu;
      ++ups;
    } else {
      --mu;
      ++downs;
    }
    strand = dir > 0 ? strand_ending_at[there] : there;
    dir = -dir;
  }
  // make_plat guarantees one component, so the walk is back at strand 0.
  m.monodromy = mu;
  m.rotation = (downs - ups) / 2;
  m.modulus = m.rotation < 0 ? -2 * m.rotation : 2 * m.rotation;

  auto slices = row_strands(d);
  for (int j = 0; j < d.crossings(); ++j) {
    const auto& at = slices[static_cast<std::size_t>(j)];
    int top = d.top_row(j);
    m.writhe += m.direction[at[top]] == m.direction[at[top + 1]] ? 1 : -1;
  }
  m.tb = m.writhe - d.cusps;
  return m;
}

Grading strand_index(const MaslovData& m, std::span<const int> strands_at_slice, int row) {
  return Grading(m.potential[strands_at_slice[row]], m.modulus);
}

Grading crossing_grading(const PlatDiagram& d, const MaslovData& m, int j) {
  if (j < 0 || j >= d.crossings())
    throw IndexError("crossing index " + std::to_string(j + 1) + " out of range");
  auto slices = row_strands(d);
  const auto& at = slices[static_cast<std::size_t>(j)];
  int top = d.top_row(j);
  return Grading(m.potential[at[top]] - m.potential[at[top + 1]], m.modulus);
}

std::vector<Grading> crossing_gradings(const PlatDiagram& d, const MaslovData& m) {
  auto slices = row_strands(d);
  std::vector<Grading> out;
  out.reserve(d.word.size());
  for (int j = 0; j < d.crossings(); ++j) {
    const auto& at = slices[static_cast<std::size_t>(j)];
    int top = d.top_row(j);
    out.emplace_back(m.potential[at[top]] - m.potential[at[top + 1]], m.modulus);
  }
  return out;
}

PairingState::PairingState(std::vector<int> partner) : partner_(std::move(partner)) {}

PairingState PairingState::standard(int cusps) {
  std::vector<int> partner(static_cast<std::size_t>(2 * cusps));
  for (int r = 0; r < 2 * cusps; ++r) partner[r] = r ^ 1;
  return PairingState(std::move(partner));
}

void PairingState::transpose(int row) {
  int a = partner_[row];
  int b = partner_[row + 1];
  if (a == row + 1) return;
  partner_[row] = b;
  partner_[b] = row;
  partner_[row + 1] = a;
  partner_[a] = row + 1;
}

bool PairingState::interlaced(int x, int y) const {
  int px = partner_[x];
  int py = partner_[y];
  if (px == y) return false;
  auto [a1, a2] = std::minmax(x, px);
  auto [b1, b2] = std::minmax(y, py);
  return (a1 < b1 && b1 < a2 && a2 < b2) || (b1 < a1 && a1 < b2 && b2 < a2);
}

std::string to_string(const PairingState& s) {
  std::string out;
  for (int r = 0; r < s.rows(); ++r) {
    if (s.partner(r) < r) continue;
    out += "(" + std::to_string(r + 1) + "," + std::to_string(s.partner(r) + 1) + ")";
  }
  return out;
}

std::vector<PairingState> slice_pairing_sweep(const PlatDiagram& d, std::span<const int> switches) {
  std::vector<bool> is_switch(d.word.size(), false);
  for (int j : switches) {
    if (j < 0 || j >= d.crossings())
      throw IndexError("switch index " + std::to_string(j + 1) + " out of range");
    is_switch[static_cast<std::size_t>(j)] = true;
  }
  std::vector<PairingState> out;
  out.reserve(d.word.size() + 1);
  PairingState state = PairingState::standard(d.cusps);
  out.push_back(state);
  for (int j = 0; j < d.crossings(); ++j) {
    if (!is_switch[static_cast<std::size_t>(j)]) state.transpose(d.top_row(j));
    out.push_back(state);
  }
  return out;
}

}  // namespace augrule
