#include "peirce/ring_io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace peirce {

namespace {

std::string line_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1, column = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

const nlohmann::json& member(const nlohmann::json& j, const std::string& pointer,
                             const char* key) {
  if (!j.is_object()) throw ParseError(pointer.empty() ? "/" : pointer, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) {
    throw ParseError(pointer.empty() ? "/" : pointer,
                     std::string("missing key '") + key + "'");
  }
  return *it;
}

Scalar integer_at(const nlohmann::json& j, const std::string& pointer) {
  if (!j.is_number_integer()) throw ParseError(pointer, "expected an integer");
  return j.get<Scalar>();
}

}  // namespace

nlohmann::json parse_json(std::string_view text) {
  try {
    return nlohmann::json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    // e.byte is one past the offending character.
    throw ParseError(line_column(text, e.byte == 0 ? 0 : e.byte - 1),
                     "malformed JSON");
  }
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path.string() + "'");
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

Ring ring_from_json(const nlohmann::json& j, const std::string& pointer) {
  RingSpec spec;
  const auto& name = member(j, pointer, "name");
  if (!name.is_string()) throw ParseError(pointer + "/name", "expected a string");
  spec.name = name.get<std::string>();

  spec.modulus = integer_at(member(j, pointer, "modulus"), pointer + "/modulus");
  if (spec.modulus < 2) throw ParseError(pointer + "/modulus", "modulus must be at least 2");

  const auto& basis = member(j, pointer, "basis");
  if (!basis.is_array() || basis.empty()) {
    throw ParseError(pointer + "/basis", "expected a non-empty array of labels");
  }
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const std::string at = pointer + "/basis/" + std::to_string(i);
    if (!basis[i].is_string()) throw ParseError(at, "expected a string");
    const auto label = basis[i].get<std::string>();
    for (const auto& seen : spec.basis) {
      if (seen == label) throw ParseError(at, "duplicate basis label '" + label + "'");
    }
    if (label.empty() || label.find_first_of("+-* \t") != std::string::npos ||
        std::isdigit(static_cast<unsigned char>(label[0]))) {
      throw ParseError(at, "label '" + label + "' is not a valid identifier");
    }
    spec.basis.push_back(label);
  }

  const int d = spec.dim();
  const auto& table = member(j, pointer, "table");
  const std::string tp = pointer + "/table";
  if (!table.is_array() || table.size() != static_cast<std::size_t>(d)) {
    throw ParseError(tp, "expected " + std::to_string(d) + " rows");
  }
  spec.table.assign(static_cast<std::size_t>(d * d), Coeffs());
  for (int i = 0; i < d; ++i) {
    const auto& row = table[static_cast<std::size_t>(i)];
    const std::string rp = tp + "/" + std::to_string(i);
    if (!row.is_array() || row.size() != static_cast<std::size_t>(d)) {
      throw ParseError(rp, "expected " + std::to_string(d) + " entries");
    }
    for (int c = 0; c < d; ++c) {
      const auto& entry = row[static_cast<std::size_t>(c)];
      const std::string ep = rp + "/" + std::to_string(c);
      if (!entry.is_array() || entry.size() != static_cast<std::size_t>(d)) {
        throw ParseError(ep, "expected " + std::to_string(d) + " coefficients");
      }
      Coeffs v(d);
      for (int l = 0; l < d; ++l) {
        const std::string cp = ep + "/" + std::to_string(l);
        const Scalar x = integer_at(entry[static_cast<std::size_t>(l)], cp);
        if (x < 0 || x >= spec.modulus) {
          throw ParseError(cp, "coefficient " + std::to_string(x) +
                                   " not in [0, " + std::to_string(spec.modulus) + ")");
        }
        v(l) = x;
      }
      spec.product(i, c) = std::move(v);
    }
  }
  return Ring(std::move(spec));
}

nlohmann::ordered_json ring_to_json(const Ring& ring) {
  nlohmann::ordered_json j;
  j["name"] = ring.name();
  j["modulus"] = ring.modulus();
  j["basis"] = ring.labels();
  auto table = nlohmann::ordered_json::array();
  for (int i = 0; i < ring.dim(); ++i) {
    auto row = nlohmann::ordered_json::array();
    for (int c = 0; c < ring.dim(); ++c) {
      const Coeffs& p = ring.spec().product(i, c);
      row.push_back(std::vector<Scalar>(p.data(), p.data() + p.size()));
    }
    table.push_back(std::move(row));
  }
  j["table"] = std::move(table);
  return j;
}

Ring load_ring(std::string_view text) { return ring_from_json(parse_json(text)); }

Ring load_ring_file(const std::filesystem::path& path) {
  const std::string text = read_file(path);
  try {
    return load_ring(text);
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.where(),
                     std::string(e.what()).substr(e.where().size() + 2));
  }
}

std::string write_ring(const Ring& ring) {
  const auto j = ring_to_json(ring);
  std::ostringstream out;
  out << "{\n";
  out << "  \"name\": " << j["name"].dump() << ",\n";
  out << "  \"modulus\": " << j["modulus"].dump() << ",\n";
  out << "  \"basis\": " << j["basis"].dump() << ",\n";
  out << "  \"table\": [\n";
  const auto& table = j["table"];
  for (std::size_t i = 0; i < table.size(); ++i) {
    out << "    " << table[i].dump() << (i + 1 < table.size() ? ",\n" : "\n");
  }
  out << "  ]\n}\n";
  return out.str();
}

Element parse_element(const Ring& ring, std::string_view text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  if (s.empty()) throw std::invalid_argument("empty element");
  if (s.find_first_not_of("0123456789") == std::string::npos) {
    if (s.size() > 19) throw std::invalid_argument("element index out of range");
    const auto index = std::stoull(s);
    if (index >= ring.size()) {
      throw std::invalid_argument("element index " + s + " out of range");
    }
    return ring.element_at(index);
  }

  Coeffs c = Coeffs::Zero(ring.dim());
  std::size_t pos = 0;
  while (pos < s.size()) {
    Scalar sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      sign = s[pos] == '-' ? -1 : 1;
      ++pos;
    } else if (pos != 0) {
      throw std::invalid_argument("expected '+' or '-' in '" + s + "'");
    }
    const std::size_t end = s.find_first_of("+-", pos);
    std::string term = s.substr(pos, end == std::string::npos ? std::string::npos : end - pos);
    pos = end == std::string::npos ? s.size() : end;
    if (term.empty()) throw std::invalid_argument("empty term in '" + s + "'");

    Scalar coefficient = 1;
    std::size_t digits = 0;
    while (digits < term.size() && std::isdigit(static_cast<unsigned char>(term[digits]))) {
      ++digits;
    }
    if (digits > 0) {
      if (digits > 9) throw std::invalid_argument("coefficient too large in '" + term + "'");
      coefficient = std::stoll(term.substr(0, digits));
      term = term.substr(digits);
      if (!term.empty() && term[0] == '*') term = term.substr(1);
    }
    if (term.empty()) {
      if (coefficient == 0) continue;
      throw std::invalid_argument("bare integer term in '" + s + "'");
    }
    const int label = ring.find_label(term);
    if (label < 0) throw std::invalid_argument("unknown basis label '" + term + "'");
    c(label) += sign * coefficient;
  }
  return ring.element(c);
}

}  // namespace peirce
