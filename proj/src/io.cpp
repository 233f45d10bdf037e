#include "sabar/io.hpp"

#include <algorithm>
#include <sstream>

#include "sabar/exact_arith.hpp"

namespace sabar {

namespace {

std::string trim(std::string_view s) {
  const auto a = s.find_first_not_of(" \t\r");
  if (a == std::string_view::npos) return "";
  const auto b = s.find_last_not_of(" \t\r");
  return std::string(s.substr(a, b - a + 1));
}

std::vector<std::string> lines_of(std::string_view text) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto end = text.find('\n', start);
    const auto line = text.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start);
    out.push_back(trim(line.substr(0, line.find('#'))));
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return out;
}

long parse_int(const std::string& s, std::size_t line) {
  std::size_t used = 0;
  long v = 0;
  try {
    v = std::stol(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != s.size() || s.empty()) throw ParseError("line " + std::to_string(line) + ": expected an integer, got '" + s + "'");
  return v;
}

Rational parse_rational(const std::string& s, std::size_t line) {
  try {
    return Rational::parse(s);
  } catch (const std::exception&) {
    throw ParseError("line " + std::to_string(line) + ": malformed rational '" + s + "'");
  }
}

Rational plot_position(const FiltrationValue& v) {
  switch (v.kind) {
    case FiltrationValue::Kind::Index: return Rational(v.index);
    case FiltrationValue::Kind::Exact: return v.exact;
    default: return (v.approx.first + v.approx.second) / Rational(2);
  }
}

std::string xml_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '<') out += "&lt;";
    else if (c == '>') out += "&gt;";
    else if (c == '&') out += "&amp;";
    else out += c;
  }
  return out;
}

}  // namespace

nlohmann::json thom_to_json(const ThomEncoding& t) {
  return {{"poly", t.poly.str()}, {"der_signs", t.der_signs}, {"interval", {t.lo.str(), t.hi.str()}}};
}

ThomEncoding thom_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("poly") || !j.contains("der_signs") || !j.contains("interval")) {
    throw ParseError("algebraic value needs poly, der_signs and interval");
  }
  const UniPoly f = UniPoly::parse(j.at("poly").get<std::string>(), "T");
  const auto signs = j.at("der_signs").get<std::vector<int>>();
  const auto iv = j.at("interval").get<std::vector<std::string>>();
  if (iv.size() != 2) throw ParseError("interval needs two endpoints");
  const Rational lo = Rational::parse(iv[0]), hi = Rational::parse(iv[1]);
  for (const auto& t : encode_roots(f)) {
    if (t.der_signs != signs) continue;
    const bool inside = lo == hi ? compare_to_rational(t, lo) == 0
                                 : compare_to_rational(t, lo) > 0 && compare_to_rational(t, hi) < 0;
    if (!inside) throw ParseError("interval does not contain the encoded root");
    if (lo != hi && sturm_count(square_free(f), Bound::at(lo), Bound::at(hi)) != 1) {
      throw ParseError("interval does not isolate the root");
    }
    ThomEncoding out = t;
    out.lo = lo;
    out.hi = hi;
    return out;
  }
  throw ParseError("no root of " + f.str() + " has the given derivative signs");
}

nlohmann::json value_to_json(const FiltrationValue& v) {
  using K = FiltrationValue::Kind;
  switch (v.kind) {
    case K::Index: return v.index;
    case K::Exact: return v.exact.str();
    case K::Algebraic:
      if (v.algebraic->exact()) return v.algebraic->lo.str();
      return {{"thom", thom_to_json(*v.algebraic)},
              {"approx", {v.approx.first.str(), v.approx.second.str()}},
              {"text", v.str()}};
    case K::MinusInfinity: return "-inf";
    case K::PlusInfinity: return "inf";
  }
  return nullptr;
}

Filtration read_filtration(std::string_view text) {
  const auto lines = lines_of(text);
  std::size_t i = 0;
  while (i < lines.size() && lines[i].empty()) ++i;
  if (i == lines.size() || lines[i] != "filtration v1") throw ParseError("missing header 'filtration v1'");
  std::vector<std::pair<Simplex, int>> entries;
  std::map<long, FiltrationValue> values;
  long steps = -1;
  int max_birth = -1;
  for (++i; i < lines.size(); ++i) {
    const std::string& line = lines[i];
    if (line.empty()) continue;
    std::istringstream in(line);
    std::string head;
    in >> head;
    if (head == "steps") {
      std::string n;
      in >> n;
      steps = parse_int(n, i + 1);
      if (steps < 0) throw ParseError("line " + std::to_string(i + 1) + ": negative step count");
      continue;
    }
    if (head == "value") {
      std::string idx;
      in >> idx;
      const long index = parse_int(idx, i + 1);
      std::string rest;
      std::getline(in, rest);
      rest = trim(rest);
      FiltrationValue v;
      if (!rest.empty() && rest.front() == '{') {
        try {
          v = FiltrationValue::of(thom_from_json(nlohmann::json::parse(rest)), Rational(1, 1000));
        } catch (const nlohmann::json::exception& e) {
          throw ParseError("line " + std::to_string(i + 1) + ": " + e.what());
        }
      } else {
        v = FiltrationValue::of(parse_rational(rest, i + 1));
      }
      if (!values.emplace(index, v).second) throw ParseError("line " + std::to_string(i + 1) + ": duplicate value");
      continue;
    }
    const long birth = parse_int(head, i + 1);
    if (birth < 0) throw ParseError("line " + std::to_string(i + 1) + ": negative birth index");
    Simplex s;
    std::string tok;
    while (in >> tok) {
      const long v = parse_int(tok, i + 1);
      if (v < 0) throw ParseError("line " + std::to_string(i + 1) + ": negative vertex id");
      s.push_back(static_cast<int>(v));
    }
    if (s.empty()) throw ParseError("line " + std::to_string(i + 1) + ": simplex without vertices");
    max_birth = std::max(max_birth, static_cast<int>(birth));
    entries.emplace_back(std::move(s), static_cast<int>(birth));
  }
  if (steps < 0) steps = std::max<long>(max_birth + 1, static_cast<long>(values.size()));
  Filtration f;
  try {
    f = Filtration(std::move(entries), static_cast<int>(steps));
  } catch (const ContractError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
  if (!values.empty()) {
    std::vector<FiltrationValue> vs;
    for (long k = 0; k < steps; ++k) {
      auto it = values.find(k);
      if (it == values.end()) throw ParseError("missing value for index " + std::to_string(k));
      vs.push_back(it->second);
    }
    if (static_cast<long>(values.size()) != steps) throw ParseError("value index out of range");
    try {
      f.set_values(std::move(vs));
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what());
    }
  }
  return f;
}

std::string write_filtration(const Filtration& f) {
  std::ostringstream out;
  out << "filtration v1\n";
  out << "steps " << f.steps() << "\n";
  for (const auto& [s, b] : f.entries()) {
    out << b;
    for (int v : s) out << ' ' << v;
    out << '\n';
  }
  if (f.values()) {
    for (std::size_t i = 0; i < f.values()->size(); ++i) {
      const auto& v = (*f.values())[i];
      out << "value " << i << ' ';
      if (v.kind == FiltrationValue::Kind::Algebraic) out << thom_to_json(*v.algebraic).dump();
      else out << value_to_json(v).get<std::string>();
      out << '\n';
    }
  }
  return out.str();
}

std::vector<Point> read_points_csv(std::string_view text) {
  std::vector<Point> pts;
  const auto lines = lines_of(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (lines[i].empty()) continue;
    Point p;
    std::size_t start = 0;
    for (;;) {
      const auto comma = lines[i].find(',', start);
      p.push_back(parse_rational(trim(lines[i].substr(start, comma == std::string::npos ? std::string::npos : comma - start)), i + 1));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    if (!pts.empty() && p.size() != pts.front().size()) {
      throw ParseError("line " + std::to_string(i + 1) + ": expected " + std::to_string(pts.front().size()) + " coordinates");
    }
    pts.push_back(std::move(p));
  }
  return pts;
}

nlohmann::json barcodes_json(const std::vector<Barcode>& bs) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& b : bs) {
    nlohmann::json bars = nlohmann::json::array();
    for (const auto& bar : b.bars) {
      bars.push_back({{"birth", value_to_json(bar.birth)},
                      {"death", bar.death ? value_to_json(*bar.death) : nlohmann::json("inf")},
                      {"mult", bar.mult}});
    }
    out.push_back({{"p", b.p}, {"bars", std::move(bars)}});
  }
  return out;
}

std::string emit_barcode_json(const std::vector<Barcode>& bs) { return barcodes_json(bs).dump(2) + "\n"; }

std::string barcodes_text(const std::vector<Barcode>& bs) {
  std::ostringstream out;
  for (const auto& b : bs) {
    out << "H" << b.p << ": " << b.bars.size() << (b.bars.size() == 1 ? " bar" : " bars") << "\n";
    for (const auto& bar : b.bars) {
      out << "  [" << bar.birth.str() << ", " << (bar.death ? bar.death->str() : "inf") << ")";
      if (bar.mult != 1) out << " x" << bar.mult;
      out << "\n";
    }
  }
  return out.str();
}

std::string emit_barcode_svg(const std::vector<Barcode>& bs) {
  const long left = 80, plot = 480, arrow = 30, row = 16, top = 30;
  std::vector<Rational> xs;
  std::size_t rows = 0;
  for (const auto& b : bs) {
    rows += 1 + b.bars.size();
    for (const auto& bar : b.bars) {
      xs.push_back(plot_position(bar.birth));
      if (bar.death) xs.push_back(plot_position(*bar.death));
    }
  }
  Rational lo(0), hi(1);
  if (!xs.empty()) {
    lo = *std::min_element(xs.begin(), xs.end());
    hi = *std::max_element(xs.begin(), xs.end());
    if (hi == lo) hi = lo + Rational(1);
  }
  auto px = [&](const Rational& v) { return ((v - lo) * Rational(plot) / (hi - lo)).floor().get_si() + left; };
  auto tick = [](const Rational& v) { return v.is_integer() ? v.str() : v.decimal(3); };
  const long width = left + plot + arrow + 40;
  const long height = top + static_cast<long>(rows) * row + 40;
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height << "\" viewBox=\"0 0 "
      << width << ' ' << height << "\" font-family=\"monospace\" font-size=\"11\">\n";
  out << "<rect width=\"" << width << "\" height=\"" << height << "\" fill=\"white\"/>\n";
  long y = top;
  for (const auto& b : bs) {
    out << "<text x=\"8\" y=\"" << y + 4 << "\">H" << b.p << "</text>\n";
    y += row;
    for (const auto& bar : b.bars) {
      const long x0 = px(plot_position(bar.birth));
      const long x1 = bar.death ? px(plot_position(*bar.death)) : left + plot + arrow;
      out << "<line x1=\"" << x0 << "\" y1=\"" << y << "\" x2=\"" << x1 << "\" y2=\"" << y
          << "\" stroke=\"black\" stroke-width=\"3\"/>\n";
      if (!bar.death) {
        out << "<polygon points=\"" << x1 << ',' << y - 5 << ' ' << x1 + 10 << ',' << y << ' ' << x1 << ',' << y + 5
            << "\" fill=\"black\"/>\n";
      }
      std::string label = xml_escape(bar.birth.str());
      if (bar.mult != 1) label += " x" + std::to_string(bar.mult);
      out << "<text x=\"8\" y=\"" << y + 4 << "\" fill=\"gray\">" << label << "</text>\n";
      y += row;
    }
  }
  const long axis = y + 8;
  out << "<line x1=\"" << left << "\" y1=\"" << axis << "\" x2=\"" << left + plot << "\" y2=\"" << axis
      << "\" stroke=\"gray\"/>\n";
  out << "<text x=\"" << left << "\" y=\"" << axis + 14 << "\">" << xml_escape(tick(lo)) << "</text>\n";
  out << "<text x=\"" << left + plot << "\" y=\"" << axis + 14 << "\" text-anchor=\"end\">" << xml_escape(tick(hi))
      << "</text>\n";
  out << "</svg>\n";
  return out.str();
}

}  // namespace sabar
