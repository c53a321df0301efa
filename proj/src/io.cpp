#include "rowlab/io.hpp"

#include <algorithm>
#include <sstream>

namespace rowlab {

Json poset_to_json(const Poset& p) {
  Json j;
  j["elements"] = p.elements();
  Json covers = Json::array();
  for (auto [a, b] : p.covers())
    covers.push_back({p.elements()[a], p.elements()[b]});
  j["covers"] = covers;
  return j;
}

Poset poset_from_json(const Json& j) {
  std::vector<std::string> elems;
  for (const auto& e : j.at("elements")) elems.push_back(e.get<std::string>());
  std::vector<std::pair<std::string, std::string>> covers;
  for (const auto& c : j.at("covers")) {
    if (!c.is_array() || c.size() != 2)
      throw IoError("cover entries must be [lo, hi] pairs");
    covers.emplace_back(c[0].get<std::string>(), c[1].get<std::string>());
  }
  return build_poset(std::move(elems), std::move(covers));
}

Json ideal_to_json(const Poset& p, const Bitset& ideal) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < p.size(); ++i)
    if (ideal.test(i)) names.push_back(p.elements()[i]);
  std::sort(names.begin(), names.end());
  return Json(names);
}

Bitset ideal_from_json(const Poset& p, const Json& j) {
  Bitset out(p.size());
  for (const auto& e : j) out.set(p.index_of(e.get<std::string>()));
  if (!p.is_ideal(out)) throw IoError("set is not downward closed");
  return out;
}

Json shape_to_json(const Shape& s) {
  Json j;
  j["kind"] = s.kind() == ShapeKind::ordinary ? "ordinary" : "shifted";
  j["outer"] = s.outer();
  j["inner"] = s.inner();
  return j;
}

Shape shape_from_json(const Json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind != "ordinary" && kind != "shifted")
    throw IoError("shape kind must be ordinary or shifted");
  std::vector<int> outer = j.at("outer").get<std::vector<int>>();
  std::vector<int> inner;
  if (j.contains("inner")) inner = j.at("inner").get<std::vector<int>>();
  return Shape(kind == "ordinary" ? ShapeKind::ordinary : ShapeKind::shifted,
               std::move(outer), std::move(inner));
}

Json tableau_to_json(const IncreasingTableau& t) {
  const Shape sh = t.shape();
  Json rows = Json::array();
  for (int i = 1; i <= sh.rows(); ++i) {
    Json row = Json::array();
    const int start = (sh.kind() == ShapeKind::shifted) ? i : 1;
    const int end = start + sh.outer()[i - 1] - 1;
    for (int c = start; c <= end; ++c) {
      if (sh.contains({i, c}))
        row.push_back(t.at({i, c}));
      else
        row.push_back(nullptr);
    }
    rows.push_back(row);
  }
  Json j;
  j["shape"] = shape_to_json(sh);
  j["entries"] = rows;
  j["ell"] = t.ell();
  return j;
}

IncreasingTableau tableau_from_json(const Json& j) {
  const Shape sh = shape_from_json(j.at("shape"));
  Filling f;
  const Json& rows = j.at("entries");
  for (int i = 1; i <= sh.rows() && i <= static_cast<int>(rows.size()); ++i) {
    const Json& row = rows[i - 1];
    const int start = (sh.kind() == ShapeKind::shifted) ? i : 1;
    for (std::size_t k = 0; k < row.size(); ++k) {
      if (row[k].is_null()) continue;
      f[{i, start + static_cast<int>(k)}] = row[k].get<int>();
    }
  }
  int ell = j.value("ell", 0);
  IncreasingTableau t(sh.kind(), std::move(f), ell);
  if (t.shape() != sh) throw IoError("entries do not fill the declared shape");
  return t;
}

Json word_to_json(const std::vector<int>& w) { return Json(w); }

std::string tableau_to_ascii(const IncreasingTableau& t) {
  const Shape sh = t.shape();
  int width = 1;
  for (const auto& [b, v] : t.entries())
    width = std::max(width, static_cast<int>(std::to_string(v).size()));
  std::ostringstream os;
  for (int i = sh.rows(); i >= 1; --i) {
    auto [lo, hi] = sh.row_span(i);
    std::ostringstream line;
    for (int c = 1; c <= hi; ++c) {
      std::string cell(static_cast<std::size_t>(width), ' ');
      if (c >= lo) cell = std::to_string(t.at({i, c}));
      line << std::string(width - cell.size(), ' ') << cell
           << (c < hi ? " " : "");
    }
    os << line.str() << "\n";
  }
  return os.str();
}

namespace {

std::pair<int, int> parse_two(const std::string& args, const char* what) {
  const auto comma = args.find(',');
  if (comma == std::string::npos)
    throw IoError(std::string(what) + " needs two integers a,b");
  return {std::stoi(args.substr(0, comma)), std::stoi(args.substr(comma + 1))};
}

std::size_t binom_capped(int n, int k, std::size_t cap) {
  // saturating binomial coefficient
  unsigned long long r = 1;
  k = std::min(k, n - k);
  for (int i = 1; i <= k; ++i) {
    if (r > cap * 2ull) return cap * 2ull;
    r = r * static_cast<unsigned long long>(n - k + i) /
        static_cast<unsigned long long>(i);
  }
  return static_cast<std::size_t>(std::min<unsigned long long>(r, cap * 2ull));
}

}  // namespace

PosetHandle parse_poset_spec(const std::string& spec) {
  PosetHandle h;
  h.spec = spec;
  if (spec.rfind("rect:", 0) == 0) {
    auto [a, b] = parse_two(spec.substr(5), "rect");
    ShapePoset sp = rectangle(a, b);
    h.poset = sp.poset;
    h.shape = std::move(sp);
    h.ideal_count_hint = binom_capped(a + b, a, kDefaultIdealCap);
  } else if (spec.rfind("trap:", 0) == 0) {
    auto [a, b] = parse_two(spec.substr(5), "trap");
    ShapePoset sp = trapezoid(a, b);
    h.poset = sp.poset;
    h.shape = std::move(sp);
    h.ideal_count_hint = binom_capped(a + b, a, kDefaultIdealCap);
  } else if (spec == "og612") {
    h.poset = exceptional_og612();
  } else if (spec == "h3") {
    h.poset = exceptional_h3();
  } else if (spec.rfind("q:", 0) == 0) {
    const int n = std::stoi(spec.substr(2));
    h.poset = double_tailed_diamond(n);
    h.ideal_count_hint = static_cast<std::size_t>(2 * n + 2);
  } else if (spec.rfind("i2:", 0) == 0) {
    const int m = std::stoi(spec.substr(3));
    h.poset = near_chain_i2(m);
    h.ideal_count_hint = static_cast<std::size_t>(m + 2);
  } else {
    throw IoError("unknown poset spec: " + spec);
  }
  return h;
}

std::uint64_t fnv1a(const std::string& data) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string poset_signature(const Poset& p) {
  std::ostringstream os;
  os << std::hex << fnv1a(poset_to_json(p).dump());
  return os.str();
}

}  // namespace rowlab
