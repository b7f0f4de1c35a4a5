#include "heights/io.hpp"

#include <sstream>

#include <json.hpp>

#include "heights/sturm.hpp"

namespace heights {

RealAlgebraic real_root_by_index(const IntPoly& p, int index) {
  auto ivs = isolate_real_roots(p);
  if (index < 0 || static_cast<std::size_t>(index) >= ivs.size())
    throw error("real root index out of range");
  IsolatingInterval iv = ivs[static_cast<std::size_t>(index)];
  // from_root_of works with the closed interval; shrink until the open lower
  // endpoint is not itself a root (of a neighboring factor).
  SturmChain chain(p);
  for (int guard = 0; sign_at(p, iv.lo) == 0; ++guard) {
    if (guard > 64) throw error("could not detach interval from a root");
    Rat w = (iv.hi - iv.lo) / 4;
    iv = refine_interval(p, chain, iv, w);
  }
  return RealAlgebraic::from_root_of(p, iv.lo, iv.hi);
}

std::string census_to_csv(const std::vector<CensusRecord>& records) {
  std::ostringstream out;
  out << "key_minpoly,key_root_index,key_approx,d,k,count,deg_Hd\n";
  for (const auto& r : records) {
    out << '"' << r.key.minpoly().to_string() << '"' << ','
        << r.key.root_index() << ',' << r.key.approx(20) << ',' << r.d << ','
        << r.k << ',' << r.count << ',' << r.deg_Hd << '\n';
  }
  return out.str();
}

std::string census_to_json(const std::vector<CensusRecord>& records) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : records) {
    arr.push_back({{"key_minpoly", r.key.minpoly().to_string()},
                   {"key_root_index", r.key.root_index()},
                   {"key_approx", r.key.approx(20)},
                   {"d", r.d},
                   {"k", r.k},
                   {"count", r.count},
                   {"deg_Hd", r.deg_Hd}});
  }
  return arr.dump(2) + "\n";
}

std::vector<CensusRecord> census_from_json(const std::string& text) {
  nlohmann::json arr = nlohmann::json::parse(text);
  std::vector<CensusRecord> out;
  for (const auto& e : arr) {
    CensusRecord r;
    IntPoly p = IntPoly::from_string(e.at("key_minpoly").get<std::string>());
    r.key = real_root_by_index(p, e.at("key_root_index").get<int>());
    r.d = e.at("d").get<unsigned>();
    r.k = e.at("k").get<unsigned>();
    r.count = e.at("count").get<unsigned long>();
    r.deg_Hd = e.at("deg_Hd").get<unsigned>();
    out.push_back(std::move(r));
  }
  return out;
}

std::string census_to_gnuplot(const std::vector<CensusRecord>& records) {
  std::ostringstream out;
  out << "# key_approx count\n";
  for (const auto& r : records) out << r.key.approx(20) << ' ' << r.count << '\n';
  return out.str();
}

std::vector<std::pair<double, unsigned long>> slope_points_from_csv(
    const std::string& text) {
  std::vector<std::pair<double, unsigned long>> out;
  std::istringstream in(text);
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (first) {
      first = false;  // header
      continue;
    }
    if (line.empty()) continue;
    // fields: "minpoly",root,approx,d,k,count,deg_Hd
    std::size_t pos = 0;
    if (line[0] == '"') {
      pos = line.find('"', 1);
      if (pos == std::string::npos) throw error("malformed CSV row");
      pos += 2;  // skip closing quote and comma
    }
    std::vector<std::string> fields;
    std::istringstream rest(line.substr(pos));
    std::string f;
    while (std::getline(rest, f, ',')) fields.push_back(f);
    if (fields.size() < 6) throw error("malformed CSV row");
    out.emplace_back(std::stod(fields[1]), std::stoul(fields[4]));
  }
  return out;
}

}  // namespace heights
