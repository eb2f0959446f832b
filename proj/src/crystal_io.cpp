#include "crystals/crystal_io.hpp"

#include <sstream>

#include <json.hpp>

namespace crystals::kash {

using nlohmann::json;

std::string to_json(const FiniteCrystal& B) {
  json j;
  j["n"] = B.n;
  j["elements"] = json::array();
  for (const auto& el : B.elements) {
    json e;
    e["id"] = el.id;
    e["coords"] = el.coords;
    e["weight"] = el.weight;
    json phi = json::object(), eps = json::object();
    for (const auto& [i, v] : el.phi) phi[std::to_string(i)] = v;
    for (const auto& [i, v] : el.eps) eps[std::to_string(i)] = v;
    e["phi"] = phi;
    e["eps"] = eps;
    j["elements"].push_back(e);
  }
  j["edges"] = json::array();
  for (const auto& [i, edges] : B.e_edges)
    for (const auto& [from, to] : edges)
      j["edges"].push_back({{"i", i}, {"from", from}, {"to", to}});
  j["highest"] = highest_weight_elements(B);
  return j.dump(2);
}

FiniteCrystal from_json(const std::string& text) {
  json j = json::parse(text);
  FiniteCrystal B;
  B.n = j.at("n").get<int>();
  for (const auto& e : j.at("elements")) {
    CrystalElement el;
    el.id = e.at("id").get<int>();
    el.coords = e.at("coords").get<std::vector<int64_t>>();
    el.weight = e.at("weight").get<Weight>();
    for (const auto& [k, v] : e.at("phi").items()) {
      int i = std::stoi(k);
      el.phi[i] = v.get<int64_t>();
      B.support.insert(i);
    }
    for (const auto& [k, v] : e.at("eps").items()) {
      int i = std::stoi(k);
      el.eps[i] = v.get<int64_t>();
      B.support.insert(i);
    }
    B.elements.push_back(std::move(el));
  }
  for (const auto& e : j.at("edges")) {
    int i = e.at("i").get<int>();
    B.e_edges[i][e.at("from").get<int>()] = e.at("to").get<int>();
    B.support.insert(i);
  }
  return B;
}

std::string to_dot(const FiniteCrystal& B) {
  static const char* palette[] = {"red",    "blue",  "forestgreen",
                                  "orange", "purple", "brown",
                                  "cadetblue", "magenta"};
  std::ostringstream os;
  os << "digraph crystal {\n  rankdir=TB;\n";
  for (const auto& el : B.elements) {
    os << "  n" << el.id << " [label=\"" << el.id << " (";
    for (size_t k = 0; k < el.weight.size(); ++k) {
      if (k) os << ",";
      os << el.weight[k];
    }
    os << ")\"];\n";
  }
  for (const auto& [i, edges] : B.e_edges)
    for (const auto& [from, to] : edges)
      os << "  n" << to << " -> n" << from << " [label=\"" << i
         << "\", color=" << palette[(i - 1) % 8] << "];\n";
  os << "}\n";
  return os.str();
}

std::string to_csv(const FiniteCrystal& B) {
  std::ostringstream os;
  os << "kind,id_or_i,coords,weight,phi,eps,from,to\n";
  auto join = [](const std::vector<int64_t>& v) {
    std::ostringstream s;
    for (size_t k = 0; k < v.size(); ++k) {
      if (k) s << " ";
      s << v[k];
    }
    return s.str();
  };
  for (const auto& el : B.elements) {
    std::ostringstream phi, eps;
    for (const auto& [i, v] : el.phi) phi << i << ":" << v << " ";
    for (const auto& [i, v] : el.eps) eps << i << ":" << v << " ";
    os << "element," << el.id << "," << join(el.coords) << ","
       << join(el.weight) << "," << phi.str() << "," << eps.str()
       << ",,\n";
  }
  for (const auto& [i, edges] : B.e_edges)
    for (const auto& [from, to] : edges)
      os << "edge," << i << ",,,,," << from << "," << to << "\n";
  return os.str();
}

}  // namespace crystals::kash
