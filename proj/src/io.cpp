#include "qsphere/io.hpp"

#include <map>
#include <stdexcept>

namespace qsphere {

// Defined in the generated golden_data.cpp.
std::string_view golden_json_lookup(std::string_view name);

nlohmann::json chain_to_json(const Chain& c) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [slots, coeff] : c.terms()) {
    nlohmann::json s = nlohmann::json::array();
    for (const auto& mono : slots) s.push_back(mono.str());
    terms.push_back({{"coeff", coeff.str()}, {"slots", std::move(s)}});
  }
  return {{"degree", c.degree()}, {"terms", std::move(terms)}};
}

Chain chain_from_json(const nlohmann::json& j) {
  Chain c(j.at("degree").get<int>());
  for (const auto& t : j.at("terms")) {
    Slots slots;
    for (const auto& s : t.at("slots")) slots.push_back(BasisMonomial::parse(s.get<std::string>()));
    c.add_term(slots, QLaurent::parse(t.at("coeff").get<std::string>()));
  }
  return c;
}

std::string chain_latex(const Chain& c) {
  if (c.is_zero()) return "0";
  // Normalize each coefficient so that its leading (highest power) term is positive.
  std::map<std::string, std::pair<QLaurent, std::vector<std::pair<bool, const Slots*>>>> groups;
  std::vector<std::string> order;
  for (const auto& [slots, coeff] : c.terms()) {
    const bool negative = coeff.terms().rbegin()->second < 0;
    QLaurent key_coeff = negative ? -coeff : coeff;
    std::string key = key_coeff.str();
    auto [it, inserted] = groups.try_emplace(key, key_coeff, std::vector<std::pair<bool, const Slots*>>{});
    if (inserted) order.push_back(key);
    it->second.second.emplace_back(negative, &slots);
  }
  std::string out;
  for (const auto& key : order) {
    const auto& [coeff, members] = groups.at(key);
    if (!out.empty()) out += "\n+ ";
    if (coeff != QLaurent(1)) out += "\\left(" + coeff.latex() + "\\right) ";
    out += "\\Big\\{ ";
    bool first = true;
    for (const auto& [negative, slots] : members) {
      if (first)
        out += negative ? "- " : "";
      else
        out += negative ? " - " : " + ";
      for (std::size_t i = 0; i < slots->size(); ++i) {
        if (i) out += " \\otimes ";
        out += (*slots)[i].latex();
      }
      first = false;
    }
    out += " \\Big\\}";
  }
  return out;
}

std::string_view golden_json(std::string_view name) {
  auto text = golden_json_lookup(name);
  if (text.empty()) throw std::invalid_argument("no reference chain named '" + std::string(name) + "'");
  return text;
}

Chain golden_chain(std::string_view name) { return chain_from_json(nlohmann::json::parse(golden_json(name))); }

}  // namespace qsphere
