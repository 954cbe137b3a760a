#pragma once

#include "qsphere/homology.hpp"

#include <nlohmann/json.hpp>

#include <string>
#include <string_view>

namespace qsphere {

/// {"degree": m, "terms": [{"coeff": "<QLaurent>", "slots": ["<monomial>", ...]}]}
nlohmann::json chain_to_json(const Chain& c);
Chain chain_from_json(const nlohmann::json& j);

/// Tensor expression with terms grouped by (sign-normalized) coefficient.
std::string chain_latex(const Chain& c);

/// Reference chains shipped with the library: "ch0", "ch1", "ch2", "bch2".
Chain golden_chain(std::string_view name);
/// Raw JSON text of a reference chain.
std::string_view golden_json(std::string_view name);

}  // namespace qsphere
