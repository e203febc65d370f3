#ifndef FILICENTER_JSON_IO_HPP
#define FILICENTER_JSON_IO_HPP

#include <variant>

#include <json.hpp>

#include "filicenter/polynomial.hpp"

namespace filicenter {

// {"field":"Q"|"Fp","p":INT?,"terms":[{"exp":[SINT,INT...],"coeff":"a/b"}]}
nlohmann::json to_json(const QPoly& p);
nlohmann::json to_json(const FpPoly& p);
std::variant<QPoly, FpPoly> polynomial_from_json(const nlohmann::json& j);

}  // namespace filicenter

#endif  // FILICENTER_JSON_IO_HPP
