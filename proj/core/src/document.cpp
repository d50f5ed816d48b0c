#include "triaut/document.hpp"

#include <json.hpp>

#include "triaut/error.hpp"
#include "triaut/text.hpp"

namespace triaut {

std::optional<AlgebraMode> parse_algebra_mode(std::string_view name) {
  if (name == "poly") return AlgebraMode::Commutative;
  if (name == "free") return AlgebraMode::Free;
  return std::nullopt;
}

Endomorphism parse_automorphism_document(std::string_view json) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(e.byte, "malformed automorphism JSON");
  }
  if (!doc.is_object()) throw Error(ErrorCode::InvalidDocument, "document must be a JSON object");
  auto algebra = doc.find("algebra");
  auto n_field = doc.find("n");
  auto images_field = doc.find("images");
  if (algebra == doc.end() || !algebra->is_string())
    throw Error(ErrorCode::InvalidDocument, "\"algebra\" must be \"poly\" or \"free\"");
  const auto mode = parse_algebra_mode(algebra->get<std::string>());
  if (!mode) throw Error(ErrorCode::InvalidDocument, "\"algebra\" must be \"poly\" or \"free\"");
  if (n_field == doc.end() || !n_field->is_number_integer() || n_field->get<long long>() < 1)
    throw Error(ErrorCode::InvalidDocument, "\"n\" must be a positive integer");
  const auto n = static_cast<std::size_t>(n_field->get<long long>());
  if (images_field == doc.end() || !images_field->is_array())
    throw Error(ErrorCode::InvalidDocument, "\"images\" must be an array of strings");
  if (images_field->size() != n)
    throw Error(ErrorCode::InvalidDocument, "\"images\" has " +
                                                std::to_string(images_field->size()) +
                                                " entries, expected n = " + std::to_string(n));
  std::vector<Polynomial> images;
  for (const auto& item : *images_field) {
    if (!item.is_string())
      throw Error(ErrorCode::InvalidDocument, "\"images\" must be an array of strings");
    images.push_back(parse_polynomial(item.get<std::string>(), *mode, n));
  }
  return Endomorphism(std::move(images));
}

std::string to_document(const Endomorphism& phi) {
  nlohmann::ordered_json doc;
  doc["algebra"] = std::string(to_string(phi.mode()));
  doc["n"] = phi.n();
  doc["images"] = nlohmann::ordered_json::array();
  for (const auto& img : phi.images()) doc["images"].push_back(to_string(img));
  return doc.dump();
}

}  // namespace triaut
