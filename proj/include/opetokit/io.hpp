#pragma once

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <variant>

#include "opetokit/bicategory.hpp"
#include "opetokit/core.hpp"
#include "opetokit/equivalences.hpp"

namespace opetokit {

enum class Kind { Set, Op1Cat, Op2Cat, Category, Bicategory, OpMorphism, LaxFunctor };

std::string_view to_string(Kind k);
Kind kind_from_string(std::string_view s);  // throws UnknownKind

struct FiniteSet {
  std::set<ObjId> elements;
  bool operator==(const FiniteSet&) const = default;
};

struct Op2Document {
  FiniteOpTwoCat x;
  std::optional<Biasing> biasing;
};

using Document = std::variant<FiniteSet, FiniteOpOneCat, Op2Document,
                              FiniteCategory, FiniteBicategory, OpMorphism,
                              LaxFunctor>;

Kind kind_of(const Document& d);

/// Throws ParseError (with line and column for syntax errors) and
/// UnknownKind. With `expected`, a document of another kind is an
/// UnknownKind error.
Document parse_document(std::string_view text,
                        std::optional<Kind> expected = std::nullopt);

/// Canonical form: sorted keys, sorted entries, two-space indent, final
/// newline.
std::string serialize(const Document& d);

/// Reads a file; IO failures are ParseError.
Document load_document(const std::string& path,
                       std::optional<Kind> expected = std::nullopt);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

}  // namespace opetokit
