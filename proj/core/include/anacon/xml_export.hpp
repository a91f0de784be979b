// Lossless XML form of a clause. One element per constructor; atom names are
// the only attributes. Output is compact, without a prolog:
//
//   <contract><obligation><atom name="a"/></obligation></contract>

#ifndef ANACON_XML_EXPORT_HPP
#define ANACON_XML_EXPORT_HPP

#include <stdexcept>
#include <string>
#include <string_view>

#include "anacon/clause.hpp"

namespace anacon {

/// Malformed XML or an element outside the schema. what() names the element
/// path, e.g. "/contract/box/unknown: unexpected element <unknown> ...".
class XmlSchemaError : public std::runtime_error {
 public:
  XmlSchemaError(std::string path, const std::string& detail)
      : std::runtime_error(path + ": " + detail), path_(std::move(path)) {}
  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

std::string to_xml(const Clause& c);
Clause from_xml(std::string_view xml);

}  // namespace anacon

#endif  // ANACON_XML_EXPORT_HPP
