#pragma once

#include <json.hpp>

#include <cstddef>
#include <iosfwd>

namespace eqfix {

/// Exit codes: 0 success, 1 constraint failure, 2 input error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Structured form of `ring N`: the alpha basis, the fixed points in
/// (index, id) order and the restriction matrix.
nlohmann::json ring_document(std::size_t n);

/// Re-parses the classes of a ring document, restricts them again and
/// compares with the stored matrix.
bool ring_document_roundtrip(const nlohmann::json& doc);

}  // namespace eqfix
