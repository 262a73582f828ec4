#pragma once

#include <gmpxx.h>

#include <string>

#include "profile_lab/errors.hpp"

namespace plab {

// Canonical "num/den" form (always a slash, even for integers).
std::string rational_string(const mpq_class& q);

// Accepts "a/b", plain integers, and plain decimals ("0.25"), all exact.
mpq_class parse_rational(const std::string& text);

} // namespace plab
