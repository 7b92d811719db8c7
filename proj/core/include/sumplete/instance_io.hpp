#pragma once

#include <string>
#include <string_view>

#include "sumplete/instance.hpp"

namespace sumplete {

/// On-disk encodings.
///
/// Json: canonical form is a single line with keys in a fixed order and no
/// insignificant whitespace, followed by '\n':
///   {"rows":r,"cols":c,"grid":[[..],..],"row_hints":[..],"col_hints":[..]}
///   {"rows":r,"cols":c,"keep":[[true,false,..],..]}
///
/// Text: whitespace-separated integers, '#' comment lines ignored.
///   instance: "r c", r grid lines, one line of r row hints, one line of c
///             column hints
///   mask:     "r c", then r lines of c flags, 1 = kept, 0 = crossed
enum class Format { Json, Text };

/// Json if the first significant character is '{', Text otherwise.
Format detect_format(std::string_view text) noexcept;

Instance parse_instance(std::string_view text, Format format);
std::string serialize_instance(const Instance& inst, Format format);

Mask parse_mask(std::string_view text, Format format);
std::string serialize_mask(const Mask& mask, Format format);

}  // namespace sumplete
