#pragma once

#include <functional>
#include <string_view>

namespace fracosc {

using WarningHandler = std::function<void(std::string_view)>;

/// Installs the sink for non-fatal numerical warnings and returns the
/// previous one. The default writes "warning: ..." lines to stderr.
WarningHandler set_warning_handler(WarningHandler handler);

void warn(std::string_view message);

}  // namespace fracosc
