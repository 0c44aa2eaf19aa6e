#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lplab::cli {

/// Runs one lp-lab invocation. `args` excludes the program name. Exit codes:
/// 0 success or relation holds, 1 relation does not hold or search came up
/// empty, 2 usage or input error (diagnostic on `err`).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Renders a JSON report as indented "key: value" text. With decimals >= 0,
/// every fraction is followed by its rounded decimal value.
std::string render_human(const std::string& json_text, int decimals);

}  // namespace lplab::cli
